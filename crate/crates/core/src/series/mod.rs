//! Exact power series: integer polynomials, rational generating functions,
//! the closed forms and generating functions of the rectangle families, and
//! the domino-based upper bound.

mod bounds;
mod families;
mod gf;
mod poly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

pub use bounds::{kasteleyn, tromino_upper_bound, BoundReport};
pub use families::{
    both_sides, closed_form_4x3t, five_row_pattern_gfs, gf_5x3t, gf_7x6t, lower_bound_6x6t, system_7x6t, FiveByThreeT,
    FiveRowPatternGfs, SevenBySixT, SixBySixT, System7x6t,
};
pub use gf::RationalGf;
pub use poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator has a zero constant term")]
    ZeroConstantTerm,
    #[error("division by {0} is not exact")]
    InexactDivision(&'static str),
    #[error("coefficient of z^{power} is not an integer")]
    NotIntegral { power: usize },
    #[error("t must be at least {min}, got {t}")]
    TooSmall { t: usize, min: usize },
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("R({rows},{cols}) has an area not divisible by 3")]
    NotTileable { rows: usize, cols: usize },
    #[error("product could not be rounded unambiguously with {bits} bits")]
    Precision { bits: usize },
}

/// Families the `series` command can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Faultfree tilings of `R(4, 3t)`.
    FourByThreeT,
    /// Faultfree tilings of `R(5, 3t)`.
    FiveByThreeT,
    /// Lower bound on faultfree tilings of `R(6, 6t)`.
    SixBySixTLower,
    /// Lower bound on faultfree tilings of `R(7, 6t)`.
    SevenBySixTLower,
    /// Upper bound on all tilings of `R(3, t)`.
    UpperBound,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::FourByThreeT,
        Family::FiveByThreeT,
        Family::SixBySixTLower,
        Family::SevenBySixTLower,
        Family::UpperBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FourByThreeT => "4x3t",
            Family::FiveByThreeT => "5x3t",
            Family::SixBySixTLower => "6x6t-lower",
            Family::SevenBySixTLower => "7x6t-lower",
            Family::UpperBound => "upper-bound",
        }
    }

    fn kind(self) -> ValueKind {
        match self {
            Family::FourByThreeT | Family::FiveByThreeT => ValueKind::Exact,
            Family::SixBySixTLower | Family::SevenBySixTLower => ValueKind::LowerBound,
            Family::UpperBound => ValueKind::UpperBound,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown family {0:?} (expected 4x3t, 5x3t, 6x6t-lower, 7x6t-lower or upper-bound)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    Exact,
    LowerBound,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesValue {
    pub family: Family,
    pub t: usize,
    pub value: BigInt,
    pub kind: ValueKind,
}

#[derive(Serialize)]
struct SeriesDoc {
    family: &'static str,
    t: usize,
    value: String,
    kind: ValueKind,
}

impl SeriesValue {
    /// `{"family":..,"t":..,"value":"<decimal>","kind":"exact|lower_bound|upper_bound"}`
    pub fn to_json(&self) -> String {
        let doc = SeriesDoc { family: self.family.name(), t: self.t, value: self.value.to_string(), kind: self.kind };
        serde_json::to_string(&doc).expect("series documents always serialize")
    }
}

/// The `t`-th member of a family.
pub fn evaluate(family: Family, t: usize) -> Result<SeriesValue, SeriesError> {
    let value = match family {
        Family::FourByThreeT => closed_form_4x3t(t)?,
        Family::FiveByThreeT => {
            if t < 2 {
                return Err(SeriesError::TooSmall { t, min: 2 });
            }
            gf_5x3t().g.coeff(t)?
        }
        Family::SixBySixTLower => lower_bound_6x6t(t)?,
        Family::SevenBySixTLower => {
            if t < 2 {
                return Err(SeriesError::TooSmall { t, min: 2 });
            }
            gf_7x6t()?.f.coeff(2 * t)?
        }
        Family::UpperBound => {
            if t < 2 {
                return Err(SeriesError::TooSmall { t, min: 2 });
            }
            tromino_upper_bound(3, t)?.upper_bound.into()
        }
    };
    Ok(SeriesValue { family, t, value, kind: family.kind() })
}
