//! Domino counts from the product formula, and the domino-based upper bound
//! on tromino tilings.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::SeriesError;
use crate::enumeration::{count_domino_dp, count_tromino_dp};
use crate::grid::Rect;

const RM: RoundingMode = RoundingMode::ToEven;
const ROUNDING_GUARD: f64 = 1e-3;
const MAX_BITS: usize = 8192;

/// Domino tilings of `R(2a, 2b)` from
/// `4^(ab) prod_{j<=a} prod_{k<=b} (cos^2(j pi/(2a+1)) + cos^2(k pi/(2b+1)))`.
///
/// Evaluated in `f64` first; when the result is not within the rounding guard
/// of an integer it is recomputed with growing binary precision.
pub fn kasteleyn(a: usize, b: usize) -> Result<BigUint, SeriesError> {
    if a == 0 || b == 0 {
        return Err(SeriesError::Precondition("both half-sides must be positive"));
    }
    if let Some(v) = kasteleyn_f64(a, b) {
        return Ok(v);
    }
    let mut bits = 128;
    while bits <= MAX_BITS {
        if let Some(v) = kasteleyn_big(a, b, bits) {
            return Ok(v);
        }
        bits *= 2;
    }
    Err(SeriesError::Precision { bits: MAX_BITS })
}

fn kasteleyn_f64(a: usize, b: usize) -> Option<BigUint> {
    use std::f64::consts::PI;
    let mut prod = 1.0f64;
    for j in 1..=a {
        let cj = (j as f64 * PI / (2 * a + 1) as f64).cos();
        for k in 1..=b {
            let ck = (k as f64 * PI / (2 * b + 1) as f64).cos();
            prod *= 4.0 * (cj * cj + ck * ck);
        }
    }
    let rounded = prod.round();
    // beyond 2^53 f64 cannot resolve the unit place
    if !prod.is_finite() || rounded >= 9.0e15 || (prod - rounded).abs() > ROUNDING_GUARD {
        return None;
    }
    Some(BigUint::from(rounded as u64))
}

fn kasteleyn_big(a: usize, b: usize, p: usize) -> Option<BigUint> {
    let mut cc = Consts::new().ok()?;
    let pi = cc.pi(p, RM);
    let cos_sq = |i: usize, side: usize, cc: &mut Consts| {
        let num = BigFloat::from_u64(i as u64, p);
        let den = BigFloat::from_u64((2 * side + 1) as u64, p);
        let x = pi.mul(&num, p, RM).div(&den, p, RM);
        let c = x.cos(p, RM, cc);
        c.mul(&c, p, RM)
    };
    let four = BigFloat::from_u8(4, p);
    let mut prod = BigFloat::from_u8(1, p);
    for j in 1..=a {
        let cj = cos_sq(j, a, &mut cc);
        for k in 1..=b {
            let ck = cos_sq(k, b, &mut cc);
            prod = prod.mul(&four.mul(&cj.add(&ck, p, RM), p, RM), p, RM);
        }
    }
    let half = BigFloat::from_f64(0.5, p);
    let rounded = prod.add(&half, p, RM).int();
    let dist = prod.sub(&rounded, p, RM).abs();
    if dist.cmp(&BigFloat::from_f64(ROUNDING_GUARD, p))? > 0 {
        return None;
    }
    to_biguint(&rounded)
}

/// Integer value of a non-negative integral `BigFloat`.
fn to_biguint(x: &BigFloat) -> Option<BigUint> {
    if x.is_zero() {
        return Some(BigUint::default());
    }
    let (words, _, sign, exponent, _) = x.as_raw_parts()?;
    if sign == Sign::Neg || exponent <= 0 {
        return None;
    }
    // The mantissa is a fraction in [1/2, 1) spread over `words`, least
    // significant word first.
    let mut mantissa = BigUint::default();
    for w in words.iter().rev() {
        mantissa = (mantissa << 64u32) + BigUint::from(*w);
    }
    let frac_bits = (words.len() * 64) as i64 - i64::from(exponent);
    Some(if frac_bits >= 0 { mantissa >> frac_bits as u64 } else { mantissa << (-frac_bits) as u64 })
}

/// Upper bound on the tromino tilings of one rectangle against its exact count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub rows: usize,
    pub cols: usize,
    #[serde(serialize_with = "as_decimal")]
    pub tromino_count: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub upper_bound: BigUint,
    /// Domino tilings of `R(m, 2n)` and `R(2m, n)`.
    #[serde(serialize_with = "pair_as_decimal")]
    pub domino_counts: (BigUint, BigUint),
    pub holds: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn pair_as_decimal<S: serde::Serializer>(v: &(BigUint, BigUint), s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&v.0.to_string())?;
    t.serialize_element(&v.1.to_string())?;
    t.end()
}

/// `2^(4mn/3) * min(N_D(m, 2n), N_D(2m, n))` together with the exact count.
pub fn tromino_upper_bound(m: usize, n: usize) -> Result<BoundReport, SeriesError> {
    if m == 0 || n == 0 || (m * n) % 3 != 0 {
        return Err(SeriesError::NotTileable { rows: m, cols: n });
    }
    let rect = |r, c| Rect::new(r, c).expect("positive sides");
    let wide = count_domino_dp(rect(m, 2 * n));
    let tall = count_domino_dp(rect(2 * m, n));
    let upper_bound = (BigUint::one() << (4 * m * n / 3)) * (&wide).min(&tall);
    let tromino_count = count_tromino_dp(rect(m, n));
    let holds = tromino_count <= upper_bound;
    Ok(BoundReport { rows: m, cols: n, tromino_count, upper_bound, domino_counts: (wide, tall), holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        assert_eq!(kasteleyn(1, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(kasteleyn(2, 2).unwrap(), BigUint::from(36u32));
        assert_eq!(kasteleyn(1, 2).unwrap(), BigUint::from(5u32));
        assert!(kasteleyn(0, 3).is_err());
    }

    #[test]
    fn high_precision_path_agrees() {
        for (a, b) in [(1, 1), (2, 3), (4, 4)] {
            let fast = kasteleyn_f64(a, b).unwrap();
            assert_eq!(kasteleyn_big(a, b, 256), Some(fast), "({a},{b})");
        }
    }

    #[test]
    fn large_products_fall_back_to_big_floats() {
        // about 10^23 tilings, past the unit resolution of f64
        let v = kasteleyn(8, 8).unwrap();
        assert_eq!(v, count_domino_dp(Rect::new(16, 16).unwrap()));
    }

    #[test]
    fn bound_reports() {
        let r = tromino_upper_bound(2, 3).unwrap();
        assert_eq!(r.tromino_count, BigUint::from(2u32));
        assert_eq!(r.domino_counts, (BigUint::from(13u32), BigUint::from(11u32)));
        assert_eq!(r.upper_bound, BigUint::from(256u32 * 11));
        assert!(r.holds);
        assert!(tromino_upper_bound(3, 4).unwrap().holds);
        assert!(tromino_upper_bound(4, 6).unwrap().holds);
        assert!(matches!(tromino_upper_bound(4, 4), Err(SeriesError::NotTileable { .. })));
    }
}
