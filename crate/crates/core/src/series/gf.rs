use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::SeriesError;

/// A rational generating function `numerator / denominator` whose series has
/// integer coefficients.
///
/// The fraction is kept content-free (no common integer factor across both
/// polynomials) with a positive constant term in the denominator, but common
/// polynomial factors are not cancelled; equality is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalGf {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalGf {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self, SeriesError> {
        if denominator.coeff(0).is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(Self::normalized(numerator, denominator))
    }

    /// Shorthand for fixed forms with small coefficients.
    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Self {
        Self::new(IntPoly::from_i64(numerator), IntPoly::from_i64(denominator))
            .expect("fixed denominators have a nonzero constant term")
    }

    pub fn polynomial(p: IntPoly) -> Self {
        Self::normalized(p, IntPoly::one())
    }

    pub fn zero() -> Self {
        Self::polynomial(IntPoly::zero())
    }

    fn normalized(numerator: IntPoly, denominator: IntPoly) -> Self {
        let mut g = BigInt::zero();
        for c in numerator.coeffs().iter().chain(denominator.coeffs()) {
            g = g.gcd(c);
        }
        if denominator.coeff(0).is_negative() {
            g = -g;
        }
        let (numerator, denominator) = if g.is_zero() || g == BigInt::from(1) {
            (numerator, denominator)
        } else {
            (numerator.div_exact(&g).expect("gcd divides"), denominator.div_exact(&g).expect("gcd divides"))
        };
        Self { numerator, denominator }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Coefficients of `z^0 ..= z^t`, computed with the linear recurrence the
    /// denominator induces: `d0 a_k = n_k - sum_{i>=1} d_i a_{k-i}`.
    pub fn series(&self, t: usize) -> Result<Vec<BigInt>, SeriesError> {
        let d = self.denominator.coeffs();
        let d0 = &d[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(t + 1);
        for k in 0..=t {
            let mut acc = self.numerator.coeff(k);
            for (i, di) in d.iter().enumerate().skip(1).take(k) {
                acc -= di * &out[k - i];
            }
            let (q, r) = acc.div_rem(d0);
            if !r.is_zero() {
                return Err(SeriesError::NotIntegral { power: k });
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Coefficient of `z^t`.
    pub fn coeff(&self, t: usize) -> Result<BigInt, SeriesError> {
        Ok(self.series(t)?.pop().expect("series has t + 1 terms"))
    }

    /// Coefficients `r_1..r_d` with `a_k = r_1 a_{k-1} + ... + r_d a_{k-d}`
    /// once `k` exceeds the numerator degree. Requires a monic denominator.
    pub fn recurrence(&self) -> Option<Vec<BigInt>> {
        let d = self.denominator.coeffs();
        if d[0] != BigInt::from(1) {
            return None;
        }
        Some(d[1..].iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.numerator.scale(c), self.denominator.clone())
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::normalized(&self.numerator * p, self.denominator.clone())
    }

    /// Exact division by `z`; the series must have a zero constant term.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        let numerator = self.numerator.unshift(1).ok_or(SeriesError::InexactDivision("z"))?;
        Ok(Self::normalized(numerator, self.denominator.clone()))
    }

    /// Exact division by an integer. The numerator must be a multiple of `c`;
    /// when the denominator's constant term is a unit mod `c` this is the
    /// same as every series coefficient being a multiple of `c`.
    pub fn div_int(&self, c: i64) -> Result<Self, SeriesError> {
        let c = BigInt::from(c);
        if let Some(numerator) = self.numerator.div_exact(&c) {
            return Ok(Self::normalized(numerator, self.denominator.clone()));
        }
        Err(SeriesError::InexactDivision("integer"))
    }

    /// `f(c z)`
    pub fn scale_var(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self::normalized(self.numerator.scale_var(&c), self.denominator.scale_var(&c))
    }

    /// `f(z^2)`
    pub fn spread(&self) -> Self {
        Self::normalized(self.numerator.spread(), self.denominator.spread())
    }

    /// `f(z^2 / 4)`, with the powers of 4 cleared from both polynomials.
    pub fn quarter_spread(&self) -> Self {
        let d = self.numerator.degree().unwrap_or(0).max(self.denominator.degree().unwrap_or(0));
        Self::normalized(self.numerator.quarter_spread(d), self.denominator.quarter_spread(d))
    }

    /// `(f(z) + f(-z)) / 2`: the even-power terms.
    pub fn even_part(&self) -> Self {
        self.parity_part(true)
    }

    /// `(f(z) - f(-z)) / 2`: the odd-power terms.
    pub fn odd_part(&self) -> Self {
        self.parity_part(false)
    }

    fn parity_part(&self, even: bool) -> Self {
        let minus_one = BigInt::from(-1);
        let n_neg = self.numerator.scale_var(&minus_one);
        let d_neg = self.denominator.scale_var(&minus_one);
        let a = &self.numerator * &d_neg;
        let b = &n_neg * &self.denominator;
        let sum = if even { &a + &b } else { &a - &b };
        let numerator = sum.div_exact(&BigInt::from(2)).expect("f(z) +- f(-z) has even coefficients");
        Self::normalized(numerator, &self.denominator * &d_neg)
    }
}

impl PartialEq for RationalGf {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalGf {}

impl Add for &RationalGf {
    type Output = RationalGf;

    fn add(self, rhs: &RationalGf) -> RationalGf {
        if self.denominator == rhs.denominator {
            return RationalGf::normalized(&self.numerator + &rhs.numerator, self.denominator.clone());
        }
        RationalGf::normalized(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Sub for &RationalGf {
    type Output = RationalGf;

    fn sub(self, rhs: &RationalGf) -> RationalGf {
        self + &(-rhs)
    }
}

impl Neg for &RationalGf {
    type Output = RationalGf;

    fn neg(self) -> RationalGf {
        RationalGf::normalized(-&self.numerator, self.denominator.clone())
    }
}

impl Mul for &RationalGf {
    type Output = RationalGf;

    fn mul(self, rhs: &RationalGf) -> RationalGf {
        RationalGf::normalized(&self.numerator * &rhs.numerator, &self.denominator * &rhs.denominator)
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
