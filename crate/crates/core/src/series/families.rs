//! Closed forms and generating functions of the rectangle families.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPoly, RationalGf, SeriesError};

/// `1 - 2z - 31z^2 - 40z^3 - 20z^4`, shared by every five-row function.
const FIVE_ROW_DEN: [i64; 5] = [1, -2, -31, -40, -20];

/// `1 - 448z + 9216z^2`, shared by the seven-row system.
const SEVEN_ROW_DEN: [i64; 3] = [1, -448, 9216];

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

/// Product of small polynomials given by coefficient lists.
fn product(factors: &[&[i64]]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * &poly(f))
}

fn gf(numerator: IntPoly, denominator: &[i64]) -> RationalGf {
    RationalGf::new(numerator, poly(denominator)).expect("denominators start with 1")
}

/// Faultfree tilings of `R(5, 3t)` and the two parts they are assembled from.
#[derive(Clone, Debug)]
pub struct FiveByThreeT {
    pub g: RationalGf,
    pub g1: RationalGf,
    pub g2: RationalGf,
}

pub fn gf_5x3t() -> FiveByThreeT {
    FiveByThreeT {
        g: gf(product(&[&[0, 0, 24], &[3, 10, 15]]), &FIVE_ROW_DEN),
        g1: gf(product(&[&[0, 8], &[1, 2, 5]]), &FIVE_ROW_DEN),
        g2: gf(product(&[&[0, 2], &[1, 14, 5]]), &FIVE_ROW_DEN),
    }
}

/// Faultfree tilings of `R(4, 3t)`: 2 for `t = 2`, else `8 * 6^(t-3)`.
pub fn closed_form_4x3t(t: usize) -> Result<BigInt, SeriesError> {
    match t {
        0 | 1 => Err(SeriesError::TooSmall { t, min: 2 }),
        2 => Ok(BigInt::from(2)),
        _ => Ok(BigInt::from(8) * num_traits::pow(BigInt::from(6), t - 3)),
    }
}

/// The six-row family: tilings extending one side only, and both sides.
#[derive(Clone, Debug)]
pub struct SixBySixT {
    pub q: RationalGf,
    pub f: RationalGf,
}

impl SixBySixT {
    pub fn new() -> Self {
        Self {
            q: gf(poly(&[0, 0, 384]), &[1, -144]),
            // 384z^2 (1 - 96z) / (1 - 144z)^2
            f: gf(poly(&[0, 0, 384, -36864]), &[1, -288, 20736]),
        }
    }
}

impl Default for SixBySixT {
    fn default() -> Self {
        Self::new()
    }
}

/// `128 (t + 1) 144^(t - 2)`, a lower bound on faultfree tilings of `R(6, 6t)`.
pub fn lower_bound_6x6t(t: usize) -> Result<BigInt, SeriesError> {
    if t < 2 {
        return Err(SeriesError::TooSmall { t, min: 2 });
    }
    Ok(BigInt::from(128) * BigInt::from(t + 1) * num_traits::pow(BigInt::from(144), t - 2))
}

/// Combines tilings grown on one side into tilings grown on both sides:
/// `Q^2 / (4 c z) + Q`, where `c` counts the tilings of the seed block.
pub fn both_sides(q: &RationalGf, c: u32) -> Result<RationalGf, SeriesError> {
    if c == 0 {
        return Err(SeriesError::Precondition("the seed count must be positive"));
    }
    let head = q.series(1)?;
    if head.iter().any(|x| !x.is_zero()) {
        return Err(SeriesError::Precondition("the series must start at z^2"));
    }
    let square = (q * q).div_z()?;
    let divisor = BigInt::from(4 * u64::from(c));
    // Keep the quotient exact even when the numerator is not a multiple of
    // 4c; integrality is then checked on extraction.
    let scaled = match square.div_int(4 * i64::from(c)) {
        Ok(g) => g,
        Err(_) => RationalGf::new(square.numerator().clone(), square.denominator().scale(&divisor))?,
    };
    Ok(&scaled + q)
}

/// The solved seven-row system and the functions derived from it.
#[derive(Clone, Debug)]
pub struct System7x6t {
    pub h: RationalGf,
    pub s: RationalGf,
    pub t: RationalGf,
    pub j: RationalGf,
    pub k: RationalGf,
    pub p: RationalGf,
}

pub fn system_7x6t() -> System7x6t {
    let h = gf(product(&[&[0, 16], &[1, -32], &[1, -288]]), &SEVEN_ROW_DEN);
    let s = gf(product(&[&[0, 0, 1024], &[1, 96]]), &SEVEN_ROW_DEN);
    let t = gf(product(&[&[0, 0, 2048], &[1, -96]]), &SEVEN_ROW_DEN);
    let j = s.div_int(2).expect("S has even coefficients");
    let k = t.div_int(4).expect("T is a multiple of 4");
    let p = k.clone();
    System7x6t { h, s, t, j, k, p }
}

/// Five-row pattern functions used by the seven-row construction.
#[derive(Clone, Debug)]
pub struct FiveRowPatternGfs {
    pub g1p: RationalGf,
    pub g3p: RationalGf,
}

pub fn five_row_pattern_gfs() -> FiveRowPatternGfs {
    FiveRowPatternGfs {
        g1p: gf(product(&[&[0, 4], &[1, 1], &[1, -1, -10]]), &FIVE_ROW_DEN),
        g3p: gf(product(&[&[0, 2], &[1, 14, 5]]), &FIVE_ROW_DEN),
    }
}

/// The seven-row lower bound and its intermediates. The bound for
/// `R(7, 6t)` is the coefficient of `z^(2t)` in `f`.
#[derive(Clone, Debug)]
pub struct SevenBySixT {
    pub l: RationalGf,
    pub m: RationalGf,
    pub a: RationalGf,
    pub b: RationalGf,
    pub q1: RationalGf,
    pub q2: RationalGf,
    pub f1: RationalGf,
    pub f2: RationalGf,
    pub f: RationalGf,
}

/// Seed counts for the two seven-row patterns.
pub const SEVEN_ROW_SEEDS: (u32, u32) = (16, 8);

pub fn gf_7x6t() -> Result<SevenBySixT, SeriesError> {
    let sys = system_7x6t();
    let FiveRowPatternGfs { g1p, g3p } = five_row_pattern_gfs();

    let pattern_sum = (&g1p + &g3p.scale(&BigInt::from(2))).div_z()?.div_int(4)?;
    let l = &sys.j.quarter_spread() * &pattern_sum;
    let m = &sys.p.quarter_spread() * &g3p.div_z()?;

    let mut q1 = &l.scale_var(2) + &m.scale_var(2);
    for g in [&sys.h, &sys.k, &sys.s, &sys.t] {
        q1 = &q1 + &g.spread();
    }
    let q1 = q1.scale(&BigInt::from(2));

    let z3 = |c: i64| IntPoly::monomial(c, 3);
    let a = (&g3p.scale_var(2) - &g3p.scale_var(-2)).mul_poly(&z3(160));
    let b = (&g1p.scale_var(2) - &g1p.scale_var(-2)).mul_poly(&z3(136));
    let q2 = (&a + &b).scale(&BigInt::from(2));

    let f1 = both_sides(&q1, SEVEN_ROW_SEEDS.0)?;
    let f2 = both_sides(&q2, SEVEN_ROW_SEEDS.1)?;
    let f = &f1 + &f2;
    Ok(SevenBySixT { l, m, a, b, q1, q2, f1, f2, f })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn five_row_coefficients() {
        let g = gf_5x3t().g;
        let s = g.series(10).unwrap();
        let reference = [72i64, 384, 3360, 21504, 163968, 1136640, 8283648, 58791936, 423121920];
        assert_eq!(&s[2..], reference.map(big).as_slice());
        assert_eq!(s[1], big(0));
        let r = g.recurrence().unwrap();
        assert_eq!(r, [2, 31, 40, 20].map(big).to_vec());
    }

    #[test]
    fn five_row_parts_assemble() {
        let FiveByThreeT { g, g1, g2 } = gf_5x3t();
        let assembled = &g1.mul_poly(&poly(&[0, 8])) + &g2.mul_poly(&poly(&[0, 4]));
        assert_eq!(g, assembled);
        assert!((&g - &assembled).is_zero());
    }

    #[test]
    fn four_row_closed_form() {
        let v: Vec<_> = (2..=6).map(|t| closed_form_4x3t(t).unwrap()).collect();
        assert_eq!(v, [2, 8, 48, 288, 1728].map(big).to_vec());
        assert_eq!(closed_form_4x3t(1), Err(SeriesError::TooSmall { t: 1, min: 2 }));
    }

    #[test]
    fn six_row_family() {
        let fam = SixBySixT::new();
        assert_eq!(fam.q.coeff(3).unwrap(), big(55296));
        assert_eq!(both_sides(&fam.q, 2).unwrap(), fam.f);
        for t in 2..=12 {
            assert_eq!(fam.f.coeff(t).unwrap(), lower_bound_6x6t(t).unwrap(), "t={t}");
        }
        assert_eq!(lower_bound_6x6t(3).unwrap(), big(73728));
        assert!(lower_bound_6x6t(1).is_err());
    }

    #[test]
    fn both_sides_preconditions() {
        assert!(both_sides(&RationalGf::zero(), 3).unwrap().is_zero());
        let starts_at_z = RationalGf::from_i64(&[0, 1], &[1, -1]);
        assert!(matches!(both_sides(&starts_at_z, 2), Err(SeriesError::Precondition(_))));
        let q = SixBySixT::new().q;
        assert_eq!(both_sides(&q, 2).unwrap().coeff(2).unwrap(), q.coeff(2).unwrap());
    }

    #[test]
    fn seven_row_system_holds() {
        let System7x6t { h, s, t, j, k, p } = system_7x6t();
        let z = |c: i64| poly(&[0, c]);
        let half_t = t.div_int(2).unwrap();
        let sixteen_z = RationalGf::polynomial(z(16));
        assert_eq!(h, &(&sixteen_z + &s) + &half_t);
        let rhs_s = &(&s.mul_poly(&z(160)) + &t.mul_poly(&z(128))) + &h.mul_poly(&z(64));
        assert_eq!(s, rhs_s);
        let rhs_t = &(&s.mul_poly(&z(128)) + &t.mul_poly(&z(160))) + &h.mul_poly(&z(128));
        assert_eq!(t, rhs_t);
        assert_eq!(h.coeff(1).unwrap(), big(16));
        assert_eq!(s.coeff(2).unwrap(), big(1024));
        assert_eq!(j.scale(&big(2)), s);
        assert_eq!(k.scale(&big(4)), t);
        assert_eq!(k, p);
    }

    #[test]
    fn five_row_pattern_functions() {
        let FiveRowPatternGfs { g1p, g3p } = five_row_pattern_gfs();
        assert_eq!(g1p.coeff(1).unwrap(), big(4));
        assert_eq!(g3p.coeff(1).unwrap(), big(2));
        assert_eq!(g3p, gf_5x3t().g2);
    }

    #[test]
    fn seven_row_composition_is_integral() {
        let fam = gf_7x6t().unwrap();
        for g in [&fam.l, &fam.m, &fam.a, &fam.b, &fam.q1, &fam.q2, &fam.f] {
            g.series(24).unwrap();
        }
        // A and B keep only even powers: the odd parts cancel in g(2z) - g(-2z)
        // and the z^3 factor shifts them to even degree.
        for g in [&fam.a, &fam.b, &fam.q2] {
            let s = g.series(20).unwrap();
            assert!(s.iter().skip(1).step_by(2).all(Zero::is_zero));
        }
        // the leading terms of A and B come from the z coefficients of the
        // pattern functions: 160 * 2 * (2 * 2) and 136 * 2 * (4 * 2)
        assert_eq!(fam.a.coeff(4).unwrap(), big(1280));
        assert_eq!(fam.b.coeff(4).unwrap(), big(2176));
        assert_eq!(fam.q2.coeff(4).unwrap(), big(2 * (1280 + 2176)));
    }
}
