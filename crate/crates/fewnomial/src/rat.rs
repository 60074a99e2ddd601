//! Exact rational scalars shared by the combinatorial layer.
//!
//! Rank decisions, Gale duals, and cusp polynomials are computed over `Rat`
//! (arbitrary-precision rationals); only the geometric layer (logs, traced
//! points) drops to `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact binary expansion of a finite float.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Nearest-double conversion; saturates to ±inf for out-of-range magnitudes.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Sign in {-1, 0, +1}.
pub fn sgn(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_reduces() {
        assert_eq!(ratio(6, 4), ratio(3, 2));
        assert_eq!(sgn(&ratio(-1, 3)), -1);
        assert_eq!(sgn(&rat(0)), 0);
    }

    #[test]
    fn f64_round_trip() {
        let r = rat_from_f64(0.375).unwrap();
        assert_eq!(r, ratio(3, 8));
        assert_eq!(to_f64(&r), 0.375);
    }
}
