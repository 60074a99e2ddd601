//! Univariate polynomials over exact rationals.
//!
//! Coefficients are stored ascending with no trailing zeros. The zero
//! polynomial has an empty coefficient vector.

use crate::rat::{to_f64, Rat};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c0 + c1 x`
    pub fn linear(c0: Rat, c1: Rat) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; returns (quotient, remainder).
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead_inv = Rat::one() / d.leading();
        if rem.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lead_inv;
            for j in 0..dd {
                let v = &rem[k - dd + j] - &q * &d.coeffs[j];
                rem[k - dd + j] = v;
            }
            rem[k] = Rat::zero();
            quo[k - dd] = q;
        }
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Rat::one() / self.leading();
        self.scale(&inv)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic(); // renormalize to tame coefficient growth
        }
        a.monic()
    }

    /// Yun's square-free decomposition: returns pairwise-coprime square-free
    /// factors with their multiplicities, such that
    /// `self = leading * prod f_k^{m_k}`.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, usize)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let u = f.gcd(&df);
        let mut v = f.div_exact(&u);
        let mut w = df.div_exact(&u);
        let mut out = Vec::new();
        let mut mult = 1;
        while v.degree() > 0 {
            let z = w.sub(&v.derivative());
            let g = v.gcd(&z);
            if g.degree() > 0 {
                out.push((g.clone(), mult));
            }
            v = v.div_exact(&g);
            w = z.div_exact(&g);
            mult += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> Self {
        self.squarefree_decomposition()
            .into_iter()
            .fold(Self::constant(Rat::one()), |acc, (f, _)| acc.mul(&f))
    }

    /// Sign of the polynomial at +inf (resp. -inf when `neg` is set).
    pub fn sign_at_infinity(&self, neg: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut s = if self.leading().is_negative() { -1 } else { 1 };
        if neg && self.degree() % 2 == 1 {
            s = -s;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), b);
        assert_eq!(b.mul(&b), a);
        assert_eq!(a.eval(&rat(2)), rat(9));
        assert_eq!(a.derivative(), p(&[2, 2]));
    }

    #[test]
    fn gcd_monic() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[1, 1]); // x+1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(p(&[2, 2]).gcd(&p(&[3, 3])), p(&[1, 1]));
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+2)^3
        let f = p(&[1, -1]).neg().mul(&p(&[1, -1]).neg()); // (x-1)^2 up to sign
        let f = f.mul(&p(&[2, 1]).mul(&p(&[2, 1])).mul(&p(&[2, 1])));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[-1, 1]), 2));
        assert_eq!(dec[1], (p(&[2, 1]), 3));
    }

    #[test]
    fn eval_f64_matches() {
        let f = RatPoly::from_coeffs(vec![ratio(1, 2), rat(0), rat(1)]);
        assert!((f.eval_f64(2.0) - 4.5).abs() < 1e-15);
    }
}
