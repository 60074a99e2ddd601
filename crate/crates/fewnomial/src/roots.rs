//! Exact real-root isolation for rational polynomials.
//!
//! Pipeline: Yun square-free decomposition, Sturm-chain counting, bisection
//! to a target interval width. Multiplicities come from the square-free
//! decomposition, never from numeric clustering, so double roots are never
//! merged with simple ones.

use crate::poly::RatPoly;
use crate::rat::{rat, ratio, sgn, to_f64, Rat};
use num_traits::{One, Signed, Zero};

/// Open-interval endpoint.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// An isolated real root: `lo < root <= hi` with `hi - lo` below the
/// requested width (or `lo == hi` for an exact rational root).
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn approx(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / rat(2)))
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let rem = chain[k - 2].divrem(&chain[k - 1]).1;
        if rem.is_zero() {
            return chain;
        }
        chain.push(rem.neg().monic());
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[RatPoly], x: &Rat) -> usize {
    variations(chain.iter().map(|q| sgn(&q.eval(x))))
}

fn variations_at_infinity(chain: &[RatPoly], neg: bool) -> usize {
    variations(chain.iter().map(|q| q.sign_at_infinity(neg)))
}

/// Number of roots in the half-open interval `(a, b]`.
fn count_halfopen(chain: &[RatPoly], a: &Rat, b: &Rat) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

/// Strict upper bound on root magnitudes: 1 + max |a_i| / |lead|.
fn cauchy_bound(p: &RatPoly) -> Rat {
    let lead = p.leading();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let v = (c / &lead).abs();
        if v > m {
            m = v;
        }
    }
    m + Rat::one()
}

/// A split point in (a, b) where `p` does not vanish. Tries the midpoint
/// first, then a deterministic ladder of interior points.
fn split_point(p: &RatPoly, a: &Rat, b: &Rat) -> Rat {
    let gap = b - a;
    for k in 0..(p.degree() + 2) {
        let t = ratio(1, 2) + ratio(1, 3) * ratio(1, (k + 1) as i64) * if k % 2 == 0 { rat(1) } else { rat(-1) };
        let cand = a + &gap * t;
        if &cand > a && &cand < b && !p.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("polynomial vanished at deg+2 distinct interior points");
}

/// Bisection refinement of a simple root of `p` known to lie in (lo, hi)
/// with sign(p(lo)) != sign(p(hi)), both nonzero.
fn refine(p: &RatPoly, mut lo: Rat, mut hi: Rat, width: &Rat) -> (Rat, Rat) {
    let mut slo = sgn(&p.eval(&lo));
    debug_assert!(slo != 0 && sgn(&p.eval(&hi)) == -slo);
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / rat(2);
        let sm = sgn(&p.eval(&mid));
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Isolates the real roots of a square-free polynomial strictly inside
/// (lo, hi), refined so each enclosure has width < `width`.
fn isolate_squarefree(p: &RatPoly, lo: &Bound, hi: &Bound, width: &Rat) -> Vec<(Rat, Rat)> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let mut f = p.clone();
    // Deflate roots sitting exactly on a finite endpoint: the interval is open.
    for e in [lo, hi] {
        if let Bound::Finite(v) = e {
            while !f.is_zero() && f.degree() > 0 && f.eval(v).is_zero() {
                f = f.div_exact(&RatPoly::linear(-v.clone(), Rat::one()));
            }
        }
    }
    if f.degree() == 0 {
        return Vec::new();
    }
    let bound = cauchy_bound(&f);
    let a = match lo {
        Bound::NegInf => -&bound,
        Bound::Finite(v) => v.clone().max(-&bound),
        Bound::PosInf => return Vec::new(),
    };
    let b = match hi {
        Bound::PosInf => bound.clone(),
        Bound::Finite(v) => v.clone().min(bound.clone()),
        Bound::NegInf => return Vec::new(),
    };
    if a >= b {
        return Vec::new();
    }
    let chain = sturm_chain(&f);
    // Roots strictly inside (a, b): endpoints were deflated, and the Cauchy
    // bound is strict, so (a, b] counting is exact here.
    let total = count_halfopen(&chain, &a, &b);
    let mut out = Vec::new();
    let mut work = vec![(a, b, total)];
    while let Some((a, b, k)) = work.pop() {
        match k {
            0 => {}
            1 => {
                let (mut l, mut h) = (a, b);
                // shrink until the endpoint signs differ, then bisect
                loop {
                    let sl = sgn(&f.eval(&l));
                    let sh = sgn(&f.eval(&h));
                    debug_assert!(sl != 0 && sh != 0);
                    if sl != sh {
                        out.push(refine(&f, l, h, width));
                        break;
                    }
                    let mid = split_point(&f, &l, &h);
                    if count_halfopen(&chain, &l, &mid) == 1 {
                        h = mid;
                    } else {
                        l = mid;
                    }
                }
            }
            _ => {
                let mid = split_point(&f, &a, &b);
                let kl = count_halfopen(&chain, &a, &mid);
                work.push((a, mid.clone(), kl));
                work.push((mid, b, k - kl));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Isolates all real roots of `p` strictly inside the open interval
/// (lo, hi), with multiplicities, sorted ascending. Enclosures of distinct
/// roots are disjoint.
pub fn isolate_real_roots(p: &RatPoly, lo: &Bound, hi: &Bound, width: &Rat) -> Vec<IsolatedRoot> {
    let mut roots: Vec<(Rat, Rat, usize, RatPoly)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for (l, h) in isolate_squarefree(&factor, lo, hi, width) {
            roots.push((l, h, mult, factor.clone()));
        }
    }
    roots.sort_by(|x, y| x.0.cmp(&y.0));
    // Enclosures from different square-free factors may overlap even though
    // the roots are distinct; refine until they separate.
    let mut separated = false;
    while !separated {
        separated = true;
        for i in 1..roots.len() {
            if roots[i].0 < roots[i - 1].1 {
                separated = false;
                for j in [i - 1, i] {
                    let (l, h, _, f) = &roots[j];
                    if l == h {
                        continue;
                    }
                    let target = (h - l) / rat(4);
                    let (nl, nh) = refine(f, l.clone(), h.clone(), &target);
                    roots[j].0 = nl;
                    roots[j].1 = nh;
                }
                roots.sort_by(|x, y| x.0.cmp(&y.0));
                break;
            }
        }
    }
    roots
        .into_iter()
        .map(|(lo, hi, multiplicity, _)| IsolatedRoot { lo, hi, multiplicity })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_from_f64;

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    fn width() -> Rat {
        rat_from_f64(1e-12).unwrap()
    }

    #[test]
    fn quadratic_roots() {
        // mu^2 - 7 mu + 1, roots (7 +- 3 sqrt 5)/2
        let f = p(&[1, -7, 1]);
        let roots = isolate_real_roots(&f, &Bound::Finite(rat(0)), &Bound::PosInf, &width());
        assert_eq!(roots.len(), 2);
        let r0 = roots[0].approx();
        let r1 = roots[1].approx();
        let s5 = 5.0f64.sqrt();
        assert!((r0 - (7.0 - 3.0 * s5) / 2.0).abs() < 1e-9);
        assert!((r1 - (7.0 + 3.0 * s5) / 2.0).abs() < 1e-9);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn multiplicities_and_open_interval() {
        // (x-1)^2 (x+2) x : root at 0 must be excluded on (0, inf)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1])).mul(&p(&[0, 1]));
        let roots = isolate_real_roots(&f, &Bound::Finite(rat(0)), &Bound::PosInf, &width());
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        assert!((roots[0].approx() - 1.0).abs() < 1e-9);

        let all = isolate_real_roots(&f, &Bound::NegInf, &Bound::PosInf, &width());
        assert_eq!(all.len(), 3);
        assert_eq!(
            all.iter().map(|r| r.multiplicity).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
    }

    #[test]
    fn close_roots_separate() {
        // roots at 1/3 and 1/3 + 1/10^6
        let a = ratio(1, 3);
        let b = &a + ratio(1, 1_000_000);
        let f = RatPoly::linear(-a.clone(), Rat::one()).mul(&RatPoly::linear(-b.clone(), Rat::one()));
        let roots = isolate_real_roots(&f, &Bound::NegInf, &Bound::PosInf, &width());
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi < roots[1].lo);
    }

    #[test]
    fn no_roots() {
        let f = p(&[1, 0, 1]);
        assert!(isolate_real_roots(&f, &Bound::NegInf, &Bound::PosInf, &width()).is_empty());
    }
}
