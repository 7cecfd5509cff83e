//! Real root isolation for integer polynomials by Sturm sequences and
//! bisection, entirely in exact rational arithmetic.

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::rational::{rat, Rat};
use num_traits::{One, Signed, Zero};

/// Closed rational interval [lo, hi]. When used as an isolating interval
/// for a polynomial, the polynomial has exactly one real root strictly
/// inside and none at the endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn strictly_contains(&self, x: &Rat) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// True when every point of self is strictly below every point of other.
    pub fn strictly_below(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    /// Interval evaluation of a rational polynomial by Horner's scheme.
    pub fn eval_poly(&self, p: &RatPoly) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Interval::point(c.clone()));
        }
        acc
    }

    /// The sign of every point in the interval, when uniform: Some(-1),
    /// Some(0) for the degenerate zero point, Some(1), or None when the
    /// interval straddles zero.
    pub fn uniform_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            crate::rational::render_rat(&self.lo),
            crate::rational::render_rat(&self.hi)
        )
    }
}

/// Sturm chain of a squarefree rational polynomial.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations_at(chain: &[RatPoly], x: &Rat) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|q| {
            let v = q.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Strict upper bound on the absolute value of every root (Cauchy bound).
fn root_bound(p: &IntPoly) -> Rat {
    let lead = Rat::from_integer(p.leading()).abs();
    let mut m = Rat::zero();
    let n = p.degree().unwrap();
    for k in 0..n {
        let c = Rat::from_integer(p.coeff(k)).abs() / &lead;
        if c > m {
            m = c;
        }
    }
    m + Rat::one()
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf.to_rat());
    let m = root_bound(&sf);
    Ok(sign_variations_at(&chain, &-m.clone()) - sign_variations_at(&chain, &m))
}

/// Recursive bisection: collects half-open isolating intervals (a, b] for a
/// squarefree polynomial with no rational roots.
fn isolate_rec(chain: &[RatPoly], a: Rat, b: Rat, va: usize, vb: usize, out: &mut Vec<(Rat, Rat)>) {
    let count = va - vb;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((a, b));
        return;
    }
    let mid = (&a + &b) / rat(2, 1);
    let vm = sign_variations_at(chain, &mid);
    isolate_rec(chain, a, mid.clone(), va, vm, out);
    isolate_rec(chain, mid, b, vm, vb, out);
}

/// One bisection step toward the unique root of p in the interval.
/// Requires opposite nonzero signs of p at the endpoints.
fn bisect_step(p: &RatPoly, iv: &Interval) -> Interval {
    let mid = iv.midpoint();
    let vm = p.eval(&mid);
    debug_assert!(!vm.is_zero(), "bisection midpoint landed on a root");
    let vlo = p.eval(iv.lo());
    if (vlo.is_negative() && vm.is_positive()) || (vlo.is_positive() && vm.is_negative()) {
        Interval::new(iv.lo().clone(), mid)
    } else {
        Interval::new(mid, iv.hi().clone())
    }
}

/// Shrinks an isolating interval of p until its width is at most `target`.
/// Requires that p has exactly one simple root strictly inside and nonzero
/// values of opposite sign at the endpoints.
pub fn refine_isolating_interval(p: &IntPoly, iv: &Interval, target: &Rat) -> Interval {
    let pr = p.to_rat();
    let mut cur = iv.clone();
    while cur.width() > *target {
        cur = bisect_step(&pr, &cur);
    }
    cur
}

const ISOLATION_WIDTH: (i64, i64) = (1, 4);

/// Isolates every distinct real root of a nonzero polynomial: the returned
/// intervals are pairwise disjoint, ordered ascending, have rational
/// non-root endpoints, and each contains exactly one real root of p.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }

    // split off rational roots so that bisection never lands on a root
    let mut rational_roots: Vec<Rat> = Vec::new();
    let mut core = sf.clone();
    while core.degree().unwrap_or(0) >= 1 {
        let Some(root) = find_one_rational_root(&core) else {
            break;
        };
        let lin = IntPoly::new(vec![-root.numer().clone(), root.denom().clone()]);
        core = core.exact_div(&lin).expect("rational root divides");
        rational_roots.push(root);
    }
    rational_roots.sort();

    let width_target = rat(ISOLATION_WIDTH.0, ISOLATION_WIDTH.1);
    let mut irrational: Vec<Interval> = Vec::new();
    if core.degree().unwrap_or(0) >= 1 {
        let chain = sturm_chain(&core.to_rat());
        let m = root_bound(&core);
        let a = -m.clone();
        let va = sign_variations_at(&chain, &a);
        let vb = sign_variations_at(&chain, &m);
        let mut raw = Vec::new();
        isolate_rec(&chain, a, m, va, vb, &mut raw);
        let core_rat = core.to_rat();
        for (lo, hi) in raw {
            let mut iv = Interval::new(lo, hi);
            while iv.width() > width_target
                || rational_roots.iter().any(|r| iv.contains(r))
                || irrational.iter().any(|other| !iv.is_disjoint(other))
            {
                iv = bisect_step(&core_rat, &iv);
            }
            irrational.push(iv);
        }
    }

    // pad each rational root with a symmetric interval avoiding everything else
    let mut all: Vec<Interval> = irrational;
    for (k, r) in rational_roots.iter().enumerate() {
        let mut delta = rat(ISOLATION_WIDTH.0, 2 * ISOLATION_WIDTH.1);
        for other in rational_roots.iter().enumerate().filter(|&(j, _)| j != k) {
            let d = (r - other.1).abs() / rat(2, 1);
            if d < delta {
                delta = d;
            }
        }
        for iv in &all {
            let d = if r < iv.lo() {
                iv.lo() - r
            } else if r > iv.hi() {
                r - iv.hi()
            } else {
                unreachable!("rational root inside an irrational isolating interval")
            };
            let d = d / rat(2, 1);
            if d < delta {
                delta = d;
            }
        }
        all.push(Interval::new(r - &delta, r + &delta));
    }
    all.sort_by(|a, b| a.lo().cmp(b.lo()));
    debug_assert!(all.windows(2).all(|w| w[0].strictly_below(&w[1])));
    Ok(all)
}

/// One rational root of a nonconstant integer polynomial, if any.
fn find_one_rational_root(p: &IntPoly) -> Option<Rat> {
    use num_integer::Integer as _;
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Some(Rat::zero());
    }
    for s in divisors_of(&p.leading().abs()) {
        for num_div in divisors_of(&c0.abs()) {
            if num_div.gcd(&s) != crate::rational::Int::one() {
                continue;
            }
            for cand in [
                Rat::new(num_div.clone(), s.clone()),
                Rat::new(-num_div.clone(), s.clone()),
            ] {
                if p.eval_rat(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors_of(n: &crate::rational::Int) -> Vec<crate::rational::Int> {
    use num_integer::Integer as _;
    let mut out = Vec::new();
    let mut k = crate::rational::Int::one();
    while &k * &k <= *n {
        if n.is_multiple_of(&k) {
            out.push(k.clone());
            out.push(n / &k);
        }
        k += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn sqrt2_roots_isolated() {
        let ivs = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        // one inside (-2,-1), one inside (1,2)
        assert!(*ivs[0].lo() > rat_int(-2) && *ivs[0].hi() < rat_int(-1));
        assert!(*ivs[1].lo() > rat_int(1) && *ivs[1].hi() < rat_int(2));
    }

    #[test]
    fn cubic_single_root_in_unit_interval() {
        // z^3 + z - 1 has exactly one real root, in (0, 1)
        let ivs = isolate_real_roots(&p(&[-1, 1, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(*ivs[0].lo() > rat_int(0) && *ivs[0].hi() < rat_int(1));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(isolate_real_roots(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_roots_get_isolating_intervals() {
        // (z-1)(z+1)z = z^3 - z: roots -1, 0, 1
        let ivs = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 3);
        assert!(ivs[0].strictly_contains(&rat_int(-1)));
        assert!(ivs[1].strictly_contains(&rat_int(0)));
        assert!(ivs[2].strictly_contains(&rat_int(1)));
        for w in ivs.windows(2) {
            assert!(w[0].strictly_below(&w[1]));
        }
    }

    #[test]
    fn mixed_rational_and_irrational_roots() {
        // (z - 1)(z^2 - 2): roots -sqrt2, 1, sqrt2
        let q = p(&[-1, 1]).mul(&p(&[-2, 0, 1]));
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 3);
        assert!(ivs[1].strictly_contains(&rat_int(1)));
        // endpoints are never roots
        for iv in &ivs {
            assert!(!q.eval_rat(iv.lo()).is_zero());
            assert!(!q.eval_rat(iv.hi()).is_zero());
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (z-2)^2 (z^2-3)
        let q = p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 0, 1]));
        let ivs = isolate_real_roots(&q).unwrap();
        assert_eq!(ivs.len(), 3);
        assert_eq!(count_real_roots(&q).unwrap(), 3);
    }

    #[test]
    fn interval_count_matches_sturm_count() {
        let cases = [
            p(&[-1, 1, 0, 1]),
            p(&[1, 0, -10, 0, 1]),
            p(&[1, 0, -4, 0, 1]),
            p(&[-2, 0, 1]),
            p(&[1, 0, 1]),
            p(&[0, -1, 0, 1]),
            p(&[-1, -1, 1]),
            p(&[5]),
        ];
        for q in cases {
            assert_eq!(
                isolate_real_roots(&q).unwrap().len(),
                count_real_roots(&q).unwrap(),
                "{q}"
            );
        }
    }

    #[test]
    fn quartic_with_four_real_roots() {
        // z^4 - 10z^2 + 1: roots +-sqrt2 +- sqrt3, all real
        let ivs = isolate_real_roots(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 4);
    }

    #[test]
    fn refinement_shrinks_and_keeps_root() {
        let q = p(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&q).unwrap();
        let fine = refine_isolating_interval(&q, &ivs[1], &rat(1, 1_000_000));
        assert!(fine.width() <= rat(1, 1_000_000));
        // sqrt2 = 1.41421356... the interval must contain it
        assert!(*fine.lo() < rat(14143, 10000));
        assert!(*fine.hi() > rat(14142, 10000));
        assert!(q.eval_rat(fine.lo()).is_negative() != q.eval_rat(fine.hi()).is_negative());
    }

    #[test]
    fn interval_arithmetic() {
        let a = Interval::new(rat_int(1), rat_int(2));
        let b = Interval::new(rat_int(-1), rat_int(1));
        assert_eq!(a.mul(&b), Interval::new(rat_int(-2), rat_int(2)));
        assert_eq!(a.add(&b), Interval::new(rat_int(0), rat_int(3)));
        assert_eq!(a.uniform_sign(), Some(1));
        assert_eq!(b.uniform_sign(), None);
        let q = p(&[-2, 0, 1]).to_rat();
        let img = a.eval_poly(&q);
        // on [1,2], z^2 - 2 ranges within [-1, 2]
        assert!(*img.lo() <= rat_int(-1) && *img.hi() >= rat_int(2));
    }
}
