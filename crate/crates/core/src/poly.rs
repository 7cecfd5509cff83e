//! Integer and rational polynomials in one variable: ring operations,
//! exact division, gcd, content, irreducibility over the integers, and
//! resultants/discriminants.
//!
//! Coefficients are stored in ascending degree with a nonzero trailing
//! coefficient; the zero polynomial has an empty coefficient vector.

use crate::error::{Error, Result};
use crate::matrix::{integer_det, IntMat};
use crate::rational::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const MAX_IRREDUCIBILITY_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Int::one()])
    }

    /// The monomial z.
    pub fn var() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        let d: Vec<Int> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Int::from(k))
            .collect();
        IntPoly::new(d)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Int::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content-free copy with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient if `divisor` divides `self` in Z[z].
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_rat().divrem(&divisor.to_rat());
        if !r.is_zero() {
            return None;
        }
        q.to_int_poly()
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.abs_clone();
        }
        if other.is_zero() {
            return self.abs_clone();
        }
        let cont = self.content().gcd(&other.content());
        let g = self.to_rat().gcd(&other.to_rat());
        g.to_int_poly_primitive().scale(&cont)
    }

    fn abs_clone(&self) -> IntPoly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// self / gcd(self, self'): same distinct roots, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) < 1 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        self.exact_div(&g)
            .expect("gcd divides the polynomial")
            .primitive_part()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// max |c_i|, the naive height.
    pub fn height(&self) -> Int {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_poly(f, self.coeffs.len(), |k| {
            let c = &self.coeffs[k];
            (c.is_zero(), c.is_negative(), c.abs().to_string(), c.abs().is_one())
        })
    }
}

/// Shared pretty-printer: descending powers of z, `-` signs folded into the
/// separators, unit coefficients elided on nonconstant terms.
fn write_poly(
    f: &mut std::fmt::Formatter<'_>,
    len: usize,
    coeff: impl Fn(usize) -> (bool, bool, String, bool),
) -> std::fmt::Result {
    if len == 0 {
        return write!(f, "0");
    }
    let mut first = true;
    for k in (0..len).rev() {
        let (is_zero, neg, abs, is_unit) = coeff(k);
        if is_zero {
            continue;
        }
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match k {
            0 => write!(f, "{}", abs)?,
            _ => {
                if !is_unit {
                    write!(f, "{}", abs)?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", k)?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(Int::from(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, k: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn divrem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = Rat::one() / divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &factor;
                    rem[k + j] -= t;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.divrem(divisor).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    /// self / gcd(self, self'), monic.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) < 1 {
            return self.make_monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.make_monic()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Exact conversion; None when a coefficient is not an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if !self.has_integer_coeffs() {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// Clears denominators and strips content: the unique primitive integer
    /// polynomial with positive leading coefficient spanning the same roots.
    pub fn to_int_poly_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        IntPoly::new(ints).primitive_part()
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_poly(f, self.coeffs.len(), |k| {
            let c = &self.coeffs[k];
            (
                c.is_zero(),
                c.is_negative(),
                crate::rational::render_rat(&c.abs()),
                c.abs().is_one(),
            )
        })
    }
}

/// ceil(sqrt(sum of squared coefficients)).
fn norm2_ceil(p: &IntPoly) -> Int {
    let s: Int = p.coeffs().iter().map(|c| c * c).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}

fn binomial(n: usize, k: usize) -> Int {
    let mut r = Int::one();
    for i in 0..k.min(n - k) {
        r = r * Int::from(n - i) / Int::from(i + 1);
    }
    r
}

/// Uniform bound on the coefficients of any degree-d integer factor of p
/// (a relaxation of the Mignotte factor bound, valid for every coefficient).
fn factor_coeff_bound(p: &IntPoly, d: usize) -> Int {
    binomial(d, d / 2) * (norm2_ceil(p) + p.leading().abs())
}

/// Positive divisors of |n| that are <= bound. Falls back to a full range
/// scan when |n| does not fit in u64 (rare at desk scale, still complete).
fn positive_divisors_up_to(n: &Int, bound: &Int) -> Vec<Int> {
    let m = n.abs();
    assert!(!m.is_zero());
    if let Some(v) = m.to_u64_digits().1.first().copied().filter(|_| m.bits() <= 63) {
        let mut divs: Vec<u64> = Vec::new();
        let mut k = 1u64;
        while k.saturating_mul(k) <= v {
            if v % k == 0 {
                divs.push(k);
                divs.push(v / k);
            }
            k += 1;
        }
        divs.sort_unstable();
        divs.dedup();
        divs.into_iter()
            .map(Int::from)
            .filter(|d| d <= bound)
            .collect()
    } else {
        let mut divs = Vec::new();
        let mut k = Int::one();
        while &k <= bound {
            if (&m % &k).is_zero() {
                divs.push(k.clone());
            }
            k += 1;
        }
        divs
    }
}

/// Integer test for p(r/s) = 0: sum of c_k r^k s^(n-k) without rationals.
fn is_rational_root(p: &IntPoly, r: &Int, s: &Int) -> bool {
    let n = p.degree().unwrap();
    let mut acc = Int::zero();
    let mut r_pow = Int::one();
    let mut s_pows = vec![Int::one(); n + 1];
    for k in 1..=n {
        s_pows[k] = &s_pows[k - 1] * s;
    }
    for k in 0..=n {
        acc += p.coeff(k) * &r_pow * &s_pows[n - k];
        r_pow *= r;
    }
    acc.is_zero()
}

/// All rational roots r/s of a primitive polynomial, in lowest terms.
fn rational_roots(p: &IntPoly) -> Vec<Rat> {
    let mut roots = Vec::new();
    let c0 = p.coeff(0);
    if c0.is_zero() {
        roots.push(Rat::zero());
        return roots;
    }
    let lead = p.leading().abs();
    let big = c0.abs().max(lead.clone());
    let p1 = p.eval_int(&Int::one());
    let pm1 = p.eval_int(&Int::from(-1));
    for r_abs in positive_divisors_up_to(&c0, &c0.abs()) {
        for s in positive_divisors_up_to(&lead, &big) {
            if r_abs.gcd(&s) != Int::one() {
                continue;
            }
            for r in [r_abs.clone(), -r_abs.clone()] {
                // a root r/s forces (s - r) | p(1) and (s + r) | p(-1)
                let d1 = &s - &r;
                if d1.is_zero() {
                    if !p1.is_zero() {
                        continue;
                    }
                } else if !(&p1 % &d1).is_zero() {
                    continue;
                }
                let d2 = &s + &r;
                if d2.is_zero() {
                    if !pm1.is_zero() {
                        continue;
                    }
                } else if !(&pm1 % &d2).is_zero() {
                    continue;
                }
                if is_rational_root(p, &r, &s) {
                    roots.push(Rat::new(r, s.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Rabin irreducibility test for p modulo a small prime q (requires the
/// leading coefficient to be a unit mod q). A success certifies
/// irreducibility of the primitive polynomial over the integers.
mod modp {
    /// Dense polynomial over F_q as ascending i64 coefficients in [0, q).
    fn trim(mut v: Vec<i64>) -> Vec<i64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn mul_mod(a: &[i64], b: &[i64], modulus: &[i64], q: i64) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % q;
            }
        }
        rem(trim(out), modulus, q)
    }

    /// Remainder modulo a monic modulus polynomial over F_q.
    fn rem(mut a: Vec<i64>, modulus: &[i64], q: i64) -> Vec<i64> {
        let d = modulus.len() - 1;
        while a.len() > d {
            let lead = *a.last().unwrap() % q;
            let shift = a.len() - 1 - d;
            if lead != 0 {
                for (k, &m) in modulus.iter().enumerate() {
                    a[shift + k] = ((a[shift + k] - lead * m) % q + q) % q;
                }
            }
            a.pop();
        }
        trim(a)
    }

    fn pow_x_qk(modulus: &[i64], q: i64, exp: u64) -> Vec<i64> {
        // x^exp mod modulus by square and multiply
        let x = vec![0, 1];
        let mut acc = vec![1i64];
        let mut sq = rem(x, modulus, q);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &sq, modulus, q);
            }
            sq = mul_mod(&sq, &sq, modulus, q);
            e >>= 1;
        }
        acc
    }

    fn gcd_mod(mut a: Vec<i64>, mut b: Vec<i64>, q: i64) -> Vec<i64> {
        while !b.is_empty() {
            // make b monic
            let lead = *b.last().unwrap();
            let inv = mod_inverse(lead, q);
            let monic: Vec<i64> = b.iter().map(|&c| c * inv % q).collect();
            let r = rem(a, &monic, q);
            a = b;
            b = r;
        }
        a
    }

    fn mod_inverse(a: i64, q: i64) -> i64 {
        // q is a small prime
        let mut result = 1i64;
        let mut base = ((a % q) + q) % q;
        let mut e = q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        result
    }

    /// Rabin's criterion: p (degree d, unit leading coefficient mod q) is
    /// irreducible over F_q iff x^(q^d) = x mod p and for every prime
    /// l | d, gcd(x^(q^(d/l)) - x, p) is constant.
    pub fn is_irreducible(coeffs: &[i64], q: i64) -> bool {
        let d = coeffs.len() - 1;
        let lead = coeffs[d].rem_euclid(q);
        debug_assert!(lead != 0);
        let inv = mod_inverse(lead, q);
        let monic: Vec<i64> = coeffs
            .iter()
            .map(|&c| (c.rem_euclid(q)) * inv % q)
            .collect();
        let qd = (q as u64).pow(d as u32);
        let xqd = pow_x_qk(&monic, q, qd);
        // x^(q^d) - x must vanish mod p
        let mut diff = xqd;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = ((diff[1] - 1) % q + q) % q;
        if !trim(diff).is_empty() {
            return false;
        }
        let mut primes = Vec::new();
        let mut m = d;
        let mut l = 2;
        while l * l <= m {
            if m % l == 0 {
                primes.push(l);
                while m % l == 0 {
                    m /= l;
                }
            }
            l += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        for l in primes {
            let e = (q as u64).pow((d / l) as u32);
            let mut g = pow_x_qk(&monic, q, e);
            if g.len() < 2 {
                g.resize(2, 0);
            }
            g[1] = ((g[1] - 1) % q + q) % q;
            let g = gcd_mod(monic.clone(), trim(g), q);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

/// Fast sound certificate: irreducibility modulo a small prime with the
/// degree preserved certifies irreducibility over Z for primitive p.
fn irreducible_mod_small_prime(p: &IntPoly) -> bool {
    irreducible_mod_small_prime_impl(p)
}

#[doc(hidden)]
pub fn irreducible_mod_small_prime_public(p: &IntPoly) -> bool {
    irreducible_mod_small_prime_impl(p)
}

fn irreducible_mod_small_prime_impl(p: &IntPoly) -> bool {
    let d = p.degree().unwrap();
    for q in [2i64, 3, 5, 7] {
        let qi = Int::from(q);
        if (p.leading() % &qi).is_zero() {
            continue;
        }
        let coeffs: Vec<i64> = (0..=d)
            .map(|k| {
                use num_traits::ToPrimitive;
                let r = p.coeff(k) % &qi;
                r.to_i64().unwrap().rem_euclid(q)
            })
            .collect();
        if modp::is_irreducible(&coeffs, q) {
            return true;
        }
    }
    false
}

/// Complete quadratic-times-quadratic split of a primitive quartic with no
/// rational roots: enumerate divisor pairs for the outer coefficients and
/// solve the two middle equations linearly.
fn quartic_quad_split(p: &IntPoly) -> Option<(IntPoly, IntPoly)> {
    let p4 = p.coeff(4);
    let p3 = p.coeff(3);
    let p2 = p.coeff(2);
    let p1 = p.coeff(1);
    let p0 = p.coeff(0);
    debug_assert!(!p0.is_zero());
    let bound = factor_coeff_bound(p, 2);
    let const_divisors = positive_divisors_up_to(&p0, &p0.abs());
    for a in positive_divisors_up_to(&p4, &p4.abs()) {
        let d0 = &p4 / &a;
        for d in [d0.clone(), -d0] {
            for c_abs in &const_divisors {
                for c in [c_abs.clone(), -c_abs.clone()] {
                    let f = &p0 / &c;
                    // unknowns b, e:  p3 = a e + d b ;  p1 = c e + f b
                    let det = &a * &f - &c * &d;
                    let candidates: Vec<(Int, Int)> = if !det.is_zero() {
                        let b_num = &a * &p1 - &c * &p3;
                        let e_num = &f * &p3 - &d * &p1;
                        if (&b_num % &det).is_zero() && (&e_num % &det).is_zero() {
                            vec![(b_num / &det, e_num / &det)]
                        } else {
                            vec![]
                        }
                    } else {
                        // degenerate pair: scan b within the factor bound
                        let mut v = Vec::new();
                        let mut b = -bound.clone();
                        while b <= bound {
                            let rem = &p3 - &d * &b;
                            if (&rem % &a).is_zero() {
                                v.push((b.clone(), rem / &a));
                            }
                            b += 1;
                        }
                        v
                    };
                    for (b, e) in candidates {
                        // the degenerate scan only enforced the z^3 equation,
                        // so verify the full product before accepting
                        if &a * &f + &b * &e + &c * &d == p2 {
                            let g = IntPoly::new(vec![c.clone(), b, a.clone()]);
                            let h = IntPoly::new(vec![f.clone(), e, d.clone()]);
                            if g.mul(&h) == *p {
                                return Some((g, h));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Bounded exhaustive search for a degree-d factor (2 <= d <= deg/2) of a
/// primitive polynomial with nonzero constant term and no rational roots.
fn bounded_factor_search(p: &IntPoly, d: usize) -> Option<(IntPoly, IntPoly)> {
    let bound = factor_coeff_bound(p, d);
    let p_at_1 = p.eval_int(&Int::one());
    let p_at_m1 = p.eval_int(&Int::from(-1));
    let lead = p.leading();
    let c0 = p.coeff(0);
    let lead_divs = positive_divisors_up_to(&lead, &lead.abs());
    let mut const_divs: Vec<Int> = Vec::new();
    for v in positive_divisors_up_to(&c0, &c0.abs()) {
        const_divs.push(v.clone());
        const_divs.push(-v);
    }
    // middle coefficients g_1 .. g_{d-1} range over [-bound, bound]
    let mut mid = vec![-bound.clone(); d.saturating_sub(1)];
    let one = Int::one();
    loop {
        for gl in &lead_divs {
            for g0 in &const_divs {
                let mut coeffs = Vec::with_capacity(d + 1);
                coeffs.push(g0.clone());
                coeffs.extend(mid.iter().cloned());
                coeffs.push(gl.clone());
                let g = IntPoly::new(coeffs);
                if g.degree() != Some(d) {
                    continue;
                }
                // p has no rational roots here, so p(1) != 0 and p(-1) != 0,
                // and any factor g must satisfy g(1) | p(1), g(-1) | p(-1)
                let g1 = g.eval_int(&one);
                if g1.is_zero() || !(&p_at_1 % &g1).is_zero() {
                    continue;
                }
                let gm1 = g.eval_int(&Int::from(-1));
                if gm1.is_zero() || !(&p_at_m1 % &gm1).is_zero() {
                    continue;
                }
                if let Some(h) = p.exact_div(&g) {
                    return Some((g, h));
                }
            }
        }
        // odometer over the middle coefficients
        let mut i = 0;
        loop {
            if i == mid.len() {
                return None;
            }
            mid[i] += 1;
            if mid[i] <= bound {
                break;
            }
            mid[i] = -bound.clone();
            i += 1;
        }
    }
}

/// Finds a nontrivial factorization p = g*h over Z of a primitive
/// nonconstant polynomial of degree <= 8, or None when p is irreducible.
pub fn find_integer_factor(p: &IntPoly) -> Option<(IntPoly, IntPoly)> {
    let deg = p.degree().expect("nonzero polynomial");
    debug_assert!(deg >= 1 && deg <= MAX_IRREDUCIBILITY_DEGREE);
    if deg == 1 {
        return None;
    }
    if irreducible_mod_small_prime(p) {
        return None;
    }
    for root in rational_roots(p) {
        let g = IntPoly::new(vec![-root.numer().clone(), root.denom().clone()]);
        let h = p.exact_div(&g).expect("root gives an exact linear factor");
        return Some((g, h));
    }
    // no linear factors from here on; constant coefficient is nonzero
    if deg == 2 || deg == 3 {
        return None;
    }
    if deg == 4 {
        return quartic_quad_split(p);
    }
    for d in 2..=deg / 2 {
        if let Some(pair) = bounded_factor_search(p, d) {
            return Some(pair);
        }
    }
    None
}

/// Irreducibility over Z for a primitive nonconstant polynomial of degree
/// at most 8, decided by rational-root testing plus a bounded exhaustive
/// factor search.
pub fn poly_irreducible(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if deg > MAX_IRREDUCIBILITY_DEGREE {
        return Err(Error::DegreeCap {
            got: deg,
            cap: MAX_IRREDUCIBILITY_DEGREE,
        });
    }
    if !p.content().is_one() {
        return Err(Error::NotPrimitive);
    }
    Ok(find_integer_factor(p).is_none())
}

/// Resultant of p and q via the Sylvester matrix and an exact determinant.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Int {
    let (m, n) = match (p.degree(), q.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Int::zero(),
    };
    if m == 0 {
        return p.leading().pow(n as u32);
    }
    if n == 0 {
        return q.leading().pow(m as u32);
    }
    let size = m + n;
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Int::zero(); size];
        for (k, c) in p.coeffs().iter().enumerate() {
            row[i + (m - k)] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Int::zero(); size];
        for (k, c) in q.coeffs().iter().enumerate() {
            row[i + (n - k)] = c.clone();
        }
        rows.push(row);
    }
    integer_det(&IntMat::from_rows(rows)).expect("sylvester matrix is square")
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant(p: &IntPoly) -> Int {
    let n = p.degree().expect("nonconstant polynomial");
    assert!(n >= 1);
    let res = resultant(p, &p.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    // monic: divide by the leading coefficient (1)
    Int::from(sign) * res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat, rat_int};

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 0, -10, 0, 1]).to_string(), "z^4 - 10z^2 + 1");
        assert_eq!(p(&[-1, -1, 1]).to_string(), "z^2 - z - 1");
        assert_eq!(p(&[-3, 1]).to_string(), "z - 3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[5]).to_string(), "5");
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]); // z + 1
        let b = p(&[-1, 1]); // z - 1
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
    }

    #[test]
    fn exact_division() {
        let prod = p(&[-1, 0, 1]);
        assert_eq!(prod.exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(prod.exact_div(&p(&[1, 2])), None);
    }

    #[test]
    fn gcd_and_squarefree() {
        // (z-1)^2 (z+2)
        let q = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(q.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
    }

    #[test]
    fn irreducibility_paper_examples() {
        assert!(poly_irreducible(&p(&[-1, 1, 0, 1])).unwrap()); // z^3 + z - 1
        assert!(poly_irreducible(&p(&[1, 0, -10, 0, 1])).unwrap()); // z^4 - 10z^2 + 1
        assert!(!poly_irreducible(&p(&[-1, 0, 1])).unwrap()); // z^2 - 1
        assert!(poly_irreducible(&p(&[1, 0, -4, 0, 1])).unwrap()); // z^4 - 4z^2 + 1
        assert!(poly_irreducible(&p(&[-1, 0, -1, 1])).unwrap()); // z^3 - z^2 - 1
    }

    #[test]
    fn irreducibility_rejections() {
        assert_eq!(poly_irreducible(&IntPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(poly_irreducible(&p(&[7])), Err(Error::ConstantPolynomial));
        assert_eq!(poly_irreducible(&p(&[2, 4])), Err(Error::NotPrimitive));
        assert!(matches!(
            poly_irreducible(&p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1])),
            Err(Error::DegreeCap { .. })
        ));
    }

    #[test]
    fn factor_witnesses_multiply_back() {
        let cases = [
            p(&[1, 3, 2]),          // (z+1)(z+2)
            p(&[1, 2, 3, 2]),       // (z+1)(z^2+z+1)... check below
            p(&[4, 0, -5, 0, 1]),   // (z^2-1)(z^2-4)
            p(&[1, 0, 2, 0, 1]),    // (z^2+1)^2
            p(&[-6, 1, 1]),         // (z+3)(z-2)
            p(&[0, 0, 1]),          // z^2
        ];
        for c in cases {
            let (g, h) = find_integer_factor(&c).unwrap_or_else(|| panic!("{c} should factor"));
            assert_eq!(g.mul(&h), c, "witness for {c}");
        }
    }

    #[test]
    fn quartic_with_non_monic_factors() {
        // (2z^2 + z + 1)(3z^2 - z + 2) has no rational roots
        let q = p(&[1, 1, 2]).mul(&p(&[2, -1, 3]));
        let (g, h) = find_integer_factor(&q).expect("factors");
        assert_eq!(g.mul(&h), q);
        assert!(!poly_irreducible(&q).unwrap());
    }

    #[test]
    fn sextic_factor_search() {
        // (z^2 + z + 1)(z^4 - z + 1): no rational roots, needs the bounded search
        let q = p(&[1, 1, 1]).mul(&p(&[1, -1, 0, 0, 1]));
        let (g, h) = find_integer_factor(&q).expect("factors");
        assert_eq!(g.mul(&h), q);
        // x^6 + x + 1 is irreducible over Z
        assert!(poly_irreducible(&p(&[1, 1, 0, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(z^2 - 5) = 20, disc(z^2 - z - 1) = 5
        assert_eq!(discriminant(&p(&[-5, 0, 1])), int(20));
        assert_eq!(discriminant(&p(&[-1, -1, 1])), int(5));
        // disc(z^3 + z - 1) = -31 = disc(z^3 - z^2 - 1)
        assert_eq!(discriminant(&p(&[-1, 1, 0, 1])), int(-31));
        assert_eq!(discriminant(&p(&[-1, 0, -1, 1])), int(-31));
        // resultant(z-2, z-3) = eval difference = -1... Res = prod (2-3) = -1
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])), int(-1));
    }

    #[test]
    fn rat_poly_divrem_and_gcd() {
        let a = p(&[-1, 0, 1]).to_rat(); // z^2 - 1
        let b = p(&[1, 1]).to_rat(); // z + 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-1, 1]).to_rat());
        let g = a.gcd(&b);
        assert!(g.is_monic());
        assert_eq!(g, b);
        // to_int_poly_primitive clears denominators
        let half = RatPoly::new(vec![rat(-5, 4), rat_int(0), rat_int(1)]);
        assert_eq!(half.to_int_poly_primitive(), p(&[-5, 0, 4]));
    }
}
