//! Real algebraic number fields Q(gamma) presented by a monic irreducible
//! integer polynomial together with an isolating interval that selects one
//! real root, and exact arithmetic on field elements in power-basis
//! coordinates.

use crate::error::{Error, Result};
use crate::matrix::RatMat;
use crate::poly::{poly_irreducible, IntPoly, RatPoly};
use crate::rational::{pow10, render_rat, Int, Rat};
use crate::roots::{isolate_real_roots, Interval};
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

pub const MIN_FIELD_DEGREE: usize = 2;
pub const MAX_FIELD_DEGREE: usize = 6;

#[derive(Debug)]
struct FieldRepr {
    min_poly: IntPoly,
    min_poly_rat: RatPoly,
    degree: usize,
    root_index: usize,
    root_count: usize,
    root_interval: Interval,
    /// power_coords[k] = coordinates of gamma^k, for k = 0 .. 2(n-1)
    power_coords: Vec<Vec<Rat>>,
}

/// A real algebraic number field with a chosen real embedding. Cheap to
/// clone and safe to share between threads; all data is immutable.
#[derive(Debug, Clone)]
pub struct NumberField(Arc<FieldRepr>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.min_poly == other.0.min_poly && self.0.root_index == other.0.root_index)
    }
}

impl Eq for NumberField {}

impl NumberField {
    /// Builds the field Q(gamma) where gamma is the `which_root`-th real
    /// root (ascending) of the monic irreducible polynomial p.
    pub fn new(p: IntPoly, which_root: usize) -> Result<NumberField> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = p.degree().unwrap();
        if degree == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        if !(MIN_FIELD_DEGREE..=MAX_FIELD_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree {
                got: degree,
                min: MIN_FIELD_DEGREE,
                max: MAX_FIELD_DEGREE,
            });
        }
        if !poly_irreducible(&p)? {
            return Err(Error::Reducible);
        }
        let intervals = isolate_real_roots(&p)?;
        if intervals.is_empty() {
            return Err(Error::NoRealRoots);
        }
        if which_root >= intervals.len() {
            return Err(Error::RootIndexOutOfRange {
                index: which_root,
                count: intervals.len(),
            });
        }

        // coordinates of gamma^k: reduce z^k modulo p
        let mut power_coords: Vec<Vec<Rat>> = Vec::with_capacity(2 * degree - 1);
        let mut cur = vec![Rat::zero(); degree];
        cur[0] = Rat::one();
        power_coords.push(cur.clone());
        for _ in 1..=2 * (degree - 1) {
            let carry = cur[degree - 1].clone();
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = Rat::zero();
            if !carry.is_zero() {
                // z^n = -(c_0 + c_1 z + ... + c_{n-1} z^{n-1})
                for k in 0..degree {
                    let t = &carry * Rat::from_integer(p.coeff(k).clone());
                    cur[k] -= t;
                }
            }
            power_coords.push(cur.clone());
        }

        Ok(NumberField(Arc::new(FieldRepr {
            min_poly_rat: p.to_rat(),
            root_count: intervals.len(),
            root_interval: intervals[which_root].clone(),
            root_index: which_root,
            degree,
            min_poly: p,
            power_coords,
        })))
    }

    /// Q(sqrt(d)) with the positive square root selected.
    pub fn quadratic(d: i64) -> Result<NumberField> {
        NumberField::new(IntPoly::from_i64(&[-d, 0, 1]), 1)
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.0.min_poly
    }

    pub fn root_index(&self) -> usize {
        self.0.root_index
    }

    pub fn real_root_count(&self) -> usize {
        self.0.root_count
    }

    pub fn root_interval(&self) -> &Interval {
        &self.0.root_interval
    }

    /// One exact bisection step toward the chosen root.
    fn bisect(&self, iv: &Interval) -> Interval {
        let mid = iv.midpoint();
        let vm = self.0.min_poly_rat.eval(&mid);
        debug_assert!(!vm.is_zero());
        let vlo = self.0.min_poly_rat.eval(iv.lo());
        if (vlo.is_negative() && vm.is_positive()) || (vlo.is_positive() && vm.is_negative()) {
            Interval::new(iv.lo().clone(), mid)
        } else {
            Interval::new(mid, iv.hi().clone())
        }
    }

    /// An isolating interval for gamma of width at most `target`.
    pub fn root_interval_refined(&self, target: &Rat) -> Interval {
        let mut iv = self.0.root_interval.clone();
        while iv.width() > *target {
            iv = self.bisect(&iv);
        }
        iv
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: vec![Rat::zero(); self.0.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rat(Rat::one())
    }

    /// The chosen root gamma as an element.
    pub fn generator(&self) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.0.degree];
        coords[1] = Rat::one();
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_rat(&self, value: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.0.degree];
        coords[0] = value;
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_int(&self, value: i64) -> FieldElement {
        self.from_rat(Rat::from_integer(Int::from(value)))
    }

    /// Element from power-basis coordinates (length must equal the degree).
    pub fn element(&self, coords: Vec<Rat>) -> Result<FieldElement> {
        if coords.len() != self.0.degree {
            return Err(Error::ShapeMismatch);
        }
        Ok(FieldElement {
            field: self.clone(),
            coords,
        })
    }

    /// Element from `p/q` coordinate strings, for tests and the CLI.
    pub fn element_from_strs(&self, coords: &[&str]) -> Result<FieldElement> {
        let parsed: Result<Vec<Rat>> = coords.iter().map(|s| crate::rational::parse_rat(s)).collect();
        self.element(parsed?)
    }
}

impl std::fmt::Display for NumberField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Q(g), g = root {} of {} in {}",
            self.0.root_index, self.0.min_poly, self.0.root_interval
        )
    }
}

/// An element of a number field in power-basis coordinates
/// (c_0 + c_1 g + ... + c_{n-1} g^{n-1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Rat>,
}

fn assert_same_field(a: &FieldElement, b: &FieldElement) {
    assert!(a.field == b.field, "field mismatch in element arithmetic");
}

/// Checked variant for call sites fed by user data.
pub fn ensure_same_field(a: &FieldElement, b: &FieldElement) -> Result<()> {
    if a.field == b.field {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        assert_same_field(self, other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        assert_same_field(self, other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        assert_same_field(self, other);
        let n = self.field.0.degree;
        let mut conv = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut coords: Vec<Rat> = conv[..n].to_vec();
        for (k, c) in conv.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (dst, base) in coords.iter_mut().zip(&self.field.0.power_coords[k]) {
                *dst += c * base;
            }
        }
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the minimal polynomial of the field.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = RatPoly::new(self.coords.clone());
        let m = &self.field.0.min_poly_rat;
        // extended euclid: s*a + t*m = gcd = nonzero constant
        let (mut r0, mut r1) = (a, m.clone());
        let (mut s0, mut s1) = (
            RatPoly::new(vec![Rat::one()]),
            RatPoly::zero(),
        );
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        debug_assert_eq!(r0.degree(), Some(0), "min poly is irreducible");
        let inv_const = Rat::one() / r0.coeff(0);
        let s = s0.scale(&inv_const);
        let mut coords = vec![Rat::zero(); self.field.0.degree];
        for (k, c) in s.coeffs().iter().enumerate() {
            coords[k] = c.clone();
        }
        Ok(FieldElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<FieldElement> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by self on the power basis: row j holds the
    /// coordinates of self * gamma^j.
    pub fn mult_matrix_power_basis(&self) -> RatMat {
        let n = self.field.0.degree;
        let mut rows = Vec::with_capacity(n);
        let mut cur = self.clone();
        rows.push(cur.coords.clone());
        let g = self.field.generator();
        for _ in 1..n {
            cur = cur.mul(&g);
            rows.push(cur.coords.clone());
        }
        RatMat::from_rows(rows)
    }

    /// Field norm: determinant of the multiplication-by-self matrix.
    /// Independent of the basis used to compute it.
    pub fn norm(&self) -> Rat {
        self.mult_matrix_power_basis()
            .det()
            .expect("power-basis matrix is square")
    }

    /// Monic minimal polynomial over Q: the squarefree part of the
    /// characteristic polynomial of the multiplication matrix (the
    /// characteristic polynomial is a power of the minimal polynomial).
    pub fn min_poly(&self) -> RatPoly {
        let m = self.mult_matrix_power_basis();
        let chi = char_poly(&m);
        let mu = chi.squarefree_part();
        debug_assert!(mu.eval_is_zero_at(self));
        mu
    }

    /// True iff the element is an algebraic integer (its minimal polynomial
    /// has integer coefficients).
    pub fn is_integral(&self) -> bool {
        self.min_poly().has_integer_coeffs()
    }

    /// True iff the element is a unit of the ring of integers: an algebraic
    /// integer with norm +-1.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm().abs().is_one()
    }

    /// Exact sign of the real value under the chosen embedding.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return if self.coords[0].is_positive() { 1 } else { -1 };
        }
        let poly = RatPoly::new(self.coords.clone());
        let mut iv = self.field.0.root_interval.clone();
        loop {
            let img = iv.eval_poly(&poly);
            if img.lo().is_positive() {
                return 1;
            }
            if img.hi().is_negative() {
                return -1;
            }
            iv = self.field.bisect(&iv);
        }
    }

    pub fn abs(&self) -> FieldElement {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Total order given by the real embedding.
    pub fn cmp_real(&self, other: &FieldElement) -> std::cmp::Ordering {
        match self.sub(other).sign() {
            s if s < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// An interval of width at most `target` containing the real value.
    pub fn value_interval(&self, target: &Rat) -> Interval {
        if self.is_rational() {
            return Interval::point(self.coords[0].clone());
        }
        let poly = RatPoly::new(self.coords.clone());
        let mut giv = self.field.0.root_interval.clone();
        let mut img = giv.eval_poly(&poly);
        while img.width() > *target {
            giv = self.field.bisect(&giv);
            img = giv.eval_poly(&poly);
        }
        img
    }

    /// floor of the real value.
    pub fn floor(&self) -> Int {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        let mut target = Rat::new(Int::one(), Int::from(2));
        loop {
            let iv = self.value_interval(&target);
            let flo = iv.lo().floor().to_integer();
            let fhi = iv.hi().floor().to_integer();
            if flo == fhi {
                return flo;
            }
            target = target / Rat::from_integer(Int::from(16));
        }
    }

    /// Decimal rendering truncated toward zero with `digits` fractional
    /// digits, computed by exact interval refinement.
    pub fn to_decimal(&self, digits: u32) -> String {
        if let Some(r) = self.as_rational() {
            return crate::rational::render_decimal(&r, digits);
        }
        let negative = self.sign() < 0;
        let abs = if negative { self.neg() } else { self.clone() };
        let scale = Rat::from_integer(pow10(digits));
        let mut target = Rat::new(Int::one(), pow10(digits + 2));
        let truncated = loop {
            let iv = abs.value_interval(&target);
            let flo = (iv.lo() * &scale).floor().to_integer();
            let fhi = (iv.hi() * &scale).floor().to_integer();
            if flo == fhi {
                break flo;
            }
            target = target / Rat::from_integer(Int::from(16));
        };
        let scale_int = pow10(digits);
        let int_part = &truncated / &scale_int;
        let frac_part = &truncated % &scale_int;
        let body = if digits == 0 {
            int_part.to_string()
        } else {
            format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits as usize)
        };
        if negative {
            format!("-{}", body)
        } else {
            body
        }
    }
}

impl RatPoly {
    /// Does the polynomial vanish at the given field element?
    pub fn eval_is_zero_at(&self, x: &FieldElement) -> bool {
        let mut acc = x.field().zero();
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(x).add(&x.field().from_rat(c.clone()));
        }
        acc.is_zero()
    }
}

/// Characteristic polynomial det(zI - M) of a square rational matrix by
/// evaluation at n+1 points and Lagrange interpolation (exact).
pub fn char_poly(m: &RatMat) -> RatPoly {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut points = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x = Rat::from_integer(Int::from(k as i64));
        let mut a = RatMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = if i == j {
                    &x - &m[(i, j)]
                } else {
                    -m[(i, j)].clone()
                };
            }
        }
        points.push((x, a.det().expect("square")));
    }
    lagrange_interpolate(&points)
}

fn lagrange_interpolate(points: &[(Rat, Rat)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = RatPoly::new(vec![yi.clone()]);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            term = term.mul(&RatPoly::new(vec![-xj / &denom, Rat::one() / &denom]));
        }
        acc = acc.add(&term);
    }
    acc
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for k in (0..self.coords.len()).rev() {
            let c = &self.coords[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", render_rat(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", render_rat(&a))?;
                    }
                    if k == 1 {
                        write!(f, "g")?;
                    } else {
                        write!(f, "g^{}", k)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn sqrt5() -> NumberField {
        NumberField::quadratic(5).unwrap()
    }

    fn sqrt2() -> NumberField {
        NumberField::quadratic(2).unwrap()
    }

    #[test]
    fn make_field_examples() {
        let f = sqrt5();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.real_root_count(), 2);
        // chosen root is the positive one
        assert!(f.root_interval().lo() > &rat_int(0));

        let cubic = NumberField::new(IntPoly::from_i64(&[-1, 1, 0, 1]), 0).unwrap();
        assert_eq!(cubic.degree(), 3);
        assert_eq!(cubic.real_root_count(), 1);

        assert_eq!(
            NumberField::new(IntPoly::from_i64(&[-4, 0, 1]), 0),
            Err(Error::Reducible)
        );
        assert_eq!(
            NumberField::new(IntPoly::from_i64(&[-5, 0, 2]), 0),
            Err(Error::NotMonic)
        );
        assert_eq!(
            NumberField::new(IntPoly::from_i64(&[1, 0, 1]), 0),
            Err(Error::NoRealRoots)
        );
        assert!(matches!(
            NumberField::new(IntPoly::from_i64(&[-5, 0, 1]), 2),
            Err(Error::RootIndexOutOfRange { index: 2, count: 2 })
        ));
        assert!(matches!(
            NumberField::new(IntPoly::from_i64(&[-3, 1]), 0),
            Err(Error::UnsupportedDegree { got: 1, .. })
        ));
    }

    #[test]
    fn golden_ratio_cube_identity() {
        // ((1 + sqrt5)/2)^3 = 2 + sqrt5
        let f = sqrt5();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let cube = omega.mul(&omega).mul(&omega);
        let expected = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(cube, expected);
        assert_eq!(omega.pow(3).unwrap(), expected);
    }

    #[test]
    fn mul_identity_and_unit_product() {
        let f = sqrt2();
        let x = f.element(vec![rat_int(3), rat(1, 2)]).unwrap();
        assert_eq!(x.mul(&f.one()), x);
        // (1 + sqrt2)(-1 + sqrt2) = 1
        let a = f.element(vec![rat_int(1), rat_int(1)]).unwrap();
        let b = f.element(vec![rat_int(-1), rat_int(1)]).unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn inverses() {
        let f = sqrt2();
        let a = f.element(vec![rat_int(1), rat_int(1)]).unwrap();
        assert_eq!(a.inv().unwrap(), f.element(vec![rat_int(-1), rat_int(1)]).unwrap());
        assert!(f.one().inv().unwrap().is_one());
        let g5 = sqrt5();
        let u = g5.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(u.inv().unwrap(), g5.element(vec![rat_int(-2), rat_int(1)]).unwrap());
        assert_eq!(g5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(a.pow(-1).unwrap(), a.inv().unwrap());
    }

    #[test]
    fn min_poly_examples() {
        let f = sqrt5();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(omega.min_poly(), IntPoly::from_i64(&[-1, -1, 1]).to_rat());

        let f2 = sqrt2();
        let a = f2.element(vec![rat_int(1), rat_int(1)]).unwrap();
        assert_eq!(a.min_poly(), IntPoly::from_i64(&[-1, -2, 1]).to_rat());

        let three = f.from_int(3);
        assert_eq!(three.min_poly(), IntPoly::from_i64(&[-3, 1]).to_rat());

        // min poly of the generator is the field polynomial
        assert_eq!(f.generator().min_poly(), f.min_poly().to_rat());
    }

    #[test]
    fn integrality() {
        let f = sqrt5();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(omega.is_integral());
        assert!(!f.from_rat(rat(1, 2)).is_integral());
        assert!(!f.element(vec![rat_int(0), rat(1, 2)]).unwrap().is_integral());
    }

    #[test]
    fn norms() {
        let f = sqrt5();
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(u.norm(), rat_int(-1));
        assert_eq!(f.one().norm(), rat_int(1));
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(omega.norm(), rat_int(-1));
        assert!(u.is_unit());
        assert!(!f.from_int(2).is_unit()); // norm 4
    }

    #[test]
    fn quartic_unit_from_biquadratic_field() {
        // gamma = sqrt2 + sqrt3, alpha = 2*sqrt6 + 4*sqrt3 + 5*sqrt2 + 5
        let f = NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).unwrap();
        let alpha = f
            .element(vec![rat_int(0), rat(-1, 2), rat_int(1), rat(1, 2)])
            .unwrap();
        assert!(alpha.is_integral());
        assert!(alpha.is_unit());
        // (sqrt2 + sqrt6)/2 is a root of z^4 - 4z^2 + 1
        let half_sum = f
            .element(vec![rat(-5, 4), rat(-9, 4), rat(1, 4), rat(1, 4)])
            .unwrap();
        assert_eq!(half_sum.min_poly(), IntPoly::from_i64(&[1, 0, -4, 0, 1]).to_rat());
        assert!(half_sum.is_integral());
    }

    #[test]
    fn signs() {
        let f = sqrt2();
        // sqrt2 - 1 > 0
        let x = f.element(vec![rat_int(-1), rat_int(1)]).unwrap();
        assert_eq!(x.sign(), 1);
        assert_eq!(f.zero().sign(), 0);
        // golden ratio - 2 < 0
        let f5 = sqrt5();
        let y = f5.element(vec![rat(1, 2) - rat_int(2), rat(1, 2)]).unwrap();
        assert_eq!(y.sign(), -1);
        // ordering
        let a = f5.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let b = f5.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(a.cmp_real(&b), std::cmp::Ordering::Less);
    }

    #[test]
    fn decimal_rendering() {
        let f = sqrt2();
        let g = f.generator();
        assert_eq!(g.to_decimal(10), "1.4142135623");
        let neg = g.neg();
        assert_eq!(neg.to_decimal(5), "-1.41421");
        assert_eq!(f.from_rat(rat(1, 2)).to_decimal(4), "0.5000");
        assert_eq!(f.zero().to_decimal(3), "0.000");
        assert_eq!(g.floor(), Int::from(1));
        assert_eq!(neg.floor(), Int::from(-2));
    }

    #[test]
    fn display_forms() {
        let f = sqrt5();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(omega.to_string(), "1/2*g + 1/2");
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(u.to_string(), "g + 2");
        assert_eq!(f.zero().to_string(), "0");
        let m = f.element(vec![rat_int(0), rat_int(-1)]).unwrap();
        assert_eq!(m.to_string(), "-g");
    }

    #[test]
    fn field_mismatch_is_checked() {
        let a = sqrt2().one();
        let b = sqrt5().one();
        assert_eq!(ensure_same_field(&a, &b), Err(Error::FieldMismatch));
        assert!(ensure_same_field(&a, &sqrt2().generator()).is_ok());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn arithmetic_panics_across_fields() {
        let _ = sqrt2().one().add(&sqrt5().one());
    }

    #[test]
    fn char_poly_of_companion_is_field_poly() {
        let f = NumberField::new(IntPoly::from_i64(&[-1, 1, 0, 1]), 0).unwrap();
        let chi = char_poly(&f.generator().mult_matrix_power_basis());
        assert_eq!(chi, f.min_poly().to_rat());
    }
}
