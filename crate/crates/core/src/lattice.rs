//! Full-rank Z-lattices inside a number field, with a canonical
//! denominator-scaled Hermite normal form for bit-exact equality tests,
//! membership, intersection, and coefficient orders.

use crate::error::{Error, Result};
use crate::field::{ensure_same_field, FieldElement, NumberField};
use crate::matrix::{hnf, left_kernel, IntMat, RatMat};
use crate::rational::{Int, Rat};
use num_integer::Integer;
use num_traits::Zero;

/// A full-rank Z-lattice L in a number field F, stored via its minimal
/// denominator D (the smallest positive integer with D*L inside Z^n) and
/// the canonical HNF basis of the integer lattice D*L. Two lattices are
/// equal iff these canonical data agree.
#[derive(Debug, Clone)]
pub struct FieldLattice {
    field: NumberField,
    basis: Vec<FieldElement>,
    denominator: Int,
    hnf_basis: IntMat,
}

impl PartialEq for FieldLattice {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.denominator == other.denominator
            && self.hnf_basis == other.hnf_basis
    }
}

impl Eq for FieldLattice {}

impl FieldLattice {
    /// Lattice spanned by the given elements; they must generate a
    /// full-rank lattice (rank = field degree).
    pub fn new(field: &NumberField, generators: &[FieldElement]) -> Result<FieldLattice> {
        if generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        for g in generators {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let n = field.degree();
        let coord_rows: Vec<Vec<Rat>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        let (den, scaled) = RatMat::from_rows(coord_rows).scaled_integer();
        let h = hnf(&scaled.row_vecs())?;
        if (0..n).any(|i| h[(i, i)].is_zero()) {
            return Err(Error::RankDeficient);
        }
        let den_rat = Rat::from_integer(den.clone());
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let coords: Vec<Rat> = h
                .row(i)
                .iter()
                .map(|x| Rat::from_integer(x.clone()) / &den_rat)
                .collect();
            basis.push(field.element(coords)?);
        }
        Ok(FieldLattice {
            field: field.clone(),
            basis,
            denominator: den,
            hnf_basis: h,
        })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Canonical HNF basis, as field elements.
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    pub fn hnf_basis(&self) -> &IntMat {
        &self.hnf_basis
    }

    /// Is x an integer combination of the basis?
    pub fn contains(&self, x: &FieldElement) -> Result<bool> {
        ensure_same_field(x, &self.basis[0])?;
        let den_rat = Rat::from_integer(self.denominator.clone());
        let mut w: Vec<Int> = Vec::with_capacity(x.coords().len());
        for c in x.coords() {
            let scaled = c * &den_rat;
            if !scaled.is_integer() {
                return Ok(false);
            }
            w.push(scaled.to_integer());
        }
        // reduce against the upper-triangular staircase
        let n = w.len();
        for i in 0..n {
            let pivot = &self.hnf_basis[(i, i)];
            if (&w[i] % pivot).is_zero() {
                let q = &w[i] / pivot;
                if !q.is_zero() {
                    for j in i..n {
                        let t = &q * &self.hnf_basis[(i, j)];
                        w[j] -= t;
                    }
                }
            } else {
                return Ok(false);
            }
        }
        Ok(w.iter().all(|v| v.is_zero()))
    }

    /// Lattice intersection via an integer kernel computation on the
    /// common-denominator scalings.
    pub fn intersect(&self, other: &FieldLattice) -> Result<FieldLattice> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.field.degree();
        let d = self.denominator.lcm(&other.denominator);
        let f1 = &d / &self.denominator;
        let f2 = &d / &other.denominator;
        let mut stacked: Vec<Vec<Int>> = Vec::with_capacity(2 * n);
        for i in 0..n {
            stacked.push(self.hnf_basis.row(i).iter().map(|x| x * &f1).collect());
        }
        for i in 0..n {
            stacked.push(other.hnf_basis.row(i).iter().map(|x| -(x * &f2)).collect());
        }
        let kernel = left_kernel(&IntMat::from_rows(stacked));
        let d_rat = Rat::from_integer(d);
        let mut elems = Vec::with_capacity(kernel.len());
        for w in kernel {
            let mut coords = vec![Rat::zero(); n];
            for (i, u) in w[..n].iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    coords[j] += Rat::from_integer(u * &self.hnf_basis[(i, j)] * &f1) / &d_rat;
                }
            }
            elems.push(self.field.element(coords)?);
        }
        FieldLattice::new(&self.field, &elems)
    }

    /// Multiplies every basis element by the (nonzero) factor.
    pub fn mul_element(&self, factor: &FieldElement) -> Result<FieldLattice> {
        let elems: Vec<FieldElement> = self.basis.iter().map(|b| b.mul(factor)).collect();
        FieldLattice::new(&self.field, &elems)
    }

    /// The coefficient order O = { x in F : x * L inside L }, a ring
    /// containing 1, computed by intersecting the lattices a_i^{-1} * L.
    pub fn coefficient_order(&self) -> Result<FieldLattice> {
        let mut acc: Option<FieldLattice> = None;
        for a in &self.basis {
            let ainv = a.inv()?;
            let li = self.mul_element(&ainv)?;
            acc = Some(match acc {
                None => li,
                Some(o) => o.intersect(&li)?,
            });
        }
        let order = acc.expect("lattice basis is nonempty");
        debug_assert!(order.contains(&self.field.one()).unwrap());
        Ok(order)
    }
}

/// Coordinates of x in the given (not necessarily full) independent set,
/// when x lies in its rational span.
pub fn coords_in_basis(x: &FieldElement, basis: &[FieldElement]) -> Result<Option<Vec<Rat>>> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    for b in basis {
        ensure_same_field(x, b)?;
    }
    let a = RatMat::from_rows(basis.iter().map(|e| e.coords().to_vec()).collect());
    match a.solve_left(x.coords()) {
        Ok(sol) => Ok(sol),
        Err(Error::DependentRows) => Err(Error::DependentBasis),
        Err(e) => Err(e),
    }
}

/// The unique rational matrix M with x * a_i = sum_j M_ij a_j for a full
/// basis {a_i} of the field containing x.
pub fn mult_matrix(x: &FieldElement, basis: &[FieldElement]) -> Result<RatMat> {
    let n = x.field().degree();
    if basis.len() != n {
        return Err(Error::DependentBasis);
    }
    for b in basis {
        ensure_same_field(x, b)?;
    }
    let a = RatMat::from_rows(basis.iter().map(|e| e.coords().to_vec()).collect());
    let ainv = a.inverse().map_err(|_| Error::DependentBasis)?;
    let mx = x.mult_matrix_power_basis();
    Ok(a.mul(&mx).mul(&ainv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::rational::{rat, rat_int};

    fn sqrt5() -> NumberField {
        NumberField::quadratic(5).unwrap()
    }

    fn sqrt2() -> NumberField {
        NumberField::quadratic(2).unwrap()
    }

    fn z_sqrt5(f: &NumberField) -> FieldLattice {
        FieldLattice::new(f, &[f.one(), f.generator()]).unwrap()
    }

    #[test]
    fn mult_matrix_paper_examples() {
        let f = sqrt5();
        let basis = [f.one(), f.generator()];
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        let m = mult_matrix(&u, &basis).unwrap();
        assert_eq!(m.row_vecs(), vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(5), rat_int(2)],
        ]);
        let one = mult_matrix(&f.one(), &basis).unwrap();
        assert_eq!(one, RatMat::identity(2));
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let mo = mult_matrix(&omega, &basis).unwrap();
        assert_eq!(mo.row_vecs(), vec![
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(5, 2), rat(1, 2)],
        ]);
    }

    #[test]
    fn mult_matrix_rejects_bad_bases() {
        let f = sqrt5();
        let dep = [f.one(), f.from_int(3)];
        assert_eq!(
            mult_matrix(&f.generator(), &dep),
            Err(Error::DependentBasis)
        );
        let other = sqrt2();
        assert_eq!(
            mult_matrix(&other.generator(), &[f.one(), f.generator()]),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn membership() {
        let f = sqrt5();
        let l = z_sqrt5(&f);
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        assert!(l.contains(&u).unwrap());
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(!l.contains(&omega).unwrap());
        assert!(l.contains(&f.zero()).unwrap());
    }

    #[test]
    fn canonical_equality() {
        let f = sqrt5();
        // {1, sqrt5} and {1 + sqrt5, sqrt5} span the same lattice
        let a = z_sqrt5(&f);
        let b = FieldLattice::new(
            &f,
            &[
                f.element(vec![rat_int(1), rat_int(1)]).unwrap(),
                f.generator(),
            ],
        )
        .unwrap();
        assert_eq!(a, b);
        // scaled lattice is different
        let c = FieldLattice::new(
            &f,
            &[f.from_rat(rat(1, 2)), f.generator()],
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rank_deficiency_rejected() {
        let f = sqrt5();
        assert_eq!(
            FieldLattice::new(&f, &[f.one(), f.from_int(7)]),
            Err(Error::RankDeficient)
        );
        assert_eq!(FieldLattice::new(&f, &[]), Err(Error::EmptyInput));
    }

    #[test]
    fn coefficient_order_of_z_sqrt5_is_itself() {
        let f = sqrt5();
        let l = z_sqrt5(&f);
        let o = l.coefficient_order().unwrap();
        assert_eq!(o, l);
        // and (1+sqrt5)/2 stabilizes only the maximal order
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(!o.contains(&omega).unwrap());
        let maximal = FieldLattice::new(&f, &[f.one(), omega.clone()]).unwrap();
        let om = maximal.coefficient_order().unwrap();
        assert_eq!(om, maximal);
        assert!(om.contains(&omega).unwrap());
    }

    #[test]
    fn coefficient_order_is_scale_invariant() {
        let f = sqrt2();
        let l = FieldLattice::new(&f, &[f.one(), f.generator()]).unwrap();
        let scaled = l.mul_element(&f.from_rat(rat(1, 3))).unwrap();
        assert_eq!(
            scaled.coefficient_order().unwrap(),
            l.coefficient_order().unwrap()
        );
        // scaling by a nonzero field element also preserves the order
        let mu = f.element(vec![rat(2, 3), rat_int(1)]).unwrap();
        let scaled2 = l.mul_element(&mu).unwrap();
        assert_eq!(
            scaled2.coefficient_order().unwrap(),
            l.coefficient_order().unwrap()
        );
    }

    #[test]
    fn coefficient_order_is_a_ring() {
        let f = sqrt5();
        let l = z_sqrt5(&f);
        let o = l.coefficient_order().unwrap();
        assert!(o.contains(&f.one()).unwrap());
        for a in o.basis() {
            for b in o.basis() {
                assert!(o.contains(&a.mul(b)).unwrap());
            }
        }
    }

    #[test]
    fn intersection_is_contained_in_both() {
        let f = sqrt5();
        let a = z_sqrt5(&f);
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let b = FieldLattice::new(&f, &[f.one(), omega]).unwrap();
        let c = a.intersect(&b).unwrap();
        for e in c.basis() {
            assert!(a.contains(e).unwrap());
            assert!(b.contains(e).unwrap());
        }
        // Z[sqrt5] is inside Z[omega], so the intersection is Z[sqrt5]
        assert_eq!(c, a);
    }

    #[test]
    fn coords_in_partial_basis() {
        let f = NumberField::new(crate::poly::IntPoly::from_i64(&[-1, 1, 0, 1]), 0).unwrap();
        let g = f.generator();
        let span = [f.one(), g.clone()];
        let x = f.element(vec![rat_int(2), rat_int(-3), rat_int(0)]).unwrap();
        assert_eq!(
            coords_in_basis(&x, &span).unwrap(),
            Some(vec![rat_int(2), rat_int(-3)])
        );
        let gsq = g.mul(&g);
        assert_eq!(coords_in_basis(&gsq, &span).unwrap(), None);
    }
}
