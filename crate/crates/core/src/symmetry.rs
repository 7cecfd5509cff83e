//! Generalized symmetries of exact quasiperiodic flows: the correspondence
//! between multipliers alpha and unimodular matrices B through the
//! eigen-equations alpha a_i = sum_j b_ij a_j, multiplier-group reports,
//! conjugacy of flows, and a bounded brute-force enumerator.

use crate::error::{Error, Result};
use crate::field::{ensure_same_field, FieldElement, NumberField};
use crate::flow::Flow;
use crate::lattice::{mult_matrix, FieldLattice};
use crate::matrix::{integer_det, IntMat, RatMat};
use crate::probe::ProbeVerdict;
use crate::rational::{Int, Rat};
use crate::units::{maximal_quadratic_units, order_unit_index, QuadraticUnitGroup};
use num_traits::{One, Signed, Zero};

/// An integer matrix with determinant +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularMatrix {
    matrix: IntMat,
    det: i32,
}

impl UnimodularMatrix {
    pub fn new(matrix: IntMat) -> Result<UnimodularMatrix> {
        let det = integer_det(&matrix)?;
        if !det.abs().is_one() {
            return Err(Error::DependentRows);
        }
        let det = if det.is_negative() { -1 } else { 1 };
        Ok(UnimodularMatrix { matrix, det })
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn det(&self) -> i32 {
        self.det
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inverse(&self) -> UnimodularMatrix {
        let inv = self
            .matrix
            .unimodular_inverse()
            .expect("unimodular matrices invert over the integers");
        UnimodularMatrix {
            matrix: inv,
            det: self.det,
        }
    }

    pub fn mul(&self, other: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            matrix: self.matrix.mul(&other.matrix),
            det: self.det * other.det,
        }
    }
}

impl std::fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// A solved pair (B, alpha): B integer with det +-1 and
/// alpha a_i = sum_j B_ij a_j holding exactly for the flow it was built on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrySolution {
    matrix: UnimodularMatrix,
    multiplier: FieldElement,
}

impl SymmetrySolution {
    pub fn matrix(&self) -> &UnimodularMatrix {
        &self.matrix
    }

    pub fn multiplier(&self) -> &FieldElement {
        &self.multiplier
    }
}

/// Why a candidate multiplier or matrix was admitted or excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixAdmissibility {
    Admissible(UnimodularMatrix),
    /// 1-based indices of the first non-integer entry in row-major order.
    NonIntegerEntry { row: usize, col: usize, value: Rat },
    NotUnimodular { det: Int },
}

impl MatrixAdmissibility {
    pub fn admissible(&self) -> Option<&UnimodularMatrix> {
        match self {
            MatrixAdmissibility::Admissible(b) => Some(b),
            _ => None,
        }
    }
}

fn classify_rational_matrix(m: &RatMat) -> MatrixAdmissibility {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_integer() {
                return MatrixAdmissibility::NonIntegerEntry {
                    row: i + 1,
                    col: j + 1,
                    value: m[(i, j)].clone(),
                };
            }
        }
    }
    let int_rows: Vec<Vec<Int>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_integer()).collect())
        .collect();
    let b = IntMat::from_rows(int_rows);
    let det = integer_det(&b).expect("square by construction");
    if det.abs().is_one() {
        MatrixAdmissibility::Admissible(UnimodularMatrix {
            det: if det.is_negative() { -1 } else { 1 },
            matrix: b,
        })
    } else {
        MatrixAdmissibility::NotUnimodular { det }
    }
}

fn full_rank_components<'a>(flow: &'a Flow) -> Result<(&'a NumberField, &'a [FieldElement])> {
    let (field, components) = flow.exact_components()?;
    if components.len() != field.degree() {
        return Err(Error::ComponentCountMismatch {
            components: components.len(),
            degree: field.degree(),
        });
    }
    Ok((field, components))
}

/// The unique matrix B with alpha a_i = sum_j B_ij a_j, admitted iff it is
/// integer with determinant +-1; otherwise the exclusion reason.
pub fn multiplier_matrix(flow: &Flow, alpha: &FieldElement) -> Result<MatrixAdmissibility> {
    let (_, components) = full_rank_components(flow)?;
    ensure_same_field(alpha, &components[0])?;
    let m = mult_matrix(alpha, components)?;
    Ok(classify_rational_matrix(&m))
}

/// Outcome of reading the eigen-equations backwards from a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplierOfMatrix {
    Admissible(SymmetrySolution),
    /// 1-based index of the first component equation that fails.
    Inconsistent { row: usize },
    NotUnimodular { det: Int },
}

impl MultiplierOfMatrix {
    pub fn admissible(&self) -> Option<&SymmetrySolution> {
        match self {
            MultiplierOfMatrix::Admissible(s) => Some(s),
            _ => None,
        }
    }
}

/// alpha = (sum_j B_1j a_j) / a_1 when all n equations hold and
/// det B = +-1; otherwise the rejection reason.
pub fn multiplier_of_matrix(flow: &Flow, b: &IntMat) -> Result<MultiplierOfMatrix> {
    let (field, components) = full_rank_components(flow)?;
    let n = components.len();
    if b.rows() != n || b.cols() != n {
        return Err(Error::ShapeMismatch);
    }
    let combo = |i: usize| -> FieldElement {
        let mut acc = field.zero();
        for (j, a) in components.iter().enumerate() {
            if b[(i, j)].is_zero() {
                continue;
            }
            acc = acc.add(&a.scale(&Rat::from_integer(b[(i, j)].clone())));
        }
        acc
    };
    let alpha = combo(0)
        .div(&components[0])
        .expect("flow components are nonzero");
    for i in 0..n {
        if alpha.mul(&components[i]) != combo(i) {
            return Ok(MultiplierOfMatrix::Inconsistent { row: i + 1 });
        }
    }
    let det = integer_det(b)?;
    if !det.abs().is_one() {
        return Ok(MultiplierOfMatrix::NotUnimodular { det });
    }
    Ok(MultiplierOfMatrix::Admissible(SymmetrySolution {
        matrix: UnimodularMatrix {
            matrix: b.clone(),
            det: if det.is_negative() { -1 } else { 1 },
        },
        multiplier: alpha,
    }))
}

/// The solved pair for a multiplier that is admitted, or None.
pub fn solution_for(flow: &Flow, alpha: &FieldElement) -> Result<Option<SymmetrySolution>> {
    Ok(multiplier_matrix(flow, alpha)?
        .admissible()
        .map(|b| SymmetrySolution {
            matrix: b.clone(),
            multiplier: alpha.clone(),
        }))
}

/// Description of the multiplier group rho(S) of an exact flow.
#[derive(Debug, Clone)]
pub enum MultiplierReport {
    /// Degree 2: the group is exactly {+-g^m} with g = eps^index.
    QuadraticFull {
        order: FieldLattice,
        generator: SymmetrySolution,
        index_in_maximal: u32,
        ambient: QuadraticUnitGroup,
    },
    /// Degree >= 3: verified members only; completeness is not claimed.
    MembershipOnly {
        order: FieldLattice,
        members: Vec<SymmetrySolution>,
        excluded: Vec<(FieldElement, MatrixAdmissibility)>,
    },
    /// Numeric flow: bounded probe evidence, the group is {1, -1} within
    /// the reported bounds.
    TrivialNumeric { probe: ProbeVerdict },
}

/// Multiplier group of an exact full-rank flow. For quadratic fields the
/// description is complete (generator plus index in the maximal order's
/// units); for degree >= 3 the report verifies +-1 and the supplied
/// candidates only.
pub fn multiplier_group(flow: &Flow) -> Result<MultiplierReport> {
    multiplier_group_with_candidates(flow, &[])
}

pub fn multiplier_group_with_candidates(
    flow: &Flow,
    candidates: &[FieldElement],
) -> Result<MultiplierReport> {
    let (field, components) = full_rank_components(flow)?;
    let lattice = FieldLattice::new(field, components)?;
    let order = lattice.coefficient_order()?;
    if field.degree() == 2 {
        let (generator, index) = order_unit_index(&order)?;
        let ambient = maximal_quadratic_units(field)?;
        let solution = solution_for(flow, &generator)?
            .expect("the unit group generator of the coefficient order is a multiplier");
        return Ok(MultiplierReport::QuadraticFull {
            order,
            generator: solution,
            index_in_maximal: index,
            ambient,
        });
    }
    let mut members = vec![
        solution_for(flow, &field.one())?.expect("identity is always a symmetry"),
        solution_for(flow, &field.one().neg())?.expect("-identity is always a symmetry"),
    ];
    let mut excluded = Vec::new();
    for cand in candidates {
        ensure_same_field(cand, &components[0])?;
        match multiplier_matrix(flow, cand)? {
            MatrixAdmissibility::Admissible(b) => {
                members.push(SymmetrySolution {
                    matrix: b,
                    multiplier: cand.clone(),
                });
            }
            reason => excluded.push((cand.clone(), reason)),
        }
    }
    members.sort_by(|a, b| a.multiplier.cmp_real(&b.multiplier));
    members.dedup_by(|a, b| a.multiplier == b.multiplier);
    debug_assert!(members.iter().all(|s| s.multiplier.is_unit()));
    Ok(MultiplierReport::MembershipOnly {
        order,
        members,
        excluded,
    })
}

const ENUMERATION_GUARD: u128 = 100_000_000;

/// Exact determinant of a small integer matrix in machine words
/// (fraction-free elimination; entries at enumeration scale cannot
/// overflow i128).
fn det_small(n: usize, entries: &[i64]) -> i128 {
    let mut a: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
    let mut prev: i128 = 1;
    let mut sign = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return 0;
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    sign * a[n * n - 1]
}

/// Brute-force oracle: every B with entries in [-bound, bound], det +-1,
/// and consistent eigen-equations, deduplicated by multiplier and sorted
/// ascending by the real embedding of the multiplier.
pub fn enumerate_multipliers_bounded(flow: &Flow, bound: i64) -> Result<Vec<SymmetrySolution>> {
    let (field, components) = full_rank_components(flow)?;
    if bound < 0 {
        return Err(Error::GuardExceeded { bound, n: flow.dim() });
    }
    let n = components.len();
    let cells = n * n;
    let base = (2 * bound + 1) as u128;
    let mut size: u128 = 1;
    for _ in 0..cells {
        size = size.saturating_mul(base);
        if size > ENUMERATION_GUARD {
            return Err(Error::GuardExceeded { bound, n });
        }
    }

    let a1_inv = components[0].inv().expect("components are nonzero");
    let mut entries = vec![-bound; cells];
    let mut out: Vec<SymmetrySolution> = Vec::new();
    'matrices: loop {
        if n == 1 || det_small(n, &entries).unsigned_abs() == 1 {
            // candidate multiplier from the first row
            let mut top = field.zero();
            for (j, a) in components.iter().enumerate() {
                let e = entries[j];
                if e != 0 {
                    top = top.add(&a.scale(&Rat::from_integer(Int::from(e))));
                }
            }
            let alpha = top.mul(&a1_inv);
            let mut consistent = true;
            for i in 1..n {
                let mut rhs = field.zero();
                for (j, a) in components.iter().enumerate() {
                    let e = entries[i * n + j];
                    if e != 0 {
                        rhs = rhs.add(&a.scale(&Rat::from_integer(Int::from(e))));
                    }
                }
                if alpha.mul(&components[i]) != rhs {
                    consistent = false;
                    break;
                }
            }
            if consistent {
                let rows: Vec<Vec<Int>> = (0..n)
                    .map(|i| (0..n).map(|j| Int::from(entries[i * n + j])).collect())
                    .collect();
                let b = UnimodularMatrix::new(IntMat::from_rows(rows))
                    .expect("determinant checked above");
                out.push(SymmetrySolution {
                    matrix: b,
                    multiplier: alpha,
                });
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == cells {
                break 'matrices;
            }
            entries[i] += 1;
            if entries[i] <= bound {
                break;
            }
            entries[i] = -bound;
            i += 1;
        }
    }
    out.sort_by(|a, b| a.multiplier.cmp_real(&b.multiplier));
    out.dedup_by(|a, b| a.multiplier == b.multiplier);
    Ok(out)
}

/// The forced linear map B with B (a-components) = (omega-components),
/// admitted iff integer and unimodular; conjugate flows have identical
/// multiplier groups.
pub fn conjugacy_matrix(flow1: &Flow, flow2: &Flow) -> Result<MatrixAdmissibility> {
    let (field1, comp1) = full_rank_components(flow1)?;
    let (field2, comp2) = full_rank_components(flow2)?;
    if field1 != field2 {
        return Err(Error::FieldMismatch);
    }
    if comp1.len() != comp2.len() {
        return Err(Error::ShapeMismatch);
    }
    let a = RatMat::from_rows(comp1.iter().map(|e| e.coords().to_vec()).collect());
    let omega = RatMat::from_rows(comp2.iter().map(|e| e.coords().to_vec()).collect());
    let b = omega.mul(&a.inverse().map_err(|_| Error::DependentComponents)?);
    Ok(classify_rational_matrix(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::rational::{int, rat, rat_int};

    fn flow_1_sqrt5() -> Flow {
        let f = NumberField::quadratic(5).unwrap();
        Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap()
    }

    fn flow_silver() -> Flow {
        // (1, 1 + sqrt2)
        let f = NumberField::quadratic(2).unwrap();
        let a2 = f.element(vec![rat_int(1), rat_int(1)]).unwrap();
        Flow::exact(&f, vec![f.one(), a2], None).unwrap()
    }

    fn cubic_flow() -> Flow {
        // (b^2, b, 1) for b the real root of z^3 - z^2 - 1
        let f = NumberField::new(IntPoly::from_i64(&[-1, 0, -1, 1]), 0).unwrap();
        let b = f.generator();
        Flow::exact(&f, vec![b.mul(&b), b.clone(), f.one()], None).unwrap()
    }

    #[test]
    fn motivating_example_matrix() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        let alpha = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        let b = multiplier_matrix(&flow, &alpha).unwrap();
        let b = b.admissible().expect("2 + sqrt5 is a multiplier");
        assert_eq!(b.matrix(), &IntMat::from_i64(&[&[2, 1], &[5, 2]]));
        assert_eq!(b.det(), -1);
    }

    #[test]
    fn golden_ratio_is_excluded() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        match multiplier_matrix(&flow, &omega).unwrap() {
            MatrixAdmissibility::NonIntegerEntry { row: 1, col: 1, value } => {
                assert_eq!(value, rat(1, 2));
            }
            other => panic!("expected a non-integer entry, got {other:?}"),
        }
    }

    #[test]
    fn non_unit_is_excluded_by_determinant() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        match multiplier_matrix(&flow, &f.from_int(2)).unwrap() {
            MatrixAdmissibility::NotUnimodular { det } => assert_eq!(det, int(4)),
            other => panic!("expected det rejection, got {other:?}"),
        }
    }

    #[test]
    fn silver_example_matrix() {
        let flow = flow_silver();
        let f = flow.field().unwrap();
        let alpha = f.element(vec![rat_int(1), rat_int(1)]).unwrap();
        let b = multiplier_matrix(&flow, &alpha).unwrap();
        let b = b.admissible().unwrap();
        assert_eq!(b.matrix(), &IntMat::from_i64(&[&[0, 1], &[1, 2]]));
        assert_eq!(b.det(), -1);
    }

    #[test]
    fn multiplier_of_matrix_examples() {
        let flow = cubic_flow();
        let f = flow.field().unwrap();
        let b = IntMat::from_i64(&[&[3, 1, 2], &[2, 1, 1], &[1, 1, 1]]);
        let sol = multiplier_of_matrix(&flow, &b).unwrap();
        let sol = sol.admissible().unwrap();
        // multiplier is b^2 + b + 1
        assert_eq!(
            *sol.multiplier(),
            f.element(vec![rat_int(1), rat_int(1), rat_int(1)]).unwrap()
        );
        assert_eq!(sol.matrix().det(), 1);

        // identity and negated identity
        let id = multiplier_of_matrix(&flow, &IntMat::identity(3)).unwrap();
        assert!(id.admissible().unwrap().multiplier().is_one());
        let neg = multiplier_of_matrix(&flow, &IntMat::identity(3).neg()).unwrap();
        assert_eq!(
            *neg.admissible().unwrap().multiplier(),
            f.one().neg()
        );
    }

    #[test]
    fn inconsistent_matrix_detected() {
        let f = NumberField::quadratic(2).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        let b = IntMat::from_i64(&[&[1, 1], &[0, 1]]);
        match multiplier_of_matrix(&flow, &b).unwrap() {
            MultiplierOfMatrix::Inconsistent { row: 2 } => {}
            other => panic!("expected inconsistency in row 2, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_between_matrix_and_multiplier() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        for exp in -4i64..=4 {
            for sgn in [1i64, -1] {
                let alpha = u.pow(exp).unwrap().scale(&rat(sgn, 1));
                let b = multiplier_matrix(&flow, &alpha)
                    .unwrap()
                    .admissible()
                    .cloned()
                    .expect("powers of the generator are multipliers");
                let back = multiplier_of_matrix(&flow, b.matrix()).unwrap();
                assert_eq!(*back.admissible().unwrap().multiplier(), alpha);
            }
        }
    }

    #[test]
    fn group_law_and_commutation() {
        let flow = flow_silver();
        let f = flow.field().unwrap();
        let eps = f.element(vec![rat_int(1), rat_int(1)]).unwrap();
        let s1 = solution_for(&flow, &eps).unwrap().unwrap();
        let s2 = solution_for(&flow, &eps.pow(2).unwrap()).unwrap().unwrap();
        // product of solutions is the solution of the product
        let prod = solution_for(&flow, &eps.pow(3).unwrap()).unwrap().unwrap();
        assert_eq!(s1.matrix().mul(s2.matrix()), *prod.matrix());
        assert_eq!(s2.matrix().mul(s1.matrix()), *prod.matrix());
        // inverse law
        let inv = solution_for(&flow, &eps.inv().unwrap()).unwrap().unwrap();
        assert_eq!(s1.matrix().inverse(), *inv.matrix());
    }

    #[test]
    fn multiplier_group_quadratic() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        match multiplier_group(&flow).unwrap() {
            MultiplierReport::QuadraticFull {
                generator,
                index_in_maximal,
                ambient,
                ..
            } => {
                assert_eq!(
                    *generator.multiplier(),
                    f.element(vec![rat_int(2), rat_int(1)]).unwrap()
                );
                assert_eq!(index_in_maximal, 3);
                assert_eq!(
                    *ambient.fundamental_unit(),
                    f.element(vec![rat(1, 2), rat(1, 2)]).unwrap()
                );
            }
            other => panic!("expected a full quadratic report, got {other:?}"),
        }
    }

    #[test]
    fn multiplier_group_integral_basis_flows() {
        // (1, sqrt2): generator 1 + sqrt2, index 1
        let f = NumberField::quadratic(2).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        match multiplier_group(&flow).unwrap() {
            MultiplierReport::QuadraticFull {
                generator,
                index_in_maximal,
                ..
            } => {
                assert_eq!(
                    *generator.multiplier(),
                    f.element(vec![rat_int(1), rat_int(1)]).unwrap()
                );
                assert_eq!(index_in_maximal, 1);
            }
            other => panic!("unexpected report {other:?}"),
        }
        // (1, (1+sqrt5)/2): generator the golden ratio, index 1
        let f5 = NumberField::quadratic(5).unwrap();
        let omega = f5.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let flow5 = Flow::exact(&f5, vec![f5.one(), omega.clone()], None).unwrap();
        match multiplier_group(&flow5).unwrap() {
            MultiplierReport::QuadraticFull {
                generator,
                index_in_maximal,
                ..
            } => {
                assert_eq!(*generator.multiplier(), omega);
                assert_eq!(index_in_maximal, 1);
            }
            other => panic!("unexpected report {other:?}"),
        }
    }

    #[test]
    fn multiplier_group_membership_only_for_cubic() {
        let flow = cubic_flow();
        let f = flow.field().unwrap();
        let beta = f.generator();
        match multiplier_group_with_candidates(&flow, &[beta.clone(), f.from_int(2)]).unwrap() {
            MultiplierReport::MembershipOnly {
                members, excluded, ..
            } => {
                // +-1 and beta admitted; 2 excluded (norm 8)
                assert!(members.iter().any(|s| s.multiplier().is_one()));
                assert!(members.iter().any(|s| *s.multiplier() == f.one().neg()));
                assert!(members.iter().any(|s| *s.multiplier() == beta));
                assert_eq!(excluded.len(), 1);
                assert!(matches!(
                    excluded[0].1,
                    MatrixAdmissibility::NotUnimodular { .. }
                ));
                // sorted ascending by embedding
                for w in members.windows(2) {
                    assert_eq!(
                        w[0].multiplier().cmp_real(w[1].multiplier()),
                        std::cmp::Ordering::Less
                    );
                }
            }
            other => panic!("unexpected report {other:?}"),
        }
    }

    #[test]
    fn enumeration_bound_five_on_sqrt5() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        let sols = enumerate_multipliers_bounded(&flow, 5).unwrap();
        let u = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        let expected: Vec<FieldElement> = {
            let mut v = vec![
                f.one(),
                f.one().neg(),
                u.clone(),
                u.neg(),
                u.inv().unwrap(),
                u.inv().unwrap().neg(),
            ];
            v.sort_by(|a, b| a.cmp_real(b));
            v
        };
        let got: Vec<FieldElement> = sols.iter().map(|s| s.multiplier().clone()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_bound_one_only_trivial() {
        let flow = flow_1_sqrt5();
        let sols = enumerate_multipliers_bounded(&flow, 1).unwrap();
        let mults: Vec<String> = sols.iter().map(|s| s.multiplier().to_string()).collect();
        assert_eq!(mults, vec!["-1", "1"]);
    }

    #[test]
    fn enumeration_guard() {
        let flow = cubic_flow();
        assert!(matches!(
            enumerate_multipliers_bounded(&flow, 4),
            Err(Error::GuardExceeded { .. })
        ));
        // bound 0 passes the guard and yields nothing
        assert!(enumerate_multipliers_bounded(&flow, 0).unwrap().is_empty());
    }

    #[test]
    fn conjugacy_examples() {
        // X = (1, 1 + sqrt2) -> Y = (1, sqrt2) via [[1, 0], [-1, 1]]
        let f = NumberField::quadratic(2).unwrap();
        let x = flow_silver();
        let y = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        let v = conjugacy_matrix(&x, &y).unwrap();
        assert_eq!(
            v.admissible().unwrap().matrix(),
            &IntMat::from_i64(&[&[1, 0], &[-1, 1]])
        );
        // a flow is conjugate to itself by the identity
        let idm = conjugacy_matrix(&y, &y).unwrap();
        assert_eq!(idm.admissible().unwrap().matrix(), &IntMat::identity(2));
        // X = (1, sqrt5) -> Y = (2, sqrt5): forced diag(2, 1), det 2
        let f5 = NumberField::quadratic(5).unwrap();
        let a = Flow::exact(&f5, vec![f5.one(), f5.generator()], None).unwrap();
        let b = Flow::exact(&f5, vec![f5.from_int(2), f5.generator()], None).unwrap();
        match conjugacy_matrix(&a, &b).unwrap() {
            MatrixAdmissibility::NotUnimodular { det } => assert_eq!(det, int(2)),
            other => panic!("expected det 2 rejection, got {other:?}"),
        }
        assert_eq!(conjugacy_matrix(&a, &x), Err(Error::FieldMismatch));
    }

    #[test]
    fn scale_invariance_of_multiplier_matrix() {
        let flow = flow_1_sqrt5();
        let f = flow.field().unwrap();
        let alpha = f.element(vec![rat_int(2), rat_int(1)]).unwrap();
        let reference = multiplier_matrix(&flow, &alpha).unwrap();
        let mu = f.element(vec![rat(3, 7), rat_int(2)]).unwrap();
        let scaled: Vec<FieldElement> = flow
            .components()
            .unwrap()
            .iter()
            .map(|a| a.mul(&mu))
            .collect();
        let scaled_flow = Flow::exact(&f, scaled, None).unwrap();
        assert_eq!(multiplier_matrix(&scaled_flow, &alpha).unwrap(), reference);
    }

    #[test]
    fn numeric_flows_are_rejected() {
        let flow = Flow::numeric(vec!["1".into(), "3.14159265358979".into()], None).unwrap();
        let f = NumberField::quadratic(2).unwrap();
        assert_eq!(
            multiplier_matrix(&flow, &f.one()),
            Err(Error::NumericFlow)
        );
        assert_eq!(multiplier_group(&flow).err(), Some(Error::NumericFlow));
    }

    #[test]
    fn cross_degree_flows_are_rejected_by_multiplier_ops() {
        let f = NumberField::new(IntPoly::from_i64(&[-2, 0, 0, 1]), 0).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        assert!(matches!(
            multiplier_group(&flow),
            Err(Error::ComponentCountMismatch { components: 2, degree: 3 })
        ));
    }
}
