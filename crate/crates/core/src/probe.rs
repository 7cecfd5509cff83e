//! Numeric evidence engine: minimal-polynomial reconstruction from
//! high-precision decimals via LLL relation lattices, and the bounded
//! exclusion of nontrivial T^2 symmetries for suspected-transcendental
//! flows. Verdicts are auditable evidence, never proof.

use crate::error::{Error, Result};
use crate::lll::lll_reduce;
use crate::poly::IntPoly;
use crate::rational::{parse_decimal, pow10, Int, Rat};
use num_traits::{One, Signed, Zero};

pub const DEFAULT_MAX_DEGREE: u32 = 8;
pub const DEFAULT_HEIGHT_BOUND: u64 = 1_000_000_000_000;
pub const DEFAULT_PRECISION_DIGITS: u32 = 100;

/// The search bounds a verdict was produced under; always reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeBounds {
    pub max_degree: u32,
    pub height_bound: u64,
    pub precision_digits: u32,
}

/// Outcome of a relation search. `RelationFound` carries an integer
/// polynomial annihilating the input to working precision; `NoRelation`
/// is bounded evidence only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeVerdict {
    RelationFound {
        witness: IntPoly,
        bounds: ProbeBounds,
    },
    NoRelation {
        bounds: ProbeBounds,
    },
}

impl ProbeVerdict {
    pub fn bounds(&self) -> &ProbeBounds {
        match self {
            ProbeVerdict::RelationFound { bounds, .. } => bounds,
            ProbeVerdict::NoRelation { bounds } => bounds,
        }
    }

    pub fn witness(&self) -> Option<&IntPoly> {
        match self {
            ProbeVerdict::RelationFound { witness, .. } => Some(witness),
            ProbeVerdict::NoRelation { .. } => None,
        }
    }

    /// A degree-one witness means the input is (to working precision) a
    /// rational number, so the flow it came from is not quasiperiodic.
    pub fn is_degenerate_rational(&self) -> bool {
        self.witness().is_some_and(|w| w.degree() == Some(1))
    }
}

fn check_bounds(max_degree: u32, height_bound: u64, precision_digits: u32) -> Result<()> {
    if max_degree == 0 {
        return Err(Error::ZeroDegreeBound);
    }
    if height_bound == 0 {
        return Err(Error::ZeroHeightBound);
    }
    if precision_digits < 10 * max_degree {
        return Err(Error::InsufficientPrecision {
            need: 10 * max_degree,
            got: precision_digits,
        });
    }
    Ok(())
}

/// Candidate relation accepted iff |p(x)| < 10^-(precision/2) and
/// height(p) <= height_bound; both are printed with every verdict.
fn acceptable(p: &IntPoly, x: &Rat, threshold: &Rat, height_bound: &Int) -> bool {
    match p.degree() {
        None | Some(0) => false,
        _ => p.height() <= *height_bound && p.to_rat().eval(x).abs() < *threshold,
    }
}

/// Searches for an integer polynomial of degree <= max_degree and height
/// <= height_bound annihilating x to working precision, degrees ascending;
/// within a degree the smallest-height witness wins.
pub fn minpoly_from_rational(
    x: &Rat,
    max_degree: u32,
    height_bound: u64,
    precision_digits: u32,
) -> Result<ProbeVerdict> {
    check_bounds(max_degree, height_bound, precision_digits)?;
    let bounds = ProbeBounds {
        max_degree,
        height_bound,
        precision_digits,
    };
    let scale = Rat::from_integer(pow10(precision_digits));
    let threshold = Rat::new(Int::one(), pow10(precision_digits / 2));
    let height_int = Int::from(height_bound);

    let mut powers: Vec<Rat> = vec![Rat::one()];
    for _ in 1..=max_degree {
        powers.push(powers.last().unwrap() * x);
    }

    for d in 1..=max_degree as usize {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(d + 1);
        for (i, power) in powers.iter().take(d + 1).enumerate() {
            let mut row = vec![Int::zero(); d + 2];
            row[i] = Int::one();
            row[d + 1] = (power * &scale).round().to_integer();
            rows.push(row);
        }
        let reduced = lll_reduce(&rows)?;
        let mut candidates: Vec<IntPoly> = Vec::new();
        for v in &reduced {
            let poly = IntPoly::new(v[..=d].to_vec()).primitive_part();
            if acceptable(&poly, x, &threshold, &height_int) {
                candidates.push(poly);
            }
        }
        if !candidates.is_empty() {
            candidates.sort_by(|a, b| {
                (a.height(), a.degree(), a.coeffs().to_vec())
                    .cmp(&(b.height(), b.degree(), b.coeffs().to_vec()))
            });
            return Ok(ProbeVerdict::RelationFound {
                witness: candidates.remove(0),
                bounds,
            });
        }
    }
    Ok(ProbeVerdict::NoRelation { bounds })
}

/// Decimal-string front end (decimals are exact rationals on the boundary).
pub fn minpoly_from_decimal(
    x: &str,
    max_degree: u32,
    height_bound: u64,
    precision_digits: u32,
) -> Result<ProbeVerdict> {
    let value = parse_decimal(x)?;
    minpoly_from_rational(&value, max_degree, height_bound, precision_digits)
}

/// T^2 symmetry probe for the flow (1, x): a generalized symmetry with
/// matrix (b_ij) forces b12 x^2 + (b11 - b22) x - b21 = 0, so a nontrivial
/// symmetry within the entry bound exists iff x satisfies an integer
/// quadratic of bounded height. `NoRelation` means the multiplier group
/// is {1, -1} for all matrices within the implied entry bound.
pub fn t2_symmetry_probe_rational(
    x: &Rat,
    precision_digits: u32,
    height_bound: u64,
) -> Result<ProbeVerdict> {
    minpoly_from_rational(x, 2, height_bound, precision_digits)
}

pub fn t2_symmetry_probe(x: &str, precision_digits: u32, height_bound: u64) -> Result<ProbeVerdict> {
    let value = parse_decimal(x)?;
    t2_symmetry_probe_rational(&value, precision_digits, height_bound)
}

pub const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974944";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::rational::rat;
    use crate::roots::isolate_real_roots;

    #[test]
    fn recovers_quartic_from_sixty_digits() {
        // sqrt2 + sqrt3 rendered to 60 digits by the exact layer
        let f = NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).unwrap();
        let x = f.generator().to_decimal(60);
        let verdict = minpoly_from_decimal(&x, 4, 100_000_000, 60).unwrap();
        assert_eq!(
            verdict.witness(),
            Some(&IntPoly::from_i64(&[1, 0, -10, 0, 1]))
        );
    }

    #[test]
    fn recovers_silver_ratio_quadratic() {
        let f = NumberField::quadratic(2).unwrap();
        let x = f
            .element(vec![rat(1, 1), rat(1, 1)])
            .unwrap()
            .to_decimal(60);
        let verdict = minpoly_from_decimal(&x, 2, 100_000_000, 60).unwrap();
        assert_eq!(verdict.witness(), Some(&IntPoly::from_i64(&[-1, -2, 1])));
        assert!(!verdict.is_degenerate_rational());
    }

    #[test]
    fn pi_yields_no_relation() {
        let verdict = minpoly_from_decimal(PI_60, 4, 100_000_000, 60).unwrap();
        assert!(matches!(verdict, ProbeVerdict::NoRelation { .. }));
        // monotonicity: smaller bounds also find nothing
        for (d, h) in [(2u32, 100_000_000u64), (4, 1_000_000), (3, 1000)] {
            let v = minpoly_from_decimal(PI_60, d, h, 60).unwrap();
            assert!(matches!(v, ProbeVerdict::NoRelation { .. }), "d={d} h={h}");
        }
    }

    #[test]
    fn t2_probe_examples() {
        // pi: no relation -> multiplier group {1,-1} within bounds
        let v = t2_symmetry_probe(PI_60, 60, 100_000_000).unwrap();
        assert!(matches!(v, ProbeVerdict::NoRelation { .. }));
        // 1 + sqrt2: the quadratic certificate is its minimal polynomial
        let f = NumberField::quadratic(2).unwrap();
        let x = f.element(vec![rat(1, 1), rat(1, 1)]).unwrap().to_decimal(60);
        let v = t2_symmetry_probe(&x, 60, 1_000_000).unwrap();
        assert_eq!(v.witness(), Some(&IntPoly::from_i64(&[-1, -2, 1])));
        // rational input: degenerate linear certificate, flagged
        let v = t2_symmetry_probe_rational(&rat(7, 3), 60, 1_000_000).unwrap();
        assert_eq!(v.witness(), Some(&IntPoly::from_i64(&[-7, 3])));
        assert!(v.is_degenerate_rational());
    }

    #[test]
    fn bound_validation() {
        assert!(matches!(
            minpoly_from_decimal("1.5", 4, 10, 30),
            Err(Error::InsufficientPrecision { need: 40, got: 30 })
        ));
        assert_eq!(
            minpoly_from_decimal("1.5", 2, 0, 60),
            Err(Error::ZeroHeightBound)
        );
        assert!(minpoly_from_decimal("not a number", 2, 10, 60).is_err());
    }

    #[test]
    fn witness_root_reproduces_the_input() {
        // soundness: re-isolating the witness root reproduces the input
        // decimal to (precision - 5) digits
        let f = NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).unwrap();
        let input = f.generator().to_decimal(60);
        let verdict = minpoly_from_decimal(&input, 4, 100_000_000, 60).unwrap();
        let witness = verdict.witness().unwrap();
        let x = parse_decimal(&input).unwrap();
        let tolerance = Rat::new(Int::one(), pow10(55));
        let intervals = isolate_real_roots(witness).unwrap();
        let close = intervals.iter().any(|iv| {
            let fine =
                crate::roots::refine_isolating_interval(witness, iv, &Rat::new(Int::one(), pow10(57)));
            (fine.midpoint() - &x).abs() < tolerance
        });
        assert!(close, "a witness root reproduces the input to 55 digits");
    }

    #[test]
    fn consistency_with_exact_layer_on_paper_elements() {
        // for exact elements rendered to 60 digits, the probe recovers
        // exactly the minimal polynomial from the exact layer
        let f5 = NumberField::quadratic(5).unwrap();
        let f2 = NumberField::quadratic(2).unwrap();
        let f4 = NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).unwrap();
        let f3 = NumberField::new(IntPoly::from_i64(&[-1, 0, -1, 1]), 0).unwrap();
        let elements = vec![
            f5.element(vec![rat(1, 2), rat(1, 2)]).unwrap(), // golden ratio
            f5.element(vec![rat(2, 1), rat(1, 1)]).unwrap(), // 2 + sqrt5
            f2.element(vec![rat(1, 1), rat(1, 1)]).unwrap(), // 1 + sqrt2
            f4.element(vec![rat(-5, 4), rat(-9, 4), rat(1, 4), rat(1, 4)]).unwrap(),
            f3.generator(),
        ];
        for e in elements {
            let rendered = e.to_decimal(60);
            let expected = e.min_poly().to_int_poly_primitive();
            let deg = expected.degree().unwrap() as u32;
            let verdict =
                minpoly_from_decimal(&rendered, deg.max(2), DEFAULT_HEIGHT_BOUND, 60).unwrap();
            assert_eq!(verdict.witness(), Some(&expected), "element {e}");
        }
    }
}
