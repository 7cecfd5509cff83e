//! Algebraic/transcendental classification of flows: an exact flow is
//! algebraic iff the rational span of the ratios a_i / a_1 is closed under
//! multiplication (it is then a number field of degree n); numeric flows
//! get bounded probe evidence only.

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::flow::Flow;
use crate::lattice::coords_in_basis;
use crate::poly::IntPoly;
use crate::probe::{t2_symmetry_probe_rational, ProbeVerdict, DEFAULT_HEIGHT_BOUND};
use crate::rational::{Int, Rat};
use crate::roots::isolate_real_roots;
use num_integer::Integer;
use num_traits::One;

/// Classification outcome.
#[derive(Debug, Clone)]
pub enum FlowClass {
    /// The normalized component span (1/a_1) * span{a_i} is a field F of
    /// degree n; the flow is F-algebraic.
    Algebraic { field: NumberField },
    /// Witnessed failure of multiplicative closure: the product of ratios
    /// (a_i/a_1)(a_j/a_1) lies outside the span (0-based indices).
    TranscendentalByDefinition { witness: (usize, usize) },
    /// Numeric flow: evidence only, never proof.
    NumericUndetermined { probe: ProbeVerdict },
}

impl FlowClass {
    pub fn is_algebraic(&self) -> bool {
        matches!(self, FlowClass::Algebraic { .. })
    }
}

/// Classifies a flow. Exact flows are decided exactly; numeric flows are
/// delegated to the T^2 probe (supported for two components only).
pub fn classify_flow(flow: &Flow) -> Result<FlowClass> {
    if let Some(values) = flow.numeric_values() {
        if values.len() != 2 {
            return Err(Error::NotAlgebraic(
                "numeric classification supports flows on T^2 only".into(),
            ));
        }
        if values[0] == Rat::from_integer(Int::from(0)) {
            return Err(Error::DivisionByZero);
        }
        let ratio = &values[1] / &values[0];
        let precision = flow
            .numeric_precision_digits()
            .expect("numeric flow has precision data");
        if precision < 20 {
            return Err(Error::InsufficientPrecision {
                need: 20,
                got: precision,
            });
        }
        let probe = t2_symmetry_probe_rational(&ratio, precision, DEFAULT_HEIGHT_BOUND)?;
        return Ok(FlowClass::NumericUndetermined { probe });
    }

    let (field, components) = flow.exact_components()?;
    let n = components.len();
    let a1_inv = components[0].inv().expect("components are nonzero");
    let ratios: Vec<FieldElement> = components.iter().map(|a| a.mul(&a1_inv)).collect();
    // closure test on the rational span W of the ratios
    for i in 0..n {
        for j in i..n {
            let prod = ratios[i].mul(&ratios[j]);
            if coords_in_basis(&prod, &ratios)?.is_none() {
                return Ok(FlowClass::TranscendentalByDefinition { witness: (i, j) });
            }
        }
    }
    if n == field.degree() {
        return Ok(FlowClass::Algebraic {
            field: field.clone(),
        });
    }
    // W is a proper subfield: present it by a primitive element
    let theta = primitive_element(&ratios)?;
    let subfield = field_of_integral_element(&theta)?;
    Ok(FlowClass::Algebraic { field: subfield })
}

/// A primitive element of the multiplicatively closed span of the ratios:
/// some small integer combination whose minimal polynomial has degree n.
fn primitive_element(ratios: &[FieldElement]) -> Result<FieldElement> {
    let n = ratios.len();
    // single generators first, then combinations with growing coefficients
    for r in &ratios[1..] {
        if r.min_poly().degree() == Some(n) {
            return Ok(r.clone());
        }
    }
    for reach in 1..=16i64 {
        let mut combo = ratios[1].clone();
        for r in &ratios[2..] {
            combo = combo.add(&r.scale(&Rat::from_integer(Int::from(reach))));
        }
        if combo.min_poly().degree() == Some(n) {
            return Ok(combo);
        }
    }
    Err(Error::IterationLimit("primitive element search"))
}

/// Builds the abstract field Q(theta') for theta' an integral multiple of
/// theta, selecting the real root that matches theta' under the ambient
/// embedding.
fn field_of_integral_element(theta: &FieldElement) -> Result<NumberField> {
    let mu = theta.min_poly();
    let mut denom = Int::one();
    for c in mu.coeffs() {
        denom = denom.lcm(c.denom());
    }
    let scaled = theta.scale(&Rat::from_integer(denom));
    let mu_int: IntPoly = scaled
        .min_poly()
        .to_int_poly()
        .expect("an integer multiple clears the denominators of the minimal polynomial");
    let intervals = isolate_real_roots(&mu_int)?;
    // shrink the value interval of theta' until it lies inside exactly one
    // isolating interval
    let mut target = Rat::new(Int::one(), Int::from(4));
    let index = loop {
        let value = scaled.value_interval(&target);
        let inside: Vec<usize> = intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| value.lo() >= iv.lo() && value.hi() <= iv.hi())
            .map(|(k, _)| k)
            .collect();
        if inside.len() == 1 {
            break inside[0];
        }
        target = target / Rat::from_integer(Int::from(16));
    };
    NumberField::new(mu_int, index)
}
