//! Flows on the n-torus generated by constant vector fields. Exact flows
//! carry components in a real algebraic number field; numeric flows carry
//! high-precision decimal components and only feed the probe.

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::matrix::RatMat;
use crate::rational::{decimal_fraction_digits, parse_decimal, render_decimal, Rat};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
enum FlowKind {
    Exact {
        field: NumberField,
        components: Vec<FieldElement>,
    },
    Numeric {
        decimals: Vec<String>,
        values: Vec<Rat>,
    },
}

/// A quasiperiodic flow generated by theta_i' = a_i. Exactly one of the
/// exact/numeric component sets is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    kind: FlowKind,
    scale_label: Option<String>,
}

impl Flow {
    /// Exact flow: components in one field, rationally independent
    /// (their rational coordinate matrix has full row rank).
    pub fn exact(
        field: &NumberField,
        components: Vec<FieldElement>,
        scale_label: Option<String>,
    ) -> Result<Flow> {
        if components.len() < 2 {
            return Err(Error::EmptyInput);
        }
        for c in &components {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let coords = RatMat::from_rows(components.iter().map(|c| c.coords().to_vec()).collect());
        if coords.rank() != components.len() {
            return Err(Error::DependentComponents);
        }
        Ok(Flow {
            kind: FlowKind::Exact {
                field: field.clone(),
                components,
            },
            scale_label,
        })
    }

    /// Probe-only flow with decimal-string components.
    pub fn numeric(decimals: Vec<String>, scale_label: Option<String>) -> Result<Flow> {
        if decimals.len() < 2 {
            return Err(Error::EmptyInput);
        }
        let values: Result<Vec<Rat>> = decimals.iter().map(|s| parse_decimal(s)).collect();
        Ok(Flow {
            kind: FlowKind::Numeric {
                values: values?,
                decimals,
            },
            scale_label,
        })
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            FlowKind::Exact { components, .. } => components.len(),
            FlowKind::Numeric { values, .. } => values.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.kind, FlowKind::Exact { .. })
    }

    pub fn field(&self) -> Option<&NumberField> {
        match &self.kind {
            FlowKind::Exact { field, .. } => Some(field),
            FlowKind::Numeric { .. } => None,
        }
    }

    pub fn components(&self) -> Option<&[FieldElement]> {
        match &self.kind {
            FlowKind::Exact { components, .. } => Some(components),
            FlowKind::Numeric { .. } => None,
        }
    }

    pub fn numeric_values(&self) -> Option<&[Rat]> {
        match &self.kind {
            FlowKind::Numeric { values, .. } => Some(values),
            FlowKind::Exact { .. } => None,
        }
    }

    pub fn numeric_decimals(&self) -> Option<&[String]> {
        match &self.kind {
            FlowKind::Numeric { decimals, .. } => Some(decimals),
            FlowKind::Exact { .. } => None,
        }
    }

    pub fn scale_label(&self) -> Option<&str> {
        self.scale_label.as_deref()
    }

    /// Components of the exact flow, or an error for numeric flows.
    pub fn exact_components(&self) -> Result<(&NumberField, &[FieldElement])> {
        match &self.kind {
            FlowKind::Exact { field, components } => Ok((field, components)),
            FlowKind::Numeric { .. } => Err(Error::NumericFlow),
        }
    }

    /// Digits of trustworthy precision in the numeric components: the
    /// smallest fractional-digit count among non-integer components.
    pub fn numeric_precision_digits(&self) -> Option<u32> {
        let decimals = self.numeric_decimals()?;
        let mut best: Option<u32> = None;
        for d in decimals {
            let digits = decimal_fraction_digits(d);
            if digits == 0 {
                continue; // integer literals are exact
            }
            best = Some(best.map_or(digits, |b| b.min(digits)));
        }
        Some(best.unwrap_or(crate::probe::DEFAULT_PRECISION_DIGITS))
    }

    /// The time-t map applied to a point of the torus, each coordinate
    /// rendered mod 1 with `digits` fractional digits.
    pub fn advance(&self, t: &Rat, point: &[Rat], digits: u32) -> Result<Vec<String>> {
        if digits == 0 {
            return Err(Error::ZeroPrecision);
        }
        if point.len() != self.dim() {
            return Err(Error::ShapeMismatch);
        }
        match &self.kind {
            FlowKind::Exact { field, components } => {
                let mut out = Vec::with_capacity(point.len());
                for (p, a) in point.iter().zip(components) {
                    let v = a.scale(t).add(&field.from_rat(p.clone()));
                    let frac = v.sub(&field.from_rat(Rat::from_integer(v.floor())));
                    out.push(frac.to_decimal(digits));
                }
                Ok(out)
            }
            FlowKind::Numeric { values, .. } => {
                let mut out = Vec::with_capacity(point.len());
                for (p, a) in point.iter().zip(values) {
                    let v = p + t * a;
                    let frac = &v - v.floor();
                    debug_assert!(!frac.is_negative() || frac.is_zero());
                    out.push(render_decimal(&frac, digits));
                }
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn sqrt5_flow() -> Flow {
        let f = NumberField::quadratic(5).unwrap();
        Flow::exact(&f, vec![f.one(), f.generator()], Some("theta^-1 = sqrt(2)".into())).unwrap()
    }

    #[test]
    fn exact_flow_construction() {
        let flow = sqrt5_flow();
        assert_eq!(flow.dim(), 2);
        assert!(flow.is_exact());
        assert_eq!(flow.scale_label(), Some("theta^-1 = sqrt(2)"));
    }

    #[test]
    fn dependent_components_rejected() {
        let f = NumberField::quadratic(2).unwrap();
        // (1, 3/2) is rationally dependent
        let r = Flow::exact(&f, vec![f.one(), f.from_rat(rat(3, 2))], None);
        assert_eq!(r, Err(Error::DependentComponents));
    }

    #[test]
    fn cubic_flow_on_t3() {
        let f = NumberField::new(crate::poly::IntPoly::from_i64(&[-1, 1, 0, 1]), 0).unwrap();
        let b = f.generator();
        let flow = Flow::exact(&f, vec![b.mul(&b), b.clone(), f.one()], None).unwrap();
        assert_eq!(flow.dim(), 3);
    }

    #[test]
    fn cross_degree_flow_is_constructible() {
        // (1, cbrt2) inside the degree-3 field Q(cbrt2)
        let f = NumberField::new(crate::poly::IntPoly::from_i64(&[-2, 0, 0, 1]), 0).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        assert_eq!(flow.dim(), 2);
        assert_eq!(flow.field().unwrap().degree(), 3);
    }

    #[test]
    fn numeric_flow_and_precision() {
        let flow = Flow::numeric(
            vec!["1".into(), "3.141592653589793238462643383279".into()],
            None,
        )
        .unwrap();
        assert!(!flow.is_exact());
        assert_eq!(flow.numeric_precision_digits(), Some(30));
        assert!(flow.exact_components().is_err());
        assert!(Flow::numeric(vec!["1.5".into()], None).is_err());
        assert!(Flow::numeric(vec!["1".into(), "x".into()], None).is_err());
    }

    #[test]
    fn advance_examples() {
        let f = NumberField::quadratic(2).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        // t = 0: point unchanged
        let p0 = flow
            .advance(&rat_int(0), &[rat(1, 4), rat(1, 3)], 6)
            .unwrap();
        assert_eq!(p0, vec!["0.250000", "0.333333"]);
        // t = 1 from the origin: (0, sqrt2 mod 1)
        let p1 = flow
            .advance(&rat_int(1), &[rat_int(0), rat_int(0)], 10)
            .unwrap();
        assert_eq!(p1, vec!["0.0000000000", "0.4142135623"]);
        // flow property at fixed digits: two unit steps equal one double step
        let two = flow
            .advance(&rat_int(2), &[rat_int(0), rat_int(0)], 30)
            .unwrap();
        let one = flow
            .advance(&rat_int(1), &[rat_int(0), rat_int(0)], 40)
            .unwrap();
        let composed = flow
            .advance(
                &rat_int(1),
                &[
                    crate::rational::parse_decimal(&one[0]).unwrap(),
                    crate::rational::parse_decimal(&one[1]).unwrap(),
                ],
                30,
            )
            .unwrap();
        assert_eq!(two, composed);
        // invalid precision
        assert_eq!(
            flow.advance(&rat_int(1), &[rat_int(0), rat_int(0)], 0),
            Err(Error::ZeroPrecision)
        );
    }

    #[test]
    fn advance_numeric() {
        let flow = Flow::numeric(vec!["1".into(), "2.25".into()], None).unwrap();
        let p = flow.advance(&rat_int(2), &[rat_int(0), rat(1, 2)], 4).unwrap();
        assert_eq!(p, vec!["0.0000", "0.0000"]);
    }
}
