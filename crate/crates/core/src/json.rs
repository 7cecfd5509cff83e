//! JSON wire formats: polynomials as ascending integer coefficient arrays,
//! rationals as "p/q" strings (q omitted when 1), matrices as row-major
//! arrays of arrays, fields as { "min_poly", "root_index" }, elements as
//! coordinate arrays, and reports with exact coordinates plus a 30-digit
//! decimal rendering of every multiplier.

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::flow::Flow;
use crate::lattice::FieldLattice;
use crate::matrix::IntMat;
use crate::poly::IntPoly;
use crate::probe::ProbeVerdict;
use crate::rational::{parse_rat, render_rat, Int, Rat};
use crate::symmetry::{MatrixAdmissibility, MultiplierReport, SymmetrySolution, UnimodularMatrix};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Fractional digits used for the decimal renderings inside reports.
pub const REPORT_DECIMAL_DIGITS: u32 = 30;

fn bad(what: &'static str, v: &Value) -> Error {
    Error::InvalidJson {
        what,
        detail: v.to_string(),
    }
}

fn int_to_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| bad("integer", v)),
        Value::String(s) => s.parse().map_err(|_| bad("integer", v)),
        _ => Err(bad("integer", v)),
    }
}

pub fn rat_to_json(x: &Rat) -> Value {
    json!(render_rat(x))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rat::from_integer(Int::from(x)))
            .ok_or_else(|| bad("rational", v)),
        _ => Err(bad("rational", v)),
    }
}

pub fn int_poly_to_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int_to_json).collect())
}

pub fn int_poly_from_json(v: &Value) -> Result<IntPoly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial", v))?;
    let coeffs: Result<Vec<Int>> = arr.iter().map(int_from_json).collect();
    Ok(IntPoly::new(coeffs?))
}

pub fn int_mat_to_json(m: &IntMat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_to_json).collect()))
            .collect(),
    )
}

pub fn int_mat_from_json(v: &Value) -> Result<IntMat> {
    let arr = v.as_array().ok_or_else(|| bad("matrix", v))?;
    if arr.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rows = Vec::with_capacity(arr.len());
    let mut width = None;
    for row in arr {
        let cells = row.as_array().ok_or_else(|| bad("matrix row", row))?;
        match width {
            None => width = Some(cells.len()),
            Some(w) if w != cells.len() => return Err(Error::ShapeMismatch),
            _ => {}
        }
        let parsed: Result<Vec<Int>> = cells.iter().map(int_from_json).collect();
        rows.push(parsed?);
    }
    Ok(IntMat::from_rows(rows))
}

pub fn field_to_json(f: &NumberField) -> Value {
    json!({
        "min_poly": int_poly_to_json(f.min_poly()),
        "root_index": f.root_index(),
    })
}

pub fn field_from_json(v: &Value) -> Result<NumberField> {
    let obj = v.as_object().ok_or_else(|| bad("field", v))?;
    let poly = int_poly_from_json(obj.get("min_poly").ok_or_else(|| bad("field.min_poly", v))?)?;
    let idx = obj
        .get("root_index")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("field.root_index", v))? as usize;
    NumberField::new(poly, idx)
}

pub fn element_to_json(e: &FieldElement) -> Value {
    Value::Array(e.coords().iter().map(rat_to_json).collect())
}

pub fn element_from_json(field: &NumberField, v: &Value) -> Result<FieldElement> {
    let arr = v.as_array().ok_or_else(|| bad("element", v))?;
    let coords: Result<Vec<Rat>> = arr.iter().map(rat_from_json).collect();
    field.element(coords?)
}

pub fn lattice_to_json(l: &FieldLattice) -> Value {
    json!({
        "field": field_to_json(l.field()),
        "basis": Value::Array(l.basis().iter().map(element_to_json).collect()),
    })
}

pub fn lattice_from_json(v: &Value) -> Result<FieldLattice> {
    let obj = v.as_object().ok_or_else(|| bad("lattice", v))?;
    let field = field_from_json(obj.get("field").ok_or_else(|| bad("lattice.field", v))?)?;
    let basis_v = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("lattice.basis", v))?;
    let basis: Result<Vec<FieldElement>> = basis_v
        .iter()
        .map(|e| element_from_json(&field, e))
        .collect();
    FieldLattice::new(&field, &basis?)
}

pub fn flow_to_json(flow: &Flow) -> Value {
    let mut obj = Map::new();
    if let Some(decimals) = flow.numeric_decimals() {
        obj.insert("numeric".into(), json!(decimals));
    } else {
        let (field, components) = flow.exact_components().expect("exact flow");
        obj.insert("field".into(), field_to_json(field));
        obj.insert(
            "components".into(),
            Value::Array(components.iter().map(element_to_json).collect()),
        );
    }
    if let Some(label) = flow.scale_label() {
        obj.insert("scale_label".into(), json!(label));
    }
    Value::Object(obj)
}

pub fn flow_from_json(v: &Value) -> Result<Flow> {
    let obj = v.as_object().ok_or_else(|| bad("flow", v))?;
    let label = obj
        .get("scale_label")
        .and_then(Value::as_str)
        .map(str::to_string);
    if let Some(numeric) = obj.get("numeric") {
        let arr = numeric.as_array().ok_or_else(|| bad("flow.numeric", v))?;
        let decimals: Result<Vec<String>> = arr
            .iter()
            .map(|d| {
                d.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("flow.numeric entry", d))
            })
            .collect();
        return Flow::numeric(decimals?, label);
    }
    let field = field_from_json(obj.get("field").ok_or_else(|| bad("flow.field", v))?)?;
    let comp_v = obj
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("flow.components", v))?;
    let components: Result<Vec<FieldElement>> = comp_v
        .iter()
        .map(|e| element_from_json(&field, e))
        .collect();
    Flow::exact(&field, components?, label)
}

pub fn unimodular_to_json(b: &UnimodularMatrix) -> Value {
    json!({
        "matrix": int_mat_to_json(b.matrix()),
        "det": b.det(),
    })
}

pub fn solution_to_json(s: &SymmetrySolution) -> Value {
    json!({
        "matrix": int_mat_to_json(s.matrix().matrix()),
        "det": s.matrix().det(),
        "multiplier": element_to_json(s.multiplier()),
        "decimal": s.multiplier().to_decimal(REPORT_DECIMAL_DIGITS),
    })
}

pub fn admissibility_to_json(a: &MatrixAdmissibility) -> Value {
    match a {
        MatrixAdmissibility::Admissible(b) => json!({
            "admissible": true,
            "matrix": int_mat_to_json(b.matrix()),
            "det": b.det(),
        }),
        MatrixAdmissibility::NonIntegerEntry { row, col, value } => json!({
            "admissible": false,
            "reason": "non_integer_entry",
            "row": row,
            "col": col,
            "value": render_rat(value),
        }),
        MatrixAdmissibility::NotUnimodular { det } => json!({
            "admissible": false,
            "reason": "not_unimodular",
            "det": int_to_json(det),
        }),
    }
}

pub fn probe_verdict_to_json(p: &ProbeVerdict) -> Value {
    let bounds = p.bounds();
    let mut obj = Map::new();
    obj.insert(
        "kind".into(),
        json!(match p {
            ProbeVerdict::RelationFound { .. } => "relation_found",
            ProbeVerdict::NoRelation { .. } => "no_relation",
        }),
    );
    if let Some(w) = p.witness() {
        obj.insert("witness".into(), int_poly_to_json(w));
        obj.insert("witness_pretty".into(), json!(w.to_string()));
        if p.is_degenerate_rational() {
            obj.insert("degenerate_rational".into(), json!(true));
        }
    }
    obj.insert("max_degree".into(), json!(bounds.max_degree));
    obj.insert("height_bound".into(), json!(bounds.height_bound));
    obj.insert("precision_digits".into(), json!(bounds.precision_digits));
    Value::Object(obj)
}

pub fn report_to_json(r: &MultiplierReport) -> Value {
    match r {
        MultiplierReport::QuadraticFull {
            order,
            generator,
            index_in_maximal,
            ambient,
        } => json!({
            "kind": "quadratic_full",
            "order": lattice_to_json(order),
            "generator": solution_to_json(generator),
            "index_in_maximal_units": index_in_maximal,
            "fundamental_unit": element_to_json(ambient.fundamental_unit()),
            "fundamental_unit_decimal": ambient
                .fundamental_unit()
                .to_decimal(REPORT_DECIMAL_DIGITS),
        }),
        MultiplierReport::MembershipOnly {
            order,
            members,
            excluded,
        } => json!({
            "kind": "membership_only",
            "order": lattice_to_json(order),
            "members": Value::Array(members.iter().map(solution_to_json).collect()),
            "excluded": Value::Array(
                excluded
                    .iter()
                    .map(|(e, why)| json!({
                        "candidate": element_to_json(e),
                        "verdict": admissibility_to_json(why),
                    }))
                    .collect()
            ),
        }),
        MultiplierReport::TrivialNumeric { probe } => json!({
            "kind": "trivial_numeric",
            "probe": probe_verdict_to_json(probe),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::{Rng, SeedableRng};

    #[test]
    fn polynomial_round_trip() {
        let p = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        let v = int_poly_to_json(&p);
        assert_eq!(v, json!([1, 0, -10, 0, 1]));
        assert_eq!(int_poly_from_json(&v).unwrap(), p);
        // strings accepted for large coefficients
        assert_eq!(
            int_poly_from_json(&json!(["123456789012345678901234567890", 1])).unwrap().degree(),
            Some(1)
        );
        assert!(int_poly_from_json(&json!("nope")).is_err());
    }

    #[test]
    fn rational_format() {
        assert_eq!(rat_to_json(&rat(1, 2)), json!("1/2"));
        assert_eq!(rat_to_json(&rat_int(-3)), json!("-3"));
        assert_eq!(rat_from_json(&json!("5/10")).unwrap(), rat(1, 2));
        assert_eq!(rat_from_json(&json!(7)).unwrap(), rat_int(7));
    }

    #[test]
    fn field_and_element_round_trip() {
        let f = NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).unwrap();
        let v = field_to_json(&f);
        assert_eq!(v, json!({"min_poly": [1, 0, -10, 0, 1], "root_index": 3}));
        assert_eq!(field_from_json(&v).unwrap(), f);
        let e = f
            .element(vec![rat(-5, 4), rat(-9, 4), rat(1, 4), rat(1, 4)])
            .unwrap();
        let ev = element_to_json(&e);
        assert_eq!(ev, json!(["-5/4", "-9/4", "1/4", "1/4"]));
        assert_eq!(element_from_json(&f, &ev).unwrap(), e);
    }

    #[test]
    fn flow_round_trip() {
        let f = NumberField::quadratic(5).unwrap();
        let flow = Flow::exact(
            &f,
            vec![f.one(), f.generator()],
            Some("theta^-1 = sqrt(2)".into()),
        )
        .unwrap();
        let v = flow_to_json(&flow);
        let back = flow_from_json(&v).unwrap();
        assert_eq!(back, flow);
        let numeric = Flow::numeric(vec!["1".into(), "2.718281828459".into()], None).unwrap();
        let nv = flow_to_json(&numeric);
        assert_eq!(flow_from_json(&nv).unwrap(), numeric);
    }

    #[test]
    fn random_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let f = NumberField::quadratic(7).unwrap();
        for _ in 0..200 {
            let coords: Vec<Rat> = (0..2)
                .map(|_| rat(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=20)))
                .collect();
            let e = f.element(coords).unwrap();
            assert_eq!(element_from_json(&f, &element_to_json(&e)).unwrap(), e);
        }
    }

    #[test]
    fn lattice_round_trip() {
        let f = NumberField::quadratic(5).unwrap();
        let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let l = FieldLattice::new(&f, &[f.one(), omega]).unwrap();
        let v = lattice_to_json(&l);
        assert_eq!(lattice_from_json(&v).unwrap(), l);
    }

    #[test]
    fn report_rendering_contains_decimals() {
        let f = NumberField::quadratic(5).unwrap();
        let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).unwrap();
        let report = crate::symmetry::multiplier_group(&flow).unwrap();
        let v = report_to_json(&report);
        assert_eq!(v["kind"], json!("quadratic_full"));
        assert_eq!(v["index_in_maximal_units"], json!(3));
        assert_eq!(
            v["generator"]["decimal"],
            json!("4.236067977499789696409173668731")
        );
        assert_eq!(
            v["fundamental_unit_decimal"],
            json!("1.618033988749894848204586834365")
        );
    }
}
