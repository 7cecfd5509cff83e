//! Deterministic human-readable rendering of reports. Every numeral is
//! exact (p/q or a polynomial in the generator g) with a 30-digit decimal
//! in parentheses where a real value helps.

use qpflow_core::classify::FlowClass;
use qpflow_core::field::{FieldElement, NumberField};
use qpflow_core::flow::Flow;
use qpflow_core::json::REPORT_DECIMAL_DIGITS;
use qpflow_core::matrix::IntMat;
use qpflow_core::probe::ProbeVerdict;
use qpflow_core::rational::render_rat;
use qpflow_core::symmetry::{
    MatrixAdmissibility, MultiplierOfMatrix, MultiplierReport, SymmetrySolution,
};
use qpflow_core::units::{maximal_quadratic_units, quadratic_integral_basis_of};

pub fn elem(e: &FieldElement) -> String {
    if e.is_rational() {
        format!("{}", e)
    } else {
        format!("{} (= {})", e, e.to_decimal(REPORT_DECIMAL_DIGITS))
    }
}

pub fn matrix(m: &IntMat) -> String {
    m.to_string()
}

fn poly_with_coeffs(p: &qpflow_core::poly::IntPoly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("{}  [{}]", p, coeffs.join(", "))
}

pub fn field_info(name: &str, field: &NumberField) -> String {
    let mut out = String::new();
    out.push_str(&format!("field {name}\n"));
    out.push_str(&format!("  degree: {}\n", field.degree()));
    out.push_str(&format!(
        "  min_poly: {}\n",
        poly_with_coeffs(field.min_poly())
    ));
    out.push_str(&format!(
        "  chosen root: index {} of {} real roots, isolated in ({}, {})\n",
        field.root_index(),
        field.real_root_count(),
        render_rat(field.root_interval().lo()),
        render_rat(field.root_interval().hi()),
    ));
    out.push_str(&format!(
        "  g = {}\n",
        field.generator().to_decimal(REPORT_DECIMAL_DIGITS)
    ));
    out.push_str(&format!(
        "  power basis discriminant: {}\n",
        qpflow_core::poly::discriminant(field.min_poly())
    ));
    if field.degree() == 2 {
        if let Ok(units) = maximal_quadratic_units(field) {
            out.push_str(&format!(
                "  fundamental unit: {}\n",
                elem(units.fundamental_unit())
            ));
        }
        if let Ok([one, omega]) = quadratic_integral_basis_of(field) {
            out.push_str(&format!("  integral basis: {{{}, {}}}\n", one, omega));
        }
        out.push_str("  unit group: {+-eps^m : m in Z}\n");
    }
    out
}

pub fn flow_header(name: &str, flow: &Flow) -> String {
    let mut out = format!("flow {name} on T^{}\n", flow.dim());
    if let Some(components) = flow.components() {
        let parts: Vec<String> = components.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  components: ({})\n", parts.join(", ")));
    }
    if let Some(decimals) = flow.numeric_decimals() {
        out.push_str(&format!("  numeric components: ({})\n", decimals.join(", ")));
    }
    if let Some(label) = flow.scale_label() {
        out.push_str(&format!("  scale label: {label}\n"));
    }
    out
}

pub fn solution(s: &SymmetrySolution) -> String {
    format!(
        "{}  matrix {} (det {})",
        elem(s.multiplier()),
        matrix(s.matrix().matrix()),
        s.matrix().det()
    )
}

pub fn multiplier_report(report: &MultiplierReport) -> String {
    let mut out = String::new();
    match report {
        MultiplierReport::QuadraticFull {
            order,
            generator,
            index_in_maximal,
            ambient,
        } => {
            out.push_str("multiplier group (complete, quadratic)\n");
            let basis: Vec<String> = order.basis().iter().map(|b| b.to_string()).collect();
            out.push_str(&format!(
                "  coefficient order: Z-span of {{{}}}\n",
                basis.join(", ")
            ));
            out.push_str(&format!("  generator: {}\n", elem(generator.multiplier())));
            out.push_str(&format!(
                "  generator matrix: {} (det {})\n",
                matrix(generator.matrix().matrix()),
                generator.matrix().det()
            ));
            out.push_str(&format!(
                "  group: {{+-({})^m : m in Z}}\n",
                generator.multiplier()
            ));
            out.push_str(&format!(
                "  fundamental unit of the maximal order: {}\n",
                elem(ambient.fundamental_unit())
            ));
            out.push_str(&format!(
                "  index in the maximal-order unit group: {}\n",
                index_in_maximal
            ));
        }
        MultiplierReport::MembershipOnly {
            order,
            members,
            excluded,
        } => {
            out.push_str("multiplier group (verified members only; completeness not claimed)\n");
            let basis: Vec<String> = order.basis().iter().map(|b| b.to_string()).collect();
            out.push_str(&format!(
                "  coefficient order: Z-span of {{{}}}\n",
                basis.join(", ")
            ));
            out.push_str(&format!("  verified members: {}\n", members.len()));
            for m in members {
                out.push_str(&format!("    {}\n", solution(m)));
            }
            for (cand, why) in excluded {
                out.push_str(&format!(
                    "  excluded candidate {}: {}\n",
                    cand,
                    admissibility_reason(why)
                ));
            }
        }
        MultiplierReport::TrivialNumeric { probe } => {
            out.push_str("multiplier group (numeric evidence)\n");
            out.push_str(&indent(&probe_verdict(probe), 2));
        }
    }
    out
}

pub fn admissibility_reason(a: &MatrixAdmissibility) -> String {
    match a {
        MatrixAdmissibility::Admissible(b) => {
            format!("admitted, B = {} (det {})", matrix(b.matrix()), b.det())
        }
        MatrixAdmissibility::NonIntegerEntry { row, col, value } => format!(
            "excluded: non-integer entry b_{}{} = {}",
            row,
            col,
            render_rat(value)
        ),
        MatrixAdmissibility::NotUnimodular { det } => {
            format!("excluded: determinant {det} is not +-1")
        }
    }
}

pub fn multiplier_of_matrix_reason(m: &MultiplierOfMatrix) -> String {
    match m {
        MultiplierOfMatrix::Admissible(s) => {
            format!("admitted, multiplier {}", elem(s.multiplier()))
        }
        MultiplierOfMatrix::Inconsistent { row } => format!(
            "excluded: component equation {row} is inconsistent with the first row"
        ),
        MultiplierOfMatrix::NotUnimodular { det } => {
            format!("excluded: determinant {det} is not +-1")
        }
    }
}

pub fn enumeration(bound: i64, sols: &[SymmetrySolution]) -> String {
    let mut out = format!(
        "enumeration with entries in [-{bound}, {bound}]: {} multiplier(s)\n",
        sols.len()
    );
    for s in sols {
        out.push_str(&format!("  {}\n", solution(s)));
    }
    out
}

pub fn classification(class: &FlowClass) -> String {
    match class {
        FlowClass::Algebraic { field } => {
            let mut out = String::from("classification: algebraic\n");
            out.push_str(&format!(
                "  normalized field: degree {}, min_poly {}\n",
                field.degree(),
                poly_with_coeffs(field.min_poly())
            ));
            out.push_str(&format!(
                "  generator value: {}\n",
                field.generator().to_decimal(REPORT_DECIMAL_DIGITS)
            ));
            out
        }
        FlowClass::TranscendentalByDefinition { witness } => format!(
            "classification: transcendental (by definition)\n  witness: the product of normalized components {} and {} leaves their rational span\n",
            witness.0, witness.1
        ),
        FlowClass::NumericUndetermined { probe } => {
            let mut out = String::from("classification: numeric, undetermined (evidence only)\n");
            out.push_str(&indent(&probe_verdict(probe), 2));
            out
        }
    }
}

pub fn probe_verdict(v: &ProbeVerdict) -> String {
    let b = v.bounds();
    let bounds_line = format!(
        "bounds: degree <= {}, height <= {}, precision {} digits",
        b.max_degree, b.height_bound, b.precision_digits
    );
    match v {
        ProbeVerdict::RelationFound { witness, .. } => {
            let mut out = format!(
                "relation found: {}\n{}\n",
                poly_with_coeffs(witness),
                bounds_line
            );
            if v.is_degenerate_rational() {
                out.push_str(
                    "degenerate: the value is rational to working precision, so the flow is not quasiperiodic\n",
                );
            } else {
                out.push_str("nontrivial symmetries exist within the implied entry bound\n");
            }
            out
        }
        ProbeVerdict::NoRelation { .. } => format!(
            "no relation found\n{}\nmultiplier group is {{1, -1}} up to these bounds (evidence, not proof)\n",
            bounds_line
        ),
    }
}

pub fn indent(text: &str, by: usize) -> String {
    let pad = " ".repeat(by);
    text.lines()
        .map(|l| format!("{pad}{l}\n"))
        .collect::<Vec<_>>()
        .join("")
}
