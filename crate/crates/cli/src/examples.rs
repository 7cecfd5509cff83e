//! One-shot reproduction of the eight worked example groups as golden
//! checks. The expected values live in an `Expectations` table so tests
//! can corrupt a fixture and watch the diff name the failing example.

use qpflow_core::classify::{classify_flow, FlowClass};
use qpflow_core::field::NumberField;
use qpflow_core::flow::Flow;
use qpflow_core::matrix::IntMat;
use qpflow_core::poly::IntPoly;
use qpflow_core::rational::rat;
use qpflow_core::symmetry::{
    conjugacy_matrix, multiplier_group, multiplier_group_with_candidates, multiplier_matrix,
    multiplier_of_matrix, MatrixAdmissibility, MultiplierOfMatrix, MultiplierReport,
};
use qpflow_core::units::{fundamental_unit, verify_integral_basis, BasisVerdict};

/// Golden values the runner checks against.
pub struct Expectations {
    pub motivating_matrix: [[i64; 2]; 2],
    pub motivating_index: u32,
    pub silver_instance_matrix: [[i64; 2]; 2],
    pub t3_matrix: [[i64; 3]; 3],
    pub t2_conjugacy_matrix: [[i64; 2]; 2],
    pub quartic_matrix: [[i64; 4]; 4],
}

pub fn default_expectations() -> Expectations {
    Expectations {
        motivating_matrix: [[2, 1], [5, 2]],
        motivating_index: 3,
        silver_instance_matrix: [[0, 1], [1, 2]],
        t3_matrix: [[3, 1, 2], [2, 1, 1], [1, 1, 1]],
        t2_conjugacy_matrix: [[1, 0], [-1, 1]],
        quartic_matrix: [[5, 10, 12, 12], [5, 5, 6, 12], [4, 4, 5, 10], [2, 4, 5, 5]],
    }
}

pub struct Check {
    pub group: &'static str,
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

fn check(group: &'static str, name: &'static str, outcome: Result<(), String>) -> Check {
    Check {
        group,
        name,
        outcome,
    }
}

fn eq_check<T: PartialEq + std::fmt::Debug>(expected: &T, got: &T) -> Result<(), String> {
    if expected == got {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

fn mat_to_intmat<const N: usize>(m: &[[i64; N]; N]) -> IntMat {
    IntMat::from_rows(
        m.iter()
            .map(|row| row.iter().map(|&x| qpflow_core::rational::int(x)).collect())
            .collect(),
    )
}

fn sqrt5_field() -> NumberField {
    NumberField::quadratic(5).expect("z^2 - 5")
}

fn sqrt2_field() -> NumberField {
    NumberField::quadratic(2).expect("z^2 - 2")
}

fn quartic_field() -> NumberField {
    NumberField::new(IntPoly::from_i64(&[1, 0, -10, 0, 1]), 3).expect("z^4 - 10z^2 + 1")
}

fn cubic_field() -> NumberField {
    NumberField::new(IntPoly::from_i64(&[-1, 0, -1, 1]), 0).expect("z^3 - z^2 - 1")
}

/// Runs all eight example groups against the expected values.
pub fn run_paper_examples(exp: &Expectations) -> Vec<Check> {
    let mut out = Vec::new();
    group_motivating(exp, &mut out);
    group_silver_family(exp, &mut out);
    group_t3_family(exp, &mut out);
    group_sqrt5_exclusion(&mut out);
    group_quartic(exp, &mut out);
    group_silver_units(exp, &mut out);
    group_golden_units(&mut out);
    group_quartic_integral_basis(&mut out);
    out
}

/// Example group "1.1": the motivating flow (1, sqrt5) with label sqrt2.
fn group_motivating(exp: &Expectations, out: &mut Vec<Check>) {
    const G: &str = "1.1";
    let f = sqrt5_field();
    let flow = Flow::exact(
        &f,
        vec![f.one(), f.generator()],
        Some("theta^-1 = sqrt(2)".into()),
    )
    .expect("motivating flow");
    let alpha = f.element(vec![rat(2, 1), rat(1, 1)]).unwrap();
    let expected = mat_to_intmat(&exp.motivating_matrix);
    let got = multiplier_matrix(&flow, &alpha).expect("exact flow");
    out.push(check(
        G,
        "candidate 2+sqrt5 yields the displayed matrix",
        match got.admissible() {
            Some(b) => eq_check(&expected, b.matrix()),
            None => Err(format!("candidate excluded: {got:?}")),
        },
    ));
    let report = multiplier_group(&flow).expect("quadratic flow");
    out.push(check(
        G,
        "multiplier group generated by 2+sqrt5",
        match &report {
            MultiplierReport::QuadraticFull { generator, .. } => {
                eq_check(&alpha, generator.multiplier())
            }
            other => Err(format!("unexpected report kind {other:?}")),
        },
    ));
    out.push(check(
        G,
        "index in the maximal-order unit group",
        match &report {
            MultiplierReport::QuadraticFull {
                index_in_maximal, ..
            } => eq_check(&exp.motivating_index, index_in_maximal),
            other => Err(format!("unexpected report kind {other:?}")),
        },
    ));
    let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
    out.push(check(
        G,
        "cube identity ((1+sqrt5)/2)^3 = 2+sqrt5",
        eq_check(&alpha, &omega.mul(&omega).mul(&omega)),
    ));
}

/// Example group "2torus1": flow (1, 1+sqrt2) and its two-parameter family.
fn group_silver_family(exp: &Expectations, out: &mut Vec<Check>) {
    const G: &str = "2torus1";
    let f = sqrt2_field();
    let silver = f.element(vec![rat(1, 1), rat(1, 1)]).unwrap();
    let flow = Flow::exact(&f, vec![f.one(), silver.clone()], None).expect("silver flow");
    let mut family_ok = Ok(());
    'outer: for u1 in -5i64..=5 {
        for u2 in -5i64..=5 {
            let b = IntMat::from_i64(&[&[-2 * u1 + u2, u1], &[u1, u2]]);
            let verdict = multiplier_of_matrix(&flow, &b).expect("exact flow");
            let det = (-2 * u1 + u2) * u2 - u1 * u1;
            let expected_mult = f
                .element(vec![rat(-2 * u1 + u2 + u1, 1), rat(u1, 1)])
                .unwrap();
            match verdict {
                MultiplierOfMatrix::Admissible(sol) => {
                    if det.abs() != 1 {
                        family_ok = Err(format!("u=({u1},{u2}): admitted with det {det}"));
                        break 'outer;
                    }
                    if *sol.multiplier() != expected_mult {
                        family_ok = Err(format!(
                            "u=({u1},{u2}): multiplier {} instead of {}",
                            sol.multiplier(),
                            expected_mult
                        ));
                        break 'outer;
                    }
                }
                MultiplierOfMatrix::NotUnimodular { .. } => {
                    if det.abs() == 1 {
                        family_ok = Err(format!("u=({u1},{u2}): wrongly rejected"));
                        break 'outer;
                    }
                }
                MultiplierOfMatrix::Inconsistent { row } => {
                    family_ok = Err(format!(
                        "u=({u1},{u2}): family equations inconsistent in row {row}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    out.push(check(
        G,
        "family multiplier formula on [-5,5]^2",
        family_ok,
    ));
    // the (u1, u2) = (1, 2) instance
    let expected = mat_to_intmat(&exp.silver_instance_matrix);
    let got = multiplier_matrix(&flow, &silver).expect("exact flow");
    out.push(check(
        G,
        "instance u=(1,2) has matrix [[0,1],[1,2]] and multiplier 1+sqrt2",
        match got.admissible() {
            Some(b) => eq_check(&expected, b.matrix()),
            None => Err(format!("1+sqrt2 excluded: {got:?}")),
        },
    ));
}

/// Example group "3torus1": the T^3 flow (b^2, b, 1) and its family.
fn group_t3_family(exp: &Expectations, out: &mut Vec<Check>) {
    const G: &str = "3torus1";
    let f = cubic_field();
    let beta = f.generator();
    let flow = Flow::exact(&f, vec![beta.mul(&beta), beta.clone(), f.one()], None)
        .expect("cubic flow");
    let b = mat_to_intmat(&exp.t3_matrix);
    let verdict = multiplier_of_matrix(&flow, &b).expect("exact flow");
    let expected_mult = f.element(vec![rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap();
    out.push(check(
        G,
        "displayed matrix has det 1 and multiplier b^2+b+1",
        match &verdict {
            MultiplierOfMatrix::Admissible(sol) => {
                if sol.matrix().det() != 1 {
                    Err(format!("det {}", sol.matrix().det()))
                } else {
                    eq_check(&expected_mult, sol.multiplier())
                }
            }
            other => Err(format!("matrix rejected: {other:?}")),
        },
    ));
    out.push(check(
        G,
        "multiplier b^2+b+1 maps back to the displayed matrix",
        match multiplier_matrix(&flow, &expected_mult)
            .expect("exact flow")
            .admissible()
        {
            Some(back) => eq_check(&b, back.matrix()),
            None => Err("round trip failed".into()),
        },
    ));
    let mut family_ok = Ok(());
    'outer: for u1 in -3i64..=3 {
        for u2 in -3i64..=3 {
            for u3 in -3i64..=3 {
                let fam = IntMat::from_i64(&[
                    &[u1 + u2 + u3, u1, u1 + u2],
                    &[u1 + u2, u3, u1],
                    &[u1, u2, u3],
                ]);
                let expected = f
                    .element(vec![rat(u3, 1), rat(u2, 1), rat(u1, 1)])
                    .unwrap();
                match multiplier_of_matrix(&flow, &fam).expect("exact flow") {
                    MultiplierOfMatrix::Admissible(sol) => {
                        if *sol.multiplier() != expected {
                            family_ok = Err(format!(
                                "u=({u1},{u2},{u3}): multiplier {} instead of {}",
                                sol.multiplier(),
                                expected
                            ));
                            break 'outer;
                        }
                    }
                    MultiplierOfMatrix::NotUnimodular { .. } => {}
                    MultiplierOfMatrix::Inconsistent { row } => {
                        family_ok = Err(format!(
                            "u=({u1},{u2},{u3}): equations inconsistent in row {row}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    out.push(check(
        G,
        "family multiplier formula on [-3,3]^3",
        family_ok,
    ));
}

/// Example group "2torus2": flow (1, sqrt5), classification and the
/// excluded golden-ratio unit.
fn group_sqrt5_exclusion(out: &mut Vec<Check>) {
    const G: &str = "2torus2";
    let f = sqrt5_field();
    let flow = Flow::exact(&f, vec![f.one(), f.generator()], None).expect("flow");
    out.push(check(
        G,
        "flow (1, sqrt5) is F-algebraic for F = Q(sqrt5)",
        match classify_flow(&flow).expect("exact flow") {
            FlowClass::Algebraic { field } => eq_check(&f, &field),
            other => Err(format!("classified as {other:?}")),
        },
    ));
    let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
    out.push(check(
        G,
        "unit (1+sqrt5)/2 is excluded by a non-integer entry",
        match multiplier_matrix(&flow, &omega).expect("exact flow") {
            MatrixAdmissibility::NonIntegerEntry { .. } => Ok(()),
            other => Err(format!("expected non-integer entry, got {other:?}")),
        },
    ));
}

/// Example group "4torus1": the biquadratic T^4 flow and its unit.
fn group_quartic(exp: &Expectations, out: &mut Vec<Check>) {
    const G: &str = "4torus1";
    let f = quartic_field();
    let sqrt3 = f
        .element(vec![rat(0, 1), rat(11, 2), rat(0, 1), rat(-1, 2)])
        .unwrap();
    let sqrt2 = f
        .element(vec![rat(0, 1), rat(-9, 2), rat(0, 1), rat(1, 2)])
        .unwrap();
    let sqrt6 = f
        .element(vec![rat(-5, 2), rat(0, 1), rat(1, 2), rat(0, 1)])
        .unwrap();
    let flow = Flow::exact(
        &f,
        vec![sqrt6.clone(), sqrt3.clone(), sqrt2.clone(), f.one()],
        None,
    )
    .expect("quartic flow");
    // alpha = 2 sqrt6 + 4 sqrt3 + 5 sqrt2 + 5
    let alpha = sqrt6
        .scale(&rat(2, 1))
        .add(&sqrt3.scale(&rat(4, 1)))
        .add(&sqrt2.scale(&rat(5, 1)))
        .add(&f.from_int(5));
    let expected = mat_to_intmat(&exp.quartic_matrix);
    let verdict = multiplier_matrix(&flow, &alpha).expect("exact flow");
    out.push(check(
        G,
        "alpha = 2sqrt6+4sqrt3+5sqrt2+5 yields the displayed 4x4 matrix",
        match verdict.admissible() {
            Some(b) => eq_check(&expected, b.matrix()),
            None => Err(format!("alpha excluded: {verdict:?}")),
        },
    ));
    out.push(check(
        G,
        "the displayed matrix is unimodular",
        match verdict.admissible() {
            Some(b) => {
                if b.det().abs() == 1 {
                    Ok(())
                } else {
                    Err(format!("det {}", b.det()))
                }
            }
            None => Err("matrix rejected".into()),
        },
    ));
    let half_sum = sqrt2.add(&sqrt6).scale(&rat(1, 2));
    out.push(check(
        G,
        "unit (sqrt2+sqrt6)/2 is excluded by a non-integer entry",
        match multiplier_matrix(&flow, &half_sum).expect("exact flow") {
            MatrixAdmissibility::NonIntegerEntry { .. } => Ok(()),
            other => Err(format!("expected non-integer entry, got {other:?}")),
        },
    ));
    out.push(check(
        G,
        "(sqrt2+sqrt6)/2 is a root of z^4 - 4z^2 + 1",
        eq_check(
            &IntPoly::from_i64(&[1, 0, -4, 0, 1]).to_rat(),
            &half_sum.min_poly(),
        ),
    ));
    out.push(check(
        G,
        "the flow is F-algebraic for the quartic field",
        match classify_flow(&flow).expect("exact flow") {
            FlowClass::Algebraic { field } => eq_check(&f, &field),
            other => Err(format!("classified as {other:?}")),
        },
    ));
}

/// Example group "2torus3": Q(sqrt2) units, integral bases, conjugacy.
fn group_silver_units(exp: &Expectations, out: &mut Vec<Check>) {
    const G: &str = "2torus3";
    let f = sqrt2_field();
    let silver = f.element(vec![rat(1, 1), rat(1, 1)]).unwrap();
    out.push(check(
        G,
        "fundamental unit of Q(sqrt2) is 1+sqrt2",
        match fundamental_unit(2) {
            Ok(group) => eq_check(
                &group
                    .field()
                    .element(vec![rat(1, 1), rat(1, 1)])
                    .unwrap(),
                group.fundamental_unit(),
            ),
            Err(e) => Err(e.to_string()),
        },
    ));
    out.push(check(
        G,
        "1+sqrt2 is a root of z^2 - 2z - 1",
        eq_check(
            &IntPoly::from_i64(&[-1, -2, 1]).to_rat(),
            &silver.min_poly(),
        ),
    ));
    out.push(check(
        G,
        "{1, 1+sqrt2} is an integral basis for Q(sqrt2)",
        match verify_integral_basis(&f, &[f.one(), silver.clone()]) {
            Ok(BasisVerdict::VerifiedMaximal) => Ok(()),
            Ok(other) => Err(format!("verdict {other:?}")),
            Err(e) => Err(e.to_string()),
        },
    ));
    let integral_flow = Flow::exact(&f, vec![f.one(), f.generator()], None).expect("flow");
    out.push(check(
        G,
        "multiplier group of (1, sqrt2) is all units: index 1",
        match multiplier_group(&integral_flow).expect("quadratic flow") {
            MultiplierReport::QuadraticFull {
                generator,
                index_in_maximal,
                ..
            } => {
                if index_in_maximal != 1 {
                    Err(format!("index {index_in_maximal}"))
                } else {
                    eq_check(&silver, generator.multiplier())
                }
            }
            other => Err(format!("unexpected report {other:?}")),
        },
    ));
    let silver_flow = Flow::exact(&f, vec![f.one(), silver], None).expect("flow");
    let expected = mat_to_intmat(&exp.t2_conjugacy_matrix);
    out.push(check(
        G,
        "V_* X = Y for the displayed unimodular conjugacy",
        match conjugacy_matrix(&silver_flow, &integral_flow).expect("exact flows") {
            MatrixAdmissibility::Admissible(b) => eq_check(&expected, b.matrix()),
            other => Err(format!("conjugacy rejected: {other:?}")),
        },
    ));
}

/// Example group "2torus4": Q(sqrt5) integral-basis flow.
fn group_golden_units(out: &mut Vec<Check>) {
    const G: &str = "2torus4";
    let f = sqrt5_field();
    let omega = f.element(vec![rat(1, 2), rat(1, 2)]).unwrap();
    out.push(check(
        G,
        "fundamental unit of Q(sqrt5) is (1+sqrt5)/2",
        match fundamental_unit(5) {
            Ok(group) => eq_check(
                &group
                    .field()
                    .element(vec![rat(1, 2), rat(1, 2)])
                    .unwrap(),
                group.fundamental_unit(),
            ),
            Err(e) => Err(e.to_string()),
        },
    ));
    out.push(check(
        G,
        "{1, (1+sqrt5)/2} is an integral basis for Q(sqrt5)",
        match verify_integral_basis(&f, &[f.one(), omega.clone()]) {
            Ok(BasisVerdict::VerifiedMaximal) => Ok(()),
            Ok(other) => Err(format!("verdict {other:?}")),
            Err(e) => Err(e.to_string()),
        },
    ));
    let flow = Flow::exact(&f, vec![f.one(), omega.clone()], None).expect("flow");
    out.push(check(
        G,
        "multiplier group of (1, (1+sqrt5)/2) is all units: index 1",
        match multiplier_group(&flow).expect("quadratic flow") {
            MultiplierReport::QuadraticFull {
                generator,
                index_in_maximal,
                ..
            } => {
                if index_in_maximal != 1 {
                    Err(format!("index {index_in_maximal}"))
                } else {
                    eq_check(&omega, generator.multiplier())
                }
            }
            other => Err(format!("unexpected report {other:?}")),
        },
    ));
}

/// Example group "4torus2": the quartic integral basis and its flow.
fn group_quartic_integral_basis(out: &mut Vec<Check>) {
    const G: &str = "4torus2";
    let f = quartic_field();
    let sqrt3 = f
        .element(vec![rat(0, 1), rat(11, 2), rat(0, 1), rat(-1, 2)])
        .unwrap();
    let sqrt2 = f
        .element(vec![rat(0, 1), rat(-9, 2), rat(0, 1), rat(1, 2)])
        .unwrap();
    let sqrt6 = f
        .element(vec![rat(-5, 2), rat(0, 1), rat(1, 2), rat(0, 1)])
        .unwrap();
    let half_sum = sqrt2.add(&sqrt6).scale(&rat(1, 2));
    let basis = vec![f.one(), sqrt3.clone(), sqrt6.clone(), half_sum.clone()];
    out.push(check(
        G,
        "{1, sqrt3, sqrt6, (sqrt2+sqrt6)/2} is an integral basis",
        match verify_integral_basis(&f, &basis) {
            Ok(BasisVerdict::VerifiedMaximal) => Ok(()),
            Ok(other) => Err(format!("verdict {other:?}")),
            Err(e) => Err(e.to_string()),
        },
    ));
    let flow = Flow::exact(
        &f,
        vec![half_sum, sqrt6.clone(), sqrt3.clone(), f.one()],
        None,
    )
    .expect("integral basis flow");
    // alpha from 4torus1 is a unit of the maximal order, so it must be a
    // multiplier of the integral-basis flow as well
    let alpha = sqrt6
        .scale(&rat(2, 1))
        .add(&sqrt3.scale(&rat(4, 1)))
        .add(&sqrt2.scale(&rat(5, 1)))
        .add(&f.from_int(5));
    let report =
        multiplier_group_with_candidates(&flow, &[alpha.clone()]).expect("quartic flow");
    out.push(check(
        G,
        "membership report verifies {1, -1} and the 4torus1 unit",
        match &report {
            MultiplierReport::MembershipOnly {
                members, excluded, ..
            } => {
                let has_one = members.iter().any(|s| s.multiplier().is_one());
                let has_minus = members
                    .iter()
                    .any(|s| *s.multiplier() == f.one().neg());
                let has_alpha = members.iter().any(|s| *s.multiplier() == alpha);
                if has_one && has_minus && has_alpha && excluded.is_empty() {
                    Ok(())
                } else {
                    Err(format!(
                        "members: 1={has_one} -1={has_minus} alpha={has_alpha}, excluded={}",
                        excluded.len()
                    ))
                }
            }
            other => Err(format!("unexpected report {other:?}")),
        },
    ));
}

/// Fixed-width pass/fail table; byte-deterministic.
pub fn render_table(checks: &[Check]) -> (String, bool) {
    let mut out = String::new();
    let name_width = checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0)
        .max("check".len());
    out.push_str(&format!("{:<10} {:<name_width$} status\n", "example", "check"));
    let mut all_ok = true;
    for c in checks {
        let status = if c.outcome.is_ok() { "ok" } else { "FAIL" };
        out.push_str(&format!("{:<10} {:<name_width$} {status}\n", c.group, c.name));
        if let Err(diff) = &c.outcome {
            all_ok = false;
            out.push_str(&format!("           diff: {diff}\n"));
        }
    }
    let groups: std::collections::BTreeSet<&str> = checks.iter().map(|c| c.group).collect();
    if all_ok {
        out.push_str(&format!(
            "{} example groups, {} checks: all passed\n",
            groups.len(),
            checks.len()
        ));
    } else {
        let failed = checks.iter().filter(|c| c.outcome.is_err()).count();
        out.push_str(&format!(
            "{} example groups, {} checks: {} FAILED\n",
            groups.len(),
            checks.len(),
            failed
        ));
    }
    (out, all_ok)
}
