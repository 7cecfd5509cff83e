//! qpflow: exact multiplier groups of quasiperiodic torus flows.
//!
//! Exit codes: 0 success, 1 mathematical negative under --strict
//! (excluded candidate, non-conjugate flows, no relation found, ...),
//! 2 usage or reference errors.

mod examples;
mod expr;
mod render;
mod workspace;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use qpflow_core::classify::{classify_flow, FlowClass};
use qpflow_core::flow::Flow;
use qpflow_core::json as wire;
use qpflow_core::probe;
use qpflow_core::symmetry::{
    self, conjugacy_matrix, enumerate_multipliers_bounded, multiplier_group_with_candidates,
    multiplier_matrix, multiplier_of_matrix, MultiplierReport,
};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use workspace::{parse_point, Workspace};

#[derive(Parser)]
#[command(name = "qpflow", version, about = "exact multiplier groups of quasiperiodic torus flows")]
struct Cli {
    /// Workspace JSON file with named fields, flows, and candidates.
    #[arg(long, global = true)]
    workspace: Option<PathBuf>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Exit 1 on mathematical negatives (exclusions, no-relation verdicts).
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number-field queries.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Flow queries.
    Flow {
        #[command(subcommand)]
        cmd: FlowCmd,
    },
    /// Numeric integer-relation probes.
    Probe {
        #[command(subcommand)]
        cmd: ProbeCmd,
    },
    /// Built-in reproductions.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Degree, minimal polynomial, chosen root, discriminant, and (for
    /// quadratic fields) the fundamental unit and integral basis.
    Info { name: String },
}

#[derive(Subcommand)]
enum FlowCmd {
    /// The multiplier group report; optionally check a candidate and
    /// append a brute-force enumeration.
    Multipliers {
        name: String,
        /// Verify one candidate multiplier (workspace name or expression in g).
        #[arg(long)]
        candidate: Option<String>,
        /// Append the exhaustive enumeration over matrix entries in [-k, k].
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Read the eigen-equations backwards from an integer matrix.
    CheckMatrix {
        name: String,
        /// Row-major JSON matrix, e.g. "[[2,1],[5,2]]".
        #[arg(long)]
        matrix: String,
    },
    /// The forced linear conjugacy from the first flow to the second.
    Conjugate { name1: String, name2: String },
    /// Algebraic / transcendental / numeric-undetermined classification.
    Classify { name: String },
    /// Advance a point along the flow for rational time t.
    Advance {
        name: String,
        /// Rational time, e.g. "3/2".
        #[arg(long)]
        time: String,
        /// Comma-separated point coordinates mod 1, e.g. "0,0.25".
        #[arg(long)]
        point: String,
        /// Fractional digits of the result.
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
}

#[derive(Subcommand)]
enum ProbeCmd {
    /// Reconstruct a minimal polynomial from a decimal via LLL.
    Minpoly {
        /// Decimal literal, e.g. "3.14626436994197234232913506571".
        #[arg(long)]
        value: String,
        #[arg(long, default_value_t = probe::DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[arg(long, default_value_t = probe::DEFAULT_HEIGHT_BOUND)]
        height: u64,
        #[arg(long, default_value_t = probe::DEFAULT_PRECISION_DIGITS)]
        precision: u32,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Run every worked example as a golden check; exit 0 iff all pass.
    Paper,
}

/// What the command decided, for --strict exit handling.
enum Outcome {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => {
            if cli.strict {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_workspace(cli: &Cli) -> Result<Workspace> {
    let path = cli
        .workspace
        .as_ref()
        .ok_or_else(|| anyhow!("this command needs --workspace FILE"))?;
    Workspace::load(path)
}

fn emit(cli: &Cli, human: &str, machine: Value) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&machine).expect("serializable"));
    } else {
        print!("{human}");
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Field { cmd: FieldCmd::Info { name } } => {
            let ws = load_workspace(cli)?;
            let field = ws.field(name)?;
            let mut machine = wire::field_to_json(field);
            let m = machine.as_object_mut().expect("object");
            m.insert("degree".into(), json!(field.degree()));
            m.insert(
                "discriminant".into(),
                json!(qpflow_core::poly::discriminant(field.min_poly()).to_string()),
            );
            if field.degree() == 2 {
                let units = qpflow_core::units::maximal_quadratic_units(field)?;
                m.insert(
                    "fundamental_unit".into(),
                    wire::element_to_json(units.fundamental_unit()),
                );
                let basis = qpflow_core::units::quadratic_integral_basis_of(field)?;
                m.insert(
                    "integral_basis".into(),
                    Value::Array(basis.iter().map(wire::element_to_json).collect()),
                );
            }
            emit(cli, &render::field_info(name, field), machine);
            Ok(Outcome::Positive)
        }
        Cmd::Flow { cmd } => run_flow(cli, cmd),
        Cmd::Probe {
            cmd:
                ProbeCmd::Minpoly {
                    value,
                    max_degree,
                    height,
                    precision,
                },
        } => {
            let verdict = probe::minpoly_from_decimal(value, *max_degree, *height, *precision)?;
            emit(
                cli,
                &render::probe_verdict(&verdict),
                wire::probe_verdict_to_json(&verdict),
            );
            Ok(match verdict {
                probe::ProbeVerdict::RelationFound { .. } => Outcome::Positive,
                probe::ProbeVerdict::NoRelation { .. } => Outcome::Negative,
            })
        }
        Cmd::Examples { cmd: ExamplesCmd::Paper } => {
            let checks = examples::run_paper_examples(&examples::default_expectations());
            let (table, all_ok) = examples::render_table(&checks);
            print!("{table}");
            if all_ok {
                Ok(Outcome::Positive)
            } else {
                Err(anyhow!("paper example checks failed"))
            }
        }
    }
}

fn run_flow(cli: &Cli, cmd: &FlowCmd) -> Result<Outcome> {
    let ws = load_workspace(cli)?;
    match cmd {
        FlowCmd::Multipliers {
            name,
            candidate,
            bound,
        } => {
            let flow = ws.flow(name)?;
            let mut human = render::flow_header(name, flow);
            let mut machine = serde_json::Map::new();
            machine.insert("flow".into(), wire::flow_to_json(flow));
            let mut outcome = Outcome::Positive;

            let report = flow_report(flow, &ws, candidate.as_deref())?;
            human.push_str(&render::multiplier_report(&report));
            machine.insert("report".into(), wire::report_to_json(&report));

            if let Some(spec) = candidate {
                if flow.is_exact() {
                    let (field, _) = flow.exact_components()?;
                    let cand = ws.resolve_candidate(field, spec)?;
                    let verdict = multiplier_matrix(flow, &cand)?;
                    human.push_str(&format!(
                        "candidate {}: {}\n",
                        cand,
                        render::admissibility_reason(&verdict)
                    ));
                    machine.insert(
                        "candidate".into(),
                        json!({
                            "value": wire::element_to_json(&cand),
                            "verdict": wire::admissibility_to_json(&verdict),
                        }),
                    );
                    if verdict.admissible().is_none() {
                        outcome = Outcome::Negative;
                    }
                } else {
                    return Err(anyhow!("--candidate requires an exact flow"));
                }
            }
            if let Some(k) = bound {
                let sols = enumerate_multipliers_bounded(flow, *k)?;
                human.push_str(&render::enumeration(*k, &sols));
                machine.insert(
                    "enumeration".into(),
                    json!({
                        "bound": k,
                        "solutions": Value::Array(
                            sols.iter().map(wire::solution_to_json).collect()
                        ),
                    }),
                );
            }
            emit(cli, &human, Value::Object(machine));
            Ok(outcome)
        }
        FlowCmd::CheckMatrix { name, matrix } => {
            let flow = ws.flow(name)?;
            let parsed: Value = serde_json::from_str(matrix)
                .map_err(|e| anyhow!("--matrix is not valid JSON: {e}"))?;
            let m = wire::int_mat_from_json(&parsed)?;
            let verdict = multiplier_of_matrix(flow, &m)?;
            let mut human = render::flow_header(name, flow);
            human.push_str(&format!(
                "matrix {}: {}\n",
                render::matrix(&m),
                render::multiplier_of_matrix_reason(&verdict)
            ));
            let machine = json!({
                "matrix": wire::int_mat_to_json(&m),
                "verdict": match &verdict {
                    symmetry::MultiplierOfMatrix::Admissible(s) => wire::solution_to_json(s),
                    symmetry::MultiplierOfMatrix::Inconsistent { row } =>
                        json!({"admissible": false, "reason": "inconsistent", "row": row}),
                    symmetry::MultiplierOfMatrix::NotUnimodular { det } =>
                        json!({"admissible": false, "reason": "not_unimodular", "det": det.to_string()}),
                },
            });
            emit(cli, &human, machine);
            Ok(match verdict {
                symmetry::MultiplierOfMatrix::Admissible(_) => Outcome::Positive,
                _ => Outcome::Negative,
            })
        }
        FlowCmd::Conjugate { name1, name2 } => {
            let flow1 = ws.flow(name1)?;
            let flow2 = ws.flow(name2)?;
            let verdict = conjugacy_matrix(flow1, flow2)?;
            let human = format!(
                "conjugacy {name1} -> {name2}: {}\n",
                render::admissibility_reason(&verdict)
            );
            emit(cli, &human, wire::admissibility_to_json(&verdict));
            Ok(match verdict.admissible() {
                Some(_) => Outcome::Positive,
                None => Outcome::Negative,
            })
        }
        FlowCmd::Classify { name } => {
            let flow = ws.flow(name)?;
            let class = classify_flow(flow)?;
            let mut human = render::flow_header(name, flow);
            human.push_str(&render::classification(&class));
            let machine = match &class {
                FlowClass::Algebraic { field } => json!({
                    "class": "algebraic",
                    "normalized_field": wire::field_to_json(field),
                }),
                FlowClass::TranscendentalByDefinition { witness } => json!({
                    "class": "transcendental_by_definition",
                    "witness_product": [witness.0, witness.1],
                }),
                FlowClass::NumericUndetermined { probe } => json!({
                    "class": "numeric_undetermined",
                    "probe": wire::probe_verdict_to_json(probe),
                }),
            };
            emit(cli, &human, machine);
            Ok(match class {
                FlowClass::Algebraic { .. } => Outcome::Positive,
                _ => Outcome::Negative,
            })
        }
        FlowCmd::Advance {
            name,
            time,
            point,
            digits,
        } => {
            let flow = ws.flow(name)?;
            let t = qpflow_core::rational::parse_rat(time)?;
            let p = parse_point(point)?;
            let result = flow.advance(&t, &p, *digits)?;
            let human = format!("advance t = {time}: ({})\n", result.join(", "));
            emit(cli, &human, json!({ "point": result }));
            Ok(Outcome::Positive)
        }
    }
}

/// The multiplier-group report for any flow kind: full/membership for exact
/// flows, probe evidence for numeric ones.
fn flow_report(flow: &Flow, ws: &Workspace, candidate: Option<&str>) -> Result<MultiplierReport> {
    if flow.is_exact() {
        let (field, _) = flow.exact_components()?;
        let extra = match candidate {
            Some(spec) if field.degree() > 2 => vec![ws.resolve_candidate(field, spec)?],
            _ => Vec::new(),
        };
        Ok(multiplier_group_with_candidates(flow, &extra)?)
    } else {
        let values = flow.numeric_values().expect("numeric flow");
        if values.len() != 2 {
            return Err(anyhow!("numeric reports support flows on T^2 only"));
        }
        let precision = flow.numeric_precision_digits().expect("numeric flow");
        let ratio = &values[1] / &values[0];
        let verdict = probe::t2_symmetry_probe_rational(
            &ratio,
            precision,
            probe::DEFAULT_HEIGHT_BOUND,
        )?;
        Ok(MultiplierReport::TrivialNumeric { probe: verdict })
    }
}
