//! `crystal`: command-line access to the tableau and rigged configuration
//! models of crystals, the bijection between them and their statistics.
//!
//! Exit status is 0 on success, 2 for invalid input and 3 when the family
//! does not support the requested operation.

use std::fs;
use std::io::{Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crystals::bijection::{phi, phi_inv, psi, xi};
use crystals::graph::CrystalGraph;
use crystals::json::{
    columns_from_json, columns_to_json, element_from_json, mlt_to_json, rc_to_json,
    tableau_to_json, Element,
};
use crystals::stats::{diff_all, rem_all_highest, rem_all_infinity, rpt, seg};
use crystals::{CartanType, CrystalError, Mlt, RcModel, RiggedConfiguration, Tableau, Weight};

#[derive(Parser)]
#[command(
    name = "crystal",
    version,
    about = "Tableau and rigged configuration models of crystals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Tableaux,
    Rc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Rc,
    Mlt,
    Tableau,
    Columns,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a crystal graph breadth first from its highest weight element.
    Graph {
        /// Cartan type such as A3, B2, D4 or G2.
        #[arg(long = "type")]
        ct: String,
        #[arg(long, value_enum, default_value = "tableaux")]
        model: Model,
        /// Highest weight as comma-separated coefficients.
        #[arg(long, conflicts_with = "inf", required_unless_present = "inf")]
        weight: Option<String>,
        /// Use B(infinity) instead of a highest weight crystal.
        #[arg(long)]
        inf: bool,
        /// Maximal number of lowering operators from the root (required for B(infinity)).
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply crystal operators such as f1,f2,e3 (left to right) to an element.
    Apply {
        /// JSON file with the element, or - for standard input.
        #[arg(long)]
        input: String,
        #[arg(long)]
        ops: String,
    },
    /// Convert an element to the other model.
    Convert {
        /// JSON file with the element or column list, or - for standard input.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        to: Target,
        /// Cartan type, needed when the input is a bare column list.
        #[arg(long = "type")]
        ct: Option<String>,
    },
    /// Compute statistics of an element.
    Stat {
        /// JSON file with the element, or - for standard input.
        #[arg(long)]
        input: String,
        /// Comma-separated subset of seg,rpt,diff,rem.
        #[arg(long, default_value = "seg,rpt,diff,rem")]
        stats: String,
    },
    /// Print the highest weight element.
    Hw {
        #[arg(long = "type")]
        ct: String,
        #[arg(long, conflicts_with = "inf", required_unless_present = "inf")]
        weight: Option<String>,
        #[arg(long)]
        inf: bool,
        #[arg(long, value_enum, default_value = "tableaux")]
        model: Model,
    },
}

type CliResult<T> = Result<T, CrystalError>;

fn invalid(msg: impl Into<String>) -> CrystalError {
    CrystalError::Invalid(msg.into())
}

fn read_input(path: &str) -> CliResult<Value> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| invalid(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| invalid(format!("reading {path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CrystalError::Parse(format!("invalid JSON: {e}")))
}

fn parse_ops(s: &str) -> CliResult<Vec<(bool, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (kind, node) = t.split_at(1);
            let is_f = match kind {
                "f" => true,
                "e" => false,
                _ => return Err(CrystalError::Parse(format!("bad operator {t:?}"))),
            };
            let a = node
                .parse::<usize>()
                .map_err(|_| CrystalError::Parse(format!("bad operator {t:?}")))?;
            Ok((is_f, a))
        })
        .collect()
}

fn check_nodes(ct: CartanType, ops: &[(bool, usize)]) -> CliResult<()> {
    match ops.iter().find(|(_, a)| !ct.nodes().contains(a)) {
        Some((_, a)) => Err(invalid(format!("node {a} is not a node of {ct}"))),
        None => Ok(()),
    }
}

fn root_weight(ct: CartanType, weight: &str) -> CliResult<Weight> {
    let w: Weight = weight.parse()?;
    ct.check_weight(&w)?;
    if !w.is_dominant() {
        return Err(invalid(format!("weight {w} is not dominant")));
    }
    Ok(w)
}

fn row_label(rows: &[Vec<crystals::Letter>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn render<T: crystals::CrystalElement>(
    g: &CrystalGraph<T>,
    format: Format,
    label: impl Fn(&T) -> String,
    node: impl Fn(&T) -> Value,
) -> String {
    match format {
        Format::Dot => g.to_dot(label),
        Format::Json => g.to_json(node).to_string(),
    }
}

fn graph(
    ct: &str,
    model: Model,
    weight: Option<&str>,
    depth: Option<usize>,
    format: Format,
) -> CliResult<String> {
    let ct: CartanType = ct.parse()?;
    match weight {
        Some(w) => {
            let lambda = root_weight(ct, w)?;
            Ok(match model {
                Model::Tableaux => {
                    let g = CrystalGraph::explore(Tableau::highest(ct, &lambda)?, depth);
                    render(&g, format, |t| row_label(t.rows()), tableau_to_json)
                }
                Model::Rc => {
                    let root = RiggedConfiguration::empty(ct, RcModel::HighestWeight(lambda))?;
                    let g = CrystalGraph::explore(root, depth);
                    render(&g, format, |x| x.to_string(), rc_to_json)
                }
            })
        }
        None => {
            let depth = depth.ok_or_else(|| invalid("B(infinity) is infinite: pass --depth"))?;
            Ok(match model {
                Model::Tableaux => {
                    let g = CrystalGraph::explore(Mlt::ground(ct), Some(depth));
                    render(&g, format, |t| row_label(t.rows()), mlt_to_json)
                }
                Model::Rc => {
                    let g = CrystalGraph::explore(
                        RiggedConfiguration::empty(ct, RcModel::Infinity)?,
                        Some(depth),
                    );
                    render(&g, format, |x| x.to_string(), rc_to_json)
                }
            })
        }
    }
}

fn apply(input: &str, ops: &str) -> CliResult<Value> {
    let element = element_from_json(&read_input(input)?)?;
    let ops = parse_ops(ops)?;
    check_nodes(element.cartan_type(), &ops)?;
    Ok(element.apply_ops(&ops).map_or(Value::Null, |e| e.to_json()))
}

fn unsupported_conversion(from: &str, to: &str) -> CrystalError {
    CrystalError::Unsupported(format!("no conversion from {from} to {to}"))
}

fn convert(input: &str, to: Target, ct: Option<&str>) -> CliResult<Value> {
    let v = read_input(input)?;
    if v.is_array() {
        let ct: CartanType = ct
            .ok_or_else(|| invalid("a bare column list needs --type"))?
            .parse()?;
        let columns = columns_from_json(&v)?;
        let x = phi_inv(ct, &columns)?;
        return match to {
            Target::Rc => Ok(rc_to_json(&x)),
            Target::Tableau => Ok(tableau_to_json(&Tableau::from_columns(ct, &columns)?)),
            Target::Columns => Ok(columns_to_json(&columns)),
            Target::Mlt => Err(unsupported_conversion(
                "a column list",
                "a marginally large tableau",
            )),
        };
    }
    match (element_from_json(&v)?, to) {
        (Element::Mlt(t), Target::Rc) => Ok(rc_to_json(&xi(&t)?)),
        (Element::Mlt(t), Target::Mlt) => Ok(mlt_to_json(&t)),
        (Element::Mlt(t), Target::Columns) => {
            t.cartan_type()
                .require_bijection("columns of a marginally large tableau")?;
            Ok(columns_to_json(&t.tableau().columns()))
        }
        (Element::Tableau(t), Target::Rc) => {
            Ok(rc_to_json(&phi_inv(t.cartan_type(), &t.columns())?))
        }
        (Element::Tableau(t), Target::Tableau) => Ok(tableau_to_json(&t)),
        (Element::Tableau(t), Target::Columns) => Ok(columns_to_json(&t.columns())),
        (Element::Rc(x), Target::Rc) => Ok(rc_to_json(&x)),
        (Element::Rc(x), target) => match (x.model(), target) {
            (RcModel::Infinity, Target::Mlt) => Ok(mlt_to_json(&psi(&x)?)),
            (RcModel::HighestWeight(_), Target::Tableau) => Ok(tableau_to_json(
                &Tableau::from_columns(x.cartan_type(), &phi(&x)?)?,
            )),
            (RcModel::HighestWeight(_), Target::Columns) => Ok(columns_to_json(&phi(&x)?)),
            (RcModel::Infinity, _) => Err(unsupported_conversion(
                "RC(infinity)",
                "a highest weight model",
            )),
            (RcModel::HighestWeight(_), _) => {
                Err(unsupported_conversion("RC(lambda)", "T(infinity)"))
            }
        },
        (Element::Mlt(_), Target::Tableau) => {
            Err(unsupported_conversion("T(infinity)", "T(lambda)"))
        }
        (Element::Tableau(_), Target::Mlt) => {
            Err(unsupported_conversion("T(lambda)", "T(infinity)"))
        }
    }
}

/// Turns an unsupported-family error into a JSON null and keeps other
/// errors.
fn or_null<T: Into<Value>>(r: CliResult<T>) -> CliResult<Value> {
    match r {
        Ok(v) => Ok(v.into()),
        Err(CrystalError::Unsupported(_)) => Ok(Value::Null),
        Err(e) => Err(e),
    }
}

fn stat(input: &str, stats: &str) -> CliResult<Value> {
    let element = element_from_json(&read_input(input)?)?;
    let wanted: Vec<&str> = stats
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = wanted
        .iter()
        .find(|s| !["seg", "rpt", "diff", "rem"].contains(s))
    {
        return Err(CrystalError::Parse(format!("unknown statistic {bad:?}")));
    }
    // The configuration carrying diff and rpt, and the tableau carrying seg.
    let (rc, mlt): (CliResult<RiggedConfiguration>, Option<CliResult<Mlt>>) = match &element {
        Element::Mlt(t) => (xi(t), Some(Ok(t.clone()))),
        Element::Rc(x) if *x.model() == RcModel::Infinity => (Ok(x.clone()), Some(psi(x))),
        Element::Rc(x) => (Ok(x.clone()), None),
        Element::Tableau(t) => (phi_inv(t.cartan_type(), &t.columns()), None),
    };
    let mut out = Map::new();
    for name in wanted {
        let value = match name {
            "seg" => match &mlt {
                Some(Ok(t)) => json!(seg(t)),
                Some(Err(CrystalError::Unsupported(_))) | None => Value::Null,
                Some(Err(e)) => return Err(e.clone()),
            },
            "rpt" => match (&rc, &element) {
                (_, Element::Tableau(_)) => Value::Null,
                (Ok(x), _) if *x.model() == RcModel::Infinity => or_null(rpt(x).map(|s| s as u64))?,
                (Ok(_), _) => Value::Null,
                (Err(e), _) => or_null::<Value>(Err(e.clone()))?,
            },
            "diff" => match &rc {
                Ok(x) => json!(diff_all(x)),
                Err(e) => or_null::<Value>(Err(e.clone()))?,
            },
            "rem" => match &element {
                Element::Mlt(t) => json!(rem_all_infinity(t)),
                Element::Rc(x) if *x.model() == RcModel::Infinity => json!(rem_all_infinity(x)),
                Element::Rc(x) => json!(rem_all_highest(x)),
                Element::Tableau(t) => json!(rem_all_highest(t)),
            },
            _ => unreachable!("checked above"),
        };
        out.insert(name.to_string(), value);
    }
    Ok(Value::Object(out))
}

fn hw(ct: &str, weight: Option<&str>, model: Model) -> CliResult<Value> {
    let ct: CartanType = ct.parse()?;
    Ok(match (weight, model) {
        (Some(w), Model::Tableaux) => tableau_to_json(&Tableau::highest(ct, &root_weight(ct, w)?)?),
        (Some(w), Model::Rc) => rc_to_json(&RiggedConfiguration::empty(
            ct,
            RcModel::HighestWeight(root_weight(ct, w)?),
        )?),
        (None, Model::Tableaux) => mlt_to_json(&Mlt::ground(ct)),
        (None, Model::Rc) => rc_to_json(&RiggedConfiguration::empty(ct, RcModel::Infinity)?),
    })
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Graph {
            ct,
            model,
            weight,
            inf: _,
            depth,
            format,
        } => graph(&ct, model, weight.as_deref(), depth, format),
        Command::Apply { input, ops } => apply(&input, &ops).map(|v| v.to_string()),
        Command::Convert { input, to, ct } => {
            convert(&input, to, ct.as_deref()).map(|v| v.to_string())
        }
        Command::Stat { input, stats } => stat(&input, &stats).map(|v| v.to_string()),
        Command::Hw {
            ct,
            weight,
            inf: _,
            model,
        } => hw(&ct, weight.as_deref(), model).map(|v| v.to_string()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout(), "{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("crystal: {e}");
            match e {
                CrystalError::Unsupported(_) => ExitCode::from(3),
                CrystalError::Parse(_) | CrystalError::Invalid(_) => ExitCode::from(2),
            }
        }
    }
}
