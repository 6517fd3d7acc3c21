//! Command-line front end: reads a JSON spec, runs one command, prints JSON
//! (or text for `check`).
//!
//! Exit codes: 0 success, 1 invalid input, 2 failed invariant.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use extorder::activity::{self, TutteMethod};
use extorder::antimatroid::Antimatroid;
use extorder::check::{self, Report};
use extorder::external::{self, ExternalOrder};
use extorder::io::{self as eio, set_value, NodeLabels, Parsed, Spec};
use extorder::jd::{self, LatticeClass};
use extorder::minors::{self, MinorSpec};
use extorder::{Error, Subset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "extorder", version, about = "External orders of ordered matroids and antimatroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// External order lattice of a matroid as JSON.
    ExtOrder {
        /// Spec file, or `-` for stdin.
        spec: String,
        /// Also write the Hasse diagram in DOT format to this file.
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
        /// Label DOT nodes by passive sets instead of independent sets.
        #[arg(long)]
        feasible_labels: bool,
        /// Include the classical order on bases, in its original orientation.
        #[arg(long)]
        las_vergnas: bool,
        /// Use the internal order (external order of the dual).
        #[arg(long)]
        internal: bool,
    },
    /// Classify the lattice of a matroid, antimatroid or Hasse diagram.
    Classify { spec: String },
    /// Tutte polynomial by activities and by corank-nullity.
    Tutte { spec: String },
    /// The partition of 2^E into intervals [I, I ∪ EA(I)].
    Partition { spec: String },
    /// Antimatroid minor: contract, then delete.
    Minor {
        spec: String,
        /// Elements to delete, e.g. `1,3` or `ac`.
        #[arg(long, default_value = "")]
        delete: String,
        /// Elements to contract.
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Rooted circuits (and loops) of the antimatroid.
    Circuits { spec: String },
    /// Run every invariant sweep that applies to the input.
    Check { spec: String },
}

enum Failure {
    Invalid(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (code, text) = match dispatch(cli.command) {
        Ok(text) => (EXIT_OK, text),
        Err(Failure::Invalid(m)) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_INVALID;
        }
        Err(Failure::Invariant(m)) => (EXIT_INVARIANT, m),
    };
    let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
    let _ = target.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = target.write_all(b"\n");
    }
    code
}

fn read_spec(path: &str) -> Result<Parsed, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{path}: {e}")))?
    };
    Ok(eio::parse_spec(&text)?)
}

/// Indented JSON that keeps arrays of scalars, and arrays of those, on one
/// line.
fn pretty(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_flat) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad);
                render(x, depth + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(key.clone())));
                render(x, depth + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn matroid_of(p: Parsed, command: &str) -> Result<extorder::Matroid, Failure> {
    match p.spec {
        Spec::Matroid(m) => Ok(m),
        _ => Err(Failure::Invalid(format!("{command} needs a matroid spec"))),
    }
}

fn antimatroid_of(p: Parsed) -> Result<Antimatroid, Failure> {
    Ok(match p.spec {
        Spec::Matroid(m) => external::build(&m)?.antimatroid().clone(),
        Spec::Antimatroid(a) => a,
        Spec::Lattice(l) => extorder::lattice::t_map(&extorder::lattice::Lattice::new(&l)?)?,
    })
}

/// Parses `1,3`, `a,c` or `ac` into a set; the empty string is `∅`.
fn parse_set(text: &str, universe: usize) -> Result<Subset, Failure> {
    let mut out = Subset::EMPTY;
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let elems: Vec<usize> = if token.chars().all(|c| c.is_ascii_lowercase()) {
            token.bytes().map(|c| (c - b'a') as usize).collect()
        } else {
            match token.parse::<usize>() {
                Ok(x) if x >= 1 => vec![x - 1],
                _ => return Err(Failure::Invalid(format!("bad element {token:?}"))),
            }
        };
        for x in elems {
            if x >= universe {
                return Err(Failure::Invalid(format!("element {} outside the ground set", x + 1)));
            }
            out = out.with(x);
        }
    }
    Ok(out)
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::ExtOrder {
            spec,
            dot,
            feasible_labels,
            las_vergnas,
            internal,
        } => {
            let m = matroid_of(read_spec(&spec)?, "ext-order")?;
            let eo = if internal {
                external::internal_order(&m)?
            } else {
                external::build(&m)?
            };
            let mut v = eio::external_order_value(&eo);
            if las_vergnas {
                v["las_vergnas"] = las_vergnas_covers(&eo)?;
            }
            if let Some(path) = dot {
                let labels = if feasible_labels {
                    NodeLabels::Feasible
                } else {
                    NodeLabels::Independent
                };
                fs::write(&path, eio::export_dot(eo.lattice(), labels))
                    .map_err(|e| Failure::Invalid(format!("{path}: {e}")))?;
            }
            Ok(pretty(&v))
        }
        Command::Classify { spec } => {
            let class = match read_spec(&spec)?.spec {
                Spec::Matroid(m) => jd::classify_antimatroid(external::build(&m)?.antimatroid())?,
                Spec::Antimatroid(a) => jd::classify_antimatroid(&a)?,
                Spec::Lattice(p) => jd::classify(&p)?,
            };
            Ok(pretty(&class_value(&class)))
        }
        Command::Tutte { spec } => {
            let m = matroid_of(read_spec(&spec)?, "tutte")?;
            let a = activity::tutte(&m, TutteMethod::Activity);
            let r = activity::tutte(&m, TutteMethod::CorankNullity);
            let terms = |t: &activity::TuttePolynomial| -> Value {
                Value::Array(
                    t.terms()
                        .map(|((i, j), c)| json!([i, j, c]))
                        .collect(),
                )
            };
            let v = json!({
                "polynomial": a.to_string(),
                "activity": terms(&a),
                "corank_nullity": terms(&r),
                "agree": a == r,
            });
            if a == r {
                Ok(pretty(&v))
            } else {
                Err(Failure::Invariant(pretty(&v)))
            }
        }
        Command::Partition { spec } => {
            let m = matroid_of(read_spec(&spec)?, "partition")?;
            let eo = external::build(&m)?;
            let p = eo.boolean_partition()?;
            let intervals: Vec<Value> = p
                .intervals
                .iter()
                .map(|&(i, ea)| {
                    Ok(json!({
                        "independent": set_value(i),
                        "active": set_value(ea),
                        "passive": set_value(eo.passive(i)?),
                    }))
                })
                .collect::<Result<_, Error>>()?;
            Ok(pretty(&Value::Array(intervals)))
        }
        Command::Minor {
            spec,
            delete,
            contract,
        } => {
            let parsed = read_spec(&spec)?;
            let matroid = match &parsed.spec {
                Spec::Matroid(m) => Some(m.clone()),
                _ => None,
            };
            let a = antimatroid_of(parsed)?;
            let universe = a.ground().last().map_or(0, |x| x + 1);
            let ms = MinorSpec::new(parse_set(&delete, universe)?, parse_set(&contract, universe)?)?;
            let minor = minors::anti_delete(&minors::anti_contract(&a, ms.contract)?, ms.delete)?;
            let mut v = json!({
                "ground": set_value(minor.ground()),
                "feasible": Value::Array(minor.feasible_sets().iter().map(|&s| set_value(s)).collect()),
            });
            if let Some(m) = matroid {
                let mm = m.minor(ms.delete, ms.contract)?;
                let ext = external::build(&mm)?;
                v["matroid_minor_external"] = Value::Array(
                    ext.antimatroid().feasible_sets().iter().map(|&s| set_value(s)).collect(),
                );
            }
            Ok(pretty(&v))
        }
        Command::Circuits { spec } => {
            let a = antimatroid_of(read_spec(&spec)?)?;
            let circuits: Vec<Value> = a
                .rooted_circuits()
                .iter()
                .map(|c| json!({"set": set_value(c.set), "root": c.root + 1}))
                .collect();
            Ok(pretty(&json!({"circuits": circuits, "loops": set_value(a.loops())})))
        }
        Command::Check { spec } => {
            let report = match read_spec(&spec)?.spec {
                Spec::Matroid(m) => check::check_matroid(&m)?,
                Spec::Antimatroid(a) => check::check_antimatroid(&a),
                Spec::Lattice(p) => check::check_lattice(&p)?,
            };
            let text = report_text(&report);
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Invariant(text))
            }
        }
    }
}

fn las_vergnas_covers(eo: &ExternalOrder) -> Result<Value, Failure> {
    let bases = eo.matroid().bases();
    let mut below = Vec::new();
    for &b1 in bases {
        for &b2 in bases {
            if b1 != b2 && eo.las_vergnas_leq(b1, b2)? {
                below.push((b1, b2));
            }
        }
    }
    let covers: Vec<Value> = below
        .iter()
        .filter(|&&(b1, b2)| {
            !bases
                .iter()
                .any(|&c| c != b1 && c != b2 && below.contains(&(b1, c)) && below.contains(&(c, b2)))
        })
        .map(|&(b1, b2)| json!([set_value(b1), set_value(b2)]))
        .collect();
    Ok(Value::Array(covers))
}

fn class_value(c: &LatticeClass) -> Value {
    json!({
        "kind": c.kind.as_str(),
        "join_distributive": c.join_distributive,
        "matroidal": c.matroidal,
        "confluent": c.confluent,
        "order": c.order.as_ref().map(|o| o.sequence().iter().map(|x| x + 1).collect::<Vec<_>>()),
        "witness": c.witness,
    })
}

fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for (name, outcome) in &r.entries {
        match outcome {
            Ok(()) => out.push_str(&format!("PASS {name}\n")),
            Err(m) => out.push_str(&format!("FAIL {name}: {m}\n")),
        }
    }
    out
}
