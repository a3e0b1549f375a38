//! Command implementations behind the `equable` binary.
//!
//! Each command returns an [`Outcome`] holding the exact stdout text and the
//! process exit code: 0 for success, 1 when the inputs fall outside the
//! mathematical domain (not certified, not equable), 2 for usage errors
//! (raised by argument parsing, not here). Machine output is a JSON envelope
//! `{command, inputs, results, version}` with sorted keys; every number is
//! serialized as a decimal string so arbitrary-precision values survive any
//! consumer. The `tree` command can emit Graphviz dot instead, and `render`
//! produces a standalone SVG.

mod svg;

pub use svg::render_svg;

use crate::forest::{enumerate_tree, Tree};
use crate::intmath::{Int, Nat};
use crate::lattice::{realization_classes, realize, LatticeParallelogram};
use crate::lep::{
    classify_special, decompose, equable_parallelogram_exists, geometry, is_pythagorean,
    lep_check, GcdClass, LepPair,
};
use crate::pell::{pell_family, Family};
use num::rational::BigRational;
use num::One;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

/// What a command produced: the full stdout text and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// Text for standard output, newline-terminated.
    pub stdout: String,
    /// Process exit code: 0 success, 1 domain negative.
    pub exit_code: i32,
}

/// Output format for the `tree` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TreeFormat {
    /// JSON envelope with one flat node record per line.
    Json,
    /// Graphviz dot graph.
    Dot,
}

fn nat_value(n: &Nat) -> Value {
    Value::String(n.to_string())
}

fn int_value(n: &Int) -> Value {
    Value::String(n.to_string())
}

fn rational_value(r: &BigRational) -> Value {
    if r.denom().is_one() {
        Value::String(r.numer().to_string())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn count_value(n: usize) -> Value {
    Value::String(n.to_string())
}

/// Render a JSON value with sorted keys, one array element per line, and
/// everything else compact. This keeps node and vertex lists grep-friendly
/// while staying valid JSON.
fn write_value(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, val)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                let _ = write!(out, "{:1$}", "", indent + 2);
                let _ = write!(out, "{}: ", Value::String(key.clone()));
                write_value(val, indent + 2, out);
            }
            out.push('\n');
            let _ = write!(out, "{:1$}", "", indent);
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                let _ = write!(out, "{:1$}", "", indent + 2);
                out.push_str(&item.to_string());
            }
            out.push('\n');
            let _ = write!(out, "{:1$}", "", indent);
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn envelope(command: &str, inputs: Value, results: Value) -> String {
    let value = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

enum CheckFailure {
    NotEquable,
    NotSquareDiscriminant,
}

impl CheckFailure {
    fn reason(&self) -> &'static str {
        match self {
            CheckFailure::NotEquable => "NotEquable",
            CheckFailure::NotSquareDiscriminant => "NotSquareDiscriminant",
        }
    }
}

fn certify(a: &Nat, b: &Nat) -> Result<LepPair, CheckFailure> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if !equable_parallelogram_exists(lo, hi).expect("arguments are ordered and positive") {
        return Err(CheckFailure::NotEquable);
    }
    lep_check(lo, hi).ok_or(CheckFailure::NotSquareDiscriminant)
}

fn failure_outcome(command: &str, inputs: Value, failure: CheckFailure) -> Outcome {
    let results = json!({ "lep": false, "reason": failure.reason() });
    Outcome {
        stdout: envelope(command, inputs, results),
        exit_code: 1,
    }
}

/// Certify a side pair and report its full classification.
pub fn cmd_check(a: &Nat, b: &Nat) -> Outcome {
    let inputs = json!({ "a": nat_value(a), "b": nat_value(b) });
    let p = match certify(a, b) {
        Ok(p) => p,
        Err(failure) => return failure_outcome("check", inputs, failure),
    };
    let d = decompose(&p);
    let g = geometry(&p);
    let results = json!({
        "a": nat_value(p.a()),
        "b": nat_value(p.b()),
        "area": nat_value(&p.area()),
        "disc_root": nat_value(p.disc_root()),
        "gcd_class": Value::String(p.gcd_class().to_string()),
        "lep": true,
        "pythagorean": is_pythagorean(&p),
        "special_class": classify_special(&p).name(),
        "decomposition": {
            "k": nat_value(&d.k),
            "m": nat_value(&d.m),
            "n": nat_value(&d.n),
            "q": nat_value(&d.q),
            "r": nat_value(&d.r),
        },
        "geometry": {
            "d_long_sq": nat_value(&g.d_long_sq),
            "d_short_sq": nat_value(&g.d_short_sq),
            "h_long": rational_value(&g.h_long),
            "h_short": rational_value(&g.h_short),
            "eta_long_sq": rational_value(&g.eta_long_sq),
            "eta_short_sq": rational_value(&g.eta_short_sq),
        },
    });
    Outcome {
        stdout: envelope("check", inputs, results),
        exit_code: 0,
    }
}

fn node_records(tree: &Tree) -> Vec<Value> {
    tree.nodes
        .iter()
        .map(|node| {
            let d = decompose(&node.pair);
            let mut record = Map::new();
            record.insert("a".into(), nat_value(node.pair.a()));
            record.insert("b".into(), nat_value(node.pair.b()));
            record.insert(
                "gcd_class".into(),
                Value::String(node.pair.gcd_class().to_string()),
            );
            if let (Some(parent), Some(edge)) = (node.parent, node.edge_from_parent) {
                let parent = &tree.nodes[parent].pair;
                record.insert("parent_a".into(), nat_value(parent.a()));
                record.insert("parent_b".into(), nat_value(parent.b()));
                record.insert("edge".into(), Value::String(edge.name().into()));
            }
            record.insert("k".into(), nat_value(&d.k));
            record.insert("m".into(), nat_value(&d.m));
            record.insert("n".into(), nat_value(&d.n));
            record.insert("q".into(), nat_value(&d.q));
            Value::Object(record)
        })
        .collect()
}

fn tree_dot(tree: &Tree) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph lep_tree_gcd{} {{", tree.class);
    out.push_str("  node [shape=box];\n");
    for (i, node) in tree.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", node.pair);
    }
    for (i, node) in tree.nodes.iter().enumerate() {
        if let (Some(parent), Some(edge)) = (node.parent, node.edge_from_parent) {
            let _ = writeln!(out, "  n{parent} -> n{i} [label=\"{}\"];", edge.name());
        }
    }
    out.push_str("}\n");
    out
}

/// Enumerate one solution tree up to a side-sum bound.
pub fn cmd_tree(class: GcdClass, max_sum: &Nat, format: TreeFormat) -> Outcome {
    let tree = enumerate_tree(class, max_sum);
    let stdout = match format {
        TreeFormat::Dot => tree_dot(&tree),
        TreeFormat::Json => {
            let inputs = json!({
                "format": "json",
                "gcd": Value::String(class.to_string()),
                "max_sum": nat_value(max_sum),
            });
            let results = json!({
                "gcd_class": Value::String(class.to_string()),
                "node_count": count_value(tree.nodes.len()),
                "nodes": Value::Array(node_records(&tree)),
            });
            envelope("tree", inputs, results)
        }
    };
    Outcome {
        stdout,
        exit_code: 0,
    }
}

/// List partner sides along the ascending branch with `a` held fixed.
pub fn cmd_branch(a: &Nat, b0: &Nat, count: usize) -> Outcome {
    let inputs = json!({
        "a": nat_value(a),
        "b0": nat_value(b0),
        "count": count_value(count),
    });
    match crate::pell::branch_sequence(a, b0, count) {
        Ok(terms) => {
            let results = json!({
                "terms": terms.iter().map(nat_value).collect::<Vec<_>>(),
            });
            Outcome {
                stdout: envelope("branch", inputs, results),
                exit_code: 0,
            }
        }
        Err(_) => {
            let results = json!({ "reason": "InvalidPair" });
            Outcome {
                stdout: envelope("branch", inputs, results),
                exit_code: 1,
            }
        }
    }
}

/// List solutions and partner sides for one Pell family.
pub fn cmd_pell(family: Family, count: usize) -> Outcome {
    let inputs = json!({
        "count": count_value(count),
        "family": Value::String(family.to_string()),
    });
    let fam = pell_family(family);
    let (c, d) = fam.equation();
    let solutions: Vec<Value> = fam
        .solutions(count)
        .iter()
        .map(|s| json!({ "x": nat_value(s.x()), "y": nat_value(s.y()) }))
        .collect();
    let results = json!({
        "a_side": nat_value(&fam.a_side()),
        "b_values": fam.b_values(count).iter().map(nat_value).collect::<Vec<_>>(),
        "equation": {
            "c": Value::String(c.to_string()),
            "d": Value::String(d.to_string()),
        },
        "solutions": solutions,
    });
    Outcome {
        stdout: envelope("pell", inputs, results),
        exit_code: 0,
    }
}

/// List every equable triangle with integer sides.
pub fn cmd_triangles() -> Outcome {
    let triangles: Vec<Value> = crate::lep::enumerate_equable_triangles()
        .iter()
        .map(|(a, b, c)| Value::Array(vec![nat_value(a), nat_value(b), nat_value(c)]))
        .collect();
    let results = json!({
        "count": count_value(triangles.len()),
        "triangles": triangles,
    });
    Outcome {
        stdout: envelope("triangles", json!({}), results),
        exit_code: 0,
    }
}

fn vertices_value(lp: &LatticeParallelogram) -> Value {
    Value::Array(
        lp.vertices()
            .iter()
            .map(|v| Value::Array(vec![int_value(&v.x), int_value(&v.y)]))
            .collect(),
    )
}

/// Draw a certified pair on the lattice, optionally listing all
/// equivalence classes of drawings.
pub fn cmd_realize(a: &Nat, b: &Nat, all_classes: bool) -> Outcome {
    let inputs = json!({
        "a": nat_value(a),
        "all_classes": all_classes,
        "b": nat_value(b),
    });
    let p = match certify(a, b) {
        Ok(p) => p,
        Err(failure) => return failure_outcome("realize", inputs, failure),
    };
    let results = if all_classes {
        let classes: Vec<Value> = realization_classes(&p)
            .iter()
            .map(|c| json!({ "vertices": vertices_value(c) }))
            .collect();
        json!({
            "class_count": count_value(classes.len()),
            "classes": classes,
        })
    } else {
        json!({ "vertices": vertices_value(&realize(&p)) })
    };
    Outcome {
        stdout: envelope("realize", inputs, results),
        exit_code: 0,
    }
}

/// What `render` produced: the SVG document when the pair certifies, plus
/// the report for stdout.
pub struct RenderOutcome {
    /// The SVG document to write, present only on success.
    pub svg: Option<String>,
    /// Report and exit code for the terminal.
    pub report: Outcome,
}

/// Draw a certified pair as a standalone SVG figure.
pub fn cmd_render(a: &Nat, b: &Nat, out: &str) -> RenderOutcome {
    let inputs = json!({
        "a": nat_value(a),
        "b": nat_value(b),
        "out": out,
    });
    let p = match certify(a, b) {
        Ok(p) => p,
        Err(failure) => {
            return RenderOutcome {
                svg: None,
                report: failure_outcome("render", inputs, failure),
            }
        }
    };
    let svg = render_svg(&p, &realize(&p));
    let results = json!({
        "area": nat_value(&p.area()),
        "out": out,
    });
    RenderOutcome {
        svg: Some(svg),
        report: Outcome {
            stdout: envelope("render", inputs, results),
            exit_code: 0,
        },
    }
}
