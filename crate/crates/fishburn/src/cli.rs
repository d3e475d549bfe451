//! Command-line front end.
//!
//! One thin binary dispatches every verb to the library:
//!
//! ```text
//! fishburn validate --kind seq|mat PAYLOAD
//! fishburn gamma MATRIX                     matrix -> sequence
//! fishburn ungamma SEQUENCE                 sequence -> matrix
//! fishburn trace SEQUENCE                   build steps, one per line
//! fishburn stats --kind seq|mat PAYLOAD     every registered statistic
//! fishburn enumerate --kind seq|mat --n N [--jobs K]
//! fishburn count --n N [--jobs K]
//! fishburn dist --stat NAME --n N [--jobs K]
//! fishburn check --theorems --n-max N
//! fishburn conjecture --n-max N
//! fishburn partition to-matrix PARTITION
//! fishburn partition from-matrix MATRIX
//! fishburn explore flip SEQUENCE | --n N
//! fishburn explore sum SEQ1 SEQ2 | --n N --m M
//! ```
//!
//! Sequences are comma-separated entries (`0,1,0`); matrices are rows
//! separated by `;` (`1,1;0,1`) or the JSON object
//! `{"dim": 2, "rows": [[1,1],[0,1]]}`; partitions are brace blocks
//! (`{1,2,3},{4,9},{5},{6,7},{8}`). Every verb accepts
//! `--format text|json`; JSON output is one object per line.
//!
//! Exit codes: 0 on success, 1 when a requested check or validation fails,
//! 2 on usage or input parse errors.

use crate::bijection::{build_trace, from_sequence, to_sequence};
use crate::enumeration::{
    all_ascent_sequences, all_ascent_sequences_partitioned, conjecture_report, distribution,
    fishburn_count, statistic, statistic_names, sum_transport, theorem_suite,
};
use crate::matrices::FishburnMatrix;
use crate::sequences::{AscentSequence, IntSequence};
use crate::subclasses::{matrix_to_partition, paren_to_blocks, partition_to_matrix, OCPartition};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use std::io::{self, Write};

const USAGE: &str = "usage: fishburn <verb> [options]

verbs:
  validate --kind seq|mat PAYLOAD       check an object; exit 1 if invalid
  gamma MATRIX                          encode a matrix as a sequence
  ungamma SEQUENCE                      decode a sequence into a matrix
  trace SEQUENCE                        per-step build rules and matrices
  stats --kind seq|mat PAYLOAD          all registered statistics
  enumerate --kind seq|mat --n N        list all objects of weight N
  count --n N                           number of objects of weight N
  dist --stat NAME --n N                statistic distribution (value<TAB>count)
  check --theorems --n-max N            run the verification suite
  conjecture --n-max N                  zeros vs increasing-prefix comparison
  partition to-matrix PARTITION         order-consecutive partition -> matrix
  partition from-matrix MATRIX          bidiagonal matrix -> partition
  explore flip SEQUENCE | --n N         antidiagonal reflection transport
  explore sum SEQ1 SEQ2 | --n N --m M   entrywise-sum transport

options:
  --format text|json   output format (default text)
  --jobs K             parallel enumeration (enumerate, count, dist)

formats:
  sequence   0,1,0
  matrix     1,1;0,1   or   {\"dim\": 2, \"rows\": [[1,1],[0,1]]}
  partition  {1,2,3},{4,9},{5},{6,7},{8}";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

struct Parsed {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positionals: Vec<String>,
}

/// Parses and dispatches; writes results to `out` and diagnostics to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    dispatch(args, out, err).unwrap_or(2)
}

fn usage_error(err: &mut dyn Write, msg: &str) -> io::Result<i32> {
    writeln!(err, "error: {msg}")?;
    writeln!(err, "{USAGE}")?;
    Ok(2)
}

fn input_error(err: &mut dyn Write, msg: &str) -> io::Result<i32> {
    writeln!(err, "error: {msg}")?;
    Ok(2)
}

fn dispatch(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let Some(verb) = args.first() else {
        return usage_error(err, "missing verb");
    };
    let rest = &args[1..];
    match verb.as_str() {
        "validate" => cmd_validate(rest, out, err),
        "gamma" => cmd_gamma(rest, out, err),
        "ungamma" => cmd_ungamma(rest, out, err),
        "trace" => cmd_trace(rest, out, err),
        "stats" => cmd_stats(rest, out, err),
        "enumerate" => cmd_enumerate(rest, out, err),
        "count" => cmd_count(rest, out, err),
        "dist" => cmd_dist(rest, out, err),
        "check" => cmd_check(rest, out, err),
        "conjecture" => cmd_conjecture(rest, out, err),
        "partition" => cmd_partition(rest, out, err),
        "explore" => cmd_explore(rest, out, err),
        "help" | "--help" | "-h" => {
            writeln!(out, "{USAGE}")?;
            Ok(0)
        }
        other => usage_error(err, &format!("unknown verb {other:?}")),
    }
}

/// Splits arguments into `--name value` pairs, bare switches, and
/// positionals. `switch_names` lists the flags that take no value.
fn parse_args(args: &[String], switch_names: &[&str]) -> Result<Parsed, String> {
    let mut parsed = Parsed {
        values: BTreeMap::new(),
        switches: BTreeSet::new(),
        positionals: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if switch_names.contains(&name) {
                parsed.switches.insert(name.to_string());
            } else {
                let Some(value) = it.next() else {
                    return Err(format!("flag --{name} needs a value"));
                };
                parsed.values.insert(name.to_string(), value.clone());
            }
        } else {
            parsed.positionals.push(arg.clone());
        }
    }
    Ok(parsed)
}

fn format_of(parsed: &Parsed) -> Result<Format, String> {
    match parsed.values.get("format").map(|s| s.as_str()) {
        None | Some("text") => Ok(Format::Text),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(format!("--format must be text or json, got {other:?}")),
    }
}

fn usize_flag(parsed: &Parsed, name: &str) -> Result<usize, String> {
    let Some(raw) = parsed.values.get(name) else {
        return Err(format!("missing required flag --{name}"));
    };
    raw.parse::<usize>()
        .map_err(|_| format!("--{name} must be a non-negative integer, got {raw:?}"))
}

fn positive_flag(parsed: &Parsed, name: &str) -> Result<usize, String> {
    let v = usize_flag(parsed, name)?;
    if v == 0 {
        return Err(format!("--{name} must be at least 1"));
    }
    Ok(v)
}

fn jobs_of(parsed: &Parsed) -> Result<usize, String> {
    match parsed.values.get("jobs") {
        None => Ok(1),
        Some(_) => positive_flag(parsed, "jobs"),
    }
}

/// Parses the text grid form without validating the matrix invariants, so
/// that shape errors and invariant violations can be told apart.
fn parse_grid_text(s: &str) -> Result<Vec<Vec<i64>>, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err("empty matrix text".into());
    }
    trimmed
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("invalid matrix entry {:?}", p.trim()))
                })
                .collect()
        })
        .collect()
}

fn parse_grid_json(s: &str) -> Result<Vec<Vec<i64>>, String> {
    let value: serde_json::Value =
        serde_json::from_str(s).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value.as_object().ok_or("JSON matrix must be an object")?;
    let rows_value = obj
        .get("rows")
        .ok_or("JSON matrix needs a \"rows\" field")?;
    let rows = rows_value
        .as_array()
        .ok_or("\"rows\" must be an array of arrays")?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "\"rows\" must be an array of arrays".to_string())?
                .iter()
                .map(|v| v.as_i64().ok_or_else(|| format!("non-integer entry {v}")))
                .collect::<Result<Vec<i64>, String>>()
        })
        .collect::<Result<Vec<Vec<i64>>, String>>()?;
    if let Some(dim) = obj.get("dim") {
        let dim = dim
            .as_u64()
            .ok_or_else(|| format!("\"dim\" must be a non-negative integer, got {dim}"))?;
        if dim as usize != rows.len() {
            return Err(format!(
                "\"dim\" is {dim} but \"rows\" has {} rows",
                rows.len()
            ));
        }
    }
    Ok(rows)
}

fn parse_grid(s: &str) -> Result<Vec<Vec<i64>>, String> {
    if s.trim_start().starts_with('{') {
        parse_grid_json(s)
    } else {
        parse_grid_text(s)
    }
}

fn parse_matrix(s: &str) -> Result<FishburnMatrix, String> {
    let grid = parse_grid(s)?;
    FishburnMatrix::validate(&grid).map_err(|e| e.to_string())
}

fn seq_json(entries: &[usize]) -> serde_json::Value {
    json!({ "entries": entries })
}

fn mat_json(a: &FishburnMatrix) -> serde_json::Value {
    json!({ "dim": a.dim(), "rows": a.rows() })
}

fn cmd_validate(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let (Some(kind), [payload]) = (parsed.values.get("kind"), &parsed.positionals[..]) else {
        return usage_error(err, "validate needs --kind seq|mat and one payload");
    };
    match kind.as_str() {
        "seq" => {
            let ints: IntSequence = match payload.parse() {
                Ok(s) => s,
                Err(e) => return input_error(err, &e.to_string()),
            };
            match AscentSequence::validate(ints) {
                Ok(x) => {
                    match format {
                        Format::Text => writeln!(out, "{x}")?,
                        Format::Json => writeln!(out, "{}", seq_json(x.entries()))?,
                    }
                    Ok(0)
                }
                Err(e) => {
                    writeln!(err, "invalid: {e}")?;
                    Ok(1)
                }
            }
        }
        "mat" => {
            let grid = match parse_grid(payload) {
                Ok(g) => g,
                Err(e) => return input_error(err, &e),
            };
            match FishburnMatrix::validate(&grid) {
                Ok(a) => {
                    match format {
                        Format::Text => writeln!(out, "{a}")?,
                        Format::Json => writeln!(out, "{}", mat_json(&a))?,
                    }
                    Ok(0)
                }
                Err(e) => {
                    writeln!(err, "invalid: {e}")?;
                    Ok(1)
                }
            }
        }
        other => usage_error(err, &format!("--kind must be seq or mat, got {other:?}")),
    }
}

fn cmd_gamma(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let [payload] = &parsed.positionals[..] else {
        return usage_error(err, "gamma needs one matrix payload");
    };
    let a = match parse_matrix(payload) {
        Ok(a) => a,
        Err(e) => return input_error(err, &e),
    };
    let x = to_sequence(&a);
    match format {
        Format::Text => writeln!(out, "{x}")?,
        Format::Json => writeln!(out, "{}", seq_json(x.entries()))?,
    }
    Ok(0)
}

fn cmd_ungamma(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let [payload] = &parsed.positionals[..] else {
        return usage_error(err, "ungamma needs one sequence payload");
    };
    let x: AscentSequence = match payload.parse() {
        Ok(x) => x,
        Err(e) => return input_error(err, &e.to_string()),
    };
    let a = from_sequence(&x);
    match format {
        Format::Text => writeln!(out, "{a}")?,
        Format::Json => writeln!(out, "{}", mat_json(&a))?,
    }
    Ok(0)
}

fn cmd_trace(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let [payload] = &parsed.positionals[..] else {
        return usage_error(err, "trace needs one sequence payload");
    };
    let x: AscentSequence = match payload.parse() {
        Ok(x) => x,
        Err(e) => return input_error(err, &e.to_string()),
    };
    for step in build_trace(&x).steps {
        let rule = step.rule.map(|r| r.to_string());
        match format {
            Format::Text => writeln!(
                out,
                "{} {} {}",
                rule.as_deref().unwrap_or("-"),
                step.label,
                step.matrix
            )?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "rule": rule, "label": step.label, "matrix": mat_json(&step.matrix) })
            )?,
        }
    }
    Ok(0)
}

fn cmd_stats(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let (Some(kind), [payload]) = (parsed.values.get("kind"), &parsed.positionals[..]) else {
        return usage_error(err, "stats needs --kind seq|mat and one payload");
    };
    let x: AscentSequence = match kind.as_str() {
        "seq" => match payload.parse() {
            Ok(x) => x,
            Err(e) => return input_error(err, &e.to_string()),
        },
        "mat" => match parse_matrix(payload) {
            Ok(a) => to_sequence(&a),
            Err(e) => return input_error(err, &e),
        },
        other => return usage_error(err, &format!("--kind must be seq or mat, got {other:?}")),
    };
    for name in statistic_names() {
        let value = statistic(name, &x).expect("registered");
        match format {
            Format::Text => writeln!(out, "{name}\t{value}")?,
            Format::Json => writeln!(out, "{}", json!({ "name": name, "value": value }))?,
        }
    }
    Ok(0)
}

fn cmd_enumerate(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let n = match positive_flag(&parsed, "n") {
        Ok(n) => n,
        Err(e) => return usage_error(err, &e),
    };
    let jobs = match jobs_of(&parsed) {
        Ok(j) => j,
        Err(e) => return usage_error(err, &e),
    };
    let Some(kind) = parsed.values.get("kind") else {
        return usage_error(err, "enumerate needs --kind seq|mat");
    };
    let sequences: Vec<AscentSequence> = if jobs > 1 {
        all_ascent_sequences_partitioned(n, jobs)
    } else {
        all_ascent_sequences(n).collect()
    };
    match kind.as_str() {
        "seq" => {
            for x in sequences {
                match format {
                    Format::Text => writeln!(out, "{x}")?,
                    Format::Json => writeln!(out, "{}", seq_json(x.entries()))?,
                }
            }
            Ok(0)
        }
        "mat" => {
            for x in sequences {
                let a = from_sequence(&x);
                match format {
                    Format::Text => writeln!(out, "{a}")?,
                    Format::Json => writeln!(out, "{}", mat_json(&a))?,
                }
            }
            Ok(0)
        }
        other => usage_error(err, &format!("--kind must be seq or mat, got {other:?}")),
    }
}

fn cmd_count(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let n = match positive_flag(&parsed, "n") {
        Ok(n) => n,
        Err(e) => return usage_error(err, &e),
    };
    let jobs = match jobs_of(&parsed) {
        Ok(j) => j,
        Err(e) => return usage_error(err, &e),
    };
    let count = if jobs > 1 {
        all_ascent_sequences_partitioned(n, jobs).len() as u64
    } else {
        fishburn_count(n)
    };
    match format {
        Format::Text => writeln!(out, "{count}")?,
        Format::Json => writeln!(out, "{}", json!({ "n": n, "count": count }))?,
    }
    Ok(0)
}

fn cmd_dist(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let n = match positive_flag(&parsed, "n") {
        Ok(n) => n,
        Err(e) => return usage_error(err, &e),
    };
    let jobs = match jobs_of(&parsed) {
        Ok(j) => j,
        Err(e) => return usage_error(err, &e),
    };
    let Some(name) = parsed.values.get("stat") else {
        return usage_error(err, "dist needs --stat NAME");
    };
    let hist = if jobs > 1 {
        let mut hist = crate::enumeration::Histogram::new();
        for x in all_ascent_sequences_partitioned(n, jobs) {
            match statistic(name, &x) {
                Ok(v) => hist.record(v),
                Err(e) => return input_error(err, &e.to_string()),
            }
        }
        hist
    } else {
        match distribution(name, n) {
            Ok(h) => h,
            Err(e) => return input_error(err, &e.to_string()),
        }
    };
    for (value, count) in hist.bins() {
        match format {
            Format::Text => writeln!(out, "{value}\t{count}")?,
            Format::Json => writeln!(out, "{}", json!({ "value": value, "count": count }))?,
        }
    }
    Ok(0)
}

fn cmd_check(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &["theorems"]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    if !parsed.switches.contains("theorems") {
        return usage_error(err, "check needs --theorems");
    }
    let n_max = match positive_flag(&parsed, "n-max") {
        Ok(n) => n,
        Err(e) => return usage_error(err, &e),
    };
    let reports = theorem_suite(n_max);
    let mut all_pass = true;
    for report in &reports {
        all_pass &= report.pass();
        match format {
            Format::Text => writeln!(out, "{report}")?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({
                    "id": report.id,
                    "n_max": report.n_max,
                    "objects": report.objects,
                    "pass": report.pass(),
                    "failures": report.failures,
                })
            )?,
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_conjecture(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let n_max = match positive_flag(&parsed, "n-max") {
        Ok(n) => n,
        Err(e) => return usage_error(err, &e),
    };
    for row in conjecture_report(n_max).rows {
        match format {
            Format::Text => writeln!(
                out,
                "n={} {}",
                row.n,
                if row.matches { "match" } else { "MISMATCH" }
            )?,
            Format::Json => writeln!(out, "{}", json!({ "n": row.n, "match": row.matches }))?,
        }
    }
    Ok(0)
}

fn cmd_partition(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let [direction, payload] = &parsed.positionals[..] else {
        return usage_error(err, "partition needs to-matrix|from-matrix and one payload");
    };
    match direction.as_str() {
        "to-matrix" => {
            let p: OCPartition = match payload.parse() {
                Ok(p) => p,
                Err(e) => return input_error(err, &e.to_string()),
            };
            let b = partition_to_matrix(&p);
            match format {
                Format::Text => writeln!(out, "{b}")?,
                Format::Json => writeln!(out, "{}", mat_json(&b))?,
            }
            Ok(0)
        }
        "from-matrix" => {
            let b = match parse_matrix(payload) {
                Ok(b) => b,
                Err(e) => return input_error(err, &e),
            };
            let rep = match matrix_to_partition(&b) {
                Ok(rep) => rep,
                Err(e) => return input_error(err, &e.to_string()),
            };
            let blocks = paren_to_blocks(&rep);
            match format {
                Format::Text => {
                    writeln!(out, "{rep}")?;
                    writeln!(out, "{blocks}")?;
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "paren": rep.to_string(), "blocks": blocks.blocks() })
                )?,
            }
            Ok(0)
        }
        other => usage_error(
            err,
            &format!("partition direction must be to-matrix or from-matrix, got {other:?}"),
        ),
    }
}

fn cmd_explore(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let parsed = match parse_args(args, &[]) {
        Ok(p) => p,
        Err(e) => return usage_error(err, &e),
    };
    let format = match format_of(&parsed) {
        Ok(f) => f,
        Err(e) => return usage_error(err, &e),
    };
    let Some((op, rest)) = parsed.positionals.split_first() else {
        return usage_error(err, "explore needs flip or sum");
    };
    match op.as_str() {
        "flip" => match rest {
            [payload] => {
                let x: AscentSequence = match payload.parse() {
                    Ok(x) => x,
                    Err(e) => return input_error(err, &e.to_string()),
                };
                let y = crate::enumeration::flip_transport(&x);
                match format {
                    Format::Text => writeln!(out, "{y}")?,
                    Format::Json => writeln!(out, "{}", seq_json(y.entries()))?,
                }
                Ok(0)
            }
            [] => {
                let n = match positive_flag(&parsed, "n") {
                    Ok(n) => n,
                    Err(e) => return usage_error(err, &e),
                };
                for x in all_ascent_sequences(n) {
                    let y = crate::enumeration::flip_transport(&x);
                    match format {
                        Format::Text => writeln!(out, "{x}\t{y}")?,
                        Format::Json => writeln!(
                            out,
                            "{}",
                            json!({ "input": x.entries(), "output": y.entries() })
                        )?,
                    }
                }
                Ok(0)
            }
            _ => usage_error(err, "explore flip takes one sequence or --n N"),
        },
        "sum" => match rest {
            [left, right] => {
                let x: AscentSequence = match left.parse() {
                    Ok(x) => x,
                    Err(e) => return input_error(err, &e.to_string()),
                };
                let y: AscentSequence = match right.parse() {
                    Ok(y) => y,
                    Err(e) => return input_error(err, &e.to_string()),
                };
                let z = match sum_transport(&x, &y) {
                    Ok(z) => z,
                    Err(e) => return input_error(err, &e.to_string()),
                };
                match format {
                    Format::Text => writeln!(out, "{z}")?,
                    Format::Json => writeln!(out, "{}", seq_json(z.entries()))?,
                }
                Ok(0)
            }
            [] => {
                let n = match positive_flag(&parsed, "n") {
                    Ok(n) => n,
                    Err(e) => return usage_error(err, &e),
                };
                let m = match positive_flag(&parsed, "m") {
                    Ok(m) => m,
                    Err(e) => return usage_error(err, &e),
                };
                let lefts: Vec<AscentSequence> = all_ascent_sequences(n).collect();
                let rights: Vec<AscentSequence> = all_ascent_sequences(m).collect();
                for x in &lefts {
                    for y in &rights {
                        // Only pairs of matching dimension are summable.
                        if x.ascents() != y.ascents() {
                            continue;
                        }
                        let z = sum_transport(x, y).expect("ascent counts agree");
                        match format {
                            Format::Text => writeln!(out, "{x}\t{y}\t{z}")?,
                            Format::Json => writeln!(
                                out,
                                "{}",
                                json!({
                                    "left": x.entries(),
                                    "right": y.entries(),
                                    "sum": z.entries(),
                                })
                            )?,
                        }
                    }
                }
                Ok(0)
            }
            _ => usage_error(err, "explore sum takes two sequences or --n N --m M"),
        },
        other => usage_error(
            err,
            &format!("explore operation must be flip or sum, got {other:?}"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gamma_and_ungamma() {
        let (code, out, _) = run_cli(&["gamma", "1,1;0,1"]);
        assert_eq!((code, out.as_str()), (0, "0,1,0\n"));
        let (code, out, _) = run_cli(&["ungamma", "0"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
    }

    #[test]
    fn json_matrix_input_and_output() {
        let (code, out, _) = run_cli(&[
            "gamma",
            r#"{"dim": 2, "rows": [[1,1],[0,1]]}"#,
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"entries\":[0,1,0]}\n");
        let (code, _, err) = run_cli(&["gamma", r#"{"dim": 3, "rows": [[1]]}"#]);
        assert_eq!(code, 2);
        assert!(err.contains("dim"));
    }

    #[test]
    fn exit_codes() {
        // Usage errors.
        assert_eq!(run_cli(&[]).0, 2);
        assert_eq!(run_cli(&["frobnicate"]).0, 2);
        assert_eq!(run_cli(&["count"]).0, 2);
        assert_eq!(run_cli(&["count", "--n", "0"]).0, 2);
        // Parse errors.
        assert_eq!(run_cli(&["gamma", "1,x;0,1"]).0, 2);
        assert_eq!(run_cli(&["ungamma", "0,bad"]).0, 2);
        // Validation failures.
        assert_eq!(run_cli(&["validate", "--kind", "seq", "0,2"]).0, 1);
        assert_eq!(run_cli(&["validate", "--kind", "mat", "0,1;0,1"]).0, 1);
        assert_eq!(run_cli(&["validate", "--kind", "seq", "0,1,0"]).0, 0);
    }

    #[test]
    fn check_verb_reports_pass() {
        let (code, out, _) = run_cli(&["check", "--theorems", "--n-max", "3"]);
        assert_eq!(code, 0);
        assert!(out.lines().count() >= 20);
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn dist_lines_are_tab_separated() {
        let (code, out, _) = run_cli(&["dist", "--stat", "zeros", "--n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\t2\n2\t2\n3\t1\n");
        let (code, _, err) = run_cli(&["dist", "--stat", "nope", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown statistic"));
    }
}
