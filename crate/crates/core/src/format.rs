//! Line-oriented text formats for instances, JSON for solutions and
//! certificates.
//!
//! ```text
//! TREE v1                         one string per line, `-` for ε
//! CETREE v1 horizon=H [branching=b]   `<stage> <string>`
//! COLORING v1 k=K horizon=H       `<x> <y> <color>` for every pair
//! ORDER v1 horizon=H              `<x> <y>` meaning x <_L y
//! UNARY v1 k=K horizon=H          `<x> <color>`
//! SET v1 depth=D                  one member per line; family in the sidecar
//! APPROX v1 count=N horizon=H     `<e> <x> <s> <s> …` toggle stages of x in A_e
//! ```
//!
//! Certificates live in a JSON sidecar next to the instance (`<file>.cert.json`).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::{
    Approx2Sequence, BranchingSet, Family, FiniteTreeSnapshot, LimitCertificate, LinearOrderInstance, PairColoring,
    Solution, StagedTree, Str, Target, UnaryColoring,
};

/// Any instance a file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyInstance {
    Tree(FiniteTreeSnapshot),
    Staged(StagedTree),
    Coloring(PairColoring),
    Order(LinearOrderInstance),
    Unary(UnaryColoring),
    Set(BranchingSet),
    Approx(Approx2Sequence),
}

impl AnyInstance {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyInstance::Tree(_) => "TREE",
            AnyInstance::Staged(_) => "CETREE",
            AnyInstance::Coloring(_) => "COLORING",
            AnyInstance::Order(_) => "ORDER",
            AnyInstance::Unary(_) => "UNARY",
            AnyInstance::Set(_) => "SET",
            AnyInstance::Approx(_) => "APPROX",
        }
    }

    /// The validation target, if solutions of this instance can be checked.
    /// Staged trees are checked against their final snapshot, held in `scratch`.
    pub fn target<'a>(&'a self, scratch: &'a mut Option<FiniteTreeSnapshot>) -> Option<Target<'a>> {
        match self {
            AnyInstance::Tree(t) => Some(Target::Tree(t)),
            AnyInstance::Staged(t) => Some(Target::Tree(scratch.insert(t.snapshot()))),
            AnyInstance::Coloring(f) => Some(Target::Coloring(f)),
            AnyInstance::Order(l) => Some(Target::Order(l)),
            AnyInstance::Unary(u) => Some(Target::Unary(u)),
            AnyInstance::Set(s) => Some(Target::Set(s)),
            AnyInstance::Approx(_) => None,
        }
    }
}

fn write_str(out: &mut String, s: &Str) {
    if s.is_empty() {
        out.push('-');
    } else {
        let items: Vec<String> = s.items().iter().map(u64::to_string).collect();
        out.push_str(&items.join(" "));
    }
}

fn parse_str(tokens: &[&str], line: usize) -> Result<Str> {
    if tokens == ["-"] {
        return Ok(Str::empty());
    }
    tokens
        .iter()
        .map(|t| t.parse::<u64>().map_err(|_| perr(line, format!("bad natural {t:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Str::new)
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Serializes the instance body; byte-stable.
pub fn render(inst: &AnyInstance) -> String {
    let mut out = String::new();
    match inst {
        AnyInstance::Tree(t) => {
            out.push_str("TREE v1\n");
            for s in t.iter() {
                write_str(&mut out, s);
                out.push('\n');
            }
        }
        AnyInstance::Staged(t) => {
            let _ = write!(out, "CETREE v1 horizon={}", t.horizon());
            if let Some(b) = t.max_branching() {
                let _ = write!(out, " branching={b}");
            }
            out.push('\n');
            let mut entries: Vec<(usize, &Str)> = t.entries().map(|(s, st)| (st, s)).collect();
            entries.sort();
            for (st, s) in entries {
                let _ = write!(out, "{st} ");
                write_str(&mut out, s);
                out.push('\n');
            }
        }
        AnyInstance::Coloring(f) => {
            let _ = writeln!(out, "COLORING v1 k={} horizon={}", f.num_colors(), f.horizon());
            for (x, y, c) in f.pairs() {
                let _ = writeln!(out, "{x} {y} {c}");
            }
        }
        AnyInstance::Order(l) => {
            let _ = writeln!(out, "ORDER v1 horizon={}", l.horizon());
            for (x, y) in l.transitive_reduction() {
                let _ = writeln!(out, "{x} {y}");
            }
        }
        AnyInstance::Unary(u) => {
            let _ = writeln!(out, "UNARY v1 k={} horizon={}", u.num_colors(), u.horizon());
            for (x, c) in u.values().iter().enumerate() {
                let _ = writeln!(out, "{x} {c}");
            }
        }
        AnyInstance::Set(s) => {
            let _ = writeln!(out, "SET v1 depth={}", s.depth());
            for m in s.members() {
                write_str(&mut out, m);
                out.push('\n');
            }
        }
        AnyInstance::Approx(a) => {
            let _ = writeln!(out, "APPROX v1 count={} horizon={}", a.count(), a.horizon());
            for e in 0..a.count() {
                for (x, stages) in a.toggles(e) {
                    let _ = write!(out, "{e} {x}");
                    for s in stages {
                        let _ = write!(out, " {s}");
                    }
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// The certificate sidecar, for instances that carry one.
pub fn render_sidecar(inst: &AnyInstance) -> Option<Value> {
    match inst {
        AnyInstance::Set(s) => Some(serde_json::json!({ "family": s.family(), "depth": s.depth() })),
        AnyInstance::Coloring(f) => f.certificate().map(|c| serde_json::json!({ "limit": c })),
        _ => None,
    }
}

fn header_params(header: &str, line: usize) -> Result<BTreeMap<String, u64>> {
    header
        .split_whitespace()
        .skip(2)
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| perr(line, format!("expected key=value, got {kv:?}")))?;
            let v = v
                .parse::<u64>()
                .map_err(|_| perr(line, format!("bad value in {kv:?}")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn param(params: &BTreeMap<String, u64>, key: &str) -> Result<u64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| perr(1, format!("missing header field {key}")))
}

fn nums(tokens: &[&str], line: usize) -> Result<Vec<u64>> {
    tokens
        .iter()
        .map(|t| t.parse::<u64>().map_err(|_| perr(line, format!("bad natural {t:?}"))))
        .collect()
}

/// Parses an instance body; `sidecar` supplies certificates.
pub fn parse(text: &str, sidecar: Option<&Value>) -> Result<AnyInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    if words.next() != Some("v1") {
        return Err(perr(hl, "expected version v1"));
    }
    let params = header_params(header, hl)?;
    let body: Vec<(usize, Vec<&str>)> = lines.map(|(i, l)| (i, l.split_whitespace().collect())).collect();
    let invalid = |e: Error| match e {
        Error::Parse { .. } => e,
        other => perr(hl, other.to_string()),
    };
    match kind {
        "TREE" => {
            let nodes = body.iter().map(|(i, t)| parse_str(t, *i)).collect::<Result<Vec<_>>>()?;
            Ok(AnyInstance::Tree(FiniteTreeSnapshot::new(nodes).map_err(invalid)?))
        }
        "CETREE" => {
            let horizon = param(&params, "horizon")? as usize;
            let entries = body
                .iter()
                .map(|(i, t)| {
                    let (st, rest) = t.split_first().ok_or_else(|| perr(*i, "missing stage"))?;
                    let st = st.parse::<usize>().map_err(|_| perr(*i, "bad stage"))?;
                    if rest.is_empty() {
                        return Err(perr(*i, "missing string"));
                    }
                    Ok((st, parse_str(rest, *i)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut t = StagedTree::new(horizon, entries).map_err(invalid)?;
            if let Some(&b) = params.get("branching") {
                t = t.with_max_branching(b as usize);
            }
            Ok(AnyInstance::Staged(t))
        }
        "COLORING" => {
            let k = param(&params, "k")? as u8;
            let horizon = param(&params, "horizon")?;
            let mut table: BTreeMap<(u64, u64), u8> = BTreeMap::new();
            for (i, t) in &body {
                let v = nums(t, *i)?;
                let [x, y, c] = v[..] else {
                    return Err(perr(*i, "expected `<x> <y> <color>`"));
                };
                if x >= y || y >= horizon || c >= k as u64 {
                    return Err(perr(*i, format!("entry ({x}, {y}, {c}) out of range")));
                }
                table.insert((x, y), c as u8);
            }
            let expected = horizon * horizon.saturating_sub(1) / 2;
            if table.len() as u64 != expected {
                return Err(perr(hl, format!("{} of {expected} pairs colored", table.len())));
            }
            let mut f = PairColoring::from_fn(k, horizon, |x, y| table[&(x, y)]).map_err(invalid)?;
            if let Some(cert) = sidecar.and_then(|v| v.get("limit")) {
                let cert: LimitCertificate =
                    serde_json::from_value(cert.clone()).map_err(|e| perr(0, format!("sidecar: {e}")))?;
                f = f.with_certificate(cert);
            }
            Ok(AnyInstance::Coloring(f))
        }
        "ORDER" => {
            let horizon = param(&params, "horizon")? as usize;
            let facts = body
                .iter()
                .map(|(i, t)| match nums(t, *i)?[..] {
                    [x, y] => Ok((x, y)),
                    _ => Err(perr(*i, "expected `<x> <y>`")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyInstance::Order(
                LinearOrderInstance::from_relation(horizon, &facts).map_err(invalid)?,
            ))
        }
        "UNARY" => {
            let k = param(&params, "k")? as u8;
            let horizon = param(&params, "horizon")? as usize;
            let mut values = vec![None; horizon];
            for (i, t) in &body {
                let [x, c] = nums(t, *i)?[..] else {
                    return Err(perr(*i, "expected `<x> <color>`"));
                };
                let slot = values
                    .get_mut(x as usize)
                    .ok_or_else(|| perr(*i, "point beyond horizon"))?;
                *slot = Some(c as u8);
            }
            let values = values
                .into_iter()
                .enumerate()
                .map(|(x, c)| c.ok_or_else(|| perr(hl, format!("point {x} uncolored"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyInstance::Unary(UnaryColoring::new(k, values).map_err(invalid)?))
        }
        "SET" => {
            let depth = param(&params, "depth")? as usize;
            let members = body.iter().map(|(i, t)| parse_str(t, *i)).collect::<Result<Vec<_>>>()?;
            let family = match sidecar.and_then(|v| v.get("family")) {
                Some(f) => serde_json::from_value(f.clone()).map_err(|e| perr(0, format!("sidecar: {e}")))?,
                None => Family::Finite {
                    members: members.clone(),
                },
            };
            let set = BranchingSet::generate(family, depth).map_err(invalid)?;
            let mut listed = members;
            crate::model::stream_order(&mut listed);
            if listed != set.members() {
                return Err(perr(hl, "members disagree with the certificate"));
            }
            Ok(AnyInstance::Set(set))
        }
        "APPROX" => {
            let count = param(&params, "count")? as usize;
            let horizon = param(&params, "horizon")?;
            let entries = body
                .iter()
                .map(|(i, t)| {
                    let v = nums(t, *i)?;
                    if v.len() < 2 {
                        return Err(perr(*i, "expected `<e> <x> <stages…>`"));
                    }
                    Ok((v[0] as usize, v[1], v[2..].to_vec()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyInstance::Approx(
                Approx2Sequence::from_toggles(count, horizon, entries).map_err(invalid)?,
            ))
        }
        other => Err(perr(hl, format!("unknown format {other:?}"))),
    }
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".cert.json");
    PathBuf::from(name)
}

/// Reads an instance and its sidecar, if present.
pub fn load(path: &Path) -> Result<AnyInstance> {
    let text = std::fs::read_to_string(path)?;
    let side = sidecar_path(path);
    let sidecar = if side.exists() {
        let raw = std::fs::read_to_string(&side)?;
        Some(serde_json::from_str::<Value>(&raw).map_err(|e| perr(0, format!("sidecar: {e}")))?)
    } else {
        None
    };
    parse(&text, sidecar.as_ref())
}

/// Writes an instance and, if it has one, its sidecar.
pub fn save(path: &Path, inst: &AnyInstance) -> Result<()> {
    std::fs::write(path, render(inst))?;
    if let Some(side) = render_sidecar(inst) {
        std::fs::write(
            sidecar_path(path),
            serde_json::to_string_pretty(&side).expect("json") + "\n",
        )?;
    }
    Ok(())
}

pub fn load_solution(path: &Path) -> Result<Solution> {
    let raw = std::fs::read_to_string(path)?;
    serde_json::from_str(&raw).map_err(|e| perr(e.line(), e.to_string()))
}

pub fn save_solution(path: &Path, sol: &Solution) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(sol).expect("json") + "\n")?;
    Ok(())
}
