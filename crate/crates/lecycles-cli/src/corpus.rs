//! Corpus entry files: a flat `key = value` text format, one entry per
//! file. Lists are whitespace-separated; points and polynomial lists use
//! `;` between items. `expect.*` keys pin oracle-certified outputs.

use std::collections::BTreeSet;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use lecycles::basis::Ideal;
use lecycles::poly::{parse, Polynomial, Rational, Ring};
use lecycles::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameSpec {
    Identity,
    Random,
}

/// Pinned expected outputs; every field optional so entries can be checked
/// before the oracle step fills them in.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Expectations {
    pub s: Option<usize>,
    pub mu0: Option<usize>,
    pub lambdas: Option<Vec<usize>>,
    pub generic_le: Option<usize>,
    pub sample_milnors: Option<Vec<usize>>,
    pub c1: Option<bool>,
    pub c2: Option<bool>,
    pub c4: Option<bool>,
    pub c5: Option<bool>,
    pub implication_ok: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Arc<Ring>,
    pub f: Polynomial,
    pub f_text: String,
    pub expected_s: usize,
    pub frame: FrameSpec,
    pub seeds: Vec<u64>,
    pub samples: Vec<Vec<Rational>>,
    pub y_ideal: Option<Ideal>,
    pub main_theorem: bool,
    pub expect: Expectations,
}

fn input<T: std::fmt::Display>(msg: T) -> Error {
    Error::Input(msg.to_string())
}

fn parse_rational(tok: &str) -> Result<Rational> {
    Rational::from_str(tok).map_err(|e| input(format!("bad rational '{tok}': {e}")))
}

fn split_list(value: &str) -> Vec<&str> {
    value.split_whitespace().collect()
}

fn parse_point(text: &str, n: usize) -> Result<Vec<Rational>> {
    let coords: Vec<Rational> = split_list(text)
        .into_iter()
        .map(parse_rational)
        .collect::<Result<_>>()?;
    if coords.len() != n {
        return Err(input(format!(
            "point '{}' has {} coordinates, expected {n}",
            text.trim(),
            coords.len()
        )));
    }
    Ok(coords)
}

/// Parses `--point` style input: comma- or whitespace-separated rationals.
pub fn parse_cli_point(text: &str, n: usize) -> Result<Vec<Rational>> {
    parse_point(&text.replace(',', " "), n)
}

pub fn load_entry(path: &Path) -> Result<CorpusEntry> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    parse_entry(&text, path)
}

fn parse_entry(text: &str, path: &Path) -> Result<CorpusEntry> {
    let mut kv: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(input(format!(
                "{}:{}: expected 'key = value'",
                path.display(),
                lineno + 1
            )));
        };
        kv.push((k.trim().to_string(), v.trim().to_string()));
    }
    let mut seen = BTreeSet::new();
    for (k, _) in &kv {
        if !seen.insert(k.clone()) {
            return Err(input(format!("{}: duplicate key '{k}'", path.display())));
        }
    }
    let get = |key: &str| kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
    let require = |key: &str| {
        get(key).ok_or_else(|| input(format!("{}: missing key '{key}'", path.display())))
    };

    let name = require("name")?.to_string();
    let vars = split_list(require("variables")?);
    let ring = Ring::new(&vars)?;
    let n = ring.num_vars();
    let f_text = require("f")?.to_string();
    let f = parse(&f_text, &ring)?;
    let expected_s: usize = require("expected_s")?
        .parse()
        .map_err(|e| input(format!("bad expected_s: {e}")))?;
    let frame = match require("frame")? {
        "identity" => FrameSpec::Identity,
        "random" => FrameSpec::Random,
        other => return Err(input(format!("frame must be identity|random, got '{other}'"))),
    };
    let seeds: Vec<u64> = match get("seeds") {
        None => Vec::new(),
        Some(v) => split_list(v)
            .into_iter()
            .map(|t| t.parse().map_err(|e| input(format!("bad seed '{t}': {e}"))))
            .collect::<Result<_>>()?,
    };
    let samples: Vec<Vec<Rational>> = match get("samples") {
        None => Vec::new(),
        Some(v) => v
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_point(s, n))
            .collect::<Result<_>>()?,
    };
    let y_ideal = match get("y_ideal") {
        None => None,
        Some(v) => {
            let gens: Vec<Polynomial> = v
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse(s.trim(), &ring))
                .collect::<Result<_>>()?;
            Some(Ideal::new(&ring, gens))
        }
    };
    let main_theorem = match get("main_theorem") {
        None => y_ideal.is_some(),
        Some(v) => parse_bool(v)?,
    };

    let expect = Expectations {
        s: opt_usize(get("expect.s"))?,
        mu0: opt_usize(get("expect.mu0"))?,
        lambdas: opt_usize_list(get("expect.lambdas"))?,
        generic_le: opt_usize(get("expect.generic_le"))?,
        sample_milnors: opt_usize_list(get("expect.sample_milnors"))?,
        c1: opt_bool(get("expect.c1"))?,
        c2: opt_bool(get("expect.c2"))?,
        c4: opt_bool(get("expect.c4"))?,
        c5: opt_bool(get("expect.c5"))?,
        implication_ok: opt_bool(get("expect.implication_ok"))?,
    };

    for (k, _) in &kv {
        if !KNOWN_KEYS.contains(&k.as_str()) {
            return Err(input(format!("{}: unknown key '{k}'", path.display())));
        }
    }

    Ok(CorpusEntry {
        name,
        ring,
        f,
        f_text,
        expected_s,
        frame,
        seeds,
        samples,
        y_ideal,
        main_theorem,
        expect,
    })
}

const KNOWN_KEYS: &[&str] = &[
    "name",
    "variables",
    "f",
    "expected_s",
    "frame",
    "seeds",
    "samples",
    "y_ideal",
    "main_theorem",
    "expect.s",
    "expect.mu0",
    "expect.lambdas",
    "expect.generic_le",
    "expect.sample_milnors",
    "expect.c1",
    "expect.c2",
    "expect.c4",
    "expect.c5",
    "expect.implication_ok",
];

fn parse_bool(v: &str) -> Result<bool> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(input(format!("expected true|false, got '{other}'"))),
    }
}

fn opt_bool(v: Option<&str>) -> Result<Option<bool>> {
    v.map(parse_bool).transpose()
}

fn opt_usize(v: Option<&str>) -> Result<Option<usize>> {
    v.map(|t| t.parse().map_err(|e| input(format!("bad integer '{t}': {e}"))))
        .transpose()
}

fn opt_usize_list(v: Option<&str>) -> Result<Option<Vec<usize>>> {
    v.map(|t| {
        split_list(t)
            .into_iter()
            .map(|x| x.parse().map_err(|e| input(format!("bad integer '{x}': {e}"))))
            .collect()
    })
    .transpose()
}
