//! Parsing of CLI arguments and JSON input files into library values.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::Value;
use ymalg_core::linalg::SparseVec;
use ymalg_core::{
    heisenberg, sl_algebra, GaussianRational, StructureConstantAlgebra, TargetElement, WittAlgebra, WittElement,
};

pub fn scalar(s: &str) -> Result<GaussianRational> {
    s.parse::<GaussianRational>().map_err(|e| anyhow!("bad scalar `{s}`: {e}"))
}

/// A scalar given either as a string or as a JSON integer.
fn scalar_value(v: &Value) -> Result<GaussianRational> {
    match v {
        Value::String(s) => scalar(s),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(GaussianRational::from_int(k)),
            None => bail!("non-integer number {n}; write fractions as strings like \"1/2\""),
        },
        other => bail!("expected a scalar string, got {other}"),
    }
}

/// The algebra a morphism lands in.
pub enum Target {
    /// A finite-dimensional algebra and its display name.
    Finite(StructureConstantAlgebra, String),
    Witt(WittAlgebra),
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::Finite(_, name) => name.clone(),
            Target::Witt(w) if w.virasoro => "virasoro".into(),
            Target::Witt(_) => "witt".into(),
        }
    }
}

/// `sl2`, `sl(3)`, `heisenberg`, `witt`, `virasoro`.
pub fn named_target(name: &str) -> Result<Target> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
    match key.as_str() {
        "witt" => return Ok(Target::Witt(WittAlgebra::witt())),
        "virasoro" => return Ok(Target::Witt(WittAlgebra::virasoro())),
        "heisenberg" => return Ok(Target::Finite(heisenberg(), "heisenberg".into())),
        _ => {}
    }
    let m = key
        .strip_prefix("sl")
        .map(|rest| rest.trim_start_matches('(').trim_end_matches(')'))
        .and_then(|d| d.parse::<usize>().ok())
        .ok_or_else(|| anyhow!("unknown target `{name}`"))?;
    if !(2..=8).contains(&m) {
        bail!("sl(m) targets need 2 ≤ m ≤ 8, got {m}");
    }
    Ok(Target::Finite(sl_algebra(m)?, format!("sl({m})")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketJson {
    i: Value,
    j: Value,
    coords: BTreeMap<String, Value>,
}

fn basis_index(labels: &[String], v: &Value) -> Result<usize> {
    match v {
        Value::Number(n) => {
            let k = n.as_u64().ok_or_else(|| anyhow!("bad basis index {n}"))? as usize;
            if k >= labels.len() {
                bail!("basis index {k} out of range");
            }
            Ok(k)
        }
        Value::String(s) => labels.iter().position(|l| l == s).ok_or_else(|| anyhow!("unknown basis label `{s}`")),
        other => bail!("expected a basis label or index, got {other}"),
    }
}

/// `{"basis": [names], "brackets": [{"i": .., "j": .., "coords": {name: scalar}}]}`.
pub fn custom_algebra(v: Value) -> Result<StructureConstantAlgebra> {
    let a: AlgebraJson = serde_json::from_value(v).context("malformed algebra JSON")?;
    let mut brackets = Vec::with_capacity(a.brackets.len());
    for b in &a.brackets {
        let (i, j) = (basis_index(&a.basis, &b.i)?, basis_index(&a.basis, &b.j)?);
        let mut pairs = Vec::new();
        for (name, c) in &b.coords {
            let k = a.basis.iter().position(|l| l == name).ok_or_else(|| anyhow!("unknown basis label `{name}`"))?;
            pairs.push((k, scalar_value(c)?));
        }
        brackets.push((i, j, SparseVec::from_pairs(pairs)));
    }
    StructureConstantAlgebra::new(a.basis, brackets).context("invalid algebra")
}

fn witt_label(label: &str) -> Result<WittElement> {
    if label == "c" {
        return Ok(WittElement::central_unit());
    }
    label
        .strip_prefix("e_")
        .and_then(|n| n.parse::<i64>().ok())
        .map(WittElement::basis)
        .ok_or_else(|| anyhow!("unknown Witt label `{label}` (use e_<n> or c)"))
}

/// An element of the target, built from `(label, coefficient)` pairs.
pub enum Element {
    Finite(TargetElement),
    Witt(WittElement),
}

pub fn combine(target: &Target, terms: &[(String, GaussianRational)]) -> Result<Element> {
    match target {
        Target::Finite(g, _) => {
            let mut x = g.zero();
            for (label, c) in terms {
                let b = g.named(label).map_err(|_| anyhow!("unknown label `{label}` for this target"))?;
                x = x.add(&b.scale(c))?;
            }
            Ok(Element::Finite(x))
        }
        Target::Witt(w) => {
            let mut x = WittElement::zero();
            for (label, c) in terms {
                let b = witt_label(label)?;
                if !w.virasoro && !b.central().is_zero() {
                    bail!("`c` only exists in the Virasoro algebra");
                }
                x = x.add(&b.scale(c));
            }
            Ok(Element::Witt(x))
        }
    }
}

/// Splits a linear combination like `E12+E23`, `(1+2i)*e - h` or `e_-2`
/// into signed terms.
pub fn parse_combination(src: &str) -> Result<Vec<(String, GaussianRational)>> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        bail!("empty element");
    }
    let chars: Vec<char> = s.chars().collect();
    let mut pieces = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (k, &ch) in chars.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    bail!("unbalanced parentheses in `{src}`");
                }
            }
            '+' | '-' if depth == 0 && k > start && !matches!(chars[k - 1], '_' | '*') => {
                pieces.push(chars[start..k].iter().collect::<String>());
                start = k;
            }
            _ => {}
        }
    }
    if depth != 0 {
        bail!("unbalanced parentheses in `{src}`");
    }
    pieces.push(chars[start..].iter().collect());

    pieces.iter().map(|p| parse_term(p).with_context(|| format!("in element `{src}`"))).collect()
}

fn parse_term(term: &str) -> Result<(String, GaussianRational)> {
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (GaussianRational::from_int(-1), &term[1..]),
        Some(b'+') => (GaussianRational::one(), &term[1..]),
        _ => (GaussianRational::one(), term),
    };
    let (coef, label) = match top_level_star(body) {
        Some(k) => {
            let c = body[..k].trim_start_matches('(').trim_end_matches(')');
            (scalar(c)?, &body[k + 1..])
        }
        None => (GaussianRational::one(), body),
    };
    if label.is_empty() || !label.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-') {
        bail!("bad label `{label}`");
    }
    Ok((label.to_string(), &sign * &coef))
}

fn top_level_star(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => found = Some(k),
            _ => {}
        }
    }
    found
}

/// The parsed contents of a morphism file.
pub struct MorphismFile {
    pub n: usize,
    pub target: Target,
    pub images: Vec<Element>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismJson {
    n: usize,
    target: Value,
    images: Vec<BTreeMap<String, Value>>,
}

/// `{"n": .., "target": "sl(2)" | .. | {"custom": algebra}, "images": [{label: scalar}]}`.
pub fn morphism_file(text: &str) -> Result<MorphismFile> {
    let raw: MorphismJson = serde_json::from_str(text).context("malformed morphism JSON")?;
    let target = match raw.target {
        Value::String(s) => named_target(&s)?,
        Value::Object(mut o) if o.len() == 1 && o.contains_key("custom") => {
            Target::Finite(custom_algebra(o.remove("custom").expect("checked"))?, "custom".into())
        }
        other => bail!("unknown target {other}"),
    };
    if raw.images.len() != raw.n {
        bail!("image arity mismatch: n = {} but {} images given", raw.n, raw.images.len());
    }
    let mut images = Vec::with_capacity(raw.n);
    for (k, map) in raw.images.iter().enumerate() {
        let terms = map
            .iter()
            .map(|(l, c)| Ok((l.clone(), scalar_value(c)?)))
            .collect::<Result<Vec<_>>>()
            .with_context(|| format!("image {}", k + 1))?;
        images.push(combine(&target, &terms).with_context(|| format!("image {}", k + 1))?);
    }
    Ok(MorphismFile { n: raw.n, target, images })
}

/// A square matrix given as nested JSON arrays of scalars.
pub fn matrix(text: &str) -> Result<Vec<Vec<GaussianRational>>> {
    let v: Value = serde_json::from_str(text).context("malformed matrix JSON")?;
    let rows = v.as_array().ok_or_else(|| anyhow!("matrix must be a JSON array of rows"))?;
    rows.iter()
        .map(|row| {
            row.as_array().ok_or_else(|| anyhow!("matrix row must be an array"))?.iter().map(scalar_value).collect()
        })
        .collect()
}
