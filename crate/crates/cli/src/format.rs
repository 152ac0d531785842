//! Line-based text formats for implicational bases and set families.
//!
//! ```text
//! # base file
//! ground 1 2 3 4 5
//! imp 1 5 -> 2 3
//!
//! # family file
//! ground 1 2 3 4 5
//! set 3 5          plain member
//! set 2 : 3 5      member attached to 2
//! set 4 : -        the empty set
//! ```

use std::sync::Arc;

use cskit::base::{Implication, ImplicationalBase};
use cskit::set::{AttachedFamily, Element, ElementSet, GroundSet, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_ground<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Arc<GroundSet>, FormatError> {
    let (no, line) = lines.next().ok_or_else(|| err(0, "missing ground line"))?;
    let mut toks = line.split_whitespace();
    if toks.next() != Some("ground") {
        return Err(err(no, "first line must be a ground line"));
    }
    GroundSet::new(toks).map_err(|e| err(no, e.to_string()))
}

fn parse_tokens(ground: &GroundSet, toks: &[&str], no: usize) -> Result<ElementSet, FormatError> {
    if toks == ["-"] {
        return Ok(ground.empty_set());
    }
    let mut set = ground.empty_set();
    for t in toks {
        let e = ground.element(t).map_err(|e| err(no, e.to_string()))?;
        set.insert(e);
    }
    Ok(set)
}

/// Parses a base file. Implications are kept as written, including empty
/// premises and duplicates; algorithms normalize or reject them.
pub fn parse_base(text: &str) -> Result<ImplicationalBase, FormatError> {
    let mut lines = content_lines(text);
    let ground = parse_ground(&mut lines)?;
    let mut imps = Vec::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "imp" {
            return Err(err(no, format!("expected an imp line, found {:?}", toks[0])));
        }
        let arrow = toks
            .iter()
            .position(|t| *t == "->")
            .ok_or_else(|| err(no, "implication without ->"))?;
        let premise = parse_tokens(&ground, &toks[1..arrow], no)?;
        let conclusion = parse_tokens(&ground, &toks[arrow + 1..], no)?;
        if conclusion.is_empty() {
            return Err(err(no, "implication has an empty conclusion"));
        }
        imps.push(Implication::raw(premise, conclusion));
    }
    ImplicationalBase::with_empty_premises(ground, imps).map_err(|e| err(0, e.to_string()))
}

fn join(ground: &GroundSet, set: &ElementSet) -> String {
    if set.is_empty() {
        "-".into()
    } else {
        ground.format_set(set)
    }
}

pub fn ground_line(ground: &GroundSet) -> String {
    format!("ground {}", ground.names().join(" "))
}

pub fn write_base(ib: &ImplicationalBase) -> String {
    let g = ib.ground();
    let mut out = ground_line(g);
    out.push('\n');
    for imp in ib.implications() {
        let premise = g.format_set(imp.premise());
        let conclusion = g.format_set(imp.conclusion());
        if premise.is_empty() {
            out.push_str(&format!("imp -> {conclusion}\n"));
        } else {
            out.push_str(&format!("imp {premise} -> {conclusion}\n"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Plain(SetFamily),
    Attached(AttachedFamily),
}

impl Family {
    pub fn ground(&self) -> &Arc<GroundSet> {
        match self {
            Family::Plain(f) => f.ground(),
            Family::Attached(f) => f.ground(),
        }
    }

    pub fn sets(&self) -> Vec<ElementSet> {
        match self {
            Family::Plain(f) => f.sets().to_vec(),
            Family::Attached(f) => f.flatten(),
        }
    }
}

/// Parses a family file. All `set` lines must use the same form.
pub fn parse_family(text: &str) -> Result<Family, FormatError> {
    let mut lines = content_lines(text);
    let ground = parse_ground(&mut lines)?;
    let mut plain = Vec::new();
    let mut attached: Vec<Vec<ElementSet>> = vec![Vec::new(); ground.len()];
    let mut kinds = (false, false);
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "set" {
            return Err(err(no, format!("expected a set line, found {:?}", toks[0])));
        }
        let rest = &toks[1..];
        if rest.len() >= 2 && rest[1] == ":" {
            let x = ground.element(rest[0]).map_err(|e| err(no, e.to_string()))?;
            attached[x].push(parse_tokens(&ground, &rest[2..], no)?);
            kinds.1 = true;
        } else {
            plain.push(parse_tokens(&ground, rest, no)?);
            kinds.0 = true;
        }
    }
    match kinds {
        (true, true) => Err(err(0, "plain and attached set lines are mixed")),
        (false, true) => AttachedFamily::from_parts(ground, attached)
            .map(Family::Attached)
            .map_err(|e| err(0, e.to_string())),
        _ => Ok(Family::Plain(SetFamily::from_sets(ground, plain).expect("same ground"))),
    }
}

pub fn set_line(ground: &GroundSet, set: &ElementSet) -> String {
    format!("set {}", join(ground, set))
}

pub fn attached_line(ground: &GroundSet, x: Element, set: &ElementSet) -> String {
    format!("set {} : {}", ground.name(x), join(ground, set))
}

pub fn write_family(family: &SetFamily) -> String {
    let g = family.ground();
    let mut out = ground_line(g);
    out.push('\n');
    for s in family {
        out.push_str(&set_line(g, s));
        out.push('\n');
    }
    out
}

pub fn write_attached(family: &AttachedFamily) -> String {
    let g = family.ground();
    let mut out = ground_line(g);
    out.push('\n');
    for (x, m) in family.pairs() {
        out.push_str(&attached_line(g, x, m));
        out.push('\n');
    }
    out
}
