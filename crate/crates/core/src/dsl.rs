//! The `.quiver` text format.
//!
//! ```text
//! # the commutative square
//! quiver square
//! field Q
//! vertices 1 2 3 4
//! arrow a: 1 -> 2
//! arrow b: 2 -> 4
//! arrow c: 1 -> 3
//! arrow d: 3 -> 4
//! relation a*b - c*d
//! ```
//!
//! Lines come in the order header, `field`, `vertices`, arrows, relations.
//! `#` starts a comment. Relation terms are an optional coefficient
//! (`2`, `-1/3`) followed by arrow labels joined with `*`, read left to right.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::quiver::{PathAlgebra, Quiver, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowDecl {
    pub label: String,
    pub source: String,
    pub target: String,
}

/// One relation as written: coefficients with arrow words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDecl {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

/// Parsed contents of a `.quiver` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverSpec {
    pub name: String,
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<RelationDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Number(String),
    Colon,
    Arrow,
    Star,
    Plus,
    Minus,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) | Tok::Number(w) => format!("`{w}`"),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits one line (comment already removed) into tokens with 1-based columns.
fn lex(text: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => i += 1,
            ':' => {
                out.push((Tok::Colon, col));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((Tok::Arrow, col));
                i += 2;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                let mut all_digits = chars[start..i].iter().all(char::is_ascii_digit);
                if all_digits && chars.get(i) == Some(&'/') {
                    i += 1;
                    let den = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == den {
                        return Err(parse_err(line, col, "fraction without denominator"));
                    }
                    all_digits = true;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((if all_digits { Tok::Number(s) } else { Tok::Word(s) }, col));
            }
            c if is_word_char(c) => {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), col));
            }
            other => return Err(parse_err(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Line {
    number: usize,
    end_col: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Line {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.number, self.col(), msg)
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.next() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, c)) => Err(parse_err(self.number, c, format!("expected {}, found {}", want.describe(), t.describe()))),
            None => Err(parse_err(self.number, self.end_col, format!("expected {}", want.describe()))),
        }
    }

    /// A vertex label: any word or number.
    fn label(&mut self, what: &str) -> Result<(String, usize)> {
        match self.next() {
            Some((Tok::Word(w) | Tok::Number(w), c)) if !w.contains('/') => Ok((w, c)),
            Some((t, c)) => Err(parse_err(self.number, c, format!("expected {what}, found {}", t.describe()))),
            None => Err(parse_err(self.number, self.end_col, format!("expected {what}"))),
        }
    }

    /// An arrow label: a word not starting with a digit.
    fn arrow_label(&mut self) -> Result<(String, usize)> {
        match self.next() {
            Some((Tok::Word(w), c)) if !w.starts_with(|ch: char| ch.is_ascii_digit()) => Ok((w, c)),
            Some((t, c)) => Err(parse_err(self.number, c, format!("expected an arrow label, found {}", t.describe()))),
            None => Err(parse_err(self.number, self.end_col, "expected an arrow label")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            Some((t, c)) => Err(parse_err(self.number, *c, format!("unexpected {}", t.describe()))),
            None => Ok(()),
        }
    }
}

fn keyword(line: &mut Line) -> Option<String> {
    match line.peek() {
        Some(Tok::Word(w)) => {
            let w = w.clone();
            line.pos += 1;
            Some(w)
        }
        _ => None,
    }
}

fn parse_field(line: &mut Line) -> Result<Field> {
    let (w, c) = line.label("a field")?;
    if w == "Q" {
        return Ok(Field::Rational);
    }
    let p = w
        .strip_prefix("F_")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| parse_err(line.number, c, format!("unknown field `{w}`; use Q or F_p")))?;
    Field::prime(p).map_err(|e| parse_err(line.number, c, e.to_string()))
}

fn parse_relation(line: &mut Line, field: Field, arrows: &[ArrowDecl]) -> Result<RelationDecl> {
    let known = |line: &mut Line| -> Result<String> {
        let (label, col) = line.arrow_label()?;
        if arrows.iter().any(|a| a.label == label) {
            Ok(label)
        } else {
            Err(parse_err(line.number, col, format!("unknown arrow `{label}`")))
        }
    };
    let mut terms = Vec::new();
    let mut first = true;
    while line.peek().is_some() || first {
        let mut sign = 1;
        match line.peek() {
            Some(Tok::Plus) if !first => {
                line.pos += 1;
            }
            Some(Tok::Minus) => {
                line.pos += 1;
                sign = -1;
            }
            _ if first => {}
            Some(t) => return Err(line.err(format!("expected `+` or `-`, found {}", t.describe()))),
            None => break,
        }
        first = false;
        let mut coeff = field.one();
        if let Some(Tok::Number(n)) = line.peek() {
            let col = line.col();
            coeff = field.parse(&n.clone()).map_err(|e| parse_err(line.number, col, e.to_string()))?;
            line.pos += 1;
            if line.peek() == Some(&Tok::Star) {
                line.pos += 1;
            }
        }
        if sign < 0 {
            coeff = -coeff;
        }
        let mut word = vec![known(line)?];
        while line.peek() == Some(&Tok::Star) {
            line.pos += 1;
            word.push(known(line)?);
        }
        terms.push((coeff, word));
    }
    Ok(RelationDecl { terms })
}

/// Adds the line number to errors raised while resolving relations.
fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::NotHomogeneous(s) => Error::NotHomogeneous(format!("line {line}: {s}")),
        Error::TrivialPathInRelation(s) => Error::TrivialPathInRelation(format!("line {line}: {s}")),
        other => other,
    }
}

pub fn parse_quiver(text: &str) -> Result<QuiverSpec> {
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let toks = lex(content, k + 1)?;
        if !toks.is_empty() {
            lines.push(Line {
                number: k + 1,
                end_col: content.trim_end().chars().count() + 1,
                toks,
                pos: 0,
            });
        }
    }
    let mut it = lines.into_iter().peekable();
    let last_line = text.lines().count().max(1);

    let mut header = it.next().ok_or_else(|| parse_err(last_line, 1, "expected `quiver <name>`"))?;
    if keyword(&mut header).as_deref() != Some("quiver") {
        return Err(parse_err(header.number, 1, "expected `quiver <name>`"));
    }
    let (name, _) = header.label("a quiver name")?;
    header.finish()?;

    let mut fline = it.next().ok_or_else(|| parse_err(last_line, 1, "expected `field Q` or `field F_p`"))?;
    if keyword(&mut fline).as_deref() != Some("field") {
        return Err(parse_err(fline.number, 1, "expected `field Q` or `field F_p`"));
    }
    let field = parse_field(&mut fline)?;
    fline.finish()?;

    let mut vline = it.next().ok_or_else(|| parse_err(last_line, 1, "expected `vertices ...`"))?;
    if keyword(&mut vline).as_deref() != Some("vertices") {
        return Err(parse_err(vline.number, 1, "expected `vertices ...`"));
    }
    let mut vertices: Vec<String> = Vec::new();
    while vline.peek().is_some() {
        let (v, c) = vline.label("a vertex label")?;
        if vertices.contains(&v) {
            return Err(parse_err(vline.number, c, format!("duplicate vertex `{v}`")));
        }
        vertices.push(v);
        if vline.peek() == Some(&Tok::Comma) {
            vline.pos += 1;
        }
    }
    if vertices.is_empty() {
        return Err(vline.err("the vertex list is empty"));
    }

    let mut arrows: Vec<ArrowDecl> = Vec::new();
    let mut relation_lines = Vec::new();
    for mut line in it {
        let kw_col = line.col();
        match keyword(&mut line).as_deref() {
            Some("arrow") => {
                if !relation_lines.is_empty() {
                    return Err(parse_err(line.number, kw_col, "arrows must precede relations"));
                }
                let (label, lc) = line.arrow_label()?;
                if arrows.iter().any(|a| a.label == label) {
                    return Err(parse_err(line.number, lc, format!("duplicate arrow `{label}`")));
                }
                line.expect(Tok::Colon)?;
                let (source, sc) = line.label("a source vertex")?;
                if !vertices.contains(&source) {
                    return Err(parse_err(line.number, sc, format!("unknown vertex `{source}`")));
                }
                line.expect(Tok::Arrow)?;
                let (target, tc) = line.label("a target vertex")?;
                if !vertices.contains(&target) {
                    return Err(parse_err(line.number, tc, format!("unknown vertex `{target}`")));
                }
                line.finish()?;
                arrows.push(ArrowDecl { label, source, target });
            }
            Some("relation") => {
                let decl = parse_relation(&mut line, field, &arrows)?;
                relation_lines.push((line.number, decl));
            }
            _ => {
                return Err(parse_err(
                    line.number,
                    kw_col,
                    "expected `arrow` or `relation`",
                ))
            }
        }
    }

    let spec = QuiverSpec {
        name,
        field,
        vertices,
        arrows,
        relations: Vec::new(),
    };
    let quiver = spec.quiver()?;
    let mut relations = Vec::new();
    for (number, decl) in relation_lines {
        decl.resolve(&quiver).map_err(|e| at_line(e, number))?;
        relations.push(decl);
    }
    Ok(QuiverSpec { relations, ..spec })
}

impl RelationDecl {
    pub fn resolve(&self, q: &Quiver) -> Result<Relation> {
        let terms = self
            .terms
            .iter()
            .map(|(c, w)| {
                let labels: Vec<&str> = w.iter().map(String::as_str).collect();
                Ok((c.clone(), q.path_from_labels(&labels)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Relation::new(q, terms)
    }
}

impl QuiverSpec {
    pub fn quiver(&self) -> Result<Quiver> {
        Quiver::new(
            self.vertices.iter().map(String::as_str),
            self.arrows
                .iter()
                .map(|a| (a.label.clone(), a.source.clone(), a.target.clone())),
        )
    }

    pub fn relations(&self, q: &Quiver) -> Result<Vec<Relation>> {
        self.relations.iter().map(|r| r.resolve(q)).collect()
    }

    /// Builds `kQ/(R)`; fails on oriented cycles.
    pub fn algebra(&self) -> Result<PathAlgebra> {
        let q = self.quiver()?;
        let rels = self.relations(&q)?;
        PathAlgebra::build(q, self.field, rels)
    }

    /// Canonical text form; parsing it gives back `self`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "quiver {}", self.name);
        let _ = writeln!(out, "field {}", self.field);
        let _ = writeln!(out, "vertices {}", self.vertices.join(" "));
        for a in &self.arrows {
            let _ = writeln!(out, "arrow {}: {} -> {}", a.label, a.source, a.target);
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", r.pretty());
        }
        out
    }
}

impl RelationDecl {
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, (c, w)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                let _ = write!(out, "{magnitude} ");
            }
            out.push_str(&w.join("*"));
        }
        out
    }
}
