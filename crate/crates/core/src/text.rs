//! Text formats: polyomino grid and cell-list forms, and the binomial syntax
//! `x(1,3)*x(3,1) - x(1,2)*x(3,4)` over vertex-indexed variables.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Binomial, Monomial, TermOrder};
use crate::geometry::{cell_list_string, GeometryError, Polyomino, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Parses either the grid form (`#`/`.` rows, top row first) or `poly{ (x,y);... }`.
pub fn parse_polyomino(text: &str) -> Result<Polyomino, ParseError> {
    if text.trim_start().starts_with("poly{") {
        parse_cell_list(text)
    } else {
        parse_grid(text)
    }
}

fn parse_grid(text: &str) -> Result<Polyomino, ParseError> {
    let rows: Vec<&str> = text.lines().map(|l| l.trim_end()).collect();
    let mut coords = Vec::new();
    let height = rows.len();
    for (r, row) in rows.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            match ch {
                '#' => coords.push((c as i32 + 1, (height - r) as i32)),
                '.' | ' ' => {}
                other => return Err(syntax(r + 1, c + 1, format!("unexpected character {other:?}"))),
            }
        }
    }
    Ok(Polyomino::new(&coords)?)
}

fn parse_cell_list(text: &str) -> Result<Polyomino, ParseError> {
    let (line, base_col) = locate(text, text.find("poly{").unwrap_or(0));
    let start = text.find('{').expect("checked prefix") + 1;
    let end = text
        .rfind('}')
        .ok_or_else(|| syntax(line, base_col, "missing closing '}'"))?;
    let body = &text[start..end];
    let mut coords = Vec::new();
    for (k, item) in body.split(';').enumerate() {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (l, c) = locate(text, start + body.find(item).unwrap_or(0));
        let inner = item
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| syntax(l, c, format!("cell {} must look like (x,y)", k + 1)))?;
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| syntax(l, c, "expected a comma"))?;
        let parse = |s: &str| s.trim().parse::<i32>().map_err(|_| syntax(l, c, format!("bad integer {s:?}")));
        coords.push((parse(x)?, parse(y)?));
    }
    Ok(Polyomino::new(&coords)?)
}

fn locate(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
    (line, column)
}

/// Grid form, top row first, newline-terminated.
pub fn render(p: &Polyomino) -> String {
    let mut out = String::new();
    for y in (1..=p.height()).rev() {
        for x in 1..=p.width() {
            out.push(if p.has_cell(x, y) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn cell_list(p: &Polyomino) -> String {
    cell_list_string(p.cells())
}

pub fn vertex_name(v: Vertex) -> String {
    format!("x({},{})", v.x, v.y)
}

pub fn monomial_to_string(m: &Monomial, p: &Polyomino) -> String {
    m.display_with(|i| vertex_name(p.vertices()[i]))
}

pub fn binomial_to_string(b: &Binomial, p: &Polyomino) -> String {
    b.display_with(|i| vertex_name(p.vertices()[i]))
}

/// A binomial bound to the polyomino whose vertices name its variables.
pub struct DisplayBinomial<'a>(pub &'a Binomial, pub &'a Polyomino);

impl fmt::Display for DisplayBinomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&binomial_to_string(self.0, self.1))
    }
}

fn parse_monomial(s: &str, p: &Polyomino) -> Result<Monomial, ParseError> {
    let n = p.vertices().len();
    let mut exps = vec![0u16; n];
    for factor in s.split('*') {
        let factor = factor.trim();
        let (var, power) = match factor.split_once('^') {
            Some((v, e)) => (v.trim(), e.trim().parse::<u16>().map_err(|_| syntax(1, 1, format!("bad exponent in {factor:?}")))?),
            None => (factor, 1),
        };
        let inner = var
            .strip_prefix("x(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| syntax(1, 1, format!("expected x(i,j), found {var:?}")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| syntax(1, 1, format!("expected x(i,j), found {var:?}")))?;
        let coord = |t: &str| t.trim().parse::<i32>().map_err(|_| syntax(1, 1, format!("bad coordinate in {var:?}")));
        let v = Vertex::new(coord(a)?, coord(b)?);
        let idx = p
            .vertex_index(v)
            .ok_or_else(|| syntax(1, 1, format!("{v} is not a vertex of the polyomino")))?;
        exps[idx] += power;
    }
    Ok(Monomial::from_exponents(exps))
}

/// Parses `m1 - m2`; the result is sign-canonical under the default order.
pub fn parse_binomial(s: &str, p: &Polyomino) -> Result<Binomial, ParseError> {
    let (lhs, rhs) = s
        .split_once(" - ")
        .or_else(|| s.split_once('-'))
        .ok_or_else(|| syntax(1, 1, "expected 'monomial - monomial'"))?;
    let a = parse_monomial(lhs, p)?;
    let b = parse_monomial(rhs, p)?;
    Binomial::new(a, b, &TermOrder::degrevlex(p.vertices().len()))
        .ok_or_else(|| syntax(1, 1, "binomial is zero"))
}
