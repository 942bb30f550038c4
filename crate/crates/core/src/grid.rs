//! Grid polyominoes: the rectangle `[(1,1),(m,n)]` minus an `r x s` array of
//! rectangular holes separated by one-cell corridors.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Polyomino;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("invalid grid spec: {0}")]
    InvalidSpec(String),
}

/// Hole ranges are in vertex coordinates: column block `(xa, xb)` means the
/// holes span `xa <= x <= xb` on the vertex lattice, i.e. cells `xa..xb`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub m: i32,
    pub n: i32,
    pub col_blocks: Vec<(i32, i32)>,
    pub row_blocks: Vec<(i32, i32)>,
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranges = |bs: &[(i32, i32)]| {
            bs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "m={} n={} cols={} rows={}",
            self.m,
            self.n,
            ranges(&self.col_blocks),
            ranges(&self.row_blocks)
        )
    }
}

fn check_blocks(blocks: &[(i32, i32)], bound: i32, axis: &str) -> Result<(), GridError> {
    if blocks.is_empty() {
        return Err(GridError::InvalidSpec(format!("no {axis} blocks")));
    }
    for (k, &(a, b)) in blocks.iter().enumerate() {
        if !(1 < a && a < b && b < bound) {
            return Err(GridError::InvalidSpec(format!(
                "{axis} block {} = ({a},{b}) violates 1 < a < b < {bound}",
                k + 1
            )));
        }
    }
    for (k, w) in blocks.windows(2).enumerate() {
        if w[1].0 != w[0].1 + 1 {
            return Err(GridError::InvalidSpec(format!(
                "{axis} blocks {} and {}: start {} != previous end {} + 1",
                k + 1,
                k + 2,
                w[1].0,
                w[0].1
            )));
        }
    }
    Ok(())
}

impl GridSpec {
    pub fn new(m: i32, n: i32, col_blocks: Vec<(i32, i32)>, row_blocks: Vec<(i32, i32)>) -> Self {
        GridSpec { m, n, col_blocks, row_blocks }
    }

    pub fn validate(&self) -> Result<(), GridError> {
        check_blocks(&self.col_blocks, self.m, "column")?;
        check_blocks(&self.row_blocks, self.n, "row")
    }

    pub fn hole_count(&self) -> usize {
        self.col_blocks.len() * self.row_blocks.len()
    }

    fn in_hole(&self, x: i32, y: i32) -> bool {
        // cell (x, y) has lower-left vertex (x, y)
        self.col_blocks.iter().any(|&(a, b)| a <= x && x < b)
            && self.row_blocks.iter().any(|&(a, b)| a <= y && y < b)
    }
}

/// Parses `"2-5,6-7,8-10"`.
pub fn parse_blocks(s: &str) -> Result<Vec<(i32, i32)>, GridError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| GridError::InvalidSpec(format!("block {t:?} is not of the form a-b")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<i32>()
                    .map_err(|_| GridError::InvalidSpec(format!("bad number in block {t:?}")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

pub fn make_grid(spec: &GridSpec) -> Result<Polyomino, GridError> {
    spec.validate()?;
    let mut coords = Vec::new();
    for x in 1..spec.m {
        for y in 1..spec.n {
            if !spec.in_hole(x, y) {
                coords.push((x, y));
            }
        }
    }
    Polyomino::new(&coords).map_err(|e| GridError::InvalidSpec(e.to_string()))
}

/// Returns the spec `P` was built from, if `P` is a grid polyomino.
pub fn recognize_grid(p: &Polyomino) -> Option<GridSpec> {
    if p.is_simple() {
        return None;
    }
    let mut cols = BTreeSet::new();
    let mut rows = BTreeSet::new();
    for hole in p.holes() {
        let x0 = hole.cells.iter().map(|c| c.x()).min()?;
        let x1 = hole.cells.iter().map(|c| c.x()).max()? + 1;
        let y0 = hole.cells.iter().map(|c| c.y()).min()?;
        let y1 = hole.cells.iter().map(|c| c.y()).max()? + 1;
        if hole.cells.len() as i32 != (x1 - x0) * (y1 - y0) {
            return None;
        }
        cols.insert((x0, x1));
        rows.insert((y0, y1));
    }
    let spec = GridSpec {
        m: p.width() + 1,
        n: p.height() + 1,
        col_blocks: cols.into_iter().collect(),
        row_blocks: rows.into_iter().collect(),
    };
    if spec.hole_count() != p.holes().len() {
        return None;
    }
    match make_grid(&spec) {
        Ok(q) if q == *p => Some(spec),
        _ => None,
    }
}
