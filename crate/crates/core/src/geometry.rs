//! Lattice geometry of polyominoes.
//!
//! A [`Polyomino`] is an edge-connected finite set of unit cells, translated so
//! that its bounding box starts at `(1,1)`. Everything derived from the cell set
//! (vertex set, holes, maximal edge intervals, the cell prefix sums used for
//! inner-interval tests) is computed once at construction and never mutated.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Binomial, Monomial, TermOrder};

/// A lattice point. The derived ordering is the vertex order used throughout:
/// compare `x` first, then `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub const fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit cell, identified by its lower-left vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(pub Vertex);

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell(Vertex::new(x, y))
    }

    pub fn x(&self) -> i32 {
        self.0.x
    }

    pub fn y(&self) -> i32 {
        self.0.y
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        let Vertex { x, y } = self.0;
        [
            Vertex::new(x, y),
            Vertex::new(x + 1, y),
            Vertex::new(x, y + 1),
            Vertex::new(x + 1, y + 1),
        ]
    }

    pub fn edge_neighbors(&self) -> [Cell; 4] {
        let Vertex { x, y } = self.0;
        [
            Cell::new(x - 1, y),
            Cell::new(x + 1, y),
            Cell::new(x, y - 1),
            Cell::new(x, y + 1),
        ]
    }
}

/// An axis-parallel interval `[a, b]` of the lattice, `a <= b` componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub a: Vertex,
    pub b: Vertex,
}

/// Which corner of an interval a vertex is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    LowerLeft,
    UpperRight,
    UpperLeft,
    LowerRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::LowerLeft,
        Corner::UpperRight,
        Corner::UpperLeft,
        Corner::LowerRight,
    ];

    /// Lower-left and upper-right are the diagonal corners.
    pub fn is_diagonal(self) -> bool {
        matches!(self, Corner::LowerLeft | Corner::UpperRight)
    }

    /// The other corner of the same (anti-)diagonal pair.
    pub fn opposite(self) -> Corner {
        match self {
            Corner::LowerLeft => Corner::UpperRight,
            Corner::UpperRight => Corner::LowerLeft,
            Corner::UpperLeft => Corner::LowerRight,
            Corner::LowerRight => Corner::UpperLeft,
        }
    }

    /// The two corners sharing a side with this one.
    pub fn adjacent(self) -> [Corner; 2] {
        match self {
            Corner::LowerLeft | Corner::UpperRight => [Corner::UpperLeft, Corner::LowerRight],
            Corner::UpperLeft | Corner::LowerRight => [Corner::LowerLeft, Corner::UpperRight],
        }
    }
}

impl Interval {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        debug_assert!(a.x <= b.x && a.y <= b.y);
        Interval { a, b }
    }

    pub fn is_proper(&self) -> bool {
        self.a.x < self.b.x && self.a.y < self.b.y
    }

    pub fn corner(&self, which: Corner) -> Vertex {
        match which {
            Corner::LowerLeft => self.a,
            Corner::UpperRight => self.b,
            Corner::UpperLeft => Vertex::new(self.a.x, self.b.y),
            Corner::LowerRight => Vertex::new(self.b.x, self.a.y),
        }
    }

    /// The corner role of `v`, if `v` is a corner of this (proper) interval.
    pub fn corner_of(&self, v: Vertex) -> Option<Corner> {
        Corner::ALL.into_iter().find(|&c| self.corner(c) == v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.a.x <= v.x && v.x <= self.b.x && self.a.y <= v.y && v.y <= self.b.y
    }

    /// Intersection as lattice point sets, `None` when empty.
    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let a = Vertex::new(self.a.x.max(other.a.x), self.a.y.max(other.a.y));
        let b = Vertex::new(self.b.x.min(other.b.x), self.b.y.min(other.b.y));
        (a.x <= b.x && a.y <= b.y).then_some(Interval { a, b })
    }

    /// True iff the two intervals share exactly the single lattice point `v`.
    pub fn meets_only_at(&self, other: &Interval, v: Vertex) -> bool {
        self.intersection(other) == Some(Interval { a: v, b: v })
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.a.x..self.b.x).flat_map(move |x| (self.a.y..self.b.y).map(move |y| Cell::new(x, y)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// A horizontal or vertical segment all of whose unit edges are cell edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeInterval {
    pub direction: Direction,
    pub a: Vertex,
    pub b: Vertex,
    pub maximal: bool,
}

impl EdgeInterval {
    pub fn contains(&self, v: Vertex) -> bool {
        match self.direction {
            Direction::Horizontal => v.y == self.a.y && self.a.x <= v.x && v.x <= self.b.x,
            Direction::Vertical => v.x == self.a.x && self.a.y <= v.y && v.y <= self.b.y,
        }
    }
}

/// A bounded component of the complement of a polyomino.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub cells: Vec<Cell>,
    /// Minimum vertex of the hole under the vertex order.
    pub lower_left_corner: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("polyomino must contain at least one cell")]
    EmptyInput,
    #[error("cell ({0},{1}) listed more than once")]
    DuplicateCell(i32, i32),
    #[error("cells ({},{}) and ({},{}) are not edge-connected", .0.x(), .0.y(), .1.x(), .1.y())]
    Disconnected(Cell, Cell),
}

/// Dense occupancy grid over a `width x height` box of cells starting at `(1,1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CellGrid {
    width: i32,
    height: i32,
    present: Vec<bool>,
    /// `prefix[(x)*(h+1) + y]` counts present cells with x' < x and y' < y (0-based).
    prefix: Vec<u32>,
}

impl CellGrid {
    fn new(cells: &[Cell], width: i32, height: i32) -> Self {
        let mut present = vec![false; (width * height) as usize];
        for c in cells {
            present[((c.x() - 1) * height + (c.y() - 1)) as usize] = true;
        }
        let (w, h) = (width as usize, height as usize);
        let mut prefix = vec![0u32; (w + 1) * (h + 1)];
        for x in 1..=w {
            for y in 1..=h {
                let here = present[(x - 1) * h + (y - 1)] as u32;
                prefix[x * (h + 1) + y] = here + prefix[(x - 1) * (h + 1) + y]
                    + prefix[x * (h + 1) + y - 1]
                    - prefix[(x - 1) * (h + 1) + y - 1];
            }
        }
        CellGrid { width, height, present, prefix }
    }

    fn has(&self, x: i32, y: i32) -> bool {
        x >= 1
            && y >= 1
            && x <= self.width
            && y <= self.height
            && self.present[((x - 1) * self.height + (y - 1)) as usize]
    }

    /// Number of present cells inside the interval with vertex corners `a`, `b`.
    fn count_in(&self, a: Vertex, b: Vertex) -> u32 {
        let h1 = self.height as usize + 1;
        let clamp_x = |x: i32| (x - 1).clamp(0, self.width) as usize;
        let clamp_y = |y: i32| (y - 1).clamp(0, self.height) as usize;
        let (x0, x1, y0, y1) = (clamp_x(a.x), clamp_x(b.x), clamp_y(a.y), clamp_y(b.y));
        if x1 <= x0 || y1 <= y0 {
            return 0;
        }
        self.prefix[x1 * h1 + y1] + self.prefix[x0 * h1 + y0]
            - self.prefix[x0 * h1 + y1]
            - self.prefix[x1 * h1 + y0]
    }
}

/// An immutable, normalized polyomino with all derived geometry precomputed.
#[derive(Debug, Clone)]
pub struct Polyomino {
    cells: Vec<Cell>,
    grid: CellGrid,
    vertices: Vec<Vertex>,
    /// `vertex_slot[x*(height+2) + y]` is the ordinal of vertex (x,y) or `usize::MAX`.
    vertex_slot: Vec<usize>,
    holes: Vec<Hole>,
    h_intervals: Vec<EdgeInterval>,
    v_intervals: Vec<EdgeInterval>,
    h_of_vertex: Vec<usize>,
    v_of_vertex: Vec<usize>,
}

impl PartialEq for Polyomino {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Polyomino {}

impl Polyomino {
    /// Builds a polyomino from cell coordinates (lower-left vertices).
    ///
    /// Duplicates are rejected, edge-connectivity is verified and the result is
    /// translated so its bounding box starts at `(1,1)`.
    pub fn new(coords: &[(i32, i32)]) -> Result<Self, GeometryError> {
        if coords.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        let mut seen = BTreeSet::new();
        for &(x, y) in coords {
            if !seen.insert((x, y)) {
                return Err(GeometryError::DuplicateCell(x, y));
            }
        }
        let cells = normalize(coords);
        check_connected(&cells)?;
        Ok(Self::from_normalized(cells))
    }

    /// Builds from an already normalized, sorted, duplicate-free and connected cell list.
    pub(crate) fn from_normalized(cells: Vec<Cell>) -> Self {
        let width = cells.iter().map(|c| c.x()).max().unwrap_or(0);
        let height = cells.iter().map(|c| c.y()).max().unwrap_or(0);
        let grid = CellGrid::new(&cells, width, height);

        let stride = (height + 2) as usize;
        let mut vertex_slot = vec![usize::MAX; (width + 2) as usize * stride];
        let mut vertex_set = BTreeSet::new();
        for c in &cells {
            vertex_set.extend(c.vertices());
        }
        let vertices: Vec<Vertex> = vertex_set.into_iter().collect();
        for (i, v) in vertices.iter().enumerate() {
            vertex_slot[v.x as usize * stride + v.y as usize] = i;
        }

        let h_intervals = scan_edge_intervals(&grid, Direction::Horizontal);
        let v_intervals = scan_edge_intervals(&grid, Direction::Vertical);
        let mut h_of_vertex = vec![usize::MAX; vertices.len()];
        let mut v_of_vertex = vec![usize::MAX; vertices.len()];
        for (slot, intervals) in [(&mut h_of_vertex, &h_intervals), (&mut v_of_vertex, &v_intervals)] {
            for (k, e) in intervals.iter().enumerate() {
                for (i, v) in vertices.iter().enumerate() {
                    if e.contains(*v) {
                        assert_eq!(slot[i], usize::MAX, "vertex {v} on two maximal edge intervals");
                        slot[i] = k;
                    }
                }
            }
            assert!(slot.iter().all(|&k| k != usize::MAX), "vertex not on any maximal edge interval");
        }

        let holes = find_holes(&grid);
        Polyomino {
            cells,
            grid,
            vertices,
            vertex_slot,
            holes,
            h_intervals,
            v_intervals,
            h_of_vertex,
            v_of_vertex,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn width(&self) -> i32 {
        self.grid.width
    }

    pub fn height(&self) -> i32 {
        self.grid.height
    }

    pub fn has_cell(&self, x: i32, y: i32) -> bool {
        self.grid.has(x, y)
    }

    /// `V(P)` in vertex order; positions are the variable ordinals.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        if v.x < 0 || v.y < 0 || v.x > self.grid.width + 1 || v.y > self.grid.height + 1 {
            return None;
        }
        let slot = self.vertex_slot[v.x as usize * (self.grid.height + 2) as usize + v.y as usize];
        (slot != usize::MAX).then_some(slot)
    }

    pub fn holes(&self) -> &[Hole] {
        &self.holes
    }

    pub fn is_simple(&self) -> bool {
        self.holes.is_empty()
    }

    pub fn maximal_edge_intervals(&self, direction: Direction) -> &[EdgeInterval] {
        match direction {
            Direction::Horizontal => &self.h_intervals,
            Direction::Vertical => &self.v_intervals,
        }
    }

    /// Index into `maximal_edge_intervals(direction)` of the interval through vertex ordinal `i`.
    pub fn edge_interval_of(&self, direction: Direction, i: usize) -> usize {
        match direction {
            Direction::Horizontal => self.h_of_vertex[i],
            Direction::Vertical => self.v_of_vertex[i],
        }
    }

    pub fn is_inner_interval(&self, a: Vertex, b: Vertex) -> bool {
        if a.x >= b.x || a.y >= b.y {
            return false;
        }
        let area = ((b.x - a.x) * (b.y - a.y)) as u32;
        self.grid.count_in(a, b) == area
    }

    /// All inner intervals, sorted by `(a, b)`.
    pub fn all_inner_intervals(&self) -> Vec<Interval> {
        let (w, h) = (self.grid.width, self.grid.height);
        let mut out = Vec::new();
        for ax in 1..=w {
            for ay in 1..=h {
                if !self.grid.has(ax, ay) {
                    continue;
                }
                for bx in ax + 1..=w + 1 {
                    if !self.grid.has(bx - 1, ay) {
                        break;
                    }
                    for by in ay + 1..=h + 1 {
                        let (a, b) = (Vertex::new(ax, ay), Vertex::new(bx, by));
                        if !self.is_inner_interval(a, b) {
                            break;
                        }
                        out.push(Interval { a, b });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The inner 2-minors `x_a x_b - x_c x_d`, one per inner interval, over the
    /// vertex-indexed variables.
    pub fn inner_2_minors(&self) -> Vec<Binomial> {
        let n = self.vertices.len();
        let order = TermOrder::degrevlex(n);
        self.all_inner_intervals()
            .iter()
            .map(|iv| {
                let var = |c| self.vertex_index(iv.corner(c)).expect("corner in V(P)");
                let diag = Monomial::from_vars(n, &[var(Corner::LowerLeft), var(Corner::UpperRight)]);
                let anti = Monomial::from_vars(n, &[var(Corner::UpperLeft), var(Corner::LowerRight)]);
                Binomial::new(diag, anti, &order).expect("distinct corners")
            })
            .collect()
    }

    /// Canonical representative key under the eight symmetries of the square.
    pub fn canonical_key(&self) -> String {
        cell_list_string(&canonical_cells(&self.cells))
    }

    /// The polyomino obtained by applying dihedral transform `t` (0..8) and normalizing.
    pub fn transformed(&self, t: usize) -> Polyomino {
        let coords: Vec<(i32, i32)> = self.cells.iter().map(|c| (c.x(), c.y())).collect();
        Polyomino::from_normalized(normalize_transformed(&coords, t))
    }

    /// Cells of the canonical form as a polyomino.
    pub fn canonical(&self) -> Polyomino {
        Polyomino::from_normalized(canonical_cells(&self.cells))
    }

    pub fn cell_coords(&self) -> Vec<(i32, i32)> {
        self.cells.iter().map(|c| (c.x(), c.y())).collect()
    }
}

pub(crate) fn normalize(coords: &[(i32, i32)]) -> Vec<Cell> {
    normalize_transformed(coords, 0)
}

/// Applies transform `t` of the dihedral group, then translates to `(1,1)` and sorts.
fn normalize_transformed(coords: &[(i32, i32)], t: usize) -> Vec<Cell> {
    let mapped: Vec<(i32, i32)> = coords.iter().map(|&(x, y)| dihedral(t, x, y)).collect();
    let min_x = mapped.iter().map(|p| p.0).min().unwrap_or(0);
    let min_y = mapped.iter().map(|p| p.1).min().unwrap_or(0);
    let mut cells: Vec<Cell> = mapped
        .into_iter()
        .map(|(x, y)| Cell::new(x - min_x + 1, y - min_y + 1))
        .collect();
    cells.sort();
    cells
}

/// Cell-coordinate image under transform `t`; cells are mapped via their centers.
fn dihedral(t: usize, x: i32, y: i32) -> (i32, i32) {
    let (x, y) = if t & 4 != 0 { (y, x) } else { (x, y) };
    let x = if t & 1 != 0 { -x } else { x };
    let y = if t & 2 != 0 { -y } else { y };
    (x, y)
}

/// Minimum over the eight transforms of the normalized sorted cell list.
pub fn canonical_cells(cells: &[Cell]) -> Vec<Cell> {
    let coords: Vec<(i32, i32)> = cells.iter().map(|c| (c.x(), c.y())).collect();
    (0..8)
        .map(|t| normalize_transformed(&coords, t))
        .min()
        .expect("eight transforms")
}

/// True iff the normalized sorted `cells` is already the canonical representative.
pub fn is_canonical(cells: &[Cell]) -> bool {
    let coords: Vec<(i32, i32)> = cells.iter().map(|c| (c.x(), c.y())).collect();
    (1..8).all(|t| normalize_transformed(&coords, t).as_slice() >= cells)
}

/// `poly{ (x,y);(x,y);... }`
pub fn cell_list_string(cells: &[Cell]) -> String {
    let body: Vec<String> = cells.iter().map(|c| format!("({},{})", c.x(), c.y())).collect();
    format!("poly{{ {} }}", body.join(";"))
}

fn check_connected(cells: &[Cell]) -> Result<(), GeometryError> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut reached = BTreeSet::new();
    let mut stack = vec![cells[0]];
    reached.insert(cells[0]);
    while let Some(c) = stack.pop() {
        for nb in c.edge_neighbors() {
            if set.contains(&nb) && reached.insert(nb) {
                stack.push(nb);
            }
        }
    }
    match cells.iter().find(|c| !reached.contains(c)) {
        None => Ok(()),
        Some(&other) => Err(GeometryError::Disconnected(cells[0], other)),
    }
}

fn scan_edge_intervals(grid: &CellGrid, direction: Direction) -> Vec<EdgeInterval> {
    let (w, h) = (grid.width, grid.height);
    let mut out = Vec::new();
    match direction {
        Direction::Horizontal => {
            for y in 1..=h + 1 {
                let is_edge = |x: i32| grid.has(x, y) || grid.has(x, y - 1);
                let mut x = 1;
                while x <= w {
                    if !is_edge(x) {
                        x += 1;
                        continue;
                    }
                    let start = x;
                    while x <= w && is_edge(x) {
                        x += 1;
                    }
                    out.push(EdgeInterval {
                        direction,
                        a: Vertex::new(start, y),
                        b: Vertex::new(x, y),
                        maximal: true,
                    });
                }
            }
        }
        Direction::Vertical => {
            for x in 1..=w + 1 {
                let is_edge = |y: i32| grid.has(x, y) || grid.has(x - 1, y);
                let mut y = 1;
                while y <= h {
                    if !is_edge(y) {
                        y += 1;
                        continue;
                    }
                    let start = y;
                    while y <= h && is_edge(y) {
                        y += 1;
                    }
                    out.push(EdgeInterval {
                        direction,
                        a: Vertex::new(x, start),
                        b: Vertex::new(x, y),
                        maximal: true,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Flood fill of the complement inside the bounding box padded by one cell;
/// components that never reach the padding are holes.
fn find_holes(grid: &CellGrid) -> Vec<Hole> {
    let (pw, ph) = (grid.width + 2, grid.height + 2);
    let idx = |x: i32, y: i32| (x * ph + y) as usize;
    let mut label = vec![usize::MAX; (pw * ph) as usize];
    let mut holes = Vec::new();
    let mut comp = 0;
    for sx in 0..pw {
        for sy in 0..ph {
            if grid.has(sx, sy) || label[idx(sx, sy)] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            let mut touches_border = false;
            let mut stack = vec![(sx, sy)];
            label[idx(sx, sy)] = comp;
            while let Some((x, y)) = stack.pop() {
                members.push(Cell::new(x, y));
                if x == 0 || y == 0 || x == pw - 1 || y == ph - 1 {
                    touches_border = true;
                }
                for (nx, ny) in [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)] {
                    if nx < 0 || ny < 0 || nx >= pw || ny >= ph {
                        continue;
                    }
                    if !grid.has(nx, ny) && label[idx(nx, ny)] == usize::MAX {
                        label[idx(nx, ny)] = comp;
                        stack.push((nx, ny));
                    }
                }
            }
            comp += 1;
            if !touches_border {
                members.sort();
                let lower_left_corner = members[0].0;
                holes.push(Hole { cells: members, lower_left_corner });
            }
        }
    }
    holes.sort_by_key(|h| h.lower_left_corner);
    holes
}

/// Hole test on a raw normalized cell list without building a [`Polyomino`].
pub fn has_hole(cells: &[Cell]) -> bool {
    let width = cells.iter().map(|c| c.x()).max().unwrap_or(0);
    let height = cells.iter().map(|c| c.y()).max().unwrap_or(0);
    let (pw, ph) = (width + 2, height + 2);
    let mut filled = vec![false; (pw * ph) as usize];
    for c in cells {
        filled[(c.x() * ph + c.y()) as usize] = true;
    }
    let total_empty = (pw * ph) as usize - cells.len();
    let mut stack = vec![(0, 0)];
    filled[0] = true;
    let mut reached = 0usize;
    while let Some((x, y)) = stack.pop() {
        reached += 1;
        for (nx, ny) in [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)] {
            if nx < 0 || ny < 0 || nx >= pw || ny >= ph {
                continue;
            }
            let i = (nx * ph + ny) as usize;
            if !filled[i] {
                filled[i] = true;
                stack.push((nx, ny));
            }
        }
    }
    reached != total_empty
}

pub mod fixtures {
    //! Named polyominoes used throughout the tests and the reproduction harness.
    use super::Polyomino;

    /// Two one-cell holes side by side in a 7x3 block with its four corners removed.
    pub fn two_ears() -> Polyomino {
        let mut cells = Vec::new();
        cells.extend((2..=6).map(|x| (x, 1)));
        cells.extend([(1, 2), (2, 2), (4, 2), (6, 2), (7, 2)]);
        cells.extend((2..=6).map(|x| (x, 3)));
        Polyomino::new(&cells).expect("fixture")
    }

    /// TWO_EARS with four extra cells above and below the hole columns.
    pub fn two_pf() -> Polyomino {
        let mut cells = vec![(3, 1), (5, 1)];
        cells.extend((2..=6).map(|x| (x, 2)));
        cells.extend([(1, 3), (2, 3), (4, 3), (6, 3), (7, 3)]);
        cells.extend((2..=6).map(|x| (x, 4)));
        cells.extend([(3, 5), (5, 5)]);
        Polyomino::new(&cells).expect("fixture")
    }

    /// 3x3 block of cells without its center.
    pub fn square_frame() -> Polyomino {
        let cells: Vec<(i32, i32)> = (1..=3)
            .flat_map(|x| (1..=3).map(move |y| (x, y)))
            .filter(|&c| c != (2, 2))
            .collect();
        Polyomino::new(&cells).expect("fixture")
    }

    pub fn monomino() -> Polyomino {
        Polyomino::new(&[(1, 1)]).expect("fixture")
    }

    pub fn by_name(name: &str) -> Option<Polyomino> {
        match name.to_ascii_uppercase().as_str() {
            "TWO_EARS" => Some(two_ears()),
            "TWO_PF" => Some(two_pf()),
            "SQUARE_FRAME" => Some(square_frame()),
            "MONOMINO" => Some(monomino()),
            _ => None,
        }
    }
}
