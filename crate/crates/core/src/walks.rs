//! Zig-zag walks: detection, verification and the associated binomial.
//!
//! A walk is a cyclic sequence of distinct inner intervals `I_1..I_l` with
//! corners `v_i, z_i` forming one (anti-)diagonal pair of `I_i` and
//! `u_i, v_{i+1}` the other pair, subject to
//!
//! * consecutive intervals meet exactly in `{v_{i+1}}` (cyclically),
//! * `v_i, v_{i+1}` lie on a common maximal edge interval,
//! * no inner interval contains two distinct `z_i, z_j`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{Binomial, Monomial, TermOrder};
use crate::geometry::{Corner, Direction, Interval, Polyomino, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("malformed walk: {0}")]
    MalformedWalk(String),
    #[error("walk fails verification: {0}")]
    InvalidWalk(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZigZagWalk {
    pub intervals: Vec<Interval>,
    pub v: Vec<Vertex>,
    pub z: Vec<Vertex>,
    pub u: Vec<Vertex>,
}

impl ZigZagWalk {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `v_{i+1}`, cyclically.
    pub fn next_v(&self, i: usize) -> Vertex {
        self.v[(i + 1) % self.v.len()]
    }

    /// The same walk started at step `k`.
    pub fn rotated(&self, k: usize) -> ZigZagWalk {
        let rot = |xs: &[Vertex]| {
            let mut out = xs.to_vec();
            out.rotate_left(k % xs.len());
            out
        };
        let mut intervals = self.intervals.clone();
        intervals.rotate_left(k % self.len());
        ZigZagWalk { intervals, v: rot(&self.v), z: rot(&self.z), u: rot(&self.u) }
    }

    /// The walk traversed backwards: `I_l..I_1`, where the roles of `v`/`z`
    /// and `u`/`v_{i+1}` swap.
    pub fn reversed(&self) -> ZigZagWalk {
        let l = self.len();
        let intervals: Vec<Interval> = (0..l).rev().map(|i| self.intervals[i]).collect();
        let v: Vec<Vertex> = (0..l).rev().map(|i| self.next_v(i)).collect();
        let z: Vec<Vertex> = (0..l).rev().map(|i| self.u[i]).collect();
        let u: Vec<Vertex> = (0..l).rev().map(|i| self.z[i]).collect();
        ZigZagWalk { intervals, v, z, u }
    }
}

/// Per-condition verification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkReport {
    pub inner: bool,
    pub distinct: bool,
    pub roles: bool,
    pub alternation: bool,
    pub z1: bool,
    pub z2: bool,
    pub z3: bool,
    pub parity: bool,
    /// The analogue of Z3 for the `u` sequence; informational only.
    pub u_separated: bool,
}

impl WalkReport {
    pub fn passed(&self) -> bool {
        self.inner && self.distinct && self.roles && self.alternation && self.z1 && self.z2 && self.z3 && self.parity
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.inner, "inner"),
            (self.distinct, "distinct"),
            (self.roles, "roles"),
            (self.alternation, "alternation"),
            (self.z1, "Z1"),
            (self.z2, "Z2"),
            (self.z3, "Z3"),
            (self.parity, "parity"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

/// Symmetric table of vertex pairs sharing an inner interval.
#[derive(Debug, Clone)]
pub struct CoInnerTable {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl CoInnerTable {
    pub fn new(p: &Polyomino, intervals: &[Interval]) -> Self {
        let n = p.vertices().len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for iv in intervals {
            let members: Vec<usize> = p
                .vertices()
                .iter()
                .enumerate()
                .filter(|(_, v)| iv.contains(**v))
                .map(|(i, _)| i)
                .collect();
            for &a in &members {
                for &b in &members {
                    bits[a * words + b / 64] |= 1 << (b % 64);
                }
            }
        }
        CoInnerTable { n, words, bits }
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < self.n && b < self.n);
        self.bits[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }
}

/// True iff some inner interval of `p` contains both `a` and `b`.
pub fn co_inner_pair(p: &Polyomino, a: Vertex, b: Vertex) -> bool {
    let x0 = a.x.min(b.x);
    let x1 = a.x.max(b.x);
    let y0 = a.y.min(b.y);
    let y1 = a.y.max(b.y);
    // any inner interval containing both contains their bounding box; it is
    // enough to try the minimal proper boxes around it
    let xs: Vec<(i32, i32)> = if x0 < x1 { vec![(x0, x1)] } else { vec![(x0 - 1, x0), (x0, x0 + 1)] };
    let ys: Vec<(i32, i32)> = if y0 < y1 { vec![(y0, y1)] } else { vec![(y0 - 1, y0), (y0, y0 + 1)] };
    xs.iter().any(|&(xa, xb)| {
        ys.iter()
            .any(|&(ya, yb)| p.is_inner_interval(Vertex::new(xa, ya), Vertex::new(xb, yb)))
    })
}

fn same_edge_interval(p: &Polyomino, a: Vertex, b: Vertex) -> bool {
    match (p.vertex_index(a), p.vertex_index(b)) {
        (Some(i), Some(j)) => [Direction::Horizontal, Direction::Vertical]
            .into_iter()
            .any(|d| p.edge_interval_of(d, i) == p.edge_interval_of(d, j)),
        _ => false,
    }
}

pub fn verify_zigzag(p: &Polyomino, w: &ZigZagWalk) -> Result<WalkReport, WalkError> {
    let l = w.len();
    if l == 0 || w.v.len() != l || w.z.len() != l || w.u.len() != l {
        return Err(WalkError::MalformedWalk(format!(
            "lengths intervals={} v={} z={} u={}",
            l,
            w.v.len(),
            w.z.len(),
            w.u.len()
        )));
    }
    let mut r = WalkReport {
        inner: w.intervals.iter().all(|iv| p.is_inner_interval(iv.a, iv.b)),
        distinct: w.intervals.iter().collect::<BTreeSet<_>>().len() == l,
        parity: l >= 2 && l.is_multiple_of(2),
        ..WalkReport::default()
    };

    let role = |i: usize| -> Option<(Corner, Corner)> {
        let iv = &w.intervals[i];
        let cv = iv.corner_of(w.v[i])?;
        let cn = iv.corner_of(w.next_v(i))?;
        let ok = iv.corner(cv.opposite()) == w.z[i]
            && iv.corner(cn.opposite()) == w.u[i]
            && cv.is_diagonal() != cn.is_diagonal();
        ok.then_some((cv, cn))
    };
    let roles: Vec<Option<(Corner, Corner)>> = (0..l).map(role).collect();
    r.roles = roles.iter().all(|x| x.is_some());
    r.alternation = r.roles
        && (0..l).all(|i| {
            let (cv, _) = roles[i].expect("roles checked");
            let (cv_next, _) = roles[(i + 1) % l].expect("roles checked");
            cv.is_diagonal() != cv_next.is_diagonal()
        });
    r.z1 = (0..l).all(|i| {
        let j = (i + 1) % l;
        l >= 2 && w.intervals[i].meets_only_at(&w.intervals[j], w.next_v(i))
    });
    r.z2 = (0..l).all(|i| same_edge_interval(p, w.v[i], w.next_v(i)));
    let separated = |xs: &[Vertex]| {
        (0..l).all(|i| (0..l).all(|j| i == j || !co_inner_pair(p, xs[i], xs[j])))
    };
    r.z3 = separated(&w.z);
    r.u_separated = separated(&w.u);
    Ok(r)
}

/// `prod x_{z_k} - prod x_{u_k}`, sign-canonical under the default order.
pub fn walk_binomial(p: &Polyomino, w: &ZigZagWalk) -> Result<Binomial, WalkError> {
    let report = verify_zigzag(p, w)?;
    if !report.passed() {
        return Err(WalkError::InvalidWalk(report.failures().join(", ")));
    }
    Ok(raw_walk_binomial(p, w))
}

fn walk_monomials(p: &Polyomino, w: &ZigZagWalk) -> (Monomial, Monomial) {
    let n = p.vertices().len();
    let idx = |v: &Vertex| p.vertex_index(*v).expect("walk vertex in V(P)");
    let z: Vec<usize> = w.z.iter().map(idx).collect();
    let u: Vec<usize> = w.u.iter().map(idx).collect();
    (Monomial::from_vars(n, &z), Monomial::from_vars(n, &u))
}

fn raw_walk_binomial(p: &Polyomino, w: &ZigZagWalk) -> Binomial {
    let (z, u) = walk_monomials(p, w);
    Binomial::new(z, u, &TermOrder::degrevlex(p.vertices().len()))
        .expect("z and u monomials differ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
}

#[derive(Debug, Clone, Copy)]
struct Step {
    interval: usize,
    v: usize,
    z: usize,
    u: usize,
    next: usize,
}

struct Search<'a> {
    p: &'a Polyomino,
    intervals: Vec<Interval>,
    /// `(interval, corner)` for every interval having the vertex as a corner.
    by_corner: Vec<Vec<(usize, Corner)>>,
    co_inner: CoInnerTable,
    mode: SearchMode,
    used: Vec<bool>,
    path: Vec<Step>,
    seen: BTreeSet<(Vec<u16>, Vec<u16>)>,
    found: Vec<ZigZagWalk>,
}

impl<'a> Search<'a> {
    fn new(p: &'a Polyomino, mode: SearchMode) -> Self {
        let intervals = p.all_inner_intervals();
        let n = p.vertices().len();
        let mut by_corner = vec![Vec::new(); n];
        for (k, iv) in intervals.iter().enumerate() {
            for c in Corner::ALL {
                let v = p.vertex_index(iv.corner(c)).expect("corner in V(P)");
                by_corner[v].push((k, c));
            }
        }
        let co_inner = CoInnerTable::new(p, &intervals);
        let used = vec![false; intervals.len()];
        Search {
            p,
            intervals,
            by_corner,
            co_inner,
            mode,
            used,
            path: Vec::new(),
            seen: BTreeSet::new(),
            found: Vec::new(),
        }
    }

    fn vidx(&self, v: Vertex) -> usize {
        self.p.vertex_index(v).expect("corner in V(P)")
    }

    fn done(&self) -> bool {
        self.mode == SearchMode::First && !self.found.is_empty()
    }

    fn run(&mut self) {
        // v_1 is the minimum of the v sequence: every walk has such a rotation
        for start in 0..self.intervals.len() {
            for cv in Corner::ALL {
                let iv = self.intervals[start];
                let v1 = self.vidx(iv.corner(cv));
                let z1 = self.vidx(iv.corner(cv.opposite()));
                for cn in cv.adjacent() {
                    let v2 = self.vidx(iv.corner(cn));
                    if v2 < v1 {
                        continue;
                    }
                    let u1 = self.vidx(iv.corner(cn.opposite()));
                    self.used[start] = true;
                    self.path.push(Step { interval: start, v: v1, z: z1, u: u1, next: v2 });
                    self.extend();
                    self.path.pop();
                    self.used[start] = false;
                    if self.done() {
                        return;
                    }
                }
            }
        }
    }

    fn extend(&mut self) {
        let last = *self.path.last().expect("nonempty path");
        let first = self.path[0];
        let here = last.next;
        let last_iv = self.intervals[last.interval];
        let candidates = self.by_corner[here].clone();
        for (k, ck) in candidates {
            if self.used[k] {
                continue;
            }
            let iv = self.intervals[k];
            if !last_iv.meets_only_at(&iv, iv.corner(ck)) {
                continue;
            }
            let z = self.vidx(iv.corner(ck.opposite()));
            if self.path.iter().any(|s| self.co_inner.get(s.z, z)) {
                continue;
            }
            for cn in ck.adjacent() {
                let next = self.vidx(iv.corner(cn));
                if next < first.v {
                    continue;
                }
                let u = self.vidx(iv.corner(cn.opposite()));
                let step = Step { interval: k, v: here, z, u, next };
                if next == first.v
                    && iv.meets_only_at(&self.intervals[first.interval], self.p.vertices()[first.v])
                {
                    self.path.push(step);
                    self.record();
                    self.path.pop();
                    if self.done() {
                        return;
                    }
                }
                self.used[k] = true;
                self.path.push(step);
                self.extend();
                self.path.pop();
                self.used[k] = false;
                if self.done() {
                    return;
                }
            }
        }
    }

    fn record(&mut self) {
        let verts = self.p.vertices();
        let walk = ZigZagWalk {
            intervals: self.path.iter().map(|s| self.intervals[s.interval]).collect(),
            v: self.path.iter().map(|s| verts[s.v]).collect(),
            z: self.path.iter().map(|s| verts[s.z]).collect(),
            u: self.path.iter().map(|s| verts[s.u]).collect(),
        };
        let (zm, um) = walk_monomials(self.p, &walk);
        let (zm, um) = (zm.exponents().to_vec(), um.exponents().to_vec());
        let key = if zm <= um { (zm, um) } else { (um, zm) };
        if self.seen.insert(key) {
            debug_assert!(verify_zigzag(self.p, &walk).map(|r| r.passed()).unwrap_or(false));
            self.found.push(walk);
        }
    }
}

/// Searches for zig-zag walks. `First` stops at the first one; `All` returns
/// one walk per distinct pair of monomials `{prod z, prod u}`.
pub fn find_zigzag(p: &Polyomino, mode: SearchMode) -> Vec<ZigZagWalk> {
    let mut search = Search::new(p, mode);
    search.run();
    search.found
}

/// Lazily yields walks (one per monomial pair) to a callback until it returns false.
pub fn for_each_zigzag<F: FnMut(&ZigZagWalk) -> bool>(p: &Polyomino, mut f: F) {
    // the search is cheap relative to the algebra a consumer runs per walk
    for w in find_zigzag(p, SearchMode::All) {
        if !f(&w) {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fixtures::*;
    use crate::text::parse_binomial;

    fn v(x: i32, y: i32) -> Vertex {
        Vertex::new(x, y)
    }

    fn iv(ax: i32, ay: i32, bx: i32, by: i32) -> Interval {
        Interval::new(v(ax, ay), v(bx, by))
    }

    /// The walk drawn for f1: bottom strip, left ear, right ear, top strip.
    fn f1_walk() -> ZigZagWalk {
        ZigZagWalk {
            intervals: vec![iv(3, 1, 7, 2), iv(1, 2, 3, 3), iv(3, 3, 7, 4), iv(7, 2, 8, 3)],
            v: vec![v(7, 2), v(3, 2), v(3, 3), v(7, 3)],
            z: vec![v(3, 1), v(1, 3), v(7, 4), v(8, 2)],
            u: vec![v(7, 1), v(1, 2), v(3, 4), v(8, 3)],
        }
    }

    pub(crate) const F: [&str; 4] = [
        "x(1,3)*x(3,1)*x(7,4)*x(8,2) - x(1,2)*x(3,4)*x(7,1)*x(8,3)",
        "x(1,3)*x(2,1)*x(7,4)*x(8,2) - x(1,2)*x(2,4)*x(7,1)*x(8,3)",
        "x(1,3)*x(3,1)*x(6,4)*x(8,2) - x(1,2)*x(3,4)*x(6,1)*x(8,3)",
        "x(1,3)*x(2,1)*x(6,4)*x(8,2) - x(1,2)*x(2,4)*x(6,1)*x(8,3)",
    ];

    #[test]
    fn co_inner_examples() {
        let p = square_frame();
        assert!(co_inner_pair(&p, v(1, 1), v(2, 2)));
        assert!(!co_inner_pair(&p, v(1, 1), v(4, 4)));
        assert!(co_inner_pair(&p, v(2, 2), v(2, 2)));
        assert!(co_inner_pair(&p, v(1, 1), v(4, 1)));
        assert!(co_inner_pair(&p, v(1, 2), v(4, 2)));
        assert!(!co_inner_pair(&p, v(1, 2), v(4, 3)));
    }

    #[test]
    fn co_inner_table_matches_direct() {
        for p in [square_frame(), two_ears()] {
            let table = CoInnerTable::new(&p, &p.all_inner_intervals());
            for (i, a) in p.vertices().iter().enumerate() {
                for (j, b) in p.vertices().iter().enumerate() {
                    assert_eq!(table.get(i, j), co_inner_pair(&p, *a, *b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn figure_walk_verifies() {
        let p = two_ears();
        let w = f1_walk();
        let r = verify_zigzag(&p, &w).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        let f1 = parse_binomial(F[0], &p).unwrap();
        assert!(walk_binomial(&p, &w).unwrap().same_up_to_sign(&f1));
    }

    #[test]
    fn rotations_and_reversal_still_verify() {
        let p = two_ears();
        let w = f1_walk();
        for k in 0..4 {
            assert!(verify_zigzag(&p, &w.rotated(k)).unwrap().passed());
        }
        let r = w.reversed();
        assert!(verify_zigzag(&p, &r).unwrap().passed());
        assert!(walk_binomial(&p, &r).unwrap().same_up_to_sign(&walk_binomial(&p, &w).unwrap()));
    }

    #[test]
    fn violations_are_reported() {
        let p = two_ears();
        let mut odd = f1_walk();
        odd.intervals.pop();
        odd.v.pop();
        odd.z.pop();
        odd.u.pop();
        let r = verify_zigzag(&p, &odd).unwrap();
        assert!(!r.parity && !r.passed());

        // replace the left ear by a cell overlapping the bottom strip in a segment
        let mut overlap = f1_walk();
        overlap.intervals[1] = iv(2, 1, 3, 2);
        let r = verify_zigzag(&p, &overlap).unwrap();
        assert!(!r.z1);
        assert!(matches!(walk_binomial(&p, &overlap), Err(WalkError::InvalidWalk(_))));

        let mut bad = f1_walk();
        bad.z.pop();
        assert!(matches!(verify_zigzag(&p, &bad), Err(WalkError::MalformedWalk(_))));
    }

    #[test]
    fn two_ears_has_exactly_the_four_walks() {
        let p = two_ears();
        let walks = find_zigzag(&p, SearchMode::All);
        assert_eq!(walks.len(), 4);
        let fs: Vec<Binomial> = F.iter().map(|s| parse_binomial(s, &p).unwrap()).collect();
        for w in &walks {
            assert!(verify_zigzag(&p, w).unwrap().passed());
            let b = walk_binomial(&p, w).unwrap();
            assert!(fs.iter().any(|f| f.same_up_to_sign(&b)));
        }
        for f in &fs {
            assert!(walks.iter().any(|w| walk_binomial(&p, w).unwrap().same_up_to_sign(f)));
        }
        assert_eq!(find_zigzag(&p, SearchMode::First).len(), 1);
    }

    #[test]
    fn no_walks_without_holes_or_in_frame() {
        assert!(find_zigzag(&monomino(), SearchMode::All).is_empty());
        assert!(find_zigzag(&square_frame(), SearchMode::All).is_empty());
    }
}
