//! Cross-checks the zig-zag search against a plain search that only uses the
//! consecutive-intersection condition and tests everything else at the end.

mod common;

use std::collections::BTreeSet;

use polyideal::algebra::{Binomial, Monomial, TermOrder};
use polyideal::geometry::{Corner, Interval, Polyomino, Vertex};
use polyideal::toric::{build_alpha_matrix, toric_ideal, toric_member_binomial};
use polyideal::walks::{find_zigzag, verify_zigzag, walk_binomial, SearchMode, ZigZagWalk};

fn inner_boxes(p: &Polyomino) -> Vec<(i32, i32, i32, i32)> {
    let mut out = Vec::new();
    for x0 in 1..=p.width() {
        for x1 in x0 + 1..=p.width() + 1 {
            for y0 in 1..=p.height() {
                for y1 in y0 + 1..=p.height() + 1 {
                    if (x0..x1).all(|x| (y0..y1).all(|y| p.has_cell(x, y))) {
                        out.push((x0, y0, x1, y1));
                    }
                }
            }
        }
    }
    out
}

fn co_inner(boxes: &[(i32, i32, i32, i32)], a: Vertex, b: Vertex) -> bool {
    let inside = |v: Vertex, &(x0, y0, x1, y1): &(i32, i32, i32, i32)| x0 <= v.x && v.x <= x1 && y0 <= v.y && v.y <= y1;
    boxes.iter().any(|bx| inside(a, bx) && inside(b, bx))
}

/// Unit edges between the two vertices all belong to cells of `p`.
fn on_edge_segment(p: &Polyomino, a: Vertex, b: Vertex) -> bool {
    if a.x == b.x {
        let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
        (lo..hi).all(|y| p.has_cell(a.x, y) || p.has_cell(a.x - 1, y))
    } else if a.y == b.y {
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        (lo..hi).all(|x| p.has_cell(x, a.y) || p.has_cell(x, a.y - 1))
    } else {
        false
    }
}

fn key(p: &Polyomino, zs: &[Vertex], us: &[Vertex]) -> (Vec<u16>, Vec<u16>) {
    let n = p.vertices().len();
    let idx = |vs: &[Vertex]| vs.iter().map(|v| p.vertex_index(*v).unwrap()).collect::<Vec<_>>();
    let a = Monomial::from_vars(n, &idx(zs)).exponents().to_vec();
    let b = Monomial::from_vars(n, &idx(us)).exponents().to_vec();
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

struct Plain<'a> {
    p: &'a Polyomino,
    intervals: Vec<Interval>,
    boxes: Vec<(i32, i32, i32, i32)>,
    max_len: usize,
    seq: Vec<(usize, Corner, Corner)>,
    found: BTreeSet<(Vec<u16>, Vec<u16>)>,
}

impl Plain<'_> {
    fn corners(&self, k: usize) -> (Vertex, Vertex, Vertex, Vertex) {
        let (i, cv, cn) = self.seq[k];
        let iv = &self.intervals[i];
        (iv.corner(cv), iv.corner(cv.opposite()), iv.corner(cn.opposite()), iv.corner(cn))
    }

    fn check_closed(&mut self) {
        let l = self.seq.len();
        if l < 2 {
            return;
        }
        let (v1, ..) = self.corners(0);
        let (.., last_next) = self.corners(l - 1);
        if last_next != v1 {
            return;
        }
        let first = self.intervals[self.seq[0].0];
        let last = self.intervals[self.seq[l - 1].0];
        if first.intersection(&last) != Some(Interval::new(v1, v1)) {
            return;
        }
        let mut zs = Vec::new();
        let mut us = Vec::new();
        for k in 0..l {
            let (v, z, u, next) = self.corners(k);
            if !on_edge_segment(self.p, v, next) {
                return;
            }
            zs.push(z);
            us.push(u);
        }
        for i in 0..l {
            for j in 0..i {
                if co_inner(&self.boxes, zs[i], zs[j]) {
                    return;
                }
            }
        }
        self.found.insert(key(self.p, &zs, &us));
    }

    fn extend(&mut self) {
        self.check_closed();
        if self.seq.len() == self.max_len {
            return;
        }
        let (_, _, _, here) = self.corners(self.seq.len() - 1);
        let prev = self.intervals[self.seq[self.seq.len() - 1].0];
        for k in 0..self.intervals.len() {
            if self.seq.iter().any(|s| s.0 == k) {
                continue;
            }
            let iv = self.intervals[k];
            let Some(cv) = iv.corner_of(here) else { continue };
            if prev.intersection(&iv) != Some(Interval::new(here, here)) {
                continue;
            }
            for cn in cv.adjacent() {
                self.seq.push((k, cv, cn));
                self.extend();
                self.seq.pop();
            }
        }
    }

    fn run(p: &Polyomino, max_len: usize) -> BTreeSet<(Vec<u16>, Vec<u16>)> {
        let mut s = Plain {
            p,
            intervals: p.all_inner_intervals(),
            boxes: inner_boxes(p),
            max_len,
            seq: Vec::new(),
            found: BTreeSet::new(),
        };
        for k in 0..s.intervals.len() {
            for cv in Corner::ALL {
                for cn in cv.adjacent() {
                    s.seq.push((k, cv, cn));
                    s.extend();
                    s.seq.pop();
                }
            }
        }
        s.found
    }
}

fn search_keys(p: &Polyomino) -> BTreeSet<(Vec<u16>, Vec<u16>)> {
    find_zigzag(p, SearchMode::All).iter().map(|w| key(p, &w.z, &w.u)).collect()
}

#[test]
fn search_matches_plain_search_up_to_rank_nine() {
    let mut shapes = common::holey_up_to(9);
    shapes.push(polyideal::geometry::fixtures::two_ears());
    for p in shapes {
        let plain = Plain::run(&p, 12);
        assert_eq!(plain, search_keys(&p), "{}", p.canonical_key());
    }
}

#[test]
fn first_mode_agrees_with_all_mode() {
    for p in common::holey_up_to(10) {
        let all = find_zigzag(&p, SearchMode::All);
        let first = find_zigzag(&p, SearchMode::First);
        assert_eq!(first.len(), usize::from(!all.is_empty()));
    }
}

#[test]
fn walk_binomials_lie_in_the_toric_ideal() {
    let mut shapes = common::holey_up_to(10);
    shapes.push(polyideal::geometry::fixtures::two_pf());
    for p in shapes {
        let walks = find_zigzag(&p, SearchMode::All);
        if walks.is_empty() {
            continue;
        }
        let a = build_alpha_matrix(&p);
        for w in &walks {
            let f = walk_binomial(&p, w).unwrap();
            assert!(toric_member_binomial(&a, &f), "{}", p.canonical_key());
            assert_eq!(w.len() % 2, 0);
        }
        if p.rank() <= 9 {
            let jp = toric_ideal(&p);
            assert!(walks.iter().all(|w| jp.contains(&walk_binomial(&p, w).unwrap())));
        }
    }
}

#[test]
fn every_reported_walk_verifies_in_every_rotation() {
    for p in common::holey_up_to(10) {
        for w in find_zigzag(&p, SearchMode::All) {
            for k in 0..w.len() {
                let r: ZigZagWalk = w.rotated(k);
                assert!(verify_zigzag(&p, &r).unwrap().passed());
            }
            assert!(verify_zigzag(&p, &w.reversed()).unwrap().passed());
        }
    }
}

#[test]
fn two_pf_has_two_walk_classes() {
    let p = polyideal::geometry::fixtures::two_pf();
    let walks = find_zigzag(&p, SearchMode::All);
    assert!(walks.len() >= 2);
    let order = TermOrder::degrevlex(p.vertices().len());
    let bins: Vec<Binomial> = walks.iter().map(|w| walk_binomial(&p, w).unwrap().canonicalized(&order)).collect();
    assert!(bins.windows(2).all(|w| !w[0].same_up_to_sign(&w[1])));
}
