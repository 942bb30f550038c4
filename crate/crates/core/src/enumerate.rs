//! Enumeration of fixed and free polyominoes by Redelmeier's method.
//!
//! Fixed polyominoes are grown from a root cell inside the half plane
//! `y > 0 || (y == 0 && x >= 0)`; each one is produced exactly once. Free
//! polyominoes are the fixed ones that equal their canonical form.

use std::sync::mpsc::{sync_channel, Receiver};
use std::thread;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::{has_hole, Cell, Polyomino};

pub const DEFAULT_MAX_RANK: usize = 14;
pub const HARD_MAX_RANK: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },
}

/// Which free polyominoes to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    All,
    Simple,
    MultiplyConnected,
}

impl Class {
    fn keeps(self, holey: bool) -> bool {
        match self {
            Class::All => true,
            Class::Simple => !holey,
            Class::MultiplyConnected => holey,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RankCounts {
    pub rank: usize,
    pub fixed: u64,
    pub free: u64,
    pub simple: u64,
    pub multiply_connected: u64,
}

pub fn check_rank(rank: usize, max: usize) -> Result<(), EnumerateError> {
    let max = max.min(HARD_MAX_RANK);
    if rank == 0 || rank > max {
        return Err(EnumerateError::RankOutOfRange { rank, max });
    }
    Ok(())
}

/// Search state; cheap to clone so subtrees can be handed to worker threads.
#[derive(Clone)]
struct Grower {
    max: usize,
    stride: i32,
    seen: Vec<bool>,
    cells: Vec<(i32, i32)>,
    untried: Vec<(i32, i32)>,
}

impl Grower {
    fn new(max: usize) -> Self {
        let n = max as i32;
        // x in -(n-1)..=(n-1), y in 0..=n-1, plus a margin so neighbours never wrap
        let stride = 2 * n + 3;
        let rows = n + 2;
        Grower {
            max,
            stride,
            seen: vec![false; (stride * rows) as usize],
            cells: Vec::with_capacity(max),
            untried: Vec::new(),
        }
    }

    fn slot(&self, (x, y): (i32, i32)) -> usize {
        ((y + 1) * self.stride + x + self.max as i32 + 1) as usize
    }

    fn allowed((x, y): (i32, i32)) -> bool {
        y > 0 || (y == 0 && x >= 0)
    }

    fn root(max: usize) -> Self {
        let mut g = Grower::new(max);
        let s = g.slot((0, 0));
        g.seen[s] = true;
        g.untried.push((0, 0));
        g
    }

    /// Runs the subtree below the current state. When `split_at` is given,
    /// states whose polyomino reaches that size are handed to `spawn`
    /// instead of expanded (after being visited).
    fn grow<V, S>(&mut self, visit: &mut V, split_at: Option<usize>, spawn: &mut S)
    where
        V: FnMut(&[(i32, i32)]),
        S: FnMut(Grower),
    {
        let mut untried = std::mem::take(&mut self.untried);
        while let Some(c) = untried.pop() {
            self.cells.push(c);
            visit(&self.cells);
            if self.cells.len() < self.max {
                let mut fresh = Vec::new();
                for nb in [(c.0 + 1, c.1), (c.0 - 1, c.1), (c.0, c.1 + 1), (c.0, c.1 - 1)] {
                    if !Self::allowed(nb) {
                        continue;
                    }
                    let s = self.slot(nb);
                    if !self.seen[s] {
                        self.seen[s] = true;
                        fresh.push(nb);
                    }
                }
                let mut next = untried.clone();
                next.extend_from_slice(&fresh);
                if split_at == Some(self.cells.len()) {
                    let mut child = self.clone();
                    child.untried = next;
                    spawn(child);
                } else {
                    self.untried = next;
                    self.grow(visit, split_at, spawn);
                }
                for nb in fresh {
                    let s = self.slot(nb);
                    self.seen[s] = false;
                }
            }
            self.cells.pop();
        }
    }
}

/// Calls `visit` once for every fixed polyomino with `1..=max` cells. Cells
/// are given in raw (untranslated) coordinates.
pub fn for_each_fixed<V: FnMut(&[(i32, i32)])>(max: usize, mut visit: V) {
    if max == 0 {
        return;
    }
    let mut g = Grower::root(max);
    g.grow(&mut visit, None, &mut |_| unreachable!());
}

/// Parallel fold over the fixed polyominoes with `1..=max` cells.
fn par_fold_fixed<T, V, M>(max: usize, visit: V, merge: M) -> T
where
    T: Default + Send,
    V: Fn(&mut T, &[(i32, i32)]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    if max == 0 {
        return T::default();
    }
    let split = 6.min(max);
    let mut acc = T::default();
    let mut tasks = Vec::new();
    let mut g = Grower::root(max);
    g.grow(&mut |cells| visit(&mut acc, cells), Some(split), &mut |child| tasks.push(child));
    let rest = tasks
        .into_par_iter()
        .map(|mut child| {
            let mut local = T::default();
            child.grow(&mut |cells| visit(&mut local, cells), None, &mut |_| unreachable!());
            local
        })
        .reduce(T::default, &merge);
    merge(acc, rest)
}

/// Packs normalized `(x, y)` pairs (both starting at 1) as `x << 8 | y`,
/// which sorts like [`Cell`].
fn pack_normalized(cells: &[(i32, i32)], t: usize, out: &mut [u16]) {
    let map = |&(x, y): &(i32, i32)| {
        let (x, y) = if t & 4 != 0 { (y, x) } else { (x, y) };
        let x = if t & 1 != 0 { -x } else { x };
        let y = if t & 2 != 0 { -y } else { y };
        (x, y)
    };
    let mut min_x = i32::MAX;
    let mut min_y = i32::MAX;
    for c in cells {
        let (x, y) = map(c);
        min_x = min_x.min(x);
        min_y = min_y.min(y);
    }
    for (slot, c) in out.iter_mut().zip(cells) {
        let (x, y) = map(c);
        *slot = (((x - min_x + 1) as u16) << 8) | (y - min_y + 1) as u16;
    }
    out.sort_unstable();
}

/// If the fixed polyomino is the canonical representative of its free class,
/// returns its normalized sorted cells.
fn canonical_representative(cells: &[(i32, i32)]) -> Option<Vec<Cell>> {
    let n = cells.len();
    let mut base = [0u16; HARD_MAX_RANK];
    let mut other = [0u16; HARD_MAX_RANK];
    pack_normalized(cells, 0, &mut base[..n]);
    for t in 1..8 {
        pack_normalized(cells, t, &mut other[..n]);
        if other[..n] < base[..n] {
            return None;
        }
    }
    Some(
        base[..n]
            .iter()
            .map(|&p| Cell::new((p >> 8) as i32, (p & 0xff) as i32))
            .collect(),
    )
}

fn normalized(cells: &[(i32, i32)]) -> Vec<Cell> {
    let mut packed = vec![0u16; cells.len()];
    pack_normalized(cells, 0, &mut packed);
    packed
        .into_iter()
        .map(|p| Cell::new((p >> 8) as i32, (p & 0xff) as i32))
        .collect()
}

/// All fixed polyominoes with exactly `rank` cells, normalized and sorted.
pub fn enumerate_fixed(rank: usize) -> Result<Vec<Vec<Cell>>, EnumerateError> {
    check_rank(rank, HARD_MAX_RANK)?;
    let mut out = Vec::new();
    for_each_fixed(rank, |cells| {
        if cells.len() == rank {
            out.push(normalized(cells));
        }
    });
    out.sort();
    Ok(out)
}

/// Free polyominoes of exactly `rank` cells in `class`, sorted by cell list.
pub fn enumerate_free(rank: usize, class: Class) -> Result<Vec<Polyomino>, EnumerateError> {
    check_rank(rank, HARD_MAX_RANK)?;
    let mut shapes: Vec<Vec<Cell>> = par_fold_fixed(
        rank,
        |acc: &mut Vec<Vec<Cell>>, cells| {
            if cells.len() != rank {
                return;
            }
            if let Some(rep) = canonical_representative(cells) {
                if class.keeps(has_hole(&rep)) {
                    acc.push(rep);
                }
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    shapes.sort();
    Ok(shapes.into_iter().map(Polyomino::from_normalized).collect())
}

/// Streams free polyominoes of exactly `rank` cells from a producer thread.
/// Order is the generation order, not sorted.
pub struct FreeStream {
    rx: Receiver<Polyomino>,
}

impl Iterator for FreeStream {
    type Item = Polyomino;

    fn next(&mut self) -> Option<Polyomino> {
        self.rx.recv().ok()
    }
}

pub fn stream_free(rank: usize, class: Class) -> Result<FreeStream, EnumerateError> {
    check_rank(rank, HARD_MAX_RANK)?;
    let (tx, rx) = sync_channel(1024);
    thread::spawn(move || {
        let mut open = true;
        for_each_fixed(rank, |cells| {
            if !open || cells.len() != rank {
                return;
            }
            if let Some(rep) = canonical_representative(cells) {
                if class.keeps(has_hole(&rep)) {
                    open = tx.send(Polyomino::from_normalized(rep)).is_ok();
                }
            }
        });
    });
    Ok(FreeStream { rx })
}

/// Counts for every rank `1..=max_rank`.
pub fn count_table(max_rank: usize) -> Result<Vec<RankCounts>, EnumerateError> {
    check_rank(max_rank, HARD_MAX_RANK)?;
    let counts: Vec<RankCounts> = par_fold_fixed(
        max_rank,
        |acc: &mut Vec<RankCounts>, cells| {
            if acc.is_empty() {
                *acc = vec![RankCounts::default(); max_rank + 1];
            }
            let entry = &mut acc[cells.len()];
            entry.fixed += 1;
            if let Some(rep) = canonical_representative(cells) {
                entry.free += 1;
                if has_hole(&rep) {
                    entry.multiply_connected += 1;
                } else {
                    entry.simple += 1;
                }
            }
        },
        |a, b| {
            if a.is_empty() {
                return b;
            }
            if b.is_empty() {
                return a;
            }
            a.iter()
                .zip(&b)
                .map(|(x, y)| RankCounts {
                    rank: 0,
                    fixed: x.fixed + y.fixed,
                    free: x.free + y.free,
                    simple: x.simple + y.simple,
                    multiply_connected: x.multiply_connected + y.multiply_connected,
                })
                .collect()
        },
    );
    let mut counts = if counts.is_empty() { vec![RankCounts::default(); max_rank + 1] } else { counts };
    for (r, c) in counts.iter_mut().enumerate() {
        c.rank = r;
    }
    counts.remove(0);
    Ok(counts)
}

/// Counts for exactly `rank` cells.
pub fn count_by_class(rank: usize) -> Result<RankCounts, EnumerateError> {
    Ok(count_table(rank)?[rank - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{canonical_cells, is_canonical};
    use std::collections::BTreeSet;

    /// Grows every fixed polyomino of size n by adding a neighbour to each of
    /// size n - 1, deduplicating normalized cell sets.
    fn brute_fixed(n: usize) -> BTreeSet<Vec<Cell>> {
        let mut level: BTreeSet<Vec<Cell>> = [vec![Cell::new(1, 1)]].into_iter().collect();
        for _ in 1..n {
            let mut next = BTreeSet::new();
            for shape in &level {
                for c in shape {
                    for nb in c.edge_neighbors() {
                        if shape.contains(&nb) {
                            continue;
                        }
                        let raw: Vec<(i32, i32)> = shape
                            .iter()
                            .chain(std::iter::once(&nb))
                            .map(|c| (c.x(), c.y()))
                            .collect();
                        next.insert(normalized(&raw));
                    }
                }
            }
            level = next;
        }
        level
    }

    #[test]
    fn fixed_counts_match_brute_force() {
        for n in 1..=6 {
            let ours = enumerate_fixed(n).unwrap();
            let brute: Vec<Vec<Cell>> = brute_fixed(n).into_iter().collect();
            assert_eq!(ours, brute, "n = {n}");
        }
        let expected = [1, 2, 6, 19, 63, 216];
        let table = count_table(6).unwrap();
        for (c, e) in table.iter().zip(expected) {
            assert_eq!(c.fixed, e);
        }
    }

    #[test]
    fn free_counts_match_brute_force() {
        for n in 1..=7 {
            let brute: BTreeSet<Vec<Cell>> = brute_fixed(n).iter().map(|s| canonical_cells(s)).collect();
            let ours: Vec<Vec<Cell>> = enumerate_free(n, Class::All)
                .unwrap()
                .iter()
                .map(|p| p.cells().to_vec())
                .collect();
            assert_eq!(ours, brute.into_iter().collect::<Vec<_>>(), "n = {n}");
        }
        let table = count_table(7).unwrap();
        let free: Vec<u64> = table.iter().map(|c| c.free).collect();
        assert_eq!(free, vec![1, 1, 2, 5, 12, 35, 108]);
        assert_eq!(table[6].multiply_connected, 1);
    }

    #[test]
    fn fast_canonical_matches_geometry() {
        for shape in brute_fixed(6) {
            let raw: Vec<(i32, i32)> = shape.iter().map(|c| (c.x() + 3, c.y() - 2)).collect();
            assert_eq!(canonical_representative(&raw).is_some(), is_canonical(&shape));
        }
    }

    #[test]
    fn stream_agrees_with_sorted_list() {
        let mut streamed: Vec<Polyomino> = stream_free(8, Class::MultiplyConnected).unwrap().collect();
        streamed.sort_by(|a, b| a.cells().cmp(b.cells()));
        assert_eq!(streamed, enumerate_free(8, Class::MultiplyConnected).unwrap());
        assert_eq!(streamed.len(), 6);
    }

    #[test]
    fn rank_range_is_checked() {
        assert!(matches!(enumerate_fixed(0), Err(EnumerateError::RankOutOfRange { .. })));
        assert!(matches!(count_by_class(17), Err(EnumerateError::RankOutOfRange { .. })));
        assert!(check_rank(15, DEFAULT_MAX_RANK).is_err());
    }
}
