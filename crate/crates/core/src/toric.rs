//! The monomial map `alpha` of a polyomino and its toric ideal `J_P`.
//!
//! Each vertex `a` is sent to `h_i v_j prod w_k`, where `H_i`/`V_j` are the
//! maximal horizontal/vertical edge intervals through `a` and `w_k` is present
//! iff `a` lies weakly below-left of the lower-left corner of the k-th hole.
//! The exponent matrix of this map is the single source of truth for `J_P`.

use thiserror::Error;

use crate::algebra::{self, AlgebraError, Binomial, Budget, GroebnerBasis, TermOrder};
use crate::geometry::{Direction, EdgeInterval, Polyomino, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("polyomino has {holes} holes, no hole with index {index}")]
    NoSuchHole { index: usize, holes: usize },
}

/// Vertices weakly below-left of a hole's lower-left corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkRegion {
    pub hole: usize,
    pub corner: Vertex,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowTag {
    Horizontal(EdgeInterval),
    Vertical(EdgeInterval),
    Region { hole: usize, corner: Vertex },
}

/// 0/1 matrix of the map; column `c` is the exponent vector of `alpha(vertex c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    pub rows: Vec<RowTag>,
    pub columns: Vec<Vertex>,
    entries: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    pub fn from_rows(rows: Vec<RowTag>, columns: Vec<Vertex>, entries: Vec<Vec<i64>>) -> Self {
        assert_eq!(rows.len(), entries.len());
        assert!(entries.iter().all(|r| r.len() == columns.len()));
        ExponentMatrix { rows, columns, entries }
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r][c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[c]).collect()
    }

    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(u).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// The same matrix with rows permuted by `perm` (`new[k] = old[perm[k]]`).
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        ExponentMatrix {
            rows: perm.iter().map(|&k| self.rows[k]).collect(),
            columns: self.columns.clone(),
            entries: perm.iter().map(|&k| self.entries[k].clone()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.ncols() - integer_kernel(self).vectors.len()
    }
}

pub fn fk_region(p: &Polyomino, k: usize) -> Result<FkRegion, ToricError> {
    let hole = p.holes().get(k).ok_or(ToricError::NoSuchHole { index: k, holes: p.holes().len() })?;
    let e = hole.lower_left_corner;
    let vertices = p.vertices().iter().copied().filter(|v| v.x <= e.x && v.y <= e.y).collect();
    Ok(FkRegion { hole: k, corner: e, vertices })
}

/// Rows: maximal horizontal intervals, maximal vertical intervals, then one row per hole.
pub fn build_alpha_matrix(p: &Polyomino) -> ExponentMatrix {
    let columns = p.vertices().to_vec();
    let n = columns.len();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (direction, tag) in [
        (Direction::Horizontal, RowTag::Horizontal as fn(EdgeInterval) -> RowTag),
        (Direction::Vertical, RowTag::Vertical as fn(EdgeInterval) -> RowTag),
    ] {
        for (k, e) in p.maximal_edge_intervals(direction).iter().enumerate() {
            rows.push(tag(*e));
            entries.push((0..n).map(|c| (p.edge_interval_of(direction, c) == k) as i64).collect());
        }
    }
    for k in 0..p.holes().len() {
        let region = fk_region(p, k).expect("hole index in range");
        rows.push(RowTag::Region { hole: k, corner: region.corner });
        entries.push(columns.iter().map(|v| region.vertices.contains(v) as i64).collect());
    }
    ExponentMatrix { rows, columns, entries }
}

/// A Z-basis of `{u in Z^n : A u = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec<i64>>,
}

impl LatticeBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Saturated integer kernel by unimodular row reduction of `[A^T | I]`.
///
/// Row operations on `A^T` stay invertible over the integers, so the identity
/// block of every row whose `A^T` part vanishes spans `ker_Z(A)` exactly.
pub fn integer_kernel(a: &ExponentMatrix) -> LatticeBasis {
    let (m, n) = (a.nrows(), a.ncols());
    // rows indexed by columns of A: [ A^T row | e_c ]
    let mut rows: Vec<(Vec<i128>, Vec<i128>)> = (0..n)
        .map(|c| {
            let left = (0..m).map(|r| a.entry(r, c) as i128).collect();
            let mut right = vec![0i128; n];
            right[c] = 1;
            (left, right)
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..m {
        if pivot_row == n {
            break;
        }
        // gcd-combine every nonzero entry of this column into the pivot row
        loop {
            let nonzero: Vec<usize> = (pivot_row..n).filter(|&r| rows[r].0[col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero
                .iter()
                .min_by_key(|&&r| rows[r].0[col].abs())
                .expect("nonempty");
            rows.swap(pivot_row, best);
            let p = rows[pivot_row].0[col];
            let mut done = true;
            for r in pivot_row + 1..n {
                let v = rows[r].0[col];
                if v == 0 {
                    continue;
                }
                let q = v / p;
                let (pl, pr) = rows[pivot_row].clone();
                for (x, y) in rows[r].0.iter_mut().zip(pl.iter()) {
                    *x -= q * y;
                }
                for (x, y) in rows[r].1.iter_mut().zip(pr.iter()) {
                    *x -= q * y;
                }
                if rows[r].0[col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row].0[col] != 0 {
            pivot_row += 1;
        }
    }

    let mut vectors: Vec<Vec<i64>> = rows[pivot_row..]
        .iter()
        .map(|(left, right)| {
            debug_assert!(left.iter().all(|&x| x == 0));
            right.iter().map(|&x| i64::try_from(x).expect("kernel entry fits i64")).collect()
        })
        .collect();
    shorten(&mut vectors);
    for u in &vectors {
        assert!(a.apply(u).iter().all(|&x| x == 0), "kernel vector not annihilated");
    }
    LatticeBasis { vectors }
}

fn l1(u: &[i64]) -> i64 {
    u.iter().map(|x| x.abs()).sum()
}

/// Greedy pairwise size reduction in the L1 norm; keeps the lattice unchanged.
fn shorten(vectors: &mut [Vec<i64>]) {
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..vectors.len() {
            for j in 0..vectors.len() {
                if i == j {
                    continue;
                }
                for s in [1i64, -1] {
                    let cand: Vec<i64> = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a + s * b).collect();
                    if l1(&cand) < l1(&vectors[i]) {
                        vectors[i] = cand;
                        improved = true;
                    }
                }
            }
        }
    }
    for u in vectors.iter_mut() {
        if u.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            u.iter_mut().for_each(|x| *x = -*x);
        }
    }
    vectors.sort();
}

/// `A (e+ - e-) = 0`: membership of a binomial in `ker phi`, independent of any basis.
pub fn toric_member_binomial(a: &ExponentMatrix, b: &Binomial) -> bool {
    a.apply(&b.exponent_vector()).iter().all(|&x| x == 0)
}

/// Binomials of a lattice basis, each asserted homogeneous.
pub fn lattice_basis_binomials(basis: &LatticeBasis, order: &TermOrder) -> Vec<Binomial> {
    basis
        .vectors
        .iter()
        .map(|u| {
            assert_eq!(u.iter().sum::<i64>(), 0, "lattice vector not homogeneous");
            Binomial::from_exponent_vector(u, order).expect("nonzero lattice vector")
        })
        .collect()
}

/// Reduced degrevlex basis of `J_P`.
pub fn toric_ideal(p: &Polyomino) -> GroebnerBasis {
    toric_ideal_with_budget(p, Budget::UNLIMITED).expect("unlimited budget")
}

/// Lattice-basis binomials together with the inner 2-minors (all in `J_P`),
/// saturated by every variable, then reduced.
pub fn toric_ideal_with_budget(p: &Polyomino, budget: Budget) -> Result<GroebnerBasis, AlgebraError> {
    let order = TermOrder::degrevlex(p.vertices().len());
    let a = build_alpha_matrix(p);
    let basis = integer_kernel(&a);
    let mut gens = lattice_basis_binomials(&basis, &order);
    gens.extend(p.inner_2_minors());
    let saturated = algebra::saturate_all_with_budget(&gens, budget)?;
    algebra::buchberger_with_budget(&saturated, &order, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use crate::geometry::fixtures::*;

    fn v(x: i32, y: i32) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn monomino_matrix_and_kernel() {
        let p = monomino();
        let a = build_alpha_matrix(&p);
        assert_eq!((a.nrows(), a.ncols()), (4, 4));
        for c in 0..4 {
            assert_eq!(a.column(c).iter().sum::<i64>(), 2);
        }
        let k = integer_kernel(&a);
        // vertices in order (1,1),(1,2),(2,1),(2,2)
        assert_eq!(k.vectors, vec![vec![1, -1, -1, 1]]);
    }

    #[test]
    fn square_frame_matrix() {
        let p = square_frame();
        let a = build_alpha_matrix(&p);
        assert_eq!((a.nrows(), a.ncols()), (9, 16));
        let c = p.vertex_index(v(1, 1)).unwrap();
        assert_eq!(a.column(c).iter().sum::<i64>(), 3);
        assert_eq!(a.entry(8, c), 1);
        // bipartite incidence of K_{4,4} has rank 7; the region row adds one
        assert_eq!(a.rank(), 8);
        assert_eq!(integer_kernel(&a).dimension(), 8);
    }

    #[test]
    fn two_ears_matrix() {
        let a = build_alpha_matrix(&two_ears());
        assert_eq!((a.nrows(), a.ncols()), (14, 28));
    }

    #[test]
    fn regions() {
        let f = fk_region(&square_frame(), 0).unwrap();
        assert_eq!(f.vertices, vec![v(1, 1), v(1, 2), v(2, 1), v(2, 2)]);
        let f = fk_region(&two_ears(), 0).unwrap();
        assert_eq!(f.vertices, vec![v(1, 2), v(2, 1), v(2, 2), v(3, 1), v(3, 2)]);
        assert_eq!(
            fk_region(&monomino(), 0),
            Err(ToricError::NoSuchHole { index: 0, holes: 0 })
        );
    }

    #[test]
    fn independent_columns_have_trivial_kernel() {
        let a = ExponentMatrix::from_rows(
            vec![RowTag::Region { hole: 0, corner: v(1, 1) }, RowTag::Region { hole: 1, corner: v(1, 1) }],
            vec![v(1, 1), v(1, 2)],
            vec![vec![1, 0], vec![0, 1]],
        );
        assert!(integer_kernel(&a).vectors.is_empty());
    }

    #[test]
    fn kernel_is_saturated_for_non_unimodular_matrix() {
        // ker of [2 1 1] over Z is spanned by (1,-2,0),(0,1,-1), index-one lattice
        let a = ExponentMatrix::from_rows(
            vec![RowTag::Region { hole: 0, corner: v(1, 1) }],
            vec![v(1, 1), v(1, 2), v(2, 1)],
            vec![vec![2, 1, 1]],
        );
        let k = integer_kernel(&a);
        assert_eq!(k.dimension(), 2);
        // (1,-1,-1) is in ker_Z and must be an integer combination
        let (b0, b1) = (&k.vectors[0], &k.vectors[1]);
        let found = (-3i64..=3).any(|s| {
            (-3i64..=3).any(|t| (0..3).all(|i| s * b0[i] + t * b1[i] == [1, -2, 0][i]))
        });
        assert!(found, "{k:?}");
    }

    #[test]
    fn monomino_toric_ideal() {
        let p = monomino();
        let gb = toric_ideal(&p);
        assert_eq!(gb.elements(), p.inner_2_minors().as_slice());
    }

    #[test]
    fn hole_cell_minor_is_not_toric() {
        let p = two_ears();
        let a = build_alpha_matrix(&p);
        let n = p.vertices().len();
        let idx = |x, y| p.vertex_index(v(x, y)).unwrap();
        let fake = Binomial::new(
            Monomial::from_vars(n, &[idx(3, 2), idx(4, 3)]),
            Monomial::from_vars(n, &[idx(3, 3), idx(4, 2)]),
            &TermOrder::degrevlex(n),
        )
        .unwrap();
        assert!(!toric_member_binomial(&a, &fake));
        for m in p.inner_2_minors() {
            assert!(toric_member_binomial(&a, &m));
        }
    }

    #[test]
    fn square_frame_is_prime() {
        let p = square_frame();
        let order = TermOrder::degrevlex(p.vertices().len());
        let j = toric_ideal(&p);
        let i = algebra::buchberger(&p.inner_2_minors(), &order);
        assert_eq!(i, j);
    }

    #[test]
    fn row_order_does_not_change_kernel_lattice() {
        let p = two_ears();
        let a = build_alpha_matrix(&p);
        let mut perm: Vec<usize> = (0..a.nrows()).collect();
        perm.reverse();
        let b = a.permute_rows(&perm);
        let order = TermOrder::degrevlex(p.vertices().len());
        let ga = lattice_basis_binomials(&integer_kernel(&a), &order);
        let gb = lattice_basis_binomials(&integer_kernel(&b), &order);
        for g in ga.iter().chain(&gb) {
            assert!(toric_member_binomial(&a, g) && toric_member_binomial(&b, g));
        }
        assert_eq!(integer_kernel(&a).dimension(), integer_kernel(&b).dimension());
    }
}
