#![allow(dead_code)]

use polyideal::algebra::{Binomial, GroebnerBasis, Monomial, TermOrder};
use polyideal::enumerate::{enumerate_free, Class};
use polyideal::geometry::{fixtures, Polyomino};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn all_fixtures() -> Vec<(&'static str, Polyomino)> {
    ["monomino", "square_frame", "two_ears", "two_pf"]
        .into_iter()
        .map(|n| (n, fixtures::by_name(n).unwrap()))
        .collect()
}

pub fn holey_up_to(max_rank: usize) -> Vec<Polyomino> {
    (7..=max_rank)
        .flat_map(|r| enumerate_free(r, Class::MultiplyConnected).unwrap())
        .collect()
}

/// `count` free polyominoes drawn uniformly from all free shapes of rank `2..=max_rank`.
pub fn random_free<R: Rng>(rng: &mut R, count: usize, max_rank: usize) -> Vec<Polyomino> {
    let pool: Vec<Polyomino> = (2..=max_rank)
        .flat_map(|r| enumerate_free(r, Class::All).unwrap())
        .collect();
    (0..count).map(|_| pool.choose(rng).unwrap().clone()).collect()
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, degree: usize) -> Monomial {
    let vars: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..nvars)).collect();
    Monomial::from_vars(nvars, &vars)
}

/// Random walk in the fibre of `m`: repeatedly replace a divisible lead by its tail
/// (or a tail by its lead), which stays inside the ideal's congruence class.
pub fn fibre_neighbour<R: Rng>(rng: &mut R, gb: &GroebnerBasis, m: &Monomial, steps: usize) -> Monomial {
    let mut cur = m.clone();
    for _ in 0..steps {
        let moves: Vec<(Monomial, Monomial)> = gb
            .elements()
            .iter()
            .flat_map(|g| [(g.plus.clone(), g.minus.clone()), (g.minus.clone(), g.plus.clone())])
            .filter(|(from, _)| from.divides(&cur))
            .collect();
        if let Some((from, to)) = moves.choose(rng) {
            cur = cur.div(from).mul(to);
        }
    }
    cur
}

/// A member of `gb`'s ideal of degree at most 3: a fibre walk from a random
/// monomial, or a basis element times a monomial when the walk stays put.
pub fn random_member<R: Rng>(rng: &mut R, nvars: usize, gb: &GroebnerBasis) -> Option<Binomial> {
    let order = TermOrder::degrevlex(nvars);
    for _ in 0..20 {
        let d = rng.gen_range(2..=3);
        let a = random_monomial(rng, nvars, d);
        let steps = rng.gen_range(1..6);
        let b = fibre_neighbour(rng, gb, &a, steps);
        if let Some(bin) = Binomial::new(a, b, &order) {
            return Some(bin);
        }
    }
    let low: Vec<&Binomial> = gb.elements().iter().filter(|g| g.degree() <= 3).collect();
    let g = low.choose(rng)?;
    let e = rng.gen_range(0..=3 - g.degree() as usize);
    Some(g.mul_monomial(&random_monomial(rng, nvars, e), &order))
}

/// Random binomials of degree at most 3; every other one is a constructed member of `gb`'s ideal.
pub fn random_binomials<R: Rng>(rng: &mut R, p: &Polyomino, gb: &GroebnerBasis, count: usize) -> Vec<Binomial> {
    let n = p.vertices().len();
    let order = TermOrder::degrevlex(n);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if out.len() % 2 == 0 {
            if let Some(m) = random_member(rng, n, gb) {
                out.push(m);
                continue;
            }
        }
        let d = rng.gen_range(1..=3);
        let e = if rng.gen_bool(0.9) { d } else { rng.gen_range(1..=3) };
        let a = random_monomial(rng, n, d);
        let b = random_monomial(rng, n, e);
        if let Some(bin) = Binomial::new(a, b, &order) {
            out.push(bin);
        }
    }
    out
}
