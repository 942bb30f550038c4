//! Exact arithmetic on pure-difference binomial ideals.
//!
//! Every polynomial handled here is `x^u - x^w` with coefficients `+1` and `-1`,
//! a class closed under S-pairs and reduction, so the Buchberger engine only has
//! to move monomials around. Membership does not depend on the global sign, so
//! binomials are stored sign-canonically with the larger monomial first.
//!
//! The engine works in "positional" coordinates where the term order is plain
//! degrevlex with variable `0` most expensive and the last variable cheapest;
//! [`TermOrder`] carries the permutation that maps original variables into
//! positions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Ordinal into a fixed variable universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableIndex(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("input binomial {0} is not homogeneous in the standard grading")]
    NotHomogeneous(usize),
    #[error("groebner basis budget exceeded ({basis} elements, {pairs} pairs processed)")]
    BudgetExceeded { basis: usize, pairs: usize },
    #[error("variable universe mismatch: expected {expected}, found {found}")]
    UniverseMismatch { expected: usize, found: usize },
}

/// A monomial over a universe of `len()` variables, stored densely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
    mask: u64,
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), degree: 0, mask: 0 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        let mask = support_mask(&exps);
        Monomial { exps: exps.into_boxed_slice(), degree, mask }
    }

    /// Product of the listed variables (repetitions allowed).
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0u16; nvars];
        for &v in vars {
            exps[v] += 1;
        }
        Self::from_exponents(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps: exps.into_boxed_slice(), degree: self.degree + other.degree, mask: self.mask | other.mask }
    }

    /// `self / other`; requires `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Self::from_exponents(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_exponents(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self::from_exponents(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    /// `self / v^e` where `e` is the largest power with `v^e | self` and `e <= cap`.
    fn strip_var(&self, v: usize, e: u16) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[v] -= e;
        Self::from_exponents(exps)
    }

    fn permuted(&self, ranking: &[usize]) -> Monomial {
        Self::from_exponents(ranking.iter().map(|&v| self.exps[v]).collect())
    }

    fn unpermuted(&self, ranking: &[usize]) -> Monomial {
        let mut exps = vec![0u16; self.exps.len()];
        for (pos, &v) in ranking.iter().enumerate() {
            exps[v] = self.exps[pos];
        }
        Self::from_exponents(exps)
    }

    /// Renders with a caller supplied name per variable, `1` for the empty product.
    pub fn display_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        let parts: Vec<String> = self
            .support()
            .flat_map(|(i, e)| {
                let n = name(i);
                std::iter::repeat_n(n, e as usize)
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|i| format!("x{i}")))
    }
}

/// Degree reverse lexicographic comparison in positional coordinates.
fn drl_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    for (ea, eb) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        if ea != eb {
            // smaller exponent in the cheapest differing variable wins
            return eb.cmp(ea);
        }
    }
    Ordering::Equal
}

/// Degrevlex with a configurable variable ranking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    /// `ranking[pos]` is the variable at position `pos`; the last one is cheapest.
    ranking: Vec<usize>,
    identity: bool,
}

impl TermOrder {
    /// `x_0 > x_1 > ... > x_{n-1}`.
    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder { ranking: (0..nvars).collect(), identity: true }
    }

    /// Default ranking with variable `cheapest` moved to the last position.
    pub fn degrevlex_cheapest(nvars: usize, cheapest: usize) -> Self {
        let mut ranking: Vec<usize> = (0..nvars).filter(|&v| v != cheapest).collect();
        ranking.push(cheapest);
        let identity = cheapest + 1 == nvars;
        TermOrder { ranking, identity }
    }

    pub fn from_ranking(ranking: Vec<usize>) -> Self {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            assert!(v < ranking.len() && !seen[v], "ranking must be a permutation");
            seen[v] = true;
        }
        let identity = ranking.iter().enumerate().all(|(i, &v)| i == v);
        TermOrder { ranking, identity }
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn cheapest(&self) -> Option<usize> {
        self.ranking.last().copied()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.identity {
            return drl_cmp(a, b);
        }
        match a.degree.cmp(&b.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for &v in self.ranking.iter().rev() {
            let (ea, eb) = (a.exps[v], b.exps[v]);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    fn to_pos(&self, m: &Monomial) -> Monomial {
        if self.identity {
            m.clone()
        } else {
            m.permuted(&self.ranking)
        }
    }

    fn to_user(&self, m: &Monomial) -> Monomial {
        if self.identity {
            m.clone()
        } else {
            m.unpermuted(&self.ranking)
        }
    }
}

/// `plus - minus`, with `plus` the larger monomial under the order it was built with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    /// `a - b` up to sign; `None` when `a == b` (the zero binomial).
    pub fn new(a: Monomial, b: Monomial, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            Ordering::Less => Some(Binomial { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    /// `x^{u+} - x^{u-}` for an integer vector `u`.
    pub fn from_exponent_vector(u: &[i64], order: &TermOrder) -> Option<Self> {
        let pos = u.iter().map(|&e| e.max(0) as u16).collect();
        let neg = u.iter().map(|&e| (-e).max(0) as u16).collect();
        Self::new(Monomial::from_exponents(pos), Monomial::from_exponents(neg), order)
    }

    /// `exponent(plus) - exponent(minus)`.
    pub fn exponent_vector(&self) -> Vec<i64> {
        self.plus
            .exps
            .iter()
            .zip(self.minus.exps.iter())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree == self.minus.degree
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree.max(self.minus.degree)
    }

    pub fn canonicalized(&self, order: &TermOrder) -> Binomial {
        Binomial::new(self.plus.clone(), self.minus.clone(), order).expect("nonzero binomial")
    }

    pub fn mul_monomial(&self, m: &Monomial, order: &TermOrder) -> Binomial {
        Binomial::new(self.plus.mul(m), self.minus.mul(m), order).expect("monomials are nonzerodivisors")
    }

    /// Same binomial up to global sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        (self.plus == other.plus && self.minus == other.minus)
            || (self.plus == other.minus && self.minus == other.plus)
    }

    pub fn display_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        format!("{} - {}", self.plus.display_with(&name), self.minus.display_with(&name))
    }
}

/// Caps on a single Groebner basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_basis: usize::MAX, max_pairs: usize::MAX };
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_basis: 20_000, max_pairs: 5_000_000 }
    }
}

#[derive(Debug, Clone)]
struct Rule {
    lead: Monomial,
    tail: Monomial,
    active: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        drl_cmp(&self.lcm, &other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Incremental Buchberger engine over positional degrevlex, with the
/// Gebauer-Moeller pair criteria and optional degree truncation.
#[derive(Debug, Clone)]
struct Engine {
    rules: Vec<Rule>,
    pairs: BTreeSet<Pair>,
    budget: Budget,
    pairs_done: usize,
}

impl Engine {
    fn new(budget: Budget) -> Self {
        Engine { rules: Vec::new(), pairs: BTreeSet::new(), budget, pairs_done: 0 }
    }

    fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        let mut m = m.clone();
        'outer: loop {
            for r in self.rules.iter().filter(|r| r.active) {
                if r.lead.divides(&m) {
                    m = m.div(&r.lead).mul(&r.tail);
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Fully reduced `(larger, smaller)` pair, `None` if the difference reduces to zero.
    fn reduce(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, Monomial)> {
        let (ra, rb) = (self.reduce_monomial(a), self.reduce_monomial(b));
        match drl_cmp(&ra, &rb) {
            Ordering::Greater => Some((ra, rb)),
            Ordering::Less => Some((rb, ra)),
            Ordering::Equal => None,
        }
    }

    /// Reduces `a - b` and inserts the remainder; true if the basis grew.
    fn add(&mut self, a: &Monomial, b: &Monomial) -> Result<bool, AlgebraError> {
        let Some((lead, tail)) = self.reduce(a, b) else {
            return Ok(false);
        };
        debug_assert!(drl_cmp(&lead, &tail) == Ordering::Greater);
        self.rules.push(Rule { lead, tail, active: true });
        if self.rules.len() > self.budget.max_basis {
            return Err(AlgebraError::BudgetExceeded { basis: self.rules.len(), pairs: self.pairs_done });
        }
        self.update(self.rules.len() - 1);
        Ok(true)
    }

    fn update(&mut self, h: usize) {
        let th = self.rules[h].lead.clone();
        struct Cand {
            g: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let cands: Vec<Cand> = (0..h)
            .filter(|&g| self.rules[g].active)
            .map(|g| {
                let lg = &self.rules[g].lead;
                Cand { g, lcm: lg.lcm(&th), coprime: lg.is_coprime(&th) }
            })
            .collect();

        let mut keep = vec![true; cands.len()];
        for (k, c) in cands.iter().enumerate() {
            let dominated = cands
                .iter()
                .any(|o| o.lcm.degree < c.lcm.degree && o.lcm.divides(&c.lcm));
            if dominated {
                keep[k] = false;
            }
        }
        for k in 0..cands.len() {
            if !keep[k] {
                continue;
            }
            let group: Vec<usize> = (0..cands.len())
                .filter(|&o| keep[o] && cands[o].lcm == cands[k].lcm)
                .collect();
            let any_coprime = group.iter().any(|&o| cands[o].coprime);
            for &o in &group {
                keep[o] = false;
            }
            if !any_coprime {
                keep[k] = true;
            }
        }

        let rules = &self.rules;
        self.pairs.retain(|p| {
            if !th.divides(&p.lcm) {
                return true;
            }
            let lih = rules[p.i].lead.lcm(&th);
            let ljh = rules[p.j].lead.lcm(&th);
            lih == p.lcm || ljh == p.lcm
        });

        for (k, c) in cands.into_iter().enumerate() {
            if keep[k] {
                self.pairs.insert(Pair { lcm: c.lcm, i: c.g, j: h });
            }
        }
        for g in 0..h {
            if self.rules[g].active && th.divides(&self.rules[g].lead) {
                self.rules[g].active = false;
            }
        }
    }

    /// Processes every pending pair whose lcm degree is at most `max_degree`.
    fn complete(&mut self, max_degree: Option<u32>) -> Result<(), AlgebraError> {
        loop {
            let Some(first) = self.pairs.first() else {
                return Ok(());
            };
            if max_degree.is_some_and(|d| first.lcm.degree > d) {
                return Ok(());
            }
            let p = self.pairs.pop_first().expect("nonempty");
            self.pairs_done += 1;
            if self.pairs_done > self.budget.max_pairs {
                return Err(AlgebraError::BudgetExceeded { basis: self.rules.len(), pairs: self.pairs_done });
            }
            let (ri, rj) = (&self.rules[p.i], &self.rules[p.j]);
            let si = p.lcm.div(&ri.lead).mul(&ri.tail);
            let sj = p.lcm.div(&rj.lead).mul(&rj.tail);
            self.add(&si, &sj)?;
        }
    }

    /// The reduced basis as `(lead, tail)` pairs sorted by lead.
    fn reduced(&self) -> Vec<(Monomial, Monomial)> {
        let active: Vec<&Rule> = self.rules.iter().filter(|r| r.active).collect();
        for r in &active {
            debug_assert!(!active.iter().any(|o| !std::ptr::eq(*o, *r) && o.lead.divides(&r.lead)));
        }
        let mut out: Vec<(Monomial, Monomial)> = active
            .iter()
            .map(|r| {
                let tail = self.reduce_monomial(&r.tail);
                assert!(tail != r.lead, "pure-difference closure violated: element reduced to zero");
                (r.lead.clone(), tail)
            })
            .collect();
        out.sort_by(|a, b| drl_cmp(&a.0, &b.0));
        out
    }
}

/// A reduced Groebner basis of a pure-difference binomial ideal.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Binomial>,
    /// Rewriting rules in positional coordinates of `order`.
    rules: Vec<(Monomial, Monomial)>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn reduce_pos(&self, m: &Monomial) -> Monomial {
        let mut m = m.clone();
        'outer: loop {
            for (lead, tail) in &self.rules {
                if lead.divides(&m) {
                    m = m.div(lead).mul(tail);
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Normal form of a single monomial (original variable coordinates).
    pub fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        self.order.to_user(&self.reduce_pos(&self.order.to_pos(m)))
    }

    /// Fully reduced remainder of `f`; `None` means `f` lies in the ideal.
    pub fn normal_form(&self, f: &Binomial) -> Option<Binomial> {
        let a = self.reduce_monomial(&f.plus);
        let b = self.reduce_monomial(&f.minus);
        Binomial::new(a, b, &self.order)
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        self.normal_form(f).is_none()
    }

    /// Histogram `degree -> count` of the basis elements.
    pub fn degree_histogram(&self) -> Vec<(u32, usize)> {
        let mut hist = std::collections::BTreeMap::new();
        for e in &self.elements {
            *hist.entry(e.degree()).or_insert(0usize) += 1;
        }
        hist.into_iter().collect()
    }
}

fn check_universe(gens: &[Binomial], nvars: usize) -> Result<(), AlgebraError> {
    match gens.iter().find(|g| g.nvars() != nvars) {
        Some(g) => Err(AlgebraError::UniverseMismatch { expected: nvars, found: g.nvars() }),
        None => Ok(()),
    }
}

fn check_homogeneous(gens: &[Binomial]) -> Result<(), AlgebraError> {
    match gens.iter().position(|g| !g.is_homogeneous()) {
        Some(i) => Err(AlgebraError::NotHomogeneous(i)),
        None => Ok(()),
    }
}

/// Reduced Groebner basis of `<gens>` under `order`.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> GroebnerBasis {
    buchberger_with_budget(gens, order, Budget::UNLIMITED).expect("unlimited budget")
}

pub fn buchberger_with_budget(
    gens: &[Binomial],
    order: &TermOrder,
    budget: Budget,
) -> Result<GroebnerBasis, AlgebraError> {
    let nvars = order.nvars();
    check_universe(gens, nvars)?;
    let mut sorted: Vec<(Monomial, Monomial)> = gens
        .iter()
        .map(|g| {
            let (a, b) = (order.to_pos(&g.plus), order.to_pos(&g.minus));
            if drl_cmp(&a, &b) == Ordering::Less {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    // Input order must not influence the result; process smallest leads first.
    sorted.sort_by(|x, y| drl_cmp(&x.0, &y.0).then_with(|| drl_cmp(&x.1, &y.1)));
    let mut engine = Engine::new(budget);
    for (a, b) in &sorted {
        engine.add(a, b)?;
        engine.complete(Some(a.degree))?;
    }
    engine.complete(None)?;
    Ok(finish(&engine, order))
}

fn finish(engine: &Engine, order: &TermOrder) -> GroebnerBasis {
    let rules = engine.reduced();
    let elements = rules
        .iter()
        .map(|(l, t)| Binomial { plus: order.to_user(l), minus: order.to_user(t) })
        .collect();
    GroebnerBasis { order: order.clone(), elements, rules }
}

/// Normal form of `f` modulo `g`; `None` iff `f` lies in the ideal.
pub fn normal_form(f: &Binomial, g: &GroebnerBasis) -> Option<Binomial> {
    g.normal_form(f)
}

/// True iff the two generator lists generate the same ideal.
pub fn ideal_equal(a: &[Binomial], b: &[Binomial], order: &TermOrder) -> bool {
    buchberger(a, order) == buchberger(b, order)
}

/// Generators of `<gens> : x_i^inf`.
///
/// Computes a basis under degrevlex with `x_i` cheapest and strips the largest
/// power of `x_i` dividing each element; for homogeneous ideals the result is
/// a basis of the saturation.
pub fn saturate_variable(gens: &[Binomial], i: VariableIndex) -> Result<Vec<Binomial>, AlgebraError> {
    saturate_variable_with_budget(gens, i, Budget::UNLIMITED)
}

pub fn saturate_variable_with_budget(
    gens: &[Binomial],
    i: VariableIndex,
    budget: Budget,
) -> Result<Vec<Binomial>, AlgebraError> {
    check_homogeneous(gens)?;
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let nvars = first.nvars();
    let order = TermOrder::degrevlex_cheapest(nvars, i.0);
    let gb = buchberger_with_budget(gens, &order, budget)?;
    Ok(strip_variable(&gb, i.0))
}

fn strip_variable(gb: &GroebnerBasis, v: usize) -> Vec<Binomial> {
    let default = TermOrder::degrevlex(gb.order.nvars());
    gb.elements
        .iter()
        .map(|g| {
            let k = g.plus.exponent(v).min(g.minus.exponent(v));
            Binomial::new(g.plus.strip_var(v, k), g.minus.strip_var(v, k), &default)
                .expect("saturation keeps binomials nonzero")
        })
        .collect()
}

/// Generators of `<gens> : (x_0 ... x_{n-1})^inf`, by saturating one variable at a time.
pub fn saturate_all(gens: &[Binomial]) -> Result<Vec<Binomial>, AlgebraError> {
    saturate_all_with_budget(gens, Budget::UNLIMITED)
}

pub fn saturate_all_with_budget(gens: &[Binomial], budget: Budget) -> Result<Vec<Binomial>, AlgebraError> {
    check_homogeneous(gens)?;
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let nvars = first.nvars();
    let mut current = gens.to_vec();
    for v in 0..nvars {
        // a variable absent from every element cannot be a zerodivisor issue
        if current.iter().all(|g| g.plus.exponent(v) == 0 && g.minus.exponent(v) == 0) {
            continue;
        }
        current = saturate_variable_with_budget(&current, VariableIndex(v), budget)?;
    }
    Ok(current)
}

/// A minimal homogeneous generating subset of `<gens>`.
///
/// Elements are scanned by ascending degree; one is kept iff it is not in the
/// ideal generated by the ones kept so far, decided with a degree-truncated basis.
pub fn minimalize(gens: &[Binomial]) -> Result<Vec<Binomial>, AlgebraError> {
    check_homogeneous(gens)?;
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let nvars = first.nvars();
    check_universe(gens, nvars)?;
    let order = TermOrder::degrevlex(nvars);
    let mut sorted: Vec<Binomial> = gens.iter().map(|g| g.canonicalized(&order)).collect();
    sorted.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| drl_cmp(&x.plus, &y.plus))
            .then_with(|| drl_cmp(&x.minus, &y.minus))
    });
    let mut engine = Engine::new(Budget::UNLIMITED);
    let mut kept = Vec::new();
    for g in sorted {
        engine.complete(Some(g.degree()))?;
        if engine.add(&g.plus, &g.minus)? {
            kept.push(g);
        }
    }
    Ok(kept)
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    fn bin(a: &[u16], b: &[u16]) -> Binomial {
        Binomial::new(mono(a), mono(b), &TermOrder::degrevlex(a.len())).unwrap()
    }

    /// x1..x4 as indices 0..3.
    fn twisted_cubic_partial() -> Vec<Binomial> {
        vec![bin(&[1, 0, 1, 0], &[0, 2, 0, 0]), bin(&[0, 1, 0, 1], &[0, 0, 2, 0])]
    }

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::degrevlex(3);
        // x0 > x1 > x2
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
        // x1^2 > x0 x2 in degrevlex
        assert_eq!(o.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
        let c = TermOrder::degrevlex_cheapest(3, 0);
        assert_eq!(c.cmp(&mono(&[1, 0, 0]), &mono(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn empty_and_single() {
        let o = TermOrder::degrevlex(4);
        assert!(buchberger(&[], &o).is_empty());
        let f = bin(&[1, 0, 0, 1], &[0, 1, 1, 0]);
        let g = buchberger(std::slice::from_ref(&f), &o);
        assert_eq!(g.elements(), std::slice::from_ref(&f));
        assert!(g.contains(&f));
    }

    #[test]
    fn zero_binomial_is_none() {
        assert!(Binomial::new(mono(&[1, 1]), mono(&[1, 1]), &TermOrder::degrevlex(2)).is_none());
    }

    #[test]
    fn saturation_recovers_twisted_cubic() {
        let sat = saturate_all(&twisted_cubic_partial()).unwrap();
        let target = bin(&[1, 0, 0, 1], &[0, 1, 1, 0]);
        let gb = buchberger(&sat, &TermOrder::degrevlex(4));
        assert!(gb.contains(&target));
        // and the ideal is exactly the 3-generated toric ideal of A=[[1,1,1,1],[0,1,2,3]]
        let toric = vec![bin(&[1, 0, 1, 0], &[0, 2, 0, 0]), bin(&[0, 1, 0, 1], &[0, 0, 2, 0]), target];
        assert!(ideal_equal(&sat, &toric, &TermOrder::degrevlex(4)));
        assert_eq!(minimalize(gb.elements()).unwrap().len(), 3);
    }

    #[test]
    fn saturation_when_nothing_to_do() {
        let f = vec![bin(&[1, 1, 0, 0], &[0, 0, 1, 1])];
        let sat = saturate_variable(&f, VariableIndex(0)).unwrap();
        assert!(ideal_equal(&sat, &f, &TermOrder::degrevlex(4)));
    }

    #[test]
    fn saturation_rejects_inhomogeneous() {
        let f = vec![bin(&[2, 0], &[0, 1])];
        assert_eq!(saturate_all(&f), Err(AlgebraError::NotHomogeneous(0)));
        assert_eq!(minimalize(&f), Err(AlgebraError::NotHomogeneous(0)));
    }

    #[test]
    fn minimalize_drops_duplicates() {
        let f = bin(&[1, 0, 0, 1], &[0, 1, 1, 0]);
        assert_eq!(minimalize(&[f.clone(), f.clone()]).unwrap(), vec![f.clone()]);
        assert_eq!(minimalize(std::slice::from_ref(&f)).unwrap(), vec![f]);
    }

    fn random_binomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32, homogeneous: bool) -> Option<Binomial> {
        let mut draw = |deg: u32| {
            let mut e = vec![0u16; nvars];
            for _ in 0..deg {
                e[rng.gen_range(0..nvars)] += 1;
            }
            Monomial::from_exponents(e)
        };
        let d1 = 1 + (max_deg - 1).min(2);
        let a = draw(d1);
        let b = if homogeneous { draw(d1) } else { draw(d1 - 1) };
        Binomial::new(a, b, &TermOrder::degrevlex(nvars))
    }

    #[test]
    fn engine_matches_naive_buchberger() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let nvars = rng.gen_range(2..=5);
            let k = rng.gen_range(1..=4);
            let gens: Vec<Binomial> = (0..k)
                .filter_map(|_| {
                    let homogeneous = rng.gen_bool(0.7);
                    random_binomial(&mut rng, nvars, 3, homogeneous)
                })
                .collect();
            let order = TermOrder::degrevlex(nvars);
            let fast = buchberger(&gens, &order);
            let slow = naive::groebner(&gens, nvars);
            let slow: Vec<Binomial> = slow.into_iter().map(|(l, t)| Binomial { plus: l, minus: t }).collect();
            assert_eq!(fast.elements(), slow.as_slice(), "gens {gens:?}");
        }
    }

    #[test]
    fn basis_is_input_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let gens: Vec<Binomial> = (0..6).filter_map(|_| random_binomial(&mut rng, 6, 3, true)).collect();
        let order = TermOrder::degrevlex(6);
        let reference = buchberger(&gens, &order);
        for _ in 0..20 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            assert_eq!(buchberger(&shuffled, &order), reference);
        }
    }

    #[test]
    fn permuted_order_roundtrip() {
        let gens = twisted_cubic_partial();
        let order = TermOrder::from_ranking(vec![2, 0, 3, 1]);
        let gb = buchberger(&gens, &order);
        for g in &gens {
            assert!(gb.contains(g));
        }
        for e in gb.elements() {
            assert_eq!(order.cmp(&e.plus, &e.minus), Ordering::Greater);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let gens = twisted_cubic_partial();
        let tiny = Budget { max_basis: 1, max_pairs: 1 };
        assert!(matches!(
            buchberger_with_budget(&gens, &TermOrder::degrevlex(4), tiny),
            Err(AlgebraError::BudgetExceeded { .. })
        ));
    }
}
