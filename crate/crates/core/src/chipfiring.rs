//! Divisors, chip-firing, Dhar's burning algorithm and gonality.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// An integer number of chips on each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Divisor {
    pub chips: Vec<i64>,
}

impl Divisor {
    pub fn new(chips: Vec<i64>) -> Self {
        Divisor { chips }
    }

    pub fn zero(n: usize) -> Self {
        Divisor { chips: vec![0; n] }
    }

    pub fn degree(&self) -> i64 {
        self.chips.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.chips.iter().all(|&c| c >= 0)
    }

    fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.chips.len() != g.n() {
            return Err(Error::BadDivisor { got: self.chips.len(), n: g.n() });
        }
        Ok(())
    }
}

fn check_vertex(g: &MultiGraph, q: usize) -> Result<()> {
    if q >= g.n() {
        return Err(Error::BadIndex { index: q, n: g.n() });
    }
    Ok(())
}

fn fire_in_place(g: &MultiGraph, chips: &mut [i64], a: VertexSet, times: i64) {
    for v in a {
        for &(u, m) in g.adjacency(v) {
            if !a.contains(u) {
                chips[v] -= times * m as i64;
                chips[u] += times * m as i64;
            }
        }
    }
}

/// Fires every vertex of `a` once: each sends one chip along each edge
/// leaving `a`.
pub fn fire_set(g: &MultiGraph, d: &Divisor, a: VertexSet) -> Result<Divisor> {
    d.check(g)?;
    if a.is_empty() || !a.is_subset(g.vertices()) {
        return Err(Error::BadSet);
    }
    let mut chips = d.chips.clone();
    fire_in_place(g, &mut chips, a, 1);
    Ok(Divisor { chips })
}

fn burn(g: &MultiGraph, chips: &[i64], q: usize) -> VertexSet {
    let mut burnt = VertexSet::singleton(q);
    let mut heat = vec![0i64; g.n()];
    let mut stack = vec![q];
    while let Some(x) = stack.pop() {
        for &(y, m) in g.adjacency(x) {
            if burnt.contains(y) {
                continue;
            }
            heat[y] += m as i64;
            if heat[y] > chips[y] {
                burnt.insert(y);
                stack.push(y);
            }
        }
    }
    g.vertices().difference(burnt)
}

/// Dhar's burning algorithm from `q`; returns the vertices left unburnt.
///
/// A vertex catches fire once more burning edges reach it than it holds
/// chips. An empty result means `d` is `q`-reduced.
pub fn dhar_burn(g: &MultiGraph, d: &Divisor, q: usize) -> Result<VertexSet> {
    d.check(g)?;
    check_vertex(g, q)?;
    if let Some(v) = (0..g.n()).find(|&v| v != q && d.chips[v] < 0) {
        return Err(Error::NegativeOutsideSource(v));
    }
    Ok(burn(g, &d.chips, q))
}

/// The unique `q`-reduced divisor linearly equivalent to `d`.
///
/// Debt outside `q` is cleared layer by layer from the outside in by firing
/// BFS balls around `q`; then the unburnt set of Dhar's algorithm is fired
/// until everything burns.
pub fn q_reduce(g: &MultiGraph, d: &Divisor, q: usize) -> Result<Divisor> {
    d.check(g)?;
    check_vertex(g, q)?;
    let n = g.n();
    let mut chips = d.chips.clone();

    let mut dist = vec![usize::MAX; n];
    dist[q] = 0;
    let mut order = vec![q];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &(y, _) in g.adjacency(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                order.push(y);
            }
        }
    }
    let max_dist = dist.iter().copied().max().unwrap_or(0);
    for t in (0..max_dist).rev() {
        let ball: VertexSet = (0..n).filter(|&v| dist[v] <= t).collect();
        // Each firing of the ball gives every vertex at distance t + 1 at
        // least one chip and leaves farther layers untouched.
        let times = (0..n)
            .filter(|&v| dist[v] == t + 1 && chips[v] < 0)
            .map(|v| {
                let inflow = g.edges_between(VertexSet::singleton(v), ball) as i64;
                (-chips[v] + inflow - 1) / inflow
            })
            .max();
        if let Some(times) = times {
            fire_in_place(g, &mut chips, ball, times);
        }
    }

    loop {
        let unburnt = burn(g, &chips, q);
        if unburnt.is_empty() {
            break;
        }
        fire_in_place(g, &mut chips, unburnt, 1);
    }
    Ok(Divisor { chips })
}

/// Whether `d` has rank at least one: for every vertex `v`, some
/// equivalent effective divisor has a chip on `v`.
pub fn has_positive_rank(g: &MultiGraph, d: &Divisor) -> Result<bool> {
    d.check(g)?;
    if d.degree() < 1 {
        return Ok(false);
    }
    let effective = d.is_effective();
    for v in 0..g.n() {
        // The v-reduced divisor maximizes the chips on v among effective
        // equivalents, so an effective divisor already holding a chip on v
        // needs no reduction.
        if effective && d.chips[v] >= 1 {
            continue;
        }
        if q_reduce(g, d, v)?.chips[v] < 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gonality with a positive-rank witness of that degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gonality {
    pub gonality: u64,
    pub witness: Divisor,
}

/// Multisets of `d` vertices out of `n` in colex order, as chip vectors.
struct Multisets {
    n: usize,
    slots: Vec<usize>,
    done: bool,
}

impl Multisets {
    fn new(n: usize, d: usize) -> Self {
        Multisets { n, slots: vec![0; d], done: n == 0 }
    }
}

impl Iterator for Multisets {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        let mut chips = vec![0i64; self.n];
        for &s in &self.slots {
            chips[s] += 1;
        }
        let d = self.slots.len();
        match (0..d).find(|&i| self.slots[i] < if i + 1 < d { self.slots[i + 1] } else { self.n - 1 }) {
            Some(i) => {
                self.slots[i] += 1;
                for s in &mut self.slots[..i] {
                    *s = 0;
                }
            }
            None => self.done = true,
        }
        Some(chips)
    }
}

/// Least degree `d <= cap` of an effective positive-rank divisor.
///
/// Effective divisors of each degree are tried in colex order, so the
/// witness is the colex-first one of minimum degree.
pub fn gonality_exact(g: &MultiGraph, cap: u64, budget: &Budget) -> Result<Gonality> {
    if cap == 0 {
        return Err(Error::BadParams("gonality cap must be at least 1".into()));
    }
    let mut tested: u64 = 0;
    for d in 1..=cap {
        for chips in Multisets::new(g.n(), d as usize) {
            tested += 1;
            if tested > budget.gonality_divisors {
                return Err(Error::FeasibilityCapExceeded {
                    what: "gonality",
                    detail: format!("more than {} divisors", budget.gonality_divisors),
                });
            }
            if tested.is_multiple_of(4096) {
                budget.check_deadline("gonality")?;
            }
            let div = Divisor { chips };
            if has_positive_rank(g, &div)? {
                return Ok(Gonality { gonality: d, witness: div });
            }
        }
    }
    Err(Error::CapExceeded(cap))
}
