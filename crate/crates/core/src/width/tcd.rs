use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// A tree whose nodes carry a near-partition of the graph's vertices.
///
/// Nodes are `0..bags.len()`; bags may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TcdJson", into = "TcdJson")]
pub struct TreeCutDecomposition {
    pub links: Vec<[usize; 2]>,
    pub bags: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct TcdJson {
    links: Vec<[usize; 2]>,
    bags: BTreeMap<String, Vec<usize>>,
}

impl From<TreeCutDecomposition> for TcdJson {
    fn from(t: TreeCutDecomposition) -> Self {
        TcdJson {
            links: t.links,
            bags: t.bags.iter().enumerate().map(|(i, b)| (i.to_string(), b.to_vec())).collect(),
        }
    }
}

impl TryFrom<TcdJson> for TreeCutDecomposition {
    type Error = String;

    fn try_from(j: TcdJson) -> std::result::Result<Self, String> {
        let mut bags = BTreeMap::new();
        for (k, vs) in j.bags {
            let node: usize = k.parse().map_err(|_| format!("bad node id {k:?}"))?;
            if vs.iter().any(|&v| v >= 64) {
                return Err(format!("vertex id out of range in bag {node}"));
            }
            bags.insert(node, vs.into_iter().collect::<VertexSet>());
        }
        let nodes = j
            .links
            .iter()
            .flatten()
            .copied()
            .chain(bags.keys().copied())
            .max()
            .map_or(0, |m| m + 1);
        if nodes > 4096 {
            return Err(format!("{nodes} tree nodes is too many"));
        }
        let bags = (0..nodes).map(|i| bags.get(&i).copied().unwrap_or_default()).collect();
        Ok(TreeCutDecomposition { links: j.links, bags })
    }
}

/// Link width, node width and overall width of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TcdWidth {
    pub lw: u64,
    pub bw: u64,
    pub width: u64,
}

pub(crate) fn tree_adjacency(nodes: usize, links: &[[usize; 2]]) -> std::result::Result<Vec<Vec<usize>>, String> {
    if nodes == 0 {
        return Err("tree has no nodes".into());
    }
    if links.len() + 1 != nodes {
        return Err(format!("{} links for {nodes} nodes", links.len()));
    }
    let mut adj = vec![Vec::new(); nodes];
    for &[a, b] in links {
        if a >= nodes || b >= nodes || a == b {
            return Err(format!("bad link ({a}, {b})"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err("tree is disconnected".into());
    }
    Ok(adj)
}

/// Nodes reachable from `start` without using `blocked`.
pub(crate) fn tree_side(adj: &[Vec<usize>], start: usize, blocked: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    seen[blocked] = true;
    let mut i = 0;
    while i < out.len() {
        for &y in &adj[out[i]] {
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

impl TreeCutDecomposition {
    /// The single-node decomposition.
    pub fn trivial(g: &MultiGraph) -> Self {
        TreeCutDecomposition { links: Vec::new(), bags: vec![g.vertices()] }
    }

    fn validate(&self, g: &MultiGraph) -> Result<Vec<Vec<usize>>> {
        let adj = tree_adjacency(self.bags.len(), &self.links).map_err(Error::InvalidDecomposition)?;
        let mut seen = VertexSet::EMPTY;
        for (i, &b) in self.bags.iter().enumerate() {
            if b.intersects(seen) {
                return Err(Error::InvalidDecomposition(format!("bag {i} repeats a vertex")));
            }
            seen = seen.union(b);
        }
        if seen != g.vertices() {
            return Err(Error::InvalidDecomposition("bags do not partition the vertices".into()));
        }
        Ok(adj)
    }

    fn union_of(&self, nodes: &[usize]) -> VertexSet {
        nodes.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(self.bags[i]))
    }
}

/// `lw`: the most graph edges crossing one link; `bw`: the most over nodes
/// of bag size plus edges tunneling through the node (leaves tunnel none).
pub fn tcd_width(t: &TreeCutDecomposition, g: &MultiGraph) -> Result<TcdWidth> {
    let adj = t.validate(g)?;
    let mut lw = 0;
    for &[a, b] in &t.links {
        lw = lw.max(g.boundary(t.union_of(&tree_side(&adj, a, b))));
    }
    let mut bw = 0;
    for (node, nbrs) in adj.iter().enumerate() {
        let mut load = t.bags[node].len() as u64;
        if nbrs.len() >= 2 {
            let parts: Vec<VertexSet> = nbrs.iter().map(|&y| t.union_of(&tree_side(&adj, y, node))).collect();
            let crossing: u64 = parts.iter().map(|&p| g.boundary(p) - g.edges_between(p, t.bags[node])).sum();
            load += crossing / 2;
        }
        bw = bw.max(load);
    }
    Ok(TcdWidth { lw, bw, width: lw.max(bw) })
}

/// Exact screewidth with an optimal decomposition.
pub fn screewidth_exact(g: &MultiGraph, budget: &Budget) -> Result<(u64, TreeCutDecomposition)> {
    let n = g.n();
    budget.check_vertices("screewidth", n, budget.screewidth_vertices)?;
    let lower = if n >= 2 {
        let tw = super::treewidth_exact(g, budget)?.max(0) as u64;
        tw.max((n as u64).min(crate::graph::params::edge_connectivity(g)))
    } else {
        1
    };
    for w in lower..=n as u64 {
        if let Some(t) = Screewidth::new(g, w).solve(budget)? {
            debug_assert_eq!(tcd_width(&t, g).map(|x| x.width <= w), Ok(true));
            return Ok((w, t));
        }
    }
    Ok((n as u64, TreeCutDecomposition::trivial(g)))
}

/// Decides whether a decomposition of width at most `w` exists.
///
/// Works over rooted subtrees: for a vertex set `D` (the union of the bags
/// below some node), `good[D]` says the subtree can be realised with every
/// node and link inside it within `w`, given that everything outside `D`
/// lies beyond the parent link. A node with bag `X` and child sets `C_i`
/// costs `|X|` if it is a leaf and otherwise `|X|` plus the tunneling edges
/// `(Σ (δ(C_i) − e(C_i, X)) + e(D − X, V − D)) / 2`. The child sets minimising
/// the sum are found by a subset partition DP, so trees of any shape are
/// covered.
struct Screewidth<'a> {
    g: &'a MultiGraph,
    w: u64,
    full: u64,
    boundary: Vec<u64>,
    good: Vec<bool>,
    /// For each good set, its bag and child sets.
    choice: Vec<Option<(u64, Vec<u64>)>>,
}

impl<'a> Screewidth<'a> {
    fn new(g: &'a MultiGraph, w: u64) -> Self {
        let n = g.n();
        let full = (1u64 << n) - 1;
        let boundary = (0..=full).map(|m| g.boundary(VertexSet::from_bits(m))).collect();
        Screewidth { g, w, full, boundary, good: vec![false; 1 << n], choice: vec![None; 1 << n] }
    }

    fn e(&self, a: u64, b: u64) -> u64 {
        self.g.edges_between(VertexSet::from_bits(a), VertexSet::from_bits(b))
    }

    /// Best split of `r` into good child sets with `δ(C) ≤ w`, minimising
    /// `Σ δ(C) − e(C, x)`; returns the sum and the parts, if any split exists.
    fn split(&self, r: u64, x: u64, cap: u64) -> Option<(u64, Vec<u64>)> {
        // Subsets of r are indexed by compressing them onto r's bits.
        let verts: Vec<usize> = VertexSet::from_bits(r).to_vec();
        let k = verts.len();
        let xs = VertexSet::from_bits(x);
        let to_x: Vec<u64> = verts.iter().map(|&v| self.g.edges_between(VertexSet::singleton(v), xs)).collect();
        let mut mask = vec![0u64; 1 << k];
        let mut ex = vec![0u64; 1 << k];
        for c in 1usize..(1 << k) {
            let i = c.trailing_zeros() as usize;
            mask[c] = mask[c & (c - 1)] | 1u64 << verts[i];
            ex[c] = ex[c & (c - 1)] + to_x[i];
        }
        let mut best = vec![u64::MAX; 1 << k];
        let mut pick = vec![0usize; 1 << k];
        best[0] = 0;
        for s in 1usize..(1 << k) {
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            // The child set holding the lowest vertex of s.
            let mut sub = rest;
            loop {
                let c = sub | low;
                let prev = best[s ^ c];
                let cm = mask[c] as usize;
                if prev != u64::MAX && self.good[cm] {
                    let cost = prev + self.boundary[cm] - ex[c];
                    if cost < best[s] {
                        best[s] = cost;
                        pick[s] = c;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        let all = (1usize << k) - 1;
        if best[all] > cap {
            return None;
        }
        let mut parts = Vec::new();
        let mut s = all;
        while s != 0 {
            parts.push(mask[pick[s]]);
            s ^= pick[s];
        }
        parts.sort_unstable();
        Some((best[all], parts))
    }

    /// Cheapest feasible bag and children for subtree set `d`.
    fn realise(&self, d: u64) -> Option<(u64, Vec<u64>)> {
        let out = self.full & !d;
        for x in crate::vset::subsets(d) {
            let xs = x.count_ones() as u64;
            if xs > self.w {
                continue;
            }
            let r = d & !x;
            if r == 0 {
                return Some((x, Vec::new()));
            }
            let slack = 2 * (self.w - xs);
            let e_out = self.e(r, out);
            if e_out > slack {
                continue;
            }
            if let Some((_, parts)) = self.split(r, x, slack - e_out) {
                return Some((x, parts));
            }
        }
        None
    }

    fn solve(mut self, budget: &Budget) -> Result<Option<TreeCutDecomposition>> {
        for d in 1..self.full {
            if d & 0xff == 0 {
                budget.check_deadline("screewidth")?;
            }
            if self.boundary[d as usize] > self.w {
                continue;
            }
            if let Some(c) = self.realise(d) {
                self.good[d as usize] = true;
                self.choice[d as usize] = Some(c);
            }
        }
        let Some(root) = self.realise(self.full) else { return Ok(None) };
        let mut t = TreeCutDecomposition { links: Vec::new(), bags: Vec::new() };
        let mut stack = vec![(root, None::<usize>)];
        while let Some(((x, parts), parent)) = stack.pop() {
            let id = t.bags.len();
            t.bags.push(VertexSet::from_bits(x));
            if let Some(p) = parent {
                t.links.push([p, id]);
            }
            for c in parts.into_iter().rev() {
                stack.push((self.choice[c as usize].clone().expect("good sets have choices"), Some(id)));
            }
        }
        Ok(Some(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn trivial_decomposition_width_is_n() {
        let g = generate_family(&Family::Petersen).unwrap();
        let t = TreeCutDecomposition::trivial(&g);
        assert_eq!(tcd_width(&t, &g).unwrap(), TcdWidth { lw: 0, bw: 10, width: 10 });
    }

    #[test]
    fn star_decomposition_of_c4() {
        let g = generate_family(&Family::Cycle(4)).unwrap();
        let t = TreeCutDecomposition {
            links: vec![[0, 1], [0, 2], [0, 3], [0, 4]],
            bags: std::iter::once(VertexSet::EMPTY).chain((0..4).map(VertexSet::singleton)).collect(),
        };
        // Every link carries two edges; all four edges tunnel through the center.
        assert_eq!(tcd_width(&t, &g).unwrap(), TcdWidth { lw: 2, bw: 4, width: 4 });
    }

    #[test]
    fn path_decomposition_of_cycle() {
        let g = generate_family(&Family::Cycle(6)).unwrap();
        let t = TreeCutDecomposition {
            links: (0..5).map(|i| [i, i + 1]).collect(),
            bags: (0..6).map(VertexSet::singleton).collect(),
        };
        assert_eq!(tcd_width(&t, &g).unwrap().width, 2);
    }

    #[test]
    fn invalid_decompositions() {
        let g = generate_family(&Family::Cycle(3)).unwrap();
        let bad_tree = TreeCutDecomposition { links: vec![[0, 1], [1, 0]], bags: vec![g.vertices(), VertexSet::EMPTY, VertexSet::EMPTY] };
        assert!(matches!(tcd_width(&bad_tree, &g), Err(Error::InvalidDecomposition(_))));
        let missing = TreeCutDecomposition { links: vec![[0, 1]], bags: vec![VertexSet::singleton(0), VertexSet::singleton(1)] };
        assert!(matches!(tcd_width(&missing, &g), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn json_round_trip() {
        let t = TreeCutDecomposition {
            links: vec![[0, 1], [1, 2]],
            bags: vec![VertexSet::from_iter([0, 2]), VertexSet::EMPTY, VertexSet::singleton(1)],
        };
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"links":[[0,1],[1,2]],"bags":{"0":[0,2],"1":[],"2":[1]}}"#);
        assert_eq!(serde_json::from_str::<TreeCutDecomposition>(&s).unwrap(), t);
        let sparse: TreeCutDecomposition = serde_json::from_str(r#"{"links":[[0,1]],"bags":{"1":[0]}}"#).unwrap();
        assert_eq!(sparse.bags, vec![VertexSet::EMPTY, VertexSet::singleton(0)]);
    }

    fn scw(f: Family) -> u64 {
        let g = generate_family(&f).unwrap();
        let (w, t) = screewidth_exact(&g, &b()).unwrap();
        assert_eq!(tcd_width(&t, &g).unwrap().width, w, "{f}");
        w
    }

    #[test]
    fn screewidth_of_families() {
        assert_eq!(scw(Family::Path(1)), 1);
        assert_eq!(scw(Family::Path(5)), 1);
        assert_eq!(scw(Family::Star(4)), 1);
        assert_eq!(scw(Family::Cycle(3)), 2);
        assert_eq!(scw(Family::Cycle(7)), 2);
        assert_eq!(scw(Family::Grid(3, 3)), 3);
        assert_eq!(scw(Family::Complete(4)), 3);
        assert_eq!(scw(Family::Banana(3)), 2);
        assert_eq!(scw(Family::CompleteMultipartite(vec![2, 3])), 2);
    }

    /// Tries every tree on up to `n + 1` nodes (Prüfer codes) with every bag
    /// assignment.
    fn brute_scw(g: &MultiGraph) -> u64 {
        let n = g.n();
        let mut best = n as u64;
        for nodes in 2..=n + 1 {
            let codes = nodes.saturating_sub(2);
            for code_id in 0..nodes.pow(codes as u32) {
                let mut code = Vec::new();
                let mut c = code_id;
                for _ in 0..codes {
                    code.push(c % nodes);
                    c /= nodes;
                }
                let links = prufer(&code, nodes);
                for assign in 0..nodes.pow(n as u32) {
                    let mut bags = vec![VertexSet::EMPTY; nodes];
                    let mut a = assign;
                    for v in 0..n {
                        bags[a % nodes].insert(v);
                        a /= nodes;
                    }
                    let t = TreeCutDecomposition { links: links.clone(), bags };
                    best = best.min(tcd_width(&t, g).unwrap().width);
                }
            }
        }
        best
    }

    fn prufer(code: &[usize], nodes: usize) -> Vec<[usize; 2]> {
        let mut degree = vec![1; nodes];
        for &c in code {
            degree[c] += 1;
        }
        let mut links = Vec::new();
        for &c in code {
            let leaf = (0..nodes).find(|&i| degree[i] == 1).unwrap();
            links.push([leaf, c]);
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..nodes).filter(|&i| degree[i] == 1).collect();
        links.push([rest[0], rest[1]]);
        links
    }

    #[test]
    fn screewidth_matches_small_tree_search() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for i in 0..12 {
            let n = 3 + i % 2;
            let g = crate::corpus::random_connected_simple(&mut rng, n, 0.6);
            assert_eq!(screewidth_exact(&g, &b()).unwrap().0, brute_scw(&g), "{g:?}");
        }
    }
}
