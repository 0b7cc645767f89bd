//! Small-graph corpora: exhaustive enumeration up to isomorphism, random
//! connected graphs, and brute-force canonical forms.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

const MAX_CANON: usize = 8;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically smallest upper-triangle multiplicity vector over all
/// vertex relabelings. Two graphs are isomorphic iff their forms agree.
pub fn canonical_form(g: &MultiGraph) -> Result<Vec<u64>> {
    let n = g.n();
    if n > MAX_CANON {
        return Err(Error::FeasibilityCapExceeded {
            what: "canonical form",
            detail: format!("{n} vertices, cap {MAX_CANON}"),
        });
    }
    let mut best: Option<Vec<u64>> = None;
    let mut cur = Vec::with_capacity(n * (n - 1) / 2);
    for p in permutations(n) {
        // p[new] = old
        cur.clear();
        for i in 0..n {
            for j in i + 1..n {
                cur.push(g.multiplicity(p[i], p[j]));
            }
        }
        if best.as_ref().is_none_or(|b| cur < *b) {
            best = Some(cur.clone());
        }
    }
    Ok(best.unwrap_or_default())
}

pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Every connected simple graph on `n` vertices, one per isomorphism class.
pub fn connected_simple_graphs(n: usize) -> Result<Vec<MultiGraph>> {
    if n == 0 || n > 6 {
        return Err(Error::FeasibilityCapExceeded {
            what: "graph enumeration",
            detail: format!("n = {n}, supported 1..=6"),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = maps
            .iter()
            .map(|m| {
                let mut img = 0u64;
                let mut bits = mask;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    img |= 1 << m[i];
                    bits &= bits - 1;
                }
                img
            })
            .min()
            .unwrap_or(mask);
        if !seen.insert(canon) {
            continue;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| canon >> i & 1 == 1).map(|(_, &(u, v))| (u, v, 1));
        if let Ok(g) = MultiGraph::new(n, edges) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Every tree on `n` vertices, one per isomorphism class, grown leaf by
/// leaf and deduplicated by the AHU encoding at the center.
pub fn trees(n: usize) -> Result<Vec<MultiGraph>> {
    if n == 0 || n > 16 {
        return Err(Error::FeasibilityCapExceeded {
            what: "tree enumeration",
            detail: format!("n = {n}, supported 1..=16"),
        });
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for parent in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((parent, size - 1));
                if seen.insert(tree_code(size, &grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| MultiGraph::new(n, edges.into_iter().map(|(u, v)| (u, v, 1))))
        .collect()
}

fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves to reach the one or two centers
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().expect("a tree has a center")
}

/// A random connected simple graph: a random spanning tree plus each
/// remaining pair independently with probability `p`.
pub fn random_connected_simple<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> MultiGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    MultiGraph::new(n, edges.into_iter().map(|(u, v)| (u, v, 1))).expect("spanning tree keeps it connected")
}

/// A random connected spanning subgraph of `g`: each edge copy is dropped
/// with probability `p` unless dropping it would disconnect the graph.
pub fn random_spanning_subgraph<R: Rng + ?Sized>(rng: &mut R, g: &MultiGraph, p: f64) -> MultiGraph {
    let mut edges: Vec<(usize, usize, u64)> = g.edges().to_vec();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    for i in order {
        while edges[i].2 > 0 && rng.gen_bool(p) {
            edges[i].2 -= 1;
            let trial = edges.iter().copied().filter(|e| e.2 > 0);
            if MultiGraph::new(g.n(), trial).is_err() {
                edges[i].2 += 1;
                break;
            }
        }
    }
    MultiGraph::new(g.n(), edges.into_iter().filter(|e| e.2 > 0)).expect("kept connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    #[test]
    fn counts_match_known_sequence() {
        // connected graphs on n unlabeled vertices: 1, 1, 2, 6, 21, 112
        let counts: Vec<usize> = (1..=6).map(|n| connected_simple_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // free trees on n unlabeled vertices: 1, 1, 1, 2, 3, 6, 11, 23, 47
        let counts: Vec<usize> = (1..=9).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for n in 1..=6 {
            let from_graphs: Vec<MultiGraph> =
                connected_simple_graphs(n).unwrap().into_iter().filter(|g| g.edge_count() + 1 == n as u64).collect();
            assert_eq!(from_graphs.len(), trees(n).unwrap().len());
        }
    }

    #[test]
    fn line_graph_of_k4_is_octahedron() {
        let l = generate_family(&Family::Complete(4)).unwrap().line_graph().unwrap();
        let oct = generate_family(&Family::CompleteMultipartite(vec![2, 2, 2])).unwrap();
        assert!(are_isomorphic(&l, &oct).unwrap());
    }

    #[test]
    fn product_of_paths_is_grid() {
        let p3 = generate_family(&Family::Path(3)).unwrap();
        let p4 = generate_family(&Family::Path(4)).unwrap();
        let g = p3.cartesian_product(&p4).unwrap();
        assert_eq!(g, generate_family(&Family::Grid(3, 4)).unwrap());
        let c4 = generate_family(&Family::Cycle(4)).unwrap();
        let p2 = generate_family(&Family::Path(2)).unwrap();
        assert!(are_isomorphic(&p2.cartesian_product(&p2).unwrap(), &c4).unwrap());
    }
}
