use serde::{Deserialize, Serialize};

use super::tcd::{tree_adjacency, tree_side, TreeCutDecomposition};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// Graph vertices placed injectively on the leaves of a tree with maximum
/// degree 3. Tree nodes are `0..nodes`; vertex `v` sits on `leaf_map[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcubicEmbedding {
    pub nodes: usize,
    pub links: Vec<[usize; 2]>,
    pub leaf_map: Vec<usize>,
}

impl SubcubicEmbedding {
    fn validate(&self, g: &MultiGraph) -> Result<Vec<Vec<usize>>> {
        let adj = tree_adjacency(self.nodes, &self.links).map_err(Error::InvalidEmbedding)?;
        if let Some(x) = (0..self.nodes).find(|&x| adj[x].len() > 3) {
            return Err(Error::InvalidEmbedding(format!("node {x} has degree {}", adj[x].len())));
        }
        if self.leaf_map.len() != g.n() {
            return Err(Error::InvalidEmbedding(format!("{} images for {} vertices", self.leaf_map.len(), g.n())));
        }
        let mut used = vec![false; self.nodes];
        for (v, &x) in self.leaf_map.iter().enumerate() {
            if x >= self.nodes || adj[x].len() > 1 {
                return Err(Error::InvalidEmbedding(format!("vertex {v} is not mapped to a leaf")));
            }
            if std::mem::replace(&mut used[x], true) {
                return Err(Error::InvalidEmbedding(format!("leaf {x} holds two vertices")));
            }
        }
        Ok(adj)
    }

    fn vertices_on(&self, nodes: &[usize]) -> VertexSet {
        let mut on = vec![false; self.nodes];
        for &x in nodes {
            on[x] = true;
        }
        (0..self.leaf_map.len()).filter(|&v| on[self.leaf_map[v]]).collect()
    }
}

/// Largest number of graph edges (with multiplicity) whose tree path
/// passes through a single tree node.
pub fn congestion(pi: &SubcubicEmbedding, g: &MultiGraph) -> Result<u64> {
    let adj = pi.validate(g)?;
    Ok(node_loads(pi, g, &adj, g.vertices()).into_iter().max().unwrap_or(0))
}

/// Paths through a node = (Σ incident link loads + paths ending there) / 2,
/// counting only edges inside `present`.
fn node_loads(pi: &SubcubicEmbedding, g: &MultiGraph, adj: &[Vec<usize>], present: VertexSet) -> Vec<u64> {
    let mut twice = vec![0u64; pi.nodes];
    for &[a, b] in &pi.links {
        let side = pi.vertices_on(&tree_side(adj, a, b)).intersection(present);
        let load = g.edges_between(side, present.difference(side));
        twice[a] += load;
        twice[b] += load;
    }
    for v in present {
        twice[pi.leaf_map[v]] += g.edges_between(VertexSet::singleton(v), present);
    }
    twice.into_iter().map(|t| t / 2).collect()
}

/// Exact vertex congestion with an optimal embedding.
///
/// For three or more vertices an optimal tree can be taken with the graph's
/// vertices as its only leaves and every internal node of degree 3. Those
/// trees are built by inserting leaves one at a time into every link; loads
/// only grow as leaves are added, so partial trees are pruned against the
/// best complete one.
pub fn vertex_congestion_exact(g: &MultiGraph, budget: &Budget) -> Result<(u64, SubcubicEmbedding)> {
    let n = g.n();
    budget.check_vertices("vertex congestion", n, budget.vcon_vertices)?;
    let pi = match n {
        1 => SubcubicEmbedding { nodes: 1, links: Vec::new(), leaf_map: vec![0] },
        2 => SubcubicEmbedding { nodes: 2, links: vec![[0, 1]], leaf_map: vec![0, 1] },
        _ => {
            // Leaves 0..n carry vertices 0..n; internal nodes follow.
            let start = SubcubicEmbedding {
                nodes: n + 1,
                links: vec![[0, n], [1, n], [2, n]],
                leaf_map: (0..n).collect(),
            };
            let mut search = VconSearch { g, best: None, budget };
            search.insert(start, 3)?;
            let (_, mut pi) = search.best.expect("at least one tree");
            pi.nodes = 2 * n - 2;
            pi
        }
    };
    let c = congestion(&pi, g)?;
    Ok((c, pi))
}

struct VconSearch<'a> {
    g: &'a MultiGraph,
    best: Option<(u64, SubcubicEmbedding)>,
    budget: &'a Budget,
}

impl VconSearch<'_> {
    fn partial_load(&self, t: &SubcubicEmbedding, placed: usize) -> u64 {
        let adj = partial_adjacency(t);
        node_loads(t, self.g, &adj, VertexSet::full(placed)).into_iter().max().unwrap_or(0)
    }

    fn insert(&mut self, t: SubcubicEmbedding, placed: usize) -> Result<()> {
        let load = self.partial_load(&t, placed);
        if self.best.as_ref().is_some_and(|(b, _)| load >= *b) {
            return Ok(());
        }
        let n = self.g.n();
        if placed == n {
            self.best = Some((load, t));
            return Ok(());
        }
        self.budget.check_deadline("vertex congestion")?;
        let mid = t.nodes;
        for j in 0..t.links.len() {
            let [a, b] = t.links[j];
            let mut next = t.clone();
            next.nodes += 1;
            next.links[j] = [a, mid];
            next.links.push([mid, b]);
            next.links.push([placed, mid]);
            self.insert(next, placed + 1)?;
        }
        Ok(())
    }
}

/// Adjacency of a partially built tree: node ids skip the leaves not yet
/// inserted, so this uses the raw id range.
fn partial_adjacency(t: &SubcubicEmbedding) -> Vec<Vec<usize>> {
    let size = t.links.iter().flatten().copied().max().map_or(1, |m| m + 1);
    let mut adj = vec![Vec::new(); size];
    for &[a, b] in &t.links {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// The tree-cut decomposition on the same tree with bag `{v}` at `π(v)` and
/// every other bag empty; its width equals the congestion of `π`.
pub fn embedding_to_tcd(pi: &SubcubicEmbedding, g: &MultiGraph) -> Result<TreeCutDecomposition> {
    if g.n() < 3 {
        return Err(Error::TooSmall);
    }
    pi.validate(g)?;
    let mut bags = vec![VertexSet::EMPTY; pi.nodes];
    for (v, &x) in pi.leaf_map.iter().enumerate() {
        bags[x].insert(v);
    }
    Ok(TreeCutDecomposition { links: pi.links.clone(), bags })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};
    use crate::width::tcd::tcd_width;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_examples() {
        let p2 = generate_family(&Family::Path(2)).unwrap();
        let pi = SubcubicEmbedding { nodes: 2, links: vec![[0, 1]], leaf_map: vec![0, 1] };
        assert_eq!(congestion(&pi, &p2).unwrap(), 1);
        assert_eq!(vertex_congestion_exact(&p2, &b()).unwrap().0, 1);

        let c3 = generate_family(&Family::Cycle(3)).unwrap();
        let star = SubcubicEmbedding { nodes: 4, links: vec![[0, 3], [1, 3], [2, 3]], leaf_map: vec![0, 1, 2] };
        assert_eq!(congestion(&star, &c3).unwrap(), 3);
        let t = embedding_to_tcd(&star, &c3).unwrap();
        assert_eq!(tcd_width(&t, &c3).unwrap().width, 3);
        assert_eq!(embedding_to_tcd(&pi, &p2).unwrap_err(), Error::TooSmall);
    }

    #[test]
    fn invalid_embeddings() {
        let c3 = generate_family(&Family::Cycle(3)).unwrap();
        let not_leaf = SubcubicEmbedding { nodes: 4, links: vec![[0, 3], [1, 3], [2, 3]], leaf_map: vec![0, 1, 3] };
        assert!(matches!(congestion(&not_leaf, &c3), Err(Error::InvalidEmbedding(_))));
        let shared = SubcubicEmbedding { nodes: 4, links: vec![[0, 3], [1, 3], [2, 3]], leaf_map: vec![0, 0, 1] };
        assert!(matches!(congestion(&shared, &c3), Err(Error::InvalidEmbedding(_))));
        let quartic = SubcubicEmbedding { nodes: 5, links: vec![[0, 4], [1, 4], [2, 4], [3, 4]], leaf_map: vec![0, 1, 2] };
        assert!(matches!(congestion(&quartic, &c3), Err(Error::InvalidEmbedding(_))));
    }

    /// Embeddings into all trees on up to `nodes` nodes via Prüfer codes.
    fn brute_vcon(g: &MultiGraph, max_nodes: usize) -> u64 {
        let n = g.n();
        let mut best = u64::MAX;
        for nodes in n..=max_nodes {
            for code_id in 0..nodes.pow(nodes as u32 - 2) {
                let mut code = Vec::new();
                let mut c = code_id;
                for _ in 0..nodes - 2 {
                    code.push(c % nodes);
                    c /= nodes;
                }
                let mut degree = vec![1; nodes];
                for &c in &code {
                    degree[c] += 1;
                }
                if degree.iter().any(|&d| d > 3) {
                    continue;
                }
                let mut dd = degree.clone();
                let mut links = Vec::new();
                for &c in &code {
                    let leaf = (0..nodes).find(|&i| dd[i] == 1).unwrap();
                    links.push([leaf, c]);
                    dd[leaf] -= 1;
                    dd[c] -= 1;
                }
                let rest: Vec<usize> = (0..nodes).filter(|&i| dd[i] == 1).collect();
                links.push([rest[0], rest[1]]);
                let leaves: Vec<usize> = (0..nodes).filter(|&i| degree[i] == 1).collect();
                if leaves.len() < n {
                    continue;
                }
                // Vertices onto the first leaves in every order.
                let mut perm: Vec<usize> = leaves.clone();
                permute(&mut perm, 0, &mut |p| {
                    let pi = SubcubicEmbedding { nodes, links: links.clone(), leaf_map: p[..n].to_vec() };
                    best = best.min(congestion(&pi, g).unwrap());
                });
            }
        }
        best
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn matches_exhaustive_embeddings() {
        for f in [Family::Complete(4), Family::Cycle(4), Family::Path(4), Family::Star(3)] {
            let g = generate_family(&f).unwrap();
            let (c, pi) = vertex_congestion_exact(&g, &b()).unwrap();
            assert_eq!(c, brute_vcon(&g, 7), "{f}");
            assert_eq!(congestion(&pi, &g).unwrap(), c);
        }
    }

    #[test]
    fn tcd_width_equals_congestion() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let caterpillar = |n: usize| {
            // Leaves 0..n, spine n..2n-2.
            let mut links = vec![[0, n], [1, n]];
            for i in 0..n - 3 {
                links.push([n + i, n + i + 1]);
                links.push([i + 2, n + i + 1]);
            }
            links.push([n - 1, 2 * n - 3]);
            links
        };
        for i in 0..30 {
            let n = 3 + i % 5;
            let g = crate::corpus::random_connected_simple(&mut rng, n, 0.5);
            let mut map: Vec<usize> = (0..n).collect();
            map.shuffle(&mut rng);
            let pi = SubcubicEmbedding { nodes: 2 * n - 2, links: caterpillar(n), leaf_map: map };
            let t = embedding_to_tcd(&pi, &g).unwrap();
            assert_eq!(tcd_width(&t, &g).unwrap().width, congestion(&pi, &g).unwrap());
        }
    }

    #[test]
    fn paths_and_cycles() {
        for n in 3..=6 {
            let p = generate_family(&Family::Path(n)).unwrap();
            assert_eq!(vertex_congestion_exact(&p, &b()).unwrap().0, 2);
            let c = generate_family(&Family::Cycle(n)).unwrap();
            assert_eq!(vertex_congestion_exact(&c, &b()).unwrap().0, 3);
        }
    }
}
