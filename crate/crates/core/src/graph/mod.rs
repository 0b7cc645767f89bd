//! Finite connected loopless multigraphs and the operations on them.

pub(crate) mod enumerate;
pub mod flow;
pub mod generators;
pub mod io;
pub mod params;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

pub use enumerate::enumerate_connected_subgraphs;
pub use generators::{generate_family, Family};
pub use params::{alpha_k, connectivity_params, lambda_k, xi_k, GraphParams};

/// A finite, connected, loopless multigraph on vertices `0..n`.
///
/// Edges are stored once per unordered pair as `(u, v, multiplicity)` with
/// `u < v`, sorted. Two graphs compare equal iff their vertex counts and
/// edge multisets agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
    adj: Vec<Vec<(usize, u64)>>,
    nbrs: Vec<VertexSet>,
}

impl std::fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl MultiGraph {
    /// Builds and validates a multigraph. Repeated pairs accumulate multiplicity.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let g = Self::build_unchecked(n, edges)?;
        if !g.is_connected_set(VertexSet::full(n)) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Convenience constructor for simple edge lists.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, 1)))
    }

    /// Validates everything except connectivity.
    pub(crate) fn build_unchecked<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        if n == 0 {
            return Err(Error::BadParams("a graph needs at least one vertex".into()));
        }
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        let mut map: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (u, v, m) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::BadIndex { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            *map.entry((u.min(v), u.max(v))).or_insert(0) += m;
        }
        let edges: Vec<_> = map.into_iter().map(|((u, v), m)| (u, v, m)).collect();
        let mut adj = vec![Vec::new(); n];
        let mut nbrs = vec![VertexSet::EMPTY; n];
        for &(u, v, m) in &edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(MultiGraph { n, edges, adj, nbrs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Distinct adjacent pairs `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.adj
            .get(u)
            .and_then(|a| a.binary_search_by_key(&v, |e| e.0).ok().map(|i| a[i].1))
            .unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.adj[v].iter().map(|e| e.1).sum()
    }

    pub fn max_degree(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.nbrs[v]
    }

    /// Neighbors of `v` with edge multiplicities.
    pub fn adjacency(&self, v: usize) -> &[(usize, u64)] {
        &self.adj[v]
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.2 == 1)
    }

    /// Vertices adjacent to some vertex of `s`, outside `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out = out.union(self.nbrs[v]);
        }
        out.difference(s)
    }

    /// True iff `s` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else { return false };
        self.reach_within(VertexSet::singleton(start), s) == s
    }

    /// Vertices of `within` reachable from `from` using only vertices of `within`.
    pub fn reach_within(&self, from: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = from.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `s`.
    pub fn components_of(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach_within(VertexSet::singleton(v), rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Edges (with multiplicity) between disjoint sets `a` and `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> u64 {
        let mut total = 0;
        for v in a {
            for &(u, m) in &self.adj[v] {
                if b.contains(u) {
                    total += m;
                }
            }
        }
        total
    }

    /// Edges (with multiplicity) leaving `s`.
    pub fn boundary(&self, s: VertexSet) -> u64 {
        self.edges_between(s, self.vertices().difference(s))
    }

    /// The graph with every multiplicity reduced to one.
    pub fn simplified(&self) -> MultiGraph {
        Self::build_unchecked(self.n, self.edges.iter().map(|&(u, v, _)| (u, v, 1)))
            .expect("simplification keeps a valid graph")
    }

    /// The subgraph induced by a connected vertex set, relabeled in ascending
    /// order. Returns the graph and the original label of each new vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(MultiGraph, Vec<usize>)> {
        let labels = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| s.contains(e.0) && s.contains(e.1))
            .map(|&(u, v, m)| (index[u], index[v], m));
        Ok((MultiGraph::new(labels.len(), edges)?, labels))
    }

    /// Deletes one copy of edge `(u, w)` and joins `u` and `w` through a new
    /// vertex, which gets index `n`.
    pub fn subdivide_edge(&self, u: usize, w: usize) -> Result<MultiGraph> {
        if self.multiplicity(u, w) == 0 {
            return Err(Error::NoSuchEdge(u, w));
        }
        let v = self.n;
        let (a, b) = (u.min(w), u.max(w));
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(x, y, m)| if (x, y) == (a, b) { (x, y, m - 1) } else { (x, y, m) })
            .filter(|e| e.2 > 0)
            .collect();
        edges.push((u, v, 1));
        edges.push((v, w, 1));
        MultiGraph::new(self.n + 1, edges)
    }

    /// Removes a degree-two vertex with distinct neighbors `s`, `w` and adds
    /// the edge `(s, w)`. Vertices above `v` shift down by one.
    pub fn smooth_vertex(&self, v: usize) -> Result<MultiGraph> {
        if v >= self.n {
            return Err(Error::BadIndex { index: v, n: self.n });
        }
        if self.degree(v) != 2 {
            return Err(Error::NotDegreeTwo(v));
        }
        if self.adj[v].len() != 2 {
            return Err(Error::NeighborsNotDistinct(v));
        }
        let (s, w) = (self.adj[v][0].0, self.adj[v][1].0);
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.0 != v && e.1 != v)
            .map(|&(x, y, m)| (relabel(x), relabel(y), m))
            .chain(std::iter::once((relabel(s), relabel(w), 1)));
        MultiGraph::new(self.n - 1, edges)
    }

    /// Cartesian product; vertex `(g, h)` gets index `g * |V(H)| + h`.
    pub fn cartesian_product(&self, other: &MultiGraph) -> Result<MultiGraph> {
        let (n, m) = (self.n, other.n);
        let mut edges = Vec::new();
        for g in 0..n {
            for &(a, b, k) in &other.edges {
                edges.push((g * m + a, g * m + b, k));
            }
        }
        for h in 0..m {
            for &(a, b, k) in &self.edges {
                edges.push((a * m + h, b * m + h, k));
            }
        }
        MultiGraph::new(n * m, edges)
    }

    /// Each edge copy, in the order of [`MultiGraph::edge_copies`].
    pub fn edge_copies(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .flat_map(|&(u, v, m)| std::iter::repeat_n((u, v), m as usize))
            .collect()
    }

    /// The line graph: one vertex per edge copy, adjacent when the copies
    /// share an endpoint. Parallel copies share both endpoints and are joined
    /// by a single edge.
    pub fn line_graph(&self) -> Result<MultiGraph> {
        let copies = self.edge_copies();
        if copies.is_empty() {
            return Err(Error::BadParams("line graph of an edgeless graph".into()));
        }
        let mut edges = Vec::new();
        for i in 0..copies.len() {
            for j in i + 1..copies.len() {
                let (a, b) = copies[i];
                let (c, d) = copies[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j, 1));
                }
            }
        }
        MultiGraph::new(copies.len(), edges)
    }

    /// Whether deleting one copy of `(u, v)` disconnects the graph; if so,
    /// the vertex set of `u`'s side.
    pub fn bridge_side(&self, u: usize, v: usize) -> Result<Option<VertexSet>> {
        let m = self.multiplicity(u, v);
        if m == 0 {
            return Err(Error::NoSuchEdge(u, v));
        }
        if m > 1 {
            return Ok(None);
        }
        let mut seen = VertexSet::singleton(u);
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.adj[x] {
                if (x, y) == (u, v) || seen.contains(y) {
                    continue;
                }
                seen.insert(y);
                stack.push(y);
            }
        }
        Ok((!seen.contains(v)).then_some(seen))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn banana_degrees() {
        let g = MultiGraph::new(2, [(0, 1, 3)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn triangle_degrees() {
        let g = cycle(3);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(MultiGraph::from_edges(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(MultiGraph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(MultiGraph::from_edges(2, &[(0, 2)]), Err(Error::BadIndex { index: 2, n: 2 }));
    }

    #[test]
    fn subdivide_cycle_and_path() {
        assert_eq!(cycle(3).subdivide_edge(0, 1).unwrap().n(), 4);
        let c4 = cycle(3).subdivide_edge(0, 1).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let p2 = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let p3 = p2.subdivide_edge(0, 1).unwrap();
        assert_eq!(p3.edges(), &[(0, 2, 1), (1, 2, 1)]);
        assert_eq!(p2.subdivide_edge(0, 0), Err(Error::NoSuchEdge(0, 0)));
    }

    #[test]
    fn subdivide_banana_copy() {
        // two parallel edges survive, plus the path 0-2-1
        let g = MultiGraph::new(2, [(0, 1, 3)]).unwrap().subdivide_edge(0, 1).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (3, 3, 2));
    }

    #[test]
    fn smoothing() {
        assert_eq!(cycle(4).smooth_vertex(2).unwrap(), cycle(3));
        let p3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.smooth_vertex(1).unwrap(), MultiGraph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(p3.smooth_vertex(0), Err(Error::NotDegreeTwo(0)));
        let banana = MultiGraph::new(2, [(0, 1, 2)]).unwrap();
        assert_eq!(banana.smooth_vertex(0), Err(Error::NeighborsNotDistinct(0)));
    }

    #[test]
    fn products() {
        let p2 = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let sq = p2.cartesian_product(&p2).unwrap();
        assert_eq!(sq.edge_count(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
        let y = cycle(4).cartesian_product(&p2).unwrap();
        assert_eq!(y.n(), 8);
        assert!((0..8).all(|v| y.degree(v) == 3));
    }

    #[test]
    fn line_graphs() {
        let p3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.line_graph().unwrap(), MultiGraph::from_edges(2, &[(0, 1)]).unwrap());
        let l = cycle(6).line_graph().unwrap();
        assert_eq!(l.n(), 6);
        assert!((0..6).all(|v| l.degree(v) == 2));
    }

    #[test]
    fn bridges() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.bridge_side(1, 2).unwrap(), Some([0, 1].into_iter().collect()));
        assert_eq!(cycle(4).bridge_side(0, 1).unwrap(), None);
    }
}
