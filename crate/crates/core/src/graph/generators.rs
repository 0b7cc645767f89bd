//! Parameterized graph families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// A named graph family with its parameters.
///
/// The text form (used by the CLI and by `# family:` graph-file comments) is
/// the lowercase family name followed by its integer parameters, e.g.
/// `rook 4 4`, `band 3` or `multipartite 2 2 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    /// `P_m □ P_n`.
    Grid(usize, usize),
    /// `Y_{m,n} = C_m □ P_n`.
    Cylinder(usize, usize),
    /// `K_a □ K_b`.
    Rook(usize, usize),
    /// Complete bipartite graph on `n` vertices (sides `⌈n/2⌉+1`-ish) with a
    /// cycle through the larger side: `K_{m+1,m-1}` for `n = 2m`,
    /// `K_{m+1,m}` for `n = 2m+1`.
    BipartitePlusCycle(usize),
    /// `4k` vertices with `v_i ~ v_j` iff `0 < |i-j| <= k`.
    Band(usize),
    /// Path on `n` vertices with every edge repeated `m` times.
    MultipliedPath(usize, u64),
    /// Two vertices joined by `m` parallel edges.
    Banana(u64),
    Petersen,
}

/// Builds the graph of a family member.
pub fn generate_family(family: &Family) -> Result<MultiGraph> {
    use Family::*;
    let bad = |msg: &str| Err(Error::BadParams(format!("{family}: {msg}")));
    match *family {
        Path(n) => {
            if n == 0 {
                return bad("need n >= 1");
            }
            MultiGraph::new(n, (1..n).map(|i| (i - 1, i, 1)))
        }
        Cycle(n) => {
            if n < 3 {
                return bad("need n >= 3");
            }
            MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, 1)))
        }
        Complete(n) => {
            if n == 0 {
                return bad("need n >= 1");
            }
            MultiGraph::new(n, pairs(n).map(|(u, v)| (u, v, 1)))
        }
        Star(k) => {
            if k == 0 {
                return bad("need at least one leaf");
            }
            MultiGraph::new(k + 1, (1..=k).map(|i| (0, i, 1)))
        }
        CompleteMultipartite(ref parts) => {
            if parts.len() < 2 || parts.contains(&0) {
                return bad("need at least two nonempty parts");
            }
            let mut part_of = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let n = part_of.len();
            MultiGraph::new(n, pairs(n).filter(|&(u, v)| part_of[u] != part_of[v]).map(|(u, v)| (u, v, 1)))
        }
        Grid(m, n) => {
            if m == 0 || n == 0 {
                return bad("need positive sides");
            }
            generate_family(&Path(m))?.cartesian_product(&generate_family(&Path(n))?)
        }
        Cylinder(m, n) => {
            if m < 3 || n == 0 {
                return bad("need m >= 3 and n >= 1");
            }
            generate_family(&Cycle(m))?.cartesian_product(&generate_family(&Path(n))?)
        }
        Rook(a, b) => {
            if a == 0 || b == 0 {
                return bad("need positive sides");
            }
            generate_family(&Complete(a))?.cartesian_product(&generate_family(&Complete(b))?)
        }
        BipartitePlusCycle(n) => {
            if n < 5 {
                return bad("need n >= 5");
            }
            let m = n / 2;
            let large = m + 1;
            let mut edges: Vec<_> = (0..large).map(|i| (i, (i + 1) % large, 1)).collect();
            for a in 0..large {
                for b in large..n {
                    edges.push((a, b, 1));
                }
            }
            MultiGraph::new(n, edges)
        }
        Band(k) => {
            if k == 0 {
                return bad("need k >= 1");
            }
            let n = 4 * k;
            MultiGraph::new(n, pairs(n).filter(|&(u, v)| v - u <= k).map(|(u, v)| (u, v, 1)))
        }
        MultipliedPath(n, m) => {
            if n == 0 || m == 0 {
                return bad("need n >= 1 and m >= 1");
            }
            MultiGraph::new(n, (1..n).map(|i| (i - 1, i, m)))
        }
        Banana(m) => {
            if m == 0 {
                return bad("need m >= 1");
            }
            MultiGraph::new(2, [(0, 1, m)])
        }
        Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5, 1));
            let spokes = (0..5).map(|i| (i, i + 5, 1));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5, 1));
            MultiGraph::new(10, outer.chain(spokes).chain(inner))
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

impl Family {
    /// The factors `(G, H)` when the family is generated as `G □ H`.
    pub fn product_factors(&self) -> Option<(Family, Family)> {
        use Family::*;
        match *self {
            Grid(m, n) => Some((Path(m), Path(n))),
            Cylinder(m, n) => Some((Cycle(m), Path(n))),
            Rook(a, b) => Some((Complete(a), Complete(b))),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match self {
            Path(n) => write!(f, "path {n}"),
            Cycle(n) => write!(f, "cycle {n}"),
            Complete(n) => write!(f, "complete {n}"),
            Star(n) => write!(f, "star {n}"),
            CompleteMultipartite(p) => {
                write!(f, "multipartite")?;
                p.iter().try_for_each(|x| write!(f, " {x}"))
            }
            Grid(m, n) => write!(f, "grid {m} {n}"),
            Cylinder(m, n) => write!(f, "cylinder {m} {n}"),
            Rook(a, b) => write!(f, "rook {a} {b}"),
            BipartitePlusCycle(n) => write!(f, "bipartite-cycle {n}"),
            Band(k) => write!(f, "band {k}"),
            MultipliedPath(n, m) => write!(f, "multiplied-path {n} {m}"),
            Banana(m) => write!(f, "banana {m}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let name = words.next().ok_or_else(|| Error::BadParams("empty family".into()))?;
        let nums: Vec<u64> = words
            .map(|w| w.parse::<u64>().map_err(|_| Error::BadParams(format!("bad parameter {w:?}"))))
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() != k {
                return Err(Error::BadParams(format!("{name} takes {k} parameter(s), got {}", nums.len())));
            }
            Ok(())
        };
        let u = |i: usize| nums[i] as usize;
        use Family::*;
        Ok(match name {
            "path" => want(1).map(|_| Path(u(0)))?,
            "cycle" => want(1).map(|_| Cycle(u(0)))?,
            "complete" => want(1).map(|_| Complete(u(0)))?,
            "star" => want(1).map(|_| Star(u(0)))?,
            "multipartite" => CompleteMultipartite(nums.iter().map(|&x| x as usize).collect()),
            "grid" => want(2).map(|_| Grid(u(0), u(1)))?,
            "cylinder" => want(2).map(|_| Cylinder(u(0), u(1)))?,
            "rook" => want(2).map(|_| Rook(u(0), u(1)))?,
            "bipartite-cycle" => want(1).map(|_| BipartitePlusCycle(u(0)))?,
            "band" => want(1).map(|_| Band(u(0)))?,
            "multiplied-path" => want(2).map(|_| MultipliedPath(u(0), nums[1]))?,
            "banana" => want(1).map(|_| Banana(nums[0]))?,
            "petersen" => want(0).map(|_| Petersen)?,
            other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
        })
    }
}
