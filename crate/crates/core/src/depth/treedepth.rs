use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const TREE_DEPTH_LIMIT: usize = 12;

/// Rooted forest over the vertices of a graph, given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDepthDecomposition {
    pub parent: Vec<Option<usize>>,
}

/// Why a forest fails to witness a tree-depth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    WrongSize { forest: usize, graph: usize },
    BadParent(usize),
    Cycle(usize),
    TooHigh { height: usize, allowed: usize },
    EdgeNotInClosure(usize, usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::WrongSize { forest, graph } => {
                write!(f, "forest has {forest} vertices, graph has {graph}")
            }
            TdViolation::BadParent(v) => write!(f, "vertex {v} has an out-of-range parent"),
            TdViolation::Cycle(v) => write!(f, "vertex {v} lies on a parent cycle"),
            TdViolation::TooHigh { height, allowed } => {
                write!(f, "forest height {height} exceeds {allowed}")
            }
            TdViolation::EdgeNotInClosure(u, v) => {
                write!(f, "edge {u}{v} is not an ancestor-descendant pair")
            }
        }
    }
}

impl TreeDepthDecomposition {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Ancestors of `v`, nearest first. Assumes the forest is acyclic.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.parent[v];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out
    }

    fn check_shape(&self) -> std::result::Result<Vec<usize>, TdViolation> {
        let n = self.n();
        let mut depth = vec![usize::MAX; n];
        for v in 0..n {
            if let Some(p) = self.parent[v] {
                if p >= n || p == v {
                    return Err(TdViolation::BadParent(v));
                }
            }
        }
        for v in 0..n {
            let mut chain = vec![v];
            let mut cur = v;
            while depth[cur] == usize::MAX {
                match self.parent[cur] {
                    None => {
                        depth[cur] = 0;
                        break;
                    }
                    Some(p) => {
                        if chain.len() > n {
                            return Err(TdViolation::Cycle(v));
                        }
                        chain.push(p);
                        cur = p;
                    }
                }
            }
            let mut d = depth[cur];
            for &u in chain.iter().rev().skip(1) {
                d += 1;
                depth[u] = d;
            }
        }
        Ok(depth)
    }

    /// Maximum root-to-vertex path length.
    pub fn height(&self) -> Result<usize> {
        let depth = self
            .check_shape()
            .map_err(|e| Error::Malformed(format!("forest: {e}")))?;
        Ok(depth.into_iter().max().unwrap_or(0))
    }

    /// Checks that this forest witnesses `td(g) <= d`.
    pub fn check(&self, g: &Graph, d: usize) -> std::result::Result<(), TdViolation> {
        if self.n() != g.n() {
            return Err(TdViolation::WrongSize {
                forest: self.n(),
                graph: g.n(),
            });
        }
        let depth = self.check_shape()?;
        let height = depth.iter().copied().max().unwrap_or(0);
        if g.n() > 0 && height + 1 > d {
            return Err(TdViolation::TooHigh {
                height,
                allowed: d.saturating_sub(1),
            });
        }
        for (u, v) in g.edges() {
            let (lo, hi) = if depth[u] > depth[v] { (u, v) } else { (v, u) };
            if !self.ancestors(lo).contains(&hi) {
                return Err(TdViolation::EdgeNotInClosure(u, v));
            }
        }
        Ok(())
    }
}

/// True iff `t` is a forest on `V(g)` of height at most `d - 1` whose closure contains `g`.
pub fn verify_td(g: &Graph, t: &TreeDepthDecomposition, d: usize) -> bool {
    t.check(g, d).is_ok()
}

/// Exact tree-depth with a witness forest.
///
/// Connected vertex sets take one plus the best choice of root; disconnected
/// ones take the maximum over components. Results are memoised per vertex
/// subset of `g`.
pub fn tree_depth(g: &Graph) -> Result<(usize, TreeDepthDecomposition)> {
    Error::check_capacity("vertex count for tree-depth", g.n(), TREE_DEPTH_LIMIT)?;
    let mut solver = TdSolver {
        g,
        memo: HashMap::new(),
    };
    let comps = g.components();
    let td = comps.iter().map(|&c| solver.connected(c)).max().unwrap_or(0);
    let mut parent = vec![None; g.n()];
    for c in comps {
        solver.build(c, None, &mut parent);
    }
    Ok((td, TreeDepthDecomposition { parent }))
}

struct TdSolver<'a> {
    g: &'a Graph,
    /// connected set -> (tree-depth, best root)
    memo: HashMap<u64, (usize, usize)>,
}

impl TdSolver<'_> {
    fn connected(&mut self, s: VertexSet) -> usize {
        if s.len() == 1 {
            return 1;
        }
        if let Some(&(td, _)) = self.memo.get(&s.0) {
            return td;
        }
        let mut best = (usize::MAX, 0);
        for v in s {
            let rest = s.difference(VertexSet::singleton(v));
            let mut worst = 0;
            for c in self.g.components_within(rest) {
                worst = worst.max(self.connected(c));
                if worst + 1 >= best.0 {
                    break;
                }
            }
            if worst + 1 < best.0 {
                best = (worst + 1, v);
            }
            if best.0 == 2 {
                break;
            }
        }
        self.memo.insert(s.0, best);
        best.0
    }

    fn build(&mut self, s: VertexSet, above: Option<usize>, parent: &mut [Option<usize>]) {
        if s.len() == 1 {
            parent[s.first().unwrap()] = above;
            return;
        }
        self.connected(s);
        let root = self.memo[&s.0].1;
        parent[root] = above;
        let rest = s.difference(VertexSet::singleton(root));
        for c in self.g.components_within(rest) {
            self.build(c, Some(root), parent);
        }
    }
}
