//! SC-depth and BSC-depth: decompositions, evaluation and exact search.
//!
//! An SC node takes the disjoint union of its children and complements the
//! edges inside `X`; a BSC node complements the edges between `X` and `Y`.
//! Leaves are single vertices named by id.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Vertex limit for the exhaustive SC/BSC searches.
pub const SHRUB_SEARCH_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScNode {
    Leaf {
        leaf: usize,
    },
    Node {
        children: Vec<ScNode>,
        #[serde(rename = "X")]
        x: VertexSet,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BscNode {
    Leaf {
        leaf: usize,
    },
    Node {
        children: Vec<BscNode>,
        #[serde(rename = "X")]
        x: VertexSet,
        #[serde(rename = "Y")]
        y: VertexSet,
    },
}

/// Shared traversal for both decomposition kinds.
trait DecompNode: Sized {
    fn leaf_id(&self) -> Option<usize>;
    fn children(&self) -> &[Self];
    /// Applies this node's complementation to `rows`, after checking it
    /// only touches `below`.
    fn apply(&self, rows: &mut [u64], below: VertexSet) -> Result<()>;
}

impl DecompNode for ScNode {
    fn leaf_id(&self) -> Option<usize> {
        match self {
            ScNode::Leaf { leaf } => Some(*leaf),
            ScNode::Node { .. } => None,
        }
    }

    fn children(&self) -> &[Self] {
        match self {
            ScNode::Leaf { .. } => &[],
            ScNode::Node { children, .. } => children,
        }
    }

    fn apply(&self, rows: &mut [u64], below: VertexSet) -> Result<()> {
        if let ScNode::Node { x, .. } = self {
            if !x.is_subset(below) {
                return Err(Error::Malformed(format!(
                    "SC node set {x:?} is not within its leaves {below:?}"
                )));
            }
            for v in *x {
                rows[v] ^= x.0 & !(1u64 << v);
            }
        }
        Ok(())
    }
}

impl DecompNode for BscNode {
    fn leaf_id(&self) -> Option<usize> {
        match self {
            BscNode::Leaf { leaf } => Some(*leaf),
            BscNode::Node { .. } => None,
        }
    }

    fn children(&self) -> &[Self] {
        match self {
            BscNode::Leaf { .. } => &[],
            BscNode::Node { children, .. } => children,
        }
    }

    fn apply(&self, rows: &mut [u64], below: VertexSet) -> Result<()> {
        if let BscNode::Node { x, y, .. } = self {
            if !x.union(*y).is_subset(below) {
                return Err(Error::Malformed(format!(
                    "BSC node sets {x:?}, {y:?} are not within their leaves {below:?}"
                )));
            }
            if !x.is_disjoint(*y) {
                return Err(Error::Malformed(format!("BSC node sets {x:?} and {y:?} overlap")));
            }
            for v in *x {
                rows[v] ^= y.0;
            }
            for v in *y {
                rows[v] ^= x.0;
            }
        }
        Ok(())
    }
}

fn node_depth<N: DecompNode>(node: &N) -> usize {
    match node.leaf_id() {
        Some(_) => 0,
        None => 1 + node.children().iter().map(node_depth).max().unwrap_or(0),
    }
}

fn leaves_of<N: DecompNode>(node: &N, out: &mut Vec<usize>) {
    match node.leaf_id() {
        Some(v) => out.push(v),
        None => node.children().iter().for_each(|c| leaves_of(c, out)),
    }
}

fn eval_into<N: DecompNode>(node: &N, rows: &mut [u64]) -> Result<VertexSet> {
    if let Some(v) = node.leaf_id() {
        return Ok(VertexSet::singleton(v));
    }
    if node.children().is_empty() {
        return Err(Error::Malformed("internal node without children".into()));
    }
    let mut below = VertexSet::EMPTY;
    for c in node.children() {
        below = below.union(eval_into(c, rows)?);
    }
    node.apply(rows, below)?;
    Ok(below)
}

fn eval_tree<N: DecompNode>(root: &N) -> Result<Graph> {
    let mut leaves = Vec::new();
    leaves_of(root, &mut leaves);
    let n = leaves.len();
    Error::check_capacity("leaf count", n, MAX_VERTICES)?;
    let mut sorted = leaves.clone();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::Malformed(format!(
            "leaves must be exactly 0..{n} without repeats, found {leaves:?}"
        )));
    }
    let mut rows = vec![0u64; n];
    eval_into(root, &mut rows)?;
    Graph::from_rows(rows)
}

/// SC decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScDecomposition {
    pub root: ScNode,
}

/// BSC decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BscDecomposition {
    pub root: BscNode,
}

impl ScDecomposition {
    pub fn depth(&self) -> usize {
        node_depth(&self.root)
    }

    pub fn leaf_count(&self) -> usize {
        let mut v = Vec::new();
        leaves_of(&self.root, &mut v);
        v.len()
    }
}

impl BscDecomposition {
    pub fn depth(&self) -> usize {
        node_depth(&self.root)
    }

    pub fn leaf_count(&self) -> usize {
        let mut v = Vec::new();
        leaves_of(&self.root, &mut v);
        v.len()
    }
}

/// Evaluates an SC decomposition bottom-up; vertex `i` of the result is leaf `i`.
pub fn eval_sc(d: &ScDecomposition) -> Result<Graph> {
    eval_tree(&d.root)
}

pub fn eval_bsc(d: &BscDecomposition) -> Result<Graph> {
    eval_tree(&d.root)
}

/// One complementation move of a depth family.
trait Family {
    type Move: Copy;
    fn moves(g: &Graph) -> Vec<Self::Move>;
    fn apply(g: &Graph, m: Self::Move) -> Graph;
}

struct Sc;
struct Bsc;

impl Family for Sc {
    type Move = VertexSet;

    fn moves(g: &Graph) -> Vec<VertexSet> {
        // complementing on a set of size 1 changes nothing
        (0..1u64 << g.n())
            .filter(|x| x.count_ones() != 1)
            .map(VertexSet)
            .collect()
    }

    fn apply(g: &Graph, x: VertexSet) -> Graph {
        g.complement_on(x).expect("subset of the graph")
    }
}

impl Family for Bsc {
    type Move = (VertexSet, VertexSet);

    fn moves(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
        // (X, Y) and (Y, X) act alike, and an empty side is a no-op:
        // keep (∅, ∅) plus pairs with the smallest vertex of X ∪ Y in X.
        let n = g.n();
        let mut out = vec![(VertexSet::EMPTY, VertexSet::EMPTY)];
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let (mut x, mut y) = (VertexSet::EMPTY, VertexSet::EMPTY);
            let mut c = code;
            for v in 0..n {
                match c % 3 {
                    1 => x.insert(v),
                    2 => y.insert(v),
                    _ => {}
                }
                c /= 3;
            }
            if x.is_empty() || y.is_empty() {
                continue;
            }
            if x.first() < y.first() {
                out.push((x, y));
            }
        }
        out
    }

    fn apply(g: &Graph, (x, y): (VertexSet, VertexSet)) -> Graph {
        g.complement_between(x, y).expect("disjoint subsets of the graph")
    }
}

/// Memoised exact search, reusable across many graphs.
struct DepthSearch<F: Family> {
    fits: HashMap<(CanonicalForm, usize), bool>,
    _family: std::marker::PhantomData<F>,
}

impl<F: Family> DepthSearch<F> {
    fn new() -> Self {
        DepthSearch {
            fits: HashMap::new(),
            _family: std::marker::PhantomData,
        }
    }

    /// Whether `g` has depth at most `k`.
    ///
    /// Both classes are closed under induced subgraphs, so `g` fits in
    /// depth `k` iff some move turns it into a graph whose components all
    /// fit in depth `k - 1`.
    fn fits(&mut self, g: &Graph, k: usize) -> bool {
        if g.n() <= 1 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let key = (canonical_labeling(g).0, k);
        if let Some(&b) = self.fits.get(&key) {
            return b;
        }
        let ans = self.find_move(g, k).is_some();
        self.fits.insert(key, ans);
        ans
    }

    fn find_move(&mut self, g: &Graph, k: usize) -> Option<(F::Move, Graph, Vec<VertexSet>)> {
        for m in F::moves(g) {
            let h = F::apply(g, m);
            let comps = h.components();
            let ok = comps
                .iter()
                .all(|&c| self.fits(&h.induced_subgraph(c).expect("component"), k - 1));
            if ok {
                return Some((m, h, comps));
            }
        }
        None
    }

    fn depth(&mut self, g: &Graph) -> usize {
        let mut k = 0;
        while !self.fits(g, k) {
            k += 1;
        }
        k
    }
}

fn check_search_size(g: &Graph) -> Result<()> {
    Error::check_capacity("vertex count for SC/BSC search", g.n(), SHRUB_SEARCH_LIMIT)?;
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    Ok(())
}

/// Exact SC-depth solver with a memo that persists across calls.
pub struct ScSolver(DepthSearch<Sc>);

impl Default for ScSolver {
    fn default() -> Self {
        ScSolver(DepthSearch::new())
    }
}

impl ScSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&mut self, g: &Graph) -> Result<usize> {
        check_search_size(g)?;
        Ok(self.0.depth(g))
    }

    /// Exact SC-depth of `g` with a witness whose leaves are the vertex indices.
    pub fn solve(&mut self, g: &Graph) -> Result<(usize, ScDecomposition)> {
        check_search_size(g)?;
        let g = g.clone().with_identity_ids();
        let k = self.0.depth(&g);
        let root = self.build(&g, k);
        Ok((k, ScDecomposition { root }))
    }

    fn build(&mut self, g: &Graph, k: usize) -> ScNode {
        if g.n() == 1 {
            return ScNode::Leaf { leaf: g.id(0) };
        }
        let (x, h, comps) = self.0.find_move(g, k).expect("fits was established");
        let children = comps
            .into_iter()
            .map(|c| {
                let sub = h.induced_subgraph(c).expect("component");
                let kc = self.0.depth(&sub);
                self.build(&sub, kc)
            })
            .collect();
        ScNode::Node {
            children,
            x: x.iter().map(|v| g.id(v)).collect(),
        }
    }
}

/// Exact BSC-depth solver with a persistent memo.
pub struct BscSolver(DepthSearch<Bsc>);

impl Default for BscSolver {
    fn default() -> Self {
        BscSolver(DepthSearch::new())
    }
}

impl BscSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&mut self, g: &Graph) -> Result<usize> {
        check_search_size(g)?;
        Ok(self.0.depth(g))
    }

    pub fn solve(&mut self, g: &Graph) -> Result<(usize, BscDecomposition)> {
        check_search_size(g)?;
        let g = g.clone().with_identity_ids();
        let k = self.0.depth(&g);
        let root = self.build(&g, k);
        Ok((k, BscDecomposition { root }))
    }

    fn build(&mut self, g: &Graph, k: usize) -> BscNode {
        if g.n() == 1 {
            return BscNode::Leaf { leaf: g.id(0) };
        }
        let ((x, y), h, comps) = self.0.find_move(g, k).expect("fits was established");
        let children = comps
            .into_iter()
            .map(|c| {
                let sub = h.induced_subgraph(c).expect("component");
                let kc = self.0.depth(&sub);
                self.build(&sub, kc)
            })
            .collect();
        BscNode::Node {
            children,
            x: x.iter().map(|v| g.id(v)).collect(),
            y: y.iter().map(|v| g.id(v)).collect(),
        }
    }
}

pub fn sc_depth(g: &Graph) -> Result<(usize, ScDecomposition)> {
    ScSolver::new().solve(g)
}

pub fn bsc_depth(g: &Graph) -> Result<(usize, BscDecomposition)> {
    BscSolver::new().solve(g)
}
