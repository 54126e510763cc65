//! Tree-models: uniform-depth rooted trees whose leaves are the vertices,
//! with leaf colours and an adjacency signature over (colour, colour, distance).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const TREE_MODEL_VERTEX_LIMIT: usize = 8;
pub const TREE_MODEL_DEPTH_LIMIT: usize = 2;
pub const TREE_MODEL_COLOUR_LIMIT: usize = 3;

/// Nested arrays: a leaf is a vertex id, an internal node lists its children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeShape {
    Leaf(usize),
    Node(Vec<TreeShape>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub c1: usize,
    pub c2: usize,
    pub dist: usize,
    pub edge: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeModel {
    pub tree: TreeShape,
    /// Colour of each vertex, indexed by vertex id.
    pub colors: Vec<usize>,
    pub signature: Vec<SignatureEntry>,
}

impl TreeModel {
    /// Root-to-leaf path lengths must all be equal; returns that length.
    pub fn depth(&self) -> Result<usize> {
        let mut paths = Vec::new();
        leaf_paths(&self.tree, &mut Vec::new(), &mut paths)?;
        let d = paths.first().map(|(_, p)| p.len()).unwrap_or(0);
        if paths.iter().any(|(_, p)| p.len() != d) {
            return Err(Error::Malformed("tree-model leaves are at different depths".into()));
        }
        Ok(d)
    }

    pub fn colour_count(&self) -> usize {
        self.colors.iter().map(|c| c + 1).max().unwrap_or(0)
    }
}

fn leaf_paths(t: &TreeShape, prefix: &mut Vec<usize>, out: &mut Vec<(usize, Vec<usize>)>) -> Result<()> {
    match t {
        TreeShape::Leaf(v) => out.push((*v, prefix.clone())),
        TreeShape::Node(children) => {
            if children.is_empty() {
                return Err(Error::Malformed("tree-model has an internal node without children".into()));
            }
            for (i, c) in children.iter().enumerate() {
                prefix.push(i);
                leaf_paths(c, prefix, out)?;
                prefix.pop();
            }
        }
    }
    Ok(())
}

/// Builds the graph a tree-model describes.
pub fn eval_tree_model(tm: &TreeModel) -> Result<Graph> {
    let d = tm.depth()?;
    let mut paths = Vec::new();
    leaf_paths(&tm.tree, &mut Vec::new(), &mut paths)?;
    let n = paths.len();
    Error::check_capacity("tree-model leaf count", n, MAX_VERTICES)?;
    let mut path_of = vec![None; n];
    for (v, p) in paths {
        if v >= n || path_of[v].is_some() {
            return Err(Error::Malformed(format!("leaves must be exactly 0..{n}, saw {v}")));
        }
        path_of[v] = Some(p);
    }
    if tm.colors.len() != n {
        return Err(Error::Malformed(format!(
            "{} colours for {n} leaves",
            tm.colors.len()
        )));
    }
    let mut table: BTreeMap<(usize, usize, usize), bool> = BTreeMap::new();
    for e in &tm.signature {
        let key = (e.c1.min(e.c2), e.c1.max(e.c2), e.dist);
        if let Some(&prev) = table.get(&key) {
            if prev != e.edge {
                return Err(Error::Malformed(format!(
                    "signature is not symmetric at colours {},{} distance {}",
                    e.c1, e.c2, e.dist
                )));
            }
        }
        table.insert(key, e.edge);
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let (pu, pv) = (path_of[u].as_ref().unwrap(), path_of[v].as_ref().unwrap());
            let common = pu.iter().zip(pv).take_while(|(a, b)| a == b).count();
            let dist = 2 * (d - common);
            let (cu, cv) = (tm.colors[u], tm.colors[v]);
            let key = (cu.min(cv), cu.max(cv), dist);
            if table.get(&key).copied().unwrap_or(false) {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Searches for a tree-model of depth `d` with at most `m` colours.
///
/// Trees are enumerated as chains of nested set partitions (one level per
/// internal tree level below the root); colourings are searched by
/// backtracking with colours introduced in order.
pub fn find_tree_model(g: &Graph, d: usize, m: usize) -> Result<Option<TreeModel>> {
    Error::check_capacity("vertex count for tree-model search", g.n(), TREE_MODEL_VERTEX_LIMIT)?;
    Error::check_capacity("tree-model depth", d, TREE_MODEL_DEPTH_LIMIT)?;
    Error::check_capacity("tree-model colours", m, TREE_MODEL_COLOUR_LIMIT)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if m == 0 {
        return Ok(None);
    }
    if d == 0 {
        // a single vertex tree: the root is the only leaf
        return Ok((n == 1).then(|| TreeModel {
            tree: TreeShape::Leaf(0),
            colors: vec![0],
            signature: vec![],
        }));
    }
    let verts: Vec<usize> = (0..n).collect();
    let mut found = None;
    for_each_nested(&verts, d, &mut |shape| {
        // level[v][u] = depth of the lowest common ancestor
        let dist = distances(shape, n, d);
        if let Some((colors, sig)) = colour_search(g, &dist, d, m) {
            found = Some(TreeModel {
                tree: shape.clone(),
                colors,
                signature: sig,
            });
            true
        } else {
            false
        }
    });
    if let Some(tm) = &found {
        let back = eval_tree_model(tm)?;
        if !back.same_adjacency(g) {
            return Err(Error::Internal("tree-model does not evaluate to its graph".into()));
        }
    }
    Ok(found)
}

/// Calls `f` on every tree of depth `d` over `block`; stops when `f` returns true.
fn for_each_nested(block: &[usize], d: usize, f: &mut dyn FnMut(&TreeShape) -> bool) -> bool {
    if d == 1 {
        let t = TreeShape::Node(block.iter().map(|&v| TreeShape::Leaf(v)).collect());
        return f(&t);
    }
    let mut stop = false;
    for_each_partition(block, &mut |parts| {
        // Build every combination of subtrees of depth d - 1, one per part.
        let mut chosen: Vec<TreeShape> = Vec::with_capacity(parts.len());
        stop = combine(parts, 0, d - 1, &mut chosen, f);
        stop
    });
    stop
}

fn combine(
    parts: &[Vec<usize>],
    i: usize,
    d: usize,
    chosen: &mut Vec<TreeShape>,
    f: &mut dyn FnMut(&TreeShape) -> bool,
) -> bool {
    if i == parts.len() {
        return f(&TreeShape::Node(chosen.clone()));
    }
    for_each_nested(&parts[i], d, &mut |sub| {
        chosen.push(sub.clone());
        let stop = combine(parts, i + 1, d, chosen, f);
        chosen.pop();
        stop
    })
}

/// Set partitions via restricted growth strings; stops when `f` returns true.
fn for_each_partition(block: &[usize], f: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
    fn rec(block: &[usize], i: usize, parts: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        if i == block.len() {
            return f(parts);
        }
        for p in 0..parts.len() {
            parts[p].push(block[i]);
            let stop = rec(block, i + 1, parts, f);
            parts[p].pop();
            if stop {
                return true;
            }
        }
        parts.push(vec![block[i]]);
        let stop = rec(block, i + 1, parts, f);
        parts.pop();
        stop
    }
    rec(block, 0, &mut Vec::new(), f);
}

fn distances(shape: &TreeShape, n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    leaf_paths(shape, &mut Vec::new(), &mut paths).expect("generated trees are well formed");
    let mut path_of = vec![Vec::new(); n];
    for (v, p) in paths {
        path_of[v] = p;
    }
    let mut dist = vec![vec![0; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let common = path_of[u].iter().zip(&path_of[v]).take_while(|(a, b)| a == b).count();
                dist[u][v] = 2 * (d - common);
            }
        }
    }
    dist
}

fn colour_search(
    g: &Graph,
    dist: &[Vec<usize>],
    d: usize,
    m: usize,
) -> Option<(Vec<usize>, Vec<SignatureEntry>)> {
    let n = g.n();
    // table[c1][c2][dist / 2 - 1]: None unset, Some(edge)
    let levels = d;
    let mut table = vec![vec![vec![None; levels]; m]; m];
    let mut colors = vec![0usize; n];

    fn rec(
        g: &Graph,
        dist: &[Vec<usize>],
        m: usize,
        v: usize,
        used: usize,
        colors: &mut [usize],
        table: &mut [Vec<Vec<Option<bool>>>],
    ) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..(used + 1).min(m) {
            let mut set_here = Vec::new();
            let mut ok = true;
            for u in 0..v {
                let cu = colors[u];
                let lvl = dist[u][v] / 2 - 1;
                let edge = g.has_edge(u, v);
                let (a, b) = (cu.min(c), cu.max(c));
                match table[a][b][lvl] {
                    Some(e) if e != edge => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        table[a][b][lvl] = Some(edge);
                        set_here.push((a, b, lvl));
                    }
                }
            }
            if ok {
                colors[v] = c;
                if rec(g, dist, m, v + 1, used.max(c + 1), colors, table) {
                    return true;
                }
            }
            for (a, b, l) in set_here {
                table[a][b][l] = None;
            }
        }
        false
    }

    if !rec(g, dist, m, 0, 0, &mut colors, &mut table) {
        return None;
    }
    let mut sig = Vec::new();
    for (c1, row) in table.iter().enumerate() {
        for (c2, cell) in row.iter().enumerate().skip(c1) {
            for (l, e) in cell.iter().enumerate() {
                if let Some(edge) = e {
                    sig.push(SignatureEntry {
                        c1,
                        c2,
                        dist: 2 * (l + 1),
                        edge: *edge,
                    });
                }
            }
        }
    }
    Some((colors, sig))
}
