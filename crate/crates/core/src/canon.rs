//! Canonical forms, isomorphism and induced-subgraph embedding for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency string (column-major) over all vertex orders that respect a
//! colour-refined ordered partition. The partition is computed from
//! degrees by iterated neighbourhood refinement, so it is itself an
//! isomorphism invariant and the minimum is canonical. Twin vertices are
//! interchangeable and only one of each twin class is branched on.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for canonical labelling.
pub const DEFAULT_CANON_LIMIT: usize = 12;

/// Canonical byte string: vertex count followed by the packed adjacency string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    /// Hex rendering, handy for JSON reports.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    Error::check_capacity("vertex count for canonical labelling", g.n(), limit)?;
    Ok(canonical_labeling(g).0)
}

/// Canonical form together with the canonical order (`order[i]` is the vertex placed at `i`).
///
/// No size check; callers bound `n` themselves.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let colours = refine_colours(g);
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| (colours[v], v));
    // cell_of_pos[k]: the set of vertices allowed at position k
    let mut cell_of_pos = vec![0u64; n];
    let mut start = 0;
    while start < n {
        let c = colours[by_colour[start]];
        let mut end = start;
        let mut mask = 0u64;
        while end < n && colours[by_colour[end]] == c {
            mask |= 1 << by_colour[end];
            end += 1;
        }
        for slot in cell_of_pos.iter_mut().take(end).skip(start) {
            *slot = mask;
        }
        start = end;
    }

    let mut search = Search {
        g,
        cell_of_pos,
        order: Vec::with_capacity(n),
        chunks: Vec::with_capacity(n),
        best_chunks: Vec::new(),
        best_order: Vec::new(),
    };
    search.dfs(0, Ordering::Less);

    let mut bytes = Vec::with_capacity(1 + n * n / 16 + 1);
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut nbits = 0;
    for (k, &chunk) in search.best_chunks.iter().enumerate() {
        for i in (0..k).rev() {
            acc = acc << 1 | (chunk >> i & 1) as u8;
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    (CanonicalForm(bytes), search.best_order)
}

struct Search<'a> {
    g: &'a Graph,
    cell_of_pos: Vec<u64>,
    order: Vec<usize>,
    chunks: Vec<u64>,
    best_chunks: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// Column `k` of the adjacency string when `v` is placed at position `k`;
    /// the vertex at position 0 is the most significant bit.
    fn chunk(&self, v: usize) -> u64 {
        let k = self.order.len();
        let row = self.g.rows()[v];
        self.order
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &p)| acc | (row >> p & 1) << (k - 1 - i))
    }

    /// `state` compares the current prefix with the best string's prefix.
    /// Returns true if the best string was replaced inside this subtree.
    fn dfs(&mut self, k: usize, mut state: Ordering) -> bool {
        let n = self.g.n();
        if k == n {
            if state == Ordering::Less {
                self.best_chunks = self.chunks.clone();
                self.best_order = self.order.clone();
                return true;
            }
            return false;
        }
        let used: u64 = self.order.iter().fold(0, |acc, &v| acc | 1 << v);
        let cands = self.cell_of_pos[k] & !used;
        let mut min_chunk = u64::MAX;
        let mut tied = Vec::new();
        for v in VertexSet(cands) {
            let c = self.chunk(v);
            match c.cmp(&min_chunk) {
                Ordering::Less => {
                    min_chunk = c;
                    tied.clear();
                    tied.push(v);
                }
                Ordering::Equal => tied.push(v),
                Ordering::Greater => {}
            }
        }
        if state == Ordering::Equal {
            match min_chunk.cmp(&self.best_chunks[k]) {
                Ordering::Greater => return false,
                Ordering::Less => state = Ordering::Less,
                Ordering::Equal => {}
            }
        }
        let rows = self.g.rows();
        let mut kept: Vec<usize> = Vec::with_capacity(tied.len());
        let mut improved = false;
        for v in tied {
            let twin = kept.iter().any(|&u| {
                rows[u] & !(1u64 << v) == rows[v] & !(1u64 << u)
            });
            if twin {
                continue;
            }
            kept.push(v);
            self.order.push(v);
            self.chunks.push(min_chunk);
            if self.dfs(k + 1, state) {
                improved = true;
                state = Ordering::Equal;
            }
            self.order.pop();
            self.chunks.pop();
        }
        improved
    }
}

/// Iterated colour refinement starting from degrees. Colours are ranks of
/// sorted signatures, so they do not depend on vertex numbering.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colours: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colours);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbours(v).iter().map(|w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        let next_classes = sorted.len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        // Still enforce the capacity contract on both inputs.
        Error::check_capacity("vertex count for canonical labelling", g.n(), DEFAULT_CANON_LIMIT)?;
        Error::check_capacity("vertex count for canonical labelling", h.n(), DEFAULT_CANON_LIMIT)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// An isomorphism as a map `h`-vertex -> `g`-vertex, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, og) = canonical_labeling(g);
    let (ch, oh) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let mut map = vec![0; h.n()];
    for (i, &hv) in oh.iter().enumerate() {
        map[hv] = og[i];
    }
    Some(map)
}

/// Finds an induced copy of `h` inside `g`, restricted to vertices in `allowed`.
/// Returns `map[h-vertex] = g-vertex`.
pub fn find_induced_embedding(g: &Graph, h: &Graph, allowed: VertexSet) -> Option<Vec<usize>> {
    let hn = h.n();
    if hn > allowed.len() {
        return None;
    }
    if hn == 0 {
        return Some(Vec::new());
    }
    // Place h-vertices in a connected-first, high-degree-first order.
    let mut order = Vec::with_capacity(hn);
    let mut placed = VertexSet::EMPTY;
    while order.len() < hn {
        let frontier: VertexSet = placed
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(h.neighbours(v)))
            .difference(placed);
        let pool = if frontier.is_empty() {
            h.vertices().difference(placed)
        } else {
            frontier
        };
        let v = pool
            .iter()
            .max_by_key(|&v| (h.neighbours(v).intersection(placed).len(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    let mut map = vec![usize::MAX; hn];
    if embed(g, h, allowed, &order, 0, VertexSet::EMPTY, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn embed(
    g: &Graph,
    h: &Graph,
    allowed: VertexSet,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let mut cands = allowed.difference(used);
    for &prev in &order[..depth] {
        let gp = map[prev];
        cands = if h.has_edge(hv, prev) {
            cands.intersection(g.neighbours(gp))
        } else {
            cands.difference(g.neighbours(gp))
        };
    }
    for gv in cands {
        if g.neighbours(gv).intersection(allowed).len() < h.degree(hv) {
            continue;
        }
        map[hv] = gv;
        if embed(g, h, allowed, order, depth + 1, used.union(VertexSet::singleton(gv)), map) {
            return true;
        }
    }
    map[hv] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_path_has_same_form() {
        let a = Graph::path(3);
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(
            canonical_form(&Graph::complete(3)).unwrap(),
            canonical_form(&a).unwrap()
        );
    }

    #[test]
    fn iso_examples() {
        let c4 = Graph::cycle(4);
        let c4b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c4, &c4b).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&c4, &two_k2).unwrap());
        let g = Graph::cycle(5);
        assert!(is_isomorphic(&g, &g.complement().complement()).unwrap());
        let map = find_isomorphism(&c4, &c4b).unwrap();
        for (u, v) in c4b.edges() {
            assert!(c4.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let g = Graph::path(13);
        assert!(matches!(canonical_form(&g), Err(Error::Capacity { .. })));
        assert!(canonical_form_with_limit(&g, 20).is_ok());
    }

    #[test]
    fn form_encodes_the_canonical_graph() {
        let g = Graph::from_edges(5, &[(0, 3), (3, 4), (1, 4), (2, 4)]).unwrap();
        let (f, order) = canonical_labeling(&g);
        let (f2, order2) = canonical_labeling(&g.permuted(&order));
        assert_eq!(f, f2);
        assert_eq!(order2, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_embedding() {
        let c5 = Graph::cycle(5);
        let p4 = Graph::path(4);
        let m = find_induced_embedding(&c5, &p4, c5.vertices()).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(p4.has_edge(u, v), c5.has_edge(m[u], m[v]));
                }
            }
        }
        assert!(find_induced_embedding(&c5, &Graph::cycle(4), c5.vertices()).is_none());
        assert!(find_induced_embedding(&Graph::complete(4), &Graph::path(3), VertexSet::full(4)).is_none());
    }
}
