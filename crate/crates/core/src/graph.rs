//! Simple undirected graphs stored as packed adjacency rows.
//!
//! Every vertex has a dense index `0..n` and a stable *id*. Ids start out
//! equal to the indices and survive vertex deletion, so a vertex of a
//! minor can always be traced back to the host it came from.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (one machine word per row).
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// `A Δ B`.
    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(D::Error::custom(format!("vertex {bad} is out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// A simple undirected graph.
///
/// Rewriting operations never mutate: they return a new graph carrying the
/// same ids and labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
    ids: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices are supported");
        Graph {
            rows: vec![0; n],
            ids: (0..n).collect(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Error::check_capacity("vertex count", n, MAX_VERTICES)?;
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and the zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Error::check_capacity("vertex count", n, MAX_VERTICES)?;
        let full = VertexSet::full(n).0;
        for (i, &r) in rows.iter().enumerate() {
            if r & !full != 0 {
                return Err(Error::Malformed(format!("row {i} references a vertex outside 0..{n}")));
            }
            if r >> i & 1 == 1 {
                return Err(Error::Malformed(format!("loop at vertex {i}")));
            }
            for j in VertexSet(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Malformed(format!("asymmetric adjacency between {i} and {j}")));
                }
            }
        }
        Ok(Graph {
            rows,
            ids: (0..n).collect(),
            labels: None,
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let full = VertexSet::full(n).0;
        for (i, r) in g.rows.iter_mut().enumerate() {
            *r = full & !(1u64 << i);
        }
        g
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.set_edge(i - 1, i, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set_edge(0, n - 1, true);
        }
        g
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for i in 1..=leaves {
            g.set_edge(0, i, true);
        }
        g
    }

    /// `K_{m,n}` with sides `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = Graph::empty(m + n);
        for a in 0..m {
            for b in m..m + n {
                g.set_edge(a, b, true);
            }
        }
        g
    }

    /// Attaches text labels, which must be pairwise distinct.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Precondition(format!("duplicate label {l:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Resets ids to `0..n`.
    pub fn with_identity_ids(mut self) -> Self {
        self.ids = (0..self.n()).collect();
        self
    }

    pub(crate) fn with_ids(mut self, ids: Vec<usize>) -> Self {
        debug_assert_eq!(ids.len(), self.n());
        self.ids = ids;
        self
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> usize {
        self.ids[v]
    }

    pub fn index_of_id(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        if present {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// `G * v`: complements adjacency inside the neighbourhood of `v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.local_complement_in_place(v);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, v: usize) {
        let nb = self.rows[v];
        for u in VertexSet(nb) {
            self.rows[u] ^= nb & !(1u64 << u);
        }
    }

    /// `G ∧ uv = G*u*v*u`, defined only for an edge `uv`.
    pub fn pivot_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("pivot needs an edge, {u}{v} is not one")));
        }
        let mut g = self.clone();
        g.pivot_in_place(u, v);
        Ok(g)
    }

    pub(crate) fn pivot_in_place(&mut self, u: usize, v: usize) {
        self.local_complement_in_place(u);
        self.local_complement_in_place(v);
        self.local_complement_in_place(u);
    }

    /// Complements every edge with both endpoints in `x`.
    pub fn complement_on(&self, x: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let mut g = self.clone();
        for v in x {
            g.rows[v] ^= x.0 & !(1u64 << v);
        }
        Ok(g)
    }

    /// Complements every edge with one endpoint in `x` and the other in `y`.
    pub fn complement_between(&self, x: VertexSet, y: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        self.check_set(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::Precondition(format!(
                "sets {x:?} and {y:?} overlap"
            )));
        }
        let mut g = self.clone();
        for v in x {
            g.rows[v] ^= y.0;
        }
        for v in y {
            g.rows[v] ^= x.0;
        }
        Ok(g)
    }

    /// Full edge complement.
    pub fn complement(&self) -> Graph {
        self.complement_on(self.vertices()).expect("vertex set of the graph itself")
    }

    /// Subgraph induced by `s`, re-indexed densely in increasing order;
    /// ids and labels follow their vertices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let keep = s.to_vec();
        let rows = keep
            .iter()
            .map(|&v| compress(self.rows[v], s.0))
            .collect();
        Ok(Graph {
            rows,
            ids: keep.iter().map(|&v| self.ids[v]).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| keep.iter().map(|&v| l[v].clone()).collect()),
        })
    }

    /// Deletes a single vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().difference(VertexSet::singleton(v)))
    }

    /// Graph with vertex `order[i]` of `self` placed at index `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let n = self.n();
        debug_assert_eq!(order.len(), n);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| VertexSet(self.rows[v]).iter().fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        Graph {
            rows,
            ids: order.iter().map(|&v| self.ids[v]).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| order.iter().map(|&v| l[v].clone()).collect()),
        }
    }

    /// True when the adjacency matrices are bit-identical (ids and labels ignored).
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.rows == other.rows
    }

    /// True when both graphs have the same ids in the same order and the same adjacency.
    pub fn same_identified(&self, other: &Graph) -> bool {
        self.ids == other.ids && self.rows == other.rows
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.rows[v] & within.0 & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// A 2-colouring `(A, B)` when the graph is bipartite; `A` holds the
    /// smallest vertex of each component.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side = vec![None; n];
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                if sv {
                    b.insert(v);
                } else {
                    a.insert(v);
                }
                for w in self.neighbours(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True if the graph has an induced path on four vertices.
    pub fn has_induced_p4(&self) -> bool {
        let n = self.n();
        for b in 0..n {
            for c in self.neighbours(b) {
                // a - b - c - d with a !~ c, b !~ d, a !~ d
                let a_cands = self.neighbours(b).difference(self.neighbours(c)).difference(VertexSet::singleton(c));
                let d_cands = self.neighbours(c).difference(self.neighbours(b)).difference(VertexSet::singleton(b));
                for a in a_cands {
                    if !d_cands.difference(self.neighbours(a)).difference(VertexSet::singleton(a)).is_empty() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Size of a largest clique (0 for the empty graph).
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(g, size + 1, rest & g.rows[v], best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertices().0, &mut best);
        best
    }

    /// A largest clique, as a vertex set (lexicographically first among maximum ones).
    pub fn max_clique(&self) -> VertexSet {
        fn grow(g: &Graph, cur: u64, cand: u64, best: &mut u64) {
            if cand == 0 {
                if cur.count_ones() > best.count_ones() {
                    *best = cur;
                }
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if cur.count_ones() + rest.count_ones() <= best.count_ones() {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(g, cur | 1 << v, rest & g.rows[v], best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertices().0, &mut best);
        VertexSet(best)
    }
}

/// Packs the bits of `word` selected by `mask` into the low bits, preserving order.
fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m.trailing_zeros();
        out |= (word >> b & 1) << i;
        i += 1;
        m &= m - 1;
    }
    out
}

/// Disjoint union, with a provenance table `(part, vertex)` for every vertex.
#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub graph: Graph,
    pub provenance: Vec<(usize, usize)>,
}

/// Block-diagonal union of `parts`.
pub fn disjoint_union(parts: &[Graph]) -> Result<DisjointUnion> {
    if parts.is_empty() {
        return Err(Error::Precondition("disjoint union of no graphs".into()));
    }
    let total: usize = parts.iter().map(Graph::n).sum();
    Error::check_capacity("vertex count", total, MAX_VERTICES)?;
    let mut g = Graph::empty(total);
    let mut provenance = Vec::with_capacity(total);
    let mut offset = 0;
    for (p, part) in parts.iter().enumerate() {
        for v in 0..part.n() {
            g.rows[offset + v] = part.rows[v] << offset;
            provenance.push((p, v));
        }
        offset += part.n();
    }
    if parts.iter().all(|p| p.labels.is_some()) {
        let labels: Vec<String> = parts
            .iter()
            .flat_map(|p| p.labels.clone().unwrap())
            .collect();
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() == labels.len() {
            g.labels = Some(labels);
        }
    }
    Ok(DisjointUnion { graph: g, provenance })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        };
        write!(f, "{} vertices:", self.n())?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", name(u), name(v))?;
        }
        Ok(())
    }
}
