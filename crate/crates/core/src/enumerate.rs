//! Isomorphism classes of small graphs.

use std::collections::BTreeMap;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::graph::{Graph, VertexSet};

/// Largest order for which [`all_graphs`] is practical.
pub const ENUMERATION_LIMIT: usize = 8;

/// One representative per isomorphism class on `n` vertices, in canonical
/// labelling, ordered by canonical form.
///
/// Classes on `n` vertices are found by attaching a new vertex to each
/// class on `n - 1` vertices in every possible way.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= ENUMERATION_LIMIT, "enumeration is limited to {ENUMERATION_LIMIT} vertices");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0..(1u64 << (k - 1)) {
                let mut rows = g.rows().to_vec();
                for v in VertexSet(mask) {
                    rows[v] |= 1 << (k - 1);
                }
                rows.push(mask);
                let h = Graph::from_rows(rows).expect("augmented rows are symmetric");
                let (form, order) = canonical_labeling(&h);
                next.entry(form).or_insert_with(|| h.permuted(&order).with_identity_ids());
            }
        }
        level = next.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| n == 0 || g.is_connected()).collect()
}

pub fn bipartite_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_bipartite).collect()
}

/// All classes on `1..=n_max` vertices.
pub fn graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(all_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert_eq!(graphs_up_to(6).len(), 208);
        let connected: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
    }
}
