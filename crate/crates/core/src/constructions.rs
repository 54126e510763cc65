//! Constructive results: vertex-minor and pivot-minor hosts of small
//! tree-depth, splitting a set pivot into edge pivots, SC/BSC conversions,
//! the `H_n` family and the clique pivot-minor experiment.

use serde::Serialize;

use crate::depth::shrub::{eval_bsc, eval_sc, BscDecomposition, BscNode, ScDecomposition, ScNode};
use crate::depth::treedepth::{tree_depth, TreeDepthDecomposition};
use crate::enumerate::connected_graphs;
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6::to_graph6;
use crate::minors::{
    apply_script, max_clique_pivot_minor, MatrixWitness, MinorCertificate, MinorKind, Script, Step,
};

/// Ordered edge pivots whose composition equals one set pivot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PivotPairing {
    pub pairs: Vec<(usize, usize)>,
    pub s: usize,
}

/// Lexicographically smallest edge of `g` inside `X ∖ {u}`.
pub fn find_pivotable_pair(g: &Graph, x: VertexSet, u: usize) -> Result<(usize, usize)> {
    g.check_set(x)?;
    if !x.contains(u) {
        return Err(Error::Precondition(format!("vertex {u} is not in X")));
    }
    if x.len() < 3 {
        return Err(Error::Precondition("X needs at least three vertices".into()));
    }
    if !GF2Matrix::adjacency(g).is_nonsingular(x)? {
        return Err(Error::Singular(x.to_vec()));
    }
    let rest = x.difference(VertexSet::singleton(u));
    for v in rest {
        let w = g.neighbours(v).intersection(rest).difference(VertexSet::full(v + 1));
        if let Some(w) = w.first() {
            return Ok((v, w));
        }
    }
    Err(Error::Internal(format!(
        "no edge inside X - {{{u}}} although A[X] is non-singular"
    )))
}

/// Splits the pivot on `X` into edge pivots `(x_1,y_1),…,(x_m,y_m)` with `s` in the last pair.
pub fn decompose_set_pivot(g: &Graph, x: VertexSet, s: usize) -> Result<PivotPairing> {
    g.check_set(x)?;
    if x.is_empty() {
        return Err(Error::Precondition("X is empty".into()));
    }
    if !x.contains(s) {
        return Err(Error::Precondition(format!("vertex {s} is not in X")));
    }
    // a symmetric zero-diagonal matrix of odd order is singular over GF(2)
    if x.len() % 2 == 1 {
        return Err(Error::Singular(x.to_vec()));
    }
    let a = GF2Matrix::adjacency(g);
    if !a.is_nonsingular(x)? {
        return Err(Error::Singular(x.to_vec()));
    }

    let mut pairs = Vec::with_capacity(x.len() / 2);
    let mut cur = g.clone();
    let mut rest = x;
    while rest.len() > 2 {
        let (v, w) = find_pivotable_pair(&cur, rest, s)?;
        cur.pivot_in_place(v, w);
        pairs.push((v, w));
        rest = rest.difference(VertexSet::from_iter([v, w]));
    }
    let last = rest.to_vec();
    if !cur.has_edge(last[0], last[1]) {
        return Err(Error::Internal(format!(
            "final pair {}{} is not an edge",
            last[0], last[1]
        )));
    }
    cur.pivot_in_place(last[0], last[1]);
    pairs.push((last[0], last[1]));

    let expected = a.principal_pivot(x)?.to_graph()?;
    if !cur.same_adjacency(&expected) {
        return Err(Error::Internal("edge pivots do not reproduce A(G)*X".into()));
    }
    let covered: VertexSet = pairs.iter().flat_map(|&(p, q)| [p, q]).collect();
    if covered != x || covered.len() != 2 * pairs.len() {
        return Err(Error::Internal("pairs do not partition X".into()));
    }
    let &(p, q) = pairs.last().expect("X is non-empty");
    if s != p && s != q {
        return Err(Error::Internal(format!("{s} is not in the last pair")));
    }
    Ok(PivotPairing { pairs, s })
}

/// A host of bounded tree-depth together with a script reducing it to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostWitness {
    pub host: Graph,
    pub decomposition: TreeDepthDecomposition,
    pub script: Script,
    pub target: Graph,
    /// The claimed bound on `td(host)`.
    pub td_bound: usize,
    pub kind: MinorKind,
}

impl HostWitness {
    /// Checks the closure containment, the height bound, script locality and exact replay.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Certificate(m));
        if let Err(e) = self.decomposition.check(&self.host, self.td_bound) {
            return fail(format!("forest does not witness td <= {}: {e}", self.td_bound));
        }
        let n = self.target.n();
        let mut deleted = VertexSet::EMPTY;
        for (i, step) in self.script.steps().iter().enumerate() {
            match *step {
                Step::Lc { v } if v < n => return fail(format!("step {i} complements at target vertex {v}")),
                Step::Pivot { u, v } if u < n || v < n => {
                    return fail(format!("step {i} pivots on a target vertex"))
                }
                Step::Lc { .. } if self.kind == MinorKind::PivotMinor => {
                    return fail(format!("step {i} is a local complementation in a pivot-minor script"))
                }
                Step::Delete { v } => {
                    if v < n {
                        return fail(format!("step {i} deletes target vertex {v}"));
                    }
                    deleted.insert(v);
                }
                _ => {}
            }
        }
        let apexes = VertexSet::full(self.host.n()).difference(VertexSet::full(n));
        if deleted != apexes {
            return fail("deletions do not remove exactly the added vertices".into());
        }
        let out = apply_script(&self.host, &self.script)?;
        if !out.same_identified(&self.target) {
            return fail("replay does not reproduce the target".into());
        }
        Ok(())
    }

    /// The same witness as a minor certificate with the identity mapping.
    pub fn to_certificate(&self) -> Result<MinorCertificate> {
        let cert = MinorCertificate {
            kind: self.kind,
            host: self.host.clone().without_labels(),
            target: self.target.clone().without_labels(),
            script: self.script.clone(),
            mapping: (0..self.target.n()).collect(),
            matrix_witness: None,
        };
        cert.verify()?;
        Ok(cert)
    }
}

/// Accumulates host vertices: target vertices first, apexes appended.
struct HostBuilder {
    edges: Vec<(usize, usize)>,
    parent: Vec<Option<usize>>,
    labels: Vec<String>,
    script: Script,
}

impl HostBuilder {
    fn new(n: usize) -> Self {
        HostBuilder {
            edges: Vec::new(),
            parent: vec![None; n],
            labels: (0..n).map(|v| v.to_string()).collect(),
            script: Script::new(),
        }
    }

    fn add_apex(&mut self, label: String) -> Result<usize> {
        let id = self.parent.len();
        Error::check_capacity("host vertex count", id + 1, MAX_VERTICES)?;
        self.parent.push(None);
        self.labels.push(label);
        Ok(id)
    }

    fn finish(self, target: Graph, td_bound: usize, kind: MinorKind) -> Result<HostWitness> {
        let n = target.n();
        let host = Graph::from_edges(self.parent.len(), &self.edges)?.with_labels(self.labels)?;
        let mut script = self.script;
        for v in n..host.n() {
            script.push(Step::Delete { v });
        }
        let w = HostWitness {
            host,
            decomposition: TreeDepthDecomposition { parent: self.parent },
            script,
            target: target.with_identity_ids(),
            td_bound,
            kind,
        };
        w.verify()
            .map_err(|e| Error::Internal(format!("host witness failed: {e}")))?;
        Ok(w)
    }
}

fn path_label(prefix: &str, path: &[usize]) -> String {
    let mut s = format!("{prefix}@/");
    s.push_str(&path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("/"));
    s
}

/// Host of tree-depth at most `depth(D) + 1` with `eval_sc(D)` as a vertex-minor.
pub fn sc_to_vertex_minor_host(d: &ScDecomposition) -> Result<HostWitness> {
    let target = eval_sc(d)?;
    let mut b = HostBuilder::new(target.n());

    // returns the forest root of the subtree
    fn build(node: &ScNode, path: &mut Vec<usize>, b: &mut HostBuilder) -> Result<usize> {
        match node {
            ScNode::Leaf { leaf } => Ok(*leaf),
            ScNode::Node { children, x } => {
                let mut roots = Vec::with_capacity(children.len());
                for (i, c) in children.iter().enumerate() {
                    path.push(i);
                    roots.push(build(c, path, b)?);
                    path.pop();
                }
                let r = b.add_apex(path_label("r", path))?;
                for c in roots {
                    b.parent[c] = Some(r);
                }
                for v in *x {
                    b.edges.push((r, v));
                }
                b.script.push(Step::Lc { v: r });
                Ok(r)
            }
        }
    }

    build(&d.root, &mut Vec::new(), &mut b)?;
    b.finish(target, d.depth() + 1, MinorKind::VertexMinor)
}

/// Host of tree-depth at most `2 depth(D) + 1` with `eval_bsc(D)` as a pivot-minor.
pub fn bsc_to_pivot_minor_host(d: &BscDecomposition) -> Result<HostWitness> {
    let target = eval_bsc(d)?;
    let mut b = HostBuilder::new(target.n());

    fn build(node: &BscNode, path: &mut Vec<usize>, b: &mut HostBuilder) -> Result<usize> {
        match node {
            BscNode::Leaf { leaf } => Ok(*leaf),
            BscNode::Node { children, x, y } => {
                let mut roots = Vec::with_capacity(children.len());
                for (i, c) in children.iter().enumerate() {
                    path.push(i);
                    roots.push(build(c, path, b)?);
                    path.pop();
                }
                let rx = b.add_apex(path_label("rx", path))?;
                let ry = b.add_apex(path_label("ry", path))?;
                b.parent[ry] = Some(rx);
                for c in roots {
                    b.parent[c] = Some(ry);
                }
                b.edges.push((rx, ry));
                b.edges.extend(x.iter().map(|v| (rx, v)));
                b.edges.extend(y.iter().map(|v| (ry, v)));
                b.script.push(Step::Pivot { u: rx, v: ry });
                Ok(rx)
            }
        }
    }

    build(&d.root, &mut Vec::new(), &mut b)?;
    b.finish(target, 2 * d.depth() + 1, MinorKind::PivotMinor)
}

/// Rewrites every BSC node `(X, Y)` as SC nodes on `X`, then `Y`, then `X ∪ Y`.
pub fn sc_from_bsc(d: &BscDecomposition) -> Result<ScDecomposition> {
    fn conv(node: &BscNode) -> ScNode {
        match node {
            BscNode::Leaf { leaf } => ScNode::Leaf { leaf: *leaf },
            BscNode::Node { children, x, y } => {
                let inner = ScNode::Node {
                    children: children.iter().map(conv).collect(),
                    x: *x,
                };
                let mid = ScNode::Node {
                    children: vec![inner],
                    x: *y,
                };
                ScNode::Node {
                    children: vec![mid],
                    x: x.union(*y),
                }
            }
        }
    }
    let out = ScDecomposition { root: conv(&d.root) };
    if eval_sc(&out)? != eval_bsc(d)? {
        return Err(Error::Internal("converted SC decomposition evaluates differently".into()));
    }
    Ok(out)
}

/// Replaces every SC set `X` by the pair `(X ∩ A, X ∩ B)`.
pub fn bsc_from_sc_bipartite(d: &ScDecomposition, (a, b): (VertexSet, VertexSet)) -> Result<BscDecomposition> {
    let g = eval_sc(d)?;
    if !a.is_disjoint(b) || a.union(b) != g.vertices() {
        return Err(Error::Precondition("(A, B) is not a partition of the vertices".into()));
    }
    for (u, v) in g.edges() {
        if a.contains(u) == a.contains(v) {
            return Err(Error::Precondition(format!("edge {u}{v} lies inside one side")));
        }
    }
    fn conv(node: &ScNode, a: VertexSet, b: VertexSet) -> BscNode {
        match node {
            ScNode::Leaf { leaf } => BscNode::Leaf { leaf: *leaf },
            ScNode::Node { children, x } => BscNode::Node {
                children: children.iter().map(|c| conv(c, a, b)).collect(),
                x: x.intersection(a),
                y: x.intersection(b),
            },
        }
    }
    let out = BscDecomposition { root: conv(&d.root, a, b) };
    if eval_bsc(&out)? != g {
        return Err(Error::Internal("converted BSC decomposition evaluates differently".into()));
    }
    Ok(out)
}

/// `H_n`: `a_i` at index `2(i-1)`, `b_i` at `2(i-1)+1`.
pub fn make_hn(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Precondition("H_n needs n >= 1".into()));
    }
    Error::check_capacity("H_n vertex count", 2 * n, MAX_VERTICES)?;
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * (i - 1) + 1;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i < j {
                edges.push((b(i), b(j)));
            }
            edges.push((b(i), a(j)));
        }
    }
    let labels = (1..=n).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    Graph::from_edges(2 * n, &edges)?.with_labels(labels)
}

/// Pivot-minor certificate taking `H_n` to a path with `n` edges.
///
/// Pivoting `a_i b_i` exchanges the neighbourhoods of `a_i` and `b_i`, so
/// with vertices tracked through the pivots the path runs
/// `a_1, b_1, a_2, …, a_{n-1}, b_n`; the script deletes `b_2, …, b_{n-1}`
/// and `a_n`.
pub fn hn_path_certificate(n: usize) -> Result<MinorCertificate> {
    if n < 2 {
        return Err(Error::Precondition("the H_n path certificate needs n >= 2".into()));
    }
    let host = make_hn(n)?.without_labels().with_identity_ids();
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * (i - 1) + 1;
    let mut script = Script::new();
    let mut x = VertexSet::EMPTY;
    for i in 2..n {
        script.push(Step::Pivot { u: a(i), v: b(i) });
        x.insert(a(i));
        x.insert(b(i));
    }
    for i in 2..n {
        script.push(Step::Delete { v: b(i) });
    }
    script.push(Step::Delete { v: a(n) });
    let mapping: Vec<usize> = [a(1), b(1)]
        .into_iter()
        .chain((2..n).map(a))
        .chain([b(n)])
        .collect();
    let cert = MinorCertificate {
        kind: MinorKind::PivotMinor,
        host,
        target: Graph::path(n + 1),
        script,
        mapping: mapping.clone(),
        matrix_witness: Some(MatrixWitness {
            x,
            y: mapping.into_iter().collect(),
        }),
    };
    cert.verify()
        .map_err(|e| Error::Internal(format!("H_{n} path certificate failed: {e}")))?;
    Ok(cert)
}

pub const CLIQUE_EXPERIMENT_MAX_DEPTH: usize = 3;
pub const CLIQUE_EXPERIMENT_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub graph6: String,
    pub td: usize,
    pub clique: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueBoundReport {
    pub d: usize,
    pub n_max: usize,
    pub bound: usize,
    pub max_found: usize,
    pub graphs_checked: usize,
    pub within_bound: bool,
    pub witnesses: Vec<CliqueWitness>,
}

/// Largest clique pivot-minor over connected graphs with `n <= n_max` and `td <= d`.
///
/// `corpus`, when given, replaces the generated graphs; disconnected or
/// oversized entries are skipped. Work is split into `threads` contiguous
/// shards and merged in order, so the report does not depend on `threads`.
pub fn clique_bound_experiment(
    d: usize,
    n_max: usize,
    corpus: Option<Vec<Graph>>,
    threads: usize,
) -> Result<CliqueBoundReport> {
    Error::check_capacity("experiment depth", d, CLIQUE_EXPERIMENT_MAX_DEPTH)?;
    Error::check_capacity("experiment vertex count", n_max, CLIQUE_EXPERIMENT_MAX_N)?;
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let graphs: Vec<Graph> = match corpus {
        Some(c) => c
            .into_iter()
            .filter(|g| g.n() >= 1 && g.n() <= n_max && g.is_connected())
            .collect(),
        None => (1..=n_max).flat_map(connected_graphs).collect(),
    };

    let check = |g: &Graph| -> Result<Option<CliqueWitness>> {
        let (td, _) = tree_depth(g)?;
        if td > d {
            return Ok(None);
        }
        let (t, _) = max_clique_pivot_minor(g)?;
        Ok(Some(CliqueWitness {
            graph6: to_graph6(g),
            td,
            clique: t,
        }))
    };
    let threads = threads.max(1);
    let chunk = graphs.len().div_ceil(threads).max(1);
    let results: Vec<Result<Vec<Option<CliqueWitness>>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(check).collect::<Result<Vec<_>>>()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut found = Vec::new();
    for r in results {
        found.extend(r?.into_iter().flatten());
    }
    let max_found = found.iter().map(|w| w.clique).max().unwrap_or(0);
    let bound = 3usize.pow(d as u32 - 1);
    Ok(CliqueBoundReport {
        d,
        n_max,
        bound,
        max_found,
        graphs_checked: found.len(),
        within_bound: max_found <= bound,
        witnesses: found.into_iter().filter(|w| w.clique == max_found).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::shrub::{bsc_depth, sc_depth};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn pivotable_pair_examples() {
        // path 0-1-2-3, avoiding 0: edges inside {1,2,3} are 12 and 23
        assert_eq!(find_pivotable_pair(&Graph::path(4), set(&[0, 1, 2, 3]), 0).unwrap(), (1, 2));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_pivotable_pair(&two_k2, set(&[0, 1, 2, 3]), 0).unwrap(), (2, 3));
        assert_eq!(find_pivotable_pair(&two_k2, set(&[0, 1, 2, 3]), 3).unwrap(), (0, 1));
        // a star on four vertices is singular
        assert!(matches!(
            find_pivotable_pair(&Graph::star(3), set(&[0, 1, 2, 3]), 0),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let g = Graph::path(3);
        let p = decompose_set_pivot(&g, set(&[1, 2]), 2).unwrap();
        assert_eq!(p.pairs, vec![(1, 2)]);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        for s in 0..4 {
            let p = decompose_set_pivot(&two_k2, set(&[0, 1, 2, 3]), s).unwrap();
            assert_eq!(p.pairs.len(), 2);
            let last = p.pairs[1];
            assert!(last.0 == s || last.1 == s);
        }
        assert!(matches!(decompose_set_pivot(&g, VertexSet::EMPTY, 0), Err(Error::Precondition(_))));
        assert!(matches!(decompose_set_pivot(&g, set(&[0, 1, 2]), 0), Err(Error::Singular(_))));
        assert!(matches!(decompose_set_pivot(&g, set(&[0, 2]), 0), Err(Error::Singular(_))));
    }

    #[test]
    fn sc_host_examples() {
        let leaf = ScDecomposition { root: ScNode::Leaf { leaf: 0 } };
        let w = sc_to_vertex_minor_host(&leaf).unwrap();
        assert_eq!(w.host.n(), 1);
        assert!(w.script.is_empty());

        let kn = ScDecomposition {
            root: ScNode::Node {
                children: (0..4).map(|leaf| ScNode::Leaf { leaf }).collect(),
                x: VertexSet::full(4),
            },
        };
        let w = sc_to_vertex_minor_host(&kn).unwrap();
        assert!(crate::canon::is_isomorphic(&w.host, &Graph::star(4)).unwrap());
        assert_eq!(w.script, Script(vec![Step::Lc { v: 4 }, Step::Delete { v: 4 }]));
        assert_eq!(tree_depth(&w.host).unwrap().0, 2);
        assert_eq!(w.host.label(4), Some("r@/"));
        w.to_certificate().unwrap();
    }

    #[test]
    fn bsc_host_examples() {
        let kmn = BscDecomposition {
            root: BscNode::Node {
                children: (0..5).map(|leaf| BscNode::Leaf { leaf }).collect(),
                x: set(&[0, 1]),
                y: set(&[2, 3, 4]),
            },
        };
        let w = bsc_to_pivot_minor_host(&kmn).unwrap();
        assert_eq!(
            w.script,
            Script(vec![Step::Pivot { u: 5, v: 6 }, Step::Delete { v: 5 }, Step::Delete { v: 6 }])
        );
        assert!(tree_depth(&w.host).unwrap().0 <= 3);
        assert_eq!(w.target, Graph::complete_bipartite(2, 3));
        w.to_certificate().unwrap();
    }

    #[test]
    fn hosts_from_searched_decompositions() {
        for g in [Graph::path(5), Graph::cycle(5), Graph::complete(4)] {
            let (k, d) = sc_depth(&g).unwrap();
            let w = sc_to_vertex_minor_host(&d).unwrap();
            assert!(tree_depth(&w.host).unwrap().0 <= k + 1);
            let (k, d) = bsc_depth(&g).unwrap();
            let w = bsc_to_pivot_minor_host(&d).unwrap();
            assert!(tree_depth(&w.host).unwrap().0 <= 2 * k + 1);
        }
    }

    #[test]
    fn conversions() {
        let single = BscDecomposition {
            root: BscNode::Node {
                children: (0..3).map(|leaf| BscNode::Leaf { leaf }).collect(),
                x: set(&[0]),
                y: set(&[1, 2]),
            },
        };
        let sc = sc_from_bsc(&single).unwrap();
        assert_eq!(sc.depth(), 3);
        assert_eq!(eval_sc(&sc).unwrap(), Graph::star(2));

        let g = Graph::complete_bipartite(2, 2);
        let (k, d) = sc_depth(&g).unwrap();
        let b = bsc_from_sc_bipartite(&d, g.bipartition().unwrap()).unwrap();
        assert!(b.depth() <= k);
        assert_eq!(eval_bsc(&b).unwrap(), g);
        assert!(matches!(
            bsc_from_sc_bipartite(&sc_depth(&Graph::complete(3)).unwrap().1, (set(&[0]), set(&[1, 2]))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn hn_examples() {
        let h1 = make_hn(1).unwrap();
        assert_eq!(h1.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let h2 = make_hn(2).unwrap();
        // a1=0 b1=1 a2=2 b2=3
        assert_eq!(h2.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (1, 3), (2, 3)]);
        for n in 1..=10 {
            assert!(!make_hn(n).unwrap().has_induced_p4());
        }
        assert!(make_hn(0).is_err());
        let c = hn_path_certificate(2).unwrap();
        assert_eq!(c.script, Script(vec![Step::Delete { v: 2 }]));
        let c = hn_path_certificate(4).unwrap();
        assert_eq!(
            &c.script.steps()[..2],
            &[Step::Pivot { u: 2, v: 3 }, Step::Pivot { u: 4, v: 5 }]
        );
        assert_eq!(c.target.edge_count(), 4);
        // survivors a1 b1 a2 a3 b4
        assert_eq!(c.mapping, vec![0, 1, 2, 4, 7]);
        assert!(hn_path_certificate(1).is_err());
    }

    #[test]
    fn clique_experiment_small() {
        let r = clique_bound_experiment(1, 5, None, 1).unwrap();
        assert_eq!(r.max_found, 1);
        assert_eq!(r.graphs_checked, 1);
        let a = clique_bound_experiment(2, 5, None, 1).unwrap();
        let b = clique_bound_experiment(2, 5, None, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.within_bound);
        assert!(matches!(clique_bound_experiment(4, 5, None, 1), Err(Error::Capacity { .. })));
    }
}
