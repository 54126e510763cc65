//! Scripts of local complementations, pivots and deletions; minor
//! certificates; local-equivalence orbits; vertex-minor and pivot-minor
//! containment.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canon::{canonical_form, canonical_labeling, find_induced_embedding, CanonicalForm};
use crate::constructions::decompose_set_pivot;
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::graph::{Graph, VertexSet};
use crate::graph6::{from_graph6, to_graph6};

/// Default cap on the number of isomorphism classes explored per orbit.
pub const DEFAULT_NODE_LIMIT: usize = 100_000;

/// Host size limit for vertex-minor and pivot-minor searches.
pub const MINOR_SEARCH_LIMIT: usize = 10;

/// Host size limit for the clique pivot-minor search.
pub const CLIQUE_SEARCH_LIMIT: usize = 9;

/// Orbit enumeration works on graphs up to the canonical labelling limit.
pub const ORBIT_LIMIT: usize = 12;

/// One rewriting step. Vertices are host ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Step {
    Lc { v: usize },
    Pivot { u: usize, v: usize },
    Delete { v: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Script(pub Vec<Step>);

impl Script {
    pub fn new() -> Self {
        Script(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn push(&mut self, step: Step) {
        self.0.push(step);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The same script with every pivot written as three local complementations.
    pub fn expand_pivots(&self) -> Script {
        let mut out = Script::new();
        for &s in &self.0 {
            match s {
                Step::Pivot { u, v } => {
                    out.push(Step::Lc { v: u });
                    out.push(Step::Lc { v });
                    out.push(Step::Lc { v: u });
                }
                other => out.push(other),
            }
        }
        out
    }
}

impl FromIterator<Step> for Script {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Script(iter.into_iter().collect())
    }
}

/// Replays `script` on `g`, resolving vertices by id. Deleted vertices
/// disappear; surviving vertices keep their ids.
pub fn apply_script(g: &Graph, script: &Script) -> Result<Graph> {
    let mut cur = g.clone();
    for (index, step) in script.0.iter().enumerate() {
        let find = |cur: &Graph, id: usize| {
            cur.index_of_id(id).ok_or_else(|| Error::Script {
                index,
                msg: format!("vertex {id} is not present"),
            })
        };
        match *step {
            Step::Lc { v } => {
                let i = find(&cur, v)?;
                cur.local_complement_in_place(i);
            }
            Step::Pivot { u, v } => {
                let (i, j) = (find(&cur, u)?, find(&cur, v)?);
                if !cur.has_edge(i, j) {
                    return Err(Error::Script {
                        index,
                        msg: format!("pivot on non-edge {u}{v}"),
                    });
                }
                cur.pivot_in_place(i, j);
            }
            Step::Delete { v } => {
                let i = find(&cur, v)?;
                cur = cur.delete_vertex(i)?;
            }
        }
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinorKind {
    VertexMinor,
    PivotMinor,
}

/// `(X, Y)` with `A(host)[X]` non-singular and `(A(host)*X)[Y]` the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixWitness {
    pub x: VertexSet,
    pub y: VertexSet,
}

/// Witness that `target` is a vertex-minor or pivot-minor of `host`.
///
/// `mapping[i]` is the host id that target vertex `i` ends up as. Hosts
/// carry identity ids, so ids and indices coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    pub kind: MinorKind,
    pub host: Graph,
    pub target: Graph,
    pub script: Script,
    pub mapping: Vec<usize>,
    pub matrix_witness: Option<MatrixWitness>,
}

impl MinorCertificate {
    /// Replays the script and checks the result against the target under the mapping.
    pub fn verify(&self) -> Result<()> {
        let reject = |m: String| Err(Error::Certificate(m));
        if self.host.ids().iter().enumerate().any(|(i, &id)| i != id) {
            return reject("host must carry identity ids".into());
        }
        if self.kind == MinorKind::PivotMinor {
            if let Some(i) = self.script.0.iter().position(|s| matches!(s, Step::Lc { .. })) {
                return reject(format!("step {i} is a local complementation in a pivot-minor script"));
            }
        }
        let result = apply_script(&self.host, &self.script)?;
        let t = &self.target;
        if self.mapping.len() != t.n() {
            return reject(format!(
                "mapping covers {} vertices, target has {}",
                self.mapping.len(),
                t.n()
            ));
        }
        if result.n() != t.n() {
            return reject(format!(
                "replay leaves {} vertices, target has {}",
                result.n(),
                t.n()
            ));
        }
        let mut pos = Vec::with_capacity(t.n());
        for (i, &id) in self.mapping.iter().enumerate() {
            match result.index_of_id(id) {
                Some(p) if !pos.contains(&p) => pos.push(p),
                Some(_) => return reject(format!("host vertex {id} is mapped twice")),
                None => return reject(format!("target vertex {i} maps to deleted host vertex {id}")),
            }
        }
        for u in 0..t.n() {
            for v in u + 1..t.n() {
                if t.has_edge(u, v) != result.has_edge(pos[u], pos[v]) {
                    return reject(format!("replay disagrees with target on pair {u},{v}"));
                }
            }
        }
        if let Some(w) = self.matrix_witness {
            if self.kind != MinorKind::PivotMinor {
                return reject("matrix witness on a vertex-minor certificate".into());
            }
            let a = GF2Matrix::adjacency(&self.host);
            if !a.is_nonsingular(w.x)? {
                return reject(format!("A(host)[X] is singular for X = {:?}", w.x));
            }
            let expected_y: VertexSet = self.mapping.iter().copied().collect();
            if w.y != expected_y {
                return reject("matrix witness Y differs from the mapped vertices".into());
            }
            let p = a.principal_pivot(w.x)?;
            for u in 0..t.n() {
                for v in u + 1..t.n() {
                    if t.has_edge(u, v) != p.get(self.mapping[u], self.mapping[v]) {
                        return reject(format!("(A*X)[Y] disagrees with target on pair {u},{v}"));
                    }
                }
            }
            for y in w.y {
                if p.get(y, y) {
                    return reject("(A*X)[Y] has a non-zero diagonal".into());
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            kind: self.kind,
            host: to_graph6(&self.host),
            target: to_graph6(&self.target),
            script: self.script.clone(),
            mapping: self.mapping.clone(),
            matrix_witness: self.matrix_witness.map(|w| MatrixWitnessJson {
                x: w.x.to_vec(),
                y: w.y.to_vec(),
            }),
        }
    }

    pub fn from_json(j: &CertificateJson) -> Result<Self> {
        let host = from_graph6(&j.host)?;
        let target = from_graph6(&j.target)?;
        let to_set = |v: &[usize], what: &str| -> Result<VertexSet> {
            for &x in v {
                if x >= host.n() {
                    return Err(Error::Certificate(format!("{what} names vertex {x} outside the host")));
                }
            }
            Ok(v.iter().copied().collect())
        };
        let matrix_witness = match &j.matrix_witness {
            Some(w) => Some(MatrixWitness {
                x: to_set(&w.x, "X")?,
                y: to_set(&w.y, "Y")?,
            }),
            None => None,
        };
        Ok(MinorCertificate {
            kind: j.kind,
            host,
            target,
            script: j.script.clone(),
            mapping: j.mapping.clone(),
            matrix_witness,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serialisable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: CertificateJson = serde_json::from_str(s).map_err(|e| Error::Parse {
            offset: e.column().saturating_sub(1),
            msg: e.to_string(),
        })?;
        Self::from_json(&j)
    }
}

/// Serialised certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: MinorKind,
    pub host: String,
    pub target: String,
    pub script: Script,
    #[serde(serialize_with = "ser_mapping", deserialize_with = "de_mapping")]
    pub mapping: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_witness: Option<MatrixWitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixWitnessJson {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
}

fn ser_mapping<S: Serializer>(m: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (i, v) in m.iter().enumerate() {
        map.serialize_entry(&i.to_string(), v)?;
    }
    map.end()
}

fn de_mapping<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<usize>, D::Error> {
    use serde::de::Error as _;
    let raw: BTreeMap<String, usize> = BTreeMap::deserialize(d)?;
    let mut out = vec![None; raw.len()];
    for (k, v) in raw {
        let i: usize = k
            .parse()
            .map_err(|_| D::Error::custom(format!("mapping key {k:?} is not an integer")))?;
        if i >= out.len() || out[i].is_some() {
            return Err(D::Error::custom(format!("mapping keys must be 0..{}", out.len())));
        }
        out[i] = Some(v);
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

/// A graph of the orbit with a script reaching it from the start graph.
#[derive(Clone, Debug)]
pub struct OrbitMember {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub script: Script,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub members: Vec<OrbitMember>,
    /// Set when the node limit stopped the search before the orbit closed.
    pub truncated: bool,
}

/// Breadth-first enumeration of the graphs locally equivalent to `g`, up to isomorphism.
pub fn local_equivalence_orbit(g: &Graph, node_limit: usize) -> Result<Orbit> {
    Error::check_capacity("vertex count for orbit enumeration", g.n(), ORBIT_LIMIT)?;
    let host = g.clone().with_identity_ids();
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    let first = OrbitMember {
        form: canonical_labeling(&host).0,
        graph: host,
        script: Script::new(),
    };
    index.insert(first.form.clone(), 0);
    let mut members = vec![first];
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(i) = queue.pop_front() {
        for v in 0..g.n() {
            let mut next = members[i].graph.clone();
            next.local_complement_in_place(v);
            let form = canonical_labeling(&next).0;
            if index.contains_key(&form) {
                continue;
            }
            if members.len() >= node_limit {
                truncated = true;
                continue;
            }
            let mut script = members[i].script.clone();
            script.push(Step::Lc { v: next.id(v) });
            index.insert(form.clone(), members.len());
            queue.push_back(members.len());
            members.push(OrbitMember {
                form,
                graph: next,
                script,
            });
        }
        if truncated {
            break;
        }
    }
    Ok(Orbit { members, truncated })
}

fn deletion_steps(n: usize, keep: VertexSet) -> impl Iterator<Item = Step> {
    VertexSet::full(n).difference(keep).into_iter().map(|v| Step::Delete { v })
}

/// Decides whether `h` is a vertex-minor of `g`, returning a verified certificate if so.
///
/// A deletion never interacts with a later local complementation at a
/// different vertex, so every vertex-minor is an induced subgraph of a
/// locally equivalent graph. The search walks the orbit of `g` and looks
/// for an induced copy of `h` in each member.
pub fn is_vertex_minor(g: &Graph, h: &Graph) -> Result<Option<MinorCertificate>> {
    Error::check_capacity("host size for vertex-minor search", g.n(), MINOR_SEARCH_LIMIT)?;
    if h.n() > g.n() {
        return Ok(None);
    }
    let host = g.clone().with_identity_ids();
    let orbit = local_equivalence_orbit(&host, DEFAULT_NODE_LIMIT)?;
    for m in &orbit.members {
        if let Some(map) = find_induced_embedding(&m.graph, h, m.graph.vertices()) {
            let keep: VertexSet = map.iter().copied().collect();
            let mut script = m.script.clone();
            script.0.extend(deletion_steps(g.n(), keep));
            let cert = MinorCertificate {
                kind: MinorKind::VertexMinor,
                host,
                target: h.clone().with_identity_ids(),
                script,
                mapping: map,
                matrix_witness: None,
            };
            cert.verify()
                .map_err(|e| Error::Internal(format!("vertex-minor certificate failed: {e}")))?;
            return Ok(Some(cert));
        }
    }
    if orbit.truncated {
        return Err(Error::capacity("orbit size", orbit.members.len(), DEFAULT_NODE_LIMIT));
    }
    Ok(None)
}

/// Even-size subsets of `0..n` in ascending size, then ascending bitmask.
/// Odd principal submatrices of a symmetric zero-diagonal GF(2) matrix are
/// always singular, so only even sizes can be pivot sets.
pub fn even_subsets_ascending(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<u64> = (0..1u64 << n).filter(|s| s.count_ones() % 2 == 0).collect();
    all.sort_by_key(|s| (s.count_ones(), *s));
    all.into_iter().map(VertexSet).collect()
}

/// Builds and verifies the pivot-minor certificate for the witness `(x, map)`.
pub(crate) fn pivot_certificate(
    host: &Graph,
    target: &Graph,
    x: VertexSet,
    map: Vec<usize>,
) -> Result<MinorCertificate> {
    let mut script = Script::new();
    if let Some(s) = x.first() {
        let pairing = decompose_set_pivot(host, x, s)?;
        for (u, v) in pairing.pairs {
            script.push(Step::Pivot { u, v });
        }
    }
    let y: VertexSet = map.iter().copied().collect();
    script.0.extend(deletion_steps(host.n(), y));
    let cert = MinorCertificate {
        kind: MinorKind::PivotMinor,
        host: host.clone(),
        target: target.clone().with_identity_ids(),
        script,
        mapping: map,
        matrix_witness: Some(MatrixWitness { x, y }),
    };
    cert.verify()
        .map_err(|e| Error::Internal(format!("pivot-minor certificate failed: {e}")))?;
    Ok(cert)
}

/// Decides whether `h` is a pivot-minor of `g` by enumerating pivot sets `X`.
pub fn is_pivot_minor(g: &Graph, h: &Graph) -> Result<Option<MinorCertificate>> {
    Error::check_capacity("host size for pivot-minor search", g.n(), MINOR_SEARCH_LIMIT)?;
    if h.n() > g.n() {
        return Ok(None);
    }
    let host = g.clone().with_identity_ids();
    let a = GF2Matrix::adjacency(&host);
    for x in even_subsets_ascending(g.n()) {
        if !a.is_nonsingular(x)? {
            continue;
        }
        let pivoted = a.principal_pivot(x)?.to_graph()?;
        if let Some(map) = find_induced_embedding(&pivoted, h, pivoted.vertices()) {
            return pivot_certificate(&host, h, x, map).map(Some);
        }
    }
    Ok(None)
}

/// Rewrites a pivot-minor certificate as a vertex-minor certificate.
pub fn pivot_minor_to_vertex_minor(c: &MinorCertificate) -> Result<MinorCertificate> {
    if c.kind != MinorKind::PivotMinor {
        return Err(Error::Precondition("certificate is not a pivot-minor certificate".into()));
    }
    c.verify()?;
    let out = MinorCertificate {
        kind: MinorKind::VertexMinor,
        host: c.host.clone(),
        target: c.target.clone(),
        script: c.script.expand_pivots(),
        mapping: c.mapping.clone(),
        matrix_witness: None,
    };
    out.verify()
        .map_err(|e| Error::Internal(format!("expanded certificate failed: {e}")))?;
    Ok(out)
}

/// Largest `t` such that `K_t` is a pivot-minor of `g`, with a certificate.
pub fn max_clique_pivot_minor(g: &Graph) -> Result<(usize, MinorCertificate)> {
    Error::check_capacity("host size for clique pivot-minor search", g.n(), CLIQUE_SEARCH_LIMIT)?;
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let host = g.clone().with_identity_ids();
    let a = GF2Matrix::adjacency(&host);
    let mut best: Option<(usize, VertexSet, VertexSet)> = None;
    for x in even_subsets_ascending(g.n()) {
        if !a.is_nonsingular(x)? {
            continue;
        }
        let pivoted = a.principal_pivot(x)?.to_graph()?;
        let clique = pivoted.max_clique();
        if best.is_none_or(|(t, _, _)| clique.len() > t) {
            best = Some((clique.len(), x, clique));
            if clique.len() == g.n() {
                break;
            }
        }
    }
    let (t, x, clique) = best.expect("X = ∅ is always non-singular");
    let cert = pivot_certificate(&host, &Graph::complete(t), x, clique.to_vec())?;
    Ok((t, cert))
}

/// Number of edges of a longest induced path in `g`, capped at `cap`.
pub fn longest_induced_path(g: &Graph, cap: usize) -> usize {
    fn extend(g: &Graph, last: usize, path: VertexSet, len: usize, cap: usize, best: &mut usize) {
        *best = (*best).max(len);
        if *best >= cap {
            return;
        }
        let others = path.difference(VertexSet::singleton(last));
        for w in g.neighbours(last).difference(path) {
            if others.iter().any(|p| g.has_edge(p, w)) {
                continue;
            }
            extend(g, w, path.union(VertexSet::singleton(w)), len + 1, cap, best);
        }
    }
    let mut best = 0;
    for v in 0..g.n() {
        extend(g, v, VertexSet::singleton(v), 0, cap, &mut best);
        if best >= cap {
            break;
        }
    }
    best.min(cap)
}

/// Largest path length (in edges, at most `t_max`) realisable as a vertex-minor of `g`.
pub fn max_path_vertex_minor(g: &Graph, t_max: usize) -> Result<usize> {
    Error::check_capacity("host size for path vertex-minor search", g.n(), MINOR_SEARCH_LIMIT)?;
    let orbit = local_equivalence_orbit(g, DEFAULT_NODE_LIMIT)?;
    let mut best = 0;
    for m in &orbit.members {
        best = best.max(longest_induced_path(&m.graph, t_max));
        if best >= t_max {
            return Ok(t_max);
        }
    }
    if orbit.truncated {
        return Err(Error::capacity("orbit size", orbit.members.len(), DEFAULT_NODE_LIMIT));
    }
    Ok(best)
}

/// Canonical form helper used by callers that key results by isomorphism class.
pub fn orbit_contains(orbit: &Orbit, h: &Graph) -> Result<bool> {
    let f = canonical_form(h)?;
    Ok(orbit.members.iter().any(|m| m.form == f))
}
