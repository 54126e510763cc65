//! Slow reference implementations on dense boolean matrices. Nothing here
//! calls into the library's rewriting, linear algebra or search code.

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Adj = Vec<Vec<bool>>;

pub fn empty(n: usize) -> Adj {
    vec![vec![false; n]; n]
}

pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut a = empty(n);
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Flip every pair of neighbours of `v`.
pub fn local_complement(a: &Adj, v: usize) -> Adj {
    let n = a.len();
    let nb: Vec<usize> = (0..n).filter(|&w| a[v][w]).collect();
    let mut b = a.clone();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            b[x][y] = !b[x][y];
            b[y][x] = !b[y][x];
        }
    }
    b
}

pub fn pivot(a: &Adj, u: usize, v: usize) -> Adj {
    assert!(a[u][v], "oracle pivot on a non-edge");
    local_complement(&local_complement(&local_complement(a, u), v), u)
}

pub fn delete(a: &Adj, v: usize) -> Adj {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != v).map(|(_, &b)| b).collect())
        .collect()
}

pub fn induced(a: &Adj, keep: &[usize]) -> Adj {
    keep.iter().map(|&i| keep.iter().map(|&j| a[i][j]).collect()).collect()
}

pub fn edge_count(a: &Adj) -> usize {
    let n = a.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| a[u][v]).count()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper triangle read row by row.
fn code(a: &Adj, p: &[usize]) -> Vec<bool> {
    let n = a.len();
    let mut c = Vec::with_capacity(n * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            c.push(a[p[i]][p[j]]);
        }
    }
    c
}

/// Isomorphism invariant: the largest code over all vertex orders.
pub struct BruteCanon {
    perms: Vec<Vec<Vec<usize>>>,
}

impl BruteCanon {
    pub fn new(max_n: usize) -> Self {
        BruteCanon {
            perms: (0..=max_n).map(permutations).collect(),
        }
    }

    pub fn form(&self, a: &Adj) -> (usize, Vec<bool>) {
        let best = self.perms[a.len()].iter().map(|p| code(a, p)).max().unwrap_or_default();
        (a.len(), best)
    }
}

/// Isomorphism classes on `n` vertices by canonising every labelled graph.
pub fn classes(n: usize, canon: &BruteCanon) -> Vec<Adj> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let a = from_edges(n, &edges);
        if seen.insert(canon.form(&a)) {
            out.push(a);
        }
    }
    out
}

/// Every graph reachable from `a` by edge pivots and deletions, up to isomorphism.
pub fn pivot_minor_closure(a: &Adj, canon: &BruteCanon) -> HashSet<(usize, Vec<bool>)> {
    let mut seen: HashSet<Adj> = HashSet::new();
    let mut forms = HashSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    seen.insert(a.clone());
    while let Some(g) = queue.pop_front() {
        forms.insert(canon.form(&g));
        let n = g.len();
        let mut next = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if g[u][v] {
                    next.push(pivot(&g, u, v));
                }
            }
            next.push(delete(&g, u));
        }
        for h in next {
            if !h.is_empty() && seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    forms
}

/// Graphs reachable by edge pivots alone, labelled.
pub fn pivot_class(a: &Adj) -> Vec<Adj> {
    let mut seen: BTreeSet<Adj> = BTreeSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    seen.insert(a.clone());
    while let Some(g) = queue.pop_front() {
        let n = g.len();
        for u in 0..n {
            for v in u + 1..n {
                if g[u][v] {
                    let h = pivot(&g, u, v);
                    if seen.insert(h.clone()) {
                        queue.push_back(h);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

pub fn clique_number(a: &Adj) -> usize {
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if vs.len() > best && vs.iter().all(|&x| vs.iter().all(|&y| x == y || a[x][y])) {
            best = vs.len();
        }
    }
    best
}

pub fn chromatic_number(a: &Adj) -> usize {
    let n = a.len();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colour = vec![0usize; n];
        // odometer over all k^n colourings
        loop {
            let ok = (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || colour[u] != colour[v]));
            if ok {
                return k;
            }
            let mut i = 0;
            while i < n && colour[i] == k - 1 {
                colour[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colour[i] += 1;
        }
    }
    n
}

pub fn is_bipartite(a: &Adj) -> bool {
    chromatic_number(a) <= 2
}

pub fn has_induced_p4(a: &Adj) -> bool {
    let n = a.len();
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let vs = [w, x, y, z];
                    if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
                        continue;
                    }
                    if a[w][x] && a[x][y] && a[y][z] && !a[w][y] && !a[w][z] && !a[x][z] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn is_connected(a: &Adj) -> bool {
    let n = a.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Checks a parent array is a forest of height at most `max_height` whose
/// ancestor closure contains every edge.
pub fn forest_witnesses(a: &Adj, parent: &[Option<usize>], max_height: usize) -> bool {
    let n = a.len();
    if parent.len() != n {
        return false;
    }
    let mut ancestors = vec![Vec::new(); n];
    for v in 0..n {
        let mut cur = parent[v];
        while let Some(p) = cur {
            if p >= n || ancestors[v].len() > n {
                return false;
            }
            ancestors[v].push(p);
            cur = parent[p];
        }
        if ancestors[v].len() > max_height {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || ancestors[u].contains(&v) || ancestors[v].contains(&u)))
}

/// Dense GF(2) matrices.
pub type Mat = Vec<Vec<u8>>;

pub fn adjacency_matrix(a: &Adj) -> Mat {
    a.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect()
}

pub fn submatrix(m: &Mat, rows: &[usize], cols: &[usize]) -> Mat {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect()
}

/// Inverse by Gauss-Jordan elimination, `None` when singular.
pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut r = m[i].clone();
            r.extend((0..n).map(|j| (i == j) as u8));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| aug[r][c] == 1)?;
        aug.swap(c, p);
        for r in 0..n {
            if r != c && aug[r][c] == 1 {
                for k in 0..2 * n {
                    aug[r][k] ^= aug[c][k];
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn nonsingular(m: &Mat, s: &[usize]) -> bool {
    inverse(&submatrix(m, s, s)).is_some()
}

fn mul(a: &Mat, b: &Mat, c: usize) -> Mat {
    let (r, k) = (a.len(), b.len());
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).fold(0, |acc, t| acc ^ (a[i][t] & b[t][j]))).collect())
        .collect()
}

/// Principal pivot transform by the block formula, `None` when `M[S]` is singular.
pub fn principal_pivot(m: &Mat, s: &[usize]) -> Option<Mat> {
    let n = m.len();
    let t: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
    let ainv = inverse(&submatrix(m, s, s))?;
    let b = submatrix(m, s, &t);
    let c = submatrix(m, &t, s);
    let d = submatrix(m, &t, &t);
    let ab = mul(&ainv, &b, t.len());
    let ca = mul(&c, &ainv, s.len());
    let cab = mul(&ca, &b, t.len());
    let mut out = vec![vec![0u8; n]; n];
    for (i, &si) in s.iter().enumerate() {
        for (j, &sj) in s.iter().enumerate() {
            out[si][sj] = ainv[i][j];
        }
        for (j, &tj) in t.iter().enumerate() {
            out[si][tj] = ab[i][j];
        }
    }
    for (i, &ti) in t.iter().enumerate() {
        for (j, &sj) in s.iter().enumerate() {
            out[ti][sj] = ca[i][j];
        }
        for (j, &tj) in t.iter().enumerate() {
            out[ti][tj] = d[i][j] ^ cab[i][j];
        }
    }
    Some(out)
}

/// Plain graph6 encoder for `n < 63`.
pub fn graph6(a: &Adj) -> String {
    let n = a.len();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(a[i][j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// Tree-depth by trying every root in every connected piece.
pub fn tree_depth(a: &Adj) -> usize {
    fn td(a: &Adj, vs: &[usize]) -> usize {
        if vs.is_empty() {
            return 0;
        }
        let comps = components(a, vs);
        if comps.len() > 1 {
            return comps.iter().map(|c| td(a, c)).max().unwrap();
        }
        if vs.len() == 1 {
            return 1;
        }
        vs.iter()
            .map(|&r| {
                let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != r).collect();
                1 + td(a, &rest)
            })
            .min()
            .unwrap()
    }
    let all: Vec<usize> = (0..a.len()).collect();
    td(a, &all)
}

fn components(a: &Adj, vs: &[usize]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = vs.to_vec();
    let mut out = Vec::new();
    while let Some(s) = left.pop() {
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            let (nb, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&w| a[u][w]);
            comp.extend(nb);
            left = rest;
            i += 1;
        }
        out.push(comp);
    }
    out
}
