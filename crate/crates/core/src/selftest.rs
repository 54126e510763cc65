//! Quick property checks over small corpora, run by `vm selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::constructions::{
    bsc_to_pivot_minor_host, decompose_set_pivot, hn_path_certificate, sc_to_vertex_minor_host,
};
use crate::depth::{bsc_depth, eval_bsc, eval_sc, sc_depth, tree_depth, verify_td};
use crate::enumerate::{all_graphs, graphs_up_to};
use crate::error::Result;
use crate::gf2::{check_pivot_composition, check_tucker, GF2Matrix};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{from_graph6, to_graph6};
use crate::minors::MinorCertificate;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub detail: Option<String>,
}

fn outcome(name: &'static str, run: impl FnOnce() -> Result<(usize, Option<String>)>) -> CheckOutcome {
    match run() {
        Ok((cases, None)) => CheckOutcome { name, cases, passed: true, detail: None },
        Ok((cases, Some(d))) => CheckOutcome { name, cases, passed: false, detail: Some(d) },
        Err(e) => CheckOutcome { name, cases: 0, passed: false, detail: Some(e.to_string()) },
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Runs every check; the seed fixes the random cases.
pub fn run_selftest(seed: u64) -> Vec<CheckOutcome> {
    let small = graphs_up_to(5);
    let mut out = Vec::new();

    out.push(outcome("involutions", || {
        let mut cases = 0;
        for g in &small {
            let n = g.n();
            for v in 0..n {
                cases += 1;
                if g.local_complement(v)?.local_complement(v)? != *g {
                    return Ok((cases, Some(format!("LC at {v} on {}", to_graph6(g)))));
                }
            }
            for (u, v) in g.edges() {
                cases += 1;
                let p = g.pivot_edge(u, v)?;
                if p != g.pivot_edge(v, u)? || p.pivot_edge(u, v)? != *g {
                    return Ok((cases, Some(format!("pivot {u}{v} on {}", to_graph6(g)))));
                }
            }
            let x = VertexSet(((1u64 << n) - 1) & 0b10101);
            let y = VertexSet(((1u64 << n) - 1) & 0b01010);
            cases += 1;
            if g.complement_on(x)?.complement_on(x)? != *g
                || g.complement_between(x, y)?.complement_between(x, y)? != *g
            {
                return Ok((cases, Some(format!("complementation on {}", to_graph6(g)))));
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("graph6 round-trip", || {
        let mut cases = 0;
        for n in 0..=6 {
            for g in all_graphs(n) {
                cases += 1;
                if from_graph6(&to_graph6(&g))? != g {
                    return Ok((cases, Some(to_graph6(&g))));
                }
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("tucker", || {
        let mut cases = 0;
        for g in graphs_up_to(4) {
            let m = GF2Matrix::adjacency(&g);
            for s in 0..(1u64 << g.n()) {
                if m.is_nonsingular(VertexSet(s))? {
                    cases += 1;
                    if !check_tucker(&m, VertexSet(s))? {
                        return Ok((cases, Some(to_graph6(&g))));
                    }
                }
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("pivot composition", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cases = 0;
        while cases < 100 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, n, 0.5);
            let m = GF2Matrix::adjacency(&g);
            let s = VertexSet(rng.gen_range(0..1u64 << n));
            let t = VertexSet(rng.gen_range(0..1u64 << n));
            if !m.is_nonsingular(s)? || !m.principal_pivot(s)?.is_nonsingular(t)? {
                continue;
            }
            cases += 1;
            if !check_pivot_composition(&m, s, t)? {
                return Ok((cases, Some(format!("{} S={s:?} T={t:?}", to_graph6(&g)))));
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("set pivot decomposition", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut cases = 0;
        while cases < 100 {
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let x = VertexSet(rng.gen_range(1..1u64 << n));
            if x.len() % 2 == 1 || !GF2Matrix::adjacency(&g).is_nonsingular(x)? {
                continue;
            }
            let s = x.to_vec()[rng.gen_range(0..x.len())];
            cases += 1;
            decompose_set_pivot(&g, x, s)?;
        }
        Ok((cases, None))
    }));

    out.push(outcome("tree-depth witnesses", || {
        let mut cases = 0;
        for g in &small {
            cases += 1;
            let (td, t) = tree_depth(g)?;
            if !verify_td(g, &t, td) {
                return Ok((cases, Some(to_graph6(g))));
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("depth hosts", || {
        let mut cases = 0;
        for g in &small {
            cases += 1;
            let (k, d) = sc_depth(g)?;
            if eval_sc(&d)? != *g {
                return Ok((cases, Some(format!("SC witness of {}", to_graph6(g)))));
            }
            let w = sc_to_vertex_minor_host(&d)?;
            if tree_depth(&w.host)?.0 > k + 1 {
                return Ok((cases, Some(format!("SC host of {}", to_graph6(g)))));
            }
            check_emitted(&w.to_certificate()?)?;
            let (k, d) = bsc_depth(g)?;
            if eval_bsc(&d)? != *g {
                return Ok((cases, Some(format!("BSC witness of {}", to_graph6(g)))));
            }
            if g.is_bipartite() {
                let w = bsc_to_pivot_minor_host(&d)?;
                if tree_depth(&w.host)?.0 > 2 * k + 1 {
                    return Ok((cases, Some(format!("BSC host of {}", to_graph6(g)))));
                }
                check_emitted(&w.to_certificate()?)?;
            }
        }
        Ok((cases, None))
    }));

    out.push(outcome("H_n paths", || {
        let mut cases = 0;
        for n in 2..=8 {
            cases += 1;
            let c = hn_path_certificate(n)?;
            check_emitted(&c)?;
            if !is_isomorphic(&c.target, &Graph::path(n + 1))? {
                return Ok((cases, Some(format!("n = {n}"))));
            }
        }
        Ok((cases, None))
    }));

    out
}

/// A certificate must survive serialisation and verify again.
fn check_emitted(c: &MinorCertificate) -> Result<()> {
    let back = MinorCertificate::from_json_str(&c.to_json_string())?;
    back.verify()
}
