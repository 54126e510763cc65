use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHROMATIC_LIMIT: usize = 16;

/// Exact chromatic number by backtracking over increasing colour counts.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Error::check_capacity("vertex count for chromatic number", g.n(), CHROMATIC_LIMIT)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = g.clique_number().max(2);
    for k in lower..=n {
        let mut colour = vec![usize::MAX; n];
        if try_colour(g, &order, 0, k, 0, &mut colour) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn try_colour(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // a fresh colour is interchangeable with any other fresh one
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbours(v).iter().any(|w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if try_colour(g, order, i + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}
