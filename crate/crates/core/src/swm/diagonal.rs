use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One round: both diagonals of every induced 4-cycle of `current` that uses
/// an edge of `base`.
fn extend_once(base: &Graph, current: &Graph) -> Result<Graph> {
    let mut edges: BTreeSet<(usize, usize)> = current.edges().into_iter().collect();
    for (a0, b0) in base.edges() {
        for (a, b) in [(a0, b0), (b0, a0)] {
            // square a-b-c-d-a
            for &c in current.neighbors(b) {
                if c == a || current.has_edge(a, c) {
                    continue;
                }
                for &d in current.neighbors(c) {
                    if d != b && current.has_edge(d, a) && !current.has_edge(b, d) {
                        edges.insert((a.min(c), a.max(c)));
                        edges.insert((b.min(d), b.max(d)));
                    }
                }
            }
        }
    }
    Graph::new(base.n(), &edges.into_iter().collect::<Vec<_>>())
}

/// `D^(k)`: `k` rounds of diagonal extension starting from `g`.
pub fn diagonal_extension(g: &Graph, k: usize) -> Result<Graph> {
    let mut current = g.clone();
    for _ in 0..k {
        let next = extend_once(g, &current)?;
        if next == current {
            break;
        }
        current = next;
    }
    Ok(current)
}

/// Fixpoint of diagonal extension and the first round `k` with
/// `D^(k+1) = D^(k)`.
pub fn wm_skeleton(g: &Graph, cap: usize) -> Result<(Graph, usize)> {
    let mut current = g.clone();
    for k in 0..=cap {
        let next = extend_once(g, &current)?;
        if next == current {
            return Ok((current, k));
        }
        current = next;
    }
    Err(Error::RankDiverges { cap })
}
