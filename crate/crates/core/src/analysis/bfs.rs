use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BfsOrder {
    pub order: Vec<usize>,
    /// Vertex that discovered each vertex; `None` for the base.
    pub parent: Vec<Option<usize>>,
    pub base: usize,
}

/// Breadth-first order from `v0`; the undiscovered neighbours of each
/// vertex are enqueued in an order shuffled by `seed`.
pub fn bfs_order(g: &Graph, v0: usize, seed: u64) -> Result<BfsOrder> {
    g.check_vertex(v0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([v0]);
    seen[v0] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        let mut fresh: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !seen[y]).collect();
        fresh.shuffle(&mut rng);
        for y in fresh {
            seen[y] = true;
            parent[y] = Some(x);
            queue.push_back(y);
        }
    }
    Ok(BfsOrder { order, parent, base: v0 })
}

fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::InvalidInput(format!("order has {} entries for {n} vertices", order.len())));
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidInput(format!("order is not a permutation (entry {v})")));
        }
        pos[v] = i;
    }
    Ok(pos)
}

impl BfsOrder {
    /// The sets `A_x` (everything discovered once `x` is processed) are
    /// initial segments of the order, and each parent is the earliest
    /// neighbour.
    pub fn validate(&self, g: &Graph) -> bool {
        let Ok(pos) = positions(g.n(), &self.order) else { return false };
        if self.order.first() != Some(&self.base) || self.parent.len() != g.n() {
            return false;
        }
        let mut discovered = vec![false; g.n()];
        discovered[self.base] = true;
        let mut count = 1;
        for &x in &self.order {
            if !discovered[x] {
                return false;
            }
            for &y in g.neighbors(x) {
                if !discovered[y] {
                    discovered[y] = true;
                    count += 1;
                    if self.parent[y] != Some(x) {
                        return false;
                    }
                }
            }
            // A_x is an initial segment: its members occupy positions 0..count
            if g.neighbors(x).iter().any(|&y| pos[y] >= count) {
                return false;
            }
        }
        let d = g.dist();
        self.parent[self.base].is_none()
            && self.order.windows(2).all(|w| d.get(self.base, w[0]) <= d.get(self.base, w[1]))
    }
}

/// Every prefix of `order` induces an isometric subgraph. On failure the
/// witness is `(prefix length, newest vertex, vertex whose distance to it
/// is wrong)`.
pub fn is_distance_preserving(g: &Graph, order: &[usize]) -> Result<(bool, Option<(usize, usize, usize)>)> {
    let n = g.n();
    let pos = positions(n, order)?;
    let d = g.dist();
    for k in 1..=n {
        let x = order[k - 1];
        let adj: Vec<Vec<usize>> = order[..k]
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&y| pos[y] < k).map(|&y| pos[y]).collect())
            .collect();
        let local = bfs(&adj, k - 1);
        let mut bad: Vec<usize> = (0..k)
            .filter(|&i| local[i] != d.get(x, order[i]))
            .map(|i| order[i])
            .collect();
        bad.sort_unstable();
        if let Some(&w) = bad.first() {
            return Ok((false, Some((k, x, w))));
        }
    }
    Ok((true, None))
}
