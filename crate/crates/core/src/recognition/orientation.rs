use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{check_metric_family, squares, MetricFamily};
use crate::graph::Graph;

/// One direction per edge, as `(tail, head)` pairs in edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
    /// Set when the graph is not modular, so the orientation does not make
    /// it an orientable modular graph.
    pub graph_is_modular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrientationSearch {
    Found(Orientation),
    /// Squares whose opposite-edge constraints close an odd cycle.
    Conflict(Vec<[usize; 4]>),
}

struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![false; n] }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// Records `value(a) xor value(b) = rel`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ rel;
        true
    }
}

/// Edge variables are `true` when the edge points from its smaller to its
/// larger end. Square `a-b-c-d` asks `a→b ⇔ d→c` and `b→c ⇔ a→d`.
fn constraints(g: &Graph) -> (Vec<(usize, usize)>, Vec<(usize, usize, bool, usize)>, Vec<[usize; 4]>) {
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let var = |x: usize, y: usize| index[&(x.min(y), x.max(y))];
    let sq = squares(g);
    let mut cons = Vec::with_capacity(2 * sq.len());
    for (s, &[a, b, c, d]) in sq.iter().enumerate() {
        for (x1, y1, x2, y2) in [(a, b, d, c), (b, c, a, d)] {
            cons.push((var(x1, y1), var(x2, y2), (x1 > y1) ^ (x2 > y2), s));
        }
    }
    (edges, cons, sq)
}

pub fn find_admissible_orientation(g: &Graph) -> OrientationSearch {
    let (edges, cons, sq) = constraints(g);
    let mut uf = ParityUnionFind::new(edges.len());
    if !cons.iter().all(|&(x, y, rel, _)| uf.union(x, y, rel)) {
        return OrientationSearch::Conflict(conflict_cycle(edges.len(), &cons, &sq));
    }
    let arcs = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if uf.find(i).1 { (v, u) } else { (u, v) })
        .collect();
    let graph_is_modular = check_metric_family(g, MetricFamily::Modular).holds;
    OrientationSearch::Found(Orientation { arcs, graph_is_modular })
}

/// Odd cycle in the constraint graph, reported as its squares.
fn conflict_cycle(nvars: usize, cons: &[(usize, usize, bool, usize)], sq: &[[usize; 4]]) -> Vec<[usize; 4]> {
    let mut adj: Vec<Vec<(usize, bool, usize)>> = vec![Vec::new(); nvars];
    for &(x, y, rel, s) in cons {
        adj[x].push((y, rel, s));
        adj[y].push((x, rel, s));
    }
    let mut color: Vec<Option<bool>> = vec![None; nvars];
    let mut via: Vec<Option<(usize, usize)>> = vec![None; nvars];
    for start in 0..nvars {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(y, rel, s) in &adj[x] {
                let want = color[x].unwrap() ^ rel;
                match color[y] {
                    None => {
                        color[y] = Some(want);
                        via[y] = Some((x, s));
                        queue.push_back(y);
                    }
                    Some(c) if c != want => {
                        let up = |mut v: usize| {
                            let mut chain = vec![(v, None)];
                            while let Some((p, s)) = via[v] {
                                chain.push((p, Some(s)));
                                v = p;
                            }
                            chain
                        };
                        let (cx, cy) = (up(x), up(y));
                        let on_y: HashMap<usize, usize> =
                            cy.iter().enumerate().map(|(i, &(v, _))| (v, i)).collect();
                        let meet = cx.iter().position(|(v, _)| on_y.contains_key(v)).unwrap();
                        let mut out = vec![sq[s]];
                        out.extend(cx[1..=meet].iter().filter_map(|&(_, s)| s.map(|s| sq[s])));
                        out.extend(cy[1..=on_y[&cx[meet].0]].iter().filter_map(|&(_, s)| s.map(|s| sq[s])));
                        return out;
                    }
                    _ => {}
                }
            }
        }
    }
    Vec::new()
}

/// Opposite edges of every square point the same way.
pub fn is_admissible(g: &Graph, arcs: &[(usize, usize)]) -> bool {
    let forward: HashMap<(usize, usize), bool> = arcs.iter().map(|&(u, v)| ((u.min(v), u.max(v)), u < v)).collect();
    if forward.len() != g.m() || arcs.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let points = |x: usize, y: usize| forward[&(x.min(y), x.max(y))] == (x < y);
    squares(g)
        .iter()
        .all(|&[a, b, c, d]| points(a, b) == points(d, c) && points(b, c) == points(a, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::pattern::Pattern;

    #[test]
    fn cube_is_orientable() {
        let q3 = generate::cube(3).unwrap();
        match find_admissible_orientation(&q3) {
            OrientationSearch::Found(o) => {
                assert!(o.graph_is_modular);
                assert!(is_admissible(&q3, &o.arcs));
            }
            OrientationSearch::Conflict(_) => panic!("cube must be orientable"),
        }
    }

    #[test]
    fn k33_minus_edge_forces_a_contradiction() {
        let g = Graph::new(6, &Pattern::K33minusInduced.edges()).unwrap();
        match find_admissible_orientation(&g) {
            OrientationSearch::Conflict(cycle) => assert!(!cycle.is_empty()),
            OrientationSearch::Found(_) => panic!("expected a conflict"),
        }
    }

    #[test]
    fn triangle_free_tree_has_trivial_orientation() {
        let p = generate::path(4).unwrap();
        assert!(matches!(find_admissible_orientation(&p), OrientationSearch::Found(_)));
    }
}
