//! Balls in the universal cover of the triangle-square complex of a locally
//! weakly modular graph, grown one sphere at a time.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{check_metric_family, MetricFamily};

pub const DEFAULT_LAYER_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct CoverBall {
    pub graph: Graph,
    /// Base-graph vertex under each cover vertex.
    pub projection: Vec<usize>,
    pub radius: usize,
    /// Base vertex; cover vertex 0 lies over it.
    pub base: usize,
}

impl CoverBall {
    pub fn projection_json(&self) -> Value {
        json!(self.projection)
    }

    /// Whether the projection maps the closed neighbourhood of cover vertex
    /// `x` bijectively onto that of its image, preserving adjacency both ways.
    pub fn is_local_isomorphism_at(&self, g: &Graph, x: usize) -> bool {
        local_isomorphism(&self.graph.adjacency().to_vec(), &self.projection, g, x)
    }
}

fn local_isomorphism(adj: &[Vec<usize>], proj: &[usize], g: &Graph, x: usize) -> bool {
    let mut ball: Vec<usize> = adj[x].clone();
    ball.push(x);
    let mut image: Vec<usize> = ball.iter().map(|&y| proj[y]).collect();
    image.sort_unstable();
    image.dedup();
    let px = proj[x];
    if image.len() != ball.len() || image.len() != g.degree(px) + 1 {
        return false;
    }
    if !ball.iter().all(|&y| y == x || g.has_edge(px, proj[y])) {
        return false;
    }
    ball.iter().all(|&a| {
        ball.iter().all(|&b| a == b || adj[a].contains(&b) == g.has_edge(proj[a], proj[b]))
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

pub fn universal_cover_ball(g: &Graph, v: usize, r: usize) -> Result<CoverBall> {
    universal_cover_ball_capped(g, v, r, DEFAULT_LAYER_CAP)
}

/// Radius-`r` ball around a lift of `v`. Each new sphere consists of the
/// classes of pairs (last-sphere vertex, missing base neighbour) under the
/// closure of two gluing rules: pairs over the same base vertex are glued
/// when their cover vertices coincide or are adjacent, or when they span a
/// square of the base together with a common cover neighbour one layer down.
pub fn universal_cover_ball_capped(g: &Graph, v: usize, r: usize, cap: usize) -> Result<CoverBall> {
    g.check_vertex(v)?;
    let lwm = check_metric_family(g, MetricFamily::LocallyWeaklyModular);
    if !lwm.holds {
        return Err(Error::NotApplicable("graph is not locally weakly modular".into()));
    }
    let mut proj = vec![v];
    let mut layer_of = vec![0usize];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    if r >= 1 {
        // the unit ball of v, copied verbatim
        let nbrs = g.neighbors(v);
        if nbrs.len() > cap {
            return Err(Error::RadiusTooLarge { layer: 1, size: nbrs.len(), cap });
        }
        let index: HashMap<usize, usize> = nbrs.iter().enumerate().map(|(i, &z)| (z, i + 1)).collect();
        for &z in nbrs {
            proj.push(z);
            layer_of.push(1);
            adj.push(vec![0]);
            adj[0].push(index[&z]);
        }
        for &a in nbrs {
            for &b in g.neighbors(a) {
                if let Some(&ib) = index.get(&b) {
                    adj[index[&a]].push(ib);
                }
            }
        }
    }
    let mut sphere: Vec<usize> = (1..proj.len()).collect();
    for i in 1..r {
        let is_sphere = |x: usize, layer_of: &[usize]| layer_of[x] == i;
        // couples (w̃, z) with z a base neighbour of f(w̃) not yet lifted next to w̃
        let mut couples: Vec<(usize, usize)> = Vec::new();
        let mut couple_index: HashMap<(usize, usize), usize> = HashMap::new();
        for &w in &sphere {
            let lifted: Vec<usize> = adj[w].iter().map(|&y| proj[y]).collect();
            for &z in g.neighbors(proj[w]) {
                if !lifted.contains(&z) {
                    couple_index.insert((w, z), couples.len());
                    couples.push((w, z));
                }
            }
        }
        let mut uf = UnionFind((0..couples.len()).collect());
        for (idx, &(w, z)) in couples.iter().enumerate() {
            for &w2 in &adj[w] {
                if !is_sphere(w2, &layer_of) {
                    continue;
                }
                if let Some(&other) = couple_index.get(&(w2, z)) {
                    uf.union(idx, other);
                }
            }
            for &u in &adj[w] {
                if layer_of[u] + 1 != i {
                    continue;
                }
                let (pu, pw) = (proj[u], proj[w]);
                if g.has_edge(pu, z) {
                    continue;
                }
                for &w2 in &adj[u] {
                    if w2 == w || !is_sphere(w2, &layer_of) {
                        continue;
                    }
                    let pw2 = proj[w2];
                    if g.has_edge(pw2, z) && !g.has_edge(pw, pw2) && pw != pw2 {
                        if let Some(&other) = couple_index.get(&(w2, z)) {
                            uf.union(idx, other);
                        }
                    }
                }
            }
        }
        let mut class_vertex: HashMap<usize, usize> = HashMap::new();
        let mut next_sphere = Vec::new();
        let mut vertex_of_couple = vec![0usize; couples.len()];
        for idx in 0..couples.len() {
            let root = uf.find(idx);
            let vertex = *class_vertex.entry(root).or_insert_with(|| {
                let id = proj.len();
                proj.push(couples[root].1);
                layer_of.push(i + 1);
                adj.push(Vec::new());
                next_sphere.push(id);
                id
            });
            vertex_of_couple[idx] = vertex;
        }
        if next_sphere.len() > cap {
            return Err(Error::RadiusTooLarge { layer: i + 1, size: next_sphere.len(), cap });
        }
        let mut new_edges: Vec<(usize, usize)> = Vec::new();
        for (idx, &(w, _)) in couples.iter().enumerate() {
            new_edges.push((w, vertex_of_couple[idx]));
        }
        for &w in &sphere {
            let mine: Vec<(usize, usize)> = g
                .neighbors(proj[w])
                .iter()
                .filter_map(|&z| couple_index.get(&(w, z)).map(|&c| (z, vertex_of_couple[c])))
                .collect();
            for (a, &(za, xa)) in mine.iter().enumerate() {
                for &(zb, xb) in &mine[a + 1..] {
                    if g.has_edge(za, zb) {
                        new_edges.push((xa, xb));
                    }
                }
            }
        }
        for (a, b) in new_edges {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        if cfg!(debug_assertions) {
            for &w in &sphere {
                debug_assert!(
                    local_isomorphism(&adj, &proj, g, w),
                    "cover layer {i}: unit ball of {w} does not project isomorphically"
                );
            }
        }
        sphere = next_sphere;
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let graph = Graph::from_adjacency(adj)?;
    Ok(CoverBall { graph, projection: proj, radius: r, base: v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::pattern::{find_isomorphism, is_isomorphic};
    use crate::recognition::check_weakly_modular_at;

    #[test]
    fn radius_zero_is_a_point() {
        let ball = universal_cover_ball(&generate::cube(3).unwrap(), 5, 0).unwrap();
        assert_eq!((ball.graph.n(), ball.projection.clone()), (1, vec![5]));
    }

    #[test]
    fn seven_cycle_unrolls_to_a_path() {
        let c7 = generate::cycle(7).unwrap();
        let ball = universal_cover_ball(&c7, 0, 3).unwrap();
        assert!(is_isomorphic(&ball.graph, &generate::path(7).unwrap()));
        let mut images = ball.projection.clone();
        images.sort_unstable();
        assert_eq!(images, (0..7).collect::<Vec<_>>());
        let bigger = universal_cover_ball(&c7, 0, 5).unwrap();
        assert!(is_isomorphic(&bigger.graph, &generate::path(11).unwrap()));
    }

    #[test]
    fn cube_is_its_own_cover() {
        let q3 = generate::cube(3).unwrap();
        let ball = universal_cover_ball(&q3, 0, 3).unwrap();
        assert!(is_isomorphic(&ball.graph, &q3));
        let mut images = ball.projection.clone();
        images.sort_unstable();
        assert_eq!(images, (0..8).collect::<Vec<_>>());
        assert!(check_weakly_modular_at(&ball.graph, 0).holds);
        for x in 0..ball.graph.n() {
            assert!(ball.is_local_isomorphism_at(&q3, x));
        }
    }

    #[test]
    fn projection_is_the_isomorphism_for_simply_connected_bases() {
        let g = generate::hyperoctahedron(3).unwrap();
        let ball = universal_cover_ball(&g, 0, 2).unwrap();
        assert_eq!(ball.graph.n(), 6);
        for (a, b) in ball.graph.edges() {
            assert!(g.has_edge(ball.projection[a], ball.projection[b]));
        }
        assert!(find_isomorphism(&ball.graph, &g).is_some());
    }

    #[test]
    fn rejects_and_caps() {
        let c5 = generate::cycle(5).unwrap();
        assert!(matches!(universal_cover_ball(&c5, 0, 2), Err(Error::NotApplicable(_))));
        let c7 = generate::cycle(7).unwrap();
        assert!(matches!(
            universal_cover_ball_capped(&c7, 0, 3, 1),
            Err(Error::RadiusTooLarge { layer: 1, size: 2, cap: 1 })
        ));
    }
}
