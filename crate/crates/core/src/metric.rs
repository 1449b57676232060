//! Intervals, quasi-medians, metric triangles, gates and gated hulls.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SetKind, VertexSet};
use crate::recognition::check_weakly_modular;

/// Vertices on shortest `(u,v)`-paths.
pub fn interval(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(VertexSet::plain(interval_members(g, u, v)))
}

pub(crate) fn interval_members(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let d = g.dist();
    (0..g.n()).filter(|&w| d.between(u, w, v)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricTriangle {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    /// Longest side; all sides agree in weakly modular graphs.
    pub size: u32,
    /// `[d(v1,v2), d(v2,v3), d(v3,v1)]`
    pub sides: [u32; 3],
}

impl MetricTriangle {
    fn new(g: &Graph, v1: usize, v2: usize, v3: usize) -> MetricTriangle {
        let sides = [g.d(v1, v2), g.d(v2, v3), g.d(v3, v1)];
        MetricTriangle { v1, v2, v3, size: *sides.iter().max().unwrap(), sides }
    }

    pub fn is_equilateral(&self) -> bool {
        self.sides[0] == self.sides[1] && self.sides[1] == self.sides[2]
    }
}

/// `I(a,b) ∩ I(a,c) = {a}`. A shared vertex other than `a` forces a shared
/// neighbor of `a`, so only neighbors are scanned.
fn corner_is_tight(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let d = g.dist();
    !g.neighbors(a).iter().any(|&x| d.between(a, x, b) && d.between(a, x, c))
}

pub fn is_metric_triangle(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    corner_is_tight(g, a, b, c) && corner_is_tight(g, b, c, a) && corner_is_tight(g, c, a, b)
}

fn farthest_in(g: &Graph, from: usize, a: usize, b: usize) -> usize {
    // I(from,a) ∩ I(from,b), farthest from `from`, smallest id on ties
    let d = g.dist();
    let mut best = from;
    for w in 0..g.n() {
        if d.between(from, w, a) && d.between(from, w, b) && d.get(from, w) > d.get(from, best) {
            best = w;
        }
    }
    best
}

/// Greedy quasi-median of `(x,y,z)`.
pub fn quasi_median(g: &Graph, x: usize, y: usize, z: usize) -> Result<MetricTriangle> {
    for v in [x, y, z] {
        g.check_vertex(v)?;
    }
    let v1 = farthest_in(g, x, y, z);
    let v2 = farthest_in(g, y, v1, z);
    let v3 = farthest_in(g, z, v1, v2);
    Ok(MetricTriangle::new(g, v1, v2, v3))
}

/// Largest side of a metric triangle, with the lexicographically smallest
/// triangle attaining it. Zero (and no witness) when every metric triangle
/// is a single vertex.
pub fn max_metric_triangle_side(g: &Graph) -> (u32, Option<MetricTriangle>) {
    let n = g.n();
    let best = (0..n)
        .into_par_iter()
        .filter_map(|a| {
            let mut local: Option<(u32, [usize; 3])> = None;
            for b in a + 1..n {
                for c in b + 1..n {
                    let side = g.d(a, b).max(g.d(b, c)).max(g.d(a, c));
                    if local.is_some_and(|(s, _)| s >= side) {
                        continue;
                    }
                    if is_metric_triangle(g, a, b, c) {
                        local = Some((side, [a, b, c]));
                    }
                }
            }
            local
        })
        .reduce_with(|p, q| if q.0 > p.0 || (q.0 == p.0 && q.1 < p.1) { q } else { p });
    match best {
        Some((s, [a, b, c])) => (s, Some(MetricTriangle::new(g, a, b, c))),
        None => (0, None),
    }
}

/// Gate of `x` in `s`: the member lying on shortest paths from `x` to every
/// member of `s`.
pub fn gate(g: &Graph, s: &VertexSet, x: usize) -> Result<Option<usize>> {
    g.check_vertex(x)?;
    check_members(g, s)?;
    Ok(gate_of(g, &s.members, x))
}

pub(crate) fn gate_of(g: &Graph, members: &[usize], x: usize) -> Option<usize> {
    let d = g.dist();
    let nearest = *members.iter().min_by_key(|&&m| (d.get(x, m), m))?;
    members.iter().all(|&y| d.between(x, nearest, y)).then_some(nearest)
}

fn check_members(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidInput("empty vertex set".into()));
    }
    for &v in &s.members {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// How gatedness and convexity are decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CheckMode {
    /// Straight from the definition; valid in every graph.
    #[default]
    Definitional,
    /// Local criteria valid for connected sets in weakly modular graphs:
    /// convex iff 2-convex, gated iff closed under common neighbors.
    WeaklyModularShortcut,
}

fn require_shortcut_preconditions(g: &Graph, s: &VertexSet) -> Result<()> {
    if !check_weakly_modular(g).holds {
        return Err(Error::NotApplicable("local criterion needs a weakly modular graph".into()));
    }
    if !g.induces_connected(&s.members) {
        return Err(Error::InvalidInput("local criterion needs a connected set".into()));
    }
    Ok(())
}

pub fn is_gated(g: &Graph, s: &VertexSet, mode: CheckMode) -> Result<bool> {
    check_members(g, s)?;
    match mode {
        CheckMode::Definitional => {
            let inside = s.mask(g.n());
            Ok((0..g.n()).all(|x| inside[x] || gate_of(g, &s.members, x).is_some()))
        }
        CheckMode::WeaklyModularShortcut => {
            require_shortcut_preconditions(g, s)?;
            Ok(closed_under_common_neighbors(g, &s.mask(g.n())))
        }
    }
}

pub fn is_convex(g: &Graph, s: &VertexSet, mode: CheckMode) -> Result<bool> {
    check_members(g, s)?;
    let inside = s.mask(g.n());
    let d = g.dist();
    match mode {
        CheckMode::Definitional => {
            let m = &s.members;
            Ok(m.iter().enumerate().all(|(i, &u)| {
                m[i + 1..]
                    .iter()
                    .all(|&v| (0..g.n()).all(|w| inside[w] || !d.between(u, w, v)))
            }))
        }
        CheckMode::WeaklyModularShortcut => {
            require_shortcut_preconditions(g, s)?;
            // every common neighbor of two members at distance 2 is inside
            Ok(s.members.iter().all(|&u| {
                s.members.iter().all(|&v| {
                    u >= v
                        || d.get(u, v) != 2
                        || g.common_neighbors(u, v).iter().all(|&x| inside[x])
                })
            }))
        }
    }
}

fn closed_under_common_neighbors(g: &Graph, inside: &[bool]) -> bool {
    (0..g.n()).all(|x| inside[x] || g.neighbors(x).iter().filter(|&&y| inside[y]).count() < 2)
}

/// Smallest gated set containing `s`, obtained by repeatedly adding common
/// neighbors of members.
///
/// A disconnected `s` is first joined by the intervals from its least member
/// to the others; gated sets are convex, so this does not change the hull.
pub fn gated_hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    check_members(g, s)?;
    if !check_weakly_modular(g).holds {
        return Err(Error::NotApplicable("gated hull procedure needs a weakly modular graph".into()));
    }
    let mut seed = s.members.clone();
    if !g.induces_connected(&seed) {
        let first = seed[0];
        for &t in &s.members[1..] {
            seed.extend(interval_members(g, first, t));
        }
        seed.sort_unstable();
        seed.dedup();
    }
    Ok(VertexSet::tagged(hull_members(g, &seed), SetKind::Gated))
}

/// Closure under common neighbors, without precondition checks.
pub(crate) fn hull_members(g: &Graph, seed: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut count = vec![0u32; n];
    let mut queue: Vec<usize> = Vec::new();
    for &v in seed {
        if !inside[v] {
            inside[v] = true;
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for &y in g.neighbors(v) {
            count[y] += 1;
            if !inside[y] && count[y] >= 2 {
                inside[y] = true;
                queue.push(y);
            }
        }
    }
    (0..n).filter(|&v| inside[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn cycle(n: usize) -> Graph {
        generate::cycle(n).unwrap()
    }

    #[test]
    fn interval_examples() {
        let c4 = cycle(4);
        assert_eq!(interval(&c4, 0, 2).unwrap().members, vec![0, 1, 2, 3]);
        let p3 = generate::path(3).unwrap();
        assert_eq!(interval(&p3, 0, 2).unwrap().members, vec![0, 1, 2]);
        assert_eq!(interval(&p3, 1, 1).unwrap().members, vec![1]);
    }

    #[test]
    fn quasi_median_examples() {
        let k3 = generate::complete(3).unwrap();
        let t = quasi_median(&k3, 0, 1, 2).unwrap();
        assert_eq!((t.v1, t.v2, t.v3, t.size), (0, 1, 2, 1));
        let c4 = cycle(4);
        let t = quasi_median(&c4, 0, 1, 2).unwrap();
        assert_eq!((t.v1, t.v2, t.v3, t.size), (1, 1, 1, 0));
    }

    #[test]
    fn metric_triangle_side_examples() {
        assert_eq!(max_metric_triangle_side(&generate::complete(4).unwrap()).0, 1);
        assert_eq!(max_metric_triangle_side(&generate::cube(3).unwrap()).0, 0);
        assert_eq!(max_metric_triangle_side(&generate::path(5).unwrap()).1, None);
        // a triangle sitting in the corner of a hexagonal region: side 2
        let (mu, w) = max_metric_triangle_side(&cycle(6));
        assert_eq!(mu, 2);
        assert!(w.unwrap().is_equilateral());
    }

    #[test]
    fn gates_in_a_square() {
        let c4 = cycle(4);
        let edge = VertexSet::plain(vec![0, 1]);
        assert_eq!(gate(&c4, &edge, 3).unwrap(), Some(0));
        assert!(is_gated(&c4, &edge, CheckMode::Definitional).unwrap());
        let opposite = VertexSet::plain(vec![0, 2]);
        assert_eq!(gate(&c4, &opposite, 1).unwrap(), None);
        assert!(!is_convex(&c4, &opposite, CheckMode::Definitional).unwrap());
    }

    #[test]
    fn k3_edge_is_convex_but_not_gated() {
        let k3 = generate::complete(3).unwrap();
        let e = VertexSet::plain(vec![0, 1]);
        assert!(is_convex(&k3, &e, CheckMode::Definitional).unwrap());
        assert!(!is_gated(&k3, &e, CheckMode::Definitional).unwrap());
        assert!(!is_gated(&k3, &e, CheckMode::WeaklyModularShortcut).unwrap());
        assert_eq!(gated_hull(&k3, &e).unwrap().members, vec![0, 1, 2]);
    }

    #[test]
    fn shortcut_is_guarded() {
        let c5 = cycle(5);
        let e = VertexSet::plain(vec![0, 1]);
        assert!(matches!(
            is_gated(&c5, &e, CheckMode::WeaklyModularShortcut),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(gated_hull(&c5, &e), Err(Error::NotApplicable(_))));
        let c4 = cycle(4);
        let split = VertexSet::plain(vec![0, 2]);
        assert_eq!(gated_hull(&c4, &split).unwrap().members, vec![0, 1, 2, 3]);
        // a disconnected set is simply not gated under the definition
        assert!(!is_gated(&c4, &split, CheckMode::Definitional).unwrap());
    }

    #[test]
    fn hull_of_cube_diagonal_interval_is_whole_cube() {
        let q3 = generate::cube(3).unwrap();
        let i = interval(&q3, 0, 7).unwrap();
        assert_eq!(gated_hull(&q3, &i).unwrap().len(), 8);
        let face = interval(&q3, 0, 3).unwrap();
        assert_eq!(gated_hull(&q3, &face).unwrap().members, vec![0, 1, 2, 3]);
    }
}
