use serde::{Deserialize, Serialize};

use super::{invalid, SwmToolkit};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::metric::gate_of;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalPath {
    pub vertices: Vec<usize>,
    /// `⟨x_i, x_{i+1}⟩` for consecutive vertices.
    pub hulls: Vec<VertexSet>,
}

impl SwmToolkit<'_> {
    /// Gate of `p` in the ball of the thickening around `q` whose radius is
    /// one less than the thickened distance from `p` to `q`.
    pub fn delta_gate(&self, p: usize, q: usize) -> Result<usize> {
        if p == q {
            return Err(invalid("Δ-gate needs distinct vertices"));
        }
        let k = self.delta_distance(p, q);
        let ball: Vec<usize> = (0..self.g.n()).filter(|&v| self.delta_distance(q, v) < k).collect();
        gate_of(self.g, &ball, p)
            .ok_or_else(|| Error::Inconsistent(format!("ball of radius {} around {q} is not gated", k - 1)))
    }

    pub fn normal_path(&self, p: usize, q: usize) -> Result<NormalPath> {
        let mut rev = vec![q];
        let mut x = q;
        while x != p {
            x = self.delta_gate(x, p)?;
            rev.push(x);
        }
        rev.reverse();
        let hulls = rev
            .windows(2)
            .map(|w| {
                self.hull(w[0], w[1])
                    .cloned()
                    .ok_or_else(|| Error::Inconsistent(format!("({}, {}) is not Boolean", w[0], w[1])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalPath { vertices: rev, hulls })
    }

    /// Normality at the middle of `a, b, c`: every Boolean-gated set
    /// containing `⟨a,b⟩` meets `⟨b,c⟩` only in `b`.
    pub fn normal_at(&self, a: usize, b: usize, c: usize) -> bool {
        let (Some(prev), Some(next)) = (self.hull_index(a, b), self.hull_index(b, c)) else {
            return false;
        };
        if a == b || b == c {
            return false;
        }
        let sets = &self.poset().sets;
        let prev = &sets[prev];
        let next = &sets[next];
        sets.iter()
            .filter(|s| prev.members.iter().all(|&v| s.contains(v)))
            .all(|s| next.members.iter().all(|&v| v == b || !s.contains(v)))
    }

    /// Consecutive vertices are Boolean pairs and every interior vertex is
    /// normal.
    pub fn is_normal_path(&self, path: &[usize]) -> bool {
        path.windows(2).all(|w| w[0] != w[1] && self.is_boolean_pair(w[0], w[1]))
            && path.windows(3).all(|w| self.normal_at(w[0], w[1], w[2]))
    }

    /// Normal paths from `p` to `x` and from `q` to `y` stay within
    /// thickened distance 1, the shorter one waiting at its end.
    pub fn fellow_travel(&self, p: usize, q: usize, x: usize, y: usize) -> Result<bool> {
        if self.delta_distance(p, q) > 1 || self.delta_distance(x, y) > 1 {
            return Err(invalid("endpoints must be at thickened distance at most 1"));
        }
        let a = self.normal_path(p, x)?.vertices;
        let b = self.normal_path(q, y)?.vertices;
        Ok(fellow_travelers(&a, &b, |u, v| self.delta_distance(u, v)))
    }

    /// Whether `p` lies on a geodesic of the thickening between `x` and `y`.
    /// Both the metric criterion and the Δ-gate criterion are evaluated;
    /// disagreement is reported as an error.
    pub fn geodesic_extension(&self, x: usize, y: usize, p: usize) -> Result<bool> {
        if p == x || p == y {
            return Err(invalid("p must differ from x and y"));
        }
        let metric = self.delta_distance(x, y) == self.delta_distance(x, p) + self.delta_distance(p, y);
        let gates = self.gate_criterion(x, y, p)?;
        if metric != gates {
            return Err(Error::Inconsistent(format!(
                "geodesic criteria disagree at x={x}, y={y}, p={p}"
            )));
        }
        Ok(metric)
    }

    /// The Δ-gates of `x` and of `y` at `p` are distinct and not adjacent
    /// in the thickening.
    pub fn gate_criterion(&self, x: usize, y: usize, p: usize) -> Result<bool> {
        let gx = self.delta_gate(p, x)?;
        let gy = self.delta_gate(p, y)?;
        Ok(gx != gy && !self.thickening().has_edge(gx, gy))
    }
}

/// Pointwise distance at most 1, extending the shorter path by its last
/// vertex.
pub(crate) fn fellow_travelers(a: &[usize], b: &[usize], dist: impl Fn(usize, usize) -> u32) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| {
        let u = a[i.min(a.len() - 1)];
        let v = b[i.min(b.len() - 1)];
        dist(u, v) <= 1
    })
}

#[cfg(test)]
mod tests {
    use crate::generate;
    use crate::swm::*;

    #[test]
    fn path_graph_gates_and_normal_path() {
        let p4 = generate::path(4).unwrap();
        assert_eq!(delta_gate(&p4, 0, 3).unwrap(), 1);
        assert_eq!(delta_gate(&p4, 0, 1).unwrap(), 1);
        assert_eq!(normal_bg_path(&p4, 0, 3).unwrap().vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cube_antipodes_are_one_step_apart() {
        let q3 = generate::cube(3).unwrap();
        assert_eq!(delta_gate(&q3, 0, 7).unwrap(), 7);
        let path = normal_bg_path(&q3, 0, 7).unwrap();
        assert_eq!(path.vertices, vec![0, 7]);
        assert_eq!(path.hulls[0].len(), 8);
    }

    #[test]
    fn fellow_travel_examples() {
        let q3 = generate::cube(3).unwrap();
        assert!(verify_fellow_traveler(&q3, 0, 0, 5, 5).unwrap());
        assert!(verify_fellow_traveler(&q3, 0, 1, 6, 7).unwrap());
        let p5 = generate::path(5).unwrap();
        assert!(verify_fellow_traveler(&p5, 0, 1, 4, 3).unwrap());
        assert!(verify_fellow_traveler(&p5, 0, 2, 4, 4).is_err());
    }

    #[test]
    fn geodesic_extension_examples() {
        let p5 = generate::path(5).unwrap();
        assert!(geodesic_extension_check(&p5, 0, 4, 2).unwrap());
        assert!(!geodesic_extension_check(&p5, 0, 2, 4).unwrap());
        let q3 = generate::cube(3).unwrap();
        assert!(geodesic_extension_check(&q3, 0, 0, 7).is_ok());
        assert!(geodesic_extension_check(&q3, 0, 7, 0).is_err());
    }

    #[test]
    fn normality_rejects_backtracking_and_shortcuts() {
        let p4 = generate::path(4).unwrap();
        let t = SwmToolkit::new(&p4).unwrap();
        assert!(t.is_normal_path(&[0, 1, 2, 3]));
        assert!(!t.is_normal_path(&[0, 1, 0]));
        let q3 = generate::cube(3).unwrap();
        let t = SwmToolkit::new(&q3).unwrap();
        assert!(!t.is_normal_path(&[0, 1, 7]));
        assert!(t.is_normal_path(&[0, 7]));
    }
}
