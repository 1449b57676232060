//! Membership tests for the families of the weakly modular hierarchy.
//!
//! Every negative verdict carries the lexicographically smallest violating
//! tuple found by the corresponding scan, tagged with the condition it
//! violates.

mod helly;
mod orientation;
mod report;

pub use helly::{
    check_clique_helly, check_dismantlable, check_helly, decide_simple_connectivity, Complex,
    Elimination, SimpleConnectivity,
};
pub use orientation::{find_admissible_orientation, is_admissible, Orientation, OrientationSearch};
pub use report::{recognize, ClassReport, Entry, Parameters, Status, FAMILY_KEYS};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_pattern, Pattern, Template};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: String,
    pub vertices: Vec<usize>,
}

impl Witness {
    fn new(condition: &str, vertices: Vec<usize>) -> Witness {
        Witness { condition: condition.into(), vertices }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Verdict {
        Verdict { holds: true, witness: None }
    }

    pub fn no(condition: &str, vertices: Vec<usize>) -> Verdict {
        Verdict { holds: false, witness: Some(Witness::new(condition, vertices)) }
    }

    fn from_hit(hit: Option<crate::pattern::PatternHit>) -> Verdict {
        match hit {
            None => Verdict::yes(),
            Some(h) => Verdict::no(h.pattern.name(), h.vertices),
        }
    }

    /// Conjunction keeping the first failure.
    fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MetricFamily {
    Modular,
    Meshed,
    PseudoModular,
    Bridged,
    WeaklyBridged,
    LocallyWeaklyModular,
    Thick,
    Thin,
}

impl MetricFamily {
    pub const ALL: [MetricFamily; 8] = [
        MetricFamily::Modular,
        MetricFamily::Meshed,
        MetricFamily::PseudoModular,
        MetricFamily::Bridged,
        MetricFamily::WeaklyBridged,
        MetricFamily::LocallyWeaklyModular,
        MetricFamily::Thick,
        MetricFamily::Thin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MetricFamily::Modular => "modular",
            MetricFamily::Meshed => "meshed",
            MetricFamily::PseudoModular => "pseudo-modular",
            MetricFamily::Bridged => "bridged",
            MetricFamily::WeaklyBridged => "weakly-bridged",
            MetricFamily::LocallyWeaklyModular => "locally-weakly-modular",
            MetricFamily::Thick => "thick",
            MetricFamily::Thin => "thin",
        }
    }
}

fn pairs_at_distance_two(g: &Graph) -> Vec<(usize, usize)> {
    let d = g.dist();
    let mut out = Vec::new();
    for v in 0..g.n() {
        for w in v + 1..g.n() {
            if d.get(v, w) == 2 {
                out.push((v, w));
            }
        }
    }
    out
}

fn tc_violation_at(g: &Graph, u: usize) -> Option<Vec<usize>> {
    let d = g.dist();
    for v in 0..g.n() {
        let k = d.get(u, v);
        if k == 0 {
            continue;
        }
        for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
            if d.get(u, w) == k && !g.common_neighbors(v, w).iter().any(|&x| d.get(u, x) + 1 == k) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

fn qc_violation_at(g: &Graph, u: usize, far_pairs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let d = g.dist();
    for &(v, w) in far_pairs {
        let k = d.get(u, v);
        if k < 2 || d.get(u, w) != k {
            continue;
        }
        let cn = g.common_neighbors(v, w);
        if let Some(&z) = cn.iter().find(|&&z| d.get(u, z) == k + 1) {
            if !cn.iter().any(|&x| d.get(u, x) + 1 == k) {
                return Some(vec![u, v, w, z]);
            }
        }
    }
    None
}

/// Triangle and quadrangle conditions at every base vertex.
pub fn check_weakly_modular(g: &Graph) -> Verdict {
    let far_pairs = pairs_at_distance_two(g);
    for u in 0..g.n() {
        match (tc_violation_at(g, u), qc_violation_at(g, u, &far_pairs)) {
            (None, None) => continue,
            (Some(t), None) => return Verdict::no("TC", t),
            (None, Some(q)) => return Verdict::no("QC", q),
            (Some(t), Some(q)) => {
                return if t <= q { Verdict::no("TC", t) } else { Verdict::no("QC", q) };
            }
        }
    }
    Verdict::yes()
}

/// TC(u) and QC(u) for a single base vertex `u`.
pub fn check_weakly_modular_at(g: &Graph, u: usize) -> Verdict {
    if let Some(t) = tc_violation_at(g, u) {
        return Verdict::no("TC", t);
    }
    match qc_violation_at(g, u, &pairs_at_distance_two(g)) {
        Some(q) => Verdict::no("QC", q),
        None => Verdict::yes(),
    }
}

/// The triangle condition alone.
pub fn check_triangle_condition(g: &Graph) -> Verdict {
    (0..g.n())
        .find_map(|u| tc_violation_at(g, u))
        .map_or_else(Verdict::yes, |t| Verdict::no("TC", t))
}

pub fn check_metric_family(g: &Graph, family: MetricFamily) -> Verdict {
    match family {
        MetricFamily::Modular => check_modular(g),
        MetricFamily::Meshed => check_meshed(g),
        MetricFamily::PseudoModular => check_pseudo_modular(g),
        MetricFamily::Bridged => check_weakly_modular(g)
            .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::C4)))
            .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::C5))),
        MetricFamily::WeaklyBridged => check_weakly_modular(g)
            .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::C4))),
        MetricFamily::LocallyWeaklyModular => check_locally_weakly_modular(g),
        MetricFamily::Thick => check_thick(g),
        MetricFamily::Thin => Verdict::from_hit(find_pattern(g, Pattern::C4)),
    }
}

/// Bipartite and weakly modular; a failure is reported as the smallest
/// triple without a median.
fn check_modular(g: &Graph) -> Verdict {
    if g.is_bipartite() && check_weakly_modular(g).holds {
        return Verdict::yes();
    }
    let d = g.dist();
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let has_median = (0..n)
                    .any(|m| d.between(a, m, b) && d.between(b, m, c) && d.between(a, m, c));
                if !has_median {
                    return Verdict::no("no median", vec![a, b, c]);
                }
            }
        }
    }
    Verdict::no("no median", Vec::new())
}

fn check_meshed(g: &Graph) -> Verdict {
    let d = g.dist();
    let far_pairs = pairs_at_distance_two(g);
    let common: Vec<Vec<usize>> = far_pairs.iter().map(|&(v, w)| g.common_neighbors(v, w)).collect();
    for u in 0..g.n() {
        for (i, &(v, w)) in far_pairs.iter().enumerate() {
            let budget = d.get(u, v) + d.get(u, w);
            if !common[i].iter().any(|&x| 2 * d.get(u, x) <= budget) {
                return Verdict::no("meshed", vec![u, v, w]);
            }
        }
    }
    Verdict::yes()
}

/// For `1 ≤ d(u,w) ≤ 2` and `d(v,u) = d(v,w) = k ≥ 2` some common neighbor
/// of `u` and `w` is at distance `k − 1` from `v`.
fn check_pseudo_modular(g: &Graph) -> Verdict {
    let d = g.dist();
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            let k = d.get(v, u);
            if k < 2 {
                continue;
            }
            for w in 0..n {
                let duw = d.get(u, w);
                if !(1..=2).contains(&duw) || d.get(v, w) != k {
                    continue;
                }
                if !g.common_neighbors(u, w).iter().any(|&x| d.get(v, x) + 1 == k) {
                    return Verdict::no("pseudo-modular", vec![u, v, w]);
                }
            }
        }
    }
    Verdict::yes()
}

fn check_locally_weakly_modular(g: &Graph) -> Verdict {
    let d = g.dist();
    let n = g.n();
    let far_pairs = pairs_at_distance_two(g);
    let meets_all = |u: usize, v: usize, w: usize| {
        g.common_neighbors(v, w).iter().any(|&x| g.has_edge(u, x))
    };
    for u in 0..n {
        let mut ltc = None;
        'ltc: for v in 0..n {
            if d.get(u, v) != 2 {
                continue;
            }
            for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                if d.get(u, w) == 2 && !meets_all(u, v, w) {
                    ltc = Some(vec![u, v, w]);
                    break 'ltc;
                }
            }
        }
        let mut lqc = None;
        for &(v, w) in &far_pairs {
            if d.get(u, v) != 2 || d.get(u, w) != 2 || meets_all(u, v, w) {
                continue;
            }
            if let Some(z) = g.common_neighbors(v, w).into_iter().find(|&z| d.get(u, z) == 3) {
                lqc = Some(vec![u, v, w, z]);
                break;
            }
        }
        match (ltc, lqc) {
            (None, None) => continue,
            (Some(t), None) => return Verdict::no("LTC", t),
            (None, Some(q)) => return Verdict::no("LQC", q),
            (Some(t), Some(q)) => {
                return if t <= q { Verdict::no("LTC", t) } else { Verdict::no("LQC", q) };
            }
        }
    }
    Verdict::yes()
}

/// Every 2-interval `I(u,v)` contains a square; equivalently `u` and `v`
/// have two nonadjacent common neighbors.
fn check_thick(g: &Graph) -> Verdict {
    for (u, v) in pairs_at_distance_two(g) {
        let cn = g.common_neighbors(u, v);
        let square = cn
            .iter()
            .enumerate()
            .any(|(i, &x)| cn[i + 1..].iter().any(|&y| !g.has_edge(x, y)));
        if !square {
            return Verdict::no("2-interval without square", vec![u, v]);
        }
    }
    Verdict::yes()
}

pub fn check_pre_median(g: &Graph) -> Verdict {
    check_weakly_modular(g)
        .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::K23)))
        .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::W4minus)))
}

/// Induced 4-cycles `a-b-c-d-a` with `a` the smallest vertex and `b < d`.
pub(crate) fn squares(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            if b < a {
                continue;
            }
            for &dd in &na[i + 1..] {
                if g.has_edge(b, dd) {
                    continue;
                }
                for c in g.common_neighbors(b, dd) {
                    if c > a && !g.has_edge(a, c) {
                        out.push([a, b, c, dd]);
                    }
                }
            }
        }
    }
    out
}

/// Induced 4-cycles of a template, each as a cyclic sequence, in all eight
/// rotations and reflections.
fn template_square_placements(t: &Template) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..t.k {
        for b in 0..t.k {
            for c in 0..t.k {
                for d in 0..t.k {
                    let q = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
                    if distinct
                        && t.adj[a][b]
                        && t.adj[b][c]
                        && t.adj[c][d]
                        && t.adj[d][a]
                        && !t.adj[a][c]
                        && !t.adj[b][d]
                    {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// The square lies in an induced `W4` or `M4`.
pub(crate) fn square_extends(g: &Graph, sq: &[usize; 4]) -> bool {
    [Pattern::W4, Pattern::M4].iter().any(|&p| {
        let t = p.template();
        template_square_placements(&t).iter().any(|place| {
            let mut fixed = vec![None; t.k];
            for i in 0..4 {
                fixed[place[i]] = Some(sq[i]);
            }
            t.embed(g, &fixed, &|_| true).is_some()
        })
    })
}

/// Pre-median and every square extends to an induced `W4` or `M4`.
/// Two-connectivity is reported separately by [`recognize`].
pub fn check_prime_pre_median(g: &Graph) -> Verdict {
    check_pre_median(g).and_then(|| {
        squares(g)
            .into_iter()
            .find(|sq| !square_extends(g, sq))
            .map_or_else(Verdict::yes, |sq| Verdict::no("square outside W4 and M4", sq.to_vec()))
    })
}

fn swm_verdict(g: &Graph) -> Verdict {
    check_weakly_modular(g)
        .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::K4minus)))
        .and_then(|| Verdict::from_hit(find_pattern(g, Pattern::K33minusIsometric)))
}

pub fn check_swm(g: &Graph) -> Verdict {
    let v = swm_verdict(g);
    let _ = g.swm_cache().set(v.holds);
    v
}

/// Cached swm test.
pub fn is_swm(g: &Graph) -> bool {
    *g.swm_cache().get_or_init(|| swm_verdict(g).holds)
}

pub(crate) fn require_swm(g: &Graph) -> Result<()> {
    if is_swm(g) {
        Ok(())
    } else {
        Err(Error::NotApplicable("graph is not swm".into()))
    }
}

pub fn check_dual_polar(g: &Graph) -> Verdict {
    check_swm(g).and_then(|| check_thick(g))
}

/// No cut vertex (graphs on at most two vertices count as 2-connected).
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() <= 2 {
        return true;
    }
    (0..g.n()).all(|cut| {
        let rest: Vec<usize> = (0..g.n()).filter(|&v| v != cut).collect();
        g.induces_connected(&rest)
    })
}
