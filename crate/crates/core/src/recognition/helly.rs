use serde::{Deserialize, Serialize};

use super::{check_metric_family, check_weakly_modular, MetricFamily, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// For every triangle `T`, the vertices adjacent to at least two vertices of
/// `T` contain one adjacent to all the others.
pub fn check_clique_helly(g: &Graph) -> Verdict {
    let n = g.n();
    let mut hits = vec![0u8; n];
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for c in g.common_neighbors(a, b).into_iter().filter(|&c| c > b) {
                hits.iter_mut().for_each(|h| *h = 0);
                for t in [a, b, c] {
                    for &x in g.neighbors(t) {
                        hits[x] += 1;
                    }
                }
                let star: Vec<usize> = (0..n).filter(|&x| hits[x] >= 2).collect();
                let universal = star
                    .iter()
                    .any(|&x| star.iter().all(|&y| y == x || g.has_edge(x, y)));
                if !universal {
                    return Verdict::no("triangle", vec![a, b, c]);
                }
            }
        }
    }
    Verdict::yes()
}

/// A dismantling: each step removes `vertex`, dominated at that moment by
/// its neighbor `by`; `survivor` is what remains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub steps: Vec<(usize, usize)>,
    pub survivor: usize,
}

/// Greedy dismantling, removing the smallest dominated vertex each round.
pub fn check_dismantlable(g: &Graph) -> Option<Elimination> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut steps = Vec::with_capacity(n.saturating_sub(1));
    let dominated_by = |alive: &[bool], v: usize| {
        g.neighbors(v).iter().copied().find(|&w| {
            alive[w]
                && g.neighbors(v)
                    .iter()
                    .all(|&x| !alive[x] || x == w || g.has_edge(w, x))
        })
    };
    for _ in 1..n {
        let step = (0..n).filter(|&v| alive[v]).find_map(|v| dominated_by(&alive, v).map(|w| (v, w)));
        let (v, w) = step?;
        alive[v] = false;
        steps.push((v, w));
    }
    let survivor = (0..n).find(|&v| alive[v]).expect("one vertex remains");
    Some(Elimination { steps, survivor })
}

pub fn check_helly(g: &Graph) -> Verdict {
    check_clique_helly(g).and_then(|| match check_dismantlable(g) {
        Some(_) => Verdict::yes(),
        None => Verdict::no("not dismantlable", Vec::new()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Complex {
    TriangleSquare,
    Clique,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleConnectivity {
    pub simply_connected: bool,
    /// Which complex the answer refers to.
    pub complex: Complex,
}

/// Decides simple connectivity where a local-to-global criterion applies:
/// the triangle-square complex of a locally weakly modular graph, or the
/// clique complex of a clique-Helly graph.
pub fn decide_simple_connectivity(g: &Graph) -> Result<SimpleConnectivity> {
    if check_metric_family(g, MetricFamily::LocallyWeaklyModular).holds {
        return Ok(SimpleConnectivity {
            simply_connected: check_weakly_modular(g).holds,
            complex: Complex::TriangleSquare,
        });
    }
    if check_clique_helly(g).holds {
        return Ok(SimpleConnectivity {
            simply_connected: check_dismantlable(g).is_some(),
            complex: Complex::Clique,
        });
    }
    Err(Error::NotApplicable(
        "neither locally weakly modular nor clique-Helly; simple connectivity is not decided".into(),
    ))
}
