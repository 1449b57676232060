use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, SetKind, VertexSet};

/// Boolean-gated sets of an swm-graph. Singletons come first, so set `v` is
/// `{v}`; the rest are ordered by diameter, then members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanGatedPoset {
    pub sets: Vec<VertexSet>,
    pub diameters: Vec<u32>,
    /// `(smaller, larger)` index pairs where `larger` covers `smaller`
    /// under inclusion.
    pub covers: Vec<(usize, usize)>,
}

impl BooleanGatedPoset {
    pub(crate) fn build(g: &Graph, pair_sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let n = g.n();
        let mut distinct: HashMap<Vec<usize>, ()> = HashMap::new();
        for s in pair_sets {
            if s.len() > 1 {
                distinct.insert(s, ());
            }
        }
        let d = g.dist();
        let diameter = |s: &[usize]| {
            s.iter().flat_map(|&a| s.iter().map(move |&b| d.get(a, b))).max().unwrap_or(0)
        };
        let mut rest: Vec<(u32, Vec<usize>)> =
            distinct.into_keys().map(|s| (diameter(&s), s)).collect();
        rest.sort();
        let mut sets: Vec<VertexSet> = (0..n).map(|v| VertexSet::tagged(vec![v], SetKind::Gated)).collect();
        let mut diameters = vec![0; n];
        for (diam, s) in rest {
            sets.push(VertexSet::tagged(s, SetKind::Gated));
            diameters.push(diam);
        }
        let covers = covering_pairs(n, &sets);
        BooleanGatedPoset { sets, diameters, covers }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Index of a set given by its sorted members.
    pub fn index_of(&self, members: &[usize]) -> Option<usize> {
        self.sets.iter().position(|s| s.members == members)
    }

    pub fn max_diameter(&self) -> u32 {
        self.diameters.iter().copied().max().unwrap_or(0)
    }
}

fn to_bits(n: usize, members: &[usize]) -> Vec<u64> {
    let mut w = vec![0u64; n.div_ceil(64)];
    for &v in members {
        w[v / 64] |= 1 << (v % 64);
    }
    w
}

fn proper_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0) && a != b
}

/// Covering pairs of the inclusion order.
fn covering_pairs(n: usize, sets: &[VertexSet]) -> Vec<(usize, usize)> {
    let bits: Vec<Vec<u64>> = sets.iter().map(|s| to_bits(n, &s.members)).collect();
    let mut out = Vec::new();
    for y in 0..sets.len() {
        let below: Vec<usize> = (0..sets.len()).filter(|&x| proper_subset(&bits[x], &bits[y])).collect();
        for &x in &below {
            if !below.iter().any(|&z| proper_subset(&bits[x], &bits[z])) {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Covering graph of the Boolean-gated sets under reverse inclusion.
#[derive(Clone, Debug)]
pub struct BarycentricGraph {
    pub graph: Graph,
    /// Member lists of the sets behind each node, in vertices of the graph
    /// the construction was applied to last.
    pub sets: Vec<Vec<usize>>,
    /// Node of each original vertex.
    pub origin: Vec<usize>,
    /// Arcs from each set to the sets it covers, i.e. from larger to
    /// smaller.
    pub orientation: Vec<(usize, usize)>,
}

impl BarycentricGraph {
    pub(crate) fn from_poset(poset: &BooleanGatedPoset) -> Result<BarycentricGraph> {
        let edges: Vec<(usize, usize)> = poset.covers.clone();
        let graph = Graph::new(poset.len(), &edges)?;
        let orientation = poset.covers.iter().map(|&(small, large)| (large, small)).collect();
        let n = poset.sets.iter().filter(|s| s.len() == 1).count();
        Ok(BarycentricGraph {
            graph,
            sets: poset.sets.iter().map(|s| s.members.clone()).collect(),
            origin: (0..n).collect(),
            orientation,
        })
    }

    /// JSON side tables: `sets`, `origin` and `orientation`.
    pub fn side_tables(&self) -> serde_json::Value {
        serde_json::json!({
            "sets": self.sets,
            "origin": self.origin,
            "orientation": self.orientation,
        })
    }
}
