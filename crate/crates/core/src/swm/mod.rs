//! Boolean-gated machinery for swm-graphs: Boolean pairs, the poset of
//! Boolean-gated sets, barycentric graphs, thickenings, Δ-gates, normal
//! bg-paths and diagonal extensions.
//!
//! [`SwmToolkit`] computes the Boolean-pair table, the poset and the
//! thickening once; the free functions are one-shot wrappers.

mod boolean;
mod diagonal;
mod paths;
mod poset;

pub use diagonal::{diagonal_extension, wm_skeleton};
pub use paths::NormalPath;
pub use poset::{BarycentricGraph, BooleanGatedPoset};

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metric::{hull_members, interval_members};
use crate::recognition::require_swm;

pub struct SwmToolkit<'g> {
    g: &'g Graph,
    boolean: Vec<bool>,
    poset: BooleanGatedPoset,
    /// Poset index of `⟨p,q⟩` for Boolean pairs `p ≤ q`.
    hull_index: HashMap<(usize, usize), usize>,
    thick: Graph,
}

impl<'g> SwmToolkit<'g> {
    pub fn new(g: &'g Graph) -> Result<SwmToolkit<'g>> {
        require_swm(g)?;
        let n = g.n();
        let rows: Vec<Vec<(usize, Option<Vec<usize>>)>> = (0..n)
            .into_par_iter()
            .map(|p| {
                (p..n)
                    .map(|q| {
                        let hull = boolean::boolean_pair(g, p, q)
                            .then(|| hull_members(g, &interval_members(g, p, q)));
                        (q, hull)
                    })
                    .collect()
            })
            .collect();
        let mut boolean = vec![false; n * n];
        let mut hulls: Vec<((usize, usize), Vec<usize>)> = Vec::new();
        for (p, row) in rows.into_iter().enumerate() {
            for (q, hull) in row {
                if let Some(h) = hull {
                    boolean[p * n + q] = true;
                    boolean[q * n + p] = true;
                    hulls.push(((p, q), h));
                }
            }
        }
        let poset = BooleanGatedPoset::build(g, hulls.iter().map(|(_, h)| h.clone()));
        let lookup: HashMap<&[usize], usize> =
            poset.sets.iter().enumerate().map(|(i, s)| (s.members.as_slice(), i)).collect();
        let hull_index = hulls.iter().map(|(pq, h)| (*pq, lookup[h.as_slice()])).collect();
        let thick_edges: Vec<(usize, usize)> = hulls
            .iter()
            .map(|(pq, _)| *pq)
            .filter(|&(p, q)| p != q)
            .collect();
        let thick = Graph::new(n, &thick_edges)?;
        Ok(SwmToolkit { g, boolean, poset, hull_index, thick })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn is_boolean_pair(&self, p: usize, q: usize) -> bool {
        self.boolean[p * self.g.n() + q]
    }

    pub fn poset(&self) -> &BooleanGatedPoset {
        &self.poset
    }

    /// `⟨p,q⟩` as a poset index; `None` unless `(p,q)` is Boolean.
    pub fn hull_index(&self, p: usize, q: usize) -> Option<usize> {
        self.hull_index.get(&(p.min(q), p.max(q))).copied()
    }

    pub fn hull(&self, p: usize, q: usize) -> Option<&VertexSet> {
        self.hull_index(p, q).map(|i| &self.poset.sets[i])
    }

    pub fn cube_dimension(&self) -> u32 {
        self.poset.max_diameter()
    }

    pub fn thickening(&self) -> &Graph {
        &self.thick
    }

    pub fn partial_thickening(&self, k: u32) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self
            .thick
            .edges()
            .into_iter()
            .filter(|&(p, q)| self.g.d(p, q) <= k)
            .collect();
        Graph::new(self.g.n(), &edges)
    }

    pub fn delta_distance(&self, p: usize, q: usize) -> u32 {
        self.thick.d(p, q)
    }

    pub fn barycentric_graph(&self) -> Result<BarycentricGraph> {
        BarycentricGraph::from_poset(&self.poset)
    }
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<()> {
    vs.iter().try_for_each(|&v| g.check_vertex(v))
}

pub fn is_boolean_pair(g: &Graph, p: usize, q: usize) -> Result<bool> {
    check_vertices(g, &[p, q])?;
    require_swm(g)?;
    Ok(boolean::boolean_pair(g, p, q))
}

pub fn boolean_gated_sets(g: &Graph) -> Result<BooleanGatedPoset> {
    Ok(SwmToolkit::new(g)?.poset)
}

pub fn barycentric_graph(g: &Graph) -> Result<BarycentricGraph> {
    SwmToolkit::new(g)?.barycentric_graph()
}

/// `i`-fold barycentric graph. Sets refer to vertices of the previous
/// iterate; `origin` is composed back to the vertices of `g`.
pub fn barycentric_iterate(g: &Graph, i: usize) -> Result<BarycentricGraph> {
    require_swm(g)?;
    if i == 0 {
        return Ok(BarycentricGraph {
            graph: g.clone(),
            sets: (0..g.n()).map(|v| vec![v]).collect(),
            origin: (0..g.n()).collect(),
            orientation: Vec::new(),
        });
    }
    let mut current = barycentric_graph(g)?;
    for _ in 1..i {
        let mut next = barycentric_graph(&current.graph)?;
        next.origin = current.origin.iter().map(|&v| next.origin[v]).collect();
        current = next;
    }
    Ok(current)
}

pub fn thickening(g: &Graph) -> Result<Graph> {
    Ok(SwmToolkit::new(g)?.thick)
}

pub fn partial_thickening(g: &Graph, k: u32) -> Result<Graph> {
    SwmToolkit::new(g)?.partial_thickening(k)
}

pub fn delta_gate(g: &Graph, p: usize, q: usize) -> Result<usize> {
    check_vertices(g, &[p, q])?;
    SwmToolkit::new(g)?.delta_gate(p, q)
}

pub fn normal_bg_path(g: &Graph, p: usize, q: usize) -> Result<NormalPath> {
    check_vertices(g, &[p, q])?;
    SwmToolkit::new(g)?.normal_path(p, q)
}

pub fn verify_fellow_traveler(g: &Graph, p: usize, q: usize, x: usize, y: usize) -> Result<bool> {
    check_vertices(g, &[p, q, x, y])?;
    SwmToolkit::new(g)?.fellow_travel(p, q, x, y)
}

pub fn geodesic_extension_check(g: &Graph, x: usize, y: usize, p: usize) -> Result<bool> {
    check_vertices(g, &[x, y, p])?;
    SwmToolkit::new(g)?.geodesic_extension(x, y, p)
}

pub(crate) fn invalid(msg: &str) -> Error {
    Error::InvalidInput(msg.into())
}
