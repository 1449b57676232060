//! Induced-subgraph search for the small forbidden configurations, and a
//! general backtracking embedder reused for isomorphism tests.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Small patterns. Each is numbered so that every vertex after the first
/// has an earlier neighbor; hits list graph vertices in this numbering.
///
/// - `K4minus`: `1..=2` is the diagonal, `0` and `3` are the nonadjacent pair.
/// - `K23`: sides `{0,2}` and `{1,3,4}`.
/// - `W4minus`: hub `0` adjacent to `1,2,3`; rim cycle `4-1-2-3-4`.
/// - `W4`: hub `0`; rim cycle `1-2-3-4-1`.
/// - `M4`: square `0-1-2-3-0`; clique `4..=7` with `4+i` adjacent to `i`, `i+1 mod 4`.
/// - `K33minus*`: sides `{0,2,4}` and `{1,3,5}`, edge `0-5` removed; `(0,5)`
///   is the far pair, which the isometric variant requires at distance 3.
/// - `C4`, `C5`: induced cycles `0-1-..-0` numbered along the cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    K4minus,
    K23,
    W4minus,
    W4,
    M4,
    K33minusInduced,
    K33minusIsometric,
    C4,
    C5,
}

impl Pattern {
    pub const ALL: [Pattern; 9] = [
        Pattern::K4minus,
        Pattern::K23,
        Pattern::W4minus,
        Pattern::W4,
        Pattern::M4,
        Pattern::K33minusInduced,
        Pattern::K33minusIsometric,
        Pattern::C4,
        Pattern::C5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K4minus => "K4minus",
            Pattern::K23 => "K23",
            Pattern::W4minus => "W4minus",
            Pattern::W4 => "W4",
            Pattern::M4 => "M4",
            Pattern::K33minusInduced => "K33minus-induced",
            Pattern::K33minusIsometric => "K33minus-isometric",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::K4minus | Pattern::C4 => 4,
            Pattern::K23 | Pattern::W4minus | Pattern::W4 | Pattern::C5 => 5,
            Pattern::K33minusInduced | Pattern::K33minusIsometric => 6,
            Pattern::M4 => 8,
        }
    }

    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Pattern::K4minus => vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
            Pattern::K23 => vec![(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)],
            Pattern::W4minus => vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (1, 4)],
            Pattern::W4 => vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)],
            Pattern::M4 => {
                let mut e = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
                for i in 0..4 {
                    e.push((i, 4 + i));
                    e.push(((i + 1) % 4, 4 + i));
                    for j in i + 1..4 {
                        e.push((4 + i, 4 + j));
                    }
                }
                e
            }
            Pattern::K33minusInduced | Pattern::K33minusIsometric => {
                let mut e = Vec::new();
                for a in [0, 2, 4] {
                    for b in [1, 3, 5] {
                        if (a, b) != (0, 5) {
                            e.push((a, b));
                        }
                    }
                }
                e
            }
            Pattern::C4 => vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::C5 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
        }
    }

    pub(crate) fn template(self) -> Template {
        Template::new(self.order(), &self.edges())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHit {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

/// First induced copy of `pattern` in lexicographic order of the vertex
/// tuple.
pub fn find_pattern(g: &Graph, pattern: Pattern) -> Option<PatternHit> {
    let t = pattern.template();
    let fixed = vec![None; t.k];
    let vertices = if pattern == Pattern::K33minusIsometric {
        t.embed(g, &fixed, &|map| g.d(map[0], map[5]) == 3)
    } else {
        t.embed(g, &fixed, &|_| true)
    }?;
    Some(PatternHit { pattern, vertices })
}

/// A small pattern graph as an adjacency matrix.
#[derive(Clone, Debug)]
pub(crate) struct Template {
    pub k: usize,
    pub adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
}

impl Template {
    pub fn new(k: usize, edges: &[(usize, usize)]) -> Template {
        let mut adj = vec![vec![false; k]; k];
        for &(a, b) in edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let deg = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        Template { k, adj, deg }
    }

    /// Induced embedding of the template into `g`, extending the partial
    /// map `fixed`. Pattern vertices are assigned in index order and
    /// candidates tried in increasing id, so the first hit is the
    /// lexicographically smallest tuple accepted by `accept`.
    pub fn embed(
        &self,
        g: &Graph,
        fixed: &[Option<usize>],
        accept: &dyn Fn(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        if self.k > g.n() {
            return None;
        }
        let mut used = vec![false; g.n()];
        for &f in fixed.iter().flatten() {
            if used[f] {
                return None;
            }
            used[f] = true;
        }
        let mut map = Vec::with_capacity(self.k);
        self.extend(g, fixed, accept, &mut map, &mut used).then_some(map)
    }

    fn fits(&self, g: &Graph, map: &[usize], i: usize, v: usize) -> bool {
        g.degree(v) >= self.deg[i]
            && map.iter().enumerate().all(|(j, &w)| g.has_edge(v, w) == self.adj[i][j])
    }

    fn extend(
        &self,
        g: &Graph,
        fixed: &[Option<usize>],
        accept: &dyn Fn(&[usize]) -> bool,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == self.k {
            return accept(map);
        }
        if let Some(v) = fixed[i] {
            if !self.fits(g, map, i, v) {
                return false;
            }
            map.push(v);
            if self.extend(g, fixed, accept, map, used) {
                return true;
            }
            map.pop();
            return false;
        }
        let anchor = (0..i).find(|&j| self.adj[i][j]);
        let all: Vec<usize>;
        let candidates: &[usize] = match anchor {
            Some(j) => g.neighbors(map[j]),
            None => {
                all = (0..g.n()).collect();
                &all
            }
        };
        for &v in candidates {
            if used[v] || !self.fits(g, map, i, v) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if self.extend(g, fixed, accept, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // relabel `a` in BFS order so that every prefix is connected
    let mut order = vec![0];
    let mut seen = vec![false; a.n()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &y in a.neighbors(order[i]) {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
        i += 1;
    }
    let mut pos = vec![0; a.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> = a.edges().iter().map(|&(u, v)| (pos[u], pos[v])).collect();
    let t = Template::new(a.n(), &edges);
    let map = t.embed(b, &vec![None; a.n()], &|_| true)?;
    Some((0..a.n()).map(|v| map[pos[v]]).collect())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}
