//! Finite simple connected graphs on dense vertex ids, their distance
//! tables and the plain-text exchange format.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple connected graph with vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    dist: OnceLock<DistMatrix>,
    swm: OnceLock<bool>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}
impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, parallel edges,
    /// out-of-range ids and disconnected input.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::InvalidGraph(format!("parallel edge {a} {b}")));
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Builds a graph from symmetric, sorted, duplicate-free adjacency lists.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Graph> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let comps = components(&adj);
        if comps.len() > 1 {
            return Err(Error::Disconnected { components: comps });
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m, dist: OnceLock::new(), swm: OnceLock::new() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// All-pairs distance table, computed on first use.
    pub fn dist(&self) -> &DistMatrix {
        self.dist.get_or_init(|| all_pairs_distances(self))
    }

    pub fn d(&self, u: usize, v: usize) -> u32 {
        self.dist().get(u, v)
    }

    pub fn diameter(&self) -> u32 {
        self.dist().diameter()
    }

    pub(crate) fn swm_cache(&self) -> &OnceLock<bool> {
        &self.swm
    }

    /// Common neighbors of `u` and `v` in increasing order.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let d = self.dist();
        self.edges().iter().all(|&(u, v)| d.get(0, u) != d.get(0, v))
    }

    /// True if the subgraph induced by `set` is connected (and nonempty).
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        let distinct = {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        count == distinct
    }

    /// Subgraph induced by the given vertices, relabelled `0..k` in the
    /// order given. Fails if it is disconnected.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Parses the text format: a header `n m`, then `m` lines `u v` with
    /// `u < v`. Anything after `#` on a line is ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two integers, found {line:?}"),
                });
            }
            let num = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("not a nonnegative integer: {s:?}"),
                })
            };
            let (a, b) = (num(fields[0])?, num(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= b {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("edge {a} {b} must satisfy u < v"),
                        });
                    }
                    if b >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex {b} out of range (n = {n})"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Serializes to the text format with sorted edges.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Connected components of an adjacency structure, each sorted, ordered by
/// smallest member.
pub fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Dense table of graph distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// `w` lies on a shortest `(u,v)`-path.
    #[inline]
    pub fn between(&self, u: usize, w: usize, v: usize) -> bool {
        self.get(u, w) + self.get(w, v) == self.get(u, v)
    }
}

/// Single-source BFS distances.
pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Unit-edge distances between all vertex pairs, one BFS per source.
pub fn all_pairs_distances(g: &Graph) -> DistMatrix {
    let n = g.n();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs(g.adjacency(), s)).collect();
    DistMatrix { n, d: rows.concat() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Plain,
    Convex,
    Gated,
}

/// Sorted vertex set with a tag recording which property was verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    pub members: Vec<usize>,
    pub kind: SetKind,
}

impl VertexSet {
    pub fn plain(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members, kind: SetKind::Plain }
    }

    pub(crate) fn tagged(mut members: Vec<usize>, kind: SetKind) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members, kind }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.members {
            m[v] = true;
        }
        m
    }
}
