use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{check_metric_family, MetricFamily};

/// One elementary homotopy of a closed walk: the subpath `replace`,
/// starting at index `at`, becomes `with`. For a face move `face` is a
/// triangle or square whose boundary is `replace` followed by `with`
/// reversed. A two-vertex `face` marks a backtrack `[a, b, a] -> [a]`,
/// which costs no area.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub face: Vec<usize>,
    pub replace: Vec<usize>,
    pub with: Vec<usize>,
    pub at: usize,
}

impl Move {
    pub fn is_face(&self) -> bool {
        self.face.len() >= 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscFilling {
    /// The input as a closed walk, first vertex repeated at the end.
    pub cycle: Vec<usize>,
    pub moves: Vec<Move>,
    /// Number of face moves.
    pub area: usize,
}

impl DiscFilling {
    pub fn length(&self) -> usize {
        self.cycle.len() - 1
    }
}

/// Closed walk with the start repeated at the end.
fn close_walk(g: &Graph, cycle: &[usize]) -> Result<Vec<usize>> {
    let Some(&first) = cycle.first() else {
        return Err(Error::NotAClosedWalk("empty walk".into()));
    };
    for &v in cycle {
        g.check_vertex(v)?;
    }
    let mut walk = cycle.to_vec();
    if walk.len() > 1 && walk.last() == Some(&first) {
        walk.pop();
    }
    walk.push(first);
    if walk.len() == 2 {
        // a single vertex, possibly written twice
        walk.pop();
    }
    for w in walk.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::NotAClosedWalk(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    Ok(walk)
}

fn is_face(g: &Graph, face: &[usize]) -> bool {
    let mut sorted = face.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != face.len() {
        return false;
    }
    match face.len() {
        3 => g.has_edge(face[0], face[1]) && g.has_edge(face[1], face[2]) && g.has_edge(face[0], face[2]),
        4 => {
            (0..4).all(|i| g.has_edge(face[i], face[(i + 1) % 4]))
                && !g.has_edge(face[0], face[2])
                && !g.has_edge(face[1], face[3])
        }
        _ => false,
    }
}

fn move_is_valid(g: &Graph, mv: &Move) -> bool {
    let (r, w) = (&mv.replace, &mv.with);
    if r.is_empty() || w.is_empty() || r[0] != w[0] || r.last() != w.last() {
        return false;
    }
    if mv.face.len() == 2 {
        let (a, b) = (mv.face[0], mv.face[1]);
        return g.has_edge(a, b) && *r == [a, b, a] && *w == [a];
    }
    if !is_face(g, &mv.face) {
        return false;
    }
    // boundary: replace forward, then with backwards without its endpoints
    let mut boundary: Vec<usize> = r.clone();
    boundary.extend(w.iter().rev().skip(1).take(w.len().saturating_sub(2)));
    if boundary.len() != mv.face.len() {
        return false;
    }
    let mut a = boundary.clone();
    let mut b = mv.face.clone();
    a.sort_unstable();
    b.sort_unstable();
    a == b && (0..boundary.len()).all(|i| g.has_edge(boundary[i], boundary[(i + 1) % boundary.len()]))
}

/// Applies the moves to the input walk and checks that each one is a
/// genuine face or backtrack acting where it claims. Returns whether the
/// walk ends as a single vertex.
pub fn replay(g: &Graph, filling: &DiscFilling) -> Result<bool> {
    let mut walk = close_walk(g, &filling.cycle)?;
    for (i, mv) in filling.moves.iter().enumerate() {
        let end = mv.at + mv.replace.len();
        if !move_is_valid(g, mv) || end > walk.len() || walk[mv.at..end] != mv.replace[..] {
            return Err(Error::InvalidInput(format!("move {i} does not apply")));
        }
        walk.splice(mv.at..end, mv.with.iter().copied());
    }
    Ok(walk.len() == 1)
}

struct Filler<'g> {
    g: &'g Graph,
    moves: Vec<Move>,
}

impl Filler<'_> {
    fn face(&mut self, face: Vec<usize>, replace: Vec<usize>, with: Vec<usize>, at: usize) {
        self.moves.push(Move { face, replace, with, at });
    }

    /// Turns the walk prefix `path + [w]` (a geodesic from `path[0]`
    /// followed by one edge) into a geodesic from `path[0]` to `w`.
    fn fill(&mut self, path: Vec<usize>, w: usize) -> Result<Vec<usize>> {
        let d = self.g.dist();
        let u = path[0];
        let k = path.len() - 1;
        let v = path[k];
        if d.get(u, w) as usize == k + 1 {
            let mut q = path;
            q.push(w);
            return Ok(q);
        }
        let v1 = path[k - 1];
        let prefix = path[..k].to_vec();
        if w == v1 {
            self.face(vec![v1, v], vec![v1, v, v1], vec![v1], k - 1);
            return Ok(prefix);
        }
        if self.g.has_edge(w, v1) {
            self.face(vec![v1, v, w], vec![v1, v, w], vec![v1, w], k - 1);
            return self.fill(prefix, w);
        }
        let bound = d.get(u, v1) + d.get(u, w);
        let x = self
            .g
            .common_neighbors(v1, w)
            .into_iter()
            .find(|&x| 2 * d.get(u, x) <= bound)
            .ok_or_else(|| Error::Inconsistent(format!("no meshed common neighbour for {u}, {v1}, {w}")))?;
        if self.g.has_edge(v, x) {
            self.face(vec![v1, v, x], vec![v1, v], vec![v1, x, v], k - 1);
            self.face(vec![x, v, w], vec![x, v, w], vec![x, w], k);
        } else {
            self.face(vec![v1, v, w, x], vec![v1, v, w], vec![v1, x, w], k - 1);
        }
        let through_x = self.fill(prefix, x)?;
        self.fill(through_x, w)
    }
}

/// Contracts a closed walk of a meshed graph to its first vertex, sweeping
/// geodesics from that vertex to each successive walk vertex.
pub fn fill_cycle(g: &Graph, cycle: &[usize]) -> Result<DiscFilling> {
    if !check_metric_family(g, MetricFamily::Meshed).holds {
        return Err(Error::NotApplicable("graph is not meshed".into()));
    }
    let walk = close_walk(g, cycle)?;
    let mut filler = Filler { g, moves: Vec::new() };
    let mut geodesic = vec![walk[0]];
    for &next in &walk[1..] {
        geodesic = filler.fill(geodesic, next)?;
    }
    let area = filler.moves.iter().filter(|m| m.is_face()).count();
    let filling = DiscFilling { cycle: walk, moves: filler.moves, area };
    if !replay(g, &filling)? {
        return Err(Error::Inconsistent("filling does not contract the walk".into()));
    }
    Ok(filling)
}
