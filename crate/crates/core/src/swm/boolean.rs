use crate::graph::Graph;
use crate::metric::interval_members;

/// Whether `I(p,q)`, ordered from `p`, is a complemented modular lattice,
/// assuming `g` is swm. A maximal chain `p = x0 < x1 < … < xk = q` is
/// walked; every step must be a join with an atom.
pub(crate) fn boolean_pair(g: &Graph, p: usize, q: usize) -> bool {
    let d = g.dist();
    let k = d.get(p, q);
    if k <= 1 {
        return true;
    }
    let members = interval_members(g, p, q);
    let mut inside = vec![false; g.n()];
    for &v in &members {
        inside[v] = true;
    }
    let mut chain = vec![p];
    for i in 0..k {
        let x = chain[i as usize];
        let next = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&y| inside[y] && d.get(p, y) == i + 1)
            .expect("interval is graded by distance from p");
        chain.push(next);
    }
    let atoms: Vec<usize> = g.neighbors(p).iter().copied().filter(|&z| inside[z]).collect();
    (1..k as usize).all(|i| {
        let (x, up) = (chain[i], chain[i + 1]);
        atoms.iter().any(|&z| join(g, &members, x, z, q) == Some(up))
    })
}

/// Join of `x` and `y` in the interval lattice with top `q`: the median of
/// `(x, y, q)`, provided it is unique.
fn join(g: &Graph, members: &[usize], x: usize, y: usize, q: usize) -> Option<usize> {
    let d = g.dist();
    let mut found = None;
    for &m in members {
        if d.between(x, m, y) && d.between(y, m, q) && d.between(x, m, q) {
            if found.is_some() {
                return None;
            }
            found = Some(m);
        }
    }
    found
}
