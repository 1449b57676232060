//! Corpora and brute-force oracles shared by the integration tests. The
//! oracles recompute everything from the definitions with their own
//! distance tables and never call the library's checks.

#![allow(dead_code)]

use wmgraph::generate;
use wmgraph::{Graph, Pattern};

pub type Dist = Vec<Vec<u32>>;

pub const INF: u32 = u32::MAX / 4;

/// Floyd–Warshall on the adjacency relation.
pub fn floyd(g: &Graph) -> Dist {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(&v)
}

fn common(g: &Graph, v: usize, w: usize) -> Vec<usize> {
    (0..g.n()).filter(|&x| adjacent(g, x, v) && adjacent(g, x, w)).collect()
}

pub fn brute_weakly_modular(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let k = d[u][v];
                if k == 0 || d[u][w] != k {
                    continue;
                }
                let cn = common(g, v, w);
                let has_closer = cn.iter().any(|&x| d[u][x] + 1 == k);
                if d[v][w] == 1 && !has_closer {
                    return false;
                }
                if d[v][w] == 2 && k >= 2 && cn.iter().any(|&z| d[u][z] == k + 1) && !has_closer {
                    return false;
                }
            }
        }
    }
    true
}

/// Every triple has a median.
pub fn brute_modular(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    let on = |a: usize, m: usize, b: usize| d[a][m] + d[m][b] == d[a][b];
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| (0..n).any(|m| on(a, m, b) && on(b, m, c) && on(a, m, c))))
    })
}

pub fn brute_meshed(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    (0..n).all(|u| {
        (0..n).all(|v| {
            (0..n).all(|w| d[v][w] != 2 || common(g, v, w).iter().any(|&x| 2 * d[u][x] <= d[u][v] + d[u][w]))
        })
    })
}

pub fn brute_pseudo_modular(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    for u in 0..n {
        for w in 0..n {
            if !(1..=2).contains(&d[u][w]) {
                continue;
            }
            for v in 0..n {
                let k = d[v][u];
                if k >= 2 && d[v][w] == k && !common(g, u, w).iter().any(|&x| d[v][x] + 1 == k) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn maximal_cliques(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let is_clique = |s: u64| {
        (0..n).all(|a| s >> a & 1 == 0 || (a + 1..n).all(|b| s >> b & 1 == 0 || adjacent(g, a, b)))
    };
    let cliques: Vec<u64> = (1u64..1 << n).filter(|&s| is_clique(s)).collect();
    cliques
        .iter()
        .copied()
        .filter(|&s| !cliques.iter().any(|&t| t != s && t & s == s))
        .collect()
}

/// Every pairwise intersecting family of maximal cliques has a common vertex.
pub fn brute_clique_helly(g: &Graph) -> bool {
    helly_family(&maximal_cliques(g))
}

/// Every pairwise intersecting subfamily has a common member; all such
/// subfamilies are visited by depth-first search in index order.
pub fn helly_family(sets: &[u64]) -> bool {
    let mut sets = sets.to_vec();
    sets.sort_unstable();
    sets.dedup();
    fn all(sets: &[u64], chosen: &mut Vec<usize>, meet: u64, start: usize) -> bool {
        if !chosen.is_empty() && meet == 0 {
            return false;
        }
        for j in start..sets.len() {
            if chosen.iter().all(|&i| sets[i] & sets[j] != 0) {
                chosen.push(j);
                let ok = all(sets, chosen, meet & sets[j], j + 1);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    all(&sets, &mut Vec::new(), u64::MAX, 0)
}

/// Helly test by the triple criterion: for any three points, the members
/// containing at least two of them share a point.
pub fn helly_by_triples(n: usize, sets: &[u64]) -> bool {
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let pts = [a, b, c];
                let meet = sets
                    .iter()
                    .filter(|&&s| pts.iter().filter(|&&p| s >> p & 1 == 1).count() >= 2)
                    .fold(u64::MAX, |acc, &s| acc & s);
                if meet == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Balls of every radius around every vertex have the Helly property.
pub fn brute_ball_helly(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    let diam = (0..n).flat_map(|u| d[u].iter().copied()).max().unwrap_or(0);
    let mut balls = Vec::new();
    for c in 0..n {
        for r in 0..=diam {
            balls.push((0..n).filter(|&x| d[c][x] <= r).fold(0u64, |acc, x| acc | 1 << x));
        }
    }
    helly_by_triples(n, &balls)
}

/// Induced (and, for the isometric variant, distance-3 far pair) copy of
/// the pattern, found by trying every injective map.
pub fn brute_pattern(g: &Graph, p: Pattern) -> bool {
    let k = p.order();
    let n = g.n();
    if k > n {
        return false;
    }
    let edges = p.edges();
    let pat_adj = |a: usize, b: usize| edges.contains(&(a, b)) || edges.contains(&(b, a));
    let d = floyd(g);
    let mut map = Vec::with_capacity(k);
    fn rec(
        g: &Graph,
        k: usize,
        map: &mut Vec<usize>,
        pat_adj: &dyn Fn(usize, usize) -> bool,
        accept: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if map.len() == k {
            return accept(map);
        }
        let i = map.len();
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| pat_adj(i, j) == adjacent(g, map[j], v)) {
                map.push(v);
                if rec(g, k, map, pat_adj, accept) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let accept = |m: &[usize]| p != Pattern::K33minusIsometric || d[m[0]][m[5]] == 3;
    rec(g, k, &mut map, &pat_adj, &accept)
}

/// Whether `hit` is an induced copy of the pattern in `g`.
pub fn is_pattern_copy(g: &Graph, p: Pattern, hit: &[usize]) -> bool {
    let edges = p.edges();
    let k = p.order();
    hit.len() == k
        && (0..k).all(|a| (a + 1..k).all(|b| (edges.contains(&(a, b)) || edges.contains(&(b, a))) == adjacent(g, hit[a], hit[b])))
        && (p != Pattern::K33minusIsometric || floyd(g)[hit[0]][hit[5]] == 3)
}

/// Some elimination order of dominated vertices reaches a single vertex,
/// searched over all orders with memoisation on the remaining set.
pub fn brute_dismantlable(g: &Graph) -> bool {
    let n = g.n();
    let full: u64 = (1 << n) - 1;
    let mut seen = std::collections::HashSet::new();
    fn go(g: &Graph, alive: u64, seen: &mut std::collections::HashSet<u64>) -> bool {
        if alive.count_ones() <= 1 {
            return true;
        }
        if !seen.insert(alive) {
            return false;
        }
        let n = g.n();
        let closed = |v: usize| -> u64 {
            g.neighbors(v).iter().fold(1u64 << v, |acc, &y| acc | 1 << y) & alive
        };
        for v in (0..n).filter(|&v| alive >> v & 1 == 1) {
            let nv = closed(v);
            let dominated = (0..n).any(|w| w != v && alive >> w & 1 == 1 && nv & !closed(w) == 0);
            if dominated && go(g, alive & !(1 << v), seen) {
                return true;
            }
        }
        false
    }
    go(g, full, &mut seen)
}

pub fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(generate::small_connected_graphs).collect()
}

/// Named generator graphs with at most 16 vertices, plus products,
/// amalgams and seeded random swm-graphs.
pub fn generator_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: String, g: wmgraph::Result<Graph>| out.push((name, g.unwrap()));
    for n in 2..=8 {
        add(format!("path({n})"), generate::path(n));
    }
    for n in 3..=9 {
        add(format!("cycle({n})"), generate::cycle(n));
    }
    for n in 1..=6 {
        add(format!("complete({n})"), generate::complete(n));
    }
    for (r, c) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (2, 6)] {
        add(format!("grid({r},{c})"), generate::grid(r, c));
    }
    for d in 1..=4 {
        add(format!("cube({d})"), generate::cube(d));
    }
    for k in 2..=4 {
        add(format!("hyperoctahedron({k})"), generate::hyperoctahedron(k));
    }
    for a in 1..=3 {
        for b in a..=4 {
            add(format!("complete-bipartite({a},{b})"), generate::complete_bipartite(a, b));
        }
    }
    let k2 = generate::complete(2).unwrap();
    let k3 = generate::complete(3).unwrap();
    let c4 = generate::cycle(4).unwrap();
    let c5 = generate::cycle(5).unwrap();
    add("K2 x K3".into(), generate::cartesian_product(&k2, &k3));
    add("K3 x K3".into(), generate::cartesian_product(&k3, &k3));
    add("C4 x K3".into(), generate::cartesian_product(&c4, &k3));
    add("C5 x K2".into(), generate::cartesian_product(&c5, &k2));
    add("K2,3 x K2".into(), generate::cartesian_product(&generate::complete_bipartite(2, 3).unwrap(), &k2));
    add("domino".into(), generate::gated_amalgam(&c4, &[0, 1], &c4, &[0, 1]));
    add("Q3 + C4 on an edge".into(), generate::gated_amalgam(&generate::cube(3).unwrap(), &[0, 1], &c4, &[0, 1]));
    add("K4 + C5 on a vertex".into(), generate::gated_amalgam(&generate::complete(4).unwrap(), &[0], &c5, &[0]));
    add("Q3 + K3 on a vertex".into(), generate::gated_amalgam(&generate::cube(3).unwrap(), &[0], &k3, &[0]));
    for seed in 0..40 {
        add(format!("random-swm({seed},14)"), generate::random_swm(seed, 14));
    }
    out
}

/// Simple cycles up to `max_len`, each listed once starting at its
/// smallest vertex and oriented so the second vertex is below the last.
pub fn simple_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on = vec![false; g.n()];
        on[s] = true;
        extend(g, s, max_len, &mut path, &mut on, &mut out);
    }
    fn extend(
        g: &Graph,
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &y in g.neighbors(last) {
            if y == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if y > s && !on[y] && path.len() < max_len {
                on[y] = true;
                path.push(y);
                extend(g, s, max_len, path, on, out);
                path.pop();
                on[y] = false;
            }
        }
    }
    out
}
