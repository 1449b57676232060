//! Named graph families, products, gated amalgams, seeded random swm-graphs
//! and exhaustive enumeration of small connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metric::{is_gated, CheckMode};

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg.into()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs at least one vertex")?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs at least three vertices")?;
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((0, n - 1));
    Graph::new(n, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "clique needs at least one vertex")?;
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::new(n, &e)
}

/// `rows × cols` vertices; vertex `(r,c)` has id `r*cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    need(rows >= 1 && cols >= 1, "grid dimensions must be positive")?;
    let mut e = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                e.push((v, v + 1));
            }
            if r + 1 < rows {
                e.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, &e)
}

/// Hypercube of dimension `d`; vertices are bit strings.
pub fn cube(d: usize) -> Result<Graph> {
    need(d <= 16, "cube dimension too large")?;
    let n = 1usize << d;
    let e: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::new(n, &e)
}

/// Cocktail-party graph on `2k` vertices: `2i` and `2i+1` are the only
/// non-adjacent pairs.
pub fn hyperoctahedron(k: usize) -> Result<Graph> {
    need(k >= 1, "hyperoctahedron needs k ≥ 1")?;
    if k == 1 {
        return Err(Error::InvalidInput("hyperoctahedron with k = 1 is disconnected".into()));
    }
    let n = 2 * k;
    let e: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i / 2 != j / 2)
        .collect();
    Graph::new(n, &e)
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    need(a >= 1 && b >= 1, "both sides must be nonempty")?;
    let e: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Graph::new(a + b, &e)
}

/// Cartesian product; vertex `(x,y)` has id `x * h.n() + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n1, n2) = (g.n(), h.n());
    let mut e = Vec::new();
    for x in 0..n1 {
        for (a, b) in h.edges() {
            e.push((x * n2 + a, x * n2 + b));
        }
    }
    for (a, b) in g.edges() {
        for y in 0..n2 {
            e.push((a * n2 + y, b * n2 + y));
        }
    }
    Graph::new(n1 * n2, &e)
}

/// Glues `h` onto `g` by identifying `h_set[i]` with `g_set[i]`. Both sets
/// must be gated in their graphs and the correspondence must be an
/// isomorphism of induced subgraphs. Vertices of `g` keep their ids; the
/// remaining vertices of `h` follow in increasing order.
pub fn gated_amalgam(g: &Graph, g_set: &[usize], h: &Graph, h_set: &[usize]) -> Result<Graph> {
    need(!g_set.is_empty(), "amalgam interface is empty")?;
    need(g_set.len() == h_set.len(), "interface lists differ in length")?;
    for &v in g_set {
        g.check_vertex(v)?;
    }
    for &v in h_set {
        h.check_vertex(v)?;
    }
    let distinct = |s: &[usize]| s.iter().collect::<BTreeSet<_>>().len() == s.len();
    need(distinct(g_set) && distinct(h_set), "interface lists repeat a vertex")?;
    if !is_gated(g, &VertexSet::plain(g_set.to_vec()), CheckMode::Definitional)? {
        return Err(Error::InvalidInput("amalgam interface is not gated in the first graph".into()));
    }
    if !is_gated(h, &VertexSet::plain(h_set.to_vec()), CheckMode::Definitional)? {
        return Err(Error::InvalidInput("amalgam interface is not gated in the second graph".into()));
    }
    for i in 0..g_set.len() {
        for j in i + 1..g_set.len() {
            if g.has_edge(g_set[i], g_set[j]) != h.has_edge(h_set[i], h_set[j]) {
                return Err(Error::InvalidInput(
                    "interface correspondence is not an isomorphism".into(),
                ));
            }
        }
    }
    let mut id = vec![usize::MAX; h.n()];
    for (i, &v) in h_set.iter().enumerate() {
        id[v] = g_set[i];
    }
    let mut next = g.n();
    for slot in id.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut e: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    for (a, b) in h.edges() {
        let (x, y) = (id[a], id[b]);
        e.insert((x.min(y), x.max(y)));
    }
    Graph::new(next, &e.into_iter().collect::<Vec<_>>())
}

/// Seeded random swm-graph with at most `max_vertices` vertices, built from
/// cliques, cubes and complete bipartite graphs by Cartesian products and
/// gated amalgams.
pub fn random_swm(seed: u64, max_vertices: usize) -> Result<Graph> {
    need(max_vertices >= 2, "random-swm needs room for at least two vertices")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_piece(&mut rng, max_vertices);
    let steps = rng.gen_range(1..=6);
    for _ in 0..steps {
        let piece = random_piece(&mut rng, max_vertices);
        let product_fits = g.n() * piece.n() <= max_vertices;
        if product_fits && rng.gen_bool(0.3) {
            g = cartesian_product(&g, &piece)?;
            continue;
        }
        if let Some(next) = random_amalgam(&mut rng, &g, &piece, max_vertices)? {
            g = next;
        }
    }
    Ok(g)
}

fn random_piece(rng: &mut ChaCha8Rng, max_vertices: usize) -> Graph {
    loop {
        let g = match rng.gen_range(0..3) {
            0 => complete(rng.gen_range(2..=4)),
            1 => cube(rng.gen_range(1..=3)),
            _ => {
                let a = rng.gen_range(1..=3);
                complete_bipartite(a, rng.gen_range(a.max(2)..=3))
            }
        }
        .expect("piece parameters are valid");
        if g.n() <= max_vertices {
            return g;
        }
    }
}

/// Interfaces offered for gluing: vertices, edges, triangles and induced
/// squares that are gated; each listed in a canonical cyclic order.
fn gated_interfaces(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let gated = |s: &[usize]| {
        is_gated(g, &VertexSet::plain(s.to_vec()), CheckMode::Definitional).unwrap_or(false)
    };
    let mut shapes: Vec<Vec<Vec<usize>>> = vec![Vec::new(); 4];
    shapes[0] = (0..g.n()).map(|v| vec![v]).collect();
    for (a, b) in g.edges() {
        if gated(&[a, b]) {
            shapes[1].push(vec![a, b]);
        }
        for &c in g.common_neighbors(a, b).iter().filter(|&&c| c > b) {
            if gated(&[a, b, c]) {
                shapes[2].push(vec![a, b, c]);
            }
        }
    }
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &d in g.neighbors(a).iter().filter(|&&d| d > b) {
                if g.has_edge(b, d) {
                    continue;
                }
                for c in g.common_neighbors(b, d) {
                    if c > a && !g.has_edge(a, c) && gated(&[a, b, c, d]) {
                        shapes[3].push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    shapes
}

fn random_amalgam(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    piece: &Graph,
    max_vertices: usize,
) -> Result<Option<Graph>> {
    let (ig, ip) = (gated_interfaces(g), gated_interfaces(piece));
    let shapes: Vec<usize> = (0..4)
        .filter(|&s| !ig[s].is_empty() && !ip[s].is_empty())
        .filter(|&s| g.n() + piece.n() - (s + 1) <= max_vertices)
        .collect();
    let Some(&shape) = shapes.choose(rng) else {
        return Ok(None);
    };
    let left = ig[shape].choose(rng).expect("nonempty").clone();
    let mut right = ip[shape].choose(rng).expect("nonempty").clone();
    if shape == 3 {
        // squares are listed cyclically: any rotation or reflection matches
        right.rotate_left(rng.gen_range(0..4));
        if rng.gen_bool(0.5) {
            right.reverse();
        }
    } else {
        right.shuffle(rng);
    }
    gated_amalgam(g, &left, piece, &right).map(Some)
}

/// Every connected graph on `n ≤ 8` vertices, one per isomorphism class,
/// in a fixed order.
pub fn small_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "enumeration supports 1..=8 vertices");
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(code, k - 1);
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                next.insert(canonical_code(k, &edges));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .filter_map(|code| Graph::new(n, &decode(code, n)).ok())
        .collect()
}

fn pair_index(i: usize, j: usize) -> usize {
    // i < j
    j * (j - 1) / 2 + i
}

fn decode(code: u64, n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                e.push((i, j));
            }
        }
    }
    e
}

/// Maximum edge code over relabellings that respect a degree-based vertex
/// partition; equal for isomorphic graphs.
fn canonical_code(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    let key = |v: usize| {
        let mut nd: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut label = vec![0usize; n];
    permute_cells(&cells, 0, 0, &mut label, &mut |label| {
        let mut code = 0u64;
        for &(a, b) in edges {
            let (x, y) = (label[a].min(label[b]), label[a].max(label[b]));
            code |= 1 << pair_index(x, y);
        }
        best = best.max(code);
    });
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    ci: usize,
    offset: usize,
    label: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if ci == cells.len() {
        visit(label);
        return;
    }
    let mut cell = cells[ci].clone();
    heap_permutations(&mut cell, &mut |perm| {
        for (i, &v) in perm.iter().enumerate() {
            label[v] = offset + i;
        }
        permute_cells(cells, ci + 1, offset + perm.len(), label, visit);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k - 1 {
            rec(k - 1, items, visit);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        rec(k - 1, items, visit);
    }
    let k = items.len();
    rec(k, items, visit);
}
