use std::path::{Path, PathBuf};

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};
use wmgraph::analysis::{bfs_order, fill_cycle, is_distance_preserving, verify_hyperbolicity_bounds};
use wmgraph::cover::universal_cover_ball_capped;
use wmgraph::metric::gated_hull;
use wmgraph::recognition::recognize;
use wmgraph::swm::{barycentric_iterate, diagonal_extension, partial_thickening, thickening, wm_skeleton};
use wmgraph::zero_ext::{approx2, format_rational, solve_exact};
use wmgraph::{generate, Graph, Rational, SwmToolkit, VertexSet, ZeroExtInstance};

use crate::io::{
    emit_graph, exit_code, print_json, read_graph, read_manifest, read_text, usage, Failure,
    Outcome, NOT_APPLICABLE,
};
use crate::{Command, GraphInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZeroExtMode {
    Exact,
    Approx,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Kind {
    /// Path on n vertices.
    Path { n: usize },
    /// Cycle on n vertices.
    Cycle { n: usize },
    /// Complete graph on n vertices.
    Complete { n: usize },
    /// Grid with the given numbers of rows and columns.
    Grid { rows: usize, cols: usize },
    /// Hypercube of dimension d.
    Cube { d: usize },
    /// Complete graph on 2k vertices minus a perfect matching.
    Hyperoctahedron { k: usize },
    /// Complete bipartite graph with sides a and b.
    CompleteBipartite { a: usize, b: usize },
    /// Cartesian product of two graph files.
    CartesianProduct { left: PathBuf, right: PathBuf },
    /// Glue two graph files along gated sets listed in matching order.
    GatedAmalgam {
        left: PathBuf,
        left_set: VertexList,
        right: PathBuf,
        right_set: VertexList,
    },
    /// Seeded random swm-graph built from products and gated amalgams.
    RandomSwm {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        max_vertices: usize,
    },
}

/// Comma-separated vertices given as one positional argument.
#[derive(Clone, Debug)]
pub struct VertexList(Vec<usize>);

impl std::str::FromStr for VertexList {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',').map(|v| v.trim().parse()).collect::<Result<_, _>>().map(VertexList)
    }
}

pub fn run(command: Command) -> Outcome<()> {
    match command {
        Command::Recognize { input, .. } => {
            per_graph(&input, |g| Ok((serde_json::to_value(recognize(g)).expect("report serializes"), None)))
        }
        Command::Hull { graph, set, .. } => {
            let g = read_graph(&graph)?;
            let hull = gated_hull(&g, &VertexSet::plain(set.clone()))?;
            print_json(&json!({ "set": set, "hull": hull.members }));
            Ok(())
        }
        Command::Gstar { graph, iterate, output } => {
            let g = read_graph(&graph)?;
            let bary = barycentric_iterate(&g, iterate)?;
            emit_graph(&bary.graph, bary.side_tables(), output.out.as_deref(), output.json)
        }
        Command::Thicken { graph, k, output } => {
            let g = read_graph(&graph)?;
            let t = match k {
                Some(k) => partial_thickening(&g, k)?,
                None => thickening(&g)?,
            };
            emit_graph(&t, Value::Null, output.out.as_deref(), output.json)
        }
        Command::Normalpath { graph, from, to, fellow, .. } => normal_path(&graph, from, to, fellow),
        Command::Zeroext { graph, instance, mode, anchor, budget, .. } => {
            zero_ext(&graph, &instance, mode, anchor, budget)
        }
        Command::Hyperbolicity { input, cap, .. } => per_graph(&input, |g| {
            let report = verify_hyperbolicity_bounds(g, cap)?;
            let note = (!report.weakly_modular).then(|| Failure {
                code: NOT_APPLICABLE,
                message: "graph is not weakly modular; bounds not evaluated".into(),
            });
            Ok((serde_json::to_value(report).expect("report serializes"), note))
        }),
        Command::Bfs { graph, seed, base, order, .. } => {
            let g = read_graph(&graph)?;
            let built = match order {
                Some(_) => None,
                None => Some(bfs_order(&g, base, seed)?),
            };
            let order = order.unwrap_or_else(|| built.as_ref().expect("built above").order.clone());
            let (ok, witness) = is_distance_preserving(&g, &order)?;
            let mut v = json!({
                "order": order,
                "distance_preserving": ok,
                "witness": witness.map(|(prefix, newest, wrong)| json!({
                    "prefix_length": prefix, "newest": newest, "vertex": wrong,
                })),
            });
            if let Some(b) = built {
                v["parent"] = json!(b.parent);
                v["base"] = json!(b.base);
                v["seed"] = json!(seed);
            }
            print_json(&v);
            Ok(())
        }
        Command::Fill { graph, cycle, .. } => {
            let g = read_graph(&graph)?;
            let f = fill_cycle(&g, &cycle)?;
            let len = f.length();
            let mut v = serde_json::to_value(&f).expect("filling serializes");
            v["length"] = json!(len);
            v["area_bound"] = json!(2 * len * len);
            print_json(&v);
            Ok(())
        }
        Command::Cover { graph, base, radius, cap, output } => {
            let g = read_graph(&graph)?;
            let ball = universal_cover_ball_capped(&g, base, radius, cap)?;
            let extra = json!({ "projection": ball.projection_json(), "radius": radius, "base": base });
            emit_graph(&ball.graph, extra, output.out.as_deref(), output.json)
        }
        Command::Diag { graph, k, cap, output } => {
            let g = read_graph(&graph)?;
            let (d, extra) = match k {
                Some(k) => (diagonal_extension(&g, k)?, json!({ "k": k })),
                None => {
                    let (d, rank) = wm_skeleton(&g, cap)?;
                    (d, json!({ "rank": rank }))
                }
            };
            emit_graph(&d, extra, output.out.as_deref(), output.json)
        }
        Command::Generate { kind, output } => {
            let g = generated(kind)?;
            emit_graph(&g, Value::Null, output.out.as_deref(), output.json)
        }
    }
}

/// Runs `f` on the single graph or on every manifest entry. An entry may
/// carry a note: a failure reported after its JSON is printed.
fn per_graph(input: &GraphInput, f: impl Fn(&Graph) -> Outcome<(Value, Option<Failure>)>) -> Outcome<()> {
    let Some(manifest) = &input.manifest else {
        let path = input.graph.as_ref().ok_or_else(|| usage("--graph or --manifest is required"))?;
        let (v, note) = f(&read_graph(path)?)?;
        print_json(&v);
        return note.map_or(Ok(()), Err);
    };
    let mut results = Vec::new();
    let mut first_failure: Option<Failure> = None;
    for (name, path) in read_manifest(manifest)? {
        let outcome = read_graph(&path).and_then(|g| f(&g));
        let (entry, failure) = match outcome {
            Ok((v, note)) => (json!({ "graph": name, "result": v }), note),
            Err(e) => (json!({ "graph": name, "error": e.message, "exit": e.code }), Some(e)),
        };
        results.push(entry);
        if first_failure.is_none() {
            first_failure = failure;
        }
    }
    print_json(&Value::Array(results));
    first_failure.map_or(Ok(()), |e| {
        Err(Failure { code: e.code, message: format!("manifest entry failed: {}", e.message) })
    })
}

fn normal_path(graph: &Path, from: usize, to: usize, fellow: Option<Vec<usize>>) -> Outcome<()> {
    let g = read_graph(graph)?;
    for v in [from, to] {
        g.check_vertex(v)?;
    }
    let kit = SwmToolkit::new(&g)?;
    let path = kit.normal_path(from, to)?;
    let mut v = json!({
        "vertices": path.vertices,
        "hulls": path.hulls.iter().map(|h| &h.members).collect::<Vec<_>>(),
        "length": path.vertices.len() - 1,
        "thickened_distance": kit.delta_distance(from, to),
    });
    if let Some(pair) = fellow {
        let [q, y] = pair[..] else {
            return Err(usage("--fellow takes two vertices q,y"));
        };
        for v in [q, y] {
            g.check_vertex(v)?;
        }
        let other = kit.normal_path(q, y)?;
        v["fellow"] = json!({
            "vertices": other.vertices,
            "fellow_travelers": kit.fellow_travel(from, q, to, y)?,
        });
    }
    print_json(&v);
    Ok(())
}

fn zero_ext(graph: &Path, instance: &Path, mode: ZeroExtMode, anchor: usize, budget: u128) -> Outcome<()> {
    let g = read_graph(graph)?;
    let inst = ZeroExtInstance::from_json(&read_text(instance)?).map_err(|e| Failure {
        code: exit_code(&e),
        message: format!("{}: {e}", instance.display()),
    })?;
    inst.validate(&g)?;
    let exact = match mode {
        ZeroExtMode::Approx => None,
        _ => Some(solve_exact(&g, &inst, budget)?),
    };
    let approx = match mode {
        ZeroExtMode::Exact => None,
        _ => Some(approx2(&g, &inst, anchor, budget)?),
    };
    let ratio = match (&exact, &approx) {
        (Some(e), Some(a)) if e.cost > Rational::from_integer(0.into()) => {
            Some(format_rational(&(&a.cost / &e.cost)))
        }
        (Some(_), Some(_)) => Some("1".to_string()),
        _ => None,
    };
    print_json(&json!({
        "instance": inst.to_json(),
        "exact": exact.as_ref().map(|e| e.to_json()),
        "approx": approx.as_ref().map(|a| {
            let mut v = a.to_json();
            v["anchor"] = json!(anchor);
            v
        }),
        "ratio": ratio,
    }));
    Ok(())
}

fn generated(kind: Kind) -> Outcome<Graph> {
    Ok(match kind {
        Kind::Path { n } => generate::path(n)?,
        Kind::Cycle { n } => generate::cycle(n)?,
        Kind::Complete { n } => generate::complete(n)?,
        Kind::Grid { rows, cols } => generate::grid(rows, cols)?,
        Kind::Cube { d } => generate::cube(d)?,
        Kind::Hyperoctahedron { k } => generate::hyperoctahedron(k)?,
        Kind::CompleteBipartite { a, b } => generate::complete_bipartite(a, b)?,
        Kind::CartesianProduct { left, right } => {
            generate::cartesian_product(&read_graph(&left)?, &read_graph(&right)?)?
        }
        Kind::GatedAmalgam { left, left_set, right, right_set } => {
            generate::gated_amalgam(&read_graph(&left)?, &left_set.0, &read_graph(&right)?, &right_set.0)?
        }
        Kind::RandomSwm { seed, max_vertices } => generate::random_swm(seed, max_vertices)?,
    })
}
