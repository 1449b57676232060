use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use wmgraph::{Error, Graph};

/// A failed command: process exit code and a diagnostic for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub const NOT_APPLICABLE: u8 = 2;
pub const USAGE: u8 = 3;
pub const LIMIT: u8 = 4;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotApplicable(_) => NOT_APPLICABLE,
        Error::Parse { .. }
        | Error::InvalidGraph(_)
        | Error::Disconnected { .. }
        | Error::InvalidVertex { .. }
        | Error::InvalidInput(_)
        | Error::NotAClosedWalk(_) => USAGE,
        e if e.is_resource_limit() => LIMIT,
        _ => 1,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

pub fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

pub fn read_text(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Outcome<Graph> {
    Graph::parse(&read_text(path)?).map_err(|e| Failure {
        code: exit_code(&e),
        message: format!("{}: {e}", path.display()),
    })
}

/// Entries of a manifest as written, each with its path resolved against
/// the manifest's directory.
pub fn read_manifest(path: &Path) -> Outcome<Vec<(String, PathBuf)>> {
    let dir = path.parent().unwrap_or(Path::new("."));
    Ok(read_text(path)?
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| (l.to_string(), dir.join(l)))
        .collect())
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

/// Emits a produced graph. The graph file goes to `out` when given. With
/// `as_json`, standard output receives the graph and `extra` as one JSON
/// object; otherwise it receives the graph file, or `extra` alone when the
/// file went to `out`.
pub fn emit_graph(g: &Graph, extra: Value, out: Option<&Path>, as_json: bool) -> Outcome<()> {
    let text = g.to_text();
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    if as_json {
        let mut v = json!({ "graph": graph_json(g) });
        if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        print_json(&v);
    } else if out.is_none() {
        print!("{text}");
    } else if !extra.is_null() {
        print_json(&extra);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_json_lists_edges() {
        let g = wmgraph::generate::path(3).unwrap();
        assert_eq!(graph_json(&g), json!({ "n": 3, "edges": [[0, 1], [1, 2]] }));
    }
}
