use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::*;
use crate::swm::SwmToolkit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Yes,
    No,
    NotEvaluated,
}

/// One family's row in the report. All three keys are always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub verdict: Status,
    pub witness: Option<Vec<usize>>,
    pub condition: Option<String>,
}

impl From<Verdict> for Entry {
    fn from(v: Verdict) -> Entry {
        let verdict = if v.holds { Status::Yes } else { Status::No };
        let (witness, condition) = match v.witness {
            Some(w) => (Some(w.vertices), Some(w.condition)),
            None => (None, None),
        };
        Entry { verdict, witness, condition }
    }
}

impl Entry {
    fn not_evaluated() -> Entry {
        Entry { verdict: Status::NotEvaluated, witness: None, condition: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: u32,
    pub two_connected: bool,
    /// Largest diameter of a Boolean-gated set; only for swm-graphs.
    pub cube_dimension: Option<u32>,
}

/// Family verdicts keyed by family name, plus derived parameters under the
/// key `parameters`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    #[serde(flatten)]
    pub families: BTreeMap<String, Entry>,
    pub parameters: Parameters,
}

/// Family keys, in report order.
pub const FAMILY_KEYS: [&str; 18] = [
    "weakly-modular",
    "modular",
    "meshed",
    "pseudo-modular",
    "bridged",
    "weakly-bridged",
    "locally-weakly-modular",
    "thick",
    "thin",
    "pre-median",
    "prime-pre-median",
    "swm",
    "dual-polar",
    "clique-Helly",
    "dismantlable",
    "Helly",
    "orientable",
    "simply-connected",
];

pub fn recognize(g: &Graph) -> ClassReport {
    let mut f: BTreeMap<String, Entry> = BTreeMap::new();
    let mut put = |k: &str, e: Entry| {
        f.insert(k.to_string(), e);
    };
    put("weakly-modular", check_weakly_modular(g).into());
    for fam in MetricFamily::ALL {
        put(fam.name(), check_metric_family(g, fam).into());
    }
    put("pre-median", check_pre_median(g).into());
    put("prime-pre-median", check_prime_pre_median(g).into());
    let swm = check_swm(g);
    let swm_holds = swm.holds;
    put("swm", swm.into());
    put("dual-polar", check_dual_polar(g).into());
    put("clique-Helly", check_clique_helly(g).into());
    put(
        "dismantlable",
        match check_dismantlable(g) {
            Some(_) => Verdict::yes(),
            None => Verdict::no("not dismantlable", Vec::new()),
        }
        .into(),
    );
    put("Helly", check_helly(g).into());
    put(
        "orientable",
        match find_admissible_orientation(g) {
            OrientationSearch::Found(_) => Verdict::yes(),
            OrientationSearch::Conflict(sq) => {
                Verdict::no("conflicting squares", sq.iter().flatten().copied().collect())
            }
        }
        .into(),
    );
    put(
        "simply-connected",
        match decide_simple_connectivity(g) {
            Ok(s) if s.simply_connected => Verdict::yes().into(),
            Ok(_) => Entry {
                verdict: Status::No,
                witness: None,
                condition: Some("complex not simply connected".into()),
            },
            Err(_) => Entry::not_evaluated(),
        },
    );
    let cube_dimension = if swm_holds {
        SwmToolkit::new(g).ok().map(|t| t.cube_dimension())
    } else {
        None
    };
    ClassReport {
        families: f,
        parameters: Parameters {
            vertices: g.n(),
            edges: g.m(),
            diameter: g.diameter(),
            two_connected: is_two_connected(g),
            cube_dimension,
        },
    }
}

impl ClassReport {
    pub fn status(&self, family: &str) -> Status {
        self.families.get(family).map_or(Status::NotEvaluated, |e| e.verdict)
    }

    pub fn is(&self, family: &str) -> bool {
        self.status(family) == Status::Yes
    }

    /// Implications of the hierarchy that this report of `g` violates.
    pub fn hierarchy_violations(&self, g: &Graph) -> Vec<String> {
        const IMPLIES: [(&str, &str); 11] = [
            ("modular", "weakly-modular"),
            ("bridged", "weakly-bridged"),
            ("weakly-bridged", "weakly-modular"),
            ("swm", "weakly-modular"),
            ("dual-polar", "swm"),
            ("pre-median", "weakly-modular"),
            ("prime-pre-median", "pre-median"),
            ("Helly", "clique-Helly"),
            ("Helly", "dismantlable"),
            ("weakly-modular", "meshed"),
            ("weakly-modular", "locally-weakly-modular"),
        ];
        let mut out = Vec::new();
        for (a, b) in IMPLIES {
            if self.is(a) && !self.is(b) {
                out.push(format!("{a} ⇒ {b}"));
            }
        }
        if self.is("meshed") && !check_triangle_condition(g).holds {
            out.push("meshed ⇒ triangle condition".into());
        }
        if self.is("modular") && !g.is_bipartite() {
            out.push("modular ⇒ bipartite".into());
        }
        if self.is("weakly-modular") && self.status("simply-connected") != Status::Yes {
            out.push("weakly-modular ⇒ simply-connected".into());
        }
        if self.is("dual-polar") != (self.is("swm") && self.is("thick")) {
            out.push("dual-polar ⇔ swm ∧ thick".into());
        }
        if self.is("Helly") != (self.is("clique-Helly") && self.is("dismantlable")) {
            out.push("Helly ⇔ clique-Helly ∧ dismantlable".into());
        }
        if self.is("thin") && self.is("thick") && self.parameters.diameter >= 2 {
            out.push("thin and thick with a distance-2 pair".into());
        }
        out
    }
}
