//! Minimum 0-extension on swm-graphs: exact enumeration, and the factor-2
//! rounding of an optimal placement in the barycentric graph.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, Graph};
use crate::metric::gate_of;
use crate::swm::SwmToolkit;

pub type Rational = BigRational;

pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// `n` facilities; `b` holds `(facility, vertex, weight)` and `c` holds
/// `(i, j, weight)` with `i < j`. Facilities are numbered from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroExtInstance {
    pub n: usize,
    pub b: Vec<(usize, usize, Rational)>,
    pub c: Vec<(usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroExtSolution {
    pub assignment: Vec<usize>,
    pub cost: Rational,
    /// Optimal value of the relaxation, when one was solved.
    pub bound: Option<Rational>,
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let p: BigInt = digits.parse().map_err(|_| bad())?;
        let q = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(p, q));
    }
    Ok(Rational::from_integer(s.parse().map_err(|_| bad())?))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn weight_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(num) if num.is_u64() || num.is_i64() => parse_rational(&num.to_string()),
        Value::String(s) => parse_rational(s),
        _ => Err(Error::InvalidInput(format!(
            "weight {v} must be an integer or a string such as \"3/4\""
        ))),
    }
}

impl ZeroExtInstance {
    pub fn from_json(text: &str) -> Result<ZeroExtInstance> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let n = v["n"].as_u64().ok_or_else(|| bad("missing integer field \"n\"".into()))? as usize;
        let triples = |key: &str| -> Result<Vec<(usize, usize, Rational)>> {
            let Some(list) = v.get(key) else { return Ok(Vec::new()) };
            let list = list.as_array().ok_or_else(|| bad(format!("\"{key}\" must be a list")))?;
            list.iter()
                .map(|t| {
                    let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                        bad(format!("entries of \"{key}\" must be [index, index, weight]"))
                    })?;
                    let idx = |x: &Value| {
                        x.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("bad index {x}")))
                    };
                    Ok((idx(&t[0])?, idx(&t[1])?, weight_from_json(&t[2])?))
                })
                .collect()
        };
        let b = triples("b")?;
        let c = triples("c")?
            .into_iter()
            .map(|(i, j, w)| (i.min(j), i.max(j), w))
            .collect();
        Ok(ZeroExtInstance { n, b, c })
    }

    pub fn to_json(&self) -> Value {
        let t = |v: &[(usize, usize, Rational)]| -> Vec<Value> {
            v.iter().map(|(a, b, w)| json!([a, b, format_rational(w)])).collect()
        };
        json!({ "n": self.n, "b": t(&self.b), "c": t(&self.c) })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (i, v, w) in &self.b {
            if *i >= self.n {
                return Err(Error::InvalidInput(format!("facility {i} out of range")));
            }
            g.check_vertex(*v)?;
            if w.is_negative() {
                return Err(Error::InvalidInput("weights must be nonnegative".into()));
            }
        }
        for (i, j, w) in &self.c {
            if *j >= self.n || i == j {
                return Err(Error::InvalidInput(format!("bad facility pair ({i}, {j})")));
            }
            if w.is_negative() {
                return Err(Error::InvalidInput("weights must be nonnegative".into()));
            }
        }
        Ok(())
    }
}

impl ZeroExtSolution {
    pub fn to_json(&self) -> Value {
        json!({
            "assignment": self.assignment,
            "cost": format_rational(&self.cost),
            "bound": self.bound.as_ref().map(format_rational),
        })
    }
}

/// Exact objective value of an assignment.
pub fn cost(g: &Graph, inst: &ZeroExtInstance, assignment: &[usize]) -> Result<Rational> {
    inst.validate(g)?;
    if assignment.len() != inst.n {
        return Err(Error::InvalidInput(format!(
            "assignment has {} entries for {} facilities",
            assignment.len(),
            inst.n
        )));
    }
    for &x in assignment {
        g.check_vertex(x)?;
    }
    let mut total = Rational::zero();
    for (i, v, w) in &inst.b {
        total += w * Rational::from_integer(g.d(*v, assignment[*i]).into());
    }
    for (i, j, w) in &inst.c {
        total += w * Rational::from_integer(g.d(assignment[*i], assignment[*j]).into());
    }
    Ok(total)
}

/// Instance with weights scaled to integers by the common denominator.
struct Scaled {
    denom: BigInt,
    b: Vec<(usize, usize, i128)>,
    c: Vec<(usize, usize, i128)>,
}

fn overflow() -> Error {
    Error::InvalidInput("weights too large for exact enumeration".into())
}

impl Scaled {
    fn new(inst: &ZeroExtInstance) -> Result<Scaled> {
        let denom = inst
            .b
            .iter()
            .chain(&inst.c)
            .fold(BigInt::one(), |acc, (_, _, w)| acc.lcm(w.denom()));
        let scale = |w: &Rational| -> Result<i128> {
            (w * Rational::from_integer(denom.clone())).to_integer().to_i128().ok_or_else(overflow)
        };
        let b = inst.b.iter().map(|(i, v, w)| Ok((*i, *v, scale(w)?))).collect::<Result<_>>()?;
        let c = inst.c.iter().map(|(i, j, w)| Ok((*i, *j, scale(w)?))).collect::<Result<_>>()?;
        Ok(Scaled { denom, b, c })
    }

    /// `unary[i][x]` is facility `i`'s anchor cost at `x`; `place(v)` maps
    /// a vertex of the instance graph into the metric.
    fn tables(
        &self,
        n: usize,
        dist: &DistMatrix,
        place: impl Fn(usize) -> usize,
    ) -> Result<(Vec<Vec<i128>>, Vec<Vec<i128>>)> {
        let size = dist.n();
        let mut unary = vec![vec![0i128; size]; n];
        for &(i, v, w) in &self.b {
            let pv = place(v);
            for (x, slot) in unary[i].iter_mut().enumerate() {
                let add = w.checked_mul(dist.get(pv, x).into()).ok_or_else(overflow)?;
                *slot = slot.checked_add(add).ok_or_else(overflow)?;
            }
        }
        let mut pair = vec![vec![0i128; n]; n];
        for &(i, j, w) in &self.c {
            pair[i][j] = pair[i][j].checked_add(w).ok_or_else(overflow)?;
        }
        Ok((unary, pair))
    }
}

fn check_budget(size: usize, n: usize, budget: u128) -> Result<()> {
    let mut required: u128 = 1;
    for _ in 0..n {
        required = required.saturating_mul(size as u128);
    }
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Lexicographically first assignment of minimum scaled cost.
fn enumerate(dist: &DistMatrix, unary: &[Vec<i128>], pair: &[Vec<i128>]) -> (i128, Vec<usize>) {
    let n = unary.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let size = dist.n();
    fn rec(
        i: usize,
        partial: i128,
        x: &mut Vec<usize>,
        best: &mut (i128, Vec<usize>),
        dist: &DistMatrix,
        unary: &[Vec<i128>],
        pair: &[Vec<i128>],
    ) {
        if i == unary.len() {
            if partial < best.0 {
                *best = (partial, x.clone());
            }
            return;
        }
        for v in 0..dist.n() {
            let mut c = partial + unary[i][v];
            for (j, &xj) in x.iter().enumerate() {
                c += pair[j][i] * i128::from(dist.get(xj, v));
            }
            // costs are nonnegative, so a partial sum at or above the best is final
            if c >= best.0 {
                continue;
            }
            x.push(v);
            rec(i + 1, c, x, best, dist, unary, pair);
            x.pop();
        }
    }
    (0..size)
        .into_par_iter()
        .map(|first| {
            let mut best = (i128::MAX, Vec::new());
            let mut x = vec![first];
            rec(1, unary[0][first], &mut x, &mut best, dist, unary, pair);
            best
        })
        .reduce_with(|a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .expect("at least one vertex")
}

fn unscale(value: i128, denom: &BigInt) -> Rational {
    Rational::new(BigInt::from(value), denom.clone())
}

/// Globally optimal assignment by enumeration of all `|V|^n` placements.
pub fn solve_exact(g: &Graph, inst: &ZeroExtInstance, budget: u128) -> Result<ZeroExtSolution> {
    inst.validate(g)?;
    check_budget(g.n(), inst.n, budget)?;
    let scaled = Scaled::new(inst)?;
    let (unary, pair) = scaled.tables(inst.n, g.dist(), |v| v)?;
    let (value, assignment) = enumerate(g.dist(), &unary, &pair);
    let cost = unscale(value, &scaled.denom);
    debug_assert_eq!(cost, self::cost(g, inst, &assignment).unwrap());
    Ok(ZeroExtSolution { assignment, cost, bound: None })
}

/// Solves the instance placed in the barycentric graph, where edges count
/// one half, then moves each facility to the gate of `anchor` in its
/// Boolean-gated set.
pub fn approx2(g: &Graph, inst: &ZeroExtInstance, anchor: usize, budget: u128) -> Result<ZeroExtSolution> {
    inst.validate(g)?;
    g.check_vertex(anchor)?;
    let toolkit = SwmToolkit::new(g)?;
    let bary = toolkit.barycentric_graph()?;
    let star = &bary.graph;
    check_budget(star.n(), inst.n, budget)?;
    let scaled = Scaled::new(inst)?;
    let (unary, pair) = scaled.tables(inst.n, star.dist(), |v| bary.origin[v])?;
    let (value, relaxed) = enumerate(star.dist(), &unary, &pair);
    let bound = unscale(value, &(scaled.denom.clone() * 2));
    let assignment = relaxed
        .iter()
        .map(|&x| {
            gate_of(g, &bary.sets[x], anchor)
                .ok_or_else(|| Error::Inconsistent(format!("Boolean-gated set {x} has no gate")))
        })
        .collect::<Result<Vec<_>>>()?;
    let cost = cost(g, inst, &assignment)?;
    let two = Rational::from_integer(2.into());
    if bound > cost || cost > &two * &bound {
        return Err(Error::Inconsistent(format!(
            "rounding bound violated: relaxation {}, rounded cost {}",
            format_rational(&bound),
            format_rational(&cost)
        )));
    }
    Ok(ZeroExtSolution { assignment, cost, bound: Some(bound) })
}
