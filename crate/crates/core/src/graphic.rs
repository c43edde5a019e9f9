//! Signed graphs, (signed) perfect elimination orderings, graphic arrangements
//! and acyclic orientations.

use std::collections::HashMap;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::arrangement::{
    canonical_base_regions, validate_chain, HyperplaneArrangement, SignVector, SupersolvableChain, MAX_HYPERPLANES,
};
use crate::error::{input, structure, Error, Result};
use crate::zigzag::{ham_cycle_from, Listing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeSign {
    Positive,
    Negative,
}

/// A simple signed graph on vertices `0..n`. Edges are indexed with the
/// positive edges first, in the order given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, EdgeSign)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl SignedGraph {
    pub fn new(n: usize, pos: &[(usize, usize)], neg: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::new();
        let mut lookup = HashMap::new();
        let tagged = pos
            .iter()
            .map(|&e| (e, EdgeSign::Positive))
            .chain(neg.iter().map(|&e| (e, EdgeSign::Negative)));
        for ((a, b), s) in tagged {
            if a >= n || b >= n {
                return input(format!("edge {{{a}, {b}}} leaves the vertex range"));
            }
            if a == b {
                return input(format!("loop at vertex {a}"));
            }
            let key = (a.min(b), a.max(b));
            if lookup.insert(key, edges.len()).is_some() {
                return input(format!("edge {{{a}, {b}}} appears twice"));
            }
            edges.push((key.0, key.1, s));
        }
        Ok(SignedGraph { n, edges, lookup })
    }

    pub fn unsigned(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges, &[])
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Self::unsigned(n, &edges).expect("complete graphs are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge `e` as `(i, j, sign)` with `i < j`.
    pub fn edge(&self, e: usize) -> (usize, usize, EdgeSign) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize, EdgeSign)] {
        &self.edges
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<(usize, EdgeSign)> {
        self.lookup.get(&(a.min(b), a.max(b))).map(|&e| (e, self.edges[e].2))
    }

    pub fn is_unsigned(&self) -> bool {
        self.edges.iter().all(|e| e.2 == EdgeSign::Positive)
    }

    /// Parses `{"n": k, "pos_edges": [[i, j], ...], "neg_edges": [...]}` with
    /// vertices numbered from 1.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let Some(n) = v.get("n").and_then(Value::as_u64) else {
            return input("missing or invalid \"n\"");
        };
        let read = |key: &str| -> Result<Vec<(usize, usize)>> {
            let Some(list) = v.get(key) else {
                return Ok(Vec::new());
            };
            let Some(list) = list.as_array() else {
                return input(format!("\"{key}\" must be an array"));
            };
            list.iter()
                .map(|e| match e.as_array().map(Vec::as_slice) {
                    Some([a, b]) => match (a.as_u64(), b.as_u64()) {
                        (Some(a), Some(b)) if a >= 1 && b >= 1 => Ok((a as usize - 1, b as usize - 1)),
                        _ => input(format!("bad edge {e} (vertices start at 1)")),
                    },
                    _ => input(format!("bad edge {e}")),
                })
                .collect()
        };
        Self::new(n as usize, &read("pos_edges")?, &read("neg_edges")?)
    }

    pub fn to_json(&self) -> Value {
        let pick = |s: EdgeSign| -> Vec<[usize; 2]> {
            self.edges
                .iter()
                .filter(|e| e.2 == s)
                .map(|e| [e.0 + 1, e.1 + 1])
                .collect()
        };
        json!({ "n": self.n, "pos_edges": pick(EdgeSign::Positive), "neg_edges": pick(EdgeSign::Negative) })
    }

    fn neighbors(&self, v: usize, alive: &[bool]) -> Vec<(usize, EdgeSign)> {
        self.edges
            .iter()
            .filter_map(|&(a, b, s)| {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    return None;
                };
                alive[w].then_some((w, s))
            })
            .collect()
    }
}

fn eliminate(
    g: &SignedGraph,
    simplicial: impl Fn(&[(usize, EdgeSign)]) -> bool,
) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut alive = vec![true; g.n];
    let mut order = Vec::with_capacity(g.n);
    while order.len() < g.n {
        let next = (0..g.n).find(|&v| alive[v] && simplicial(&g.neighbors(v, &alive)));
        match next {
            Some(v) => {
                alive[v] = false;
                order.push(v);
            }
            None => return Err((0..g.n).filter(|&v| alive[v]).collect()),
        }
    }
    Ok(order)
}

/// Perfect elimination ordering of the underlying unsigned graph, found by
/// repeatedly removing the smallest simplicial vertex. On failure returns the
/// vertices left when no simplicial vertex remains.
pub fn find_peo(g: &SignedGraph) -> std::result::Result<Vec<usize>, Vec<usize>> {
    eliminate(g, |nb| {
        nb.iter()
            .enumerate()
            .all(|(k, &(x, _))| nb[k + 1..].iter().all(|&(y, _)| g.edge_between(x, y).is_some()))
    })
}

/// Signed perfect elimination ordering: any two neighbours of the removed
/// vertex must close a balanced triangle with it.
pub fn find_signed_peo(g: &SignedGraph) -> std::result::Result<Vec<usize>, Vec<usize>> {
    eliminate(g, |nb| {
        nb.iter().enumerate().all(|(k, &(x, sx))| {
            nb[k + 1..].iter().all(|&(y, sy)| {
                let want = if sx == sy {
                    EdgeSign::Positive
                } else {
                    EdgeSign::Negative
                };
                g.edge_between(x, y).map(|e| e.1) == Some(want)
            })
        })
    })
}

/// The (signed) graphic arrangement with normals `e_i - e_j` for positive and
/// `e_i + e_j` for negative edges, and the chain read off a signed perfect
/// elimination ordering: the first eliminated vertex contributes the top level.
pub fn graph_arrangement(g: &SignedGraph) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
    if g.edge_count() == 0 {
        return input("the graph has no edges");
    }
    if g.edge_count() > MAX_HYPERPLANES {
        return input(format!("more than {MAX_HYPERPLANES} edges"));
    }
    let normals: Vec<Vec<i64>> = g
        .edges
        .iter()
        .map(|&(i, j, s)| {
            let mut v = vec![0; g.n];
            v[i] = 1;
            v[j] = if s == EdgeSign::Positive { -1 } else { 1 };
            v
        })
        .collect();
    let arr = HyperplaneArrangement::from_integers(g.n, &normals)?;
    let Ok(order) = find_signed_peo(g) else {
        return input(
            "no signed perfect elimination ordering; only that sufficient condition for supersolvability is supported",
        );
    };
    let mut rank_in_order = vec![0; g.n];
    for (k, &v) in order.iter().enumerate() {
        rank_in_order[v] = k;
    }
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for k in (0..g.n).rev() {
        let level: Vec<usize> = (0..g.edge_count())
            .filter(|&e| {
                let (a, b, _) = g.edges[e];
                rank_in_order[a] >= k && rank_in_order[b] >= k
            })
            .collect();
        if level.is_empty() || levels.last().is_some_and(|l| l.len() == level.len()) {
            continue;
        }
        if arr.rank_of(&level) <= 2 {
            levels.clear();
        }
        levels.push(level);
    }
    let chain = SupersolvableChain::new(levels)?;
    if !validate_chain(&arr, &chain)? {
        return structure("elimination ordering produced an invalid chain");
    }
    Ok((arr, chain))
}

/// Orientation of every edge: for a positive edge `i < j`, `forward` means the
/// arc `i → j`; for a negative edge it means both half-edges point inward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedOrientation {
    forward: Vec<bool>,
}

impl SignedOrientation {
    pub fn new(forward: Vec<bool>) -> Self {
        SignedOrientation { forward }
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// Whether the half-edge of edge `e` at its endpoint `v` points toward `v`.
    pub fn points_into(&self, g: &SignedGraph, e: usize, v: usize) -> bool {
        let (a, b, s) = g.edges[e];
        debug_assert!(v == a || v == b);
        match s {
            EdgeSign::Positive => self.forward[e] == (v == b),
            EdgeSign::Negative => self.forward[e],
        }
    }

    /// Space-separated edge tokens, 1-indexed: `i>j` for an arc, `i><j` for an
    /// inward and `i<>j` for an outward negative edge.
    pub fn to_text(&self, g: &SignedGraph) -> String {
        let mut out = Vec::with_capacity(self.forward.len());
        for (e, &(a, b, s)) in g.edges.iter().enumerate() {
            let (a, b) = (a + 1, b + 1);
            out.push(match (s, self.forward[e]) {
                (EdgeSign::Positive, true) => format!("{a}>{b}"),
                (EdgeSign::Positive, false) => format!("{b}>{a}"),
                (EdgeSign::Negative, true) => format!("{a}><{b}"),
                (EdgeSign::Negative, false) => format!("{a}<>{b}"),
            });
        }
        out.join(" ")
    }

    pub fn parse(g: &SignedGraph, text: &str) -> Result<Self> {
        let mut forward = vec![None; g.edge_count()];
        for tok in text.split_whitespace() {
            let (sep, sign) = if tok.contains("><") {
                ("><", Some(true))
            } else if tok.contains("<>") {
                ("<>", Some(false))
            } else {
                (">", None)
            };
            let Some((a, b)) = tok.split_once(sep) else {
                return input(format!("bad edge token {tok:?}"));
            };
            let (Ok(a), Ok(b)) = (a.parse::<usize>(), b.parse::<usize>()) else {
                return input(format!("bad edge token {tok:?}"));
            };
            if a == 0 || b == 0 {
                return input(format!("vertices start at 1 in {tok:?}"));
            }
            let Some((e, s)) = g.edge_between(a - 1, b - 1) else {
                return input(format!("{tok:?} is not an edge"));
            };
            let f = match (s, sign) {
                (EdgeSign::Positive, None) => a < b,
                (EdgeSign::Negative, Some(inward)) => inward,
                _ => return input(format!("{tok:?} does not match the sign of its edge")),
            };
            if forward[e].replace(f).is_some() {
                return input(format!("edge in {tok:?} oriented twice"));
            }
        }
        match forward.into_iter().collect::<Option<Vec<bool>>>() {
            Some(forward) => Ok(SignedOrientation { forward }),
            None => input("some edge is not oriented"),
        }
    }

    pub fn to_dot(&self, g: &SignedGraph) -> String {
        let mut s = String::from("digraph orientation {\n");
        for v in 0..g.n {
            let _ = writeln!(s, "  {};", v + 1);
        }
        for (e, &(a, b, sign)) in g.edges.iter().enumerate() {
            let (a, b) = (a + 1, b + 1);
            let _ = match (sign, self.forward[e]) {
                (EdgeSign::Positive, true) => writeln!(s, "  {a} -> {b} [label=\"+\"];"),
                (EdgeSign::Positive, false) => writeln!(s, "  {b} -> {a} [label=\"+\"];"),
                (EdgeSign::Negative, true) => {
                    writeln!(
                        s,
                        "  {a} -> {b} [dir=both, arrowtail=normal, arrowhead=normal, label=\"-\"];"
                    )
                }
                (EdgeSign::Negative, false) => {
                    writeln!(s, "  {a} -> {b} [dir=both, arrowtail=inv, arrowhead=inv, label=\"-\"];")
                }
            };
        }
        s.push_str("}\n");
        s
    }
}

/// Whether no closed walk enters and leaves every vertex through exactly one
/// inward half-edge. Walks are tracked on states (vertex, whether the arriving
/// half-edge points inward), so a cycle exists iff this state graph has one.
pub fn is_acyclic_signed(g: &SignedGraph, o: &SignedOrientation) -> bool {
    let states = 2 * g.n;
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); states];
    for (e, &(a, b, _)) in g.edges.iter().enumerate() {
        for (v, w) in [(a, b), (b, a)] {
            let leave_in = o.points_into(g, e, v);
            let arrive_in = o.points_into(g, e, w);
            // arriving at v with flag s allows leaving along e when e's half at v has flag !s
            let from = 2 * v + usize::from(!leave_in);
            succ[from].push(2 * w + usize::from(arrive_in));
        }
    }
    // 0 = unseen, 1 = on stack, 2 = done
    let mut color = vec![0u8; states];
    for root in 0..states {
        if color[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        color[root] = 1;
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if let Some(&w) = succ[v].get(*k) {
                *k += 1;
                match color[w] {
                    0 => {
                        color[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
            }
        }
    }
    true
}

/// Reads the orientation off a region: each sign says on which side of `x_i = x_j`
/// (positive edges) or `x_i = -x_j` (negative edges) the region lies.
pub fn region_to_orientation(g: &SignedGraph, r: &SignVector) -> Result<SignedOrientation> {
    if r.len() != g.edge_count() {
        return input("sign vector length differs from the edge count");
    }
    let forward = g
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(_, _, s))| match s {
            EdgeSign::Positive => r.is_minus(e),
            EdgeSign::Negative => !r.is_minus(e),
        })
        .collect();
    let o = SignedOrientation { forward };
    if !is_acyclic_signed(g, &o) {
        return structure(format!("{r} decodes to a cyclic orientation"));
    }
    Ok(o)
}

pub fn orientation_to_region(g: &SignedGraph, o: &SignedOrientation) -> Result<SignVector> {
    if o.forward.len() != g.edge_count() {
        return input("orientation size differs from the edge count");
    }
    if !is_acyclic_signed(g, o) {
        return input("the orientation contains a cycle");
    }
    let mut bits = 0u64;
    for (e, &(_, _, s)) in g.edges.iter().enumerate() {
        let minus = match s {
            EdgeSign::Positive => o.forward[e],
            EdgeSign::Negative => !o.forward[e],
        };
        if minus {
            bits |= 1 << e;
        }
    }
    Ok(SignVector::new(bits, g.edge_count()))
}

pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

/// Every acyclic orientation, by filtering all `2^|E|` orientations.
pub fn brute_force_acyclic_orientations(g: &SignedGraph) -> Result<Vec<SignedOrientation>> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::Refused(format!(
            "{m} edges exceed the brute-force limit of {BRUTE_FORCE_MAX_EDGES}"
        )));
    }
    Ok((0u64..1 << m)
        .map(|mask| SignedOrientation {
            forward: (0..m).map(|e| mask >> e & 1 == 1).collect(),
        })
        .filter(|o| is_acyclic_signed(g, o))
        .collect())
}

/// Cyclic Gray code through the acyclic orientations, one edge reversal per step.
pub fn acyclic_orientation_gray_code(g: &SignedGraph) -> Result<Vec<SignedOrientation>> {
    let (arr, chain) = graph_arrangement(g)?;
    let graph = arr.region_graph();
    let base = canonical_base_regions(&arr, &chain)?[0];
    let Listing { order, .. } = ham_cycle_from(&arr, &chain, &graph, &base)?;
    order
        .into_iter()
        .map(|i| region_to_orientation(g, &graph.region(i)))
        .collect()
}
