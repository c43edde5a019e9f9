//! Centrally symmetric triangulations of the `(2n+2)`-gon and their
//! bijection with 2̄31-avoiding signed permutations.
//!
//! Polygon vertices are numbered `0, 1, …, n, 0̄, 1̄, …, n̄` in cyclic order;
//! internally vertex `p` sits at position `p` and `p̄` at position `n + 1 + p`,
//! so negation is the antipodal map. In text, barred vertices are written
//! `~p`.

mod bijection;
mod pattern;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};

pub use bijection::{pi_map, theta_map, type_a_traversal};
pub use pattern::{
    decompose, is_2bar31_avoiding, minimal_jumps, minimal_jumps_brute_force, satisfies_decomposition_criteria,
    Decomposition, Direction, Jump,
};

use crate::error::{input, Error, Result};
use crate::families::{
    region_to_signed_permutation, type_b_arrangement, Coxeter, FullNotation, SignedPermutation, SignedSjt,
};
use crate::lattice::{congruence_closure, poset_of_regions, try_lattice};
use crate::zigzag::{ham_path_quotient, Adjacency};

/// A triangulation of the `(2n+2)`-gon fixed by the antipodal map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricTriangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl SymmetricTriangulation {
    /// Builds from position pairs, rejecting polygon sides.
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let m = 2 * n + 2;
        let mut set = BTreeSet::new();
        for (p, q) in diagonals {
            let (p, q) = (p.min(q), p.max(q));
            if q >= m || q - p <= 1 || (p == 0 && q == m - 1) {
                return input(format!("({p}, {q}) is not a diagonal of the {m}-gon"));
            }
            set.insert((p, q));
        }
        let t = SymmetricTriangulation { n, diagonals: set };
        t.validate()?;
        Ok(t)
    }

    /// Like [`new`](Self::new) but silently drops polygon sides.
    pub(crate) fn from_positions(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let m = 2 * n + 2;
        let is_side = |p: usize, q: usize| (p + 1) % m == q || (q + 1) % m == p;
        Self::new(n, pairs.into_iter().filter(|&(p, q)| !is_side(p, q)))
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return input("n must be positive");
        }
        if self.diagonals.len() != 2 * self.n - 1 {
            return input(format!(
                "{} diagonals given, a triangulation of the {}-gon has {}",
                self.diagonals.len(),
                2 * self.n + 2,
                2 * self.n - 1
            ));
        }
        let ds: Vec<_> = self.diagonals.iter().copied().collect();
        for (k, &d) in ds.iter().enumerate() {
            if let Some(&e) = ds[k + 1..].iter().find(|&&e| crosses(d, e)) {
                return input(format!(
                    "diagonals {} and {} cross",
                    self.edge_text(d),
                    self.edge_text(e)
                ));
            }
            if !self.diagonals.contains(&self.mirror(d)) {
                return input(format!("the mirror image of {} is missing", self.edge_text(d)));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonals as position pairs `(p, q)` with `p < q`.
    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    pub fn mirror(&self, (p, q): (usize, usize)) -> (usize, usize) {
        let m = 2 * self.n + 2;
        let (a, b) = ((p + self.n + 1) % m, (q + self.n + 1) % m);
        (a.min(b), a.max(b))
    }

    /// Whether `p` and `q` are joined by a side or a diagonal.
    pub fn is_edge(&self, p: usize, q: usize) -> bool {
        let m = 2 * self.n + 2;
        (p + 1) % m == q || (q + 1) % m == p || self.diagonals.contains(&(p.min(q), p.max(q)))
    }

    pub fn label(&self, p: usize) -> String {
        if p <= self.n {
            p.to_string()
        } else {
            format!("~{}", p - self.n - 1)
        }
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        let (bar, digits) = match label.trim().strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, label.trim()),
        };
        let v: usize = digits
            .parse()
            .map_err(|_| Error::Input(format!("bad polygon vertex {label:?}")))?;
        if v > self.n {
            return input(format!("vertex {label:?} out of range for n = {}", self.n));
        }
        Ok(if bar { v + self.n + 1 } else { v })
    }

    fn edge_text(&self, (p, q): (usize, usize)) -> String {
        format!("{}-{}", self.label(p), self.label(q))
    }

    /// `a-b;c-d;…` in position order.
    pub fn to_text(&self) -> String {
        self.diagonals
            .iter()
            .map(|&d| self.edge_text(d))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let probe = SymmetricTriangulation {
            n,
            diagonals: BTreeSet::new(),
        };
        let pairs = text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|d| {
                let (a, b) = d
                    .split_once('-')
                    .ok_or_else(|| Error::Input(format!("bad diagonal {d:?}")))?;
                Ok((probe.position(a)?, probe.position(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, pairs)
    }

    pub fn to_json(&self) -> Value {
        let ds: Vec<Value> = self
            .diagonals
            .iter()
            .map(|&(p, q)| json!([self.label(p), self.label(q)]))
            .collect();
        json!({ "n": self.n, "diagonals": ds })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Input("missing \"n\"".into()))? as usize;
        let probe = SymmetricTriangulation {
            n,
            diagonals: BTreeSet::new(),
        };
        let ds = v["diagonals"]
            .as_array()
            .ok_or_else(|| Error::Input("missing \"diagonals\"".into()))?;
        let pairs = ds
            .iter()
            .map(|d| match (d[0].as_str(), d[1].as_str()) {
                (Some(a), Some(b)) => Ok((probe.position(a)?, probe.position(b)?)),
                _ => input(format!("bad diagonal {d}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, pairs)
    }

    /// Flips the diagonal `(p, q)` and its mirror image.
    pub fn flip(&self, p: usize, q: usize) -> Result<Self> {
        let d = (p.min(q), p.max(q));
        if !self.diagonals.contains(&d) {
            return input(format!(
                "{}-{} is not a diagonal of the triangulation",
                self.label(d.0),
                self.label(d.1)
            ));
        }
        let m = 2 * self.n + 2;
        let apex = |mut range: Box<dyn Iterator<Item = usize>>| {
            range
                .find(|&r| self.is_edge(d.0, r) && self.is_edge(r, d.1))
                .expect("every diagonal borders two triangles")
        };
        let r1 = apex(Box::new(d.0 + 1..d.1));
        let r2 = apex(Box::new((d.1 + 1..m).chain(0..d.0)));
        let mut diagonals = self.diagonals.clone();
        let e = (r1.min(r2), r1.max(r2));
        diagonals.remove(&d);
        diagonals.insert(e);
        let md = self.mirror(d);
        if md != d {
            diagonals.remove(&md);
            diagonals.insert(self.mirror(e));
        }
        Ok(SymmetricTriangulation { n: self.n, diagonals })
    }

    /// One representative per symmetric pair of diagonals.
    pub fn flippable(&self) -> Vec<(usize, usize)> {
        self.diagonals
            .iter()
            .copied()
            .filter(|&d| d <= self.mirror(d))
            .collect()
    }
}

impl fmt::Display for SymmetricTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

type Diagonals = Vec<(usize, usize)>;

/// All triangulations of the polygon filtered by central symmetry.
pub fn enumerate_symmetric_triangulations(n: usize) -> Result<Vec<SymmetricTriangulation>> {
    if !(1..=6).contains(&n) {
        return input("brute-force enumeration supports 1 <= n <= 6");
    }
    let m = 2 * n + 2;
    // tri[i][j]: triangulations of the sub-polygon i..=j, as diagonal lists
    let mut tri: Vec<Vec<Vec<Diagonals>>> = vec![vec![Vec::new(); m]; m];
    for len in 1..m {
        for i in 0..m - len {
            let j = i + len;
            if len == 1 {
                tri[i][j] = vec![Vec::new()];
                continue;
            }
            let mut all = Vec::new();
            for (k, left) in tri[i].iter().enumerate().take(j).skip(i + 1) {
                for a in left {
                    for b in &tri[k][j] {
                        let mut ds = a.clone();
                        ds.extend(b);
                        if k - i > 1 {
                            ds.push((i, k));
                        }
                        if j - k > 1 {
                            ds.push((k, j));
                        }
                        all.push(ds);
                    }
                }
            }
            tri[i][j] = all;
        }
    }
    let half = n + 1;
    let mirror = |(p, q): (usize, usize)| {
        let (a, b) = ((p + half) % m, (q + half) % m);
        (a.min(b), a.max(b))
    };
    let mut out: Vec<SymmetricTriangulation> = tri[0][m - 1]
        .iter()
        .filter_map(|ds| {
            let set: BTreeSet<_> = ds.iter().copied().collect();
            set.iter()
                .all(|&d| set.contains(&mirror(d)))
                .then_some(SymmetricTriangulation { n, diagonals: set })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The flip graph on symmetric triangulations.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub triangulations: Vec<SymmetricTriangulation>,
    index: HashMap<SymmetricTriangulation, usize>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl FlipGraph {
    pub fn new(n: usize) -> Result<Self> {
        let triangulations = enumerate_symmetric_triangulations(n)?;
        let index: HashMap<_, _> = triangulations
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut adjacency = vec![BTreeSet::new(); triangulations.len()];
        for (i, t) in triangulations.iter().enumerate() {
            for (p, q) in t.flippable() {
                let j = index[&t.flip(p, q)?];
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
        Ok(FlipGraph {
            triangulations,
            index,
            adjacency,
        })
    }

    pub fn index_of(&self, t: &SymmetricTriangulation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }
}

impl Adjacency for FlipGraph {
    fn vertex_count(&self) -> usize {
        self.triangulations.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }
}

pub fn flip_graph(n: usize) -> Result<FlipGraph> {
    FlipGraph::new(n)
}

/// All 2̄31-avoiding signed permutations of rank `n`, as full notations.
pub fn avoiders(n: usize) -> Vec<FullNotation> {
    let mut out: Vec<FullNotation> = SignedSjt::new(n)
        .map(|w| w.to_full())
        .filter(is_2bar31_avoiding)
        .collect();
    out.sort();
    out
}

/// Checks that `pi_map` is an isomorphism from the flip graph onto the
/// minimal-jump graph.
pub fn verify_flip_jump(n: usize) -> Result<bool> {
    let g = flip_graph(n)?;
    let images: Vec<FullNotation> = g.triangulations.iter().map(pi_map).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    if sorted != avoiders(n) {
        return Ok(false);
    }
    let at: HashMap<&FullNotation, usize> = images.iter().enumerate().map(|(i, f)| (f, i)).collect();
    for (i, f) in images.iter().enumerate() {
        let jumps: BTreeSet<usize> = minimal_jumps(f)?.iter().map(|j| at[&j.result]).collect();
        if &jumps != g.neighbors(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cyclic Gray code of symmetric triangulations, from the quotient path of
/// the type B sylvester congruence.
pub fn triangulation_gray_code(n: usize) -> Result<Vec<SymmetricTriangulation>> {
    let (arr, chain) = type_b_arrangement(n)?;
    let graph = arr.region_graph();
    let base = Coxeter::TypeB.identity_region(n);
    let lattice = try_lattice(poset_of_regions(&graph, &base)?)?;
    let generators = Coxeter::TypeB
        .named_congruence(n, "typeB-sylvester")?
        .iter()
        .map(|(a, b)| (graph.index_of(a).unwrap(), graph.index_of(b).unwrap()))
        .collect::<Vec<_>>();
    let cong = congruence_closure(&lattice, &generators);
    let listing = ham_path_quotient(&arr, &chain, &graph, &lattice, &base, &cong)?;
    listing
        .order
        .iter()
        .map(|&c| {
            let class = cong.class(c);
            let bottom = class.iter().fold(class[0], |acc, &x| lattice.meet(acc, x));
            let w: SignedPermutation = region_to_signed_permutation(n, &graph.region(bottom))?;
            theta_map(&w.to_full())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let sizes: Vec<usize> = (1..=4)
            .map(|n| enumerate_symmetric_triangulations(n).unwrap().len())
            .collect();
        assert_eq!(sizes, [2, 6, 20, 70]);
        assert_eq!(avoiders(3).len(), 20);
    }

    #[test]
    fn square_flip() {
        let t = SymmetricTriangulation::parse(1, "0-~0").unwrap();
        let u = t.flip(0, 2).unwrap();
        assert_eq!(u.to_text(), "1-~1");
        assert_eq!(u.flip(1, 3).unwrap(), t);
        assert!(t.flip(0, 1).is_err());
    }

    #[test]
    fn text_roundtrip() {
        for t in enumerate_symmetric_triangulations(3).unwrap() {
            assert_eq!(SymmetricTriangulation::parse(3, &t.to_text()).unwrap(), t);
            assert_eq!(SymmetricTriangulation::from_json(&t.to_json()).unwrap(), t);
        }
        assert!(SymmetricTriangulation::parse(2, "0-2").is_err());
        assert!(SymmetricTriangulation::parse(1, "0-1;0-~0").is_err());
    }

    #[test]
    fn flip_graph_sizes() {
        let g = flip_graph(3).unwrap();
        assert_eq!((g.triangulations.len(), g.edge_count()), (20, 30));
    }
}
