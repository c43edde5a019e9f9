use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde_json::Value;

use super::{FiniteLattice, FinitePoset};
use crate::error::{input, structure, Error, Result};

/// A partition of lattice elements into classes. Classes are numbered by
/// their smallest element and list their members in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruencePartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl CongruencePartition {
    /// Normalizes arbitrary labels into a partition.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let class_of = labels
            .iter()
            .enumerate()
            .map(|(x, l)| {
                let id = *ids.entry(l.clone()).or_insert_with(|| {
                    classes.push(Vec::new());
                    classes.len() - 1
                });
                classes[id].push(x);
                id
            })
            .collect();
        CongruencePartition { class_of, classes }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn full(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Builds a partition from explicit classes, which must cover `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                if x >= n {
                    return input(format!("element {x} out of range"));
                }
                if label[x] != usize::MAX {
                    return input(format!("element {x} appears in two classes"));
                }
                label[x] = c;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return input(format!("element {x} is in no class"));
        }
        Ok(Self::from_labels(&label))
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn element_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// The smallest lattice congruence identifying every generator pair.
///
/// Every successful union `a ~ b` is queued; processing it unites `a ∧ z`
/// with `b ∧ z` and `a ∨ z` with `b ∨ z` for all `z`. The queued pairs
/// generate the relation, so once the queue drains the relation is compatible.
pub fn congruence_closure(lat: &FiniteLattice, generators: &[(usize, usize)]) -> CongruencePartition {
    let n = lat.len();
    let mut uf = UnionFind::new(n);
    let mut queue = VecDeque::new();
    for &(a, b) in generators {
        if uf.union(a, b) {
            queue.push_back((a, b));
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        for z in 0..n {
            for (x, y) in [(lat.meet(a, z), lat.meet(b, z)), (lat.join(a, z), lat.join(b, z))] {
                if uf.union(x, y) {
                    queue.push_back((x, y));
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    CongruencePartition::from_labels(&labels)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceViolation {
    /// `x ≡ y` but `x ∧ z` and `y ∧ z` are in different classes.
    Meet {
        x: usize,
        y: usize,
        z: usize,
    },
    Join {
        x: usize,
        y: usize,
        z: usize,
    },
    /// Element `inside` lies between the bottom and top of `class` but is not in it.
    NotInterval {
        class: usize,
        inside: usize,
    },
    /// The class has no unique bottom or top.
    NoBounds {
        class: usize,
    },
    WrongSize {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for CongruenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Meet { x, y, z } => write!(f, "{x} ≡ {y} but their meets with {z} differ"),
            Self::Join { x, y, z } => write!(f, "{x} ≡ {y} but their joins with {z} differ"),
            Self::NotInterval { class, inside } => {
                write!(f, "class {class} is not an interval: it misses {inside}")
            }
            Self::NoBounds { class } => write!(f, "class {class} has no bottom or top"),
            Self::WrongSize { expected, found } => {
                write!(f, "partition covers {found} elements, lattice has {expected}")
            }
        }
    }
}

impl From<CongruenceViolation> for Error {
    fn from(v: CongruenceViolation) -> Self {
        Error::Structure(v.to_string())
    }
}

/// Exhaustive compatibility check against class representatives, plus the
/// check that every class is an interval.
pub fn validate_congruence(
    lat: &FiniteLattice,
    part: &CongruencePartition,
) -> std::result::Result<(), CongruenceViolation> {
    let n = lat.len();
    if part.element_count() != n {
        return Err(CongruenceViolation::WrongSize {
            expected: n,
            found: part.element_count(),
        });
    }
    for x in 0..n {
        let r = part.class(part.class_of(x))[0];
        if r == x {
            continue;
        }
        for z in 0..n {
            if !part.same(lat.meet(x, z), lat.meet(r, z)) {
                return Err(CongruenceViolation::Meet { x: r, y: x, z });
            }
            if !part.same(lat.join(x, z), lat.join(r, z)) {
                return Err(CongruenceViolation::Join { x: r, y: x, z });
            }
        }
    }
    for (c, members) in part.classes().iter().enumerate() {
        let lo = members.iter().fold(members[0], |m, &x| lat.meet(m, x));
        let hi = members.iter().fold(members[0], |m, &x| lat.join(m, x));
        if part.class_of(lo) != c || part.class_of(hi) != c {
            return Err(CongruenceViolation::NoBounds { class: c });
        }
        if let Some(inside) = (0..n).find(|&y| part.class_of(y) != c && lat.leq(lo, y) && lat.leq(y, hi)) {
            return Err(CongruenceViolation::NotInterval { class: c, inside });
        }
    }
    Ok(())
}

/// Cover graph of the quotient: `X ⋖ Y` iff some `x ∈ X` is covered by some
/// `y ∈ Y`. Classes are ranked by the longest chain below them.
pub fn quotient_cover_graph(lat: &FiniteLattice, part: &CongruencePartition) -> FinitePoset {
    let covers: BTreeSet<(usize, usize)> = lat
        .poset()
        .covers()
        .map(|(x, y)| (part.class_of(x), part.class_of(y)))
        .filter(|(a, b)| a != b)
        .collect();
    let covers: Vec<(usize, usize)> = covers.into_iter().collect();
    FinitePoset::from_covers(part.len(), &covers).expect("quotient of a lattice is acyclic")
}

/// Pulls a congruence back along `bottoms`, where `bottoms[x]` is the element
/// of the larger lattice representing element `x` of `base`.
pub fn restrict_congruence(
    base: &FiniteLattice,
    part: &CongruencePartition,
    bottoms: &[usize],
) -> Result<CongruencePartition> {
    if bottoms.len() != base.len() {
        return input("embedding size does not match the base lattice");
    }
    let labels: Vec<usize> = bottoms.iter().map(|&b| part.class_of(b)).collect();
    let restricted = CongruencePartition::from_labels(&labels);
    if let Err(v) = validate_congruence(base, &restricted) {
        return structure(format!("restricted relation is not a congruence: {v}"));
    }
    Ok(restricted)
}

/// A congruence as given by the user, with elements named in text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceSpec {
    Named(String),
    Generators(Vec<(String, String)>),
    Partition(Vec<Vec<String>>),
}

fn element_name(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Array(a) => Ok(a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
        _ => input(format!("cannot read element {v}")),
    }
}

impl CongruenceSpec {
    /// Parses `{"kind": "named", "name": ...}`, `{"kind": "generators",
    /// "pairs": [[a, b], ...]}` or `{"kind": "partition", "classes": [[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        match v.get("kind").and_then(Value::as_str) {
            Some("named") => match v.get("name").and_then(Value::as_str) {
                Some(name) => Ok(CongruenceSpec::Named(name.to_string())),
                None => input("named congruence without \"name\""),
            },
            Some("generators") => {
                let Some(pairs) = v.get("pairs").and_then(Value::as_array) else {
                    return input("generators congruence without \"pairs\"");
                };
                let mut out = Vec::new();
                for p in pairs {
                    match p.as_array().map(Vec::as_slice) {
                        Some([a, b]) => out.push((element_name(a)?, element_name(b)?)),
                        _ => return input("each generator must be a pair"),
                    }
                }
                Ok(CongruenceSpec::Generators(out))
            }
            Some("partition") => {
                let Some(classes) = v.get("classes").and_then(Value::as_array) else {
                    return input("partition congruence without \"classes\"");
                };
                let mut out = Vec::new();
                for c in classes {
                    let Some(members) = c.as_array() else {
                        return input("each class must be an array");
                    };
                    out.push(members.iter().map(element_name).collect::<Result<Vec<_>>>()?);
                }
                Ok(CongruenceSpec::Partition(out))
            }
            _ => input("congruence \"kind\" must be named, generators or partition"),
        }
    }

    /// Reads a built-in name, an inline JSON object, or a path to a JSON file.
    pub fn parse(arg: &str) -> Result<Self> {
        let arg = arg.trim();
        if arg.starts_with('{') {
            return Self::from_json(arg);
        }
        if std::path::Path::new(arg).is_file() {
            let text = std::fs::read_to_string(arg).map_err(|e| Error::Input(format!("{arg}: {e}")))?;
            return Self::from_json(&text);
        }
        Ok(CongruenceSpec::Named(arg.to_string()))
    }

    /// Turns the description into a partition, naming elements through `lookup`.
    /// Named congruences are resolved by `named`.
    pub fn resolve(
        &self,
        lat: &FiniteLattice,
        lookup: impl Fn(&str) -> Result<usize>,
        named: impl Fn(&str) -> Result<Vec<(usize, usize)>>,
    ) -> Result<CongruencePartition> {
        match self {
            CongruenceSpec::Named(name) => Ok(match name.as_str() {
                "discrete" => CongruencePartition::discrete(lat.len()),
                "full" => CongruencePartition::full(lat.len()),
                other => congruence_closure(lat, &named(other)?),
            }),
            CongruenceSpec::Generators(pairs) => {
                let pairs = pairs
                    .iter()
                    .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(congruence_closure(lat, &pairs))
            }
            CongruenceSpec::Partition(classes) => {
                let classes = classes
                    .iter()
                    .map(|c| c.iter().map(|x| lookup(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let part = CongruencePartition::from_classes(lat.len(), &classes)?;
                validate_congruence(lat, &part).map_err(|v| Error::Input(format!("not a congruence: {v}")))?;
                Ok(part)
            }
        }
    }
}
