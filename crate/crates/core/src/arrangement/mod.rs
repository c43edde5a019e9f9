//! Central hyperplane arrangements with exact rational normals.

mod chain;
pub(crate) mod exact;
mod graph;
mod sign;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{input, Result};

pub use chain::{
    canonical_base_regions, check_supersolvable_split, fiber_partition, validate_chain, FiberPartition,
    SupersolvableChain,
};
pub(crate) use chain::{fiber_paths_of, mask_of};
pub use exact::Rational;
pub use graph::RegionGraph;
pub use sign::{SignVector, MAX_HYPERPLANES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    dim: usize,
    normals: Vec<Vec<Rational>>,
}

impl HyperplaneArrangement {
    /// Validates and wraps a list of normals. Normals keep their given
    /// orientation, which fixes which side of each hyperplane is `+`.
    pub fn new(dim: usize, normals: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return input("dimension must be positive");
        }
        if normals.is_empty() {
            return input("an arrangement needs at least one hyperplane");
        }
        if normals.len() > MAX_HYPERPLANES {
            return input(format!(
                "{} hyperplanes exceed the limit of {MAX_HYPERPLANES}",
                normals.len()
            ));
        }
        let mut seen = HashSet::new();
        for (i, v) in normals.iter().enumerate() {
            if v.len() != dim {
                return input(format!("normal {i} has {} coordinates, expected {dim}", v.len()));
            }
            if v.iter().all(Zero::is_zero) {
                return input(format!("normal {i} is zero"));
            }
            if !seen.insert(exact::canonical_direction(v)) {
                return input(format!("normal {i} is parallel to an earlier normal"));
            }
        }
        Ok(HyperplaneArrangement { dim, normals })
    }

    pub fn from_integers(dim: usize, normals: &[Vec<i64>]) -> Result<Self> {
        let normals = normals
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::new(dim, normals)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normal(&self, i: usize) -> &[Rational] {
        &self.normals[i]
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<&[Rational]> = self.normals.iter().map(Vec::as_slice).collect();
        exact::rank(&rows)
    }

    /// Rank of the subarrangement on the given hyperplane indices.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        let rows: Vec<&[Rational]> = indices.iter().map(|&i| self.normals[i].as_slice()).collect();
        exact::rank(&rows)
    }

    /// Whether normal `h` lies in the span of normals `a` and `b`.
    pub(crate) fn in_span(&self, h: usize, a: usize, b: usize) -> bool {
        exact::rank(&[&self.normals[a], &self.normals[b], &self.normals[h]]) == 2
    }

    /// Sign vector of a point, or `None` if the point lies on a hyperplane.
    pub fn sign_vector(&self, point: &[Rational]) -> Option<SignVector> {
        let mut bits = 0u64;
        for (i, a) in self.normals.iter().enumerate() {
            let d = exact::dot(a, point);
            if d.is_zero() {
                return None;
            }
            if d.is_negative() {
                bits |= 1 << i;
            }
        }
        Some(SignVector::new(bits, self.len()))
    }

    pub fn sign_vector_of_integers(&self, point: &[i64]) -> Option<SignVector> {
        let p: Vec<Rational> = point.iter().map(|&x| Rational::from_integer(x.into())).collect();
        self.sign_vector(&p)
    }

    /// Every region together with a certified interior point, in canonical order.
    pub fn regions_with_points(&self) -> Vec<(SignVector, Vec<Rational>)> {
        let mut out: Vec<(SignVector, Vec<Rational>)> = exact::interior_points(self.dim, &self.normals)
            .into_iter()
            .map(|p| {
                let s = self.sign_vector(&p).expect("interior points avoid every hyperplane");
                (s, p)
            })
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }

    /// All regions as sign vectors, lexicographically ordered with `+ < -`.
    pub fn enumerate_regions(&self) -> Vec<SignVector> {
        self.regions_with_points().into_iter().map(|(s, _)| s).collect()
    }

    pub fn region_graph(&self) -> RegionGraph {
        RegionGraph::new(self.len(), self.enumerate_regions())
    }

    /// Parses `{"dim": n, "normals": [[c, ...], ...]}` where each coordinate is an
    /// integer or a `[num, den]` pair. An optional `"chain"` lists nested levels
    /// of 0-based hyperplane indices, bottom first.
    pub fn from_json(text: &str) -> Result<(Self, Option<SupersolvableChain>)> {
        let v: Value = serde_json::from_str(text).map_err(|e| crate::Error::Input(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<(Self, Option<SupersolvableChain>)> {
        let Some(dim) = v.get("dim").and_then(Value::as_u64) else {
            return input("missing or invalid \"dim\"");
        };
        let Some(rows) = v.get("normals").and_then(Value::as_array) else {
            return input("missing \"normals\" array");
        };
        let mut normals = Vec::with_capacity(rows.len());
        for row in rows {
            let Some(coords) = row.as_array() else {
                return input("each normal must be an array");
            };
            normals.push(coords.iter().map(parse_coordinate).collect::<Result<Vec<_>>>()?);
        }
        let arr = Self::new(dim as usize, normals)?;
        let chain = match v.get("chain") {
            None | Some(Value::Null) => None,
            Some(c) => {
                let Some(levels) = c.as_array() else {
                    return input("\"chain\" must be an array of index arrays");
                };
                let mut out = Vec::new();
                for level in levels {
                    let Some(ix) = level.as_array() else {
                        return input("chain levels must be arrays");
                    };
                    let mut set = Vec::new();
                    for i in ix {
                        match i.as_u64() {
                            Some(i) if (i as usize) < arr.len() => set.push(i as usize),
                            _ => return input(format!("bad hyperplane index {i} in chain")),
                        }
                    }
                    out.push(set);
                }
                Some(SupersolvableChain::new(out)?)
            }
        };
        Ok((arr, chain))
    }

    pub fn to_json(&self, chain: Option<&SupersolvableChain>) -> Value {
        let normals: Vec<Value> = self
            .normals
            .iter()
            .map(|v| Value::Array(v.iter().map(coordinate_json).collect()))
            .collect();
        let mut out = json!({ "dim": self.dim, "normals": normals });
        if let Some(c) = chain {
            out["chain"] = json!(c.levels());
        }
        out
    }
}

fn parse_coordinate(v: &Value) -> Result<Rational> {
    let int = |x: &Value| -> Result<BigInt> {
        match (x.as_i64(), x.as_u64()) {
            (Some(i), _) => Ok(i.into()),
            (None, Some(u)) => Ok(u.into()),
            _ => input(format!("coordinate {x} is not an integer")),
        }
    };
    match v {
        Value::Array(p) if p.len() == 2 => {
            let num = int(&p[0])?;
            let den = int(&p[1])?;
            if den.is_zero() {
                return input("zero denominator");
            }
            Ok(Rational::new(num, den))
        }
        Value::Number(_) => Ok(Rational::from_integer(int(v)?)),
        _ => input(format!("coordinate {v} must be an integer or [num, den]")),
    }
}

fn coordinate_json(x: &Rational) -> Value {
    let small = |b: &BigInt| b.to_i64().map_or_else(|| json!(b.to_string()), |i| json!(i));
    if x.denom().is_one() {
        small(x.numer())
    } else {
        json!([small(x.numer()), small(x.denom())])
    }
}
