use std::collections::{HashMap, HashSet};

use super::{HyperplaneArrangement, RegionGraph, SignVector};
use crate::error::{input, structure, Result};

/// Nested hyperplane index sets `I_2 ⊂ I_3 ⊂ … ⊂ I_k`, bottom first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvableChain {
    levels: Vec<Vec<usize>>,
}

impl SupersolvableChain {
    pub fn new(levels: Vec<Vec<usize>>) -> Result<Self> {
        if levels.is_empty() {
            return input("a chain needs at least one level");
        }
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(levels.len());
        for mut level in levels {
            level.sort_unstable();
            level.dedup();
            if level.is_empty() {
                return input("chain levels must be nonempty");
            }
            if let Some(prev) = out.last() {
                if level.len() <= prev.len() || !prev.iter().all(|i| level.binary_search(i).is_ok()) {
                    return input("chain levels must be strictly nested");
                }
            }
            out.push(level);
        }
        Ok(SupersolvableChain { levels: out })
    }

    /// Chain consisting of the whole arrangement only (valid when rank ≤ 2).
    pub fn single(m: usize) -> Self {
        SupersolvableChain {
            levels: vec![(0..m).collect()],
        }
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn bottom(&self) -> &[usize] {
        &self.levels[0]
    }

    /// Hyperplanes added at level `j` (the bottom level adds all of its own).
    pub fn added(&self, j: usize) -> Vec<usize> {
        if j == 0 {
            return self.levels[0].clone();
        }
        let prev: HashSet<usize> = self.levels[j - 1].iter().copied().collect();
        self.levels[j].iter().copied().filter(|i| !prev.contains(i)).collect()
    }
}

pub(crate) fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

fn check_partition(m: usize, h0: &[usize], h1: &[usize]) -> Result<()> {
    let mut seen = vec![false; m];
    for &i in h0.iter().chain(h1) {
        if i >= m {
            return input(format!("hyperplane index {i} out of range"));
        }
        if std::mem::replace(&mut seen[i], true) {
            return input(format!("hyperplane {i} appears twice in the split"));
        }
    }
    if seen.iter().any(|&s| !s) {
        return input("split does not cover every hyperplane");
    }
    Ok(())
}

fn split_condition(arr: &HyperplaneArrangement, h0: &[usize], h1: &[usize], rank: usize) -> bool {
    if arr.rank_of(h0) + 1 != rank {
        return false;
    }
    h1.iter()
        .enumerate()
        .all(|(k, &a)| h1[k + 1..].iter().all(|&b| h0.iter().any(|&h| arr.in_span(h, a, b))))
}

/// Whether `h0 ∪ h1` is a supersolvable split one level down: `h0` has rank one
/// less, and any two hyperplanes of `h1` meet inside some hyperplane of `h0`.
pub fn check_supersolvable_split(arr: &HyperplaneArrangement, h0: &[usize], h1: &[usize]) -> Result<bool> {
    check_partition(arr.len(), h0, h1)?;
    Ok(split_condition(arr, h0, h1, arr.rank()))
}

pub fn validate_chain(arr: &HyperplaneArrangement, chain: &SupersolvableChain) -> Result<bool> {
    let levels = chain.levels();
    let top = levels.last().expect("chains are nonempty");
    if top.len() != arr.len() || top.iter().enumerate().any(|(k, &i)| k != i) {
        return input("the top chain level must contain every hyperplane");
    }
    if arr.rank_of(&levels[0]) > 2 {
        return Ok(false);
    }
    for j in 1..levels.len() {
        let h1 = chain.added(j);
        if !split_condition(arr, &levels[j - 1], &h1, arr.rank_of(&levels[j])) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Groups distinct bit patterns by their bits under `lower` and orders each
/// group as a path of single-bit steps, starting from the endpoint that comes
/// first in `points`. Returns `None` if some group does not induce a path.
pub(crate) fn fiber_paths_of(points: &[u64], lower: u64) -> Option<Vec<(u64, Vec<u64>)>> {
    let mut order: Vec<u64> = Vec::new();
    let mut groups: HashMap<u64, Vec<u64>> = HashMap::new();
    for &p in points {
        let key = p & lower;
        groups
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(p);
    }
    order
        .into_iter()
        .map(|key| {
            let members = &groups[&key];
            path_order(members).map(|path| (key, path))
        })
        .collect()
}

fn path_order(members: &[u64]) -> Option<Vec<u64>> {
    let k = members.len();
    let adjacent = |a: u64, b: u64| (a ^ b).count_ones() == 1;
    let degree: Vec<usize> = members
        .iter()
        .map(|&a| members.iter().filter(|&&b| adjacent(a, b)).count())
        .collect();
    if k == 1 {
        return Some(members.to_vec());
    }
    let ends = degree.iter().filter(|&&d| d == 1).count();
    if ends != 2 || degree.iter().any(|&d| d == 0 || d > 2) {
        return None;
    }
    let start = degree.iter().position(|&d| d == 1)?;
    let mut path = vec![members[start]];
    let mut prev = None;
    let mut cur = members[start];
    while path.len() < k {
        let next = *members.iter().find(|&&b| adjacent(cur, b) && Some(b) != prev)?;
        prev = Some(cur);
        cur = next;
        path.push(cur);
    }
    Some(path)
}

/// Regions grouped by their sign vector on `h0`, each fiber ordered as a path.
#[derive(Clone, Debug)]
pub struct FiberPartition {
    fiber_of: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl FiberPartition {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn fiber_of(&self, region: usize) -> usize {
        self.fiber_of[region]
    }

    /// Regions of fiber `f` in path order.
    pub fn path(&self, f: usize) -> &[usize] {
        &self.paths[f]
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn endpoints(&self, f: usize) -> (usize, usize) {
        let p = &self.paths[f];
        (p[0], p[p.len() - 1])
    }
}

pub fn fiber_partition(
    graph: &RegionGraph,
    arr: &HyperplaneArrangement,
    h0: &[usize],
    h1: &[usize],
) -> Result<FiberPartition> {
    check_partition(arr.len(), h0, h1)?;
    let bits: Vec<u64> = graph.regions().iter().map(SignVector::bits).collect();
    let Some(groups) = fiber_paths_of(&bits, mask_of(h0)) else {
        return structure("a fiber does not induce a path");
    };
    let mut fiber_of = vec![0; graph.len()];
    let mut paths = Vec::with_capacity(groups.len());
    for (f, (_, path)) in groups.into_iter().enumerate() {
        if path.len() != h1.len() + 1 {
            return structure(format!(
                "fiber {f} has {} regions, expected {}",
                path.len(),
                h1.len() + 1
            ));
        }
        let mut ids: Vec<usize> = path
            .iter()
            .map(|&b| {
                graph
                    .index_of(&SignVector::new(b, arr.len()))
                    .expect("fiber members are regions")
            })
            .collect();
        if ids[0] > ids[ids.len() - 1] {
            ids.reverse();
        }
        for &r in &ids {
            fiber_of[r] = f;
        }
        paths.push(ids);
    }
    Ok(FiberPartition { fiber_of, paths })
}

/// Regions whose projection is an endpoint of its fiber path at every level
/// of the chain. Every region of the bottom level counts as canonical.
pub fn canonical_base_regions(arr: &HyperplaneArrangement, chain: &SupersolvableChain) -> Result<Vec<SignVector>> {
    let regions = arr.enumerate_regions();
    let mut keep = vec![true; regions.len()];
    let levels = chain.levels();
    for j in 1..levels.len() {
        let upper = mask_of(&levels[j]);
        let lower = mask_of(&levels[j - 1]);
        let mut seen = HashSet::new();
        let projected: Vec<u64> = regions
            .iter()
            .map(|r| r.bits() & upper)
            .filter(|b| seen.insert(*b))
            .collect();
        let Some(groups) = fiber_paths_of(&projected, lower) else {
            return structure(format!("level {j} has a fiber that is not a path"));
        };
        let ends: HashSet<u64> = groups.iter().flat_map(|(_, p)| [p[0], p[p.len() - 1]]).collect();
        for (k, r) in regions.iter().enumerate() {
            keep[k] &= ends.contains(&(r.bits() & upper));
        }
    }
    let out: Vec<SignVector> = regions
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect();
    if out.is_empty() {
        return structure("no canonical base region");
    }
    Ok(out)
}
