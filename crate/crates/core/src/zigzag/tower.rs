use std::collections::{HashMap, HashSet};

use super::gray::MixedRadixGray;
use super::Listing;
use crate::arrangement::{
    fiber_paths_of, mask_of, validate_chain, HyperplaneArrangement, RegionGraph, SignVector, SupersolvableChain,
};
use crate::error::{input, structure, Result};
use crate::lattice::{validate_congruence, CongruencePartition, FiniteLattice};

/// The chain seen as a tower of suspensions.
///
/// Level `j` keeps the signs under `masks[j]`; level 0 is the empty
/// arrangement with a single region. Each region `y` of level `j - 1` has a
/// fiber in level `j`, a path of regions listed from the end nearest to the
/// base region. Below a rank-2 bottom the chain is refined by the lowest-index
/// wall `h0` of the base region, so every level adds a path of fibers over the
/// level below.
#[derive(Clone, Debug)]
pub struct Tower {
    m: usize,
    masks: Vec<u64>,
    fibers: Vec<HashMap<u64, Vec<u64>>>,
    base: SignVector,
}

impl Tower {
    pub fn new(arr: &HyperplaneArrangement, chain: &SupersolvableChain, base: &SignVector) -> Result<Self> {
        if !validate_chain(arr, chain)? {
            return input("the chain is not a supersolvable chain of the arrangement");
        }
        Self::from_regions(arr, chain, &arr.enumerate_regions(), base)
    }

    /// Builds the tower from an already enumerated region list.
    pub(crate) fn from_regions(
        arr: &HyperplaneArrangement,
        chain: &SupersolvableChain,
        regions: &[SignVector],
        base: &SignVector,
    ) -> Result<Self> {
        let m = arr.len();
        if base.len() != m || !regions.contains(base) {
            return input(format!("{base} is not a region of the arrangement"));
        }
        let bottom = chain.bottom();
        let bottom_mask = mask_of(bottom);
        let mut masks = vec![0u64];
        if arr.rank_of(bottom) == 2 {
            let projected: HashSet<u64> = regions.iter().map(|r| r.bits() & bottom_mask).collect();
            let b = base.bits() & bottom_mask;
            let h0 = bottom
                .iter()
                .copied()
                .find(|&h| projected.contains(&(b ^ 1 << h)))
                .expect("a region of a rank-2 arrangement has two walls");
            masks.push(1 << h0);
        }
        for level in chain.levels() {
            let mk = mask_of(level);
            if mk != *masks.last().unwrap() {
                masks.push(mk);
            }
        }

        let mut fibers = vec![HashMap::new()];
        for j in 1..masks.len() {
            let (lower, upper) = (masks[j - 1], masks[j]);
            let size = (upper ^ lower).count_ones() as usize + 1;
            let mut seen = HashSet::new();
            let projected: Vec<u64> = regions
                .iter()
                .map(|r| r.bits() & upper)
                .filter(|b| seen.insert(*b))
                .collect();
            let Some(groups) = fiber_paths_of(&projected, lower) else {
                return structure(format!("level {j} has a fiber that is not a path"));
            };
            let b = base.bits() & upper;
            let mut level = HashMap::with_capacity(groups.len());
            for (key, mut path) in groups {
                if path.len() != size {
                    return structure(format!(
                        "level {j} has a fiber of {} regions, expected {size}",
                        path.len()
                    ));
                }
                let first = (path[0] ^ b).count_ones();
                let last = (path[size - 1] ^ b).count_ones();
                if last < first {
                    path.reverse();
                }
                if key == base.bits() & lower && path[0] != b {
                    return input(format!("{base} is not a canonical base region for this chain"));
                }
                level.insert(key, path);
            }
            fibers.push(level);
        }
        Ok(Tower {
            m,
            masks,
            fibers,
            base: *base,
        })
    }

    pub fn base(&self) -> SignVector {
        self.base
    }

    /// Number of levels above the single region of level 0.
    pub fn height(&self) -> usize {
        self.masks.len() - 1
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Fiber over `lower` (a level `j - 1` projection) in level `j`, bottom first.
    pub fn fiber(&self, j: usize, lower: u64) -> Option<&[u64]> {
        self.fibers[j].get(&lower).map(Vec::as_slice)
    }

    /// Fiber lengths per level, top level first (the order of fastest change).
    pub fn radices(&self) -> Vec<usize> {
        (1..self.masks.len())
            .rev()
            .map(|j| (self.masks[j] ^ self.masks[j - 1]).count_ones() as usize + 1)
            .collect()
    }

    /// Tower level at which each hyperplane is added.
    pub fn level_of_hyperplanes(&self) -> Vec<usize> {
        (0..self.m)
            .map(|h| {
                (1..self.masks.len())
                    .find(|&j| self.masks[j] >> h & 1 == 1)
                    .expect("the top level holds every hyperplane")
            })
            .collect()
    }

    /// Streams the zigzag Hamiltonian cycle starting at the base region.
    pub fn zigzag_cycle(&self) -> ZigzagCycle<'_> {
        let t = self.height();
        let mut cur = vec![0u64; t + 1];
        for j in 1..=t {
            cur[j] = self.fibers[j][&cur[j - 1]][0];
        }
        ZigzagCycle {
            tower: self,
            gray: MixedRadixGray::new(self.radices()),
            cur,
            started: false,
        }
    }

    /// Labels every projection with the congruence class of its lift through
    /// fiber bottoms, then zigzags through the classes level by level.
    pub(crate) fn quotient_path(&self, class_of: &HashMap<u64, usize>) -> Vec<usize> {
        let t = self.height();
        let mut labels: Vec<HashMap<u64, usize>> = vec![HashMap::new(); t + 1];
        labels[t] = class_of.clone();
        for j in (1..=t).rev() {
            let mut below = HashMap::with_capacity(self.fibers[j].len());
            for (&y, path) in &self.fibers[j] {
                below.insert(y, labels[j][&path[0]]);
            }
            labels[j - 1] = below;
        }

        let mut path = vec![labels[0][&0]];
        for j in 1..=t {
            let mut members: HashMap<usize, Vec<u64>> = HashMap::new();
            for (&y, &c) in &labels[j - 1] {
                members.entry(c).or_default().push(y);
            }
            let mut next = Vec::new();
            for (k, c) in path.iter().enumerate() {
                let mut offset: HashMap<usize, usize> = HashMap::new();
                for y in &members[c] {
                    for (i, z) in self.fibers[j][y].iter().enumerate() {
                        let e = offset.entry(labels[j][z]).or_insert(i);
                        *e = (*e).min(i);
                    }
                }
                let mut chain: Vec<(usize, usize)> = offset.into_iter().map(|(c, i)| (i, c)).collect();
                chain.sort_unstable();
                if k % 2 == 1 {
                    chain.reverse();
                }
                next.extend(chain.into_iter().map(|(_, c)| c));
            }
            path = next;
        }
        path
    }
}

/// Iterator over the regions of the zigzag cycle.
pub struct ZigzagCycle<'a> {
    tower: &'a Tower,
    gray: MixedRadixGray,
    cur: Vec<u64>,
    started: bool,
}

impl Iterator for ZigzagCycle<'_> {
    type Item = SignVector;

    fn next(&mut self) -> Option<SignVector> {
        let t = self.tower.height();
        if self.started {
            let d = self.gray.step()?;
            let digits = self.gray.digits();
            for j in (t - d)..=t {
                let a = digits[t - j];
                self.cur[j] = self.tower.fibers[j][&self.cur[j - 1]][a];
            }
        }
        self.started = true;
        Some(SignVector::new(self.cur[t], self.tower.m))
    }
}

/// Hamiltonian cycle of the region graph from the first canonical base region.
pub fn ham_cycle_supersolvable(arr: &HyperplaneArrangement, chain: &SupersolvableChain) -> Result<Listing> {
    let graph = arr.region_graph();
    let base = crate::arrangement::canonical_base_regions(arr, chain)?[0];
    ham_cycle_from(arr, chain, &graph, &base)
}

pub fn ham_cycle_from(
    arr: &HyperplaneArrangement,
    chain: &SupersolvableChain,
    graph: &RegionGraph,
    base: &SignVector,
) -> Result<Listing> {
    if !validate_chain(arr, chain)? {
        return input("the chain is not a supersolvable chain of the arrangement");
    }
    let tower = Tower::from_regions(arr, chain, graph.regions(), base)?;
    let order = tower
        .zigzag_cycle()
        .map(|r| graph.index_of(&r).expect("tower regions are graph regions"))
        .collect();
    Ok(Listing { order, cyclic: true })
}

/// From each region, cross an unvisited hyperplane of the highest possible
/// tower level (lowest index on ties).
pub fn greedy_traversal(
    arr: &HyperplaneArrangement,
    chain: &SupersolvableChain,
    graph: &RegionGraph,
    start: &SignVector,
) -> Result<Listing> {
    if !validate_chain(arr, chain)? {
        return input("the chain is not a supersolvable chain of the arrangement");
    }
    let tower = Tower::from_regions(arr, chain, graph.regions(), start)?;
    let level = tower.level_of_hyperplanes();
    let mut cur = graph.index_of(start).expect("start is a region");
    let mut visited = vec![false; graph.len()];
    visited[cur] = true;
    let mut order = vec![cur];
    while order.len() < graph.len() {
        let next = graph
            .neighbors(cur)
            .iter()
            .filter(|&&(r, _)| !visited[r])
            .max_by(|a, b| level[a.1].cmp(&level[b.1]).then(b.1.cmp(&a.1)));
        let Some(&(r, _)) = next else {
            return structure(format!("greedy traversal stuck after {} regions", order.len()));
        };
        visited[r] = true;
        order.push(r);
        cur = r;
    }
    let cyclic = graph.are_adjacent(order[0], cur);
    Ok(Listing { order, cyclic })
}

/// Hamiltonian path through the classes of a congruence of the lattice of
/// regions based at `base`. The lattice elements must be the graph's regions.
pub fn ham_path_quotient(
    arr: &HyperplaneArrangement,
    chain: &SupersolvableChain,
    graph: &RegionGraph,
    lattice: &FiniteLattice,
    base: &SignVector,
    cong: &CongruencePartition,
) -> Result<Listing> {
    if !validate_chain(arr, chain)? {
        return input("the chain is not a supersolvable chain of the arrangement");
    }
    if lattice.len() != graph.len() || graph.index_of(base) != Some(lattice.bottom()) {
        return input("the lattice must be the poset of regions based at the base region");
    }
    if let Err(v) = validate_congruence(lattice, cong) {
        return input(format!("not a lattice congruence: {v}"));
    }
    let tower = Tower::from_regions(arr, chain, graph.regions(), base)?;
    let class_of: HashMap<u64, usize> = graph
        .regions()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.bits(), cong.class_of(i)))
        .collect();
    let order = tower.quotient_path(&class_of);
    Ok(Listing { order, cyclic: false })
}
