use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use super::SignVector;

/// The graph of regions: one vertex per region, an edge whenever two regions
/// are separated by exactly one hyperplane.
#[derive(Clone, Debug)]
pub struct RegionGraph {
    hyperplanes: usize,
    regions: Vec<SignVector>,
    index: HashMap<u64, usize>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl RegionGraph {
    /// Builds the graph on a list of feasible sign vectors over `hyperplanes` coordinates.
    pub fn new(hyperplanes: usize, regions: Vec<SignVector>) -> Self {
        let index: HashMap<u64, usize> = regions.iter().enumerate().map(|(i, r)| (r.bits(), i)).collect();
        let adj = regions
            .iter()
            .map(|r| {
                (0..hyperplanes)
                    .filter_map(|h| index.get(&r.flipped(h).bits()).map(|&j| (j, h)))
                    .collect()
            })
            .collect();
        RegionGraph {
            hyperplanes,
            regions,
            index,
            adj,
        }
    }

    pub fn hyperplanes(&self) -> usize {
        self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn regions(&self) -> &[SignVector] {
        &self.regions
    }

    pub fn region(&self, i: usize) -> SignVector {
        self.regions[i]
    }

    pub fn index_of(&self, r: &SignVector) -> Option<usize> {
        if r.len() != self.hyperplanes {
            return None;
        }
        self.index.get(&r.bits()).copied()
    }

    /// Neighbors of region `i` as `(region, hyperplane crossed)`.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.regions[i].separating(&self.regions[j]).is_some()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j, hyperplane)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&(j, _)| i < j).map(move |&(j, h)| (i, j, h)))
    }

    /// BFS distances from `from`; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        let mut queue = VecDeque::from([from]);
        dist[from] = 0;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Whether every edge joins an even and an odd number of `-` signs.
    pub fn is_bipartite_by_parity(&self) -> bool {
        self.edges()
            .all(|(i, j, _)| self.regions[i].minus_count() % 2 != self.regions[j].minus_count() % 2)
    }

    /// Sizes of the two parity classes (even, odd).
    pub fn parity_class_sizes(&self) -> (usize, usize) {
        let even = self.regions.iter().filter(|r| r.minus_count() % 2 == 0).count();
        (even, self.len() - even)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph regions {\n");
        for (i, r) in self.regions.iter().enumerate() {
            let _ = writeln!(s, "  {i} [label=\"{r}\"];");
        }
        for (i, j, h) in self.edges() {
            let _ = writeln!(s, "  {i} -- {j} [label=\"{h}\"];");
        }
        s.push_str("}\n");
        s
    }
}
