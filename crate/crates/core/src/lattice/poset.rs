use std::collections::VecDeque;
use std::fmt::Write;

use crate::arrangement::{RegionGraph, SignVector};
use crate::error::{input, Result};

/// Fixed-size bitset over poset elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// A finite poset given by its cover relation, with a rank function.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<usize>,
    order: Vec<usize>,
}

impl FinitePoset {
    /// Builds a poset from covers `(x, y)` meaning `x ⋖ y`. Each element is
    /// ranked by the length of the longest chain below it.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in covers {
            if x >= n || y >= n || x == y {
                return input(format!("bad cover ({x}, {y})"));
            }
            if !up[x].contains(&y) {
                up[x].push(y);
                down[y].push(x);
            }
        }
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut rank = vec![0; n];
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return input("cover relation contains a cycle");
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        let mut p = FinitePoset { up, down, rank, order };
        p.sort_order();
        Ok(p)
    }

    fn sort_order(&mut self) {
        let rank = &self.rank;
        self.order.sort_by_key(|&x| (rank[x], x));
    }

    /// Replaces the rank function. Ranks must increase along covers.
    pub(crate) fn with_ranks(mut self, rank: Vec<usize>) -> Self {
        debug_assert!(self.covers().all(|(x, y)| rank[x] < rank[y]));
        self.rank = rank;
        self.sort_order();
        self
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Elements in an order compatible with the partial order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn is_graded(&self) -> bool {
        self.covers().all(|(x, y)| self.rank[y] == self.rank[x] + 1)
    }

    pub fn minimum(&self) -> Option<usize> {
        let mins: Vec<usize> = (0..self.len()).filter(|&x| self.down[x].is_empty()).collect();
        (mins.len() == 1).then(|| mins[0])
    }

    pub fn maximum(&self) -> Option<usize> {
        let maxs: Vec<usize> = (0..self.len()).filter(|&x| self.up[x].is_empty()).collect();
        (maxs.len() == 1).then(|| maxs[0])
    }

    /// Downsets as bitsets, `downsets()[y].get(x)` iff `x ≤ y`.
    pub(crate) fn downsets(&self) -> Vec<Bits> {
        let mut d = vec![Bits::new(self.len()); self.len()];
        for &y in &self.order {
            let mut b = Bits::new(self.len());
            b.set(y);
            for &x in &self.down[y] {
                b.union_with(&d[x]);
            }
            d[y] = b;
        }
        d
    }

    /// Reflexive order test computed from scratch; prefer lattice tables in loops.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for &w in &self.up[v] {
                if w == y {
                    return true;
                }
                if !std::mem::replace(&mut seen[w], true) && self.rank[w] < self.rank[y] {
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Hasse diagram with edges pointing upward.
    pub fn to_dot(&self, label: impl Fn(usize) -> String) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for x in 0..self.len() {
            let _ = writeln!(s, "  {x} [label=\"{}\"];", label(x));
        }
        for (x, y) in self.covers() {
            let _ = writeln!(s, "  {x} -> {y};");
        }
        s.push_str("}\n");
        s
    }
}

/// The poset of regions: region graph edges oriented away from `base`,
/// ranked by distance from `base`.
pub fn poset_of_regions(graph: &RegionGraph, base: &SignVector) -> Result<FinitePoset> {
    let Some(b) = graph.index_of(base) else {
        return input(format!("base region {base} is not a region"));
    };
    let dist = graph.distances(b);
    if dist.contains(&usize::MAX) {
        return input("region graph is disconnected");
    }
    let mut covers = Vec::with_capacity(graph.edge_count());
    for (i, j, _) in graph.edges() {
        match dist[i].cmp(&dist[j]) {
            std::cmp::Ordering::Less => covers.push((i, j)),
            std::cmp::Ordering::Greater => covers.push((j, i)),
            std::cmp::Ordering::Equal => return input("region graph is not bipartite"),
        }
    }
    Ok(FinitePoset::from_covers(graph.len(), &covers)?.with_ranks(dist))
}
