//! Hamiltonian cycles and quotient paths by the zigzag construction, the
//! greedy traversal rule, and listing verification.

mod gray;
mod tower;

use std::fmt;

use crate::arrangement::RegionGraph;
use crate::lattice::FinitePoset;

pub use gray::MixedRadixGray;
pub use tower::{greedy_traversal, ham_cycle_from, ham_cycle_supersolvable, ham_path_quotient, Tower, ZigzagCycle};

/// An ordering of the vertices of some graph, by vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    pub order: Vec<usize>,
    pub cyclic: bool,
}

impl Listing {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Hyperplane crossed at each step (including the closing step when cyclic).
    pub fn steps(&self, graph: &RegionGraph) -> Vec<Option<usize>> {
        let n = self.order.len();
        let pairs = if self.cyclic { n } else { n.saturating_sub(1) };
        (0..pairs)
            .map(|k| {
                let (a, b) = (self.order[k], self.order[(k + 1) % n]);
                graph.region(a).separating(&graph.region(b))
            })
            .collect()
    }
}

/// Graphs a listing can be checked against.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn adjacent(&self, a: usize, b: usize) -> bool;
}

impl Adjacency for RegionGraph {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.are_adjacent(a, b)
    }
}

/// The cover graph of a poset, undirected.
impl Adjacency for FinitePoset {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.upper_covers(a).binary_search(&b).is_ok() || self.upper_covers(b).binary_search(&a).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListingViolation {
    OutOfRange {
        index: usize,
    },
    Repeated {
        index: usize,
    },
    Missing {
        found: usize,
        expected: usize,
    },
    /// Entries `index` and `index + 1` are not adjacent.
    NotAdjacent {
        index: usize,
    },
    NotClosing,
    OddCycle,
}

impl ListingViolation {
    /// Position of the offending entry, when there is one.
    pub fn index(&self) -> Option<usize> {
        match *self {
            Self::OutOfRange { index } | Self::Repeated { index } | Self::NotAdjacent { index } => Some(index),
            _ => None,
        }
    }
}

impl fmt::Display for ListingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfRange { index } => write!(f, "entry {index} is not a vertex"),
            Self::Repeated { index } => write!(f, "entry {index} repeats an earlier entry"),
            Self::Missing { found, expected } => write!(f, "listing has {found} entries, expected {expected}"),
            Self::NotAdjacent { index } => {
                write!(f, "entries {index} and {} are not adjacent", index + 1)
            }
            Self::NotClosing => write!(f, "last and first entries are not adjacent"),
            Self::OddCycle => write!(f, "cyclic listing has odd length"),
        }
    }
}

/// Checks that a listing visits every vertex once, moves along edges, and
/// closes into an even cycle when it claims to be cyclic.
pub fn verify_listing(graph: &impl Adjacency, listing: &Listing) -> Result<(), ListingViolation> {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    for (index, &v) in listing.order.iter().enumerate() {
        if v >= n {
            return Err(ListingViolation::OutOfRange { index });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(ListingViolation::Repeated { index });
        }
        if index > 0 && !graph.adjacent(listing.order[index - 1], v) {
            return Err(ListingViolation::NotAdjacent { index: index - 1 });
        }
    }
    if listing.order.len() != n {
        return Err(ListingViolation::Missing {
            found: listing.order.len(),
            expected: n,
        });
    }
    if listing.cyclic && n > 1 {
        if !graph.adjacent(listing.order[n - 1], listing.order[0]) {
            return Err(ListingViolation::NotClosing);
        }
        if n % 2 == 1 {
            return Err(ListingViolation::OddCycle);
        }
    }
    Ok(())
}

/// Writes a listing as `#`-prefixed header lines followed by one object per line.
pub fn write_listing<W: std::io::Write>(
    out: &mut W,
    header: &[(&str, String)],
    items: impl IntoIterator<Item = String>,
) -> std::io::Result<()> {
    for (k, v) in header {
        writeln!(out, "# {k}: {v}")?;
    }
    for item in items {
        writeln!(out, "{item}")?;
    }
    Ok(())
}

/// Parsed listing text: header entries and object lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListingText {
    pub header: Vec<(String, String)>,
    pub items: Vec<String>,
}

impl ListingText {
    pub fn parse(text: &str) -> Self {
        let mut out = ListingText::default();
        for line in text.lines() {
            let line = line.trim();
            if let Some(h) = line.strip_prefix('#') {
                let h = h.trim();
                match h.split_once(':') {
                    Some((k, v)) => out.header.push((k.trim().to_string(), v.trim().to_string())),
                    None => out.header.push((h.to_string(), String::new())),
                }
            } else if !line.is_empty() {
                out.items.push(line.to_string());
            }
        }
        out
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.header.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}
