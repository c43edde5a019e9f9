//! Finite posets and lattices, lattice congruences and their quotients.

mod congruence;
mod poset;

use std::fmt;

pub use congruence::{
    congruence_closure, quotient_cover_graph, restrict_congruence, validate_congruence, CongruencePartition,
    CongruenceSpec, CongruenceViolation,
};
pub(crate) use poset::Bits;
pub use poset::{poset_of_regions, FinitePoset};

/// Default bound on lattice size; override with `REGIONGRAY_MAX_ELEMENTS`.
pub const DEFAULT_MAX_ELEMENTS: usize = 1 << 16;

pub fn max_elements() -> usize {
    std::env::var("REGIONGRAY_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

const NONE: u32 = u32::MAX;

/// A poset together with total meet and join tables.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    poset: FinitePoset,
    down: Vec<Bits>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeFailure {
    TooLarge { elements: usize, limit: usize },
    NoMeet(usize, usize),
    NoJoin(usize, usize),
}

impl fmt::Display for LatticeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeFailure::TooLarge { elements, limit } => write!(
                f,
                "{elements} elements exceed the limit of {limit} (set REGIONGRAY_MAX_ELEMENTS)"
            ),
            LatticeFailure::NoMeet(a, b) => write!(f, "elements {a} and {b} have no meet"),
            LatticeFailure::NoJoin(a, b) => write!(f, "elements {a} and {b} have no join"),
        }
    }
}

impl From<LatticeFailure> for crate::Error {
    fn from(e: LatticeFailure) -> Self {
        match e {
            LatticeFailure::TooLarge { .. } => crate::Error::Refused(e.to_string()),
            _ => crate::Error::Structure(e.to_string()),
        }
    }
}

/// One table fill: `pick[x][y]` for `y` processed along `order`, using the
/// already known values at the `below` neighbours of `y`.
fn fill_table<'p>(
    n: usize,
    order: &[usize],
    below: &dyn Fn(usize) -> &'p [usize],
    leq: &dyn Fn(usize, usize) -> bool,
    height: &dyn Fn(usize) -> usize,
) -> Result<Vec<u32>, (usize, usize)> {
    let mut t = vec![NONE; n * n];
    for &y in order {
        for x in 0..n {
            let v = if leq(x, y) {
                x
            } else if leq(y, x) {
                y
            } else {
                let mut best = None;
                for &c in below(y) {
                    let m = t[x * n + c];
                    if m == NONE {
                        return Err((x, y));
                    }
                    let m = m as usize;
                    if best.is_none_or(|b| height(m) > height(b)) {
                        best = Some(m);
                    }
                }
                let Some(b) = best else {
                    return Err((x, y));
                };
                if below(y).iter().any(|&c| !leq(t[x * n + c] as usize, b)) {
                    return Err((x, y));
                }
                b
            };
            t[x * n + y] = v as u32;
        }
    }
    Ok(t)
}

/// Computes meet and join tables, or reports a pair without meet or join.
///
/// The meet of incomparable `x`, `y` is the largest of the meets of `x` with
/// the lower covers of `y`, provided that one of them lies above all others.
pub fn try_lattice(poset: FinitePoset) -> Result<FiniteLattice, LatticeFailure> {
    let n = poset.len();
    let limit = max_elements();
    if n > limit {
        return Err(LatticeFailure::TooLarge { elements: n, limit });
    }
    let down = poset.downsets();
    let order: Vec<usize> = poset.linear_extension().to_vec();
    let rev: Vec<usize> = order.iter().rev().copied().collect();
    let r = |x: usize| poset.rank(x);
    let meet = fill_table(n, &order, &|y| poset.lower_covers(y), &|a, b| down[b].get(a), &r)
        .map_err(|(a, b)| LatticeFailure::NoMeet(a, b))?;
    let max_rank = (0..n).map(r).max().unwrap_or(0);
    let join = fill_table(n, &rev, &|y| poset.upper_covers(y), &|a, b| down[a].get(b), &|x| {
        max_rank - r(x)
    })
    .map_err(|(a, b)| LatticeFailure::NoJoin(a, b))?;
    Ok(FiniteLattice {
        poset,
        down,
        meet,
        join,
    })
}

impl FiniteLattice {
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].get(x)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.poset.linear_extension()[0]
    }

    pub fn top(&self) -> usize {
        *self.poset.linear_extension().last().expect("lattices are nonempty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean2() -> FiniteLattice {
        let p = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        try_lattice(p).unwrap()
    }

    #[test]
    fn boolean_lattice_tables() {
        let l = boolean2();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(3, 1), 1);
        assert_eq!((l.bottom(), l.top()), (0, 3));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // 0,1 below both 2 and 3
        let p = FinitePoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let err = try_lattice(p).unwrap_err();
        assert!(matches!(err, LatticeFailure::NoMeet(..) | LatticeFailure::NoJoin(..)));
        // with a bottom and top added, the two middle pairs still fail
        let p = FinitePoset::from_covers(6, &[(4, 0), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 5), (3, 5)]).unwrap();
        match try_lattice(p).unwrap_err() {
            LatticeFailure::NoMeet(a, b) => {
                let mut w = [a, b];
                w.sort();
                assert_eq!(w, [2, 3]);
            }
            LatticeFailure::NoJoin(a, b) => {
                let mut w = [a, b];
                w.sort();
                assert_eq!(w, [0, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
