use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error};

/// A `+`/`-` assignment over at most 64 hyperplanes, one bit per hyperplane
/// (bit `i` set means the region lies on the negative side of hyperplane `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignVector {
    bits: u64,
    len: u8,
}

pub const MAX_HYPERPLANES: usize = 64;

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl SignVector {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_HYPERPLANES, "sign vectors hold at most 64 signs");
        SignVector {
            bits: bits & mask(len),
            len: len as u8,
        }
    }

    pub fn all_plus(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_minus(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn flipped(&self, i: usize) -> Self {
        debug_assert!(i < self.len());
        SignVector {
            bits: self.bits ^ (1 << i),
            len: self.len,
        }
    }

    /// The opposite region `x -> -x`.
    pub fn negated(&self) -> Self {
        Self::new(!self.bits, self.len())
    }

    pub fn minus_count(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Number of hyperplanes separating the two regions.
    pub fn distance(&self, other: &SignVector) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// The unique separating hyperplane, if the vectors differ in exactly one sign.
    pub fn separating(&self, other: &SignVector) -> Option<usize> {
        let x = self.bits ^ other.bits;
        (x.count_ones() == 1).then(|| x.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(|i| self.is_minus(i))
    }
}

impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for minus in self.iter() {
            f.write_str(if minus { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.len() > MAX_HYPERPLANES {
            return input(format!("sign vector longer than {MAX_HYPERPLANES}"));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '+' => {}
                '-' => bits |= 1 << i,
                _ => return input(format!("bad sign character {c:?} in {s:?}")),
            }
        }
        Ok(SignVector::new(bits, s.chars().count()))
    }
}
