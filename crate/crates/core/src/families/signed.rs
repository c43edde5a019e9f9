use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// A signed permutation in window notation `x_1 … x_n`, entries in `±[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

/// The full notation `x_{-n} … x_{-1} x_1 … x_n` with `x_{-i} = -x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FullNotation(Vec<i32>);

fn check_window(w: &[i32]) -> Result<()> {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    for &x in w {
        let a = x.unsigned_abs() as usize;
        if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
            return input(format!("{w:?} is not a signed permutation"));
        }
    }
    Ok(())
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        check_window(&window)?;
        Ok(SignedPermutation(window))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_full(&self) -> FullNotation {
        let mut f: Vec<i32> = self.0.iter().rev().map(|&x| -x).collect();
        f.extend_from_slice(&self.0);
        FullNotation(f)
    }
}

impl FullNotation {
    /// Checks the symmetry `x_{-i} = -x_i` and the window.
    pub fn new(symbols: Vec<i32>) -> Result<Self> {
        let len = symbols.len();
        if len % 2 == 1 {
            return input("full notation has odd length");
        }
        if (0..len).any(|k| symbols[k] != -symbols[len - 1 - k]) {
            return input(format!("{symbols:?} is not fixed by reverse-negation"));
        }
        check_window(&symbols[len / 2..])?;
        Ok(FullNotation(symbols))
    }

    pub fn symbols(&self) -> &[i32] {
        &self.0
    }

    /// The value `n`.
    pub fn rank(&self) -> usize {
        self.0.len() / 2
    }

    pub fn to_window(&self) -> SignedPermutation {
        SignedPermutation(self.0[self.rank()..].to_vec())
    }
}

impl TryFrom<FullNotation> for SignedPermutation {
    type Error = Error;

    fn try_from(f: FullNotation) -> Result<Self> {
        Ok(FullNotation::new(f.0)?.to_window())
    }
}

/// Reads integers separated by spaces or commas; a string without separators
/// is read one digit at a time, with `-` negating the following digit.
pub fn parse_signed_list(s: &str) -> Result<Vec<i32>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.contains(|c: char| c.is_whitespace() || c == ',') {
        return s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Input(format!("bad entry {t:?}"))))
            .collect();
    }
    let mut out = Vec::new();
    let mut neg = false;
    for c in s.chars() {
        match c {
            '-' if !neg => neg = true,
            '0'..='9' => {
                let d = c as i32 - '0' as i32;
                out.push(if neg { -d } else { d });
                neg = false;
            }
            _ => return input(format!("cannot read {s:?}")),
        }
    }
    if neg {
        return input(format!("dangling sign in {s:?}"));
    }
    Ok(out)
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[i32]) -> fmt::Result {
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for FullNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::new(parse_signed_list(s)?)
    }
}
