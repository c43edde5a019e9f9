//! Coordinate, type A and type B arrangements, their classic Gray codes, and
//! the translation between regions and binary strings or (signed) permutations.

mod generators;
mod signed;
mod sylvester;

use std::cmp::Ordering;

use crate::arrangement::{HyperplaneArrangement, SignVector, SupersolvableChain};
use crate::error::{input, structure, Result};

pub use generators::{brgc_generate, signed_sjt_generate, sjt_generate, Brgc, SignedSjt, Sjt};
pub use signed::{parse_signed_list, FullNotation, SignedPermutation};
pub use sylvester::{sylvester_generators, typeb_sylvester_generators};

/// Chain whose level `k` holds the normals vanishing beyond coordinate `k`,
/// starting from the largest such level of rank at most 2.
pub fn chain_by_last_coordinate(arr: &HyperplaneArrangement) -> Result<SupersolvableChain> {
    let last: Vec<usize> = arr
        .normals()
        .iter()
        .map(|v| {
            v.iter()
                .rposition(|x| !num_traits::Zero::is_zero(x))
                .expect("normals are nonzero")
        })
        .collect();
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for k in 0..arr.dim() {
        let level: Vec<usize> = (0..arr.len()).filter(|&i| last[i] <= k).collect();
        if level.is_empty() || levels.last().is_some_and(|l| l.len() == level.len()) {
            continue;
        }
        if arr.rank_of(&level) <= 2 {
            levels.clear();
        }
        levels.push(level);
    }
    SupersolvableChain::new(levels)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn build(n: usize, normals: Vec<Vec<i64>>) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
    let arr = HyperplaneArrangement::from_integers(n, &normals)?;
    let chain = chain_by_last_coordinate(&arr)?;
    Ok((arr, chain))
}

fn check_n(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return input(format!("n = {n} out of range {min}..={max}"));
    }
    Ok(())
}

/// Hyperplanes `x_i = 0`, normals `e_1 … e_n`.
pub fn coordinate_arrangement(n: usize) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
    check_n(n, 1, 64)?;
    build(n, (0..n).map(|i| unit(n, i)).collect())
}

/// Normals `e_i - e_j` for `i < j`, listed by increasing `j`.
pub fn type_a_arrangement(n: usize) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
    check_n(n, 2, 11)?;
    let mut normals = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            normals.push(v);
        }
    }
    build(n, normals)
}

/// Normals grouped by `j`: `e_j`, then `e_i - e_j` and `e_i + e_j` for `i < j`.
pub fn type_b_arrangement(n: usize) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
    check_n(n, 1, 8)?;
    let mut normals = Vec::new();
    for j in 0..n {
        normals.push(unit(n, j));
        for i in 0..j {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            normals.push(v.clone());
            v[j] = 1;
            normals.push(v);
        }
    }
    build(n, normals)
}

/// Index of `e_i - e_j` (0-based, `i < j`) in the type A arrangement.
fn a_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Index of `e_j` in the type B arrangement.
fn b_unit(j: usize) -> usize {
    j * j
}

/// Index of `e_i - e_j` (`i < j`) in the type B arrangement; `e_i + e_j` follows it.
fn b_minus(i: usize, j: usize) -> usize {
    j * j + 1 + 2 * i
}

fn expect_len(r: &SignVector, m: usize) -> Result<()> {
    if r.len() != m {
        return input(format!("sign vector {r} has length {}, expected {m}", r.len()));
    }
    Ok(())
}

/// Coordinate regions as 0/1 strings, `1` on the negative side.
pub fn region_to_bits(r: &SignVector) -> String {
    r.iter().map(|m| if m { '1' } else { '0' }).collect()
}

pub fn bits_to_region(bits: &str) -> Result<SignVector> {
    let mut v = 0u64;
    let n = bits.trim().len();
    if n > crate::arrangement::MAX_HYPERPLANES {
        return input("binary string too long");
    }
    for (i, c) in bits.trim().chars().enumerate() {
        match c {
            '0' => {}
            '1' => v |= 1 << i,
            _ => return input(format!("bad bit {c:?}")),
        }
    }
    Ok(SignVector::new(v, n))
}

/// Type A region as the permutation listing `1..=n` by increasing coordinate.
pub fn region_to_permutation(n: usize, r: &SignVector) -> Result<Vec<usize>> {
    expect_len(r, n * (n - 1) / 2)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&i, &j| match i.cmp(&j) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Less => less_a(r, i, j),
        Ordering::Greater => less_a(r, j, i).reverse(),
    });
    let perm: Vec<usize> = perm.into_iter().map(|i| i + 1).collect();
    if permutation_to_region(&perm)? != *r {
        return structure(format!("{r} is not a region of the type A arrangement"));
    }
    Ok(perm)
}

fn less_a(r: &SignVector, i: usize, j: usize) -> Ordering {
    if r.is_minus(a_index(i, j)) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

pub fn permutation_to_region(perm: &[usize]) -> Result<SignVector> {
    let n = perm.len();
    let w: Vec<i32> = perm.iter().map(|&v| v as i32).collect();
    if SignedPermutation::new(w.clone()).is_err() || w.iter().any(|&v| v < 1) {
        return input(format!("{perm:?} is not a permutation"));
    }
    let mut x = vec![0usize; n];
    for (k, &v) in perm.iter().enumerate() {
        x[v - 1] = k;
    }
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            if x[i] < x[j] {
                bits |= 1 << a_index(i, j);
            }
        }
    }
    Ok(SignVector::new(bits, n * (n - 1) / 2))
}

/// Type B region as the signed permutation listing indices by increasing
/// absolute coordinate, each carrying the sign of its coordinate.
pub fn region_to_signed_permutation(n: usize, r: &SignVector) -> Result<SignedPermutation> {
    expect_len(r, n * n)?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| match i.cmp(&j) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Less => less_abs(r, i, j),
        Ordering::Greater => less_abs(r, j, i).reverse(),
    });
    let w: Vec<i32> = idx
        .into_iter()
        .map(|i| {
            if r.is_minus(b_unit(i)) {
                -(i as i32 + 1)
            } else {
                i as i32 + 1
            }
        })
        .collect();
    let sp = SignedPermutation::new(w)?;
    if signed_permutation_to_region(&sp) != *r {
        return structure(format!("{r} is not a region of the type B arrangement"));
    }
    Ok(sp)
}

fn less_abs(r: &SignVector, i: usize, j: usize) -> Ordering {
    let k = b_minus(i, j);
    if r.is_minus(k) != r.is_minus(k + 1) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

pub fn signed_permutation_to_region(w: &SignedPermutation) -> SignVector {
    let n = w.len();
    let mut x = vec![0i64; n];
    for (k, &v) in w.window().iter().enumerate() {
        let a = v.unsigned_abs() as usize - 1;
        x[a] = v.signum() as i64 * (k as i64 + 1);
    }
    let mut bits = 0u64;
    for j in 0..n {
        if x[j] < 0 {
            bits |= 1 << b_unit(j);
        }
        for i in 0..j {
            if x[i] - x[j] < 0 {
                bits |= 1 << b_minus(i, j);
            }
            if x[i] + x[j] < 0 {
                bits |= 1 << (b_minus(i, j) + 1);
            }
        }
    }
    SignVector::new(bits, n * n)
}

/// The three reflection-type families with their text encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coxeter {
    Coordinate,
    TypeA,
    TypeB,
}

impl Coxeter {
    pub fn arrangement(self, n: usize) -> Result<(HyperplaneArrangement, SupersolvableChain)> {
        match self {
            Coxeter::Coordinate => coordinate_arrangement(n),
            Coxeter::TypeA => type_a_arrangement(n),
            Coxeter::TypeB => type_b_arrangement(n),
        }
    }

    /// Region of the identity (all zeros for binary strings).
    pub fn identity_region(self, n: usize) -> SignVector {
        match self {
            Coxeter::Coordinate => SignVector::all_plus(n),
            Coxeter::TypeA => SignVector::all_plus(n * (n - 1) / 2).negated(),
            Coxeter::TypeB => signed_permutation_to_region(&SignedPermutation::identity(n)),
        }
    }

    pub fn decode(self, n: usize, r: &SignVector) -> Result<String> {
        Ok(match self {
            Coxeter::Coordinate => region_to_bits(r),
            Coxeter::TypeA => region_to_permutation(n, r)?
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            Coxeter::TypeB => region_to_signed_permutation(n, r)?.to_string(),
        })
    }

    pub fn encode(self, n: usize, text: &str) -> Result<SignVector> {
        let r = match self {
            Coxeter::Coordinate => bits_to_region(text)?,
            Coxeter::TypeA => {
                let v = parse_signed_list(text)?;
                if v.iter().any(|&x| x < 1) {
                    return input(format!("{text:?} is not a permutation"));
                }
                permutation_to_region(&v.into_iter().map(|x| x as usize).collect::<Vec<_>>())?
            }
            Coxeter::TypeB => signed_permutation_to_region(&text.parse()?),
        };
        let m = match self {
            Coxeter::Coordinate => n,
            Coxeter::TypeA => n * (n - 1) / 2,
            Coxeter::TypeB => n * n,
        };
        expect_len(&r, m)?;
        Ok(r)
    }

    /// Generator pairs of a built-in congruence, as regions.
    pub fn named_congruence(self, n: usize, name: &str) -> Result<Vec<(SignVector, SignVector)>> {
        match (self, name) {
            (Coxeter::TypeA, "sylvester") => sylvester_generators(n)
                .iter()
                .map(|(a, b)| Ok((permutation_to_region(a)?, permutation_to_region(b)?)))
                .collect(),
            (Coxeter::TypeB, "typeB-sylvester" | "typeb-sylvester") => Ok(typeb_sylvester_generators(n)
                .iter()
                .map(|(a, b)| (signed_permutation_to_region(a), signed_permutation_to_region(b)))
                .collect()),
            _ => input(format!("no built-in congruence {name:?} for this family")),
        }
    }
}
