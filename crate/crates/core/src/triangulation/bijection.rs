use std::collections::BTreeSet;

use super::pattern::decompose;
use super::SymmetricTriangulation;
use crate::error::{input, structure, Result};
use crate::families::FullNotation;

/// Symbol of a polygon position (positions `1..=n` and `n+2..=2n+1`).
fn symbol(n: usize, p: usize) -> i32 {
    if p <= n {
        p as i32
    } else {
        -((p - n - 1) as i32)
    }
}

fn position(n: usize, x: i32) -> usize {
    if x > 0 {
        x as usize
    } else {
        n + 1 + x.unsigned_abs() as usize
    }
}

/// Type A traversal of the part of `t` above the pocket `[a, b]`, entered
/// through the edge `(a - 1, b + 1)`.
pub fn type_a_traversal(t: &SymmetricTriangulation, a: usize, b: usize) -> Vec<i32> {
    let mut out = Vec::new();
    traverse(t, a, b, &mut out);
    out
}

fn traverse(t: &SymmetricTriangulation, a: usize, b: usize, out: &mut Vec<i32>) {
    if a > b {
        return;
    }
    let m = (a..=b)
        .find(|&m| t.is_edge(a - 1, m) && t.is_edge(m, b + 1))
        .expect("a triangulation has a triangle on every edge");
    out.push(m as i32);
    traverse(t, a, m - 1, out);
    traverse(t, m + 1, b, out);
}

/// The 2̄31-avoiding signed permutation of a symmetric triangulation.
pub fn pi_map(t: &SymmetricTriangulation) -> FullNotation {
    let n = t.n();
    let is_pos = |p: usize| (1..=n).contains(&p);
    let is_neg = |p: usize| p >= n + 2;
    let mut lines: Vec<(usize, usize)> = t
        .diagonals()
        .iter()
        .filter_map(|&(p, q)| match (is_pos(p), is_neg(q)) {
            (true, true) => Some((p, q)),
            _ => None,
        })
        .collect();
    let mut tau = Vec::new();
    let mut ys: Vec<usize> = lines.iter().map(|&(p, _)| p).collect();
    ys.sort_unstable();
    ys.dedup();
    if let Some(&y1) = ys.first() {
        lines.sort_by_key(|&(p, q)| (std::cmp::Reverse(p), q));
        let mut strip = vec![(n + 1, n + 1 + y1)];
        strip.extend(lines);
        strip.push((0, y1));
        for w in strip.windows(2) {
            let ((a, b), (c, d)) = (w[0], w[1]);
            let (v, v2, u) = if a == c {
                (a, b, d)
            } else if a == d {
                (a, b, c)
            } else if b == c {
                (b, a, d)
            } else {
                debug_assert_eq!(b, d);
                (b, a, c)
            };
            tau.push(symbol(n, if is_neg(v) { u } else { v2 }));
        }
    }
    let mut bounds = vec![0];
    bounds.extend(&ys);
    bounds.push(n + 1);
    let sigma_r: Vec<i32> = bounds
        .windows(2)
        .flat_map(|w| type_a_traversal(t, w[0] + 1, w[1] - 1))
        .collect();
    let mut symbols: Vec<i32> = sigma_r.iter().rev().map(|&x| -x).collect();
    symbols.extend(tau);
    symbols.extend(sigma_r);
    FullNotation::new(symbols).expect("the traversal visits every vertex once")
}

/// The symmetric triangulation of a 2̄31-avoiding signed permutation.
pub fn theta_map(f: &FullNotation) -> Result<SymmetricTriangulation> {
    let d = decompose(f)?;
    let n = f.rank();
    let mut lines = BTreeSet::new();
    let mut add = |p: usize, q: usize| {
        lines.insert((p.min(q), p.max(q)));
    };
    let ys = d.ys();
    let mut chain = vec![0];
    chain.extend(ys.iter().map(|&y| y as usize));
    chain.push(n + 1);
    for w in chain.windows(2) {
        add(w[0], w[1]);
    }
    if let Some(r) = d.tau.iter().position(|&x| x < 0) {
        let mut l = (n + 1, position(n, d.tau[r]));
        add(l.0, l.1);
        for (k, &x) in d.tau.iter().enumerate() {
            let (neg, posv) = if l.0 >= n + 2 { (l.0, l.1) } else { (l.1, l.0) };
            l = if x > 0 {
                (position(n, x), neg)
            } else {
                let next = d.tau[k + 1..].iter().find(|&&y| y < 0);
                (posv, next.map_or(0, |&y| position(n, y)))
            };
            add(l.0, l.1);
        }
    }
    for (lo, hi, block) in &d.pockets {
        pocket(block, *lo as usize - 1, *hi as usize + 1, &mut add)?;
    }
    let m = 2 * n + 2;
    let mirrored: Vec<(usize, usize)> = lines.iter().map(|&(p, q)| ((p + n + 1) % m, (q + n + 1) % m)).collect();
    let all: Vec<(usize, usize)> = lines.into_iter().chain(mirrored).collect();
    SymmetricTriangulation::from_positions(n, all)
        .or_else(|e| structure(format!("Θ produced an invalid triangulation: {e}")))
}

/// Inverse type A traversal: `block` lists the vertices strictly between
/// `lo` and `hi`.
fn pocket(block: &[i32], lo: usize, hi: usize, add: &mut impl FnMut(usize, usize)) -> Result<()> {
    let Some((&m, rest)) = block.split_first() else {
        return Ok(());
    };
    let m = m as usize;
    add(lo, m);
    add(m, hi);
    let split = rest.iter().position(|&x| x as usize > m).unwrap_or(rest.len());
    let (left, right) = rest.split_at(split);
    if right.iter().any(|&x| (x as usize) < m) {
        return input("pocket is not 231-avoiding");
    }
    pocket(left, lo, m, add)?;
    pocket(right, m, hi, add)
}
