use crate::error::{input, Result};
use crate::families::FullNotation;

/// Whether the full notation has no subsequence `b c a` with `a < b < c` and `b > 0`.
pub fn is_2bar31_avoiding(f: &FullNotation) -> bool {
    let s = f.symbols();
    let len = s.len();
    // for each middle position q, look for b > 0 left of q with b < s[q] and
    // some a right of q with a < b; keeping the largest such b suffices
    let mut suffix_min = vec![i32::MAX; len + 1];
    for k in (0..len).rev() {
        suffix_min[k] = suffix_min[k + 1].min(s[k]);
    }
    for q in 1..len.saturating_sub(1) {
        let c = s[q];
        let best = s[..q].iter().copied().filter(|&b| b > 0 && b < c).max();
        if let Some(b) = best {
            if suffix_min[q + 1] < b {
                return false;
            }
        }
    }
    true
}

/// `σ_L τ σ_R` split of an avoiding full notation, with the pockets of `σ_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub sigma_l: Vec<i32>,
    pub tau: Vec<i32>,
    pub sigma_r: Vec<i32>,
    /// Value ranges `[lo, hi]` between consecutive positive entries of `τ`
    /// (bounded by 0 and `n + 1`), each with the block of `σ_R` it holds.
    pub pockets: Vec<(i32, i32, Vec<i32>)>,
}

impl Decomposition {
    /// Positive entries of `τ` in increasing order.
    pub fn ys(&self) -> Vec<i32> {
        let mut ys: Vec<i32> = self.tau.iter().copied().filter(|&x| x > 0).collect();
        ys.sort_unstable();
        ys
    }
}

/// Splits at the largest window index `i` with a negative entry.
pub(crate) fn split(f: &FullNotation) -> (Vec<i32>, Vec<i32>, Vec<i32>) {
    let s = f.symbols();
    let n = f.rank();
    let i = (1..=n).rev().find(|&i| s[n + i - 1] < 0).unwrap_or(0);
    (s[..n - i].to_vec(), s[n - i..n + i].to_vec(), s[n + i..].to_vec())
}

pub fn decompose(f: &FullNotation) -> Result<Decomposition> {
    if !is_2bar31_avoiding(f) {
        return input(format!("{f} contains a 2̄31 pattern"));
    }
    let (sigma_l, tau, sigma_r) = split(f);
    let n = f.rank() as i32;
    let mut bounds: Vec<i32> = tau.iter().copied().filter(|&x| x > 0).collect();
    bounds.push(0);
    bounds.push(n + 1);
    bounds.sort_unstable();
    let pockets = bounds
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0] + 1, w[1] - 1);
            let block = sigma_r.iter().copied().filter(|&x| lo <= x && x <= hi).collect();
            (lo, hi, block)
        })
        .collect();
    Ok(Decomposition {
        sigma_l,
        tau,
        sigma_r,
        pockets,
    })
}

fn avoids_231(s: &[i32]) -> bool {
    (0..s.len()).all(|p| (p + 1..s.len()).all(|q| s[q] <= s[p] || s[q + 1..].iter().all(|&a| a >= s[p])))
}

/// The three conditions on `τ` and `σ_R` characterising avoiders.
pub fn satisfies_decomposition_criteria(f: &FullNotation) -> bool {
    let (_, tau, sigma_r) = split(f);
    let pos: Vec<i32> = tau.iter().copied().filter(|&x| x > 0).collect();
    let decreasing = pos.windows(2).all(|w| w[0] > w[1]);
    let separated = pos.iter().all(|&x| {
        let last_small = sigma_r.iter().rposition(|&y| y < x);
        let first_large = sigma_r.iter().position(|&y| y > x);
        match (last_small, first_large) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    });
    decreasing && avoids_231(&sigma_r) && separated
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

/// A jump of the positive symbol `value`, with the resulting full notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Jump {
    pub value: i32,
    pub direction: Direction,
    pub result: FullNotation,
}

/// Moves the symbol at `p` one place in `dir`, mirroring the move.
fn step(s: &mut [i32], p: usize, dir: Direction) -> usize {
    let last = s.len() - 1;
    let q = match dir {
        Direction::Left => p - 1,
        Direction::Right => p + 1,
    };
    s.swap(p, q);
    if s[p] != -s[q] {
        s.swap(last - p, last - q);
    }
    q
}

/// Moves positive `x` in `dir` over smaller entries accepted by `allowed`
/// until `stop` holds for the new notation and position of `x`.
fn move_to(
    f: &FullNotation,
    x: i32,
    dir: Direction,
    allowed: impl Fn(i32) -> bool,
    stop: impl Fn(&[i32], usize) -> bool,
) -> Option<FullNotation> {
    let mut s = f.symbols().to_vec();
    let mut p = s.iter().position(|&y| y == x)?;
    loop {
        let q = match dir {
            Direction::Left => p.checked_sub(1)?,
            Direction::Right => (p + 1 < s.len()).then_some(p + 1)?,
        };
        if s[q] > x || !allowed(s[q]) {
            return None;
        }
        p = step(&mut s, p, dir);
        if stop(&s, p) {
            return Some(FullNotation::new(s).expect("mirrored moves keep the symmetry"));
        }
    }
}

fn avoid(s: &[i32]) -> bool {
    is_2bar31_avoiding(&FullNotation::new(s.to_vec()).expect("symmetric"))
}

/// Minimal jumps by definition: move one step at a time over smaller entries
/// and stop at the first avoider.
pub fn minimal_jumps_brute_force(f: &FullNotation) -> Vec<Jump> {
    let n = f.rank() as i32;
    let mut out = Vec::new();
    for x in 1..=n {
        for dir in [Direction::Left, Direction::Right] {
            let res = move_to(f, x, dir, |_| true, |s, _| avoid(s));
            if let Some(result) = res {
                out.push(Jump {
                    value: x,
                    direction: dir,
                    result,
                });
            }
        }
    }
    out.sort();
    out
}

/// Minimal jumps following the case analysis on `σ_L τ σ_R`: inside `τ`,
/// a swap with a negative neighbour or a long move to the right; inside a
/// pocket, a type A jump or a move into `τ` from the pocket's left end.
pub fn minimal_jumps(f: &FullNotation) -> Result<Vec<Jump>> {
    let d = decompose(f)?;
    let n = f.rank();
    let s = f.symbols();
    let t = d.tau.len() / 2;
    let tau_range = n - t..n + t;
    let mut out = Vec::new();
    let mut push = |x: i32, dir: Direction, r: Option<FullNotation>| {
        if let Some(result) = r {
            debug_assert!(is_2bar31_avoiding(&result));
            out.push(Jump {
                value: x,
                direction: dir,
                result,
            });
        }
    };
    for x in 1..=n as i32 {
        let p = s.iter().position(|&y| y == x).expect("every value occurs");
        if tau_range.contains(&p) {
            for dir in [Direction::Left, Direction::Right] {
                let q = match dir {
                    Direction::Left => p.checked_sub(1),
                    Direction::Right => (p + 1 < s.len()).then_some(p + 1),
                };
                if let Some(q) = q.filter(|&q| s[q] < 0 && tau_range.contains(&q)) {
                    push(x, dir, move_to(f, x, dir, |_| true, |_, cur| cur == q));
                }
            }
            if let Some(&next) = s.get(p + 1).filter(|&&y| y > 0) {
                let bound = next;
                push(
                    x,
                    Direction::Right,
                    move_to(
                        f,
                        x,
                        Direction::Right,
                        |_| true,
                        |s, cur| s[cur + 1..].iter().all(|&y| y >= bound),
                    ),
                );
            }
        } else if p >= n + t {
            let (lo, hi, _) = d
                .pockets
                .iter()
                .find(|(lo, hi, _)| *lo <= x && x <= *hi)
                .expect("σ_R entries lie in pockets")
                .clone();
            let in_pocket = |y: i32| lo <= y && y <= hi;
            for dir in [Direction::Left, Direction::Right] {
                push(x, dir, move_to(f, x, dir, in_pocket, |s, _| avoid(s)));
            }
            let leftmost = s[n + t..].iter().position(|&y| in_pocket(y)).map(|k| k + n + t) == Some(p);
            if leftmost {
                let smaller = d.tau.iter().copied().filter(|&y| y > 0 && y < x).max();
                let r = match smaller {
                    Some(y) => move_to(f, x, Direction::Left, |_| true, |s, cur| s[cur + 1] == y),
                    None if t > 0 => {
                        let last = d.tau[d.tau.len() - 1];
                        move_to(f, x, Direction::Left, |_| true, |s, cur| s.get(cur + 1) == Some(&last))
                    }
                    None => move_to(f, x, Direction::Left, |_| true, |_, cur| cur == n - 1),
                };
                push(x, Direction::Left, r);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
