use super::{SignedPermutation, SignedSjt, Sjt};

/// Pairs related by one move `_b_ca_ ≡ _b_ac_` with `a < b < c`.
pub fn sylvester_generators(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for p in Sjt::new(n) {
        for k in 0..n.saturating_sub(1) {
            let (c, a) = (p[k], p[k + 1]);
            if c > a && p[..k].iter().any(|&b| a < b && b < c) {
                let mut q = p.clone();
                q.swap(k, k + 1);
                out.push((p.clone(), q));
            }
        }
    }
    out
}

/// The same move on the full notation with `b > 0`, applied together with its
/// mirror image so the result is again a full notation.
pub fn typeb_sylvester_generators(n: usize) -> Vec<(SignedPermutation, SignedPermutation)> {
    let mut out = Vec::new();
    let last = 2 * n - 1;
    for w in SignedSjt::new(n) {
        let f = w.to_full().symbols().to_vec();
        for k in 0..last {
            let (c, a) = (f[k], f[k + 1]);
            if c > a && f[..k].iter().any(|&b| b > 0 && a < b && b < c) {
                let mut g = f.clone();
                g.swap(k, k + 1);
                if k + 1 != last - k {
                    g.swap(last - k, last - k - 1);
                }
                let v = SignedPermutation::new(g[n..].to_vec()).expect("mirrored move keeps a window");
                out.push((w.clone(), v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contains_the_basic_move() {
        let g = sylvester_generators(3);
        assert!(g.contains(&(vec![2, 3, 1], vec![2, 1, 3])));
        assert_eq!(g.len(), 1);
    }
}
