//! Loopless generators driven by a reflected mixed-radix Gray code: digit `d`
//! records how far one value has travelled, so each step moves one value.

use super::SignedPermutation;
use crate::zigzag::MixedRadixGray;

/// Binary reflected Gray code; the rightmost bit changes fastest.
#[derive(Clone, Debug)]
pub struct Brgc {
    bits: Vec<u8>,
    gray: MixedRadixGray,
    fresh: bool,
}

impl Brgc {
    pub fn new(n: usize) -> Self {
        Brgc {
            bits: vec![0; n],
            gray: MixedRadixGray::new(vec![2; n]),
            fresh: true,
        }
    }

    pub fn current(&self) -> &[u8] {
        &self.bits
    }

    /// Moves to the next string; `false` when the listing is exhausted.
    pub fn advance(&mut self) -> bool {
        if std::mem::take(&mut self.fresh) {
            return true;
        }
        match self.gray.step() {
            Some(d) => {
                let n = self.bits.len();
                self.bits[n - 1 - d] ^= 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for Brgc {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        self.advance()
            .then(|| self.bits.iter().map(|&b| char::from(b'0' + b)).collect())
    }
}

/// Plain changes: each step swaps the largest possible value with a neighbour.
#[derive(Clone, Debug)]
pub struct Sjt {
    perm: Vec<usize>,
    pos: Vec<usize>,
    disp: Vec<usize>,
    gray: MixedRadixGray,
    fresh: bool,
}

impl Sjt {
    pub fn new(n: usize) -> Self {
        // digit d tracks value n - d, which has n - d possible places
        let radix = (0..n).map(|d| n - d).collect();
        Sjt {
            perm: (1..=n).collect(),
            pos: (0..=n).map(|v| v.saturating_sub(1)).collect(),
            disp: vec![0; n],
            gray: MixedRadixGray::new(radix),
            fresh: true,
        }
    }

    pub fn current(&self) -> &[usize] {
        &self.perm
    }

    pub fn advance(&mut self) -> bool {
        if std::mem::take(&mut self.fresh) {
            return true;
        }
        let Some(d) = self.gray.step() else {
            return false;
        };
        let v = self.perm.len() - d;
        let now = self.gray.digits()[d];
        let p = self.pos[v];
        let q = if now > self.disp[d] { p - 1 } else { p + 1 };
        self.disp[d] = now;
        let w = self.perm[q];
        self.perm.swap(p, q);
        self.pos[v] = q;
        self.pos[w] = p;
        true
    }
}

impl Iterator for Sjt {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().then(|| self.perm.clone())
    }
}

/// The signed analogue of plain changes, run on the full notation: each step
/// moves the largest possible value one place together with its mirror image.
#[derive(Clone, Debug)]
pub struct SignedSjt {
    full: Vec<i32>,
    // position of the positive copy of each value
    pos: Vec<usize>,
    disp: Vec<usize>,
    gray: MixedRadixGray,
    fresh: bool,
}

impl SignedSjt {
    pub fn new(n: usize) -> Self {
        let full = SignedPermutation::identity(n).to_full().symbols().to_vec();
        let pos = (0..=n).map(|v| n + v.saturating_sub(1)).collect();
        // digit d tracks value n - d, which has 2(n - d) possible places
        let radix = (0..n).map(|d| 2 * (n - d)).collect();
        SignedSjt {
            full,
            pos,
            disp: vec![0; n],
            gray: MixedRadixGray::new(radix),
            fresh: true,
        }
    }

    pub fn n(&self) -> usize {
        self.full.len() / 2
    }

    /// Current full notation.
    pub fn full(&self) -> &[i32] {
        &self.full
    }

    /// Current window notation.
    pub fn window(&self) -> &[i32] {
        &self.full[self.n()..]
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.full.swap(a, b);
        for p in [a, b] {
            let x = self.full[p];
            if x > 0 {
                self.pos[x as usize] = p;
            }
        }
    }

    pub fn advance(&mut self) -> bool {
        if std::mem::take(&mut self.fresh) {
            return true;
        }
        let Some(d) = self.gray.step() else {
            return false;
        };
        let n = self.n();
        let v = (n - d) as i32;
        let now = self.gray.digits()[d];
        let p = self.pos[v as usize];
        let q = if now > self.disp[d] { p - 1 } else { p + 1 };
        self.disp[d] = now;
        let last = 2 * n - 1;
        if self.full[q] == -v {
            self.swap(p, q);
        } else {
            self.swap(p, q);
            self.swap(last - p, last - q);
        }
        true
    }
}

impl Iterator for SignedSjt {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        self.advance()
            .then(|| SignedPermutation::new(self.window().to_vec()).expect("generator keeps a valid window"))
    }
}

pub fn brgc_generate(n: usize) -> Brgc {
    Brgc::new(n)
}

pub fn sjt_generate(n: usize) -> Sjt {
    Sjt::new(n)
}

pub fn signed_sjt_generate(n: usize) -> SignedSjt {
    SignedSjt::new(n)
}
