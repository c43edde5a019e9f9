/// Loopless reflected mixed-radix Gray code with focus pointers.
///
/// Digit 0 changes fastest. Each call to [`MixedRadixGray::step`] changes one
/// digit by ±1 in constant time; the sequence visits every digit vector once.
#[derive(Clone, Debug)]
pub struct MixedRadixGray {
    radix: Vec<usize>,
    digits: Vec<usize>,
    // positions of digits with radix at least 2
    active: Vec<usize>,
    up: Vec<bool>,
    focus: Vec<usize>,
}

impl MixedRadixGray {
    /// Radices of 1 are allowed and simply never change.
    pub fn new(radix: Vec<usize>) -> Self {
        assert!(radix.iter().all(|&r| r >= 1), "radices must be positive");
        let active: Vec<usize> = (0..radix.len()).filter(|&j| radix[j] > 1).collect();
        let k = active.len();
        MixedRadixGray {
            digits: vec![0; radix.len()],
            up: vec![true; k],
            focus: (0..=k).collect(),
            active,
            radix,
        }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn radix(&self) -> &[usize] {
        &self.radix
    }

    /// Total number of digit vectors, saturating on overflow.
    pub fn count(&self) -> u128 {
        self.radix.iter().fold(1u128, |acc, &r| acc.saturating_mul(r as u128))
    }

    /// Advances to the next vector, returning the index of the changed digit,
    /// or `None` once every vector has been visited.
    pub fn step(&mut self) -> Option<usize> {
        let k = self.active.len();
        let j = self.focus[0];
        self.focus[0] = 0;
        if j == k {
            self.focus[0] = k;
            return None;
        }
        let d = self.active[j];
        if self.up[j] {
            self.digits[d] += 1;
        } else {
            self.digits[d] -= 1;
        }
        if self.digits[d] == 0 || self.digits[d] == self.radix[d] - 1 {
            self.up[j] = !self.up[j];
            self.focus[j] = self.focus[j + 1];
            self.focus[j + 1] = j + 1;
        }
        Some(d)
    }
}
