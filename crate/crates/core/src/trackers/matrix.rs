/// Symmetric n-by-n bit matrix over vertex pairs, stored row-major in 64-bit
/// words.
#[derive(Debug, Clone)]
pub struct PairMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl PairMatrix {
    pub fn zeros(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Self {
            n,
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    /// Zero matrix with the main diagonal set.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for v in 0..n {
            m.set(v, v);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        let word = self.bits[row * self.words_per_row + col / 64];
        word >> (col % 64) & 1 == 1
    }

    /// Sets the bit and reports whether it was previously clear.
    #[inline]
    pub fn set(&mut self, row: usize, col: usize) -> bool {
        let word = &mut self.bits[row * self.words_per_row + col / 64];
        let mask = 1u64 << (col % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn count_ones(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        for r in 0..self.n {
            for c in r + 1..self.n {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_reports_freshness() {
        let mut m = PairMatrix::zeros(70);
        assert!(m.set(3, 68));
        assert!(!m.set(3, 68));
        assert!(m.get(3, 68));
        assert!(!m.get(68, 3));
    }

    #[test]
    fn identity_sets_only_the_diagonal() {
        let m = PairMatrix::identity(5);
        assert_eq!(m.count_ones(), 5);
        assert!(m.get(2, 2));
        assert!(!m.get(2, 3));
        assert!(m.is_symmetric());
    }
}
