//! Fixed-width bitsets over Z_n used as sum-feasibility rows.

/// A bitset of exactly `n` bits (bit s = "sum s is achievable").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSet {
    n: usize,
    words: Vec<u64>,
}

impl SumSet {
    pub fn empty(n: usize) -> SumSet {
        assert!(n >= 1);
        SumSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn singleton(n: usize, s: usize) -> SumSet {
        let mut set = SumSet::empty(n);
        set.insert(s);
        set
    }

    pub fn len_bits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, s: usize) {
        debug_assert!(s < self.n);
        self.words[s / 64] |= 1u64 << (s % 64);
    }

    #[inline]
    pub fn contains(&self, s: usize) -> bool {
        debug_assert!(s < self.n);
        self.words[s / 64] & (1u64 << (s % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &SumSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&s| self.contains(s))
    }

    pub fn clone_from_set(&mut self, other: &SumSet) {
        debug_assert_eq!(self.n, other.n);
        self.words.copy_from_slice(&other.words);
    }

    /// `self |= rotate_left(src, k)` where rotation is cyclic over n bits,
    /// i.e. bit s of `src` lands on bit (s + k) mod n. This is "add k mod n"
    /// applied to a whole sum set at once.
    pub fn or_rotated(&mut self, src: &SumSet, k: usize) {
        debug_assert_eq!(self.n, src.n);
        let n = self.n;
        let k = k % n;
        if n <= 64 {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let w = src.words[0];
            let rotated = if k == 0 {
                w
            } else {
                ((w << k) | (w >> (n - k))) & mask
            };
            self.words[0] |= rotated;
            return;
        }
        // Multi-word path: shift left by k over an n-bit window, wrapping the
        // overflow back to bit 0.
        for s in src.iter() {
            self.insert((s + k) % n);
        }
    }
}
