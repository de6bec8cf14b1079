//! Fixed-width bit rows backed by machine words.
//!
//! Every adjacency row, vertex-set indicator and GF(2) matrix row in this
//! crate is a `BitRow`. Widths up to 64 occupy a single word so the hot
//! enumeration loops reduce to one XOR and one popcount per step; wider rows
//! fall back to a word vector.

pub const WORD_BITS: usize = 64;

/// A bit vector of fixed width. Bits past `nbits` are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    nbits: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS).max(1)
}

impl BitRow {
    pub fn zeros(nbits: usize) -> Self {
        BitRow {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut row = BitRow::zeros(nbits);
        for i in indices {
            row.set(i, true);
        }
        row
    }

    #[inline]
    pub fn nbits(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The whole row as one word. Only valid for widths up to 64.
    #[inline]
    pub fn as_word(&self) -> u64 {
        debug_assert!(self.nbits <= WORD_BITS);
        self.words[0]
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// XOR another row of the same width into this one.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[inline]
    pub fn or_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    #[inline]
    pub fn and_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Flip every bit within the width (tail bits stay zero).
    pub fn complement(&mut self) {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let used = self.nbits % WORD_BITS;
        if self.nbits == 0 {
            self.words.iter_mut().for_each(|w| *w = 0);
        } else if used != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    /// popcount(self | other) without allocating.
    #[inline]
    pub fn or_count_ones(&self, other: &BitRow) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Parity of popcount(self & other), i.e. the GF(2) inner product.
    #[inline]
    pub fn and_parity(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        let acc = self
            .words
            .iter()
            .zip(&other.words)
            .fold(0u64, |acc, (a, b)| acc ^ (a & b));
        acc.count_ones() % 2 == 1
    }

    #[inline]
    pub fn intersects(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of set bits in increasing order.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            row: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    row: &'a BitRow,
    word_index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * WORD_BITS + bit);
            }
            self.word_index += 1;
            if self.word_index >= self.row.words.len() {
                return None;
            }
            self.current = self.row.words[self.word_index];
        }
    }
}

impl std::fmt::Debug for BitRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitRow[{}; {{", self.nbits)?;
        for (k, i) in self.ones().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}]")
    }
}
