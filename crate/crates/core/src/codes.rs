//! GF(2) linear algebra and the exact minimum-distance oracle.
//!
//! Codes follow the column convention: a generator matrix A has shape
//! (n+k) × k and the codewords are the products A·x over all messages
//! x ∈ F_2^k. The minimum distance is then min over nonzero x of the
//! Hamming weight of A·x, found by brute force over the 2^k message space
//! (Gray-code order, one column XOR per step).

use crate::bits::BitRow;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Cap on the message dimension for the 2^k enumeration.
pub const DEFAULT_MESSAGE_CAP: usize = 24;

/// A dense bit matrix over GF(2), stored as row-major bit rows.
///
/// Zero-row matrices are allowed in memory (they arise as the A' part of a
/// square generator in systematic form); the text file format requires at
/// least one row and one column.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitRow>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: (0..rows).map(|_| BitRow::zeros(cols)).collect(),
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = BinaryMatrix::zeros(k, k);
        for i in 0..k {
            m.data[i].set(i, true);
        }
        m
    }

    /// Build from strings of `0`/`1` characters, one per row.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        let mut m = BinaryMatrix::zeros(height, width);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Parse(format!(
                    "row {i} has {} columns, expected {width}",
                    row.len()
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.data[i].set(j, true),
                    _ => return Err(Error::Parse(format!("row {i}: invalid character {ch:?}"))),
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitRow {
        &self.data[r]
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    /// Stack `self` on top of `other` (column counts must match).
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BinaryMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Column `c` as a bit vector of length `rows`.
    pub fn column(&self, c: usize) -> BitRow {
        BitRow::from_indices(self.rows, (0..self.rows).filter(|&r| self.data[r].get(c)))
    }

    /// Matrix–vector product over GF(2).
    pub fn mul_vec(&self, x: &BitRow) -> Result<BitRow> {
        if x.nbits() != self.cols {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("vector of length {}", x.nbits()),
            });
        }
        let mut out = BitRow::zeros(self.rows);
        for r in 0..self.rows {
            out.set(r, self.data[r].and_parity(x));
        }
        Ok(out)
    }

    /// Rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| work[r].get(c)) else {
                continue;
            };
            work.swap(rank, pivot);
            let pivot_row = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// dim Ker(A) = cols − rank.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// One nonzero kernel vector, if the kernel is nontrivial. Deterministic:
    /// built from the reduced echelon form using the first free column.
    pub fn kernel_vector(&self) -> Option<BitRow> {
        let mut work = self.data.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut is_pivot_col = vec![false; self.cols];
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| work[r].get(c)) else {
                continue;
            };
            work.swap(rank, pivot);
            let pivot_row = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivot_col_of_row.push(c);
            is_pivot_col[c] = true;
            rank += 1;
        }
        let free = (0..self.cols).find(|&c| !is_pivot_col[c])?;
        let mut x = BitRow::zeros(self.cols);
        x.set(free, true);
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            if work[r].get(free) {
                x.set(pc, true);
            }
        }
        Some(x)
    }
}

impl std::fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parse the matrix text format: first line `rows cols`, then `rows` lines
/// of 0/1 characters with no separators.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let mut parts = header.split_whitespace();
    let rows: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad row count".into()))?;
    let cols: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("bad column count".into()))?;
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut m = BinaryMatrix::zeros(rows, cols);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
        if line.len() != cols {
            return Err(Error::Parse(format!(
                "row {r} has {} characters, expected {cols}",
                line.len()
            )));
        }
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(r, c, true),
                _ => return Err(Error::Parse(format!("row {r}: invalid character {ch:?}"))),
            }
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after the declared rows".into()));
    }
    Ok(m)
}

pub fn write_matrix(m: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(if m.get(r, c) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// A generator brought to the form (I_k on top; A' below) by a permutation
/// of the code coordinates (rows of A) and an invertible change of message
/// basis. The set of codewords is preserved up to the recorded coordinate
/// permutation.
#[derive(Debug, Clone)]
pub struct SystematicForm {
    /// The (rows − k) × k lower block.
    pub aprime: BinaryMatrix,
    /// `row_permutation[new] = old`: row `new` of (I_k; A') corresponds to
    /// row `old` of the input. In the usual k × n generator convention this
    /// is the column permutation of the code coordinates.
    pub row_permutation: Vec<usize>,
}

/// Bring a full-column-rank generator to systematic form.
///
/// Only coordinate permutation and invertible message-basis changes (column
/// operations in this convention) are applied, so codeword weights are
/// untouched and the codeword set maps through `row_permutation`.
pub fn systematic_form(a: &BinaryMatrix) -> Result<SystematicForm> {
    if a.kernel_dim() > 0 {
        return Err(Error::SingularCode);
    }
    let k = a.cols();
    let mut work = a.clone();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut col_is_pivot = vec![false; k];
    for r in 0..work.rows() {
        if pivot_rows.len() == k {
            break;
        }
        let Some(c) = (0..k).find(|&c| !col_is_pivot[c] && work.get(r, c)) else {
            continue;
        };
        // zero out the rest of row r with column additions (right
        // multiplication by elementary matrices); earlier pivot rows have a
        // single 1 in their own pivot column, so they are unaffected
        let col_c = work.column(c);
        for c2 in 0..k {
            if c2 != c && work.get(r, c2) {
                for i in col_c.ones() {
                    let cur = work.get(i, c2);
                    work.set(i, c2, !cur);
                }
            }
        }
        pivot_rows.push(r);
        pivot_cols.push(c);
        col_is_pivot[c] = true;
    }
    debug_assert_eq!(pivot_rows.len(), k, "full column rank was checked");

    // permute columns so pivot i sits in column i
    let mut arranged = BinaryMatrix::zeros(work.rows(), k);
    for r in 0..work.rows() {
        for (i, &pc) in pivot_cols.iter().enumerate() {
            if work.get(r, pc) {
                arranged.set(r, i, true);
            }
        }
    }

    let mut row_permutation = pivot_rows.clone();
    let pivot_set: std::collections::HashSet<usize> = pivot_rows.iter().copied().collect();
    row_permutation.extend((0..work.rows()).filter(|r| !pivot_set.contains(r)));

    for (new, &old) in row_permutation.iter().enumerate().take(k) {
        for c in 0..k {
            debug_assert_eq!(arranged.get(old, c), new == c, "identity block");
        }
    }

    let mut aprime = BinaryMatrix::zeros(work.rows() - k, k);
    for (new, &old) in row_permutation.iter().enumerate().skip(k) {
        for c in 0..k {
            if arranged.get(old, c) {
                aprime.set(new - k, c, true);
            }
        }
    }
    Ok(SystematicForm {
        aprime,
        row_permutation,
    })
}

/// Minimum distance with a minimizing message.
#[derive(Debug, Clone, Serialize)]
pub struct MinDistance {
    pub distance: usize,
    /// Message achieving the distance; for the exhaustive branch this is the
    /// first minimizer in counting order. When the kernel is nontrivial the
    /// distance is 0 and the witness is a kernel basis vector.
    #[serde(serialize_with = "serialize_bits")]
    pub witness_message: BitRow,
    pub messages_examined: u64,
}

fn serialize_bits<S: serde::Serializer>(
    bits: &BitRow,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(bits.ones())
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Minimum Hamming weight of A·x over nonzero messages x, by exhaustive
/// Gray-code enumeration of the 2^k message space.
pub fn min_distance(a: &BinaryMatrix, cap: usize) -> Result<MinDistance> {
    let k = a.cols();
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    if k > cap {
        return Err(Error::MessageSpaceTooLarge { k, cap });
    }
    if let Some(kernel) = a.kernel_vector() {
        return Ok(MinDistance {
            distance: 0,
            witness_message: kernel,
            messages_examined: 0,
        });
    }

    let columns: Vec<BitRow> = (0..k).map(|c| a.column(c)).collect();
    let total = 1u64 << k;
    // (weight, message-value) pairs reduce by lexicographic min, making the
    // witness the first minimizer in counting order however the range is
    // split across workers.
    const PAR_MIN_BITS: usize = 22;
    let best = if k <= PAR_MIN_BITS {
        distance_range(&columns, 1, total)
    } else {
        let chunks = (rayon::current_num_threads() * 8).max(8) as u64;
        let step = (total - 1).div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                let s = 1 + c * step;
                if s >= total {
                    None
                } else {
                    Some(distance_range(&columns, s, (s + step).min(total)))
                }
            })
            .reduce_with(|x, y| if y < x { y } else { x })
            .expect("at least one chunk")
    };
    let (distance, value) = best;
    let witness = BitRow::from_indices(k, (0..k).filter(|&b| (value >> b) & 1 == 1));
    Ok(MinDistance {
        distance,
        witness_message: witness,
        messages_examined: total - 1,
    })
}

fn distance_range(columns: &[BitRow], start: u64, end: u64) -> (usize, u64) {
    let rows = columns[0].nbits();
    if rows <= 64 {
        let cols: Vec<u64> = columns.iter().map(|c| c.as_word()).collect();
        let mut acc = 0u64;
        let g0 = gray(start);
        for (t, col) in cols.iter().enumerate() {
            if (g0 >> t) & 1 == 1 {
                acc ^= col;
            }
        }
        let mut best = (acc.count_ones() as usize, g0);
        for i in (start + 1)..end {
            let t = i.trailing_zeros() as usize;
            acc ^= cols[t];
            let cand = (acc.count_ones() as usize, gray(i));
            if cand < best {
                best = cand;
            }
        }
        best
    } else {
        let mut acc = BitRow::zeros(rows);
        let g0 = gray(start);
        for (t, col) in columns.iter().enumerate() {
            if (g0 >> t) & 1 == 1 {
                acc.xor_assign(col);
            }
        }
        let mut best = (acc.count_ones(), g0);
        for i in (start + 1)..end {
            let t = i.trailing_zeros() as usize;
            acc.xor_assign(&columns[t]);
            let cand = (acc.count_ones(), gray(i));
            if cand < best {
                best = cand;
            }
        }
        best
    }
}

/// Random search for a square biadjacency B whose stacked codes (I; B) and
/// (I; Bᵀ) both reach the required minimum distance. Entries are fair coin
/// flips; deterministic under the seed. Returns the first success, or `None`
/// when the attempt budget runs out — the caller must raise `side` or lower
/// `required_d`.
pub fn gadget_code_search(
    side: usize,
    required_d: usize,
    attempts: u64,
    seed: u64,
) -> Result<Option<BinaryMatrix>> {
    if side == 0 || required_d == 0 {
        return Err(Error::InvalidParameter {
            what: "gadget search requires side >= 1 and required_d >= 1".into(),
        });
    }
    if side > DEFAULT_MESSAGE_CAP {
        return Err(Error::MessageSpaceTooLarge {
            k: side,
            cap: DEFAULT_MESSAGE_CAP,
        });
    }
    let identity = BinaryMatrix::identity(side);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let mut b = BinaryMatrix::zeros(side, side);
        for r in 0..side {
            for c in 0..side {
                if rng.random_bool(0.5) {
                    b.set(r, c, true);
                }
            }
        }
        let d1 = min_distance(&identity.vstack(&b)?, DEFAULT_MESSAGE_CAP)?.distance;
        if d1 < required_d {
            continue;
        }
        let d2 = min_distance(&identity.vstack(&b.transpose())?, DEFAULT_MESSAGE_CAP)?.distance;
        if d2 >= required_d {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 7×4 generator of the Hamming [7,4] code (identity on top).
    pub(crate) fn hamming_7_4() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[
            "1000", "0100", "0010", "0001", "1101", "1011", "0111",
        ])
        .unwrap()
    }

    #[test]
    fn mul_vec_examples() {
        let i3 = BinaryMatrix::identity(3);
        let x = BitRow::from_indices(3, [0, 2]);
        assert_eq!(i3.mul_vec(&x).unwrap(), x);

        let z = BinaryMatrix::zeros(2, 3);
        assert!(z.mul_vec(&x).unwrap().is_zero());

        let m = BinaryMatrix::from_rows(&["11", "01"]).unwrap();
        let x = BitRow::from_indices(2, [0, 1]);
        assert_eq!(m.mul_vec(&x).unwrap().ones().collect::<Vec<_>>(), vec![1]);

        assert!(matches!(
            m.mul_vec(&BitRow::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_dims() {
        assert_eq!(BinaryMatrix::identity(4).kernel_dim(), 0);
        assert_eq!(BinaryMatrix::zeros(3, 3).kernel_dim(), 3);
        let m = BinaryMatrix::from_rows(&["11", "11"]).unwrap();
        assert_eq!(m.kernel_dim(), 1);
        let kv = m.kernel_vector().unwrap();
        assert!(m.mul_vec(&kv).unwrap().is_zero() && !kv.is_zero());
    }

    #[test]
    fn systematic_already_in_form() {
        let a = BinaryMatrix::from_rows(&["10", "01", "11"]).unwrap();
        let sf = systematic_form(&a).unwrap();
        assert_eq!(sf.aprime, BinaryMatrix::from_rows(&["11"]).unwrap());
        assert_eq!(sf.row_permutation, vec![0, 1, 2]);
    }

    #[test]
    fn systematic_row_swapped_identity() {
        let a = BinaryMatrix::from_rows(&["01", "10"]).unwrap();
        let sf = systematic_form(&a).unwrap();
        assert_eq!(sf.aprime.rows(), 0);
        assert_eq!(sf.aprime.cols(), 2);
    }

    #[test]
    fn systematic_rejects_singular() {
        let a = BinaryMatrix::from_rows(&["11", "11"]).unwrap();
        assert!(matches!(systematic_form(&a), Err(Error::SingularCode)));
    }

    /// Codeword sets must match through the recorded coordinate permutation.
    fn assert_code_preserved(a: &BinaryMatrix) {
        let sf = systematic_form(a).unwrap();
        let k = a.cols();
        let stacked = BinaryMatrix::identity(k).vstack(&sf.aprime).unwrap();
        let codewords = |m: &BinaryMatrix| -> std::collections::HashSet<Vec<usize>> {
            (0..(1u32 << k))
                .map(|v| {
                    let x = BitRow::from_indices(k, (0..k).filter(|&b| (v >> b) & 1 == 1));
                    m.mul_vec(&x).unwrap().ones().collect()
                })
                .collect()
        };
        let original = codewords(a);
        let permuted_back: std::collections::HashSet<Vec<usize>> = codewords(&stacked)
            .into_iter()
            .map(|word| {
                let mut mapped: Vec<usize> =
                    word.into_iter().map(|i| sf.row_permutation[i]).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        assert_eq!(original, permuted_back);
    }

    #[test]
    fn systematic_preserves_hamming_code() {
        // scrambled full-rank form of the Hamming [7,4] generator
        let a = BinaryMatrix::from_rows(&[
            "1101", "1000", "0111", "0100", "1011", "0010", "0001",
        ])
        .unwrap();
        assert_code_preserved(&a);
        assert_code_preserved(&hamming_7_4());
    }

    #[test]
    fn min_distance_identity_and_hamming() {
        let id = BinaryMatrix::identity(5);
        let r = min_distance(&id, 24).unwrap();
        assert_eq!(r.distance, 1);
        assert_eq!(r.witness_message.ones().collect::<Vec<_>>(), vec![0]);

        let r = min_distance(&hamming_7_4(), 24).unwrap();
        assert_eq!(r.distance, 3);
        assert_eq!(r.messages_examined, 15);
    }

    #[test]
    fn min_distance_singular_is_zero() {
        let m = BinaryMatrix::from_rows(&["11", "11"]).unwrap();
        let r = min_distance(&m, 24).unwrap();
        assert_eq!(r.distance, 0);
        assert!(m.mul_vec(&r.witness_message).unwrap().is_zero());
        assert!(!r.witness_message.is_zero());
    }

    #[test]
    fn min_distance_cap() {
        let m = BinaryMatrix::zeros(3, 25);
        assert!(matches!(
            min_distance(&m, 24),
            Err(Error::MessageSpaceTooLarge { k: 25, cap: 24 })
        ));
    }

    /// Independent oracle: per-entry integer dot products, counting order.
    fn naive_min_distance(a: &BinaryMatrix) -> usize {
        let k = a.cols();
        let mut best = usize::MAX;
        for v in 1u32..(1 << k) {
            let mut weight = 0;
            for r in 0..a.rows() {
                let mut dot = 0u32;
                for c in 0..k {
                    dot += u32::from(a.get(r, c)) * ((v >> c) & 1);
                }
                weight += (dot % 2) as usize;
            }
            best = best.min(weight);
        }
        best
    }

    #[test]
    fn min_distance_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..30 {
            let rows = rng.random_range(1..=10usize);
            let cols = rng.random_range(1..=6usize);
            let mut m = BinaryMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.random_bool(0.5) {
                        m.set(r, c, true);
                    }
                }
            }
            assert_eq!(min_distance(&m, 24).unwrap().distance, naive_min_distance(&m));
        }
    }

    #[test]
    fn min_distance_multiword_rows() {
        // 70 codeword coordinates exercise the word-vector accumulator
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut m = BinaryMatrix::zeros(70, 5);
        for r in 0..70 {
            for c in 0..5 {
                if rng.random_bool(0.3) {
                    m.set(r, c, true);
                }
            }
        }
        assert_eq!(
            min_distance(&m, 24).unwrap().distance,
            naive_min_distance(&m)
        );
    }

    #[test]
    fn gadget_search_tiny_cases() {
        let b = gadget_code_search(1, 1, 10, 0).unwrap().unwrap();
        assert_eq!((b.rows(), b.cols()), (1, 1));

        // weight-1 messages give w(x) + w(Bx) <= 1 + side, so side 2 cannot
        // reach distance 4
        assert!(gadget_code_search(2, 4, 500, 0).unwrap().is_none());
    }

    #[test]
    fn gadget_search_side10_d5() {
        // seed 0 first succeeds at attempt 1978
        let b = gadget_code_search(10, 5, 4000, 0)
            .unwrap()
            .expect("a [20,10] pair with distance 5 appears within 4000 attempts");
        let id = BinaryMatrix::identity(10);
        let d1 = min_distance(&id.vstack(&b).unwrap(), 24).unwrap().distance;
        let d2 = min_distance(&id.vstack(&b.transpose()).unwrap(), 24)
            .unwrap()
            .distance;
        assert!(d1 >= 5 && d2 >= 5);
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = hamming_7_4();
        let text = write_matrix(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert!(matches!(parse_matrix("0 3\n"), Err(Error::EmptyMatrix)));
        assert!(matches!(parse_matrix("1 2\n012\n"), Err(Error::Parse(_))));
    }
}
