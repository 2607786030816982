//! Dense bit-packed linear algebra over the two-element field.
//!
//! Rows are packed 64 entries per word and eliminated with word-wide XOR.
//! Everything is exact and deterministic: [`MatrixGf2::rref`] produces the
//! fully reduced row echelon form (pivots 1, zeros above and below), which
//! is the unique canonical representative of a row space, and
//! [`MatrixGf2::kernel`] returns the null space in the same canonical form.
//! At the scale this crate works at (ambient dimensions in the low
//! thousands) dense beats sparse comfortably.

use std::fmt;

const WORD_BITS: usize = 64;

/// A rows × cols matrix over `F₂`, rows bit-packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixGf2 {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl MatrixGf2 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD_BITS);
        MatrixGf2 {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatrixGf2::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from explicit 0/1 rows (test and display helper).
    pub fn from_dense(rows: &[Vec<u8>], cols: usize) -> Self {
        let mut m = MatrixGf2::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for (c, &bit) in row.iter().enumerate() {
                if bit != 0 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.data[r * self.words + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for i in 0..w {
            self.data.swap(a * w + i, b * w + i);
        }
    }

    /// `row dst ^= row src`; the rows must be distinct.
    fn xor_rows(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let w = self.words;
        let (lo, hi) = self.data.split_at_mut(src.max(dst) * w);
        if src < dst {
            let s = &lo[src * w..(src + 1) * w];
            let d = &mut hi[..w];
            for i in 0..w {
                d[i] ^= s[i];
            }
        } else {
            let s = &hi[..w];
            let d = &mut lo[dst * w..(dst + 1) * w];
            for i in 0..w {
                d[i] ^= s[i];
            }
        }
    }

    /// Column of the first 1 in a row, if any.
    pub fn leading_col(&self, r: usize) -> Option<usize> {
        for (i, &w) in self.row_words(r).iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Reduced row echelon form and rank. Pivot rows come first in pivot
    /// column order; the remaining rows are zero.
    pub fn rref(&self) -> (MatrixGf2, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(pivot, rank);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_rows(rank, r);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical echelon basis of `{v : M v = 0}`, one basis vector per row.
    /// The row count equals `cols − rank`.
    pub fn kernel(&self) -> MatrixGf2 {
        let (r, rank) = self.rref();
        let pivots: Vec<usize> = (0..rank)
            .map(|row| r.leading_col(row).expect("pivot rows are nonzero"))
            .collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = MatrixGf2::zero(free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            k.set(i, f, true);
            for (row, &p) in pivots.iter().enumerate() {
                if r.get(row, f) {
                    k.set(i, p, true);
                }
            }
        }
        // The rows are independent by the unit part in the free columns;
        // a final reduction makes the basis canonical.
        let (kr, krank) = k.rref();
        debug_assert_eq!(krank, free.len());
        kr
    }

    /// Vertical concatenation. All parts must agree on the column count.
    pub fn stack(parts: &[&MatrixGf2]) -> MatrixGf2 {
        let first = parts.first().expect("stack of no matrices");
        assert!(
            parts.iter().all(|m| m.cols == first.cols),
            "stacked matrices must share the column count"
        );
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = MatrixGf2::zero(rows, first.cols);
        let mut at = 0;
        for part in parts {
            out.data[at * out.words..(at + part.rows) * out.words].copy_from_slice(&part.data);
            at += part.rows;
        }
        out
    }

    pub fn transpose(&self) -> MatrixGf2 {
        let mut t = MatrixGf2::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for (i, &w) in self.row_words(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let c = i * WORD_BITS + bits.trailing_zeros() as usize;
                    t.set(c, r, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// Matrix product; `self.cols` must equal `rhs.rows`.
    pub fn mul(&self, rhs: &MatrixGf2) -> MatrixGf2 {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = MatrixGf2::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for j in 0..self.cols {
                if self.get(r, j) {
                    let src = j * rhs.words;
                    let dst = r * out.words;
                    for i in 0..rhs.words {
                        out.data[dst + i] ^= rhs.data[src + i];
                    }
                }
            }
        }
        out
    }

    /// Row-major 0/1 CSV, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    out.push(',');
                }
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MatrixGf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over GF(2)", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
