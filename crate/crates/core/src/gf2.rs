//! Binary linear algebra over GF(2) on Majorana supports.
//!
//! Vectors are indexed from 1 so that coordinate `μ` is Majorana mode `c_μ`.
//! Elimination always pivots on the leftmost nonzero column, which makes
//! witnesses and null-space bases reproducible across runs.

use std::fmt;

use crate::error::Gf2Error;

/// A packed vector over GF(2) with 1-based coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 1..=len {
            v.set(i, true);
        }
        v
    }

    /// Builds a vector from 1-based coordinates. Repeated indices cancel.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self, Gf2Error> {
        let mut v = Self::zeros(len);
        for &i in indices {
            if i == 0 || i > len {
                return Err(Gf2Error::IndexOutOfRange { index: i, len });
            }
            v.flip(i);
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i + 1, b);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, leftmost character is coordinate 1.
    pub fn parse_bits(s: &str) -> Result<Self, Gf2Error> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Gf2Error::BadBitChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_bools(&bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// # Panics
    /// Panics if `i` is not in `1..=len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "coordinate {i} out of 1..={}", self.len);
        let k = i - 1;
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i >= 1 && i <= self.len, "coordinate {i} out of 1..={}", self.len);
        let k = i - 1;
        if value {
            self.words[k / 64] |= 1 << (k % 64);
        } else {
            self.words[k / 64] &= !(1 << (k % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.len, "coordinate {i} out of 1..={}", self.len);
        let k = i - 1;
        self.words[k / 64] ^= 1 << (k % 64);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|self ∩ other|`.
    pub fn overlap(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Plain dot product `Σ a_μ b_μ mod 2`.
    pub fn dot(&self, other: &Self) -> bool {
        self.overlap(other) % 2 == 1
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Set coordinates in increasing order (1-based).
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                out.push(w * 64 + t + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Leftmost set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize + 1);
            }
        }
        None
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (1..=self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// `⟨A, B⟩ = |A|·|B| + |A ∩ B| mod 2`.
///
/// Zero means `c_A` and `c_B` commute, one means they anticommute.
pub fn symplectic_form(a: &BitVec, b: &BitVec) -> Result<bool, Gf2Error> {
    if a.len() != b.len() {
        return Err(Gf2Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok((a.weight() * b.weight() + a.overlap(b)) % 2 == 1)
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn new(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVec::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::LengthMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Parses rows of `0`/`1` strings. Whitespace inside a row is ignored.
    pub fn parse_rows(rows: &[&str]) -> Result<Self, Gf2Error> {
        let parsed = rows
            .iter()
            .map(|r| BitVec::parse_bits(&r.split_whitespace().collect::<String>()))
            .collect::<Result<Vec<_>, _>>()?;
        let cols = parsed.first().map_or(0, BitVec::len);
        Self::from_rows(cols, parsed)
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<(), Gf2Error> {
        if row.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// 1-based row access.
    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r - 1]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r - 1].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r - 1].set(c, value);
    }

    /// Column `c` as a vector (1-based).
    pub fn column(&self, c: usize) -> BitVec {
        let mut out = BitVec::zeros(self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            out.set(r + 1, row.get(c));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let rows = (1..=self.cols).map(|c| self.column(c)).collect();
        Self {
            rows,
            cols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Gf2Error> {
        if self.cols != other.nrows() {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: other.nrows(),
            });
        }
        let mut out = Self::zeros(self.nrows(), other.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for k in row.indices() {
                out.rows[r].xor_assign(&other.rows[k - 1]);
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok(BitVec::from_bools(
            &self.rows.iter().map(|row| row.dot(v)).collect::<Vec<_>>(),
        ))
    }

    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.nrows();
        if n != self.cols {
            return None;
        }
        let mut left = self.rows.clone();
        let mut right = Self::identity(n).rows;
        for col in 1..=n {
            let pivot = (col - 1..n).find(|&r| left[r].get(col))?;
            left.swap(col - 1, pivot);
            right.swap(col - 1, pivot);
            for r in 0..n {
                if r != col - 1 && left[r].get(col) {
                    let (lp, rp) = (left[col - 1].clone(), right[col - 1].clone());
                    left[r].xor_assign(&lp);
                    right[r].xor_assign(&rp);
                }
            }
        }
        Some(Self { rows: right, cols: n })
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{}\n{self}", self.nrows(), self.cols)
    }
}

/// Row-echelon form that remembers which original rows produced each pivot
/// row, so span membership can return a witness combination.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    nrows: usize,
    // (pivot column, reduced row, combination of original rows)
    pivots: Vec<(usize, BitVec, BitVec)>,
    dependencies: Vec<BitVec>,
}

impl Echelon {
    pub fn new(m: &Gf2Matrix) -> Self {
        let nrows = m.nrows();
        let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut dependencies = Vec::new();
        for (r, row) in m.rows().iter().enumerate() {
            let mut v = row.clone();
            let mut combo = BitVec::zeros(nrows);
            combo.set(r + 1, true);
            reduce(&pivots, &mut v, &mut combo);
            match v.first_one() {
                Some(p) => pivots.push((p, v, combo)),
                None => dependencies.push(combo),
            }
        }
        Self {
            cols: m.ncols(),
            nrows,
            pivots,
            dependencies,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Combinations of original rows (as 1-based index sets) that sum to zero.
    pub fn dependencies(&self) -> &[BitVec] {
        &self.dependencies
    }

    /// Reduces `v` against the pivots. Returns the residual and the
    /// combination of original rows that was subtracted.
    pub fn reduce(&self, v: &BitVec) -> Result<(BitVec, BitVec), Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let mut residual = v.clone();
        let mut combo = BitVec::zeros(self.nrows);
        reduce(&self.pivots, &mut residual, &mut combo);
        Ok((residual, combo))
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool, Gf2Error> {
        Ok(self.reduce(v)?.0.is_zero())
    }
}

fn reduce(pivots: &[(usize, BitVec, BitVec)], v: &mut BitVec, combo: &mut BitVec) {
    for (p, row, c) in pivots {
        if v.get(*p) {
            v.xor_assign(row);
            combo.xor_assign(c);
        }
    }
}

pub fn rank(m: &Gf2Matrix) -> usize {
    Echelon::new(m).rank()
}

/// Tests whether `v` is a GF(2) combination of the rows of `m`.
///
/// On success the witness lists the (1-based) rows whose sum is `v`.
pub fn in_span(v: &BitVec, m: &Gf2Matrix) -> Result<Option<Vec<usize>>, Gf2Error> {
    let (residual, combo) = Echelon::new(m).reduce(v)?;
    Ok(residual.is_zero().then(|| combo.indices()))
}

/// Basis of `{x : m·x = 0}` in reduced form, free columns taken left to right.
pub fn nullspace(m: &Gf2Matrix) -> Vec<BitVec> {
    let cols = m.ncols();
    let mut rows: Vec<BitVec> = m.rows().to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 1..=cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    (1..=cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut x = BitVec::zeros(cols);
            x.set(free, true);
            for (i, &pc) in pivot_cols.iter().enumerate() {
                if rows[i].get(free) {
                    x.set(pc, true);
                }
            }
            x
        })
        .collect()
}

/// The Gram matrix of the symplectic form in the canonical basis: all ones
/// off the diagonal, zeros on it.
pub fn symplectic_gram(len: usize) -> Gf2Matrix {
    let mut j = Gf2Matrix::zeros(len, len);
    for r in 1..=len {
        for c in 1..=len {
            j.set(r, c, r != c);
        }
    }
    j
}

/// Basis of the symplectic complement `{v : ⟨v, row⟩ = 0 for every row}`.
pub fn symplectic_complement(m: &Gf2Matrix) -> Vec<BitVec> {
    let j = symplectic_gram(m.ncols());
    // ⟨v, s⟩ = (J s) · v, so the complement is the null space of the rows J s.
    let constraints = Gf2Matrix {
        rows: m
            .rows()
            .iter()
            .map(|s| j.mul_vec(s).expect("square gram matrix"))
            .collect(),
        cols: m.ncols(),
    };
    nullspace(&constraints)
}

/// Basis-change matrices between Majorana coordinates and the symplectic
/// (Pauli z/x) basis for `modes` fermionic modes.
///
/// Column `2I-1` of `B` is `e_{2I-1} + e_{2I}` and column `2I` is
/// `e_1 + … + e_{2I-1}`; `A` is its inverse, so `v̂ = A v` and `v = B v̂`.
pub fn basis_change_matrices(modes: usize) -> (Gf2Matrix, Gf2Matrix) {
    let n = 2 * modes;
    let mut b = Gf2Matrix::zeros(n, n);
    for i in 1..=modes {
        b.set(2 * i - 1, 2 * i - 1, true);
        b.set(2 * i, 2 * i - 1, true);
        for k in 1..=(2 * i - 1) {
            b.set(k, 2 * i, true);
        }
    }
    let a = b.inverse().expect("symplectic basis change is invertible");
    (a, b)
}
