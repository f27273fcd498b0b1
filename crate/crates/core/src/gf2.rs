//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into 64-bit words. Every rank, kernel and span question
//! in the crate ends up here. Elimination pivots on the first nonzero column
//! and the first qualifying row, so bases come out identical across runs.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{input, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
///
/// Bits past `len` in the last word are always zero, so word-wise equality
/// and hashing agree with coordinate-wise equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self { len, words: vec![u64::MAX; words_for(len)] };
        v.clear_padding();
        v
    }

    /// Unit vector with a single set coordinate.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.toggle(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    /// Parses a string of `0`/`1` characters; character `i` is coordinate `i`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.chars().count());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => return input(format!("bad bit character {other:?} at position {i}")),
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set coordinates, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "and of vectors with different lengths");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    /// True if every set coordinate of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        self.len == other.len && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Applies a coordinate permutation: coordinate `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> BitVec {
        assert_eq!(perm.len(), self.len);
        BitVec::from_indices(self.len, self.iter_ones().map(|i| perm[i]))
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl BitXorAssign<&BitVec> for BitVec {
    fn bitxor_assign(&mut self, rhs: &BitVec) {
        self.xor_assign(rhs);
    }
}

impl BitXor<&BitVec> for &BitVec {
    type Output = BitVec;
    fn bitxor(self, rhs: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl BitXor for BitVec {
    type Output = BitVec;
    fn bitxor(mut self, rhs: BitVec) -> BitVec {
        self.xor_assign(&rhs);
        self
    }
}

/// Xor of the vectors selected by `coefficients`.
pub fn combine(vectors: &[BitVec], coefficients: &BitVec, len: usize) -> BitVec {
    let mut out = BitVec::zeros(len);
    for i in coefficients.iter_ones() {
        out.xor_assign(&vectors[i]);
    }
    out
}

/// Row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { ncols, rows: vec![BitVec::zeros(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { ncols: n, rows: (0..n).map(|i| BitVec::unit(n, i)).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return input(format!("row {i} has length {}, expected {ncols}", r.len()));
        }
        Ok(Self { ncols, rows })
    }

    /// Matrix of the linear map sending unit vector `e_i` to `e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.rows[j].set(i, true);
        }
        m
    }

    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows.iter().map(|r| BitVec::parse(r)).collect::<Result<Vec<_>>>()?;
        let ncols = parsed.first().map_or(0, BitVec::len);
        Self::from_rows(ncols, parsed)
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.ncols {
            return input(format!("row has length {}, expected {}", row.len(), self.ncols));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols, "vector length does not match column count");
        BitVec::from_bools(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols, other.nrows(), "inner dimensions differ");
        let rows = self
            .rows
            .iter()
            .map(|r| combine(&other.rows, r, other.ncols))
            .collect();
        BitMatrix { ncols: other.ncols, rows }
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.nrows(), self.ncols), (other.nrows(), other.ncols));
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect();
        BitMatrix { ncols: self.ncols, rows }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &BitMatrix) -> Rref {
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..m.ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
    }
    Rref { reduced: BitMatrix { ncols: m.ncols, rows }, rank: next, pivots }
}

pub fn rank(m: &BitMatrix) -> usize {
    let mut e = Eliminator::new(m.ncols);
    m.rows.iter().filter(|r| e.insert(r)).count()
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(vectors: &[BitVec]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut e = Eliminator::new(first.len());
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// Basis of `{ v : M v = 0 }`, one vector per free column of the RREF.
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVec> {
    let Rref { reduced, rank, pivots } = rref(m);
    let mut is_pivot = vec![false; m.ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVec::unit(m.ncols, free);
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                if reduced.rows[r].get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// Basis of the left kernel `{ c : c^T M = 0 }`, i.e. of the linear relations
/// among the rows of `M`.
pub fn left_kernel_basis(m: &BitMatrix) -> Vec<BitVec> {
    kernel_basis(&m.transpose())
}

/// Incremental echelon basis that remembers, for every stored row, which of
/// the inserted vectors it was built from. Supports membership tests with a
/// coefficient witness over the insertion order.
#[derive(Debug, Clone)]
pub struct Eliminator {
    len: usize,
    inserted: usize,
    // (pivot column, reduced vector, combination of inserted vectors)
    rows: Vec<(usize, BitVec, BitVec)>,
    capacity_hint: usize,
}

impl Eliminator {
    pub fn new(len: usize) -> Self {
        Self { len, inserted: 0, rows: Vec::new(), capacity_hint: 64 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn combo_len(&self) -> usize {
        self.capacity_hint.max(self.inserted)
    }

    fn grow_combos(&mut self) {
        if self.inserted < self.capacity_hint {
            return;
        }
        let new_cap = (self.capacity_hint * 2).max(self.inserted + 1);
        for (_, _, combo) in &mut self.rows {
            let mut grown = BitVec::zeros(new_cap);
            for i in combo.iter_ones() {
                grown.set(i, true);
            }
            *combo = grown;
        }
        self.capacity_hint = new_cap;
    }

    /// Reduces `v` against the stored rows. Returns the residue and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residue = v.clone();
        let mut combo = BitVec::zeros(self.combo_len());
        for (pivot, row, row_combo) in &self.rows {
            if residue.get(*pivot) {
                residue.xor_assign(row);
                combo.xor_assign(row_combo);
            }
        }
        (residue, combo)
    }

    /// Inserts `v`; returns true if it was independent of everything before.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.len, "vector length does not match eliminator");
        self.grow_combos();
        let idx = self.inserted;
        self.inserted += 1;
        let (residue, mut combo) = self.reduce(v);
        let Some(pivot) = residue.first_one() else {
            return false;
        };
        combo.toggle(idx);
        // keep rows fully reduced on pivot columns so reduce() is one pass
        for (_, row, row_combo) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&residue);
                row_combo.xor_assign(&combo);
            }
        }
        self.rows.push((pivot, residue, combo));
        true
    }

    /// Coefficients over the inserted vectors whose xor equals `target`, or
    /// `None` when `target` is outside their span.
    pub fn solve(&self, target: &BitVec) -> Option<BitVec> {
        assert_eq!(target.len(), self.len, "target length does not match eliminator");
        let (residue, combo) = self.reduce(target);
        if !residue.is_zero() {
            return None;
        }
        Some(BitVec::from_indices(self.inserted, combo.iter_ones()))
    }

    pub fn contains(&self, target: &BitVec) -> bool {
        let (residue, _) = self.reduce(target);
        residue.is_zero()
    }
}

fn common_len(vectors: &[BitVec], expected: Option<usize>) -> Result<usize> {
    let len = expected.or_else(|| vectors.first().map(BitVec::len)).unwrap_or(0);
    if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != len) {
        return input(format!("vector {i} has length {}, expected {len}", v.len()));
    }
    Ok(len)
}

/// Finds coefficients selecting a subset of `basis` whose xor is `target`.
///
/// `basis` may be dependent; any valid coefficient vector is returned.
pub fn solve_in_span(basis: &[BitVec], target: &BitVec) -> Result<Option<BitVec>> {
    let len = common_len(basis, Some(target.len()))?;
    let mut e = Eliminator::new(len);
    for v in basis {
        e.insert(v);
    }
    Ok(e.solve(target))
}

/// The vectors of `vectors` that are independent of their predecessors.
pub fn independent_subset(vectors: &[BitVec]) -> Vec<BitVec> {
    let Some(len) = vectors.first().map(BitVec::len) else {
        return Vec::new();
    };
    let mut e = Eliminator::new(len);
    vectors.iter().filter(|v| e.insert(v)).cloned().collect()
}

/// Basis of `{ v in span(space) : action v = v }`.
///
/// `space` must be linearly independent (see [`independent_subset`]).
/// `action` must be an involutive coordinate permutation. The fixed vectors
/// are the kernel of `action + I` restricted to the span.
pub fn fixed_subspace_basis(space: &[BitVec], action: &BitMatrix) -> Result<Vec<BitVec>> {
    let n = action.ncols();
    if action.nrows() != n {
        return input("action matrix is not square");
    }
    let perm = permutation_of(action).ok_or_else(|| {
        crate::error::Error::Input("action is not a coordinate permutation".into())
    })?;
    if perm.iter().enumerate().any(|(i, &j)| perm[j] != i) {
        return input("action is not involutive");
    }
    common_len(space, Some(n))?;
    let images: Vec<BitVec> = space.iter().map(|v| v ^ &v.permuted(&perm)).collect();
    if space.is_empty() {
        return Ok(Vec::new());
    }
    let relations = BitMatrix::from_rows(n, images)?;
    Ok(left_kernel_basis(&relations)
        .iter()
        .map(|c| combine(space, c, n))
        .collect())
}

/// Recovers `perm` from a permutation matrix built by [`BitMatrix::permutation`].
pub fn permutation_of(m: &BitMatrix) -> Option<Vec<usize>> {
    let n = m.ncols();
    if m.nrows() != n {
        return None;
    }
    let mut perm = vec![usize::MAX; n];
    for (j, row) in m.rows().iter().enumerate() {
        let mut ones = row.iter_ones();
        let i = ones.next()?;
        if ones.next().is_some() || perm[i] != usize::MAX {
            return None;
        }
        perm[i] = j;
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_vectors(len: usize) -> impl Iterator<Item = BitVec> {
        (0u32..1 << len).map(move |m| BitVec::from_indices(len, (0..len).filter(|i| m >> i & 1 == 1)))
    }

    #[test]
    fn padding_stays_clear() {
        let v = BitVec::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
    }

    #[test]
    fn rref_identity_and_zero() {
        let r = rref(&BitMatrix::identity(3));
        assert_eq!((r.rank, r.pivots.clone()), (3, vec![0, 1, 2]));
        let r = rref(&BitMatrix::zeros(2, 5));
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn kernel_of_two_rows_matches_enumeration() {
        let m = BitMatrix::parse_rows(&["110", "011"]).unwrap();
        let brute: Vec<BitVec> = all_vectors(3).filter(|v| m.mul_vec(v).is_zero()).collect();
        assert_eq!(brute.len(), 2);
        assert_eq!(rref(&m).rank, 2);
        assert_eq!(kernel_basis(&m), vec![BitVec::parse("111").unwrap()]);
    }

    #[test]
    fn kernel_edge_cases() {
        assert!(kernel_basis(&BitMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&BitMatrix::zeros(1, 3)).len(), 3);
    }

    #[test]
    fn solve_small_cases() {
        let basis = vec![BitVec::parse("101").unwrap(), BitVec::parse("011").unwrap()];
        let c = solve_in_span(&basis, &BitVec::parse("110").unwrap()).unwrap().unwrap();
        assert_eq!(c, BitVec::parse("11").unwrap());
        let basis = vec![BitVec::parse("101").unwrap()];
        assert_eq!(solve_in_span(&basis, &BitVec::parse("010").unwrap()).unwrap(), None);
        assert!(solve_in_span(&basis, &BitVec::parse("01").unwrap()).is_err());
    }

    #[test]
    fn solve_with_dependent_basis() {
        let basis: Vec<BitVec> = ["1100", "0110", "1010", "0011"].iter().map(|s| BitVec::parse(s).unwrap()).collect();
        for t in all_vectors(4) {
            match solve_in_span(&basis, &t).unwrap() {
                Some(c) => assert_eq!(combine(&basis, &c, 4), t),
                None => assert_eq!(t.count_ones() % 2, 1),
            }
        }
    }

    #[test]
    fn fixed_subspace_swap() {
        let space = vec![BitVec::parse("10").unwrap(), BitVec::parse("01").unwrap()];
        let swap = BitMatrix::permutation(&[1, 0]);
        let fixed = fixed_subspace_basis(&space, &swap).unwrap();
        assert_eq!(fixed, vec![BitVec::parse("11").unwrap()]);
        let same = fixed_subspace_basis(&space, &BitMatrix::identity(2)).unwrap();
        assert_eq!(rank_of(&same), 2);
    }

    #[test]
    fn fixed_subspace_rejects_non_involution() {
        let space = vec![BitVec::parse("100").unwrap()];
        let rot = BitMatrix::permutation(&[1, 2, 0]);
        assert!(fixed_subspace_basis(&space, &rot).is_err());
        let not_perm = BitMatrix::parse_rows(&["11", "01"]).unwrap();
        assert!(fixed_subspace_basis(&space[..0], &not_perm).is_err());
    }

    #[test]
    fn permutation_matrix_moves_coordinates() {
        let p = BitMatrix::permutation(&[2, 0, 1]);
        assert_eq!(p.mul_vec(&BitVec::unit(3, 0)), BitVec::unit(3, 2));
        assert_eq!(permutation_of(&p).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn eliminator_grows_past_hint() {
        let mut e = Eliminator::new(200);
        for i in 0..150 {
            assert!(e.insert(&BitVec::unit(200, i)));
        }
        let t = BitVec::from_indices(200, [3, 77, 149]);
        assert_eq!(e.solve(&t).unwrap(), BitVec::from_indices(150, [3, 77, 149]));
    }
}
