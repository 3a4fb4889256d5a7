//! Formal sums over F_2, binomial coefficients mod 2, and dense GF(2)
//! linear algebra.
//!
//! Every algebraic object in this crate is a finite formal sum of basis
//! terms with coefficients in F_2, so a sum is just a finite set of terms:
//! adding a term twice cancels it. [`F2Sum`] wraps an ordered set with that
//! symmetric-difference addition, which keeps every sum in a canonical form
//! and makes equality of computed values structural.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A finite formal sum of distinct terms with F_2 coefficients.
///
/// Stored as the set of terms with coefficient 1, kept in the `Ord` order of
/// `T`. Addition is symmetric difference.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct F2Sum<T: Ord> {
    terms: BTreeSet<T>,
}

impl<T: Ord> F2Sum<T> {
    /// The zero sum.
    pub fn zero() -> Self {
        F2Sum {
            terms: BTreeSet::new(),
        }
    }

    /// The sum with a single term.
    pub fn singleton(t: T) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(t);
        F2Sum { terms }
    }

    /// Whether this is the zero sum.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms with coefficient 1.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the sum has no terms. Alias of [`F2Sum::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t`, as a boolean.
    pub fn contains(&self, t: &T) -> bool {
        self.terms.contains(t)
    }

    /// Add a single term mod 2: inserts `t`, or removes it if present.
    pub fn toggle(&mut self, t: T) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    /// Add another sum mod 2.
    pub fn add_assign(&mut self, other: F2Sum<T>) {
        for t in other.terms {
            self.toggle(t);
        }
    }

    /// Iterate the terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.terms.iter()
    }

    /// The underlying term set.
    pub fn terms(&self) -> &BTreeSet<T> {
        &self.terms
    }

    /// Apply `f` to every term, re-collecting mod 2 (images may cancel).
    pub fn map<U: Ord>(self, mut f: impl FnMut(T) -> U) -> F2Sum<U> {
        let mut out = F2Sum::zero();
        for t in self.terms {
            out.toggle(f(t));
        }
        out
    }

    /// Replace every term by a sum, adding the results mod 2.
    pub fn flat_map<U: Ord>(self, mut f: impl FnMut(T) -> F2Sum<U>) -> F2Sum<U> {
        let mut out = F2Sum::zero();
        for t in self.terms {
            out.add_assign(f(t));
        }
        out
    }
}

impl<T: Ord> Default for F2Sum<T> {
    fn default() -> Self {
        F2Sum::zero()
    }
}

impl<T: Ord> core::ops::Add for F2Sum<T> {
    type Output = F2Sum<T>;
    fn add(mut self, rhs: F2Sum<T>) -> F2Sum<T> {
        self.add_assign(rhs);
        self
    }
}

impl<T: Ord> core::ops::AddAssign for F2Sum<T> {
    fn add_assign(&mut self, rhs: F2Sum<T>) {
        F2Sum::add_assign(self, rhs);
    }
}

/// Collects with mod-2 semantics: a term appearing an even number of times
/// cancels to zero, unlike a plain set collect.
impl<T: Ord> FromIterator<T> for F2Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut out = F2Sum::zero();
        for t in iter {
            out.toggle(t);
        }
        out
    }
}

impl<T: Ord> IntoIterator for F2Sum<T> {
    type Item = T;
    type IntoIter = alloc::collections::btree_set::IntoIter<T>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<T: Ord + fmt::Display> fmt::Display for F2Sum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Binomial coefficient `C(n, k)` mod 2.
///
/// By Lucas' theorem this is 1 exactly when every binary digit of `k` is at
/// most the corresponding digit of `n`, i.e. `n & k == k`. For `k > n` some
/// digit of `k` exceeds, giving 0, so no range check is needed.
pub fn binom_mod2(n: u64, k: u64) -> bool {
    n & k == k
}

/// Multinomial coefficient `(p_1 + ... + p_r)! / (p_1! ... p_r!)` mod 2.
///
/// Odd exactly when the parts are pairwise digit-disjoint in binary, so that
/// their sum has no carries.
pub fn multinomial_mod2(parts: &[u64]) -> bool {
    let mut seen = 0u64;
    for &p in parts {
        if seen & p != 0 {
            return false;
        }
        seen |= p;
    }
    true
}

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: Vec<Vec<u64>>,
    ncols: usize,
}

impl BitMatrix {
    /// The zero matrix of the given shape.
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        let words = ncols.div_ceil(64);
        BitMatrix {
            rows: vec![vec![0u64; words]; nrows],
            ncols,
        }
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Read entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(c < self.ncols);
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    /// Write entry `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(c < self.ncols);
        let word = &mut self.rows[r][c / 64];
        let mask = 1u64 << (c % 64);
        if bit {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// The transpose.
    pub fn transposed(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.ncols, self.nrows());
        for r in 0..self.nrows() {
            for c in 0..self.ncols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Rank over GF(2), by elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.ncols {
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] & mask != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r][word] & mask != 0 {
                    let (pr, tr) = if r < rank {
                        let (a, b) = rows.split_at_mut(rank);
                        (&b[0], &mut a[r])
                    } else {
                        let (a, b) = rows.split_at_mut(r);
                        (&a[rank], &mut b[0])
                    };
                    for (t, p) in tr.iter_mut().zip(pr.iter()) {
                        *t ^= p;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Whether the matrix is square of full rank.
    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.ncols && self.rank() == self.ncols
    }

    /// Solve `A x = rhs` over GF(2), returning any solution, or `None` if
    /// the system is inconsistent. When `A` is invertible the solution is
    /// unique. `rhs.len()` must equal the number of rows.
    pub fn solve(&self, rhs: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(rhs.len(), self.nrows());
        let mut rows = self.rows.clone();
        let mut b: Vec<bool> = rhs.to_vec();
        let mut pivot_col: Vec<Option<usize>> = Vec::new();
        let mut rank = 0;
        for c in 0..self.ncols {
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] & mask != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            b.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r][word] & mask != 0 {
                    let (pr, tr) = if r < rank {
                        let (a, rest) = rows.split_at_mut(rank);
                        (&rest[0], &mut a[r])
                    } else {
                        let (a, rest) = rows.split_at_mut(r);
                        (&a[rank], &mut rest[0])
                    };
                    for (t, p) in tr.iter_mut().zip(pr.iter()) {
                        *t ^= p;
                    }
                    b[r] ^= b[rank];
                }
            }
            pivot_col.push(Some(c));
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        // Rows below the rank are zero; their rhs must be too.
        if b[rank..].iter().any(|&x| x) {
            return None;
        }
        let mut x = vec![false; self.ncols];
        for (r, col) in pivot_col.iter().enumerate() {
            if let Some(c) = col {
                x[*c] = b[r];
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_cancels_pairs() {
        let mut s = F2Sum::zero();
        s.toggle(3u32);
        s.toggle(5);
        s.toggle(3);
        assert_eq!(s, F2Sum::singleton(5));
        s.toggle(5);
        assert!(s.is_zero());
    }

    #[test]
    fn collect_uses_mod2_multiplicity() {
        let s: F2Sum<u32> = [1, 2, 1, 3, 2, 2].into_iter().collect();
        let expected: F2Sum<u32> = [3, 2].into_iter().collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn binom_matches_pascal_oracle() {
        // Pascal's triangle mod 2, built by addition alone.
        let mut row = vec![1u8];
        for n in 0..64u64 {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binom_mod2(n, k as u64), c == 1, "C({n},{k})");
            }
            assert!(!binom_mod2(n, n + 1));
            assert!(!binom_mod2(n, n + 17));
            let mut next = vec![1u8];
            for k in 1..row.len() {
                next.push((row[k - 1] + row[k]) % 2);
            }
            next.push(1);
            row = next;
        }
    }

    #[test]
    fn multinomial_matches_iterated_binomial() {
        for a in 0..16u64 {
            for b in 0..16u64 {
                for c in 0..16u64 {
                    // (a+b+c)! / a!b!c! = C(a+b+c, a) * C(b+c, b)
                    let expected = binom_mod2(a + b + c, a) && binom_mod2(b + c, b);
                    assert_eq!(multinomial_mod2(&[a, b, c]), expected);
                }
            }
        }
    }

    #[test]
    fn solve_recovers_known_product() {
        // Deterministic test matrices from a small LCG over several sizes.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for n in 1..20usize {
            let mut m = BitMatrix::zeros(n, n);
            for r in 0..n {
                for c in 0..n {
                    m.set(r, c, next() & 1 == 1);
                }
            }
            let x: Vec<bool> = (0..n).map(|_| next() & 1 == 1).collect();
            let mut rhs = vec![false; n];
            for r in 0..n {
                for c in 0..n {
                    if m.get(r, c) && x[c] {
                        rhs[r] = !rhs[r];
                    }
                }
            }
            let sol = m.solve(&rhs).expect("consistent by construction");
            // Verify A*sol == rhs (sol need not equal x when singular).
            for r in 0..n {
                let mut acc = false;
                for c in 0..n {
                    if m.get(r, c) && sol[c] {
                        acc = !acc;
                    }
                }
                assert_eq!(acc, rhs[r]);
            }
            if m.is_invertible() {
                assert_eq!(sol, x);
            }
        }
    }

    #[test]
    fn rank_of_structured_matrices() {
        let mut id = BitMatrix::zeros(5, 5);
        for i in 0..5 {
            id.set(i, i, true);
        }
        assert_eq!(id.rank(), 5);
        assert!(id.is_invertible());

        let mut rep = BitMatrix::zeros(4, 6);
        for c in 0..6 {
            rep.set(1, c, true);
            rep.set(3, c, true);
        }
        assert_eq!(rep.rank(), 1);

        let z = BitMatrix::zeros(3, 7);
        assert_eq!(z.rank(), 0);
        assert!(z.solve(&[false, false, false]).is_some());
        assert!(z.solve(&[false, true, false]).is_none());
    }

    #[test]
    fn transpose_roundtrip() {
        let mut m = BitMatrix::zeros(3, 70);
        m.set(0, 0, true);
        m.set(1, 64, true);
        m.set(2, 69, true);
        let t = m.transposed();
        assert_eq!(t.nrows(), 70);
        assert!(t.get(64, 1));
        let back = t.transposed();
        for r in 0..3 {
            for c in 0..70 {
                assert_eq!(m.get(r, c), back.get(r, c));
            }
        }
    }
}
