//! The Kudo-Araki algebra of homology operations at the prime 2.
//!
//! Operations `q_i` (one for each `i ≥ 0`) act on the homology of
//! E-infinity spaces; `q_0` is the Pontryagin squaring, not the identity,
//! which is the indexing convention throughout this crate. A composite
//! `q_{i_1} ∘ ... ∘ q_{i_k}` (written as the sequence `i_1, ..., i_k`,
//! applied right to left) is *admissible* when the entries are
//! non-decreasing. Inadmissible composites rewrite into sums of admissible
//! ones by the Adem relation: for `m > n`,
//!
//! ```text
//! q_m ∘ q_n = Σ_i C(i - n - 1, 2i - m - n) q_{m + 2n - 2i} ∘ q_i
//! ```
//!
//! with binomial coefficients mod 2, `C(a, b) = 0` unless `0 ≤ b ≤ a`, and
//! terms with a negative resulting index discarded. Both the length and the
//! weight `|I| = i_1 + 2 i_2 + 4 i_3 + ...` are preserved by the rewrite.

use crate::f2::{binom_mod2, F2Sum};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// An admissible (non-decreasing) sequence of operation indices.
///
/// The empty sequence is the identity composite.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AdmissibleSeq {
    entries: Vec<u32>,
}

impl AdmissibleSeq {
    /// Wrap a sequence, asserting admissibility.
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(
            is_admissible(&entries),
            "sequence is not admissible (non-decreasing)"
        );
        AdmissibleSeq { entries }
    }

    /// The entries. The sequence `i_1, ..., i_k` denotes the composite
    /// `q_{i_1} ∘ ... ∘ q_{i_k}`, so `entries()[0] = i_1` is the outermost,
    /// last-applied operation. On a degree-zero class the composite lands in
    /// degree `i_1 + 2 i_2 + ... + 2^{k-1} i_k`.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Number of operations composed.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether this is the empty (identity) composite.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The weight `i_1 + 2 i_2 + 4 i_3 + ...`, the homological degree of
    /// the value on a degree-zero class.
    pub fn weight(&self) -> u64 {
        seq_weight(&self.entries)
    }

    /// Whether the sequence is strongly admissible: no zero entries.
    pub fn is_strong(&self) -> bool {
        self.entries.first().map_or(true, |&e| e >= 1)
    }

    /// Number of leading zero entries.
    pub fn leading_zeros(&self) -> usize {
        self.entries.iter().take_while(|&&e| e == 0).count()
    }

    /// The strongly admissible tail after the leading zeros.
    pub fn strong_tail(&self) -> AdmissibleSeq {
        AdmissibleSeq {
            entries: self.entries[self.leading_zeros()..].to_vec(),
        }
    }
}

impl fmt::Display for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Whether `seq` is non-decreasing.
pub fn is_admissible(seq: &[u32]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}

/// The weight `i_1 + 2 i_2 + 4 i_3 + ...` of an arbitrary index sequence.
pub fn seq_weight(seq: &[u32]) -> u64 {
    seq.iter()
        .enumerate()
        .map(|(j, &e)| (e as u64) << j)
        .sum()
}

/// One Adem rewrite: the expansion of the inadmissible pair `q_m ∘ q_n`,
/// `m > n`, as a sum of pairs `(a, i)` denoting `q_a ∘ q_i` with `a ≤ i`.
pub fn adem_step(m: u32, n: u32) -> F2Sum<(u32, u32)> {
    assert!(m > n, "adem_step requires an inadmissible pair");
    let (m, n) = (m as i64, n as i64);
    let mut out = F2Sum::zero();
    // C(i - n - 1, 2i - m - n) forces (m + n)/2 <= i <= m - 1; the operation
    // index m + 2n - 2i must additionally be non-negative.
    for i in (m + n).div_euclid(2)..=m - 1 {
        let a = m + 2 * n - 2 * i;
        if a < 0 {
            continue;
        }
        let (top, bot) = (i - n - 1, 2 * i - m - n);
        if bot < 0 || bot > top {
            continue;
        }
        if binom_mod2(top as u64, bot as u64) {
            debug_assert!(a <= i, "rewritten pair must be admissible");
            out.toggle((a as u32, i as u32));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Pick {
    Leftmost,
    Rightmost,
}

/// Express a composite of operations in the admissible basis.
///
/// Repeatedly rewrites the leftmost inadmissible adjacent pair with
/// [`adem_step`], collecting mod 2. Every term of the result has the same
/// length and weight as the input. Results are memoized across the
/// intermediate sums of a single call.
pub fn normalize(seq: &[u32]) -> F2Sum<AdmissibleSeq> {
    normalize_by(seq, Pick::Leftmost)
}

/// [`normalize`] driven by the rightmost inadmissible pair instead.
///
/// The rewriting is confluent, so this agrees with `normalize`; the two
/// strategies share no intermediate terms, which makes the agreement a
/// useful self-check and it is asserted over a range in the test suite.
pub fn normalize_rightmost(seq: &[u32]) -> F2Sum<AdmissibleSeq> {
    normalize_by(seq, Pick::Rightmost)
}

fn normalize_by(seq: &[u32], pick: Pick) -> F2Sum<AdmissibleSeq> {
    let mut memo = BTreeMap::new();
    let out = norm_rec(seq.to_vec(), pick, &mut memo);
    debug_assert!(out.iter().all(|t| t.len() == seq.len()));
    debug_assert!(out.iter().all(|t| t.weight() == seq_weight(seq)));
    out
}

fn norm_rec(
    seq: Vec<u32>,
    pick: Pick,
    memo: &mut BTreeMap<Vec<u32>, F2Sum<AdmissibleSeq>>,
) -> F2Sum<AdmissibleSeq> {
    if let Some(hit) = memo.get(&seq) {
        return hit.clone();
    }
    let inadmissible = |j: &usize| seq[*j] > seq[*j + 1];
    let candidates = 0..seq.len().saturating_sub(1);
    let bad = match pick {
        Pick::Leftmost => candidates.clone().find(inadmissible),
        Pick::Rightmost => candidates.rev().find(inadmissible),
    };
    let out = match bad {
        None => F2Sum::singleton(AdmissibleSeq::new(seq.clone())),
        Some(j) => {
            let mut acc = F2Sum::zero();
            for &(a, i) in adem_step(seq[j], seq[j + 1]).terms() {
                let mut next = seq.clone();
                next[j] = a;
                next[j + 1] = i;
                acc.add_assign(norm_rec(next, pick, memo));
            }
            acc
        }
    };
    memo.insert(seq, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn adm(entries: &[u32]) -> AdmissibleSeq {
        AdmissibleSeq::new(entries.to_vec())
    }

    #[test]
    fn adem_small_cases() {
        assert!(adem_step(1, 0).is_zero());
        assert_eq!(adem_step(2, 0), F2Sum::singleton((0, 1)));
        assert!(adem_step(2, 1).is_zero());
        assert_eq!(adem_step(3, 1), F2Sum::singleton((1, 2)));
    }

    #[test]
    fn adem_drops_negative_index_terms() {
        // For q_6 q_0 the index i = 4 has an odd binomial C(3, 2) but would
        // produce q_{-2}; only i = 3 survives, giving q_0 q_3.
        assert_eq!(adem_step(6, 0), F2Sum::singleton((0, 3)));
    }

    #[test]
    fn adem_preserves_weight() {
        for m in 1..24u32 {
            for n in 0..m {
                let w = seq_weight(&[m, n]);
                for &(a, i) in adem_step(m, n).terms() {
                    assert!(a <= i);
                    assert_eq!(seq_weight(&[a, i]), w, "adem({m},{n}) term ({a},{i})");
                }
            }
        }
    }

    #[test]
    fn normalize_fixes_admissible_input() {
        for s in [vec![], vec![0], vec![1, 1, 3], vec![0, 0, 2, 2]] {
            assert_eq!(normalize(&s), F2Sum::singleton(adm(&s)));
        }
    }

    #[test]
    fn normalize_kills_q1_q0() {
        // The composite q_1 ∘ q_0 is the sequence 1,0, inadmissible with an
        // empty Adem expansion.
        assert!(normalize(&[1, 0]).is_zero());
    }

    #[test]
    fn squaring_commutation_from_adem_alone() {
        // q_{2n} ∘ q_0 = q_0 ∘ q_n and q_{2n+1} ∘ q_0 = 0: both classical
        // identities must fall out of normalize with no special casing.
        for n in 1..=8u32 {
            assert_eq!(
                normalize(&[2 * n, 0]),
                F2Sum::singleton(adm(&[0, n])),
                "q_{} q_0",
                2 * n
            );
            assert!(normalize(&[2 * n + 1, 0]).is_zero(), "q_{} q_0", 2 * n + 1);
        }
    }

    #[test]
    fn strong_tail_splits_leading_zeros() {
        let s = adm(&[0, 0, 1, 3]);
        assert!(!s.is_strong());
        assert_eq!(s.leading_zeros(), 2);
        assert_eq!(s.strong_tail(), adm(&[1, 3]));
        assert!(s.strong_tail().is_strong());
    }

    #[test]
    fn weight_is_binary_weighted_sum() {
        assert_eq!(adm(&[1, 1]).weight(), 3);
        assert_eq!(adm(&[2, 2]).weight(), 6);
        assert_eq!(adm(&[1, 2, 3]).weight(), 1 + 4 + 12);
        assert_eq!(adm(&[]).weight(), 0);
    }

    #[test]
    fn display_form() {
        use alloc::string::ToString;
        assert_eq!(adm(&[0, 1]).to_string(), "q[0,1]");
        assert_eq!(adm(&[]).to_string(), "q[]");
    }
}
