//! The Pontryagin ring `⊕_n H_*(BS_n; F_2)` in its polynomial basis.
//!
//! The homology of the disjoint union of all symmetric groups, under the
//! product induced by `S_n × S_m → S_{n+m}`, is a polynomial algebra on the
//! class `ι` of a point in `BS_1` together with the classes `q_I(ι)` for
//! strongly admissible sequences `I` (non-decreasing, no zero entries),
//! where `q_I` is a composite of Kudo-Araki operations. `q_I(ι)` lives on
//! component `2^k` (`k` the length of `I`) in degree the weight of `I`.
//!
//! A monomial in these generators is a [`NakaokaMonomial`]. The module
//! computes the action of arbitrary operation composites on `ι`
//! ([`apply_qseq`]), the two coproducts carried by the Pontryagin ring (dual
//! to cup and to transfer product), and component/degree-graded bases.

use crate::f2::{binom_mod2, F2Sum};
use crate::kudo_araki::{normalize, AdmissibleSeq};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A monomial in the polynomial generators of the Pontryagin ring: a
/// multiset of strongly admissible sequences together with a power of `ι`.
///
/// The empty monomial is the unit `1` on component 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct NakaokaMonomial {
    factors: Vec<AdmissibleSeq>,
    iota: u32,
}

impl NakaokaMonomial {
    /// The unit monomial on component 0.
    pub fn one() -> Self {
        NakaokaMonomial {
            factors: Vec::new(),
            iota: 0,
        }
    }

    /// The monomial `ι^s` on component `s`, degree 0.
    pub fn iota_power(s: u32) -> Self {
        NakaokaMonomial {
            factors: Vec::new(),
            iota: s,
        }
    }

    /// The generator `q_I(ι)` for a strongly admissible, nonempty `I`.
    pub fn generator(seq: AdmissibleSeq) -> Self {
        assert!(
            seq.is_strong() && !seq.is_empty(),
            "polynomial generators are indexed by nonempty strongly admissible sequences"
        );
        NakaokaMonomial {
            factors: vec![seq],
            iota: 0,
        }
    }

    /// Assemble a monomial from factors and an `ι` exponent. Factors must be
    /// strongly admissible and nonempty; they are sorted internally.
    pub fn from_parts(factors: Vec<AdmissibleSeq>, iota: u32) -> Self {
        assert!(factors.iter().all(|f| f.is_strong() && !f.is_empty()));
        let mut factors = factors;
        factors.sort();
        NakaokaMonomial { factors, iota }
    }

    /// The generator multiset, sorted.
    pub fn factors(&self) -> &[AdmissibleSeq] {
        &self.factors
    }

    /// The exponent of `ι`.
    pub fn iota_exp(&self) -> u32 {
        self.iota
    }

    /// Factors grouped as (sequence, multiplicity), in sorted order.
    pub fn grouped_factors(&self) -> Vec<(&AdmissibleSeq, u32)> {
        let mut out: Vec<(&AdmissibleSeq, u32)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, mult)) if *g == f => *mult += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    /// The symmetric group index: `ι` contributes 1 per power, `q_I(ι)`
    /// contributes `2^{len I}`.
    pub fn component(&self) -> u32 {
        self.iota
            + self
                .factors
                .iter()
                .map(|f| 1u32 << f.len())
                .sum::<u32>()
    }

    /// Total homological degree.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|f| f.weight()).sum()
    }

    /// Pontryagin product of two monomials: multiset union of factors, `ι`
    /// exponents added. Components add; the basis has no relations, so the
    /// product of basis monomials is a basis monomial.
    pub fn pontryagin(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        NakaokaMonomial {
            factors,
            iota: self.iota + other.iota,
        }
    }

    /// `self` to the `k`-th Pontryagin power.
    pub fn pow(&self, k: u32) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() * k as usize);
        for _ in 0..k {
            factors.extend(self.factors.iter().cloned());
        }
        factors.sort();
        NakaokaMonomial {
            factors,
            iota: self.iota * k,
        }
    }
}

impl fmt::Display for NakaokaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.iota == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (seq, mult) in self.grouped_factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{seq}")?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        if self.iota > 0 {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "i")?;
            if self.iota > 1 {
                write!(f, "^{}", self.iota)?;
            }
        }
        Ok(())
    }
}

/// The class `q_I(ι)` of an arbitrary (not necessarily admissible) index
/// sequence, expanded in the polynomial basis.
///
/// The sequence is first normalized; an admissible term with `k` leading
/// zeros and strongly admissible tail `J` contributes `(q_J(ι))^{2^k}`
/// (leading zeros are outermost Pontryagin squarings), with `q_{∅} = ι`.
pub fn apply_qseq(seq: &[u32]) -> F2Sum<NakaokaMonomial> {
    normalize(seq).map(|adm| {
        let copies = 1u32 << adm.leading_zeros();
        let tail = adm.strong_tail();
        if tail.is_empty() {
            NakaokaMonomial::iota_power(copies)
        } else {
            NakaokaMonomial::from_parts(vec![tail; copies as usize], 0)
        }
    })
}

/// Tensor product of two sums, multiplying slotwise collectors.
fn tensor(
    a: &F2Sum<NakaokaMonomial>,
    b: &F2Sum<NakaokaMonomial>,
) -> F2Sum<(NakaokaMonomial, NakaokaMonomial)> {
    let mut out = F2Sum::zero();
    for x in a.iter() {
        for y in b.iter() {
            out.toggle((x.clone(), y.clone()));
        }
    }
    out
}

/// The coproduct dual to the cup product, on a basis monomial.
///
/// On a generator it is `Δ q_I(ι) = Σ_{J + K = I} q_J(ι) ⊗ q_K(ι)` with the
/// sum over entrywise splittings (so `J`, `K` need not be admissible), on
/// `ι` it is `ι ⊗ ι`, and it is multiplicative for the Pontryagin product.
pub fn cup_coproduct(m: &NakaokaMonomial) -> F2Sum<(NakaokaMonomial, NakaokaMonomial)> {
    let s = m.iota_exp();
    let mut acc = F2Sum::singleton((
        NakaokaMonomial::iota_power(s),
        NakaokaMonomial::iota_power(s),
    ));
    for factor in m.factors() {
        let entries = factor.entries();
        let mut split_sum = F2Sum::zero();
        let mut j = vec![0u32; entries.len()];
        loop {
            let k: Vec<u32> = entries.iter().zip(&j).map(|(&e, &a)| e - a).collect();
            split_sum.add_assign(tensor(&apply_qseq(&j), &apply_qseq(&k)));
            // Odometer over 0 <= j <= entries, entrywise.
            let mut pos = 0;
            loop {
                if pos == entries.len() {
                    break;
                }
                if j[pos] < entries[pos] {
                    j[pos] += 1;
                    break;
                }
                j[pos] = 0;
                pos += 1;
            }
            if pos == entries.len() {
                break;
            }
        }
        acc = {
            let mut next = F2Sum::zero();
            for (a, b) in acc.iter() {
                for (c, d) in split_sum.iter() {
                    next.toggle((a.pontryagin(c), b.pontryagin(d)));
                }
            }
            next
        };
    }
    acc
}

/// The coproduct dual to the transfer product, on a basis monomial.
///
/// Each generator `q_I(ι)` is primitive; on `ι^s` the coproduct is
/// `Σ_i C(s, i) ι^i ⊗ ι^{s-i}`; multiplicativity then gives, on a monomial,
/// the sum of submultiset splittings whose product of binomial coefficients
/// `C(multiplicity, chosen)` is odd.
pub fn transfer_coproduct(m: &NakaokaMonomial) -> F2Sum<(NakaokaMonomial, NakaokaMonomial)> {
    let groups = m.grouped_factors();
    let mut out = F2Sum::zero();
    // choices[g] = how many copies of group g go left; iota split separate.
    let mut choices = vec![0u32; groups.len()];
    loop {
        let coeff_ok = groups
            .iter()
            .zip(&choices)
            .all(|((_, mult), &c)| binom_mod2(*mult as u64, c as u64));
        if coeff_ok {
            for i in 0..=m.iota_exp() {
                if !binom_mod2(m.iota_exp() as u64, i as u64) {
                    continue;
                }
                let mut left: Vec<AdmissibleSeq> = Vec::new();
                let mut right: Vec<AdmissibleSeq> = Vec::new();
                for ((seq, mult), &c) in groups.iter().zip(&choices) {
                    for _ in 0..c {
                        left.push((*seq).clone());
                    }
                    for _ in 0..(mult - c) {
                        right.push((*seq).clone());
                    }
                }
                out.toggle((
                    NakaokaMonomial::from_parts(left, i),
                    NakaokaMonomial::from_parts(right, m.iota_exp() - i),
                ));
            }
        }
        let mut pos = 0;
        loop {
            if pos == groups.len() {
                break;
            }
            if choices[pos] < groups[pos].1 {
                choices[pos] += 1;
                break;
            }
            choices[pos] = 0;
            pos += 1;
        }
        if pos == groups.len() {
            break;
        }
    }
    out
}

/// All nonempty strongly admissible sequences whose component `2^len` and
/// weight fit the given bounds.
fn strong_seqs(max_component: u32, max_weight: u64) -> Vec<AdmissibleSeq> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(stack: &mut Vec<u32>, max_component: u32, max_weight: u64, out: &mut Vec<AdmissibleSeq>) {
        if !stack.is_empty() {
            out.push(AdmissibleSeq::new(stack.clone()));
        }
        // Adding one more entry doubles the component.
        if (2u64 << stack.len()) > max_component as u64 {
            return;
        }
        let pos = stack.len();
        let lo = stack.last().copied().unwrap_or(1).max(1);
        let base: u64 = crate::kudo_araki::seq_weight(stack);
        let mut e = lo;
        while base + ((e as u64) << pos) <= max_weight {
            stack.push(e);
            rec(stack, max_component, max_weight, out);
            stack.pop();
            e += 1;
        }
    }
    rec(&mut stack, max_component, max_weight, &mut out);
    out.sort();
    out
}

/// The monomial basis of `H_d(BS_n)`: all monomials of component `n` and
/// degree `d`, in a canonical sorted order.
pub fn basis(component: u32, degree: u64) -> Vec<NakaokaMonomial> {
    let pool = strong_seqs(component, degree);
    let mut out = Vec::new();
    let mut chosen: Vec<AdmissibleSeq> = Vec::new();
    fn rec(
        pool: &[AdmissibleSeq],
        idx: usize,
        rem_comp: u32,
        rem_deg: u64,
        chosen: &mut Vec<AdmissibleSeq>,
        out: &mut Vec<NakaokaMonomial>,
    ) {
        if idx == pool.len() {
            // Remaining component is filled by ι, which carries no degree.
            if rem_deg == 0 {
                out.push(NakaokaMonomial::from_parts(chosen.clone(), rem_comp));
            }
            return;
        }
        let seq = &pool[idx];
        let comp = 1u32 << seq.len();
        let wt = seq.weight();
        rec(pool, idx + 1, rem_comp, rem_deg, chosen, out);
        // wt >= 1 for strong sequences, so the multiplicity is bounded.
        let mut used = 0u32;
        while (used + 1) * comp <= rem_comp && (used as u64 + 1) * wt <= rem_deg {
            used += 1;
            chosen.push(seq.clone());
            rec(
                pool,
                idx + 1,
                rem_comp - used * comp,
                rem_deg - used as u64 * wt,
                chosen,
                out,
            );
        }
        for _ in 0..used {
            chosen.pop();
        }
    }
    rec(&pool, 0, component, degree, &mut chosen, &mut out);
    out.sort();
    out
}
