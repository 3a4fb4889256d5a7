//! Generating families: Dickson-indexed polynomial generators and
//! Stiefel-Whitney classes of the permutation representations.
//!
//! A [`DicksonPartition`] indexes one indecomposable generator of the
//! cohomology ring of a symmetric group as found by restricting to the
//! elementary abelian 2-subgroups and applying the Feshbach criterion: a
//! level-`n` tuple `(t_0, …, t_{n-1})` with some `t_k` odd names the
//! Dickson monomial `Π_k d_{n,k}^{t_k}`, realised here as the gathered
//! monomial `Π_{k+l=n} γ_{l,2^k}^{t_k}` spread by a unit. The admission
//! bound [`DicksonPartition::weight`] cuts the list down to the generators
//! of `H^*(BS_m)`; [`feshbach_generators`] enumerates them.
//!
//! The Stiefel-Whitney classes `w(k,l)` of the `m`-point permutation
//! representation are recovered from homology: `w(k,l)` is the unique
//! class of component `2^{k+l}` and degree `2^k(2^l - 1)` whose pairing
//! against a Nakaoka monomial is 1 exactly when every operation factor of
//! the monomial is an iterated `q_1` ([`sw_indicator`]). Their coproduct
//! has a closed combinatorial form over *bi-partition splittings*
//! ([`sw_coproduct`]), and the indicator itself is cross-checked against
//! the homology of `⊔_n BO(n)`, where the image of the standard inclusion
//! is computed by Kudo-Araki operations on the classes `b_i`
//! ([`bo_apply_qseq`]).

use crate::cohomology::{self, GatheredMonomial};
use crate::duality::Duality;
use crate::f2::{binom_mod2, F2Sum};
use crate::homology::{self, NakaokaMonomial};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A level-`n` Dickson partition: exponents `(t_0, …, t_{n-1})` of the
/// Dickson invariants `d_{n,0}, …, d_{n,n-1}`, with at least one `t_k`
/// odd so that the associated monomial is indecomposable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DicksonPartition {
    t: Vec<u32>,
}

impl DicksonPartition {
    /// Build from the exponent tuple. The level is the tuple length.
    pub fn new(t: Vec<u32>) -> Self {
        assert!(!t.is_empty(), "level is at least 1");
        assert!(t.iter().any(|&e| e % 2 == 1), "some exponent must be odd");
        DicksonPartition { t }
    }

    /// The level `n`.
    pub fn level(&self) -> u32 {
        self.t.len() as u32
    }

    /// The exponent tuple.
    pub fn entries(&self) -> &[u32] {
        &self.t
    }

    /// Cohomological degree of the Dickson monomial:
    /// `Σ_k t_k 2^k (2^{n-k} - 1)`.
    pub fn degree(&self) -> u64 {
        let n = self.level();
        self.t
            .iter()
            .enumerate()
            .map(|(k, &tk)| tk as u64 * (1u64 << k) * ((1u64 << (n - k as u32)) - 1))
            .sum()
    }

    /// The multiplicity bound `μ`: write every exponent in binary and pool
    /// the powers of two. With no power repeated, `μ = Σ t_k`; otherwise,
    /// with `2^l` the largest repeated power, the pool collapses to
    /// `μ = 2^{l+1} + Σ {2^d : 2^d > 2^l occurring}`.
    pub fn mu(&self) -> u64 {
        let mut count: BTreeMap<u32, u32> = BTreeMap::new();
        for &tk in &self.t {
            for d in 0..32 {
                if tk >> d & 1 == 1 {
                    *count.entry(d).or_insert(0) += 1;
                }
            }
        }
        let repeated = count.iter().rev().find(|&(_, &c)| c >= 2).map(|(&d, _)| d);
        match repeated {
            None => self.t.iter().map(|&tk| tk as u64).sum(),
            Some(l) => {
                (1u64 << (l + 1))
                    + count
                        .keys()
                        .filter(|&&d| d > l)
                        .map(|&d| 1u64 << d)
                        .sum::<u64>()
            }
        }
    }

    /// The admission weight `2^n μ`: the smallest symmetric group whose
    /// cohomology contains this generator.
    pub fn weight(&self) -> u64 {
        (1u64 << self.level()) * self.mu()
    }

    /// The generator as a gathered monomial on `m` points:
    /// `Π_{k+l=n} γ_{l,2^k}^{t_k} ⊙ 1_{m-2^n}`.
    ///
    /// Panics unless `weight() ≤ m`.
    pub fn class(&self, m: u32) -> GatheredMonomial {
        assert!(self.weight() <= m as u64, "not admitted on {m} points");
        let n = self.level();
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut k_min = None;
        for (k, &tk) in self.t.iter().enumerate() {
            if tk > 0 {
                pairs.push((n - k as u32, tk));
                if k_min.is_none() {
                    k_min = Some(k as u32);
                }
            }
        }
        let width = 1u32 << k_min.expect("some exponent is odd");
        let block = cohomology::Block::new(cohomology::Profile::new(pairs), width);
        debug_assert_eq!(block.component(), 1 << n);
        GatheredMonomial::from_blocks(vec![block], m - (1 << n))
            .expect("a single block cannot gather to zero")
    }
}

impl fmt::Display for DicksonPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d[")?;
        for (k, &tk) in self.t.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{tk}")?;
        }
        write!(f, "]")
    }
}

/// All Dickson partitions admitted on `m` points, sorted by level, then
/// degree, then tuple. These index the indecomposable generators of the
/// cohomology ring of `BS_m`.
pub fn feshbach_generators(m: u32) -> Vec<DicksonPartition> {
    let mut out = Vec::new();
    let mut n = 1u32;
    while (1u64 << n) <= m as u64 {
        // μ ≥ max t_k, so exponents beyond m / 2^n never admit.
        let cap = m >> n;
        let mut t = vec![0u32; n as usize];
        loop {
            if t.iter().any(|&e| e % 2 == 1) {
                let p = DicksonPartition::new(t.clone());
                if p.weight() <= m as u64 {
                    out.push(p);
                }
            }
            let mut k = 0usize;
            loop {
                if k == n as usize {
                    break;
                }
                if t[k] < cap {
                    t[k] += 1;
                    break;
                }
                t[k] = 0;
                k += 1;
            }
            if k == n as usize {
                break;
            }
        }
        n += 1;
    }
    out.sort_by_key(|p| (p.level(), p.degree(), p.entries().to_vec()));
    out
}

/// Whether a Nakaoka monomial pairs to 1 with the Stiefel-Whitney class of
/// its bidegree: true exactly when every operation factor is an iterated
/// `q_1` (the power of ι is unconstrained).
pub fn sw_indicator(m: &NakaokaMonomial) -> bool {
    m.factors()
        .iter()
        .all(|s| s.entries().iter().all(|&e| e == 1))
}

/// Degree of `w(k,l)`: `2^k (2^l - 1)`.
pub fn sw_degree(k: u32, l: u32) -> u64 {
    (1u64 << k) * ((1u64 << l) - 1)
}

/// Component of `w(k,l)`: `2^{k+l}`.
pub fn sw_component(k: u32, l: u32) -> u32 {
    1 << (k + l)
}

/// The Stiefel-Whitney class `w_{2^k(2^l-1)}` of the permutation
/// representation of `S_m`, in the gathered-monomial basis. `m` must be at
/// least `2^{k+l}` (the default representation size).
pub fn sw_class(k: u32, l: u32, m: u32, duality: &mut Duality) -> F2Sum<GatheredMonomial> {
    assert!(m >= sw_component(k, l));
    let degree = sw_degree(k, l);
    let cols = homology::basis(m, degree);
    let values: Vec<bool> = cols.iter().map(sw_indicator).collect();
    duality.functional_to_basis(m, degree, &values)
}

/// One half of a bi-partition splitting: a repeat-free set of bidegree
/// indices `(k, l)`, kept sorted.
type Half = Vec<(u32, u32)>;

/// All ordered pairs of repeat-free sets of bidegree indices whose joint
/// degree and component totals are those of `w(k,l)`.
pub fn bi_partition_splits(k: u32, l: u32) -> Vec<(Half, Half)> {
    let target_deg = sw_degree(k, l);
    let target_comp = sw_component(k, l);
    let mut cands: Vec<(u32, u32)> = Vec::new();
    for a in 0..=(k + l) {
        for b in 0..=(k + l - a) {
            if sw_degree(a, b) <= target_deg {
                cands.push((a, b));
            }
        }
    }
    // Biggest components first so the pruning bites early.
    cands.sort_by_key(|&(a, b)| (core::cmp::Reverse(sw_component(a, b)), a, b));
    let mut out = Vec::new();
    let mut p1: Half = Vec::new();
    let mut p2: Half = Vec::new();
    fn rec(
        cands: &[(u32, u32)],
        idx: usize,
        rem_deg: u64,
        rem_comp: u32,
        p1: &mut Half,
        p2: &mut Half,
        out: &mut Vec<(Half, Half)>,
    ) {
        if rem_deg == 0 && rem_comp == 0 {
            let mut a = p1.clone();
            let mut b = p2.clone();
            a.sort_unstable();
            b.sort_unstable();
            out.push((a, b));
            return;
        }
        if idx == cands.len() {
            return;
        }
        let (a, b) = cands[idx];
        let (d, c) = (sw_degree(a, b), sw_component(a, b));
        rec(cands, idx + 1, rem_deg, rem_comp, p1, p2, out);
        for take in 1..=2u32 {
            let (td, tc) = (d * take as u64, c * take);
            if td > rem_deg || tc > rem_comp {
                break;
            }
            if take == 1 {
                p1.push((a, b));
                rec(cands, idx + 1, rem_deg - td, rem_comp - tc, p1, p2, out);
                p1.pop();
                p2.push((a, b));
                rec(cands, idx + 1, rem_deg - td, rem_comp - tc, p1, p2, out);
                p2.pop();
            } else {
                p1.push((a, b));
                p2.push((a, b));
                rec(cands, idx + 1, rem_deg - td, rem_comp - tc, p1, p2, out);
                p1.pop();
                p2.pop();
            }
        }
    }
    rec(&cands, 0, target_deg, target_comp, &mut p1, &mut p2, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether `p` refines `q`: `p` splits into one group per entry of `q`,
/// each group carrying exactly that entry's degree and component.
fn half_refines(p: &Half, q: &Half) -> bool {
    fn assign(p: &[(u32, u32)], idx: usize, slots: &mut [(u64, u32)]) -> bool {
        if idx == p.len() {
            return slots.iter().all(|&(d, c)| d == 0 && c == 0);
        }
        let (d, c) = (sw_degree(p[idx].0, p[idx].1), sw_component(p[idx].0, p[idx].1));
        for s in 0..slots.len() {
            if slots[s].0 >= d && slots[s].1 >= c {
                slots[s].0 -= d;
                slots[s].1 -= c;
                if assign(p, idx + 1, slots) {
                    slots[s].0 += d;
                    slots[s].1 += c;
                    return true;
                }
                slots[s].0 += d;
                slots[s].1 += c;
            }
        }
        false
    }
    let mut slots: Vec<(u64, u32)> = q
        .iter()
        .map(|&(a, b)| (sw_degree(a, b), sw_component(a, b)))
        .collect();
    assign(p, 0, &mut slots)
}

/// Whether one splitting refines another on both halves at once.
pub fn split_refines(x: &(Half, Half), y: &(Half, Half)) -> bool {
    half_refines(&x.0, &y.0) && half_refines(&x.1, &y.1)
}

/// The mod-2 Möbius-type indicator on the refinement order: `φ(x) = 1 +
/// Σ_{y > x} φ(y)`, so maximal splittings get 1.
fn phi(splits: &[(Half, Half)]) -> Vec<bool> {
    let n = splits.len();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && split_refines(&splits[i], &splits[j]) {
                above[i].push(j);
            }
        }
    }
    let mut memo: Vec<Option<bool>> = vec![None; n];
    fn eval(i: usize, above: &[Vec<usize>], memo: &mut Vec<Option<bool>>) -> bool {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut acc = true;
        for &j in &above[i] {
            if eval(j, above, memo) {
                acc = !acc;
            }
        }
        memo[i] = Some(acc);
        acc
    }
    (0..n).map(|i| eval(i, &above, &mut memo)).collect()
}

/// The coproduct of `w(k,l)` in closed form: the sum over bi-partition
/// splittings with `φ = 1` of the transfer products of the smaller
/// Stiefel-Whitney classes on each half.
pub fn sw_coproduct(
    k: u32,
    l: u32,
    duality: &mut Duality,
) -> F2Sum<(GatheredMonomial, GatheredMonomial)> {
    let splits = bi_partition_splits(k, l);
    let keep = phi(&splits);
    let mut classes: BTreeMap<(u32, u32), F2Sum<GatheredMonomial>> = BTreeMap::new();
    let mut half_value = |h: &Half, duality: &mut Duality| -> F2Sum<GatheredMonomial> {
        let mut acc = F2Sum::singleton(GatheredMonomial::one());
        for &(a, b) in h {
            let w = classes
                .entry((a, b))
                .or_insert_with(|| sw_class(a, b, sw_component(a, b), duality))
                .clone();
            acc = cohomology::transfer_sum(&acc, &w);
        }
        acc
    };
    let mut out = F2Sum::zero();
    for (s, _) in splits.iter().zip(&keep).filter(|&(_, &kp)| kp) {
        let left = half_value(&s.0, duality);
        let right = half_value(&s.1, duality);
        for x in left.iter() {
            for y in right.iter() {
                out.toggle((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// A monomial in the homology of `⊔_n BO(n)`: a multiset of classes `b_i`,
/// `i ≥ 0`, one per line summand. Component is the number of factors,
/// degree the index sum. `b_0` is the nontrivial degree-0 class of
/// `BO(1)`, not the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BOMonomial {
    factors: BTreeMap<u32, u32>,
}

impl BOMonomial {
    /// The empty product, the unit of `H_*(BO(0))`.
    pub fn one() -> Self {
        BOMonomial {
            factors: BTreeMap::new(),
        }
    }

    /// The class `b_i`.
    pub fn b(i: u32) -> Self {
        BOMonomial {
            factors: [(i, 1)].into_iter().collect(),
        }
    }

    /// The factors as `(index, multiplicity)`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.factors.iter().map(|(&i, &c)| (i, c))
    }

    /// Number of `b` factors.
    pub fn component(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Sum of the indices.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(&i, &c)| i as u64 * c as u64).sum()
    }

    /// Product: merge the multisets.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, &c) in &other.factors {
            *out.factors.entry(i).or_insert(0) += c;
        }
        out
    }

    /// The square.
    pub fn squared(&self) -> Self {
        let mut out = self.clone();
        for c in out.factors.values_mut() {
            *c *= 2;
        }
        out
    }

    fn pop_factor(&self) -> Option<(u32, BOMonomial)> {
        let (&i, _) = self.factors.iter().next()?;
        let mut rest = self.clone();
        match rest.factors.get_mut(&i) {
            Some(c) if *c > 1 => *c -= 1,
            _ => {
                rest.factors.remove(&i);
            }
        }
        Some((i, rest))
    }
}

impl fmt::Display for BOMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (j, (&i, &c)) in self.factors.iter().enumerate() {
            if j > 0 {
                write!(f, "*")?;
            }
            write!(f, "b{i}")?;
            if c > 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }
}

/// Kudo-Araki operation `q_r` on one BO monomial. `q_0` squares; on a
/// single `b_n`, `q_r(b_n) = Σ_i binom(r+i-1, i) b_{n-i} b_{r+n+i}`; on
/// products the Cartan formula applies; `q_r` kills the unit for `r ≥ 1`.
pub fn bo_apply_q(r: u32, m: &BOMonomial) -> F2Sum<BOMonomial> {
    if r == 0 {
        return F2Sum::singleton(m.squared());
    }
    let Some((n, rest)) = m.pop_factor() else {
        return F2Sum::zero();
    };
    if rest.factors.is_empty() {
        let mut out = F2Sum::zero();
        for i in 0..=n {
            if binom_mod2((r + i - 1) as u64, i as u64) {
                out.toggle(BOMonomial::b(n - i).mul(&BOMonomial::b(r + n + i)));
            }
        }
        return out;
    }
    let mut out = F2Sum::zero();
    for s in 0..=r {
        let first = bo_apply_q(s, &BOMonomial::b(n));
        let second = bo_apply_q(r - s, &rest);
        for x in first.iter() {
            for y in second.iter() {
                out.toggle(x.mul(y));
            }
        }
    }
    out
}

/// Apply a composite `q_{i_1} ∘ ⋯ ∘ q_{i_r}` (leftmost entry outermost) to
/// a BO monomial.
pub fn bo_apply_qseq(entries: &[u32], m: &BOMonomial) -> F2Sum<BOMonomial> {
    let mut state = F2Sum::singleton(m.clone());
    for &e in entries.iter().rev() {
        let mut next = F2Sum::zero();
        for t in state.iter() {
            next.add_assign(bo_apply_q(e, t));
        }
        state = next;
    }
    state
}

/// The image of a Nakaoka monomial under the standard inclusions
/// `BS_n → BO(n)`: `ι ↦ b_0` and `q_I(ι) ↦ q_I(b_0)`, multiplicatively.
pub fn nakaoka_to_bo(m: &NakaokaMonomial) -> F2Sum<BOMonomial> {
    let mut acc = F2Sum::singleton(BOMonomial::one());
    for _ in 0..m.iota_exp() {
        acc = acc.map(|t| t.mul(&BOMonomial::b(0)));
    }
    for seq in m.factors() {
        let img = bo_apply_qseq(seq.entries(), &BOMonomial::b(0));
        let mut next = F2Sum::zero();
        for x in acc.iter() {
            for y in img.iter() {
                next.toggle(x.mul(y));
            }
        }
        acc = next;
    }
    acc
}

/// The pairing of the degree-`d` Stiefel-Whitney class of the tautological
/// bundle with a BO-homology functional: on component `n`, `⟨w_d, x⟩` is
/// the coefficient of `b_0^{n-d} b_1^d` in `x`.
pub fn bo_sw_pairs(x: &F2Sum<BOMonomial>, component: u32, degree: u64) -> bool {
    if degree > component as u64 {
        return false;
    }
    let mut target = BOMonomial::one();
    for _ in 0..(component as u64 - degree) {
        target = target.mul(&BOMonomial::b(0));
    }
    for _ in 0..degree {
        target = target.mul(&BOMonomial::b(1));
    }
    x.contains(&target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::NakaokaMonomial;
    use crate::kudo_araki::AdmissibleSeq;
    use alloc::string::ToString;

    fn dp(t: &[u32]) -> DicksonPartition {
        DicksonPartition::new(t.to_vec())
    }

    #[test]
    fn mu_frozen_values() {
        assert_eq!(dp(&[1]).mu(), 1);
        assert_eq!(dp(&[3]).mu(), 3);
        assert_eq!(dp(&[5]).mu(), 5);
        assert_eq!(dp(&[1, 0]).mu(), 1);
        assert_eq!(dp(&[0, 1]).mu(), 1);
        assert_eq!(dp(&[1, 1]).mu(), 2);
        assert_eq!(dp(&[1, 2]).mu(), 3);
        assert_eq!(dp(&[2, 1]).mu(), 3);
        assert_eq!(dp(&[3, 0]).mu(), 3);
        assert_eq!(dp(&[1, 3]).mu(), 4);
        assert_eq!(dp(&[3, 1]).mu(), 4);
        assert_eq!(dp(&[3, 2]).mu(), 4);
        assert_eq!(dp(&[2, 3]).mu(), 4);
        assert_eq!(dp(&[0, 0, 1]).mu(), 1);
    }

    #[test]
    fn degrees_at_level_two() {
        assert_eq!(dp(&[1, 0]).degree(), 3);
        assert_eq!(dp(&[0, 1]).degree(), 2);
        assert_eq!(dp(&[1, 1]).degree(), 5);
        assert_eq!(dp(&[0, 3]).degree(), 6);
        assert_eq!(dp(&[1, 2]).degree(), 7);
        assert_eq!(dp(&[2, 1]).degree(), 8);
        assert_eq!(dp(&[3, 0]).degree(), 9);
    }

    #[test]
    fn feshbach_two_and_four_points() {
        let g2 = feshbach_generators(2);
        assert_eq!(g2, vec![dp(&[1])]);
        assert_eq!(g2[0].class(2), GatheredMonomial::generator(1, 1));

        let g4 = feshbach_generators(4);
        assert_eq!(g4, vec![dp(&[1]), dp(&[0, 1]), dp(&[1, 0])]);
        let classes: Vec<GatheredMonomial> = g4.iter().map(|p| p.class(4)).collect();
        let spread = cohomology::transfer(
            &GatheredMonomial::generator(1, 1),
            &GatheredMonomial::unit(2),
        );
        assert_eq!(classes[0], spread.iter().next().unwrap().clone());
        assert_eq!(classes[1], GatheredMonomial::generator(1, 2));
        assert_eq!(classes[2], GatheredMonomial::generator(2, 1));
    }

    #[test]
    fn feshbach_twelve_points_is_the_known_table() {
        let g12 = feshbach_generators(12);
        let expect = vec![
            dp(&[1]),
            dp(&[3]),
            dp(&[5]),
            dp(&[0, 1]),
            dp(&[1, 0]),
            dp(&[1, 1]),
            dp(&[0, 3]),
            dp(&[1, 2]),
            dp(&[2, 1]),
            dp(&[3, 0]),
            dp(&[0, 0, 1]),
            dp(&[0, 1, 0]),
            dp(&[1, 0, 0]),
        ];
        assert_eq!(g12, expect);
        for p in &g12 {
            let c = p.class(12);
            assert_eq!(c.component(), 12);
            assert_eq!(c.degree(), p.degree());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(dp(&[1, 2]).to_string(), "d[1,2]");
        assert_eq!(BOMonomial::one().to_string(), "1");
        let m = BOMonomial::b(0).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(1));
        assert_eq!(m.to_string(), "b0*b1^2");
    }

    #[test]
    fn indicator_on_component_eight_degree_four() {
        let basis = homology::basis(8, 4);
        let hits: Vec<&NakaokaMonomial> =
            basis.iter().filter(|m| sw_indicator(m)).collect();
        let q1 = AdmissibleSeq::new(vec![1]);
        let q11 = AdmissibleSeq::new(vec![1, 1]);
        let quad = NakaokaMonomial::from_parts(vec![q1.clone(); 4], 0);
        let nested = NakaokaMonomial::from_parts(vec![q11, q1], 2);
        assert_eq!(hits.len(), 2);
        assert!(hits.contains(&&quad));
        assert!(hits.contains(&&nested));
    }

    #[test]
    fn small_sw_classes_are_the_expected_generators() {
        let mut d = Duality::new();
        assert_eq!(
            sw_class(0, 1, 2, &mut d),
            F2Sum::singleton(GatheredMonomial::generator(1, 1))
        );
        assert_eq!(
            sw_class(0, 2, 4, &mut d),
            F2Sum::singleton(GatheredMonomial::generator(2, 1))
        );
        assert_eq!(
            sw_class(1, 1, 4, &mut d),
            F2Sum::singleton(GatheredMonomial::generator(1, 2))
        );
        assert_eq!(
            sw_class(1, 0, 2, &mut d),
            F2Sum::singleton(GatheredMonomial::unit(2))
        );
        assert_eq!(
            sw_class(2, 0, 4, &mut d),
            F2Sum::singleton(GatheredMonomial::unit(4))
        );
    }

    #[test]
    fn top_sw_class_on_eight_points_is_not_a_single_generator() {
        let mut d = Duality::new();
        let w = sw_class(2, 1, 8, &mut d);
        assert!(w.len() > 1);
        let gamma14 = GatheredMonomial::from_blocks(
            vec![cohomology::Block::new(cohomology::Profile::single(1, 1), 4)],
            0,
        )
        .unwrap();
        assert!(w.contains(&gamma14));
        for m in homology::basis(8, 4) {
            let mut acc = false;
            for x in w.iter() {
                if d.pair(x, &m) {
                    acc = !acc;
                }
            }
            assert_eq!(acc, sw_indicator(&m));
        }
    }

    #[test]
    fn splittings_of_the_primitive_classes() {
        let splits = bi_partition_splits(0, 2);
        assert_eq!(splits.len(), 2);
        assert!(splits.contains(&(vec![(0, 2)], vec![])));
        assert!(splits.contains(&(vec![], vec![(0, 2)])));
    }

    #[test]
    fn sw_coproducts_match_the_hopf_ring_coproducts() {
        let mut d = Duality::new();
        let prim = sw_coproduct(0, 2, &mut d);
        let g = GatheredMonomial::generator(2, 1);
        let expect: F2Sum<(GatheredMonomial, GatheredMonomial)> = [
            (g.clone(), GatheredMonomial::one()),
            (GatheredMonomial::one(), g.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(prim, expect);

        let d11 = sw_coproduct(1, 1, &mut d);
        let direct = cohomology::coproduct(&GatheredMonomial::generator(1, 2));
        assert_eq!(d11, direct);

        let d10 = sw_coproduct(1, 0, &mut d);
        let unit = cohomology::coproduct(&GatheredMonomial::unit(2));
        assert_eq!(d10, unit);
    }

    #[test]
    fn refinement_detects_grouping() {
        let fine = vec![(0, 1), (0, 2), (1, 0)];
        let coarse = vec![(2, 1)];
        assert!(half_refines(&fine, &coarse));
        assert!(!half_refines(&coarse, &fine));
        assert!(half_refines(&vec![], &vec![]));
        assert!(!half_refines(&vec![(0, 1)], &vec![]));
    }

    #[test]
    fn bo_operations_frozen_values() {
        let b0 = BOMonomial::b(0);
        let q1: F2Sum<BOMonomial> = bo_apply_q(1, &b0);
        assert_eq!(
            q1,
            F2Sum::singleton(BOMonomial::b(0).mul(&BOMonomial::b(1)))
        );

        let q11 = bo_apply_qseq(&[1, 1], &b0);
        let t1 = BOMonomial::b(0).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(1));
        let t2 = BOMonomial::b(0).squared().mul(&BOMonomial::b(1)).mul(&BOMonomial::b(2));
        let t3 = BOMonomial::b(0).squared().mul(&BOMonomial::b(0)).mul(&BOMonomial::b(3));
        let expect: F2Sum<BOMonomial> = [t1, t2, t3].into_iter().collect();
        assert_eq!(q11, expect);

        assert_eq!(bo_apply_q(0, &b0), F2Sum::singleton(b0.squared()));
        assert!(bo_apply_q(1, &b0.squared()).is_zero());
        assert!(bo_apply_q(2, &BOMonomial::one()).is_zero());
        assert_eq!(bo_apply_q(0, &BOMonomial::one()), F2Sum::singleton(BOMonomial::one()));
    }

    #[test]
    fn bo_operations_preserve_bidegrees() {
        let b2 = BOMonomial::b(2);
        for r in 1..6u32 {
            for t in bo_apply_q(r, &b2).iter() {
                assert_eq!(t.component(), 2);
                assert_eq!(t.degree(), 4 + r as u64);
            }
        }
    }

    #[test]
    fn indicator_agrees_with_bo_image_on_small_bidegrees() {
        for &(k, l) in &[(0u32, 1u32), (0, 2), (1, 1), (2, 0), (1, 0)] {
            let comp = sw_component(k, l);
            let deg = sw_degree(k, l);
            for m in homology::basis(comp, deg) {
                let img = nakaoka_to_bo(&m);
                assert_eq!(
                    bo_sw_pairs(&img, comp, deg),
                    sw_indicator(&m),
                    "bidegree ({k},{l})"
                );
            }
        }
    }
}
