//! Invariant-theoretic models of the cohomology of symmetric groups.
//!
//! Two polynomial models are computed here. The first is the ring of
//! multisymmetric polynomials: polynomials over F_2 in variables `x(f)_j`
//! (`f` a family index, `j ≤ n` a subscript) invariant under the symmetric
//! group permuting the subscripts of all families simultaneously. The
//! quotient maps [`scale_quotient`] land gathered monomials in this ring:
//! the image of the mod-2 cohomology of `BS_{n 2^k}` restricted along
//! `(S_{2^k})^n ⋊ S_n` and pushed to Dickson invariants is generated by the
//! orbit products `σ(f)_n = Π_j x(f)_j`.
//!
//! The second model indexes variables by subsets: a [`SetMonomial`] is a
//! product of variables `x_A` over subsets `A` of the ground set with
//! `|A| ≥ 2`. Gathered monomials embed as orbit sums of set monomials
//! ([`to_invariant`]); the cup product is modelled by multiplying orbit
//! sums and discarding the *improper* monomials — those whose support
//! fails to be a layered laminar family ([`SetMonomial::is_proper`]).
//! This gives a third computation of the cup product, independent of both
//! the matching combinatorics and the homology pairing.

use crate::cohomology::GatheredMonomial;
use crate::f2::F2Sum;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Exponent matrix of one monomial: `rows = families`, `cols = subscripts`.
type ExpMatrix = Vec<Vec<u32>>;

/// A multisymmetric polynomial over F_2: a set of exponent matrices closed
/// under simultaneous column permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MultiSymPoly {
    families: u32,
    vars: u32,
    terms: BTreeSet<ExpMatrix>,
}

/// Visit every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..n).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            visit(idx);
            return;
        }
        for i in 0..k {
            rec(k - 1, idx, visit);
            if k % 2 == 0 {
                idx.swap(i, k - 1);
            } else {
                idx.swap(0, k - 1);
            }
        }
    }
    rec(n, &mut idx, &mut visit);
}

fn permute_columns(m: &ExpMatrix, perm: &[usize]) -> ExpMatrix {
    m.iter()
        .map(|row| perm.iter().map(|&j| row[j]).collect())
        .collect()
}

/// Columns sorted descending: the canonical representative of an orbit.
fn canon_matrix(m: &ExpMatrix) -> ExpMatrix {
    let vars = m.first().map_or(0, Vec::len);
    let mut cols: Vec<Vec<u32>> = (0..vars)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect();
    cols.sort_by(|a, b| b.cmp(a));
    (0..m.len())
        .map(|f| cols.iter().map(|c| c[f]).collect())
        .collect()
}

impl MultiSymPoly {
    /// The zero polynomial in the given variable shape.
    pub fn zero(families: u32, vars: u32) -> Self {
        MultiSymPoly {
            families,
            vars,
            terms: BTreeSet::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(families: u32, vars: u32) -> Self {
        let m: ExpMatrix = vec![vec![0; vars as usize]; families as usize];
        MultiSymPoly {
            families,
            vars,
            terms: [m].into_iter().collect(),
        }
    }

    /// The full orbit product `σ(family)_vars = Π_j x(family)_j`, a single
    /// symmetric monomial. `family` is 1-based.
    pub fn orbit_product(families: u32, vars: u32, family: u32) -> Self {
        assert!(family >= 1 && family <= families);
        let mut m: ExpMatrix = vec![vec![0; vars as usize]; families as usize];
        m[(family - 1) as usize] = vec![1; vars as usize];
        MultiSymPoly {
            families,
            vars,
            terms: [m].into_iter().collect(),
        }
    }

    /// The orbit sum of one exponent matrix: the sum of its distinct column
    /// permutations.
    pub fn orbit_sum(families: u32, vars: u32, matrix: ExpMatrix) -> Self {
        assert_eq!(matrix.len(), families as usize);
        assert!(matrix.iter().all(|r| r.len() == vars as usize));
        let mut terms = BTreeSet::new();
        for_each_permutation(vars as usize, |perm| {
            terms.insert(permute_columns(&matrix, perm));
        });
        MultiSymPoly {
            families,
            vars,
            terms,
        }
    }

    /// Number of families.
    pub fn families(&self) -> u32 {
        self.families
    }

    /// Number of subscripts.
    pub fn vars(&self) -> u32 {
        self.vars
    }

    /// The terms with coefficient 1.
    pub fn terms(&self) -> &BTreeSet<ExpMatrix> {
        &self.terms
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The canonical orbit representatives among the terms: with the terms
    /// closed under permutation, these present the polynomial as a sum of
    /// orbit sums.
    pub fn orbit_reps(&self) -> Vec<&ExpMatrix> {
        self.terms
            .iter()
            .filter(|m| canon_matrix(m) == **m)
            .collect()
    }

    /// Sum mod 2. Shapes must agree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.families, self.vars), (other.families, other.vars));
        let mut terms = self.terms.clone();
        for t in &other.terms {
            if !terms.remove(t) {
                terms.insert(t.clone());
            }
        }
        MultiSymPoly {
            families: self.families,
            vars: self.vars,
            terms,
        }
    }

    /// Product in the same variables: exponents add entrywise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.families, self.vars), (other.families, other.vars));
        let mut terms = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                let prod: ExpMatrix = a
                    .iter()
                    .zip(b.iter())
                    .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
                    .collect();
                if !terms.remove(&prod) {
                    terms.insert(prod);
                }
            }
        }
        MultiSymPoly {
            families: self.families,
            vars: self.vars,
            terms,
        }
    }

    /// Shuffle product: interleave the subscripts of the two polynomials in
    /// every order-preserving way. Models the transfer product.
    pub fn shuffle_product(&self, other: &Self) -> Self {
        assert_eq!(self.families, other.families);
        let (na, nb) = (self.vars as usize, other.vars as usize);
        let n = na + nb;
        let fam = self.families as usize;
        let mut terms = BTreeSet::new();
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() as usize != na {
                continue;
            }
            for a in &self.terms {
                for b in &other.terms {
                    let mut m: ExpMatrix = vec![Vec::with_capacity(n); fam];
                    let (mut ia, mut ib) = (0usize, 0usize);
                    for j in 0..n {
                        if mask >> j & 1 == 1 {
                            for (f, row) in m.iter_mut().enumerate() {
                                row.push(a[f][ia]);
                            }
                            ia += 1;
                        } else {
                            for (f, row) in m.iter_mut().enumerate() {
                                row.push(b[f][ib]);
                            }
                            ib += 1;
                        }
                    }
                    if !terms.remove(&m) {
                        terms.insert(m);
                    }
                }
            }
        }
        MultiSymPoly {
            families: self.families,
            vars: (na + nb) as u32,
            terms,
        }
    }

    /// The coproduct splitting the subscripts into a first group of `a` and
    /// a second of `b = vars - a`: each term factors uniquely, and the
    /// result is presented as a sum of tensor pairs of orbit sums.
    pub fn decouple_coproduct(&self, a: u32, b: u32) -> Vec<(MultiSymPoly, MultiSymPoly)> {
        assert_eq!(a + b, self.vars);
        let mut raw = 0usize;
        let mut reps: Vec<(ExpMatrix, ExpMatrix)> = Vec::new();
        for t in &self.terms {
            let left: ExpMatrix = t.iter().map(|r| r[..a as usize].to_vec()).collect();
            let right: ExpMatrix = t.iter().map(|r| r[a as usize..].to_vec()).collect();
            raw += 1;
            if canon_matrix(&left) == left && canon_matrix(&right) == right {
                reps.push((left, right));
            }
        }
        let out: Vec<(MultiSymPoly, MultiSymPoly)> = reps
            .into_iter()
            .map(|(l, r)| {
                (
                    MultiSymPoly::orbit_sum(self.families, a, l),
                    MultiSymPoly::orbit_sum(self.families, b, r),
                )
            })
            .collect();
        // Invariance: each product orbit is fully present, exactly once.
        debug_assert_eq!(
            raw,
            out.iter().map(|(l, r)| l.terms.len() * r.terms.len()).sum::<usize>()
        );
        out
    }
}

impl fmt::Display for MultiSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            for (fam, row) in t.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote {
                        write!(f, "*")?;
                    }
                    wrote = true;
                    write!(f, "x({})_{}", fam + 1, j + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

/// A product of subset-indexed variables `x_A^e`, `A ⊆ {1..m}`, `|A| ≥ 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SetMonomial {
    ground: u32,
    exps: BTreeMap<u32, u32>,
}

impl SetMonomial {
    /// The empty product on a ground set of `m` points.
    pub fn one(ground: u32) -> Self {
        assert!(ground <= 32, "ground sets are bitmask-indexed");
        SetMonomial {
            ground,
            exps: BTreeMap::new(),
        }
    }

    /// Multiply a factor `x_{mask}^{exp}` into the monomial.
    pub fn with_factor(mut self, mask: u32, exp: u32) -> Self {
        assert!(exp >= 1);
        assert!(mask.count_ones() >= 2, "set variables have at least 2 points");
        assert!(
            self.ground >= 32 || mask < (1u32 << self.ground),
            "set must be contained in the ground set"
        );
        *self.exps.entry(mask).or_insert(0) += exp;
        self
    }

    /// Size of the ground set.
    pub fn ground(&self) -> u32 {
        self.ground
    }

    /// The factors as `(set mask, exponent)`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&m, &e)| (m, e))
    }

    /// Degree: each factor `x_A^e` contributes `e (|A| - 1)`.
    pub fn degree(&self) -> u64 {
        self.exps
            .iter()
            .map(|(&m, &e)| e as u64 * (m.count_ones() as u64 - 1))
            .sum()
    }

    /// Product of two monomials on the same ground set.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ground, other.ground);
        let mut out = self.clone();
        for (&m, &e) in &other.exps {
            *out.exps.entry(m).or_insert(0) += e;
        }
        out
    }

    /// Apply a permutation of the ground set to every factor.
    fn permuted(&self, perm: &[usize]) -> Self {
        let mut exps = BTreeMap::new();
        for (&mask, &e) in &self.exps {
            let mut img = 0u32;
            for j in 0..self.ground {
                if mask >> j & 1 == 1 {
                    img |= 1 << perm[j as usize];
                }
            }
            exps.insert(img, e);
        }
        SetMonomial {
            ground: self.ground,
            exps,
        }
    }

    /// Whether the monomial is *proper*: its support corresponds to a
    /// gathered monomial. Requires every support set to have 2-power size
    /// at least 2, the support family to be laminar, and, within each
    /// maximal support set `U`, the support sets of each occurring size to
    /// partition `U` with one shared exponent per size.
    pub fn is_proper(&self) -> bool {
        let sets: Vec<u32> = self.exps.keys().copied().collect();
        for &a in &sets {
            let c = a.count_ones();
            if c < 2 || !c.is_power_of_two() {
                return false;
            }
        }
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                let inter = a & b;
                if inter != 0 && inter != a && inter != b {
                    return false;
                }
            }
        }
        for &u in &sets {
            let maximal = sets.iter().all(|&b| b == u || u & b != u);
            if !maximal {
                continue;
            }
            let inside: Vec<u32> = sets.iter().copied().filter(|&s| s & u == s).collect();
            let cards: BTreeSet<u32> = inside.iter().map(|s| s.count_ones()).collect();
            for card in cards {
                let layer: Vec<u32> = inside
                    .iter()
                    .copied()
                    .filter(|s| s.count_ones() == card)
                    .collect();
                // Laminar same-size sets are disjoint; partitioning is then
                // a union check.
                if layer.iter().fold(0u32, |acc, s| acc | s) != u {
                    return false;
                }
                let e0 = self.exps[&layer[0]];
                if layer.iter().any(|s| self.exps[s] != e0) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SetMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (&mask, &e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{{")?;
            let mut first = true;
            for j in 0..self.ground {
                if mask >> j & 1 == 1 {
                    if !first {
                        write!(f, ",")?;
                    }
                    first = false;
                    write!(f, "{}", j + 1)?;
                }
            }
            write!(f, "}}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The orbit sum of set monomials presenting a gathered monomial on its
/// component: each block copy occupies an interval of the ground set, each
/// profile pair `(l, d)` contributes the translates of size `2^l` with
/// exponent `d`, the unit contributes free points, and the whole is summed
/// over the symmetric group of the ground set.
pub fn to_invariant(x: &GatheredMonomial) -> F2Sum<SetMonomial> {
    let m = x.component();
    assert!(m <= 32, "ground sets are bitmask-indexed");
    let mut base = SetMonomial::one(m);
    let mut offset = 0u32;
    for b in x.blocks() {
        let l1 = b.profile().top_level();
        let span = 1u32 << l1;
        for _ in 0..b.width() {
            for &(l, d) in b.profile().pairs() {
                let size = 1u32 << l;
                for t in 0..(span >> l) {
                    let lo = offset + t * size;
                    let mask = (((1u64 << size) - 1) as u32) << lo;
                    base = base.with_factor(mask, d);
                }
            }
            offset += span;
        }
    }
    // Unit points offset..m stay free.
    let mut orbit: BTreeSet<SetMonomial> = BTreeSet::new();
    for_each_permutation(m as usize, |perm| {
        orbit.insert(base.permuted(perm));
    });
    let mut out = F2Sum::zero();
    for t in orbit {
        out.toggle(t);
    }
    out
}

/// Cup product in the set-monomial model: multiply term by term and discard
/// improper products. On images of [`to_invariant`] this computes the image
/// of the cup product.
pub fn invariant_cup(a: &F2Sum<SetMonomial>, b: &F2Sum<SetMonomial>) -> F2Sum<SetMonomial> {
    let mut out = F2Sum::zero();
    for x in a.iter() {
        for y in b.iter() {
            let prod = x.mul(y);
            if prod.is_proper() {
                out.toggle(prod);
            }
        }
    }
    out
}

/// The scale-`k` quotient: the image of a gathered monomial in the
/// multisymmetric polynomial ring on `component / 2^k` subscripts with `k`
/// families, restricting along `(S_{2^k})^n ⋊ S_n` and projecting each
/// `2^k`-block to its Dickson invariants.
///
/// `γ_{l,n}` survives exactly when `l ≤ k` and `2^{k-l}` divides `n`,
/// mapping to `σ(l)_{n / 2^{k-l}}`; units survive when `2^k` divides their
/// size; any dead factor kills the whole monomial.
pub fn scale_quotient(x: &GatheredMonomial, k: u32) -> MultiSymPoly {
    assert!(k >= 1);
    let vars = x.component() >> k;
    let dead = MultiSymPoly::zero(k, vars);
    if x.component() % (1 << k) != 0 {
        return dead;
    }
    let mut acc = MultiSymPoly::one(k, 0);
    for b in x.blocks() {
        let l1 = b.profile().top_level();
        if b.profile().pairs().iter().any(|&(l, _)| l > k) {
            return dead;
        }
        if l1 < k && b.width() % (1 << (k - l1)) != 0 {
            return dead;
        }
        let nv = b.component() >> k;
        let mut img = MultiSymPoly::one(k, nv);
        for &(l, d) in b.profile().pairs() {
            let sigma = MultiSymPoly::orbit_product(k, nv, l);
            for _ in 0..d {
                img = img.mul(&sigma);
            }
        }
        acc = acc.shuffle_product(&img);
    }
    if x.unit_size() > 0 {
        if x.unit_size() % (1 << k) != 0 {
            return dead;
        }
        acc = acc.shuffle_product(&MultiSymPoly::one(k, x.unit_size() >> k));
    }
    assert_eq!(acc.vars(), vars);
    acc
}
