//! The Hopf ring `⊕_n H^*(BS_n; F_2)` presented by gathered monomials.
//!
//! The Hopf ring is generated under its two products by classes
//! `γ_{l,n} ∈ H^{n(2^l - 1)}(BS_{n 2^l})` and the component units `1_m`. A
//! *gathered block* is a nonzero cup product of generators sharing one
//! 2-power component: it is recorded as a profile (which levels occur, with
//! which cup exponents) and a width. A *gathered monomial* is a transfer
//! product of blocks with pairwise distinct profiles and one unit factor;
//! these monomials form an additive basis.
//!
//! The transfer product concatenates block lists, merging equal profiles by
//! width addition when the widths are binary digit-disjoint and giving zero
//! otherwise ([`GatheredMonomial::from_blocks`]). The cup product of basis
//! monomials is computed by enumerating matchings between partitions of the
//! two monomials into equal-component parts, keeping only the maximal
//! matchings in the refinement order, and assembling each matching's
//! blockwise cup products back into basis monomials ([`cup`]).

use crate::f2::{binom_mod2, multinomial_mod2, F2Sum};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// The profile of a gathered block: which generator levels occur in the
/// block's cup product, with their cup exponents, as pairs `(level,
/// exponent)` in strictly decreasing level order. Levels and exponents are
/// at least 1; the list is nonempty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Profile {
    pairs: Vec<(u32, u32)>,
}

impl Profile {
    /// Wrap a pair list, asserting the invariants.
    pub fn new(pairs: Vec<(u32, u32)>) -> Self {
        assert!(!pairs.is_empty(), "a profile names at least one level");
        assert!(pairs.iter().all(|&(l, d)| l >= 1 && d >= 1));
        assert!(
            pairs.windows(2).all(|w| w[0].0 > w[1].0),
            "profile levels must strictly decrease"
        );
        Profile { pairs }
    }

    /// The profile of a single generator power `γ_{l,·}^d`.
    pub fn single(level: u32, exp: u32) -> Self {
        Profile::new(vec![(level, exp)])
    }

    /// The `(level, exponent)` pairs, levels strictly decreasing.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// The highest level occurring.
    pub fn top_level(&self) -> u32 {
        self.pairs[0].0
    }

    /// Component of a width-1 block with this profile: `2^{top level}`.
    pub fn unit_component(&self) -> u32 {
        1 << self.top_level()
    }

    /// Degree of a width-1 block: each pair `(l, d)` contributes the degree
    /// of `γ_{l, 2^{l_1 - l}}^d`, namely `d · 2^{l_1 - l} (2^l - 1)`.
    pub fn unit_degree(&self) -> u64 {
        let l1 = self.top_level();
        self.pairs
            .iter()
            .map(|&(l, d)| (d as u64) * (1u64 << (l1 - l)) * ((1u64 << l) - 1))
            .sum()
    }

    /// Union of two profiles, adding exponents at shared levels. This is
    /// the profile of the cup product of blocks with equal components.
    pub fn merge(&self, other: &Profile) -> Profile {
        let mut pairs = Vec::new();
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(la, da)), Some(&&(lb, db))) => match la.cmp(&lb) {
                    Ordering::Greater => {
                        pairs.push((la, da));
                        a.next();
                    }
                    Ordering::Less => {
                        pairs.push((lb, db));
                        b.next();
                    }
                    Ordering::Equal => {
                        pairs.push((la, da + db));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    pairs.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    pairs.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Profile { pairs }
    }
}

/// A gathered block: a profile together with a width.
///
/// The block of profile `[(l_1, d_1), ..., (l_r, d_r)]` and width `w` is the
/// cup product `Π_i γ_{l_i, w 2^{l_1 - l_i}}^{d_i}`, a class on component
/// `w 2^{l_1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    profile: Profile,
    width: u32,
}

impl Block {
    /// Build a block; width must be at least 1.
    pub fn new(profile: Profile, width: u32) -> Self {
        assert!(width >= 1, "blocks have positive width");
        Block { profile, width }
    }

    /// The profile.
    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// The width.
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Component: `width · 2^{top level}`.
    pub fn component(&self) -> u32 {
        self.width << self.profile.top_level()
    }

    /// Cohomological degree: `width ·` the profile's width-1 degree.
    pub fn degree(&self) -> u64 {
        self.width as u64 * self.profile.unit_degree()
    }

    /// The constituent generator powers `(level, subscript, exponent)`,
    /// levels strictly decreasing: pair `(l, d)` of the profile denotes
    /// `γ_{l, n}^d` with `n = width · 2^{l_1 - l}`.
    pub fn generator_powers(&self) -> Vec<(u32, u32, u32)> {
        let l1 = self.profile.top_level();
        self.profile
            .pairs
            .iter()
            .map(|&(l, d)| (l, self.width << (l1 - l), d))
            .collect()
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.component(), self.degree(), &self.profile, self.width).cmp(&(
            other.component(),
            other.degree(),
            &other.profile,
            other.width,
        ))
    }
}

/// A gathered monomial: a transfer product of blocks with pairwise distinct
/// profiles and a unit `1_u`, in canonical block order. The additive basis
/// of the Hopf ring consists of these monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GatheredMonomial {
    blocks: Vec<Block>,
    unit: u32,
}

impl GatheredMonomial {
    /// The unit `1_m` on component `m` (degree 0).
    pub fn unit(m: u32) -> Self {
        GatheredMonomial {
            blocks: Vec::new(),
            unit: m,
        }
    }

    /// The empty monomial `1_0`, the multiplicative unit for the transfer
    /// product.
    pub fn one() -> Self {
        GatheredMonomial::unit(0)
    }

    /// The Hopf ring generator `γ_{l,n}` for `l ≥ 1`; `γ_{l,0} = 1_0`.
    pub fn generator(level: u32, n: u32) -> Self {
        assert!(level >= 1, "generator levels start at 1");
        if n == 0 {
            return GatheredMonomial::one();
        }
        GatheredMonomial {
            blocks: vec![Block::new(Profile::single(level, 1), n)],
            unit: 0,
        }
    }

    /// Assemble blocks and a unit into a basis monomial, merging blocks
    /// with equal profiles by width addition. Returns `None` (the class is
    /// zero) when two merged widths share a binary digit, since the
    /// gathering coefficient is the mod-2 multinomial of the widths.
    pub fn from_blocks(blocks: Vec<Block>, unit: u32) -> Option<Self> {
        let mut blocks = blocks;
        blocks.sort_by(|a, b| a.profile.cmp(&b.profile).then(a.width.cmp(&b.width)));
        let mut merged: Vec<Block> = Vec::new();
        let mut run_widths: Vec<u64> = Vec::new();
        for b in blocks {
            match merged.last_mut() {
                Some(last) if last.profile == b.profile => {
                    run_widths.push(b.width as u64);
                    if !multinomial_mod2(&run_widths) {
                        return None;
                    }
                    last.width += b.width;
                }
                _ => {
                    run_widths = vec![b.width as u64];
                    merged.push(b);
                }
            }
        }
        merged.sort();
        Some(GatheredMonomial {
            blocks: merged,
            unit,
        })
    }

    /// The blocks, canonically ordered, profiles pairwise distinct.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The size of the unit factor `1_u`.
    pub fn unit_size(&self) -> u32 {
        self.unit
    }

    /// The symmetric group index the class lives on.
    pub fn component(&self) -> u32 {
        self.unit + self.blocks.iter().map(Block::component).sum::<u32>()
    }

    /// Total cohomological degree.
    pub fn degree(&self) -> u64 {
        self.blocks.iter().map(Block::degree).sum()
    }
}

impl fmt::Display for GatheredMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "u[{}]", self.unit);
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " o ")?;
            }
            for (j, (l, n, d)) in b.generator_powers().into_iter().enumerate() {
                if j > 0 {
                    write!(f, ".")?;
                }
                write!(f, "g[{l},{n}]")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        if self.unit > 0 {
            write!(f, " o u[{}]", self.unit)?;
        }
        Ok(())
    }
}

/// Transfer product of basis monomials: concatenate blocks and gather
/// units. At most one basis term. Units are level-0 generators, so
/// `1_a ⊙ 1_b = binom(a+b, a) 1_{a+b}` just as blocks of one profile
/// gather through a multinomial coefficient.
pub fn transfer(x: &GatheredMonomial, y: &GatheredMonomial) -> F2Sum<GatheredMonomial> {
    if !binom_mod2((x.unit + y.unit) as u64, x.unit as u64) {
        return F2Sum::zero();
    }
    let mut blocks = x.blocks.clone();
    blocks.extend(y.blocks.iter().cloned());
    match GatheredMonomial::from_blocks(blocks, x.unit + y.unit) {
        Some(m) => F2Sum::singleton(m),
        None => F2Sum::zero(),
    }
}

/// The coproduct of a basis monomial: every block splits along width,
/// `Δ(P, w) = Σ_{w' + w'' = w} (P, w') ⊗ (P, w'')` (width 0 meaning the
/// block is absent), the unit splits additively, and all coefficients are 1.
pub fn coproduct(x: &GatheredMonomial) -> F2Sum<(GatheredMonomial, GatheredMonomial)> {
    let mut out = F2Sum::zero();
    let nblocks = x.blocks.len();
    let mut split = vec![0u32; nblocks];
    loop {
        for u_left in 0..=x.unit {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (b, &w_left) in x.blocks.iter().zip(&split) {
                if w_left > 0 {
                    left.push(Block::new(b.profile.clone(), w_left));
                }
                if b.width - w_left > 0 {
                    right.push(Block::new(b.profile.clone(), b.width - w_left));
                }
            }
            let l = GatheredMonomial::from_blocks(left, u_left).expect("profiles stay distinct");
            let r = GatheredMonomial::from_blocks(right, x.unit - u_left)
                .expect("profiles stay distinct");
            out.toggle((l, r));
        }
        let mut pos = 0;
        loop {
            if pos == nblocks {
                break;
            }
            if split[pos] < x.blocks[pos].width {
                split[pos] += 1;
                break;
            }
            split[pos] = 0;
            pos += 1;
        }
        if pos == nblocks {
            break;
        }
    }
    out
}

/// One part of a partition of a gathered monomial: either a width portion
/// of the block at a given index, or a piece of the unit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Part {
    Blk(usize, u32),
    Unit(u32),
}

impl Part {
    fn component(&self, owner: &GatheredMonomial) -> u32 {
        match *self {
            Part::Blk(i, v) => v << owner.blocks[i].profile.top_level(),
            Part::Unit(c) => c,
        }
    }
}

/// A matching: a multiset of part pairs, stored expanded and sorted.
type Matching = Vec<(Part, Part)>;

/// Budgets: per-block remaining width plus remaining unit, for one side.
#[derive(Clone)]
struct Budget {
    blocks: Vec<u32>,
    unit: u32,
}

impl Budget {
    fn of(m: &GatheredMonomial) -> Self {
        Budget {
            blocks: m.blocks.iter().map(|b| b.width).collect(),
            unit: m.unit,
        }
    }
    fn can_take(&self, p: Part, times: u32) -> bool {
        match p {
            Part::Blk(i, v) => self.blocks[i] >= v * times,
            Part::Unit(c) => self.unit >= c * times,
        }
    }
    fn take(&mut self, p: Part, times: u32) {
        match p {
            Part::Blk(i, v) => self.blocks[i] -= v * times,
            Part::Unit(c) => self.unit -= c * times,
        }
    }
    fn exhausted(&self) -> bool {
        self.unit == 0 && self.blocks.iter().all(|&w| w == 0)
    }
}

fn part_types(m: &GatheredMonomial) -> Vec<Part> {
    let mut out = Vec::new();
    for (i, b) in m.blocks.iter().enumerate() {
        for v in 1..=b.width {
            out.push(Part::Blk(i, v));
        }
    }
    for c in 1..=m.unit {
        out.push(Part::Unit(c));
    }
    out
}

/// All matchings between partitions of `x` and `y`: multisets of pairs of
/// equal-component parts whose side marginals recover `x` and `y` exactly.
fn matchings(x: &GatheredMonomial, y: &GatheredMonomial) -> Vec<Matching> {
    let mut pair_types: Vec<(Part, Part)> = Vec::new();
    for &px in &part_types(x) {
        for &py in &part_types(y) {
            if px.component(x) == py.component(y) {
                pair_types.push((px, py));
            }
        }
    }
    let mut found = Vec::new();
    let mut current: Matching = Vec::new();
    fn rec(
        types: &[(Part, Part)],
        idx: usize,
        bx: Budget,
        by: Budget,
        current: &mut Matching,
        found: &mut Vec<Matching>,
    ) {
        if bx.exhausted() && by.exhausted() {
            found.push(current.clone());
            return;
        }
        if idx == types.len() {
            return;
        }
        let (px, py) = types[idx];
        let mut times = 0;
        loop {
            let (mut nbx, mut nby) = (bx.clone(), by.clone());
            if !nbx.can_take(px, times) || !nby.can_take(py, times) {
                break;
            }
            nbx.take(px, times);
            nby.take(py, times);
            for _ in 0..times {
                current.push((px, py));
            }
            rec(types, idx + 1, nbx, nby, current, found);
            for _ in 0..times {
                current.pop();
            }
            times += 1;
        }
    }
    rec(
        &pair_types,
        0,
        Budget::of(x),
        Budget::of(y),
        &mut current,
        &mut found,
    );
    for m in &mut found {
        m.sort();
    }
    found
}

/// Whether the same-kind constraint holds: a sub-part may only subdivide a
/// part of the same block (or the unit).
fn same_kind(sub: Part, sup: Part) -> bool {
    matches!(
        (sub, sup),
        (Part::Blk(i, _), Part::Blk(j, _)) if i == j
    ) || matches!((sub, sup), (Part::Unit(_), Part::Unit(_)))
}

fn part_size(p: Part) -> u32 {
    match p {
        Part::Blk(_, v) => v,
        Part::Unit(c) => c,
    }
}

/// Whether `mu` refines `nu`: `mu`'s pairs can be grouped, one group per
/// `nu` pair, so that within each group the x-sides subdivide the `nu`
/// pair's x-part and the y-sides simultaneously subdivide its y-part.
fn refines(mu: &Matching, nu: &Matching) -> bool {
    if mu.len() < nu.len() {
        return false;
    }
    // Remaining (x, y) capacity of each nu pair.
    let mut cap: Vec<(u32, u32)> = nu
        .iter()
        .map(|&(px, py)| (part_size(px), part_size(py)))
        .collect();
    fn assign(mu: &Matching, at: usize, nu: &Matching, cap: &mut Vec<(u32, u32)>) -> bool {
        if at == mu.len() {
            return cap.iter().all(|&(a, b)| a == 0 && b == 0);
        }
        let (px, py) = mu[at];
        let (sx, sy) = (part_size(px), part_size(py));
        for t in 0..nu.len() {
            if !same_kind(px, nu[t].0) || !same_kind(py, nu[t].1) {
                continue;
            }
            if cap[t].0 < sx || cap[t].1 < sy {
                continue;
            }
            cap[t].0 -= sx;
            cap[t].1 -= sy;
            if assign(mu, at + 1, nu, cap) {
                cap[t].0 += sx;
                cap[t].1 += sy;
                return true;
            }
            cap[t].0 += sx;
            cap[t].1 += sy;
        }
        false
    }
    assign(mu, 0, nu, &mut cap)
}

/// The basis expansion of one matching's cup product: blockwise cup
/// products assembled back under the transfer product.
fn matching_value(
    mu: &Matching,
    x: &GatheredMonomial,
    y: &GatheredMonomial,
) -> Option<GatheredMonomial> {
    let mut blocks = Vec::new();
    let mut unit = 0;
    for &(px, py) in mu {
        match (px, py) {
            (Part::Blk(i, v), Part::Blk(j, w)) => {
                let (pi, pj) = (&x.blocks[i].profile, &y.blocks[j].profile);
                let merged = pi.merge(pj);
                let width = if pi.top_level() >= pj.top_level() { v } else { w };
                blocks.push(Block::new(merged, width));
            }
            (Part::Blk(i, v), Part::Unit(_)) => {
                blocks.push(Block::new(x.blocks[i].profile.clone(), v));
            }
            (Part::Unit(_), Part::Blk(j, w)) => {
                blocks.push(Block::new(y.blocks[j].profile.clone(), w));
            }
            (Part::Unit(c), Part::Unit(_)) => unit += c,
        }
    }
    GatheredMonomial::from_blocks(blocks, unit)
}

/// Cup product of basis monomials.
///
/// Zero for classes on different components. Otherwise the sum over maximal
/// matchings of their assembled blockwise values; non-maximal matchings are
/// exactly the terms the gathering relation already accounts for.
pub fn cup(x: &GatheredMonomial, y: &GatheredMonomial) -> F2Sum<GatheredMonomial> {
    if x.component() != y.component() {
        return F2Sum::zero();
    }
    let all = matchings(x, y);
    let mut out = F2Sum::zero();
    for (i, mu) in all.iter().enumerate() {
        let maximal = all
            .iter()
            .enumerate()
            .all(|(j, nu)| j == i || nu == mu || !refines(mu, nu));
        if !maximal {
            continue;
        }
        if let Some(v) = matching_value(mu, x, y) {
            out.toggle(v);
        }
    }
    out
}

/// Cup product of sums, bilinearly.
pub fn cup_sum(
    x: &F2Sum<GatheredMonomial>,
    y: &F2Sum<GatheredMonomial>,
) -> F2Sum<GatheredMonomial> {
    let mut out = F2Sum::zero();
    for a in x.iter() {
        for b in y.iter() {
            out.add_assign(cup(a, b));
        }
    }
    out
}

/// Transfer product of sums, bilinearly.
pub fn transfer_sum(
    x: &F2Sum<GatheredMonomial>,
    y: &F2Sum<GatheredMonomial>,
) -> F2Sum<GatheredMonomial> {
    let mut out = F2Sum::zero();
    for a in x.iter() {
        for b in y.iter() {
            out.add_assign(transfer(a, b));
        }
    }
    out
}

/// All profiles with width-1 component at most `max_component` and width-1
/// degree at most `max_degree`, canonically ordered.
fn profiles(max_component: u32, max_degree: u64) -> Vec<Profile> {
    let mut out = Vec::new();
    let mut top = 1;
    while (1u64 << top) <= max_component as u64 {
        // Descend from the top level, choosing exponents; lower levels are
        // optional, the top level is mandatory.
        fn rec(
            pairs: &mut Vec<(u32, u32)>,
            level: u32,
            top: u32,
            deg_so_far: u64,
            max_degree: u64,
            out: &mut Vec<Profile>,
        ) {
            if level == 0 {
                if !pairs.is_empty() {
                    out.push(Profile::new(pairs.clone()));
                }
                return;
            }
            let unit = (1u64 << (top - level)) * ((1u64 << level) - 1);
            let lo = if level == top { 1 } else { 0 };
            let mut d = lo;
            while deg_so_far + d as u64 * unit <= max_degree {
                if d > 0 {
                    pairs.push((level, d));
                }
                rec(pairs, level - 1, top, deg_so_far + d as u64 * unit, max_degree, out);
                if d > 0 {
                    pairs.pop();
                }
                d += 1;
            }
        }
        rec(&mut Vec::new(), top, top, 0, max_degree, &mut out);
        top += 1;
    }
    out.sort();
    out
}

/// The gathered monomial basis of `H^d(BS_n)`, canonically ordered.
pub fn basis(component: u32, degree: u64) -> Vec<GatheredMonomial> {
    let pool = profiles(component, degree);
    let mut out = Vec::new();
    fn rec(
        pool: &[Profile],
        idx: usize,
        rem_comp: u32,
        rem_deg: u64,
        chosen: &mut Vec<Block>,
        out: &mut Vec<GatheredMonomial>,
    ) {
        if idx == pool.len() {
            if rem_deg == 0 {
                out.push(
                    GatheredMonomial::from_blocks(chosen.clone(), rem_comp)
                        .expect("distinct profiles"),
                );
            }
            return;
        }
        rec(pool, idx + 1, rem_comp, rem_deg, chosen, out);
        let p = &pool[idx];
        let (uc, ud) = (p.unit_component(), p.unit_degree());
        let mut w = 1u32;
        while w * uc <= rem_comp && w as u64 * ud <= rem_deg {
            chosen.push(Block::new(p.clone(), w));
            rec(pool, idx + 1, rem_comp - w * uc, rem_deg - w as u64 * ud, chosen, out);
            chosen.pop();
            w += 1;
        }
    }
    rec(&pool, 0, component, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn block(pairs: &[(u32, u32)], width: u32) -> Block {
        Block::new(Profile::new(pairs.to_vec()), width)
    }

    fn monomial(blocks: &[Block], unit: u32) -> GatheredMonomial {
        GatheredMonomial::from_blocks(blocks.to_vec(), unit).expect("nonzero")
    }

    #[test]
    fn generator_gradings() {
        let g = GatheredMonomial::generator(2, 3);
        assert_eq!(g.component(), 12);
        assert_eq!(g.degree(), 9);
        assert_eq!(GatheredMonomial::generator(1, 0), GatheredMonomial::one());
        assert_eq!(GatheredMonomial::unit(5).component(), 5);
        assert_eq!(GatheredMonomial::unit(5).degree(), 0);
    }

    #[test]
    fn transfer_merges_equal_profiles_by_width() {
        let g11 = GatheredMonomial::generator(1, 1);
        let g12 = GatheredMonomial::generator(1, 2);
        // Widths 1 and 2 are digit-disjoint: γ_{1,1} ⊙ γ_{1,2} = γ_{1,3}.
        assert_eq!(
            transfer(&g11, &g12),
            F2Sum::singleton(GatheredMonomial::generator(1, 3))
        );
        // Widths 1 and 1 share a digit: γ_{1,1} ⊙ γ_{1,1} = 0.
        assert!(transfer(&g11, &g11).is_zero());
        // C(2+2, 2) is even as well.
        assert!(transfer(&g12, &g12).is_zero());
    }

    #[test]
    fn gathering_identity_across_two_levels() {
        // (γ_{2,2}^3 γ_{1,4}) ⊙ (γ_{2,1}^3 γ_{1,2}) = γ_{2,3}^3 γ_{1,6}.
        let x = monomial(&[block(&[(2, 3), (1, 1)], 2)], 0);
        let y = monomial(&[block(&[(2, 3), (1, 1)], 1)], 0);
        let expected = monomial(&[block(&[(2, 3), (1, 1)], 3)], 0);
        assert_eq!(transfer(&x, &y), F2Sum::singleton(expected.clone()));
        assert_eq!(expected.to_string(), "g[2,3]^3.g[1,6]");
    }

    #[test]
    fn coproduct_of_gamma12() {
        let g12 = GatheredMonomial::generator(1, 2);
        let g11 = GatheredMonomial::generator(1, 1);
        let one = GatheredMonomial::one();
        let expected: F2Sum<_> = [
            (g12.clone(), one.clone()),
            (g11.clone(), g11.clone()),
            (one.clone(), g12.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(coproduct(&g12), expected);
    }

    #[test]
    fn coproduct_splits_unit_additively() {
        let u3 = GatheredMonomial::unit(3);
        assert_eq!(coproduct(&u3).len(), 4);
        assert!(coproduct(&u3)
            .contains(&(GatheredMonomial::unit(1), GatheredMonomial::unit(2))));
    }

    #[test]
    fn cup_on_second_symmetric_group() {
        let g11 = GatheredMonomial::generator(1, 1);
        let sq = monomial(&[block(&[(1, 2)], 1)], 0);
        assert_eq!(cup(&g11, &g11), F2Sum::singleton(sq));
    }

    #[test]
    fn cup_relations_on_fourth_symmetric_group() {
        let g12 = GatheredMonomial::generator(1, 2);
        let g21 = GatheredMonomial::generator(2, 1);
        let g11_u2 = monomial(&[block(&[(1, 1)], 1)], 2);

        // (γ_{1,1} ⊙ 1_2)^2 = γ_{1,1}^2 ⊙ 1_2.
        assert_eq!(
            cup(&g11_u2, &g11_u2),
            F2Sum::singleton(monomial(&[block(&[(1, 2)], 1)], 2))
        );
        // (γ_{1,1} ⊙ 1_2) · γ_{1,2} = γ_{1,1}^2 ⊙ γ_{1,1}.
        assert_eq!(
            cup(&g11_u2, &g12),
            F2Sum::singleton(monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 0))
        );
        // γ_{1,2} · γ_{2,1} = γ_{2,1} γ_{1,2}, one two-level block.
        assert_eq!(
            cup(&g12, &g21),
            F2Sum::singleton(monomial(&[block(&[(2, 1), (1, 1)], 1)], 0))
        );
        // (γ_{1,1} ⊙ 1_2) · γ_{2,1} = 0: the lone relation among products
        // of the three component-4 generators.
        assert!(cup(&g11_u2, &g21).is_zero());
    }

    #[test]
    fn cup_relation_on_sixth_symmetric_group() {
        let x = monomial(&[block(&[(2, 1)], 1)], 2);
        let y = monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 2);
        assert!(cup(&x, &y).is_zero());
    }

    #[test]
    fn cup_squares_respect_maximality_filter() {
        // (γ_{1,2} ⊙ 1_2)^2 = γ_{1,2}^2 ⊙ 1_2: the finer matchings either
        // refine the top one or assemble to zero by gathering.
        let x = monomial(&[block(&[(1, 1)], 2)], 2);
        assert_eq!(
            cup(&x, &x),
            F2Sum::singleton(monomial(&[block(&[(1, 2)], 2)], 2))
        );
    }

    #[test]
    fn unit_is_cup_identity() {
        let y = monomial(&[block(&[(2, 1), (1, 2)], 1)], 2);
        let unit = GatheredMonomial::unit(y.component());
        assert_eq!(cup(&unit, &y), F2Sum::singleton(y.clone()));
        assert_eq!(cup(&y, &unit), F2Sum::singleton(y.clone()));
    }

    #[test]
    fn cup_across_components_is_zero() {
        let g11 = GatheredMonomial::generator(1, 1);
        let g12 = GatheredMonomial::generator(1, 2);
        assert!(cup(&g11, &g12).is_zero());
    }

    #[test]
    fn basis_of_fourth_symmetric_group_degree_three() {
        let b = basis(4, 3);
        assert_eq!(b.len(), 3);
        assert!(b.contains(&monomial(&[block(&[(1, 3)], 1)], 2)));
        assert!(b.contains(&monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 0)));
        assert!(b.contains(&GatheredMonomial::generator(2, 1)));
    }

    #[test]
    fn basis_trivial_components() {
        assert_eq!(basis(0, 0), alloc::vec![GatheredMonomial::one()]);
        assert_eq!(basis(1, 0), alloc::vec![GatheredMonomial::unit(1)]);
        assert!(basis(1, 1).is_empty());
        assert_eq!(basis(2, 5).len(), 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GatheredMonomial::one().to_string(), "u[0]");
        assert_eq!(GatheredMonomial::unit(3).to_string(), "u[3]");
        assert_eq!(GatheredMonomial::generator(1, 2).to_string(), "g[1,2]");
        let m = monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 0);
        assert_eq!(m.to_string(), "g[1,1] o g[1,1]^2");
        let with_unit = monomial(&[block(&[(1, 1)], 1)], 2);
        assert_eq!(with_unit.to_string(), "g[1,1] o u[2]");
    }
}
