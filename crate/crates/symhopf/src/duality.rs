//! The pairing between cohomology in gathered-monomial form and homology in
//! the polynomial basis, and the linear-algebra oracle built on it.
//!
//! The generator `γ_{l,n}` is by definition dual to the basis monomial
//! `(q_{1,...,1}(ι))^n` (`l` ones) with respect to the monomial basis of its
//! bidegree, and the unit `1_u` is dual to `ι^u`. Pairings of arbitrary
//! gathered monomials follow from the two adjunctions
//!
//! ```text
//! ⟨a ⊙ b, m⟩ = Σ ⟨a, m'⟩ ⟨b, m''⟩   over the transfer coproduct of m,
//! ⟨a · b, m⟩ = Σ ⟨a, m'⟩ ⟨b, m''⟩   over the cup coproduct of m,
//! ```
//!
//! peeling off one block with the first and one generator within a block
//! with the second. [`Duality`] memoizes the coproduct expansions and the
//! partial pairings; [`Duality::cup_oracle`] inverts the resulting pairing
//! matrix to compute cup products by pure linear algebra, with no use of
//! the matching combinatorics of [`crate::cohomology::cup`], which makes
//! the two implementations independent checks of each other.

use crate::cohomology::{self, Block, GatheredMonomial};
use crate::f2::{BitMatrix, F2Sum};
use crate::homology::{self, NakaokaMonomial};
use crate::kudo_araki::AdmissibleSeq;
use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

/// The full pairing matrix of one bidegree: cohomology basis rows against
/// homology basis columns.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    rows: Vec<GatheredMonomial>,
    cols: Vec<NakaokaMonomial>,
    mat: BitMatrix,
    invertible: bool,
}

impl PairingMatrix {
    /// The cohomology basis indexing the rows.
    pub fn rows(&self) -> &[GatheredMonomial] {
        &self.rows
    }

    /// The homology basis indexing the columns.
    pub fn cols(&self) -> &[NakaokaMonomial] {
        &self.cols
    }

    /// The pairing of `rows()[r]` with `cols()[c]`.
    pub fn entry(&self, r: usize, c: usize) -> bool {
        self.mat.get(r, c)
    }

    /// Whether the matrix is square and invertible over GF(2). The two
    /// bases biject and the pairing is perfect, so this always holds; it is
    /// re-verified rather than assumed.
    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    /// Solve for the cohomology class with prescribed values against every
    /// basis monomial: returns `z` with `Σ_r z_r ⟨row_r, col_c⟩ =
    /// values[c]`. `None` if the system is inconsistent.
    fn solve_functional(&self, values: &[bool]) -> Option<Vec<bool>> {
        self.mat.transposed().solve(values)
    }
}

/// Pairing engine with memoized coproducts and partial pairings.
///
/// All methods are exact; the caches only persist intermediate results, so
/// a fresh `Duality` gives identical answers.
pub struct Duality {
    delta_cup: BTreeMap<NakaokaMonomial, Rc<Vec<(NakaokaMonomial, NakaokaMonomial)>>>,
    delta_transfer: BTreeMap<NakaokaMonomial, Rc<Vec<(NakaokaMonomial, NakaokaMonomial)>>>,
    peel_memo: BTreeMap<(Vec<Block>, u32, NakaokaMonomial), bool>,
    block_memo: BTreeMap<(Vec<(u32, u32)>, NakaokaMonomial), bool>,
    matrices: BTreeMap<(u32, u64), PairingMatrix>,
}

impl Default for Duality {
    fn default() -> Self {
        Duality::new()
    }
}

impl Duality {
    /// A fresh engine with empty caches.
    pub fn new() -> Self {
        Duality {
            delta_cup: BTreeMap::new(),
            delta_transfer: BTreeMap::new(),
            peel_memo: BTreeMap::new(),
            block_memo: BTreeMap::new(),
            matrices: BTreeMap::new(),
        }
    }

    fn delta_cup_of(&mut self, m: &NakaokaMonomial) -> Rc<Vec<(NakaokaMonomial, NakaokaMonomial)>> {
        if let Some(hit) = self.delta_cup.get(m) {
            return hit.clone();
        }
        let terms: Vec<_> = homology::cup_coproduct(m).into_iter().collect();
        let rc = Rc::new(terms);
        self.delta_cup.insert(m.clone(), rc.clone());
        rc
    }

    fn delta_transfer_of(
        &mut self,
        m: &NakaokaMonomial,
    ) -> Rc<Vec<(NakaokaMonomial, NakaokaMonomial)>> {
        if let Some(hit) = self.delta_transfer.get(m) {
            return hit.clone();
        }
        let terms: Vec<_> = homology::transfer_coproduct(m).into_iter().collect();
        let rc = Rc::new(terms);
        self.delta_transfer.insert(m.clone(), rc.clone());
        rc
    }

    /// The pairing `⟨x, m⟩`.
    pub fn pair(&mut self, x: &GatheredMonomial, m: &NakaokaMonomial) -> bool {
        if x.component() != m.component() || x.degree() != m.degree() {
            return false;
        }
        self.peel(x.blocks(), x.unit_size(), m)
    }

    /// `⟨blocks[0] ⊙ ... ⊙ blocks[last] ⊙ 1_unit, m⟩`, splitting off the
    /// first block along the transfer coproduct of `m`.
    fn peel(&mut self, blocks: &[Block], unit: u32, m: &NakaokaMonomial) -> bool {
        let Some((head, rest)) = blocks.split_first() else {
            // ⟨1_u, m⟩: m must be ι^u, and components already agree.
            return m.factors().is_empty();
        };
        let key = (blocks.to_vec(), unit, m.clone());
        if let Some(&hit) = self.peel_memo.get(&key) {
            return hit;
        }
        let (comp, deg) = (head.component(), head.degree());
        let splits = self.delta_transfer_of(m);
        let mut acc = false;
        for (m1, m2) in splits.iter() {
            if m1.component() != comp || m1.degree() != deg {
                continue;
            }
            if self.block_pair(head, m1) && self.peel(rest, unit, m2) {
                acc = !acc;
            }
        }
        self.peel_memo.insert(key, acc);
        acc
    }

    /// `⟨block, m⟩` for a single gathered block, peeling one generator at a
    /// time along the cup coproduct of `m`.
    fn block_pair(&mut self, block: &Block, m: &NakaokaMonomial) -> bool {
        let mut gens: Vec<(u32, u32)> = Vec::new();
        for (l, n, d) in block.generator_powers() {
            for _ in 0..d {
                gens.push((l, n));
            }
        }
        self.gens_pair(&gens, m)
    }

    /// `⟨γ_{gens[0]} · γ_{gens[1]} · ... · 1_c, m⟩` on one component.
    fn gens_pair(&mut self, gens: &[(u32, u32)], m: &NakaokaMonomial) -> bool {
        let Some((&(l, n), rest)) = gens.split_first() else {
            return m.factors().is_empty();
        };
        let key = (gens.to_vec(), m.clone());
        if let Some(&hit) = self.block_memo.get(&key) {
            return hit;
        }
        let target = gamma_dual_basis_monomial(l, n);
        let splits = self.delta_cup_of(m);
        let mut acc = false;
        for (m1, m2) in splits.iter() {
            if *m1 == target && self.gens_pair(rest, m2) {
                acc = !acc;
            }
        }
        self.block_memo.insert(key, acc);
        acc
    }

    /// The pairing matrix of one bidegree, computed once and cached.
    pub fn matrix(&mut self, component: u32, degree: u64) -> &PairingMatrix {
        if !self.matrices.contains_key(&(component, degree)) {
            let rows = cohomology::basis(component, degree);
            let cols = homology::basis(component, degree);
            let mut mat = BitMatrix::zeros(rows.len(), cols.len());
            for (r, x) in rows.iter().enumerate() {
                for (c, m) in cols.iter().enumerate() {
                    if self.pair(x, m) {
                        mat.set(r, c, true);
                    }
                }
            }
            let invertible = mat.is_invertible();
            self.matrices.insert(
                (component, degree),
                PairingMatrix {
                    rows,
                    cols,
                    mat,
                    invertible,
                },
            );
        }
        &self.matrices[&(component, degree)]
    }

    /// The unique cohomology class of the bidegree with the prescribed
    /// pairing value against each homology basis monomial, in basis order.
    ///
    /// Panics if the pairing matrix of the bidegree is not invertible: the
    /// duality between the two bases is an input assumption this engine
    /// re-checks rather than repairs.
    pub fn functional_to_basis(
        &mut self,
        component: u32,
        degree: u64,
        values: &[bool],
    ) -> F2Sum<GatheredMonomial> {
        let pm = self.matrix(component, degree);
        assert!(
            pm.is_invertible(),
            "pairing matrix on component {component}, degree {degree} is not invertible"
        );
        assert_eq!(values.len(), pm.cols().len());
        let z = pm
            .solve_functional(values)
            .expect("invertible system is consistent");
        pm.rows()
            .iter()
            .zip(&z)
            .filter(|&(_, &zi)| zi)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Cup product computed through the pairing alone: evaluate the
    /// functional `m ↦ Σ ⟨x, m'⟩⟨y, m''⟩` over the cup coproduct of each
    /// basis monomial, then invert the pairing matrix.
    pub fn cup_oracle(
        &mut self,
        x: &GatheredMonomial,
        y: &GatheredMonomial,
    ) -> F2Sum<GatheredMonomial> {
        if x.component() != y.component() {
            return F2Sum::zero();
        }
        let component = x.component();
        let degree = x.degree() + y.degree();
        let cols = homology::basis(component, degree);
        let mut values = vec![false; cols.len()];
        for (c, m) in cols.iter().enumerate() {
            let splits = self.delta_cup_of(m);
            let mut acc = false;
            for (m1, m2) in splits.iter() {
                if self.pair(x, m1) && self.pair(y, m2) {
                    acc = !acc;
                }
            }
            values[c] = acc;
        }
        self.functional_to_basis(component, degree, &values)
    }
}

/// The homology basis monomial `(q_{1,...,1}(ι))^{n}` (`l` ones) that
/// `γ_{l,n}` is dual to.
pub fn gamma_dual_basis_monomial(l: u32, n: u32) -> NakaokaMonomial {
    assert!(l >= 1);
    let ones = AdmissibleSeq::new(vec![1; l as usize]);
    NakaokaMonomial::from_parts(vec![ones; n as usize], 0)
}

/// One-shot pairing with a transient engine.
pub fn pair(x: &GatheredMonomial, m: &NakaokaMonomial) -> bool {
    Duality::new().pair(x, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Profile;

    fn adm(entries: &[u32]) -> AdmissibleSeq {
        AdmissibleSeq::new(entries.to_vec())
    }

    fn hom(factors: &[&[u32]], iota: u32) -> NakaokaMonomial {
        NakaokaMonomial::from_parts(factors.iter().map(|f| adm(f)).collect(), iota)
    }

    #[test]
    fn generator_dualities() {
        let mut du = Duality::new();
        assert!(du.pair(&GatheredMonomial::generator(1, 1), &hom(&[&[1]], 0)));
        assert!(!du.pair(&GatheredMonomial::generator(1, 1), &hom(&[], 2)));
        assert!(du.pair(&GatheredMonomial::generator(1, 2), &hom(&[&[1], &[1]], 0)));
        assert!(du.pair(&GatheredMonomial::generator(2, 1), &hom(&[&[1, 1]], 0)));
        assert!(du.pair(&GatheredMonomial::unit(4), &hom(&[], 4)));
        assert!(!du.pair(&GatheredMonomial::unit(4), &hom(&[], 3)));
    }

    #[test]
    fn bidegree_4_2_matrix_is_a_transposition() {
        let mut du = Duality::new();
        let pm = du.matrix(4, 2);
        // Rows: γ_{1,1}^2 ⊙ 1_2 then γ_{1,2} (blocks sort by component).
        // Cols: q_1^2 then q_2 ι^2.
        assert_eq!(pm.rows().len(), 2);
        assert_eq!(pm.cols().len(), 2);
        assert_eq!(pm.rows()[1], GatheredMonomial::generator(1, 2));
        assert_eq!(pm.cols()[0], hom(&[&[1], &[1]], 0));
        assert_eq!(pm.cols()[1], hom(&[&[2]], 2));
        assert!(!pm.entry(0, 0) && pm.entry(0, 1));
        assert!(pm.entry(1, 0) && !pm.entry(1, 1));
        assert!(pm.is_invertible());
    }

    #[test]
    fn cube_of_gamma12_pairings() {
        // γ_{1,2}^3 pairs with exactly q_3^2 and q_{2,2} in bidegree (4,6).
        let cube = GatheredMonomial::from_blocks(
            alloc::vec![crate::cohomology::Block::new(Profile::single(1, 3), 2)],
            0,
        )
        .unwrap();
        let mut du = Duality::new();
        assert!(du.pair(&cube, &hom(&[&[3], &[3]], 0)));
        assert!(du.pair(&cube, &hom(&[&[2, 2]], 0)));
        assert!(!du.pair(&cube, &hom(&[&[2], &[4]], 0)));
        assert!(!du.pair(&cube, &hom(&[&[1], &[5]], 0)));
        assert!(!du.pair(&cube, &hom(&[&[6]], 2)));
    }

    #[test]
    fn oracle_matches_direct_cup_on_a_generator_square() {
        let g = GatheredMonomial::generator(1, 1);
        let mut du = Duality::new();
        let via_oracle = du.cup_oracle(&g, &g);
        let direct = cohomology::cup(&g, &g);
        assert_eq!(via_oracle, direct);
        assert_eq!(via_oracle.len(), 1);
    }

    #[test]
    fn free_pair_matches_engine() {
        let g = GatheredMonomial::generator(1, 2);
        let m = hom(&[&[1], &[1]], 0);
        assert_eq!(pair(&g, &m), Duality::new().pair(&g, &m));
    }
}
