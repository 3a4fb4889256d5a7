//! Serde mirrors of the library types for `--json` output.

use serde::Serialize;
use symhopf::cohomology::GatheredMonomial;
use symhopf::f2::F2Sum;
use symhopf::homology::NakaokaMonomial;

/// One block of a gathered monomial: profile pairs `[level, power]`
/// outermost first, and the number of copies.
#[derive(Serialize)]
pub struct BlockJson {
    /// Profile entries as `[level, power]` pairs.
    pub profile: Vec<(u32, u32)>,
    /// Copies of the profile gathered into the block.
    pub width: u32,
}

/// One cohomology basis monomial.
#[derive(Serialize)]
pub struct CohTermJson {
    /// Blocks in canonical order.
    pub blocks: Vec<BlockJson>,
    /// Points carrying the bare unit class.
    pub unit: u32,
}

/// One homology basis monomial.
#[derive(Serialize)]
pub struct HomTermJson {
    /// Operation sequences applied to the fundamental class, with
    /// multiplicity: repeated sequences appear repeatedly.
    pub factors: Vec<Vec<u32>>,
    /// Exponent of the bare fundamental class.
    pub iota: u32,
}

/// A tensor term of a coproduct.
#[derive(Serialize)]
pub struct TensorJson<T: Serialize> {
    /// Left tensor factor.
    pub left: T,
    /// Right tensor factor.
    pub right: T,
}

/// Pairing result.
#[derive(Serialize)]
pub struct PairJson {
    /// The pairing value in the field with two elements.
    pub value: u8,
}

/// Outcome of one verification suite.
#[derive(Serialize)]
pub struct VerifyJson {
    /// Suite name.
    pub suite: String,
    /// Number of checks run.
    pub checks: usize,
    /// Number of checks that passed.
    pub passed: usize,
    /// Labels of failed checks.
    pub failed: Vec<String>,
}

/// Mirror a cohomology monomial.
pub fn coh_term(m: &GatheredMonomial) -> CohTermJson {
    CohTermJson {
        blocks: m
            .blocks()
            .iter()
            .map(|b| BlockJson { profile: b.profile().pairs().to_vec(), width: b.width() })
            .collect(),
        unit: m.unit_size(),
    }
}

/// Mirror a sum of cohomology monomials.
pub fn coh_sum(s: &F2Sum<GatheredMonomial>) -> Vec<CohTermJson> {
    s.iter().map(coh_term).collect()
}

/// Mirror a homology monomial.
pub fn hom_term(m: &NakaokaMonomial) -> HomTermJson {
    HomTermJson {
        factors: m.factors().iter().map(|q| q.entries().to_vec()).collect(),
        iota: m.iota_exp(),
    }
}

/// Mirror a sum of homology monomials.
pub fn hom_sum(s: &F2Sum<NakaokaMonomial>) -> Vec<HomTermJson> {
    s.iter().map(hom_term).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_round_trip_through_serde_json() {
        let m = GatheredMonomial::generator(1, 2);
        let v = serde_json::to_value(coh_sum(&F2Sum::singleton(m))).unwrap();
        assert_eq!(v[0]["blocks"][0]["profile"][0][0], 1);
        assert_eq!(v[0]["blocks"][0]["width"], 2);
        assert_eq!(v[0]["unit"], 0);

        let h = symhopf::homology::apply_qseq(&[0, 3]);
        let v = serde_json::to_value(hom_sum(&h)).unwrap();
        assert_eq!(v[0]["factors"][0], serde_json::json!([3]));
        assert_eq!(v[0]["iota"], 0);
    }
}
