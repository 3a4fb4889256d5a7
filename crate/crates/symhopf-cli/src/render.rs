//! Text output helpers shared by the subcommands.

use std::fmt::Display;

use symhopf::f2::F2Sum;

/// Render a sum of tensor pairs, `(x)` marking the tensor symbol.
pub fn tensor_sum<L: Display + Ord, R: Display + Ord>(sum: &F2Sum<(L, R)>) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = sum
        .iter()
        .map(|(l, r)| format!("{l} (x) {r}"))
        .collect();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use symhopf::cohomology::{coproduct, GatheredMonomial};

    #[test]
    fn tensor_terms_are_joined() {
        let d = coproduct(&GatheredMonomial::generator(1, 2));
        let text = tensor_sum(&d);
        assert!(text.contains("g[1,1] (x) g[1,1]"));
        assert!(text.contains(" + "));
        assert_eq!(tensor_sum::<GatheredMonomial, GatheredMonomial>(&F2Sum::zero()), "0");
    }
}
