//! The family `σ₂^{−l} σ₁^k` in `B₃`.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::poly::LaurentVZ;

use super::homfly_p;

pub fn kanda_word(l: usize, k: usize) -> BraidWord {
    let mut gens = vec![-2i64; l];
    gens.extend(std::iter::repeat_n(1, k));
    BraidWord::from_signed(3, &gens).expect("generators of B_3")
}

/// `f_l` with `P(0,z)(σ₂^{−l}σ₁^k) = f_l · P(0,z)(σ₁^k)`, the right factor
/// taken on two strands.
pub fn kanda_factor(l: usize, k: usize) -> Result<LaurentVZ> {
    let num = homfly_p(&kanda_word(l, k)).eval_v0()?;
    let den = homfly_p(&BraidWord::from_signed(2, &vec![1; k])?).eval_v0()?;
    num.exact_div(&den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffSigns {
    Zero,
    AllPositive,
    AllNegative,
    Mixed,
}

impl CoeffSigns {
    pub fn of(p: &LaurentVZ) -> Self {
        use num_traits::Signed;
        if p.is_zero() {
            return CoeffSigns::Zero;
        }
        if p.terms().all(|(_, c)| c.is_positive()) {
            CoeffSigns::AllPositive
        } else if p.terms().all(|(_, c)| c.is_negative()) {
            CoeffSigns::AllNegative
        } else {
            CoeffSigns::Mixed
        }
    }
}

/// `−χ` of the minimal surface minus the maximal Bennequin number for
/// `σ₂^{−k}σ₁^k`: `(2k − 3) − (−3)`.
pub fn kanda_gap(k: usize) -> i64 {
    let word = kanda_word(k, k);
    let chi_minus = word.len() as i64 - word.n() as i64;
    let max_bt = word.exponent_sum() - word.n() as i64;
    chi_minus - max_bt
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_factors() {
        assert_eq!(kanda_factor(0, 3).unwrap(), LaurentVZ::z_pow(-1));
        assert!(kanda_factor(1, 3).unwrap().is_zero());
        assert_eq!(kanda_factor(2, 5).unwrap(), LaurentVZ::z_pow(-1));
        assert_eq!(kanda_factor(3, 3).unwrap(), LaurentVZ::monomial(-1, 0, 0));
    }

    #[test]
    fn sign_classes() {
        assert_eq!(CoeffSigns::of(&LaurentVZ::zero()), CoeffSigns::Zero);
        assert_eq!(
            CoeffSigns::of(&LaurentVZ::from_terms([(1, 0, 1), (-1, 0, 0)])),
            CoeffSigns::Mixed
        );
    }

    #[test]
    fn gap_grows() {
        assert_eq!(kanda_gap(3), 6);
        assert_eq!(kanda_gap(5), 10);
    }
}
