//! The framed braid polynomial `P(v, z)`, the HOMFLY polynomial `H` and the
//! invariants read off from them.
//!
//! `P` is fixed by
//!
//! * `P(βσ_i) − P(βσ_i⁻¹) = z P(β)`,
//! * `P(βσ_n) = P(β)` and `P(βσ_n⁻¹) = v² P(β)` for `β ∈ B_n`,
//! * `P(id_n) = ((1 − v²)/z)^n`,
//!
//! together with invariance under braid relations and conjugation.

mod band3;
mod hecke;
mod kanda;
mod oracle;

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bennequin::bennequin_number;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentVZ;

pub use band3::{band_minimize, BandMinimizer, BandMinimum, DEFAULT_SLACK};
pub use hecke::{Perm, TraceElement, TraceEvaluator};
pub use kanda::{kanda_factor, kanda_gap, kanda_word, CoeffSigns};
pub use oracle::{skein_oracle, SkeinOracle, DEFAULT_BUDGET};

fn evaluator() -> &'static TraceEvaluator {
    static EVAL: OnceLock<TraceEvaluator> = OnceLock::new();
    EVAL.get_or_init(TraceEvaluator::new)
}

/// `P(β)` through the permutation-braid trace (shared process-wide cache).
pub fn homfly_p(word: &BraidWord) -> LaurentVZ {
    evaluator().evaluate(word)
}

fn bt(word: &BraidWord) -> i64 {
    bennequin_number(word, None).expect("whole-word Bennequin number is total")
}

fn h_from_p(p: &LaurentVZ, beta_t: i64) -> Result<LaurentVZ> {
    let num = p.shift((beta_t + 1) as i32, 1);
    num.exact_div(&LaurentVZ::one_minus_v2())
        .map_err(|_| Error::Internal("z·P is not divisible by 1 − v²".into()))
}

/// `H = v^{β_t + 1} z P / (1 − v²)`.
pub fn homfly_h(word: &BraidWord) -> Result<LaurentVZ> {
    h_from_p(&homfly_p(word), bt(word))
}

fn conway_from_p(p: &LaurentVZ) -> Result<LaurentVZ> {
    Ok(p.shift(0, 1)
        .exact_div(&LaurentVZ::one_minus_v2())
        .map_err(|_| Error::Internal("z·P is not divisible by 1 − v²".into()))?
        .eval_v1())
}

/// Conway polynomial: `z P / (1 − v²)` at `v = 1`.
pub fn conway(word: &BraidWord) -> Result<LaurentVZ> {
    conway_from_p(&homfly_p(word))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomflyReport {
    #[serde(rename = "P")]
    pub p: LaurentVZ,
    #[serde(rename = "H")]
    pub h: LaurentVZ,
    /// Lowest `v`-degree of `H`.
    pub e: i64,
    /// Lowest `v`-degree of `P`.
    pub e_p: i64,
    pub conway: LaurentVZ,
    pub beta_t: i64,
}

impl HomflyReport {
    pub fn from_p(word: &BraidWord, p: LaurentVZ) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Internal("P vanished".into()));
        }
        let beta_t = bt(word);
        let h = h_from_p(&p, beta_t)?;
        Ok(Self {
            e: h.min_v_degree()? as i64,
            e_p: p.min_v_degree()? as i64,
            conway: conway_from_p(&p)?,
            h,
            p,
            beta_t,
        })
    }
}

pub fn homfly_report(word: &BraidWord) -> Result<HomflyReport> {
    HomflyReport::from_p(word, homfly_p(word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MfwCheck {
    pub beta_t: i64,
    pub e: i64,
    pub holds: bool,
    /// `e − (β_t + 1)`.
    pub slack: i64,
}

/// Compares `β_t + 1` with the lowest `v`-degree of `H`.
pub fn mfw_check(word: &BraidWord) -> Result<MfwCheck> {
    let h = homfly_h(word)?;
    let beta_t = bt(word);
    let e = h.min_v_degree()? as i64;
    Ok(MfwCheck {
        beta_t,
        e,
        holds: beta_t < e,
        slack: e - beta_t - 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BennequinCertificate {
    /// `P(0, z) ≠ 0`, which makes `β_t` maximal among braid representatives.
    pub certified: bool,
    pub p0: LaurentVZ,
}

pub fn max_bennequin_certificate(word: &BraidWord) -> Result<BennequinCertificate> {
    let p0 = homfly_p(word).eval_v0()?;
    Ok(BennequinCertificate {
        certified: !p0.is_zero(),
        p0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopTermCheck {
    pub z_degree: i32,
    pub predicted: LaurentVZ,
    pub observed: LaurentVZ,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// For a homogeneous word, the coefficient of `z^{|β| − n}` in `P` should be
/// `(−1)^{neg − n_n} (1 − v²) v^{2 n_n}`, and no higher power of `z` occurs.
pub fn homogeneous_top_term(word: &BraidWord) -> Result<TopTermCheck> {
    let prof = word.generator_profile();
    if !prof.homogeneous {
        return Err(Error::Internal(format!(
            "`{word}` is not homogeneous on {} strands",
            word.n()
        )));
    }
    let len = (prof.pos + prof.neg) as i32;
    let z_degree = len - word.n() as i32;
    let sign = if (prof.neg - prof.n_n).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let predicted = LaurentVZ::one_minus_v2()
        .shift(2 * prof.n_n as i32, 0)
        .scale(&BigInt::from(sign));
    let p = homfly_p(word);
    let observed = p.z_coefficient(z_degree);
    let matches = observed == predicted && p.max_z_degree()? == z_degree;
    Ok(TopTermCheck {
        z_degree,
        predicted,
        observed,
        matches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MortonCheck {
    pub minimal: BraidWord,
    pub e_p: i64,
    pub neg_b_min: usize,
    pub holds: bool,
    pub certified: bool,
}

fn morton_from_minimum(m: BandMinimum) -> Result<MortonCheck> {
    let e_p = homfly_p(&m.word).min_v_degree()? as i64;
    let neg_b_min = m.word.generator_profile().neg_b;
    Ok(MortonCheck {
        holds: e_p <= 2 * neg_b_min as i64,
        e_p,
        neg_b_min,
        certified: m.certified,
        minimal: m.word,
    })
}

/// `e_P ≤ 2·neg_b` on a shortest band representative of a closed 3-braid.
pub fn morton_check_3braid(word: &BraidWord, budget: usize) -> Result<MortonCheck> {
    morton_from_minimum(band_minimize(word, budget)?)
}

/// As [`morton_check_3braid`], reusing a minimizer's cache.
pub fn morton_check_with(
    minimizer: &mut BandMinimizer,
    word: &BraidWord,
    budget: usize,
) -> Result<MortonCheck> {
    morton_from_minimum(minimizer.minimize(word, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn delta_pow(k: i64) -> LaurentVZ {
        LaurentVZ::delta().pow(k).unwrap()
    }

    #[test]
    fn identity_and_band_base_cases() {
        assert_eq!(homfly_p(&BraidWord::identity(3).unwrap()), delta_pow(3));
        assert_eq!(homfly_p(&w("a1,3^-1", 3)), delta_pow(2).shift(2, 0));
        assert_eq!(
            homfly_p(&w("a1,2 a2,3^-1", 3)),
            LaurentVZ::from_terms([(1, 2, -1), (-1, 4, -1)])
        );
    }

    #[test]
    fn h_examples() {
        assert_eq!(
            homfly_h(&BraidWord::identity(1).unwrap()).unwrap(),
            LaurentVZ::one()
        );
        assert_eq!(
            homfly_h(&BraidWord::identity(2).unwrap()).unwrap(),
            LaurentVZ::from_terms([(1, -1, -1), (-1, 1, -1)])
        );
        assert_eq!(
            homfly_h(&w("s1^3", 2)).unwrap(),
            LaurentVZ::from_terms([(2, 2, 0), (-1, 4, 0), (1, 2, 2)])
        );
        assert_eq!(
            homfly_h(&w("s1^3", 2)).unwrap(),
            homfly_h(&w("s1^3 s2", 3)).unwrap()
        );
    }

    #[test]
    fn conway_examples() {
        assert_eq!(
            conway(&BraidWord::identity(1).unwrap()).unwrap(),
            LaurentVZ::one()
        );
        assert_eq!(conway(&w("s1^2", 2)).unwrap(), LaurentVZ::z_pow(1));
        assert_eq!(
            conway(&w("s1^3", 2)).unwrap(),
            LaurentVZ::from_terms([(1, 0, 0), (1, 0, 2)])
        );
    }

    #[test]
    fn mfw_examples() {
        let c = mfw_check(&BraidWord::identity(1).unwrap()).unwrap();
        assert_eq!((c.beta_t, c.e, c.slack, c.holds), (-1, 0, 0, true));
        let c = mfw_check(&w("s1^3", 2)).unwrap();
        assert_eq!((c.beta_t, c.e, c.slack), (1, 2, 0));
        for k in [3, 5] {
            let c = mfw_check(&w(&format!("s2^-{k} s1^{k}"), 3)).unwrap();
            assert_eq!(c.beta_t, -3);
            assert!(c.holds);
        }
    }

    #[test]
    fn certificates() {
        for k in 1..6 {
            assert!(
                max_bennequin_certificate(&w(&format!("s1^{k}"), 2))
                    .unwrap()
                    .certified
            );
            let c = max_bennequin_certificate(&w(&format!("s2^-1 s1^{k}"), 3)).unwrap();
            assert!(!c.certified);
            assert!(c.p0.is_zero());
        }
    }

    #[test]
    fn top_terms() {
        for k in 1..7 {
            let t = homogeneous_top_term(&w(&format!("s1^{k}"), 2)).unwrap();
            assert!(t.matches);
            assert_eq!(t.predicted, LaurentVZ::one_minus_v2());
            assert_eq!(t.z_degree, k - 2);
        }
        let t = homogeneous_top_term(&w("s1 s2", 3)).unwrap();
        assert!(t.matches);
        assert_eq!(homfly_p(&w("s1 s2", 3)), LaurentVZ::delta());
        for k in 1..5 {
            let t = homogeneous_top_term(&w(&format!("s2^-{k} s1^{k}"), 3)).unwrap();
            assert!(t.matches, "k = {k}");
        }
        assert!(homogeneous_top_term(&w("s1 s1^-1", 2)).is_err());
    }

    #[test]
    fn morton_base_cases() {
        let m = morton_check_3braid(&w("a1,3^-1", 3), 100_000).unwrap();
        assert_eq!((m.e_p, m.neg_b_min, m.holds), (2, 1, true));
        let m = morton_check_3braid(&w("a1,2 a2,3^-1", 3), 100_000).unwrap();
        assert_eq!((m.e_p, m.neg_b_min, m.holds), (2, 1, true));
        let m = morton_check_3braid(&w("a1,2 a1,3 a2,3^2", 3), 1_000_000).unwrap();
        assert_eq!((m.e_p, m.neg_b_min), (0, 0));
        assert!(morton_check_3braid(&w("s1", 2), 10).is_err());
    }

    #[test]
    fn report_fields() {
        let r = homfly_report(&w("s1^3", 2)).unwrap();
        assert_eq!((r.e, r.e_p, r.beta_t), (2, 0, 1));
        assert_eq!(r.e_p, r.e - r.beta_t - 1);
    }
}
