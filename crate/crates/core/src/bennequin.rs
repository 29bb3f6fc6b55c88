//! Bennequin and relative Bennequin numbers, the cabled diagram `L′ ⊃ L″`
//! attached to a non-negative cohomology class, and lower/upper brackets
//! for the Thurston norm.

use serde::Serialize;

use crate::braid::{BraidLetter, BraidWord, Sign};
use crate::diagram::{band_seifert_chi_minus, closure_profile, linking_matrix, ClosureProfile};
use crate::error::{Error, Result};

/// A class `C = (C_1, …, C_r)` in the meridian-dual basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohClass(pub Vec<i64>);

impl CohClass {
    /// Parses `2,1` style comma-separated integers.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::MalformedToken(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(CohClass)
    }

    pub fn ones(r: usize) -> Self {
        CohClass(vec![1; r])
    }

    pub fn unit(r: usize, j: usize) -> Self {
        let mut c = vec![0; r];
        c[j - 1] = 1;
        CohClass(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn validate(&self, r: usize) -> Result<()> {
        if self.0.len() != r {
            return Err(Error::ClassLength {
                expected: r,
                got: self.0.len(),
            });
        }
        if let Some((i, &v)) = self.0.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeClass {
                index: i + 1,
                value: v,
            });
        }
        Ok(())
    }
}

fn check_subset(profile: &ClosureProfile, subset: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; profile.r];
    for &id in subset {
        mask[profile.check_component(id)?] = true;
    }
    Ok(mask)
}

/// `β_t = pos − neg − n`, optionally restricted to the sub-diagram formed by a
/// set of components (letters between two strands of the subset, and the
/// strands of the subset).
pub fn bennequin_number(word: &BraidWord, subset: Option<&[usize]>) -> Result<i64> {
    let Some(subset) = subset else {
        return Ok(word.exponent_sum() - word.n() as i64);
    };
    let profile = closure_profile(word);
    let mask = check_subset(&profile, subset)?;
    let mut total = 0;
    for i in 0..profile.r {
        if !mask[i] {
            continue;
        }
        total += profile.cr[i][i] - profile.n_i[i];
        for j in (i + 1)..profile.r {
            if mask[j] {
                total += profile.cr[i][j];
            }
        }
    }
    Ok(total)
}

fn relative_from_profile(profile: &ClosureProfile, lk: &[Vec<i64>], c: usize) -> i64 {
    profile.cr[c][c] - profile.n_i[c] + lk[c].iter().sum::<i64>()
}

/// `β_t(L_i, L) = cr(L_i, L_i) − n_i + Σ_{j≠i} lk(L_i, L_j)`.
pub fn relative_bennequin(word: &BraidWord, i: usize) -> Result<i64> {
    let profile = closure_profile(word);
    let c = profile.check_component(i)?;
    let lk = linking_matrix(&profile)?;
    Ok(relative_from_profile(&profile, &lk, c))
}

pub fn relative_bennequin_subset(word: &BraidWord, subset: &[usize]) -> Result<i64> {
    let profile = closure_profile(word);
    let mask = check_subset(&profile, subset)?;
    let lk = linking_matrix(&profile)?;
    Ok((0..profile.r)
        .filter(|&c| mask[c])
        .map(|c| relative_from_profile(&profile, &lk, c))
        .sum())
}

/// All relative Bennequin numbers, indexed by component.
pub fn relative_bennequin_all(word: &BraidWord) -> Result<Vec<i64>> {
    let profile = closure_profile(word);
    let lk = linking_matrix(&profile)?;
    Ok((0..profile.r)
        .map(|c| relative_from_profile(&profile, &lk, c))
        .collect())
}

/// The cabled diagram `L′` and its sub-diagram `L″` for a class `C ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CablePair {
    pub lprime: BraidWord,
    /// Component ids of `L′` that make up `L″`.
    pub subset: Vec<usize>,
    /// Original component id of each component of `L′`.
    pub origin: Vec<usize>,
    /// Framing `p_i = −Σ_{j≠i} C_j·lk(L_i, L_j)` of each original component.
    pub p: Vec<i64>,
    /// Offset at the bottom of the braid of the cable replacing the first
    /// strand of each original component.
    pub m: Vec<usize>,
    /// Exponent `p_i − C_i·cr(L_i, L_i)` of the inserted twist, per component.
    pub twist: Vec<i64>,
}

/// Replaces each strand of `L_i` by `C_i` parallel strands (single strands for
/// `C_i = 0`), blows every crossing up into a block of crossings with the same
/// sign, and closes each multi-strand cable with the correcting twist
/// `(σ_{m+1} ⋯ σ_{m+C_i−1})^{p_i − C_i cr(L_i,L_i)}` at the bottom.
pub fn cable_pair(word: &BraidWord, class: &CohClass) -> Result<CablePair> {
    let profile = closure_profile(word);
    class.validate(profile.r)?;
    if class.is_zero() {
        return Err(Error::ZeroClass);
    }
    let lk = linking_matrix(&profile)?;
    let r = profile.r;
    let cvals = &class.0;
    let comp: Vec<usize> = profile.comp.iter().map(|c| c - 1).collect();
    let width: Vec<usize> = comp.iter().map(|&c| cvals[c].max(1) as usize).collect();

    let n = word.n();
    let new_n: usize = width.iter().sum();
    let mut letters: Vec<BraidLetter> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    for (k, sign) in word.standard_letters() {
        let off: usize = order[..k - 1].iter().map(|&s| width[s]).sum();
        let (wa, wb) = (width[order[k - 1]], width[order[k]]);
        // The left cable moves right across the right one, strand by strand.
        for t in (1..=wa).rev() {
            for step in 0..wb {
                letters.push(BraidLetter::std(off + t + step, sign));
            }
        }
        order.swap(k - 1, k);
    }

    let p: Vec<i64> = (0..r)
        .map(|i| {
            -(0..r)
                .filter(|&j| j != i)
                .map(|j| cvals[j] * lk[i][j])
                .sum::<i64>()
        })
        .collect();
    let twist: Vec<i64> = (0..r).map(|i| p[i] - cvals[i] * profile.cr[i][i]).collect();

    let mut m = vec![0usize; r];
    for (c, m_c) in m.iter_mut().enumerate() {
        let first = comp
            .iter()
            .position(|&x| x == c)
            .expect("component has a strand");
        let q = order
            .iter()
            .position(|&s| s == first)
            .expect("strand present");
        *m_c = order[..q].iter().map(|&s| width[s]).sum();
    }
    for c in 0..r {
        let ci = cvals[c] as usize;
        if ci < 2 || twist[c] == 0 {
            continue;
        }
        let block: Vec<BraidLetter> = (1..ci)
            .map(|t| BraidLetter::std(m[c] + t, Sign::Pos))
            .collect();
        let reps = twist[c].unsigned_abs() as usize;
        for _ in 0..reps {
            if twist[c] > 0 {
                letters.extend_from_slice(&block);
            } else {
                letters.extend(block.iter().rev().map(|l| l.inverse()));
            }
        }
    }

    let lprime = BraidWord::new(new_n, letters)?;

    // Top positions of L′ strands, in order, tagged with their original component.
    let mut strand_origin = Vec::with_capacity(new_n);
    for s in 0..n {
        strand_origin.extend(std::iter::repeat_n(comp[s], width[s]));
    }
    let lp_profile = closure_profile(&lprime);
    let mut origin = vec![0usize; lp_profile.r];
    for (pos, &cid) in lp_profile.comp.iter().enumerate() {
        origin[cid - 1] = strand_origin[pos] + 1;
    }
    let subset = (1..=lp_profile.r)
        .filter(|&id| cvals[origin[id - 1] - 1] > 0)
        .collect();

    Ok(CablePair {
        lprime,
        subset,
        origin,
        p,
        m,
        twist,
    })
}

/// `Σ C_i · β_t(L_i, L)`.
pub fn class_lower_bound(word: &BraidWord, class: &CohClass) -> Result<i64> {
    let rel = relative_bennequin_all(word)?;
    class.validate(rel.len())?;
    Ok(rel.iter().zip(&class.0).map(|(b, c)| b * c).sum())
}

/// `β_t(L″) + Σ_{C_i = 0} |Σ_j C_j lk(L_i, L_j)|`.
pub fn scholium_lower_bound(word: &BraidWord, class: &CohClass) -> Result<i64> {
    let profile = closure_profile(word);
    class.validate(profile.r)?;
    if class.is_zero() {
        return Ok(0);
    }
    let lk = linking_matrix(&profile)?;
    let pair = cable_pair(word, class)?;
    let inner = bennequin_number(&pair.lprime, Some(&pair.subset))?;
    let correction: i64 = (0..profile.r)
        .filter(|&i| class.0[i] == 0)
        .map(|i| {
            (0..profile.r)
                .map(|j| class.0[j] * lk[i][j])
                .sum::<i64>()
                .abs()
        })
        .sum();
    Ok(inner + correction)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerSource {
    Corollary,
    Scholium,
    /// The norm is known outright: Seifert's algorithm is minimal on
    /// homogeneous braids, and the norm is additive on the positive cone.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    GeneralizedSeifert,
    SeminormSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormBracket {
    pub lower: i64,
    pub upper: i64,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
    pub determined: bool,
}

/// Brackets `‖C‖_T` for `C ≥ 0`.
///
/// The lower end is the better of the two relative Bennequin bounds. The upper
/// end uses subadditivity over the punctured single-component surfaces
/// (`χ = n_j − u_j − l_j`), optionally peeling off multiples of `(1, …, 1)`
/// spanned by the band Seifert surface of the word as written.
pub fn thurston_bracket(word: &BraidWord, class: &CohClass) -> Result<NormBracket> {
    let profile = closure_profile(word);
    class.validate(profile.r)?;
    let r = profile.r;
    let unit_norm: Vec<i64> = (0..r)
        .map(|j| profile.l_u[j] + profile.u[j] - profile.n_i[j])
        .collect();
    if let Some(j) = unit_norm.iter().position(|&x| x < 0) {
        return Err(Error::UnlinkedUnknot(j + 1));
    }

    if class.is_zero() {
        return Ok(NormBracket {
            lower: 0,
            upper: 0,
            lower_source: LowerSource::Direct,
            upper_source: UpperSource::GeneralizedSeifert,
            determined: true,
        });
    }

    let c = &class.0;
    let seifert_upper: i64 = c.iter().zip(&unit_norm).map(|(a, b)| a * b).sum();
    let c_min = *c.iter().min().expect("r >= 1");
    let band_upper = c_min * band_seifert_chi_minus(word)
        + c.iter()
            .zip(&unit_norm)
            .map(|(a, b)| (a - c_min) * b)
            .sum::<i64>();
    let upper = seifert_upper.min(band_upper);
    let single_surface = {
        let ones = c.iter().filter(|&&x| x == 1).count();
        let zeros = c.iter().filter(|&&x| x == 0).count();
        ones == r || (ones == 1 && zeros == r - 1)
    };
    let upper_source = if single_surface {
        UpperSource::GeneralizedSeifert
    } else {
        UpperSource::SeminormSum
    };

    let corollary = class_lower_bound(word, class)?;
    let scholium = scholium_lower_bound(word, class)?;
    let (mut lower, mut lower_source) = if scholium > corollary {
        (scholium, LowerSource::Scholium)
    } else {
        (corollary, LowerSource::Corollary)
    };
    if lower < seifert_upper && word.generator_profile().homogeneous {
        lower = seifert_upper;
        lower_source = LowerSource::Direct;
    }
    if lower > upper {
        return Err(Error::Internal(format!(
            "lower bound {lower} exceeds upper bound {upper}"
        )));
    }
    Ok(NormBracket {
        lower,
        upper,
        lower_source,
        upper_source,
        determined: lower == upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn bennequin_examples() {
        let t = w("s1^4", 2);
        assert_eq!(bennequin_number(&t, None).unwrap(), 2);
        assert_eq!(bennequin_number(&t, Some(&[1, 2])).unwrap(), 2);
        assert_eq!(bennequin_number(&t, Some(&[1])).unwrap(), -1);
        assert_eq!(
            bennequin_number(&BraidWord::identity(4).unwrap(), None).unwrap(),
            -4
        );
        assert_eq!(bennequin_number(&w("s2^-3 s1^3", 3), None).unwrap(), -3);
        assert!(bennequin_number(&t, Some(&[3])).is_err());
    }

    #[test]
    fn relative_examples() {
        let t = w("s1^4", 2);
        assert_eq!(relative_bennequin(&t, 1).unwrap(), 1);
        assert_eq!(relative_bennequin(&t, 2).unwrap(), 1);
        assert_eq!(relative_bennequin_subset(&t, &[1, 2]).unwrap(), 2);
        assert_eq!(relative_bennequin_subset(&t, &[1]).unwrap(), 1);
        assert_eq!(relative_bennequin_subset(&t, &[]).unwrap(), 0);
        let knot = w("s1^3 s2^-1", 3);
        assert_eq!(
            relative_bennequin(&knot, 1).unwrap(),
            bennequin_number(&knot, None).unwrap()
        );
        assert_eq!(relative_bennequin(&w("s1^-2", 2), 1).unwrap(), -2);
        assert!(relative_bennequin(&t, 0).is_err());
    }

    #[test]
    fn cable_of_torus_link_at_2_1() {
        let t = w("s1^4", 2);
        let pair = cable_pair(&t, &CohClass(vec![2, 1])).unwrap();
        assert_eq!(pair.lprime.n(), 3);
        assert_eq!(pair.p, vec![-2, -4]);
        assert_eq!(pair.twist[0], -2);
        assert_eq!(
            relative_bennequin_subset(&pair.lprime, &pair.subset).unwrap(),
            3
        );
        // The published diagram for the same class.
        assert_eq!(pair.lprime, w("s2 s1^2 s2^2 s1^2 s2 s1^-2", 3));
    }

    #[test]
    fn trivial_cablings() {
        let word = w("s1 s2^-1 s1^2 s2", 3);
        let r = closure_profile(&word).r;
        let pair = cable_pair(&word, &CohClass::ones(r)).unwrap();
        assert_eq!(pair.lprime, word);
        assert_eq!(pair.subset, (1..=r).collect::<Vec<_>>());

        let t = w("s1^4", 2);
        let pair = cable_pair(&t, &CohClass(vec![1, 0])).unwrap();
        assert_eq!(pair.lprime, t);
        assert_eq!(pair.subset, vec![1]);

        assert_eq!(cable_pair(&t, &CohClass(vec![0, 0])), Err(Error::ZeroClass));
        assert!(matches!(
            cable_pair(&t, &CohClass(vec![1, -1])),
            Err(Error::NegativeClass {
                index: 2,
                value: -1
            })
        ));
    }

    #[test]
    fn lower_bounds() {
        let t = w("s1^4", 2);
        assert_eq!(class_lower_bound(&t, &CohClass(vec![1, 1])).unwrap(), 2);
        assert_eq!(class_lower_bound(&t, &CohClass(vec![2, 1])).unwrap(), 3);
        assert_eq!(class_lower_bound(&t, &CohClass(vec![0, 0])).unwrap(), 0);
        assert_eq!(scholium_lower_bound(&t, &CohClass(vec![1, 1])).unwrap(), 2);
        assert_eq!(scholium_lower_bound(&t, &CohClass(vec![1, 0])).unwrap(), 1);
        let neg = w("s1^-2", 2);
        assert_eq!(
            scholium_lower_bound(&neg, &CohClass(vec![1, 0])).unwrap(),
            0
        );
        assert_eq!(class_lower_bound(&neg, &CohClass(vec![1, 0])).unwrap(), -2);
    }

    #[test]
    fn brackets_of_torus_link() {
        let t = w("s1^4", 2);
        for (c, v) in [
            (vec![1, 1], 2),
            (vec![2, 1], 3),
            (vec![1, 0], 1),
            (vec![0, 0], 0),
        ] {
            let b = thurston_bracket(&t, &CohClass(c)).unwrap();
            assert_eq!((b.lower, b.upper, b.determined), (v, v, true));
        }
        assert!(thurston_bracket(&t, &CohClass(vec![1, -1])).is_err());
        assert_eq!(
            thurston_bracket(&BraidWord::identity(2).unwrap(), &CohClass(vec![1, 0])),
            Err(Error::UnlinkedUnknot(1))
        );
    }

    #[test]
    fn ko_lee_bracket_uses_band_surface() {
        let word = w("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5);
        let b = thurston_bracket(&word, &CohClass(vec![1, 1])).unwrap();
        assert_eq!((b.lower, b.upper, b.determined), (4, 4, true));
    }
}
