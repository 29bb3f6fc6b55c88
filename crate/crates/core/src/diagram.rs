//! Closure combinatorics of a braid word: components, signed crossing counts,
//! linking numbers and the Euler characteristics of Seifert-type surfaces.
//!
//! Over-strand convention: in `σ_k` the strand entering at position `k`
//! passes over, in `σ_k⁻¹` the strand entering at position `k + 1` does.

use serde::Serialize;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureProfile {
    /// Number of components `r`.
    pub r: usize,
    /// Component id (1-based) of the strand starting at each top position.
    pub comp: Vec<usize>,
    /// Signed crossing counts; `cr[i][i]` is the self-crossing writhe of `L_{i+1}`.
    pub cr: Vec<Vec<i64>>,
    /// Unsigned self-crossing count `l_j`.
    pub l_u: Vec<i64>,
    /// Unsigned count `u_j` of crossings where `L_j` passes over another component.
    pub u: Vec<i64>,
    /// Strands per component.
    pub n_i: Vec<i64>,
}

impl ClosureProfile {
    pub fn check_component(&self, id: usize) -> Result<usize> {
        if id == 0 || id > self.r {
            return Err(Error::InvalidComponent { id, count: self.r });
        }
        Ok(id - 1)
    }
}

pub fn closure_profile(word: &BraidWord) -> ClosureProfile {
    let n = word.n();
    let perm = word.permutation();
    let cycles = perm.cycles();
    let r = cycles.len();
    let mut comp = vec![0; n];
    for (c, cyc) in cycles.iter().enumerate() {
        for &s in cyc {
            comp[s] = c;
        }
    }
    let mut cr = vec![vec![0i64; r]; r];
    let mut l_u = vec![0i64; r];
    let mut u = vec![0i64; r];
    let mut n_i = vec![0i64; r];
    for &c in &comp {
        n_i[c] += 1;
    }

    let mut at_pos: Vec<usize> = (0..n).collect();
    for (k, sign) in word.standard_letters() {
        let (a, b) = (at_pos[k - 1], at_pos[k]);
        let (ca, cb) = (comp[a], comp[b]);
        let eps = sign.value();
        if ca == cb {
            cr[ca][ca] += eps;
            l_u[ca] += 1;
        } else {
            cr[ca][cb] += eps;
            cr[cb][ca] += eps;
            let over = match sign {
                Sign::Pos => ca,
                Sign::Neg => cb,
            };
            u[over] += 1;
        }
        at_pos.swap(k - 1, k);
    }

    ClosureProfile {
        r,
        comp: comp.into_iter().map(|c| c + 1).collect(),
        cr,
        l_u,
        u,
        n_i,
    }
}

/// Linking numbers `lk(L_i, L_j) = cr(L_i, L_j) / 2`, zero on the diagonal.
pub fn linking_matrix(profile: &ClosureProfile) -> Result<Vec<Vec<i64>>> {
    let r = profile.r;
    let mut lk = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let c = profile.cr[i][j];
            if c % 2 != 0 {
                return Err(Error::Internal(format!(
                    "odd crossing count {c} between components {} and {}",
                    i + 1,
                    j + 1
                )));
            }
            lk[i][j] = c / 2;
        }
    }
    Ok(lk)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerFormula {
    Seifert,
    BandSeifert,
    PuncturedComponent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub chi: i64,
    pub chi_minus: i64,
    pub formula: EulerFormula,
}

impl EulerReport {
    fn new(chi: i64, formula: EulerFormula) -> Self {
        Self {
            chi,
            chi_minus: (-chi).max(0),
            formula,
        }
    }
}

/// Seifert's algorithm on the closed braid: `n` disks, one band per standard letter.
pub fn seifert_euler(word: &BraidWord) -> EulerReport {
    let c = word.standard_letters().len() as i64;
    EulerReport::new(word.n() as i64 - c, EulerFormula::Seifert)
}

/// Band Seifert surface: `n` disks, one band per letter as written.
pub fn band_seifert_euler(word: &BraidWord) -> EulerReport {
    EulerReport::new(
        word.n() as i64 - word.len() as i64,
        EulerFormula::BandSeifert,
    )
}

/// Surface for component `j` alone, punctured where other components pierce it:
/// `χ = n_j − u_j − l_j`.
pub fn punctured_component_euler(word: &BraidWord, j: usize) -> Result<EulerReport> {
    let p = closure_profile(word);
    let c = p.check_component(j)?;
    Ok(EulerReport::new(
        p.n_i[c] - p.u[c] - p.l_u[c],
        EulerFormula::PuncturedComponent,
    ))
}

/// `χ_−` of the band Seifert surface, summed over its connected pieces.
pub fn band_seifert_chi_minus(word: &BraidWord) -> i64 {
    let n = word.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for l in word.letters() {
        let (a, b) = (find(&mut parent, l.i - 1), find(&mut parent, l.j - 1));
        parent[a] = b;
    }
    let mut disks = vec![0i64; n];
    let mut bands = vec![0i64; n];
    for s in 0..n {
        let root = find(&mut parent, s);
        disks[root] += 1;
    }
    for l in word.letters() {
        let root = find(&mut parent, l.i - 1);
        bands[root] += 1;
    }
    (0..n).map(|k| (bands[k] - disks[k]).max(0)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn profile_of_four_crossing_torus_link() {
        let p = closure_profile(&w("s1^4", 2));
        assert_eq!(p.r, 2);
        assert_eq!(p.cr, vec![vec![0, 4], vec![4, 0]]);
        assert_eq!(p.n_i, vec![1, 1]);
        assert_eq!(p.u, vec![2, 2]);
        assert_eq!(p.l_u, vec![0, 0]);
        assert_eq!(linking_matrix(&p).unwrap(), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn profile_of_trefoil_and_identity() {
        let p = closure_profile(&w("s1^3", 2));
        assert_eq!((p.r, p.cr[0][0], p.n_i[0], p.l_u[0]), (1, 3, 2, 3));

        let p = closure_profile(&BraidWord::identity(3).unwrap());
        assert_eq!(p.r, 3);
        assert!(p.cr.iter().flatten().all(|&c| c == 0));
        assert_eq!(p.comp, vec![1, 2, 3]);
    }

    #[test]
    fn negative_hopf_linking() {
        let p = closure_profile(&w("s1^-2", 2));
        assert_eq!(linking_matrix(&p).unwrap()[0][1], -1);
        assert_eq!(p.u, vec![1, 1]);
        let id = closure_profile(&BraidWord::identity(2).unwrap());
        assert_eq!(linking_matrix(&id).unwrap(), vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn odd_linking_is_an_internal_error() {
        let mut p = closure_profile(&w("s1^2", 2));
        p.cr[0][1] = 3;
        p.cr[1][0] = 3;
        assert!(matches!(linking_matrix(&p), Err(Error::Internal(_))));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(seifert_euler(&w("s1^4", 2)).chi, -2);
        assert_eq!(seifert_euler(&BraidWord::identity(1).unwrap()).chi, 1);
        let t = seifert_euler(&w("s1^3", 2));
        assert_eq!((t.chi, t.chi_minus), (-1, 1));

        let ko_lee = w("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5);
        assert_eq!(band_seifert_euler(&ko_lee).chi, -4);
        assert_eq!(band_seifert_chi_minus(&ko_lee), 4);
        assert_eq!(band_seifert_euler(&BraidWord::identity(4).unwrap()).chi, 4);

        assert_eq!(punctured_component_euler(&w("s1^4", 2), 1).unwrap().chi, -1);
        assert_eq!(
            punctured_component_euler(&BraidWord::identity(2).unwrap(), 1)
                .unwrap()
                .chi,
            1
        );
        assert_eq!(punctured_component_euler(&w("s1^3", 2), 1).unwrap().chi, -1);
        assert!(matches!(
            punctured_component_euler(&w("s1^3", 2), 2),
            Err(Error::InvalidComponent { .. })
        ));
    }

    #[test]
    fn band_and_standard_euler_agree_on_standard_words() {
        let word = w("s1 s2^-1 s3^2 s1", 4);
        assert_eq!(seifert_euler(&word).chi, band_seifert_euler(&word).chi);
    }
}
