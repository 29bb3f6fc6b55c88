//! Linearization of braid words over positive permutation braids, and the
//! strand-elimination trace that evaluates `P` on them.
//!
//! A permutation `w` is stored as its one-line array `w[0..n]`. Right
//! multiplication by the generator `g_i` swaps entries `i` and `i + 1`;
//! it lengthens `w` exactly when `w[i] < w[i + 1]`.
//!
//! With `σ − σ⁻¹ = z` every word reduces to `Σ c_w T_w`:
//!
//! * `T_w σ_i = T_{w g_i}` on an ascent, `T_{w g_i} + z T_w` on a descent;
//! * `T_w σ_i⁻¹ = T_{w g_i} − z T_w` on an ascent, `T_{w g_i}` on a descent.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::braid::{BraidWord, Sign};
use crate::poly::LaurentVZ;

pub type Perm = Vec<u8>;

/// `Σ c_w T_w` over permutations of `{0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceElement {
    pub n: usize,
    pub comb: BTreeMap<Perm, LaurentVZ>,
}

impl TraceElement {
    pub fn identity(n: usize) -> Self {
        let mut comb = BTreeMap::new();
        comb.insert((0..n as u8).collect(), LaurentVZ::one());
        Self { n, comb }
    }

    fn basis(w: Perm) -> Self {
        let n = w.len();
        let mut comb = BTreeMap::new();
        comb.insert(w, LaurentVZ::one());
        Self { n, comb }
    }

    fn accumulate(comb: &mut BTreeMap<Perm, LaurentVZ>, w: Perm, c: LaurentVZ) {
        if c.is_zero() {
            return;
        }
        match comb.get_mut(&w) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    comb.remove(&w);
                }
            }
            None => {
                comb.insert(w, c);
            }
        }
    }

    /// Right multiplication by `σ_{i+1}^{±1}` (0-based generator `i`).
    pub fn mul_generator(&self, i: usize, sign: Sign) -> Self {
        let z = LaurentVZ::z_pow(1);
        let mut out = BTreeMap::new();
        for (w, c) in &self.comb {
            let ascent = w[i] < w[i + 1];
            let mut wg = w.clone();
            wg.swap(i, i + 1);
            Self::accumulate(&mut out, wg, c.clone());
            match (sign, ascent) {
                (Sign::Pos, false) => Self::accumulate(&mut out, w.clone(), c * &z),
                (Sign::Neg, true) => Self::accumulate(&mut out, w.clone(), -(c * &z)),
                _ => {}
            }
        }
        Self {
            n: self.n,
            comb: out,
        }
    }

    pub fn from_word(word: &BraidWord) -> Self {
        word.standard_letters()
            .into_iter()
            .fold(Self::identity(word.n()), |acc, (k, s)| {
                acc.mul_generator(k - 1, s)
            })
    }
}

/// A reduced word (0-based generators) for `w`, built by peeling descents.
fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut rev = Vec::new();
    'outer: loop {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                rev.push(i);
                continue 'outer;
            }
        }
        break;
    }
    rev.reverse();
    rev
}

/// Memoized trace `tr(T_w)` on the positive permutation braids.
///
/// The cache only ever stores values equal to a fresh computation, so
/// concurrent fills are idempotent.
#[derive(Default)]
pub struct TraceEvaluator {
    cache: RwLock<HashMap<Perm, LaurentVZ>>,
}

impl TraceEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }

    pub fn trace_basis(&self, w: &[u8]) -> LaurentVZ {
        if let Some(v) = self.cache.read().ok().and_then(|c| c.get(w).cloned()) {
            return v;
        }
        let v = self.compute(w);
        if let Ok(mut c) = self.cache.write() {
            c.insert(w.to_vec(), v.clone());
        }
        v
    }

    fn compute(&self, w: &[u8]) -> LaurentVZ {
        let m = w.len();
        if m == 0 {
            return LaurentVZ::one();
        }
        let top = (m - 1) as u8;
        if w[m - 1] == top {
            // Free last strand.
            return &LaurentVZ::delta() * &self.trace_basis(&w[..m - 1]);
        }
        // w = u · g_{m-2} · c' with u ∈ S_{m-1} and c' = g_{m-3} ⋯ g_k; the
        // trace is conjugation invariant, so tr(T_w) = tr_{m-1}(T_{c'} T_u).
        let k = w.iter().position(|&x| x == top).expect("top value present");
        let mut u = w.to_vec();
        let t = u.remove(k);
        u.push(t);
        let mut cprime: Perm = (0..(m - 1) as u8).collect();
        for g in (k..m.saturating_sub(2)).rev() {
            cprime.swap(g, g + 1);
        }
        let mut elem = TraceElement::basis(cprime);
        for g in reduced_word(&u[..m - 1]) {
            elem = elem.mul_generator(g, Sign::Pos);
        }
        self.trace(&elem)
    }

    pub fn trace(&self, elem: &TraceElement) -> LaurentVZ {
        let mut acc = LaurentVZ::zero();
        for (w, c) in &elem.comb {
            acc += &(c * &self.trace_basis(w));
        }
        acc
    }

    pub fn evaluate(&self, word: &BraidWord) -> LaurentVZ {
        self.trace(&TraceElement::from_word(word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        let w: Perm = vec![2, 0, 3, 1];
        let rw = reduced_word(&w);
        let mut x: Perm = (0..4).collect();
        for g in &rw {
            assert!(x[*g] < x[*g + 1], "each step lengthens");
            x.swap(*g, *g + 1);
        }
        assert_eq!(x, w);
        assert_eq!(rw.len(), 3);
    }

    #[test]
    fn quadratic_relation() {
        let e = TraceElement::identity(2)
            .mul_generator(0, Sign::Pos)
            .mul_generator(0, Sign::Pos);
        assert_eq!(e.comb.len(), 2);
        assert_eq!(e.comb[&vec![0u8, 1]], LaurentVZ::one());
        assert_eq!(e.comb[&vec![1u8, 0]], LaurentVZ::z_pow(1));
        let back = e.mul_generator(0, Sign::Neg).mul_generator(0, Sign::Neg);
        assert_eq!(back, TraceElement::identity(2));
    }

    #[test]
    fn identity_traces() {
        let ev = TraceEvaluator::new();
        for n in 1..5 {
            let id: Perm = (0..n as u8).collect();
            assert_eq!(
                ev.trace_basis(&id),
                LaurentVZ::delta().pow(n as i64).unwrap()
            );
        }
    }
}
