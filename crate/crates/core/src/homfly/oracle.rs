//! Naive recursive skein evaluation of `P`, used as an independent oracle.
//!
//! Works on signed generator words (`+k` for `σ_k`, `−k` for `σ_k⁻¹`):
//!
//! 1. a negative letter is flipped, `P(ασ⁻¹γ) = P(ασγ) − z P(αγ)`;
//! 2. a positive word longer than its permutation is rewritten by braid moves
//!    until a square shows up, then `P(ασ²γ) = P(αγ) + z P(ασγ)`;
//! 3. a positive permutation braid without `σ_{n−1}` loses its last strand
//!    for a factor `(1 − v²)/z`;
//! 4. otherwise braid moves bring `σ_{n−1}` down to a single occurrence,
//!    which is rotated to the end and removed.
//!
//! Every step either lowers `(negative letters, length)` or the strand
//! count, so the recursion is finite; a step counter bounds the work.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentVZ;

pub const DEFAULT_BUDGET: usize = 2_000_000;

/// The memo is dropped once it holds this many entries.
const MEMO_CAP: usize = 400_000;

type Word = Vec<i8>;

pub struct SkeinOracle {
    budget: usize,
    steps: usize,
    memo: HashMap<(usize, Word), LaurentVZ>,
}

impl SkeinOracle {
    pub fn new(budget: usize) -> Self {
        Self {
            budget,
            steps: 0,
            memo: HashMap::new(),
        }
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Evaluates one word; the budget applies to each call separately, the
    /// memo is kept across calls.
    pub fn evaluate(&mut self, word: &BraidWord) -> Result<LaurentVZ> {
        self.steps = 0;
        if self.memo.len() > MEMO_CAP {
            self.memo.clear();
        }
        let w: Word = word
            .signed_generators()
            .into_iter()
            .map(|g| g as i8)
            .collect();
        self.eval(word.n(), w)
    }

    fn tick(&mut self, amount: usize) -> Result<()> {
        self.steps += amount;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn eval(&mut self, n: usize, w: Word) -> Result<LaurentVZ> {
        let key = (n, least_rotation(&w));
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        self.tick(1)?;
        let v = self.eval_uncached(n, key.1.clone())?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn eval_uncached(&mut self, n: usize, w: Word) -> Result<LaurentVZ> {
        if w.is_empty() {
            return LaurentVZ::delta().pow(n as i64);
        }
        let z = LaurentVZ::z_pow(1);

        if let Some(p) = w.iter().position(|&g| g < 0) {
            let mut flipped = w.clone();
            flipped[p] = -flipped[p];
            let mut removed = w.clone();
            removed.remove(p);
            let a = self.eval(n, flipped)?;
            let b = self.eval(n, removed)?;
            return Ok(&a - &(&z * &b));
        }

        if let Some((prefix_len, g)) = first_non_reduced_prefix(n, &w) {
            let moved = self.bfs(&w[..prefix_len], |cand| cand.last() == Some(&g))?;
            // moved ends in g, and g follows it: a square at the seam.
            let mut base = moved[..moved.len() - 1].to_vec();
            base.extend_from_slice(&w[prefix_len + 1..]);
            let mut single = moved.clone();
            single.extend_from_slice(&w[prefix_len + 1..]);
            let a = self.eval(n, base)?;
            let b = self.eval(n, single)?;
            return Ok(&a + &(&z * &b));
        }

        let top = (n - 1) as i8;
        let count = |x: &Word| x.iter().filter(|&&g| g == top).count();
        if count(&w) == 0 {
            let rest = self.eval(n - 1, w)?;
            return Ok(&LaurentVZ::delta() * &rest);
        }
        let w = if count(&w) == 1 {
            w
        } else {
            self.bfs(&w, |cand| count(cand) == 1)?
        };
        let p = w.iter().position(|&g| g == top).expect("one occurrence");
        let mut rotated = w[p + 1..].to_vec();
        rotated.extend_from_slice(&w[..p]);
        self.eval(n - 1, rotated)
    }

    /// Breadth-first search over positive braid moves for a word satisfying `goal`.
    fn bfs(&mut self, start: &[i8], goal: impl Fn(&Word) -> bool) -> Result<Word> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.to_vec());
        queue.push_back(start.to_vec());
        while let Some(cur) = queue.pop_front() {
            self.tick(1)?;
            if goal(&cur) {
                return Ok(cur);
            }
            for next in braid_moves(&cur) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Err(Error::Internal(
            "braid-move search exhausted without reaching its goal".into(),
        ))
    }
}

/// Neighbours of a positive word under `σ_iσ_j = σ_jσ_i` (|i−j| ≥ 2) and
/// `σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}`.
fn braid_moves(w: &[i8]) -> Vec<Word> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        if (a - b).abs() >= 2 {
            let mut x = w.to_vec();
            x.swap(p, p + 1);
            out.push(x);
        }
        if p + 2 < w.len() && w[p + 2] == a && (a - b).abs() == 1 {
            let mut x = w.to_vec();
            x[p] = b;
            x[p + 1] = a;
            x[p + 2] = b;
            out.push(x);
        }
    }
    out
}

/// For a positive word, the first index `p` such that `w[..p]` is reduced but
/// `w[..=p]` is not, together with the generator `w[p]`.
fn first_non_reduced_prefix(n: usize, w: &[i8]) -> Option<(usize, i8)> {
    // Track the permutation as positions of strands; a letter σ_k crosses the
    // strands at positions k, k+1, and the prefix stops being reduced when
    // those two strands have crossed before (their relative order is reversed).
    let mut at_pos: Vec<usize> = (0..n).collect();
    for (p, &g) in w.iter().enumerate() {
        let k = g as usize - 1;
        if at_pos[k] > at_pos[k + 1] {
            return Some((p, g));
        }
        at_pos.swap(k, k + 1);
    }
    None
}

fn least_rotation(w: &[i8]) -> Word {
    if w.is_empty() {
        return Vec::new();
    }
    (0..w.len())
        .map(|r| {
            let mut x = w[r..].to_vec();
            x.extend_from_slice(&w[..r]);
            x
        })
        .min()
        .expect("non-empty")
}

pub fn skein_oracle(word: &BraidWord, budget: usize) -> Result<LaurentVZ> {
    SkeinOracle::new(budget).evaluate(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn two_strand_base_cases() {
        let d = LaurentVZ::delta();
        assert_eq!(skein_oracle(&w("s1", 2), 1000).unwrap(), d);
        assert_eq!(skein_oracle(&w("s1^-1", 2), 1000).unwrap(), d.shift(2, 0));
    }

    #[test]
    fn trefoil_by_hand() {
        // P(σ³) = P(σ) + z P(σ²) and P(σ²) = P(id₂) + z P(σ).
        let d = LaurentVZ::delta();
        let z = LaurentVZ::z_pow(1);
        let p2 = &(&d * &d) + &(&z * &d);
        let p3 = &d + &(&z * &p2);
        assert_eq!(skein_oracle(&w("s1^3", 2), 1000).unwrap(), p3);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            skein_oracle(&w("s1^-3 s2^-3 s1^-2 s2 s1", 3), 5),
            Err(Error::BudgetExceeded(5))
        );
    }

    #[test]
    fn non_reduced_detection() {
        assert_eq!(first_non_reduced_prefix(3, &[1, 2, 1]), None);
        assert_eq!(first_non_reduced_prefix(3, &[1, 2, 1, 2]), Some((3, 2)));
        assert_eq!(first_non_reduced_prefix(2, &[1, 1]), Some((1, 1)));
    }
}
