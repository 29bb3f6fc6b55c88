//! Shortest band-generator representatives of closed 3-braids.
//!
//! Search space: cyclic words in `a_{1,2}, a_{2,3}, a_{1,3}` and inverses,
//! connected by `a_{1,2}a_{1,3} = a_{2,3}a_{1,2} = a_{1,3}a_{2,3}` (and the
//! inverted relations), cancellation and insertion of `x x⁻¹`, up to a fixed
//! maximum length. All moves are reversible, so a finished search explores a
//! whole connected class and its result is shared by every member.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::braid::{BraidLetter, BraidWord, LetterKind, Sign};
use crate::error::{Error, Result};

/// Letter code: `±1` for `a_{1,2}`, `±2` for `a_{2,3}`, `±3` for `a_{1,3}`.
type Word = Vec<i8>;

const A12: i8 = 1;
const A23: i8 = 2;
const A13: i8 = 3;

const POS_CLASS: [[i8; 2]; 3] = [[A12, A13], [A23, A12], [A13, A23]];
const NEG_CLASS: [[i8; 2]; 3] = [[-A13, -A12], [-A12, -A23], [-A23, -A13]];

pub const DEFAULT_SLACK: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandMinimum {
    pub word: BraidWord,
    /// The bounded search ran to completion within its budget.
    pub certified: bool,
    pub explored: usize,
}

fn encode(word: &BraidWord) -> Result<Word> {
    if word.n() != 3 {
        return Err(Error::StrandCount {
            expected: 3,
            got: word.n(),
        });
    }
    Ok(word
        .letters()
        .iter()
        .map(|l| {
            let g = match (l.i, l.j) {
                (1, 2) => A12,
                (2, 3) => A23,
                _ => A13,
            };
            if l.sign == Sign::Pos {
                g
            } else {
                -g
            }
        })
        .collect())
}

fn decode(w: &[i8]) -> BraidWord {
    let letters = w
        .iter()
        .map(|&g| {
            let (i, j) = match g.abs() {
                A12 => (1, 2),
                A23 => (2, 3),
                _ => (1, 3),
            };
            let sign = if g > 0 { Sign::Pos } else { Sign::Neg };
            BraidLetter {
                kind: LetterKind::Band,
                i,
                j,
                sign,
            }
        })
        .collect();
    BraidWord::new(3, letters).expect("valid 3-strand band letters")
}

fn canonical(w: &[i8]) -> Word {
    (0..w.len().max(1))
        .map(|r| {
            let mut x = w[r.min(w.len())..].to_vec();
            x.extend_from_slice(&w[..r.min(w.len())]);
            x
        })
        .min()
        .unwrap_or_default()
}

fn neighbours(w: &[i8], max_len: usize) -> Vec<Word> {
    let len = w.len();
    let mut out = Vec::new();
    for r in 0..len.max(1) {
        let mut x = w[r.min(len)..].to_vec();
        x.extend_from_slice(&w[..r.min(len)]);
        if len >= 2 {
            let pair = [x[0], x[1]];
            for class in [&POS_CLASS, &NEG_CLASS] {
                if class.contains(&pair) {
                    for alt in class.iter().filter(|p| **p != pair) {
                        let mut y = x.clone();
                        y[0] = alt[0];
                        y[1] = alt[1];
                        out.push(canonical(&y));
                    }
                }
            }
            if x[0] == -x[1] {
                out.push(canonical(&x[2..]));
            }
        }
        if len + 2 <= max_len {
            for g in [A12, A23, A13, -A12, -A23, -A13] {
                let mut y = vec![g, -g];
                y.extend_from_slice(&x);
                out.push(canonical(&y));
            }
        }
    }
    out
}

fn better(a: &Word, b: &Word) -> bool {
    (a.len(), a) < (b.len(), b)
}

/// Searches with an absolute length cap and remembers finished classes.
pub struct BandMinimizer {
    max_len: usize,
    cache: HashMap<Word, Word>,
}

impl BandMinimizer {
    pub fn new(max_len: usize) -> Self {
        Self {
            max_len,
            cache: HashMap::new(),
        }
    }

    pub fn minimize(&mut self, word: &BraidWord, budget: usize) -> Result<BandMinimum> {
        let start = canonical(&encode(word)?);
        if let Some(best) = self.cache.get(&start) {
            return Ok(BandMinimum {
                word: decode(best),
                certified: true,
                explored: 0,
            });
        }
        let cap = self.max_len.max(start.len());
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut best = start.clone();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut explored = 0;
        while let Some(cur) = queue.pop_front() {
            if explored >= budget {
                return Ok(BandMinimum {
                    word: decode(&best),
                    certified: false,
                    explored,
                });
            }
            explored += 1;
            if better(&cur, &best) {
                best = cur.clone();
            }
            for next in neighbours(&cur, cap) {
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        if cap == self.max_len {
            for s in seen {
                self.cache.insert(s, best.clone());
            }
        }
        Ok(BandMinimum {
            word: decode(&best),
            certified: true,
            explored,
        })
    }
}

/// Shortest representative found with room for `DEFAULT_SLACK` extra letters.
pub fn band_minimize(word: &BraidWord, budget: usize) -> Result<BandMinimum> {
    let mut m = BandMinimizer::new(word.len() + DEFAULT_SLACK);
    m.minimize(word, budget)
}
