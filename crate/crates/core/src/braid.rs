//! Braid words in standard generators `σ_i` and band generators `a_{i,j}`.
//!
//! Strand indices are 1-based everywhere in the public surface. A standard
//! letter `σ_i` is the band `a_{i,i+1}`; band letters with `j > i + 1`
//! expand to `σ_i⁻¹ ⋯ σ_{j-2}⁻¹ σ_{j-1} σ_{j-2} ⋯ σ_i`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LetterKind {
    Standard,
    Band,
}

/// One generator letter. For standard letters `j == i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidLetter {
    pub kind: LetterKind,
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn std(i: usize, sign: Sign) -> Self {
        Self {
            kind: LetterKind::Standard,
            i,
            j: i + 1,
            sign,
        }
    }

    pub fn band(i: usize, j: usize, sign: Sign) -> Self {
        Self {
            kind: LetterKind::Band,
            i,
            j,
            sign,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            sign: self.sign.flip(),
            ..self
        }
    }

    /// Standard generator indices `(k, sign)` of `σ_k^{±1}` making up this letter.
    fn expand_into(&self, out: &mut Vec<(usize, Sign)>) {
        let (i, j) = (self.i, self.j);
        match self.sign {
            Sign::Pos => {
                out.extend((i..j - 1).map(|k| (k, Sign::Neg)));
                out.push((j - 1, Sign::Pos));
                out.extend((i..j - 1).rev().map(|k| (k, Sign::Pos)));
            }
            Sign::Neg => {
                out.extend((i..j - 1).map(|k| (k, Sign::Neg)));
                out.push((j - 1, Sign::Neg));
                out.extend((i..j - 1).rev().map(|k| (k, Sign::Pos)));
            }
        }
    }

    fn token(&self) -> String {
        match self.kind {
            LetterKind::Standard => format!("s{}", self.i),
            LetterKind::Band => format!("a{},{}", self.i, self.j),
        }
    }
}

/// A word in `B_n`. The empty word is the identity `id_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            let ok = match l.kind {
                LetterKind::Standard => l.i >= 1 && l.j == l.i + 1 && l.i < n,
                LetterKind::Band => l.i >= 1 && l.i < l.j && l.j <= n,
            };
            if !ok {
                if l.kind == LetterKind::Band && l.i >= l.j {
                    return Err(Error::BandOrder(l.token()));
                }
                return Err(out_of_range(&l.token(), n));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Builds a standard word from signed 1-based generator indices, e.g.
    /// `[1, 1, -2]` is `σ₁² σ₂⁻¹`.
    pub fn from_signed(n: usize, gens: &[i64]) -> Result<Self> {
        let letters = gens
            .iter()
            .map(|&g| {
                if g == 0 {
                    return Err(Error::MalformedToken("0".into()));
                }
                let sign = if g > 0 { Sign::Pos } else { Sign::Neg };
                Ok(BraidLetter::std(g.unsigned_abs() as usize, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    /// Parses whitespace-separated tokens `s<i>[^k]` and `a<i>,<j>[^k]`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStrands);
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let k: i64 = e
                        .parse()
                        .map_err(|_| Error::MalformedToken(tok.to_string()))?;
                    (b, k)
                }
                None => (tok, 1),
            };
            let letter = if let Some(rest) = base.strip_prefix('s') {
                let i = parse_index(rest, tok)?;
                if i == 0 || i >= n {
                    return Err(out_of_range(tok, n));
                }
                BraidLetter::std(i, Sign::Pos)
            } else if let Some(rest) = base.strip_prefix('a') {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::MalformedToken(tok.to_string()))?;
                let (i, j) = (parse_index(a, tok)?, parse_index(b, tok)?);
                if i >= j {
                    return Err(Error::BandOrder(tok.to_string()));
                }
                if i == 0 || j > n {
                    return Err(out_of_range(tok, n));
                }
                BraidLetter::band(i, j, Sign::Pos)
            } else {
                return Err(Error::MalformedToken(tok.to_string()));
            };
            let l = if exp < 0 { letter.inverse() } else { letter };
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// Word length `|β|` counted in the letters as written.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_band_letters(&self) -> bool {
        self.letters
            .iter()
            .any(|l| l.kind == LetterKind::Band && l.j > l.i + 1)
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation; the result lives on the larger strand count.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            n: self.n.max(other.n),
            letters,
        }
    }

    /// The same word viewed in `B_m` for `m ≥ n`.
    pub fn with_strands(&self, m: usize) -> Result<Self> {
        Self::new(m, self.letters.clone())
    }

    /// Signed standard letters `(k, sign)` after expanding every band.
    pub fn standard_letters(&self) -> Vec<(usize, Sign)> {
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            l.expand_into(&mut out);
        }
        out
    }

    /// Replaces every band letter by its standard expansion.
    pub fn band_to_standard(&self) -> Self {
        Self {
            n: self.n,
            letters: self
                .standard_letters()
                .into_iter()
                .map(|(k, s)| BraidLetter::std(k, s))
                .collect(),
        }
    }

    /// Signed 1-based standard generators, e.g. `σ₁σ₂⁻¹ → [1, -2]`.
    pub fn signed_generators(&self) -> Vec<i64> {
        self.standard_letters()
            .into_iter()
            .map(|(k, s)| k as i64 * s.value())
            .collect()
    }

    /// Sum of letter exponents after expansion.
    pub fn exponent_sum(&self) -> i64 {
        self.standard_letters().iter().map(|(_, s)| s.value()).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut at_pos: Vec<usize> = (0..self.n).collect();
        for (k, _) in self.standard_letters() {
            at_pos.swap(k - 1, k);
        }
        // at_pos[q] is the strand arriving at bottom position q.
        let mut image = vec![0; self.n];
        for (q, &s) in at_pos.iter().enumerate() {
            image[s] = q;
        }
        Permutation(image)
    }

    pub fn generator_profile(&self) -> GeneratorProfile {
        let mut usage = vec![GenUsage::Absent; self.n.saturating_sub(1)];
        let (mut pos, mut neg) = (0, 0);
        for (k, s) in self.standard_letters() {
            match s {
                Sign::Pos => pos += 1,
                Sign::Neg => neg += 1,
            }
            usage[k - 1] = usage[k - 1].with(s);
        }
        let pos_b = self.letters.iter().filter(|l| l.sign == Sign::Pos).count();
        let neg_b = self.letters.len() - pos_b;
        let n_p = usage.iter().filter(|u| **u == GenUsage::Positive).count();
        let n_n = usage.iter().filter(|u| **u == GenUsage::Negative).count();
        let homogeneous = usage
            .iter()
            .all(|u| matches!(u, GenUsage::Positive | GenUsage::Negative));
        GeneratorProfile {
            pos,
            neg,
            pos_b,
            neg_b,
            usage,
            homogeneous,
            n_n,
            n_p,
        }
    }
}

fn parse_index(s: &str, tok: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::MalformedToken(tok.to_string()))
}

fn out_of_range(tok: &str, n: usize) -> Error {
    let allowed = if n <= 1 {
        "no generators".to_string()
    } else {
        format!("s1..s{} and a<i>,<j> with 1 <= i < j <= {n}", n - 1)
    };
    Error::IndexOutOfRange {
        token: tok.to_string(),
        n,
        allowed,
    }
}

impl fmt::Display for BraidWord {
    /// Prints runs of equal letters as `tok^k`; the identity prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut idx = 0;
        while idx < self.letters.len() {
            let l = self.letters[idx];
            let mut run = 1;
            while idx + run < self.letters.len() && self.letters[idx + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let k = run as i64 * l.sign.value();
            if k == 1 {
                write!(f, "{}", l.token())?;
            } else {
                write!(f, "{}^{}", l.token(), k)?;
            }
            idx += run;
        }
        Ok(())
    }
}

/// How a standard generator occurs in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenUsage {
    Absent,
    Positive,
    Negative,
    Mixed,
}

impl GenUsage {
    fn with(self, s: Sign) -> Self {
        match (self, s) {
            (GenUsage::Absent, Sign::Pos) | (GenUsage::Positive, Sign::Pos) => GenUsage::Positive,
            (GenUsage::Absent, Sign::Neg) | (GenUsage::Negative, Sign::Neg) => GenUsage::Negative,
            _ => GenUsage::Mixed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorProfile {
    /// Positive standard letters after band expansion.
    pub pos: usize,
    pub neg: usize,
    /// Positive letters as written, each standard letter counting as a band.
    pub pos_b: usize,
    pub neg_b: usize,
    /// Usage of `σ_1 … σ_{n-1}`.
    pub usage: Vec<GenUsage>,
    pub homogeneous: bool,
    pub n_n: usize,
    pub n_p: usize,
}

/// Permutation of strand positions, 0-based internally: the strand starting
/// at top position `p` ends at bottom position `image(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn image(&self, p: usize) -> usize {
        self.0[p]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles ordered by smallest element, each starting from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = self.0[p];
            }
            out.push(cyc);
        }
        out
    }

    /// 1-based images, for display and serialization.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = BraidWord::parse("s1^4", 2).unwrap();
        assert_eq!(w.len(), 4);
        assert!(w
            .letters()
            .iter()
            .all(|l| *l == BraidLetter::std(1, Sign::Pos)));

        let w = BraidWord::parse("a1,3 s2^-1", 3).unwrap();
        assert_eq!(
            w.letters(),
            &[
                BraidLetter::band(1, 3, Sign::Pos),
                BraidLetter::std(2, Sign::Neg)
            ]
        );

        assert!(matches!(
            BraidWord::parse("s3", 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse("a3,1", 3),
            Err(Error::BandOrder(_))
        ));
        assert!(matches!(
            BraidWord::parse("a2,2", 3),
            Err(Error::BandOrder(_))
        ));
        assert!(matches!(
            BraidWord::parse("x1", 3),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("s1^", 3),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("s0", 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(BraidWord::parse("s1^0", 2).unwrap().is_empty());
        assert!(BraidWord::parse("", 0).is_err());
    }

    #[test]
    fn band_expansion() {
        let a12 = BraidWord::parse("a1,2", 2).unwrap().band_to_standard();
        assert_eq!(a12.signed_generators(), vec![1]);
        let a13 = BraidWord::parse("a1,3", 3).unwrap().band_to_standard();
        assert_eq!(a13.signed_generators(), vec![-1, 2, 1]);
        let a24 = BraidWord::parse("a2,4", 4).unwrap().band_to_standard();
        assert_eq!(a24.signed_generators(), vec![-2, 3, 2]);
        let a14 = BraidWord::parse("a1,4^-1", 4).unwrap();
        assert_eq!(a14.signed_generators(), vec![-1, -2, -3, 2, 1]);
    }

    #[test]
    fn permutations() {
        assert!(BraidWord::identity(3).unwrap().permutation().is_identity());
        let t = BraidWord::parse("s1", 2).unwrap().permutation();
        assert_eq!(t.one_based(), vec![2, 1]);
        let c = BraidWord::parse("s1 s2", 3).unwrap().permutation();
        assert_eq!(c.cycles().len(), 1);
        assert_eq!(c.cycles()[0].len(), 3);
    }

    #[test]
    fn profiles() {
        let p = BraidWord::parse("s1^4", 2).unwrap().generator_profile();
        assert_eq!((p.pos, p.neg, p.n_n, p.n_p), (4, 0, 0, 1));
        assert!(p.homogeneous);

        let k = 5;
        let w = BraidWord::parse(&format!("s2^-{k} s1^{k}"), 3).unwrap();
        let p = w.generator_profile();
        assert!(p.homogeneous);
        assert_eq!((p.n_n, p.n_p, p.neg), (1, 1, k));

        let p = BraidWord::parse("s1 s1^-1", 2).unwrap().generator_profile();
        assert!(!p.homogeneous);
        assert_eq!(p.usage, vec![GenUsage::Mixed]);

        let p = BraidWord::parse("a1,3 a2,3^-1", 3)
            .unwrap()
            .generator_profile();
        assert_eq!((p.pos_b, p.neg_b), (1, 1));
        assert!(!p.homogeneous);
        assert!(
            BraidWord::identity(1)
                .unwrap()
                .generator_profile()
                .homogeneous
        );
        assert!(
            !BraidWord::identity(2)
                .unwrap()
                .generator_profile()
                .homogeneous
        );
    }

    #[test]
    fn display_round_trip() {
        let w = BraidWord::parse("s1^3 a1,3^-2 s2 s1^-1", 3).unwrap();
        assert_eq!(w.to_string(), "s1^3 a1,3^-2 s2 s1^-1");
        assert_eq!(BraidWord::parse(&w.to_string(), 3).unwrap(), w);
    }
}
