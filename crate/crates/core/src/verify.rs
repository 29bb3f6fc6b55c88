//! Enumeration sweeps that check the theorems on concrete words.
//!
//! Every suite returns its failures sorted, so a sweep's output does not
//! depend on how the work was split across threads.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bennequin::{
    bennequin_number, cable_pair, relative_bennequin_all, relative_bennequin_subset, CohClass,
};
use crate::braid::BraidWord;
use crate::diagram::closure_profile;
use crate::error::{Error, Result};
use crate::homfly::{
    homfly_p, homogeneous_top_term, kanda_factor, kanda_gap, kanda_word, max_bennequin_certificate,
    mfw_check, BandMinimizer, CoeffSigns, SkeinOracle,
};
use crate::poly::LaurentVZ;

/// Largest strand count for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_STRANDS: usize = 4;
/// Largest strand count for sampled sweeps.
pub const MAX_SAMPLED_STRANDS: usize = 5;
/// Largest number of words a single corpus may hold.
pub const MAX_CORPUS: usize = 2_000_000;
pub const MAX_SAMPLED_LEN: usize = 16;
pub const MAX_KANDA: usize = 12;
pub const MAX_MORTON_LEN: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: String,
    pub word: String,
    pub n: usize,
    pub class: Option<Vec<i64>>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: n={} word=`{}`", self.check, self.n, self.word)?;
        if let Some(c) = &self.class {
            write!(f, " class={c:?}")?;
        }
        write!(f, " lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, checked: usize, mut failures: Vec<Failure>) -> Self {
        failures.sort();
        failures.dedup();
        Self {
            suite: suite.to_string(),
            checked,
            failures,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn failure(
    check: &str,
    word: &BraidWord,
    lhs: impl fmt::Display,
    rhs: impl fmt::Display,
) -> Failure {
    Failure {
        check: check.to_string(),
        word: word.to_string(),
        n: word.n(),
        class: None,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(
    out: &mut Vec<Failure>,
    check: &str,
    word: &BraidWord,
    lhs: T,
    rhs: T,
) {
    if lhs != rhs {
        out.push(failure(check, word, lhs, rhs));
    }
}

/// Number of standard-generator words on `n` strands of length at most `max_len`.
pub fn corpus_size(n: usize, max_len: usize) -> usize {
    let letters = 2 * n.saturating_sub(1);
    if letters == 0 {
        return 1;
    }
    (0..=max_len).fold(0usize, |acc, l| {
        acc.saturating_add(letters.saturating_pow(l as u32))
    })
}

/// All words in `σ_i^{±1}` on `1..=max_n` strands of length at most `max_len`.
pub fn exhaustive_words(max_n: usize, max_len: usize) -> Result<Vec<BraidWord>> {
    if max_n > MAX_EXHAUSTIVE_STRANDS {
        return Err(Error::Ceiling(format!(
            "exhaustive sweeps stop at {MAX_EXHAUSTIVE_STRANDS} strands, asked for {max_n}"
        )));
    }
    let total: usize = (1..=max_n).map(|n| corpus_size(n, max_len)).sum();
    if total > MAX_CORPUS {
        return Err(Error::Ceiling(format!(
            "{total} words exceed the corpus limit of {MAX_CORPUS}"
        )));
    }
    let mut out = Vec::with_capacity(total);
    for n in 1..=max_n {
        let alphabet: Vec<i64> = (1..n as i64).flat_map(|g| [g, -g]).collect();
        let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
        for len in 0..=max_len {
            for gens in &layer {
                out.push(BraidWord::from_signed(n, gens)?);
            }
            if len == max_len || alphabet.is_empty() {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&g| {
                        let mut x = w.clone();
                        x.push(g);
                        x
                    })
                })
                .collect();
        }
    }
    Ok(out)
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let gens: Vec<i64> = if n < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i64);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect()
    };
    BraidWord::from_signed(n.max(1), &gens).expect("generators in range")
}

/// `samples` seeded random words on exactly `n` strands.
pub fn sampled_words(
    n: usize,
    max_len: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<BraidWord>> {
    check_sampled(n, max_len, samples)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| random_word(&mut rng, n, max_len))
        .collect())
}

fn check_sampled(n: usize, max_len: usize, samples: usize) -> Result<()> {
    if n > MAX_SAMPLED_STRANDS {
        return Err(Error::Ceiling(format!(
            "sampled sweeps stop at {MAX_SAMPLED_STRANDS} strands, asked for {n}"
        )));
    }
    if max_len > MAX_SAMPLED_LEN {
        return Err(Error::Ceiling(format!(
            "sampled words are at most {MAX_SAMPLED_LEN} letters long, asked for {max_len}"
        )));
    }
    if samples > MAX_CORPUS {
        return Err(Error::Ceiling(format!(
            "{samples} samples exceed {MAX_CORPUS}"
        )));
    }
    Ok(())
}

fn append(word: &BraidWord, gens: &[i64]) -> BraidWord {
    word.concat(&BraidWord::from_signed(word.n(), gens).expect("generator in range"))
}

/// The defining relations of `P` checked around one word.
fn relation_failures(word: &BraidWord) -> Vec<Failure> {
    let mut out = Vec::new();
    let n = word.n();
    let z = LaurentVZ::z_pow(1);
    let v2 = LaurentVZ::v_pow(2);
    let p = homfly_p(word);
    for i in 1..n as i64 {
        let lhs = &homfly_p(&append(word, &[i])) - &homfly_p(&append(word, &[-i]));
        expect_eq(&mut out, &format!("skein at s{i}"), word, lhs, &z * &p);

        let g = BraidWord::from_signed(n, &[i]).expect("in range");
        let conj = g.concat(word).concat(&g.inverse());
        expect_eq(
            &mut out,
            &format!("conjugation by s{i}"),
            word,
            homfly_p(&conj),
            p.clone(),
        );
    }
    let wider = word.with_strands(n + 1).expect("more strands");
    let top = n as i64;
    expect_eq(
        &mut out,
        "positive stabilization",
        word,
        homfly_p(&append(&wider, &[top])),
        p.clone(),
    );
    let neg = homfly_p(&append(&wider, &[-top]));
    expect_eq(
        &mut out,
        "negative stabilization",
        word,
        neg.clone(),
        &v2 * &p,
    );
    // Rebuild the negative stabilization from the skein relation and a free strand.
    let via_skein = &homfly_p(&append(&wider, &[top])) - &(&z * &homfly_p(&wider));
    expect_eq(
        &mut out,
        "negative stabilization via skein",
        word,
        via_skein,
        neg,
    );
    expect_eq(
        &mut out,
        "free strand",
        word,
        homfly_p(&wider),
        &LaurentVZ::delta() * &p,
    );
    out
}

pub fn relations_suite(words: &[BraidWord]) -> SuiteReport {
    let failures = words.par_iter().flat_map_iter(relation_failures).collect();
    SuiteReport::new("relations", words.len(), failures)
}

/// Trace evaluator against the skein oracle.
pub fn skein_suite(words: &[BraidWord], budget: usize) -> Result<SuiteReport> {
    let results: Vec<Result<Option<Failure>>> = words
        .par_iter()
        .map_init(
            || SkeinOracle::new(budget),
            |oracle, w| {
                let o = oracle.evaluate(w)?;
                let p = homfly_p(w);
                Ok((o != p).then(|| failure("trace = skein", w, p, o)))
            },
        )
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(SuiteReport::new("skein", words.len(), failures))
}

fn mfw_failures(word: &BraidWord) -> Vec<Failure> {
    let mut out = Vec::new();
    match mfw_check(word) {
        Ok(c) if c.holds => {}
        Ok(c) => out.push(failure("beta_t + 1 <= e", word, c.beta_t + 1, c.e)),
        Err(e) => out.push(failure("mfw evaluation", word, e, "")),
    }
    let p = homfly_p(word);
    match p.min_v_degree() {
        Ok(e_p) if e_p < 0 || e_p % 2 != 0 => out.push(failure("e_P even and >= 0", word, e_p, 0)),
        Ok(_) => {}
        Err(e) => out.push(failure("P nonzero", word, e, "")),
    }
    if p.terms().any(|(&(v, _), _)| v % 2 != 0) {
        out.push(failure("only even powers of v", word, &p, ""));
    }
    if word.n() == 3 && p.terms().any(|(&(v, _), _)| v > 6) {
        out.push(failure("v-degree at most 6 on 3 strands", word, &p, ""));
    }
    out
}

pub fn mfw_suite(words: &[BraidWord]) -> SuiteReport {
    let failures = words.par_iter().flat_map_iter(mfw_failures).collect();
    SuiteReport::new("mfw", words.len(), failures)
}

pub fn homogeneous_suite(words: &[BraidWord]) -> SuiteReport {
    let homogeneous: Vec<&BraidWord> = words
        .iter()
        .filter(|w| w.generator_profile().homogeneous)
        .collect();
    let failures = homogeneous
        .par_iter()
        .filter_map(|w| match homogeneous_top_term(w) {
            Ok(t) if t.matches => None,
            Ok(t) => Some(failure(
                &format!("top z^{} coefficient", t.z_degree),
                w,
                t.observed,
                t.predicted,
            )),
            Err(e) => Some(failure("top term evaluation", w, e, "")),
        })
        .collect();
    SuiteReport::new("homogeneous", homogeneous.len(), failures)
}

/// One linearity check: the three expressions for `β_t(L″, L′)` agree.
fn linearity_failures(word: &BraidWord, class: &CohClass) -> Result<Vec<Failure>> {
    let rel = relative_bennequin_all(word)?;
    let expected: i64 = rel.iter().zip(&class.0).map(|(b, c)| b * c).sum();
    let pair = cable_pair(word, class)?;
    let direct = relative_bennequin_subset(&pair.lprime, &pair.subset)?;

    let lp = closure_profile(&pair.lprime);
    let mut inside = vec![false; lp.r];
    for &id in &pair.subset {
        inside[id - 1] = true;
    }
    let mut cross = 0;
    for i in 0..lp.r {
        for j in 0..lp.r {
            if inside[i] && !inside[j] {
                cross += lp.cr[i][j];
            }
        }
    }
    let split = bennequin_number(&pair.lprime, Some(&pair.subset))? + cross / 2;

    let mut out = Vec::new();
    for (check, got) in [
        ("direct beta_t(L'', L')", direct),
        ("beta_t(L'') + cr/2", split),
    ] {
        if got != expected || cross % 2 != 0 {
            let mut f = failure(check, word, got, expected);
            f.class = Some(class.0.clone());
            out.push(f);
        }
    }
    Ok(out)
}

/// Seeded random `(word, class)` pairs.
pub fn linearity_cases(
    max_n: usize,
    max_len: usize,
    max_c: i64,
    samples: usize,
    seed: u64,
) -> Result<Vec<(BraidWord, CohClass)>> {
    check_sampled(max_n, max_len, samples)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let n = rng.gen_range(1..=max_n.max(1));
        let word = random_word(&mut rng, n, max_len);
        let r = closure_profile(&word).r;
        let class = CohClass((0..r).map(|_| rng.gen_range(0..=max_c)).collect());
        if !class.is_zero() {
            out.push((word, class));
        }
    }
    Ok(out)
}

pub fn linearity_suite(cases: &[(BraidWord, CohClass)]) -> Result<SuiteReport> {
    let results: Vec<Result<Vec<Failure>>> = cases
        .par_iter()
        .map(|(w, c)| linearity_failures(w, c))
        .collect();
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(SuiteReport::new("linearity", cases.len(), failures))
}

/// All 3-strand words in the band letters `a_{1,2}, a_{2,3}, a_{1,3}` and inverses.
pub fn band_words_3(max_len: usize) -> Result<Vec<BraidWord>> {
    let count = (0..=max_len)
        .map(|l| 6usize.saturating_pow(l as u32))
        .sum::<usize>();
    if count > MAX_CORPUS {
        return Err(Error::Ceiling(format!(
            "{count} band words exceed {MAX_CORPUS}"
        )));
    }
    let tokens = ["a1,2", "a2,3", "a1,3", "a1,2^-1", "a2,3^-1", "a1,3^-1"];
    let mut out = Vec::with_capacity(count);
    let mut layer = vec![String::new()];
    for len in 0..=max_len {
        for t in &layer {
            out.push(BraidWord::parse(t, 3)?);
        }
        if len == max_len {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| tokens.iter().map(move |t| format!("{w} {t}")))
            .collect();
    }
    Ok(out)
}

/// `e_P ≤ 2·neg_b` on the shortest representative found for every band word.
pub fn morton3_suite(max_len: usize, budget: usize) -> Result<SuiteReport> {
    if max_len > MAX_MORTON_LEN {
        return Err(Error::Ceiling(format!(
            "3-braid sweeps stop at length {MAX_MORTON_LEN}, asked for {max_len}"
        )));
    }
    let words = band_words_3(max_len)?;
    let mut minimizer = BandMinimizer::new(max_len + 2);
    let mut failures = Vec::new();
    let mut certified = 0;
    for w in &words {
        let m = minimizer.minimize(w, budget)?;
        if !m.certified {
            continue;
        }
        certified += 1;
        let e_p = homfly_p(w).min_v_degree()? as i64;
        let neg_b = m.word.generator_profile().neg_b as i64;
        if e_p > 2 * neg_b {
            let mut f = failure("e_P <= 2 neg_b", w, e_p, 2 * neg_b);
            f.rhs = format!("{} (minimal `{}`)", 2 * neg_b, m.word);
            failures.push(f);
        }
    }
    let mut report = SuiteReport::new("morton3", words.len(), failures);
    report.notes.push(format!(
        "{certified} of {} words certified minimal",
        words.len()
    ));
    Ok(report)
}

/// Structure of `P(0,z)(σ₂^{−l}σ₁^k)` for the given `k` and `1 ≤ l ≤ max_l`.
pub fn kanda_suite(ks: &[usize], max_l: usize) -> Result<SuiteReport> {
    if max_l > MAX_KANDA || ks.iter().any(|&k| k > MAX_KANDA) {
        return Err(Error::Ceiling(format!(
            "Kanda parameters stop at {MAX_KANDA}"
        )));
    }
    let mut failures = Vec::new();
    let mut report_notes = Vec::new();
    let mut checked = 0;
    for &k in ks {
        for l in 1..=max_l {
            checked += 1;
            let word = kanda_word(l, k);
            let f = kanda_factor(l, k)?;
            let signs = CoeffSigns::of(&f);
            let expected = match l {
                1 => CoeffSigns::Zero,
                _ if l % 2 == 0 => CoeffSigns::AllPositive,
                _ => CoeffSigns::AllNegative,
            };
            if signs != expected {
                failures.push(failure(
                    &format!("sign pattern of f_{l}"),
                    &word,
                    format!("{signs:?}"),
                    format!("{expected:?}"),
                ));
            }
            if l == 2 && f != LaurentVZ::z_pow(-1) {
                failures.push(failure("f_2 = 1/z", &word, &f, "1/z"));
            }
            let cert = max_bennequin_certificate(&word)?;
            if cert.certified != (l >= 2) {
                failures.push(failure("certificate", &word, cert.certified, l >= 2));
            }
            report_notes.push(format!("k={k} l={l} f={f}"));
        }
        if k <= max_l {
            report_notes.push(format!("k={k} gap={}", kanda_gap(k)));
        }
    }
    let mut report = SuiteReport::new("kanda", checked, failures);
    report.notes = report_notes;
    Ok(report)
}
