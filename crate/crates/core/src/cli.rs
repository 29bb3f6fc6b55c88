//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 evaluation budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bennequin::{
    bennequin_number, cable_pair, class_lower_bound, relative_bennequin_all,
    relative_bennequin_subset, scholium_lower_bound, thurston_bracket, CohClass, NormBracket,
};
use crate::braid::BraidWord;
use crate::diagram::{
    band_seifert_chi_minus, band_seifert_euler, closure_profile, linking_matrix,
    punctured_component_euler, seifert_euler,
};
use crate::error::{Error, Result};
use crate::homfly::{
    homfly_p, max_bennequin_certificate, mfw_check, HomflyReport, SkeinOracle, DEFAULT_BUDGET,
};
use crate::poly::{mcmullen_check, LaurentVZ, MultiPoly};
use crate::verify::{
    exhaustive_words, homogeneous_suite, kanda_suite, linearity_cases, linearity_suite, mfw_suite,
    morton3_suite, random_word, relations_suite, sampled_words, skein_suite, SuiteReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_MORTON_BUDGET: usize = 5_000_000;

#[derive(Debug, Parser)]
#[command(name = "braidnorm", version, about = "Invariants of closed braids")]
pub struct RunConfig {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Strand count.
    #[arg(short = 'n', long = "strands")]
    pub n: usize,

    /// Braid word, e.g. "s1^4" or "a1,3 s2^-1".
    #[arg(allow_hyphen_values = true, default_value = "")]
    pub word: String,
}

impl WordArgs {
    fn parse(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.word, self.n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Components, crossing and linking matrices, Euler characteristics, Bennequin numbers.
    Info(WordArgs),
    /// Lower and upper bounds for the Thurston norm of a class.
    Bounds {
        #[command(flatten)]
        word: WordArgs,
        /// Comma-separated non-negative class, one entry per component.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Multivariable Alexander polynomial to compare against.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Braid polynomial P, HOMFLY polynomial H and derived data.
    Homfly {
        #[command(flatten)]
        word: WordArgs,
        /// Evaluate with the recursive skein oracle instead of the trace.
        #[arg(long)]
        oracle: bool,
        /// Step budget for the oracle.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// The cabled diagram for a class.
    Cable {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Alexander norm of a polynomial file at a class.
    Alexnorm {
        #[arg(long)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Check a theorem over an enumerated or sampled family of words.
    Verify(VerifyArgs),
    /// Time the trace evaluator against the skein oracle.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Skein,
    Mfw,
    Homogeneous,
    Linearity,
    Morton3,
    Kanda,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub max_strands: Option<usize>,
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Random samples instead of exhaustive enumeration.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub budget: Option<usize>,
    /// Largest class entry for the linearity sweep.
    #[arg(long, default_value_t = 4)]
    pub max_class: i64,
    /// Values of k for the Kanda family.
    #[arg(long, value_delimiter = ',', default_values_t = [3usize, 5])]
    pub k: Vec<usize>,
    #[arg(long, default_value_t = 6)]
    pub max_l: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// σ₁^k on two strands.
    Power,
    /// (σ₁σ₂)^k on three strands.
    Twist,
    /// Seeded random homogeneous words on three strands.
    Homogeneous,
    /// No words.
    Empty,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub family: Family,
    #[arg(long, default_value_t = 8)]
    pub max_k: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub budget: Option<usize>,
}

/// Runs the CLI on `args` (program name first), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cfg) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub struct Output {
    pub text: String,
    pub code: i32,
}

fn emit(json_mode: bool, value: &Value, text: String) -> Output {
    let text = if json_mode {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    };
    Output {
        text,
        code: EXIT_OK,
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Output> {
    match &cfg.command {
        Command::Info(w) => cmd_info(&w.parse()?, cfg.json),
        Command::Bounds { word, class, poly } => {
            let poly = poly.as_deref().map(read_poly).transpose()?;
            cmd_bounds(
                &word.parse()?,
                &CohClass::parse(class)?,
                poly.as_ref(),
                cfg.json,
            )
        }
        Command::Homfly {
            word,
            oracle,
            budget,
        } => cmd_homfly(
            &word.parse()?,
            *oracle,
            budget.unwrap_or(DEFAULT_BUDGET),
            cfg.json,
        ),
        Command::Cable { word, class } => {
            cmd_cable(&word.parse()?, &CohClass::parse(class)?, cfg.json)
        }
        Command::Alexnorm { poly, class } => {
            let p = read_poly(poly)?;
            let c = CohClass::parse(class)?;
            let norm = p.alexander_norm(&c.0)?;
            Ok(emit(
                cfg.json,
                &json!({ "class": c.0, "alexander_norm": norm }),
                format!("alexander norm at {:?}: {norm}\n", c.0),
            ))
        }
        Command::Verify(v) => cmd_verify(v, cfg.json),
        Command::Bench(b) => cmd_bench(b, cfg.json),
    }
}

fn read_poly(path: &str) -> Result<MultiPoly> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    MultiPoly::parse(&text)
}

fn poly_json(p: &LaurentVZ) -> Value {
    serde_json::to_value(p).expect("serializable")
}

pub fn cmd_info(word: &BraidWord, json_mode: bool) -> Result<Output> {
    let prof = closure_profile(word);
    let lk = linking_matrix(&prof)?;
    let bt = bennequin_number(word, None)?;
    let rel = relative_bennequin_all(word)?;
    let seifert = seifert_euler(word);
    let band = band_seifert_euler(word);
    let band_pieces = band_seifert_chi_minus(word);
    let punctured = (1..=prof.r)
        .map(|j| punctured_component_euler(word, j))
        .collect::<Result<Vec<_>>>()?;
    let gp = word.generator_profile();

    let value = json!({
        "n": word.n(),
        "word": word.to_string(),
        "components": prof.r,
        "strand_components": prof.comp,
        "strands_per_component": prof.n_i,
        "crossing_matrix": prof.cr,
        "linking_matrix": lk,
        "self_crossings": prof.l_u,
        "over_crossings": prof.u,
        "bennequin": bt,
        "relative_bennequin": rel,
        "euler": {
            "seifert": seifert,
            "band_seifert": band,
            "band_seifert_chi_minus_by_piece": band_pieces,
            "punctured_component": punctured,
        },
        "generators": gp,
    });

    let mut t = String::new();
    let _ = writeln!(t, "word: {} on {} strands", display_word(word), word.n());
    let _ = writeln!(t, "components: {}", prof.r);
    let _ = writeln!(t, "strand components: {:?}", prof.comp);
    let _ = writeln!(t, "crossing matrix: {:?}", prof.cr);
    let _ = writeln!(t, "linking matrix: {lk:?}");
    let _ = writeln!(t, "bennequin: {bt}");
    let _ = writeln!(t, "relative bennequin: {rel:?}");
    let _ = writeln!(
        t,
        "seifert chi: {} (chi_- {})",
        seifert.chi, seifert.chi_minus
    );
    let _ = writeln!(
        t,
        "band seifert chi: {} (chi_- {}, by piece {band_pieces})",
        band.chi, band.chi_minus
    );
    let chis: Vec<i64> = punctured.iter().map(|e| e.chi).collect();
    let _ = writeln!(t, "punctured component chi: {chis:?}");
    let _ = writeln!(
        t,
        "homogeneous: {} (pos {}, neg {}, n_p {}, n_n {})",
        gp.homogeneous, gp.pos, gp.neg, gp.n_p, gp.n_n
    );
    Ok(emit(json_mode, &value, t))
}

fn display_word(word: &BraidWord) -> String {
    if word.is_empty() {
        "id".into()
    } else {
        word.to_string()
    }
}

fn bracket_json(b: &NormBracket) -> Value {
    json!({
        "lower": b.lower,
        "upper": b.upper,
        "determined": b.determined,
        "sources": { "lower": b.lower_source, "upper": b.upper_source },
    })
}

pub fn cmd_bounds(
    word: &BraidWord,
    class: &CohClass,
    poly: Option<&MultiPoly>,
    json_mode: bool,
) -> Result<Output> {
    let bracket = thurston_bracket(word, class)?;
    let corollary = class_lower_bound(word, class)?;
    let scholium = scholium_lower_bound(word, class)?;
    let r = closure_profile(word).r;
    let mc = poly
        .map(|p| mcmullen_check(p, &bracket, &class.0, r))
        .transpose()?;
    let value = json!({
        "class": class.0,
        "bracket": bracket_json(&bracket),
        "corollary": corollary,
        "scholium": scholium,
        "mcmullen": mc,
    });
    let mut t = String::new();
    let _ = writeln!(
        t,
        "norm at {:?}: [{}, {}]{}",
        class.0,
        bracket.lower,
        bracket.upper,
        if bracket.determined {
            " determined"
        } else {
            ""
        }
    );
    let _ = writeln!(
        t,
        "lower from {:?}, upper from {:?}",
        bracket.lower_source, bracket.upper_source
    );
    let _ = writeln!(t, "corollary bound {corollary}, scholium bound {scholium}");
    if let Some(m) = &mc {
        let _ = writeln!(
            t,
            "alexander norm {} <= {}: {}{}",
            m.alexander_norm,
            m.bound,
            m.holds,
            m.gap.map(|g| format!(", gap {g}")).unwrap_or_default()
        );
    }
    Ok(emit(json_mode, &value, t))
}

pub fn cmd_homfly(
    word: &BraidWord,
    oracle: bool,
    budget: usize,
    json_mode: bool,
) -> Result<Output> {
    let p = if oracle {
        SkeinOracle::new(budget).evaluate(word)?
    } else {
        homfly_p(word)
    };
    let report = HomflyReport::from_p(word, p)?;
    let mfw = mfw_check(word)?;
    let cert = max_bennequin_certificate(word)?;
    let value = json!({
        "evaluator": if oracle { "skein" } else { "trace" },
        "beta_t": report.beta_t,
        "homfly": {
            "P": poly_json(&report.p),
            "H": poly_json(&report.h),
            "e": report.e,
            "e_P": report.e_p,
            "conway": poly_json(&report.conway),
        },
        "mfw": mfw,
        "certificate": cert,
    });
    let mut t = String::new();
    let _ = writeln!(t, "P = {}", report.p);
    let _ = writeln!(t, "H = {}", report.h);
    let _ = writeln!(t, "conway = {}", report.conway);
    let _ = writeln!(
        t,
        "beta_t = {}, e = {}, e_P = {}",
        report.beta_t, report.e, report.e_p
    );
    let _ = writeln!(
        t,
        "mfw: {} + 1 <= {} ({}, slack {})",
        mfw.beta_t, mfw.e, mfw.holds, mfw.slack
    );
    let _ = writeln!(
        t,
        "maximal bennequin certificate: {} (P(0,z) = {})",
        cert.certified, cert.p0
    );
    Ok(emit(json_mode, &value, t))
}

pub fn cmd_cable(word: &BraidWord, class: &CohClass, json_mode: bool) -> Result<Output> {
    let pair = cable_pair(word, class)?;
    let inner = relative_bennequin_subset(&pair.lprime, &pair.subset)?;
    let value = json!({
        "class": class.0,
        "n": pair.lprime.n(),
        "lprime": pair.lprime.to_string(),
        "subset": pair.subset,
        "origin": pair.origin,
        "p": pair.p,
        "m": pair.m,
        "twist": pair.twist,
        "relative_bennequin": inner,
    });
    let mut t = String::new();
    let _ = writeln!(
        t,
        "L' = {} on {} strands",
        display_word(&pair.lprime),
        pair.lprime.n()
    );
    let _ = writeln!(t, "L'' components: {:?}", pair.subset);
    let _ = writeln!(t, "origin: {:?}", pair.origin);
    let _ = writeln!(
        t,
        "p: {:?}, m: {:?}, twist: {:?}",
        pair.p, pair.m, pair.twist
    );
    let _ = writeln!(t, "beta_t(L'', L') = {inner}");
    Ok(emit(json_mode, &value, t))
}

fn word_corpus(
    v: &VerifyArgs,
    default_strands: usize,
    default_len: usize,
) -> Result<Vec<BraidWord>> {
    let max_n = v.max_strands.unwrap_or(default_strands);
    let max_len = v.max_len.unwrap_or(default_len);
    match v.samples {
        None => exhaustive_words(max_n, max_len),
        Some(samples) => {
            let mut out = Vec::new();
            for n in 1..=max_n {
                out.extend(sampled_words(
                    n,
                    max_len,
                    samples,
                    v.seed.wrapping_add(n as u64),
                )?);
            }
            Ok(out)
        }
    }
}

pub fn cmd_verify(v: &VerifyArgs, json_mode: bool) -> Result<Output> {
    let report = match v.suite {
        Suite::Relations => relations_suite(&word_corpus(v, 3, 6)?),
        Suite::Skein => skein_suite(&word_corpus(v, 3, 6)?, v.budget.unwrap_or(DEFAULT_BUDGET))?,
        Suite::Mfw => mfw_suite(&word_corpus(v, 3, 6)?),
        Suite::Homogeneous => homogeneous_suite(&word_corpus(v, 3, 6)?),
        Suite::Linearity => linearity_suite(&linearity_cases(
            v.max_strands.unwrap_or(4),
            v.max_len.unwrap_or(8),
            v.max_class,
            v.samples.unwrap_or(200),
            v.seed,
        )?)?,
        Suite::Morton3 => morton3_suite(
            v.max_len.unwrap_or(5),
            v.budget.unwrap_or(DEFAULT_MORTON_BUDGET),
        )?,
        Suite::Kanda => kanda_suite(&v.k, v.max_l)?,
    };
    let mut out = emit(
        json_mode,
        &serde_json::to_value(&report).expect("serializable"),
        report_text(&report),
    );
    if !report.passed() {
        out.code = EXIT_VERIFY;
    }
    Ok(out)
}

fn report_text(r: &SuiteReport) -> String {
    let mut t = String::new();
    let _ = writeln!(
        t,
        "{}: {} checked, {} failures",
        r.suite,
        r.checked,
        r.failures.len()
    );
    for n in &r.notes {
        let _ = writeln!(t, "  {n}");
    }
    for f in &r.failures {
        let _ = writeln!(t, "FAIL {f}");
    }
    t
}

#[derive(Debug, Serialize)]
struct BenchRow {
    word: String,
    n: usize,
    length: usize,
    trace_ms: f64,
    oracle_ms: f64,
    terms: usize,
    agree: bool,
}

fn bench_family(b: &BenchArgs) -> Vec<BraidWord> {
    match b.family {
        Family::Empty => Vec::new(),
        Family::Power => (1..=b.max_k)
            .map(|k| BraidWord::from_signed(2, &vec![1; k]).expect("valid"))
            .collect(),
        Family::Twist => (1..=b.max_k)
            .map(|k| BraidWord::from_signed(3, &[1, 2].repeat(k)).expect("valid"))
            .collect(),
        Family::Homogeneous => {
            let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
            let mut out = Vec::new();
            while out.len() < b.max_k {
                let w = random_word(&mut rng, 3, 2 + out.len());
                if w.generator_profile().homogeneous {
                    out.push(w);
                }
            }
            out
        }
    }
}

pub fn cmd_bench(b: &BenchArgs, json_mode: bool) -> Result<Output> {
    let budget = b.budget.unwrap_or(DEFAULT_BUDGET);
    let mut rows = Vec::new();
    for w in bench_family(b) {
        let t0 = Instant::now();
        let p = homfly_p(&w);
        let trace_ms = t0.elapsed().as_secs_f64() * 1e3;
        let t1 = Instant::now();
        let o = SkeinOracle::new(budget).evaluate(&w)?;
        let oracle_ms = t1.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            word: w.to_string(),
            n: w.n(),
            length: w.len(),
            trace_ms,
            oracle_ms,
            terms: p.num_terms(),
            agree: p == o,
        });
    }
    let mut t = String::from("word,n,length,trace_ms,oracle_ms,terms,agree\n");
    for r in &rows {
        let _ = writeln!(
            t,
            "{},{},{},{:.3},{:.3},{},{}",
            r.word, r.n, r.length, r.trace_ms, r.oracle_ms, r.terms, r.agree
        );
    }
    let mut out = emit(
        json_mode,
        &serde_json::to_value(&rows).expect("serializable"),
        t,
    );
    if rows.iter().any(|r| !r.agree) {
        out.code = EXIT_VERIFY;
    }
    Ok(out)
}
