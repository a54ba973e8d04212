//! `cyclav` - decide, construct, count, and verify cyclic avoidance of
//! abelian and ordinary powers in finite words.
//!
//! Exit status: 0 for success / a true verdict, 1 for a false verdict or a
//! missing witness, 2 for usage and input errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclav::avoidance::{
    circular_abelian_avoids, circular_ordinary_avoids, cyclic_abelian_avoids,
    cyclic_ordinary_avoids, linear_abelian_avoids, linear_ordinary_avoids, AvoidanceReport, Kind,
    MinExponent, Mode,
};
use cyclav::constructions::{ConstructionRecipe, Method};
use cyclav::error::Error;
use cyclav::morphism::{builtin_morphism, Morphism};
use cyclav::rational::{format_exponent, parse_exponent, Rational};
use cyclav::repro::{run_all, run_criterion, CriterionOutcome, Suite, CRITERION_COUNT};
use cyclav::search::{
    append_count_record, justin_factor_witness, lookup_count_record, run_search,
    thue_morse_factor_witness, verify_delta_lemmas, SearchOutcome, SearchTask, Want,
};
use cyclav::word::{parse_word_file, Word};

#[derive(Parser)]
#[command(name = "cyclav", version, about = "Cyclic avoidance of abelian and ordinary powers")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; communicate through the exit status only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Abelian,
    Ordinary,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cyclic,
    Circular,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    All,
}

impl From<KindArg> for Kind {
    fn from(value: KindArg) -> Kind {
        match value {
            KindArg::Abelian => Kind::Abelian,
            KindArg::Ordinary => Kind::Ordinary,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(value: ModeArg) -> Mode {
        match value {
            ModeArg::Cyclic => Mode::Cyclic,
            ModeArg::Circular => Mode::Circular,
            ModeArg::Linear => Mode::Linear,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether words avoid a power (exit 0 iff all do).
    Check {
        #[arg(long, value_enum, default_value_t = KindArg::Abelian)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Cyclic)]
        mode: ModeArg,
        /// Exponent: `N`, `p/q`, optional trailing `+` (strictly above).
        #[arg(long)]
        exponent: String,
        /// Words given inline.
        #[arg(value_name = "WORD")]
        words: Vec<String>,
        /// Read words from a file (one per line, `%` comments).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Least abelian exponent a word avoids cyclically.
    Threshold {
        word: String,
    },
    /// Construct a cyclic avoider of the given alphabet size and length.
    Generate {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        length: usize,
        /// Target exponent (defaults to 8, 4, 3, 2 for 2..=5 letters).
        #[arg(long)]
        exponent: Option<u32>,
        /// Power kind; only abelian constructions exist.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Free middle letter of the odd-length binary construction.
        #[arg(long, default_value_t = 0)]
        diamond: u8,
        /// Re-run the detector on the output and fail if it violates.
        #[arg(long)]
        verify: bool,
    },
    /// Count words avoiding abelian powers cyclically.
    Count {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        exponent: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Enumerate only words starting with 0 and scale up.
        #[arg(long)]
        symmetry: bool,
        /// TSV cache (`k<TAB>n<TAB>N<TAB>count`): reused when hit, extended
        /// otherwise.
        #[arg(long)]
        results: Option<PathBuf>,
    },
    /// Enumerate words for a witness; exhaustion certifies nonexistence.
    Search {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        length: usize,
        /// Exponent: `N`, `p/q`, optional trailing `+`.
        #[arg(long)]
        exponent: String,
        #[arg(long, value_enum, default_value_t = KindArg::Abelian)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Cyclic)]
        mode: ModeArg,
        /// List every witness instead of the first.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the finite balance checks over the factors of sigma3.
    VerifyLemmas,
    /// A Thue-Morse factor of the given length avoiding 5/2+-powers
    /// cyclically.
    TmWitness {
        #[arg(long)]
        length: usize,
    },
    /// A factor of the fixed point of Justin's morphism avoiding abelian
    /// 5-powers cyclically.
    JustinWitness {
        #[arg(long)]
        length: usize,
        /// Start positions to scan before giving up.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Apply a morphism, iterate it, or list its language factors.
    Expand {
        /// Builtin name: sigma3, sigma4, keranen, thue_morse, justin,
        /// complement.
        #[arg(long)]
        morphism: Option<String>,
        /// Morphism file, one `letter -> image` rule per line.
        #[arg(long)]
        morphism_file: Option<PathBuf>,
        #[arg(long, default_value = "0")]
        seed: String,
        /// Iterate until the result reaches this length.
        #[arg(long)]
        min_length: Option<usize>,
        /// Apply the morphism once to this word.
        #[arg(long)]
        apply: Option<String>,
        /// List all language factors up to this length.
        #[arg(long)]
        factors: Option<usize>,
    },
    /// Re-derive the headline results as a pass/fail table.
    Repro {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
        /// Run a single criterion (1-based id).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

/// What one subcommand produced: text lines, the JSON equivalent, and the
/// process exit status.
struct CommandOutcome {
    lines: Vec<String>,
    json: Value,
    exit: i32,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    };
    if !cli.quiet {
        if cli.json {
            println!("{}", serde_json::to_string_pretty(&outcome.json).expect("valid JSON"));
        } else {
            for line in &outcome.lines {
                println!("{line}");
            }
        }
    }
    std::process::exit(outcome.exit);
}

fn run(command: &Command) -> Result<CommandOutcome, String> {
    match command {
        Command::Check { kind, mode, exponent, words, file } => {
            check(*kind, *mode, exponent, words, file.as_deref())
        }
        Command::Threshold { word } => threshold(word),
        Command::Generate { alphabet, length, exponent, kind, diamond, verify } => {
            generate(*alphabet, *length, *exponent, *kind, *diamond, *verify)
        }
        Command::Count { alphabet, length, exponent, jobs, symmetry, results } => {
            count(*alphabet, *length, *exponent, *jobs, *symmetry, results.as_deref())
        }
        Command::Search { alphabet, length, exponent, kind, mode, all, jobs } => {
            search(*alphabet, *length, exponent, *kind, *mode, *all, *jobs)
        }
        Command::VerifyLemmas => verify_lemmas(),
        Command::TmWitness { length } => tm_witness(*length),
        Command::JustinWitness { length, budget } => justin_witness(*length, *budget),
        Command::Expand { morphism, morphism_file, seed, min_length, apply, factors } => expand(
            morphism.as_deref(),
            morphism_file.as_deref(),
            seed,
            *min_length,
            apply.as_deref(),
            *factors,
        ),
        Command::Repro { suite, criterion } => repro(*suite, *criterion),
    }
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Parses an exponent argument, enforcing the abelian restrictions:
/// integral, at least 2, and no `+` suffix.
fn parse_exponent_for(kind: Kind, text: &str) -> Result<(Rational, bool), String> {
    let (value, plus) = parse_exponent(text).map_err(fail)?;
    if kind == Kind::Abelian {
        if !value.is_integer() {
            return Err(fail(Error::FractionalAbelianExponent));
        }
        if plus {
            return Err("a `+` exponent applies to ordinary powers only".to_string());
        }
        if *value.numer() < 2 || *value.numer() > u32::MAX as i64 {
            return Err(format!("abelian exponent must be an integer >= 2, got {text}"));
        }
    }
    Ok((value, plus))
}

fn run_report(
    word: &Word,
    kind: Kind,
    mode: Mode,
    exponent: Rational,
    plus: bool,
) -> Result<AvoidanceReport, String> {
    let report = match (kind, mode) {
        (Kind::Abelian, Mode::Cyclic) => {
            cyclic_abelian_avoids(word, *exponent.numer() as u32)
        }
        (Kind::Abelian, Mode::Circular) => {
            circular_abelian_avoids(word, *exponent.numer() as u32)
        }
        (Kind::Abelian, Mode::Linear) => linear_abelian_avoids(word, *exponent.numer() as u32),
        (Kind::Ordinary, Mode::Cyclic) => cyclic_ordinary_avoids(word, exponent, plus),
        (Kind::Ordinary, Mode::Circular) => circular_ordinary_avoids(word, exponent, plus),
        (Kind::Ordinary, Mode::Linear) => linear_ordinary_avoids(word, exponent, plus),
    };
    report.map_err(fail)
}

fn describe(report: &AvoidanceReport) -> String {
    let adverb = match report.mode {
        Mode::Cyclic => "cyclically",
        Mode::Circular => "circularly",
        Mode::Linear => "linearly",
    };
    let exponent = format_exponent(report.threshold, report.strict_plus);
    let kind = report.kind.as_str();
    match &report.witness {
        None => format!("{}: avoids {kind} {exponent}-powers {adverb}", report.word),
        Some(occ) => format!(
            "{}: violated by an {kind} power at start {}, period {}, exponent {}",
            report.word,
            occ.start,
            occ.period,
            cyclav::rational::format_rational(occ.exponent),
        ),
    }
}

fn check(
    kind_arg: KindArg,
    mode_arg: ModeArg,
    exponent: &str,
    inline: &[String],
    file: Option<&Path>,
) -> Result<CommandOutcome, String> {
    let kind = Kind::from(kind_arg);
    let mode = Mode::from(mode_arg);
    let (value, plus) = parse_exponent_for(kind, exponent)?;
    let mut words = Vec::new();
    for text in inline {
        words.push(Word::parse(text).map_err(fail)?);
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(fail)?;
        words.extend(parse_word_file(&text).map_err(fail)?);
    }
    if words.is_empty() {
        return Err("no words given (pass them inline or with --file)".to_string());
    }
    let mut lines = Vec::new();
    let mut reports = Vec::new();
    let mut all_avoid = true;
    for word in &words {
        let report = run_report(word, kind, mode, value, plus)?;
        all_avoid &= report.verdict;
        lines.push(describe(&report));
        reports.push(report.to_json());
    }
    let json = if reports.len() == 1 { reports.pop().unwrap() } else { Value::Array(reports) };
    Ok(CommandOutcome { lines, json, exit: if all_avoid { 0 } else { 1 } })
}

fn threshold(word: &str) -> Result<CommandOutcome, String> {
    let word = Word::parse(word).map_err(fail)?;
    let result = cyclav::avoidance::min_avoided_abelian_exponent(&word).map_err(fail)?;
    let json = json!({
        "schema_version": 1,
        "word": word.to_text(),
        "min_exponent": match result {
            MinExponent::Finite(n) => json!(n),
            MinExponent::Infinite => Value::Null,
        },
    });
    Ok(CommandOutcome { lines: vec![result.to_string()], json, exit: 0 })
}

fn generate(
    alphabet: usize,
    length: usize,
    exponent: Option<u32>,
    kind: Option<KindArg>,
    diamond: u8,
    verify: bool,
) -> Result<CommandOutcome, String> {
    if matches!(kind, Some(KindArg::Ordinary)) {
        return Err("only abelian constructions are available".to_string());
    }
    let recipe = ConstructionRecipe::resolve(alphabet, length, exponent).map_err(fail)?;
    let word = recipe.build(diamond).map_err(fail)?;
    let verified = if verify {
        Some(cyclic_abelian_avoids(&word, recipe.target_exponent).map_err(fail)?.verdict)
    } else {
        None
    };
    let rendered = match recipe.method {
        Method::Marker => word.to_text_marked(alphabet as u8 - 1),
        _ => word.to_text(),
    };
    let json = json!({
        "schema_version": 1,
        "word": rendered,
        "alphabet": alphabet,
        "length": length,
        "exponent": recipe.target_exponent,
        "method": recipe.method.as_str(),
        "verified": verified,
    });
    let exit = if verified == Some(false) { 1 } else { 0 };
    Ok(CommandOutcome { lines: vec![rendered], json, exit })
}

fn count(
    alphabet: usize,
    length: usize,
    exponent: u32,
    jobs: usize,
    symmetry: bool,
    results: Option<&Path>,
) -> Result<CommandOutcome, String> {
    let cached = match results {
        Some(path) => lookup_count_record(path, alphabet, length, exponent).map_err(fail)?,
        None => None,
    };
    let (count, was_cached) = match cached {
        Some(count) => (count, true),
        None => {
            let task = SearchTask::abelian(alphabet, length, exponent, Mode::Cyclic)
                .wanting(Want::Count)
                .with_symmetry_reduction(symmetry);
            let count = match run_search(&task, jobs).map_err(fail)? {
                SearchOutcome::Count(count) => count,
                _ => unreachable!(),
            };
            if let Some(path) = results {
                append_count_record(path, alphabet, length, exponent, count).map_err(fail)?;
            }
            (count, false)
        }
    };
    let json = json!({
        "schema_version": 1,
        "alphabet": alphabet,
        "length": length,
        "exponent": exponent,
        "count": count,
        "cached": was_cached,
    });
    Ok(CommandOutcome { lines: vec![count.to_string()], json, exit: 0 })
}

fn search(
    alphabet: usize,
    length: usize,
    exponent: &str,
    kind_arg: KindArg,
    mode_arg: ModeArg,
    all: bool,
    jobs: usize,
) -> Result<CommandOutcome, String> {
    let kind = Kind::from(kind_arg);
    let mode = Mode::from(mode_arg);
    let (value, plus) = parse_exponent_for(kind, exponent)?;
    let task = SearchTask {
        alphabet_size: alphabet,
        length,
        kind,
        exponent: value,
        strict_plus: plus,
        mode,
        want: if all { Want::AllWitnesses } else { Want::FirstWitness },
        symmetry_reduction: false,
    };
    let witnesses: Vec<Word> = match run_search(&task, jobs).map_err(fail)? {
        SearchOutcome::FirstWitness(found) => found.into_iter().collect(),
        SearchOutcome::AllWitnesses(list) => list,
        SearchOutcome::Count(_) => unreachable!(),
    };
    let lines = if witnesses.is_empty() {
        vec!["no witness (full enumeration)".to_string()]
    } else {
        witnesses.iter().map(|w| w.to_text()).collect()
    };
    let json = json!({
        "schema_version": 1,
        "witnesses": witnesses.iter().map(|w| w.to_text()).collect::<Vec<_>>(),
        "exhaustive": true,
    });
    let exit = if witnesses.is_empty() { 1 } else { 0 };
    Ok(CommandOutcome { lines, json, exit })
}

fn verify_lemmas() -> Result<CommandOutcome, String> {
    let reports = verify_delta_lemmas().map_err(fail)?;
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.passed();
        lines.push(format!(
            "{} {} (lengths {}..={}, checked {}, min balance {}, violations {})",
            if report.passed() { "PASS" } else { "FAIL" },
            report.lemma,
            report.min_len,
            report.max_len,
            report.checked,
            report.min_delta,
            report.violations.len(),
        ));
        entries.push(json!({
            "lemma": report.lemma,
            "min_len": report.min_len,
            "max_len": report.max_len,
            "checked": report.checked,
            "min_delta": report.min_delta,
            "violations": report.violations.iter().map(|w| w.to_text()).collect::<Vec<_>>(),
            "passed": report.passed(),
        }));
    }
    let json = json!({ "schema_version": 1, "reports": entries });
    Ok(CommandOutcome { lines, json, exit: if all_passed { 0 } else { 1 } })
}

fn tm_witness(length: usize) -> Result<CommandOutcome, String> {
    match thue_morse_factor_witness(length) {
        Ok(word) => {
            let json = json!({
                "schema_version": 1,
                "word": word.to_text(),
                "length": length,
                "exponent": "5/2+",
            });
            Ok(CommandOutcome { lines: vec![word.to_text()], json, exit: 0 })
        }
        Err(Error::SearchExhausted(ceiling)) => Ok(CommandOutcome {
            lines: vec![format!("no witness within {ceiling} start positions")],
            json: json!({ "schema_version": 1, "word": Value::Null, "length": length }),
            exit: 1,
        }),
        Err(e) => Err(fail(e)),
    }
}

fn justin_witness(length: usize, budget: usize) -> Result<CommandOutcome, String> {
    let found = justin_factor_witness(length, budget).map_err(fail)?;
    let json = json!({
        "schema_version": 1,
        "word": found.as_ref().map(|w| w.to_text()),
        "length": length,
        "budget": budget,
    });
    match found {
        Some(word) => Ok(CommandOutcome { lines: vec![word.to_text()], json, exit: 0 }),
        None => Ok(CommandOutcome {
            lines: vec![format!("no witness within {budget} start positions")],
            json,
            exit: 1,
        }),
    }
}

fn expand(
    name: Option<&str>,
    file: Option<&Path>,
    seed: &str,
    min_length: Option<usize>,
    apply: Option<&str>,
    factors: Option<usize>,
) -> Result<CommandOutcome, String> {
    let morphism: Morphism = match (name, file) {
        (Some(name), None) => builtin_morphism(name).map_err(fail)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(fail)?;
            Morphism::parse(&text).map_err(fail)?
        }
        (Some(_), Some(_)) => {
            return Err("pass either --morphism or --morphism-file, not both".to_string())
        }
        (None, None) => return Err("pass --morphism NAME or --morphism-file PATH".to_string()),
    };
    if let Some(text) = apply {
        let word = Word::parse(text).map_err(fail)?;
        let image = morphism.apply(&word).map_err(fail)?;
        let json = json!({ "schema_version": 1, "word": image.to_text() });
        return Ok(CommandOutcome { lines: vec![image.to_text()], json, exit: 0 });
    }
    if let Some(max_len) = factors {
        let mut list: Vec<Word> = morphism.language_factors(max_len).map_err(fail)?
            .into_iter()
            .collect();
        list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let texts: Vec<String> = list.iter().map(|w| w.to_text()).collect();
        let json = json!({ "schema_version": 1, "factors": texts });
        return Ok(CommandOutcome { lines: texts, json, exit: 0 });
    }
    if let Some(min_len) = min_length {
        let seed = Word::parse(seed).map_err(fail)?;
        let word = morphism.fixed_point_prefix(&seed, min_len).map_err(fail)?;
        let json = json!({ "schema_version": 1, "word": word.to_text() });
        return Ok(CommandOutcome { lines: vec![word.to_text()], json, exit: 0 });
    }
    Err("pass one of --apply WORD, --factors LEN, or --min-length LEN".to_string())
}

fn repro(suite: SuiteArg, criterion: Option<usize>) -> Result<CommandOutcome, String> {
    let suite = match suite {
        SuiteArg::Fast => Suite::Fast,
        SuiteArg::All => Suite::Full,
    };
    let outcomes: Vec<CriterionOutcome> = match criterion {
        Some(id) => {
            if id == 0 || id > CRITERION_COUNT {
                return Err(format!("criterion id must be in 1..={CRITERION_COUNT}"));
            }
            vec![run_criterion(id, suite)]
        }
        None => run_all(suite),
    };
    let mut lines = vec![format!("{:<4}{:<8}{:>8}  {}", "id", "status", "ms", "result")];
    let mut entries = Vec::new();
    let mut all_passed = true;
    for outcome in &outcomes {
        all_passed &= outcome.passed;
        lines.push(format!(
            "{:<4}{:<8}{:>8}  {}: {} -- {}",
            format!("{:02}", outcome.id),
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.millis,
            outcome.label,
            outcome.claim,
            outcome.detail,
        ));
        entries.push(json!({
            "id": outcome.id,
            "label": outcome.label,
            "claim": outcome.claim,
            "passed": outcome.passed,
            "millis": outcome.millis,
            "detail": outcome.detail,
        }));
    }
    let json = json!({ "schema_version": 1, "criteria": entries, "passed": all_passed });
    Ok(CommandOutcome { lines, json, exit: if all_passed { 0 } else { 1 } })
}
