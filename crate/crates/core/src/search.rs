//! Pruned exhaustive enumeration: counting cyclic avoiders (OEIS A334831),
//! witness hunting and nonexistence certification, factor searches in the
//! Thue-Morse and Justin fixed points, and the finite balance checks behind
//! the binary construction.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::avoidance::{
    circular_abelian_avoids, circular_ordinary_avoids, cyclic_abelian_avoids,
    cyclic_ordinary_avoids, is_abelian_n_free, linear_ordinary_avoids, ordinary_violation, Kind,
    Mode,
};
use crate::error::{Error, Result};
use crate::morphism::builtin_morphism;
use crate::rational::{rational, rational_int, Rational};
use crate::word::{delta, Word};

/// One exhaustive enumeration task over all words of a fixed shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTask {
    pub alphabet_size: usize,
    pub length: usize,
    pub kind: Kind,
    pub exponent: Rational,
    pub strict_plus: bool,
    pub mode: Mode,
    pub want: Want,
    /// Counting only explores words starting with letter 0 and multiplies by
    /// the alphabet size; sound because the predicates are invariant under
    /// letter permutations.
    pub symmetry_reduction: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    Count,
    FirstWitness,
    AllWitnesses,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Count(u64),
    FirstWitness(Option<Word>),
    AllWitnesses(Vec<Word>),
}

impl SearchTask {
    pub fn abelian(alphabet_size: usize, length: usize, exponent: u32, mode: Mode) -> Self {
        SearchTask {
            alphabet_size,
            length,
            kind: Kind::Abelian,
            exponent: rational_int(exponent as i64),
            strict_plus: false,
            mode,
            want: Want::FirstWitness,
            symmetry_reduction: false,
        }
    }

    pub fn ordinary(
        alphabet_size: usize,
        length: usize,
        exponent: Rational,
        strict_plus: bool,
        mode: Mode,
    ) -> Self {
        SearchTask {
            alphabet_size,
            length,
            kind: Kind::Ordinary,
            exponent,
            strict_plus,
            mode,
            want: Want::FirstWitness,
            symmetry_reduction: false,
        }
    }

    pub fn wanting(mut self, want: Want) -> Self {
        self.want = want;
        self
    }

    pub fn with_symmetry_reduction(mut self, on: bool) -> Self {
        self.symmetry_reduction = on;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.alphabet_size < 2 || self.alphabet_size > 36 {
            return Err(Error::InvalidTask(format!(
                "alphabet size {} out of range 2..=36",
                self.alphabet_size
            )));
        }
        if self.length == 0 {
            return Err(Error::InvalidTask("length must be positive".into()));
        }
        match self.kind {
            Kind::Abelian => {
                if !self.exponent.is_integer() {
                    return Err(Error::FractionalAbelianExponent);
                }
                if self.strict_plus {
                    return Err(Error::InvalidTask(
                        "a `+` exponent is an ordinary-power notion".into(),
                    ));
                }
                if self.exponent < rational_int(2) {
                    return Err(Error::InvalidExponent(format!(
                        "abelian exponent must be >= 2, got {}",
                        self.exponent
                    )));
                }
            }
            Kind::Ordinary => {
                if self.exponent <= rational_int(1) {
                    return Err(Error::InvalidExponent(format!(
                        "ordinary exponent must exceed 1, got {}",
                        self.exponent
                    )));
                }
            }
        }
        Ok(())
    }

    fn abelian_exponent(&self) -> u32 {
        *self.exponent.numer() as u32
    }
}

/// Depth at which the prefix tree is cut into independent work units.
const SHARD_DEPTH: usize = 6;

struct DfsState<'t> {
    task: &'t SearchTask,
    k: usize,
    n: usize,
    prefix: Vec<u8>,
    /// Cumulative letter counts, row `i` covering `prefix[..i]`.
    counts: Vec<u32>,
    /// Backward run lengths per (depth, period); row `l` entry `p` is the
    /// length of the longest `p`-periodic match run ending at `l - 1`.
    runs: Vec<u32>,
}

impl<'t> DfsState<'t> {
    fn new(task: &'t SearchTask) -> Self {
        let (k, n) = (task.alphabet_size, task.length);
        DfsState {
            task,
            k,
            n,
            prefix: Vec::with_capacity(n),
            counts: vec![0; (n + 1) * k],
            runs: if task.kind == Kind::Ordinary { vec![0; (n + 1) * n] } else { Vec::new() },
        }
    }

    /// Extends the prefix and reports whether it stays free of forbidden
    /// powers ending at the new position. A dirty prefix must still be
    /// popped by the caller.
    fn push(&mut self, letter: u8) -> bool {
        self.prefix.push(letter);
        let ell = self.prefix.len();
        let k = self.k;
        let (head, tail) = self.counts.split_at_mut(ell * k);
        tail[..k].copy_from_slice(&head[(ell - 1) * k..]);
        tail[letter as usize] += 1;
        match self.task.kind {
            Kind::Abelian => self.abelian_suffix_clean(ell),
            Kind::Ordinary => self.ordinary_suffix_clean(ell),
        }
    }

    fn pop(&mut self) {
        self.prefix.pop();
    }

    /// No abelian power of the task's exponent may end at position `ell`.
    /// Any such factor persists into the finished word and violates every
    /// mode, so abandoning the prefix is sound.
    fn abelian_suffix_clean(&self, ell: usize) -> bool {
        let reps = self.task.abelian_exponent() as usize;
        let k = self.k;
        for m in 1..=ell / reps {
            let base = ell - reps * m;
            let equal = (0..reps - 1).all(|i| {
                let (a, b, c) = (base + i * m, base + (i + 1) * m, base + (i + 2) * m);
                (0..k).all(|ch| {
                    self.counts[b * k + ch] - self.counts[a * k + ch]
                        == self.counts[c * k + ch] - self.counts[b * k + ch]
                })
            });
            if equal {
                return false;
            }
        }
        true
    }

    fn ordinary_suffix_clean(&mut self, ell: usize) -> bool {
        let n = self.n;
        let letter = self.prefix[ell - 1];
        let mut clean = true;
        for p in 1..ell {
            let run = if self.prefix[ell - 1 - p] == letter {
                // Row `ell - 1` only holds valid entries for p < ell - 1.
                if p < ell - 1 { self.runs[(ell - 1) * n + p] + 1 } else { 1 }
            } else {
                0
            };
            self.runs[ell * n + p] = run;
            if clean
                && ordinary_violation(run as usize, p, self.task.exponent, self.task.strict_plus)
            {
                clean = false;
            }
        }
        clean
    }

    fn leaf_word(&self) -> Word {
        Word::new(self.prefix.clone(), self.k).expect("prefix letters stay below k")
    }

    /// Full detector run; pruning already guarantees linear freeness, the
    /// wraparound modes still need their own check.
    fn leaf_passes(&self) -> Result<bool> {
        let word = self.leaf_word();
        let task = self.task;
        Ok(match (task.kind, task.mode) {
            (Kind::Abelian, Mode::Cyclic) => {
                cyclic_abelian_avoids(&word, task.abelian_exponent())?.verdict
            }
            (Kind::Abelian, Mode::Circular) => {
                circular_abelian_avoids(&word, task.abelian_exponent())?.verdict
            }
            (Kind::Abelian, Mode::Linear) => is_abelian_n_free(&word, task.abelian_exponent())?,
            (Kind::Ordinary, Mode::Cyclic) => {
                cyclic_ordinary_avoids(&word, task.exponent, task.strict_plus)?.verdict
            }
            (Kind::Ordinary, Mode::Circular) => {
                circular_ordinary_avoids(&word, task.exponent, task.strict_plus)?.verdict
            }
            (Kind::Ordinary, Mode::Linear) => {
                linear_ordinary_avoids(&word, task.exponent, task.strict_plus)?.verdict
            }
        })
    }
}

/// Recursive exploration below the current prefix. Returns `false` to stop
/// the whole search (first-witness short circuit).
fn recurse(state: &mut DfsState, acc: &mut SearchOutcome) -> Result<bool> {
    if state.prefix.len() == state.n {
        if state.leaf_passes()? {
            match acc {
                SearchOutcome::Count(c) => *c += 1,
                SearchOutcome::FirstWitness(slot) => {
                    *slot = Some(state.leaf_word());
                    return Ok(false);
                }
                SearchOutcome::AllWitnesses(list) => list.push(state.leaf_word()),
            }
        }
        return Ok(true);
    }
    for letter in 0..state.k as u8 {
        let clean = state.push(letter);
        let keep_going = if clean { recurse(state, acc)? } else { true };
        state.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

fn empty_outcome(want: Want) -> SearchOutcome {
    match want {
        Want::Count => SearchOutcome::Count(0),
        Want::FirstWitness => SearchOutcome::FirstWitness(None),
        Want::AllWitnesses => SearchOutcome::AllWitnesses(Vec::new()),
    }
}

/// Surviving prefixes at the shard depth, in lexicographic order.
fn collect_shards(task: &SearchTask, restrict_root: bool) -> Vec<Vec<u8>> {
    let depth = SHARD_DEPTH.min(task.length);
    let mut state = DfsState::new(task);
    let mut shards = Vec::new();
    fn walk(
        state: &mut DfsState,
        depth: usize,
        restrict_root: bool,
        shards: &mut Vec<Vec<u8>>,
    ) {
        if state.prefix.len() == depth {
            shards.push(state.prefix.clone());
            return;
        }
        let top = if restrict_root && state.prefix.is_empty() { 1 } else { state.k as u8 };
        for letter in 0..top {
            if state.push(letter) {
                walk(state, depth, restrict_root, shards);
            }
            state.pop();
        }
    }
    walk(&mut state, depth, restrict_root, &mut shards);
    shards
}

fn run_shard(task: &SearchTask, shard: &[u8]) -> Result<SearchOutcome> {
    let mut state = DfsState::new(task);
    for &letter in shard {
        let clean = state.push(letter);
        debug_assert!(clean, "shards are collected from surviving prefixes");
    }
    let mut acc = empty_outcome(task.want);
    recurse(&mut state, &mut acc)?;
    Ok(acc)
}

/// Runs a task, optionally fanning shards out over `jobs` worker threads.
/// Results are independent of the sharding and of the worker count.
pub fn run_search(task: &SearchTask, jobs: usize) -> Result<SearchOutcome> {
    task.validate()?;
    let symmetric = task.symmetry_reduction
        && matches!(task.want, Want::Count | Want::FirstWitness);
    let shards = collect_shards(task, symmetric);
    let outcome = if jobs <= 1 {
        sequential_pass(task, &shards)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidTask(format!("worker pool: {e}")))?;
        pool.install(|| parallel_pass(task, &shards))?
    };
    Ok(match outcome {
        SearchOutcome::Count(c) if symmetric => {
            SearchOutcome::Count(c * task.alphabet_size as u64)
        }
        other => other,
    })
}

fn sequential_pass(task: &SearchTask, shards: &[Vec<u8>]) -> Result<SearchOutcome> {
    let mut total = empty_outcome(task.want);
    for shard in shards {
        let part = run_shard(task, shard)?;
        match (&mut total, part) {
            (SearchOutcome::Count(acc), SearchOutcome::Count(c)) => *acc += c,
            (SearchOutcome::FirstWitness(slot), SearchOutcome::FirstWitness(found)) => {
                if found.is_some() {
                    *slot = found;
                    break;
                }
            }
            (SearchOutcome::AllWitnesses(acc), SearchOutcome::AllWitnesses(mut list)) => {
                acc.append(&mut list)
            }
            _ => unreachable!("shards share the task's want"),
        }
    }
    Ok(total)
}

fn parallel_pass(task: &SearchTask, shards: &[Vec<u8>]) -> Result<SearchOutcome> {
    match task.want {
        Want::Count => {
            let total = shards
                .par_iter()
                .map(|shard| {
                    run_shard(task, shard).map(|o| match o {
                        SearchOutcome::Count(c) => c,
                        _ => unreachable!(),
                    })
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(SearchOutcome::Count(total))
        }
        Want::FirstWitness => {
            // find_map_first keeps the lexicographically first shard's hit.
            let found = shards
                .par_iter()
                .find_map_first(|shard| match run_shard(task, shard) {
                    Ok(SearchOutcome::FirstWitness(Some(word))) => Some(Ok(word)),
                    Ok(_) => None,
                    Err(e) => Some(Err(e)),
                })
                .transpose()?;
            Ok(SearchOutcome::FirstWitness(found))
        }
        Want::AllWitnesses => {
            let lists = shards
                .par_iter()
                .map(|shard| {
                    run_shard(task, shard).map(|o| match o {
                        SearchOutcome::AllWitnesses(list) => list,
                        _ => unreachable!(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SearchOutcome::AllWitnesses(lists.into_iter().flatten().collect()))
        }
    }
}

/// The number of length-`n` words over `k` letters that avoid abelian
/// `exponent`-powers cyclically (A334831 is the `k = 2`, `exponent = 4` row).
pub fn count_cyclic_avoiders(k: usize, n: usize, exponent: u32) -> Result<u64> {
    let task = SearchTask::abelian(k, n, exponent, Mode::Cyclic).wanting(Want::Count);
    match run_search(&task, 1)? {
        SearchOutcome::Count(c) => Ok(c),
        _ => unreachable!(),
    }
}

/// The lexicographically first word satisfying the task's predicate, if any.
/// Absence after the full enumeration is a nonexistence certificate.
pub fn find_witness(task: &SearchTask) -> Result<Option<Word>> {
    let task = task.clone().wanting(Want::FirstWitness);
    match run_search(&task, 1)? {
        SearchOutcome::FirstWitness(found) => Ok(found),
        _ => unreachable!(),
    }
}

/// Default scan ceiling for the Thue-Morse factor search; the theorem
/// guarantees success, the ceiling merely turns a hypothetical pathology
/// into an explicit error.
pub const TM_POSITION_CEILING: usize = 1 << 20;

/// A factor of the Thue-Morse word of length `n` avoiding 5/2+-powers
/// cyclically, scanning start positions in a prefix window that starts at
/// `4n` and doubles until a witness appears.
pub fn thue_morse_factor_witness(n: usize) -> Result<Word> {
    thue_morse_factor_witness_bounded(n, TM_POSITION_CEILING)
}

pub fn thue_morse_factor_witness_bounded(n: usize, position_ceiling: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidLength(0));
    }
    let tm = builtin_morphism("thue_morse")?;
    let seed = Word::parse("0")?;
    let threshold = rational(5, 2);
    let mut window = (4 * n).max(16);
    let mut next_start = 0usize;
    loop {
        let prefix = tm.fixed_point_prefix(&seed, window + n)?;
        let limit = (prefix.len() - n).min(position_ceiling);
        while next_start <= limit {
            let factor = prefix.factor(next_start, next_start + n);
            if cyclic_ordinary_avoids(&factor, threshold, true)?.verdict {
                return Ok(factor);
            }
            next_start += 1;
        }
        if next_start > position_ceiling {
            return Err(Error::SearchExhausted(position_ceiling));
        }
        window = window.saturating_mul(2);
    }
}

/// A length-`n` factor of the fixed point of Justin's morphism avoiding
/// abelian 5-powers cyclically, scanning at most `position_budget` start
/// positions. `None` means the budget ran out, not that no factor exists.
pub fn justin_factor_witness(n: usize, position_budget: usize) -> Result<Option<Word>> {
    if n == 0 {
        return Err(Error::InvalidLength(0));
    }
    let justin = builtin_morphism("justin")?;
    let prefix = justin.fixed_point_prefix(&Word::parse("0")?, position_budget + n)?;
    for start in 0..position_budget {
        let factor = prefix.factor(start, start + n);
        if cyclic_abelian_avoids(&factor, 5)?.verdict {
            return Ok(Some(factor));
        }
    }
    Ok(None)
}

/// Outcome of one finite balance check over the factors of `sigma3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheckReport {
    pub lemma: &'static str,
    /// Inclusive factor-length range checked.
    pub min_len: usize,
    pub max_len: usize,
    pub checked: usize,
    pub violations: Vec<Word>,
    /// Smallest balance observed in the range (0 when nothing was checked).
    pub min_delta: i64,
}

impl LemmaCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The three finite checks on factors of the language of `sigma3` that the
/// binary construction rests on: factors of length 29..=58 are light,
/// factors shorter than 29 have balance at least -3, and factors of length
/// 64..=173 have balance at least 6.
pub fn verify_delta_lemmas() -> Result<Vec<LemmaCheckReport>> {
    let sigma3 = builtin_morphism("sigma3")?;
    let factors: Vec<Word> = sigma3.language_factors(174)?.into_iter().collect();
    let check = |lemma: &'static str,
                 min_len: usize,
                 max_len: usize,
                 violates: fn(i64) -> bool|
     -> Result<LemmaCheckReport> {
        let mut violations = Vec::new();
        let mut min_delta = i64::MAX;
        let mut checked = 0;
        for factor in &factors {
            if factor.len() < min_len || factor.len() > max_len {
                continue;
            }
            let d = delta(factor)?;
            checked += 1;
            min_delta = min_delta.min(d);
            if violates(d) {
                violations.push(factor.clone());
            }
        }
        violations.sort();
        Ok(LemmaCheckReport {
            lemma,
            min_len,
            max_len,
            checked,
            violations,
            min_delta: if checked == 0 { 0 } else { min_delta },
        })
    };
    Ok(vec![
        check("factors of length 29..=58 are light", 29, 58, |d| d <= 0)?,
        check("factors of length < 29 have balance >= -3", 1, 28, |d| d < -3)?,
        check("factors of length 64..=173 have balance >= 6", 64, 173, |d| d < 6)?,
    ])
}

/// Appends one `k<TAB>n<TAB>N<TAB>count` record to a results file.
pub fn append_count_record(
    path: &Path,
    k: usize,
    n: usize,
    exponent: u32,
    count: u64,
) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(file, "{k}\t{n}\t{exponent}\t{count}")
}

/// Looks a cached count up; the last matching record wins. A missing file is
/// an empty cache.
pub fn lookup_count_record(
    path: &Path,
    k: usize,
    n: usize,
    exponent: u32,
) -> std::io::Result<Option<u64>> {
    let file = match std::fs::File::open(path) {
        Ok(file) => file,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut found = None;
    for line in BufReader::new(file).lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            continue;
        }
        let parsed: Option<(usize, usize, u32, u64)> = (|| {
            Some((
                fields[0].parse().ok()?,
                fields[1].parse().ok()?,
                fields[2].parse().ok()?,
                fields[3].parse().ok()?,
            ))
        })();
        if let Some((fk, fn_, fe, count)) = parsed {
            if fk == k && fn_ == n && fe == exponent {
                found = Some(count);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoidance::verify_occurrence;

    #[test]
    fn counts_match_known_values() {
        assert_eq!(count_cyclic_avoiders(2, 1, 4).unwrap(), 2);
        assert_eq!(count_cyclic_avoiders(2, 3, 4).unwrap(), 6);
        assert_eq!(count_cyclic_avoiders(2, 8, 4).unwrap(), 0);
    }

    #[test]
    fn task_validation() {
        assert!(count_cyclic_avoiders(1, 3, 4).is_err());
        assert!(count_cyclic_avoiders(2, 0, 4).is_err());
        assert!(count_cyclic_avoiders(2, 3, 1).is_err());
        let fractional = SearchTask {
            exponent: rational(5, 2),
            ..SearchTask::abelian(2, 4, 2, Mode::Cyclic)
        };
        assert!(matches!(find_witness(&fractional), Err(Error::FractionalAbelianExponent)));
    }

    #[test]
    fn ternary_square_witnesses() {
        let absent = SearchTask::ordinary(3, 5, rational_int(2), false, Mode::Cyclic);
        assert_eq!(find_witness(&absent).unwrap(), None);

        let present = SearchTask::ordinary(3, 6, rational_int(2), false, Mode::Cyclic);
        let word = find_witness(&present).unwrap().expect("length 6 avoiders exist");
        assert!(cyclic_ordinary_avoids(&word, rational_int(2), false).unwrap().verdict);
    }

    #[test]
    fn classical_linear_nonexistence() {
        let ternary = SearchTask::abelian(3, 8, 2, Mode::Linear);
        assert_eq!(find_witness(&ternary).unwrap(), None);
        // Length 7 abelian-square-free ternary words still exist.
        let shorter = SearchTask::abelian(3, 7, 2, Mode::Linear);
        assert!(find_witness(&shorter).unwrap().is_some());
    }

    #[test]
    fn first_witness_is_lexicographically_least() {
        let task = SearchTask::abelian(2, 8, 5, Mode::Cyclic);
        let first = find_witness(&task).unwrap().unwrap();
        // Brute force the same minimum.
        let mut expected = None;
        'outer: for value in 0..(1u32 << 8) {
            let symbols: Vec<u8> = (0..8).map(|i| ((value >> (7 - i)) & 1) as u8).collect();
            let word = Word::new(symbols, 2).unwrap();
            if cyclic_abelian_avoids(&word, 5).unwrap().verdict {
                expected = Some(word);
                break 'outer;
            }
        }
        assert_eq!(Some(first), expected);
    }

    #[test]
    fn sharding_and_symmetry_leave_results_unchanged() {
        let count_task =
            SearchTask::abelian(2, 9, 4, Mode::Cyclic).wanting(Want::Count);
        let baseline = run_search(&count_task, 1).unwrap();
        assert_eq!(run_search(&count_task, 3).unwrap(), baseline);
        let reduced = count_task.clone().with_symmetry_reduction(true);
        assert_eq!(run_search(&reduced, 1).unwrap(), baseline);
        assert_eq!(run_search(&reduced, 2).unwrap(), baseline);

        let witness_task = SearchTask::abelian(2, 9, 5, Mode::Cyclic);
        assert_eq!(
            run_search(&witness_task, 1).unwrap(),
            run_search(&witness_task, 4).unwrap()
        );
    }

    #[test]
    fn all_witnesses_collects_every_avoider() {
        let task = SearchTask::abelian(2, 3, 4, Mode::Cyclic).wanting(Want::AllWitnesses);
        match run_search(&task, 1).unwrap() {
            SearchOutcome::AllWitnesses(words) => {
                assert_eq!(words.len(), 6);
                let mut sorted = words.clone();
                sorted.sort();
                assert_eq!(words, sorted, "enumeration order is lexicographic");
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn thue_morse_witness_small_lengths() {
        for n in [1usize, 2, 5, 12] {
            let factor = thue_morse_factor_witness(n).unwrap();
            assert_eq!(factor.len(), n);
            let report = cyclic_ordinary_avoids(&factor, rational(5, 2), true).unwrap();
            assert!(report.verdict);
        }
    }

    #[test]
    fn justin_witness_small_lengths() {
        for n in [1usize, 7, 20] {
            let factor = justin_factor_witness(n, 10_000).unwrap().expect("witness in budget");
            assert_eq!(factor.len(), n);
            assert!(cyclic_abelian_avoids(&factor, 5).unwrap().verdict);
        }
    }

    #[test]
    fn justin_budget_zero_finds_nothing() {
        assert_eq!(justin_factor_witness(3, 0).unwrap(), None);
    }

    #[test]
    fn search_witnesses_reverify() {
        // Any violating word reported by the detectors re-verifies; as does
        // any found witness against its own predicate.
        let task = SearchTask::abelian(2, 6, 3, Mode::Cyclic);
        if let Some(word) = find_witness(&task).unwrap() {
            assert!(cyclic_abelian_avoids(&word, 3).unwrap().verdict);
        }
        let failing = cyclic_abelian_avoids(&Word::parse("0011").unwrap(), 3).unwrap();
        let occ = failing.witness.unwrap();
        assert!(verify_occurrence(&failing.word, Mode::Cyclic, &occ));
    }

    #[test]
    fn results_file_round_trip() {
        let path = std::env::temp_dir()
            .join(format!("cyclav-results-{}-{:?}", std::process::id(), std::thread::current().id()));
        let _ = std::fs::remove_file(&path);
        assert_eq!(lookup_count_record(&path, 2, 3, 4).unwrap(), None);
        append_count_record(&path, 2, 3, 4, 6).unwrap();
        append_count_record(&path, 2, 14, 4, 112).unwrap();
        assert_eq!(lookup_count_record(&path, 2, 3, 4).unwrap(), Some(6));
        assert_eq!(lookup_count_record(&path, 2, 14, 4).unwrap(), Some(112));
        assert_eq!(lookup_count_record(&path, 2, 5, 4).unwrap(), None);
        std::fs::remove_file(&path).unwrap();
    }
}
