//! Detectors for abelian and ordinary power avoidance in the linear,
//! circular, and cyclic senses.
//!
//! A word `w` avoids abelian `N`-powers *cyclically* when every abelian
//! `N`-power occurring in the periodic infinite word `w^ω` has period at
//! least `|w|`. Circular avoidance only forbids occurrences that fit inside a
//! conjugate of `w`; linear avoidance looks at `w` itself.
//!
//! The cyclic detectors scan periods `1..=⌊|w|/2⌋` by default: a power of
//! period `m` with `|w|/2 <= m < |w|` forces one of period `|w| - m`, so the
//! halved range decides the verdict. The full range remains available as
//! [`PeriodScan::Full`] and the equivalence of the two scans is exercised
//! exhaustively by the test suite.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_exponent, format_rational, rational_int, Rational};
use crate::word::{PrefixCountTable, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Cyclic,
    Circular,
    Linear,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Cyclic => "cyclic",
            Mode::Circular => "circular",
            Mode::Linear => "linear",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Abelian,
    Ordinary,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Abelian => "abelian",
            Kind::Ordinary => "ordinary",
        }
    }
}

/// Which period range a cyclic detector scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodScan {
    /// Periods `1..=⌊|w|/2⌋`; sound by the period-reduction argument.
    Halved,
    /// Periods `1..=|w|-1`; the naive oracle the halved scan is checked
    /// against.
    Full,
}

/// A located repetition: `⌊exponent⌋` abelian-equivalent blocks of length
/// `period` (abelian), or a `period`-periodic factor of length
/// `exponent * period` (ordinary), starting at `start`.
///
/// For cyclic and circular verdicts `start` indexes `w^ω` and is canonical
/// (`start < |w|`); for linear verdicts it indexes `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOccurrence {
    pub kind: Kind,
    pub start: usize,
    pub period: usize,
    pub exponent: Rational,
}

/// The outcome of one avoidance check. A false verdict always carries a
/// witness violating the mode's period bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceReport {
    pub word: Word,
    pub mode: Mode,
    pub kind: Kind,
    pub threshold: Rational,
    pub strict_plus: bool,
    pub verdict: bool,
    pub witness: Option<PowerOccurrence>,
}

impl AvoidanceReport {
    /// The stable JSON form:
    /// `{"word", "mode", "kind", "exponent", "verdict", "witness"}`.
    pub fn to_json(&self) -> Value {
        json!({
            "word": self.word.to_text(),
            "mode": self.mode.as_str(),
            "kind": self.kind.as_str(),
            "exponent": format_exponent(self.threshold, self.strict_plus),
            "verdict": self.verdict,
            "witness": match &self.witness {
                Some(occ) => json!({
                    "start": occ.start,
                    "period": occ.period,
                    "exponent": format_rational(occ.exponent),
                }),
                None => Value::Null,
            },
        })
    }
}

/// Block-count access over a bounded window of `w^ω`.
///
/// Small windows are expanded into a flat prefix-count table; large ones fall
/// back to modular arithmetic over a single-period table.
enum BlockCounts {
    Flat(PrefixCountTable),
    Modular { len: usize, base: PrefixCountTable, total: Vec<u32> },
}

const FLAT_ROWS_LIMIT: usize = 4_000_000;

impl BlockCounts {
    /// Counts covering `copies` repetitions of `w`.
    fn for_window(w: &Word, copies: usize) -> BlockCounts {
        let rows = w.len().saturating_mul(copies);
        if rows <= FLAT_ROWS_LIMIT {
            BlockCounts::Flat(PrefixCountTable::new(&w.repeat(copies)))
        } else {
            let base = PrefixCountTable::new(w);
            let total: Vec<u32> =
                (0..w.alphabet_size()).map(|c| base.count(w.len(), c)).collect();
            BlockCounts::Modular { len: w.len(), base, total }
        }
    }

    /// Whether the blocks `[a, a+len)` and `[b, b+len)` of `w^ω` are abelian
    /// equivalent.
    #[inline]
    fn blocks_equal(&self, a: usize, b: usize, len: usize) -> bool {
        match self {
            BlockCounts::Flat(table) => table.blocks_abelian_equal(a, a + len, b, b + len),
            BlockCounts::Modular { len: n, base, total } => {
                let count = |i: usize, c: usize| -> u64 {
                    (i / n) as u64 * total[c] as u64 + base.count(i % n, c) as u64
                };
                (0..total.len()).all(|c| {
                    count(a + len, c) - count(a, c) == count(b + len, c) - count(b, c)
                })
            }
        }
    }

    #[inline]
    fn is_abelian_power(&self, start: usize, period: usize, exponent: u32) -> bool {
        (0..exponent as usize - 1)
            .all(|i| self.blocks_equal(start + i * period, start + (i + 1) * period, period))
    }
}

fn require_abelian_exponent(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidExponent(format!("abelian exponent must be >= 2, got {n}")));
    }
    Ok(())
}

fn require_ordinary_exponent(e: Rational) -> Result<()> {
    if e <= rational_int(1) {
        return Err(Error::InvalidExponent(format!(
            "ordinary exponent must exceed 1, got {}",
            format_rational(e)
        )));
    }
    Ok(())
}

/// Finds the first abelian `exponent`-power in a pre-expanded text, scanning
/// starts in ascending order and, per start, periods in ascending order
/// (the lexicographically least `(start, period)` pair). Callers checking
/// `w^ω` expand the window themselves.
pub fn find_abelian_power(
    text: &Word,
    exponent: u32,
    periods: std::ops::RangeInclusive<usize>,
    starts: std::ops::RangeInclusive<usize>,
) -> Result<Option<PowerOccurrence>> {
    require_abelian_exponent(exponent)?;
    let n = exponent as usize;
    let len = text.len();
    let m_lo = (*periods.start()).max(1);
    let m_hi = (*periods.end()).min(len / n);
    let s_lo = *starts.start();
    let s_hi = (*starts.end()).min(len);
    if m_lo > m_hi || s_lo > s_hi {
        return Ok(None);
    }
    let table = PrefixCountTable::new(text);
    for s in s_lo..=s_hi {
        for m in m_lo..=m_hi {
            if s + n * m > len {
                break;
            }
            let equal = (0..n - 1)
                .all(|i| table.blocks_abelian_equal(s + i * m, s + (i + 1) * m, s + (i + 1) * m, s + (i + 2) * m));
            if equal {
                return Ok(Some(PowerOccurrence {
                    kind: Kind::Abelian,
                    start: s,
                    period: m,
                    exponent: rational_int(exponent as i64),
                }));
            }
        }
    }
    Ok(None)
}

fn abelian_report(
    w: &Word,
    mode: Mode,
    exponent: u32,
    witness: Option<PowerOccurrence>,
) -> AvoidanceReport {
    AvoidanceReport {
        word: w.clone(),
        mode,
        kind: Kind::Abelian,
        threshold: rational_int(exponent as i64),
        strict_plus: false,
        verdict: witness.is_none(),
        witness,
    }
}

/// Linear check: does `w` itself contain an abelian `exponent`-power?
/// The witness scan is period-major (smallest period, then smallest start).
pub fn linear_abelian_avoids(w: &Word, exponent: u32) -> Result<AvoidanceReport> {
    require_abelian_exponent(exponent)?;
    let n = exponent as usize;
    let len = w.len();
    let table = PrefixCountTable::new(w);
    let mut witness = None;
    'outer: for m in 1..=len / n {
        for s in 0..=len - n * m {
            let equal = (0..n - 1)
                .all(|i| table.blocks_abelian_equal(s + i * m, s + (i + 1) * m, s + (i + 1) * m, s + (i + 2) * m));
            if equal {
                witness = Some(PowerOccurrence {
                    kind: Kind::Abelian,
                    start: s,
                    period: m,
                    exponent: rational_int(exponent as i64),
                });
                break 'outer;
            }
        }
    }
    Ok(abelian_report(w, Mode::Linear, exponent, witness))
}

/// True iff no abelian `exponent`-power occurs as a factor of `w`.
pub fn is_abelian_n_free(w: &Word, exponent: u32) -> Result<bool> {
    Ok(linear_abelian_avoids(w, exponent)?.verdict)
}

/// Cyclic check with an explicit period range, the halved range being the
/// default production scan and the full range the oracle fallback.
pub fn cyclic_abelian_avoids_scanned(
    w: &Word,
    exponent: u32,
    scan: PeriodScan,
) -> Result<AvoidanceReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_abelian_exponent(exponent)?;
    let len = w.len();
    let max_m = match scan {
        PeriodScan::Halved => len / 2,
        PeriodScan::Full => len - 1,
    };
    // Any abelian power of period m < |w| at a canonical start s < |w| lies
    // inside the window w^(N+1): s + N*m <= (N+1)(|w|-1).
    let counts = BlockCounts::for_window(w, exponent as usize + 1);
    let mut witness = None;
    'outer: for m in 1..=max_m {
        for s in 0..len {
            if counts.is_abelian_power(s, m, exponent) {
                witness = Some(PowerOccurrence {
                    kind: Kind::Abelian,
                    start: s,
                    period: m,
                    exponent: rational_int(exponent as i64),
                });
                break 'outer;
            }
        }
    }
    Ok(abelian_report(w, Mode::Cyclic, exponent, witness))
}

/// Does every abelian `exponent`-power in `w^ω` have period at least `|w|`?
pub fn cyclic_abelian_avoids(w: &Word, exponent: u32) -> Result<AvoidanceReport> {
    cyclic_abelian_avoids_scanned(w, exponent, PeriodScan::Halved)
}

/// Does no conjugate of `w` contain an abelian `exponent`-power? Equivalent
/// to forbidding occurrences of total length at most `|w|` in `w^ω` at
/// canonical starts.
pub fn circular_abelian_avoids(w: &Word, exponent: u32) -> Result<AvoidanceReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_abelian_exponent(exponent)?;
    let len = w.len();
    let n = exponent as usize;
    let counts = BlockCounts::for_window(w, 2);
    let mut witness = None;
    'outer: for m in 1..=len / n {
        for s in 0..len {
            if counts.is_abelian_power(s, m, exponent) {
                witness = Some(PowerOccurrence {
                    kind: Kind::Abelian,
                    start: s,
                    period: m,
                    exponent: rational_int(exponent as i64),
                });
                break 'outer;
            }
        }
    }
    Ok(abelian_report(w, Mode::Circular, exponent, witness))
}

/// The least abelian exponent avoided cyclically, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinExponent {
    Finite(u32),
    /// `w` fails at exponent `|w|`, hence at every exponent (it is, up to
    /// conjugacy, built from an abelian power of short period).
    Infinite,
}

impl std::fmt::Display for MinExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinExponent::Finite(n) => write!(f, "{n}"),
            MinExponent::Infinite => write!(f, "infinity"),
        }
    }
}

/// The least `N >= 2` such that `w` avoids abelian `N`-powers cyclically.
///
/// Avoiding `N` implies avoiding `N + 1` (every abelian `(N+1)`-power
/// contains an abelian `N`-power of the same period), so the ascending scan
/// stops at the first success; failure at `N = |w|` implies failure for every
/// `N`.
pub fn min_avoided_abelian_exponent(w: &Word) -> Result<MinExponent> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let top = (w.len() as u32).max(2);
    for n in 2..=top {
        if cyclic_abelian_avoids(w, n)?.verdict {
            return Ok(MinExponent::Finite(n));
        }
    }
    Ok(MinExponent::Infinite)
}

/// Maximal-extension run lengths for one period over a window of `w^ω`.
///
/// `runs[s]` is the number of consecutive positions `i >= s` with
/// `T[i] == T[i + p]`, capped at `cap`; the maximal `p`-periodic factor
/// starting at `s` has length `runs[s] + p`.
fn periodic_runs(text: &[u8], modulus: usize, p: usize, cap: usize, runs: &mut Vec<usize>) {
    let n = modulus;
    runs.clear();
    runs.resize(n, 0);
    let mut next = 0usize;
    // The tail keeps runs that straddle the canonical region exact: starting
    // the recurrence `cap + 1` past it cannot truncate any capped value.
    for s in (0..n + cap).rev() {
        let matched = text[s % n] == text[(s + p) % n];
        let r = if matched { (next + 1).min(cap) } else { 0 };
        if s < n {
            runs[s] = r;
        }
        next = r;
    }
}

pub(crate) fn ordinary_violation(run: usize, p: usize, e: Rational, strict_plus: bool) -> bool {
    // exponent (run + p) / p compared against e = a/b by cross-multiplication
    let lhs = (run + p) as i64 * e.denom();
    let rhs = e.numer() * p as i64;
    if strict_plus {
        lhs > rhs
    } else {
        lhs >= rhs
    }
}

fn ordinary_report(
    w: &Word,
    mode: Mode,
    e: Rational,
    strict_plus: bool,
    witness: Option<PowerOccurrence>,
) -> AvoidanceReport {
    AvoidanceReport {
        word: w.clone(),
        mode,
        kind: Kind::Ordinary,
        threshold: e,
        strict_plus,
        verdict: witness.is_none(),
        witness,
    }
}

fn cyclic_ordinary_scan(
    w: &Word,
    e: Rational,
    strict_plus: bool,
    scan: PeriodScan,
    circular: bool,
) -> Result<AvoidanceReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_ordinary_exponent(e)?;
    let n = w.len();
    let ceil_e = e.ceil().to_integer() as usize;
    let max_p = if circular {
        n - 1
    } else {
        match scan {
            PeriodScan::Halved => n / 2,
            PeriodScan::Full => n - 1,
        }
    };
    let text = w.symbols();
    let mode = if circular { Mode::Circular } else { Mode::Cyclic };
    let mut runs = Vec::new();
    for p in 1..=max_p {
        // Capping the exponent at ceil(e) + 1 already decides the verdict,
        // and keeps the scan inside the window w^(ceil(e)+2).
        let cap = ceil_e * p;
        periodic_runs(text, n, p, cap, &mut runs);
        for (s, &run) in runs.iter().enumerate() {
            // In the circular sense only factors that fit inside a conjugate
            // count, so the factor length is capped at |w|.
            let run = if circular { run.min(n - p) } else { run };
            if ordinary_violation(run, p, e, strict_plus) {
                let witness = PowerOccurrence {
                    kind: Kind::Ordinary,
                    start: s,
                    period: p,
                    exponent: Rational::new((run + p) as i64, p as i64),
                };
                return Ok(ordinary_report(w, mode, e, strict_plus, Some(witness)));
            }
        }
    }
    Ok(ordinary_report(w, mode, e, strict_plus, None))
}

/// Cyclic ordinary check with an explicit period range (oracle switch).
pub fn cyclic_ordinary_avoids_scanned(
    w: &Word,
    e: Rational,
    strict_plus: bool,
    scan: PeriodScan,
) -> Result<AvoidanceReport> {
    cyclic_ordinary_scan(w, e, strict_plus, scan, false)
}

/// Does every `p`-periodic factor of `w^ω` with `p < |w|` have exponent
/// below `e` (`strict_plus = false`) or at most `e` (`strict_plus = true`)?
pub fn cyclic_ordinary_avoids(w: &Word, e: Rational, strict_plus: bool) -> Result<AvoidanceReport> {
    cyclic_ordinary_scan(w, e, strict_plus, PeriodScan::Halved, false)
}

/// As [`cyclic_ordinary_avoids`], but only occurrences that fit inside a
/// conjugate of `w` (length at most `|w|`) count.
pub fn circular_ordinary_avoids(
    w: &Word,
    e: Rational,
    strict_plus: bool,
) -> Result<AvoidanceReport> {
    cyclic_ordinary_scan(w, e, strict_plus, PeriodScan::Full, true)
}

/// Linear ordinary check: maximal exponents of periodic factors of `w`
/// itself.
pub fn linear_ordinary_avoids(w: &Word, e: Rational, strict_plus: bool) -> Result<AvoidanceReport> {
    require_ordinary_exponent(e)?;
    let n = w.len();
    let text = w.symbols();
    for p in 1..n {
        let mut next = 0usize;
        let mut runs = vec![0usize; n];
        for s in (0..n).rev() {
            let matched = s + p < n && text[s] == text[s + p];
            let r = if matched { next + 1 } else { 0 };
            runs[s] = r;
            next = r;
        }
        for (s, &run) in runs.iter().enumerate() {
            if ordinary_violation(run, p, e, strict_plus) {
                let witness = PowerOccurrence {
                    kind: Kind::Ordinary,
                    start: s,
                    period: p,
                    exponent: Rational::new((run + p) as i64, p as i64),
                };
                return Ok(ordinary_report(w, Mode::Linear, e, strict_plus, Some(witness)));
            }
        }
    }
    Ok(ordinary_report(w, Mode::Linear, e, strict_plus, None))
}

/// Re-derives an occurrence from scratch: block equalities for abelian
/// witnesses, symbol equalities for ordinary ones, plus the period bound of
/// the mode. Used to validate every witness any search reports.
pub fn verify_occurrence(w: &Word, mode: Mode, occ: &PowerOccurrence) -> bool {
    let n = w.len();
    if n == 0 || occ.period == 0 {
        return false;
    }
    let at = |i: usize| -> u8 {
        match mode {
            Mode::Linear => w.symbols()[i],
            _ => w.symbols()[i % n],
        }
    };
    match occ.kind {
        Kind::Abelian => {
            if !occ.exponent.is_integer() {
                return false;
            }
            let reps = *occ.exponent.numer() as usize;
            let total = occ.start + reps * occ.period;
            let in_bounds = match mode {
                Mode::Cyclic => occ.period < n && occ.start < n,
                Mode::Circular => reps * occ.period <= n && occ.start < n,
                Mode::Linear => total <= n,
            };
            if reps < 2 || !in_bounds {
                return false;
            }
            let block = |b: usize| -> Vec<u32> {
                let mut counts = vec![0u32; w.alphabet_size()];
                for i in 0..occ.period {
                    counts[at(occ.start + b * occ.period + i) as usize] += 1;
                }
                counts
            };
            let first = block(0);
            (1..reps).all(|b| block(b) == first)
        }
        Kind::Ordinary => {
            let length = occ.exponent * Rational::new(occ.period as i64, 1);
            if !length.is_integer() {
                return false;
            }
            let length = *length.numer() as usize;
            let in_bounds = match mode {
                Mode::Cyclic => occ.period < n && occ.start < n,
                Mode::Circular => length <= n && occ.start < n,
                Mode::Linear => occ.start + length <= n,
            };
            if length < occ.period || !in_bounds {
                return false;
            }
            (occ.start..occ.start + length - occ.period)
                .all(|i| at(i) == at(i + occ.period))
        }
    }
}
