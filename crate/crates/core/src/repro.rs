//! The reproduction suite: every headline computational claim re-derived
//! from scratch, as one pass/fail table.
//!
//! Each criterion is an independent runner so the acceptance tests and the
//! CLI `repro` subcommand share a single source of truth. The `Fast` suite
//! trims sweep bounds for a quick smoke run; `Full` is the real gate.

use std::collections::HashSet;
use std::time::Instant;

use crate::avoidance::{
    circular_abelian_avoids, circular_ordinary_avoids, cyclic_abelian_avoids,
    cyclic_abelian_avoids_scanned, cyclic_ordinary_avoids, cyclic_ordinary_avoids_scanned,
    min_avoided_abelian_exponent, MinExponent, Mode, PeriodScan,
};
use crate::constructions::{a_infinity_witness, build_binary_avoider, build_marked_avoider};
use crate::error::Result;
use crate::morphism::builtin_morphism;
use crate::rational::{rational, rational_int};
use crate::search::{
    count_cyclic_avoiders, find_witness, justin_factor_witness, run_search,
    thue_morse_factor_witness, verify_delta_lemmas, SearchOutcome, SearchTask, Want,
};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

/// One row of the reproduction table.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub label: &'static str,
    /// The verified claim, phrased as the computation performed.
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

pub const CRITERION_COUNT: usize = 13;

/// The first fourteen counts of binary length-n words avoiding abelian
/// 4-powers cyclically (OEIS A334831).
pub const A334831_PREFIX: [u64; 14] = [2, 2, 6, 8, 10, 6, 28, 0, 36, 120, 132, 168, 364, 112];

/// Lengths at which no ternary word avoids squares cyclically.
pub const TERNARY_SQUARE_EXCEPTIONS: [usize; 6] = [5, 7, 9, 10, 14, 17];

/// Quaternary words of the exceptional lengths that avoid squares cyclically.
pub const QUATERNARY_SQUARE_AVOIDERS: [&str; 6] = [
    "01023",
    "0102013",
    "010201203",
    "0102010313",
    "01020103010213",
    "01020103010212313",
];

/// Ternary words of the exceptional lengths that avoid 2+-powers cyclically.
pub const TERNARY_SQUARE_PLUS_AVOIDERS: [&str; 6] = [
    "00102",
    "0010012",
    "001001102",
    "0010011202",
    "00100112001002",
    "00100112001001202",
];

fn outcome(
    id: usize,
    label: &'static str,
    claim: &'static str,
    run: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionOutcome {
    let start = Instant::now();
    let (passed, detail) = match run() {
        Ok(result) => result,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionOutcome { id, label, claim, passed, detail, millis: start.elapsed().as_millis() }
}

fn criterion_01_a334831(_suite: Suite) -> CriterionOutcome {
    outcome(
        1,
        "A334831 prefix",
        "count of binary cyclic abelian-4 avoiders, lengths 1..=14",
        || {
            let mut counts = Vec::new();
            for n in 1..=A334831_PREFIX.len() {
                counts.push(count_cyclic_avoiders(2, n, 4)?);
            }
            let passed = counts == A334831_PREFIX;
            Ok((passed, format!("computed {counts:?}")))
        },
    )
}

fn criterion_02_length8(_suite: Suite) -> CriterionOutcome {
    outcome(
        2,
        "length-8 nonexistence",
        "no binary word of length 8 avoids abelian 4-powers cyclically",
        || {
            let count = count_cyclic_avoiders(2, 8, 4)?;
            let witness = find_witness(&SearchTask::abelian(2, 8, 4, Mode::Cyclic))?;
            let passed = count == 0 && witness.is_none();
            Ok((passed, format!("count {count}, witness {witness:?}")))
        },
    )
}

fn criterion_03_construction_sweep(suite: Suite) -> CriterionOutcome {
    let top = match suite {
        Suite::Fast => 80,
        Suite::Full => 300,
    };
    outcome(
        3,
        "binary construction sweep",
        "constructed words of every length avoid abelian 8-powers cyclically",
        move || {
            for n in 1..=top {
                for diamond in [0u8, 1] {
                    let word = build_binary_avoider(n, diamond)?;
                    if word.len() != n {
                        return Ok((false, format!("length {n} diamond {diamond}: bad length")));
                    }
                    if !cyclic_abelian_avoids(&word, 8)?.verdict {
                        return Ok((false, format!("length {n} diamond {diamond}: violation")));
                    }
                }
            }
            Ok((true, format!("lengths 1..={top}, both diamonds")))
        },
    )
}

fn criterion_04_marked(suite: Suite) -> CriterionOutcome {
    let top = match suite {
        Suite::Fast => 60,
        Suite::Full => 150,
    };
    outcome(
        4,
        "marked constructions",
        "marker-letter words over 3,4,5 letters avoid abelian 4,3,2-powers cyclically",
        move || {
            for (k, exponent) in [(3usize, 4u32), (4, 3), (5, 2)] {
                for n in 1..=top {
                    let word = build_marked_avoider(k, n)?;
                    let distinct: HashSet<u8> = word.symbols().iter().copied().collect();
                    if word.len() != n || distinct.len() > k {
                        return Ok((false, format!("k {k} length {n}: bad shape")));
                    }
                    if !cyclic_abelian_avoids(&word, exponent)?.verdict {
                        return Ok((false, format!("k {k} length {n}: violation")));
                    }
                }
            }
            Ok((true, format!("k in 3..=5, lengths 1..={top}")))
        },
    )
}

fn criterion_05_a_infinity(suite: Suite) -> CriterionOutcome {
    let (chain_cap, phi_iterations) = match suite {
        Suite::Fast => (1000usize, 1usize),
        Suite::Full => (5000, 2),
    };
    outcome(
        5,
        "arbitrarily long witnesses",
        "sigma3/sigma4 iterates avoid abelian 4/3-powers cyclically; Keranen iterates of 01 avoid abelian squares cyclically",
        move || {
            for (k, exponent) in [(2usize, 4u32), (3, 3)] {
                let mut min_len = 1;
                loop {
                    let word = a_infinity_witness(k, min_len)?;
                    if word.len() > chain_cap {
                        break;
                    }
                    if !cyclic_abelian_avoids(&word, exponent)?.verdict {
                        return Ok((false, format!("k {k} iterate of length {}", word.len())));
                    }
                    min_len = word.len() + 1;
                }
            }
            let phi = builtin_morphism("keranen")?;
            let mut word = Word::parse("01")?;
            for i in 1..=phi_iterations {
                word = phi.apply(&word)?;
                if !cyclic_abelian_avoids(&word, 2)?.verdict {
                    return Ok((false, format!("phi iterate {i} of length {}", word.len())));
                }
            }
            Ok((true, format!("chains to length {chain_cap}; {phi_iterations} phi iterates of 01")))
        },
    )
}

fn criterion_06_delta_lemmas(_suite: Suite) -> CriterionOutcome {
    outcome(
        6,
        "balance checks",
        "finite balance bounds over the factors of sigma3 up to length 173",
        || {
            let reports = verify_delta_lemmas()?;
            let passed = reports.iter().all(|r| r.passed());
            let detail = reports
                .iter()
                .map(|r| {
                    format!(
                        "[{}..={}] checked {} min_delta {} violations {}",
                        r.min_len,
                        r.max_len,
                        r.checked,
                        r.min_delta,
                        r.violations.len()
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            Ok((passed, detail))
        },
    )
}

fn criterion_07_ternary_squares(suite: Suite) -> CriterionOutcome {
    let top = match suite {
        Suite::Fast => 12,
        Suite::Full => 24,
    };
    outcome(
        7,
        "ternary cyclic squares",
        "ternary words avoiding squares cyclically exist exactly away from the six exceptional lengths",
        move || {
            for n in 1..=top {
                let task = SearchTask::ordinary(3, n, rational_int(2), false, Mode::Cyclic);
                let witness = find_witness(&task)?;
                let expected_absent = TERNARY_SQUARE_EXCEPTIONS.contains(&n);
                match (&witness, expected_absent) {
                    (Some(_), true) => {
                        return Ok((false, format!("length {n}: unexpected witness {witness:?}")))
                    }
                    (None, false) => return Ok((false, format!("length {n}: no witness"))),
                    (Some(word), false) => {
                        if !cyclic_ordinary_avoids(word, rational_int(2), false)?.verdict {
                            return Ok((false, format!("length {n}: witness fails re-check")));
                        }
                    }
                    (None, true) => {}
                }
            }
            Ok((true, format!("lengths 1..={top}, exceptions {TERNARY_SQUARE_EXCEPTIONS:?}")))
        },
    )
}

fn criterion_08_word_list(_suite: Suite) -> CriterionOutcome {
    outcome(
        8,
        "named example words",
        "the recorded example words pass exactly the checks claimed for them",
        || {
            for text in QUATERNARY_SQUARE_AVOIDERS {
                let word = Word::parse(text)?;
                if !cyclic_ordinary_avoids(&word, rational_int(2), false)?.verdict {
                    return Ok((false, format!("{text} fails cyclic squares")));
                }
            }
            for text in TERNARY_SQUARE_PLUS_AVOIDERS {
                let word = Word::parse(text)?;
                if !cyclic_ordinary_avoids(&word, rational_int(2), true)?.verdict {
                    return Ok((false, format!("{text} fails cyclic 2+-powers")));
                }
            }
            let word = Word::parse("00001011")?;
            if !cyclic_abelian_avoids(&word, 5)?.verdict {
                return Ok((false, "00001011 fails cyclic abelian 5".into()));
            }
            let word = Word::parse("00010011")?;
            if !circular_abelian_avoids(&word, 4)?.verdict {
                return Ok((false, "00010011 fails circular abelian 4".into()));
            }
            if cyclic_abelian_avoids(&word, 4)?.verdict {
                return Ok((false, "00010011 unexpectedly passes cyclic abelian 4".into()));
            }
            if min_avoided_abelian_exponent(&Word::parse("1000100")?)? != MinExponent::Finite(7) {
                return Ok((false, "threshold of 1000100 is not 7".into()));
            }
            if !cyclic_abelian_avoids(&Word::parse("001122")?, 3)?.verdict {
                return Ok((false, "001122 fails cyclic abelian 3".into()));
            }
            Ok((true, "14 word checks".into()))
        },
    )
}

fn criterion_09_thue_morse(suite: Suite) -> CriterionOutcome {
    let top = match suite {
        Suite::Fast => 50,
        Suite::Full => 150,
    };
    outcome(
        9,
        "Thue-Morse factor sweep",
        "a Thue-Morse factor of every length avoids 5/2+-powers cyclically",
        move || {
            let tm = builtin_morphism("thue_morse")?;
            for n in 1..=top {
                let factor = thue_morse_factor_witness(n)?;
                if factor.len() != n {
                    return Ok((false, format!("length {n}: bad factor length")));
                }
                if !cyclic_ordinary_avoids(&factor, rational(5, 2), true)?.verdict {
                    return Ok((false, format!("length {n}: witness fails re-check")));
                }
                // Confirm it really is a Thue-Morse factor.
                let haystack = tm.fixed_point_prefix(&Word::parse("0")?, 64 * n.max(8))?;
                let found = haystack
                    .symbols()
                    .windows(n)
                    .any(|window| window == factor.symbols());
                if !found {
                    return Ok((false, format!("length {n}: not a Thue-Morse factor")));
                }
            }
            Ok((true, format!("lengths 1..={top}")))
        },
    )
}

fn criterion_10_oracles(suite: Suite) -> CriterionOutcome {
    let (binary_top, ternary_top, square_top) = match suite {
        Suite::Fast => (9usize, 7usize, 8usize),
        Suite::Full => (12, 9, 11),
    };
    outcome(
        10,
        "detector oracle equivalences",
        "halved and full period scans agree; circular and cyclic square avoidance coincide",
        move || {
            // Abelian: halved vs full period range.
            for (k, top) in [(2usize, binary_top), (3, ternary_top)] {
                for word in all_words(k, top) {
                    for exponent in 2..=8u32 {
                        let halved =
                            cyclic_abelian_avoids_scanned(&word, exponent, PeriodScan::Halved)?;
                        let full =
                            cyclic_abelian_avoids_scanned(&word, exponent, PeriodScan::Full)?;
                        if halved.verdict != full.verdict {
                            return Ok((
                                false,
                                format!("abelian scan mismatch at {} N={exponent}", word),
                            ));
                        }
                    }
                    for (num, den) in [(2i64, 1i64), (5, 2), (3, 1)] {
                        let e = rational(num, den);
                        for plus in [false, true] {
                            let halved = cyclic_ordinary_avoids_scanned(
                                &word,
                                e,
                                plus,
                                PeriodScan::Halved,
                            )?;
                            let full = cyclic_ordinary_avoids_scanned(
                                &word,
                                e,
                                plus,
                                PeriodScan::Full,
                            )?;
                            if halved.verdict != full.verdict {
                                return Ok((
                                    false,
                                    format!(
                                        "ordinary scan mismatch at {} E={num}/{den} plus={plus}",
                                        word
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
            // Circular and cyclic square avoidance are the same concept.
            for k in [2usize, 3] {
                for word in all_words(k, square_top) {
                    let cyclic = cyclic_ordinary_avoids(&word, rational_int(2), false)?.verdict;
                    let circular =
                        circular_ordinary_avoids(&word, rational_int(2), false)?.verdict;
                    if cyclic != circular {
                        return Ok((false, format!("square equivalence fails at {}", word)));
                    }
                }
            }
            Ok((
                true,
                format!(
                    "binary <= {binary_top}, ternary <= {ternary_top}, squares <= {square_top}"
                ),
            ))
        },
    )
}

fn criterion_11_morphism_preservation(suite: Suite) -> CriterionOutcome {
    let top = match suite {
        Suite::Fast => 9,
        Suite::Full => 12,
    };
    outcome(
        11,
        "image preservation",
        "sigma3 maps every short binary cyclic abelian-4 avoider to another one",
        move || {
            let sigma3 = builtin_morphism("sigma3")?;
            let mut images = 0usize;
            for n in 2..=top {
                let task = SearchTask::abelian(2, n, 4, Mode::Cyclic).wanting(Want::AllWitnesses);
                let avoiders = match run_search(&task, 1)? {
                    SearchOutcome::AllWitnesses(words) => words,
                    _ => unreachable!(),
                };
                for word in avoiders {
                    let image = sigma3.apply(&word)?;
                    images += 1;
                    if !cyclic_abelian_avoids(&image, 4)?.verdict {
                        return Ok((false, format!("image of {} has a short power", word)));
                    }
                }
            }
            Ok((true, format!("{images} images over lengths 2..={top}")))
        },
    )
}

fn criterion_12_justin(suite: Suite) -> CriterionOutcome {
    let (top, budget) = match suite {
        Suite::Fast => (40usize, 100_000usize),
        Suite::Full => (120, 1_000_000),
    };
    outcome(
        12,
        "Justin factor sweep",
        "the fixed point of Justin's morphism has factors of every length avoiding abelian 5-powers cyclically",
        move || {
            for n in 1..=top {
                match justin_factor_witness(n, budget)? {
                    Some(factor) => {
                        if factor.len() != n
                            || !cyclic_abelian_avoids(&factor, 5)?.verdict
                        {
                            return Ok((false, format!("length {n}: witness fails re-check")));
                        }
                    }
                    None => return Ok((false, format!("length {n}: budget {budget} exhausted"))),
                }
            }
            Ok((true, format!("lengths 1..={top}, budget {budget}")))
        },
    )
}

fn criterion_13_classical(_suite: Suite) -> CriterionOutcome {
    outcome(
        13,
        "classical nonexistence",
        "no ternary word of length 8 is abelian square-free; no binary word of length 10 is abelian cube-free",
        || {
            let ternary = find_witness(&SearchTask::abelian(3, 8, 2, Mode::Linear))?;
            let binary = find_witness(&SearchTask::abelian(2, 10, 3, Mode::Linear))?;
            let passed = ternary.is_none() && binary.is_none();
            Ok((passed, format!("ternary {ternary:?}, binary {binary:?}")))
        },
    )
}

/// Every word of length `1..=max_len` over `k` letters, lengths ascending
/// and lexicographic within a length.
fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut words = Vec::new();
    for len in 1..=max_len {
        for encoded in 0..(k as u64).pow(len as u32) {
            let mut value = encoded;
            let mut symbols = vec![0u8; len];
            for slot in symbols.iter_mut().rev() {
                *slot = (value % k as u64) as u8;
                value /= k as u64;
            }
            words.push(Word::new(symbols, k).unwrap());
        }
    }
    words
}

/// Runs one criterion by id (1-based).
pub fn run_criterion(id: usize, suite: Suite) -> CriterionOutcome {
    match id {
        1 => criterion_01_a334831(suite),
        2 => criterion_02_length8(suite),
        3 => criterion_03_construction_sweep(suite),
        4 => criterion_04_marked(suite),
        5 => criterion_05_a_infinity(suite),
        6 => criterion_06_delta_lemmas(suite),
        7 => criterion_07_ternary_squares(suite),
        8 => criterion_08_word_list(suite),
        9 => criterion_09_thue_morse(suite),
        10 => criterion_10_oracles(suite),
        11 => criterion_11_morphism_preservation(suite),
        12 => criterion_12_justin(suite),
        13 => criterion_13_classical(suite),
        other => panic!("no criterion {other}"),
    }
}

/// Runs the whole table in order.
pub fn run_all(suite: Suite) -> Vec<CriterionOutcome> {
    (1..=CRITERION_COUNT).map(|id| run_criterion(id, suite)).collect()
}
