//! Words over small alphabets, Parikh vectors, and the cumulative count
//! tables the repetition detectors are built on.
//!
//! Letters are dense indices `0..k`. Textual I/O maps `'0'..='9'` and then
//! `'a'..='z'` to indices; `'#'` denotes a marker letter appended to a word
//! and maps to the next free index (one past the largest base letter).

use std::fmt;
use std::ops::{Add, AddAssign};

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite word over an alphabet of `alphabet_size` letters.
///
/// Every symbol is an index strictly below `alphabet_size`. The empty word is
/// a legal value; operations that cannot accept it reject it individually.
///
/// Equality, ordering, and hashing look at the symbols only: the ambient
/// alphabet is context (the same word may be read over a larger alphabet)
/// and never changes a detector verdict.
#[derive(Debug, Clone)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.symbols.cmp(&other.symbols)
    }
}

fn char_to_index(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'a'..='z' => Some(c as u8 - b'a' + 10),
        _ => None,
    }
}

fn index_to_char(i: u8) -> char {
    match i {
        0..=9 => (b'0' + i) as char,
        10..=35 => (b'a' + i - 10) as char,
        36 => '#',
        _ => '?',
    }
}

impl Word {
    /// Builds a word after validating that every symbol fits the alphabet.
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::SymbolOutOfRange { symbol: bad, alphabet_size });
        }
        Ok(Word { symbols, alphabet_size })
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word { symbols: Vec::new(), alphabet_size }
    }

    /// Parses ASCII symbols, inferring the alphabet size as one past the
    /// largest letter seen (binary at minimum, so `"000"` reads as a binary
    /// word). A `'#'` maps to one past the largest base letter.
    pub fn parse(text: &str) -> Result<Self> {
        let mut base_max: Option<u8> = None;
        let mut has_marker = false;
        for c in text.chars() {
            if c == '#' {
                has_marker = true;
            } else {
                let i = char_to_index(c)
                    .ok_or_else(|| Error::WordParse(format!("unexpected character `{c}`")))?;
                base_max = Some(base_max.map_or(i, |m| m.max(i)));
            }
        }
        let marker = base_max.map_or(0, |m| m + 1);
        let symbols: Vec<u8> = text
            .chars()
            .map(|c| if c == '#' { marker } else { char_to_index(c).unwrap() })
            .collect();
        let alphabet_size = if has_marker {
            marker as usize + 1
        } else {
            base_max.map_or(0, |m| (m as usize + 1).max(2))
        };
        Ok(Word { symbols, alphabet_size })
    }

    /// Parses with a caller-fixed alphabet size; `'#'` maps to the top letter.
    pub fn parse_with_alphabet(text: &str, alphabet_size: usize) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            let i = if c == '#' {
                if alphabet_size == 0 {
                    return Err(Error::WordParse("`#` needs a nonempty alphabet".into()));
                }
                (alphabet_size - 1) as u8
            } else {
                char_to_index(c)
                    .ok_or_else(|| Error::WordParse(format!("unexpected character `{c}`")))?
            };
            if i as usize >= alphabet_size {
                return Err(Error::SymbolOutOfRange { symbol: i, alphabet_size });
            }
            symbols.push(i);
        }
        Ok(Word { symbols, alphabet_size })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// The factor `self[range]` as a word over the same alphabet.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word { symbols: self.symbols[start..end].to_vec(), alphabet_size: self.alphabet_size }
    }

    /// Widens the alphabet without touching the symbols.
    pub fn with_alphabet_size(mut self, alphabet_size: usize) -> Result<Self> {
        if let Some(&bad) = self.symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::SymbolOutOfRange { symbol: bad, alphabet_size });
        }
        self.alphabet_size = alphabet_size;
        Ok(self)
    }

    /// Concatenation; the result takes the wider of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word { symbols, alphabet_size: self.alphabet_size.max(other.alphabet_size) }
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        let mut symbols = Vec::with_capacity(self.len() * times);
        for _ in 0..times {
            symbols.extend_from_slice(&self.symbols);
        }
        Word { symbols, alphabet_size: self.alphabet_size }
    }

    /// The conjugate `self[i..] ++ self[..i]`; `i` may equal the length.
    pub fn conjugate(&self, i: usize) -> Result<Word> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.symbols[i..]);
        symbols.extend_from_slice(&self.symbols[..i]);
        Ok(Word { symbols, alphabet_size: self.alphabet_size })
    }

    /// The letter-complemented word read right to left (binary only). The
    /// balance is negated: `delta(w.complement_reverse()) == -delta(w)`.
    pub fn complement_reverse(&self) -> Result<Word> {
        if self.alphabet_size != 2 {
            return Err(Error::AlphabetMismatch { expected: 2, got: self.alphabet_size });
        }
        let symbols = self.symbols.iter().rev().map(|&s| 1 - s).collect();
        Ok(Word { symbols, alphabet_size: 2 })
    }

    /// Appends a fresh marker letter (index `alphabet_size`), enlarging the
    /// alphabet by one.
    pub fn append_marker(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.push(self.alphabet_size as u8);
        Word { symbols, alphabet_size: self.alphabet_size + 1 }
    }

    /// Plain ASCII rendering (`0-9a-z`, with index 36 shown as `#`).
    pub fn to_text(&self) -> String {
        self.symbols.iter().map(|&s| index_to_char(s)).collect()
    }

    /// Rendering that shows the letter `marker` as `#`.
    pub fn to_text_marked(&self, marker: u8) -> String {
        self.symbols
            .iter()
            .map(|&s| if s == marker { '#' } else { index_to_char(s) })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the one-word-per-line text format; `%` starts a comment line.
pub fn parse_word_file(text: &str) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        words.push(Word::parse(line)?);
    }
    Ok(words)
}

/// Per-letter occurrence counts: the abelian fingerprint of a word.
///
/// Two words are abelian equivalent exactly when their Parikh vectors are
/// componentwise equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    counts: Vec<u32>,
}

impl ParikhVector {
    pub fn zero(alphabet_size: usize) -> Self {
        ParikhVector { counts: vec![0; alphabet_size] }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    /// Sum of all counts, i.e. the length of any originating word.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

impl Add for ParikhVector {
    type Output = ParikhVector;

    fn add(mut self, rhs: ParikhVector) -> ParikhVector {
        self += rhs;
        self
    }
}

impl AddAssign for ParikhVector {
    fn add_assign(&mut self, rhs: ParikhVector) {
        assert_eq!(self.counts.len(), rhs.counts.len(), "alphabet sizes differ");
        for (a, b) in self.counts.iter_mut().zip(rhs.counts) {
            *a += b;
        }
    }
}

/// The Parikh vector `(|w|_a)_a` of `w`.
pub fn parikh(w: &Word) -> ParikhVector {
    let mut counts = vec![0u32; w.alphabet_size()];
    for &s in w.symbols() {
        counts[s as usize] += 1;
    }
    ParikhVector { counts }
}

/// The balance `|w|_0 - |w|_1` of a binary word. Positive means light,
/// negative heavy, zero neutral.
pub fn delta(w: &Word) -> Result<i64> {
    if w.alphabet_size() != 2 {
        return Err(Error::AlphabetMismatch { expected: 2, got: w.alphabet_size() });
    }
    let p = parikh(w);
    Ok(p.counts[0] as i64 - p.counts[1] as i64)
}

/// True when the gcd of the nonzero letter counts is 1. This is a sufficient
/// (not necessary) certificate that `w` avoids abelian `|w|`-powers
/// cyclically.
pub fn gcd_criterion(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let g = parikh(w)
        .counts()
        .iter()
        .filter(|&&c| c > 0)
        .fold(0u32, |acc, &c| acc.gcd(&c));
    Ok(g == 1)
}

/// Cumulative Parikh vectors `P[0..=len]` of a text, stored row-major.
///
/// `P[0]` is zero and `P[i+1] - P[i]` is a unit vector, so the block `[a, b)`
/// has Parikh vector `P[b] - P[a]` and blocks compare in `O(k)`.
#[derive(Debug, Clone)]
pub struct PrefixCountTable {
    k: usize,
    cum: Vec<u32>,
}

impl PrefixCountTable {
    pub fn from_symbols(symbols: &[u8], alphabet_size: usize) -> Self {
        let k = alphabet_size;
        let mut cum = vec![0u32; (symbols.len() + 1) * k];
        for (i, &s) in symbols.iter().enumerate() {
            let (prev, next) = cum.split_at_mut((i + 1) * k);
            next[..k].copy_from_slice(&prev[i * k..]);
            next[s as usize] += 1;
        }
        PrefixCountTable { k, cum }
    }

    pub fn new(w: &Word) -> Self {
        Self::from_symbols(w.symbols(), w.alphabet_size())
    }

    /// Number of table rows minus one, i.e. the text length.
    pub fn text_len(&self) -> usize {
        self.cum.len() / self.k - 1
    }

    /// Occurrences of `letter` among the first `prefix_len` symbols.
    pub fn count(&self, prefix_len: usize, letter: usize) -> u32 {
        self.cum[prefix_len * self.k + letter]
    }

    /// Parikh vector of the block `[a, b)`.
    pub fn block(&self, a: usize, b: usize) -> ParikhVector {
        let mut counts = vec![0u32; self.k];
        for (c, slot) in counts.iter_mut().enumerate() {
            *slot = self.count(b, c) - self.count(a, c);
        }
        ParikhVector { counts }
    }

    /// Whether the blocks `[a, b)` and `[c, d)` are abelian equivalent.
    pub fn blocks_abelian_equal(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let (ra, rb, rc, rd) = (a * self.k, b * self.k, c * self.k, d * self.k);
        (0..self.k).all(|i| {
            self.cum[rb + i] - self.cum[ra + i] == self.cum[rd + i] - self.cum[rc + i]
        })
    }
}
