//! Explicit constructions of cyclic avoiders for every length.
//!
//! Binary words of any length avoiding abelian 8-powers cyclically are
//! assembled from a prefix `w` of the fixed point of `sigma3` and its
//! complement-reversal `w̄`:
//!
//! * odd `n`:            `f  = w̄ ⋄ w`   with `|w| = (n-1)/2` and `⋄ ∈ {0,1}`,
//! * `n ≡ 2 (mod 4)`:    `g₁ = w̄ w`     with `|w| = n/2` odd,
//! * `n ≡ 0 (mod 4)`:    `g₂ = w̄• w`    with `|w| = n/2` even,
//!
//! where `w̄•` is `w̄` with its final letter changed to 0. Over three or more
//! letters a fresh marker letter appended to an abelian `N`-free word gives a
//! cyclic avoider directly.

use crate::error::{Error, Result};
use crate::morphism::{builtin_morphism, Morphism};
use crate::word::Word;

/// How a requested `(alphabet, length, exponent)` triple is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// `f = w̄ ⋄ w` for odd target lengths over two letters.
    FOdd,
    /// `g₁ = w̄ w` for lengths `≡ 2 (mod 4)` over two letters.
    G1Even,
    /// `g₂ = w̄• w` for lengths `≡ 0 (mod 4)` over two letters.
    G2Even,
    /// Fixed-point prefix plus a fresh marker letter, for 3-5 letters.
    Marker,
    /// A full morphism iterate; only specific lengths exist.
    MorphicWitness,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FOdd => "f_odd",
            Method::G1Even => "g1_even",
            Method::G2Even => "g2_even",
            Method::Marker => "marker",
            Method::MorphicWitness => "morphic_witness",
        }
    }
}

/// The resolved plan for one construction request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub alphabet_size: usize,
    pub target_exponent: u32,
    pub length: usize,
    pub method: Method,
}

/// The default cyclically avoided abelian exponent per alphabet size:
/// 8 over two letters, then 4, 3, 2.
pub fn default_exponent(alphabet_size: usize) -> Result<u32> {
    match alphabet_size {
        2 => Ok(8),
        3 => Ok(4),
        4 => Ok(3),
        5 => Ok(2),
        k => Err(Error::UnsupportedAlphabet(k)),
    }
}

/// The exponent avoided by arbitrarily long morphic witnesses: 4, 3, 2 for
/// two, three, four letters.
pub fn a_infinity_exponent(alphabet_size: usize) -> Result<u32> {
    match alphabet_size {
        2 => Ok(4),
        3 => Ok(3),
        4 => Ok(2),
        k => Err(Error::UnsupportedAlphabet(k)),
    }
}

impl ConstructionRecipe {
    /// Dispatches `(alphabet, length)` to a method; an explicit exponent may
    /// select the morphic-witness route instead (only specific lengths
    /// exist there).
    pub fn resolve(alphabet_size: usize, length: usize, exponent: Option<u32>) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidLength(0));
        }
        let standard = default_exponent(alphabet_size)?;
        let wanted = exponent.unwrap_or(standard);
        if wanted == standard {
            let method = match alphabet_size {
                2 => {
                    if length % 2 == 1 {
                        Method::FOdd
                    } else if length % 4 == 2 {
                        Method::G1Even
                    } else {
                        Method::G2Even
                    }
                }
                _ => Method::Marker,
            };
            return Ok(ConstructionRecipe {
                alphabet_size,
                target_exponent: standard,
                length,
                method,
            });
        }
        if Ok(wanted) == a_infinity_exponent(alphabet_size) {
            // The witness chain only realizes the lengths of full iterates.
            let (morphism, seed) = witness_chain(alphabet_size)?;
            let mut current = seed;
            while current.len() < length {
                current = morphism.apply(&current)?;
            }
            if current.len() != length {
                return Err(Error::InvalidLength(length));
            }
            return Ok(ConstructionRecipe {
                alphabet_size,
                target_exponent: wanted,
                length,
                method: Method::MorphicWitness,
            });
        }
        Err(Error::InvalidExponent(format!(
            "no construction for exponent {wanted} over {alphabet_size} letters"
        )))
    }

    pub fn build(&self, diamond: u8) -> Result<Word> {
        match self.method {
            Method::FOdd | Method::G1Even | Method::G2Even => {
                build_binary_avoider(self.length, diamond)
            }
            Method::Marker => build_marked_avoider(self.alphabet_size, self.length),
            Method::MorphicWitness => a_infinity_witness(self.alphabet_size, self.length),
        }
    }
}

fn witness_chain(alphabet_size: usize) -> Result<(Morphism, Word)> {
    match alphabet_size {
        2 => Ok((builtin_morphism("sigma3")?, Word::parse("0")?)),
        3 => Ok((builtin_morphism("sigma4")?, Word::parse("0")?)),
        4 => Ok((builtin_morphism("keranen")?, Word::parse("01")?)),
        k => Err(Error::UnsupportedAlphabet(k)),
    }
}

fn sigma3_prefix(len: usize) -> Result<Word> {
    if len == 0 {
        return Ok(Word::empty(2));
    }
    let sigma3 = builtin_morphism("sigma3")?;
    let expanded = sigma3.fixed_point_prefix(&Word::parse("0")?, len)?;
    Ok(expanded.factor(0, len))
}

/// A binary word of length exactly `n` avoiding abelian 8-powers cyclically.
/// `diamond` is the free middle letter of the odd-length construction.
pub fn build_binary_avoider(n: usize, diamond: u8) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidLength(0));
    }
    if diamond > 1 {
        return Err(Error::SymbolOutOfRange { symbol: diamond, alphabet_size: 2 });
    }
    let w = sigma3_prefix(n / 2)?;
    let bar = if w.is_empty() { Word::empty(2) } else { w.complement_reverse()? };
    let word = if n % 2 == 1 {
        // f = w̄ ⋄ w
        bar.concat(&Word::new(vec![diamond], 2)?).concat(&w)
    } else if n % 4 == 2 {
        // |w| odd: g1 = w̄ w
        bar.concat(&w)
    } else {
        // |w| even and >= 2: g2 = w̄• w. The final letter of w̄ complements
        // the first letter of w (always 0), so the flip really changes it.
        let mut symbols = bar.symbols().to_vec();
        *symbols.last_mut().expect("n % 4 == 0 implies |w| >= 2") = 0;
        Word::new(symbols, 2)?.concat(&w)
    };
    debug_assert_eq!(word.len(), n);
    Ok(word)
}

/// A word of length `n` over `k` in `{3, 4, 5}` letters avoiding abelian
/// `N(k)`-powers cyclically (`N` = 4, 3, 2): a fixed-point prefix of length
/// `n - 1` with a fresh marker letter appended.
pub fn build_marked_avoider(k: usize, n: usize) -> Result<Word> {
    let base_morphism = match k {
        3 => builtin_morphism("sigma3")?,
        4 => builtin_morphism("sigma4")?,
        5 => builtin_morphism("keranen")?,
        other => return Err(Error::UnsupportedAlphabet(other)),
    };
    if n == 0 {
        return Err(Error::InvalidLength(0));
    }
    if n == 1 {
        return Word::new(vec![0], k);
    }
    let base = base_morphism
        .fixed_point_prefix(&Word::parse("0")?, n - 1)?
        .factor(0, n - 1)
        .with_alphabet_size(k - 1)?;
    Ok(base.append_marker())
}

/// Arbitrarily long cyclic avoiders: full iterates of `sigma3` on `0`
/// (two letters, exponent 4), `sigma4` on `0` (three letters, exponent 3),
/// or Keränen's morphism on `01` (four letters, exponent 2). Returns the
/// first iterate of length at least `min_len`.
pub fn a_infinity_witness(k: usize, min_len: usize) -> Result<Word> {
    let (morphism, seed) = witness_chain(k)?;
    morphism.fixed_point_prefix(&seed, min_len)
}
