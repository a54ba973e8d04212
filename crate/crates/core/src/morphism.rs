//! Morphisms between free monoids: the builtin catalog, fixed-point prefix
//! generation, and exact bounded-length enumeration of a morphism's language.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::Word;

/// A morphism given by one nonempty image word per domain letter.
///
/// Images must be nonempty: an erasing morphism cannot be abelian power-free
/// and would break the termination of the language closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Vec<u8>>,
    domain_size: usize,
    codomain_size: usize,
}

impl Morphism {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let domain_size = images.len();
        let mut codomain_size = 0;
        for (letter, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::EmptyImage(letter as u8));
            }
            codomain_size = codomain_size.max(image.alphabet_size());
        }
        let images = images.into_iter().map(|w| w.symbols().to_vec()).collect();
        Ok(Morphism { images, domain_size, codomain_size })
    }

    /// Parses the `letter -> image` one-rule-per-line format; `%` starts a
    /// comment. Every letter `0..r` must have exactly one rule.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rules: Vec<(u8, Word)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('%') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::MorphismParse(format!("missing `->` in `{line}`")))?;
            let lhs = Word::parse(lhs.trim())?;
            if lhs.len() != 1 {
                return Err(Error::MorphismParse(format!(
                    "left side of `{line}` must be a single letter"
                )));
            }
            rules.push((lhs.symbols()[0], Word::parse(rhs.trim())?));
        }
        if rules.is_empty() {
            return Err(Error::MorphismParse("no rules".into()));
        }
        let domain = rules.iter().map(|(l, _)| *l as usize + 1).max().unwrap();
        let mut images: Vec<Option<Word>> = vec![None; domain];
        for (letter, image) in rules {
            if images[letter as usize].replace(image).is_some() {
                return Err(Error::MorphismParse(format!("duplicate rule for letter {letter}")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(letter, img)| {
                img.ok_or_else(|| Error::MorphismParse(format!("no rule for letter {letter}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images)
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn image(&self, letter: u8) -> Word {
        Word::new(self.images[letter as usize].clone(), self.codomain_size)
            .expect("images are validated at construction")
    }

    fn image_len(&self, letter: u8) -> usize {
        self.images[letter as usize].len()
    }

    fn apply_symbols(&self, symbols: &[u8]) -> Vec<u8> {
        let len = symbols.iter().map(|&s| self.image_len(s)).sum();
        let mut out = Vec::with_capacity(len);
        for &s in symbols {
            out.extend_from_slice(&self.images[s as usize]);
        }
        out
    }

    /// The image of `w`: images concatenated in order.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet_size() > self.domain_size {
            return Err(Error::AlphabetMismatch {
                expected: self.domain_size,
                got: w.alphabet_size(),
            });
        }
        Word::new(self.apply_symbols(w.symbols()), self.codomain_size)
    }

    fn require_endomorphism(&self) -> Result<()> {
        if self.codomain_size > self.domain_size {
            return Err(Error::NotEndomorphism {
                domain: self.domain_size,
                image: self.codomain_size,
            });
        }
        Ok(())
    }

    /// With nonempty images, iterates from `letter` diverge exactly when the
    /// image starts with `letter` and has length at least 2.
    pub fn is_prolongable_on(&self, letter: u8) -> bool {
        (letter as usize) < self.domain_size
            && self.codomain_size <= self.domain_size
            && self.images[letter as usize].len() >= 2
            && self.images[letter as usize][0] == letter
    }

    /// Returns `σ^j(seed)` for the least `j` with `|σ^j(seed)| >= min_len`.
    pub fn fixed_point_prefix(&self, seed: &Word, min_len: usize) -> Result<Word> {
        if min_len == 0 {
            return Err(Error::InvalidLength(0));
        }
        if seed.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut current = seed.clone().with_alphabet_size(self.domain_size).map_err(|_| {
            Error::AlphabetMismatch { expected: self.domain_size, got: seed.alphabet_size() }
        })?;
        if current.len() < min_len {
            self.require_endomorphism()?;
            if !self.is_prolongable_on(seed.symbols()[0]) {
                return Err(Error::NotProlongable(seed.symbols()[0]));
            }
            while current.len() < min_len {
                current = self.apply(&current)?;
            }
        }
        Ok(current)
    }

    /// The exact set of factors of length at most `max_len` of the language
    /// of the morphism (factors of `σ^n(a)` over all `n >= 0` and letters
    /// `a`), computed as a least fixpoint: start from the single letters and
    /// keep adding factors of images of members until nothing changes.
    ///
    /// Internally factors up to `max_len + 2` are tracked so that no factor
    /// straddling image boundaries can be missed. Processing a member only
    /// inserts the factors of its image that span the whole member (touch the
    /// first and last letter's image): the others are factors of images of
    /// shorter members and are inserted when those members are processed, so
    /// the fixpoint is unchanged.
    pub fn language_factors(&self, max_len: usize) -> Result<HashSet<Word>> {
        if max_len == 0 {
            return Err(Error::InvalidLength(0));
        }
        self.require_endomorphism()?;
        let bound = max_len + 2;
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
        for a in 0..self.domain_size as u8 {
            seen.insert(vec![a]);
            queue.push_back(vec![a]);
        }
        while let Some(member) = queue.pop_front() {
            let ell = member.len();
            if ell >= 2 {
                let middle: usize =
                    member[1..ell - 1].iter().map(|&c| self.image_len(c)).sum();
                if middle + 2 > bound {
                    continue; // every spanning factor would be too long
                }
            }
            let img = self.apply_symbols(&member);
            let first_len = self.image_len(member[0]);
            let last_start = img.len() - self.image_len(member[ell - 1]);
            for s in 0..first_len {
                let lo = if ell == 1 { s + 1 } else { last_start.max(s) + 1 };
                let hi = img.len().min(s + bound);
                for e in lo..=hi {
                    if !seen.contains(&img[s..e]) {
                        let factor = img[s..e].to_vec();
                        queue.push_back(factor.clone());
                        seen.insert(factor);
                    }
                }
            }
        }
        Ok(seen
            .into_iter()
            .filter(|f| f.len() <= max_len)
            .map(|f| Word::new(f, self.domain_size).expect("factors stay in the alphabet"))
            .collect())
    }
}

/// Keränen's abelian-square-free morphism over four letters: the 85-letter
/// image of 0, with the other images obtained by cycling letters.
const KERANEN_IMAGE_0: &str = concat!(
    "0120232123203231301020103101213121021232021",
    "013010203212320231210212320232132303132120",
);

fn keranen() -> Morphism {
    let base = Word::parse(KERANEN_IMAGE_0).expect("constant is well formed");
    assert_eq!(base.len(), 85, "transcribed image of 0 must have 85 letters");
    let rotate = |w: &Word, amount: u8| -> Word {
        let symbols = w.symbols().iter().map(|&s| (s + amount) % 4).collect();
        Word::new(symbols, 4).unwrap()
    };
    let images = (0..4).map(|i| rotate(&base, i)).collect();
    Morphism::new(images).unwrap()
}

/// The builtin catalog: `sigma3`, `sigma4`, `keranen`, `thue_morse`,
/// `justin`, and `complement`.
pub fn builtin_morphism(name: &str) -> Result<Morphism> {
    let from_rules = |rules: &[&str]| -> Morphism {
        let images = rules.iter().map(|r| Word::parse(r).unwrap()).collect();
        Morphism::new(images).unwrap()
    };
    match name {
        "sigma3" => Ok(from_rules(&["0001", "101"])),
        "sigma4" => Ok(from_rules(&["0012", "112", "022"])),
        "keranen" => Ok(keranen()),
        "thue_morse" => Ok(from_rules(&["01", "10"])),
        "justin" => Ok(from_rules(&["00001", "01111"])),
        "complement" => Ok(from_rules(&["1", "0"])),
        other => Err(Error::UnknownMorphism(other.to_string())),
    }
}
