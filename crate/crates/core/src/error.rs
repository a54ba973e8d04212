use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a word over {expected} letters, got alphabet size {got}")]
    AlphabetMismatch { expected: usize, got: usize },
    #[error("symbol index {symbol} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: u8, alphabet_size: usize },
    #[error("rotation index {index} exceeds word length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("fractional abelian exponents are not supported")]
    FractionalAbelianExponent,
    #[error("unknown builtin morphism `{0}`")]
    UnknownMorphism(String),
    #[error("morphism image of letter {0} must be nonempty")]
    EmptyImage(u8),
    #[error("morphism is not prolongable on letter {0}")]
    NotProlongable(u8),
    #[error("morphism image alphabet (size {image}) exceeds its domain (size {domain}); cannot iterate")]
    NotEndomorphism { domain: usize, image: usize },
    #[error("unsupported alphabet size {0} for this construction")]
    UnsupportedAlphabet(usize),
    #[error("invalid length {0} for this construction")]
    InvalidLength(usize),
    #[error("invalid search task: {0}")]
    InvalidTask(String),
    #[error("search exhausted {0} start positions without finding a witness")]
    SearchExhausted(usize),
    #[error("cannot parse word: {0}")]
    WordParse(String),
    #[error("cannot parse morphism: {0}")]
    MorphismParse(String),
    #[error("cannot parse exponent `{0}`")]
    ExponentParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
