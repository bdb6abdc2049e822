//! Freely reduced words over a named generator alphabet.
//!
//! Words are stored in syllable form (`a^3 b^-2` is two syllables, not five
//! letters) and every public constructor reduces, so adjacent syllables never
//! share a generator and no exponent is zero.  That invariant is what makes
//! equality, inversion and the positive-word test O(number of syllables).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet mismatch: left word is over {left:?}, right word is over {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("invalid generator name {name:?} (want [a-zA-Z][a-zA-Z0-9_]*)")]
    BadGeneratorName { name: String },
    #[error("duplicate generator name {name:?}")]
    DuplicateGenerator { name: String },
    #[error("unknown generator {token:?} for alphabet {alphabet:?}")]
    UnknownGenerator { token: String, alphabet: Vec<String> },
    #[error("cannot parse word token {token:?}")]
    BadToken { token: String },
    #[error("generator index {index} out of range for alphabet of size {size}")]
    GeneratorOutOfRange { index: usize, size: usize },
    #[error("signed subset lists {name} with both signs")]
    ConflictingSigns { name: String },
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered list of distinct generator names.  Words hold an `Arc` to the
/// alphabet they were built over; two alphabets are compatible when their
/// name lists are equal, not merely when they are the same allocation.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Alphabet>, WordError> {
        let mut seen: Vec<&str> = Vec::new();
        for name in names {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(WordError::BadGeneratorName { name: name.to_string() });
            }
            if seen.contains(&name) {
                return Err(WordError::DuplicateGenerator { name: name.to_string() });
            }
            seen.push(name);
        }
        Ok(Arc::new(Alphabet {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `U1`, `U2`, ... — the alphabet a subgroup oracle's coordinates use.
    pub fn coordinates(k: usize) -> Arc<Alphabet> {
        let names: Vec<String> = (1..=k).map(|i| format!("U{i}")).collect();
        Alphabet::new(&names).expect("coordinate names are always valid")
    }
}

pub fn compatible(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// One maximal run `gen^exp` of a reduced word; `exp` is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

/// A freely reduced word.  The identity is the empty syllable list and
/// prints as `1`.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    syllables: Vec<Syllable>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.alphabet, &other.alphabet) && self.syllables == other.syllables
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Alphabet names are deliberately left out: equal words hash equally,
        // and words of different alphabets never meet in one table.
        self.syllables.hash(state);
    }
}

fn push_reduced(out: &mut Vec<Syllable>, gen: usize, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.gen == gen {
            last.exp += exp;
            if last.exp == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push(Syllable { gen, exp });
}

impl Word {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Word {
        Word { alphabet: Arc::clone(alphabet), syllables: Vec::new() }
    }

    /// Free reduction of a raw syllable list: drops zero exponents, merges
    /// adjacent runs of one generator, cancels what collapses.  Idempotent.
    pub fn reduce(alphabet: &Arc<Alphabet>, raw: &[(usize, i64)]) -> Result<Word, WordError> {
        let mut syllables = Vec::with_capacity(raw.len());
        for &(gen, exp) in raw {
            if gen >= alphabet.len() {
                return Err(WordError::GeneratorOutOfRange { index: gen, size: alphabet.len() });
            }
            push_reduced(&mut syllables, gen, exp);
        }
        Ok(Word { alphabet: Arc::clone(alphabet), syllables })
    }

    pub fn single(alphabet: &Arc<Alphabet>, gen: usize, exp: i64) -> Result<Word, WordError> {
        Word::reduce(alphabet, &[(gen, exp)])
    }

    /// Parses `a^3 b^-2` style text: whitespace-separated tokens, each a
    /// generator name with an optional caret exponent.  `1` alone denotes
    /// the identity.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word, WordError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(Word::identity(alphabet));
        }
        let mut raw = Vec::with_capacity(tokens.len());
        for token in tokens {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1),
                Some((name, exp_text)) => {
                    let exp: i64 = exp_text
                        .parse()
                        .map_err(|_| WordError::BadToken { token: token.to_string() })?;
                    (name, exp)
                }
            };
            let gen = alphabet.index_of(name).ok_or_else(|| WordError::UnknownGenerator {
                token: name.to_string(),
                alphabet: alphabet.names.clone(),
            })?;
            raw.push((gen, exp));
        }
        Word::reduce(alphabet, &raw)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total letter length (sum of |exp| over syllables).
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        if !compatible(&self.alphabet, &other.alphabet) {
            return Err(WordError::AlphabetMismatch {
                left: self.alphabet.names.clone(),
                right: other.alphabet.names.clone(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    /// Same-alphabet concatenation; used on hot paths where the context
    /// already guarantees compatibility.
    pub(crate) fn mul_unchecked(&self, other: &Word) -> Word {
        let mut syllables = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut syllables, s.gen, s.exp);
        }
        Word { alphabet: Arc::clone(&self.alphabet), syllables }
    }

    pub fn invert(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable { gen: s.gen, exp: -s.exp })
            .collect();
        Word { alphabet: Arc::clone(&self.alphabet), syllables }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.mul_unchecked(&base);
        }
        out
    }

    /// Iterates the word letter by letter as `(generator, sign)` pairs.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign: i8 = if s.exp > 0 { 1 } else { -1 };
            std::iter::repeat((s.gen, sign)).take(s.exp.unsigned_abs() as usize)
        })
    }

    /// True iff the word is nonempty and every syllable is a positive power
    /// of a signed generator in `subset` — e.g. `x^-3` matches a subset that
    /// lists `x` inverted.
    pub fn is_positive_word(&self, subset: &SignedSubset) -> bool {
        if self.syllables.is_empty() {
            return false;
        }
        self.syllables.iter().all(|s| match subset.sign_of(s.gen) {
            Some(1) => s.exp > 0,
            Some(-1) => s.exp < 0,
            _ => false,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for s in &self.syllables {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if s.exp == 1 {
                write!(f, "{}", self.alphabet.name(s.gen))?;
            } else {
                write!(f, "{}^{}", self.alphabet.name(s.gen), s.exp)?;
            }
        }
        Ok(())
    }
}

/// A set of signed generators, at most one sign per generator.  This is the
/// "alphabet S" of a positive-word condition: `{s, x^-1}` accepts words
/// whose s-exponents are positive and whose x-exponents are negative.
#[derive(Debug, Clone)]
pub struct SignedSubset {
    alphabet: Arc<Alphabet>,
    signs: Vec<Option<i8>>,
}

impl SignedSubset {
    pub fn new(alphabet: &Arc<Alphabet>, signed: &[(usize, i8)]) -> Result<SignedSubset, WordError> {
        let mut signs = vec![None; alphabet.len()];
        for &(gen, sign) in signed {
            if gen >= alphabet.len() {
                return Err(WordError::GeneratorOutOfRange { index: gen, size: alphabet.len() });
            }
            assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
            match signs[gen] {
                None => signs[gen] = Some(sign),
                Some(prev) if prev == sign => {}
                Some(_) => {
                    return Err(WordError::ConflictingSigns {
                        name: alphabet.name(gen).to_string(),
                    })
                }
            }
        }
        Ok(SignedSubset { alphabet: Arc::clone(alphabet), signs })
    }

    /// The subset containing every generator, signed by `signs` (one entry
    /// per generator).
    pub fn from_signs(alphabet: &Arc<Alphabet>, signs: &[i8]) -> SignedSubset {
        assert_eq!(signs.len(), alphabet.len());
        SignedSubset {
            alphabet: Arc::clone(alphabet),
            signs: signs.iter().map(|&s| Some(s)).collect(),
        }
    }

    pub fn sign_of(&self, gen: usize) -> Option<i8> {
        self.signs.get(gen).copied().flatten()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }
}
