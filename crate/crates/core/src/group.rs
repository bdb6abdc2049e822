//! A uniform interface over the concrete groups in this crate, so the
//! positive-cone search and the scenario runner can stay generic.
//!
//! Implementations must give exact answers: `is_identity` decides the word
//! problem, and `Elem` equality must at least distinguish the identity (for
//! canonical-form groups it is full equality; for reduced HNN words it is
//! syntactic equality of the reduced form, which is coarser than group
//! equality and used only for deduplication).

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

use crate::gamma::{GammaElement, GammaError};
use crate::heis::{HeisElement, HeisError};
use crate::unipotent::{parse_matrix, UnipotentError, UnipotentMatrix};
use crate::word::{Alphabet, Word, WordError};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Heis(#[from] HeisError),
    #[error(transparent)]
    Unipotent(#[from] UnipotentError),
    #[error("expected a {want}×{want} matrix, got {got}×{got}")]
    MatrixSize { want: usize, got: usize },
}

pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_identity(&self, a: &Self::Elem) -> bool;
    fn parse_elem(&self, text: &str) -> Result<Self::Elem, GroupError>;
    fn display_elem(&self, a: &Self::Elem) -> String;
}

/// Free group on a finite alphabet; elements are reduced words.
#[derive(Debug, Clone)]
pub struct FreeGroup {
    alphabet: Arc<Alphabet>,
}

impl FreeGroup {
    pub fn new(alphabet: Arc<Alphabet>) -> FreeGroup {
        FreeGroup { alphabet }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }
}

impl Group for FreeGroup {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::identity(&self.alphabet)
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.multiply(b).expect("elements of the same free group")
    }

    fn inv(&self, a: &Word) -> Word {
        a.invert()
    }

    fn is_identity(&self, a: &Word) -> bool {
        a.is_identity()
    }

    fn parse_elem(&self, text: &str) -> Result<Word, GroupError> {
        Ok(Word::parse(&self.alphabet, text)?)
    }

    fn display_elem(&self, a: &Word) -> String {
        a.to_string()
    }
}

/// The infinite cyclic group ℤ, printed as powers of a named generator.
#[derive(Debug, Clone)]
pub struct CyclicGroup {
    alphabet: Arc<Alphabet>,
}

impl CyclicGroup {
    pub fn new(generator_name: &str) -> Result<CyclicGroup, GroupError> {
        Ok(CyclicGroup { alphabet: Alphabet::new(&[generator_name])? })
    }

    pub fn generator_name(&self) -> &str {
        &self.alphabet.names()[0]
    }
}

impl Group for CyclicGroup {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inv(&self, a: &i64) -> i64 {
        -a
    }

    fn is_identity(&self, a: &i64) -> bool {
        *a == 0
    }

    fn parse_elem(&self, text: &str) -> Result<i64, GroupError> {
        let word = Word::parse(&self.alphabet, text)?;
        Ok(word.syllables().iter().map(|s| s.exp).sum())
    }

    fn display_elem(&self, a: &i64) -> String {
        match a {
            0 => "1".to_string(),
            1 => self.generator_name().to_string(),
            k => format!("{}^{k}", self.generator_name()),
        }
    }
}

/// Γₙ with canonical-form elements.
#[derive(Debug, Clone)]
pub struct GammaGroup {
    n: usize,
}

impl GammaGroup {
    pub fn new(n: usize) -> GammaGroup {
        GammaGroup { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Group for GammaGroup {
    type Elem = GammaElement;

    fn identity(&self) -> GammaElement {
        GammaElement::identity(self.n)
    }

    fn mul(&self, a: &GammaElement, b: &GammaElement) -> GammaElement {
        a.mul(b).expect("elements of the same Γₙ")
    }

    fn inv(&self, a: &GammaElement) -> GammaElement {
        a.inv()
    }

    fn is_identity(&self, a: &GammaElement) -> bool {
        a.is_identity()
    }

    fn parse_elem(&self, text: &str) -> Result<GammaElement, GroupError> {
        let word = Word::parse(&crate::gamma::gamma_alphabet(), text)?;
        Ok(GammaElement::eval(self.n, &word)?)
    }

    fn display_elem(&self, a: &GammaElement) -> String {
        a.to_string()
    }
}

/// The polycyclic extension of the Heisenberg group, normal forms throughout.
#[derive(Debug, Clone, Default)]
pub struct HeisGroup;

impl Group for HeisGroup {
    type Elem = HeisElement;

    fn identity(&self) -> HeisElement {
        HeisElement::identity()
    }

    fn mul(&self, a: &HeisElement, b: &HeisElement) -> HeisElement {
        a.mul(b)
    }

    fn inv(&self, a: &HeisElement) -> HeisElement {
        a.inv()
    }

    fn is_identity(&self, a: &HeisElement) -> bool {
        a.is_identity()
    }

    fn parse_elem(&self, text: &str) -> Result<HeisElement, GroupError> {
        Ok(HeisElement::parse(text)?)
    }

    fn display_elem(&self, a: &HeisElement) -> String {
        a.to_string()
    }
}

/// Uₘ with exact rational entries.
#[derive(Debug, Clone)]
pub struct UnipotentGroup {
    m: usize,
}

impl UnipotentGroup {
    pub fn new(m: usize) -> Result<UnipotentGroup, GroupError> {
        UnipotentMatrix::identity(m)?;
        Ok(UnipotentGroup { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

impl Group for UnipotentGroup {
    type Elem = UnipotentMatrix;

    fn identity(&self) -> UnipotentMatrix {
        UnipotentMatrix::identity(self.m).expect("validated at construction")
    }

    fn mul(&self, a: &UnipotentMatrix, b: &UnipotentMatrix) -> UnipotentMatrix {
        a.mul(b).expect("elements of the same Uₘ")
    }

    fn inv(&self, a: &UnipotentMatrix) -> UnipotentMatrix {
        a.inv()
    }

    fn is_identity(&self, a: &UnipotentMatrix) -> bool {
        a.is_identity()
    }

    fn parse_elem(&self, text: &str) -> Result<UnipotentMatrix, GroupError> {
        let m = parse_matrix(text)?;
        if m.size() != self.m {
            return Err(GroupError::MatrixSize { want: self.m, got: m.size() });
        }
        Ok(m)
    }

    fn display_elem(&self, a: &UnipotentMatrix) -> String {
        a.to_string()
    }
}
