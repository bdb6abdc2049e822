//! HNN extensions G* = ⟨G, t | t a t⁻¹ = φ(a), a ∈ A⟩ over an abstract base
//! group, with Britton reduction as the word problem.
//!
//! The isomorphism φ: A → B is never materialized: subgroups are given as
//! oracles that decide membership and express members in coordinates over
//! their generator lists, and φ substitutes the positionally paired
//! generators of the other side into those coordinates.
//!
//! A word is stored as the alternation b₀ t^{ε₁} b₁ ⋯ t^{ε_k} b_k.  Britton
//! reduction repeatedly replaces the leftmost innermost pinch — t·a·t⁻¹ with
//! a ∈ A by φ(a), or t⁻¹·b·t with b ∈ B by φ⁻¹(b) — merging the released
//! element into its neighbors.  A reduced word with k ≥ 1 represents the
//! identity in no case, so `is_identity` is exact.

use std::sync::Arc;

use thiserror::Error;

use crate::gamma::{GammaError, LatticeBasis};
use crate::group::{CyclicGroup, FreeGroup, GammaGroup, Group, GroupError};
use crate::stallings::{FoldError, SubgroupGraph};
use crate::word::{Alphabet, Word};

#[derive(Debug, Error)]
pub enum HnnError {
    #[error("subgroup generator lists have different lengths: {a} vs {b}")]
    GeneratorCountMismatch { a: usize, b: usize },
    #[error("a cyclic subgroup needs a nonzero step")]
    ZeroStep,
    #[error("unrecognized token {token:?} in word")]
    BadToken { token: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Membership and coordinates for a finitely generated subgroup of `G`.
///
/// `coords` must be a section of evaluation: evaluating the returned word
/// over `generators()` (positionally, via the group operations) reproduces
/// the element.  Returning `Some` for a non-member, or `None` for a member,
/// breaks Britton reduction — implementations back both answers by the same
/// decision procedure.
pub trait SubgroupOracle<G: Group>: Send + Sync {
    fn generators(&self) -> Vec<G::Elem>;
    fn contains(&self, g: &G::Elem) -> bool;
    fn coords(&self, g: &G::Elem) -> Option<Word>;
    fn coord_alphabet(&self) -> &Arc<Alphabet>;
}

/// The subgroup mℤ ≤ ℤ (m ≠ 0), with a single coordinate generator.
#[derive(Debug, Clone)]
pub struct CyclicSubgroup {
    step: i64,
    coord: Arc<Alphabet>,
}

impl CyclicSubgroup {
    pub fn new(step: i64) -> Result<CyclicSubgroup, HnnError> {
        if step == 0 {
            return Err(HnnError::ZeroStep);
        }
        Ok(CyclicSubgroup { step, coord: Alphabet::coordinates(1) })
    }

    pub fn step(&self) -> i64 {
        self.step
    }
}

impl SubgroupOracle<CyclicGroup> for CyclicSubgroup {
    fn generators(&self) -> Vec<i64> {
        vec![self.step]
    }

    fn contains(&self, g: &i64) -> bool {
        g % self.step == 0
    }

    fn coords(&self, g: &i64) -> Option<Word> {
        if g % self.step != 0 {
            return None;
        }
        Some(Word::single(&self.coord, 0, g / self.step).expect("coordinate alphabet has index 0"))
    }

    fn coord_alphabet(&self) -> &Arc<Alphabet> {
        &self.coord
    }
}

impl SubgroupOracle<FreeGroup> for SubgroupGraph {
    fn generators(&self) -> Vec<Word> {
        SubgroupGraph::generators(self).to_vec()
    }

    fn contains(&self, g: &Word) -> bool {
        SubgroupGraph::contains(self, g).expect("oracle and elements share an alphabet")
    }

    fn coords(&self, g: &Word) -> Option<Word> {
        match self.express(g) {
            Ok(w) => Some(w),
            Err(FoldError::NotAMember { .. }) => None,
            Err(e) => panic!("subgroup oracle inconsistency: {e}"),
        }
    }

    fn coord_alphabet(&self) -> &Arc<Alphabet> {
        SubgroupGraph::coord_alphabet(self)
    }
}

impl SubgroupOracle<GammaGroup> for LatticeBasis {
    fn generators(&self) -> Vec<crate::gamma::GammaElement> {
        LatticeBasis::generators(self).to_vec()
    }

    fn contains(&self, g: &crate::gamma::GammaElement) -> bool {
        LatticeBasis::contains(self, g).expect("oracle and elements share a modulus")
    }

    fn coords(&self, g: &crate::gamma::GammaElement) -> Option<Word> {
        match LatticeBasis::coords(self, g) {
            Ok(cs) => {
                let pairs: Vec<(usize, i64)> = cs.into_iter().enumerate().collect();
                Some(Word::reduce(LatticeBasis::coord_alphabet(self), &pairs).expect("valid indices"))
            }
            Err(GammaError::NotAMember { .. }) => None,
            Err(e) => panic!("subgroup oracle inconsistency: {e}"),
        }
    }

    fn coord_alphabet(&self) -> &Arc<Alphabet> {
        LatticeBasis::coord_alphabet(self)
    }
}

/// Alternating word b₀ t^{ε₁} b₁ ⋯ t^{ε_k} b_k; `tail[i]` is (ε_{i+1}, b_{i+1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnnWord<E> {
    pub head: E,
    pub tail: Vec<(i8, E)>,
}

impl<E> HnnWord<E> {
    pub fn t_len(&self) -> usize {
        self.tail.len()
    }
}

pub struct HnnExtension<G: Group, O: SubgroupOracle<G>> {
    base: G,
    a_side: O,
    b_side: O,
    a_gens: Vec<G::Elem>,
    b_gens: Vec<G::Elem>,
}

impl<G: Group, O: SubgroupOracle<G>> HnnExtension<G, O> {
    pub fn new(base: G, a_side: O, b_side: O) -> Result<Self, HnnError> {
        let a_gens = a_side.generators();
        let b_gens = b_side.generators();
        if a_gens.len() != b_gens.len() {
            return Err(HnnError::GeneratorCountMismatch { a: a_gens.len(), b: b_gens.len() });
        }
        Ok(HnnExtension { base, a_side, b_side, a_gens, b_gens })
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn a_side(&self) -> &O {
        &self.a_side
    }

    pub fn b_side(&self) -> &O {
        &self.b_side
    }

    fn eval_over(&self, gens: &[G::Elem], coords: &Word) -> G::Elem {
        let mut acc = self.base.identity();
        for (gen, sign) in coords.letters() {
            let factor = if sign > 0 { gens[gen].clone() } else { self.base.inv(&gens[gen]) };
            acc = self.base.mul(&acc, &factor);
        }
        acc
    }

    /// φ on A: coordinates over A's generators, re-evaluated over B's.
    pub fn phi(&self, g: &G::Elem) -> Option<G::Elem> {
        self.a_side.coords(g).map(|w| self.eval_over(&self.b_gens, &w))
    }

    /// φ⁻¹ on B.
    pub fn phi_inv(&self, g: &G::Elem) -> Option<G::Elem> {
        self.b_side.coords(g).map(|w| self.eval_over(&self.a_gens, &w))
    }

    pub fn identity(&self) -> HnnWord<G::Elem> {
        HnnWord { head: self.base.identity(), tail: Vec::new() }
    }

    pub fn from_base(&self, e: G::Elem) -> HnnWord<G::Elem> {
        HnnWord { head: e, tail: Vec::new() }
    }

    /// t^k as a word (k may be negative or zero).
    pub fn t_power(&self, k: i64) -> HnnWord<G::Elem> {
        let sign = if k < 0 { -1 } else { 1 };
        let tail = (0..k.unsigned_abs()).map(|_| (sign, self.base.identity())).collect();
        HnnWord { head: self.base.identity(), tail }
    }

    /// Britton reduction, leftmost innermost pinch first.  Deterministic;
    /// strictly decreases t-length whenever a pinch fires; terminates.
    pub fn britton_reduce(&self, w: &HnnWord<G::Elem>) -> HnnWord<G::Elem> {
        let mut head = w.head.clone();
        let mut tail = w.tail.clone();
        let mut i = 0;
        while i + 1 < tail.len() {
            let (eps, _) = tail[i];
            if tail[i + 1].0 != -eps {
                i += 1;
                continue;
            }
            let mid = &tail[i].1;
            let image = if eps > 0 {
                if self.a_side.contains(mid) {
                    Some(self.phi(mid).expect("oracle: a member must have coordinates"))
                } else {
                    None
                }
            } else if self.b_side.contains(mid) {
                Some(self.phi_inv(mid).expect("oracle: a member must have coordinates"))
            } else {
                None
            };
            match image {
                None => i += 1,
                Some(img) => {
                    let merged = self.base.mul(&img, &tail[i + 1].1);
                    tail.drain(i..=i + 1);
                    if i == 0 {
                        head = self.base.mul(&head, &merged);
                    } else {
                        tail[i - 1].1 = self.base.mul(&tail[i - 1].1, &merged);
                    }
                    i = i.saturating_sub(1);
                }
            }
        }
        HnnWord { head, tail }
    }

    /// Exact word problem: reduced form is t-free with identity base.
    pub fn is_identity(&self, w: &HnnWord<G::Elem>) -> bool {
        let r = self.britton_reduce(w);
        r.tail.is_empty() && self.base.is_identity(&r.head)
    }

    pub fn mul(&self, w1: &HnnWord<G::Elem>, w2: &HnnWord<G::Elem>) -> HnnWord<G::Elem> {
        let mut tail = w1.tail.clone();
        let head = match tail.last_mut() {
            None => self.base.mul(&w1.head, &w2.head),
            Some(last) => {
                last.1 = self.base.mul(&last.1, &w2.head);
                w1.head.clone()
            }
        };
        tail.extend(w2.tail.iter().cloned());
        self.britton_reduce(&HnnWord { head, tail })
    }

    pub fn inv(&self, w: &HnnWord<G::Elem>) -> HnnWord<G::Elem> {
        if w.tail.is_empty() {
            return HnnWord { head: self.base.inv(&w.head), tail: Vec::new() };
        }
        let head = self.base.inv(&w.tail.last().expect("nonempty").1);
        let mut tail = Vec::with_capacity(w.tail.len());
        for idx in (0..w.tail.len()).rev() {
            let eps = w.tail[idx].0;
            let prev = if idx == 0 { &w.head } else { &w.tail[idx - 1].1 };
            tail.push((-eps, self.base.inv(prev)));
        }
        self.britton_reduce(&HnnWord { head, tail })
    }

    /// Parses whitespace-separated tokens: `t`, `t^k`, and base-element
    /// tokens, consecutive base tokens forming one base word (e.g. a free
    /// base with generators a, b reads `t a^2 b t^-1`).  The name `t` is
    /// reserved for the stable letter, so the base alphabet must not use it.
    pub fn parse(&self, text: &str) -> Result<HnnWord<G::Elem>, HnnError> {
        let mut head: Option<G::Elem> = None;
        let mut tail: Vec<(i8, G::Elem)> = Vec::new();
        let mut segment: Vec<&str> = Vec::new();
        let flush =
            |segment: &mut Vec<&str>, head: &mut Option<G::Elem>, tail: &mut Vec<(i8, G::Elem)>| {
                let elem = if segment.is_empty() {
                    self.base.identity()
                } else {
                    match self.base.parse_elem(&segment.join(" ")) {
                        Ok(e) => e,
                        Err(e) => return Err(HnnError::Group(e)),
                    }
                };
                segment.clear();
                match tail.last_mut() {
                    None if head.is_none() => *head = Some(elem),
                    None => {
                        let h = head.take().expect("head was just set");
                        *head = Some(self.base.mul(&h, &elem));
                    }
                    Some(last) => last.1 = self.base.mul(&last.1, &elem),
                }
                Ok(())
            };
        for token in text.split_whitespace() {
            let t_exp = if token == "t" {
                Some(1i64)
            } else if let Some(rest) = token.strip_prefix("t^") {
                match rest.parse::<i64>() {
                    Ok(k) => Some(k),
                    Err(_) => return Err(HnnError::BadToken { token: token.to_string() }),
                }
            } else {
                None
            };
            match t_exp {
                Some(k) => {
                    flush(&mut segment, &mut head, &mut tail)?;
                    let sign = if k < 0 { -1 } else { 1 };
                    for _ in 0..k.unsigned_abs() {
                        tail.push((sign, self.base.identity()));
                    }
                }
                None => segment.push(token),
            }
        }
        flush(&mut segment, &mut head, &mut tail)?;
        Ok(HnnWord { head: head.unwrap_or_else(|| self.base.identity()), tail })
    }

    pub fn display(&self, w: &HnnWord<G::Elem>) -> String {
        let mut parts = Vec::new();
        if !self.base.is_identity(&w.head) || w.tail.is_empty() {
            parts.push(self.base.display_elem(&w.head));
        }
        for (eps, b) in &w.tail {
            parts.push(if *eps > 0 { "t".to_string() } else { "t^-1".to_string() });
            if !self.base.is_identity(b) {
                parts.push(self.base.display_elem(b));
            }
        }
        parts.join(" ")
    }
}

/// An HNN extension viewed as a [`Group`], with Britton-reduced words as
/// elements.  `Elem` equality is syntactic equality of the reduced form —
/// exact for the identity test, coarser than group equality in general.
pub struct HnnGroup<G: Group, O: SubgroupOracle<G>> {
    ext: Arc<HnnExtension<G, O>>,
}

impl<G: Group, O: SubgroupOracle<G>> HnnGroup<G, O> {
    pub fn new(ext: Arc<HnnExtension<G, O>>) -> Self {
        HnnGroup { ext }
    }

    pub fn extension(&self) -> &Arc<HnnExtension<G, O>> {
        &self.ext
    }
}

impl<G: Group, O: SubgroupOracle<G>> Group for HnnGroup<G, O> {
    type Elem = HnnWord<G::Elem>;

    fn identity(&self) -> Self::Elem {
        self.ext.identity()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ext.mul(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.ext.inv(a)
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        self.ext.is_identity(a)
    }

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, GroupError> {
        match self.ext.parse(text) {
            Ok(w) => Ok(self.ext.britton_reduce(&w)),
            Err(HnnError::Group(e)) => Err(e),
            Err(e) => Err(GroupError::Word(crate::word::WordError::BadToken {
                token: e.to_string(),
            })),
        }
    }

    fn display_elem(&self, a: &Self::Elem) -> String {
        self.ext.display(a)
    }
}
