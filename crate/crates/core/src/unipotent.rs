//! Exact arithmetic and a bi-invariant order on Uₘ, the group of m×m
//! upper-unitriangular matrices.
//!
//! Entries are arbitrary-precision rationals; only the strict upper triangle
//! is stored.  The order compares along superdiagonals: a nonidentity matrix
//! is positive when, on the first superdiagonal k = j−i carrying a nonzero
//! entry, the topmost such entry is positive.  Because products only feed
//! higher superdiagonals, this cone is closed under multiplication and under
//! conjugation, giving a genuine bi-order.
//!
//! An alternative rule that scans anti-diagonals (smallest i+j first, then
//! smallest i, over the strict upper triangle) is also provided.  It is
//! closed under products for the same triangular reason, but it is *not*
//! conjugation-invariant — see `antidiagonal_sign` — so it is exposed only
//! for empirical comparison, never used by certificates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigRational, One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::heis::HeisElement;
use crate::word::Word;

pub type Rat = BigRational;

#[derive(Debug, Error)]
pub enum UnipotentError {
    #[error("matrix size must be between 2 and 12, got {m}")]
    BadSize { m: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("bad matrix literal: {reason}")]
    BadLiteral { reason: String },
    #[error("only t-free elements embed as unipotent matrices, got {element}")]
    NotUnipotent { element: String },
}

/// An element of Uₘ: strict upper triangle, row-major; the diagonal is an
/// implicit 1 and everything below it an implicit 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnipotentMatrix {
    m: usize,
    upper: Vec<Rat>,
}

fn upper_len(m: usize) -> usize {
    m * (m - 1) / 2
}

impl UnipotentMatrix {
    fn check_size(m: usize) -> Result<(), UnipotentError> {
        if !(2..=12).contains(&m) {
            return Err(UnipotentError::BadSize { m });
        }
        Ok(())
    }

    pub fn identity(m: usize) -> Result<UnipotentMatrix, UnipotentError> {
        Self::check_size(m)?;
        Ok(UnipotentMatrix { m, upper: vec![Rat::zero(); upper_len(m)] })
    }

    /// I + c·E_{ij} for 0-based indices i < j.
    pub fn elementary(m: usize, i: usize, j: usize, c: Rat) -> Result<UnipotentMatrix, UnipotentError> {
        let mut a = UnipotentMatrix::identity(m)?;
        assert!(i < j && j < m, "elementary position must be strictly upper");
        let idx = a.idx(i, j);
        a.upper[idx] = c;
        Ok(a)
    }

    /// Builds from strict-upper rows: `rows[i]` holds entries (i, i+1..m).
    pub fn from_strict_rows(rows: Vec<Vec<Rat>>) -> Result<UnipotentMatrix, UnipotentError> {
        let m = rows.len() + 1;
        Self::check_size(m)?;
        let mut upper = Vec::with_capacity(upper_len(m));
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m - 1 - i {
                return Err(UnipotentError::BadLiteral {
                    reason: format!("row {i} must have {} entries, got {}", m - 1 - i, row.len()),
                });
            }
            upper.extend(row);
        }
        Ok(UnipotentMatrix { m, upper })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.m);
        i * (2 * self.m - i - 1) / 2 + (j - i - 1)
    }

    /// Entry (i, j), 0-based, with the implicit diagonal and zeros.
    pub fn entry(&self, i: usize, j: usize) -> Rat {
        match i.cmp(&j) {
            Ordering::Equal => Rat::one(),
            Ordering::Greater => Rat::zero(),
            Ordering::Less => self.upper[self.idx(i, j)].clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.upper.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &UnipotentMatrix) -> Result<UnipotentMatrix, UnipotentError> {
        if self.m != other.m {
            return Err(UnipotentError::SizeMismatch { left: self.m, right: other.m });
        }
        let mut out = UnipotentMatrix::identity(self.m)?;
        for i in 0..self.m {
            for j in i + 1..self.m {
                // c_ij = a_ij + b_ij + Σ_{i<k<j} a_ik b_kj
                let mut acc = self.upper[self.idx(i, j)].clone() + &other.upper[other.idx(i, j)];
                for k in i + 1..j {
                    acc += self.upper[self.idx(i, k)].clone() * &other.upper[other.idx(k, j)];
                }
                let idx = out.idx(i, j);
                out.upper[idx] = acc;
            }
        }
        Ok(out)
    }

    /// Exact inverse by back-substitution: x_ij = −Σ_{k>i} a_ik x_kj.
    pub fn inv(&self) -> UnipotentMatrix {
        let mut x = UnipotentMatrix::identity(self.m).expect("size already validated");
        for i in (0..self.m).rev() {
            for j in i + 1..self.m {
                let mut acc = Rat::zero();
                for k in i + 1..=j {
                    acc += self.entry(i, k) * x.entry(k, j);
                }
                let idx = x.idx(i, j);
                x.upper[idx] = -acc;
            }
        }
        x
    }

    pub fn pow(&self, k: i64) -> UnipotentMatrix {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = UnipotentMatrix::identity(self.m).expect("size already validated");
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base).expect("same size");
        }
        acc
    }

    /// Sign under the superdiagonal order: +1 / −1 for positive / negative,
    /// 0 exactly for the identity.
    pub fn sign(&self) -> i8 {
        for k in 1..self.m {
            for i in 0..self.m - k {
                let e = &self.upper[self.idx(i, i + k)];
                if !e.is_zero() {
                    return if e.is_positive() { 1 } else { -1 };
                }
            }
        }
        0
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// Left-invariant comparison: the sign of self⁻¹ · other.
    pub fn compare(&self, other: &UnipotentMatrix) -> Result<Ordering, UnipotentError> {
        let d = self.inv().mul(other)?;
        Ok(match d.sign() {
            0 => Ordering::Equal,
            1 => Ordering::Less,
            _ => Ordering::Greater,
        })
    }

    /// Sign under the anti-diagonal scan (smallest i+j, then smallest i,
    /// strict upper triangle only).  Closed under products, but not under
    /// conjugation; kept for empirical comparison with [`sign`].
    ///
    /// [`sign`]: UnipotentMatrix::sign
    pub fn antidiagonal_sign(&self) -> i8 {
        // positions ordered by (i + j, i)
        for d in 1..2 * self.m - 2 {
            for i in 0..self.m {
                let j = match d.checked_sub(i) {
                    Some(j) if j > i && j < self.m => j,
                    _ => continue,
                };
                let e = &self.upper[self.idx(i, j)];
                if !e.is_zero() {
                    return if e.is_positive() { 1 } else { -1 };
                }
            }
        }
        0
    }
}

impl fmt::Display for UnipotentMatrix {
    /// Strict-upper literal: rows separated by `;`, entries by `,`, e.g. a
    /// 3×3 matrix prints as `a, b; c`.  Round-trips through [`parse_matrix`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pos = 0;
        for i in 0..self.m - 1 {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in i + 1..self.m {
                if j > i + 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.upper[pos])?;
                pos += 1;
            }
        }
        Ok(())
    }
}

/// Parses the strict-upper literal format: `1, 2, 3/4; 5, 0; -1` is 4×4.
pub fn parse_matrix(text: &str) -> Result<UnipotentMatrix, UnipotentError> {
    let rows: Vec<Vec<Rat>> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|cell| {
                    let cell = cell.trim();
                    Rat::from_str(cell).map_err(|e| UnipotentError::BadLiteral {
                        reason: format!("entry {cell:?}: {e}"),
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    UnipotentMatrix::from_strict_rows(rows)
}

/// Uniform random integer matrix in Uₘ with entries in [−bound, bound].
pub fn random_integer(m: usize, bound: i64, rng: &mut impl Rng) -> UnipotentMatrix {
    let mut a = UnipotentMatrix::identity(m).expect("caller passes a valid size");
    for e in a.upper.iter_mut() {
        *e = Rat::from_integer(rng.gen_range(-bound..=bound).into());
    }
    a
}

/// Embeds a t-free element x^m y^q z^r as the 3×3 integer matrix
/// I + m·E₀₁ + q·E₁₂ + (r + mq)·E₀₂ — the correction mq accounts for the
/// chosen normal-form order x-before-y.
pub fn embed_heisenberg(g: &HeisElement) -> Result<UnipotentMatrix, UnipotentError> {
    if g.t {
        return Err(UnipotentError::NotUnipotent { element: g.to_string() });
    }
    UnipotentMatrix::from_strict_rows(vec![
        vec![Rat::from_integer(g.x.into()), Rat::from_integer((g.z + g.x * g.y).into())],
        vec![Rat::from_integer(g.y.into())],
    ])
}

/// Outcome counts for the empirical study of the anti-diagonal rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidiagonalStats {
    pub closure_checked: usize,
    pub closure_violations: usize,
    pub conjugation_checked: usize,
    pub conjugation_violations: usize,
}

/// Samples positive pairs (for closure) and positive/conjugator pairs (for
/// conjugation invariance) under the anti-diagonal rule and counts
/// violations.  The superdiagonal order passes both by construction; the
/// anti-diagonal rule is expected to fail conjugation invariance.
pub fn antidiagonal_stats(
    m: usize,
    samples: usize,
    bound: i64,
    rng: &mut impl Rng,
) -> AntidiagonalStats {
    let mut stats = AntidiagonalStats {
        closure_checked: 0,
        closure_violations: 0,
        conjugation_checked: 0,
        conjugation_violations: 0,
    };
    fn next_positive<R: Rng>(m: usize, bound: i64, rng: &mut R) -> UnipotentMatrix {
        loop {
            let a = random_integer(m, bound, rng);
            match a.antidiagonal_sign() {
                1 => return a,
                -1 => return a.inv(),
                _ => continue,
            }
        }
    }
    for _ in 0..samples {
        let a = next_positive(m, bound, rng);
        let b = next_positive(m, bound, rng);
        stats.closure_checked += 1;
        if a.mul(&b).expect("same size").antidiagonal_sign() != 1 {
            stats.closure_violations += 1;
        }
        let c = random_integer(m, bound, rng);
        stats.conjugation_checked += 1;
        if c.mul(&a).and_then(|ca| ca.mul(&c.inv())).expect("same size").antidiagonal_sign() != 1 {
            stats.conjugation_violations += 1;
        }
    }
    stats
}

/// Evaluates a word over an alphabet of generator matrices.
pub fn evaluate_word(gens: &[UnipotentMatrix], word: &Word) -> Result<UnipotentMatrix, UnipotentError> {
    let m = gens.first().map(|g| g.size()).unwrap_or(2);
    let mut acc = UnipotentMatrix::identity(m)?;
    for (gen, sign) in word.letters() {
        let factor = if sign > 0 { gens[gen].clone() } else { gens[gen].inv() };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heis::heis_alphabet;
    use rand::SeedableRng;

    fn int(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    fn elem(m: usize, i: usize, j: usize, c: i64) -> UnipotentMatrix {
        UnipotentMatrix::elementary(m, i, j, int(c)).unwrap()
    }

    #[test]
    fn product_and_inverse_examples() {
        // (I+E01)(I+E12) = I+E01+E12+E02
        let a = elem(3, 0, 1, 1);
        let b = elem(3, 1, 2, 1);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, parse_matrix("1, 1; 1").unwrap());
        // but (I+E12)(I+E01) has no E02 term
        assert_eq!(b.mul(&a).unwrap(), parse_matrix("1, 0; 1").unwrap());

        assert_eq!(elem(3, 0, 1, 1).inv(), elem(3, 0, 1, -1));
        let c = parse_matrix("1, 1; 0").unwrap(); // I+E01+E02
        assert_eq!(c.inv(), parse_matrix("-1, -1; 0").unwrap());
        assert!(c.mul(&c.inv()).unwrap().is_identity());
    }

    #[test]
    fn inverse_law_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        for _ in 0..2000 {
            let m = rng.gen_range(2..=6);
            let a = random_integer(m, 9, &mut rng);
            assert!(a.mul(&a.inv()).unwrap().is_identity());
            assert!(a.inv().mul(&a).unwrap().is_identity());
        }
        // rational entries too
        let a = parse_matrix("1/2, -3, 2; 7/5, 0; 2").unwrap();
        assert!(a.mul(&a.inv()).unwrap().is_identity());
    }

    #[test]
    fn associativity_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(67);
        for _ in 0..500 {
            let m = rng.gen_range(2..=5);
            let a = random_integer(m, 9, &mut rng);
            let b = random_integer(m, 9, &mut rng);
            let c = random_integer(m, 9, &mut rng);
            assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(elem(3, 0, 2, 2).is_positive());
        // the first superdiagonal dominates: I −E01 +5E02 is negative
        let mut a = elem(3, 0, 1, -1);
        a = a.mul(&elem(3, 0, 2, 5)).unwrap();
        assert_eq!(a.entry(0, 2), int(5));
        assert!(!a.is_positive());
        assert_eq!(a.sign(), -1);
        assert_eq!(UnipotentMatrix::identity(4).unwrap().sign(), 0);
    }

    #[test]
    fn order_axioms_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for _ in 0..5000 {
            let m = rng.gen_range(2..=6);
            let a = random_integer(m, 9, &mut rng);
            let b = random_integer(m, 9, &mut rng);
            // trichotomy
            let flags = [a.is_identity(), a.sign() == 1, a.inv().sign() == 1];
            assert_eq!(flags.iter().filter(|&&f| f).count(), 1);
            // closure
            if a.is_positive() && b.is_positive() {
                assert!(a.mul(&b).unwrap().is_positive());
            }
            // bi-invariance: conjugation preserves the sign
            let c = random_integer(m, 9, &mut rng);
            let conj = c.mul(&a).unwrap().mul(&c.inv()).unwrap();
            assert_eq!(a.sign(), conj.sign());
        }
    }

    #[test]
    fn compare_is_transitive() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(73);
        for _ in 0..2000 {
            let m = rng.gen_range(2..=5);
            let mut v = [
                random_integer(m, 9, &mut rng),
                random_integer(m, 9, &mut rng),
                random_integer(m, 9, &mut rng),
            ];
            v.sort_by(|a, b| a.compare(b).unwrap());
            assert_ne!(v[0].compare(&v[1]).unwrap(), Ordering::Greater);
            assert_ne!(v[1].compare(&v[2]).unwrap(), Ordering::Greater);
            assert_ne!(v[0].compare(&v[2]).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn antidiagonal_rule_is_not_conjugation_invariant() {
        // A = I+E12 is anti-diagonal positive, but conjugating by I−E01
        // plants −1 at (0,2), which the anti-diagonal scan reads first.
        let a = elem(4, 1, 2, 1);
        assert_eq!(a.antidiagonal_sign(), 1);
        let c = elem(4, 0, 1, -1);
        let conj = c.mul(&a).unwrap().mul(&c.inv()).unwrap();
        assert_eq!(conj.entry(0, 2), int(-1));
        assert_eq!(conj.antidiagonal_sign(), -1);
        assert_eq!(conj.sign(), 1, "the superdiagonal order is unfazed");

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(79);
        let stats = antidiagonal_stats(4, 400, 2, &mut rng);
        assert_eq!(stats.closure_violations, 0, "products only feed later positions");
        assert!(stats.conjugation_violations > 0, "conjugation reaches earlier anti-diagonals");
    }

    #[test]
    fn literal_round_trip_and_errors() {
        let a = parse_matrix("1, 2, 3/4; 5, 0; -1").unwrap();
        assert_eq!(a.size(), 4);
        assert_eq!(a.entry(0, 2), int(2));
        assert_eq!(a.entry(0, 3), Rat::new(3.into(), 4.into()));
        assert_eq!(parse_matrix(&a.to_string()).unwrap(), a);
        let id = UnipotentMatrix::identity(3).unwrap();
        assert_eq!(parse_matrix(&id.to_string()).unwrap(), id);

        // the smallest literal is the 2×2 case: one row, one entry
        let two = parse_matrix("1").unwrap();
        assert_eq!(two.size(), 2);
        assert_eq!(two.entry(0, 1), int(1));

        assert!(matches!(parse_matrix("1, 2; 3, 4"), Err(UnipotentError::BadLiteral { .. })));
        assert!(matches!(parse_matrix("x; 1; 2"), Err(UnipotentError::BadLiteral { .. })));
        let thirteen: Vec<String> = (1..=12).rev().map(|k| vec!["0"; k].join(",")).collect();
        assert!(matches!(
            parse_matrix(&thirteen.join(";")),
            Err(UnipotentError::BadSize { m: 13 })
        ));
    }

    #[test]
    fn heisenberg_embedding_is_homomorphism() {
        let x = embed_heisenberg(&HeisElement::gen_x()).unwrap();
        let y = embed_heisenberg(&HeisElement::gen_y()).unwrap();
        let z = embed_heisenberg(&HeisElement::gen_z()).unwrap();
        // [x, y] = x⁻¹y⁻¹xy maps to I+E02, which is exactly the image of z
        let comm = x.inv().mul(&y.inv()).unwrap().mul(&x).unwrap().mul(&y).unwrap();
        assert_eq!(comm, z);
        assert!(embed_heisenberg(&HeisElement::gen_t()).is_err());

        // random words over {x, y, z}: evaluate as matrices and as normal
        // forms, then embed — the two must agree
        let ab = heis_alphabet();
        let gens = [x, y, z];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(83);
        for _ in 0..1000 {
            let mut pairs = Vec::new();
            for _ in 0..rng.gen_range(0..12) {
                pairs.push((rng.gen_range(1..4), rng.gen_range(-3i64..=3)));
            }
            let w = Word::reduce(&ab, &pairs).unwrap();
            let as_matrix = {
                let mut acc = UnipotentMatrix::identity(3).unwrap();
                for (gen, sign) in w.letters() {
                    let g = &gens[gen - 1];
                    let factor = if sign > 0 { g.clone() } else { g.inv() };
                    acc = acc.mul(&factor).unwrap();
                }
                acc
            };
            let as_normal_form = embed_heisenberg(&HeisElement::eval(&w).unwrap()).unwrap();
            assert_eq!(as_matrix, as_normal_form, "word {w}");
        }
    }

    #[test]
    fn embedding_respects_order_on_heisenberg() {
        // the superdiagonal order pulled back through the embedding is a
        // bi-order on the t-free elements; spot-check its positivity rule
        let pos = embed_heisenberg(&HeisElement::new(false, 1, -5, 0)).unwrap();
        assert!(pos.is_positive(), "x y^-5 has x-entry 1 on the first superdiagonal");
        let neg = embed_heisenberg(&HeisElement::new(false, 0, -2, 9)).unwrap();
        assert!(!neg.is_positive(), "y^-2 z^9 is negative: y dominates z");
    }
}
