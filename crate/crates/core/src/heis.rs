//! A torsion-free polycyclic group that is not left-orderable.
//!
//! G = ⟨t, x, y, z⟩ with z central, xy = yx·z, t x t⁻¹ = x⁻¹, t y t⁻¹ = y⁻¹,
//! and t² = z.  The subgroup ⟨x, y, z⟩ is the integral Heisenberg group and
//! has index two; t acts on it by inverting x and y.  Every element has a
//! unique normal form t^δ x^m y^q z^r with δ ∈ {0, 1}, which this module
//! stores directly, so equality, products, and inverses are all exact.
//!
//! The ambient G has 2-torsion ((t x y⁻¹)² = 1), but its index-two subgroup
//! Γ = ⟨t, x², y⟩ — the elements with even x-exponent — is torsion-free:
//! there a t-type square is an odd power of the central z,
//!
//! ```text
//! (t x^{2p} y^q z^r)² = z^{2pq + 2r + 1} ≠ 1,
//! ```
//!
//! yet Γ is still not left-orderable, because those odd central powers
//! collide in sign for every candidate order.

use std::fmt;

use thiserror::Error;

use crate::word::{Alphabet, Word, WordError};
use std::sync::Arc;

#[derive(Debug, Error)]
pub enum HeisError {
    #[error("words evaluate here only over the alphabet {{t, x, y, z}}")]
    WrongAlphabet,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// The fixed generator alphabet `{t, x, y, z}`.
pub fn heis_alphabet() -> Arc<Alphabet> {
    Alphabet::new(&["t", "x", "y", "z"]).expect("static names")
}

/// Normal form t^δ x^m y^q z^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeisElement {
    /// δ: whether a single leading t is present.
    pub t: bool,
    /// m: exponent of x.
    pub x: i64,
    /// q: exponent of y.
    pub y: i64,
    /// r: exponent of the central z.
    pub z: i64,
}

impl HeisElement {
    pub const fn new(t: bool, x: i64, y: i64, z: i64) -> HeisElement {
        HeisElement { t, x, y, z }
    }

    pub const fn identity() -> HeisElement {
        HeisElement::new(false, 0, 0, 0)
    }

    pub const fn gen_t() -> HeisElement {
        HeisElement::new(true, 0, 0, 0)
    }

    pub const fn gen_x() -> HeisElement {
        HeisElement::new(false, 1, 0, 0)
    }

    pub const fn gen_y() -> HeisElement {
        HeisElement::new(false, 0, 1, 0)
    }

    pub const fn gen_z() -> HeisElement {
        HeisElement::new(false, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == HeisElement::identity()
    }

    /// Normal-form product.  Pushing the right factor's t (if any) to the
    /// front inverts the left factor's x and y; collapsing t·t deposits a z.
    pub fn mul(&self, other: &HeisElement) -> HeisElement {
        if !other.t {
            // t^δ x^a y^b z^c · x^m y^q z^r: move x^m left past y^b.
            HeisElement {
                t: self.t,
                x: self.x + other.x,
                y: self.y + other.y,
                z: self.z + other.z - self.y * other.x,
            }
        } else {
            // the incoming t conjugates x^a y^b to x^-a y^-b on its way left
            let x = other.x - self.x;
            let y = other.y - self.y;
            let z = self.z + other.z + self.y * other.x;
            if self.t {
                HeisElement { t: false, x, y, z: z + 1 }
            } else {
                HeisElement { t: true, x, y, z }
            }
        }
    }

    pub fn inv(&self) -> HeisElement {
        if self.t {
            HeisElement {
                t: true,
                x: self.x,
                y: self.y,
                z: -self.y * self.x - self.z - 1,
            }
        } else {
            HeisElement {
                t: false,
                x: -self.x,
                y: -self.y,
                z: -self.z - self.y * self.x,
            }
        }
    }

    pub fn pow(&self, k: i64) -> HeisElement {
        let base = if k < 0 { self.inv() } else { *self };
        let mut acc = HeisElement::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// For a t-type element, the square is central: (t x^m y^q z^r)² =
    /// z^{qm + 2r + 1}.  Returns that exponent, or `None` when δ = 0
    /// (squares of Heisenberg elements are not central in general).
    pub fn central_square_exponent(&self) -> Option<i64> {
        if self.t {
            Some(self.y * self.x + 2 * self.z + 1)
        } else {
            None
        }
    }

    /// The index-two subgroup with even x-exponent, containing t, y, z, and
    /// t x^{±2}.  Closed because products add or subtract x-exponents.
    pub fn has_even_x(&self) -> bool {
        self.x % 2 == 0
    }

    /// Evaluates a word over `{t, x, y, z}` to normal form.
    pub fn eval(word: &Word) -> Result<HeisElement, HeisError> {
        if word.alphabet().names() != heis_alphabet().names() {
            return Err(HeisError::WrongAlphabet);
        }
        let gens = [
            HeisElement::gen_t(),
            HeisElement::gen_x(),
            HeisElement::gen_y(),
            HeisElement::gen_z(),
        ];
        let mut acc = HeisElement::identity();
        for (gen, sign) in word.letters() {
            let factor = if sign > 0 { gens[gen] } else { gens[gen].inv() };
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }

    pub fn parse(text: &str) -> Result<HeisElement, HeisError> {
        let word = Word::parse(&heis_alphabet(), text)?;
        HeisElement::eval(&word)
    }
}

impl fmt::Display for HeisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if self.t {
            parts.push("t".to_string());
        }
        for (name, e) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            if e == 1 {
                parts.push(name.to_string());
            } else if e != 0 {
                parts.push(format!("{name}^{e}"));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Exponent of the central square (t xⁿ yᵐ)² = z^{mn+1}, cross-checked
/// against the normal-form product before returning.
pub fn t_square_exponent(n: i64, m: i64) -> i64 {
    let g = HeisElement::new(true, n, m, 0);
    assert_eq!(g.mul(&g), HeisElement::new(false, 0, 0, m * n + 1));
    m * n + 1
}

/// Scans every nonidentity element of the even-x subgroup with
/// |m|, |q|, |r| ≤ `bound` (both δ) for torsion up to exponent `max_power`;
/// returns the first torsion pair found.  Expected to return `None`: the
/// subgroup is torsion-free.  The restriction matters — the ambient group
/// has involutions such as t x y⁻¹.
pub fn torsion_witness(bound: i64, max_power: i64) -> Option<(HeisElement, i64)> {
    for t in [false, true] {
        for x in (-bound..=bound).filter(|x| x % 2 == 0) {
            for y in -bound..=bound {
                for z in -bound..=bound {
                    let g = HeisElement::new(t, x, y, z);
                    if g.is_identity() {
                        continue;
                    }
                    let mut acc = HeisElement::identity();
                    for k in 1..=max_power {
                        acc = acc.mul(&g);
                        if acc.is_identity() {
                            return Some((g, k));
                        }
                    }
                }
            }
        }
    }
    None
}
