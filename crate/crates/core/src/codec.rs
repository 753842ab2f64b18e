//! Words ↔ matrix products over a certified pair.
//!
//! Decoding strips generators off the left. For a nonempty product `X1⋯Xk`
//! the value at 1 is `X1(t)` with `t = X2⋯Xk(1) > 0`, which lies below 1 when
//! `X1 = A` and above 1 when `X1 = B`, so each step has exactly one candidate.

use std::fmt;

use crate::certify::CertifiedPair;
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::rational::Rational;
use crate::word::{Alphabet, Letter, Word};

pub const DEFAULT_FUEL: usize = 4096;

/// Why a matrix is definitely not in the monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotMemberReason {
    NegativeEntryAfterStrip,
    FixesOneButNotIdentity,
    ZeroDeterminant,
    NegativeInputEntry,
}

impl fmt::Display for NotMemberReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Member(Word),
    NotMember(NotMemberReason),
    /// Inconclusive: `steps` strips were made without reaching the identity.
    FuelExhausted {
        steps: usize,
        partial: Word,
    },
}

impl DecodeOutcome {
    pub fn render(&self, alphabet: Alphabet, powers: bool) -> String {
        match self {
            DecodeOutcome::Member(word) => word.render(alphabet, powers),
            DecodeOutcome::NotMember(reason) => format!("NOT-MEMBER({reason})"),
            DecodeOutcome::FuelExhausted { steps, partial } => format!(
                "INCONCLUSIVE: FUEL-EXHAUSTED(steps={steps}, partial={})",
                partial.render(alphabet, powers)
            ),
        }
    }
}

/// `GenA ↦ A`, `GenB ↦ B`, multiplied left to right.
pub fn encode(word: &Word, pair: &CertifiedPair) -> Mat2 {
    word.product(pair.a(), pair.b())
}

/// `X⁻¹·M`.
pub fn strip_leading(m: &Mat2, x: &Mat2) -> Result<Mat2> {
    Ok(&x.inverse()? * m)
}

pub fn decode(m: &Mat2, pair: &CertifiedPair, fuel: usize) -> Result<DecodeOutcome> {
    if fuel == 0 {
        return Err(Error::ZeroFuel);
    }
    if !m.is_nonnegative() {
        return Ok(DecodeOutcome::NotMember(
            NotMemberReason::NegativeInputEntry,
        ));
    }
    if !m.is_invertible() {
        return Ok(DecodeOutcome::NotMember(NotMemberReason::ZeroDeterminant));
    }

    let inv_a = pair.a().inverse()?;
    let inv_b = pair.b().inverse()?;
    let one = Rational::one();
    let mut current = m.clone();
    let mut word = Word::empty();

    for _ in 0..fuel {
        if current.is_identity() {
            return Ok(DecodeOutcome::Member(word));
        }
        // Nonnegative with nonzero determinant, so e21 + e22 > 0.
        let value = current.mobius_apply(&one)?;
        let (letter, inverse) = match value.cmp(&one) {
            std::cmp::Ordering::Less => (Letter::A, &inv_a),
            std::cmp::Ordering::Greater => (Letter::B, &inv_b),
            std::cmp::Ordering::Equal => {
                return Ok(DecodeOutcome::NotMember(
                    NotMemberReason::FixesOneButNotIdentity,
                ))
            }
        };
        current = inverse * &current;
        if !current.is_nonnegative() {
            return Ok(DecodeOutcome::NotMember(
                NotMemberReason::NegativeEntryAfterStrip,
            ));
        }
        word.push(letter);
    }

    if current.is_identity() {
        return Ok(DecodeOutcome::Member(word));
    }
    Ok(DecodeOutcome::FuelExhausted {
        steps: fuel,
        partial: word,
    })
}
