//! Exact certification, encoding and decoding for monoids generated by a pair
//! of 2×2 nonnegative rational matrices.
//!
//! - [`rational`] and [`matrix`]: exact scalars, matrices and their action as
//!   linear fractional transformations.
//! - [`certify`]: the inequality test that certifies a pair as free.
//! - [`codec`]: words to products and back, with sound rejection.
//! - [`explore`]: the Calkin-Wilf tree and a brute-force collision oracle.

pub mod certify;
pub mod codec;
pub mod error;
pub mod explore;
pub mod matrix;
pub mod rational;
pub mod word;

pub use certify::{
    check_free_pair, named_pair, pingpong_witness, CertifiedPair, FreenessCertificate, Verdict,
};
pub use codec::{decode, encode, strip_leading, DecodeOutcome, NotMemberReason, DEFAULT_FUEL};
pub use error::{Error, Result};
pub use explore::{
    collision_search, cw_children, cw_path, cw_tree, CollisionReport, CollisionResult, CwNode,
};
pub use matrix::Mat2;
pub use rational::Rational;
pub use word::{Alphabet, Letter, Word};
