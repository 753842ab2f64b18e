use thiserror::Error;

use crate::certify::PingPongWitness;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("singular matrix (determinant is 0)")]
    SingularMatrix,

    /// `e21 * t + e22 = 0` when evaluating a transformation.
    #[error("transformation has a pole at t = {0}")]
    Pole(Rational),

    #[error("expected a positive rational, got {0}")]
    NotPositive(Rational),

    #[error("pair is not certified by the freeness check")]
    NotCertified,

    #[error("fuel must be at least 1")]
    ZeroFuel,

    #[error("unknown named pair `{0}`")]
    UnknownPair(String),

    #[error("cannot parse {what}: offending token `{token}`")]
    Parse { what: &'static str, token: String },

    /// A certified pair violated `0 < A(t) < 1 < B(t)`. Must never happen.
    #[error("certificate soundness failure at t = {}: A(t) = {}, B(t) = {}", .0.t, .0.a_value, .0.b_value)]
    CertificateUnsound(Box<PingPongWitness>),

    #[error("max_len must be in 1..={max}, got {got}")]
    MaxLenOutOfRange { got: usize, max: usize },
}

impl Error {
    pub(crate) fn parse(what: &'static str, token: impl Into<String>) -> Self {
        Error::Parse {
            what,
            token: token.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
