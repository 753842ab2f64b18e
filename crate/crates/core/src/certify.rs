//! Sufficient condition for a pair of nonnegative invertible matrices to
//! freely generate a monoid.
//!
//! A pair `(A, B)` is certified when both matrices are nonnegative and
//! invertible and
//!
//! ```text
//! a11 <= a21, a12 <= a22      (A maps (0, ∞) into (0, 1))
//! b11 >= b21, b12 >= b22      (B maps (0, ∞) into (1, ∞))
//! ```
//!
//! Since the images are disjoint, the leading generator of any product is
//! determined by where the product sends a positive point, and factorizations
//! are unique. A pair that fails these inequalities is [`Verdict::NotCovered`],
//! which says nothing about whether it is free.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::rational::Rational;

/// Position of a matrix in the pair as the caller supplied it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    First,
    Second,
}

impl Slot {
    pub fn other(self) -> Slot {
        match self {
            Slot::First => Slot::Second,
            Slot::Second => Slot::First,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Slot::First => "first",
            Slot::Second => "second",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Ne,
}

impl Relation {
    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Ne => lhs != rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Ne => "!=",
        }
    }
}

/// One recorded inequality, evaluated under a role assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// The input that played role A in this attempt.
    pub role_a: Slot,
    pub name: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub holds: bool,
}

impl Check {
    fn new(
        role_a: Slot,
        name: impl Into<String>,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        Check {
            role_a,
            name: name.into(),
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    NotCovered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub first: Mat2,
    pub second: Mat2,
    /// Which input plays A. `None` when not covered.
    pub role_a: Option<Slot>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl FreenessCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn role_b(&self) -> Option<Slot> {
        self.role_a.map(Slot::other)
    }

    pub fn matrix(&self, slot: Slot) -> &Mat2 {
        match slot {
            Slot::First => &self.first,
            Slot::Second => &self.second,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// The generators in their certified roles; fails on a `NotCovered`
    /// certificate.
    pub fn certified_pair(&self) -> Result<CertifiedPair> {
        match (self.verdict, self.role_a) {
            (Verdict::Certified, Some(role_a)) => Ok(CertifiedPair {
                a: self.matrix(role_a).clone(),
                b: self.matrix(role_a.other()).clone(),
            }),
            _ => Err(Error::NotCertified),
        }
    }
}

/// Key-value text, one check per line.
impl fmt::Display for FreenessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: freeness-certificate")?;
        writeln!(f, "first: {}", self.first)?;
        writeln!(f, "second: {}", self.second)?;
        match self.verdict {
            Verdict::Certified => writeln!(f, "verdict: Certified")?,
            Verdict::NotCovered => writeln!(
                f,
                "verdict: NotCovered (hypotheses fail; freeness undecided)"
            )?,
        }
        let slot = |s: Option<Slot>| s.map_or("none", Slot::label);
        writeln!(f, "role_a: {}", slot(self.role_a))?;
        writeln!(f, "role_b: {}", slot(self.role_b()))?;
        for check in &self.checks {
            writeln!(
                f,
                "check: A={} B={} {}: {} {} {} {}",
                check.role_a.label(),
                check.role_a.other().label(),
                check.name,
                check.lhs,
                check.relation.symbol(),
                check.rhs,
                if check.holds { "ok" } else { "FAIL" },
            )?;
        }
        Ok(())
    }
}

/// A pair whose roles have been certified. Only obtainable from a
/// `Certified` [`FreenessCertificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedPair {
    a: Mat2,
    b: Mat2,
}

impl CertifiedPair {
    /// The generator mapping positives into `(0, 1)`.
    pub fn a(&self) -> &Mat2 {
        &self.a
    }

    /// The generator mapping positives into `(1, ∞)`.
    pub fn b(&self) -> &Mat2 {
        &self.b
    }
}

fn attempt(a: &Mat2, b: &Mat2, role_a: Slot) -> Vec<Check> {
    use Relation::{Ge, Le, Ne};
    let zero = Rational::zero;
    let mut checks = vec![
        Check::new(role_a, "det(A)", a.det(), Ne, zero()),
        Check::new(role_a, "det(B)", b.det(), Ne, zero()),
    ];
    for (prefix, m) in [("a", a), ("b", b)] {
        for (idx, entry) in ["11", "12", "21", "22"].iter().zip(m.entries()) {
            checks.push(Check::new(
                role_a,
                format!("{prefix}{idx}>=0"),
                entry.clone(),
                Ge,
                zero(),
            ));
        }
    }
    checks.extend([
        Check::new(role_a, "a11<=a21", a.e11.clone(), Le, a.e21.clone()),
        Check::new(role_a, "a12<=a22", a.e12.clone(), Le, a.e22.clone()),
        Check::new(role_a, "b11>=b21", b.e11.clone(), Ge, b.e21.clone()),
        Check::new(role_a, "b12>=b22", b.e12.clone(), Ge, b.e22.clone()),
    ]);
    checks
}

/// Tries `(A, B) = (p, q)`, then `(q, p)`.
pub fn check_free_pair(p: &Mat2, q: &Mat2) -> FreenessCertificate {
    let mut recorded = Vec::new();
    for (a, b, role_a) in [(p, q, Slot::First), (q, p, Slot::Second)] {
        let checks = attempt(a, b, role_a);
        if checks.iter().all(|c| c.holds) {
            return FreenessCertificate {
                first: p.clone(),
                second: q.clone(),
                role_a: Some(role_a),
                checks,
                verdict: Verdict::Certified,
            };
        }
        recorded.extend(checks);
    }
    FreenessCertificate {
        first: p.clone(),
        second: q.clone(),
        role_a: None,
        checks: recorded,
        verdict: Verdict::NotCovered,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PingPongWitness {
    pub t: Rational,
    pub a_value: Rational,
    pub b_value: Rational,
}

/// Evaluates both certified generators at each sample and confirms
/// `0 < A(t) < 1 < B(t)`.
pub fn pingpong_witness(
    cert: &FreenessCertificate,
    samples: &[Rational],
) -> Result<Vec<PingPongWitness>> {
    let pair = cert.certified_pair()?;
    samples
        .iter()
        .map(|t| {
            if !t.is_positive() {
                return Err(Error::NotPositive(t.clone()));
            }
            let a_value = pair.a().mobius_apply(t)?;
            let b_value = pair.b().mobius_apply(t)?;
            let one = Rational::one();
            if !(a_value.is_positive() && a_value < one && b_value > one) {
                return Err(Error::CertificateUnsound(Box::new(PingPongWitness {
                    t: t.clone(),
                    a_value,
                    b_value,
                })));
            }
            Ok(PingPongWitness {
                t: t.clone(),
                a_value,
                b_value,
            })
        })
        .collect()
}

/// `L_u = [[1,0],[u,1]]`.
pub fn lower(u: i64) -> Mat2 {
    Mat2::from_ints(1, 0, u, 1)
}

/// `R_v = [[1,v],[0,1]]`.
pub fn upper(v: i64) -> Mat2 {
    Mat2::from_ints(1, v, 0, 1)
}

pub const NAMED_PAIRS: &[&str] = &["calkin-wilf", "sanov", "lu-rv:<u>:<v>"];

/// `calkin-wilf` = `(L1, R1)`, `sanov` = `(L2, R2)`, `lu-rv:<u>:<v>` = `(L_u, R_v)`.
pub fn named_pair(name: &str) -> Result<(Mat2, Mat2)> {
    let unknown = || Error::UnknownPair(name.to_owned());
    match name {
        "calkin-wilf" => Ok((lower(1), upper(1))),
        "sanov" => Ok((lower(2), upper(2))),
        _ => {
            let params = name.strip_prefix("lu-rv:").ok_or_else(unknown)?;
            let (u, v) = params.split_once(':').ok_or_else(unknown)?;
            let positive = |s: &str| {
                s.parse::<i64>()
                    .ok()
                    .filter(|&n| n > 0 && s.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(unknown)
            };
            Ok((lower(positive(u)?), upper(positive(v)?)))
        }
    }
}
