//! Exact decision engine for sentences about modules over effectively given
//! Bézout domains, with the ring of algebraic integers as the flagship
//! instance.
//!
//! The crate is organised around the pipeline that decides a sentence:
//!
//! * [`polyarith`] — exact polynomial arithmetic over ℤ and ℚ: resultants,
//!   gcd, squarefree parts, factorization over ℚ and over 𝔽_p.
//! * [`algnum`] — algebraic numbers and algebraic integers with certified
//!   root isolation, field composition and exact comparison.
//! * [`idealarith`] — ideals in rings of integers: norms, prime splitting,
//!   class groups at desk scale, principal generators, n-th roots.
//! * [`ezring`] — the effectively given Bézout ring abstraction with three
//!   instances (algebraic integers, a toy valuation domain with value group
//!   ℚ, and ℤ for plumbing tests).
//! * [`zgspec`] — geometry over a dense archimedean value group: cuts,
//!   point taxonomy, rectangles, projection, interval covering, diagrams.
//! * [`decide`] — pair normalization, emptiness, basic-open inclusion via
//!   endpoint-order enumeration and prime constraints, sentence decision.

pub mod algnum;
pub mod decide;
pub mod ezring;
pub mod idealarith;
pub mod polyarith;
pub mod zgspec;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation received the zero polynomial where nonzero is required.
    ZeroPolynomial,
    /// Division by zero (ring element or algebraic number).
    DivisionByZero,
    /// A modulus that was required to be prime is not.
    NotPrime(u64),
    /// Input to the bivariate resultant is constant in the eliminated variable.
    ConstantInEliminatedVariable,
    /// A comparison was requested between non-real algebraic numbers.
    NonRealComparison,
    /// Desk-scale enumeration cap exceeded; the computation was aborted
    /// rather than returning a possibly wrong answer.
    DeskCapExceeded(String),
    /// Prime splitting hit an index divisor in a non-monogenic situation.
    UnsupportedPrime(String),
    /// A configured resource budget (configurations, steps) was exhausted.
    ResourceExhausted(String),
    /// Malformed textual input.
    Parse(String),
    /// The requested operation needs a ring satisfying the decidability
    /// hypotheses (`hypotheses_ok`), and the selected instance does not.
    HypothesesNotSatisfied(&'static str),
    /// Zero element in a position where the normal form requires nonzero.
    ZeroElement(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ConstantInEliminatedVariable => {
                write!(f, "input is constant in the eliminated variable")
            }
            Error::NonRealComparison => write!(f, "comparison of non-real algebraic numbers"),
            Error::DeskCapExceeded(what) => write!(f, "desk-scale cap exceeded: {what}"),
            Error::UnsupportedPrime(what) => write!(f, "unsupported prime: {what}"),
            Error::ResourceExhausted(what) => write!(f, "resource budget exhausted: {what}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::HypothesesNotSatisfied(ring) => write!(
                f,
                "ring instance `{ring}` does not satisfy the decidability hypotheses"
            ),
            Error::ZeroElement(which) => write!(f, "zero {which} element"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
