//! Structured pass/fail records for statement checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of one named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement's parameters were declined (for example a garbled
    /// source statement); counts as non-failing.
    Refused,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Refused => write!(f, "refused"),
        }
    }
}

/// Pass/fail record for a named statement check. Failing verdicts always
/// carry a minimal counterexample (a monomial, a point, or a prime).
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub params: String,
    pub computed: String,
    pub expected: String,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    /// Assumptions the verdict is conditional on (named conjectures,
    /// symmetry transport, choice-of-model notes).
    pub assumptions: Vec<String>,
}

impl VerificationReport {
    pub fn pass(id: &str, params: &str, computed: String, expected: String) -> Self {
        VerificationReport {
            id: id.into(),
            params: params.into(),
            computed,
            expected,
            verdict: Verdict::Pass,
            counterexample: None,
            assumptions: Vec::new(),
        }
    }

    pub fn fail(
        id: &str,
        params: &str,
        computed: String,
        expected: String,
        counterexample: String,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            params: params.into(),
            computed,
            expected,
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            assumptions: Vec::new(),
        }
    }

    pub fn refused(id: &str, params: &str, reason: String) -> Self {
        VerificationReport {
            id: id.into(),
            params: params.into(),
            computed: String::new(),
            expected: String::new(),
            verdict: Verdict::Refused,
            counterexample: Some(reason),
            assumptions: Vec::new(),
        }
    }

    pub fn with_assumption(mut self, a: &str) -> Self {
        self.assumptions.push(a.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}
