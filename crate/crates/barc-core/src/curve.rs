//! Betti curves: finite sequences of nonnegative integers.
//!
//! A Betti curve of length `n` records a vector-space dimension at each of
//! the indices `1..=n`. Length is significant: `(1,0)` and `(1)` are
//! different curves, even though every bar that fits under one fits under
//! the other.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A dimension function on `{1, ..., n}`, stored as `(β₁, ..., βₙ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiCurve {
    values: Vec<u64>,
}

impl BettiCurve {
    /// The curve `(β₁, ..., βₙ)`. The zero-length curve is legal.
    pub fn new(values: Vec<u64>) -> Self {
        BettiCurve { values }
    }

    /// The all-zero curve of length `n`.
    pub fn zeros(n: usize) -> Self {
        BettiCurve { values: vec![0; n] }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The length `n` of the index range.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the 1-based index `i`; zero outside `1..=n`.
    pub fn value_at(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.values.len() {
            self.values[i - 1]
        } else {
            0
        }
    }

    /// Pointwise sum of two curves of equal length.
    pub fn pointwise_add(&self, other: &BettiCurve) -> BettiCurve {
        assert_eq!(self.len(), other.len(), "curve lengths must match");
        BettiCurve::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for BettiCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated literal such as `2,3,2`.
impl FromStr for BettiCurve {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("invalid Betti curve entry {part:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BettiCurve::new(values))
    }
}
