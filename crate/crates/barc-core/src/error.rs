use num_bigint::BigUint;
use thiserror::Error;

use crate::barcode::Interval;
use crate::juggling::Violation;

/// Errors reported by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A bar reaches past the ambient index range `[1, n+1]`.
    #[error("bar {interval} exceeds the index range [1, {max}]")]
    BarOutOfRange { interval: Interval, max: usize },

    /// An interval with `birth < 1` or `birth >= death`.
    #[error("invalid interval [{birth},{death}): need 1 <= birth < death")]
    InvalidInterval { birth: u64, death: u64 },

    /// A barcode entry carrying multiplicity zero.
    #[error("bar {interval} has multiplicity 0; zero-multiplicity bars are never stored")]
    ZeroMultiplicity { interval: Interval },

    /// Overlay generation needs at least one column.
    #[error("Betti curve must be nonempty")]
    EmptyCurve,

    /// Enumeration refused because the fiber is larger than the cap.
    #[error("enumeration refused: {count} items would exceed the cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    /// The A_n root system needs n >= 1.
    #[error("rank must be at least 1")]
    ZeroRank,

    /// The Kostant partition function vanishes outside the positive cone.
    #[error(
        "weight has negative simple-root coordinate z{index} = {value}; \
         the Kostant partition function vanishes outside the positive cone"
    )]
    NegativeWeight { index: usize, value: i64 },

    /// Standard-basis coordinates of a root-lattice element must sum to zero.
    #[error("standard-basis coordinates must sum to zero, got {sum}")]
    NonZeroCoordinateSum { sum: i64 },

    /// A standalone juggling state must have a nonnegative ball count.
    #[error("juggling state has negative total ball count {sum}")]
    NegativeBallCount { sum: i64 },

    /// A sequence failed the validity criterion.
    #[error("invalid sequence: {0}")]
    InvalidSequence(Violation),

    /// A throw query outside the sequence's transitions.
    #[error("step index {step} out of range 1..={last}")]
    StepOutOfRange { step: usize, last: usize },

    /// Inverting the juggling map needs a sequence that ends at the zero state.
    #[error("sequence must end at the zero state to invert the juggling map")]
    NonZeroTerminalState,

    /// Inverting the juggling map needs an initial state of height at most n+1.
    #[error("initial state has {len} entries but a length-{n} sequence allows at most {max}")]
    InitialStateTooTall { len: usize, n: usize, max: usize },
}
