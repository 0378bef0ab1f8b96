//! Magic juggling states, sequences, and the barcode bijection.
//!
//! A juggling state `⟨s₁, ..., s_h⟩` is an integer vector read as
//! zero-padded to infinite length; entry `s_k` is the signed number of
//! balls landing in `k` time steps, with negative entries acting as magic
//! balls that cancel ordinary balls thrown onto them. A sequence of
//! states is a valid magic juggling sequence exactly when
//!
//!   (i)  every state has the same total, and
//!   (ii) `s^{i-1}_{k+1} <= s^i_k` for every transition `i` and height `k`,
//!
//! i.e. each state dominates the previous one shifted down a slot, the
//! surplus being the balls thrown at that time.
//!
//! The juggling map sends a barcode to the sequence of differentials of
//! its truncations; a bar `[i,j)` reads as a throw at time `i` to height
//! `j-i`. The map is a bijection onto the sequences that end at the zero
//! state, and the inverse reads multiplicities straight off the
//! transition surpluses.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::barcode::{Barcode, Interval};
use crate::curve::BettiCurve;
use crate::error::Error;
use crate::fiber::DEFAULT_ENUMERATION_CAP;

/// A juggling state, stored trailing-zero-trimmed; the zero state `⟨0⟩`
/// is the empty vector. Equality is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct JugglingState {
    entries: Vec<i64>,
}

impl JugglingState {
    /// A standalone state; the total ball count must be nonnegative.
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        let sum: i64 = entries.iter().sum();
        if sum < 0 {
            return Err(Error::NegativeBallCount { sum });
        }
        Ok(Self::trimmed(entries))
    }

    /// The zero state `⟨0⟩`.
    pub fn zero() -> Self {
        JugglingState::default()
    }

    fn trimmed(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        JugglingState { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry at 1-based height `k`, zero beyond the stored prefix.
    pub fn entry(&self, k: usize) -> i64 {
        if k >= 1 && k <= self.entries.len() {
            self.entries[k - 1]
        } else {
            0
        }
    }

    /// Height of the last nonzero entry; zero for the zero state.
    pub fn height(&self) -> usize {
        self.entries.len()
    }

    /// Total ball count `m`.
    pub fn ball_count(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for JugglingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "<0>");
        }
        write!(f, "<")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ">")
    }
}

/// JSON form: array of entries; the zero state serializes as `[0]`.
impl Serialize for JugglingState {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.entries.is_empty() {
            [0i64].serialize(serializer)
        } else {
            self.entries.serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for JugglingState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<i64>::deserialize(deserializer)?;
        JugglingState::new(entries).map_err(D::Error::custom)
    }
}

/// The first clause of the validity criterion that a sequence breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Clause (i): state `index` does not have the same total as state 0.
    UnequalSums { index: usize, sum: i64, expected: i64 },
    /// Clause (ii): `s^{i-1}_{k+1} > s^i_k`.
    ShiftInequality {
        i: usize,
        k: usize,
        upper: i64,
        lower: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnequalSums {
                index,
                sum,
                expected,
            } => write!(
                f,
                "clause (i): state {index} sums to {sum}, state 0 sums to {expected}"
            ),
            Violation::ShiftInequality { i, k, upper, lower } => write!(
                f,
                "clause (ii) at i={i}, k={k}: s^{}_{} = {upper} > s^{}_{} = {lower}",
                i - 1,
                k + 1,
                i,
                k
            ),
        }
    }
}

/// An ordered list of `n+1` juggling states. Construction does not check
/// validity; use [`JugglingSequence::validate`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct JugglingSequence {
    states: Vec<JugglingState>,
}

impl JugglingSequence {
    pub fn new(states: Vec<JugglingState>) -> Self {
        assert!(!states.is_empty(), "a sequence has at least one state");
        JugglingSequence { states }
    }

    pub fn states(&self) -> &[JugglingState] {
        &self.states
    }

    /// The sequence length `n` (number of transitions).
    pub fn transitions(&self) -> usize {
        self.states.len() - 1
    }

    pub fn initial(&self) -> &JugglingState {
        &self.states[0]
    }

    pub fn terminal(&self) -> &JugglingState {
        &self.states[self.states.len() - 1]
    }

    /// The validity criterion: clause (i) constant sums, then clause (ii)
    /// shift inequalities, reporting the first violation in scan order.
    pub fn validate(&self) -> Result<(), Violation> {
        let expected = self.states[0].ball_count();
        for (index, state) in self.states.iter().enumerate().skip(1) {
            let sum = state.ball_count();
            if sum != expected {
                return Err(Violation::UnequalSums {
                    index,
                    sum,
                    expected,
                });
            }
        }
        for i in 1..self.states.len() {
            let prev = &self.states[i - 1];
            let cur = &self.states[i];
            let heights = prev.height().max(cur.height() + 1);
            for k in 1..=heights {
                let upper = prev.entry(k + 1);
                let lower = cur.entry(k);
                if upper > lower {
                    return Err(Violation::ShiftInequality { i, k, upper, lower });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Throws made at time `i`: height `j` maps to
    /// `t_j = s^i_j - s^{i-1}_{j+1}`, omitting zeroes. The counts sum to
    /// `s^{i-1}_1`, the number of balls in hand.
    pub fn throws_at(&self, i: usize) -> Result<BTreeMap<usize, u64>, Error> {
        self.validate().map_err(Error::InvalidSequence)?;
        let n = self.transitions();
        if i < 1 || i > n {
            return Err(Error::StepOutOfRange { step: i, last: n });
        }
        let prev = &self.states[i - 1];
        let cur = &self.states[i];
        let mut throws = BTreeMap::new();
        let heights = prev.height().max(cur.height());
        for j in 1..=heights {
            let t = cur.entry(j) - prev.entry(j + 1);
            if t > 0 {
                throws.insert(j, t as u64);
            }
        }
        Ok(throws)
    }
}

impl fmt::Display for JugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.states.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// JSON form: array of state arrays.
impl Serialize for JugglingSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.states.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for JugglingSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let states = Vec::<JugglingState>::deserialize(deserializer)?;
        if states.is_empty() {
            return Err(D::Error::custom("a sequence has at least one state"));
        }
        Ok(JugglingSequence::new(states))
    }
}

/// The discrete derivative `(β₁, β₂-β₁, ..., -βₙ)` of a Betti curve,
/// one entry longer than the curve. Entries sum to zero and prefix sums
/// reconstruct the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Differential {
    entries: Vec<i64>,
}

impl Differential {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// As a canonical juggling state.
    pub fn to_state(&self) -> JugglingState {
        JugglingState::trimmed(self.entries.clone())
    }
}

/// The differential of `beta`, of length `n + 1`.
pub fn differential(beta: &BettiCurve) -> Differential {
    let signed = |v: u64| i64::try_from(v).expect("curve entry exceeds i64 range");
    let n = beta.len();
    let entries = (1..=n + 1)
        .map(|k| signed(beta.value_at(k)) - signed(beta.value_at(k - 1)))
        .collect();
    Differential { entries }
}

/// The `i`-truncation: drop bars born at or before `i`, shift the rest
/// `i` steps left. `truncate(B, 0)` is the identity.
pub fn truncate(barcode: &Barcode, i: usize) -> Barcode {
    barcode
        .bars()
        .filter(|(iv, _)| iv.birth() >= i + 1)
        .map(|(iv, m)| (Interval::new(iv.birth() - i, iv.death() - i), m))
        .collect()
}

/// The juggling map: state `i` is the differential of the Betti curve of
/// the `i`-truncation. The result is always a valid sequence starting at
/// `⟨δ(β)⟩` and ending at the zero state.
pub fn sigma(barcode: &Barcode, n: usize) -> Result<JugglingSequence, Error> {
    if let Some((interval, _)) = barcode.bars().find(|(iv, _)| iv.death() > n + 1) {
        return Err(Error::BarOutOfRange {
            interval,
            max: n + 1,
        });
    }
    let states = (0..=n)
        .map(|i| {
            let truncated = truncate(barcode, i);
            let beta = truncated
                .betti_curve(n - i)
                .expect("truncated bars stay in range");
            differential(&beta).to_state()
        })
        .collect();
    Ok(JugglingSequence::new(states))
}

/// Inverts the juggling map: the bar `[i, i+j)` gets multiplicity
/// `s^i_j - s^{i-1}_{j+1}`. Requires a valid sequence that ends at the
/// zero state with an initial state of height at most `n + 1`.
pub fn sigma_inverse(sequence: &JugglingSequence) -> Result<Barcode, Error> {
    sequence.validate().map_err(Error::InvalidSequence)?;
    if !sequence.terminal().is_zero() {
        return Err(Error::NonZeroTerminalState);
    }
    let n = sequence.transitions();
    let len = sequence.initial().height();
    if len > n + 1 {
        return Err(Error::InitialStateTooTall {
            len,
            n,
            max: n + 1,
        });
    }
    let mut barcode = Barcode::new();
    for i in 1..=n {
        let prev = &sequence.states()[i - 1];
        let cur = &sequence.states()[i];
        let heights = prev.height().max(cur.height());
        for j in 1..=heights {
            let m = cur.entry(j) - prev.entry(j + 1);
            debug_assert!(m >= 0, "validity guarantees nonnegative surpluses");
            if m > 0 {
                barcode.add(Interval::new(i, i + j), m as u64);
            }
        }
    }
    Ok(barcode)
}

/// All magic juggling sequences of length `n` from state `a` to state
/// `b`, in canonical order, refusing result sets beyond the cap.
pub fn enumerate_sequences(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
) -> Result<Vec<JugglingSequence>, Error> {
    enumerate_sequences_capped(a, b, n, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_sequences`] with an explicit cap.
pub fn enumerate_sequences_capped(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    cap: u64,
) -> Result<Vec<JugglingSequence>, Error> {
    let mut out = Vec::new();
    // Clause (i) makes unequal totals unreachable.
    if a.ball_count() != b.ball_count() {
        return Ok(out);
    }
    let mut path = vec![a.clone()];
    search_sequences(a, b, n, cap, &mut path, &mut out)?;
    out.sort();
    Ok(out)
}

fn search_sequences(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    cap: u64,
    path: &mut Vec<JugglingState>,
    out: &mut Vec<JugglingSequence>,
) -> Result<(), Error> {
    let step = path.len() - 1;
    if step == n {
        if path.last().unwrap() == b {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded {
                    count: BigUint::from(cap) + 1u32,
                    cap,
                });
            }
            out.push(JugglingSequence::new(path.clone()));
        }
        return Ok(());
    }
    let current = path.last().unwrap().clone();
    let budget = current.entry(1);
    if budget < 0 {
        // No nonnegative throw assignment can sum to a negative hand.
        return Ok(());
    }
    // Balls thrown higher can neither land inside b's support by step n
    // nor reach a magic ball inherited from the initial state.
    let i = step + 1;
    let height_cap = (b.height() + n - i).max((a.height() + 1).saturating_sub(i));
    let base: Vec<i64> = current.entries().iter().skip(1).copied().collect();
    let mut throws = vec![0u64; height_cap];
    distribute_throws(
        &base,
        &mut throws,
        0,
        budget as u64,
        a,
        b,
        n,
        cap,
        path,
        out,
    )
}

#[allow(clippy::too_many_arguments)]
fn distribute_throws(
    base: &[i64],
    throws: &mut Vec<u64>,
    from: usize,
    budget: u64,
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    cap: u64,
    path: &mut Vec<JugglingState>,
    out: &mut Vec<JugglingSequence>,
) -> Result<(), Error> {
    if from == throws.len() {
        if budget != 0 {
            return Ok(());
        }
        let height = base.len().max(throws.len());
        let entries: Vec<i64> = (0..height)
            .map(|k| {
                base.get(k).copied().unwrap_or(0) + throws.get(k).map(|&t| t as i64).unwrap_or(0)
            })
            .collect();
        path.push(JugglingState::trimmed(entries));
        let result = search_sequences(a, b, n, cap, path, out);
        path.pop();
        return result;
    }
    if from == throws.len() - 1 {
        throws[from] = budget;
        let result = distribute_throws(base, throws, from + 1, 0, a, b, n, cap, path, out);
        throws[from] = 0;
        return result;
    }
    for t in 0..=budget {
        throws[from] = t;
        distribute_throws(base, throws, from + 1, budget - t, a, b, n, cap, path, out)?;
        throws[from] = 0;
    }
    Ok(())
}

/// Theorem 3.8 of the magic-juggling literature as an independent route
/// to `K(μ)`: count the sequences from `⟨μ₁, ..., μₙ⟩` to
/// `⟨μ₁ + ... + μₙ⟩`, where the `μᵢ` are standard-basis coordinates.
pub fn kostant_via_juggling(mu: &crate::kostant::Weight) -> Result<BigUint, Error> {
    if let Some((k, &z)) = mu
        .simple_coords()
        .iter()
        .enumerate()
        .find(|(_, &z)| z < 0)
    {
        return Err(Error::NegativeWeight {
            index: k + 1,
            value: z,
        });
    }
    let n = mu.rank();
    let standard = mu.standard_coords();
    let initial = JugglingState::new(standard[..n].to_vec()).expect("total is zₙ >= 0");
    let terminal =
        JugglingState::new(vec![standard[..n].iter().sum()]).expect("total is zₙ >= 0");
    let sequences = enumerate_sequences(&initial, &terminal, n)?;
    Ok(BigUint::from(sequences.len() as u64))
}

/// The bucket-diagram walkthrough: two balls thrown to heights 1 and 2 at
/// time 1 (the first cancelling a magic ball), nothing at time 2, and
/// throws to heights 1 and 3 at time 3 cancelling the last magic ball.
#[cfg(test)]
pub(crate) fn figure_sequence() -> JugglingSequence {
    let state = |entries: &[i64]| JugglingState::new(entries.to_vec()).unwrap();
    JugglingSequence::new(vec![
        state(&[2, -1, 1, -1]),
        state(&[0, 2, -1]),
        state(&[2, -1]),
        state(&[0, 0, 1]),
    ])
}
