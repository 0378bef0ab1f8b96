//! Counting and enumerating the barcodes that realize a Betti curve.
//!
//! The count satisfies a recursion over Young-diagram overlays: a column
//! sequence `Y` fits under a curve `X` (written here as an overlay) when it
//! is non-increasing, matches the first column exactly, and stays below
//! `X` everywhere else. Each overlay corresponds to one choice of the
//! multiset of bars born at index 1, and the remainder `X - Y` starts with
//! a zero, so it reads as a curve one index shorter. Summing the counts of
//! the remainders over all overlays counts the fiber exactly once.
//!
//! Counts use arbitrary precision throughout; fibers grow quickly in the
//! entries. Enumeration is guarded by a cap and refuses oversized fibers
//! by name. A separate brute-force enumerator, which never touches the
//! recursion, serves as an independent oracle for tests.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::barcode::{Barcode, Interval};
use crate::curve::BettiCurve;
use crate::error::Error;

/// Default refusal threshold for enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// A non-increasing column sequence fitting under a reference curve with
/// the same first column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct YoungOverlay {
    values: Vec<u64>,
}

impl YoungOverlay {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Checks the three overlay conditions against a reference curve.
    pub fn fits_under(&self, x: &BettiCurve) -> bool {
        let y = &self.values;
        let x = x.values();
        y.len() == x.len()
            && !y.is_empty()
            && y[0] == x[0]
            && y.windows(2).all(|w| w[0] >= w[1])
            && y.iter().zip(x).all(|(yi, xi)| yi <= xi)
    }

    /// The unique multiset of bars born at index 1 whose Betti curve has
    /// these column heights: `y[k] - y[k+1]` copies of `[1, k+2)`.
    pub fn initial_bars(&self) -> Barcode {
        let mut bars = Barcode::new();
        for k in 0..self.values.len() {
            let here = self.values[k];
            let next = self.values.get(k + 1).copied().unwrap_or(0);
            bars.add(Interval::new(1, k + 2), here - next);
        }
        bars
    }
}

/// All overlays fitting under `beta`, in lexicographically decreasing
/// order. If the first entry is zero the unique overlay is all-zeros.
pub fn young_overlays(beta: &BettiCurve) -> Result<Vec<YoungOverlay>, Error> {
    if beta.is_empty() {
        return Err(Error::EmptyCurve);
    }
    let x = beta.values();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(x.len());
    prefix.push(x[0]);
    extend_overlay(x, &mut prefix, &mut out);
    Ok(out)
}

fn extend_overlay(x: &[u64], prefix: &mut Vec<u64>, out: &mut Vec<YoungOverlay>) {
    let k = prefix.len();
    if k == x.len() {
        out.push(YoungOverlay {
            values: prefix.clone(),
        });
        return;
    }
    let bound = prefix[k - 1].min(x[k]);
    for value in (0..=bound).rev() {
        prefix.push(value);
        extend_overlay(x, prefix, out);
        prefix.pop();
    }
}

/// Exact size of the fiber over `beta`: the number of barcodes whose Betti
/// curve is `beta`. The empty curve has exactly one barcode (the empty
/// one), so the count is always at least 1.
pub fn count_barcodes(beta: &BettiCurve) -> BigUint {
    let mut memo = HashMap::new();
    count_split(beta.values(), &mut memo)
}

/// Zero entries split the problem: no bar crosses a zero column, so the
/// count factors over the maximal zero-free segments.
fn count_split(values: &[u64], memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
    let mut product = BigUint::from(1u32);
    for segment in values.split(|&v| v == 0).filter(|s| !s.is_empty()) {
        product *= count_dense(segment, memo);
    }
    product
}

fn count_dense(segment: &[u64], memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
    if segment.len() == 1 {
        return BigUint::from(1u32);
    }
    if let Some(hit) = memo.get(segment) {
        return hit.clone();
    }
    let beta = BettiCurve::new(segment.to_vec());
    let mut total = BigUint::from(0u32);
    for overlay in young_overlays(&beta).expect("dense segment is nonempty") {
        // beta - Y begins with a zero; strip exactly that zero and recurse.
        let rest: Vec<u64> = segment[1..]
            .iter()
            .zip(&overlay.values()[1..])
            .map(|(b, y)| b - y)
            .collect();
        total += count_split(&rest, memo);
    }
    memo.insert(segment.to_vec(), total.clone());
    total
}

/// Every barcode whose Betti curve is `beta`, in canonical order, refusing
/// fibers larger than [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_barcodes(beta: &BettiCurve) -> Result<Vec<Barcode>, Error> {
    enumerate_barcodes_capped(beta, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_barcodes`] with an explicit cap.
pub fn enumerate_barcodes_capped(beta: &BettiCurve, cap: u64) -> Result<Vec<Barcode>, Error> {
    let count = count_barcodes(beta);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count, cap });
    }
    let mut fiber = enumerate_rec(beta.values());
    fiber.sort();
    debug_assert_eq!(BigUint::from(fiber.len() as u64), count);
    Ok(fiber)
}

/// Mirrors the counting recursion: fix the bars born at index 1 from an
/// overlay, enumerate the remainder one index shorter, shift it back up,
/// and take the union.
fn enumerate_rec(values: &[u64]) -> Vec<Barcode> {
    if values.is_empty() {
        return vec![Barcode::new()];
    }
    let beta = BettiCurve::new(values.to_vec());
    let mut fiber = Vec::new();
    for overlay in young_overlays(&beta).expect("nonempty curve") {
        let initial = overlay.initial_bars();
        let rest: Vec<u64> = values[1..]
            .iter()
            .zip(&overlay.values()[1..])
            .map(|(b, y)| b - y)
            .collect();
        for tail in enumerate_rec(&rest) {
            fiber.push(shift_right(&tail, 1).union(&initial));
        }
    }
    fiber
}

fn shift_right(barcode: &Barcode, offset: usize) -> Barcode {
    barcode
        .bars()
        .map(|(iv, m)| (Interval::new(iv.birth() + offset, iv.death() + offset), m))
        .collect()
}

/// Independent oracle: walks every multiplicity assignment over the
/// intervals inside `[1, n+1)`, bounding each interval by the minimum of
/// `beta` over its support, and keeps the assignments whose Betti curve is
/// exactly `beta`. Intended for small `n` and small entries only.
pub fn brute_force_barcodes(beta: &BettiCurve) -> Vec<Barcode> {
    let n = beta.len();
    let intervals: Vec<Interval> = (1..=n)
        .flat_map(|i| (i + 1..=n + 1).map(move |j| Interval::new(i, j)))
        .collect();
    let mut remaining = beta.values().to_vec();
    let mut chosen: Vec<(Interval, u64)> = Vec::new();
    let mut found = Vec::new();
    brute_rec(&intervals, 0, &mut remaining, &mut chosen, &mut found);
    found.sort();
    found
}

fn brute_rec(
    intervals: &[Interval],
    idx: usize,
    remaining: &mut [u64],
    chosen: &mut Vec<(Interval, u64)>,
    found: &mut Vec<Barcode>,
) {
    if idx == intervals.len() {
        if remaining.iter().all(|&r| r == 0) {
            found.push(chosen.iter().copied().collect());
        }
        return;
    }
    let interval = intervals[idx];
    let span = interval.birth() - 1..interval.death() - 1;
    let bound = remaining[span.clone()].iter().copied().min().unwrap_or(0);
    for m in 0..=bound {
        if m > 0 {
            for slot in &mut remaining[span.clone()] {
                *slot -= 1;
            }
            chosen.push((interval, m));
        }
        brute_rec(intervals, idx + 1, remaining, chosen, found);
        if m > 0 {
            chosen.pop();
        }
    }
    for slot in &mut remaining[span] {
        *slot += bound;
    }
}
