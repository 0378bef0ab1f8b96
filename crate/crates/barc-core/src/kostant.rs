//! The type-A root system and the Kostant partition function.
//!
//! A positive root of `A_n` is a vector `e_i - e_j` with `i < j`, written
//! uniquely as the consecutive sum of simple roots `α_i + ... + α_{j-1}`.
//! The correspondence with intervals is the identity on the index pair:
//! the root `e_i - e_j` is the interval `[i,j)`.
//!
//! The partition function `K(μ)` counts the multisets of positive roots
//! summing to a weight `μ`. It is computed here by direct recursion over
//! the roots in a fixed order (largest first, choosing a multiplicity for
//! each), which keeps it independent of the fiber-counting recursion so
//! the two act as genuine cross-checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::barcode::{Barcode, Interval};
use crate::curve::BettiCurve;
use crate::error::Error;

/// The positive root `e_i - e_j`, `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRoot {
    i: usize,
    j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j, "invalid root indices ({i},{j})");
        PositiveRoot { i, j }
    }

    pub fn lower(&self) -> usize {
        self.i
    }

    pub fn upper(&self) -> usize {
        self.j
    }

    /// Number of simple-root summands, `j - i`.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// The root as a weight of minimal length `j - 1`: the indicator
    /// vector of `{i, ..., j-1}` in simple-root coordinates.
    pub fn to_weight(&self) -> Weight {
        let mut coords = vec![0i64; self.j - 1];
        for z in &mut coords[self.i - 1..] {
            *z = 1;
        }
        Weight::from_simple(coords)
    }
}

impl From<Interval> for PositiveRoot {
    fn from(interval: Interval) -> Self {
        PositiveRoot {
            i: interval.birth(),
            j: interval.death(),
        }
    }
}

impl From<PositiveRoot> for Interval {
    fn from(root: PositiveRoot) -> Self {
        Interval::new(root.i, root.j)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// The dimension vector of an interval as a weight: `[i,j)` is sent to
/// `α_i + ... + α_{j-1} = e_i - e_j`.
pub fn interval_to_root(interval: Interval) -> Weight {
    PositiveRoot::from(interval).to_weight()
}

/// All `n(n+1)/2` positive roots of `A_n` in lexicographic index order.
pub fn positive_roots(n: usize) -> Result<Vec<PositiveRoot>, Error> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok((1..=n)
        .flat_map(|i| (i + 1..=n + 1).map(move |j| PositiveRoot::new(i, j)))
        .collect())
}

/// An element of the `A_n` root lattice in simple-root coordinates
/// `(z₁, ..., zₙ)`. Length is significant, matching Betti curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    simple_coords: Vec<i64>,
}

impl Weight {
    pub fn from_simple(simple_coords: Vec<i64>) -> Self {
        Weight { simple_coords }
    }

    /// From standard-basis coordinates `(μ₁, ..., μ_{n+1})`, which must
    /// sum to zero; the simple coordinates are the partial sums.
    pub fn from_standard(standard: &[i64]) -> Result<Self, Error> {
        let sum: i64 = standard.iter().sum();
        if sum != 0 {
            return Err(Error::NonZeroCoordinateSum { sum });
        }
        let mut coords = Vec::with_capacity(standard.len().saturating_sub(1));
        let mut acc = 0i64;
        for &mu in &standard[..standard.len().saturating_sub(1)] {
            acc += mu;
            coords.push(acc);
        }
        Ok(Weight {
            simple_coords: coords,
        })
    }

    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    /// Standard-basis coordinates `(μ₁, ..., μ_{n+1})` with
    /// `μ_i = z_i - z_{i-1}` and `z₀ = z_{n+1} = 0`. Always sums to zero.
    pub fn standard_coords(&self) -> Vec<i64> {
        let n = self.simple_coords.len();
        (0..=n)
            .map(|k| {
                let here = self.simple_coords.get(k).copied().unwrap_or(0);
                let prev = if k == 0 { 0 } else { self.simple_coords[k - 1] };
                here - prev
            })
            .collect()
    }

    /// Rank of the ambient root system.
    pub fn rank(&self) -> usize {
        self.simple_coords.len()
    }

    /// Whether all simple coordinates are nonnegative, i.e. the weight
    /// lies in the positive cone where `K` is defined.
    pub fn in_positive_cone(&self) -> bool {
        self.simple_coords.iter().all(|&z| z >= 0)
    }

    fn cone_coords(&self) -> Result<Vec<u64>, Error> {
        self.simple_coords
            .iter()
            .enumerate()
            .map(|(k, &z)| {
                if z >= 0 {
                    Ok(z as u64)
                } else {
                    Err(Error::NegativeWeight {
                        index: k + 1,
                        value: z,
                    })
                }
            })
            .collect()
    }
}

/// The weight `μ = Σ βᵢ αᵢ` attached to a Betti curve: the simple-root
/// coordinates are the curve values.
pub fn weight_of_betti(beta: &BettiCurve) -> Weight {
    Weight::from_simple(
        beta.values()
            .iter()
            .map(|&v| i64::try_from(v).expect("curve entry exceeds i64 range"))
            .collect(),
    )
}

/// A multiset of positive roots with positive multiplicities.
pub type RootMultiset = BTreeMap<PositiveRoot, u64>;

/// Roots in the enumeration order used by the partition recursion:
/// decreasing height, then increasing lower index.
fn roots_largest_first(n: usize) -> Vec<PositiveRoot> {
    let mut roots: Vec<PositiveRoot> = (1..=n)
        .flat_map(|i| (i + 1..=n + 1).map(move |j| PositiveRoot::new(i, j)))
        .collect();
    roots.sort_by_key(|r| (std::cmp::Reverse(r.height()), r.lower()));
    roots
}

fn root_bound(root: PositiveRoot, remaining: &[u64]) -> u64 {
    remaining[root.lower() - 1..root.upper() - 1]
        .iter()
        .copied()
        .min()
        .unwrap_or(0)
}

fn subtract_root(root: PositiveRoot, times: u64, remaining: &mut [u64]) {
    for slot in &mut remaining[root.lower() - 1..root.upper() - 1] {
        *slot -= times;
    }
}

fn add_root(root: PositiveRoot, times: u64, remaining: &mut [u64]) {
    for slot in &mut remaining[root.lower() - 1..root.upper() - 1] {
        *slot += times;
    }
}

/// Every multiset of positive roots summing to `μ`, in canonical order.
/// The zero weight has exactly one partition, the empty multiset.
pub fn kostant_partitions(mu: &Weight) -> Result<Vec<RootMultiset>, Error> {
    let mut remaining = mu.cone_coords()?;
    let roots = roots_largest_first(mu.rank());
    let mut current = RootMultiset::new();
    let mut out = Vec::new();
    partition_rec(&roots, 0, &mut remaining, &mut current, &mut out);
    out.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().map(|(&r, &m)| (r, m)).collect();
        let kb: Vec<_> = b.iter().map(|(&r, &m)| (r, m)).collect();
        ka.cmp(&kb)
    });
    Ok(out)
}

fn partition_rec(
    roots: &[PositiveRoot],
    idx: usize,
    remaining: &mut [u64],
    current: &mut RootMultiset,
    out: &mut Vec<RootMultiset>,
) {
    if remaining.iter().all(|&r| r == 0) {
        out.push(current.clone());
        return;
    }
    if idx == roots.len() {
        return;
    }
    let root = roots[idx];
    let bound = root_bound(root, remaining);
    for m in (0..=bound).rev() {
        if m > 0 {
            subtract_root(root, m, remaining);
            current.insert(root, m);
        }
        partition_rec(roots, idx + 1, remaining, current, out);
        if m > 0 {
            add_root(root, m, remaining);
            current.remove(&root);
        }
    }
}

/// The Kostant partition function `K(μ)`, by the same largest-root-first
/// recursion as [`kostant_partitions`] but counting instead of
/// materializing, memoized on the pending subproblem.
pub fn kostant_count(mu: &Weight) -> Result<BigUint, Error> {
    let remaining = mu.cone_coords()?;
    let roots = roots_largest_first(mu.rank());
    let mut memo = HashMap::new();
    Ok(count_rec(&roots, 0, remaining, &mut memo))
}

fn count_rec(
    roots: &[PositiveRoot],
    idx: usize,
    remaining: Vec<u64>,
    memo: &mut HashMap<(usize, Vec<u64>), BigUint>,
) -> BigUint {
    if remaining.iter().all(|&r| r == 0) {
        return BigUint::from(1u32);
    }
    if idx == roots.len() {
        return BigUint::from(0u32);
    }
    if let Some(hit) = memo.get(&(idx, remaining.clone())) {
        return hit.clone();
    }
    let root = roots[idx];
    let bound = root_bound(root, &remaining);
    let mut total = BigUint::from(0u32);
    for m in 0..=bound {
        let mut next = remaining.clone();
        subtract_root(root, m, &mut next);
        total += count_rec(roots, idx + 1, next, memo);
    }
    memo.insert((idx, remaining), total.clone());
    total
}

/// Reads a partition as a barcode: the root `e_i - e_j` with multiplicity
/// `m` becomes `m` copies of the bar `[i,j)`.
pub fn partition_to_barcode(partition: &RootMultiset) -> Barcode {
    partition
        .iter()
        .map(|(&root, &m)| (Interval::from(root), m))
        .collect()
}

/// JSON form: `{"basis": "simple"|"standard", "coords": [...]}`.
/// Serialization always writes simple coordinates.
#[derive(Serialize, Deserialize)]
struct WeightJson {
    basis: String,
    coords: Vec<i64>,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WeightJson {
            basis: "simple".to_string(),
            coords: self.simple_coords.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = WeightJson::deserialize(deserializer)?;
        match raw.basis.as_str() {
            "simple" => Ok(Weight::from_simple(raw.coords)),
            "standard" => Weight::from_standard(&raw.coords).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!(
                "unknown basis {other:?}: expected \"simple\" or \"standard\""
            ))),
        }
    }
}
