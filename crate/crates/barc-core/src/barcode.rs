//! Barcodes: multisets of half-open integer intervals.
//!
//! An interval `[i,j)` is the set `{i, ..., j-1}` with `1 <= i < j`; the
//! birth is `i` and the death `j` is the first index no longer covered.
//! A barcode stores positive multiplicities keyed by interval, so two
//! barcodes are equal exactly when their canonical `(birth, death,
//! multiplicity)` listings are identical.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::curve::BettiCurve;
use crate::error::Error;

/// The half-open interval `[birth, death)`, nonempty by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    birth: usize,
    death: usize,
}

impl Interval {
    /// The interval `[birth, death)`.
    ///
    /// Panics unless `1 <= birth < death`; use [`Interval::try_new`] for
    /// untrusted input.
    pub fn new(birth: usize, death: usize) -> Self {
        assert!(
            birth >= 1 && birth < death,
            "invalid interval [{birth},{death})"
        );
        Interval { birth, death }
    }

    pub fn try_new(birth: u64, death: u64) -> Result<Self, Error> {
        if birth >= 1 && birth < death {
            Ok(Interval {
                birth: birth as usize,
                death: death as usize,
            })
        } else {
            Err(Error::InvalidInterval { birth, death })
        }
    }

    pub fn birth(&self) -> usize {
        self.birth
    }

    pub fn death(&self) -> usize {
        self.death
    }

    /// Number of indices covered, `death - birth`.
    pub fn len(&self) -> usize {
        self.death - self.birth
    }

    /// Whether the 1-based index `i` lies in `{birth, ..., death-1}`.
    pub fn contains(&self, i: usize) -> bool {
        self.birth <= i && i < self.death
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.birth, self.death)
    }
}

/// A multiset of intervals with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Barcode {
    bars: BTreeMap<Interval, u64>,
}

impl Barcode {
    /// The empty barcode.
    pub fn new() -> Self {
        Barcode::default()
    }

    /// Adds `multiplicity` copies of `interval`. Adding zero is a no-op.
    pub fn add(&mut self, interval: Interval, multiplicity: u64) {
        if multiplicity > 0 {
            *self.bars.entry(interval).or_insert(0) += multiplicity;
        }
    }

    /// Builds a barcode from `(birth, death, multiplicity)` triples,
    /// merging duplicates. Rejects malformed intervals and explicit zero
    /// multiplicities.
    pub fn from_triples<I>(triples: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (u64, u64, u64)>,
    {
        let mut barcode = Barcode::new();
        for (birth, death, multiplicity) in triples {
            let interval = Interval::try_new(birth, death)?;
            if multiplicity == 0 {
                return Err(Error::ZeroMultiplicity { interval });
            }
            barcode.add(interval, multiplicity);
        }
        Ok(barcode)
    }

    /// Canonical `(birth, death, multiplicity)` listing, sorted by
    /// `(birth, death)`.
    pub fn triples(&self) -> Vec<(u64, u64, u64)> {
        self.bars
            .iter()
            .map(|(iv, &m)| (iv.birth as u64, iv.death as u64, m))
            .collect()
    }

    /// Bars in canonical order with their multiplicities.
    pub fn bars(&self) -> impl Iterator<Item = (Interval, u64)> + '_ {
        self.bars.iter().map(|(&iv, &m)| (iv, m))
    }

    /// Multiplicity of `interval`, zero when absent.
    pub fn multiplicity(&self, interval: Interval) -> u64 {
        self.bars.get(&interval).copied().unwrap_or(0)
    }

    /// Number of distinct intervals.
    pub fn distinct_bars(&self) -> usize {
        self.bars.len()
    }

    /// Total number of bars counted with multiplicity.
    pub fn total_bars(&self) -> u64 {
        self.bars.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Largest death among the bars, `None` when empty.
    pub fn max_death(&self) -> Option<usize> {
        self.bars.keys().map(|iv| iv.death).max()
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Barcode) -> Barcode {
        let mut merged = self.clone();
        for (iv, m) in other.bars() {
            merged.add(iv, m);
        }
        merged
    }

    /// The Betti curve of length `n`: entry `i` sums the multiplicities of
    /// the bars containing `i`. Every bar must fit inside `[1, n+1)`.
    pub fn betti_curve(&self, n: usize) -> Result<BettiCurve, Error> {
        let mut values = vec![0u64; n];
        for (interval, multiplicity) in self.bars() {
            if interval.death > n + 1 {
                return Err(Error::BarOutOfRange {
                    interval,
                    max: n + 1,
                });
            }
            for slot in &mut values[interval.birth - 1..interval.death - 1] {
                *slot += multiplicity;
            }
        }
        Ok(BettiCurve::new(values))
    }

    /// The barcode with `βᵢ` copies of `[i, i+1)`: the canonical witness
    /// that every Betti curve is realized by at least one barcode.
    pub fn unit_of(beta: &BettiCurve) -> Barcode {
        let mut barcode = Barcode::new();
        for (k, &value) in beta.values().iter().enumerate() {
            barcode.add(Interval::new(k + 1, k + 2), value);
        }
        barcode
    }
}

/// Barcodes order by their canonical triple listings, lexicographically.
impl PartialOrd for Barcode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Barcode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.triples().cmp(&other.triples())
    }
}

impl FromIterator<(Interval, u64)> for Barcode {
    fn from_iter<T: IntoIterator<Item = (Interval, u64)>>(iter: T) -> Self {
        let mut barcode = Barcode::new();
        for (iv, m) in iter {
            barcode.add(iv, m);
        }
        barcode
    }
}

impl fmt::Display for Barcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (iv, m)) in self.bars().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{iv}:{m}")?;
        }
        write!(f, "}}")
    }
}

/// JSON form: array of `[birth, death, multiplicity]` triples in canonical
/// order.
impl Serialize for Barcode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples = self.triples();
        let mut seq = serializer.serialize_seq(Some(triples.len()))?;
        for (b, d, m) in triples {
            seq.serialize_element(&[b, d, m])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Barcode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let triples = Vec::<(u64, u64, u64)>::deserialize(deserializer)?;
        Barcode::from_triples(triples).map_err(D::Error::custom)
    }
}
