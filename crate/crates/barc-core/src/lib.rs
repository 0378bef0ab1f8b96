//! Counting and enumerating the barcodes that share a Betti curve.
//!
//! A barcode is a multiset of integer intervals; its Betti curve records,
//! at each index, how many bars cover that index. The map from barcodes
//! to curves is far from injective, and this crate answers the inverse
//! question — how many barcodes realize a given curve, and which ones —
//! by three mutually independent routes:
//!
//! * [`fiber`] counts and enumerates the fiber directly, via a recursion
//!   over Young-diagram overlays, with a brute-force oracle alongside;
//! * [`kostant`] computes the same number as the type-A Kostant partition
//!   function of the weight with the curve as simple-root coordinates,
//!   because intervals correspond to positive roots;
//! * [`juggling`] realizes each barcode as a magic multiplex juggling
//!   sequence — a bar born at `i` and dying at `j` is a throw at time `i`
//!   to height `j - i` — and counts sequences instead.
//!
//! The routes agree, and the `crosscheck` machinery in the CLI sweeps
//! them against each other. [`render`] draws barcodes and bucket diagrams
//! as deterministic text.
//!
//! ```
//! use barc_core::{count_barcodes, BettiCurve};
//!
//! let beta = BettiCurve::new(vec![2, 3, 2]);
//! assert_eq!(count_barcodes(&beta).to_string(), "13");
//! ```

pub mod barcode;
pub mod curve;
pub mod error;
pub mod fiber;
pub mod juggling;
pub mod kostant;
pub mod render;

pub use barcode::{Barcode, Interval};
pub use curve::BettiCurve;
pub use error::Error;
pub use fiber::{
    brute_force_barcodes, count_barcodes, enumerate_barcodes, enumerate_barcodes_capped,
    young_overlays, YoungOverlay, DEFAULT_ENUMERATION_CAP,
};
pub use juggling::{
    differential, enumerate_sequences, enumerate_sequences_capped, kostant_via_juggling, sigma,
    sigma_inverse, truncate, Differential, JugglingSequence, JugglingState, Violation,
};
pub use kostant::{
    interval_to_root, kostant_count, kostant_partitions, partition_to_barcode, positive_roots,
    weight_of_betti, PositiveRoot, RootMultiset, Weight,
};
pub use render::{render_barcode, render_buckets, Canvas, GlyphSet};
