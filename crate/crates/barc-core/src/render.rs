//! Deterministic text rendering of barcodes and bucket diagrams.
//!
//! Output is a pure function of the input: the same barcode or sequence
//! always produces byte-identical text, which makes the renderings usable
//! as golden files.

use std::fmt;

use crate::barcode::Barcode;
use crate::error::Error;
use crate::juggling::JugglingSequence;

/// Glyph choices for rendering; Unicode by default, ASCII as a fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GlyphSet {
    #[default]
    Unicode,
    Ascii,
}

impl GlyphSet {
    fn bar(self) -> char {
        match self {
            GlyphSet::Unicode => '━',
            GlyphSet::Ascii => '-',
        }
    }

    fn filled(self) -> char {
        match self {
            GlyphSet::Unicode => '●',
            GlyphSet::Ascii => '*',
        }
    }

    fn hollow(self) -> char {
        match self {
            GlyphSet::Unicode => '○',
            GlyphSet::Ascii => 'o',
        }
    }

    fn corner(self) -> char {
        match self {
            GlyphSet::Unicode => '└',
            GlyphSet::Ascii => '+',
        }
    }

    fn wall(self) -> char {
        match self {
            GlyphSet::Unicode => '│',
            GlyphSet::Ascii => '|',
        }
    }
}

/// A rectangular grid of character cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canvas {
    width: usize,
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn new(width: usize) -> Self {
        Canvas {
            width,
            rows: Vec::new(),
        }
    }

    fn blank_row(&mut self) -> &mut Vec<char> {
        self.rows.push(vec![' '; self.width]);
        self.rows.last_mut().unwrap()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = String> + '_ {
        self.rows.iter().map(|r| r.iter().collect())
    }
}

impl fmt::Display for Canvas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            for c in row {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

fn write_str(row: &mut [char], x: usize, text: &str) {
    for (offset, c) in text.chars().enumerate() {
        if x + offset < row.len() {
            row[x + offset] = c;
        }
    }
}

fn digits(value: usize) -> usize {
    value.to_string().len()
}

/// Draws one row per bar copy, bars in canonical order, over an index
/// axis. The bar `[i,j)` spans the cells of positions `i..j-1`.
pub fn render_barcode(barcode: &Barcode, n: usize, glyphs: GlyphSet) -> Result<Canvas, Error> {
    if let Some((interval, _)) = barcode.bars().find(|(iv, _)| iv.death() > n + 1) {
        return Err(Error::BarOutOfRange {
            interval,
            max: n + 1,
        });
    }
    let cell = digits(n) + 1;
    let width = if n == 0 { 0 } else { n * cell - 1 };
    let mut canvas = Canvas::new(width);
    for (interval, multiplicity) in barcode.bars() {
        let x0 = (interval.birth() - 1) * cell;
        let x1 = (interval.death() - 2) * cell + cell - 2;
        for _ in 0..multiplicity {
            let row = canvas.blank_row();
            for slot in &mut row[x0..=x1] {
                *slot = glyphs.bar();
            }
        }
    }
    let axis = canvas.blank_row();
    for p in 1..=n {
        write_str(axis, (p - 1) * cell, &p.to_string());
    }
    Ok(canvas)
}

/// Draws a bucket diagram: one column per time step, one row per height
/// (highest on top), `|s^i_k|` glyphs per cell, filled for ordinary balls
/// and hollow for magic balls.
pub fn render_buckets(sequence: &JugglingSequence, glyphs: GlyphSet) -> Result<Canvas, Error> {
    sequence.validate().map_err(Error::InvalidSequence)?;
    let states = sequence.states();
    let n = sequence.transitions();
    let max_height = states.iter().map(|s| s.height()).max().unwrap_or(0);
    let max_count = states
        .iter()
        .flat_map(|s| s.entries())
        .map(|e| e.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    let label = digits(max_height.max(1));
    let cell = max_count.max(digits(n) + 1) + 1;
    let left = label + 3;
    let width = left + states.len() * cell - 1;
    let mut canvas = Canvas::new(width);
    for k in (1..=max_height).rev() {
        let row = canvas.blank_row();
        write_str(row, 0, &format!("{k:>label$}"));
        row[label + 1] = glyphs.wall();
        for (t, state) in states.iter().enumerate() {
            let entry = state.entry(k);
            let glyph = if entry >= 0 {
                glyphs.filled()
            } else {
                glyphs.hollow()
            };
            let x = left + t * cell;
            for offset in 0..entry.unsigned_abs() as usize {
                row[x + offset] = glyph;
            }
        }
    }
    let axis = canvas.blank_row();
    axis[label + 1] = glyphs.corner();
    for t in 0..states.len() {
        write_str(axis, left + t * cell, &format!("t{t}"));
    }
    Ok(canvas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcode::Interval;
    use crate::curve::BettiCurve;
    use crate::juggling::{figure_sequence, sigma, JugglingSequence, JugglingState};

    fn curve(values: &[u64]) -> BettiCurve {
        BettiCurve::new(values.to_vec())
    }

    #[test]
    fn full_bar_spans_all_three_columns() {
        let barcode = Barcode::from_triples([(1, 4, 1)]).unwrap();
        let canvas = render_barcode(&barcode, 3, GlyphSet::Unicode).unwrap();
        assert_eq!(canvas.to_string(), "━━━━━\n1 2 3");
    }

    #[test]
    fn empty_barcode_renders_axis_only() {
        let canvas = render_barcode(&Barcode::new(), 3, GlyphSet::Ascii).unwrap();
        assert_eq!(canvas.to_string(), "1 2 3");
    }

    #[test]
    fn unit_barcode_rows_sit_in_their_columns() {
        let barcode = Barcode::unit_of(&curve(&[2, 1]));
        let canvas = render_barcode(&barcode, 2, GlyphSet::Ascii).unwrap();
        assert_eq!(canvas.to_string(), "-  \n-  \n  -\n1 2");
    }

    #[test]
    fn out_of_range_bar_is_rejected() {
        let barcode = Barcode::from_triples([(2, 5, 1)]).unwrap();
        assert!(matches!(
            render_barcode(&barcode, 3, GlyphSet::Unicode),
            Err(Error::BarOutOfRange { .. })
        ));
    }

    #[test]
    fn rendering_is_injective_on_the_13_barcode_fiber() {
        let beta = curve(&[2, 3, 2]);
        let fiber = crate::fiber::enumerate_barcodes(&beta).unwrap();
        let mut renderings: Vec<String> = fiber
            .iter()
            .map(|b| render_barcode(b, 3, GlyphSet::Unicode).unwrap().to_string())
            .collect();
        renderings.sort();
        renderings.dedup();
        assert_eq!(renderings.len(), 13);
    }

    #[test]
    fn all_zero_sequence_renders_axis_only() {
        let seq = JugglingSequence::new(vec![JugglingState::zero(); 3]);
        let canvas = render_buckets(&seq, GlyphSet::Ascii).unwrap();
        assert_eq!(canvas.to_string(), "  + t0 t1 t2");
    }

    #[test]
    fn single_bar_sequence_occupancy() {
        let barcode = Barcode::from_triples([(1, 3, 1)]).unwrap();
        let seq = sigma(&barcode, 2).unwrap();
        let canvas = render_buckets(&seq, GlyphSet::Unicode).unwrap();
        // Column t0 holds one ordinary ball at height 1 and one magic
        // ball at height 3; later columns are empty.
        let expected = "3 │ ○       \n2 │         \n1 │ ●       \n  └ t0 t1 t2";
        assert_eq!(canvas.to_string(), expected);
    }

    #[test]
    fn figure_sequence_layout() {
        let canvas = render_buckets(&figure_sequence(), GlyphSet::Unicode).unwrap();
        let expected = [
            "4 │ ○          ",
            "3 │ ●  ○     ● ",
            "2 │ ○  ●● ○    ",
            "1 │ ●●    ●●   ",
            "  └ t0 t1 t2 t3",
        ]
        .join("\n");
        assert_eq!(canvas.to_string(), expected);
    }

    #[test]
    fn glyph_count_per_column_matches_state_mass() {
        let seq = figure_sequence();
        let canvas = render_buckets(&seq, GlyphSet::Unicode).unwrap();
        let rows: Vec<Vec<char>> = canvas.rows().map(|r| r.chars().collect()).collect();
        let cell = 3;
        let left = 4;
        for (t, state) in seq.states().iter().enumerate() {
            let mass: u64 = state.entries().iter().map(|e| e.unsigned_abs()).sum();
            let mut seen = 0u64;
            for row in &rows[..rows.len() - 1] {
                for offset in 0..cell {
                    let x = left + t * cell + offset;
                    if x < row.len() && (row[x] == '●' || row[x] == '○') {
                        seen += 1;
                    }
                }
            }
            assert_eq!(seen, mass, "column t{t}");
        }
    }

    #[test]
    fn invalid_sequence_is_rejected() {
        let seq = JugglingSequence::new(vec![
            JugglingState::new(vec![1]).unwrap(),
            JugglingState::zero(),
        ]);
        assert!(matches!(
            render_buckets(&seq, GlyphSet::Unicode),
            Err(Error::InvalidSequence(_))
        ));
    }

    #[test]
    fn sigma_composed_with_buckets_is_deterministic() {
        let barcode = Barcode::from_iter([
            (Interval::new(1, 4), 1),
            (Interval::new(2, 3), 2),
            (Interval::new(3, 4), 1),
        ]);
        let seq = sigma(&barcode, 3).unwrap();
        let first = render_buckets(&seq, GlyphSet::Unicode).unwrap().to_string();
        let second = render_buckets(&sigma(&barcode, 3).unwrap(), GlyphSet::Unicode)
            .unwrap()
            .to_string();
        assert_eq!(first, second);
        assert!(!first.is_empty());
    }
}
