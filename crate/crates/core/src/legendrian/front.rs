//! Rendering of the standard front diagrams, in ASCII and SVG.
//!
//! The picture is the twist-box template drawn on four horizontal rails:
//! crossings are the twist regions (every crossing's descending strand in
//! front, the slope rule for fronts), and the four closure tangencies are
//! the cusps. Words with an entry 1 are refused, since only the all >= 2
//! normal form is the tb-maximizing front.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{build_diagram, orient_with, LinkOrientation};
use crate::fraction::TwistWord;

#[derive(Debug, Error)]
pub enum FrontError {
    #[error("word ({0}) is not in normal form; every entry must be >= 2")]
    NotNormalForm(TwistWord),
    #[error("a front has an even number of cusps, found {0}")]
    OddCuspCount(usize),
}

/// Combinatorial content of a front: its cusp count and the signs of its
/// crossings under a chosen orientation.
#[derive(Clone, Debug)]
pub struct Front {
    pub word: TwistWord,
    pub cusps: usize,
    pub crossing_signs: Vec<i64>,
}

impl Front {
    pub fn from_word(word: &TwistWord) -> Result<Front, FrontError> {
        Front::from_word_with(word, LinkOrientation::default())
    }

    pub fn from_word_with(
        word: &TwistWord,
        orientation: LinkOrientation,
    ) -> Result<Front, FrontError> {
        if !word.is_legendrian_form() {
            return Err(FrontError::NotNormalForm(word.clone()));
        }
        let d = build_diagram(word);
        let od = orient_with(&d, orientation);
        Ok(Front {
            word: word.clone(),
            cusps: d.vertical_tangencies() as usize,
            crossing_signs: (0..d.crossing_count()).map(|c| od.crossing_sign(c)).collect(),
        })
    }
}

/// Thurston-Bennequin number read off the front: writhe minus half the
/// cusp count.
pub fn tb_from_front(front: &Front) -> Result<i64, FrontError> {
    if front.cusps % 2 != 0 {
        return Err(FrontError::OddCuspCount(front.cusps));
    }
    let w: i64 = front.crossing_signs.iter().sum();
    Ok(w - (front.cusps / 2) as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontStyle {
    Ascii,
    Svg,
}

/// Geometry knobs for the SVG rendering, gathered in one place.
#[derive(Clone, Debug)]
pub struct FrontLayout {
    /// Horizontal step per grid column.
    pub cell_width: f64,
    /// Vertical distance between adjacent rails.
    pub rail_gap: f64,
    pub margin: f64,
    pub stroke_width: f64,
    /// Half-length of the break in the under strand at a crossing.
    pub under_gap: f64,
}

impl Default for FrontLayout {
    fn default() -> Self {
        FrontLayout {
            cell_width: 26.0,
            rail_gap: 30.0,
            margin: 24.0,
            stroke_width: 2.0,
            under_gap: 4.5,
        }
    }
}

/// Column bookkeeping shared by both renderers. Columns 0 and the last one
/// hold cusps, boxes occupy one column per crossing with a spacer column
/// between boxes.
struct Grid {
    /// Crossing columns of each box, in word order.
    box_cols: Vec<Vec<usize>>,
    /// First column after the last box.
    east: usize,
    /// Total number of columns.
    width: usize,
    even_boxes: bool,
}

impl Grid {
    fn new(word: &TwistWord) -> Grid {
        let mut box_cols = Vec::new();
        let mut col = 2usize;
        for &a in word.entries() {
            box_cols.push((col..col + a as usize).collect());
            col += a as usize + 1;
        }
        let even_boxes = word.len() % 2 == 0;
        // Odd templates put east cusps in one extra column; even ones need
        // a column for the rail 2-3 cap and one for the big arc's descent.
        let width = if even_boxes { col + 2 } else { col + 1 };
        Grid {
            box_cols,
            east: col,
            width,
            even_boxes,
        }
    }

    /// Crossing columns on the gap between rails 2 and 3 (odd-numbered
    /// boxes) or rails 1 and 2 (even-numbered boxes).
    fn gap_cols(&self, upper_gap: bool) -> Vec<usize> {
        self.box_cols
            .iter()
            .enumerate()
            .filter(|(bi, _)| (bi % 2 == 0) == upper_gap)
            .flat_map(|(_, cols)| cols.iter().copied())
            .collect()
    }
}

pub fn render_front(word: &TwistWord, style: FrontStyle) -> Result<String, FrontError> {
    if !word.is_legendrian_form() {
        return Err(FrontError::NotNormalForm(word.clone()));
    }
    let grid = Grid::new(word);
    Ok(match style {
        FrontStyle::Ascii => render_ascii(&grid),
        FrontStyle::Svg => render_svg(&grid, &FrontLayout::default()),
    })
}

fn render_ascii(grid: &Grid) -> String {
    // Seven text rows: rails 4,3,2,1 and the three gaps between them.
    let mut rows = vec![vec![' '; grid.width]; 7];
    let (g34, g23, g12) = (1usize, 3usize, 5usize);
    let dash = |row: &mut Vec<char>, from: usize, to: usize| {
        for c in from..=to {
            row[c] = '-';
        }
    };
    for c in grid.gap_cols(true) {
        rows[g23][c] = '\\';
    }
    for c in grid.gap_cols(false) {
        rows[g12][c] = '\\';
    }
    if !grid.even_boxes {
        let e = grid.east;
        for r in [0, 2, 4, 6] {
            dash(&mut rows[r], 1, e - 1);
        }
        rows[g34][0] = '<';
        rows[g34][e] = '>';
        rows[g12][0] = '<';
        rows[g12][e] = '>';
    } else {
        let cap = grid.east;
        let descent = cap + 1;
        dash(&mut rows[0], 1, descent - 1);
        dash(&mut rows[6], 1, descent - 1);
        dash(&mut rows[2], 1, cap - 1);
        dash(&mut rows[4], 1, cap - 1);
        rows[0][descent] = '.';
        rows[6][descent] = '\'';
        for r in [g34, 2, g23, 4, g12] {
            rows[r][descent] = '|';
        }
        rows[g34][0] = '<';
        rows[g12][0] = '<';
        rows[g23][cap] = '>';
    }
    let mut out = String::new();
    for row in rows {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_svg(grid: &Grid, l: &FrontLayout) -> String {
    let x = |c: usize| l.margin + c as f64 * l.cell_width;
    // Rail r at height y(r), rail 4 on top.
    let y = |r: u8| l.margin + (4 - r) as f64 * l.rail_gap;
    let total_w = x(grid.width) + l.margin - l.cell_width;
    let total_h = 2.0 * l.margin + 3.0 * l.rail_gap;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total_w:.1}\" height=\"{total_h:.1}\" viewBox=\"0 0 {total_w:.1} {total_h:.1}\">"
    );
    let _ = writeln!(
        s,
        "<g fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"{:.1}\" stroke-linecap=\"round\">",
        l.stroke_width
    );
    let line = |x1: f64, y1: f64, x2: f64, y2: f64, out: &mut String| {
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>"
        );
    };

    // Rails, interrupted where a crossing replaces them.
    let upper_cols = grid.gap_cols(true);
    let lower_cols = grid.gap_cols(false);
    let blocked = |rail: u8, c: usize| match rail {
        3 | 2 if upper_cols.contains(&c) => true,
        2 | 1 if lower_cols.contains(&c) => true,
        _ => false,
    };
    let (cap, descent) = (grid.east, grid.east + 1);
    for rail in 1..=4u8 {
        let last = if grid.even_boxes {
            match rail {
                4 | 1 => descent - 1,
                _ => cap - 1,
            }
        } else {
            grid.east - 1
        };
        let mut run: Option<usize> = None;
        for c in 1..=last + 1 {
            if c <= last && !blocked(rail, c) {
                run.get_or_insert(c);
            } else if let Some(start) = run.take() {
                line(x(start), y(rail), x(c), y(rail), &mut s);
            }
        }
    }

    // Crossings: the descending strand unbroken, the ascending one gapped.
    for (upper_gap, cols) in [(true, &upper_cols), (false, &lower_cols)] {
        let (hi, lo) = if upper_gap { (3u8, 2u8) } else { (2, 1) };
        for &c in cols {
            let (x0, x1) = (x(c), x(c + 1));
            let (yh, yl) = (y(hi), y(lo));
            let _ = writeln!(s, "<g class=\"crossing\">");
            line(x0, yh, x1, yl, &mut s);
            // Unit direction along the ascending strand, to cut the gap out
            // of its middle.
            let len = ((x1 - x0).powi(2) + (yh - yl).powi(2)).sqrt();
            let (ux, uy) = ((x1 - x0) / len, (yh - yl) / len);
            let (mx, my) = ((x0 + x1) / 2.0, (yh + yl) / 2.0);
            line(x0, yl, mx - ux * l.under_gap, my - uy * l.under_gap, &mut s);
            line(mx + ux * l.under_gap, my + uy * l.under_gap, x1, yh, &mut s);
            let _ = writeln!(s, "</g>");
        }
    }

    // Cusps: quadratic turns with a horizontal approach.
    let cusp = |xe: f64, hi: u8, lo: u8, eastward: bool, out: &mut String| {
        let bulge = if eastward {
            xe + 0.9 * l.cell_width
        } else {
            xe - 0.9 * l.cell_width
        };
        let ym = (y(hi) + y(lo)) / 2.0;
        let _ = writeln!(
            out,
            "<path class=\"cusp\" d=\"M {xe:.1} {:.1} Q {bulge:.1} {ym:.1} {xe:.1} {:.1}\"/>",
            y(hi),
            y(lo)
        );
    };
    if !grid.even_boxes {
        cusp(x(1), 4, 3, false, &mut s);
        cusp(x(grid.east), 4, 3, true, &mut s);
        cusp(x(1), 2, 1, false, &mut s);
        cusp(x(grid.east), 2, 1, true, &mut s);
    } else {
        cusp(x(1), 4, 3, false, &mut s);
        cusp(x(1), 2, 1, false, &mut s);
        cusp(x(cap), 3, 2, true, &mut s);
        // The big arc's eastern turn: rail 4 around to rail 1.
        let (xd, r) = (x(descent), 0.5 * l.cell_width);
        let _ = writeln!(
            s,
            "<path class=\"cusp\" d=\"M {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1} L {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1}\"/>",
            xd, y(4), xd + r, y(4), xd + r, y(4) + r,
            xd + r, y(1) - r,
            xd + r, y(1), xd, y(1)
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::writhe;

    fn word(entries: &[i64]) -> TwistWord {
        TwistWord::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn tb_matches_writhe_minus_two() {
        for entries in [vec![3], vec![2, 2], vec![2, 2, 3], vec![3, 2, 2, 2]] {
            let w = word(&entries);
            let front = Front::from_word(&w).unwrap();
            let od = orient_with(&build_diagram(&w), LinkOrientation::default());
            assert_eq!(tb_from_front(&front).unwrap(), writhe(&od) - 2, "({w})");
        }
    }

    #[test]
    fn odd_cusp_count_is_rejected() {
        let mut front = Front::from_word(&word(&[3])).unwrap();
        front.cusps = 3;
        assert!(matches!(
            tb_from_front(&front),
            Err(FrontError::OddCuspCount(3))
        ));
    }

    #[test]
    fn normal_form_is_required() {
        for style in [FrontStyle::Ascii, FrontStyle::Svg] {
            assert!(matches!(
                render_front(&word(&[2, 1, 2]), style),
                Err(FrontError::NotNormalForm(_))
            ));
        }
        assert!(Front::from_word(&word(&[1, 2])).is_err());
    }

    #[test]
    fn ascii_golden_odd_boxes() {
        let expected = [
            r" -----------",
            r"<           >",
            r" -----------",
            r"  \\    \\\",
            r" -----------",
            r"<    \\     >",
            r" -----------",
        ]
        .join("\n")
            + "\n";
        assert_eq!(
            render_front(&word(&[2, 2, 3]), FrontStyle::Ascii).unwrap(),
            expected
        );
    }

    #[test]
    fn ascii_golden_even_boxes() {
        let expected = [
            r" --------.",
            r"<        |",
            r" ------- |",
            r"  \\    >|",
            r" ------- |",
            r"<    \\  |",
            r" --------'",
        ]
        .join("\n")
            + "\n";
        assert_eq!(
            render_front(&word(&[2, 2]), FrontStyle::Ascii).unwrap(),
            expected
        );
    }

    #[test]
    fn ascii_glyph_counts() {
        for entries in [vec![2], vec![3], vec![2, 2], vec![2, 2, 3], vec![2, 3, 2, 4]] {
            let w = word(&entries);
            let art = render_front(&w, FrontStyle::Ascii).unwrap();
            let crossings = art.matches('\\').count() as i64;
            let cusps = art.matches('<').count() + art.matches('>').count();
            assert_eq!(crossings, w.sum(), "({w})");
            // Even templates draw the fourth turn as the eastern descent.
            let drawn = if w.len() % 2 == 0 { 3 } else { 4 };
            assert_eq!(cusps, drawn, "({w})");
        }
    }

    #[test]
    fn svg_element_counts() {
        for entries in [vec![3], vec![2, 2], vec![2, 2, 3]] {
            let w = word(&entries);
            let svg = render_front(&w, FrontStyle::Svg).unwrap();
            assert!(svg.starts_with("<svg "));
            assert!(svg.ends_with("</svg>\n"));
            assert_eq!(
                svg.matches("class=\"crossing\"").count() as i64,
                w.sum(),
                "({w})"
            );
            assert_eq!(svg.matches("class=\"cusp\"").count(), 4, "({w})");
        }
    }
}
