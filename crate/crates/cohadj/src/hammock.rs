//! The hammock grid of a squiggle.
//!
//! Vertical lines bisect each undulation point, with one border line on each
//! side; the intersection with line `j` is labelled `+` when it lies above
//! the squiggle there, which happens exactly when the turning level is below
//! line `j`. Columns therefore read `+` above `-`, and the columns of an
//! atomic squiggle each contain exactly one sign change.

use crate::squiggle::{Sign, Squiggle};

/// Sign matrix with `dim + 1` rows (one per line) and `width + 1` columns
/// (one per undulation point plus the two borders).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammockGrid {
    rows: usize,
    cols: usize,
    cells: Vec<Vec<Sign>>,
}

impl HammockGrid {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell(&self, line: usize, col: usize) -> Sign {
        self.cells[line][col]
    }

    pub fn row(&self, line: usize) -> &[Sign] {
        &self.cells[line]
    }

    /// Rows as `+`/`-` characters separated by single spaces.
    pub fn render(&self) -> String {
        self.cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.symbol().to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Number of sign changes reading down a column.
    pub fn column_flips(&self, col: usize) -> usize {
        (1..self.rows)
            .filter(|&r| self.cells[r][col] != self.cells[r - 1][col])
            .count()
    }
}

/// Builds the grid: cell `(j, c)` is `+` iff the letter at column `c` sits
/// below line `j`. The leftmost column is constant at the codomain, the
/// rightmost at the domain.
pub fn hammock_grid(a: &Squiggle) -> HammockGrid {
    let rows = a.dim() + 1;
    let cols = a.width() + 1;
    let cells = (0..rows)
        .map(|j| {
            a.levels()
                .iter()
                .map(|&l| {
                    if l as usize > j {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect()
        })
        .collect();
    HammockGrid { rows, cols, cells }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    #[test]
    fn grid_of_the_hammock_example() {
        // a 3-arrow whose hammock is a full 4x8 sign grid
        let a = parse("3:(+,2,3,1,+,1,2,-)").unwrap();
        let g = hammock_grid(&a);
        assert_eq!((g.rows(), g.cols()), (4, 8));
        assert_eq!(g.render(), "+ + + + + + + -\n+ + + - + - + -\n+ - + - + - - -\n+ - - - + - - -");
    }

    #[test]
    fn identity_grid_is_one_cell() {
        let id = parse("0:(-)").unwrap();
        let g = hammock_grid(&id);
        assert_eq!((g.rows(), g.cols()), (1, 1));
        assert_eq!(g.cell(0, 0), Sign::Minus);
    }

    #[test]
    fn counit_grid() {
        let eps = parse("1:(-,1,-)").unwrap();
        let g = hammock_grid(&eps);
        assert_eq!((g.rows(), g.cols()), (2, 3));
        assert_eq!(g.render(), "- + -\n- - -");
    }

    #[test]
    fn columns_are_plus_above_minus() {
        let a = parse("3:(+,2,3,1,+,1,2,-)").unwrap();
        let g = hammock_grid(&a);
        for c in 0..g.cols() {
            let mut seen_minus = false;
            for r in 0..g.rows() {
                match g.cell(r, c) {
                    Sign::Minus => seen_minus = true,
                    Sign::Plus => assert!(!seen_minus, "column {c} not monotone"),
                }
            }
        }
    }

    #[test]
    fn atomic_interior_columns_flip_once() {
        let a = parse("4:(-,2,1,4,1,3,-)").unwrap();
        let g = hammock_grid(&a);
        for c in 1..g.cols() - 1 {
            assert_eq!(g.column_flips(c), 1);
        }
        // interior column count equals the number of undulation points
        assert_eq!(g.cols() - 2, a.width() - 1);
    }
}
