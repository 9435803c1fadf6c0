//! Canonical text form and ASCII pictures for squiggles.
//!
//! The grammar is `dim ":" "(" letter ("," letter)* ")"` with letters `-`,
//! `+`, or a decimal gap number. Whitespace is ignored everywhere, and
//! `render ∘ parse` is the identity on canonical text.

use std::fmt::Write as _;

use thiserror::Error;

use crate::squiggle::{Letter, Squiggle, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at position {0}")]
    At(usize),
    #[error("invalid word: {0}")]
    Word(#[from] WordError),
}

/// Renders the canonical text form, e.g. `4:(-,2,1,4,1,3,-)`.
pub fn render(s: &Squiggle) -> String {
    let mut out = format!("{}:(", s.dim());
    for (i, l) in s.letters().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        match l {
            Letter::Minus => out.push('-'),
            Letter::Plus => out.push('+'),
            Letter::Gap(k) => {
                let _ = write!(out, "{k}");
            }
        }
    }
    out.push(')');
    out
}

/// Parses the canonical grammar, whitespace-insensitive. The typographic
/// minus sign is accepted as an alias for the ASCII one.
pub fn parse(text: &str) -> Result<Squiggle, SyntaxError> {
    let stripped: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
        .collect();
    let mut pos = 0usize;
    let err_at = |pos: usize, stripped: &[(usize, char)]| {
        let byte = stripped
            .get(pos)
            .map(|(b, _)| *b)
            .unwrap_or_else(|| text.len());
        SyntaxError::At(byte)
    };

    let read_number = |pos: &mut usize| -> Option<usize> {
        let start = *pos;
        while *pos < stripped.len() && stripped[*pos].1.is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        let digits: String = stripped[start..*pos].iter().map(|(_, c)| *c).collect();
        digits.parse().ok()
    };

    let dim = read_number(&mut pos).ok_or_else(|| err_at(pos, &stripped))?;
    if stripped.get(pos).map(|p| p.1) != Some(':') {
        return Err(err_at(pos, &stripped));
    }
    pos += 1;
    if stripped.get(pos).map(|p| p.1) != Some('(') {
        return Err(err_at(pos, &stripped));
    }
    pos += 1;

    let mut letters = Vec::new();
    loop {
        match stripped.get(pos).map(|p| p.1) {
            Some('-') => {
                letters.push(Letter::Minus);
                pos += 1;
            }
            Some('+') => {
                letters.push(Letter::Plus);
                pos += 1;
            }
            Some(c) if c.is_ascii_digit() => {
                let k = read_number(&mut pos).ok_or_else(|| err_at(pos, &stripped))?;
                letters.push(Letter::Gap(k));
            }
            _ => return Err(err_at(pos, &stripped)),
        }
        match stripped.get(pos).map(|p| p.1) {
            Some(',') => pos += 1,
            Some(')') => {
                pos += 1;
                break;
            }
            _ => return Err(err_at(pos, &stripped)),
        }
    }
    if pos != stripped.len() {
        return Err(err_at(pos, &stripped));
    }
    Ok(Squiggle::new(dim, &letters)?)
}

/// Draws the squiggle as ASCII art: `dim + 1` dotted lines, `dim + 2`
/// levels, one column per letter with slanted connectors in between.
/// Cosmetic only; the canonical text form is the stable interface.
pub fn ascii_picture(s: &Squiggle) -> String {
    let n = s.dim();
    let word = s.levels();
    let rows = 2 * n + 3; // interleaved level rows (even) and line rows (odd)
    let cols = 2 * word.len() - 1; // letter columns (even) and connectors (odd)
    let mut grid = vec![vec![' '; cols]; rows];

    // Dotted lines.
    for j in 0..=n {
        let r = 2 * j + 1;
        for c in 0..cols {
            grid[r][c] = '.';
        }
    }

    // Letters at their level rows.
    for (i, &l) in word.iter().enumerate() {
        let r = 2 * l as usize;
        let c = 2 * i;
        grid[r][c] = match Letter::from_level(l, n) {
            Letter::Minus => '-',
            Letter::Plus => '+',
            Letter::Gap(k) => char::from_digit((k % 10) as u32, 10).unwrap(),
        };
    }

    // Connectors between consecutive letters.
    for i in 0..word.len() - 1 {
        let (a, b) = (2 * word[i] as usize, 2 * word[i + 1] as usize);
        let c = 2 * i + 1;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let glyph = if b < a { '/' } else { '\\' };
        for r in lo + 1..hi {
            grid[r][c] = glyph;
        }
        if lo + 1 == hi {
            // adjacent rows: mark the crossing on the higher row boundary
            grid[lo][c] = if glyph == '/' { '/' } else { '\\' };
        }
    }

    let mut out = String::new();
    for (r, row) in grid.iter().enumerate() {
        let label = if r % 2 == 0 {
            let level = r / 2;
            if level == 0 {
                " - ".to_string()
            } else if level == n + 1 {
                " + ".to_string()
            } else {
                format!("{level:^3}")
            }
        } else {
            "   ".to_string()
        };
        let right = if r % 2 == 1 {
            format!(" {}", r / 2)
        } else {
            String::new()
        };
        let line: String = row.iter().collect();
        let _ = writeln!(out, "{label}{}{right}", line.trim_end());
    }
    out
}
