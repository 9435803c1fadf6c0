//! Strictly undulating squiggles: the arrows of the free coherent adjunction.
//!
//! An `n`-dimensional squiggle is a nonempty word over the alphabet
//! `{-, 1, ..., n, +}` whose endpoints are signs and whose letters strictly
//! alternate between rising and falling. Internally letters are stored as
//! *levels*: integers `0..=n+1` with `0 = -` and `n+1 = +`, so that the
//! simplicial action is a plain index map on levels.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Internal level value. Level `0` is `-`, level `dim + 1` is `+`, and the
/// levels `1..=dim` are the gaps between consecutive lines.
pub type Level = u8;

/// A letter of the squiggle alphabet at some ambient dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The codomain-side sign `-`, drawn as the top level.
    Minus,
    /// A gap letter `k` with `1 <= k <= dim`.
    Gap(usize),
    /// The domain-side sign `+`, drawn as the bottom level.
    Plus,
}

impl Letter {
    /// The internal level of this letter at ambient dimension `dim`.
    pub fn level(self, dim: usize) -> Level {
        match self {
            Letter::Minus => 0,
            Letter::Gap(k) => k as Level,
            Letter::Plus => (dim + 1) as Level,
        }
    }

    /// Recover a letter from an internal level at ambient dimension `dim`.
    pub fn from_level(level: Level, dim: usize) -> Letter {
        if level == 0 {
            Letter::Minus
        } else if level as usize == dim + 1 {
            Letter::Plus
        } else {
            Letter::Gap(level as usize)
        }
    }

    /// Whether the letter is `-` or `+`.
    pub fn is_sign(self) -> bool {
        matches!(self, Letter::Minus | Letter::Plus)
    }
}

/// One of the two objects of the free adjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn letter(self) -> Letter {
        match self {
            Sign::Minus => Letter::Minus,
            Sign::Plus => Letter::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Diagnosis for a word that fails to be a strictly undulating squiggle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word is empty")]
    EmptyWord,
    #[error("endpoint at index {index} is not a sign")]
    EndpointNotSign { index: usize },
    #[error("gap letter {gap} at index {index} is out of range 1..={dim}")]
    GapOutOfRange { index: usize, gap: usize, dim: usize },
    #[error("undulation fails between indices {index} and {}", index + 1)]
    UndulationViolation { index: usize },
}

/// Failure modes of squiggle composition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("not composable: codomain of the right factor differs from domain of the left")]
    NotComposable,
}

/// An `n`-arrow of the free coherent adjunction, in the strict form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Squiggle {
    dim: usize,
    word: Vec<Level>,
}

/// A word satisfying only the weak undulation condition; the intermediate
/// state produced by applying an interval operator before reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndulatingWord {
    dim: usize,
    word: Vec<Level>,
}

/// Checks conditions (i) and (ii), strict (`strict = true`) or weak.
fn check_word(dim: usize, word: &[Level], strict: bool) -> Result<(), WordError> {
    if word.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let top = (dim + 1) as Level;
    let last = word.len() - 1;
    for (i, &l) in word.iter().enumerate() {
        if l > top {
            return Err(WordError::GapOutOfRange {
                index: i,
                gap: l as usize,
                dim,
            });
        }
        if (i == 0 || i == last) && l != 0 && l != top {
            return Err(WordError::EndpointNotSign { index: i });
        }
    }
    // Condition (ii): with a₀ = - the word rises at even positions and falls
    // at odd ones; mirrored when a₀ = +.
    let starts_minus = word[0] == 0;
    for i in 0..last {
        let rising = (i % 2 == 0) == starts_minus;
        let ok = if strict {
            if rising {
                word[i] < word[i + 1]
            } else {
                word[i] > word[i + 1]
            }
        } else if rising {
            word[i] <= word[i + 1]
        } else {
            word[i] >= word[i + 1]
        };
        if !ok {
            return Err(WordError::UndulationViolation { index: i });
        }
    }
    Ok(())
}

impl Squiggle {
    /// Validates condition (i) (sign endpoints) and condition (ii) (strict
    /// undulation) and returns the squiggle, or the first violated index.
    pub fn new(dim: usize, letters: &[Letter]) -> Result<Squiggle, WordError> {
        for (i, l) in letters.iter().enumerate() {
            if let Letter::Gap(k) = l {
                if *k < 1 || *k > dim {
                    return Err(WordError::GapOutOfRange {
                        index: i,
                        gap: *k,
                        dim,
                    });
                }
            }
        }
        let word: Vec<Level> = letters.iter().map(|l| l.level(dim)).collect();
        Squiggle::from_levels(dim, word)
    }

    /// Validates a word given directly in the internal level encoding.
    pub fn from_levels(dim: usize, word: Vec<Level>) -> Result<Squiggle, WordError> {
        check_word(dim, &word, true)?;
        Ok(Squiggle { dim, word })
    }

    /// The identity arrow at an object, the width-0 word `(-)` or `(+)`.
    pub fn identity(sign: Sign, dim: usize) -> Squiggle {
        let level = match sign {
            Sign::Minus => 0,
            Sign::Plus => (dim + 1) as Level,
        };
        Squiggle {
            dim,
            word: vec![level],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Width: the number of letters minus one.
    pub fn width(&self) -> usize {
        self.word.len() - 1
    }

    pub fn levels(&self) -> &[Level] {
        &self.word
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.word
            .iter()
            .map(|&l| Letter::from_level(l, self.dim))
            .collect()
    }

    /// Codomain: the first letter, always a sign.
    pub fn cod(&self) -> Sign {
        if self.word[0] == 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Domain: the last letter, always a sign.
    pub fn dom(&self) -> Sign {
        if *self.word.last().unwrap() == 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.len() == 1
    }

    /// An arrow is atomic when it is not an identity and no sign occurs in
    /// its interior, so it admits no nontrivial factorisation.
    pub fn is_atomic(&self) -> bool {
        if self.is_identity() {
            return false;
        }
        let top = (self.dim + 1) as Level;
        self.word[1..self.word.len() - 1]
            .iter()
            .all(|&l| l != 0 && l != top)
    }

    /// The arrow lies in the image of the degeneracy `σ^i` exactly when the
    /// gap letter `i + 1` is absent from its word.
    pub fn is_degenerate_at(&self, i: usize) -> Result<bool, IndexOutOfRange> {
        if self.dim == 0 || i >= self.dim {
            return Err(IndexOutOfRange {
                index: i,
                bound: self.dim,
            });
        }
        let gap = (i + 1) as Level;
        Ok(!self.word.contains(&gap))
    }

    /// Degenerate at some index (false in particular for every 0-arrow).
    pub fn is_degenerate(&self) -> bool {
        (0..self.dim).any(|i| self.is_degenerate_at(i).unwrap())
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.is_degenerate()
    }

    /// Composition `self ∘ other`: drop the last letter of `self` and
    /// concatenate with `other`. Associative, with the identities neutral.
    pub fn compose(&self, other: &Squiggle) -> Result<Squiggle, ComposeError> {
        if self.dim != other.dim {
            return Err(ComposeError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if *self.word.last().unwrap() != other.word[0] {
            return Err(ComposeError::NotComposable);
        }
        let mut word = self.word[..self.word.len() - 1].to_vec();
        word.extend_from_slice(&other.word);
        Ok(Squiggle {
            dim: self.dim,
            word,
        })
    }

    /// Whiskering with a degenerated copy of `f` or `u`: a single prepended
    /// or appended sign.
    pub fn whisker(&self, side: Side, gen: Generator) -> Result<Squiggle, ComposeError> {
        let top = (self.dim + 1) as Level;
        // f prepends - (needs cod +), u prepends + (needs cod -);
        // f appends + (needs dom -), u appends - (needs dom +).
        let mut word = self.word.clone();
        match side {
            Side::Left => {
                let (need, put) = match gen {
                    Generator::F => (Sign::Plus, 0),
                    Generator::U => (Sign::Minus, top),
                };
                if self.cod() != need {
                    return Err(ComposeError::NotComposable);
                }
                word.insert(0, put);
            }
            Side::Right => {
                let (need, put) = match gen {
                    Generator::F => (Sign::Minus, top),
                    Generator::U => (Sign::Plus, 0),
                };
                if self.dom() != need {
                    return Err(ComposeError::NotComposable);
                }
                word.push(put);
            }
        }
        Ok(Squiggle {
            dim: self.dim,
            word,
        })
    }
}

/// Whiskering side: `Left` for `f·a`/`u·a`, `Right` for `a·f`/`a·u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The two atomic 0-arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    F,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("index {index} out of range for dimension {bound}")]
pub struct IndexOutOfRange {
    pub index: usize,
    pub bound: usize,
}

impl UndulatingWord {
    /// Validates the sign-endpoint condition and the weak undulation (ii)'.
    pub fn new(dim: usize, word: Vec<Level>) -> Result<UndulatingWord, WordError> {
        check_word(dim, &word, false)?;
        Ok(UndulatingWord { dim, word })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> &[Level] {
        &self.word
    }

    pub fn width(&self) -> usize {
        self.word.len() - 1
    }

    pub fn from_squiggle(s: &Squiggle) -> UndulatingWord {
        UndulatingWord {
            dim: s.dim,
            word: s.word.clone(),
        }
    }
}

impl fmt::Debug for Squiggle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Squiggle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render(self))
    }
}
