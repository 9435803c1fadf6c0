//! Simplicial operators and their right action on squiggles.
//!
//! Operators are stored as explicit value vectors. The action routes through
//! the interval representation `ir`, which sends `α: [m] → [n]` to the
//! top-and-bottom-preserving map `[n+1] → [m+1]` given by
//! `ir(α)(j) = #{ i : α(i) < j }`; applying it entrywise to the level-encoded
//! word and reducing yields the acted squiggle.

use std::fmt;

use thiserror::Error;

use crate::squiggle::{IndexOutOfRange, Level, Sign, Squiggle, UndulatingWord};

/// A weakly monotone map `[m] → [n]` in the simplex category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialOperator {
    src: usize,
    tgt: usize,
    values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("index {index} out of range for the requested generator at n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operator values must be weakly monotone and within range")]
    Malformed,
    #[error("operators not composable: {left_src} vs {right_tgt}")]
    NotComposable { left_src: usize, right_tgt: usize },
}

impl SimplicialOperator {
    pub fn new(src: usize, tgt: usize, values: Vec<usize>) -> Result<Self, OperatorError> {
        if values.len() != src + 1 {
            return Err(OperatorError::Malformed);
        }
        if values.iter().any(|&v| v > tgt) {
            return Err(OperatorError::Malformed);
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(OperatorError::Malformed);
        }
        Ok(SimplicialOperator { src, tgt, values })
    }

    pub fn identity(n: usize) -> Self {
        SimplicialOperator {
            src: n,
            tgt: n,
            values: (0..=n).collect(),
        }
    }

    /// The elementary face `δ^i: [n-1] → [n]`, skipping `i`.
    pub fn face(n: usize, i: usize) -> Result<Self, OperatorError> {
        if n == 0 || i > n {
            return Err(OperatorError::IndexOutOfRange { index: i, n });
        }
        let values = (0..=n).filter(|&v| v != i).collect();
        Ok(SimplicialOperator {
            src: n - 1,
            tgt: n,
            values,
        })
    }

    /// The elementary degeneracy `σ^i: [n+1] → [n]`, repeating `i`.
    pub fn degeneracy(n: usize, i: usize) -> Result<Self, OperatorError> {
        if i > n {
            return Err(OperatorError::IndexOutOfRange { index: i, n });
        }
        let mut values: Vec<usize> = (0..=i).collect();
        values.extend(i..=n);
        Ok(SimplicialOperator {
            src: n + 1,
            tgt: n,
            values,
        })
    }

    /// The vertex-selecting operator `⟨j⟩ : [0] → [n]`, or more generally the
    /// injective operator with the given image.
    pub fn select(tgt: usize, image: &[usize]) -> Result<Self, OperatorError> {
        SimplicialOperator::new(image.len() - 1, tgt, image.to_vec())
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        let mut next = 0usize;
        for &v in &self.values {
            if v == next {
                next += 1;
            }
        }
        next == self.tgt + 1
    }

    /// Composition as functions: `self ∘ other`.
    pub fn compose(&self, other: &SimplicialOperator) -> Result<Self, OperatorError> {
        if self.src != other.tgt {
            return Err(OperatorError::NotComposable {
                left_src: self.src,
                right_tgt: other.tgt,
            });
        }
        let values = other.values.iter().map(|&v| self.values[v]).collect();
        Ok(SimplicialOperator {
            src: other.src,
            tgt: self.tgt,
            values,
        })
    }

    /// The Eilenberg–Zilber factorisation `α = δ ∘ σ` with `σ` surjective
    /// and `δ` injective; the unique epi-mono splitting.
    pub fn ez_factorize(&self) -> (SimplicialOperator, SimplicialOperator) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let sigma_values = self
            .values
            .iter()
            .map(|v| image.binary_search(v).unwrap())
            .collect();
        let k = image.len() - 1;
        let sigma = SimplicialOperator {
            src: self.src,
            tgt: k,
            values: sigma_values,
        };
        let delta = SimplicialOperator {
            src: k,
            tgt: self.tgt,
            values: image,
        };
        (sigma, delta)
    }

    /// The interval representation `ir(α): [n+1] → [m+1]`.
    pub fn interval_rep(&self) -> IntervalOperator {
        let values = (0..=self.tgt + 1)
            .map(|j| self.values.iter().filter(|&&v| v < j).count())
            .collect();
        IntervalOperator(SimplicialOperator {
            src: self.tgt + 1,
            tgt: self.src + 1,
            values,
        })
    }

    /// Text form `[m->n: v0 v1 … vm]`.
    pub fn render(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}->{}: {}]", self.src, self.tgt, vals.join(" "))
    }

    pub fn parse(text: &str) -> Result<Self, OperatorError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(OperatorError::Malformed)?;
        let (arrow, vals) = inner.split_once(':').ok_or(OperatorError::Malformed)?;
        let (src, tgt) = arrow.split_once("->").ok_or(OperatorError::Malformed)?;
        let src: usize = src.trim().parse().map_err(|_| OperatorError::Malformed)?;
        let tgt: usize = tgt.trim().parse().map_err(|_| OperatorError::Malformed)?;
        let values: Vec<usize> = vals
            .split_whitespace()
            .map(|v| v.parse().map_err(|_| OperatorError::Malformed))
            .collect::<Result<_, _>>()?;
        SimplicialOperator::new(src, tgt, values)
    }
}

impl fmt::Debug for SimplicialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A top-and-bottom-preserving operator, the image of the interval
/// representation: `values[0] = 0` and `values[src] = tgt`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalOperator(SimplicialOperator);

impl IntervalOperator {
    pub fn new(op: SimplicialOperator) -> Result<Self, OperatorError> {
        if op.values[0] != 0 || *op.values.last().unwrap() != op.tgt {
            return Err(OperatorError::Malformed);
        }
        Ok(IntervalOperator(op))
    }

    pub fn as_operator(&self) -> &SimplicialOperator {
        &self.0
    }

    pub fn apply_level(&self, l: Level) -> Level {
        self.0.values[l as usize] as Level
    }
}

/// Deletes adjacent equal letters, leftmost pair first, until none remain.
/// The result is independent of the deletion order; emptiness can only occur
/// for words that denote no squiggle, such as `(-,-)`.
pub fn reduce_levels(mut word: Vec<Level>) -> Vec<Level> {
    loop {
        let mut deleted = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] == word[i + 1] {
                word.drain(i..=i + 1);
                deleted = true;
                break;
            }
            i += 1;
        }
        if !deleted {
            return word;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActError {
    #[error("dimension mismatch: squiggle has dimension {dim}, operator targets {tgt}")]
    DimensionMismatch { dim: usize, tgt: usize },
    #[error("the word collapsed to the empty string under reduction")]
    CollapsedToEmpty,
}

/// Reduces a weakly undulating word to the strictly undulating squiggle it
/// denotes. The two words `(-,-)` and `(+,+)` denote no squiggle and are
/// reported; they cannot arise from a simplicial action.
pub fn reduce(word: &UndulatingWord) -> Result<Squiggle, ActError> {
    let reduced = reduce_levels(word.levels().to_vec());
    if reduced.is_empty() {
        return Err(ActError::CollapsedToEmpty);
    }
    Ok(Squiggle::from_levels(word.dim(), reduced)
        .expect("reduction of an undulating word is strictly undulating"))
}

/// The right action `a · α`: apply `ir(α)` entrywise, then reduce.
pub fn act(a: &Squiggle, alpha: &SimplicialOperator) -> Result<Squiggle, ActError> {
    if a.dim() != alpha.tgt() {
        return Err(ActError::DimensionMismatch {
            dim: a.dim(),
            tgt: alpha.tgt(),
        });
    }
    let ir = alpha.interval_rep();
    let word: Vec<Level> = a.levels().iter().map(|&l| ir.apply_level(l)).collect();
    let reduced = reduce_levels(word);
    debug_assert!(!reduced.is_empty());
    if reduced.is_empty() {
        return Err(ActError::CollapsedToEmpty);
    }
    Ok(Squiggle::from_levels(alpha.src(), reduced)
        .expect("simplicial action yields a strictly undulating word"))
}

/// Shorthand for the elementary face action `a · δ^i`.
pub fn face(a: &Squiggle, i: usize) -> Result<Squiggle, OperatorError> {
    let d = SimplicialOperator::face(a.dim(), i)?;
    Ok(act(a, &d).expect("dimensions match by construction"))
}

/// Shorthand for the elementary degeneracy action `a · σ^i`.
pub fn degenerate(a: &Squiggle, i: usize) -> Result<Squiggle, OperatorError> {
    let s = SimplicialOperator::degeneracy(a.dim(), i)?;
    Ok(act(a, &s).expect("dimensions match by construction"))
}

/// The `j`-th vertex `a · ⟨j⟩`, a 0-arrow.
pub fn vertex(a: &Squiggle, j: usize) -> Result<Squiggle, IndexOutOfRange> {
    if j > a.dim() {
        return Err(IndexOutOfRange {
            index: j,
            bound: a.dim(),
        });
    }
    let op = SimplicialOperator::select(a.dim(), &[j]).unwrap();
    Ok(act(a, &op).expect("vertex action is total"))
}

/// Counts the adjacent letter pairs straddling line `j`: one letter at level
/// `<= j`, the other at level `>= j + 1`. Equals the width of the `j`-th
/// vertex.
pub fn crossing_count(a: &Squiggle, j: usize) -> Result<usize, IndexOutOfRange> {
    if j > a.dim() {
        return Err(IndexOutOfRange {
            index: j,
            bound: a.dim(),
        });
    }
    let line = j as Level;
    Ok(a.levels()
        .windows(2)
        .filter(|w| {
            let (lo, hi) = (w[0].min(w[1]), w[0].max(w[1]));
            lo <= line && hi > line
        })
        .count())
}

/// Degenerates a 0-arrow up to dimension `dim` (the word is unchanged).
pub fn degenerate_to(a: &Squiggle, dim: usize) -> Squiggle {
    assert_eq!(a.dim(), 0, "only 0-arrows are degenerated wholesale");
    let top = (dim + 1) as Level;
    let word: Vec<Level> = a.levels().iter().map(|&l| if l == 0 { 0 } else { top }).collect();
    Squiggle::from_levels(dim, word).unwrap()
}

/// The identity squiggle viewed at a given sign, used by callers that need
/// explicit identities during decomposition.
pub fn identity(sign: Sign, dim: usize) -> Squiggle {
    Squiggle::identity(sign, dim)
}
