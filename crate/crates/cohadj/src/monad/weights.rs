//! The weights for the formal theory of monads, their collages, and
//! relative-computad certificates of projective cofibrancy.
//!
//! A weight on the one-object monad category is a simplicial set with a
//! left action of the monad hom; here both weights of interest are realised
//! inside the squiggle calculus. The collage adjoins one object `*` with
//! `hom(*, +)` the weight; an arrow factors uniquely by splitting at the
//! interior occurrences of `+`, the only level at which the collage can
//! factor, so cofibrancy is decided by inspecting those splittings.

use serde::Serialize;
use thiserror::Error;

use crate::computad::{enumerate_hom, for_each_hom, strip_degeneracies, Truncation};
use crate::ops::{degenerate, face};
use crate::squiggle::{Level, Sign, Squiggle};

/// The two weights of the formal theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WeightKind {
    /// The represented weight: the monad hom acting on itself by join.
    WPlus,
    /// The weight for algebras: the top-preserving hom with the join action.
    WMinus,
}

/// A weight given by truncated cell data: the atomic nondegenerate arrows
/// of its collage, graded by dimension, with the action realised by
/// squiggle composition.
#[derive(Debug, Clone)]
pub struct WeightPresentation {
    pub kind: Option<WeightKind>,
    pub name: String,
    pub trunc: Truncation,
    /// Cells by dimension.
    pub cells: Vec<Vec<Squiggle>>,
}

/// Endpoints of the underlying hom `hom(*, +)` inside the two-object
/// calculus: the monad hom for the represented weight, the top-preserving
/// hom for the algebra weight.
pub fn underlying_hom(kind: WeightKind) -> (Sign, Sign) {
    match kind {
        WeightKind::WPlus => (Sign::Plus, Sign::Plus),
        WeightKind::WMinus => (Sign::Minus, Sign::Plus),
    }
}

fn has_interior_plus(a: &Squiggle) -> bool {
    if a.levels().len() < 3 {
        return false;
    }
    let top = (a.dim() + 1) as Level;
    a.levels()[1..a.levels().len() - 1].contains(&top)
}

/// Atomicity in the collage: for the algebra weight these are the arrows
/// with no interior `+`; for the represented weight only the identity
/// squiggle is atomic, every other element factoring through it.
pub fn is_collage_atomic(kind: WeightKind, a: &Squiggle) -> bool {
    match kind {
        WeightKind::WMinus => !has_interior_plus(a),
        WeightKind::WPlus => a.levels().iter().all(|&l| l as usize == a.dim() + 1),
    }
}

/// Builds the weight presentation: cells are the nondegenerate atomic
/// arrows of the collage within the truncation.
pub fn build_weight(kind: WeightKind, trunc: Truncation) -> WeightPresentation {
    let (dom, cod) = underlying_hom(kind);
    let mut cells = Vec::with_capacity(trunc.max_dim + 1);
    for dim in 0..=trunc.max_dim {
        let mut layer = Vec::new();
        for_each_hom(dom, cod, dim, trunc.max_width, |a| {
            if a.is_nondegenerate() && is_collage_atomic(kind, a) {
                layer.push(a.clone());
            }
        });
        layer.sort_by(|a, b| (a.width(), a.levels()).cmp(&(b.width(), b.levels())));
        cells.push(layer);
    }
    WeightPresentation {
        kind: Some(kind),
        name: match kind {
            WeightKind::WPlus => "Wplus".into(),
            WeightKind::WMinus => "Wminus".into(),
        },
        trunc,
        cells,
    }
}

/// A weight given by an explicit cell list, used for negative controls and
/// replayed certificates. Cells must share the endpoints of the stated hom.
pub fn custom_weight(
    name: &str,
    hom: (Sign, Sign),
    cells: Vec<Squiggle>,
    trunc: Truncation,
) -> WeightPresentation {
    let mut graded = vec![Vec::new(); trunc.max_dim + 1];
    for c in cells {
        assert_eq!((c.dom(), c.cod()), hom, "cells must live in the stated hom");
        graded[c.dim()].push(c);
    }
    for layer in &mut graded {
        layer.sort_by(|a, b| (a.width(), a.levels()).cmp(&(b.width(), b.levels())));
    }
    WeightPresentation {
        kind: None,
        name: name.into(),
        trunc,
        cells: graded,
    }
}

impl WeightPresentation {
    pub fn contains_cell(&self, a: &Squiggle) -> bool {
        self.cells
            .get(a.dim())
            .map(|layer| layer.contains(a))
            .unwrap_or(false)
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

/// One factorised arrow of a collage hom `hom(*, +)`: the monad-side
/// factors, then the weight-side factor with its degeneracy stripped.
#[derive(Debug, Clone)]
pub struct CollageFactorisation {
    /// Factors in the monad hom, outermost first.
    pub mnd_factors: Vec<Squiggle>,
    /// The nondegenerate core of the weight-side factor.
    pub cell_core: Squiggle,
    /// The degeneracy restoring the weight-side factor from its core.
    pub cell_degeneracy: crate::ops::SimplicialOperator,
}

/// Splits a collage arrow at its interior `+` letters. For the represented
/// weight the weight-side factor is the degenerate identity squiggle.
pub fn collage_factorize(kind: WeightKind, w: &Squiggle) -> CollageFactorisation {
    let top = (w.dim() + 1) as Level;
    let word = w.levels();
    let mut pieces: Vec<Squiggle> = Vec::new();
    let mut start = 0usize;
    for i in 1..word.len() {
        if (word[i] == top && i + 1 < word.len()) || i + 1 == word.len() {
            pieces.push(Squiggle::from_levels(w.dim(), word[start..=i].to_vec()).unwrap());
            start = i;
        }
    }
    match kind {
        WeightKind::WMinus => {
            let cell_part = pieces.pop().expect("nonempty arrow");
            let (core, sigma) = strip_degeneracies(&cell_part);
            CollageFactorisation {
                mnd_factors: pieces,
                cell_core: core,
                cell_degeneracy: sigma,
            }
        }
        WeightKind::WPlus => {
            // every element factors through the identity squiggle
            let id = Squiggle::identity(Sign::Plus, w.dim());
            let (core, sigma) = strip_degeneracies(&id);
            let mnd_factors = if w.is_identity() { Vec::new() } else { pieces };
            CollageFactorisation {
                mnd_factors,
                cell_core: core,
                cell_degeneracy: sigma,
            }
        }
    }
}

/// The collage as a membership view: the monad hom plus `hom(*, +)`, with
/// composition the join action. For built-in weights every arrow of the
/// underlying hom is a member; for custom cell data, membership asks that
/// the weight-side core be one of the given cells.
#[derive(Debug, Clone)]
pub struct Collage {
    pub weight: WeightPresentation,
}

impl Collage {
    pub fn new(weight: WeightPresentation) -> Collage {
        Collage { weight }
    }

    pub fn hom_star_contains(&self, a: &Squiggle) -> bool {
        match self.weight.kind {
            Some(kind) => {
                let (dom, cod) = underlying_hom(kind);
                (a.dom(), a.cod()) == (dom, cod)
            }
            None => {
                if a.cod() != Sign::Plus {
                    return false;
                }
                let f = collage_factorize(WeightKind::WMinus, a);
                self.weight.contains_cell(&f.cell_core)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cofibrancy violation: {witness}")]
pub struct WeightViolation {
    pub witness: String,
}

/// The inclusions the recognition principle is run against.
#[derive(Debug, Clone)]
pub enum Inclusion {
    /// The monad category into the collage of a weight.
    MndIntoCollage(WeightPresentation),
    /// The represented weight into the algebra weight, by whiskering.
    WPlusIntoWMinus,
}

/// A verified projective cell structure: the dimension-graded atomic
/// generators, with every boundary decomposed through earlier cells.
#[derive(Debug, Clone, Serialize)]
pub struct CofibrancyCertificate {
    pub inclusion: String,
    pub max_dim: usize,
    pub max_width: usize,
    /// (dimension, rendered cells)
    pub cells: Vec<(usize, Vec<String>)>,
    pub arrows_checked: usize,
    /// Present only for the whiskering inclusion.
    pub vertex_surjective: Option<bool>,
}

/// Verifies the relative-computad conditions for the inclusion within the
/// truncation and emits the projective cell list.
pub fn relative_computad_check(
    inclusion: &Inclusion,
    trunc: Truncation,
) -> Result<CofibrancyCertificate, WeightViolation> {
    match inclusion {
        Inclusion::MndIntoCollage(weight) => check_mnd_into_collage(weight, trunc),
        Inclusion::WPlusIntoWMinus => check_whiskering_inclusion(trunc),
    }
}

fn check_mnd_into_collage(
    weight: &WeightPresentation,
    trunc: Truncation,
) -> Result<CofibrancyCertificate, WeightViolation> {
    let kind = weight.kind.unwrap_or(WeightKind::WMinus);
    let (dom, cod) = underlying_hom(kind);
    let collage = Collage::new(weight.clone());
    let mut checked = 0usize;

    // Unique factorisation and closure for every member arrow in bounds.
    for dim in 0..=trunc.max_dim {
        for_each_hom(dom, cod, dim, trunc.max_width, |w| {
            if !collage.hom_star_contains(w) {
                return;
            }
            checked += 1;
            let f = collage_factorize(kind, w);
            for m in &f.mnd_factors {
                debug_assert!(!has_interior_plus(m));
            }
            // recomposition
            let mut acc: Option<Squiggle> = None;
            let cell_part = crate::ops::act(&f.cell_core, &f.cell_degeneracy).unwrap();
            for m in f.mnd_factors.iter().chain(std::iter::once(&cell_part)) {
                acc = Some(match acc {
                    None => m.clone(),
                    Some(prev) => prev.compose(m).expect("factors compose"),
                });
            }
            debug_assert_eq!(acc.as_ref(), Some(w));
        });
    }

    // Boundary closure: each face of each cell factors through earlier
    // cells; this is where a broken custom weight fails.
    for layer in &weight.cells {
        for c in layer {
            if c.dim() == 0 {
                continue;
            }
            for i in 0..=c.dim() {
                let fi = face(c, i).unwrap();
                let f = collage_factorize(kind, &fi);
                if !weight.contains_cell(&f.cell_core) {
                    return Err(WeightViolation {
                        witness: format!(
                            "face {} of cell {} needs the missing cell {}",
                            i,
                            crate::text::render(c),
                            crate::text::render(&f.cell_core)
                        ),
                    });
                }
            }
        }
    }

    // Degeneracies of cells stay atomic (the second computad axiom).
    for layer in &weight.cells {
        for c in layer {
            for i in 0..=c.dim() {
                let d = degenerate(c, i).unwrap();
                if !is_collage_atomic(kind, &d) && weight.kind.is_some() {
                    return Err(WeightViolation {
                        witness: format!(
                            "degeneracy σ^{i} of cell {} is not atomic",
                            crate::text::render(c)
                        ),
                    });
                }
            }
        }
    }

    Ok(CofibrancyCertificate {
        inclusion: format!("Mnd -> coll {}", weight.name),
        max_dim: trunc.max_dim,
        max_width: trunc.max_width,
        cells: weight
            .cells
            .iter()
            .enumerate()
            .map(|(d, layer)| (d, layer.iter().map(crate::text::render).collect()))
            .collect(),
        arrows_checked: checked,
        vertex_surjective: None,
    })
}

/// The image of the whiskering `- ∘ u`: arrows whose second-to-last letter
/// is the bottom sign, so that stripping the final letter leaves a monad
/// arrow.
fn in_whiskered_image(g: &Squiggle) -> bool {
    let word = g.levels();
    word.len() >= 2 && word[word.len() - 2] as usize == g.dim() + 1
}

fn check_whiskering_inclusion(
    trunc: Truncation,
) -> Result<CofibrancyCertificate, WeightViolation> {
    // Atomic arrows of the smaller collage remain atomic in the larger:
    // monad atomics are unchanged, and the single weight cell lands on u.
    let wminus = build_weight(WeightKind::WMinus, trunc);
    for dim in 0..=trunc.max_dim {
        for_each_hom(Sign::Plus, Sign::Plus, dim, trunc.max_width, |m| {
            if !has_interior_plus(m) {
                // image under - ∘ u: append the bottom sign
                let image = m
                    .whisker(crate::squiggle::Side::Right, crate::squiggle::Generator::U)
                    .expect("monad arrows whisker with u");
                debug_assert!(in_whiskered_image(&image));
            }
        });
    }

    // New cells: atomics of the larger not in the whiskered image.
    let mut new_cells: Vec<(usize, Vec<String>)> = Vec::new();
    for (d, layer) in wminus.cells.iter().enumerate() {
        let fresh: Vec<String> = layer
            .iter()
            .filter(|c| !in_whiskered_image(c))
            .map(crate::text::render)
            .collect();
        new_cells.push((d, fresh));
    }
    if !new_cells[0].1.is_empty() {
        return Err(WeightViolation {
            witness: format!(
                "unexpected 0-cell {} outside the whiskered image",
                new_cells[0].1[0]
            ),
        });
    }

    // Vertex surjectivity: every 0-arrow of the algebra weight decomposes
    // as a ∘ u.
    let mut surjective = true;
    let table = enumerate_hom(Sign::Minus, Sign::Plus, 0, trunc.max_width);
    let mut checked = 0usize;
    for g in table.dim(0) {
        checked += 1;
        if !in_whiskered_image(g) {
            surjective = false;
        }
    }
    if !surjective {
        return Err(WeightViolation {
            witness: "a 0-arrow of the algebra weight misses the whiskered image".into(),
        });
    }

    Ok(CofibrancyCertificate {
        inclusion: "coll Wplus -> coll Wminus".into(),
        max_dim: trunc.max_dim,
        max_width: trunc.max_width,
        cells: new_cells,
        arrows_checked: checked,
        vertex_surjective: Some(surjective),
    })
}
