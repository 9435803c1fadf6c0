//! Fillable arrows, distinguished faces, fillable parents, parental
//! subcomputads, the lexicographic filtration, and pushout cell
//! certificates.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::computad::{Subcomputad, SubcomputadError, Truncation};
use crate::ops::face;
use crate::squiggle::{Level, Sign, Squiggle};

/// Why an arrow fails to be fillable, by the first violated clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NotFillableReason {
    Degenerate,
    NotAtomic,
    CodomainNotMinus,
    /// The depth letter `a₁` recurs at this later index.
    DepthLetterRepeats { index: usize },
}

/// Outcome of the fillability test. The depth is the first interior letter
/// `a₁`; it is `None` only for the 0-arrow `f`, which carries no depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillableInfo {
    pub fillable: bool,
    pub depth: Option<usize>,
    pub reason: Option<NotFillableReason>,
}

/// An arrow is fillable when it is nondegenerate, atomic, has codomain `-`,
/// and its first interior letter never recurs.
pub fn classify(a: &Squiggle) -> FillableInfo {
    let fail = |reason| FillableInfo {
        fillable: false,
        depth: None,
        reason: Some(reason),
    };
    if !a.is_atomic() {
        return fail(NotFillableReason::NotAtomic);
    }
    if a.is_degenerate() {
        return fail(NotFillableReason::Degenerate);
    }
    if a.cod() != Sign::Minus {
        return fail(NotFillableReason::CodomainNotMinus);
    }
    if a.width() == 1 {
        // the 0-arrow f; fillable by convention, no depth
        return FillableInfo {
            fillable: true,
            depth: None,
            reason: None,
        };
    }
    let depth = a.levels()[1];
    for (i, &l) in a.levels().iter().enumerate().skip(2) {
        if l == depth {
            return fail(NotFillableReason::DepthLetterRepeats { index: i });
        }
    }
    FillableInfo {
        fillable: true,
        depth: Some(depth as usize),
        reason: None,
    }
}

pub fn is_fillable(a: &Squiggle) -> bool {
    classify(a).fillable
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillableError {
    #[error("arrow is not fillable")]
    NotFillable,
    #[error("0-arrows have no distinguished face")]
    DimZero,
    #[error("arrow is already fillable")]
    IsFillable,
    #[error("arrow must be atomic")]
    NotAtomic,
    #[error("arrow must be nondegenerate")]
    Degenerate,
}

/// The distinguished face `a◇` of a fillable arrow of positive dimension:
/// the depth-indexed face itself when the depth is below the dimension, and
/// the second factor of `a·δⁿ = f·b` when the depth equals it.
pub fn distinguished_face(a: &Squiggle) -> Result<Squiggle, FillableError> {
    let info = classify(a);
    if !info.fillable {
        return Err(FillableError::NotFillable);
    }
    if a.dim() == 0 {
        return Err(FillableError::DimZero);
    }
    let k = info.depth.expect("positive-dimensional fillables have depth");
    let f = face(a, k).unwrap();
    if k < a.dim() {
        Ok(f)
    } else {
        // strip the prepended f: the face decomposes as f·b
        debug_assert_eq!(f.levels()[0], 0);
        Ok(Squiggle::from_levels(f.dim(), f.levels()[1..].to_vec())
            .expect("tail of the depth-n face is strict"))
    }
}

/// The fillable parent `a†`: the unique fillable arrow one dimension up
/// whose distinguished face recovers `a`.
///
/// For codomain `-` a new line splits the depth letter from its later
/// repetitions, keeping `a₁` fixed; for codomain `+` a loop is prepended
/// and a new bottom line inserted.
pub fn fillable_parent(a: &Squiggle) -> Result<Squiggle, FillableError> {
    if !a.is_atomic() {
        return Err(FillableError::NotAtomic);
    }
    if a.is_degenerate() {
        return Err(FillableError::Degenerate);
    }
    if is_fillable(a) {
        return Err(FillableError::IsFillable);
    }
    let n = a.dim();
    match a.cod() {
        Sign::Minus => {
            let depth = a.levels()[1];
            let word: Vec<Level> = a
                .levels()
                .iter()
                .enumerate()
                .map(|(i, &l)| if i > 1 && l >= depth { l + 1 } else { l })
                .collect();
            Ok(Squiggle::from_levels(n + 1, word).expect("inserted line keeps strictness"))
        }
        Sign::Plus => {
            let old_top = (n + 1) as Level;
            let mut word: Vec<Level> = vec![0];
            word.extend_from_slice(a.levels());
            let last = word.len() - 1;
            if word[last] == old_top {
                word[last] = old_top + 1;
            }
            Ok(Squiggle::from_levels(n + 1, word).expect("prepended loop keeps strictness"))
        }
    }
}

/// Parental test: every nondegenerate atomic member is fillable or has its
/// fillable parent inside. Returns the offending arrows otherwise.
#[derive(Debug, Clone)]
pub struct ParentalReport {
    pub parental: bool,
    pub witnesses: Vec<Squiggle>,
}

pub fn is_parental(s: &Subcomputad) -> ParentalReport {
    let mut witnesses = Vec::new();
    for a in s.atoms() {
        if is_fillable(a) {
            continue;
        }
        let parent = fillable_parent(a).expect("atoms are nondegenerate and atomic");
        if !s.contains(&parent) {
            witnesses.push(a.clone());
        }
    }
    let parental = witnesses.is_empty();
    if parental {
        debug_assert!(s.contains(&crate::names::f()));
    }
    ParentalReport {
        parental,
        witnesses,
    }
}

/// The shape of the pushout cell attached for one fillable arrow: a horn
/// cell on the generic arrow when the depth is below the dimension, and a
/// two-step join cell when the depth equals it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CellKind {
    /// Horn cell `Λ^{n,k} ⊂ Δⁿ` on the generic n-arrow, `0 < k < n`.
    Type2 { n: usize, k: usize },
    /// Join cell `∂Δ^{n-1} ⊂ Δ^{n-1}` on the generic composite through `f`.
    Type3 { n: usize },
}

/// A replayable certificate: the attaching faces (all faces except the
/// depth-indexed one, by index) and the arrows the cell adjoins.
#[derive(Debug, Clone, Serialize)]
pub struct CellCertificate {
    pub kind: CellKind,
    /// Face index → face arrow, in canonical text; all members of the base.
    pub attaching_faces: BTreeMap<usize, String>,
    /// `a` for a horn cell; `a` and `a◇` for a join cell.
    pub new_arrows: Vec<String>,
    /// For join cells, the decomposition `a·δⁿ = f·a◇` as `(f, a◇)`.
    pub join_decomposition: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("arrow is not fillable")]
    NotFillable,
    #[error("attaching face {index} is not a member of the base subcomputad")]
    FaceNotInBase { index: usize },
}

/// Builds the pushout certificate for one fillable arrow over a base that
/// already contains every face but the distinguished one.
pub fn cell_certificate(
    a: &Squiggle,
    base: &Subcomputad,
) -> Result<CellCertificate, CertificateError> {
    let info = classify(a);
    if !info.fillable || a.dim() == 0 {
        return Err(CertificateError::NotFillable);
    }
    let n = a.dim();
    let k = info.depth.unwrap();
    let mut attaching_faces = BTreeMap::new();
    for i in 0..=n {
        if i == k {
            continue;
        }
        let fi = face(a, i).unwrap();
        if !base.contains(&fi) {
            return Err(CertificateError::FaceNotInBase { index: i });
        }
        attaching_faces.insert(i, crate::text::render(&fi));
    }
    let diamond = distinguished_face(a).unwrap();
    if k < n {
        Ok(CellCertificate {
            kind: CellKind::Type2 { n, k },
            attaching_faces,
            new_arrows: vec![crate::text::render(a)],
            join_decomposition: None,
        })
    } else {
        Ok(CellCertificate {
            kind: CellKind::Type3 { n },
            attaching_faces,
            new_arrows: vec![crate::text::render(a), crate::text::render(&diamond)],
            join_decomposition: Some((
                crate::text::render(&crate::names::f()),
                crate::text::render(&diamond),
            )),
        })
    }
}

/// One stage of the filtration: all fillable arrows sharing a
/// (width, depth, dimension) triple, attached simultaneously.
#[derive(Debug, Clone, Serialize)]
pub struct FiltrationStage {
    pub index: usize,
    pub triple: (usize, usize, usize),
    pub arrows: Vec<String>,
    pub certificates: Vec<CellCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationReport {
    pub max_dim: usize,
    pub max_width: usize,
    pub stages: Vec<FiltrationStage>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("the {0} subcomputad is not parental")]
    NotParental(&'static str),
    #[error("inner subcomputad is not contained in the outer one")]
    NotNested,
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("stage arrow has a non-distinguished face outside the previous stage: {0}")]
    FaceMissing(String),
}

impl From<SubcomputadError> for FiltrationError {
    fn from(e: SubcomputadError) -> Self {
        match e {
            SubcomputadError::TruncationTooSmall(s) => FiltrationError::TruncationTooSmall(s),
        }
    }
}

/// Filters a nested pair of parental subcomputads as a sequence of stages
/// ordered lexicographically by (width, depth, dimension). Each stage's
/// certificates are verified against the previously built subcomputad, and
/// replaying all stages regenerates the outer subcomputad.
pub fn filtration(
    inner: &Subcomputad,
    outer: &Subcomputad,
    trunc: Truncation,
) -> Result<FiltrationReport, FiltrationError> {
    if !is_parental(inner).parental {
        return Err(FiltrationError::NotParental("inner"));
    }
    if !is_parental(outer).parental {
        return Err(FiltrationError::NotParental("outer"));
    }
    if !inner.is_subset_of(outer) {
        return Err(FiltrationError::NotNested);
    }
    let widest_gen = outer
        .generators()
        .iter()
        .map(Squiggle::width)
        .max()
        .unwrap_or(0);
    if trunc.max_width < widest_gen + 1 {
        return Err(FiltrationError::TruncationTooSmall(format!(
            "filtration needs max_width >= {} to see parents",
            widest_gen + 1
        )));
    }

    // The fillable arrows to attach, grouped by lexicographic triple.
    let mut groups: BTreeMap<(usize, usize, usize), Vec<Squiggle>> = BTreeMap::new();
    for a in outer.atoms().difference(inner.atoms()) {
        let info = classify(a);
        if !info.fillable {
            continue;
        }
        let k = info.depth.expect("dim >= 1 for non-inner fillables");
        groups
            .entry((a.width(), k, a.dim()))
            .or_default()
            .push(a.clone());
    }

    let mut current = inner.clone();
    let mut stages = Vec::new();
    for (index, (triple, arrows)) in groups.into_iter().enumerate() {
        let mut certificates = Vec::new();
        for a in &arrows {
            match cell_certificate(a, &current) {
                Ok(c) => certificates.push(c),
                Err(CertificateError::FaceNotInBase { index }) => {
                    return Err(FiltrationError::FaceMissing(format!(
                        "{} at face {}",
                        crate::text::render(a),
                        index
                    )))
                }
                Err(CertificateError::NotFillable) => unreachable!("stage arrows are fillable"),
            }
        }
        current = current.union_with(&arrows)?;
        stages.push(FiltrationStage {
            index: index + 1,
            triple,
            arrows: arrows.iter().map(crate::text::render).collect(),
            certificates,
        });
    }

    debug_assert_eq!(current.atoms(), outer.atoms(), "stages regenerate the outer subcomputad");
    Ok(FiltrationReport {
        max_dim: trunc.max_dim,
        max_width: trunc.max_width,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names;
    use crate::text::parse;

    fn sq(s: &str) -> Squiggle {
        parse(s).unwrap()
    }

    #[test]
    fn classification_of_named_arrows() {
        let eps = classify(&names::eps());
        assert!(eps.fillable);
        assert_eq!(eps.depth, Some(1));

        let alpha = classify(&names::alpha());
        assert!(!alpha.fillable);
        assert_eq!(alpha.reason, Some(NotFillableReason::CodomainNotMinus));

        let omega = classify(&names::omega());
        assert!(omega.fillable);
        assert_eq!(omega.depth, Some(3));

        let mu = classify(&names::mu());
        assert!(!mu.fillable);
        assert_eq!(mu.reason, Some(NotFillableReason::DepthLetterRepeats { index: 3 }));

        let f = classify(&names::f());
        assert!(f.fillable);
        assert_eq!(f.depth, None);

        assert!(!classify(&sq("1:(-,1,-,1,-)")).fillable); // εε is not atomic
        assert_eq!(
            classify(&sq("2:(-,2,-)")).reason,
            Some(NotFillableReason::Degenerate)
        );
    }

    #[test]
    fn distinguished_faces_of_the_named_arrows() {
        assert_eq!(distinguished_face(&names::omega()).unwrap(), names::alpha());
        assert_eq!(distinguished_face(&names::eps()).unwrap(), names::u());
        assert_eq!(distinguished_face(&names::tau()).unwrap(), names::mu());
        assert_eq!(
            distinguished_face(&names::f()).unwrap_err(),
            FillableError::DimZero
        );
        assert_eq!(
            distinguished_face(&names::alpha()).unwrap_err(),
            FillableError::NotFillable
        );
    }

    #[test]
    fn beta_distinguished_face_is_eta() {
        // β·δ² = fη, so β◇ = η
        assert_eq!(distinguished_face(&names::beta()).unwrap(), names::eta());
    }

    #[test]
    fn parents_of_the_named_arrows() {
        assert_eq!(fillable_parent(&names::u()).unwrap(), names::eps());
        assert_eq!(fillable_parent(&names::eta()).unwrap(), names::beta());
        assert_eq!(fillable_parent(&names::alpha()).unwrap(), names::omega());
        assert_eq!(fillable_parent(&names::mu()).unwrap(), names::tau());
        assert_eq!(
            fillable_parent(&names::eps()).unwrap_err(),
            FillableError::IsFillable
        );
    }

    #[test]
    fn parent_and_face_are_mutually_inverse_on_examples() {
        for a in [names::u(), names::eta(), names::alpha(), names::mu()] {
            let parent = fillable_parent(&a).unwrap();
            assert!(is_fillable(&parent));
            assert_eq!(distinguished_face(&parent).unwrap(), a);
            assert_eq!(parent.width(), a.width() + if a.cod() == Sign::Plus { 1 } else { 0 });
        }
    }

    #[test]
    fn parent_construction_on_the_wide_examples() {
        // codomain-minus: the depth letter is split from its later
        // repetitions; the parent keeps the depth
        let a = sq("4:(-,3,2,3,1,4,3,+)");
        assert!(!is_fillable(&a));
        let parent = fillable_parent(&a).unwrap();
        assert_eq!(parent, sq("5:(-,3,2,4,1,5,4,+)"));
        assert_eq!(classify(&parent).depth, Some(3));
        assert_eq!(distinguished_face(&parent).unwrap(), a);
        // the sibling filler one level up exists with depth 4
        let sibling = sq("5:(-,4,2,3,1,5,3,+)");
        assert!(is_fillable(&sibling));
        assert_eq!(classify(&sibling).depth, Some(4));
        assert_eq!(crate::ops::face(&sibling, 3).unwrap(), a);

        // codomain-plus: a loop is prepended and a bottom line inserted
        let b = sq("4:(+,2,3,1,4,3,+)");
        let parent = fillable_parent(&b).unwrap();
        assert_eq!(parent, sq("5:(-,5,2,3,1,4,3,+)"));
        assert_eq!(classify(&parent).depth, Some(5));
        assert_eq!(distinguished_face(&parent).unwrap(), b);
    }

    #[test]
    fn parental_subcomputads() {
        let trunc = Truncation::new(4, 8);
        for gens in [vec![names::f()], vec![names::eps()], vec![names::beta()]] {
            let s = Subcomputad::generate(&gens, trunc).unwrap();
            assert!(is_parental(&s).parental);
        }
        let not_parental =
            Subcomputad::generate(&[names::alpha(), names::beta()], trunc).unwrap();
        let report = is_parental(&not_parental);
        assert!(!report.parental);
        assert_eq!(report.witnesses, vec![names::alpha()]);
    }

    #[test]
    fn filtration_f_to_eps() {
        let trunc = Truncation::new(4, 8);
        let inner = Subcomputad::generate(&[names::f()], trunc).unwrap();
        let outer = Subcomputad::generate(&[names::eps()], trunc).unwrap();
        let report = filtration(&inner, &outer, trunc).unwrap();
        assert_eq!(report.stages.len(), 1);
        let stage = &report.stages[0];
        assert_eq!(stage.triple, (2, 1, 1));
        assert_eq!(stage.arrows, vec!["1:(-,1,-)".to_string()]);
        assert_eq!(stage.certificates[0].kind, CellKind::Type3 { n: 1 });
        // the only attaching face is ε·δ⁰, an identity at -
        assert_eq!(stage.certificates[0].attaching_faces[&0], "0:(-)");
    }

    #[test]
    fn filtration_eps_to_beta() {
        let trunc = Truncation::new(4, 8);
        let inner = Subcomputad::generate(&[names::eps()], trunc).unwrap();
        let outer = Subcomputad::generate(&[names::beta()], trunc).unwrap();
        let report = filtration(&inner, &outer, trunc).unwrap();
        assert_eq!(report.stages.len(), 1);
        assert_eq!(report.stages[0].triple, (3, 2, 2));
        assert_eq!(report.stages[0].certificates[0].kind, CellKind::Type3 { n: 2 });
    }

    #[test]
    fn filtration_beta_to_omega_tau() {
        let trunc = Truncation::new(4, 8);
        let inner = Subcomputad::generate(&[names::beta()], trunc).unwrap();
        let outer = Subcomputad::generate(&[names::omega(), names::tau()], trunc).unwrap();
        let report = filtration(&inner, &outer, trunc).unwrap();
        let triples: Vec<_> = report.stages.iter().map(|s| s.triple).collect();
        assert_eq!(triples, vec![(4, 2, 3), (4, 3, 3)]);
        assert_eq!(report.stages[0].arrows, vec!["3:(-,2,1,3,-)".to_string()]);
        assert_eq!(report.stages[0].certificates[0].kind, CellKind::Type2 { n: 3, k: 2 });
        assert_eq!(report.stages[1].arrows, vec!["3:(-,3,1,2,-)".to_string()]);
        assert_eq!(report.stages[1].certificates[0].kind, CellKind::Type3 { n: 3 });
    }

    #[test]
    fn filtration_rejects_non_parental_input() {
        let trunc = Truncation::new(4, 8);
        let inner = Subcomputad::generate(&[names::f()], trunc).unwrap();
        let outer = Subcomputad::generate(&[names::alpha(), names::beta()], trunc).unwrap();
        assert_eq!(
            filtration(&inner, &outer, trunc).unwrap_err(),
            FiltrationError::NotParental("outer")
        );
    }

    #[test]
    fn certificates_verify_their_faces() {
        let trunc = Truncation::new(4, 8);
        let base = Subcomputad::generate(&[names::beta()], trunc).unwrap();
        let cert = cell_certificate(&names::tau(), &base).unwrap();
        assert_eq!(cert.kind, CellKind::Type2 { n: 3, k: 2 });
        assert_eq!(cert.attaching_faces.len(), 3);

        // ω over gen{β} alone misses the face μ = ω·δ²
        let err = cell_certificate(&names::omega(), &base).unwrap_err();
        assert_eq!(err, CertificateError::FaceNotInBase { index: 2 });

        // but over gen{β} ∪ {τ} the join cell for ω attaches
        let bigger = base.union_with(&[names::tau()]).unwrap();
        let cert = cell_certificate(&names::omega(), &bigger).unwrap();
        assert_eq!(cert.kind, CellKind::Type3 { n: 3 });
        assert_eq!(
            cert.join_decomposition,
            Some(("0:(-,+)".to_string(), "2:(+,1,2,-)".to_string()))
        );
    }
}
