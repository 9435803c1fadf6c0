//! Computad structure: atomic decompositions and normal forms, generated
//! subcomputads, bounded hom enumeration, Segal splicing, and the homotopy
//! category of a hom-space.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::ops::{act, degenerate_to, face, vertex, SimplicialOperator};
use crate::squiggle::{Level, Sign, Squiggle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("identity arrows admit no atomic decomposition")]
pub struct IsIdentity;

/// Splits an arrow at each interior sign. The factors compose, in order, to
/// the original arrow; each factor is atomic; the splitting is unique since
/// the split points are forced.
pub fn atomic_decompose(a: &Squiggle) -> Result<Vec<Squiggle>, IsIdentity> {
    if a.is_identity() {
        return Err(IsIdentity);
    }
    let top = (a.dim() + 1) as Level;
    let word = a.levels();
    let mut factors = Vec::new();
    let mut start = 0usize;
    for i in 1..word.len() {
        if word[i] == 0 || word[i] == top {
            factors.push(
                Squiggle::from_levels(a.dim(), word[start..=i].to_vec())
                    .expect("sections of a strict word are strict"),
            );
            start = i;
        }
    }
    Ok(factors)
}

/// The Eilenberg–Zilber splitting of a single squiggle: the nondegenerate
/// core together with the degeneracy operator that restores it, so that
/// `act(core, σ) == a`.
pub fn strip_degeneracies(a: &Squiggle) -> (Squiggle, SimplicialOperator) {
    let n = a.dim();
    let top = (n + 1) as Level;
    let mut present: Vec<Level> = a
        .levels()
        .iter()
        .copied()
        .filter(|&l| l != 0 && l != top)
        .collect();
    present.sort_unstable();
    present.dedup();
    let core_dim = present.len();
    let core_word: Vec<Level> = a
        .levels()
        .iter()
        .map(|&l| {
            if l == 0 {
                0
            } else if l == top {
                (core_dim + 1) as Level
            } else {
                (present.binary_search(&l).unwrap() + 1) as Level
            }
        })
        .collect();
    let core = Squiggle::from_levels(core_dim, core_word).expect("relabelling preserves strictness");
    let sigma_values: Vec<usize> = (0..=n)
        .map(|i| present.iter().filter(|&&g| (g as usize) <= i).count())
        .collect();
    let sigma = SimplicialOperator::new(n, core_dim, sigma_values).unwrap();
    (core, sigma)
}

/// One factor of a normal form: a nondegenerate atomic arrow and the
/// degeneracy applied to it.
pub type NormalFactor = (Squiggle, SimplicialOperator);

/// The unique expression of a non-identity arrow as a composite of
/// degenerated nondegenerate atomics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub factors: Vec<NormalFactor>,
}

impl NormalForm {
    /// Recomposes the factors; equals the arrow the form was taken from.
    pub fn recompose(&self) -> Squiggle {
        let parts: Vec<Squiggle> = self
            .factors
            .iter()
            .map(|(core, sigma)| act(core, sigma).expect("degeneracy dimensions agree"))
            .collect();
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            out = out.compose(p).expect("normal-form factors compose");
        }
        out
    }
}

pub fn normal_form(a: &Squiggle) -> Result<NormalForm, IsIdentity> {
    let factors = atomic_decompose(a)?
        .iter()
        .map(strip_degeneracies)
        .collect();
    Ok(NormalForm { factors })
}

/// The nondegenerate atomic cores appearing in the normal form of `a`;
/// empty for identities.
pub fn atom_cores(a: &Squiggle) -> Vec<Squiggle> {
    if a.is_identity() {
        return Vec::new();
    }
    atomic_decompose(a)
        .unwrap()
        .iter()
        .map(|f| strip_degeneracies(f).0)
        .collect()
}

/// Dimension and width bounds carried by every enumerative construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub max_dim: usize,
    pub max_width: usize,
}

impl Truncation {
    pub fn new(max_dim: usize, max_width: usize) -> Self {
        Truncation { max_dim, max_width }
    }

    pub fn admits(&self, a: &Squiggle) -> bool {
        a.dim() <= self.max_dim && a.width() <= self.max_width
    }
}

/// Streams every strictly undulating word in `hom(src, tgt)` of the given
/// dimension with width at most `max_width`, in lexicographic order on the
/// internal word.
pub fn for_each_hom<F: FnMut(&Squiggle)>(
    src: Sign,
    tgt: Sign,
    dim: usize,
    max_width: usize,
    mut visit: F,
) {
    let top = (dim + 1) as Level;
    let first = match tgt {
        Sign::Minus => 0,
        Sign::Plus => top,
    };
    let last = match src {
        Sign::Minus => 0,
        Sign::Plus => top,
    };
    let mut word: Vec<Level> = vec![first];
    // Depth-first over extensions; a word ending at the domain sign is an
    // arrow, and extensions continue through interior signs.
    fn extend<F: FnMut(&Squiggle)>(
        word: &mut Vec<Level>,
        dim: usize,
        top: Level,
        last: Level,
        max_width: usize,
        visit: &mut F,
    ) {
        let len = word.len();
        if *word.last().unwrap() == last {
            visit(
                &Squiggle::from_levels(dim, word.clone())
                    .expect("enumeration emits strict words"),
            );
        }
        if len == max_width + 1 {
            return;
        }
        let prev = *word.last().unwrap();
        let starts_minus = word[0] == 0;
        let rising = ((len - 1) % 2 == 0) == starts_minus;
        let range: Box<dyn Iterator<Item = Level>> = if rising {
            Box::new(prev + 1..=top)
        } else {
            Box::new(0..prev)
        };
        for next in range {
            word.push(next);
            extend(word, dim, top, last, max_width, visit);
            word.pop();
        }
    }
    extend(&mut word, dim, top, last, max_width, &mut visit);
}

/// Complete, duplicate-free listing of a bounded hom-space, ordered
/// lexicographically on (width, internal word) within each dimension.
#[derive(Debug, Clone)]
pub struct HomTable {
    pub src: Sign,
    pub tgt: Sign,
    pub trunc: Truncation,
    by_dim: Vec<Vec<Squiggle>>,
}

/// JSON manifest carried alongside the line-per-arrow serialisation.
#[derive(Debug, Clone, Serialize)]
pub struct HomManifest {
    pub src: String,
    pub tgt: String,
    #[serde(rename = "maxDim")]
    pub max_dim: usize,
    #[serde(rename = "maxWidth")]
    pub max_width: usize,
    pub count: usize,
}

pub fn enumerate_hom(src: Sign, tgt: Sign, max_dim: usize, max_width: usize) -> HomTable {
    let mut by_dim = Vec::with_capacity(max_dim + 1);
    for dim in 0..=max_dim {
        let mut arrows = Vec::new();
        for_each_hom(src, tgt, dim, max_width, |a| arrows.push(a.clone()));
        arrows.sort_by(|a, b| (a.width(), a.levels()).cmp(&(b.width(), b.levels())));
        by_dim.push(arrows);
    }
    HomTable {
        src,
        tgt,
        trunc: Truncation::new(max_dim, max_width),
        by_dim,
    }
}

impl HomTable {
    pub fn dim(&self, d: usize) -> &[Squiggle] {
        &self.by_dim[d]
    }

    pub fn count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn manifest(&self) -> HomManifest {
        HomManifest {
            src: self.src.to_string(),
            tgt: self.tgt.to_string(),
            max_dim: self.trunc.max_dim,
            max_width: self.trunc.max_width,
            count: self.count(),
        }
    }

    /// Line-per-arrow text form in the codec grammar.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for dim in &self.by_dim {
            for a in dim {
                out.push_str(&crate::text::render(a));
                out.push('\n');
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubcomputadError {
    #[error("generator {0} exceeds the truncation bounds")]
    TruncationTooSmall(String),
}

/// A subcomputad presented by generators, realised as the complete set of
/// nondegenerate atomic arrows it contains. Faces only shrink dimension and
/// width, so the closure below is exact rather than an approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcomputad {
    generators: Vec<Squiggle>,
    trunc: Truncation,
    atoms: BTreeSet<Squiggle>,
}

impl Subcomputad {
    /// Closes the generators under simplicial action and two-sided
    /// factorisation. Only the atomic nondegenerate members are stored;
    /// membership of arbitrary arrows is decided through their cores.
    pub fn generate(
        generators: &[Squiggle],
        trunc: Truncation,
    ) -> Result<Subcomputad, SubcomputadError> {
        for g in generators {
            if !trunc.admits(g) {
                return Err(SubcomputadError::TruncationTooSmall(crate::text::render(g)));
            }
        }
        let mut atoms: BTreeSet<Squiggle> = BTreeSet::new();
        let mut queue: Vec<Squiggle> = generators.iter().flat_map(atom_cores).collect();
        while let Some(a) = queue.pop() {
            if atoms.contains(&a) {
                continue;
            }
            debug_assert!(trunc.admits(&a), "closure stays within generator bounds");
            atoms.insert(a.clone());
            for i in 0..=a.dim() {
                if a.dim() == 0 {
                    break;
                }
                let f = face(&a, i).unwrap();
                for core in atom_cores(&f) {
                    if !atoms.contains(&core) {
                        queue.push(core);
                    }
                }
            }
        }
        Ok(Subcomputad {
            generators: generators.to_vec(),
            trunc,
            atoms,
        })
    }

    pub fn generators(&self) -> &[Squiggle] {
        &self.generators
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    /// The nondegenerate atomic members, the canonical presentation.
    pub fn atoms(&self) -> &BTreeSet<Squiggle> {
        &self.atoms
    }

    /// Exact membership: identities always belong; any other arrow belongs
    /// iff every nondegenerate atomic core of its factorisation does.
    pub fn contains(&self, a: &Squiggle) -> bool {
        if a.is_identity() {
            return true;
        }
        atom_cores(a).iter().all(|c| self.atoms.contains(c))
    }

    pub fn union_with(&self, extra: &[Squiggle]) -> Result<Subcomputad, SubcomputadError> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Subcomputad::generate(&gens, self.trunc)
    }

    pub fn is_subset_of(&self, other: &Subcomputad) -> bool {
        self.atoms.is_subset(&other.atoms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("splicing requires both factors to have dimension at least 1")]
    DimensionZero,
    #[error("factors lie in different hom-spaces")]
    HomMismatch,
    #[error("last vertex of the first factor differs from first vertex of the second")]
    VerticesDoNotMatch,
}

/// The Segal splice: the unique `(n+m)`-arrow restricting to `a` on the
/// first `n+1` vertices and to `b` on the last `m+1`. Each letter of `a` at
/// the bottom level is replaced by the corresponding excursion of `b`
/// shifted below the shared line.
pub fn segal_splice(a: &Squiggle, b: &Squiggle) -> Result<Squiggle, SpliceError> {
    let (n, m) = (a.dim(), b.dim());
    if n == 0 || m == 0 {
        return Err(SpliceError::DimensionZero);
    }
    if a.dom() != b.dom() || a.cod() != b.cod() {
        return Err(SpliceError::HomMismatch);
    }
    let va = vertex(a, n).unwrap();
    let vb = vertex(b, 0).unwrap();
    if va != vb {
        return Err(SpliceError::VerticesDoNotMatch);
    }

    // Maximal runs of letters >= 1 in b, the excursions below the shared line.
    let mut blocks: Vec<Vec<Level>> = Vec::new();
    let mut current: Vec<Level> = Vec::new();
    for &l in b.levels() {
        if l == 0 {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push(l + n as Level);
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }

    let a_top = (n + 1) as Level;
    let plus_count = a.levels().iter().filter(|&&l| l == a_top).count();
    debug_assert_eq!(plus_count, blocks.len(), "vertex match aligns the blocks");

    let mut word: Vec<Level> = Vec::new();
    let mut next_block = blocks.into_iter();
    for &l in a.levels() {
        if l == a_top {
            word.extend(next_block.next().expect("block per bottom letter"));
        } else {
            word.push(l);
        }
    }
    Ok(Squiggle::from_levels(n + m, word).expect("splices are strictly undulating"))
}

/// Report of an exhaustive Segal-condition check on one hom-space.
#[derive(Debug, Clone, Serialize)]
pub struct SegalReport {
    pub src: String,
    pub tgt: String,
    pub n: usize,
    pub m: usize,
    pub max_width: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// For every pair `(a, b)` in bounds with matching vertex, verifies there is
/// exactly one `(n+m)`-arrow within the induced width bound satisfying the
/// two face equations, and that it is the splice.
pub fn segal_check(src: Sign, tgt: Sign, n: usize, m: usize, max_width: usize) -> SegalReport {
    assert!(n >= 1 && m >= 1);
    let table_n = enumerate_hom(src, tgt, n, max_width);
    let table_m = enumerate_hom(src, tgt, m, max_width);

    let mut needed: HashMap<(Vec<Level>, Vec<Level>), Vec<Squiggle>> = HashMap::new();
    let mut pairs = 0usize;
    for a in table_n.dim(n) {
        for b in table_m.dim(m) {
            if vertex(a, n).unwrap() == vertex(b, 0).unwrap() {
                needed.insert((a.levels().to_vec(), b.levels().to_vec()), Vec::new());
                pairs += 1;
            }
        }
    }

    let first_face = SimplicialOperator::select(n + m, &(0..=n).collect::<Vec<_>>()).unwrap();
    let second_face =
        SimplicialOperator::select(n + m, &(n..=n + m).collect::<Vec<_>>()).unwrap();
    for_each_hom(src, tgt, n + m, 2 * max_width, |c| {
        let fa = act(c, &first_face).unwrap();
        let fb = act(c, &second_face).unwrap();
        let key = (fa.levels().to_vec(), fb.levels().to_vec());
        if let Some(found) = needed.get_mut(&key) {
            found.push(c.clone());
        }
    });

    let mut violations = Vec::new();
    for ((a_word, b_word), found) in &needed {
        let a = Squiggle::from_levels(n, a_word.clone()).unwrap();
        let b = Squiggle::from_levels(m, b_word.clone()).unwrap();
        if found.len() != 1 {
            violations.push(format!(
                "pair ({}, {}) has {} fillers",
                crate::text::render(&a),
                crate::text::render(&b),
                found.len()
            ));
            continue;
        }
        let spliced = segal_splice(&a, &b).unwrap();
        if spliced != found[0] {
            violations.push(format!(
                "pair ({}, {}): splice disagrees with the unique filler",
                crate::text::render(&a),
                crate::text::render(&b)
            ));
        }
    }
    violations.sort();
    SegalReport {
        src: src.to_string(),
        tgt: tgt.to_string(),
        n,
        m,
        max_width,
        pairs_checked: pairs,
        violations: violations.clone(),
        passed: violations.is_empty(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyCategoryError {
    #[error("table must extend to dimension 2 to witness composites")]
    TableTooShallow,
}

/// Composition of two 1-arrows, witnessed by the 2-simplex that splices
/// them; `IncompleteWitness` records composites whose witness leaves the
/// width bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Composite {
    Arrow(Squiggle),
    IncompleteWitness,
}

/// The category presented by the 1-truncation of a hom-space, with
/// composition induced by its 2-simplices. Partial within bounds: pairs
/// whose witness exceeds the bound are flagged, never silently dropped.
#[derive(Debug, Clone)]
pub struct HomotopyCategory {
    pub objects: Vec<Squiggle>,
    pub morphisms: Vec<Squiggle>,
    pub compose: BTreeMap<(Squiggle, Squiggle), Composite>,
    pub max_width: usize,
}

impl HomotopyCategory {
    pub fn is_total(&self) -> bool {
        self.compose
            .values()
            .all(|c| matches!(c, Composite::Arrow(_)))
    }

    pub fn identity_of(&self, object: &Squiggle) -> Squiggle {
        degenerate_to(object, 1)
    }
}

pub fn homotopy_category(table: &HomTable) -> Result<HomotopyCategory, HomotopyCategoryError> {
    if table.trunc.max_dim < 2 {
        return Err(HomotopyCategoryError::TableTooShallow);
    }
    let max_width = table.trunc.max_width;
    let objects = table.dim(0).to_vec();
    let morphisms = table.dim(1).to_vec();
    let mut compose = BTreeMap::new();
    let middle = SimplicialOperator::select(2, &[0, 2]).unwrap();
    for g in &morphisms {
        for f in &morphisms {
            if vertex(f, 1).unwrap() != vertex(g, 0).unwrap() {
                continue;
            }
            let entry = if f.width() + g.width() > max_width {
                Composite::IncompleteWitness
            } else {
                let w = segal_splice(f, g).expect("composable 1-arrows splice");
                Composite::Arrow(act(&w, &middle).unwrap())
            };
            compose.insert((g.clone(), f.clone()), entry);
        }
    }
    Ok(HomotopyCategory {
        objects,
        morphisms,
        compose,
        max_width,
    })
}
