//! Weighted cones over the nerve of a finite category with a monad action:
//! the cone solver, the stabilisation probe, and the comparison with the
//! classical Eilenberg–Moore category.
//!
//! A cone with summit the standard `n`-simplex assigns to each cell of the
//! weight a simplex of the functor-category nerve, compatibly with faces,
//! degeneracies, and the monad action. Values of non-cell arrows are
//! determined by the unique collage factorisation, so the solver searches
//! only over cell values: free choices exist in dimensions 0 and 1, and
//! everything higher is forced by the nerve being 2-coskeletal.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use super::em::EmAdjunction;
use super::laws::FinMonad;
use super::weights::{collage_factorize, underlying_hom, WeightKind, WeightPresentation};
use crate::bridge::{squiggle_to_ss, PlusOperator};
use crate::computad::{for_each_hom, Truncation};
use crate::ops::SimplicialOperator;
use crate::squiggle::Squiggle;

/// A functor `[n] → B`: a composable chain of `n` morphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BChain {
    pub objects: Vec<usize>,
    pub maps: Vec<usize>,
}

/// A natural transformation between parallel chains: one component per
/// vertex, with commuting squares.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ladder {
    pub components: Vec<usize>,
}

/// A `k`-simplex of the nerve of the functor category: `k+1` chains joined
/// by `k` ladders.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KSim {
    pub chains: Vec<BChain>,
    pub ladders: Vec<Ladder>,
}

impl KSim {
    pub fn dim(&self) -> usize {
        self.chains.len() - 1
    }
}

fn enumerate_bchains(m: &FinMonad, n: usize) -> Vec<BChain> {
    let base = &m.base;
    let mut out = Vec::new();
    let mut stack: Vec<BChain> = (0..base.object_count())
        .map(|o| BChain {
            objects: vec![o],
            maps: vec![],
        })
        .collect();
    while let Some(c) = stack.pop() {
        if c.maps.len() == n {
            out.push(c);
            continue;
        }
        let last = *c.objects.last().unwrap();
        for (mi, mor) in base.morphisms() {
            if mor.dom == last {
                let mut next = c.clone();
                next.objects.push(mor.cod);
                next.maps.push(mi);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn enumerate_ladders(m: &FinMonad, from: &BChain, to: &BChain) -> Vec<Ladder> {
    let base = &m.base;
    let n = from.maps.len();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = base
        .hom(from.objects[0], to.objects[0])
        .into_iter()
        .map(|c| vec![c])
        .collect();
    while let Some(partial) = stack.pop() {
        let v = partial.len() - 1;
        if v == n {
            out.push(Ladder { components: partial });
            continue;
        }
        for c in base.hom(from.objects[v + 1], to.objects[v + 1]) {
            // naturality square at step v
            if base.comp(c, from.maps[v]) == base.comp(to.maps[v], partial[v]) {
                let mut next = partial.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn compose_ladders(m: &FinMonad, second: &Ladder, first: &Ladder) -> Ladder {
    Ladder {
        components: first
            .components
            .iter()
            .zip(&second.components)
            .map(|(&f, &s)| m.base.comp(s, f))
            .collect(),
    }
}

fn identity_ladder(m: &FinMonad, c: &BChain) -> Ladder {
    Ladder {
        components: c.objects.iter().map(|&o| m.base.identity(o)).collect(),
    }
}

fn face_ksim(m: &FinMonad, x: &KSim, i: usize) -> KSim {
    let k = x.dim();
    let mut chains = x.chains.clone();
    chains.remove(i);
    let mut ladders = x.ladders.clone();
    if i == 0 {
        ladders.remove(0);
    } else if i == k {
        ladders.remove(k - 1);
    } else {
        let merged = compose_ladders(m, &x.ladders[i], &x.ladders[i - 1]);
        ladders.remove(i);
        ladders[i - 1] = merged;
    }
    KSim { chains, ladders }
}

/// Applies a simplicial operator to a simplex of the nerve: reindex the
/// chains and compose or insert ladders accordingly.
fn act_ksim(m: &FinMonad, x: &KSim, op: &SimplicialOperator) -> KSim {
    let chains: Vec<BChain> = op.values().iter().map(|&v| x.chains[v].clone()).collect();
    let mut ladders = Vec::new();
    for w in op.values().windows(2) {
        let (a, b) = (w[0], w[1]);
        let mut ladder = identity_ladder(m, &x.chains[a]);
        for step in a..b {
            ladder = compose_ladders(m, &x.ladders[step], &ladder);
        }
        ladders.push(ladder);
    }
    KSim { chains, ladders }
}

/// Restricts every chain of a simplex along a summit operator
/// `[n'] → [n]`, implementing the contravariant action of the cotensor.
fn restrict_ksim(m: &FinMonad, x: &KSim, op: &SimplicialOperator) -> KSim {
    let restrict_chain = |c: &BChain| -> BChain {
        let objects: Vec<usize> = op.values().iter().map(|&v| c.objects[v]).collect();
        let maps = op
            .values()
            .windows(2)
            .map(|w| {
                let mut acc = m.base.identity(c.objects[w[0]]);
                for step in w[0]..w[1] {
                    acc = m.base.comp(c.maps[step], acc);
                }
                acc
            })
            .collect();
        BChain { objects, maps }
    };
    KSim {
        chains: x.chains.iter().map(restrict_chain).collect(),
        ladders: x
            .ladders
            .iter()
            .map(|l| Ladder {
                components: op.values().iter().map(|&v| l.components[v]).collect(),
            })
            .collect(),
    }
}

/// The natural transformation of iterated monad powers induced by an
/// augmented-simplex operator, one component per object: cofaces insert the
/// unit, codegeneracies collapse with the multiplication.
fn nat_of_operator(
    m: &FinMonad,
    chi: &PlusOperator,
    cache: &mut HashMap<PlusOperator, Vec<usize>>,
) -> Vec<usize> {
    if let Some(v) = cache.get(chi) {
        return v.clone();
    }
    let base = &m.base;
    let a = chi.src().0;
    let b = chi.tgt().0;
    let result: Vec<usize> = if chi.is_identity() {
        (0..base.object_count())
            .map(|x| base.identity(m.power_obj((a + 1) as usize, x)))
            .collect()
    } else if let Some(i) = (0..a).find(|&i| chi.values()[i as usize] == chi.values()[i as usize + 1])
    {
        // peel a codegeneracy: χ = χ' ∘ σ^i
        let mut values = chi.values().to_vec();
        values.remove(i as usize);
        let chi2 = PlusOperator::new(crate::bridge::Ordinal(a - 1), chi.tgt(), values).unwrap();
        let outer = nat_of_operator(m, &chi2, cache);
        (0..base.object_count())
            .map(|x| {
                // σ^i at powers: t^i(μ at t^{a-1-i} x)
                let inner = m.mu.components[m.power_obj((a - 1 - i) as usize, x)];
                let sigma = m.power_mor(i as usize, inner);
                base.comp(outer[x], sigma)
            })
            .collect()
    } else {
        // injective and not the identity: peel the largest missing coface
        let missing = (0..=b)
            .rev()
            .find(|v| !chi.values().contains(v))
            .expect("non-identity injective operator misses a value");
        let values = chi
            .values()
            .iter()
            .map(|&v| if v > missing { v - 1 } else { v })
            .collect();
        let chi2 = PlusOperator::new(chi.src(), crate::bridge::Ordinal(b - 1), values).unwrap();
        let inner_nat = nat_of_operator(m, &chi2, cache);
        (0..base.object_count())
            .map(|x| {
                // δ^missing at powers: t^missing(η at t^{b-missing} x)
                let inner = m.eta.components[m.power_obj((b - missing) as usize, x)];
                let delta = m.power_mor(missing as usize, inner);
                base.comp(delta, inner_nat[x])
            })
            .collect()
    };
    cache.insert(chi.clone(), result.clone());
    result
}

fn power_chain(m: &FinMonad, k: usize, c: &BChain) -> BChain {
    BChain {
        objects: c.objects.iter().map(|&o| m.power_obj(k, o)).collect(),
        maps: c.maps.iter().map(|&f| m.power_mor(k, f)).collect(),
    }
}

/// Applies a monad-hom arrow to a simplex: the horizontal composition of
/// the induced power-functor chain with the given value.
fn act_monad_arrow(
    m: &FinMonad,
    mnd: &Squiggle,
    x: &KSim,
    cache: &mut HashMap<PlusOperator, Vec<usize>>,
) -> KSim {
    let chain = squiggle_to_ss(mnd);
    let k = x.dim();
    debug_assert_eq!(chain.dim(), k);
    let powers: Vec<usize> = chain.objects().iter().map(|o| (o.0 + 1) as usize).collect();
    let chains: Vec<BChain> = (0..=k).map(|i| power_chain(m, powers[i], &x.chains[i])).collect();
    let mut ladders = Vec::new();
    for i in 0..k {
        let nat = nat_of_operator(m, &chain.maps()[i], cache);
        let components = (0..x.chains[i].objects.len())
            .map(|v| {
                let powered = m.power_mor(powers[i], x.ladders[i].components[v]);
                let at = x.chains[i + 1].objects[v];
                m.base.comp(nat[at], powered)
            })
            .collect();
        ladders.push(Ladder { components });
    }
    KSim { chains, ladders }
}

/// One solved cone: a value for every cell of the weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub values: BTreeMap<Squiggle, KSim>,
}

/// The solved cone set at one summit dimension, with its probe record.
#[derive(Debug, Clone)]
pub struct ConeSet {
    pub weight: String,
    pub summit_dim: usize,
    pub trunc: Truncation,
    pub probe_width: usize,
    pub cones: Vec<Cone>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("cone solutions change when the width bound is raised: {0}")]
    NotStabilized(String),
    #[error("{0}")]
    Other(String),
}

struct Solver<'a> {
    monad: &'a FinMonad,
    kind: WeightKind,
    summit: usize,
    max_width: usize,
    nat_cache: HashMap<PlusOperator, Vec<usize>>,
}

impl<'a> Solver<'a> {
    /// The value of an arbitrary weight arrow under a cell assignment, by
    /// the unique collage factorisation.
    fn value(&mut self, w: &Squiggle, assignment: &BTreeMap<Squiggle, KSim>) -> Option<KSim> {
        let f = collage_factorize(self.kind, w);
        let core = assignment.get(&f.cell_core)?;
        let cell_value = act_ksim(self.monad, core, &f.cell_degeneracy);
        let mut mnd: Option<Squiggle> = None;
        for piece in &f.mnd_factors {
            mnd = Some(match mnd {
                None => piece.clone(),
                Some(prev) => prev.compose(piece).expect("factor pieces compose"),
            });
        }
        Some(match mnd {
            None => cell_value,
            Some(mnd) => act_monad_arrow(self.monad, &mnd, &cell_value, &mut self.nat_cache),
        })
    }

    /// Verifies face and degeneracy compatibility of every weight arrow
    /// within the bounds against the assignment.
    fn verify(&mut self, assignment: &BTreeMap<Squiggle, KSim>, max_dim: usize) -> bool {
        let (dom, cod) = underlying_hom(self.kind);
        for dim in 0..=max_dim {
            let mut arrows = Vec::new();
            for_each_hom(dom, cod, dim, self.max_width, |w| arrows.push(w.clone()));
            for w in arrows {
                let Some(v) = self.value(&w, assignment) else {
                    return false;
                };
                if dim > 0 {
                    for i in 0..=dim {
                        let fw = crate::ops::face(&w, i).unwrap();
                        let Some(fv) = self.value(&fw, assignment) else {
                            return false;
                        };
                        if fv != face_ksim(self.monad, &v, i) {
                            return false;
                        }
                    }
                }
                if dim < max_dim {
                    for i in 0..dim + 1 {
                        let dw = crate::ops::degenerate(&w, i).unwrap();
                        let Some(dv) = self.value(&dw, assignment) else {
                            return false;
                        };
                        let op = SimplicialOperator::degeneracy(dim, i).unwrap();
                        if dv != act_ksim(self.monad, &v, &op) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn solve_at_width(
    weight: &WeightPresentation,
    monad: &FinMonad,
    summit: usize,
    max_dim: usize,
    max_width: usize,
) -> Vec<Cone> {
    let kind = weight.kind.expect("solver runs on the built-in weights");
    let mut solver = Solver {
        monad,
        kind,
        summit,
        max_width,
        nat_cache: HashMap::new(),
    };
    let _ = solver.summit;

    // cells in (dim, width, word) order, re-listed at this width bound
    let rebuilt = super::weights::build_weight(kind, Truncation::new(max_dim, max_width));
    let mut cells: Vec<Squiggle> = Vec::new();
    for layer in &rebuilt.cells {
        cells.extend(layer.iter().cloned());
    }

    let mut solutions = Vec::new();
    let mut assignment: BTreeMap<Squiggle, KSim> = BTreeMap::new();
    search(
        &mut solver,
        monad,
        summit,
        &cells,
        0,
        &mut assignment,
        &mut solutions,
        max_dim,
    );
    solutions.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    solutions
}

#[allow(clippy::too_many_arguments)]
fn search(
    solver: &mut Solver,
    monad: &FinMonad,
    summit: usize,
    cells: &[Squiggle],
    index: usize,
    assignment: &mut BTreeMap<Squiggle, KSim>,
    solutions: &mut Vec<Cone>,
    max_dim: usize,
) {
    if index == cells.len() {
        if solver.verify(assignment, max_dim) {
            solutions.push(Cone {
                values: assignment.clone(),
            });
        }
        return;
    }
    let cell = &cells[index];
    let candidates: Vec<KSim> = match cell.dim() {
        0 => enumerate_bchains(monad, summit)
            .into_iter()
            .map(|c| KSim {
                chains: vec![c],
                ladders: vec![],
            })
            .collect(),
        1 => {
            let from = solver.value(&crate::ops::face(cell, 1).unwrap(), assignment);
            let to = solver.value(&crate::ops::face(cell, 0).unwrap(), assignment);
            match (from, to) {
                (Some(fv), Some(tv)) => enumerate_ladders(monad, &fv.chains[0], &tv.chains[0])
                    .into_iter()
                    .map(|l| KSim {
                        chains: vec![fv.chains[0].clone(), tv.chains[0].clone()],
                        ladders: vec![l],
                    })
                    .collect(),
                _ => Vec::new(),
            }
        }
        k => {
            // forced: assemble from the first and last faces, then check
            // the whole boundary
            let last = solver.value(&crate::ops::face(cell, k).unwrap(), assignment);
            let first = solver.value(&crate::ops::face(cell, 0).unwrap(), assignment);
            match (last, first) {
                (Some(lv), Some(fv)) => {
                    let mut chains = lv.chains.clone();
                    chains.push(fv.chains[k - 1].clone());
                    let mut ladders = lv.ladders.clone();
                    ladders.push(fv.ladders[k - 2].clone());
                    let candidate = KSim { chains, ladders };
                    let boundary_ok = (0..=k).all(|i| {
                        solver
                            .value(&crate::ops::face(cell, i).unwrap(), assignment)
                            .map(|want| want == face_ksim(monad, &candidate, i))
                            .unwrap_or(false)
                    });
                    if boundary_ok {
                        vec![candidate]
                    } else {
                        Vec::new()
                    }
                }
                _ => Vec::new(),
            }
        }
    };
    for candidate in candidates {
        assignment.insert(cell.clone(), candidate);
        search(
            solver, monad, summit, cells, index + 1, assignment, solutions, max_dim,
        );
        assignment.remove(cell);
    }
}

/// Restriction of a cone set to the cells available at a smaller width.
fn restrict_cones(cones: &[Cone], cells: &[Squiggle]) -> Vec<Cone> {
    let mut out: Vec<Cone> = cones
        .iter()
        .map(|c| Cone {
            values: c
                .values
                .iter()
                .filter(|(k, _)| cells.contains(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        })
        .collect();
    out.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    out.dedup();
    out
}

/// Solves for all weighted cones at the given summit dimension and runs the
/// stabilisation probe: the solution set must be unchanged when the width
/// bound is raised by two.
pub fn cone_solver(
    weight: &WeightPresentation,
    monad: &FinMonad,
    summit: usize,
    trunc: Truncation,
) -> Result<ConeSet, ConeError> {
    assert!(summit <= 2, "nerves are determined by summit dimension <= 2");
    let max_dim = trunc.max_dim.min(3);
    let base = solve_at_width(weight, monad, summit, max_dim, trunc.max_width);
    let probe_width = trunc.max_width + 2;
    let probe = solve_at_width(weight, monad, summit, max_dim, probe_width);

    let base_cells: Vec<Squiggle> = {
        let rebuilt = super::weights::build_weight(
            weight.kind.expect("built-in weight"),
            Truncation::new(max_dim, trunc.max_width),
        );
        rebuilt.cells.iter().flatten().cloned().collect()
    };
    let probe_restricted = restrict_cones(&probe, &base_cells);
    let base_restricted = restrict_cones(&base, &base_cells);
    if probe_restricted != base_restricted {
        return Err(ConeError::NotStabilized(format!(
            "{} cones at width {}, {} at width {}",
            base.len(),
            trunc.max_width,
            probe.len(),
            probe_width
        )));
    }
    Ok(ConeSet {
        weight: weight.name.clone(),
        summit_dim: summit,
        trunc,
        probe_width,
        cones: base,
    })
}

/// The algebra data carried by a cone: the value of the 0-cell and the
/// action read off the counit-shaped 1-arrow.
pub fn algebra_of_cone(m: &FinMonad, cone: &Cone) -> Option<(usize, usize)> {
    let u = crate::text::parse("0:(+,-)").unwrap();
    let ueps = crate::text::parse("1:(+,-,1,-)").unwrap();
    let b = cone.values.get(&u)?.chains[0].objects[0];
    let beta = cone.values.get(&ueps)?.ladders[0].components[0];
    let _ = m;
    Some((b, beta))
}

/// Comparison of the cone sets at summit dimensions 0, 1, 2 with the
/// classical Eilenberg–Moore category.
#[derive(Debug, Clone, Serialize)]
pub struct CompareEmReport {
    pub algebras: usize,
    pub cones: [usize; 3],
    pub morphisms: usize,
    pub pairs: usize,
    pub bijections_hold: bool,
    pub nerve_compatibility_holds: bool,
    pub mismatch: Option<String>,
}

impl CompareEmReport {
    pub fn passed(&self) -> bool {
        self.bijections_hold && self.nerve_compatibility_holds
    }
}

/// Restricts a cone along a summit operator, the contravariant action on
/// summits.
pub fn restrict_cone(m: &FinMonad, cone: &Cone, op: &SimplicialOperator) -> Cone {
    Cone {
        values: cone
            .values
            .iter()
            .map(|(k, v)| (k.clone(), restrict_ksim(m, v, op)))
            .collect(),
    }
}

pub fn compare_em(
    monad: &FinMonad,
    em: &EmAdjunction,
    trunc: Truncation,
) -> Result<CompareEmReport, ConeError> {
    let weight = super::weights::build_weight(WeightKind::WMinus, trunc);
    let sets: Vec<ConeSet> = (0..=2)
        .map(|n| cone_solver(&weight, monad, n, trunc))
        .collect::<Result<_, _>>()?;

    let mut mismatch = None;
    let mut check = |ok: bool, msg: &str| {
        if !ok && mismatch.is_none() {
            mismatch = Some(msg.to_string());
        }
    };

    // summit 0: cones are algebras
    let mut found: Vec<(usize, usize)> = sets[0]
        .cones
        .iter()
        .filter_map(|c| algebra_of_cone(monad, c))
        .collect();
    found.sort();
    found.dedup();
    let mut expected = em.algebras.clone();
    expected.sort();
    check(
        found == expected && sets[0].cones.len() == em.algebras.len(),
        "summit-0 cones do not biject with algebras",
    );

    // summit 1: cones are algebra morphisms; endpoints and the forgetful
    // image must match
    let mut nerve_ok = true;
    let mut morphism_keys = Vec::new();
    for cone in &sets[1].cones {
        let d1 = SimplicialOperator::face(1, 1).unwrap();
        let d0 = SimplicialOperator::face(1, 0).unwrap();
        let dom_alg = algebra_of_cone(monad, &restrict_cone(monad, cone, &d1));
        let cod_alg = algebra_of_cone(monad, &restrict_cone(monad, cone, &d0));
        let u = crate::text::parse("0:(+,-)").unwrap();
        let h = cone.values[&u].chains[0].maps[0];
        match (dom_alg, cod_alg) {
            (Some(da), Some(ca)) => morphism_keys.push((da, ca, h)),
            _ => nerve_ok = false,
        }
    }
    morphism_keys.sort();
    morphism_keys.dedup();
    let mut expected_mor: Vec<((usize, usize), (usize, usize), usize)> = (0..em
        .category
        .morphism_count())
        .map(|mi| {
            let mor = em.category.morphism(mi);
            (
                em.algebras[mor.dom],
                em.algebras[mor.cod],
                em.underlying[mi],
            )
        })
        .collect();
    expected_mor.sort();
    check(
        morphism_keys == expected_mor && sets[1].cones.len() == em.category.morphism_count(),
        "summit-1 cones do not biject with algebra morphisms",
    );

    // summit 2: cones are composable pairs, and the middle face is the
    // composite (nerve functoriality)
    let mut pair_count = 0usize;
    for gi in 0..em.category.morphism_count() {
        for fi in 0..em.category.morphism_count() {
            if em.category.morphism(gi).dom == em.category.morphism(fi).cod {
                let _ = (gi, fi);
                pair_count += 1;
            }
        }
    }
    check(
        sets[2].cones.len() == pair_count,
        "summit-2 cones do not count composable pairs",
    );
    for cone in &sets[2].cones {
        let u = crate::text::parse("0:(+,-)").unwrap();
        let chain = &cone.values[&u].chains[0];
        let middle = SimplicialOperator::select(2, &[0, 2]).unwrap();
        let restricted = restrict_cone(monad, cone, &middle);
        let got = restricted.values[&u].chains[0].maps[0];
        let want = monad.base.comp(chain.maps[1], chain.maps[0]);
        if got != want {
            nerve_ok = false;
        }
    }

    // degeneracy compatibility: the degenerate cone of each algebra is the
    // identity morphism cone
    for cone in &sets[0].cones {
        let s0 = SimplicialOperator::degeneracy(0, 0).unwrap();
        let degenerate = restrict_cone(monad, cone, &s0);
        let u = crate::text::parse("0:(+,-)").unwrap();
        let h = degenerate.values[&u].chains[0].maps[0];
        let b = cone.values[&u].chains[0].objects[0];
        if h != monad.base.identity(b) {
            nerve_ok = false;
        }
    }

    Ok(CompareEmReport {
        algebras: em.algebras.len(),
        cones: [
            sets[0].cones.len(),
            sets[1].cones.len(),
            sets[2].cones.len(),
        ],
        morphisms: em.category.morphism_count(),
        pairs: pair_count,
        bijections_hold: mismatch.is_none(),
        nerve_compatibility_holds: nerve_ok,
        mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::em::eilenberg_moore;
    use crate::monad::fincat::FinCategory;
    use crate::monad::weights::build_weight;

    fn closure_on_two() -> FinMonad {
        FinMonad::closure_on_poset(FinCategory::chain(2), &[1, 1])
    }

    fn closure_on_three() -> FinMonad {
        FinMonad::closure_on_poset(FinCategory::chain(3), &[1, 1, 2])
    }

    #[test]
    fn identity_monad_cones_are_objects() {
        let m = FinMonad::identity(FinCategory::chain(2));
        let trunc = Truncation::new(3, 6);
        let w = build_weight(WeightKind::WMinus, trunc);
        let set = cone_solver(&w, &m, 0, trunc).unwrap();
        assert_eq!(set.cones.len(), 2);
    }

    #[test]
    fn closure_monad_on_two_has_one_summit0_cone() {
        let m = closure_on_two();
        let trunc = Truncation::new(3, 6);
        let w = build_weight(WeightKind::WMinus, trunc);
        let set = cone_solver(&w, &m, 0, trunc).unwrap();
        assert_eq!(set.cones.len(), 1);
        let (b, beta) = algebra_of_cone(&m, &set.cones[0]).unwrap();
        assert_eq!(m.base.object_name(b), "1");
        assert_eq!(m.base.morphism(beta).id, "1<=1");
    }

    #[test]
    fn representable_weight_recovers_the_nerve() {
        let m = closure_on_two();
        let trunc = Truncation::new(3, 6);
        let w = build_weight(WeightKind::WPlus, trunc);
        for n in 0..=2 {
            let set = cone_solver(&w, &m, n, trunc).unwrap();
            let chains = enumerate_bchains(&m, n);
            assert_eq!(set.cones.len(), chains.len(), "summit {n}");
        }
    }

    #[test]
    fn compare_em_on_the_three_monads() {
        let trunc = Truncation::new(3, 6);
        for m in [
            FinMonad::identity(FinCategory::chain(2)),
            closure_on_two(),
            closure_on_three(),
        ] {
            let em = eilenberg_moore(&m).unwrap();
            let report = compare_em(&m, &em, trunc).unwrap();
            assert!(report.passed(), "{:?}", report.mismatch);
        }
    }

    #[test]
    fn lattice_join_monad_comparison() {
        // the diamond lattice 0 < a, b < 1 with t(x) = x ∨ a
        let diamond = FinCategory::poset(&["0", "a", "b", "1"], |i, j| {
            matches!((i, j), (0, 1) | (0, 2) | (0, 3) | (1, 3) | (2, 3))
        });
        let join_a = [1usize, 1, 3, 3];
        let m = FinMonad::closure_on_poset(diamond, &join_a);
        assert!(m.check_laws().passed());
        let em = eilenberg_moore(&m).unwrap();
        assert_eq!(em.algebras.len(), 2); // fixed points a and 1
        let report = compare_em(&m, &em, Truncation::new(3, 6)).unwrap();
        assert!(report.passed(), "{:?}", report.mismatch);
    }
}
