//! Acceptance suite: one test per criterion, each printing a pass line with
//! the bounds it certified. Run with `cargo test --test acceptance`
//! (`-- --nocapture` shows the lines).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cohadj::bridge::{
    adjoint_transpose, coequalizer_check, enumerate_operators, ordinal_sum, squiggle_to_ss,
    ss_act, ss_compose, ss_to_squiggle, vertex_ordinal, Ordinal, SsIndex, TransposeSide,
};
use cohadj::computad::{
    atomic_decompose, enumerate_hom, for_each_hom, normal_form, segal_check, segal_splice,
    strip_degeneracies, Subcomputad, Truncation,
};
use cohadj::fillable::{
    cell_certificate, classify, distinguished_face, fillable_parent, filtration, is_fillable,
    is_parental, CellKind,
};
use cohadj::hammock::hammock_grid;
use cohadj::monad::{
    build_weight, canonical_resolution, compare_em, conservativity_check,
    custom_weight, eilenberg_moore, relative_computad_check, FinCategory, FinMonad, Inclusion,
    WeightKind,
};
use cohadj::ops::{act, crossing_count, face, reduce_levels, vertex, SimplicialOperator};
use cohadj::squiggle::{Level, Sign, Squiggle};
use cohadj::{names, parse, render};

fn sq(s: &str) -> Squiggle {
    parse(s).unwrap()
}

fn op(s: &str) -> SimplicialOperator {
    SimplicialOperator::parse(s).unwrap()
}

const HOM_PAIRS: [(Sign, Sign); 4] = [
    (Sign::Minus, Sign::Minus),
    (Sign::Minus, Sign::Plus),
    (Sign::Plus, Sign::Minus),
    (Sign::Plus, Sign::Plus),
];

fn all_squiggles(max_dim: usize, max_width: usize) -> Vec<Squiggle> {
    let mut out = Vec::new();
    for dim in 0..=max_dim {
        for (dom, cod) in HOM_PAIRS {
            for_each_hom(dom, cod, dim, max_width, |a| out.push(a.clone()));
        }
    }
    out
}

#[test]
fn criterion_01_golden_paper_figures() {
    // composition figure
    let b = sq("4:(-,2,1,4,1,3,-)");
    let a = sq("4:(-,4,1,3,2,+)");
    assert_eq!(b.compose(&a).unwrap(), sq("4:(-,2,1,4,1,3,-,4,1,3,2,+)"));

    // degeneracy and face displays of the sample 4-arrow
    let s = sq("4:(-,2,1,4,1,3,-)");
    assert_eq!(
        act(&s, &SimplicialOperator::degeneracy(4, 0).unwrap()).unwrap(),
        sq("5:(-,3,2,5,2,4,-)")
    );
    assert_eq!(
        act(&s, &SimplicialOperator::face(4, 4).unwrap()).unwrap(),
        sq("3:(-,2,1,+,1,3,-)")
    );
    assert_eq!(act(&s, &op("[2->4: 0 1 4]")).unwrap(), sq("2:(-,2,1,2,1,2,-)"));

    // vertices
    assert_eq!(vertex(&s, 0).unwrap(), sq("0:(-,+,-)"));
    assert_eq!(vertex(&s, 1).unwrap(), sq("0:(-,+,-,+,-,+,-)"));
    assert_eq!(vertex(&s, 4).unwrap(), sq("0:(-)"));

    // face tables of the triangle-identity witnesses
    let alpha = names::alpha();
    assert_eq!(face(&alpha, 2).unwrap(), sq("1:(+,1,+,-)")); // ηu
    assert_eq!(face(&alpha, 1).unwrap(), sq("1:(+,-)")); // u
    assert_eq!(face(&alpha, 0).unwrap(), sq("1:(+,-,1,-)")); // uε
    let beta = names::beta();
    assert_eq!(face(&beta, 2).unwrap(), sq("1:(-,+,1,+)")); // fη
    assert_eq!(face(&beta, 1).unwrap(), sq("1:(-,+)")); // f
    assert_eq!(face(&beta, 0).unwrap(), sq("1:(-,1,-,+)")); // εf

    // the shared second face of the two horn fillers
    assert_eq!(face(&names::omega(), 2).unwrap(), names::mu());
    assert_eq!(face(&names::tau(), 2).unwrap(), names::mu());

    // the splice triple
    let sa = sq("2:(+,1,2,-,+,2,+,1,2,1,+)");
    let sb = sq("2:(+,1,2,-,2,-,2,1,+,-,+)");
    let sc = segal_splice(&sa, &sb).unwrap();
    assert_eq!(sc, sq("4:(+,3,4,1,2,-,4,2,4,3,+,1,2,1,+)"));

    // the hammock grid
    let h = hammock_grid(&sq("3:(+,2,3,1,+,1,2,-)"));
    assert_eq!(
        h.render(),
        "+ + + + + + + -\n+ + + - + - + -\n+ - + - + - - -\n+ - - - + - - -"
    );
    println!("ACCEPTANCE 1: PASS - golden paper figures match exactly");
}

#[test]
fn criterion_02_simplicial_action_laws() {
    let (max_dim, max_width) = (4usize, 8usize);
    let mut act_checks = 0usize;
    for dim in 0..=max_dim {
        // instances of the five identities landing in dimension `dim`
        let mut instances: Vec<(SimplicialOperator, SimplicialOperator)> = Vec::new();
        let n = dim;
        if n >= 2 {
            // δ^j ∘ δ^i = δ^i ∘ δ^{j-1}, i < j, as maps [n-2] → [n]
            for j in 0..=n {
                for i in 0..j {
                    let lhs = SimplicialOperator::face(n, j)
                        .unwrap()
                        .compose(&SimplicialOperator::face(n - 1, i).unwrap())
                        .unwrap();
                    let rhs = SimplicialOperator::face(n, i)
                        .unwrap()
                        .compose(&SimplicialOperator::face(n - 1, j - 1).unwrap())
                        .unwrap();
                    instances.push((lhs, rhs));
                }
            }
        }
        // σ^j ∘ σ^i = σ^i ∘ σ^{j+1}, i <= j, [n+2] → [n]
        for j in 0..=n {
            for i in 0..=j {
                let lhs = SimplicialOperator::degeneracy(n, j)
                    .unwrap()
                    .compose(&SimplicialOperator::degeneracy(n + 1, i).unwrap())
                    .unwrap();
                let rhs = SimplicialOperator::degeneracy(n, i)
                    .unwrap()
                    .compose(&SimplicialOperator::degeneracy(n + 1, j + 1).unwrap())
                    .unwrap();
                instances.push((lhs, rhs));
            }
        }
        // σ^j ∘ δ^i in its three cases, [n] → [n] or [n] → [n] via [n+1]
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = SimplicialOperator::degeneracy(n, j)
                    .unwrap()
                    .compose(&SimplicialOperator::face(n + 1, i).unwrap())
                    .unwrap();
                let rhs = if i < j {
                    SimplicialOperator::face(n, i)
                        .unwrap()
                        .compose(&SimplicialOperator::degeneracy(n - 1, j - 1).unwrap())
                        .unwrap()
                } else if i == j || i == j + 1 {
                    SimplicialOperator::identity(n)
                } else {
                    SimplicialOperator::face(n, i - 1)
                        .unwrap()
                        .compose(&SimplicialOperator::degeneracy(n - 1, j).unwrap())
                        .unwrap()
                };
                instances.push((lhs, rhs));
            }
        }
        for (lhs, rhs) in &instances {
            assert_eq!(lhs, rhs, "operator identity fails at dim {dim}");
        }
        for (dom, cod) in HOM_PAIRS {
            for_each_hom(dom, cod, dim, max_width, |a| {
                for (lhs, rhs) in &instances {
                    assert_eq!(act(a, lhs).unwrap(), act(a, rhs).unwrap());
                    act_checks += 1;
                }
            });
        }
    }

    // act commutes with compose, over all pairs whose composite stays in
    // the width bound
    let mut compose_checks = 0usize;
    for dim in 0..=max_dim {
        for (mid, cod) in HOM_PAIRS {
            for wb in 1..max_width {
                for_each_hom(mid, cod, dim, wb, |b| {
                    if b.width() != wb {
                        return;
                    }
                    for dom in [Sign::Minus, Sign::Plus] {
                        for_each_hom(dom, mid, dim, max_width - wb, |a| {
                            let c = b.compose(a).unwrap();
                            for i in 0..=dim.max(1) - 1 {
                                if dim == 0 {
                                    break;
                                }
                                let d = SimplicialOperator::face(dim, i).unwrap();
                                assert_eq!(
                                    act(&c, &d).unwrap(),
                                    act(b, &d).unwrap().compose(&act(a, &d).unwrap()).unwrap()
                                );
                                compose_checks += 1;
                            }
                            let s = SimplicialOperator::degeneracy(dim, 0).unwrap();
                            assert_eq!(
                                act(&c, &s).unwrap(),
                                act(b, &s).unwrap().compose(&act(a, &s).unwrap()).unwrap()
                            );
                            compose_checks += 1;
                        });
                    }
                });
            }
        }
    }
    println!(
        "ACCEPTANCE 2: PASS - simplicial identities and compose-compatibility \
         (dim <= {max_dim}, width <= {max_width}; {act_checks} action checks, \
         {compose_checks} compose checks)"
    );
}

#[test]
fn criterion_03_reduction_confluence() {
    // every weakly undulating word of width <= 10 at dim <= 3 reaches a
    // single normal form under every deletion order
    fn normal_forms(
        word: &[Level],
        memo: &mut HashMap<Vec<Level>, Vec<Level>>,
    ) -> Vec<Level> {
        if let Some(nf) = memo.get(word) {
            return nf.clone();
        }
        let mut positions = Vec::new();
        for i in 0..word.len().saturating_sub(1) {
            if word[i] == word[i + 1] {
                positions.push(i);
            }
        }
        let nf = if positions.is_empty() {
            word.to_vec()
        } else {
            let mut results: Vec<Vec<Level>> = positions
                .into_iter()
                .map(|i| {
                    let mut w = word.to_vec();
                    w.drain(i..=i + 1);
                    normal_forms(&w, memo)
                })
                .collect();
            results.dedup();
            assert_eq!(results.len(), 1, "non-confluent word {word:?}");
            results.pop().unwrap()
        };
        memo.insert(word.to_vec(), nf.clone());
        nf
    }

    let mut memo = HashMap::new();
    let mut words = 0usize;
    for dim in 0..=3usize {
        let top = (dim + 1) as Level;
        // depth-first over weakly undulating words with sign endpoints
        let mut stack: Vec<Vec<Level>> = vec![vec![0], vec![top]];
        while let Some(w) = stack.pop() {
            let last = *w.last().unwrap();
            if last == 0 || last == top {
                words += 1;
                let nf = normal_forms(&w, &mut memo);
                assert_eq!(nf, reduce_levels(w.clone()));
            }
            if w.len() == 11 {
                continue;
            }
            let starts_minus = w[0] == 0;
            let rising = ((w.len() - 1) % 2 == 0) == starts_minus;
            let range: Vec<Level> = if rising {
                (last..=top).collect()
            } else {
                (0..=last).collect()
            };
            for next in range {
                let mut ext = w.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    println!(
        "ACCEPTANCE 3: PASS - reduction confluent on {words} undulating words \
         (dim <= 3, width <= 10, all deletion orders)"
    );
}

#[test]
fn criterion_04_segal_condition() {
    let max_width = 6;
    let mut pairs = 0usize;
    for (dom, cod) in HOM_PAIRS {
        for n in 1..=2usize {
            for m in 1..=2usize {
                let report = segal_check(dom, cod, n, m, max_width);
                assert!(
                    report.passed,
                    "hom({dom},{cod}) n={n} m={m}: {:?}",
                    report.violations
                );
                pairs += report.pairs_checked;
            }
        }
    }
    println!(
        "ACCEPTANCE 4: PASS - Segal condition on all four hom-spaces, \
         (n,m) in {{1,2}}^2, width <= {max_width} ({pairs} pairs, uniqueness by scan)"
    );
}

#[test]
fn criterion_05_computad_axioms() {
    let (max_dim, max_width) = (2usize, 6usize);
    let mut decomposed = 0usize;
    for a in all_squiggles(max_dim, max_width) {
        if a.is_identity() {
            continue;
        }
        // unique atomic decomposition: factors atomic, recompose, and the
        // factor count is forced by the interior signs
        let parts = atomic_decompose(&a).unwrap();
        assert!(parts.iter().all(|p| p.is_atomic()));
        let mut recomposed = parts[0].clone();
        for p in &parts[1..] {
            recomposed = recomposed.compose(p).unwrap();
        }
        assert_eq!(recomposed, a);
        let top = (a.dim() + 1) as Level;
        let interior_signs = a.levels()[1..a.levels().len() - 1]
            .iter()
            .filter(|&&l| l == 0 || l == top)
            .count();
        assert_eq!(parts.len(), interior_signs + 1);

        // normal form round trips
        let nf = normal_form(&a).unwrap();
        assert_eq!(nf.recompose(), a);
        for (core, sigma) in &nf.factors {
            assert!(core.is_atomic() && core.is_nondegenerate());
            assert!(sigma.is_surjective());
        }
        decomposed += 1;

        // degeneracies of atomics are atomic
        if a.is_atomic() {
            for i in 0..=a.dim() {
                let d = cohadj::ops::degenerate(&a, i).unwrap();
                assert!(d.is_atomic());
            }
        }
    }
    println!(
        "ACCEPTANCE 5: PASS - computad axioms (unique decomposition, degeneracy \
         closure, normal forms) on {decomposed} arrows (dim <= {max_dim}, width <= {max_width})"
    );
}

#[test]
fn criterion_06_atomic_census() {
    let census = |dim: usize, width: usize| -> Vec<Squiggle> {
        let mut out = Vec::new();
        for (dom, cod) in HOM_PAIRS {
            for_each_hom(dom, cod, dim, width, |a| {
                if a.width() == width && a.is_atomic() && a.is_nondegenerate() {
                    out.push(a.clone());
                }
            });
        }
        out
    };
    assert_eq!(census(0, 1).len(), 2); // f and u
    assert_eq!(census(1, 2).len(), 2); // η and ε
    for w in 3..=8usize {
        let found = census(2, w);
        assert_eq!(found.len(), 2, "dim 2 width {w}: {found:?}");
    }
    println!(
        "ACCEPTANCE 6: PASS - atomic census: 2 at dim 0, 2 at dim 1, \
         2 per width 3..=8 at dim 2 (the two families)"
    );
}

#[test]
fn criterion_07_fillable_machinery() {
    // parent/child mutual inverses, exhaustively (parents reach dim 3 and
    // width 7 from children at dim <= 2, width <= 6)
    let mut children = 0usize;
    for a in all_squiggles(2, 6) {
        if !a.is_atomic() || a.is_degenerate() || is_fillable(&a) {
            continue;
        }
        let parent = fillable_parent(&a).unwrap();
        assert!(is_fillable(&parent));
        assert!(parent.dim() <= 3 && parent.width() <= 7);
        assert_eq!(distinguished_face(&parent).unwrap(), a);
        children += 1;
    }
    let mut fillables = 0usize;
    for b in all_squiggles(3, 7) {
        if b.dim() == 0 || !is_fillable(&b) {
            continue;
        }
        let child = distinguished_face(&b).unwrap();
        assert!(child.is_atomic() && child.is_nondegenerate() && !is_fillable(&child));
        assert_eq!(fillable_parent(&child).unwrap(), b);
        fillables += 1;
    }

    // the two-parent property for codomain-minus nonfillables, by search
    let mut two_parent_checks = 0usize;
    for a in all_squiggles(2, 6) {
        if !a.is_atomic() || a.is_degenerate() || is_fillable(&a) || a.cod() != Sign::Minus {
            continue;
        }
        let n = a.dim();
        let k = a.levels()[1] as usize;
        let mut found = Vec::new();
        for (dom, cod) in HOM_PAIRS {
            for_each_hom(dom, cod, n + 1, a.width(), |b| {
                if b.width() == a.width() && is_fillable(b) && face(b, k).unwrap() == a {
                    found.push(b.clone());
                }
            });
        }
        let mut depths: Vec<usize> = found
            .iter()
            .map(|b| classify(b).depth.unwrap())
            .collect();
        depths.sort_unstable();
        assert_eq!(found.len(), 2, "{}", render(&a));
        assert_eq!(depths, vec![k, k + 1]);
        two_parent_checks += 1;
    }

    // generated subcomputads match the worked examples exactly
    let trunc = Truncation::new(4, 8);
    let atoms = |gens: &[Squiggle]| -> BTreeSet<Squiggle> {
        Subcomputad::generate(gens, trunc).unwrap().atoms().clone()
    };
    assert_eq!(
        atoms(&[names::eps()]),
        [names::f(), names::u(), names::eps()].into_iter().collect()
    );
    assert_eq!(
        atoms(&[names::beta()]),
        [names::f(), names::u(), names::eps(), names::eta(), names::beta()]
            .into_iter()
            .collect()
    );
    assert_eq!(
        atoms(&[names::omega(), names::tau()]),
        [
            names::f(),
            names::u(),
            names::eps(),
            names::eta(),
            names::beta(),
            names::alpha(),
            names::tau(),
            names::omega(),
            names::mu()
        ]
        .into_iter()
        .collect()
    );
    assert!(is_parental(&Subcomputad::generate(&[names::f()], trunc).unwrap()).parental);

    // the filtration of gen{β} ⊆ gen{ω,τ} with verified certificates
    let inner = Subcomputad::generate(&[names::beta()], trunc).unwrap();
    let outer = Subcomputad::generate(&[names::omega(), names::tau()], trunc).unwrap();
    let report = filtration(&inner, &outer, trunc).unwrap();
    let triples: Vec<_> = report.stages.iter().map(|s| s.triple).collect();
    assert_eq!(triples, vec![(4, 2, 3), (4, 3, 3)]);
    assert_eq!(report.stages[0].certificates[0].kind, CellKind::Type2 { n: 3, k: 2 });
    assert_eq!(report.stages[1].certificates[0].kind, CellKind::Type3 { n: 3 });
    // replay: every certificate face is a member of the stage base
    let mut base = inner.clone();
    for stage in &report.stages {
        for cert in &stage.certificates {
            for face_text in cert.attaching_faces.values() {
                assert!(base.contains(&parse(face_text).unwrap()));
            }
        }
        let arrows: Vec<Squiggle> = stage.arrows.iter().map(|t| parse(t).unwrap()).collect();
        base = base.union_with(&arrows).unwrap();
    }
    assert_eq!(base.atoms(), outer.atoms());

    println!(
        "ACCEPTANCE 7: PASS - fillable machinery: {children} children and \
         {fillables} fillables invert, two-parent property on {two_parent_checks} \
         arrows, worked subcomputads and the (4,2,3)->(4,3,3) filtration verified"
    );
}

#[test]
fn criterion_08_bridge_isomorphism() {
    let (max_dim, max_width) = (2usize, 6usize);
    // functor: preserves composition
    let mut compose_checks = 0usize;
    for dim in 0..=max_dim {
        for (mid, cod) in HOM_PAIRS {
            for wb in 1..max_width {
                for_each_hom(mid, cod, dim, wb, |b| {
                    if b.width() != wb {
                        return;
                    }
                    for dom in [Sign::Minus, Sign::Plus] {
                        for_each_hom(dom, mid, dim, max_width - wb, |a| {
                            let c = b.compose(a).unwrap();
                            let lhs = squiggle_to_ss(&c);
                            let rhs = ss_compose(&squiggle_to_ss(b), &squiggle_to_ss(a)).unwrap();
                            assert_eq!(lhs, rhs, "{} o {}", render(b), render(a));
                            compose_checks += 1;
                        });
                    }
                });
            }
        }
    }
    // functor: preserves the simplicial action
    let mut act_checks = 0usize;
    for a in all_squiggles(max_dim, max_width) {
        let chain = squiggle_to_ss(&a);
        if a.dim() > 0 {
            for i in 0..=a.dim() {
                let d = SimplicialOperator::face(a.dim(), i).unwrap();
                assert_eq!(squiggle_to_ss(&act(&a, &d).unwrap()), ss_act(&chain, &d).unwrap());
                act_checks += 1;
            }
        }
        for i in 0..=a.dim() {
            let s = SimplicialOperator::degeneracy(a.dim(), i).unwrap();
            assert_eq!(squiggle_to_ss(&act(&a, &s).unwrap()), ss_act(&chain, &s).unwrap());
            act_checks += 1;
        }
    }
    // bijective onto the bounded nerve: injective, and the two round trips
    let mut arrows = 0usize;
    for (dom, cod) in HOM_PAIRS {
        for dim in 0..=max_dim {
            let table = enumerate_hom(dom, cod, dim, max_width);
            let index = SsIndex::build(dom, cod, dim, max_width);
            assert_eq!(
                index.len(),
                table.dim(dim).len(),
                "translation collides on hom({dom},{cod}) dim {dim}"
            );
            for a in table.dim(dim) {
                assert_eq!(&ss_to_squiggle(&squiggle_to_ss(a), max_width).unwrap(), a);
                arrows += 1;
            }
        }
    }
    // composition transports to ordinal sum on the monad-side 0-arrows
    for_each_hom(Sign::Plus, Sign::Plus, 0, 4, |x| {
        for_each_hom(Sign::Plus, Sign::Plus, 0, 4, |y| {
            let sum = cohadj::bridge::ordinal_sum_objects(
                vertex_ordinal(x),
                vertex_ordinal(y),
            );
            assert_eq!(vertex_ordinal(&x.compose(y).unwrap()), sum);
        });
    });
    // transpose involutivity on operators of size <= 4
    let mut transposes = 0usize;
    for s in 0..=4i64 {
        for t in 0..=4i64 {
            for alpha in enumerate_operators(Ordinal(s), Ordinal(t)) {
                if alpha.is_top_preserving() {
                    let l = adjoint_transpose(TransposeSide::Left, &alpha).unwrap();
                    assert_eq!(adjoint_transpose(TransposeSide::Right, &l).unwrap(), alpha);
                    transposes += 1;
                }
                if alpha.is_bottom_preserving() {
                    let r = adjoint_transpose(TransposeSide::Right, &alpha).unwrap();
                    assert_eq!(adjoint_transpose(TransposeSide::Left, &r).unwrap(), alpha);
                    transposes += 1;
                }
            }
        }
    }
    // ordinal sum strictly associative on all operators of size <= 3
    let mut small = Vec::new();
    for s in -1..=3i64 {
        for t in -1..=3i64 {
            small.extend(enumerate_operators(Ordinal(s), Ordinal(t)));
        }
    }
    for a in small.iter().take(40) {
        for b in small.iter().take(40) {
            for c in small.iter().take(40) {
                assert_eq!(ordinal_sum(&ordinal_sum(a, b), c), ordinal_sum(a, &ordinal_sum(b, c)));
            }
        }
    }
    println!(
        "ACCEPTANCE 8: PASS - ordinal bridge: {compose_checks} compose and \
         {act_checks} action transports, bijective on {arrows} arrows \
         (dim <= {max_dim}, width <= {max_width}), {transposes} transpose round trips"
    );
}

#[test]
fn criterion_09_coequalizer_lemma() {
    for k in 0..=2usize {
        let bound = 3;
        let report = coequalizer_check(k, bound);
        assert!(report.passed, "{report:?}");
        if k == 0 {
            assert_eq!(report.k0_image_is_all_small_ordinals, Some(true));
        }
    }
    println!(
        "ACCEPTANCE 9: PASS - action coequalizer bijective with the opposite \
         nerve at k <= 2, ordinal bound 3"
    );
}

#[test]
fn criterion_10_weights() {
    let trunc = Truncation::new(3, 8);
    let wminus = build_weight(WeightKind::WMinus, trunc);
    let cert = relative_computad_check(&Inclusion::MndIntoCollage(wminus), trunc).unwrap();
    assert!(cert.arrows_checked > 0);

    let cert2 = relative_computad_check(&Inclusion::WPlusIntoWMinus, trunc).unwrap();
    assert_eq!(cert2.vertex_surjective, Some(true));
    assert!(cert2.cells[0].1.is_empty()); // no new vertices

    // negative control: a weight with a missing boundary cell
    let broken = custom_weight(
        "broken",
        (Sign::Minus, Sign::Plus),
        vec![sq("1:(+,-,1,-)")],
        trunc,
    );
    let err = relative_computad_check(&Inclusion::MndIntoCollage(broken), trunc).unwrap_err();
    assert!(err.witness.contains("0:(+,-)"));
    println!(
        "ACCEPTANCE 10: PASS - cofibrancy certificates at dim <= 3, width <= 8 \
         (Mnd into coll W-, W+ into W- with vertex surjectivity, broken weight refused)"
    );
}

#[test]
fn criterion_11_monad_lab() {
    let trunc = Truncation::new(3, 6);
    let monads: Vec<(&str, FinMonad)> = vec![
        ("identity on 2", FinMonad::identity(FinCategory::chain(2))),
        (
            "closure on 2",
            FinMonad::closure_on_poset(FinCategory::chain(2), &[1, 1]),
        ),
        (
            "closure on 3",
            FinMonad::closure_on_poset(FinCategory::chain(3), &[1, 1, 2]),
        ),
    ];
    for (name, m) in &monads {
        assert!(m.check_laws().passed(), "{name}");
        let em = eilenberg_moore(m).unwrap();
        // triangle identities of f^t ⊣ u^t
        assert!(em.adjunction.check_laws().passed(), "{name}");
        // u^t ∘ f^t = t
        let t_again = em.adjunction.f.then(&em.adjunction.u);
        assert_eq!(t_again.obj_map, m.t.obj_map, "{name}");
        assert_eq!(t_again.mor_map, m.t.mor_map, "{name}");
        // conservativity
        let cons = conservativity_check(&em.category, &m.base, &em.adjunction.u);
        assert!(cons.conservative, "{name}: {:?}", cons.witnesses);
        // cones at summits 0..2 with the stabilisation probe, versus EM
        let report = compare_em(m, &em, trunc).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.mismatch);
        // the canonical resolution recovers every algebra
        for &(b, beta) in &em.algebras {
            let r = canonical_resolution(
                m,
                &em,
                m.base.object_name(b),
                &m.base.morphism(beta).id.clone(),
                3,
            )
            .unwrap();
            assert!(r.simplicial_identities_hold, "{name}");
            assert!(r.split_coequalizer_identities_hold, "{name}");
            assert!(r.coequalizer_recovers_algebra, "{name}");
        }
    }
    println!(
        "ACCEPTANCE 11: PASS - monad lab on the identity and two closure monads \
         (EM vs cones bijective at summits 0..2 with probe, conservative, \
         triangles, split coequalizers; dim <= 3, width <= 6, probe +2)"
    );
}

#[test]
fn criterion_12_round_trips() {
    let (max_dim, max_width) = (2usize, 6usize);
    let mut texts = 0usize;
    let mut chains = 0usize;
    for a in all_squiggles(max_dim, max_width) {
        assert_eq!(parse(&render(&a)).unwrap(), a);
        texts += 1;
        assert_eq!(ss_to_squiggle(&squiggle_to_ss(&a), max_width).unwrap(), a);
        chains += 1;
    }
    // operator text round trips
    for n in 0..=4usize {
        for i in 0..=n {
            let d = SimplicialOperator::face(n.max(1), i.min(n.max(1))).unwrap();
            assert_eq!(SimplicialOperator::parse(&d.render()).unwrap(), d);
        }
    }
    println!(
        "ACCEPTANCE 12: PASS - codec and bridge round trips on {texts} texts \
         and {chains} chains (dim <= {max_dim}, width <= {max_width})"
    );
}

#[test]
fn bounds_are_exact_for_validation_against_brute_force() {
    // validate accepts exactly the brute-force filtered words at dim <= 3,
    // width <= 6
    for dim in 0..=3usize {
        let top = (dim + 1) as Level;
        let mut accepted = 0usize;
        let mut enumerated = 0usize;
        // brute force over all words
        fn words(len: usize, top: Level) -> Vec<Vec<Level>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for w in words(len - 1, top) {
                for l in 0..=top {
                    let mut v = w.clone();
                    v.push(l);
                    out.push(v);
                }
            }
            out
        }
        for len in 1..=7usize {
            for w in words(len, top) {
                let brute = {
                    let last = w.len() - 1;
                    let endpoints = (w[0] == 0 || w[0] == top) && (w[last] == 0 || w[last] == top);
                    let mut undulates = true;
                    let starts_minus = w[0] == 0;
                    for i in 0..last {
                        let rising = (i % 2 == 0) == starts_minus;
                        if rising && w[i] >= w[i + 1] {
                            undulates = false;
                        }
                        if !rising && w[i] <= w[i + 1] {
                            undulates = false;
                        }
                    }
                    endpoints && undulates
                };
                let parsed = Squiggle::from_levels(dim, w.clone()).is_ok();
                assert_eq!(brute, parsed, "{w:?} at dim {dim}");
                if parsed {
                    accepted += 1;
                }
                enumerated += 1;
            }
        }
        // and the enumerator agrees with the count of accepted words
        let mut streamed = 0usize;
        for (dom, cod) in HOM_PAIRS {
            for_each_hom(dom, cod, dim, 6, |_| streamed += 1);
        }
        assert_eq!(streamed, accepted, "dim {dim} ({enumerated} words scanned)");
    }
}

/// The first of the two families of dimension-2 atomics: starts at `+`,
/// alternates between 1 and 2 for `n` steps, ends at `-` for even `n` and
/// `+` for odd.
fn alpha_family(n: usize) -> Squiggle {
    let mut word: Vec<Level> = vec![3];
    for k in 0..n {
        word.push(if k % 2 == 0 { 1 } else { 2 });
    }
    word.push(if n % 2 == 0 { 0 } else { 3 });
    Squiggle::from_levels(2, word).unwrap()
}

/// Reflection through the horizontal axis, the symmetry swapping the two
/// families.
fn reflect(a: &Squiggle) -> Squiggle {
    let top = (a.dim() + 1) as Level;
    Squiggle::from_levels(a.dim(), a.levels().iter().map(|&l| top - l).collect()).unwrap()
}

#[test]
fn the_two_families_and_their_face_formulas() {
    // sanity: the family starts at the first triangle witness
    assert_eq!(alpha_family(2), names::alpha());
    assert_eq!(reflect(&names::alpha()), names::beta());

    let eta_power = |r: usize| -> Squiggle {
        let mut p = names::eta();
        for _ in 1..r {
            p = p.compose(&names::eta()).unwrap();
        }
        p
    };
    let eps_power = |r: usize| -> Squiggle {
        let mut p = names::eps();
        for _ in 1..r {
            p = p.compose(&names::eps()).unwrap();
        }
        p
    };
    let append_u = |a: &Squiggle| {
        a.whisker(cohadj::squiggle::Side::Right, cohadj::squiggle::Generator::U)
            .unwrap()
    };
    let append_f = |a: &Squiggle| {
        a.whisker(cohadj::squiggle::Side::Right, cohadj::squiggle::Generator::F)
            .unwrap()
    };
    let prepend_u = |a: &Squiggle| {
        a.whisker(cohadj::squiggle::Side::Left, cohadj::squiggle::Generator::U)
            .unwrap()
    };
    let u1 = sq("1:(+,-)");

    for r in 1..=3usize {
        // even member: faces η^r u, u, u ε^r
        let even = alpha_family(2 * r);
        assert!(even.is_atomic() && even.is_nondegenerate());
        assert_eq!(face(&even, 2).unwrap(), append_u(&eta_power(r)));
        assert_eq!(face(&even, 1).unwrap(), u1);
        assert_eq!(face(&even, 0).unwrap(), prepend_u(&eps_power(r)));
        // odd member: faces η^{r+1}, η, u ε^r f
        let odd = alpha_family(2 * r + 1);
        assert_eq!(face(&odd, 2).unwrap(), eta_power(r + 1));
        assert_eq!(face(&odd, 1).unwrap(), names::eta());
        assert_eq!(face(&odd, 0).unwrap(), append_f(&prepend_u(&eps_power(r))));
    }

    // reflection conjugates the action by reversing the line order, so the
    // second family's face tables follow from the first's
    for a in all_squiggles(3, 6) {
        if a.dim() == 0 {
            continue;
        }
        for i in 0..=a.dim() {
            assert_eq!(
                face(&reflect(&a), i).unwrap(),
                reflect(&face(&a, a.dim() - i).unwrap())
            );
        }
    }
    // spot check the dual formula: the even reflected member has second
    // face f η^r
    let prepend_f = |a: &Squiggle| {
        a.whisker(cohadj::squiggle::Side::Left, cohadj::squiggle::Generator::F)
            .unwrap()
    };
    assert_eq!(
        face(&reflect(&alpha_family(4)), 2).unwrap(),
        prepend_f(&eta_power(2))
    );
}

#[test]
fn degeneracies_inject_and_faces_drop_width_evenly() {
    for a in all_squiggles(3, 7) {
        for i in 0..=a.dim() {
            let d = cohadj::ops::degenerate(&a, i).unwrap();
            assert_eq!(d.width(), a.width(), "degeneracies never reduce");
        }
        if a.dim() > 0 {
            for i in 0..=a.dim() {
                let f = face(&a, i).unwrap();
                assert_eq!((a.width() - f.width()) % 2, 0, "{}", render(&a));
            }
        }
    }
}

#[test]
fn interval_rep_is_contravariantly_functorial_up_to_five() {
    fn all_ops(src: usize, tgt: usize) -> Vec<SimplicialOperator> {
        fn go(src: usize, tgt: usize, prefix: &mut Vec<usize>, out: &mut Vec<SimplicialOperator>) {
            if prefix.len() == src + 1 {
                out.push(SimplicialOperator::new(src, tgt, prefix.clone()).unwrap());
                return;
            }
            let lo = prefix.last().copied().unwrap_or(0);
            for v in lo..=tgt {
                prefix.push(v);
                go(src, tgt, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(src, tgt, &mut Vec::new(), &mut out);
        out
    }
    let mut checked = 0usize;
    for m in 0..=5usize {
        for k in 0..=5usize {
            let alphas = all_ops(m, k);
            for n in 0..=5usize {
                let betas = all_ops(k, n);
                for beta in &betas {
                    let ir_beta = beta.interval_rep();
                    for alpha in &alphas {
                        let lhs = beta.compose(alpha).unwrap().interval_rep();
                        let rhs = alpha
                            .interval_rep()
                            .as_operator()
                            .compose(ir_beta.as_operator())
                            .unwrap();
                        assert_eq!(lhs.as_operator(), &rhs);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100_000);
}

#[test]
fn ordinal_sum_of_bottom_and_top_preserving_is_interval() {
    for s in 0..=3i64 {
        for t in 0..=3i64 {
            for h in enumerate_operators(Ordinal(s), Ordinal(t)) {
                if !h.is_bottom_preserving() {
                    continue;
                }
                for s2 in 0..=3i64 {
                    for t2 in 0..=3i64 {
                        for g in enumerate_operators(Ordinal(s2), Ordinal(t2)) {
                            if g.is_top_preserving() {
                                assert!(ordinal_sum(&h, &g).is_interval());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cofibrancy_certificates_are_stable_under_raising_bounds() {
    // the cell lists at smaller truncations are prefixes of those at the
    // larger ones
    let mut previous: Option<Vec<(usize, Vec<String>)>> = None;
    for width in [4usize, 6, 8] {
        let trunc = Truncation::new(3, width);
        let w = build_weight(WeightKind::WMinus, trunc);
        let cert = relative_computad_check(&Inclusion::MndIntoCollage(w), trunc).unwrap();
        if let Some(prev) = &previous {
            for (d, cells) in prev {
                for c in cells {
                    assert!(cert.cells[*d].1.contains(c), "cell {c} lost at width {width}");
                }
            }
        }
        previous = Some(cert.cells);
    }
}

#[test]
fn core_values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Squiggle>();
    assert_send_sync::<SimplicialOperator>();
    assert_send_sync::<Subcomputad>();
    assert_send_sync::<cohadj::computad::HomTable>();
    assert_send_sync::<cohadj::bridge::SSArrow>();
    assert_send_sync::<cohadj::monad::WeightPresentation>();
    assert_send_sync::<FinMonad>();
}

#[test]
fn hammock_and_decomposition_cross_checks() {
    // hammock interior columns of atomic arrows flip exactly once, and the
    // interior column count equals the undulation count
    for a in all_squiggles(3, 6) {
        let g = hammock_grid(&a);
        assert_eq!(g.cols(), a.width() + 1);
        if a.is_atomic() {
            for c in 1..g.cols() - 1 {
                assert_eq!(g.column_flips(c), 1, "{}", render(&a));
            }
        }
        // vertex widths equal crossing counts
        for j in 0..=a.dim() {
            assert_eq!(
                crossing_count(&a, j).unwrap(),
                vertex(&a, j).unwrap().width()
            );
        }
        // EZ: the stripped core restores the arrow
        let (core, sigma) = strip_degeneracies(&a);
        assert!(core.is_nondegenerate());
        assert_eq!(act(&core, &sigma).unwrap(), a);
    }
}

#[test]
fn homotopy_category_composition_matches_ordinal_sum() {
    // on the monad-side homotopy category, composition of 1-arrows
    // transports along the bridge to composition of chains
    let table = enumerate_hom(Sign::Plus, Sign::Plus, 2, 4);
    let h = cohadj::computad::homotopy_category(&table).unwrap();
    let mut checked = 0usize;
    for ((g, f), c) in &h.compose {
        if let cohadj::computad::Composite::Arrow(gf) = c {
            let lhs = squiggle_to_ss(gf);
            // vertical composition in the nerve: splice then middle face
            let expected = {
                let w = segal_splice(f, g).unwrap();
                let middle = SimplicialOperator::select(2, &[0, 2]).unwrap();
                squiggle_to_ss(&act(&w, &middle).unwrap())
            };
            assert_eq!(lhs, expected);
            // the chain composite: compose the two underlying operators
            let cf = squiggle_to_ss(f);
            let cg = squiggle_to_ss(g);
            let composite_map = cg.maps()[0].compose(&cf.maps()[0]).unwrap();
            assert_eq!(lhs.maps()[0], composite_map);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn subcomputad_closure_flags_out_of_bound_generators() {
    let err = Subcomputad::generate(&[names::omega()], Truncation::new(2, 8)).unwrap_err();
    assert!(matches!(
        err,
        cohadj::computad::SubcomputadError::TruncationTooSmall(_)
    ));
    // and filtration demands one extra width to see parents
    let trunc = Truncation::new(4, 4);
    let inner = Subcomputad::generate(&[names::beta()], trunc).unwrap();
    let outer = Subcomputad::generate(&[names::omega(), names::tau()], trunc).unwrap();
    assert!(matches!(
        filtration(&inner, &outer, trunc),
        Err(cohadj::fillable::FiltrationError::TruncationTooSmall(_))
    ));
}

#[test]
fn cell_certificates_store_replayable_faces() {
    let trunc = Truncation::new(4, 8);
    let base = Subcomputad::generate(&[names::beta()], trunc).unwrap();
    let cert = cell_certificate(&names::tau(), &base).unwrap();
    let faces: BTreeMap<usize, Squiggle> = cert
        .attaching_faces
        .iter()
        .map(|(&i, t)| (i, parse(t).unwrap()))
        .collect();
    for (i, f) in &faces {
        assert_eq!(&face(&names::tau(), *i).unwrap(), f);
    }
}
