//! The ordinal-sum presentation of the free adjunction and its translation
//! to and from the squiggle calculus.
//!
//! The four hom-categories are the augmented simplex category, its opposite,
//! and the top- and bottom-preserving subcategories of the simplex category;
//! composition is ordinal sum, with the two cross cases routed through the
//! inverse of the interval representation. Arrows of the simplicial category
//! are chains (nerve simplices) in these hom-categories.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::computad::{atomic_decompose, enumerate_hom};
use crate::ops::crossing_count;
use crate::squiggle::{Level, Sign, Squiggle};

/// The ordinal `[n]`; `[-1]` is the empty ordinal, the unit of ordinal sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal(pub i64);

impl Ordinal {
    pub fn size(self) -> usize {
        (self.0 + 1) as usize
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("malformed operator")]
    Malformed,
    #[error("operators not composable")]
    NotComposable,
    #[error("operator is not in the required subcategory")]
    NotInSubcategory,
    #[error("chains not composable: endpoints or dimensions differ")]
    ChainMismatch,
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("no squiggle within width bound {0} realises the chain")]
    NotFoundWithinBound(usize),
}

/// A monotone map between ordinals of the augmented simplex category;
/// the source may be `[-1]`, in which case the value list is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlusOperator {
    src: Ordinal,
    tgt: Ordinal,
    values: Vec<i64>,
}

impl PlusOperator {
    pub fn new(src: Ordinal, tgt: Ordinal, values: Vec<i64>) -> Result<Self, BridgeError> {
        if src.0 < -1 || tgt.0 < -1 {
            return Err(BridgeError::Malformed);
        }
        if values.len() != src.size() {
            return Err(BridgeError::Malformed);
        }
        if src.0 >= 0 && tgt.0 < 0 {
            return Err(BridgeError::Malformed);
        }
        if values.iter().any(|&v| v < 0 || v > tgt.0) {
            return Err(BridgeError::Malformed);
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(BridgeError::Malformed);
        }
        Ok(PlusOperator { src, tgt, values })
    }

    pub fn identity(n: Ordinal) -> Self {
        PlusOperator {
            src: n,
            tgt: n,
            values: (0..=n.0).collect(),
        }
    }

    /// The coface `δ^i: [n-1] → [n]` of the augmented simplex category;
    /// `δ⁰: [-1] → [0]` is the empty map.
    pub fn coface(n: i64, i: i64) -> Result<Self, BridgeError> {
        if n < 0 || i < 0 || i > n {
            return Err(BridgeError::Malformed);
        }
        let values = (0..=n).filter(|&v| v != i).collect();
        Ok(PlusOperator {
            src: Ordinal(n - 1),
            tgt: Ordinal(n),
            values,
        })
    }

    /// The codegeneracy `σ^i: [n+1] → [n]`, repeating `i`.
    pub fn codegeneracy(n: i64, i: i64) -> Result<Self, BridgeError> {
        if n < 0 || i < 0 || i > n {
            return Err(BridgeError::Malformed);
        }
        let mut values: Vec<i64> = (0..=i).collect();
        values.extend(i..=n);
        Ok(PlusOperator {
            src: Ordinal(n + 1),
            tgt: Ordinal(n),
            values,
        })
    }

    pub fn src(&self) -> Ordinal {
        self.src
    }

    pub fn tgt(&self) -> Ordinal {
        self.tgt
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.values.iter().enumerate().all(|(i, &v)| v == i as i64)
    }

    pub fn compose(&self, other: &PlusOperator) -> Result<Self, BridgeError> {
        if self.src != other.tgt {
            return Err(BridgeError::NotComposable);
        }
        let values = other
            .values
            .iter()
            .map(|&v| self.values[v as usize])
            .collect();
        Ok(PlusOperator {
            src: other.src,
            tgt: self.tgt,
            values,
        })
    }

    /// Preserves the top element; vacuously false when an ordinal is empty.
    pub fn is_top_preserving(&self) -> bool {
        self.src.0 >= 0 && self.tgt.0 >= 0 && *self.values.last().unwrap() == self.tgt.0
    }

    /// Preserves the bottom element.
    pub fn is_bottom_preserving(&self) -> bool {
        self.src.0 >= 0 && self.tgt.0 >= 0 && self.values[0] == 0
    }

    pub fn is_interval(&self) -> bool {
        self.is_top_preserving() && self.is_bottom_preserving()
    }

    /// Text form `[m->n: v0 v1 … vm]`, reusing the operator grammar with
    /// `m, n >= -1`.
    pub fn render(&self) -> String {
        if self.values.is_empty() {
            format!("[{}->{}:]", self.src.0, self.tgt.0)
        } else {
            let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            format!("[{}->{}: {}]", self.src.0, self.tgt.0, vals.join(" "))
        }
    }

    pub fn parse(text: &str) -> Result<Self, BridgeError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(BridgeError::Malformed)?;
        let (arrow, vals) = inner.split_once(':').ok_or(BridgeError::Malformed)?;
        let (src, tgt) = arrow.split_once("->").ok_or(BridgeError::Malformed)?;
        let src: i64 = src.trim().parse().map_err(|_| BridgeError::Malformed)?;
        let tgt: i64 = tgt.trim().parse().map_err(|_| BridgeError::Malformed)?;
        let values: Vec<i64> = vals
            .split_whitespace()
            .map(|v| v.parse().map_err(|_| BridgeError::Malformed))
            .collect::<Result<_, _>>()?;
        PlusOperator::new(Ordinal(src), Ordinal(tgt), values)
    }
}

/// The ordinal sum `α ⊕ β`, strictly associative with unit `[-1]`.
pub fn ordinal_sum(alpha: &PlusOperator, beta: &PlusOperator) -> PlusOperator {
    let n = alpha.src.0;
    let np = alpha.tgt.0;
    let m = beta.src.0;
    let mp = beta.tgt.0;
    let mut values = alpha.values.clone();
    values.extend(beta.values.iter().map(|&v| v + np + 1));
    PlusOperator {
        src: Ordinal(n + m + 1),
        tgt: Ordinal(np + mp + 1),
        values,
    }
}

pub fn ordinal_sum_objects(a: Ordinal, b: Ordinal) -> Ordinal {
    Ordinal(a.0 + b.0 + 1)
}

/// Which adjoint transpose to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransposeSide {
    Left,
    Right,
}

/// The contravariant adjoint transpose: left adjoints exist exactly for
/// top-preserving operators, right adjoints for bottom-preserving ones, and
/// the two are mutually inverse between those subcategories.
pub fn adjoint_transpose(
    side: TransposeSide,
    alpha: &PlusOperator,
) -> Result<PlusOperator, BridgeError> {
    match side {
        TransposeSide::Left => {
            if !alpha.is_top_preserving() {
                return Err(BridgeError::NotInSubcategory);
            }
            let values = (0..=alpha.tgt.0)
                .map(|j| {
                    alpha
                        .values
                        .iter()
                        .position(|&v| v >= j)
                        .expect("top-preserving maps attain the top") as i64
                })
                .collect();
            Ok(PlusOperator {
                src: alpha.tgt,
                tgt: alpha.src,
                values,
            })
        }
        TransposeSide::Right => {
            if !alpha.is_bottom_preserving() {
                return Err(BridgeError::NotInSubcategory);
            }
            let values = (0..=alpha.tgt.0)
                .map(|j| {
                    alpha
                        .values
                        .iter()
                        .rposition(|&v| v <= j)
                        .expect("bottom-preserving maps attain the bottom")
                        as i64
                })
                .collect();
            Ok(PlusOperator {
                src: alpha.tgt,
                tgt: alpha.src,
                values,
            })
        }
    }
}

/// Inverts the interval representation on a top-and-bottom-preserving
/// operator `γ: [a] → [b]`, producing the operator `[b-1] → [a-1]` whose
/// `ir` image is `γ`.
pub fn ir_inverse(gamma: &PlusOperator) -> Result<PlusOperator, BridgeError> {
    if !gamma.is_interval() {
        return Err(BridgeError::NotInSubcategory);
    }
    let values = (0..gamma.tgt.0)
        .map(|i| {
            (0..=gamma.src.0)
                .filter(|&j| gamma.values[j as usize] <= i)
                .max()
                .expect("interval maps hit 0")
        })
        .collect();
    Ok(PlusOperator {
        src: Ordinal(gamma.tgt.0 - 1),
        tgt: Ordinal(gamma.src.0 - 1),
        values,
    })
}

/// The interval representation on the ordinal side, mirroring
/// [`crate::ops::SimplicialOperator::interval_rep`].
pub fn ir(alpha: &PlusOperator) -> PlusOperator {
    let values = (0..=alpha.tgt.0 + 1)
        .map(|j| alpha.values.iter().filter(|&&v| v < j).count() as i64)
        .collect();
    PlusOperator {
        src: Ordinal(alpha.tgt.0 + 1),
        tgt: Ordinal(alpha.src.0 + 1),
        values,
    }
}

/// An arrow of the ordinal presentation: an `n`-simplex of the nerve of one
/// of the four hom-categories, stored as its object chain and the underlying
/// augmented-simplex operators of its `n` chain morphisms.
///
/// For the covariant homs the `i`-th map runs `objects[i] → objects[i+1]`;
/// for the endo-hom at `-`, which is the opposite category, the stored
/// operator runs `objects[i+1] → objects[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SSArrow {
    dom: Sign,
    cod: Sign,
    objects: Vec<Ordinal>,
    maps: Vec<PlusOperator>,
}

impl SSArrow {
    pub fn new(
        dom: Sign,
        cod: Sign,
        objects: Vec<Ordinal>,
        maps: Vec<PlusOperator>,
    ) -> Result<SSArrow, BridgeError> {
        if objects.is_empty() || maps.len() + 1 != objects.len() {
            return Err(BridgeError::MalformedChain("length mismatch".into()));
        }
        let cross = dom != cod;
        for o in &objects {
            if o.0 < -1 || (cross && o.0 < 0) {
                return Err(BridgeError::MalformedChain(format!(
                    "object {o} not in the hom-category"
                )));
            }
        }
        for (i, m) in maps.iter().enumerate() {
            let (s, t) = match (dom, cod) {
                (Sign::Minus, Sign::Minus) => (objects[i + 1], objects[i]),
                _ => (objects[i], objects[i + 1]),
            };
            if m.src() != s || m.tgt() != t {
                return Err(BridgeError::MalformedChain(format!(
                    "map {i} has endpoints {}->{}, expected {s}->{t}",
                    m.src(),
                    m.tgt()
                )));
            }
            let ok = match (dom, cod) {
                (Sign::Plus, Sign::Plus) | (Sign::Minus, Sign::Minus) => true,
                (Sign::Minus, Sign::Plus) => m.is_top_preserving(),
                (Sign::Plus, Sign::Minus) => m.is_bottom_preserving(),
            };
            if !ok {
                return Err(BridgeError::MalformedChain(format!(
                    "map {i} leaves the hom-subcategory"
                )));
            }
        }
        Ok(SSArrow {
            dom,
            cod,
            objects,
            maps,
        })
    }

    pub fn object(dom: Sign, cod: Sign, o: Ordinal) -> SSArrow {
        SSArrow::new(dom, cod, vec![o], vec![]).expect("singleton chain")
    }

    pub fn dom(&self) -> Sign {
        self.dom
    }

    pub fn cod(&self) -> Sign {
        self.cod
    }

    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn objects(&self) -> &[Ordinal] {
        &self.objects
    }

    pub fn maps(&self) -> &[PlusOperator] {
        &self.maps
    }

    /// The degenerate chain on an object, at the given dimension.
    pub fn degenerate_object(dom: Sign, cod: Sign, o: Ordinal, dim: usize) -> SSArrow {
        let objects = vec![o; dim + 1];
        let maps = vec![PlusOperator::identity(o); dim];
        SSArrow::new(dom, cod, objects, maps).expect("degenerate chain")
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "hom({},{}) {}: {}",
            self.dom,
            self.cod,
            self.dim(),
            self.objects[0]
        );
        for (i, m) in self.maps.iter().enumerate() {
            out.push_str(&format!(" -{}-> {}", m.render(), self.objects[i + 1]));
        }
        out
    }

    pub fn parse(text: &str) -> Result<SSArrow, BridgeError> {
        let t = text.trim();
        let rest = t.strip_prefix("hom(").ok_or(BridgeError::Malformed)?;
        let (pair, rest) = rest.split_once(')').ok_or(BridgeError::Malformed)?;
        let (d, c) = pair.split_once(',').ok_or(BridgeError::Malformed)?;
        let parse_sign = |s: &str| match s.trim() {
            "-" => Ok(Sign::Minus),
            "+" => Ok(Sign::Plus),
            _ => Err(BridgeError::Malformed),
        };
        let dom = parse_sign(d)?;
        let cod = parse_sign(c)?;
        let (dim_text, chain) = rest.split_once(':').ok_or(BridgeError::Malformed)?;
        let dim: usize = dim_text
            .trim()
            .parse()
            .map_err(|_| BridgeError::Malformed)?;
        // tokens alternate between bracketed objects and `-[...]->` operators
        let mut objects = Vec::new();
        let mut maps = Vec::new();
        let mut rest = chain.trim();
        loop {
            let close = rest.find(']').ok_or(BridgeError::Malformed)?;
            let token = &rest[..=close];
            if objects.len() == maps.len() {
                let o = token
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or(BridgeError::Malformed)?;
                objects.push(Ordinal(
                    o.trim().parse().map_err(|_| BridgeError::Malformed)?,
                ));
            } else {
                let t = token.strip_prefix('-').ok_or(BridgeError::Malformed)?;
                maps.push(PlusOperator::parse(t)?);
            }
            rest = rest[close + 1..].trim_start_matches("->").trim();
            if rest.is_empty() {
                break;
            }
        }
        if objects.len() != dim + 1 {
            return Err(BridgeError::MalformedChain("dimension mismatch".into()));
        }
        SSArrow::new(dom, cod, objects, maps)
    }
}

/// Horizontal composition `x ∘ y` in the ordinal presentation, computed
/// dimensionwise by the ordinal-sum variant appropriate to the hom-pair;
/// the two cross cases route through the inverse interval representation,
/// with the outer factor always the left summand.
pub fn ss_compose(x: &SSArrow, y: &SSArrow) -> Result<SSArrow, BridgeError> {
    if x.dom != y.cod || x.dim() != y.dim() {
        return Err(BridgeError::ChainMismatch);
    }
    let n = x.dim();
    let cross_through_ir = x.dom != x.cod && y.dom != y.cod;
    let objects: Vec<Ordinal> = (0..=n)
        .map(|i| {
            let sum = ordinal_sum_objects(x.objects[i], y.objects[i]);
            if cross_through_ir {
                Ordinal(sum.0 - 1)
            } else {
                sum
            }
        })
        .collect();
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let mx = &x.maps[i];
        let my = &y.maps[i];
        let m = match ((x.dom, x.cod), (y.dom, y.cod)) {
            // monad side with itself or acting on the top-preserving hom
            ((Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Plus))
            | ((Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Plus)) => ordinal_sum(mx, my),
            // comonad side with itself: stored maps are already reversed
            ((Sign::Minus, Sign::Minus), (Sign::Minus, Sign::Minus)) => ordinal_sum(mx, my),
            // bottom-preserving hom acted on by the monad side
            ((Sign::Plus, Sign::Minus), (Sign::Plus, Sign::Plus)) => ordinal_sum(mx, my),
            // top-preserving hom after the comonad side: transported through
            // the contravariant isomorphism with the bottom-preserving hom
            ((Sign::Minus, Sign::Plus), (Sign::Minus, Sign::Minus)) => {
                let xl = adjoint_transpose(TransposeSide::Left, mx)?;
                adjoint_transpose(TransposeSide::Right, &ordinal_sum(&xl, my))?
            }
            // comonad side after the bottom-preserving hom, dually
            ((Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus)) => {
                let yr = adjoint_transpose(TransposeSide::Right, my)?;
                adjoint_transpose(TransposeSide::Left, &ordinal_sum(mx, &yr))?
            }
            // cross case landing on the monad side
            ((Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Minus)) => {
                let xl = adjoint_transpose(TransposeSide::Left, mx)?;
                let yr = adjoint_transpose(TransposeSide::Right, my)?;
                ir_inverse(&ordinal_sum(&xl, &yr))?
            }
            // cross case landing on the comonad side; the flip of direction
            // performed by ir⁻¹ is exactly the reversed storage convention
            ((Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)) => {
                ir_inverse(&ordinal_sum(mx, my))?
            }
            _ => return Err(BridgeError::ChainMismatch),
        };
        maps.push(m);
    }
    SSArrow::new(y.dom, x.cod, objects, maps)
}

/// The right action of a simplicial operator on a nerve chain: reindex the
/// objects and compose the chain maps across each step.
pub fn ss_act(
    x: &SSArrow,
    op: &crate::ops::SimplicialOperator,
) -> Result<SSArrow, BridgeError> {
    if op.tgt() != x.dim() {
        return Err(BridgeError::ChainMismatch);
    }
    let objects: Vec<Ordinal> = op.values().iter().map(|&v| x.objects[v]).collect();
    let reversed = x.dom == Sign::Minus && x.cod == Sign::Minus;
    let mut maps = Vec::new();
    for w in op.values().windows(2) {
        let (a, b) = (w[0], w[1]);
        let m = if reversed {
            let mut acc = PlusOperator::identity(x.objects[b]);
            for step in (a..b).rev() {
                acc = x.maps[step].compose(&acc)?;
            }
            acc
        } else {
            let mut acc = PlusOperator::identity(x.objects[a]);
            for step in a..b {
                acc = x.maps[step].compose(&acc)?;
            }
            acc
        };
        maps.push(m);
    }
    SSArrow::new(x.dom, x.cod, objects, maps)
}

/// All monotone operators between two ordinals.
pub fn enumerate_operators(src: Ordinal, tgt: Ordinal) -> Vec<PlusOperator> {
    if src.0 == -1 {
        return vec![PlusOperator::new(src, tgt, vec![]).unwrap()];
    }
    if tgt.0 == -1 {
        return Vec::new();
    }
    fn go(src: Ordinal, tgt: Ordinal, prefix: &mut Vec<i64>, out: &mut Vec<PlusOperator>) {
        if prefix.len() == src.size() {
            out.push(PlusOperator::new(src, tgt, prefix.clone()).unwrap());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for v in lo..=tgt.0 {
            prefix.push(v);
            go(src, tgt, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(src, tgt, &mut Vec::new(), &mut out);
    out
}

/// All `k`-simplices of the nerve of one hom-category with every ordinal of
/// size at most `max_ordinal`.
pub fn enumerate_chains(dom: Sign, cod: Sign, k: usize, max_ordinal: i64) -> Vec<SSArrow> {
    let lo = if dom == cod { -1 } else { 0 };
    let mut objects_choices: Vec<Vec<Ordinal>> = vec![vec![]];
    for _ in 0..=k {
        let mut next = Vec::new();
        for partial in &objects_choices {
            for o in lo..=max_ordinal {
                let mut p = partial.clone();
                p.push(Ordinal(o));
                next.push(p);
            }
        }
        objects_choices = next;
    }
    let mut out = Vec::new();
    for objects in objects_choices {
        let mut partial: Vec<Vec<PlusOperator>> = vec![vec![]];
        for i in 0..k {
            let (s, t) = match (dom, cod) {
                (Sign::Minus, Sign::Minus) => (objects[i + 1], objects[i]),
                _ => (objects[i], objects[i + 1]),
            };
            let mut next = Vec::new();
            for maps in &partial {
                for m in enumerate_operators(s, t) {
                    let mut ms = maps.clone();
                    ms.push(m);
                    next.push(ms);
                }
            }
            partial = next;
        }
        for maps in partial {
            if let Ok(chain) = SSArrow::new(dom, cod, objects.clone(), maps) {
                out.push(chain);
            }
        }
    }
    out
}

/// Report of the action-coequalizer check: juxtaposing a bottom-preserving
/// chain with a top-preserving one, modulo transfers of middle factors,
/// lands bijectively in the chains of the unaugmented opposite simplex
/// category.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CoeqReport {
    pub k: usize,
    pub bound: i64,
    pub pairs: usize,
    pub classes: usize,
    pub targets_hit: usize,
    pub constant_on_classes: bool,
    pub injective_on_classes: bool,
    pub k0_image_is_all_small_ordinals: Option<bool>,
    pub subdivisions_identified: bool,
    pub passed: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.0[ri] = rj;
        }
    }
}

/// Enumerates `k`-simplices of the product of the two one-sided nerves with
/// ordinals of size at most `bound`, quotients by the middle action, and
/// verifies the juxtaposition map is a bijection from the classes onto the
/// chains it reaches, all of which lie in the unaugmented opposite nerve.
pub fn coequalizer_check(k: usize, bound: i64) -> CoeqReport {
    let h_chains = enumerate_chains(Sign::Plus, Sign::Minus, k, bound);
    let g_chains = enumerate_chains(Sign::Minus, Sign::Plus, k, bound);
    let g_len = g_chains.len();
    let pair_count = h_chains.len() * g_len;
    let pair_index = |hi: usize, gi: usize| hi * g_len + gi;
    let h_index: HashMap<&SSArrow, usize> =
        h_chains.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let g_index: HashMap<&SSArrow, usize> =
        g_chains.iter().enumerate().map(|(i, c)| (c, i)).collect();

    // transfers of a middle monad-side chain across the pair; composites
    // with each middle are computed once per side
    let mut uf = UnionFind::new(pair_count);
    let middles = enumerate_chains(Sign::Plus, Sign::Plus, k, bound);
    for x in &middles {
        let h_moves: Vec<(usize, usize)> = h_chains
            .iter()
            .enumerate()
            .filter_map(|(hi, h)| {
                let hx = ss_compose(h, x).ok()?;
                h_index.get(&hx).map(|&hxi| (hi, hxi))
            })
            .collect();
        let g_moves: Vec<(usize, usize)> = g_chains
            .iter()
            .enumerate()
            .filter_map(|(gi, g)| {
                let xg = ss_compose(x, g).ok()?;
                g_index.get(&xg).map(|&xgi| (gi, xgi))
            })
            .collect();
        for &(hi, hxi) in &h_moves {
            for &(gi, xgi) in &g_moves {
                uf.union(pair_index(hxi, gi), pair_index(hi, xgi));
            }
        }
    }

    let mut class_target: HashMap<usize, SSArrow> = HashMap::new();
    let mut constant = true;
    for hi in 0..h_chains.len() {
        for gi in 0..g_len {
            let n = pair_index(hi, gi);
            let root = uf.find(n);
            let j = ss_compose(&h_chains[hi], &g_chains[gi]).expect("cross compose");
            match class_target.get(&root) {
                None => {
                    class_target.insert(root, j);
                }
                Some(t) => {
                    if t != &j {
                        constant = false;
                    }
                }
            }
        }
    }
    let classes = class_target.len();
    let mut seen: HashMap<&SSArrow, usize> = HashMap::new();
    let mut injective = true;
    for t in class_target.values() {
        *seen.entry(t).or_insert(0) += 1;
    }
    for &count in seen.values() {
        if count > 1 {
            injective = false;
        }
    }
    let targets_hit = seen.len();

    // at summit dimension zero the image is exactly the ordinals up to twice
    // the bound
    let k0_image = if k == 0 {
        let mut sizes: Vec<i64> = class_target
            .values()
            .map(|t| t.objects()[0].0)
            .collect();
        sizes.sort_unstable();
        sizes.dedup();
        Some(sizes == (0..=2 * bound).collect::<Vec<_>>())
    } else {
        None
    };

    // two subdivisions of one squiggle through two bottom marks are already
    // identified: check on every comonad-side squiggle with at least two
    // interior occurrences of the bottom sign within a small width
    let mut subdivisions_ok = true;
    for dim in 0..=k.min(2) {
        crate::computad::for_each_hom(Sign::Minus, Sign::Minus, dim, 8, |s| {
            if dim != k {
                return;
            }
            let top = (s.dim() + 1) as Level;
            let marks: Vec<usize> = s
                .levels()
                .iter()
                .enumerate()
                .skip(1)
                .take(s.levels().len().saturating_sub(2))
                .filter(|(_, &l)| l == top)
                .map(|(i, _)| i)
                .collect();
            if marks.len() < 2 {
                return;
            }
            let mut class_roots = Vec::new();
            for &p in &marks {
                let left = Squiggle::from_levels(s.dim(), s.levels()[..=p].to_vec()).unwrap();
                let right = Squiggle::from_levels(s.dim(), s.levels()[p..].to_vec()).unwrap();
                let hc = squiggle_to_ss(&left);
                let gc = squiggle_to_ss(&right);
                if let (Some(&hi), Some(&gi)) = (h_index.get(&hc), g_index.get(&gc)) {
                    class_roots.push(uf.find(pair_index(hi, gi)));
                }
            }
            class_roots.dedup();
            if class_roots.len() > 1 {
                subdivisions_ok = false;
            }
        });
    }

    let passed = constant
        && injective
        && classes == targets_hit
        && k0_image.unwrap_or(true)
        && subdivisions_ok;
    CoeqReport {
        k,
        bound,
        pairs: pair_count,
        classes,
        targets_hit,
        constant_on_classes: constant,
        injective_on_classes: injective,
        k0_image_is_all_small_ordinals: k0_image,
        subdivisions_identified: subdivisions_ok,
        passed,
    }
}

/// Translates a single 0-arrow through the crossing-count dictionary: the
/// endo arrow with `2k` sign alternations is the ordinal `[k-1]`, and the
/// cross arrow with `2j+1` of them is `[j]`.
pub fn vertex_ordinal(v: &Squiggle) -> Ordinal {
    let cc = crossing_count(v, 0).unwrap() as i64;
    if cc % 2 == 0 {
        Ordinal(cc / 2 - 1)
    } else {
        Ordinal((cc - 1) / 2)
    }
}

/// The simplicial-functor translation from squiggles to ordinal chains:
/// objects are the vertices read through the crossing-count dictionary, and
/// each chain morphism is the corresponding edge, decomposed into atomic
/// 1-arrows whose images are folded with [`ss_compose`].
pub fn squiggle_to_ss(a: &Squiggle) -> SSArrow {
    let n = a.dim();
    let objects: Vec<Ordinal> = (0..=n)
        .map(|j| vertex_ordinal(&crate::ops::vertex(a, j).unwrap()))
        .collect();
    let mut maps = Vec::with_capacity(n);
    for j in 1..=n {
        let edge_op = crate::ops::SimplicialOperator::select(n, &[j - 1, j]).unwrap();
        let edge = crate::ops::act(a, &edge_op).unwrap();
        let chain = edge_to_ss(&edge);
        debug_assert_eq!(chain.objects[0], objects[j - 1]);
        debug_assert_eq!(chain.objects[1], objects[j]);
        maps.push(chain.maps[0].clone());
    }
    SSArrow::new(a.dom(), a.cod(), objects, maps).expect("translation produces a valid chain")
}

/// Translates a 1-arrow by folding the images of its atomic factors. The
/// only atomic 1-arrows are the degenerated `f` and `u` and the unit and
/// counit, whose images are identity chains and the coface `δ⁰: [-1] → [0]`
/// on the two endo sides.
fn edge_to_ss(e: &Squiggle) -> SSArrow {
    assert_eq!(e.dim(), 1);
    if e.is_identity() {
        return SSArrow::degenerate_object(e.dom(), e.cod(), Ordinal(-1), 1);
    }
    let factors = atomic_decompose(e).unwrap();
    let mut acc: Option<SSArrow> = None;
    for factor in &factors {
        let image = atomic_edge_to_ss(factor);
        acc = Some(match acc {
            None => image,
            Some(prev) => ss_compose(&prev, &image).expect("factor chains compose"),
        });
    }
    acc.unwrap()
}

fn atomic_edge_to_ss(factor: &Squiggle) -> SSArrow {
    let levels: Vec<Level> = factor.levels().to_vec();
    match levels.as_slice() {
        // degenerated f: identity chain on [0] in hom(+, -)
        [0, 2] => SSArrow::degenerate_object(Sign::Plus, Sign::Minus, Ordinal(0), 1),
        // degenerated u: identity chain on [0] in hom(-, +)
        [2, 0] => SSArrow::degenerate_object(Sign::Minus, Sign::Plus, Ordinal(0), 1),
        // η: δ⁰ : [-1] → [0] on the monad side
        [2, 1, 2] => SSArrow::new(
            Sign::Plus,
            Sign::Plus,
            vec![Ordinal(-1), Ordinal(0)],
            vec![PlusOperator::coface(0, 0).unwrap()],
        )
        .unwrap(),
        // ε: the same coface, read in the opposite category
        [0, 1, 0] => SSArrow::new(
            Sign::Minus,
            Sign::Minus,
            vec![Ordinal(0), Ordinal(-1)],
            vec![PlusOperator::coface(0, 0).unwrap()],
        )
        .unwrap(),
        _ => unreachable!("atomic 1-arrows are f, u, η, ε up to degeneracy"),
    }
}

/// A frozen lookup from ordinal chains back to squiggles at one hom-pair,
/// dimension, and width bound; built once and then shared read-only.
pub struct SsIndex {
    dom: Sign,
    cod: Sign,
    dim: usize,
    max_width: usize,
    map: HashMap<SSArrow, Squiggle>,
}

impl SsIndex {
    pub fn build(dom: Sign, cod: Sign, dim: usize, max_width: usize) -> SsIndex {
        let table = enumerate_hom(dom, cod, dim, max_width);
        let mut map = HashMap::new();
        for a in table.dim(dim) {
            map.entry(squiggle_to_ss(a)).or_insert_with(|| a.clone());
        }
        SsIndex {
            dom,
            cod,
            dim,
            max_width,
            map,
        }
    }

    pub fn lookup(&self, x: &SSArrow) -> Option<&Squiggle> {
        self.map.get(x)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn matches(&self, dom: Sign, cod: Sign, dim: usize, max_width: usize) -> bool {
        self.dom == dom && self.cod == cod && self.dim == dim && self.max_width == max_width
    }
}

/// The inverse translation, by memoised search over the bounded hom-space.
/// The bound is reported when too small, never silently approximated.
pub fn ss_to_squiggle(x: &SSArrow, max_width: usize) -> Result<Squiggle, BridgeError> {
    let index = SsIndex::build(x.dom(), x.cod(), x.dim(), max_width);
    index
        .lookup(x)
        .cloned()
        .ok_or(BridgeError::NotFoundWithinBound(max_width))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn sq(s: &str) -> Squiggle {
        parse(s).unwrap()
    }

    fn op(s: &str) -> PlusOperator {
        PlusOperator::parse(s).unwrap()
    }

    pub(crate) fn enumerate_plus_ops(src: i64, tgt: i64) -> Vec<PlusOperator> {
        fn go(src: i64, tgt: i64, prefix: &mut Vec<i64>, out: &mut Vec<PlusOperator>) {
            if prefix.len() as i64 == src + 1 {
                out.push(PlusOperator::new(Ordinal(src), Ordinal(tgt), prefix.clone()).unwrap());
                return;
            }
            let lo = prefix.last().copied().unwrap_or(0);
            for v in lo..=tgt {
                prefix.push(v);
                go(src, tgt, prefix, out);
                prefix.pop();
            }
        }
        if src == -1 {
            return vec![PlusOperator::new(Ordinal(-1), Ordinal(tgt), vec![]).unwrap()];
        }
        if tgt == -1 {
            return vec![];
        }
        let mut out = Vec::new();
        go(src, tgt, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn ordinal_sum_examples() {
        assert_eq!(ordinal_sum_objects(Ordinal(0), Ordinal(0)), Ordinal(1));
        // δ⁰: [-1] → [0] ⊕ id[0] = δ⁰: [0] → [1]
        let d0 = PlusOperator::coface(0, 0).unwrap();
        let id0 = PlusOperator::identity(Ordinal(0));
        assert_eq!(ordinal_sum(&d0, &id0), op("[0->1: 1]"));
        // the unit law
        let alpha = op("[1->2: 0 2]");
        let empty = PlusOperator::identity(Ordinal(-1));
        assert_eq!(ordinal_sum(&alpha, &empty), alpha);
        assert_eq!(ordinal_sum(&empty, &alpha), alpha);
    }

    #[test]
    fn ordinal_sum_is_associative_small() {
        let mut ops = Vec::new();
        for src in -1..=2i64 {
            for tgt in -1..=2i64 {
                ops.extend(enumerate_plus_ops(src, tgt));
            }
        }
        for a in &ops {
            for b in &ops {
                for c in &ops {
                    assert_eq!(
                        ordinal_sum(&ordinal_sum(a, b), c),
                        ordinal_sum(a, &ordinal_sum(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn transpose_generator_clauses() {
        // (δ⁰: [0] → [1])ˡ = σ⁰: [1] → [0]
        let d0 = PlusOperator::coface(1, 0).unwrap();
        assert_eq!(
            adjoint_transpose(TransposeSide::Left, &d0).unwrap(),
            PlusOperator::codegeneracy(0, 0).unwrap()
        );
        // (σ⁰: [1] → [0])ʳ = δ⁰: [0] → [1]
        let s0 = PlusOperator::codegeneracy(0, 0).unwrap();
        assert_eq!(adjoint_transpose(TransposeSide::Right, &s0).unwrap(), d0);
        // (σⁱ)ˡ = δ^{i+1}
        let s1 = PlusOperator::codegeneracy(2, 1).unwrap();
        assert_eq!(
            adjoint_transpose(TransposeSide::Left, &s1).unwrap(),
            PlusOperator::coface(3, 2).unwrap()
        );
        // δ¹: [0] → [1] preserves only the bottom
        let d1 = PlusOperator::coface(1, 1).unwrap();
        assert_eq!(
            adjoint_transpose(TransposeSide::Left, &d1).unwrap_err(),
            BridgeError::NotInSubcategory
        );
        assert_eq!(
            adjoint_transpose(TransposeSide::Right, &d1).unwrap(),
            PlusOperator::codegeneracy(0, 0).unwrap()
        );
    }

    #[test]
    fn transposes_are_mutually_inverse() {
        for src in 0..=4i64 {
            for tgt in 0..=4i64 {
                for alpha in enumerate_plus_ops(src, tgt) {
                    if alpha.is_top_preserving() {
                        let l = adjoint_transpose(TransposeSide::Left, &alpha).unwrap();
                        assert!(l.is_bottom_preserving());
                        assert_eq!(adjoint_transpose(TransposeSide::Right, &l).unwrap(), alpha);
                    }
                    if alpha.is_bottom_preserving() {
                        let r = adjoint_transpose(TransposeSide::Right, &alpha).unwrap();
                        assert!(r.is_top_preserving());
                        assert_eq!(adjoint_transpose(TransposeSide::Left, &r).unwrap(), alpha);
                    }
                }
            }
        }
    }

    #[test]
    fn adjunction_chain_of_elementary_operators() {
        // δⁿ ⊣ σⁿ⁻¹ ⊣ δⁿ⁻¹ ⊣ … ⊣ σ⁰ ⊣ δ⁰ as alternating transposes
        for n in 1..=4i64 {
            let mut ops: Vec<PlusOperator> = Vec::new();
            for i in (0..n).rev() {
                ops.push(PlusOperator::coface(n, i + 1).unwrap());
                ops.push(PlusOperator::codegeneracy(n - 1, i).unwrap());
            }
            ops.push(PlusOperator::coface(n, 0).unwrap());
            for pair in ops.windows(2) {
                assert_eq!(
                    adjoint_transpose(TransposeSide::Left, &pair[1]).unwrap(),
                    pair[0]
                );
            }
        }
    }

    #[test]
    fn ir_inverse_inverts_ir() {
        for src in -1..=3i64 {
            for tgt in -1..=3i64 {
                for alpha in enumerate_plus_ops(src, tgt) {
                    let gamma = ir(&alpha);
                    assert!(gamma.is_interval());
                    assert_eq!(ir_inverse(&gamma).unwrap(), alpha);
                }
            }
        }
    }

    #[test]
    fn translation_of_the_named_arrows() {
        // u is the object [0] of the top-preserving hom
        let u = squiggle_to_ss(&sq("0:(+,-)"));
        assert_eq!(u, SSArrow::object(Sign::Minus, Sign::Plus, Ordinal(0)));
        // η is the chain δ⁰: [-1] → [0] on the monad side
        let eta = squiggle_to_ss(&sq("1:(+,1,+)"));
        assert_eq!(eta.objects(), &[Ordinal(-1), Ordinal(0)]);
        assert_eq!(eta.maps()[0], PlusOperator::coface(0, 0).unwrap());
        // ηu is δ⁰: [0] → [1] in the top-preserving hom
        let etau = squiggle_to_ss(&sq("1:(+,1,+,-)"));
        assert_eq!((etau.dom(), etau.cod()), (Sign::Minus, Sign::Plus));
        assert_eq!(etau.objects(), &[Ordinal(0), Ordinal(1)]);
        assert_eq!(etau.maps()[0], PlusOperator::coface(1, 0).unwrap());
        // uεf, the multiplication, is σ⁰: [1] → [0] on the monad side
        let mult = squiggle_to_ss(&sq("1:(+,-,1,-,+)"));
        assert_eq!(mult.objects(), &[Ordinal(1), Ordinal(0)]);
        assert_eq!(mult.maps()[0], PlusOperator::codegeneracy(0, 0).unwrap());
    }

    #[test]
    fn object_dictionary_through_crossing_counts() {
        assert_eq!(vertex_ordinal(&sq("0:(+)")), Ordinal(-1));
        assert_eq!(vertex_ordinal(&sq("0:(+,-,+)")), Ordinal(0));
        assert_eq!(vertex_ordinal(&sq("0:(+,-,+,-,+)")), Ordinal(1));
        assert_eq!(vertex_ordinal(&sq("0:(-,+)")), Ordinal(0));
    }

    #[test]
    fn inverse_translation_examples() {
        let eta_chain = SSArrow::new(
            Sign::Plus,
            Sign::Plus,
            vec![Ordinal(-1), Ordinal(0)],
            vec![PlusOperator::coface(0, 0).unwrap()],
        )
        .unwrap();
        assert_eq!(ss_to_squiggle(&eta_chain, 6).unwrap(), sq("1:(+,1,+)"));
        // the object [1] of the monad side is ufuf
        let obj = SSArrow::object(Sign::Plus, Sign::Plus, Ordinal(1));
        assert_eq!(ss_to_squiggle(&obj, 6).unwrap(), sq("0:(+,-,+,-,+)"));
        // bound too small is reported
        assert_eq!(
            ss_to_squiggle(&obj, 2).unwrap_err(),
            BridgeError::NotFoundWithinBound(2)
        );
    }

    #[test]
    fn ss_render_parse_round_trip() {
        for text in ["1:(+,1,+)", "1:(+,-,1,-,+)", "0:(+,-)", "2:(-,2,1,+)"] {
            let chain = squiggle_to_ss(&sq(text));
            let rendered = chain.render();
            assert_eq!(SSArrow::parse(&rendered).unwrap(), chain, "{rendered}");
        }
    }

    #[test]
    fn functoriality_on_cross_composites() {
        // u ∘ εf = uεf, the multiplication
        let u_deg = sq("1:(+,-)");
        let eps_f = sq("1:(-,1,-,+)");
        let composite = u_deg.compose(&eps_f).unwrap();
        let lhs = squiggle_to_ss(&composite);
        let rhs = ss_compose(&squiggle_to_ss(&u_deg), &squiggle_to_ss(&eps_f)).unwrap();
        assert_eq!(lhs, rhs);

        // εf ∘ u = εfu on the comonad side
        let composite = eps_f.compose(&sq("1:(+,-)")).unwrap();
        let lhs = squiggle_to_ss(&composite);
        let rhs = ss_compose(&squiggle_to_ss(&eps_f), &squiggle_to_ss(&sq("1:(+,-)"))).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_chains_compose_neutrally() {
        let x = squiggle_to_ss(&sq("1:(+,1,+)"));
        let id_plus = SSArrow::degenerate_object(Sign::Plus, Sign::Plus, Ordinal(-1), 1);
        assert_eq!(ss_compose(&x, &id_plus).unwrap(), x);
        assert_eq!(ss_compose(&id_plus, &x).unwrap(), x);
    }

    #[test]
    fn nerve_action_on_chains_matches_squiggle_action() {
        use crate::ops::SimplicialOperator;
        for text in ["2:(-,2,1,+)", "2:(+,1,2,-)", "2:(-,2,1,2,-)", "2:(+,1,2,1,+)"] {
            let a = sq(text);
            for i in 0..=a.dim() {
                let op = SimplicialOperator::face(a.dim(), i).unwrap();
                let lhs = squiggle_to_ss(&crate::ops::act(&a, &op).unwrap());
                let rhs = ss_act(&squiggle_to_ss(&a), &op).unwrap();
                assert_eq!(lhs, rhs, "{text} face {i}");
            }
            for i in 0..=a.dim() {
                let op = SimplicialOperator::degeneracy(a.dim(), i).unwrap();
                let lhs = squiggle_to_ss(&crate::ops::act(&a, &op).unwrap());
                let rhs = ss_act(&squiggle_to_ss(&a), &op).unwrap();
                assert_eq!(lhs, rhs, "{text} degeneracy {i}");
            }
        }
    }

    #[test]
    fn coequalizer_check_small_instances() {
        let r0 = coequalizer_check(0, 3);
        assert!(r0.passed, "{r0:?}");
        assert_eq!(r0.k0_image_is_all_small_ordinals, Some(true));
        let r1 = coequalizer_check(1, 2);
        assert!(r1.passed, "{r1:?}");
    }

    #[test]
    fn cross_composition_on_objects() {
        // u ∘ f = uf lands on the monad side as [0]
        let u = SSArrow::object(Sign::Minus, Sign::Plus, Ordinal(0));
        let f = SSArrow::object(Sign::Plus, Sign::Minus, Ordinal(0));
        let uf = ss_compose(&u, &f).unwrap();
        assert_eq!(uf, SSArrow::object(Sign::Plus, Sign::Plus, Ordinal(0)));
        // f ∘ u = fu on the comonad side
        let fu = ss_compose(&f, &u).unwrap();
        assert_eq!(fu, SSArrow::object(Sign::Minus, Sign::Minus, Ordinal(0)));
    }
}
