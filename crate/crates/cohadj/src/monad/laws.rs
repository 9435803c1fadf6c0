//! Monads and adjunctions on finite categories: law checking and the
//! monad resolution.

use serde::{Deserialize, Serialize};

use super::fincat::{
    CatError, FinCategory, FinCategoryJson, FinFunctor, FinFunctorJson, FinNatTrans,
    FinNatTransJson,
};

/// A monad on a finite category, with all structure as explicit tables.
#[derive(Debug, Clone)]
pub struct FinMonad {
    pub base: FinCategory,
    pub t: FinFunctor,
    pub eta: FinNatTrans,
    pub mu: FinNatTrans,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinMonadJson {
    pub base: FinCategoryJson,
    pub t: FinFunctorJson,
    pub eta: FinNatTransJson,
    pub mu: FinNatTransJson,
}

/// Flat list of law failures with human-readable witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub subject: String,
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl FinMonad {
    pub fn from_json(text: &str) -> Result<FinMonad, CatError> {
        let data: FinMonadJson =
            serde_json::from_str(text).map_err(|e| CatError::Json(e.to_string()))?;
        FinMonad::from_data(&data)
    }

    pub fn from_data(data: &FinMonadJson) -> Result<FinMonad, CatError> {
        let base = FinCategory::from_data(&data.base)?;
        let t = FinFunctor::from_data(&data.t, &base, &base)?;
        let eta = FinNatTrans::from_data(&data.eta, &base, &base)?;
        let mu = FinNatTrans::from_data(&data.mu, &base, &base)?;
        let monad = FinMonad { base, t, eta, mu };
        let report = monad.check_laws();
        if !report.passed() {
            return Err(CatError::LawViolation(report.failures.join("; ")));
        }
        Ok(monad)
    }

    pub fn to_data(&self) -> FinMonadJson {
        let name_obj = |o: usize| self.base.object_name(o).to_string();
        let name_mor = |m: usize| self.base.morphism(m).id.clone();
        FinMonadJson {
            base: self.base.to_data(),
            t: FinFunctorJson {
                obj_map: (0..self.base.object_count())
                    .map(|o| (name_obj(o), name_obj(self.t.apply_obj(o))))
                    .collect(),
                mor_map: self
                    .base
                    .morphisms()
                    .map(|(mi, m)| (m.id.clone(), name_mor(self.t.apply_mor(mi))))
                    .collect(),
            },
            eta: FinNatTransJson {
                components: (0..self.base.object_count())
                    .map(|o| (name_obj(o), name_mor(self.eta.components[o])))
                    .collect(),
            },
            mu: FinNatTransJson {
                components: (0..self.base.object_count())
                    .map(|o| (name_obj(o), name_mor(self.mu.components[o])))
                    .collect(),
            },
        }
    }

    /// The identity monad on a category.
    pub fn identity(base: FinCategory) -> FinMonad {
        let t = FinFunctor::identity(&base);
        let eta = FinNatTrans {
            components: (0..base.object_count()).map(|o| base.identity(o)).collect(),
        };
        let mu = eta.clone();
        FinMonad { base, t, eta, mu }
    }

    /// A closure operator on a poset presented as a monad: `t` is the
    /// closure, the unit is `x <= t(x)`, the multiplication `t²x <= t x`
    /// is an identity by idempotency.
    pub fn closure_on_poset(base: FinCategory, closure: &[usize]) -> FinMonad {
        let obj_map = closure.to_vec();
        let mor_map = base
            .morphisms()
            .map(|(_, m)| {
                let (d, c) = (obj_map[m.dom], obj_map[m.cod]);
                *base
                    .hom(d, c)
                    .first()
                    .expect("closure preserves the order")
            })
            .collect();
        let t = FinFunctor { obj_map, mor_map };
        let eta = FinNatTrans {
            components: (0..base.object_count())
                .map(|o| base.hom(o, t.apply_obj(o))[0])
                .collect(),
        };
        let mu = FinNatTrans {
            components: (0..base.object_count())
                .map(|o| base.identity(t.apply_obj(o)))
                .collect(),
        };
        FinMonad { base, t, eta, mu }
    }

    /// Applies `t` iterated `k` times to an object.
    pub fn power_obj(&self, k: usize, o: usize) -> usize {
        (0..k).fold(o, |acc, _| self.t.apply_obj(acc))
    }

    /// Applies `t^k` to a morphism.
    pub fn power_mor(&self, k: usize, m: usize) -> usize {
        (0..k).fold(m, |acc, _| self.t.apply_mor(acc))
    }

    pub fn check_laws(&self) -> LawReport {
        let mut failures = Vec::new();
        if let Err(e) = self.base.check_laws() {
            failures.push(format!("category: {e}"));
        }
        if let Err(e) = self.t.check(&self.base, &self.base) {
            failures.push(format!("endofunctor: {e}"));
        }
        let id = FinFunctor::identity(&self.base);
        if let Err(e) = self.eta.check(&self.base, &self.base, &id, &self.t) {
            failures.push(format!("unit: {e}"));
        }
        let tt = self.t.then(&self.t);
        if let Err(e) = self.mu.check(&self.base, &self.base, &tt, &self.t) {
            failures.push(format!("multiplication: {e}"));
        }
        // the equational laws only make sense on structurally sound data
        if !failures.is_empty() {
            return LawReport {
                subject: "monad".into(),
                failures,
            };
        }
        for o in 0..self.base.object_count() {
            let tb = self.t.apply_obj(o);
            // μ ∘ ηt = id_t
            let eta_tb = self.eta.components[tb];
            if self.base.comp(self.mu.components[o], eta_tb) != self.base.identity(tb) {
                failures.push(format!(
                    "unit law μ∘ηt fails at {}",
                    self.base.object_name(o)
                ));
            }
            // μ ∘ tη = id_t
            let t_eta = self.t.apply_mor(self.eta.components[o]);
            if self.base.comp(self.mu.components[o], t_eta) != self.base.identity(tb) {
                failures.push(format!(
                    "unit law μ∘tη fails at {}",
                    self.base.object_name(o)
                ));
            }
            // μ ∘ μt = μ ∘ tμ
            let mu_t = self.mu.components[tb];
            let t_mu = self.t.apply_mor(self.mu.components[o]);
            let left = self.base.comp(self.mu.components[o], mu_t);
            let right = self.base.comp(self.mu.components[o], t_mu);
            if left != right {
                failures.push(format!(
                    "associativity μ∘μt = μ∘tμ fails at {}",
                    self.base.object_name(o)
                ));
            }
        }
        LawReport {
            subject: "monad".into(),
            failures,
        }
    }
}

/// An adjunction between finite categories with explicit unit and counit.
#[derive(Debug, Clone)]
pub struct FinAdjunction {
    /// The category the right adjoint lands in.
    pub b: FinCategory,
    /// The category the right adjoint comes from.
    pub a: FinCategory,
    /// Left adjoint `f: B → A`.
    pub f: FinFunctor,
    /// Right adjoint `u: A → B`.
    pub u: FinFunctor,
    /// Unit `η: Id_B ⇒ u f` in `B`.
    pub eta: FinNatTrans,
    /// Counit `ε: f u ⇒ Id_A` in `A`.
    pub eps: FinNatTrans,
}

impl FinAdjunction {
    pub fn check_laws(&self) -> LawReport {
        let mut failures = Vec::new();
        if let Err(e) = self.f.check(&self.b, &self.a) {
            failures.push(format!("left adjoint: {e}"));
        }
        if let Err(e) = self.u.check(&self.a, &self.b) {
            failures.push(format!("right adjoint: {e}"));
        }
        let id_b = FinFunctor::identity(&self.b);
        let id_a = FinFunctor::identity(&self.a);
        let uf = self.f.then(&self.u);
        let fu = self.u.then(&self.f);
        if let Err(e) = self.eta.check(&self.b, &self.b, &id_b, &uf) {
            failures.push(format!("unit: {e}"));
        }
        if let Err(e) = self.eps.check(&self.a, &self.a, &fu, &id_a) {
            failures.push(format!("counit: {e}"));
        }
        // uε · ηu = id_u
        for x in 0..self.a.object_count() {
            let ux = self.u.apply_obj(x);
            let u_eps = self.u.apply_mor(self.eps.components[x]);
            let eta_u = self.eta.components[ux];
            if self.b.comp(u_eps, eta_u) != self.b.identity(ux) {
                failures.push(format!(
                    "triangle uε·ηu fails at {}",
                    self.a.object_name(x)
                ));
            }
        }
        // εf · fη = id_f
        for y in 0..self.b.object_count() {
            let fy = self.f.apply_obj(y);
            let f_eta = self.f.apply_mor(self.eta.components[y]);
            let eps_f = self.eps.components[fy];
            if self.a.comp(eps_f, f_eta) != self.a.identity(fy) {
                failures.push(format!("triangle εf·fη fails at {}", self.b.object_name(y)));
            }
        }
        LawReport {
            subject: "adjunction".into(),
            failures,
        }
    }

    /// The induced monad `uf` on `B`.
    pub fn monad(&self) -> FinMonad {
        let t = self.f.then(&self.u);
        let mu = FinNatTrans {
            components: (0..self.b.object_count())
                .map(|y| {
                    // μ = uεf: component u(ε_{f y})
                    self.u.apply_mor(self.eps.components[self.f.apply_obj(y)])
                })
                .collect(),
        };
        FinMonad {
            base: self.b.clone(),
            t,
            eta: self.eta.clone(),
            mu,
        }
    }
}

/// The augmented cosimplicial monad resolution at one object: levels
/// `X^{-1} = b` and `X^k = t^{k+1} b`, cofaces inserting the unit and
/// codegeneracies collapsing with the multiplication.
#[derive(Debug, Clone, Serialize)]
pub struct MonadResolution {
    pub object: String,
    pub max_dim: usize,
    /// Level objects `X^{-1}, X^0, …`, by name.
    pub levels: Vec<String>,
    /// `cofaces[k][i]` is `δ^i: X^{k-1} → X^k`, a morphism name; the outer
    /// index runs from `k = 0`.
    pub cofaces: Vec<Vec<String>>,
    /// `codegeneracies[k][i]` is `σ^i: X^{k+1} → X^k`.
    pub codegeneracies: Vec<Vec<String>>,
    pub cosimplicial_identities_hold: bool,
}

/// Coface index data internal form.
pub fn resolution_coface(m: &FinMonad, b: usize, k: usize, i: usize) -> usize {
    // t^i(η_{t^{k-i} b}): X^{k-1} = t^k b → X^k = t^{k+1} b
    let inner = m.eta.components[m.power_obj(k - i, b)];
    m.power_mor(i, inner)
}

pub fn resolution_codegeneracy(m: &FinMonad, b: usize, k: usize, i: usize) -> usize {
    // t^i(μ_{t^{k-i} b}): X^{k+1} = t^{k+2} b → X^k = t^{k+1} b
    let inner = m.mu.components[m.power_obj(k - i, b)];
    m.power_mor(i, inner)
}

pub fn monad_resolution(m: &FinMonad, b: usize, max_dim: usize) -> MonadResolution {
    let base = &m.base;
    let levels: Vec<String> = (0..=max_dim + 1)
        .map(|k| base.object_name(m.power_obj(k, b)).to_string())
        .collect();
    let mut cofaces = Vec::new();
    for k in 0..=max_dim {
        let row: Vec<String> = (0..=k)
            .map(|i| base.morphism(resolution_coface(m, b, k, i)).id.clone())
            .collect();
        cofaces.push(row);
    }
    let mut codegeneracies = Vec::new();
    for k in 0..max_dim {
        let row: Vec<String> = (0..=k)
            .map(|i| {
                base.morphism(resolution_codegeneracy(m, b, k, i))
                    .id
                    .clone()
            })
            .collect();
        codegeneracies.push(row);
    }
    let cosimplicial_identities_hold = check_cosimplicial_identities(m, b, max_dim);
    MonadResolution {
        object: base.object_name(b).to_string(),
        max_dim,
        levels,
        cofaces,
        codegeneracies,
        cosimplicial_identities_hold,
    }
}

fn check_cosimplicial_identities(m: &FinMonad, b: usize, max_dim: usize) -> bool {
    let base = &m.base;
    // δ^j δ^i = δ^i δ^{j-1} for i < j
    for k in 1..=max_dim {
        for j in 0..=k {
            for i in 0..j {
                let lhs = base.comp(resolution_coface(m, b, k, j), resolution_coface(m, b, k - 1, i));
                let rhs = base.comp(resolution_coface(m, b, k, i), resolution_coface(m, b, k - 1, j - 1));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // σ^j σ^i = σ^i σ^{j+1} for i <= j
    for k in 0..max_dim.saturating_sub(1) {
        for j in 0..=k {
            for i in 0..=j {
                let lhs = base.comp(
                    resolution_codegeneracy(m, b, k, j),
                    resolution_codegeneracy(m, b, k + 1, i),
                );
                let rhs = base.comp(
                    resolution_codegeneracy(m, b, k, i),
                    resolution_codegeneracy(m, b, k + 1, j + 1),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // mixed identities σ^j δ^i
    for k in 0..max_dim {
        for j in 0..=k {
            for i in 0..=k + 1 {
                let lhs = base.comp(resolution_codegeneracy(m, b, k, j), resolution_coface(m, b, k + 1, i));
                let rhs = if i < j {
                    base.comp(resolution_coface(m, b, k, i), resolution_codegeneracy(m, b, k - 1, j - 1))
                } else if i == j || i == j + 1 {
                    base.identity(m.power_obj(k + 1, b))
                } else {
                    base.comp(resolution_coface(m, b, k, i - 1), resolution_codegeneracy(m, b, k - 1, j))
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
