//! Finite categories with explicit composition tables, functors, and
//! natural transformations, together with their JSON interchange format.
//!
//! The JSON format names everything by string id: objects, and morphisms
//! grouped per hom-set under `"a->b"` keys. The composition table uses keys
//! `"g*f"` for the composite of `g` after `f`; pairs involving identities
//! may be omitted.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("unknown object id {0}")]
    UnknownObject(String),
    #[error("unknown morphism id {0}")]
    UnknownMorphism(String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("malformed hom key {0}, expected \"a->b\"")]
    MalformedHomKey(String),
    #[error("malformed compose key {0}, expected \"g*f\"")]
    MalformedComposeKey(String),
    #[error("composition table error: {0}")]
    BadTable(String),
    #[error("law violation: {0}")]
    LawViolation(String),
    #[error("json: {0}")]
    Json(String),
}

/// A finite category with a total composition table. Associativity and the
/// identity laws are checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    mor_index: BTreeMap<String, usize>,
    obj_index: BTreeMap<String, usize>,
    compose: BTreeMap<(usize, usize), usize>,
    identities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinCategoryJson {
    pub objects: Vec<String>,
    pub homs: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub compose: BTreeMap<String, String>,
    pub identities: BTreeMap<String, String>,
}

impl FinCategory {
    pub fn from_data(data: &FinCategoryJson) -> Result<FinCategory, CatError> {
        let mut obj_index = BTreeMap::new();
        for (i, o) in data.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(CatError::DuplicateId(o.clone()));
            }
        }
        let mut morphisms = Vec::new();
        let mut mor_index = BTreeMap::new();
        for (key, ids) in &data.homs {
            let (a, b) = key
                .split_once("->")
                .ok_or_else(|| CatError::MalformedHomKey(key.clone()))?;
            let dom = *obj_index
                .get(a.trim())
                .ok_or_else(|| CatError::UnknownObject(a.trim().to_string()))?;
            let cod = *obj_index
                .get(b.trim())
                .ok_or_else(|| CatError::UnknownObject(b.trim().to_string()))?;
            for id in ids {
                if mor_index.contains_key(id) {
                    return Err(CatError::DuplicateId(id.clone()));
                }
                mor_index.insert(id.clone(), morphisms.len());
                morphisms.push(Morphism {
                    id: id.clone(),
                    dom,
                    cod,
                });
            }
        }
        let mut identities = vec![usize::MAX; data.objects.len()];
        for (obj, mor) in &data.identities {
            let oi = *obj_index
                .get(obj)
                .ok_or_else(|| CatError::UnknownObject(obj.clone()))?;
            let mi = *mor_index
                .get(mor)
                .ok_or_else(|| CatError::UnknownMorphism(mor.clone()))?;
            identities[oi] = mi;
        }
        for (oi, &mi) in identities.iter().enumerate() {
            if mi == usize::MAX {
                return Err(CatError::BadTable(format!(
                    "object {} has no identity",
                    data.objects[oi]
                )));
            }
            if morphisms[mi].dom != oi || morphisms[mi].cod != oi {
                return Err(CatError::BadTable(format!(
                    "identity of {} is not an endomorphism",
                    data.objects[oi]
                )));
            }
        }
        let mut compose = BTreeMap::new();
        for (key, h) in &data.compose {
            let (g, f) = key
                .split_once('*')
                .ok_or_else(|| CatError::MalformedComposeKey(key.clone()))?;
            let gi = *mor_index
                .get(g.trim())
                .ok_or_else(|| CatError::UnknownMorphism(g.trim().to_string()))?;
            let fi = *mor_index
                .get(f.trim())
                .ok_or_else(|| CatError::UnknownMorphism(f.trim().to_string()))?;
            let hi = *mor_index
                .get(h)
                .ok_or_else(|| CatError::UnknownMorphism(h.clone()))?;
            compose.insert((gi, fi), hi);
        }
        // identities compose trivially whether or not the table lists them
        for (mi, m) in morphisms.iter().enumerate() {
            compose.insert((identities[m.cod], mi), mi);
            compose.insert((mi, identities[m.dom]), mi);
        }
        let cat = FinCategory {
            objects: data.objects.clone(),
            morphisms,
            mor_index,
            obj_index,
            compose,
            identities,
        };
        cat.check_laws().map_err(CatError::LawViolation)?;
        Ok(cat)
    }

    pub fn from_json(text: &str) -> Result<FinCategory, CatError> {
        let data: FinCategoryJson =
            serde_json::from_str(text).map_err(|e| CatError::Json(e.to_string()))?;
        FinCategory::from_data(&data)
    }

    pub fn to_data(&self) -> FinCategoryJson {
        let mut homs: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for m in &self.morphisms {
            homs.entry(format!(
                "{}->{}",
                self.objects[m.dom], self.objects[m.cod]
            ))
            .or_default()
            .push(m.id.clone());
        }
        let mut compose = BTreeMap::new();
        for (&(g, f), &h) in &self.compose {
            compose.insert(
                format!("{}*{}", self.morphisms[g].id, self.morphisms[f].id),
                self.morphisms[h].id.clone(),
            );
        }
        let identities = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), self.morphisms[self.identities[i]].id.clone()))
            .collect();
        FinCategoryJson {
            objects: self.objects.clone(),
            homs,
            compose,
            identities,
        }
    }

    /// Internal check run on construction: totality of the table, endpoint
    /// consistency, identity neutrality, and associativity.
    pub fn check_laws(&self) -> Result<(), String> {
        for (fi, f) in self.morphisms.iter().enumerate() {
            for (gi, g) in self.morphisms.iter().enumerate() {
                if g.dom != f.cod {
                    if self.compose.contains_key(&(gi, fi)) {
                        return Err(format!(
                            "table lists non-composable pair {}*{}",
                            g.id, f.id
                        ));
                    }
                    continue;
                }
                let hi = match self.compose.get(&(gi, fi)) {
                    Some(&h) => h,
                    None => {
                        return Err(format!("missing composite {}*{}", g.id, f.id));
                    }
                };
                let h = &self.morphisms[hi];
                if h.dom != f.dom || h.cod != g.cod {
                    return Err(format!("composite {}*{} has wrong endpoints", g.id, f.id));
                }
            }
        }
        for m in 0..self.morphisms.len() {
            let (d, c) = (self.morphisms[m].dom, self.morphisms[m].cod);
            if self.compose[&(m, self.identities[d])] != m
                || self.compose[&(self.identities[c], m)] != m
            {
                return Err(format!("identity not neutral at {}", self.morphisms[m].id));
            }
        }
        for (fi, f) in self.morphisms.iter().enumerate() {
            for (gi, g) in self.morphisms.iter().enumerate() {
                if g.dom != f.cod {
                    continue;
                }
                for (hi, h) in self.morphisms.iter().enumerate() {
                    if h.dom != g.cod {
                        continue;
                    }
                    let left = self.compose[&(hi, self.compose[&(gi, fi)])];
                    let right = self.compose[&(self.compose[&(hi, gi)], fi)];
                    if left != right {
                        return Err(format!(
                            "associativity fails on ({}, {}, {})",
                            h.id, g.id, f.id
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_id(&self, name: &str) -> Result<usize, CatError> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownObject(name.to_string()))
    }

    pub fn morphism_id(&self, name: &str) -> Result<usize, CatError> {
        self.mor_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownMorphism(name.to_string()))
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> impl Iterator<Item = (usize, &Morphism)> {
        self.morphisms.iter().enumerate()
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].dom] == m && self.morphisms[m].dom == self.morphisms[m].cod
    }

    /// The composite `g ∘ f`.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose[&(g, f)]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        self.morphisms
            .iter()
            .enumerate()
            .filter(|(_, m)| m.dom == a && m.cod == b)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_iso(&self, m: usize) -> bool {
        let mor = &self.morphisms[m];
        self.hom(mor.cod, mor.dom).iter().any(|&g| {
            self.comp(g, m) == self.identities[mor.dom] && self.comp(m, g) == self.identities[mor.cod]
        })
    }

    /// The category of a finite poset: one morphism `a -> b` per related
    /// pair, named `a<=b`.
    pub fn poset(objects: &[&str], le: impl Fn(usize, usize) -> bool) -> FinCategory {
        let mut homs: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut compose = BTreeMap::new();
        let mor_name = |i: usize, j: usize| format!("{}<={}", objects[i], objects[j]);
        for i in 0..objects.len() {
            for j in 0..objects.len() {
                let related = i == j || le(i, j);
                if related {
                    homs.entry(format!("{}->{}", objects[i], objects[j]))
                        .or_default()
                        .push(mor_name(i, j));
                }
            }
        }
        for i in 0..objects.len() {
            for j in 0..objects.len() {
                for k in 0..objects.len() {
                    let ij = i == j || le(i, j);
                    let jk = j == k || le(j, k);
                    if ij && jk {
                        compose.insert(
                            format!("{}*{}", mor_name(j, k), mor_name(i, j)),
                            mor_name(i, k),
                        );
                    }
                }
            }
        }
        let identities = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.to_string(), mor_name(i, i)))
            .collect();
        FinCategory::from_data(&FinCategoryJson {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            homs,
            compose,
            identities,
        })
        .expect("posets are categories")
    }

    /// The chain poset `0 < 1 < … < n-1` on `n` elements.
    pub fn chain(n: usize) -> FinCategory {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        FinCategory::poset(&refs, |i, j| i < j)
    }
}

/// A functor between finite categories, stored as explicit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinFunctorJson {
    #[serde(rename = "objMap")]
    pub obj_map: BTreeMap<String, String>,
    #[serde(rename = "morMap")]
    pub mor_map: BTreeMap<String, String>,
}

impl FinFunctor {
    pub fn identity(cat: &FinCategory) -> FinFunctor {
        FinFunctor {
            obj_map: (0..cat.object_count()).collect(),
            mor_map: (0..cat.morphism_count()).collect(),
        }
    }

    pub fn from_data(
        data: &FinFunctorJson,
        src: &FinCategory,
        tgt: &FinCategory,
    ) -> Result<FinFunctor, CatError> {
        let mut obj_map = vec![usize::MAX; src.object_count()];
        for (a, b) in &data.obj_map {
            obj_map[src.object_id(a)?] = tgt.object_id(b)?;
        }
        if obj_map.contains(&usize::MAX) {
            return Err(CatError::BadTable("object map not total".into()));
        }
        let mut mor_map = vec![usize::MAX; src.morphism_count()];
        for (f, g) in &data.mor_map {
            mor_map[src.morphism_id(f)?] = tgt.morphism_id(g)?;
        }
        for (mi, m) in src.morphisms() {
            if mor_map[mi] == usize::MAX {
                if src.is_identity(mi) {
                    mor_map[mi] = tgt.identity(obj_map[m.dom]);
                } else {
                    return Err(CatError::BadTable(format!(
                        "morphism map missing {}",
                        m.id
                    )));
                }
            }
        }
        let f = FinFunctor { obj_map, mor_map };
        f.check(src, tgt).map_err(CatError::LawViolation)?;
        Ok(f)
    }

    pub fn check(&self, src: &FinCategory, tgt: &FinCategory) -> Result<(), String> {
        for (mi, m) in src.morphisms() {
            let fm = &tgt.morphism(self.mor_map[mi]);
            if fm.dom != self.obj_map[m.dom] || fm.cod != self.obj_map[m.cod] {
                return Err(format!("functor breaks endpoints at {}", m.id));
            }
        }
        for o in 0..src.object_count() {
            if self.mor_map[src.identity(o)] != tgt.identity(self.obj_map[o]) {
                return Err(format!(
                    "functor breaks the identity at {}",
                    src.object_name(o)
                ));
            }
        }
        for (fi, f) in src.morphisms() {
            for (gi, g) in src.morphisms() {
                if g.dom != f.cod {
                    continue;
                }
                let lhs = self.mor_map[src.comp(gi, fi)];
                let rhs = tgt.comp(self.mor_map[gi], self.mor_map[fi]);
                if lhs != rhs {
                    return Err(format!("functor breaks composition on ({}, {})", g.id, f.id));
                }
            }
        }
        Ok(())
    }

    pub fn apply_obj(&self, o: usize) -> usize {
        self.obj_map[o]
    }

    pub fn apply_mor(&self, m: usize) -> usize {
        self.mor_map[m]
    }

    pub fn then(&self, other: &FinFunctor) -> FinFunctor {
        FinFunctor {
            obj_map: self.obj_map.iter().map(|&o| other.obj_map[o]).collect(),
            mor_map: self.mor_map.iter().map(|&m| other.mor_map[m]).collect(),
        }
    }
}

/// A natural transformation between functors `F, G: src → tgt`, stored as
/// one target morphism per source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinNatTrans {
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinNatTransJson {
    pub components: BTreeMap<String, String>,
}

impl FinNatTrans {
    pub fn from_data(
        data: &FinNatTransJson,
        src: &FinCategory,
        tgt: &FinCategory,
    ) -> Result<FinNatTrans, CatError> {
        let mut components = vec![usize::MAX; src.object_count()];
        for (o, m) in &data.components {
            components[src.object_id(o)?] = tgt.morphism_id(m)?;
        }
        if components.contains(&usize::MAX) {
            return Err(CatError::BadTable("components not total".into()));
        }
        Ok(FinNatTrans { components })
    }

    pub fn check(
        &self,
        src: &FinCategory,
        tgt: &FinCategory,
        from: &FinFunctor,
        to: &FinFunctor,
    ) -> Result<(), String> {
        for o in 0..src.object_count() {
            let c = tgt.morphism(self.components[o]);
            if c.dom != from.apply_obj(o) || c.cod != to.apply_obj(o) {
                return Err(format!(
                    "component at {} has wrong endpoints",
                    src.object_name(o)
                ));
            }
        }
        for (mi, m) in src.morphisms() {
            let lhs = tgt.comp(self.components[m.cod], from.apply_mor(mi));
            let rhs = tgt.comp(to.apply_mor(mi), self.components[m.dom]);
            if lhs != rhs {
                return Err(format!("naturality fails at {}", m.id));
            }
        }
        Ok(())
    }
}

/// Distinct morphisms reachable as composites; used by enumeration helpers.
pub fn generated_morphisms(cat: &FinCategory, seeds: &[usize]) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = seeds.iter().copied().collect();
    loop {
        let mut grew = false;
        let items: Vec<usize> = out.iter().copied().collect();
        for &g in &items {
            for &f in &items {
                if cat.morphism(g).dom == cat.morphism(f).cod && out.insert(cat.comp(g, f)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_posets_are_categories() {
        let two = FinCategory::chain(2);
        assert_eq!(two.object_count(), 2);
        assert_eq!(two.morphism_count(), 3);
        assert!(two.check_laws().is_ok());
        let three = FinCategory::chain(3);
        assert_eq!(three.morphism_count(), 6);
    }

    #[test]
    fn json_round_trip() {
        let cat = FinCategory::chain(3);
        let text = serde_json::to_string(&cat.to_data()).unwrap();
        let back = FinCategory::from_json(&text).unwrap();
        assert_eq!(back, cat);
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut data = FinCategory::chain(3).to_data();
        // redirect a composite to break associativity/endpoints
        let key = "1<=2*0<=1".to_string();
        data.compose.insert(key, "1<=2".to_string());
        let err = FinCategory::from_data(&data).unwrap_err();
        assert!(matches!(err, CatError::LawViolation(_)));
    }

    #[test]
    fn iso_detection() {
        // a two-object isomorphism groupoid
        let data = FinCategoryJson {
            objects: vec!["a".into(), "b".into()],
            homs: [
                ("a->a".to_string(), vec!["ida".to_string()]),
                ("b->b".to_string(), vec!["idb".to_string()]),
                ("a->b".to_string(), vec!["s".to_string()]),
                ("b->a".to_string(), vec!["t".to_string()]),
            ]
            .into_iter()
            .collect(),
            compose: [
                ("t*s".to_string(), "ida".to_string()),
                ("s*t".to_string(), "idb".to_string()),
            ]
            .into_iter()
            .collect(),
            identities: [
                ("a".to_string(), "ida".to_string()),
                ("b".to_string(), "idb".to_string()),
            ]
            .into_iter()
            .collect(),
        };
        let cat = FinCategory::from_data(&data).unwrap();
        assert!(cat.is_iso(cat.morphism_id("s").unwrap()));
        let two = FinCategory::chain(2);
        assert!(!two.is_iso(two.morphism_id("0<=1").unwrap()));
    }
}
