//! Morphisms between local contact algebras: Boolean homomorphisms that
//! reflect contact, and the meet-preserving maps composed by rounding.
//!
//! Finite morphisms of the second kind are stored as full element tables,
//! since they need not preserve joins. Interval morphisms live in
//! [`interval`].

pub mod interval;

use serde_json::{json, Value};

use crate::algebra::{AtomSet, FiniteHom};
use crate::contact::roeper::{bclust_space, standard_lca, ClusterSpace};
use crate::contact::{AxiomReport, FiniteLca};
use crate::error::{Error, Result};
use crate::json::set_json;
use crate::topology::{PointMap, PointSet};

pub const CLC_CONDITIONS: [&str; 5] = ["CLC1", "CLC2", "CLC3", "CLC4", "CLC5"];
pub const DBOO_CONDITIONS: [&str; 3] = ["hom", "reflects-contact", "CLC4"];

/// For each element `a`, the bounded elements way below it. Rounding a
/// function reads only this table, so it is computed once per algebra.
#[derive(Debug, Clone)]
pub struct RoundPlan {
    below: Vec<Vec<AtomSet>>,
}

impl RoundPlan {
    pub fn new(lca: &FiniteLca) -> Self {
        let elems: Vec<AtomSet> = lca.contact_algebra().algebra().elements().collect();
        let bounded = lca.bounded_elements();
        let below = elems
            .iter()
            .map(|&a| bounded.iter().copied().filter(|&b| lca.way_below(b, a)).collect())
            .collect();
        RoundPlan { below }
    }

    /// `f̌(a) = ⋁{f(b) | b bounded, b ≪ a}` for every `a`.
    pub fn round(&self, f: &[AtomSet]) -> Vec<AtomSet> {
        self.below.iter().map(|bs| bs.iter().fold(0, |m, &b| m | f[b as usize])).collect()
    }

    pub fn round_at(&self, f: &[AtomSet], a: AtomSet) -> AtomSet {
        self.below[a as usize].iter().fold(0, |m, &b| m | f[b as usize])
    }
}

/// The rounding of an arbitrary element function between finite LCAs.
pub fn round(f: &[AtomSet], source: &FiniteLca) -> Result<Vec<AtomSet>> {
    if f.len() != 1 << source.n() {
        return Err(Error::input(format!("a table on {} atoms needs {} entries", source.n(), 1 << source.n())));
    }
    Ok(RoundPlan::new(source).round(f))
}

fn check_table(table: &[AtomSet], source: &FiniteLca, target: &FiniteLca) -> Result<()> {
    if table.len() != 1 << source.n() {
        return Err(Error::input(format!(
            "a table on {} atoms needs {} entries, got {}",
            source.n(),
            1 << source.n(),
            table.len()
        )));
    }
    if let Some(bad) = table.iter().find(|&&v| v & !target.top() != 0) {
        return Err(Error::input(format!("table value {:?} is not a target element", crate::algebra::atoms_of(*bad))));
    }
    Ok(())
}

/// CLC1–CLC5, exhaustively, with least witnesses.
pub fn clca_check(table: &[AtomSet], source: &FiniteLca, target: &FiniteLca) -> Result<AxiomReport> {
    check_table(table, source, target)?;
    let alg = source.contact_algebra().algebra();
    let talg = target.contact_algebra().algebra();
    let elems: Vec<AtomSet> = alg.elements().collect();
    let f = |a: AtomSet| table[a as usize];
    let k = elems.len() as u64;
    let mut r = AxiomReport { exhaustive: true, entries: vec![] };
    r.push("CLC1", 1, (f(0) != 0).then(|| json!({"a": [], "value": set_json(f(0))})));
    let clc2 = elems.iter().find_map(|&a| {
        elems.iter().find(|&&b| f(a & b) != f(a) & f(b)).map(|&b| json!({"a": set_json(a), "b": set_json(b)}))
    });
    r.push("CLC2", k * k, clc2);
    let clc3 = elems.iter().filter(|&&a| source.is_bounded(a)).find_map(|&a| {
        elems
            .iter()
            .filter(|&&b| source.way_below(a, b))
            .find(|&&b| !target.way_below(talg.complement(f(alg.complement(a))), f(b)))
            .map(|&b| json!({"a": set_json(a), "b": set_json(b)}))
    });
    r.push("CLC3", k * k, clc3);
    let bounded_src = source.bounded_elements();
    let clc4 = target
        .bounded_elements()
        .into_iter()
        .find(|&b| !bounded_src.iter().any(|&a| b & !f(a) == 0))
        .map(|b| json!({"b": set_json(b)}));
    r.push("CLC4", talg.size() as u64, clc4);
    let plan = RoundPlan::new(source);
    let clc5 = elems
        .iter()
        .find(|&&a| plan.round_at(table, a) != f(a))
        .map(|&a| json!({"a": set_json(a), "value": set_json(f(a)), "rounded": set_json(plan.round_at(table, a))}));
    r.push("CLC5", k, clc5);
    Ok(r)
}

/// Hom laws, contact reflection and CLC4, exhaustively.
pub fn dboo_check(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<AxiomReport> {
    if phi.dom() != source.n() || phi.cod() != target.n() {
        return Err(Error::input(format!(
            "homomorphism {}→{} atoms does not match algebras with {} and {} atoms",
            phi.dom(),
            phi.cod(),
            source.n(),
            target.n()
        )));
    }
    let table = phi.table();
    let elems: Vec<AtomSet> = source.contact_algebra().algebra().elements().collect();
    let k = elems.len() as u64;
    let mut r = AxiomReport { exhaustive: true, entries: vec![] };
    let hom = phi
        .hom_law_failure()
        .map(|(law, a, b)| json!({"law": law, "a": set_json(a), "b": set_json(b)}));
    r.push("hom", k * k, hom);
    let refl = elems.iter().find_map(|&a| {
        elems
            .iter()
            .find(|&&b| target.contact(table[a as usize], table[b as usize]) && !source.contact(a, b))
            .map(|&b| json!({"a": set_json(a), "b": set_json(b)}))
    });
    r.push("reflects-contact", k * k, refl);
    let bounded_src = source.bounded_elements();
    let clc4 = target
        .bounded_elements()
        .into_iter()
        .find(|&b| !bounded_src.iter().any(|&a| b & !table[a as usize] == 0))
        .map(|b| json!({"b": set_json(b)}));
    r.push("CLC4", 1 << target.n(), clc4);
    Ok(r)
}

/// A meet-preserving map between finite LCAs with its cached CLC report.
#[derive(Debug, Clone)]
pub struct ClcaMorphism {
    pub source: FiniteLca,
    pub target: FiniteLca,
    pub table: Vec<AtomSet>,
    pub report: AxiomReport,
}

impl ClcaMorphism {
    pub fn new(source: FiniteLca, target: FiniteLca, table: Vec<AtomSet>) -> Result<Self> {
        let report = clca_check(&table, &source, &target)?;
        Ok(ClcaMorphism { source, target, table, report })
    }

    pub fn identity(lca: &FiniteLca) -> Result<Self> {
        ClcaMorphism::new(lca.clone(), lca.clone(), lca.contact_algebra().algebra().elements().collect())
    }

    pub fn is_valid(&self) -> bool {
        self.report.all_pass(&CLC_CONDITIONS)
    }

    pub fn apply(&self, a: AtomSet) -> AtomSet {
        self.table[a as usize]
    }

    pub fn require_valid(&self, role: &str) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::hypothesis(
                "CLCA morphism",
                format!("{role} fails {:?}", self.report.failures().iter().map(|e| e.axiom).collect::<Vec<_>>()),
            ))
        }
    }

    pub fn to_json(&self) -> Value {
        crate::json::table_json(&self.table)
    }
}

/// A Boolean homomorphism between finite LCAs with its cached report.
#[derive(Debug, Clone)]
pub struct DbooMorphism {
    pub hom: FiniteHom,
    pub source: FiniteLca,
    pub target: FiniteLca,
    pub report: AxiomReport,
}

impl DbooMorphism {
    pub fn new(hom: FiniteHom, source: FiniteLca, target: FiniteLca) -> Result<Self> {
        let report = dboo_check(&hom, &source, &target)?;
        Ok(DbooMorphism { hom, source, target, report })
    }

    pub fn is_valid(&self) -> bool {
        self.report.all_pass(&DBOO_CONDITIONS)
    }

    /// `self` followed by `next`, as plain composition.
    pub fn then(&self, next: &DbooMorphism) -> Result<DbooMorphism> {
        if self.target != next.source {
            return Err(Error::input("DBoo morphisms are not composable"));
        }
        DbooMorphism::new(self.hom.then(&next.hom)?, self.source.clone(), next.target.clone())
    }
}

/// `ψ ⋄ φ = (ψ ∘ φ)̌`, defined only between validated morphisms.
pub fn diamond(psi: &ClcaMorphism, phi: &ClcaMorphism) -> Result<ClcaMorphism> {
    if phi.target != psi.source {
        return Err(Error::input("the target of φ is not the source of ψ"));
    }
    phi.require_valid("φ")?;
    psi.require_valid("ψ")?;
    let composite: Vec<AtomSet> = phi.table.iter().map(|&b| psi.apply(b)).collect();
    let rounded = RoundPlan::new(&phi.source).round(&composite);
    ClcaMorphism::new(phi.source.clone(), psi.target.clone(), rounded)
}

/// `φ ∽ ψ` iff their roundings agree.
pub fn backsim(phi: &DbooMorphism, psi: &DbooMorphism) -> Result<bool> {
    if phi.source != psi.source || phi.target != psi.target {
        return Err(Error::input("∽ compares morphisms with the same source and target"));
    }
    let plan = RoundPlan::new(&phi.source);
    Ok(plan.round(&phi.hom.table()) == plan.round(&psi.hom.table()))
}

/// `V(φ) = φ̌`, checked to be a CLCA morphism.
pub fn v_functor(phi: &DbooMorphism) -> Result<ClcaMorphism> {
    if !phi.is_valid() {
        return Err(Error::hypothesis(
            "DBoo morphism",
            format!("fails {:?}", phi.report.failures().iter().map(|e| e.axiom).collect::<Vec<_>>()),
        ));
    }
    let rounded = RoundPlan::new(&phi.source).round(&phi.hom.table());
    let m = ClcaMorphism::new(phi.source.clone(), phi.target.clone(), rounded)?;
    if !m.is_valid() {
        return Err(Error::violation(
            "v-functor",
            json!({"dual_map": phi.hom.dual_map(), "report": m.report}),
        ));
    }
    Ok(m)
}

/// `RCL(f)(G) = cl(f⁻¹(int G))`, from the standard LCA of the codomain to
/// that of the domain.
pub fn rcl_map(f: &PointMap) -> Result<ClcaMorphism> {
    if !f.dom().is_discrete() || !f.cod().is_discrete() {
        return Err(Error::hypothesis("locally compact Hausdorff", "RCL is applied to maps between discrete finite spaces"));
    }
    let src = standard_lca(f.cod())?;
    let tgt = standard_lca(f.dom())?;
    let table: Vec<AtomSet> = src
        .lca
        .contact_algebra()
        .algebra()
        .elements()
        .map(|a| {
            let g = src.rc.from_atoms(a);
            tgt.rc.to_atoms(f.dom().closure(f.preimage(f.cod().interior(g))))
        })
        .collect();
    let m = ClcaMorphism::new(src.lca, tgt.lca, table)?;
    if !m.is_valid() {
        return Err(Error::violation("rcl-map", json!({"map": f.values(), "report": m.report})));
    }
    Ok(m)
}

/// `α̂`: the induced map from bounded clusters of the target to bounded
/// clusters of the source, as indices into the two cluster spaces.
#[derive(Debug, Clone)]
pub struct ClusterMap {
    pub source_space: ClusterSpace,
    pub target_space: ClusterSpace,
    /// `map[k']` is the source cluster assigned to target cluster `k'`.
    pub map: Vec<usize>,
}

impl ClusterMap {
    pub fn as_point_map(&self) -> Result<PointMap> {
        PointMap::new(self.target_space.space.clone(), self.source_space.space.clone(), self.map.clone())
    }
}

pub fn bclust_map(alpha: &ClcaMorphism) -> Result<ClusterMap> {
    alpha.require_valid("α")?;
    let (src, tgt) = (&alpha.source, &alpha.target);
    let source_space = bclust_space(src)?;
    let target_space = bclust_space(tgt)?;
    let elems: Vec<AtomSet> = src.contact_algebra().algebra().elements().collect();
    let bounded = src.bounded_elements();
    let mut map = Vec::with_capacity(target_space.clusters.len());
    for &c in &target_space.clusters {
        let generators: Vec<AtomSet> = bounded
            .iter()
            .copied()
            .filter(|&b| elems.iter().all(|&a| !src.way_below(b, a) || alpha.apply(a) & c != 0))
            .collect();
        let member = |a: AtomSet| generators.iter().any(|&b| b & !a == 0);
        let support = (0..src.n()).filter(|&i| member(1 << i)).fold(0, |m, i| m | 1 << i);
        let exact = elems.iter().all(|&a| member(a) == (a & support != 0));
        match source_space.clusters.iter().position(|&s| s == support) {
            Some(k) if exact => map.push(k),
            _ => {
                return Err(Error::Invariant(format!(
                    "up-set for target cluster {:?} is not a bounded cluster of the source",
                    crate::algebra::atoms_of(c)
                )))
            }
        }
    }
    let cm = ClusterMap { source_space, target_space, map };
    if let Some(w) = naturality_failure(alpha, &cm)? {
        return Err(Error::violation("bclust-naturality", w));
    }
    Ok(cm)
}

/// `RCL(α̂) ∘ τ_A = τ_A' ∘ α`, element by element.
pub fn naturality_failure(alpha: &ClcaMorphism, cm: &ClusterMap) -> Result<Option<Value>> {
    let hat = cm.as_point_map()?;
    let (xs, xt) = (&cm.source_space.space, &cm.target_space.space);
    for a in alpha.source.contact_algebra().algebra().elements() {
        let g: PointSet = cm.source_space.tau(a);
        let lhs = xt.closure(hat.preimage(xs.interior(g)));
        let rhs = cm.target_space.tau(alpha.apply(a));
        if lhs != rhs {
            return Ok(Some(json!({"a": set_json(a), "left": xt.names_of(lhs), "right": xt.names_of(rhs)})));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::FiniteContact;
    use crate::topology::FiniteSpace;

    fn eq3_top() -> FiniteLca {
        FiniteLca::new(FiniteContact::from_pairs(3, &[(0, 1)]).unwrap(), 7).unwrap()
    }

    #[test]
    fn identity_checks_pass() {
        let l = FiniteLca::overlap(3).unwrap();
        let id = ClcaMorphism::identity(&l).unwrap();
        assert!(id.is_valid());
        let d = DbooMorphism::new(FiniteHom::identity(3).unwrap(), l.clone(), l.clone()).unwrap();
        assert!(d.is_valid());
        assert_eq!(v_functor(&d).unwrap().table, id.table);
        assert_eq!(diamond(&id, &id).unwrap().table, id.table);
    }

    #[test]
    fn constant_dual_map_on_overlap() {
        let l = FiniteLca::overlap(2).unwrap();
        let d = DbooMorphism::new(FiniteHom::new(2, 2, vec![0, 0]).unwrap(), l.clone(), l).unwrap();
        assert!(d.is_valid());
        assert_eq!(v_functor(&d).unwrap().table, d.hom.table());
    }

    #[test]
    fn reflection_failure_into_eq3() {
        let src = FiniteLca::overlap(3).unwrap();
        let phi = FiniteHom::new(3, 3, vec![0, 2, 1]).unwrap();
        let r = dboo_check(&phi, &src, &eq3_top()).unwrap();
        assert!(!r.passes("reflects-contact"));
        assert!(r.get("reflects-contact").unwrap().witness.is_some());
    }

    #[test]
    fn round_of_identity_on_eq3() {
        let l = eq3_top();
        let r = round(&FiniteHom::identity(3).unwrap().table(), &l).unwrap();
        assert_eq!(r[0b001], 0);
    }

    #[test]
    fn zero_map_fails_clc5() {
        let l = FiniteLca::overlap(2).unwrap();
        let r = clca_check(&[0, 0, 0, 0], &l, &l).unwrap();
        assert!(r.passes("CLC5") && !r.passes("CLC4"));
        let r = clca_check(&[0, 0, 0, 3], &l, &l).unwrap();
        assert_eq!(r.get("CLC3").unwrap().witness, Some(json!({"a": [0], "b": [0]})));
        let unbounded = FiniteLca::new(FiniteContact::overlap(2).unwrap(), 0).unwrap();
        let r = clca_check(&[0, 0, 0, 3], &unbounded, &l).unwrap();
        assert_eq!(r.get("CLC5").unwrap().witness.as_ref().unwrap()["a"], json!([0, 1]));
    }

    #[test]
    fn rcl_of_collapse() {
        let x = FiniteSpace::discrete(2).unwrap();
        let y = FiniteSpace::discrete(1).unwrap();
        let f = PointMap::new(x, y, vec![0, 0]).unwrap();
        let a = rcl_map(&f).unwrap();
        assert_eq!(a.apply(1), 0b11);
        let cm = bclust_map(&a).unwrap();
        assert_eq!(cm.map, vec![0, 0]);
    }

    #[test]
    fn rcl_of_bijection_and_composition() {
        let x = FiniteSpace::discrete(2).unwrap();
        let swap = PointMap::new(x.clone(), x.clone(), vec![1, 0]).unwrap();
        let a = rcl_map(&swap).unwrap();
        assert_eq!(a.table, vec![0, 2, 1, 3]);
        let z = FiniteSpace::discrete(3).unwrap();
        let g = PointMap::new(z, x.clone(), vec![0, 1, 1]).unwrap();
        let composite = rcl_map(&g.then(&swap).unwrap()).unwrap();
        assert_eq!(diamond(&rcl_map(&g).unwrap(), &a).unwrap().table, composite.table);
    }
}
