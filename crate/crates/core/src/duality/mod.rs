//! The comma category of triples `(A, Z, p: Z → Y)`, the functors `U` and
//! `W` relating it to Boolean homomorphisms between LCAs, the map `γ` from
//! quotient classes to bounded clusters, and the reconstruction of a Boolean
//! morphism from a meet-preserving one.
//!
//! At finite scale `Z` must be all of `Ult(A)` and `p` a bijection onto a
//! discrete space; the predicates are nevertheless evaluated, never assumed.
//! The interval backend, in [`interval`], carries the two-to-one quotient.

pub mod interval;
mod square;

pub use square::{mainlml_eval, SquareValue};

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{atoms_of, AtomSet, FiniteHom, PowersetAlgebra};
use crate::contact::{FiniteContact, FiniteLca};
use crate::error::{Error, Result};
use crate::json::set_json;
use crate::morphisms::{bclust_map, dboo_check, ClcaMorphism, ClusterMap, DbooMorphism, RoundPlan, DBOO_CONDITIONS};
use crate::topology::{quotient, FiniteSpace, PointMap, PointSet};

/// Name of the point of `Z` standing for the ultrafilter at atom `i`.
pub fn ult_name(i: usize) -> String {
    format!("u{i}")
}

/// Density (`z`) and openness (`lz`) of `Z` in `Ult(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZlzReport {
    pub z_algebra: bool,
    pub lz_algebra: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// `Z` is dense iff every nonzero element lies in some ultrafilter of `Z`;
/// open iff each of its ultrafilters has a member `a` with `ε(a) ⊆ Z`.
pub fn zlz_predicates(alg: PowersetAlgebra, z: AtomSet) -> Result<ZlzReport> {
    alg.check(z)?;
    let undense = alg.elements().find(|&a| a != 0 && a & z == 0);
    let unopen = atoms_of(z).into_iter().find(|&i| !alg.elements().any(|a| a >> i & 1 == 1 && a & !z == 0));
    let witness = match (undense, unopen) {
        (Some(a), _) => Some(json!({"a": set_json(a)})),
        (None, Some(i)) => Some(json!({"u": ult_name(i)})),
        _ => None,
    };
    Ok(ZlzReport { z_algebra: undense.is_none(), lz_algebra: unopen.is_none(), witness })
}

/// Per-predicate validity of a candidate comma object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommaReport {
    pub z_algebra: bool,
    pub lz_algebra: bool,
    pub p_continuous: bool,
    pub p_perfect: bool,
    pub p_irreducible: bool,
    pub domain_extremally_disconnected: bool,
    pub domain_hausdorff: bool,
    pub codomain_hausdorff: bool,
    /// Finite objects always have `Z = Ult(A)` and a bijective `p`.
    pub note: &'static str,
}

impl CommaReport {
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.z_algebra, "z-algebra"),
            (self.lz_algebra, "lz-algebra"),
            (self.p_continuous, "continuous"),
            (self.p_perfect, "perfect"),
            (self.p_irreducible, "irreducible"),
            (self.domain_extremally_disconnected, "extremally disconnected"),
            (self.domain_hausdorff, "domain Hausdorff"),
            (self.codomain_hausdorff, "codomain Hausdorff"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }

    pub fn is_valid(&self) -> bool {
        self.first_failure().is_none()
    }
}

const FINITE_NOTE: &str = "finite scale: Z = Ult(A) and p is a bijection onto a discrete space";

/// `(A, Z, p)` with `A = P(n)`, `Z` an atom mask and `p: Z → Y`, where `Z`
/// is the discrete space whose points are the ultrafilters in `Z` in
/// ascending atom order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommaObject {
    pub algebra: PowersetAlgebra,
    pub z: AtomSet,
    pub p: PointMap,
}

impl CommaObject {
    /// Ultrafilter atom of `Z`-point `k`.
    pub fn z_atoms(&self) -> Vec<usize> {
        atoms_of(self.z)
    }

    pub fn y(&self) -> &FiniteSpace {
        self.p.cod()
    }

    /// `p(ε^Z(a))` as a point set of `Y`.
    pub fn p_eps(&self, a: AtomSet) -> PointSet {
        self.z_atoms().iter().enumerate().filter(|(_, &i)| a >> i & 1 == 1).fold(0, |m, (k, _)| m | 1 << self.p.at(k))
    }

    /// Position of an atom in `Z`.
    pub fn z_index(&self, atom: usize) -> Option<usize> {
        self.z_atoms().iter().position(|&i| i == atom)
    }

    pub fn to_json(&self) -> Value {
        let zs = self.z_atoms();
        let classes: Vec<Vec<String>> = (0..self.y().len())
            .map(|y| (0..zs.len()).filter(|&k| self.p.at(k) == y).map(|k| ult_name(zs[k])).collect())
            .collect();
        let z = if self.z == self.algebra.top() { json!("all") } else { json!(zs.iter().map(|&i| ult_name(i)).collect::<Vec<_>>()) };
        json!({"algebra": {"atoms": self.algebra.atom_count()}, "Z": z, "p": {"classes": classes, "Y": self.y().names()}})
    }
}

pub fn z_space(z: AtomSet) -> Result<FiniteSpace> {
    FiniteSpace::discrete_named(atoms_of(z).into_iter().map(ult_name).collect())
}

pub fn comma_report(algebra: PowersetAlgebra, z: AtomSet, p: &PointMap) -> Result<CommaReport> {
    let zl = zlz_predicates(algebra, z)?;
    if p.dom().len() != z.count_ones() as usize {
        return Err(Error::input("p must be defined on the points of Z"));
    }
    let r = p.predicates();
    Ok(CommaReport {
        z_algebra: zl.z_algebra,
        lz_algebra: zl.lz_algebra,
        p_continuous: r.continuous,
        p_perfect: r.perfect && r.continuous,
        p_irreducible: r.irreducible,
        domain_extremally_disconnected: p.dom().is_extremally_disconnected(),
        domain_hausdorff: p.dom().is_hausdorff(),
        codomain_hausdorff: p.cod().is_hausdorff(),
        note: FINITE_NOTE,
    })
}

/// Validate and build; an invalid candidate yields a hypothesis error
/// naming the first failed predicate.
pub fn make_comma(algebra: PowersetAlgebra, z: AtomSet, p: PointMap) -> Result<CommaObject> {
    let r = comma_report(algebra, z, &p)?;
    if let Some(pred) = r.first_failure() {
        return Err(Error::hypothesis(pred, format!("comma object fails `{pred}`: {}", json!(r))));
    }
    Ok(CommaObject { algebra, z, p })
}

/// A morphism `(φ, g, f): o → o'` with `φ: A → A'`, `g: Z' → Z` and
/// `f: Y' → Y`; `g` and `f` are stored as value lists on point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommaMorphism {
    pub phi: FiniteHom,
    pub g: Vec<usize>,
    pub f: PointMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommaMorphismReport {
    pub hom: bool,
    pub g_is_ult_restriction: bool,
    pub square_commutes: bool,
    pub f_continuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CommaMorphismReport {
    pub fn is_valid(&self) -> bool {
        self.hom && self.g_is_ult_restriction && self.square_commutes && self.f_continuous
    }
}

pub fn comma_morphism_check(m: &CommaMorphism, o: &CommaObject, o2: &CommaObject) -> Result<CommaMorphismReport> {
    if m.phi.dom() != o.algebra.atom_count() || m.phi.cod() != o2.algebra.atom_count() {
        return Err(Error::input("φ does not run between the two algebras"));
    }
    if m.f.dom() != o2.y() || m.f.cod() != o.y() {
        return Err(Error::input("f must run from Y' to Y"));
    }
    let (zs, zs2) = (o.z_atoms(), o2.z_atoms());
    if m.g.len() != zs2.len() || m.g.iter().any(|&k| k >= zs.len()) {
        return Err(Error::input("g must send each point of Z' to a point of Z"));
    }
    let mut witness = None;
    let g_ok = (0..zs2.len()).all(|k| {
        let ok = m.phi.dual_map()[zs2[k]] == zs[m.g[k]];
        if !ok && witness.is_none() {
            witness = Some(json!({"check": "g = Ult(φ) on Z'", "u": ult_name(zs2[k])}));
        }
        ok
    });
    let sq_ok = (0..zs2.len()).all(|k| {
        let ok = o.p.at(m.g[k]) == m.f.at(o2.p.at(k));
        if !ok && witness.is_none() {
            witness = Some(json!({"check": "p ∘ g = f ∘ p'", "u": ult_name(zs2[k])}));
        }
        ok
    });
    Ok(CommaMorphismReport {
        hom: m.phi.is_hom(),
        g_is_ult_restriction: g_ok,
        square_commutes: sq_ok,
        f_continuous: m.f.is_continuous(),
        witness,
    })
}

/// `(φ, g, f) ∼ (φ₁, g₁, f₁)` iff `f = f₁`.
pub fn sim(m1: &CommaMorphism, m2: &CommaMorphism) -> bool {
    m1.f == m2.f
}

pub fn identity_morphism(o: &CommaObject) -> Result<CommaMorphism> {
    Ok(CommaMorphism {
        phi: FiniteHom::identity(o.algebra.atom_count())?,
        g: (0..o.z.count_ones() as usize).collect(),
        f: PointMap::identity(o.y()),
    })
}

/// `U(A, Z, p) = (A, ⌢_p, 𝔹_p)`, certified to be an LCA whose ultrafilter
/// contact on `Z` is "same image under `p`".
pub fn u_functor(o: &CommaObject) -> Result<FiniteLca> {
    let n = o.algebra.atom_count();
    let zs = o.z_atoms();
    let rows: Vec<AtomSet> = (0..n)
        .map(|i| match o.z_index(i) {
            Some(k) => zs
                .iter()
                .enumerate()
                .filter(|(k2, _)| o.p.at(*k2) == o.p.at(k))
                .fold(0, |m, (_, &j)| m | 1 << j),
            None => 0,
        })
        .collect();
    let contact = FiniteContact::from_adjacency(n, &rows)?;
    for a in o.algebra.elements() {
        for b in o.algebra.elements() {
            if contact.contact(a, b) != (o.p_eps(a) & o.p_eps(b) != 0) {
                return Err(Error::Invariant(format!(
                    "lifted contact differs from ⌢_p at {}",
                    json!({"a": set_json(a), "b": set_json(b)})
                )));
            }
        }
    }
    let lca = FiniteLca::new(contact, o.z)?;
    let report = lca.axiom_report();
    if !report.is_local_contact_algebra() {
        return Err(Error::violation("u-functor", json!({"object": o.to_json(), "report": report})));
    }
    if let Some(w) = remark_failure(o, &lca) {
        return Err(Error::violation("u-functor-ultrafilter-contact", w));
    }
    Ok(lca)
}

/// Ultrafilter contact on `Z` against equality of images under `p`.
pub fn remark_failure(o: &CommaObject, lca: &FiniteLca) -> Option<Value> {
    let zs = o.z_atoms();
    for (k, &i) in zs.iter().enumerate() {
        for (k2, &j) in zs.iter().enumerate() {
            if lca.contact_algebra().ult_contact(i, j) != (o.p.at(k) == o.p.at(k2)) {
                return Some(json!({"u": ult_name(i), "v": ult_name(j)}));
            }
        }
    }
    None
}

/// `ρ_p` carries the compact open subsets of `Z` exactly onto `CR(Y)`.
pub fn compact_open_failure(o: &CommaObject) -> Result<Option<Value>> {
    let rc = crate::topology::RegularClosedAlgebra::new(o.y())?;
    let zfull: PointSet = (1 << o.p.dom().len()) - 1;
    let mut images: Vec<PointSet> = (0..=zfull).map(|h| o.p.image(h)).collect();
    images.sort_unstable();
    images.dedup();
    if images != rc.carrier() {
        return Ok(Some(json!({"images": images.len(), "compact_regular_closed": rc.carrier().len()})));
    }
    Ok(None)
}

/// The classes of `BUlt(L)` under ultrafilter contact, in order of their
/// least atom.
pub fn ult_classes(lca: &FiniteLca) -> Vec<Vec<usize>> {
    let zs = lca.bounded_ultrafilters();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in &zs {
        match classes.iter_mut().find(|c| lca.contact_algebra().ult_contact(c[0], i)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn require_lca(lca: &FiniteLca) -> Result<()> {
    let r = lca.axiom_report();
    if let Some(f) = r.failures().first() {
        return Err(Error::hypothesis(
            "local contact algebra",
            format!("{} fails with witness {}", f.axiom, f.witness.clone().unwrap_or(Value::Null)),
        ));
    }
    if !r.exhaustive {
        return Err(Error::Unsupported("axioms could not be evaluated exhaustively at this size".into()));
    }
    Ok(())
}

/// `W(L) = (A, BUlt(A), BUlt(A) → BUlt(A)/⌢)`, certified by `U(W(L)) = L`.
pub fn w_functor(lca: &FiniteLca) -> Result<CommaObject> {
    require_lca(lca)?;
    let z = lca.bounded_generator();
    let zs = atoms_of(z);
    let classes: Vec<Vec<usize>> = ult_classes(lca)
        .into_iter()
        .map(|c| c.into_iter().map(|i| zs.iter().position(|&j| j == i).expect("class member lies in Z")).collect())
        .collect();
    let (_, p) = quotient(&z_space(z)?, &classes)?;
    let o = make_comma(lca.contact_algebra().algebra(), z, p)?;
    let back = u_functor(&o)?;
    if back != *lca {
        return Err(Error::violation("uw-roundtrip", json!({"object": o.to_json()})));
    }
    Ok(o)
}

/// `W` on a Boolean morphism `φ: L → L'`: `g = Ult(φ)` on `Z'` and
/// `f(p'(u')) = p(φ⁻¹ u')`, checked to be well defined.
pub fn w_on_morphism(phi: &DbooMorphism) -> Result<(CommaObject, CommaObject, CommaMorphism)> {
    let o = w_functor(&phi.source)?;
    let o2 = w_functor(&phi.target)?;
    let zs2 = o2.z_atoms();
    let mut g = Vec::with_capacity(zs2.len());
    for &j in &zs2 {
        let i = phi.hom.dual_map()[j];
        g.push(o.z_index(i).ok_or_else(|| {
            Error::hypothesis("bounded", format!("Ult(φ) sends {} outside Z", ult_name(j)))
        })?);
    }
    let mut fvals = vec![usize::MAX; o2.y().len()];
    for (k, &gk) in g.iter().enumerate().take(zs2.len()) {
        let y2 = o2.p.at(k);
        let y = o.p.at(gk);
        if fvals[y2] != usize::MAX && fvals[y2] != y {
            return Err(Error::violation("w-functor", json!({"fiber": o2.y().names()[y2]})));
        }
        fvals[y2] = y;
    }
    let f = PointMap::new(o2.y().clone(), o.y().clone(), fvals)?;
    let m = CommaMorphism { phi: phi.hom.clone(), g, f };
    let r = comma_morphism_check(&m, &o, &o2)?;
    if !r.is_valid() {
        return Err(Error::violation("w-functor", json!(r)));
    }
    Ok((o, o2, m))
}

/// `h_p: Y → Z/⌢_p`, sending `y` to the class of its fiber, as a map into
/// the codomain of `W(U(o))`.
pub fn h_p(o: &CommaObject, wu: &CommaObject) -> Result<PointMap> {
    let mut vals = vec![usize::MAX; o.y().len()];
    for k in 0..o.p.dom().len() {
        let y = o.p.at(k);
        let atom = o.z_atoms()[k];
        let k2 = wu.z_index(atom).ok_or_else(|| Error::Invariant("Z changed under W∘U".into()))?;
        let c = wu.p.at(k2);
        if vals[y] != usize::MAX && vals[y] != c {
            return Err(Error::violation("h_p", json!({"point": o.y().names()[y]})));
        }
        vals[y] = c;
    }
    PointMap::new(o.y().clone(), wu.y().clone(), vals)
}

fn is_homeomorphism(h: &PointMap) -> bool {
    h.is_injective() && h.is_surjective() && h.is_continuous() && h.is_closed()
}

/// `W(U(o)) ≅ o` through `λ = (1_A, 1_Z, h_p⁻¹): o → W(U(o))`.
pub fn wu_iso_failure(o: &CommaObject) -> Result<Option<Value>> {
    let wu = w_functor(&u_functor(o)?)?;
    if wu.z != o.z || wu.algebra != o.algebra {
        return Ok(Some(json!({"check": "A and Z preserved"})));
    }
    let h = h_p(o, &wu)?;
    if !is_homeomorphism(&h) {
        return Ok(Some(json!({"check": "h_p homeomorphism", "h": h.values()})));
    }
    let mut inv = vec![0; h.values().len()];
    for (y, &c) in h.values().iter().enumerate() {
        inv[c] = y;
    }
    let lambda = CommaMorphism {
        phi: FiniteHom::identity(o.algebra.atom_count())?,
        g: (0..o.p.dom().len()).collect(),
        f: PointMap::new(wu.y().clone(), o.y().clone(), inv)?,
    };
    let r = comma_morphism_check(&lambda, o, &wu)?;
    Ok((!r.is_valid()).then(|| json!({"check": "λ is a comma morphism", "report": r})))
}

/// `γ_A: [u] ↦ 𝔠_u` as an index map from quotient classes of `W(L)` to
/// the bounded clusters of `L`, certified bijective and compatible with the
/// closed bases.
#[derive(Debug, Clone)]
pub struct Gamma {
    pub object: CommaObject,
    pub clusters: crate::contact::ClusterSpace,
    /// `map[class]` is the cluster index.
    pub map: Vec<usize>,
}

pub fn gamma(lca: &FiniteLca) -> Result<Gamma> {
    let object = w_functor(lca)?;
    let clusters = crate::contact::bclust_space(lca)?;
    let zs = object.z_atoms();
    let mut map = vec![usize::MAX; object.y().len()];
    for (k, &i) in zs.iter().enumerate() {
        let support = lca.cluster_of_bounded_ultrafilter(i)?;
        let idx = clusters
            .clusters
            .iter()
            .position(|&s| s == support)
            .ok_or_else(|| Error::violation("gamma", json!({"u": ult_name(i), "support": set_json(support)})))?;
        let class = object.p.at(k);
        if map[class] != usize::MAX && map[class] != idx {
            return Err(Error::violation("gamma", json!({"check": "well defined", "u": ult_name(i)})));
        }
        map[class] = idx;
    }
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() || map.len() != clusters.clusters.len() {
        return Err(Error::violation("gamma", json!({"check": "bijective", "map": map})));
    }
    for a in lca.contact_algebra().algebra().elements() {
        let pushed = (0..object.y().len())
            .filter(|&c| object.p_eps(a) >> c & 1 == 1)
            .fold(0, |m, c| m | 1 << map[c]);
        if pushed != clusters.tau(a) {
            return Err(Error::violation("gamma", json!({"check": "γ(p(ε(a))) = τ(a)", "a": set_json(a)})));
        }
    }
    Ok(Gamma { object, clusters, map })
}

impl Gamma {
    pub fn inverse(&self, cluster: usize) -> usize {
        self.map.iter().position(|&c| c == cluster).expect("γ is bijective")
    }
}

/// For two parallel comma morphisms: whether the `f` components agree and whether the
/// rounded `φ` components agree, asserting that the two answers coincide.
pub fn u2l_check(m1: &CommaMorphism, m2: &CommaMorphism, o: &CommaObject, o2: &CommaObject) -> Result<(bool, bool)> {
    for m in [m1, m2] {
        let r = comma_morphism_check(m, o, o2)?;
        if !r.is_valid() {
            return Err(Error::hypothesis("comma morphism", json!(r).to_string()));
        }
    }
    let src = u_functor(o)?;
    let plan = RoundPlan::new(&src);
    let f_eq = m1.f == m2.f;
    let r_eq = plan.round(&m1.phi.table()) == plan.round(&m2.phi.table());
    if f_eq != r_eq {
        return Err(Error::violation(
            "lemma-3.14",
            json!({"phi": m1.phi.dual_map(), "psi": m2.phi.dual_map(), "f_equal": f_eq, "round_equal": r_eq}),
        ));
    }
    Ok((f_eq, r_eq))
}

/// The data produced while reconstructing a Boolean morphism from `α`.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub phi: DbooMorphism,
    pub cluster_map: ClusterMap,
    pub gamma_source: Gamma,
    pub gamma_target: Gamma,
    /// `f̄ = γ_A⁻¹ ∘ α̂ ∘ γ_A'` on quotient classes.
    pub f_bar: Vec<usize>,
}

pub fn reconstruct_dboo(alpha: &ClcaMorphism) -> Result<Reconstruction> {
    let cm = bclust_map(alpha)?;
    let gs = gamma(&alpha.source)?;
    let gt = gamma(&alpha.target)?;
    if gt.object.z != alpha.target.top() {
        return Err(Error::Unsupported("reconstruction needs every target ultrafilter to be bounded".into()));
    }
    let f_bar: Vec<usize> = (0..gt.object.y().len()).map(|c2| gs.inverse(cm.map[gt.map[c2]])).collect();
    let zs = gs.object.z_atoms();
    let dual: Vec<usize> = (0..alpha.target.n())
        .map(|j| {
            let k2 = gt.object.z_index(j).expect("Z is everything");
            let class = f_bar[gt.object.p.at(k2)];
            let k = (0..zs.len()).find(|&k| gs.object.p.at(k) == class).expect("p is surjective");
            zs[k]
        })
        .collect();
    let hom = FiniteHom::new(alpha.source.n(), alpha.target.n(), dual)?;
    let phi = DbooMorphism::new(hom, alpha.source.clone(), alpha.target.clone())?;
    let rounded = RoundPlan::new(&alpha.source).round(&phi.hom.table());
    if !phi.report.all_pass(&DBOO_CONDITIONS) || rounded != alpha.table {
        return Err(Error::violation(
            "thm-4.7-reconstruction",
            json!({"alpha": alpha.to_json(), "dual_map": phi.hom.dual_map(), "report": phi.report}),
        ));
    }
    Ok(Reconstruction { phi, cluster_map: cm, gamma_source: gs, gamma_target: gt, f_bar })
}

/// `γ_A(f_φ(y')) = α̂(γ_A'(y'))` for every class `y'`, with `f_φ` taken from
/// `W` on the reconstructed morphism.
pub fn cor48_failure(alpha: &ClcaMorphism) -> Result<Option<Value>> {
    let rec = reconstruct_dboo(alpha)?;
    let (_, _, wm) = w_on_morphism(&rec.phi)?;
    for y2 in 0..rec.gamma_target.object.y().len() {
        let lhs = rec.gamma_source.map[wm.f.at(y2)];
        let rhs = rec.cluster_map.map[rec.gamma_target.map[y2]];
        if lhs != rhs {
            return Ok(Some(json!({"class": rec.gamma_target.object.y().names()[y2], "left": lhs, "right": rhs})));
        }
    }
    Ok(None)
}

/// Reject `dboo_check` failures before a reconstruction comparison.
pub fn require_dboo(phi: &FiniteHom, source: &FiniteLca, target: &FiniteLca) -> Result<DbooMorphism> {
    let r = dboo_check(phi, source, target)?;
    if !r.all_pass(&DBOO_CONDITIONS) {
        return Err(Error::hypothesis("DBoo morphism", json!(r).to_string()));
    }
    Ok(DbooMorphism { hom: phi.clone(), source: source.clone(), target: target.clone(), report: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::{rcl_map, v_functor};

    fn identity_object(n: usize) -> CommaObject {
        let z = z_space((1 << n) - 1).unwrap();
        make_comma(PowersetAlgebra::new(n).unwrap(), (1 << n) - 1, PointMap::identity(&z)).unwrap()
    }

    #[test]
    fn zlz_examples() {
        let a2 = PowersetAlgebra::new(2).unwrap();
        assert!(zlz_predicates(a2, 3).unwrap().z_algebra);
        let r = zlz_predicates(a2, 1).unwrap();
        assert!(!r.z_algebra && r.lz_algebra);
        assert_eq!(r.witness, Some(json!({"a": [1]})));
    }

    #[test]
    fn comma_validation() {
        let o = identity_object(2);
        assert_eq!(u_functor(&o).unwrap(), FiniteLca::overlap(2).unwrap());
        assert_eq!(compact_open_failure(&o).unwrap(), None);
        let id = identity_morphism(&o).unwrap();
        assert!(comma_morphism_check(&id, &o, &o).unwrap().is_valid());
        assert!(sim(&id, &id));
        let z = z_space(3).unwrap();
        let (_, q) = quotient(&z, &[vec![0, 1]]).unwrap();
        let err = make_comma(PowersetAlgebra::new(2).unwrap(), 3, q).unwrap_err();
        assert!(matches!(err, Error::Hypothesis { ref predicate, .. } if predicate == "irreducible"));
    }

    #[test]
    fn w_and_gamma() {
        let l = FiniteLca::overlap(3).unwrap();
        let o = w_functor(&l).unwrap();
        assert_eq!(o.y().len(), 3);
        assert!(o.p.is_injective());
        assert_eq!(wu_iso_failure(&o).unwrap(), None);
        let g = gamma(&FiniteLca::overlap(2).unwrap()).unwrap();
        assert_eq!(g.clusters.clusters[g.map[0]], 0b01);
        assert!(w_functor(&FiniteLca::new(FiniteContact::from_pairs(3, &[(0, 1)]).unwrap(), 7).unwrap()).is_err());
    }

    #[test]
    fn reconstruction_examples() {
        let l = FiniteLca::overlap(2).unwrap();
        let rec = reconstruct_dboo(&ClcaMorphism::identity(&l).unwrap()).unwrap();
        assert_eq!(rec.phi.hom, FiniteHom::identity(2).unwrap());
        let x = FiniteSpace::discrete(3).unwrap();
        let y = FiniteSpace::discrete(2).unwrap();
        let f = PointMap::new(x, y, vec![1, 0, 1]).unwrap();
        let rec = reconstruct_dboo(&rcl_map(&f).unwrap()).unwrap();
        assert_eq!(rec.phi.hom.dual_map(), &[1, 0, 1]);
        let l3 = FiniteLca::overlap(3).unwrap();
        let phi0 = DbooMorphism::new(FiniteHom::new(3, 2, vec![2, 2]).unwrap(), l3, l).unwrap();
        let rec = reconstruct_dboo(&v_functor(&phi0).unwrap()).unwrap();
        assert!(crate::morphisms::backsim(&rec.phi, &phi0).unwrap());
        assert_eq!(cor48_failure(&rcl_map(&f).unwrap()).unwrap(), None);
    }

    #[test]
    fn comma_morphism_equality_on_identity_objects() {
        let o = identity_object(2);
        let m1 = identity_morphism(&o).unwrap();
        let swap = CommaMorphism {
            phi: FiniteHom::new(2, 2, vec![1, 0]).unwrap(),
            g: vec![1, 0],
            f: PointMap::new(o.y().clone(), o.y().clone(), vec![1, 0]).unwrap(),
        };
        assert_eq!(u2l_check(&m1, &m1, &o, &o).unwrap(), (true, true));
        assert_eq!(u2l_check(&m1, &swap, &o, &o).unwrap(), (false, false));
    }
}
