//! The standard local contact algebra of a finite space, the space of
//! bounded clusters of a finite LCA, and the maps σ and τ between them.

use serde_json::{json, Value};

use super::finite::{FiniteContact, FiniteLca};
use crate::algebra::{atoms_of, AtomSet};
use crate::error::{Error, Result};
use crate::json::set_json;
use crate::topology::{FiniteSpace, PointSet, RegularClosedAlgebra, MAX_POINTS};

/// `(RC(X), F ⌢ G iff F ∩ G ≠ ∅, every element bounded)`, with the RC
/// algebra kept alongside to translate between point sets and atom masks.
#[derive(Debug, Clone)]
pub struct StandardLca {
    pub rc: RegularClosedAlgebra,
    pub lca: FiniteLca,
}

pub fn standard_lca(x: &FiniteSpace) -> Result<StandardLca> {
    let rc = RegularClosedAlgebra::new(x)?;
    let atoms = rc.atoms();
    let rows: Vec<AtomSet> = atoms
        .iter()
        .map(|&f| atoms.iter().enumerate().filter(|(_, &g)| f & g != 0).fold(0, |m, (j, _)| m | 1 << j))
        .collect();
    let contact = FiniteContact::from_adjacency(atoms.len(), &rows)?;
    let lca = FiniteLca::new(contact.clone(), contact.top())?;
    for &f in rc.carrier() {
        for &g in rc.carrier() {
            if (f & g != 0) != lca.contact(rc.to_atoms(f), rc.to_atoms(g)) {
                return Err(Error::Invariant(format!(
                    "lifted contact disagrees with intersection at {}",
                    json!({"F": x.names_of(f), "G": x.names_of(g)})
                )));
            }
        }
    }
    Ok(StandardLca { rc, lca })
}

/// Bounded clusters of a finite LCA as a space whose closed sets are
/// generated by the sets `τ(a)`. Points are named `c[i,j,..]` after the
/// cluster's atom support.
#[derive(Debug, Clone)]
pub struct ClusterSpace {
    pub space: FiniteSpace,
    pub clusters: Vec<AtomSet>,
}

impl ClusterSpace {
    /// `τ(a)`: the bounded clusters containing `a`, as a point set.
    pub fn tau(&self, a: AtomSet) -> PointSet {
        self.clusters.iter().enumerate().filter(|(_, &s)| a & s != 0).fold(0, |m, (k, _)| m | 1 << k)
    }
}

pub fn cluster_name(s: AtomSet) -> String {
    let ids: Vec<String> = atoms_of(s).iter().map(|i| i.to_string()).collect();
    format!("c[{}]", ids.join(","))
}

pub fn bclust_space(lca: &FiniteLca) -> Result<ClusterSpace> {
    let clusters = lca.bounded_clusters()?;
    if clusters.is_empty() {
        return Err(Error::hypothesis("BC3", "the algebra has no bounded clusters"));
    }
    if clusters.len() > MAX_POINTS {
        return Err(Error::Unsupported(format!(
            "{} bounded clusters exceed the {MAX_POINTS}-point space limit",
            clusters.len()
        )));
    }
    let names = clusters.iter().map(|&s| cluster_name(s)).collect();
    let partial = ClusterSpace { space: FiniteSpace::discrete(1)?, clusters };
    let base: Vec<PointSet> = lca.contact_algebra().algebra().elements().map(|a| partial.tau(a)).collect();
    let space = FiniteSpace::from_closed_base(names, &base)?;
    Ok(ClusterSpace { space, clusters: partial.clusters })
}

/// `σ(p) = {F ∈ RC(X) | p ∈ F}`, given by its atom support.
pub fn sigma(x: &FiniteSpace, std: &StandardLca, p: usize) -> Result<AtomSet> {
    if !x.is_discrete() {
        return Err(Error::hypothesis("discrete", "σ is defined here for finite Hausdorff, hence discrete, spaces"));
    }
    if p >= x.len() {
        return Err(Error::input(format!("point {p} out of range")));
    }
    Ok(std.rc.atoms().iter().enumerate().filter(|(_, &f)| f >> p & 1 == 1).fold(0, |m, (i, _)| m | 1 << i))
}

/// For a discrete space: σ is a bijection onto the bounded clusters of the
/// standard LCA and carries each `F` onto `τ(F)`. Returns the first failure.
pub fn sigma_failure(x: &FiniteSpace) -> Result<Option<Value>> {
    let std = standard_lca(x)?;
    let cs = bclust_space(&std.lca)?;
    let mut image = Vec::new();
    for p in 0..x.len() {
        let s = sigma(x, &std, p)?;
        match cs.clusters.iter().position(|&c| c == s) {
            Some(k) => image.push(k),
            None => return Ok(Some(json!({"check": "sigma lands in BClust", "point": x.names()[p], "support": set_json(s)}))),
        }
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != x.len() || cs.clusters.len() != x.len() {
        return Ok(Some(json!({"check": "sigma bijective", "image": image, "clusters": cs.clusters.len()})));
    }
    for &f in std.rc.carrier() {
        let pushed = (0..x.len()).filter(|&p| f >> p & 1 == 1).fold(0, |m, p| m | 1 << image[p]);
        if pushed != cs.tau(std.rc.to_atoms(f)) {
            return Ok(Some(json!({"check": "sigma[F] = tau(F)", "F": x.names_of(f)})));
        }
    }
    Ok(None)
}

/// τ as a table from elements of the LCA to regular closed sets of the
/// cluster space, together with the target algebra.
pub struct TauTable {
    pub space: ClusterSpace,
    pub rc: RegularClosedAlgebra,
    pub table: Vec<PointSet>,
}

pub fn tau_table(lca: &FiniteLca) -> Result<TauTable> {
    let space = bclust_space(lca)?;
    let rc = RegularClosedAlgebra::new(&space.space)?;
    let table = lca.contact_algebra().algebra().elements().map(|a| space.tau(a)).collect();
    Ok(TauTable { space, rc, table })
}

impl TauTable {
    /// Bijective onto RC, a Boolean map, contact preserved and reflected,
    /// and bounded elements matched with compact (here: all) sets.
    pub fn iso_failure(&self, lca: &FiniteLca) -> Option<Value> {
        let mut seen: Vec<PointSet> = self.table.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.table.len() || seen != self.rc.carrier() {
            return Some(json!({"check": "tau bijective onto RC"}));
        }
        let alg = lca.contact_algebra().algebra();
        for a in alg.elements() {
            let ta = self.table[a as usize];
            if self.table[alg.complement(a) as usize] != self.rc.complement(ta) {
                return Some(json!({"check": "tau complement", "a": set_json(a)}));
            }
            if !lca.is_bounded(a) {
                return Some(json!({"check": "tau bounded", "a": set_json(a)}));
            }
            for b in alg.elements() {
                let tb = self.table[b as usize];
                if self.table[(a | b) as usize] != ta | tb || self.table[(a & b) as usize] != self.rc.meet(ta, tb) {
                    return Some(json!({"check": "tau lattice", "a": set_json(a), "b": set_json(b)}));
                }
                if lca.contact(a, b) != (ta & tb != 0) {
                    return Some(json!({"check": "tau contact", "a": set_json(a), "b": set_json(b)}));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_two_points() {
        let x = FiniteSpace::discrete_named(vec!["x".into(), "y".into()]).unwrap();
        let s = standard_lca(&x).unwrap();
        assert_eq!(s.lca, FiniteLca::overlap(2).unwrap());
        assert_eq!(sigma(&x, &s, 0).unwrap(), 0b01);
    }

    #[test]
    fn x3_contact() {
        let x = FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()], vec![0, 1, 4, 5, 7]).unwrap();
        let s = standard_lca(&x).unwrap();
        assert_eq!(s.rc.carrier().len(), 4);
        let pq = s.rc.to_atoms(x.set_of(&["p", "q"]).unwrap());
        let qr = s.rc.to_atoms(x.set_of(&["q", "r"]).unwrap());
        assert!(s.lca.contact(pq, qr));
        assert!(sigma(&x, &s, 0).is_err());
    }

    #[test]
    fn one_point() {
        let s = standard_lca(&FiniteSpace::discrete(1).unwrap()).unwrap();
        assert_eq!(s.lca.n(), 1);
        assert!(s.lca.contact(1, 1));
    }

    #[test]
    fn roundtrip_small_discrete() {
        for n in 1..=5 {
            let x = FiniteSpace::discrete(n).unwrap();
            assert_eq!(sigma_failure(&x).unwrap(), None);
            let t = tau_table(&standard_lca(&x).unwrap().lca).unwrap();
            assert_eq!(t.iso_failure(&standard_lca(&x).unwrap().lca), None);
        }
    }

    #[test]
    fn tau_is_a_join_map() {
        let lca = FiniteLca::overlap(2).unwrap();
        let t = tau_table(&lca).unwrap();
        assert_eq!(t.table, vec![0, 1, 2, 3]);
        assert_eq!(t.space.space.names(), &["c[0]".to_string(), "c[1]".to_string()]);
    }
}
