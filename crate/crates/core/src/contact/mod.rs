//! Contact algebras, local contact algebras and their clusters, over both
//! algebra backends.

pub mod finite;
pub mod interval;
pub mod report;
pub mod roeper;

pub use finite::{all_contacts, FiniteContact, FiniteLca};
pub use interval::{IntervalCluster, IntervalContact};
pub use report::{AxiomEntry, AxiomReport, Status};
pub use roeper::{bclust_space, sigma, standard_lca, tau_table, ClusterSpace, StandardLca};

use serde_json::Value;

use crate::algebra::{Algebra, Element, Ultrafilter};
use crate::error::{Error, Result};
use crate::json::{region_json, set_json};

/// Sample count for interval checks when the caller does not choose one.
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Pairs(Vec<(usize, usize)>),
    Overlap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContactAlgebra {
    Finite(FiniteContact),
    Interval(IntervalContact),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalContactAlgebra {
    Finite(FiniteLca),
    /// Overlap contact with the ray-free ideal.
    Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cluster {
    /// Atom support; `a` is a member iff it meets the support.
    Finite(u32),
    Interval(IntervalCluster),
}

impl Cluster {
    pub fn contains(&self, a: &Element) -> Result<bool> {
        match (self, a) {
            (Cluster::Finite(s), Element::Finite(m)) => Ok(s & m != 0),
            (Cluster::Interval(c), Element::Interval(r)) => Ok(c.contains(r)),
            _ => Err(mixed()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Cluster::Finite(s) => serde_json::json!({"support": set_json(*s)}),
            Cluster::Interval(c) => c.to_json(),
        }
    }
}

fn mixed() -> Error {
    Error::input("finite and interval values cannot be mixed")
}

pub fn make_contact(algebra: &Algebra, relation: Relation) -> Result<ContactAlgebra> {
    match (algebra, relation) {
        (Algebra::FinitePowerset(p), Relation::Pairs(pairs)) => {
            Ok(ContactAlgebra::Finite(FiniteContact::from_pairs(p.atom_count(), &pairs)?))
        }
        (Algebra::FinitePowerset(p), Relation::Overlap) => {
            Ok(ContactAlgebra::Finite(FiniteContact::overlap(p.atom_count())?))
        }
        (Algebra::RationalInterval, Relation::Overlap) => Ok(ContactAlgebra::Interval(IntervalContact::overlap())),
        (Algebra::RationalInterval, Relation::Pairs(_)) => {
            Err(Error::Unsupported("the interval backend supports only overlap contact".into()))
        }
    }
}

impl ContactAlgebra {
    pub fn contact(&self, a: &Element, b: &Element) -> Result<bool> {
        match (self, a, b) {
            (ContactAlgebra::Finite(c), Element::Finite(x), Element::Finite(y)) => {
                c.algebra().check(*x)?;
                c.algebra().check(*y)?;
                Ok(c.contact(*x, *y))
            }
            (ContactAlgebra::Interval(c), Element::Interval(x), Element::Interval(y)) => Ok(c.contact(x, y)),
            _ => Err(mixed()),
        }
    }

    pub fn way_below(&self, a: &Element, b: &Element) -> Result<bool> {
        match (self, a, b) {
            (ContactAlgebra::Finite(c), Element::Finite(x), Element::Finite(y)) => {
                c.algebra().check(*x)?;
                c.algebra().check(*y)?;
                Ok(c.way_below(*x, *y))
            }
            (ContactAlgebra::Interval(c), Element::Interval(x), Element::Interval(y)) => Ok(c.way_below(x, y)),
            _ => Err(mixed()),
        }
    }

    pub fn ultrafilter_contact(&self, u: &Ultrafilter, v: &Ultrafilter) -> Result<bool> {
        match (self, u, v) {
            (ContactAlgebra::Finite(c), Ultrafilter::Finite(i), Ultrafilter::Finite(j)) if *i < c.n() && *j < c.n() => {
                Ok(c.ult_contact(*i, *j))
            }
            (ContactAlgebra::Interval(c), Ultrafilter::Interval(x), Ultrafilter::Interval(y)) => Ok(c.ult_contact(x, y)),
            _ => Err(Error::input("ultrafilters do not belong to this algebra")),
        }
    }

    pub fn axiom_report(&self, seed: u64, samples: usize) -> AxiomReport {
        match self {
            ContactAlgebra::Finite(c) => c.axiom_report(),
            ContactAlgebra::Interval(c) => c.axiom_report(seed, samples),
        }
    }

    /// Clusters and clans, finite backend only.
    pub fn clusters_and_clans(&self) -> Result<(Vec<Cluster>, Vec<Cluster>)> {
        match self {
            ContactAlgebra::Finite(c) => Ok((
                c.clusters()?.into_iter().map(Cluster::Finite).collect(),
                c.clans()?.into_iter().map(Cluster::Finite).collect(),
            )),
            ContactAlgebra::Interval(_) => {
                Err(Error::Unsupported("cluster enumeration is available only for finite algebras".into()))
            }
        }
    }
}

impl LocalContactAlgebra {
    pub fn contact_algebra(&self) -> ContactAlgebra {
        match self {
            LocalContactAlgebra::Finite(l) => ContactAlgebra::Finite(l.contact_algebra().clone()),
            LocalContactAlgebra::Interval => ContactAlgebra::Interval(IntervalContact::overlap()),
        }
    }

    pub fn alexandroff_extension(&self) -> ContactAlgebra {
        match self {
            LocalContactAlgebra::Finite(l) => ContactAlgebra::Finite(l.alexandroff()),
            LocalContactAlgebra::Interval => ContactAlgebra::Interval(IntervalContact::extended()),
        }
    }

    pub fn axiom_report(&self, seed: u64, samples: usize) -> AxiomReport {
        match self {
            LocalContactAlgebra::Finite(l) => l.axiom_report(),
            LocalContactAlgebra::Interval => {
                let c = IntervalContact::overlap();
                let mut r = c.axiom_report(seed, samples);
                c.bounded_axioms(&mut r, seed, samples);
                r
            }
        }
    }

    pub fn c_infinity(&self) -> Result<Cluster> {
        match self {
            LocalContactAlgebra::Finite(l) => Ok(Cluster::Finite(l.c_infinity()?)),
            LocalContactAlgebra::Interval => Ok(Cluster::Interval(IntervalCluster::Infinity)),
        }
    }

    /// The cluster of a bounded ultrafilter.
    pub fn cluster_of_ultrafilter(&self, u: &Ultrafilter) -> Result<Cluster> {
        match (self, u) {
            (LocalContactAlgebra::Finite(l), Ultrafilter::Finite(i)) => {
                Ok(Cluster::Finite(l.cluster_of_bounded_ultrafilter(*i)?))
            }
            (LocalContactAlgebra::Interval, Ultrafilter::Interval(w)) => {
                if !w.is_bounded() {
                    return Err(Error::hypothesis("bounded ultrafilter", "ultrafilters at infinity contain no bounded element"));
                }
                Ok(Cluster::Interval(IntervalContact::overlap().cluster_of_ultrafilter(w)?))
            }
            _ => Err(mixed()),
        }
    }

    /// Whether the element belongs to the bounded ideal.
    pub fn is_bounded(&self, a: &Element) -> Result<bool> {
        match (self, a) {
            (LocalContactAlgebra::Finite(l), Element::Finite(m)) => Ok(l.is_bounded(*m)),
            (LocalContactAlgebra::Interval, Element::Interval(r)) => Ok(r.is_bounded()),
            _ => Err(mixed()),
        }
    }
}

/// JSON for an element of either backend.
pub fn element_json(a: &Element) -> Value {
    match a {
        Element::Finite(m) => set_json(*m),
        Element::Interval(r) => region_json(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, make_algebra, BackendSpec, Region};

    #[test]
    fn make_contact_examples() {
        let a3 = make_algebra(BackendSpec::FinitePowerset(3)).unwrap();
        let eq3 = make_contact(&a3, Relation::Pairs(vec![(0, 1)])).unwrap();
        assert!(eq3.contact(&Element::Finite(1), &Element::Finite(2)).unwrap());
        assert!(!eq3.contact(&Element::Finite(1), &Element::Finite(4)).unwrap());
        let iv = make_algebra(BackendSpec::RationalInterval).unwrap();
        assert!(matches!(make_contact(&iv, Relation::Pairs(vec![])), Err(Error::Unsupported(_))));
        let ov = make_contact(&iv, Relation::Overlap).unwrap();
        let a = Element::Interval(Region::interval(int(0), int(1)));
        let b = Element::Interval(Region::interval(int(1), int(2)));
        assert!(ov.contact(&a, &b).unwrap());
        assert!(ov.clusters_and_clans().is_err());
    }

    #[test]
    fn interval_lca_report_and_infinity() {
        let l = LocalContactAlgebra::Interval;
        assert!(l.axiom_report(1, 200).is_local_contact_algebra());
        let c = l.c_infinity().unwrap();
        assert!(c.contains(&Element::Interval(Region::right_ray(int(0)))).unwrap());
    }
}
