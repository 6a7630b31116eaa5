//! Exhaustive, deterministic instance streams for the finite suites.

use crate::algebra::{FiniteHom, PowersetAlgebra};
use crate::contact::{all_contacts, FiniteContact, FiniteLca};
use crate::duality::{comma_report, z_space, CommaObject};
use crate::error::{Error, Result};
use crate::topology::{enumerate_topologies, FiniteSpace, PointMap};

/// Largest `n` accepted by [`enumerate_instances`].
pub const MAX_ENUMERATION: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Topologies(usize),
    ContactRelations(usize),
    BooleanHoms(usize, usize),
    Lcas(usize),
    CommaObjects(usize),
}

#[derive(Debug, Clone)]
pub enum Instances {
    Topologies(Vec<FiniteSpace>),
    ContactRelations(Vec<FiniteContact>),
    BooleanHoms(Vec<FiniteHom>),
    Lcas(Vec<FiniteLca>),
    CommaObjects(Vec<CommaObject>),
}

impl Instances {
    pub fn len(&self) -> usize {
        match self {
            Instances::Topologies(v) => v.len(),
            Instances::ContactRelations(v) => v.len(),
            Instances::BooleanHoms(v) => v.len(),
            Instances::Lcas(v) => v.len(),
            Instances::CommaObjects(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn cap(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::input(format!("instance size must be in 1..={max}, got {n}")));
    }
    Ok(())
}

pub fn enumerate_instances(kind: InstanceKind) -> Result<Instances> {
    Ok(match kind {
        InstanceKind::Topologies(n) => {
            cap(n, 4)?;
            Instances::Topologies(enumerate_topologies(n)?)
        }
        InstanceKind::ContactRelations(n) => {
            cap(n, MAX_ENUMERATION)?;
            Instances::ContactRelations(all_contacts(n)?)
        }
        InstanceKind::BooleanHoms(n, m) => {
            cap(n, MAX_ENUMERATION)?;
            cap(m, MAX_ENUMERATION)?;
            Instances::BooleanHoms(FiniteHom::all(n, m)?)
        }
        InstanceKind::Lcas(n) => {
            cap(n, 4)?;
            Instances::Lcas(FiniteLca::all(n)?)
        }
        InstanceKind::CommaObjects(n) => {
            cap(n, 4)?;
            Instances::CommaObjects(valid_comma_objects(n)?)
        }
    })
}

/// Every space on `1..=n` points, smallest first.
pub fn spaces_up_to(n: usize) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_topologies(k)?);
    }
    Ok(out)
}

/// Candidate comma objects with `Z = Ult(A)` over `A = P(n)`: every map from
/// the discrete `Z` onto every space with at most `n` points.
pub fn comma_candidates(n: usize) -> Result<Vec<(PowersetAlgebra, PointMap)>> {
    let alg = PowersetAlgebra::new(n)?;
    let z = z_space(alg.top())?;
    let mut out = Vec::new();
    for y in spaces_up_to(n)? {
        out.extend(PointMap::all(&z, &y).into_iter().map(|p| (alg, p)));
    }
    Ok(out)
}

/// The candidates that pass every comma-object predicate.
pub fn valid_comma_objects(n: usize) -> Result<Vec<CommaObject>> {
    let mut out = Vec::new();
    for (alg, p) in comma_candidates(n)? {
        if comma_report(alg, alg.top(), &p)?.is_valid() {
            out.push(CommaObject { algebra: alg, z: alg.top(), p });
        }
    }
    Ok(out)
}

/// Every map between two spaces satisfying a predicate.
pub fn maps_where(x: &FiniteSpace, y: &FiniteSpace, keep: impl Fn(&PointMap) -> bool) -> Vec<PointMap> {
    PointMap::all(x, y).into_iter().filter(|m| keep(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let t: Vec<usize> = (1..=4).map(|n| enumerate_instances(InstanceKind::Topologies(n)).unwrap().len()).collect();
        assert_eq!(t, vec![1, 4, 29, 355]);
        assert_eq!(enumerate_instances(InstanceKind::ContactRelations(3)).unwrap().len(), 8);
        assert_eq!(enumerate_instances(InstanceKind::BooleanHoms(2, 2)).unwrap().len(), 4);
        assert_eq!(enumerate_instances(InstanceKind::BooleanHoms(2, 3)).unwrap().len(), 8);
        assert_eq!(enumerate_instances(InstanceKind::Lcas(2)).unwrap().len(), 8);
        let c: Vec<usize> = (1..=3).map(|n| valid_comma_objects(n).unwrap().len()).collect();
        assert_eq!(c, vec![1, 2, 6]);
        assert!(enumerate_instances(InstanceKind::Topologies(5)).is_err());
    }
}
