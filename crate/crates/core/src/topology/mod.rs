//! Finite topological spaces given by explicit open families.

mod maps;
mod rc;

pub use maps::{absolute, dense_r_e, quotient, rho, DenseIso, MapReport, PointMap, RhoIso};
pub use rc::RegularClosedAlgebra;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// A set of points, bit `i` for point `i`.
pub type PointSet = u32;

pub const MAX_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: Vec<PointSet>,
    /// Smallest open neighbourhood of each point.
    nbhd: Vec<PointSet>,
}

/// Predicates on a single space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub hausdorff: bool,
    pub discrete: bool,
    pub extremally_disconnected: bool,
    pub regular_closed_count: usize,
}

impl FiniteSpace {
    /// Validate an open family. Missing unions or intersections are reported,
    /// never added.
    pub fn new(names: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > MAX_POINTS {
            return Err(Error::input(format!("a space needs 1..={MAX_POINTS} points, got {n}")));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::input("point names must be distinct"));
        }
        let full: PointSet = (1 << n) - 1;
        if let Some(bad) = opens.iter().find(|&&u| u & !full != 0) {
            return Err(Error::input(format!("open set {bad:#b} mentions unknown points")));
        }
        let family: BTreeSet<PointSet> = opens.into_iter().collect();
        let mut missing = BTreeSet::new();
        for required in [0, full] {
            if !family.contains(&required) {
                missing.insert(required);
            }
        }
        for &u in &family {
            for &v in &family {
                for w in [u | v, u & v] {
                    if !family.contains(&w) {
                        missing.insert(w);
                    }
                }
            }
        }
        if !missing.is_empty() {
            let listed: Vec<Vec<String>> = missing.iter().map(|&m| mask_names(&names, m)).collect();
            return Err(Error::input(format!(
                "open family is not a topology; missing sets: {listed:?}"
            )));
        }
        let opens: Vec<PointSet> = family.into_iter().collect();
        let nbhd = (0..n)
            .map(|x| opens.iter().filter(|&&u| u >> x & 1 == 1).fold(full, |acc, &u| acc & u))
            .collect();
        Ok(FiniteSpace { names, opens, nbhd })
    }

    /// Build from a family of closed sets (closed under finite unions and
    /// arbitrary intersections after completion by intersection).
    pub fn from_closed_base(names: Vec<String>, base: &[PointSet]) -> Result<Self> {
        let full: PointSet = (1 << names.len()) - 1;
        let mut closed: BTreeSet<PointSet> = base.iter().copied().collect();
        closed.insert(full);
        closed.insert(0);
        loop {
            let snapshot: Vec<PointSet> = closed.iter().copied().collect();
            let before = closed.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    closed.insert(a & b);
                    closed.insert(a | b);
                }
            }
            if closed.len() == before {
                break;
            }
        }
        FiniteSpace::new(names, closed.iter().map(|c| !c & full).collect())
    }

    pub fn default_names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn discrete(n: usize) -> Result<Self> {
        FiniteSpace::discrete_named(FiniteSpace::default_names(n))
    }

    pub fn discrete_named(names: Vec<String>) -> Result<Self> {
        let n = names.len();
        if n > MAX_POINTS {
            return Err(Error::input(format!("a space needs 1..={MAX_POINTS} points, got {n}")));
        }
        FiniteSpace::new(names, (0..1u32 << n).collect())
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        FiniteSpace::new(FiniteSpace::default_names(n), vec![0, (1 << n) - 1])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn full(&self) -> PointSet {
        (1 << self.len()) - 1
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self.opens.iter().map(|u| !u & self.full()).collect();
        v.sort_unstable();
        v
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(!s & self.full())
    }

    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.nbhd[x] & s != 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.nbhd[x] & !s == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn check_subset(&self, s: PointSet) -> Result<PointSet> {
        if s & !self.full() != 0 {
            Err(Error::input(format!("{s:#b} contains points outside the space")))
        } else {
            Ok(s)
        }
    }

    pub fn closure_interior(&self, s: PointSet) -> Result<(PointSet, PointSet)> {
        self.check_subset(s)?;
        Ok((self.closure(s), self.interior(s)))
    }

    pub fn is_regular_closed(&self, s: PointSet) -> bool {
        self.closure(self.interior(s)) == s
    }

    pub fn point_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::input(format!("unknown point `{name}`")))
    }

    pub fn set_of(&self, names: &[&str]) -> Result<PointSet> {
        names.iter().try_fold(0, |m, n| Ok(m | 1 << self.point_index(n)?))
    }

    pub fn names_of(&self, s: PointSet) -> Vec<String> {
        mask_names(&self.names, s)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|x| self.nbhd[x] == 1 << x)
    }

    pub fn is_hausdorff(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.nbhd[x] & self.nbhd[y] == 0))
    }

    pub fn is_extremally_disconnected(&self) -> bool {
        self.opens.iter().all(|&u| self.is_open(self.closure(u)))
    }

    pub fn predicates(&self) -> Result<SpaceReport> {
        let hausdorff = self.is_hausdorff();
        let discrete = self.is_discrete();
        if hausdorff != discrete {
            return Err(Error::Invariant(
                "a finite space must be Hausdorff exactly when it is discrete".into(),
            ));
        }
        Ok(SpaceReport {
            hausdorff,
            discrete,
            extremally_disconnected: self.is_extremally_disconnected(),
            regular_closed_count: (0..=self.full()).filter(|&s| self.is_regular_closed(s)).count(),
        })
    }

    /// Subspace on the points of `y`, listed in ascending order; also returns
    /// the embedding of subspace indices into this space.
    pub fn subspace(&self, y: PointSet) -> Result<(FiniteSpace, Vec<usize>)> {
        self.check_subset(y)?;
        let embed: Vec<usize> = (0..self.len()).filter(|&x| y >> x & 1 == 1).collect();
        let names = embed.iter().map(|&x| self.names[x].clone()).collect();
        let opens: BTreeSet<PointSet> = self.opens.iter().map(|&u| restrict(u, &embed)).collect();
        Ok((FiniteSpace::new(names, opens.into_iter().collect())?, embed))
    }
}

fn mask_names(names: &[String], s: PointSet) -> Vec<String> {
    (0..names.len()).filter(|&x| s >> x & 1 == 1).map(|x| names[x].clone()).collect()
}

/// Express `s` in the indexing of a subspace with embedding `embed`.
pub fn restrict(s: PointSet, embed: &[usize]) -> PointSet {
    embed.iter().enumerate().filter(|(_, &x)| s >> x & 1 == 1).fold(0, |m, (i, _)| m | 1 << i)
}

/// Inverse of [`restrict`] for sets inside the subspace.
pub fn extend(t: PointSet, embed: &[usize]) -> PointSet {
    embed.iter().enumerate().filter(|(i, _)| t >> i & 1 == 1).fold(0, |m, (_, &x)| m | 1 << x)
}

/// Every topology on `n` labelled points (`n <= 4`), in ascending order of
/// the bitset encoding of the open family.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    if n == 0 || n > 4 {
        return Err(Error::input(format!("topology enumeration supports 1..=4 points, got {n}")));
    }
    let full: PointSet = (1 << n) - 1;
    // Candidate members are the sets strictly between 0 and full.
    let middle: Vec<PointSet> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << middle.len() {
        let mut fam: Vec<PointSet> = vec![0];
        fam.extend(middle.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).map(|(_, &s)| s));
        fam.push(full);
        let member = |s: PointSet| s == 0 || s == full || (choice >> (s - 1) & 1 == 1);
        let closed = fam.iter().all(|&u| fam.iter().all(|&v| member(u | v) && member(u & v)));
        if closed {
            out.push(FiniteSpace::new(FiniteSpace::default_names(n), fam)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(vec!["a".into(), "b".into()], vec![0, 0b01, 0b11]).unwrap()
    }

    pub(crate) fn x3() -> FiniteSpace {
        FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()], vec![0, 0b001, 0b100, 0b101, 0b111]).unwrap()
    }

    #[test]
    fn closure_interior_examples() {
        let s = sierpinski();
        assert_eq!(s.closure(0b01), 0b11);
        assert_eq!(s.interior(0), 0);
        let x = x3();
        assert_eq!(x.interior(x.set_of(&["p", "q"]).unwrap()), x.set_of(&["p"]).unwrap());
        assert!(x.closure_interior(0b1000).is_err());
    }

    #[test]
    fn validation_reports_missing_sets() {
        let err = FiniteSpace::new(FiniteSpace::default_names(2), vec![0, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("missing"));
    }

    #[test]
    fn space_predicate_examples() {
        let s = sierpinski().predicates().unwrap();
        assert!(!s.hausdorff && s.extremally_disconnected);
        let d = FiniteSpace::discrete(3).unwrap().predicates().unwrap();
        assert!(d.hausdorff && d.discrete && d.extremally_disconnected);
        assert!(!x3().predicates().unwrap().hausdorff);
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_topologies(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }
}
