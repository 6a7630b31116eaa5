//! Contact relations on finite powersets, lifted from a reflexive symmetric
//! relation on atoms: `a ⌢ b` iff some atom of `a` is related to some atom of `b`.

use serde_json::{json, Value};

use super::report::AxiomReport;
use crate::algebra::{atoms_of, submasks, AtomSet, PowersetAlgebra};
use crate::error::{Error, Result};
use crate::json::set_json;

/// Exhaustive axiom evaluation is attempted up to this many atoms.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 6;
/// Cluster and clan enumeration is attempted up to this many atoms.
pub const ENUMERATION_LIMIT: usize = 8;
/// Construction re-proves C1–C4 exhaustively up to this many atoms.
const CONSTRUCTION_CHECK_LIMIT: usize = 5;
/// The atom criterion for ultrafilter contact is re-proved up to this size.
const ULT_PROOF_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteContact {
    alg: PowersetAlgebra,
    adj: Vec<AtomSet>,
    nbhd: Vec<AtomSet>,
}

impl FiniteContact {
    /// Unordered atom pairs; reflexivity is implicit.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let alg = PowersetAlgebra::new(n)?;
        let mut adj: Vec<AtomSet> = (0..n).map(|i| 1 << i).collect();
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::input(format!("pair ({i}, {j}) mentions an atom outside 0..{n}")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Self::build(alg, adj)
    }

    /// A relation given row by row; it must be symmetric. The diagonal is added.
    pub fn from_adjacency(n: usize, rows: &[AtomSet]) -> Result<Self> {
        let alg = PowersetAlgebra::new(n)?;
        if rows.len() != n {
            return Err(Error::input(format!("expected {n} adjacency rows, got {}", rows.len())));
        }
        for i in 0..n {
            alg.check(rows[i])?;
            for j in 0..n {
                if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                    return Err(Error::input(format!("relation is not symmetric at ({i}, {j})")));
                }
            }
        }
        let adj = (0..n).map(|i| rows[i] | 1 << i).collect();
        Self::build(alg, adj)
    }

    pub fn overlap(n: usize) -> Result<Self> {
        Self::from_pairs(n, &[])
    }

    fn build(alg: PowersetAlgebra, adj: Vec<AtomSet>) -> Result<Self> {
        let mut nbhd = vec![0; alg.size()];
        for a in 1..alg.size() {
            let low = a.trailing_zeros() as usize;
            nbhd[a] = nbhd[a & (a - 1)] | adj[low];
        }
        let c = FiniteContact { alg, adj, nbhd };
        if alg.atom_count() <= CONSTRUCTION_CHECK_LIMIT {
            let r = c.contact_report();
            if !r.is_contact_algebra() {
                return Err(Error::Invariant(format!("lifted contact fails C1–C4: {:?}", r.failures())));
            }
        }
        if alg.atom_count() <= ULT_PROOF_LIMIT {
            for i in 0..alg.atom_count() {
                for j in 0..alg.atom_count() {
                    if c.ult_contact(i, j) != c.ult_contact_by_definition(i, j) {
                        return Err(Error::Invariant(format!(
                            "atom criterion for ultrafilter contact disagrees with the definition at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn algebra(&self) -> PowersetAlgebra {
        self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.atom_count()
    }

    pub fn top(&self) -> AtomSet {
        self.alg.top()
    }

    pub fn adjacency(&self) -> &[AtomSet] {
        &self.adj
    }

    /// Atoms related to some atom of `a`.
    pub fn nbhd(&self, a: AtomSet) -> AtomSet {
        self.nbhd[a as usize]
    }

    pub fn contact(&self, a: AtomSet, b: AtomSet) -> bool {
        self.nbhd(a) & b != 0
    }

    /// `a ≪ b` iff not `a ⌢ b*`.
    pub fn way_below(&self, a: AtomSet, b: AtomSet) -> bool {
        !self.contact(a, self.alg.complement(b))
    }

    /// Off-diagonal related pairs `(i, j)` with `i < j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adj[i] >> j & 1 == 1).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n()).all(|i| self.adj[i] == 1 << i)
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n()).all(|i| atoms_of(self.adj[i]).iter().all(|&j| self.adj[j] & !self.adj[i] == 0))
    }

    /// Contact of the principal ultrafilters at atoms `i` and `j`.
    pub fn ult_contact(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// The universal definition: every member of one ultrafilter touches
    /// every member of the other.
    pub fn ult_contact_by_definition(&self, i: usize, j: usize) -> bool {
        self.alg
            .elements()
            .filter(|c| c >> i & 1 == 1)
            .all(|c| self.alg.elements().filter(|d| d >> j & 1 == 1).all(|d| self.contact(c, d)))
    }

    /// Ultrafilter contact is an equivalence relation.
    pub fn ult_contact_is_equivalence(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            self.ult_contact(i, i)
                && (0..n).all(|j| {
                    self.ult_contact(i, j) == self.ult_contact(j, i)
                        && (0..n).all(|k| !(self.ult_contact(i, j) && self.ult_contact(j, k)) || self.ult_contact(i, k))
                })
        })
    }

    /// Cluster generated by the ultrafilter at atom `i`: all `a` touching
    /// every member, whose support is the row of `i`.
    pub fn cluster_of_ultrafilter(&self, i: usize) -> AtomSet {
        self.adj[i]
    }

    fn member(s: AtomSet, a: AtomSet) -> bool {
        a & s != 0
    }

    /// The clan conditions for the grill with support `s`, checked literally
    /// over all elements.
    pub fn is_clan(&self, s: AtomSet) -> bool {
        let elems: Vec<AtomSet> = self.alg.elements().collect();
        let nonempty = elems.iter().any(|&a| Self::member(s, a));
        nonempty
            && elems.iter().all(|&a| {
                elems.iter().all(|&b| {
                    let (ma, mb) = (Self::member(s, a), Self::member(s, b));
                    (!(ma && mb) || self.contact(a, b))
                        && (!Self::member(s, a | b) || ma || mb)
                        && (!ma || Self::member(s, a | b))
                })
            })
    }

    /// Clan plus maximality: anything touching every member is a member.
    pub fn is_cluster(&self, s: AtomSet) -> bool {
        self.is_clan(s) && self.maximality_failure(s).is_none()
    }

    /// Least `a` outside the grill that touches every member.
    pub fn maximality_failure(&self, s: AtomSet) -> Option<AtomSet> {
        let members: Vec<AtomSet> = self.alg.elements().filter(|&b| Self::member(s, b)).collect();
        self.alg
            .elements()
            .find(|&a| !Self::member(s, a) && members.iter().all(|&b| self.contact(a, b)))
    }

    fn enumeration_guard(&self) -> Result<()> {
        if self.n() > ENUMERATION_LIMIT {
            Err(Error::Unsupported(format!("cluster enumeration is limited to {ENUMERATION_LIMIT} atoms")))
        } else {
            Ok(())
        }
    }

    /// Supports of all clans, ascending.
    pub fn clans(&self) -> Result<Vec<AtomSet>> {
        self.enumeration_guard()?;
        Ok((1..=self.top()).filter(|&s| self.is_clan(s)).collect())
    }

    /// Supports of all clusters, ascending.
    pub fn clusters(&self) -> Result<Vec<AtomSet>> {
        self.enumeration_guard()?;
        Ok((1..=self.top()).filter(|&s| self.is_cluster(s)).collect())
    }

    /// C1–C4, exhaustively.
    pub fn contact_report(&self) -> AxiomReport {
        let mut r = AxiomReport { exhaustive: true, entries: vec![] };
        self.push_contact_axioms(&mut r);
        r
    }

    fn push_contact_axioms(&self, r: &mut AxiomReport) {
        let e: Vec<AtomSet> = self.alg.elements().collect();
        let k = e.len() as u64;
        r.push("C1", k, e.iter().find(|&&a| a != 0 && !self.contact(a, a)).map(|&a| json!({"a": set_json(a)})));
        let pair = |p: &dyn Fn(AtomSet, AtomSet) -> bool| {
            e.iter().flat_map(|&a| e.iter().map(move |&b| (a, b))).find(|&(a, b)| !p(a, b))
        };
        let w2 = |x: Option<(AtomSet, AtomSet)>| x.map(|(a, b)| json!({"a": set_json(a), "b": set_json(b)}));
        r.push("C2", k * k, w2(pair(&|a, b| !self.contact(a, b) || (a != 0 && b != 0))));
        r.push("C3", k * k, w2(pair(&|a, b| !self.contact(a, b) || self.contact(b, a))));
        let c4 = e.iter().find_map(|&a| {
            e.iter().find_map(|&b| {
                e.iter()
                    .find(|&&c| self.contact(a, b | c) != (self.contact(a, b) || self.contact(a, c)))
                    .map(|&c| json!({"a": set_json(a), "b": set_json(b), "c": set_json(c)}))
            })
        });
        r.push("C4", k * k * k, c4);
    }

    fn push_normality_axioms(&self, r: &mut AxiomReport) {
        let e: Vec<AtomSet> = self.alg.elements().collect();
        let k = e.len() as u64;
        let wb = |a, b| self.way_below(a, b);
        let w = |names: &[&str], xs: &[AtomSet]| {
            let mut m = serde_json::Map::new();
            for (n, &x) in names.iter().zip(xs) {
                m.insert(n.to_string(), set_json(x));
            }
            Value::Object(m)
        };
        let i1 = e.iter().flat_map(|&a| e.iter().map(move |&b| (a, b))).find(|&(a, b)| wb(a, b) && a & !b != 0);
        r.push("I1", k * k, i1.map(|(a, b)| w(&["a", "b"], &[a, b])));

        // a ≤ b ≪ c ≤ d ⇒ a ≪ d follows from monotonicity of ≪ in each
        // argument; the 4-tuple search runs only if that shortcut fails.
        let monotone = e.iter().all(|&b| {
            e.iter().all(|&c| !wb(b, c) || (submasks(b).all(|a| wb(a, c)) && e.iter().filter(|&&d| c & !d == 0).all(|&d| wb(b, d))))
        });
        let i2 = if monotone {
            None
        } else {
            e.iter().find_map(|&a| {
                e.iter().filter(|&&b| a & !b == 0).find_map(|&b| {
                    e.iter().filter(|&&c| wb(b, c)).find_map(|&c| {
                        e.iter()
                            .filter(|&&d| c & !d == 0)
                            .find(|&&d| !wb(a, d))
                            .map(|&d| w(&["a", "b", "c", "d"], &[a, b, c, d]))
                    })
                })
            })
        };
        r.push("I2", k * k * k, i2);

        let top = self.top();
        let i3 = if !wb(0, 0) {
            Some(w(&["a", "b"], &[0, 0]))
        } else {
            e.iter()
                .flat_map(|&a| e.iter().map(move |&b| (a, b)))
                .find(|&(a, b)| wb(a, b) && !wb(!b & top, !a & top))
                .map(|(a, b)| w(&["a", "b"], &[a, b]))
        };
        r.push("I3", k * k, i3);

        let i4 = e.iter().find_map(|&a| {
            e.iter().find_map(|&b| {
                e.iter().find(|&&c| wb(a, c) && wb(b, c) && !wb(a | b, c)).map(|&c| w(&["a", "b", "c"], &[a, b, c]))
            })
        });
        r.push("I4", k * k * k, i4);

        let i5 = e
            .iter()
            .flat_map(|&a| e.iter().map(move |&c| (a, c)))
            .find(|&(a, c)| wb(a, c) && c != 0 && !e.iter().any(|&b| b != 0 && wb(a, b) && wb(b, c)))
            .map(|(a, c)| w(&["a", "c"], &[a, c]));
        r.push("I5", k * k * k, i5);
    }

    /// C1–C4 and I1–I5 (exhaustive up to [`EXHAUSTIVE_AXIOM_LIMIT`] atoms).
    pub fn axiom_report(&self) -> AxiomReport {
        let mut r = AxiomReport { exhaustive: true, entries: vec![] };
        if self.n() > EXHAUSTIVE_AXIOM_LIMIT {
            r.exhaustive = false;
            for a in super::report::CONTACT_AXIOMS.iter().chain(super::report::NORMALITY_AXIOMS.iter()) {
                r.skip(a, format!("exhaustive evaluation limited to {EXHAUSTIVE_AXIOM_LIMIT} atoms"));
            }
            return r;
        }
        self.push_contact_axioms(&mut r);
        self.push_normality_axioms(&mut r);
        r
    }
}

/// A finite local contact algebra: a lifted contact plus the bounded ideal
/// of all elements below `bounded`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLca {
    contact: FiniteContact,
    bounded: AtomSet,
}

impl FiniteLca {
    pub fn new(contact: FiniteContact, bounded: AtomSet) -> Result<Self> {
        contact.algebra().check(bounded)?;
        Ok(FiniteLca { contact, bounded })
    }

    /// Overlap contact with every element bounded.
    pub fn overlap(n: usize) -> Result<Self> {
        let c = FiniteContact::overlap(n)?;
        let top = c.top();
        FiniteLca::new(c, top)
    }

    pub fn contact_algebra(&self) -> &FiniteContact {
        &self.contact
    }

    pub fn n(&self) -> usize {
        self.contact.n()
    }

    pub fn top(&self) -> AtomSet {
        self.contact.top()
    }

    pub fn bounded_generator(&self) -> AtomSet {
        self.bounded
    }

    pub fn is_bounded(&self, a: AtomSet) -> bool {
        a & !self.bounded == 0
    }

    pub fn bounded_elements(&self) -> Vec<AtomSet> {
        submasks(self.bounded).collect()
    }

    pub fn contact(&self, a: AtomSet, b: AtomSet) -> bool {
        self.contact.contact(a, b)
    }

    pub fn way_below(&self, a: AtomSet, b: AtomSet) -> bool {
        self.contact.way_below(a, b)
    }

    /// `a ⌢_Al b` iff `a ⌢ b` or both are unbounded; lifted from the atom
    /// relation extended by all pairs of unbounded atoms.
    pub fn alexandroff(&self) -> FiniteContact {
        let outside = self.top() & !self.bounded;
        let rows: Vec<AtomSet> = (0..self.n())
            .map(|i| self.contact.adjacency()[i] | if outside >> i & 1 == 1 { outside } else { 0 })
            .collect();
        FiniteContact::from_adjacency(self.n(), &rows).expect("extension of a symmetric relation is symmetric")
    }

    /// Ultrafilters meeting the bounded ideal.
    pub fn bounded_ultrafilters(&self) -> Vec<usize> {
        atoms_of(self.bounded)
    }

    /// Bounded clusters: clusters of the Alexandroff extension meeting the ideal.
    pub fn bounded_clusters(&self) -> Result<Vec<AtomSet>> {
        Ok(self.alexandroff().clusters()?.into_iter().filter(|&s| s & self.bounded != 0).collect())
    }

    /// The unbounded cluster `A \ 𝔹`, whose support is the unbounded atoms.
    pub fn c_infinity(&self) -> Result<AtomSet> {
        if self.bounded == self.top() {
            return Err(Error::hypothesis("1 ∉ 𝔹", "every element is bounded, so there is no unbounded cluster"));
        }
        Ok(self.top() & !self.bounded)
    }

    /// The cluster of a bounded ultrafilter, computed with the original contact.
    pub fn cluster_of_bounded_ultrafilter(&self, i: usize) -> Result<AtomSet> {
        if self.bounded >> i & 1 == 0 {
            return Err(Error::hypothesis("bounded ultrafilter", format!("atom {i} lies outside the bounded ideal")));
        }
        Ok(self.contact.cluster_of_ultrafilter(i))
    }

    /// Full report: C1–C4, I1–I5 and BC1–BC3.
    pub fn axiom_report(&self) -> AxiomReport {
        let mut r = self.contact.axiom_report();
        if !r.exhaustive {
            for a in super::report::BOUNDED_AXIOMS {
                r.skip(a, format!("exhaustive evaluation limited to {EXHAUSTIVE_AXIOM_LIMIT} atoms"));
            }
            return r;
        }
        let e: Vec<AtomSet> = self.contact.algebra().elements().collect();
        let bnd = self.bounded_elements();
        let k = e.len() as u64;
        let bc1 = e
            .iter()
            .filter(|&&a| self.is_bounded(a))
            .flat_map(|&a| e.iter().map(move |&c| (a, c)))
            .find(|&(a, c)| self.way_below(a, c) && !bnd.iter().any(|&b| self.way_below(a, b) && self.way_below(b, c)))
            .map(|(a, c)| json!({"a": set_json(a), "c": set_json(c)}));
        r.push("BC1", k * k, bc1);
        let bc2 = e
            .iter()
            .flat_map(|&a| e.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| self.contact(a, b) && !bnd.iter().any(|&c| self.contact(a, c & b)))
            .map(|(a, b)| json!({"a": set_json(a), "b": set_json(b)}));
        r.push("BC2", k * k, bc2);
        let bc3 = e
            .iter()
            .find(|&&a| a != 0 && !bnd.iter().any(|&b| b != 0 && self.way_below(b, a)))
            .map(|&a| json!({"a": set_json(a)}));
        r.push("BC3", k, bc3);
        r
    }

    /// Every `(relation, bounded generator)` pair on `n` atoms.
    pub fn all(n: usize) -> Result<Vec<FiniteLca>> {
        let alg = PowersetAlgebra::new(n)?;
        let mut out = Vec::new();
        for c in all_contacts(n)? {
            for m in alg.elements() {
                out.push(FiniteLca::new(c.clone(), m)?);
            }
        }
        Ok(out)
    }
}

/// Every reflexive symmetric relation on `n` atoms, ordered by the bitmask of
/// off-diagonal pairs `(0,1), (0,2), .., (n-2,n-1)`.
pub fn all_contacts(n: usize) -> Result<Vec<FiniteContact>> {
    PowersetAlgebra::new(n)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|code| {
            let chosen: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, &p)| p).collect();
            FiniteContact::from_pairs(n, &chosen)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq3() -> FiniteContact {
        FiniteContact::from_pairs(3, &[(0, 1)]).unwrap()
    }

    fn path3() -> FiniteContact {
        FiniteContact::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn eq3_contact_and_way_below() {
        let c = eq3();
        assert!(c.contact(0b001, 0b010));
        assert!(!c.contact(0b001, 0b100));
        assert!(c.way_below(0b011, 0b011));
        assert!(!c.way_below(0b001, 0b001));
    }

    #[test]
    fn eq3_fails_i5_with_least_witness() {
        let r = eq3().axiom_report();
        assert!(r.is_contact_algebra());
        assert_eq!(r.get("I5").unwrap().witness, Some(json!({"a": [], "c": [0]})));
    }

    #[test]
    fn asymmetric_rows_rejected() {
        assert!(FiniteContact::from_adjacency(2, &[0b11, 0b10]).is_err());
    }

    #[test]
    fn path3_ultrafilter_contact() {
        let c = path3();
        assert!(c.ult_contact(0, 1) && c.ult_contact(1, 2) && !c.ult_contact(0, 2));
        assert!(!c.ult_contact_is_equivalence());
    }

    #[test]
    fn clusters_and_clans_examples() {
        assert_eq!(path3().clans().unwrap(), vec![0b001, 0b010, 0b011, 0b100, 0b110]);
        assert_eq!(path3().clusters().unwrap(), vec![0b011, 0b110]);
        assert_eq!(eq3().clusters().unwrap(), vec![0b011, 0b100]);
    }

    #[test]
    fn bounded_structure() {
        let lca = FiniteLca::new(FiniteContact::overlap(3).unwrap(), 0b011).unwrap();
        assert_eq!(lca.bounded_ultrafilters(), vec![0, 1]);
        let full = FiniteLca::overlap(2).unwrap();
        assert_eq!(full.bounded_clusters().unwrap(), vec![0b01, 0b10]);
        assert!(matches!(full.c_infinity(), Err(Error::Hypothesis { .. })));
        assert!(full.axiom_report().is_local_contact_algebra());
        assert_eq!(full.alexandroff(), *full.contact_algebra());
    }

    #[test]
    fn relation_counts() {
        assert_eq!(all_contacts(3).unwrap().len(), 8);
        assert_eq!(all_contacts(4).unwrap().len(), 64);
    }
}
