use serde_json::json;

use super::{FiniteSpace, PointSet};
use crate::algebra::{AtomSet, PowersetAlgebra};
use crate::error::{Error, Result};

/// The regular closed sets of a finite space with their Boolean operations,
/// together with the isomorphism onto the powerset of its atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularClosedAlgebra {
    space: FiniteSpace,
    carrier: Vec<PointSet>,
    atoms: Vec<PointSet>,
}

impl RegularClosedAlgebra {
    /// Enumerate the carrier, install the operations and verify that the
    /// atom map is a Boolean isomorphism before returning.
    pub fn new(space: &FiniteSpace) -> Result<Self> {
        let carrier: Vec<PointSet> = (0..=space.full()).filter(|&s| space.is_regular_closed(s)).collect();
        let atoms: Vec<PointSet> = carrier
            .iter()
            .copied()
            .filter(|&f| f != 0 && carrier.iter().all(|&g| g == 0 || g == f || g & !f != 0))
            .collect();
        let rc = RegularClosedAlgebra { space: space.clone(), carrier, atoms };
        rc.verify_atom_isomorphism()?;
        Ok(rc)
    }

    fn verify_atom_isomorphism(&self) -> Result<()> {
        let fail = |what: &str, f: PointSet, g: PointSet| {
            Err(Error::Invariant(format!(
                "RC algebra atom map fails {what} at {}",
                json!({"F": self.space.names_of(f), "G": self.space.names_of(g)})
            )))
        };
        if self.carrier.len() != 1 << self.atoms.len() {
            return fail("bijectivity", 0, 0);
        }
        for &f in &self.carrier {
            if self.from_atoms(self.to_atoms(f)) != f {
                return fail("atomicity", f, f);
            }
            if self.to_atoms(self.complement(f)) != !self.to_atoms(f) & self.algebra().top() {
                return fail("complement", f, f);
            }
            for &g in &self.carrier {
                if self.to_atoms(self.join(f, g)) != self.to_atoms(f) | self.to_atoms(g) {
                    return fail("join", f, g);
                }
                if self.to_atoms(self.meet(f, g)) != self.to_atoms(f) & self.to_atoms(g) {
                    return fail("meet", f, g);
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn carrier(&self) -> &[PointSet] {
        &self.carrier
    }

    pub fn atoms(&self) -> &[PointSet] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn algebra(&self) -> PowersetAlgebra {
        PowersetAlgebra::new(self.atoms.len().max(1)).expect("at least one atom")
    }

    pub fn contains(&self, f: PointSet) -> bool {
        self.carrier.binary_search(&f).is_ok()
    }

    pub fn index_of(&self, f: PointSet) -> Option<usize> {
        self.carrier.binary_search(&f).ok()
    }

    pub fn bottom(&self) -> PointSet {
        0
    }

    pub fn top(&self) -> PointSet {
        self.space.full()
    }

    pub fn join(&self, f: PointSet, g: PointSet) -> PointSet {
        f | g
    }

    pub fn meet(&self, f: PointSet, g: PointSet) -> PointSet {
        self.space.closure(self.space.interior(f & g))
    }

    pub fn complement(&self, f: PointSet) -> PointSet {
        self.space.closure(!f & self.space.full())
    }

    pub fn leq(&self, f: PointSet, g: PointSet) -> bool {
        f & !g == 0
    }

    /// Atoms below `f`, as a mask over atom indices.
    pub fn to_atoms(&self, f: PointSet) -> AtomSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| a & !f == 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn from_atoms(&self, m: AtomSet) -> PointSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .fold(0, |s, (_, &a)| s | a)
    }

    /// Direct exhaustive check of the Boolean algebra laws and of regular
    /// closedness of every member. Returns a description of the first failure.
    pub fn law_failure(&self) -> Option<String> {
        let c = &self.carrier;
        let (zero, one) = (self.bottom(), self.top());
        let bad = |law: &str, xs: &[PointSet]| {
            Some(format!("{law} fails at {:?}", xs.iter().map(|&x| self.space.names_of(x)).collect::<Vec<_>>()))
        };
        for &f in c {
            if !self.space.is_regular_closed(f) {
                return bad("F = cl(int F)", &[f]);
            }
            let nf = self.complement(f);
            if !self.contains(nf) {
                return bad("closure under complement", &[f]);
            }
            if self.join(f, nf) != one || self.meet(f, nf) != zero {
                return bad("complementation", &[f]);
            }
            if self.complement(nf) != f {
                return bad("double complement", &[f]);
            }
            if self.join(f, zero) != f || self.meet(f, one) != f {
                return bad("identity", &[f]);
            }
            for &g in c {
                let (j, m) = (self.join(f, g), self.meet(f, g));
                if !self.contains(j) || !self.contains(m) {
                    return bad("closure under join/meet", &[f, g]);
                }
                if j != self.join(g, f) || m != self.meet(g, f) {
                    return bad("commutativity", &[f, g]);
                }
                if self.join(f, self.meet(f, g)) != f || self.meet(f, self.join(f, g)) != f {
                    return bad("absorption", &[f, g]);
                }
                if self.complement(j) != self.meet(self.complement(f), self.complement(g))
                    || self.complement(m) != self.join(self.complement(f), self.complement(g))
                {
                    return bad("De Morgan", &[f, g]);
                }
                for &h in c {
                    if self.join(f, self.join(g, h)) != self.join(j, h)
                        || self.meet(f, self.meet(g, h)) != self.meet(m, h)
                    {
                        return bad("associativity", &[f, g, h]);
                    }
                    if self.meet(f, self.join(g, h)) != self.join(m, self.meet(f, h))
                        || self.join(f, self.meet(g, h)) != self.meet(j, self.join(f, h))
                    {
                        return bad("distributivity", &[f, g, h]);
                    }
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
    fn sierpinski_carrier() {
        let s = FiniteSpace::new(vec!["a".into(), "b".into()], vec![0, 1, 3]).unwrap();
        let rc = RegularClosedAlgebra::new(&s).unwrap();
        assert_eq!(rc.carrier(), &[0, 3]);
        assert!(rc.law_failure().is_none());
    }

    #[test]
    fn x3_carrier() {
        let x = FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()], vec![0, 1, 4, 5, 7]).unwrap();
        let rc = RegularClosedAlgebra::new(&x).unwrap();
        let pq = x.set_of(&["p", "q"]).unwrap();
        let qr = x.set_of(&["q", "r"]).unwrap();
        assert_eq!(rc.carrier(), &[0, pq, qr, 7]);
        assert_eq!(rc.complement(pq), qr);
        assert_eq!(rc.meet(pq, qr), 0);
    }

    #[test]
    fn discrete_carrier_is_powerset() {
        let rc = RegularClosedAlgebra::new(&FiniteSpace::discrete(3).unwrap()).unwrap();
        assert_eq!(rc.carrier().len(), 8);
        assert_eq!(rc.atoms(), &[1, 2, 4]);
    }
}
