//! Finite powerset algebras stored as `u32` bitmasks over atom indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of atom indices; bit `i` set means atom `i` belongs to the element.
pub type AtomSet = u32;

/// Upper bound on the number of atoms of a finite algebra.
pub const MAX_ATOMS: usize = 16;

/// Atom indices of `a` in ascending order.
pub fn atoms_of(a: AtomSet) -> Vec<usize> {
    (0..32).filter(|i| a >> i & 1 == 1).collect()
}

/// Build a mask from a list of atom indices.
pub fn mask_of(atoms: &[usize]) -> AtomSet {
    atoms.iter().fold(0, |m, &i| m | 1 << i)
}

/// Iterate over every submask of `m`, including `0` and `m`, in ascending order.
pub fn submasks(m: AtomSet) -> impl Iterator<Item = AtomSet> {
    (0..=m).filter(move |s| s & !m == 0)
}

/// The powerset of `{0, .., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowersetAlgebra {
    n: usize,
}

impl PowersetAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ATOMS {
            return Err(Error::input(format!(
                "atom count must lie in 1..={MAX_ATOMS}, got {n}"
            )));
        }
        Ok(PowersetAlgebra { n })
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    pub fn bottom(&self) -> AtomSet {
        0
    }

    pub fn top(&self) -> AtomSet {
        ((1u64 << self.n) - 1) as AtomSet
    }

    /// All elements in ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = AtomSet> {
        0..=self.top()
    }

    pub fn contains(&self, a: AtomSet) -> bool {
        a & !self.top() == 0
    }

    pub fn check(&self, a: AtomSet) -> Result<AtomSet> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::input(format!("{a:#b} is not an element of P({})", self.n)))
        }
    }

    pub fn join(&self, a: AtomSet, b: AtomSet) -> AtomSet {
        a | b
    }

    pub fn meet(&self, a: AtomSet, b: AtomSet) -> AtomSet {
        a & b
    }

    pub fn complement(&self, a: AtomSet) -> AtomSet {
        !a & self.top()
    }

    pub fn leq(&self, a: AtomSet, b: AtomSet) -> bool {
        a & !b == 0
    }

    pub fn big_join(&self, items: &[AtomSet]) -> AtomSet {
        items.iter().fold(0, |acc, &x| acc | x)
    }

    /// Principal ultrafilters, one per atom.
    pub fn ultrafilters(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// Stone map: the set of ultrafilters (atoms) containing `a`.
    pub fn epsilon(&self, a: AtomSet) -> Vec<usize> {
        atoms_of(a & self.top())
    }
}

/// Membership of `a` in the principal ultrafilter at atom `k`.
pub fn ult_member(k: usize, a: AtomSet) -> bool {
    a >> k & 1 == 1
}

/// A Boolean homomorphism `P(dom) -> P(cod)` given by its dual point map
/// `d: atoms(cod) -> atoms(dom)`; it acts by `a |-> d^{-1}(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteHom {
    dom: usize,
    cod: usize,
    dual: Vec<usize>,
}

impl FiniteHom {
    pub fn new(dom: usize, cod: usize, dual: Vec<usize>) -> Result<Self> {
        PowersetAlgebra::new(dom)?;
        PowersetAlgebra::new(cod)?;
        if dual.len() != cod {
            return Err(Error::input(format!(
                "dual map must have one entry per codomain atom ({cod}), got {}",
                dual.len()
            )));
        }
        if let Some(bad) = dual.iter().find(|&&x| x >= dom) {
            return Err(Error::input(format!("dual map value {bad} is not a domain atom (< {dom})")));
        }
        Ok(FiniteHom { dom, cod, dual })
    }

    pub fn identity(n: usize) -> Result<Self> {
        FiniteHom::new(n, n, (0..n).collect())
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn apply(&self, a: AtomSet) -> AtomSet {
        self.dual
            .iter()
            .enumerate()
            .filter(|(_, &d)| a >> d & 1 == 1)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    /// Preimage of the codomain ultrafilter at atom `j`.
    pub fn ult_preimage(&self, j: usize) -> Result<usize> {
        self.dual
            .get(j)
            .copied()
            .ok_or_else(|| Error::input(format!("atom {j} is not a codomain atom")))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FiniteHom) -> Result<FiniteHom> {
        if self.cod != next.dom {
            return Err(Error::input("homomorphisms are not composable"));
        }
        FiniteHom::new(self.dom, next.cod, next.dual.iter().map(|&j| self.dual[j]).collect())
    }

    /// Full table of `apply` indexed by domain mask.
    pub fn table(&self) -> Vec<AtomSet> {
        let top = PowersetAlgebra { n: self.dom }.top();
        (0..=top).map(|a| self.apply(a)).collect()
    }

    /// Exhaustive check of the Boolean homomorphism laws; returns the first
    /// failing `(law, a, b)` if any.
    pub fn hom_law_failure(&self) -> Option<(&'static str, AtomSet, AtomSet)> {
        let d = PowersetAlgebra { n: self.dom };
        let c = PowersetAlgebra { n: self.cod };
        if self.apply(0) != 0 {
            return Some(("zero", 0, 0));
        }
        if self.apply(d.top()) != c.top() {
            return Some(("one", d.top(), 0));
        }
        for a in d.elements() {
            if self.apply(d.complement(a)) != c.complement(self.apply(a)) {
                return Some(("complement", a, 0));
            }
            for b in d.elements() {
                if self.apply(a | b) != self.apply(a) | self.apply(b) {
                    return Some(("join", a, b));
                }
                if self.apply(a & b) != self.apply(a) & self.apply(b) {
                    return Some(("meet", a, b));
                }
            }
        }
        None
    }

    pub fn is_hom(&self) -> bool {
        self.hom_law_failure().is_none()
    }

    /// Every dual map `atoms(cod) -> atoms(dom)` in lexicographic order.
    pub fn all(dom: usize, cod: usize) -> Result<Vec<FiniteHom>> {
        PowersetAlgebra::new(dom)?;
        PowersetAlgebra::new(cod)?;
        let total = dom.pow(cod as u32);
        Ok((0..total)
            .map(|mut code| {
                let mut dual = vec![0; cod];
                for slot in dual.iter_mut().rev() {
                    *slot = code % dom;
                    code /= dom;
                }
                FiniteHom { dom, cod, dual }
            })
            .collect())
    }
}

/// The ideal of all elements below a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteIdeal {
    pub generator: AtomSet,
}

impl FiniteIdeal {
    pub fn contains(&self, a: AtomSet) -> bool {
        a & !self.generator == 0
    }

    /// Every nonzero element dominates a nonzero member, checked exhaustively.
    pub fn is_dense(&self, alg: &PowersetAlgebra) -> bool {
        alg.elements()
            .filter(|&a| a != 0)
            .all(|a| submasks(a).any(|m| m != 0 && self.contains(m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_bounds() {
        let a = PowersetAlgebra::new(3).unwrap();
        assert_eq!(a.size(), 8);
        assert_eq!(a.top(), 0b111);
        assert!(PowersetAlgebra::new(0).is_err());
        assert!(PowersetAlgebra::new(17).is_err());
        assert_eq!(PowersetAlgebra::new(16).unwrap().top(), 0xffff);
    }

    #[test]
    fn dual_map_apply() {
        let h = FiniteHom::new(2, 2, vec![0, 0]).unwrap();
        assert_eq!(h.apply(0b01), 0b11);
        assert_eq!(h.apply(0b10), 0);
        assert!(h.is_hom());
        let id = FiniteHom::identity(2).unwrap();
        assert_eq!(id.ult_preimage(1).unwrap(), 1);
    }

    #[test]
    fn composition_matches_tables() {
        for f in FiniteHom::all(2, 3).unwrap() {
            for g in FiniteHom::all(3, 2).unwrap() {
                let fg = f.then(&g).unwrap();
                for a in 0..4 {
                    assert_eq!(fg.apply(a), g.apply(f.apply(a)));
                }
            }
        }
    }

    #[test]
    fn ideal_density() {
        let alg = PowersetAlgebra::new(3).unwrap();
        assert!(!FiniteIdeal { generator: 0b011 }.contains(0b100));
        assert!(!FiniteIdeal { generator: 0b011 }.is_dense(&alg));
        assert!(FiniteIdeal { generator: 0b111 }.is_dense(&alg));
    }
}
