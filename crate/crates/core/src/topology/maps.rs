use serde::Serialize;
use serde_json::json;

use super::{extend, restrict, FiniteSpace, PointSet, RegularClosedAlgebra};
use crate::error::{Error, Result};

/// A total function between the points of two finite spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointMap {
    dom: FiniteSpace,
    cod: FiniteSpace,
    map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub continuous: bool,
    pub closed: bool,
    pub irreducible: bool,
    pub perfect: bool,
    pub surjective: bool,
    pub dense_image: bool,
    /// Always true for finite spaces; kept so the report shape is uniform.
    pub fibers_compact: bool,
}

impl PointMap {
    pub fn new(dom: FiniteSpace, cod: FiniteSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() {
            return Err(Error::input(format!(
                "map must send each of the {} domain points somewhere, got {} values",
                dom.len(),
                map.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::input(format!("map value {bad} is not a codomain point")));
        }
        Ok(PointMap { dom, cod, map })
    }

    pub fn identity(x: &FiniteSpace) -> Self {
        PointMap { dom: x.clone(), cod: x.clone(), map: (0..x.len()).collect() }
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }

    pub fn at(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        (0..self.dom.len()).filter(|&x| s >> x & 1 == 1).fold(0, |m, x| m | 1 << self.map[x])
    }

    pub fn preimage(&self, t: PointSet) -> PointSet {
        (0..self.dom.len()).filter(|&x| t >> self.map[x] & 1 == 1).fold(0, |m, x| m | 1 << x)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &PointMap) -> Result<PointMap> {
        if self.cod != next.dom {
            return Err(Error::input("maps are not composable"));
        }
        PointMap::new(self.dom.clone(), next.cod.clone(), self.map.iter().map(|&y| next.map[y]).collect())
    }

    pub fn is_continuous(&self) -> bool {
        self.cod.opens().iter().all(|&v| self.dom.is_open(self.preimage(v)))
    }

    pub fn is_closed(&self) -> bool {
        self.dom.closed_sets().iter().all(|&c| self.cod.is_closed(self.image(c)))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.full()) == self.cod.full()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u32;
        self.map.iter().all(|&y| {
            let fresh = seen >> y & 1 == 0;
            seen |= 1 << y;
            fresh
        })
    }

    pub fn is_irreducible(&self) -> bool {
        self.is_closed()
            && self.is_surjective()
            && self
                .dom
                .closed_sets()
                .iter()
                .all(|&c| c == self.dom.full() || self.image(c) != self.cod.full())
    }

    pub fn predicates(&self) -> MapReport {
        let closed = self.is_closed();
        MapReport {
            continuous: self.is_continuous(),
            closed,
            irreducible: self.is_irreducible(),
            perfect: closed,
            surjective: self.is_surjective(),
            dense_image: self.cod.closure(self.image(self.dom.full())) == self.cod.full(),
            fibers_compact: true,
        }
    }

    /// Every map between two spaces, in lexicographic order of value lists.
    pub fn all(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<PointMap> {
        let (n, m) = (dom.len(), cod.len());
        (0..m.pow(n as u32))
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % m;
                    code /= m;
                }
                PointMap { dom: dom.clone(), cod: cod.clone(), map }
            })
            .collect()
    }
}

/// Alexandroff's isomorphism `H |-> p(H)` with inverse `K |-> cl(p^{-1}(int K))`,
/// both stored as tables over the carriers.
#[derive(Debug, Clone)]
pub struct RhoIso {
    pub domain_rc: RegularClosedAlgebra,
    pub codomain_rc: RegularClosedAlgebra,
    /// Indexed like `domain_rc.carrier()`.
    pub forward: Vec<PointSet>,
    /// Indexed like `codomain_rc.carrier()`.
    pub backward: Vec<PointSet>,
}

impl RhoIso {
    pub fn apply(&self, h: PointSet) -> Option<PointSet> {
        self.domain_rc.index_of(h).map(|i| self.forward[i])
    }

    pub fn inverse(&self, k: PointSet) -> Option<PointSet> {
        self.codomain_rc.index_of(k).map(|i| self.backward[i])
    }
}

fn require(ok: bool, predicate: &str, detail: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::hypothesis(predicate, detail))
    }
}

/// Check that `fwd: A -> B` and `bwd: B -> A` are mutually inverse Boolean
/// isomorphisms between two RC algebras.
fn verify_iso(
    check: &str,
    a: &RegularClosedAlgebra,
    b: &RegularClosedAlgebra,
    fwd: &dyn Fn(PointSet) -> PointSet,
    bwd: &dyn Fn(PointSet) -> PointSet,
) -> Result<()> {
    let wit = |what: &str, s: PointSet, space: &FiniteSpace| {
        Error::violation(check, json!({"property": what, "set": space.names_of(s)}))
    };
    for &h in a.carrier() {
        let k = fwd(h);
        if !b.contains(k) {
            return Err(wit("forward image is regular closed", h, a.space()));
        }
        if bwd(k) != h {
            return Err(wit("backward after forward is the identity", h, a.space()));
        }
        if fwd(a.complement(h)) != b.complement(k) {
            return Err(wit("forward preserves complement", h, a.space()));
        }
        for &g in a.carrier() {
            if fwd(a.join(h, g)) != b.join(k, fwd(g)) || fwd(a.meet(h, g)) != b.meet(k, fwd(g)) {
                return Err(wit("forward preserves join and meet", h, a.space()));
            }
        }
    }
    for &k in b.carrier() {
        let h = bwd(k);
        if !a.contains(h) {
            return Err(wit("backward image is regular closed", k, b.space()));
        }
        if fwd(h) != k {
            return Err(wit("forward after backward is the identity", k, b.space()));
        }
    }
    Ok(())
}

pub fn rho(p: &PointMap) -> Result<RhoIso> {
    let r = p.predicates();
    require(r.continuous, "continuous", "the map must be continuous")?;
    require(r.closed, "closed", "the map must send closed sets to closed sets")?;
    require(r.irreducible, "irreducible", "a proper closed subset of the domain maps onto the codomain")?;
    let domain_rc = RegularClosedAlgebra::new(p.dom())?;
    let codomain_rc = RegularClosedAlgebra::new(p.cod())?;
    let fwd = |h: PointSet| p.image(h);
    let bwd = |k: PointSet| p.dom().closure(p.preimage(p.cod().interior(k)));
    verify_iso("alexandroff-rho", &domain_rc, &codomain_rc, &fwd, &bwd)?;
    Ok(RhoIso {
        forward: domain_rc.carrier().iter().map(|&h| fwd(h)).collect(),
        backward: codomain_rc.carrier().iter().map(|&k| bwd(k)).collect(),
        domain_rc,
        codomain_rc,
    })
}

/// The isomorphisms `r(F) = F ∩ Y` and `e(G) = cl_X(G)` for a dense subspace.
#[derive(Debug, Clone)]
pub struct DenseIso {
    pub subspace: FiniteSpace,
    /// Subspace index to ambient index.
    pub embed: Vec<usize>,
    pub ambient_rc: RegularClosedAlgebra,
    pub sub_rc: RegularClosedAlgebra,
}

impl DenseIso {
    pub fn r(&self, f: PointSet) -> PointSet {
        restrict(f, &self.embed)
    }

    pub fn e(&self, g: PointSet) -> PointSet {
        self.ambient_rc.space().closure(extend(g, &self.embed))
    }
}

pub fn dense_r_e(x: &FiniteSpace, y: PointSet) -> Result<DenseIso> {
    x.check_subset(y)?;
    require(
        x.closure(y) == x.full(),
        "dense",
        &format!("closure of {:?} is {:?}", x.names_of(y), x.names_of(x.closure(y))),
    )?;
    let (subspace, embed) = x.subspace(y)?;
    let iso = DenseIso {
        ambient_rc: RegularClosedAlgebra::new(x)?,
        sub_rc: RegularClosedAlgebra::new(&subspace)?,
        subspace,
        embed,
    };
    verify_iso("dense-re", &iso.ambient_rc, &iso.sub_rc, &|f| iso.r(f), &|g| iso.e(g))?;
    Ok(iso)
}

/// Quotient by a partition; class `i` becomes point `i` of the result.
pub fn quotient(x: &FiniteSpace, classes: &[Vec<usize>]) -> Result<(FiniteSpace, PointMap)> {
    let mut owner = vec![usize::MAX; x.len()];
    for (ci, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::input("partition classes must be nonempty"));
        }
        for &pt in class {
            if pt >= x.len() {
                return Err(Error::input(format!("point {pt} is not in the space")));
            }
            if owner[pt] != usize::MAX {
                return Err(Error::input(format!("point {} appears in two classes", x.names()[pt])));
            }
            owner[pt] = ci;
        }
    }
    if let Some(pt) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::input(format!("point {} is in no class", x.names()[pt])));
    }
    let k = classes.len();
    let names: Vec<String> = classes
        .iter()
        .map(|c| c.iter().map(|&i| x.names()[i].as_str()).collect::<Vec<_>>().join("~"))
        .collect();
    let pre = |v: PointSet| (0..x.len()).filter(|&i| v >> owner[i] & 1 == 1).fold(0, |m, i| m | 1 << i);
    let opens: Vec<PointSet> = (0..1u32 << k).filter(|&v| x.is_open(pre(v))).collect();
    let y = FiniteSpace::new(names, opens)?;
    let q = PointMap::new(x.clone(), y.clone(), owner)?;
    Ok((y, q))
}

/// The absolute of a finite Hausdorff (hence discrete) space: the Stone dual
/// of its RC algebra with the map sending each ultrafilter to the point in
/// the intersection of its members.
pub fn absolute(x: &FiniteSpace) -> Result<(FiniteSpace, PointMap)> {
    require(x.is_hausdorff(), "hausdorff", "absolutes are built only for Hausdorff (discrete) finite spaces")?;
    let rc = RegularClosedAlgebra::new(x)?;
    let names: Vec<String> = rc.atoms().iter().map(|&a| format!("U[{}]", x.names_of(a).join(","))).collect();
    let ex = FiniteSpace::discrete_named(names)?;
    let pi: Vec<usize> = rc
        .atoms()
        .iter()
        .map(|&a| {
            // The intersection of all members of the principal ultrafilter at
            // atom `a` is `a` itself; Hausdorffness makes it a single point.
            if a.count_ones() != 1 {
                Err(Error::Invariant(format!("atom {:?} is not a single point", x.names_of(a))))
            } else {
                Ok(a.trailing_zeros() as usize)
            }
        })
        .collect::<Result<_>>()?;
    let map = PointMap::new(ex.clone(), x.clone(), pi)?;
    let r = map.predicates();
    if !(r.continuous && r.perfect && r.irreducible) {
        return Err(Error::violation("absolute", json!({"report": r})));
    }
    Ok((ex, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x3() -> FiniteSpace {
        FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()], vec![0, 1, 4, 5, 7]).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        let pt = FiniteSpace::discrete(1).unwrap();
        let ind = PointMap::new(FiniteSpace::indiscrete(2).unwrap(), pt.clone(), vec![0, 0]).unwrap();
        assert!(ind.predicates().irreducible);
        let disc = PointMap::new(FiniteSpace::discrete(2).unwrap(), pt, vec![0, 0]).unwrap();
        assert!(!disc.predicates().irreducible);
        let id = PointMap::identity(&x3()).predicates();
        assert!(id.continuous && id.closed && id.irreducible && id.perfect && id.surjective && id.dense_image);
    }

    #[test]
    fn rho_examples() {
        let pt = FiniteSpace::discrete(1).unwrap();
        let ind = PointMap::new(FiniteSpace::indiscrete(2).unwrap(), pt.clone(), vec![0, 0]).unwrap();
        let iso = rho(&ind).unwrap();
        assert_eq!(iso.forward, vec![0, 1]);
        let disc = PointMap::new(FiniteSpace::discrete(2).unwrap(), pt, vec![0, 0]).unwrap();
        match rho(&disc) {
            Err(Error::Hypothesis { predicate, .. }) => assert_eq!(predicate, "irreducible"),
            other => panic!("expected hypothesis error, got {other:?}"),
        }
    }

    #[test]
    fn dense_examples() {
        let x = x3();
        let y = x.set_of(&["p", "r"]).unwrap();
        let iso = dense_r_e(&x, y).unwrap();
        assert!(iso.subspace.is_discrete());
        assert_eq!(iso.r(x.set_of(&["p", "q"]).unwrap()), 0b01);
        assert_eq!(iso.e(0b01), x.set_of(&["p", "q"]).unwrap());
        assert!(matches!(dense_r_e(&x, x.set_of(&["q"]).unwrap()), Err(Error::Hypothesis { .. })));
    }

    #[test]
    fn quotient_examples() {
        let (y, q) = quotient(&FiniteSpace::discrete(3).unwrap(), &[vec![0, 1], vec![2]]).unwrap();
        assert!(y.is_discrete() && y.len() == 2);
        assert!(q.is_continuous() && q.is_surjective());
        let (y, _) = quotient(&FiniteSpace::indiscrete(2).unwrap(), &[vec![0, 1]]).unwrap();
        assert_eq!(y.len(), 1);
        assert!(quotient(&FiniteSpace::discrete(2).unwrap(), &[vec![0]]).is_err());
    }

    #[test]
    fn absolute_examples() {
        let (ex, pi) = absolute(&FiniteSpace::discrete_named(vec!["x".into(), "y".into()]).unwrap()).unwrap();
        assert_eq!(ex.len(), 2);
        assert_eq!(pi.values(), &[0, 1]);
        let s = FiniteSpace::new(vec!["a".into(), "b".into()], vec![0, 1, 3]).unwrap();
        assert!(matches!(absolute(&s), Err(Error::Hypothesis { .. })));
    }
}
