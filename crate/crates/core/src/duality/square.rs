use serde::Serialize;

use crate::error::{Error, Result};
use crate::topology::{PointMap, PointSet, RegularClosedAlgebra};

/// Both sides of the identity for one `G`, as point sets of `Y'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareValue {
    pub lhs: PointSet,
    pub rhs: PointSet,
    pub equal: bool,
}

fn require(ok: bool, predicate: &str, detail: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::hypothesis(predicate, detail))
    }
}

/// Evaluate `cl(g⁻¹(int p(G)))` and the join over `H ∈ RC(X)` with
/// `p(H) ⊆ int p(G)` of `p'(cl(f⁻¹(int H)))`, for the square
///
/// ```text
///   X' --f--> X
///   |p'       |p
///   Y' --g--> Y
/// ```
///
/// The join is taken as the closure of the union.
pub fn mainlml_eval(p: &PointMap, p2: &PointMap, f: &PointMap, g: &PointMap, gset: PointSet) -> Result<SquareValue> {
    let (x, y) = (p.dom(), p.cod());
    let (x2, y2) = (p2.dom(), p2.cod());
    if f.dom() != x2 || f.cod() != x || g.dom() != y2 || g.cod() != y {
        return Err(Error::input("the four maps do not form a square"));
    }
    require(x.is_hausdorff() && y.is_hausdorff(), "Hausdorff", "X and Y must be Hausdorff")?;
    let pr = p.predicates();
    require(pr.continuous, "continuous", "p must be continuous")?;
    require(pr.perfect, "perfect", "p must be perfect")?;
    require(pr.irreducible, "irreducible", "p must be irreducible")?;
    let pr2 = p2.predicates();
    require(pr2.continuous && pr2.closed, "closed", "p' must be a closed continuous map")?;
    require(pr2.irreducible, "irreducible", "p' must be irreducible")?;
    require(f.is_continuous(), "continuous", "f must be continuous")?;
    require(g.is_continuous(), "continuous", "g must be continuous")?;
    let commutes = (0..x2.len()).all(|k| p.at(f.at(k)) == g.at(p2.at(k)));
    require(commutes, "commuting square", "p ∘ f must equal g ∘ p'")?;
    x.check_subset(gset)?;
    require(x.is_regular_closed(gset), "regular closed", "G must be regular closed in X")?;

    let ipg = y.interior(p.image(gset));
    let lhs = y2.closure(g.preimage(ipg));
    let rc = RegularClosedAlgebra::new(x)?;
    let union = rc
        .carrier()
        .iter()
        .filter(|&&h| p.image(h) & !ipg == 0)
        .fold(0, |acc, &h| acc | p2.image(x2.closure(f.preimage(x.interior(h)))));
    let rhs = y2.closure(union);
    Ok(SquareValue { lhs, rhs, equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::FiniteSpace;

    #[test]
    fn identity_square() {
        let x = FiniteSpace::discrete(2).unwrap();
        let x2 = FiniteSpace::discrete(3).unwrap();
        let id = PointMap::identity(&x);
        let id2 = PointMap::identity(&x2);
        let f = PointMap::new(x2.clone(), x.clone(), vec![0, 1, 1]).unwrap();
        for gset in 0..4 {
            let v = mainlml_eval(&id, &id2, &f, &f, gset).unwrap();
            assert!(v.equal);
            assert_eq!(v.lhs, f.preimage(gset));
        }
        assert_eq!(mainlml_eval(&id, &id2, &f, &f, 0).unwrap().rhs, 0);
    }

    #[test]
    fn rejects_non_commuting_square() {
        let x = FiniteSpace::discrete(2).unwrap();
        let id = PointMap::identity(&x);
        let swap = PointMap::new(x.clone(), x.clone(), vec![1, 0]).unwrap();
        let err = mainlml_eval(&id, &id, &id, &swap, 1).unwrap_err();
        assert!(matches!(err, Error::Hypothesis { ref predicate, .. } if predicate == "commuting square"));
    }
}
