//! Boolean algebra carriers with a uniform interface over two backends: finite
//! powersets of at most 16 atoms and the rational-interval algebra.

pub mod finite;
pub mod interval;

use crate::error::{Error, Result};

pub use finite::{atoms_of, mask_of, submasks, AtomSet, FiniteHom, FiniteIdeal, PowersetAlgebra};
pub use interval::{rat, int, Component, Ext, IntervalUlt, PiecewiseAffine, Rat, Region, Side};

/// Backend descriptor accepted by [`make_algebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendSpec {
    FinitePowerset(usize),
    RationalInterval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    FinitePowerset(PowersetAlgebra),
    RationalInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Finite(AtomSet),
    Interval(Region),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ultrafilter {
    Finite(usize),
    Interval(IntervalUlt),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ideal {
    Finite(FiniteIdeal),
    /// The ray-free elements of the interval algebra.
    RayFree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BooleanHom {
    Finite(FiniteHom),
    Interval(PiecewiseAffine),
}

/// The ultrafilters an algebra exposes. For the interval backend the family
/// is described rather than listed, and is flagged as a proper subfamily of
/// the Stone space (irrational points are not representable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UltrafilterFamily {
    Listed(Vec<Ultrafilter>),
    RepresentableSubfamily { description: &'static str },
}

impl UltrafilterFamily {
    pub fn is_representable_subfamily(&self) -> bool {
        matches!(self, UltrafilterFamily::RepresentableSubfamily { .. })
    }
}

/// Stone map value: explicit for finite algebras, a predicate otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoneImage {
    Listed(Vec<usize>),
    Predicate(Region),
}

impl StoneImage {
    pub fn contains(&self, u: &Ultrafilter) -> bool {
        match (self, u) {
            (StoneImage::Listed(v), Ultrafilter::Finite(k)) => v.contains(k),
            (StoneImage::Predicate(a), Ultrafilter::Interval(w)) => w.member(a),
            _ => false,
        }
    }
}

pub fn make_algebra(spec: BackendSpec) -> Result<Algebra> {
    match spec {
        BackendSpec::FinitePowerset(n) => Ok(Algebra::FinitePowerset(PowersetAlgebra::new(n)?)),
        BackendSpec::RationalInterval => Ok(Algebra::RationalInterval),
    }
}

fn mixed() -> Error {
    Error::input("element does not belong to this algebra's backend")
}

impl Algebra {
    pub fn bottom(&self) -> Element {
        match self {
            Algebra::FinitePowerset(_) => Element::Finite(0),
            Algebra::RationalInterval => Element::Interval(Region::empty()),
        }
    }

    pub fn top(&self) -> Element {
        match self {
            Algebra::FinitePowerset(p) => Element::Finite(p.top()),
            Algebra::RationalInterval => Element::Interval(Region::full()),
        }
    }

    /// Number of elements, when finite.
    pub fn size(&self) -> Option<usize> {
        match self {
            Algebra::FinitePowerset(p) => Some(p.size()),
            Algebra::RationalInterval => None,
        }
    }

    fn fin(&self, a: &Element) -> Result<AtomSet> {
        match (self, a) {
            (Algebra::FinitePowerset(p), Element::Finite(m)) => p.check(*m),
            _ => Err(mixed()),
        }
    }

    fn ivl<'a>(&self, a: &'a Element) -> Result<&'a Region> {
        match (self, a) {
            (Algebra::RationalInterval, Element::Interval(r)) => Ok(r),
            _ => Err(mixed()),
        }
    }

    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        match self {
            Algebra::FinitePowerset(_) => Ok(Element::Finite(self.fin(a)? | self.fin(b)?)),
            Algebra::RationalInterval => Ok(Element::Interval(self.ivl(a)?.join(self.ivl(b)?))),
        }
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        match self {
            Algebra::FinitePowerset(_) => Ok(Element::Finite(self.fin(a)? & self.fin(b)?)),
            Algebra::RationalInterval => Ok(Element::Interval(self.ivl(a)?.meet(self.ivl(b)?))),
        }
    }

    pub fn complement(&self, a: &Element) -> Result<Element> {
        match self {
            Algebra::FinitePowerset(p) => Ok(Element::Finite(p.complement(self.fin(a)?))),
            Algebra::RationalInterval => Ok(Element::Interval(self.ivl(a)?.complement())),
        }
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        match self {
            Algebra::FinitePowerset(p) => Ok(p.leq(self.fin(a)?, self.fin(b)?)),
            Algebra::RationalInterval => Ok(self.ivl(a)?.leq(self.ivl(b)?)),
        }
    }

    pub fn big_join(&self, items: &[Element]) -> Result<Element> {
        items.iter().try_fold(self.bottom(), |acc, x| self.join(&acc, x))
    }

    pub fn ultrafilters(&self) -> UltrafilterFamily {
        match self {
            Algebra::FinitePowerset(p) => {
                UltrafilterFamily::Listed(p.ultrafilters().into_iter().map(Ultrafilter::Finite).collect())
            }
            Algebra::RationalInterval => UltrafilterFamily::RepresentableSubfamily {
                description: "Point(x, left|right) for rational x, LeftInfinity, RightInfinity",
            },
        }
    }

    pub fn member(&self, a: &Element, u: &Ultrafilter) -> Result<bool> {
        match (a, u) {
            (Element::Finite(_), Ultrafilter::Finite(k)) => Ok(finite::ult_member(*k, self.fin(a)?)),
            (Element::Interval(r), Ultrafilter::Interval(w)) => {
                self.ivl(a)?;
                Ok(w.member(r))
            }
            _ => Err(mixed()),
        }
    }

    pub fn stone_epsilon(&self, a: &Element) -> Result<StoneImage> {
        match self {
            Algebra::FinitePowerset(p) => Ok(StoneImage::Listed(p.epsilon(self.fin(a)?))),
            Algebra::RationalInterval => Ok(StoneImage::Predicate(self.ivl(a)?.clone())),
        }
    }
}

/// The unit of Stone duality on a finite discrete space with `n` points: the
/// point `x` goes to the principal ultrafilter of its powerset at `x`.
pub fn stone_unit(n: usize, x: usize) -> Result<Ultrafilter> {
    PowersetAlgebra::new(n)?;
    if x >= n {
        return Err(Error::input(format!("point {x} out of range for a {n}-point space")));
    }
    Ok(Ultrafilter::Finite(x))
}

impl Ideal {
    pub fn contains(&self, a: &Element) -> Result<bool> {
        match (self, a) {
            (Ideal::Finite(i), Element::Finite(m)) => Ok(i.contains(*m)),
            (Ideal::RayFree, Element::Interval(r)) => Ok(r.is_bounded()),
            _ => Err(mixed()),
        }
    }

    /// Finite: exhaustive. Ray-free: every nonzero region contains a small
    /// bounded interval, so the answer is a constant; callers that want the
    /// witness use [`bounded_witness_below`].
    pub fn is_dense(&self, alg: &Algebra) -> Result<bool> {
        match (self, alg) {
            (Ideal::Finite(i), Algebra::FinitePowerset(p)) => Ok(i.is_dense(p)),
            (Ideal::RayFree, Algebra::RationalInterval) => Ok(true),
            _ => Err(mixed()),
        }
    }
}

/// A nonzero bounded element lying in the interior of a nonzero region:
/// a quarter-width slice of its first component's bounded part.
pub fn bounded_witness_below(a: &Region) -> Option<Region> {
    let c = a.components().first()?;
    let (l, h) = match (&c.lo, &c.hi) {
        (Ext::Fin(l), Ext::Fin(h)) => (l.clone(), h.clone()),
        (Ext::NegInf, Ext::Fin(h)) => (h - int(1), h.clone()),
        (Ext::Fin(l), Ext::PosInf) => (l.clone(), l + int(1)),
        _ => (int(0), int(1)),
    };
    let w = &h - &l;
    Some(Region::interval(&l + &w / int(4), &l + &w / int(2)))
}

impl BooleanHom {
    pub fn apply(&self, a: &Element) -> Result<Element> {
        match (self, a) {
            (BooleanHom::Finite(h), Element::Finite(m)) => {
                PowersetAlgebra::new(h.dom())?.check(*m)?;
                Ok(Element::Finite(h.apply(*m)))
            }
            (BooleanHom::Interval(g), Element::Interval(r)) => Ok(Element::Interval(g.apply(r))),
            _ => Err(mixed()),
        }
    }

    pub fn ult_preimage(&self, u: &Ultrafilter) -> Result<Ultrafilter> {
        match (self, u) {
            (BooleanHom::Finite(h), Ultrafilter::Finite(j)) => Ok(Ultrafilter::Finite(h.ult_preimage(*j)?)),
            (BooleanHom::Interval(g), Ultrafilter::Interval(w)) => Ok(Ultrafilter::Interval(g.ult_preimage(w)?)),
            _ => Err(mixed()),
        }
    }

    /// Finite: exhaustive. Interval: `samples` seeded region pairs.
    pub fn is_hom(&self, seed: u64, samples: usize) -> bool {
        match self {
            BooleanHom::Finite(h) => h.is_hom(),
            BooleanHom::Interval(g) => interval_hom_law_failure(g, seed, samples).is_none(),
        }
    }
}

/// First sampled pair on which an interval map fails a Boolean law.
pub fn interval_hom_law_failure(
    g: &PiecewiseAffine,
    seed: u64,
    samples: usize,
) -> Option<(&'static str, Region, Region)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    if !g.apply(&Region::empty()).is_empty() {
        return Some(("zero", Region::empty(), Region::empty()));
    }
    if !g.apply(&Region::full()).is_full() {
        return Some(("one", Region::full(), Region::empty()));
    }
    for _ in 0..samples {
        let a = interval::sample::region(&mut rng);
        let b = interval::sample::region(&mut rng);
        if g.apply(&a.join(&b)) != g.apply(&a).join(&g.apply(&b)) {
            return Some(("join", a, b));
        }
        if g.apply(&a.meet(&b)) != g.apply(&a).meet(&g.apply(&b)) {
            return Some(("meet", a, b));
        }
        if g.apply(&a.complement()) != g.apply(&a).complement() {
            return Some(("complement", a, b));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_algebra_examples() {
        let a = make_algebra(BackendSpec::FinitePowerset(3)).unwrap();
        assert_eq!(a.size(), Some(8));
        let i = make_algebra(BackendSpec::RationalInterval).unwrap();
        assert_eq!(i.bottom(), Element::Interval(Region::empty()));
        assert_eq!(i.top(), Element::Interval(Region::full()));
        assert!(make_algebra(BackendSpec::FinitePowerset(0)).is_err());
    }

    #[test]
    fn mixed_backends_rejected() {
        let a = make_algebra(BackendSpec::FinitePowerset(2)).unwrap();
        assert!(a.join(&Element::Finite(1), &Element::Interval(Region::full())).is_err());
        assert_eq!(a.join(&Element::Finite(1), &Element::Finite(2)).unwrap(), Element::Finite(3));
    }

    #[test]
    fn stone_examples() {
        let a = make_algebra(BackendSpec::FinitePowerset(3)).unwrap();
        assert_eq!(a.stone_epsilon(&Element::Finite(0b101)).unwrap(), StoneImage::Listed(vec![0, 2]));
        let i = Algebra::RationalInterval;
        let e = i.stone_epsilon(&Element::Interval(Region::interval(int(0), int(1)))).unwrap();
        assert!(e.contains(&Ultrafilter::Interval(IntervalUlt::Point(rat(1, 2), Side::Left))));
        assert!(i.ultrafilters().is_representable_subfamily());
        assert_eq!(stone_unit(3, 1).unwrap(), Ultrafilter::Finite(1));
    }

    #[test]
    fn ray_free_ideal() {
        assert!(!Ideal::RayFree.contains(&Element::Interval(Region::left_ray(int(0)))).unwrap());
        assert!(Ideal::RayFree.is_dense(&Algebra::RationalInterval).unwrap());
        let w = bounded_witness_below(&Region::interval(int(0), int(1))).unwrap();
        assert_eq!(w, Region::interval(rat(1, 4), rat(1, 2)));
    }
}
