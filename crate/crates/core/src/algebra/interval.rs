//! The algebra of regular closed subsets of the real line that are finite
//! unions of closed rational intervals and rays, with exact arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// An extended rational endpoint. The derived order puts `NegInf` below every
/// finite value and `PosInf` above.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl Ext {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Ext::Fin(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    fn shift(&self, d: &Rat) -> Ext {
        match self {
            Ext::Fin(x) => Ext::Fin(x + d),
            other => other.clone(),
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::PosInf => write!(f, "+inf"),
            Ext::Fin(x) => write!(f, "{x}"),
        }
    }
}

/// One closed component `[lo, hi]`; `lo` is never `PosInf`, `hi` never `NegInf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub lo: Ext,
    pub hi: Ext,
}

impl Component {
    pub fn new(lo: Ext, hi: Ext) -> Result<Self> {
        if lo == Ext::PosInf || hi == Ext::NegInf || lo >= hi {
            return Err(Error::input(format!("[{lo}, {hi}] is not a nondegenerate closed interval")));
        }
        Ok(Component { lo, hi })
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains_point(&self, x: &Rat) -> bool {
        let p = Ext::Fin(x.clone());
        self.lo <= p && p <= self.hi
    }

    /// `x` lies strictly inside the component.
    pub fn interior_contains(&self, x: &Rat) -> bool {
        let p = Ext::Fin(x.clone());
        self.lo < p && p < self.hi
    }
}

/// A canonical element: sorted, pairwise separated by gaps of positive
/// length, each component of positive length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Region {
    comps: Vec<Component>,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            let l = if c.lo == Ext::NegInf { "(" } else { "[" };
            let r = if c.hi == Ext::PosInf { ")" } else { "]" };
            write!(f, "{l}{}, {}{r}", c.lo, c.hi)?;
        }
        Ok(())
    }
}

impl Region {
    pub fn empty() -> Self {
        Region { comps: vec![] }
    }

    pub fn full() -> Self {
        Region { comps: vec![Component { lo: Ext::NegInf, hi: Ext::PosInf }] }
    }

    /// Normalise an arbitrary list of components: drop degenerate ones,
    /// sort, and merge components that overlap or touch.
    pub fn from_components(mut comps: Vec<Component>) -> Self {
        comps.retain(|c| c.lo < c.hi);
        comps.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut out: Vec<Component> = Vec::with_capacity(comps.len());
        for c in comps {
            match out.last_mut() {
                Some(last) if c.lo <= last.hi => {
                    if c.hi > last.hi {
                        last.hi = c.hi;
                    }
                }
                _ => out.push(c),
            }
        }
        Region { comps: out }
    }

    /// Accept only lists that are already canonical.
    pub fn from_canonical(comps: Vec<Component>) -> Result<Self> {
        for c in &comps {
            Component::new(c.lo.clone(), c.hi.clone())?;
        }
        for w in comps.windows(2) {
            if w[0].hi >= w[1].lo {
                return Err(Error::input(format!(
                    "components [{}, {}] and [{}, {}] are not sorted with a positive gap",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        Ok(Region { comps })
    }

    pub fn interval(lo: Rat, hi: Rat) -> Self {
        Region::from_components(vec![Component { lo: Ext::Fin(lo), hi: Ext::Fin(hi) }])
    }

    pub fn left_ray(p: Rat) -> Self {
        Region::from_components(vec![Component { lo: Ext::NegInf, hi: Ext::Fin(p) }])
    }

    pub fn right_ray(p: Rat) -> Self {
        Region::from_components(vec![Component { lo: Ext::Fin(p), hi: Ext::PosInf }])
    }

    /// `[x - r, x + r]`.
    pub fn window(x: &Rat, r: &Rat) -> Self {
        Region::interval(x - r, x + r)
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Region::full()
    }

    pub fn join(&self, other: &Region) -> Region {
        let mut all = self.comps.clone();
        all.extend(other.comps.iter().cloned());
        Region::from_components(all)
    }

    /// `cl(int(a ∩ b))`: isolated shared points disappear.
    pub fn meet(&self, other: &Region) -> Region {
        let mut out = Vec::new();
        for a in &self.comps {
            for b in &other.comps {
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                if lo < hi {
                    out.push(Component { lo, hi });
                }
            }
        }
        Region::from_components(out)
    }

    /// Closure of the set complement.
    pub fn complement(&self) -> Region {
        let mut out = Vec::new();
        let mut prev = Ext::NegInf;
        for c in &self.comps {
            if prev < c.lo {
                out.push(Component { lo: prev.clone(), hi: c.lo.clone() });
            }
            prev = c.hi.clone();
        }
        if prev < Ext::PosInf {
            out.push(Component { lo: prev, hi: Ext::PosInf });
        }
        Region { comps: out }
    }

    pub fn leq(&self, other: &Region) -> bool {
        self.comps
            .iter()
            .all(|a| other.comps.iter().any(|b| b.lo <= a.lo && a.hi <= b.hi))
    }

    pub fn big_join(items: &[Region]) -> Region {
        Region::from_components(items.iter().flat_map(|r| r.comps.iter().cloned()).collect())
    }

    /// Point-set intersection is nonempty (touching counts).
    pub fn overlaps(&self, other: &Region) -> bool {
        self.common_point(other).is_some()
    }

    /// Some rational point of the point-set intersection, if there is one.
    pub fn common_point(&self, other: &Region) -> Option<Rat> {
        for a in &self.comps {
            for b in &other.comps {
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                if lo <= hi {
                    return Some(match (&lo, &hi) {
                        (Ext::Fin(x), _) => x.clone(),
                        (_, Ext::Fin(y)) => y.clone(),
                        _ => Rat::zero(),
                    });
                }
            }
        }
        None
    }

    pub fn contains_point(&self, x: &Rat) -> bool {
        self.comps.iter().any(|c| c.contains_point(x))
    }

    pub fn interior_contains(&self, x: &Rat) -> bool {
        self.comps.iter().any(|c| c.interior_contains(x))
    }

    /// Ray-free, i.e. a member of the bounded ideal.
    pub fn is_bounded(&self) -> bool {
        self.comps.iter().all(Component::is_bounded)
    }

    pub fn has_left_ray(&self) -> bool {
        self.comps.first().is_some_and(|c| c.lo == Ext::NegInf)
    }

    pub fn has_right_ray(&self) -> bool {
        self.comps.last().is_some_and(|c| c.hi == Ext::PosInf)
    }

    /// Smallest and largest finite endpoints, if any.
    pub fn finite_extent(&self) -> Option<(Rat, Rat)> {
        let pts: Vec<&Rat> = self
            .comps
            .iter()
            .flat_map(|c| [c.lo.finite(), c.hi.finite()])
            .flatten()
            .collect();
        let lo = pts.iter().min()?;
        let hi = pts.iter().max()?;
        Some(((*lo).clone(), (*hi).clone()))
    }

    /// Move every finite endpoint outward by `d`.
    pub fn enlarge(&self, d: &Rat) -> Region {
        let neg = -d.clone();
        Region::from_components(
            self.comps
                .iter()
                .map(|c| Component { lo: c.lo.shift(&neg), hi: c.hi.shift(d) })
                .collect(),
        )
    }

    /// Move every finite endpoint inward by `d`, dropping components that vanish.
    pub fn shrink(&self, d: &Rat) -> Region {
        let neg = -d.clone();
        Region::from_components(
            self.comps
                .iter()
                .map(|c| Component { lo: c.lo.shift(d), hi: c.hi.shift(&neg) })
                .collect(),
        )
    }

    /// A rational point of the interior, if nonempty.
    pub fn interior_point(&self) -> Option<Rat> {
        let c = self.comps.first()?;
        Some(match (&c.lo, &c.hi) {
            (Ext::Fin(l), Ext::Fin(h)) => (l + h) / int(2),
            (Ext::Fin(l), _) => l + Rat::one(),
            (_, Ext::Fin(h)) => h - Rat::one(),
            _ => Rat::zero(),
        })
    }

    /// Distance from `x` to the region (zero when `x` belongs to it).
    pub fn distance_to(&self, x: &Rat) -> Option<Rat> {
        let p = Ext::Fin(x.clone());
        self.comps
            .iter()
            .map(|c| {
                if c.lo <= p && p <= c.hi {
                    Rat::zero()
                } else if p < c.lo {
                    c.lo.finite().expect("finite lower end above a point") - x
                } else {
                    x - c.hi.finite().expect("finite upper end below a point")
                }
            })
            .min()
    }

    /// Half of the smallest distance from `self` to `outer`'s complement,
    /// assuming `self` lies in the interior of `outer`. `None` when there is
    /// no finite constraint.
    pub fn half_margin_in(&self, outer: &Region) -> Option<Rat> {
        let mut best: Option<Rat> = None;
        let mut consider = |d: Rat| {
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        };
        for a in &self.comps {
            let host = outer.comps.iter().find(|b| b.lo <= a.lo && a.hi <= b.hi)?;
            if let (Ext::Fin(al), Ext::Fin(bl)) = (&a.lo, &host.lo) {
                consider(al - bl);
            }
            if let (Ext::Fin(ah), Ext::Fin(bh)) = (&a.hi, &host.hi) {
                consider(bh - ah);
            }
        }
        best.map(|d| d / int(2))
    }
}

/// Approach side of a principal ultrafilter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// The representable ultrafilters of the interval algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IntervalUlt {
    /// Contains `a` iff `[x - e, x] ⊆ a` (left) or `[x, x + e] ⊆ a` (right) for some `e > 0`.
    Point(Rat, Side),
    LeftInfinity,
    RightInfinity,
}

impl IntervalUlt {
    pub fn member(&self, a: &Region) -> bool {
        match self {
            IntervalUlt::Point(x, Side::Left) => {
                let p = Ext::Fin(x.clone());
                a.comps.iter().any(|c| c.lo < p && p <= c.hi)
            }
            IntervalUlt::Point(x, Side::Right) => {
                let p = Ext::Fin(x.clone());
                a.comps.iter().any(|c| c.lo <= p && p < c.hi)
            }
            IntervalUlt::LeftInfinity => a.has_left_ray(),
            IntervalUlt::RightInfinity => a.has_right_ray(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, IntervalUlt::Point(..))
    }

    pub fn point(&self) -> Option<&Rat> {
        match self {
            IntervalUlt::Point(x, _) => Some(x),
            _ => None,
        }
    }

    /// A bounded member when there is one, else a ray.
    pub fn canonical_member(&self) -> Region {
        match self {
            IntervalUlt::Point(x, Side::Left) => Region::interval(x - Rat::one(), x.clone()),
            IntervalUlt::Point(x, Side::Right) => Region::interval(x.clone(), x + Rat::one()),
            IntervalUlt::LeftInfinity => Region::left_ray(Rat::zero()),
            IntervalUlt::RightInfinity => Region::right_ray(Rat::zero()),
        }
    }

    /// Members shrinking towards the ultrafilter's point: width `r`.
    pub fn small_member(&self, r: &Rat) -> Region {
        match self {
            IntervalUlt::Point(x, Side::Left) => Region::interval(x - r, x.clone()),
            IntervalUlt::Point(x, Side::Right) => Region::interval(x.clone(), x + r),
            IntervalUlt::LeftInfinity => Region::left_ray(-Rat::one() / r),
            IntervalUlt::RightInfinity => Region::right_ray(Rat::one() / r),
        }
    }
}

/// A continuous increasing piecewise-affine bijection of the line with
/// rational data. Piece `i` is `x |-> slopes[i] * x + offsets[i]`; piece `0`
/// lies left of `breakpoints[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseAffine {
    breakpoints: Vec<Rat>,
    slopes: Vec<Rat>,
    offsets: Vec<Rat>,
}

impl PiecewiseAffine {
    pub fn new(breakpoints: Vec<Rat>, slopes: Vec<Rat>, offsets: Vec<Rat>) -> Result<Self> {
        if slopes.len() != breakpoints.len() + 1 || offsets.len() != slopes.len() {
            return Err(Error::input(
                "piecewise-affine map needs one more slope/offset than breakpoints",
            ));
        }
        if slopes.iter().any(|s| !s.is_positive()) {
            return Err(Error::input("slopes must be strictly positive"));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("breakpoints must be strictly increasing"));
        }
        for (i, b) in breakpoints.iter().enumerate() {
            let left = &slopes[i] * b + &offsets[i];
            let right = &slopes[i + 1] * b + &offsets[i + 1];
            if left != right {
                return Err(Error::input(format!("map is discontinuous at breakpoint {b}")));
            }
        }
        Ok(PiecewiseAffine { breakpoints, slopes, offsets })
    }

    pub fn identity() -> Self {
        PiecewiseAffine { breakpoints: vec![], slopes: vec![Rat::one()], offsets: vec![Rat::zero()] }
    }

    pub fn translation(c: Rat) -> Self {
        PiecewiseAffine { breakpoints: vec![], slopes: vec![Rat::one()], offsets: vec![c] }
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn slopes(&self) -> &[Rat] {
        &self.slopes
    }

    pub fn offsets(&self) -> &[Rat] {
        &self.offsets
    }

    fn piece(&self, x: &Rat) -> usize {
        self.breakpoints.iter().take_while(|b| *b < x).count()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let i = self.piece(x);
        &self.slopes[i] * x + &self.offsets[i]
    }

    fn eval_ext(&self, e: &Ext) -> Ext {
        match e {
            Ext::Fin(x) => Ext::Fin(self.eval(x)),
            other => other.clone(),
        }
    }

    pub fn inverse(&self) -> PiecewiseAffine {
        PiecewiseAffine {
            breakpoints: self.breakpoints.iter().map(|b| self.eval(b)).collect(),
            slopes: self.slopes.iter().map(|s| s.recip()).collect(),
            offsets: self.slopes.iter().zip(&self.offsets).map(|(s, o)| -o / s).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &PiecewiseAffine) -> PiecewiseAffine {
        let inv = self.inverse();
        let mut bps: Vec<Rat> = self.breakpoints.clone();
        bps.extend(next.breakpoints.iter().map(|b| inv.eval(b)));
        bps.sort();
        bps.dedup();
        let samples: Vec<Rat> = if bps.is_empty() {
            vec![Rat::zero()]
        } else {
            let mut s = vec![&bps[0] - Rat::one()];
            s.extend(bps.windows(2).map(|w| (&w[0] + &w[1]) / int(2)));
            s.push(bps.last().unwrap() + Rat::one());
            s
        };
        let mut slopes = Vec::new();
        let mut offsets = Vec::new();
        for t in &samples {
            let s = &next.slopes[next.piece(&self.eval(t))] * &self.slopes[self.piece(t)];
            let o = next.eval(&self.eval(t)) - &s * t;
            slopes.push(s);
            offsets.push(o);
        }
        PiecewiseAffine { breakpoints: bps, slopes, offsets }
    }

    /// Image of a region.
    pub fn apply(&self, a: &Region) -> Region {
        Region::from_components(
            a.comps
                .iter()
                .map(|c| Component { lo: self.eval_ext(&c.lo), hi: self.eval_ext(&c.hi) })
                .collect(),
        )
    }

    /// Preimage of a region (image under the inverse).
    pub fn preimage(&self, a: &Region) -> Region {
        self.inverse().apply(a)
    }

    /// The ultrafilter `{a | g(a) ∈ u}`, transported along `g^{-1}`.
    pub fn ult_preimage(&self, u: &IntervalUlt) -> Result<IntervalUlt> {
        Ok(match u {
            IntervalUlt::Point(y, s) => IntervalUlt::Point(self.inverse().eval(y), *s),
            other => other.clone(),
        })
    }
}

/// Seeded samplers over a small rational grid, so that coincidences between
/// endpoints (touching, shared points) occur often.
pub mod sample {
    use super::*;

    pub fn rational<R: Rng>(rng: &mut R) -> Rat {
        let den = rng.gen_range(1..=4i64);
        let num = rng.gen_range(-6 * den..=6 * den);
        rat(num, den)
    }

    pub fn positive_rational<R: Rng>(rng: &mut R) -> Rat {
        let den = rng.gen_range(1..=4i64);
        rat(rng.gen_range(1..=3 * den), den)
    }

    pub fn region<R: Rng>(rng: &mut R) -> Region {
        match rng.gen_range(0..20) {
            0 => return Region::empty(),
            1 => return Region::full(),
            _ => {}
        }
        let k = rng.gen_range(1..=6);
        let mut pts: Vec<Rat> = (0..k).map(|_| rational(rng)).collect();
        pts.sort();
        pts.dedup();
        let mut ends: Vec<Ext> = Vec::new();
        if rng.gen_bool(0.25) {
            ends.push(Ext::NegInf);
        }
        ends.extend(pts.into_iter().map(Ext::Fin));
        if rng.gen_bool(0.25) || ends.len() % 2 == 1 {
            if ends.len() % 2 == 1 {
                ends.push(Ext::PosInf);
            } else {
                ends.pop();
            }
        }
        let comps = ends
            .chunks(2)
            .filter(|c| c.len() == 2)
            .map(|c| Component { lo: c[0].clone(), hi: c[1].clone() })
            .collect();
        Region::from_components(comps)
    }

    pub fn bounded_region<R: Rng>(rng: &mut R) -> Region {
        loop {
            let r = region(rng);
            if r.is_bounded() {
                return r;
            }
        }
    }

    pub fn side<R: Rng>(rng: &mut R) -> Side {
        if rng.gen_bool(0.5) {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn point_ultrafilter<R: Rng>(rng: &mut R) -> IntervalUlt {
        IntervalUlt::Point(rational(rng), side(rng))
    }

    pub fn ultrafilter<R: Rng>(rng: &mut R) -> IntervalUlt {
        match rng.gen_range(0..10) {
            0 => IntervalUlt::LeftInfinity,
            1 => IntervalUlt::RightInfinity,
            _ => point_ultrafilter(rng),
        }
    }

    pub fn hom<R: Rng>(rng: &mut R) -> PiecewiseAffine {
        let k = rng.gen_range(0..=2);
        let mut bps: Vec<Rat> = (0..k).map(|_| rational(rng)).collect();
        bps.sort();
        bps.dedup();
        let slopes: Vec<Rat> = (0..=bps.len()).map(|_| positive_rational(rng)).collect();
        let mut offsets = vec![rational(rng)];
        for i in 0..bps.len() {
            let v = &slopes[i] * &bps[i] + &offsets[i];
            offsets.push(v - &slopes[i + 1] * &bps[i]);
        }
        PiecewiseAffine::new(bps, slopes, offsets).expect("sampled map is valid by construction")
    }
}

/// Compare two regions by their first component's lower end; used only to
/// give deterministic orderings in reports.
pub fn region_order(a: &Region, b: &Region) -> Ordering {
    let key = |r: &Region| r.comps.iter().map(|c| (c.lo.clone(), c.hi.clone())).collect::<Vec<_>>();
    key(a).cmp(&key(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn touching_meet_is_empty() {
        let a = Region::interval(int(0), int(2));
        let b = Region::interval(int(2), int(3));
        assert!(a.meet(&b).is_empty());
        assert!(a.overlaps(&b));
        assert_eq!(a.join(&b), Region::interval(int(0), int(3)));
    }

    #[test]
    fn complement_of_unit_interval() {
        let c = Region::interval(int(0), int(1)).complement();
        assert_eq!(c, Region::left_ray(int(0)).join(&Region::right_ray(int(1))));
        assert_eq!(Region::empty().complement(), Region::full());
        assert_eq!(Region::full().complement(), Region::empty());
    }

    #[test]
    fn ultrafilter_membership() {
        let a = Region::interval(int(0), int(1));
        assert!(IntervalUlt::Point(int(0), Side::Right).member(&a));
        assert!(!IntervalUlt::Point(int(0), Side::Left).member(&a));
        assert!(IntervalUlt::Point(rat(1, 2), Side::Left).member(&a));
        assert!(!IntervalUlt::LeftInfinity.member(&a));
    }

    #[test]
    fn translation_hom() {
        let g = PiecewiseAffine::translation(int(1));
        assert_eq!(g.apply(&Region::interval(int(0), int(1))), Region::interval(int(1), int(2)));
        assert_eq!(
            g.ult_preimage(&IntervalUlt::Point(int(1), Side::Left)).unwrap(),
            IntervalUlt::Point(int(0), Side::Left)
        );
    }

    #[test]
    fn composition_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let f = sample::hom(&mut rng);
            let g = sample::hom(&mut rng);
            let x = sample::rational(&mut rng);
            assert_eq!(f.then(&g).eval(&x), g.eval(&f.eval(&x)));
            assert_eq!(f.inverse().eval(&f.eval(&x)), x);
        }
    }

    #[test]
    fn sampled_regions_are_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let r = sample::region(&mut rng);
            assert_eq!(Region::from_canonical(r.components().to_vec()).unwrap(), r);
        }
    }
}
