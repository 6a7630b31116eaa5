//! Overlap contact on the interval algebra, its Alexandroff extension with
//! respect to the ray-free ideal, and constructive witnesses for the
//! existential axioms.
//!
//! Universal axioms are checked on seeded samples. Existential ones (I5,
//! BC1–BC3, cluster maximality) are checked by constructing the witness and
//! certifying it with exact contact tests, so a pass is never a failure to
//! find a counterexample by search alone.

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::AxiomReport;
use crate::algebra::interval::sample;
use crate::algebra::{bounded_witness_below, int, IntervalUlt, Rat, Region};
use crate::error::{Error, Result};
use crate::json::{rat_str, region_json, ult_json};

/// Overlap contact, optionally extended by "both unbounded".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IntervalContact {
    pub alexandroff: bool,
}

/// Clusters of the interval algebra that the library represents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IntervalCluster {
    /// Members are the regions containing the point.
    Point(Rat),
    /// Members are the unbounded regions.
    Infinity,
}

impl IntervalCluster {
    pub fn contains(&self, a: &Region) -> bool {
        match self {
            IntervalCluster::Point(x) => a.contains_point(x),
            IntervalCluster::Infinity => !a.is_bounded(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, IntervalCluster::Point(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            IntervalCluster::Point(x) => json!({"point_cluster": rat_str(x)}),
            IntervalCluster::Infinity => json!("infinity_cluster"),
        }
    }

    /// A member that is bounded whenever the cluster is.
    pub fn canonical_member(&self) -> Region {
        match self {
            IntervalCluster::Point(x) => Region::window(x, &int(1)),
            IntervalCluster::Infinity => Region::left_ray(int(0)),
        }
    }
}

/// The smallest window `[x - r, x + r]` as a region.
fn window(x: &Rat, r: &Rat) -> Region {
    Region::window(x, r)
}

impl IntervalContact {
    pub fn overlap() -> Self {
        IntervalContact { alexandroff: false }
    }

    pub fn extended() -> Self {
        IntervalContact { alexandroff: true }
    }

    pub fn contact(&self, a: &Region, b: &Region) -> bool {
        a.overlaps(b) || (self.alexandroff && !a.is_bounded() && !b.is_bounded())
    }

    pub fn way_below(&self, a: &Region, b: &Region) -> bool {
        !self.contact(a, &b.complement())
    }

    /// A certified `b` with `a ≪ b ≪ c`, nonzero when `c` is, and bounded
    /// when `bounded` is set and `a` is bounded. `None` only if `a ≪ c` fails.
    pub fn interpolant(&self, a: &Region, c: &Region, bounded: bool) -> Option<Region> {
        if !self.way_below(a, c) {
            return None;
        }
        let b = if a.is_empty() {
            match bounded_witness_below(c) {
                Some(b) => b,
                None => Region::empty(),
            }
        } else {
            let delta = a.half_margin_in(c).unwrap_or_else(|| int(1));
            let mut b = c.shrink(&delta);
            let needs_bound = (bounded && a.is_bounded()) || (self.alexandroff && !c.complement().is_bounded());
            if needs_bound {
                let (lo, hi) = a.finite_extent()?;
                b = b.meet(&Region::interval(lo - &delta, hi + &delta));
            }
            b
        };
        let ok = self.way_below(a, &b)
            && self.way_below(&b, c)
            && (c.is_empty() || !b.is_empty())
            && (!bounded || !a.is_bounded() || b.is_bounded());
        ok.then_some(b)
    }

    /// Contact of two representable ultrafilters.
    pub fn ult_contact(&self, u: &IntervalUlt, v: &IntervalUlt) -> bool {
        self.separating_members(u, v).is_none()
    }

    /// Members `c ∈ u`, `d ∈ v` that are not in contact, certified.
    pub fn separating_members(&self, u: &IntervalUlt, v: &IntervalUlt) -> Option<(Region, Region)> {
        use IntervalUlt::*;
        let pair = match (u, v) {
            (Point(x, _), Point(y, _)) if x != y => {
                let r = (x - y).abs() / int(3);
                (u.small_member(&r), v.small_member(&r))
            }
            (Point(x, _), LeftInfinity) => (u.small_member(&int(1)), Region::left_ray(x - int(2))),
            (Point(x, _), RightInfinity) => (u.small_member(&int(1)), Region::right_ray(x + int(2))),
            (LeftInfinity | RightInfinity, Point(..)) => {
                let (d, c) = self.separating_members(v, u)?;
                (c, d)
            }
            (LeftInfinity, RightInfinity) if !self.alexandroff => (Region::left_ray(int(0)), Region::right_ray(int(1))),
            (RightInfinity, LeftInfinity) if !self.alexandroff => (Region::right_ray(int(1)), Region::left_ray(int(0))),
            _ => return None,
        };
        let certified = u.member(&pair.0) && v.member(&pair.1) && !self.contact(&pair.0, &pair.1);
        assert!(certified, "separating members for {u:?} and {v:?} failed certification");
        Some(pair)
    }

    /// The cluster `{a | a ⌢ b for every b ∈ u}`.
    pub fn cluster_of_ultrafilter(&self, u: &IntervalUlt) -> Result<IntervalCluster> {
        match u {
            IntervalUlt::Point(x, _) => Ok(IntervalCluster::Point(x.clone())),
            _ if self.alexandroff => Ok(IntervalCluster::Infinity),
            _ => Err(Error::Unsupported(
                "the cluster of an ultrafilter at infinity under plain overlap is not representable".into(),
            )),
        }
    }

    /// A member `b` of the cluster with `a` not in contact with `b`, when `a`
    /// is not a member; certified. This is the maximality condition.
    pub fn maximality_witness(&self, cl: &IntervalCluster, a: &Region) -> Option<Region> {
        if cl.contains(a) {
            return None;
        }
        let b = match cl {
            IntervalCluster::Point(x) => {
                let d = a.distance_to(x).unwrap_or_else(|| int(2));
                window(x, &(d / int(2)))
            }
            IntervalCluster::Infinity => match a.finite_extent() {
                Some((lo, hi)) => Region::left_ray(lo - int(1)).join(&Region::right_ray(hi + int(1))),
                None => Region::full(),
            },
        };
        (cl.contains(&b) && !self.contact(a, &b)).then_some(b)
    }

    /// Sampled cluster check: pairwise contact of members, the join
    /// condition, upward closure, and a certified maximality witness for
    /// every sampled non-member. Returns the first failure.
    pub fn cluster_failure(&self, cl: &IntervalCluster, seed: u64, samples: usize) -> Option<Value> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = sample::region(&mut rng);
            let b = sample::region(&mut rng);
            let c = sample::region(&mut rng);
            let (ma, mb) = (cl.contains(&a), cl.contains(&b));
            if ma && mb && !self.contact(&a, &b) {
                return Some(json!({"condition": "members touch", "a": region_json(&a), "b": region_json(&b)}));
            }
            if cl.contains(&a.join(&b)) && !ma && !mb {
                return Some(json!({"condition": "join", "a": region_json(&a), "b": region_json(&b)}));
            }
            if ma && a.leq(&c) && !cl.contains(&c) {
                return Some(json!({"condition": "upward", "a": region_json(&a), "c": region_json(&c)}));
            }
            if ma && !cl.contains(&a.join(&c)) {
                return Some(json!({"condition": "upward", "a": region_json(&a), "c": region_json(&a.join(&c))}));
            }
            for x in [&a, &b, &c] {
                if !cl.contains(x) && self.maximality_witness(cl, x).is_none() {
                    return Some(json!({"condition": "maximality", "a": region_json(x)}));
                }
            }
        }
        None
    }

    /// C1–C4 and I1–I5 on seeded samples; I5 by certified interpolation.
    pub fn axiom_report(&self, seed: u64, samples: usize) -> AxiomReport {
        let mut r = AxiomReport { exhaustive: false, entries: vec![] };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = samples as u64;
        let mut fail: [Option<Value>; 9] = Default::default();
        let w = |xs: &[(&str, &Region)]| {
            Value::Object(xs.iter().map(|(k, v)| (k.to_string(), region_json(v))).collect())
        };
        for _ in 0..samples {
            let a = sample::region(&mut rng);
            let b = sample::region(&mut rng);
            let c = sample::region(&mut rng);
            let d = sample::region(&mut rng);
            let slack = sample::positive_rational(&mut rng);
            // A pair with a ≪ c guaranteed, so the conditional axioms are exercised.
            let inner = a.clone();
            let outer = a.enlarge(&slack).join(&c);
            let set = |slot: &mut Option<Value>, v: Value| {
                if slot.is_none() {
                    *slot = Some(v);
                }
            };
            if !a.is_empty() && !self.contact(&a, &a) {
                set(&mut fail[0], w(&[("a", &a)]));
            }
            if self.contact(&a, &b) && (a.is_empty() || b.is_empty()) {
                set(&mut fail[1], w(&[("a", &a), ("b", &b)]));
            }
            if self.contact(&a, &b) != self.contact(&b, &a) {
                set(&mut fail[2], w(&[("a", &a), ("b", &b)]));
            }
            if self.contact(&a, &b.join(&c)) != (self.contact(&a, &b) || self.contact(&a, &c)) {
                set(&mut fail[3], w(&[("a", &a), ("b", &b), ("c", &c)]));
            }
            for (x, y) in [(&a, &b), (&inner, &outer)] {
                if self.way_below(x, y) && !x.leq(y) {
                    set(&mut fail[4], w(&[("a", x), ("b", y)]));
                }
                if self.way_below(x, y) && !self.way_below(&y.complement(), &x.complement()) {
                    set(&mut fail[6], w(&[("a", x), ("b", y)]));
                }
                if self.way_below(x, y) && !y.is_empty() {
                    let b5 = self.interpolant(x, y, false);
                    if b5.as_ref().is_none_or(|m| m.is_empty()) {
                        set(&mut fail[8], w(&[("a", x), ("c", y)]));
                    }
                }
            }
            // I2 with a ≤ b ≪ c ≤ d built from the sampled regions.
            let (a2, d2) = (inner.meet(&b), outer.join(&d));
            if self.way_below(&inner, &outer) && !self.way_below(&a2, &d2) {
                set(&mut fail[5], w(&[("a", &a2), ("b", &inner), ("c", &outer), ("d", &d2)]));
            }
            // I4 with two regions way below a common one.
            let (b4, c4) = (b.meet(&inner), outer.clone());
            if self.way_below(&inner, &c4) && self.way_below(&b4, &c4) && !self.way_below(&inner.join(&b4), &c4) {
                set(&mut fail[7], w(&[("a", &inner), ("b", &b4), ("c", &c4)]));
            }
        }
        for (i, name) in ["C1", "C2", "C3", "C4", "I1", "I2", "I3", "I4", "I5"].into_iter().enumerate() {
            r.push(name, n, fail[i].take());
        }
        r
    }

    /// BC1–BC3 for the ray-free ideal, each by a certified construction.
    pub fn bounded_axioms(&self, report: &mut AxiomReport, seed: u64, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xBC);
        let n = samples as u64;
        let (mut f1, mut f2, mut f3) = (None, None, None);
        for _ in 0..samples {
            let a = sample::bounded_region(&mut rng);
            let b = sample::region(&mut rng);
            let slack = sample::positive_rational(&mut rng);
            let c = a.enlarge(&slack).join(&b);
            if f1.is_none() && self.way_below(&a, &c) {
                match self.interpolant(&a, &c, true) {
                    Some(m) if m.is_bounded() => {}
                    _ => f1 = Some(json!({"a": region_json(&a), "c": region_json(&c)})),
                }
            }
            let a2 = sample::region(&mut rng);
            if f2.is_none() && self.contact(&a2, &b) && bc2_witness(self, &a2, &b).is_none() {
                f2 = Some(json!({"a": region_json(&a2), "b": region_json(&b)}));
            }
            if f3.is_none() && !a2.is_empty() && bc3_witness(self, &a2).is_none() {
                f3 = Some(json!({"a": region_json(&a2)}));
            }
        }
        report.push("BC1", n, f1);
        report.push("BC2", n, f2);
        report.push("BC3", n, f3);
    }
}

/// A bounded `c` with `a ⌢ (c ∧ b)`, given `a ⌢ b` under plain overlap.
/// Under the extended contact, rays may touch without sharing a point; a
/// window around a shared point is then not available and `None` results.
pub fn bc2_witness(ct: &IntervalContact, a: &Region, b: &Region) -> Option<Region> {
    let x = a.common_point(b)?;
    let c = window(&x, &int(1));
    ct.contact(a, &c.meet(b)).then_some(c)
}

/// A nonzero bounded `b ≪ a`.
pub fn bc3_witness(ct: &IntervalContact, a: &Region) -> Option<Region> {
    let b = bounded_witness_below(a)?;
    (!b.is_empty() && b.is_bounded() && ct.way_below(&b, a)).then_some(b)
}

/// For a member `a` of a bounded point cluster, a bounded member below it.
pub fn bounded_member_below(cl: &IntervalCluster, a: &Region) -> Option<Region> {
    let IntervalCluster::Point(x) = cl else { return None };
    if !a.contains_point(x) {
        return None;
    }
    let c = a.meet(&window(x, &int(1)));
    (c.is_bounded() && c.leq(a) && cl.contains(&c)).then_some(c)
}

/// Report JSON for a pair of ultrafilters and their separating members.
pub fn separation_json(u: &IntervalUlt, v: &IntervalUlt, members: Option<&(Region, Region)>) -> Value {
    json!({
        "u": ult_json(u),
        "v": ult_json(v),
        "contact": members.is_none(),
        "separating_members": members.map(|(c, d)| json!([region_json(c), region_json(d)])),
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Side};

    fn iv(a: i64, b: i64) -> Region {
        Region::interval(int(a), int(b))
    }

    #[test]
    fn overlap_examples() {
        let c = IntervalContact::overlap();
        assert!(c.contact(&iv(0, 1), &iv(1, 2)));
        assert!(c.way_below(&iv(0, 1), &iv(-1, 2)));
        assert!(!c.way_below(&iv(0, 1), &iv(0, 2)));
    }

    #[test]
    fn alexandroff_examples() {
        let al = IntervalContact::extended();
        assert!(al.contact(&Region::left_ray(int(0)), &Region::right_ray(int(1))));
        assert!(!IntervalContact::overlap().contact(&Region::left_ray(int(0)), &Region::right_ray(int(1))));
        assert!(!al.contact(&iv(0, 1), &iv(2, 3)));
    }

    #[test]
    fn ultrafilter_contact_examples() {
        let c = IntervalContact::overlap();
        let l = IntervalUlt::Point(int(0), Side::Left);
        let r = IntervalUlt::Point(int(0), Side::Right);
        assert!(c.ult_contact(&l, &r));
        assert!(!c.ult_contact(&l, &IntervalUlt::Point(rat(1, 2), Side::Left)));
        assert!(!c.ult_contact(&IntervalUlt::LeftInfinity, &IntervalUlt::RightInfinity));
        assert!(IntervalContact::extended().ult_contact(&IntervalUlt::LeftInfinity, &IntervalUlt::RightInfinity));
        assert!(!c.ult_contact(&l, &IntervalUlt::RightInfinity));
    }

    #[test]
    fn bc3_example_witness() {
        assert_eq!(bc3_witness(&IntervalContact::overlap(), &iv(0, 1)), Some(Region::interval(rat(1, 4), rat(1, 2))));
    }

    #[test]
    fn sampled_axioms_pass() {
        let ov = IntervalContact::overlap();
        let mut r = ov.axiom_report(7, 300);
        ov.bounded_axioms(&mut r, 7, 300);
        assert!(r.failures().is_empty(), "{:?}", r.failures());
        let al = IntervalContact::extended().axiom_report(7, 300);
        assert!(al.is_normal() && al.failures().is_empty(), "{:?}", al.failures());
    }

    #[test]
    fn infinity_cluster_under_extension() {
        let al = IntervalContact::extended();
        assert!(al.cluster_failure(&IntervalCluster::Infinity, 3, 300).is_none());
        assert!(IntervalContact::overlap().cluster_failure(&IntervalCluster::Infinity, 3, 300).is_some());
        assert!(al.cluster_failure(&IntervalCluster::Point(rat(1, 3)), 3, 300).is_none());
    }

    #[test]
    fn clusters_of_ultrafilters() {
        let c = IntervalContact::overlap();
        assert_eq!(
            c.cluster_of_ultrafilter(&IntervalUlt::Point(rat(1, 2), Side::Left)).unwrap(),
            IntervalCluster::Point(rat(1, 2))
        );
        assert_eq!(IntervalContact::extended().cluster_of_ultrafilter(&IntervalUlt::LeftInfinity).unwrap(), IntervalCluster::Infinity);
    }
}
