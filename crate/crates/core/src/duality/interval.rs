//! The quotient of the bounded ultrafilters of the interval algebra.
//!
//! `Z` consists of the one-sided point ultrafilters and `p` forgets the
//! side, so every rational has a two-point fiber. Properties that quantify
//! over all ultrafilters are certified on seeded samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::ZlzReport;
use crate::algebra::interval::sample;
use crate::algebra::{IntervalUlt, Rat, Side};
use crate::contact::{IntervalCluster, IntervalContact};
use crate::error::{Error, Result};
use crate::json::{rat_str, region_json, ult_json};

/// `p(Point(x, s)) = x`; ultrafilters at infinity lie outside `Z`.
pub fn quotient_point(u: &IntervalUlt) -> Result<Rat> {
    u.point()
        .cloned()
        .ok_or_else(|| Error::hypothesis("bounded ultrafilter", "ultrafilters at infinity are not in Z"))
}

/// The fiber of `p` over `x`.
pub fn fiber(x: &Rat) -> [IntervalUlt; 2] {
    [IntervalUlt::Point(x.clone(), Side::Left), IntervalUlt::Point(x.clone(), Side::Right)]
}

/// A point ultrafilter, sharing its point with `near` about half the time
/// so that contact is exercised on both sides of the criterion.
fn sample_near<R: Rng>(rng: &mut R, near: &IntervalUlt) -> IntervalUlt {
    match (rng.gen_bool(0.5), near.point()) {
        (true, Some(x)) => IntervalUlt::Point(x.clone(), sample::side(rng)),
        _ => sample::point_ultrafilter(rng),
    }
}

/// Density and openness of `Z` on samples. The openness witness of each
/// sampled `u` is its canonical member, which is bounded.
pub fn zlz_interval(seed: u64, samples: usize) -> ZlzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x21A);
    let mut z_ok = true;
    let mut lz_ok = true;
    let mut witness = None;
    for _ in 0..samples {
        let a = sample::region(&mut rng);
        if !a.is_empty() {
            let x = a.interior_point().expect("nonempty regular closed sets have interior");
            if !IntervalUlt::Point(x, Side::Right).member(&a) && z_ok {
                z_ok = false;
                witness = Some(json!({"a": region_json(&a)}));
            }
        }
        let u = sample::point_ultrafilter(&mut rng);
        let m = u.canonical_member();
        if !(u.member(&m) && m.is_bounded()) && lz_ok {
            lz_ok = false;
            witness = Some(json!({"u": ult_json(&u)}));
        }
    }
    if witness.is_none() {
        let u = IntervalUlt::Point(Rat::from_integer(0.into()), Side::Left);
        witness = Some(json!({"u": ult_json(&u), "a": region_json(&u.canonical_member())}));
    }
    ZlzReport { z_algebra: z_ok, lz_algebra: lz_ok, witness }
}

/// Reflexivity, symmetry and transitivity of ultrafilter contact on sampled
/// triples of bounded ultrafilters.
pub fn equivalence_failure(seed: u64, samples: usize) -> Option<Value> {
    let ct = IntervalContact::overlap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x312A);
    for _ in 0..samples {
        let u = sample::point_ultrafilter(&mut rng);
        let v = sample_near(&mut rng, &u);
        let w = sample_near(&mut rng, &v);
        let bad = !ct.ult_contact(&u, &u)
            || ct.ult_contact(&u, &v) != ct.ult_contact(&v, &u)
            || (ct.ult_contact(&u, &v) && ct.ult_contact(&v, &w) && !ct.ult_contact(&u, &w));
        if bad {
            return Some(json!({"u": ult_json(&u), "v": ult_json(&v), "w": ult_json(&w)}));
        }
    }
    None
}

/// `b` is bounded iff no ultrafilter at infinity contains it, on samples.
pub fn bounded_iff_in_z_failure(seed: u64, samples: usize) -> Option<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x312B);
    (0..samples).find_map(|_| {
        let b = sample::region(&mut rng);
        let in_z = !IntervalUlt::LeftInfinity.member(&b) && !IntervalUlt::RightInfinity.member(&b);
        (b.is_bounded() != in_z).then(|| json!({"b": region_json(&b)}))
    })
}

/// `u ⌢ v` iff same point iff same cluster, on sampled pairs.
pub fn contact_criterion_failure(seed: u64, samples: usize) -> Result<Option<Value>> {
    let ct = IntervalContact::overlap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x44);
    for _ in 0..samples {
        let u = sample::point_ultrafilter(&mut rng);
        let v = sample_near(&mut rng, &u);
        let touch = ct.ult_contact(&u, &v);
        let same_point = quotient_point(&u)? == quotient_point(&v)?;
        let same_cluster = ct.cluster_of_ultrafilter(&u)? == ct.cluster_of_ultrafilter(&v)?;
        if touch != same_point || same_point != same_cluster {
            return Ok(Some(json!({"u": ult_json(&u), "v": ult_json(&v), "contact": touch})));
        }
    }
    Ok(None)
}

/// Every sampled rational has a fiber of exactly two ultrafilters, both in
/// contact, both mapped to it, and distinct from every other fiber.
pub fn fiber_failure(seed: u64, samples: usize) -> Result<Option<Value>> {
    let ct = IntervalContact::overlap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xF1B);
    for _ in 0..samples {
        let x = sample::rational(&mut rng);
        let [l, r] = fiber(&x);
        let ok = l != r
            && quotient_point(&l)? == x
            && quotient_point(&r)? == x
            && ct.ult_contact(&l, &r)
            && l.member(&l.canonical_member())
            && !r.member(&l.canonical_member());
        let other = &x + Rat::from_integer(1.into()) / Rat::from_integer(rng.gen_range(2..9i64).into());
        if !ok || fiber(&other).iter().any(|w| ct.ult_contact(w, &l)) {
            return Ok(Some(json!({"x": rat_str(&x)})));
        }
    }
    Ok(None)
}

/// Certified description of `W` on the interval LCA.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalQuotient {
    pub description: &'static str,
    pub samples: usize,
    pub equivalence: bool,
    pub zlz: ZlzReport,
    pub two_point_fibers: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

pub fn w_interval(seed: u64, samples: usize) -> Result<IntervalQuotient> {
    let eq = equivalence_failure(seed, samples);
    let fib = fiber_failure(seed, samples)?;
    let zlz = zlz_interval(seed, samples);
    Ok(IntervalQuotient {
        description: "Z = point ultrafilters (x, side); p(x, side) = x",
        samples,
        equivalence: eq.is_none(),
        two_point_fibers: fib.is_none(),
        witness: eq.or(fib),
        zlz,
    })
}

/// `γ([Point(x, ·)]) = PointCluster(x)`.
pub fn gamma_interval(x: &Rat) -> IntervalCluster {
    IntervalCluster::Point(x.clone())
}

/// `γ(p(ε^Z(a))) = τ(a)` at sampled points: `x` is the image of a member
/// ultrafilter of `a` iff the cluster at `x` contains `a`.
pub fn gamma_base_failure(seed: u64, samples: usize) -> Option<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6A);
    (0..samples).find_map(|_| {
        let a = sample::region(&mut rng);
        let x = match rng.gen_bool(0.5) {
            true => a.components().first().and_then(|c| c.lo.finite().or(c.hi.finite()).cloned()),
            false => None,
        }
        .unwrap_or_else(|| sample::rational(&mut rng));
        let in_image = fiber(&x).iter().any(|u| u.member(&a));
        (in_image != gamma_interval(&x).contains(&a)).then(|| json!({"a": region_json(&a), "x": rat_str(&x)}))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn quotient_examples() {
        let h = rat(1, 2);
        let [l, r] = fiber(&h);
        assert_eq!(quotient_point(&l).unwrap(), h);
        assert_eq!(quotient_point(&r).unwrap(), h);
        assert!(quotient_point(&IntervalUlt::LeftInfinity).is_err());
        assert_eq!(gamma_interval(&int(0)), IntervalCluster::Point(int(0)));
    }

    #[test]
    fn sampled_properties() {
        let q = w_interval(7, 300).unwrap();
        assert!(q.equivalence && q.two_point_fibers && q.zlz.z_algebra && q.zlz.lz_algebra);
        assert_eq!(q.witness, None);
        assert_eq!(q.zlz.witness.unwrap()["a"], json!({"components": [{"lo": "-1/1", "hi": "0/1"}]}));
        assert_eq!(bounded_iff_in_z_failure(7, 300), None);
        assert_eq!(contact_criterion_failure(7, 300).unwrap(), None);
        assert_eq!(gamma_base_failure(7, 300), None);
    }
}
