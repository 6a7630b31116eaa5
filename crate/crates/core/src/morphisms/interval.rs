//! Morphisms of the interval LCA induced by increasing piecewise-affine
//! bijections of the line.
//!
//! Rounding such a map cannot be computed as a literal join over the
//! infinitely many bounded `b ≪ a`. Instead each instance is certified: the
//! images `g(b)` of sampled bounded `b ≪ a` stay below `g(a)`, and every
//! component of `g(a)` receives a point from some explicit bounded `b ≪ a`.
//! Any failed certificate makes the result unsupported.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::interval::sample;
use crate::algebra::{int, interval_hom_law_failure, Ext, PiecewiseAffine, Rat, Region};
use crate::contact::{AxiomReport, IntervalContact};
use crate::error::{Error, Result};
use crate::json::region_json;

/// Hom laws, contact reflection and CLC4 on seeded samples.
pub fn dboo_check(g: &PiecewiseAffine, seed: u64, samples: usize) -> AxiomReport {
    let ct = IntervalContact::overlap();
    let mut r = AxiomReport { exhaustive: false, entries: vec![] };
    let hom = interval_hom_law_failure(g, seed, samples)
        .map(|(law, a, b)| json!({"law": law, "a": region_json(&a), "b": region_json(&b)}));
    r.push("hom", samples as u64, hom);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EF1);
    let mut refl = None;
    let mut clc4 = None;
    for _ in 0..samples {
        let a = sample::region(&mut rng);
        let b = sample::region(&mut rng);
        if refl.is_none() && ct.contact(&g.apply(&a), &g.apply(&b)) && !ct.contact(&a, &b) {
            refl = Some(json!({"a": region_json(&a), "b": region_json(&b)}));
        }
        let bt = sample::bounded_region(&mut rng);
        let pre = g.preimage(&bt);
        if clc4.is_none() && !(pre.is_bounded() && bt.leq(&g.apply(&pre))) {
            clc4 = Some(json!({"b": region_json(&bt)}));
        }
    }
    r.push("reflects-contact", samples as u64, refl);
    r.push("CLC4", samples as u64, clc4);
    r
}

/// A bounded `b ≪ a` whose image contains `y`, for `y` inside `g(a)`.
fn covering_member(g: &PiecewiseAffine, a: &Region, y: &Rat) -> Option<Region> {
    let x = g.inverse().eval(y);
    let r = match a.complement().distance_to(&x) {
        Some(d) => d / int(2),
        None => int(1),
    };
    let b = Region::window(&x, &r);
    let ct = IntervalContact::overlap();
    (b.is_bounded() && ct.way_below(&b, a) && g.apply(&b).contains_point(y)).then_some(b)
}

/// Interior points of each component of a region, one per component.
fn component_points(r: &Region) -> Vec<Rat> {
    r.components()
        .iter()
        .map(|c| match (&c.lo, &c.hi) {
            (Ext::Fin(l), Ext::Fin(h)) => (l + h) / int(2),
            (Ext::Fin(l), _) => l + int(1),
            (_, Ext::Fin(h)) => h - int(1),
            _ => int(0),
        })
        .collect()
}

/// The first sampled `a` at which `g(a)` is not certified to equal the
/// rounded value.
pub fn round_failure(g: &PiecewiseAffine, seed: u64, samples: usize) -> Option<serde_json::Value> {
    let ct = IntervalContact::overlap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7A0D);
    for _ in 0..samples {
        let a = sample::region(&mut rng);
        let ga = g.apply(&a);
        let b = sample::bounded_region(&mut rng).meet(&a.shrink(&sample::positive_rational(&mut rng)));
        if ct.way_below(&b, &a) && !g.apply(&b).leq(&ga) {
            return Some(json!({"condition": "upper bound", "a": region_json(&a), "b": region_json(&b)}));
        }
        for y in component_points(&ga) {
            if covering_member(g, &a, &y).is_none() {
                return Some(json!({"condition": "covering", "a": region_json(&a), "y": crate::json::rat_str(&y)}));
            }
        }
    }
    None
}

/// `g̃`, certified equal to `g` on samples.
pub fn round(g: &PiecewiseAffine, seed: u64, samples: usize) -> Result<PiecewiseAffine> {
    match round_failure(g, seed, samples) {
        None => Ok(g.clone()),
        Some(w) => Err(Error::Unsupported(format!("rounding could not be certified: {w}"))),
    }
}

/// `V(g)`: requires the DBoo report to pass, then certifies the rounding.
pub fn v_functor(g: &PiecewiseAffine, seed: u64, samples: usize) -> Result<PiecewiseAffine> {
    let r = dboo_check(g, seed, samples);
    if let Some(f) = r.failures().first() {
        return Err(Error::hypothesis("DBoo morphism", format!("{} fails: {:?}", f.axiom, f.witness)));
    }
    round(g, seed, samples)
}

/// CLC1–CLC5 for an interval map on samples, CLC5 through the rounding
/// certificate.
pub fn clca_check(g: &PiecewiseAffine, seed: u64, samples: usize) -> AxiomReport {
    let ct = IntervalContact::overlap();
    let mut r = AxiomReport { exhaustive: false, entries: vec![] };
    r.push("CLC1", 1, (!g.apply(&Region::empty()).is_empty()).then(|| json!({"a": region_json(&Region::empty())})));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC1C);
    let (mut c2, mut c3) = (None, None);
    for _ in 0..samples {
        let a = sample::region(&mut rng);
        let b = sample::region(&mut rng);
        if c2.is_none() && g.apply(&a.meet(&b)) != g.apply(&a).meet(&g.apply(&b)) {
            c2 = Some(json!({"a": region_json(&a), "b": region_json(&b)}));
        }
        let small = sample::bounded_region(&mut rng);
        let big = small.enlarge(&sample::positive_rational(&mut rng)).join(&b);
        if c3.is_none()
            && ct.way_below(&small, &big)
            && !ct.way_below(&g.apply(&small.complement()).complement(), &g.apply(&big))
        {
            c3 = Some(json!({"a": region_json(&small), "b": region_json(&big)}));
        }
    }
    r.push("CLC2", samples as u64, c2);
    r.push("CLC3", samples as u64, c3);
    let d = dboo_check(g, seed, samples);
    r.push("CLC4", samples as u64, d.get("CLC4").and_then(|e| e.witness.clone()));
    r.push("CLC5", samples as u64, round_failure(g, seed, samples));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn affine_maps_are_certified() {
        let g = PiecewiseAffine::new(vec![int(0)], vec![int(1), int(2)], vec![int(0), int(0)]).unwrap();
        assert!(dboo_check(&g, 1, 200).failures().is_empty());
        assert_eq!(v_functor(&g, 1, 200).unwrap(), g);
        assert!(clca_check(&g, 1, 200).failures().is_empty());
        let t = PiecewiseAffine::translation(rat(1, 2));
        assert!(clca_check(&t, 2, 200).failures().is_empty());
    }
}
