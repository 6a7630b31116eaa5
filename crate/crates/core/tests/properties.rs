use contact_duality::algebra::{int, Component, Ext, Region};
use contact_duality::contact::{FiniteLca, IntervalContact};
use contact_duality::json::{lca_json, parse_finite_lca, parse_region, parse_space, parse_text, region_json, space_json};
use contact_duality::morphisms::round;
use contact_duality::topology::enumerate_topologies;
use proptest::prelude::*;

fn component() -> impl Strategy<Value = Component> {
    (-6i64..6, 1i64..5, 0u8..8).prop_map(|(lo, len, ray)| Component {
        lo: if ray == 0 { Ext::NegInf } else { Ext::Fin(int(lo)) },
        hi: if ray == 1 { Ext::PosInf } else { Ext::Fin(int(lo + len)) },
    })
}

fn region() -> impl Strategy<Value = Region> {
    prop::collection::vec(component(), 0..4).prop_map(Region::from_components)
}

proptest! {
    #[test]
    fn interval_algebra_is_boolean(a in region(), b in region(), c in region()) {
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.join(&b).complement(), a.complement().meet(&b.complement()));
        prop_assert_eq!(a.meet(&b.join(&c)), a.meet(&b).join(&a.meet(&c)));
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert!(a.join(&a.complement()).is_full());
        prop_assert!(a.meet(&a.complement()).is_empty());
        prop_assert_eq!(a.leq(&b), a.meet(&b) == a);
    }

    #[test]
    fn overlap_contact_laws(a in region(), b in region()) {
        let ct = IntervalContact::overlap();
        prop_assert_eq!(ct.contact(&a, &b), ct.contact(&b, &a));
        prop_assert_eq!(ct.contact(&a, &b), a.overlaps(&b));
        if ct.way_below(&a, &b) {
            prop_assert!(a.leq(&b));
        }
        if !a.is_empty() {
            prop_assert!(ct.contact(&a, &a));
        }
    }

    #[test]
    fn region_json_round_trips(a in region()) {
        let text = region_json(&a).to_string();
        prop_assert_eq!(parse_region(&parse_text(&text).unwrap()).unwrap(), a);
    }

    #[test]
    fn rounding_is_idempotent_and_monotone(k in 1usize..=3, seed in prop::collection::vec(0u32..8, 8)) {
        let lca = FiniteLca::overlap(k).unwrap();
        let mask = (1u32 << k) - 1;
        let f: Vec<u32> = seed[..1 << k].iter().map(|v| v & mask).collect();
        let once = round(&f, &lca).unwrap();
        prop_assert_eq!(round(&once, &lca).unwrap(), once.clone());
        for a in 0..1u32 << k {
            for b in 0..1u32 << k {
                if a & !b == 0 {
                    prop_assert_eq!(once[a as usize] & !once[b as usize], 0);
                }
            }
        }
    }

    #[test]
    fn parse_text_never_panics(s in "\\PC{0,40}") {
        let _ = parse_text(&s);
    }
}

#[test]
fn finite_json_round_trips() {
    for n in 1..=3 {
        for x in enumerate_topologies(n).unwrap() {
            assert_eq!(parse_space(&space_json(&x)).unwrap(), x);
        }
        for l in FiniteLca::all(n).unwrap() {
            assert_eq!(parse_finite_lca(&lca_json(&l)).unwrap(), l);
        }
    }
}
