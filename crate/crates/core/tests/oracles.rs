//! Brute-force oracles written directly from the definitions, compared with
//! the library's enumerations.

use std::collections::BTreeSet;

use contact_duality::algebra::{FiniteHom, PowersetAlgebra};
use contact_duality::contact::{all_contacts, FiniteContact};
use contact_duality::topology::{enumerate_topologies, FiniteSpace, RegularClosedAlgebra};

/// A family of elements of `P(n)` as a bit mask over the `2^n` elements.
type Family = u64;

fn has(fam: Family, a: u32) -> bool {
    fam >> a & 1 == 1
}

fn elements(n: usize) -> Vec<u32> {
    (0..1u32 << n).collect()
}

/// Nonempty, upward closed, a grill, and pairwise in contact.
fn is_clan_by_definition(c: &FiniteContact, fam: Family) -> bool {
    let e = elements(c.n());
    fam != 0
        && !has(fam, 0)
        && e.iter().all(|&a| {
            e.iter().all(|&b| {
                let up = !has(fam, a) || a & !b != 0 || has(fam, b);
                let grill = !has(fam, a | b) || has(fam, a) || has(fam, b);
                let touch = !(has(fam, a) && has(fam, b)) || c.contact(a, b);
                up && grill && touch
            })
        })
}

fn is_cluster_by_definition(c: &FiniteContact, fam: Family) -> bool {
    let e = elements(c.n());
    is_clan_by_definition(c, fam)
        && e.iter().all(|&a| has(fam, a) || e.iter().any(|&b| has(fam, b) && !c.contact(a, b)))
}

fn family_of(n: usize, s: u32) -> Family {
    elements(n).into_iter().filter(|&a| a & s != 0).fold(0, |m, a| m | 1 << a)
}

#[test]
fn clans_and_clusters_match_definitions() {
    for n in 1..=3 {
        for c in all_contacts(n).unwrap() {
            let families = 0..(1u64 << (1 << n));
            let clans: BTreeSet<Family> = families.clone().filter(|&f| is_clan_by_definition(&c, f)).collect();
            let clusters: BTreeSet<Family> = families.filter(|&f| is_cluster_by_definition(&c, f)).collect();
            let lib_clans: BTreeSet<Family> = c.clans().unwrap().into_iter().map(|s| family_of(n, s)).collect();
            let lib_clusters: BTreeSet<Family> = c.clusters().unwrap().into_iter().map(|s| family_of(n, s)).collect();
            assert_eq!(clans, lib_clans, "clans of {:?}", c.pairs());
            assert_eq!(clusters, lib_clusters, "clusters of {:?}", c.pairs());
        }
    }
}

#[test]
fn path_contact_clusters_are_maximal_cliques() {
    let c = FiniteContact::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(c.clans().unwrap().into_iter().collect::<BTreeSet<_>>(), BTreeSet::from([0b001, 0b010, 0b100, 0b011, 0b110]));
    assert_eq!(c.clusters().unwrap().into_iter().collect::<BTreeSet<_>>(), BTreeSet::from([0b011, 0b110]));
}

/// All families containing `∅` and `X` closed under binary union and intersection.
fn topologies_by_brute_force(n: usize) -> BTreeSet<Vec<u32>> {
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = BTreeSet::new();
    for pick in 0..1u64 << middle.len() {
        let mut opens: Vec<u32> = vec![0, full];
        opens.extend(middle.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &s)| s));
        let set: BTreeSet<u32> = opens.iter().copied().collect();
        if opens.iter().all(|&u| opens.iter().all(|&v| set.contains(&(u | v)) && set.contains(&(u & v)))) {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

#[test]
fn topology_enumeration_matches_brute_force() {
    let counts: Vec<usize> = (1..=4).map(|n| topologies_by_brute_force(n).len()).collect();
    assert_eq!(counts, vec![1, 4, 29, 355]);
    for n in 1..=4 {
        let lib: BTreeSet<Vec<u32>> = enumerate_topologies(n)
            .unwrap()
            .iter()
            .map(|x| {
                let mut o = x.opens().to_vec();
                o.sort_unstable();
                o
            })
            .collect();
        assert_eq!(lib, topologies_by_brute_force(n));
    }
}

#[test]
fn regular_closed_sets_match_brute_force() {
    for n in 1..=4 {
        for x in enumerate_topologies(n).unwrap() {
            let rc = RegularClosedAlgebra::new(&x).unwrap();
            let brute: Vec<u32> = (0..1u32 << n).filter(|&s| x.closure(x.interior(s)) == s).collect();
            let mut lib = rc.carrier().to_vec();
            lib.sort_unstable();
            assert_eq!(lib, brute);
            assert!(rc.carrier().len().is_power_of_two());
        }
    }
}

#[test]
fn named_spaces() {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let s = FiniteSpace::new(names(&["a", "b"]), vec![0, 0b01, 0b11]).unwrap();
    assert_eq!(s.closure(0b01), 0b11);
    assert_eq!(RegularClosedAlgebra::new(&s).unwrap().carrier(), &[0, 0b11]);
    let x3 = FiniteSpace::new(names(&["p", "q", "r"]), vec![0, 0b001, 0b100, 0b101, 0b111]).unwrap();
    assert_eq!(x3.interior(0b011), 0b001);
    let rc = RegularClosedAlgebra::new(&x3).unwrap();
    let mut carrier = rc.carrier().to_vec();
    carrier.sort_unstable();
    assert_eq!(carrier, vec![0, 0b011, 0b110, 0b111]);
    assert_eq!(rc.complement(0b011), 0b110);
    assert_eq!(RegularClosedAlgebra::new(&FiniteSpace::discrete(3).unwrap()).unwrap().carrier().len(), 8);
}

#[test]
fn homomorphisms_obey_boolean_laws() {
    for n in 1..=3 {
        for m in 1..=3 {
            let homs = FiniteHom::all(n, m).unwrap();
            assert_eq!(homs.len(), n.pow(m as u32));
            let (src, tgt) = (PowersetAlgebra::new(n).unwrap(), PowersetAlgebra::new(m).unwrap());
            for h in homs {
                assert_eq!(h.apply(0), 0);
                assert_eq!(h.apply(src.top()), tgt.top());
                for a in src.elements() {
                    assert_eq!(h.apply(src.complement(a)), tgt.complement(h.apply(a)));
                    for b in src.elements() {
                        assert_eq!(h.apply(a | b), h.apply(a) | h.apply(b));
                        assert_eq!(h.apply(a & b), h.apply(a) & h.apply(b));
                    }
                }
            }
        }
    }
}

#[test]
fn stone_map_is_a_bijective_lattice_map() {
    for n in 1..=4 {
        let alg = PowersetAlgebra::new(n).unwrap();
        let images: BTreeSet<Vec<usize>> = alg.elements().map(|a| alg.epsilon(a)).collect();
        assert_eq!(images.len(), alg.size());
        for a in alg.elements() {
            for b in alg.elements() {
                let union: BTreeSet<usize> = alg.epsilon(a).into_iter().chain(alg.epsilon(b)).collect();
                assert_eq!(alg.epsilon(a | b), union.into_iter().collect::<Vec<_>>());
            }
        }
    }
}
