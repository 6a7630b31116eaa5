use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::enumerate::{comma_candidates, maps_where, spaces_up_to, valid_comma_objects};
use super::{sweep, sweep_with, Outcome, Tally};
use crate::algebra::interval::sample;
use crate::algebra::{AtomSet, FiniteHom, IntervalUlt};
use crate::contact::report::BOUNDED_AXIOMS;
use crate::contact::roeper::sigma_failure;
use crate::contact::{
    all_contacts, interval::bounded_member_below, standard_lca, tau_table, FiniteContact, FiniteLca,
    IntervalCluster, IntervalContact, LocalContactAlgebra,
};
use crate::duality::{self, interval as dint, CommaMorphism, CommaObject};
use crate::error::{Error, Result};
use crate::json::set_json;
use crate::morphisms::{
    backsim, diamond, rcl_map, v_functor, ClcaMorphism, DbooMorphism, RoundPlan,
};
use crate::topology::{dense_r_e, rho, FiniteSpace, PointMap, RegularClosedAlgebra};

pub(super) fn run(name: &str, seed: u64, size: usize) -> Result<Tally> {
    match name {
        "rc-boolean" => rc_boolean(size),
        "alexandroff-rho" => alexandroff_rho(size),
        "dense-re" => dense_re(size),
        "contact-characterizations" => contact_characterizations(size),
        "normality-boundary" => normality_boundary(size),
        "finite-lca-boundary" => finite_lca_boundary(size),
        "roeper-roundtrip" => roeper_roundtrip(size),
        "prop-4.1" => prop_v_valid(size),
        "v-functor" => v_functoriality(size),
        "lemma-2.13" => lemma_2_13(size),
        "lemma-2.14a" => Ok(lemma_2_14a(seed, size)),
        "lemma-2.14b" => Ok(lemma_2_14b(seed, size)),
        "round-idempotent" => round_idempotent(size),
        "uw-roundtrip" => uw_roundtrip(size),
        "lemma-3.14" => lemma_3_14(size),
        "thm-4.7-reconstruction" => reconstruction(size),
        "cor-4.8" => cor_4_8(size),
        "lemma-4.6" => lemma_4_6(size),
        "interval-axioms" => Ok(interval_axioms(seed, size)),
        "lemma-2.6" => lemma_2_6(seed, size),
        "prop-3.12a-interval" => Ok(single(size as u64, dint::equivalence_failure(seed, size))),
        "prop-3.12b-interval" => Ok(single(size as u64, dint::bounded_iff_in_z_failure(seed, size))),
        "lemma-4.4-interval" => lemma_4_4(seed, size),
        "prop-2.16-2.17-interval" => bounded_cluster_facts(seed, size),
        "fiber-2to1-interval" => Ok(single(size as u64, dint::fiber_failure(seed, size)?)),
        other => Err(Error::input(format!("suite `{other}` has no body"))),
    }
}

/// A sampled check run as one unit: `checked` samples, at most one witness.
fn single(checked: u64, failure: Option<Value>) -> Tally {
    let mut t = Tally { checked, ..Tally::default() };
    if let Some(w) = failure {
        t.fail(w);
    }
    t
}

fn overlaps(n: usize) -> Result<Vec<FiniteLca>> {
    (1..=n).map(FiniteLca::overlap).collect()
}

fn discretes(n: usize) -> Result<Vec<FiniteSpace>> {
    (1..=n).map(FiniteSpace::discrete).collect()
}

fn rc_boolean(n: usize) -> Result<Tally> {
    let spaces = spaces_up_to(n)?;
    Ok(sweep(&spaces, |x| {
        let rc = RegularClosedAlgebra::new(x)?;
        if let Some(law) = rc.law_failure() {
            return Ok(Outcome::Fail(json!({"opens": x.opens(), "law": law})));
        }
        let bad = rc.carrier().iter().find(|&&f| x.closure(x.interior(f)) != f);
        Ok(Outcome::from_failure(bad.map(|&f| json!({"opens": x.opens(), "F": x.names_of(f)}))))
    }))
}

fn alexandroff_rho(n: usize) -> Result<Tally> {
    let spaces = spaces_up_to(n)?;
    let pairs: Vec<(&FiniteSpace, &FiniteSpace)> =
        spaces.iter().flat_map(|x| spaces.iter().filter(|y| y.len() <= x.len()).map(move |y| (x, y))).collect();
    Ok(sweep_with(&pairs, |(x, y), t| {
        for p in PointMap::all(x, y) {
            let r = p.predicates();
            if !(r.continuous && r.closed && r.irreducible) {
                t.record(Ok(Outcome::Skip));
                continue;
            }
            t.record(rho(&p).map(|_| Outcome::Pass));
        }
        Ok(())
    }))
}

fn dense_re(n: usize) -> Result<Tally> {
    let spaces = spaces_up_to(n)?;
    Ok(sweep_with(&spaces, |x, t| {
        for y in 1..=x.full() {
            if x.closure(y) != x.full() {
                continue;
            }
            t.record(dense_r_e(x, y).map(|_| Outcome::Pass));
        }
        Ok(())
    }))
}

fn contacts_up_to(n: usize) -> Result<Vec<FiniteContact>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_contacts(k)?);
    }
    Ok(out)
}

fn contact_characterizations(n: usize) -> Result<Tally> {
    let contacts = contacts_up_to(n)?;
    Ok(sweep(&contacts, |c| {
        let clans = c.clans()?;
        let k = c.n();
        let ult: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| c.ult_contact_by_definition(i, j)).collect()).collect();
        for a in c.algebra().elements() {
            for b in c.algebra().elements() {
                let direct = c.contact(a, b);
                let by_clan = clans.iter().any(|&s| a & s != 0 && b & s != 0);
                let by_ult = (0..k).any(|i| a >> i & 1 == 1 && (0..k).any(|j| b >> j & 1 == 1 && ult[i][j]));
                if direct != by_clan || direct != by_ult {
                    return Ok(Outcome::Fail(json!({
                        "contact_pairs": c.pairs(), "atoms": k, "a": set_json(a), "b": set_json(b),
                        "contact": direct, "clan": by_clan, "ultrafilters": by_ult
                    })));
                }
            }
        }
        Ok(Outcome::Pass)
    }))
}

/// The path relation 0 ~ 1 ~ 2 and the non-transitive ultrafilter triple.
fn path3_witness() -> Result<Value> {
    let c = FiniteContact::from_pairs(3, &[(0, 1), (1, 2)])?;
    let found = c.ult_contact(0, 1) && c.ult_contact(1, 2) && !c.ult_contact(0, 2);
    if !found {
        return Err(Error::Invariant("the path relation lost its transitivity counterexample".into()));
    }
    Ok(json!({"atoms": 3, "contact_pairs": [[0, 1], [1, 2]], "u": "u0", "v": "u1", "w": "u2"}))
}

fn normality_boundary(n: usize) -> Result<Tally> {
    let contacts = contacts_up_to(n)?;
    let mut t = sweep_with(&contacts, |c, t| {
        let i5 = c.axiom_report().passes("I5");
        let eq = c.ult_contact_is_equivalence();
        if i5 != c.is_diagonal() || eq != c.is_transitive() {
            t.fail(json!({"atoms": c.n(), "contact_pairs": c.pairs(), "I5": i5, "equivalence": eq}));
            return Ok(());
        }
        t.checked += 1;
        if !i5 || !eq {
            t.boundary += 1;
        }
        Ok(())
    });
    t.note(format!("transitivity counterexample: {}", path3_witness()?));
    Ok(t)
}

fn finite_lca_boundary(n: usize) -> Result<Tally> {
    let mut lcas = Vec::new();
    for k in 1..=n {
        lcas.extend(FiniteLca::all(k)?);
    }
    Ok(sweep_with(&lcas, |l, t| {
        let r = l.axiom_report();
        let bc = r.all_pass(&BOUNDED_AXIOMS);
        let expected = l.contact_algebra().is_diagonal() && l.bounded_generator() == l.top();
        if bc != expected || !r.is_contact_algebra() {
            t.fail(json!({
                "atoms": l.n(), "contact_pairs": l.contact_algebra().pairs(),
                "bounded_max": set_json(l.bounded_generator()), "bc": bc
            }));
            return Ok(());
        }
        t.checked += 1;
        if !bc {
            t.boundary += 1;
        }
        Ok(())
    }))
}

fn roeper_roundtrip(n: usize) -> Result<Tally> {
    let spaces = discretes(n)?;
    Ok(sweep(&spaces, |x| {
        if let Some(w) = sigma_failure(x)? {
            return Ok(Outcome::Fail(w));
        }
        let lca = standard_lca(x)?.lca;
        let tt = tau_table(&lca)?;
        if let Some(w) = tt.iso_failure(&lca) {
            return Ok(Outcome::Fail(w));
        }
        let target = standard_lca(&tt.space.space)?;
        let table = tt.table.iter().map(|&s| target.rc.to_atoms(s)).collect();
        let m = ClcaMorphism::new(lca, target.lca, table)?;
        Ok(Outcome::from_failure((!m.is_valid()).then(|| json!({"points": x.len(), "tau": m.report}))))
    }))
}

/// Every Boolean morphism between overlap LCAs on at most `n` atoms.
fn dboo_morphisms(n: usize) -> Result<Vec<DbooMorphism>> {
    let ls = overlaps(n)?;
    let mut out = Vec::new();
    for s in &ls {
        for t in &ls {
            for h in FiniteHom::all(s.n(), t.n())? {
                out.push(DbooMorphism::new(h, s.clone(), t.clone())?);
            }
        }
    }
    Ok(out)
}

fn prop_v_valid(n: usize) -> Result<Tally> {
    let ms = dboo_morphisms(n)?;
    Ok(sweep(&ms, |phi| {
        if !phi.is_valid() {
            return Ok(Outcome::Skip);
        }
        v_functor(phi).map(|_| Outcome::Pass)
    }))
}

fn v_functoriality(n: usize) -> Result<Tally> {
    let ms = dboo_morphisms(n)?;
    let vs: Vec<ClcaMorphism> = ms.par_iter().map(v_functor).collect::<Result<_>>()?;
    let mut t = Tally::default();
    for l in overlaps(n)? {
        let id = DbooMorphism::new(FiniteHom::identity(l.n())?, l.clone(), l.clone())?;
        let vid = v_functor(&id)?;
        t.record(Ok(if vid.table == ClcaMorphism::identity(&l)?.table {
            Outcome::Pass
        } else {
            Outcome::Fail(json!({"check": "V(id) = id", "atoms": l.n()}))
        }));
    }
    let idx: Vec<usize> = (0..ms.len()).collect();
    let comp = sweep_with(&idx, |&i, t| {
        for j in 0..ms.len() {
            if ms[i].target != ms[j].source {
                continue;
            }
            let lhs = v_functor(&ms[i].then(&ms[j])?)?;
            let rhs = diamond(&vs[j], &vs[i])?;
            t.record(Ok(if lhs.table == rhs.table {
                Outcome::Pass
            } else {
                Outcome::Fail(json!({
                    "check": "V(ψ ∘ φ) = V(ψ) ⋄ V(φ)",
                    "phi": ms[i].hom.dual_map(), "psi": ms[j].hom.dual_map()
                }))
            }));
        }
        Ok(())
    });
    Ok(t.merge(comp))
}

/// CLCA morphisms produced by `rcl_map` on maps between discrete spaces and
/// by `V` on Boolean morphisms, with the underlying hom for the latter.
fn generated_morphisms(points: usize, atoms: usize) -> Result<Vec<(ClcaMorphism, Option<FiniteHom>)>> {
    let ds = discretes(points)?;
    let mut out = Vec::new();
    for x in &ds {
        for y in &ds {
            for f in PointMap::all(x, y) {
                out.push((rcl_map(&f)?, None));
            }
        }
    }
    for phi in dboo_morphisms(atoms)? {
        out.push((v_functor(&phi)?, Some(phi.hom)));
    }
    Ok(out)
}

fn lemma_2_13(n: usize) -> Result<Tally> {
    let gens = generated_morphisms(n, n)?;
    Ok(sweep(&gens, |(alpha, hom)| {
        let (src, tgt) = (&alpha.source, &alpha.target);
        let sa = src.contact_algebra().algebra();
        let ta = tgt.contact_algebra().algebra();
        let plan = RoundPlan::new(src);
        let mut tables = vec![alpha.table.clone()];
        tables.extend(hom.as_ref().map(|h| h.table()));
        for table in &tables {
            let rounded = plan.round(table);
            for a in sa.elements() {
                if table[sa.complement(a) as usize] & table[a as usize] != 0 || rounded[a as usize] & !table[a as usize] != 0 {
                    return Ok(Outcome::Fail(json!({"check": "(a)", "table": table, "a": set_json(a)})));
                }
            }
        }
        let below: Vec<(AtomSet, AtomSet)> = sa
            .elements()
            .flat_map(|a| src.bounded_elements().into_iter().filter(move |&b| src.way_below(b, a)).map(move |b| (b, a)))
            .collect();
        for &(b1, a1) in &below {
            for &(b2, a2) in &below {
                if !tgt.way_below(alpha.apply(b1 | b2), ta.join(alpha.apply(a1), alpha.apply(a2))) {
                    return Ok(Outcome::Fail(json!({
                        "check": "(b)", "table": alpha.table,
                        "b1": set_json(b1), "a1": set_json(a1), "b2": set_json(b2), "a2": set_json(a2)
                    })));
                }
            }
        }
        Ok(Outcome::Pass)
    }))
}

fn random_table<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<AtomSet> {
    (0..1usize << n).map(|_| rng.gen_range(0..1u32 << m)).collect()
}

/// `a ↦ ⋁{r(b) | b ≤ a}`; every monotone table arises this way.
fn random_monotone<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<AtomSet> {
    let r = random_table(rng, n, m);
    (0..1u32 << n).map(|a| (0..1u32 << n).filter(|&b| b & !a == 0).fold(0, |acc, b| acc | r[b as usize])).collect()
}

fn is_monotone(t: &[AtomSet]) -> bool {
    (0..t.len()).all(|a| (0..t.len()).all(|b| a & !b != 0 || t[a] & !t[b] == 0))
}

fn compose(f: &[AtomSet], g: &[AtomSet]) -> Vec<AtomSet> {
    f.iter().map(|&v| g[v as usize]).collect()
}

fn three_sizes<R: Rng>(rng: &mut R) -> [usize; 3] {
    [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)]
}

fn lemma_2_14a(seed: u64, samples: usize) -> Tally {
    let plans: Vec<RoundPlan> = (1..=3).map(|k| RoundPlan::new(&FiniteLca::overlap(k).expect("small"))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    let (mut monotone, mut monotone_fail) = (0u64, 0u64);
    for _ in 0..samples {
        let [k0, k1, k2] = three_sizes(&mut rng);
        let f = random_table(&mut rng, k0, k1);
        let g = random_table(&mut rng, k1, k2);
        let lhs = plans[k0 - 1].round(&compose(&f, &plans[k1 - 1].round(&g)));
        let rhs = plans[k0 - 1].round(&compose(&f, &g));
        let ok = lhs == rhs;
        if is_monotone(&g) {
            monotone += 1;
            monotone_fail += u64::from(!ok);
        }
        t.record(Ok(if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(json!({"atoms": [k0, k1, k2], "f": f, "g": g, "lhs": lhs, "rhs": rhs}))
        }));
    }
    t.note(format!("{monotone} samples had monotone g; {monotone_fail} of them failed"));
    t.note("smallest refutation: one atom, f = const 1, g(0) = 1, g(1) = 0".to_string());
    t
}

fn lemma_2_14b(seed: u64, samples: usize) -> Tally {
    let plans: Vec<RoundPlan> = (1..=3).map(|k| RoundPlan::new(&FiniteLca::overlap(k).expect("small"))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x214B);
    let mut t = Tally::default();
    for _ in 0..samples {
        let [k0, k1, k2] = three_sizes(&mut rng);
        let f = random_monotone(&mut rng, k0, k1);
        let g = random_monotone(&mut rng, k1, k2);
        let lhs = plans[k0 - 1].round(&compose(&plans[k0 - 1].round(&f), &g));
        let rhs = plans[k0 - 1].round(&compose(&f, &g));
        t.record(Ok(if lhs == rhs {
            Outcome::Pass
        } else {
            Outcome::Fail(json!({"atoms": [k0, k1, k2], "f": f, "g": g}))
        }));
    }
    t
}

/// For each element, the bounded elements way below it, read directly off
/// the contact rather than through `RoundPlan`.
fn below_lists(l: &FiniteLca) -> Vec<Vec<AtomSet>> {
    let b = l.bounded_elements();
    (0..1u32 << l.n()).map(|a| b.iter().copied().filter(|&x| l.way_below(x, a)).collect()).collect()
}

/// Decode table number `code` with `slots` entries of `bits` bits each.
fn decode(code: u64, slots: usize, bits: usize, out: &mut [AtomSet; 8]) {
    for (s, slot) in out.iter_mut().enumerate().take(slots) {
        *slot = (code >> (s * bits) & ((1 << bits) - 1)) as AtomSet;
    }
}

fn round_idempotent(n: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for k in 1..=n {
        let below = below_lists(&FiniteLca::overlap(k)?);
        let slots = 1usize << k;
        for m in 1..=n {
            let total = 1u64 << (slots * m);
            let round = |f: &[AtomSet; 8]| {
                let mut r = [0; 8];
                for (a, bs) in below.iter().enumerate() {
                    r[a] = bs.iter().fold(0, |acc, &b| acc | f[b as usize]);
                }
                r
            };
            let bad: Vec<u64> = (0..total)
                .into_par_iter()
                .filter(|&code| {
                    let mut f = [0; 8];
                    decode(code, slots, m, &mut f);
                    let r = round(&f);
                    round(&r) != r
                })
                .collect();
            t.checked += total;
            for code in bad {
                let mut f = [0; 8];
                decode(code, slots, m, &mut f);
                t.fail(json!({"atoms": [k, m], "f": &f[..slots]}));
            }
        }
    }
    Ok(t)
}

fn uw_roundtrip(n: usize) -> Result<Tally> {
    let ls = overlaps(n)?;
    let mut t = sweep(&ls, |l| {
        let o = duality::w_functor(l)?;
        let bad = l
            .contact_algebra()
            .algebra()
            .elements()
            .find(|&b| l.is_bounded(b) != (b & !o.z == 0))
            .map(|b| json!({"check": "b ∈ 𝔹 iff ε(b) ⊆ Z", "b": set_json(b)}));
        Ok(Outcome::from_failure(bad))
    });
    let mut objects: Vec<CommaObject> = Vec::new();
    for k in 1..=n.min(4) {
        let found = valid_comma_objects(k)?;
        let expected: usize = (1..=k).product();
        if found.len() != expected {
            t.fail(json!({"check": "valid comma objects", "atoms": k, "found": found.len()}));
        }
        t.note(format!("{k} atoms: {} of {} candidates are comma objects", found.len(), comma_candidates(k)?.len()));
        objects.extend(found);
    }
    let objs = sweep(&objects, |o| {
        let lca = duality::u_functor(o)?;
        if let Some(w) = duality::remark_failure(o, &lca) {
            return Ok(Outcome::Fail(w));
        }
        if let Some(w) = duality::compact_open_failure(o)? {
            return Ok(Outcome::Fail(w));
        }
        Ok(Outcome::from_failure(duality::wu_iso_failure(o)?))
    });
    Ok(t.merge(objs))
}

/// Every comma morphism `o → o'`: one per dual map, with `g` and `f` forced.
fn comma_morphisms(o: &CommaObject, o2: &CommaObject) -> Result<Vec<CommaMorphism>> {
    let (n, n2) = (o.algebra.atom_count(), o2.algebra.atom_count());
    let mut out = Vec::new();
    for phi in FiniteHom::all(n, n2)? {
        let zs2 = o2.z_atoms();
        let g: Vec<usize> = zs2.iter().map(|&j| o.z_index(phi.dual_map()[j]).expect("Z is everything")).collect();
        let mut fv = vec![0; o2.y().len()];
        for (k, &gk) in g.iter().enumerate() {
            fv[o2.p.at(k)] = o.p.at(gk);
        }
        let f = PointMap::new(o2.y().clone(), o.y().clone(), fv)?;
        out.push(CommaMorphism { phi, g, f });
    }
    Ok(out)
}

fn lemma_3_14(n: usize) -> Result<Tally> {
    let mut objects = Vec::new();
    for k in 1..=n {
        objects.extend(valid_comma_objects(k)?);
    }
    let pairs: Vec<(&CommaObject, &CommaObject)> =
        objects.iter().flat_map(|o| objects.iter().map(move |o2| (o, o2))).collect();
    Ok(sweep_with(&pairs, |(o, o2), t| {
        let ms = comma_morphisms(o, o2)?;
        for m1 in &ms {
            for m2 in &ms {
                t.record(duality::u2l_check(m1, m2, o, o2).map(|_| Outcome::Pass));
            }
        }
        Ok(())
    }))
}

fn reconstruction(n: usize) -> Result<Tally> {
    let ds = discretes(n)?;
    let maps: Vec<PointMap> = ds.iter().flat_map(|x| ds.iter().flat_map(move |y| PointMap::all(x, y))).collect();
    let mut t = sweep(&maps, |f| {
        let rec = duality::reconstruct_dboo(&rcl_map(f)?)?;
        Ok(Outcome::from_failure(
            (rec.phi.hom.dual_map() != f.values()).then(|| json!({"map": f.values(), "dual_map": rec.phi.hom.dual_map()})),
        ))
    });
    t.note(format!("{} maps between discrete spaces", maps.len()));
    let homs = dboo_morphisms(n.min(3))?;
    let v = sweep(&homs, |phi0| {
        let rec = duality::reconstruct_dboo(&v_functor(phi0)?)?;
        Ok(Outcome::from_failure(
            (!backsim(&rec.phi, phi0)?).then(|| json!({"phi0": phi0.hom.dual_map(), "phi": rec.phi.hom.dual_map()})),
        ))
    });
    t.note(format!("{} Boolean morphisms", homs.len()));
    Ok(t.merge(v))
}

/// Every table between overlap LCAs on `k` and `m` atoms satisfying CLC1
/// and CLC2, found by brute force over all tables.
fn meet_preserving_tables(k: usize, m: usize) -> Vec<Vec<AtomSet>> {
    let slots = 1usize << k;
    let total = 1u64 << (slots * m);
    (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut f = [0; 8];
            decode(code, slots, m, &mut f);
            let ok = f[0] == 0 && (0..slots).all(|a| (0..slots).all(|b| f[a & b] == f[a] & f[b]));
            ok.then(|| f[..slots].to_vec())
        })
        .collect()
}

fn cor_4_8(n: usize) -> Result<Tally> {
    let mut alphas = Vec::new();
    for s in overlaps(n)? {
        for t in overlaps(n)? {
            for table in meet_preserving_tables(s.n(), t.n()) {
                let m = ClcaMorphism::new(s.clone(), t.clone(), table)?;
                if m.is_valid() {
                    alphas.push(m);
                }
            }
        }
    }
    let mut t = sweep(&alphas, |a| Ok(Outcome::from_failure(duality::cor48_failure(a)?)));
    t.note(format!("{} CLCA morphisms found by exhaustive search", alphas.len()));
    Ok(t)
}

fn lemma_4_6(n: usize) -> Result<Tally> {
    let spaces = spaces_up_to(n)?;
    let mut primes = Vec::new();
    for x2 in &spaces {
        for y2 in spaces.iter().filter(|y| y.len() <= x2.len()) {
            primes.extend(maps_where(x2, y2, |p| {
                let r = p.predicates();
                r.continuous && r.closed && r.irreducible
            }));
        }
    }
    let ds = discretes(n)?;
    let mut t = sweep_with(&primes, |p2, t| {
        for x in &ds {
            let y = FiniteSpace::discrete_named((0..x.len()).map(|i| format!("y{i}")).collect())?;
            for p in maps_where(x, &y, |p| p.is_injective()) {
                let mut inv = vec![0; x.len()];
                for (i, &v) in p.values().iter().enumerate() {
                    inv[v] = i;
                }
                for g in maps_where(p2.cod(), &y, |g| g.is_continuous()) {
                    let fv = (0..p2.dom().len()).map(|k| inv[g.at(p2.at(k))]).collect();
                    let f = PointMap::new(p2.dom().clone(), x.clone(), fv)?;
                    if !f.is_continuous() {
                        t.record(Ok(Outcome::Skip));
                        continue;
                    }
                    for gset in 0..=x.full() {
                        let v = duality::mainlml_eval(&p, p2, &f, &g, gset)?;
                        t.record(Ok(if v.equal {
                            Outcome::Pass
                        } else {
                            Outcome::Fail(json!({
                                "p": p.values(), "p_prime": p2.values(), "f": f.values(), "g": g.values(),
                                "X_prime_opens": p2.dom().opens(), "Y_prime_opens": p2.cod().opens(),
                                "G": set_json(gset), "lhs": v.lhs, "rhs": v.rhs
                            }))
                        }));
                    }
                }
            }
        }
        Ok(())
    });
    t.note(format!("{} closed irreducible maps p'", primes.len()));
    Ok(t)
}

fn interval_axioms(seed: u64, samples: usize) -> Tally {
    let r = LocalContactAlgebra::Interval.axiom_report(seed, samples);
    let mut t = Tally::default();
    for e in &r.entries {
        t.checked += e.checked;
        if let Some(w) = &e.witness {
            t.fail(json!({"axiom": e.axiom, "witness": w}));
        }
    }
    t
}

fn lemma_2_6(seed: u64, samples: usize) -> Result<Tally> {
    let al = IntervalContact::extended();
    let mut t = single(samples as u64, al.cluster_failure(&IntervalCluster::Infinity, seed, samples));
    for u in [IntervalUlt::LeftInfinity, IntervalUlt::RightInfinity] {
        let c = al.cluster_of_ultrafilter(&u)?;
        t.record(Ok(if c == IntervalCluster::Infinity {
            Outcome::Pass
        } else {
            Outcome::Fail(json!({"check": "unique unbounded cluster", "cluster": c.to_json()}))
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x26);
    for _ in 0..samples {
        let u = sample::point_ultrafilter(&mut rng);
        let c = al.cluster_of_ultrafilter(&u)?;
        t.record(Ok(if c.is_bounded() {
            Outcome::Pass
        } else {
            Outcome::Fail(json!({"check": "point clusters are bounded", "cluster": c.to_json()}))
        }));
    }
    let overlap_fails = IntervalContact::overlap().cluster_failure(&IntervalCluster::Infinity, seed, samples).is_some();
    t.note(format!("A ∖ 𝔹 fails the cluster conditions under plain overlap: {overlap_fails}"));
    Ok(t)
}

fn lemma_4_4(seed: u64, samples: usize) -> Result<Tally> {
    let t = single(samples as u64, dint::contact_criterion_failure(seed, samples)?);
    Ok(t.merge(single(samples as u64, dint::gamma_base_failure(seed, samples))))
}

fn bounded_cluster_facts(seed: u64, samples: usize) -> Result<Tally> {
    let ct = IntervalContact::overlap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2167);
    let mut t = Tally::default();
    for i in 0..samples {
        let u = sample::point_ultrafilter(&mut rng);
        let c = ct.cluster_of_ultrafilter(&u)?;
        let m = u.canonical_member();
        if !(c.is_bounded() && m.is_bounded() && u.member(&m) && c.contains(&m)) {
            t.fail(json!({"check": "bounded member of u", "u": crate::json::ult_json(&u)}));
            continue;
        }
        let mut failed = false;
        for _ in 0..5 {
            let a = sample::region(&mut rng).join(&u.small_member(&sample::positive_rational(&mut rng)));
            let ok = matches!(bounded_member_below(&c, &a), Some(b) if b.is_bounded() && b.leq(&a) && c.contains(&b));
            if !ok {
                t.fail(json!({"check": "bounded member below", "cluster": c.to_json(), "a": crate::json::region_json(&a)}));
                failed = true;
                break;
            }
        }
        if !failed {
            if let Some(w) = ct.cluster_failure(&c, seed.wrapping_add(i as u64), 20) {
                t.fail(w);
                continue;
            }
            t.checked += 1;
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for name in ["rc-boolean", "dense-re", "contact-characterizations", "roeper-roundtrip", "uw-roundtrip"] {
            let t = run(name, 0, 2).unwrap();
            assert_eq!(t.failure_count, 0, "{name}: {:?}", t.failures);
            assert!(t.checked > 0);
        }
    }

    #[test]
    fn rounding_identity_fails_on_samples() {
        let t = lemma_2_14a(super::super::DEFAULT_SEED, 200);
        assert!(t.failure_count > 0);
    }

    #[test]
    fn monotone_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert!(is_monotone(&random_monotone(&mut rng, 2, 2)));
        }
        assert!(!is_monotone(&[2, 0]));
    }
}
