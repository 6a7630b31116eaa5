//! Clans and clusters of finite contact relations, the local contact axioms
//! and the bounded-cluster space of a finite LCA.

use contact_duality::algebra::atoms_of;
use contact_duality::contact::{bclust_space, standard_lca, FiniteContact, FiniteLca};
use contact_duality::topology::FiniteSpace;

fn main() -> contact_duality::Result<()> {
    let path = FiniteContact::from_pairs(3, &[(0, 1), (1, 2)])?;
    let sets = |v: Vec<u32>| v.into_iter().map(atoms_of).collect::<Vec<_>>();
    println!("path on 3 atoms: clans {:?}", sets(path.clans()?));
    println!("                 clusters {:?}", sets(path.clusters()?));
    let r = path.axiom_report();
    println!("  contact algebra: {}, normal: {}", r.is_contact_algebra(), r.is_normal());

    for (label, lca) in [("overlap P(3)", FiniteLca::overlap(3)?), ("path, all bounded", FiniteLca::new(path.clone(), 0b111)?)] {
        let r = lca.axiom_report();
        let failed: Vec<_> = r.failures().iter().map(|e| e.axiom).collect();
        println!("{label}: LCA = {} failed = {failed:?}", r.is_local_contact_algebra());
    }

    // Only overlap contact survives the axioms on a finite algebra; its
    // bounded clusters recover the discrete space.
    let std = standard_lca(&FiniteSpace::discrete(3)?)?;
    let cs = bclust_space(&std.lca)?;
    println!("bounded clusters of RC(3 points): {:?}, discrete: {}", cs.space.names(), cs.space.is_discrete());
    Ok(())
}
