//! Recovering a Boolean morphism from a CLCA morphism through the cluster
//! spaces and γ.

use contact_duality::algebra::FiniteHom;
use contact_duality::contact::FiniteLca;
use contact_duality::duality::{cor48_failure, gamma, reconstruct_dboo};
use contact_duality::morphisms::{v_functor, DbooMorphism};

fn main() -> contact_duality::Result<()> {
    let l2 = FiniteLca::overlap(2)?;
    let l3 = FiniteLca::overlap(3)?;
    let g = gamma(&l3)?;
    println!("γ on P(3): {:?}", g.map);

    let phi = DbooMorphism::new(FiniteHom::new(2, 3, vec![1, 0, 1])?, l2, l3)?;
    let alpha = v_functor(&phi)?;
    let rec = reconstruct_dboo(&alpha)?;
    println!("original dual map {:?}, reconstructed {:?}", phi.hom.dual_map(), rec.phi.hom.dual_map());
    println!("cluster map {:?}, f̄ {:?}", rec.cluster_map.map, rec.f_bar);
    println!("naturality holds: {}", cor48_failure(&alpha)?.is_none());
    Ok(())
}
