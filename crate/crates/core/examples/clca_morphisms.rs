//! Boolean morphisms between finite LCAs, their roundings, the functor V and
//! ⋄-composition.

use contact_duality::algebra::FiniteHom;
use contact_duality::contact::FiniteLca;
use contact_duality::json::table_json;
use contact_duality::morphisms::{backsim, diamond, v_functor, DbooMorphism};

fn main() -> contact_duality::Result<()> {
    let l2 = FiniteLca::overlap(2)?;
    let l3 = FiniteLca::overlap(3)?;
    // Atom 2 of the target is sent to atom 1 of the source.
    let phi = DbooMorphism::new(FiniteHom::new(2, 3, vec![0, 1, 1])?, l2.clone(), l3.clone())?;
    println!("φ valid: {}", phi.is_valid());
    let v_phi = v_functor(&phi)?;
    println!("V(φ) = {}", table_json(&v_phi.table));

    let psi = DbooMorphism::new(FiniteHom::new(3, 3, vec![0, 2, 1])?, l3.clone(), l3)?;
    let v_psi = v_functor(&psi)?;
    let composed = diamond(&v_psi, &v_phi)?;
    let direct = v_functor(&phi.then(&psi)?)?;
    println!("V(ψ) ⋄ V(φ) = V(ψ ∘ φ): {}", composed.table == direct.table);
    println!("φ ∽ φ: {}", backsim(&phi, &phi)?);
    Ok(())
}
