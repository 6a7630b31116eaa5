//! Comma objects over small powersets, the functors U and W, and the
//! quotient of the interval algebra's bounded ultrafilters.

use contact_duality::duality::interval::w_interval;
use contact_duality::duality::{u_functor, w_functor, wu_iso_failure};
use contact_duality::harness::enumerate::valid_comma_objects;

fn main() -> contact_duality::Result<()> {
    for n in 1..=3 {
        let objects = valid_comma_objects(n)?;
        println!("{n} atoms: {} valid comma objects", objects.len());
        let o = &objects[0];
        let lca = u_functor(o)?;
        let back = w_functor(&lca)?;
        println!("  {} -> U has {} bounded clusters -> W {}", o.to_json(), lca.bounded_clusters()?.len(), back.to_json());
        println!("  W(U(o)) ≅ o: {}", wu_iso_failure(o)?.is_none());
    }
    let q = w_interval(0xD0B0, 200)?;
    println!("interval: {} (equivalence {}, two-point fibers {})", q.description, q.equivalence, q.two_point_fibers);
    Ok(())
}
