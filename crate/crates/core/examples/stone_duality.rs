//! Stone duality on both backends: ultrafilters, the Stone map and
//! preimages of ultrafilters under homomorphisms.

use contact_duality::algebra::{
    make_algebra, rat, BackendSpec, Element, FiniteHom, IntervalUlt, Region, Side, Ultrafilter,
};

fn main() -> contact_duality::Result<()> {
    let p3 = make_algebra(BackendSpec::FinitePowerset(3))?;
    println!("P(3) has {:?} elements and ultrafilters {:?}", p3.size(), p3.ultrafilters());
    for a in [0b000, 0b101, 0b111] {
        println!("  ε({:03b}) = {:?}", a, p3.stone_epsilon(&Element::Finite(a))?);
    }

    // A homomorphism P(2) → P(3) given by its dual map on atoms.
    let h = FiniteHom::new(2, 3, vec![0, 1, 1])?;
    println!("h = {:?}: h([1]) = {:03b}, preimage of u2 is u{}", h.dual_map(), h.apply(0b10), h.ult_preimage(2)?);

    let interval = make_algebra(BackendSpec::RationalInterval)?;
    let a = Element::Interval(Region::interval(rat(0, 1), rat(1, 2)));
    let u = Ultrafilter::Interval(IntervalUlt::Point(rat(1, 2), Side::Left));
    let v = Ultrafilter::Interval(IntervalUlt::Point(rat(1, 2), Side::Right));
    println!("[0, 1/2] ∈ (1/2, left): {}", interval.member(&a, &u)?);
    println!("[0, 1/2] ∈ (1/2, right): {}", interval.member(&a, &v)?);
    println!("interval ultrafilters listed? {}", !interval.ultrafilters().is_representable_subfamily());
    Ok(())
}
