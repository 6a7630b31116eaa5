//! Regular closed algebras of small spaces, Alexandroff's isomorphism along
//! an irreducible map, and the absolute of a discrete space.

use contact_duality::topology::{absolute, rho, FiniteSpace, PointMap, RegularClosedAlgebra};

fn show(label: &str, x: &FiniteSpace) -> contact_duality::Result<RegularClosedAlgebra> {
    let rc = RegularClosedAlgebra::new(x)?;
    let sets: Vec<Vec<String>> = rc.carrier().iter().map(|&f| x.names_of(f)).collect();
    println!("RC({label}) = {sets:?}");
    Ok(rc)
}

fn main() -> contact_duality::Result<()> {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let sierpinski = FiniteSpace::new(names(&["a", "b"]), vec![0b00, 0b01, 0b11])?;
    show("S", &sierpinski)?;

    let x3 = FiniteSpace::new(names(&["p", "q", "r"]), vec![0, 0b001, 0b100, 0b101, 0b111])?;
    let rc = show("X3", &x3)?;
    let pq = x3.set_of(&["p", "q"])?;
    println!("  complement of {{p,q}} is {:?}", x3.names_of(rc.complement(pq)));

    // The indiscrete two-point space maps irreducibly onto a point.
    let two = FiniteSpace::indiscrete(2)?;
    let one = FiniteSpace::discrete(1)?;
    let p = PointMap::new(two, one, vec![0, 0])?;
    println!("predicates of indiscrete → point: {:?}", p.predicates());
    let iso = rho(&p)?;
    println!("  ρ_p(X) = {:?}", iso.apply(0b11));

    let (ex, pi) = absolute(&FiniteSpace::discrete(3)?)?;
    println!("EX = {:?}, π = {:?}, irreducible: {}", ex.names(), pi.values(), pi.is_irreducible());
    Ok(())
}
