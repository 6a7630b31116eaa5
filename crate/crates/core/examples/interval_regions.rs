//! Regular closed regions of the rational line with exact arithmetic:
//! Boolean operations, overlap contact, way-below and clusters.

use contact_duality::algebra::{int, rat, Region};
use contact_duality::contact::{IntervalCluster, IntervalContact};
use contact_duality::json::region_json;

fn main() -> contact_duality::Result<()> {
    let a = Region::interval(int(0), int(1));
    let b = Region::interval(int(1), int(3));
    let ray = Region::right_ray(rat(5, 2));
    let ct = IntervalContact::overlap();

    println!("a ∨ b = {}", region_json(&a.join(&b)));
    println!("b ∧ ray = {}", region_json(&b.meet(&ray)));
    println!("a* = {}", region_json(&a.complement()));
    println!("a ⌢ b: {} (they share the point 1)", ct.contact(&a, &b));
    println!("a ≪ [-1, 2]: {}", ct.way_below(&a, &Region::interval(int(-1), int(2))));
    println!("a ≪ b ∨ a: {}", ct.way_below(&a, &a.join(&b)));
    println!("bounded: a {} ray {}", a.is_bounded(), ray.is_bounded());

    let at_one = IntervalCluster::Point(int(1));
    println!("cluster at 1 contains a: {}, contains ray: {}", at_one.contains(&a), at_one.contains(&ray));
    println!("cluster at infinity contains ray: {}", IntervalCluster::Infinity.contains(&ray));
    let report = ct.axiom_report(0xD0B0, 200);
    println!("sampled C1-C4 hold: {}", report.is_contact_algebra());
    Ok(())
}
