//! Schematic density of open sets, directly and through the associated
//! primes of the base.

use reeskit::fpmod::FPModule;
use reeskit::groebner::Ideal;
use reeskit::poly::PolyRing;
use reeskit::projgeo::{assofrees_check, schematically_dense};
use reeskit::ring::AffineRing;

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["x", "y"]);
    let axes = AffineRing::new(&r, vec![&r.var(0) * &r.var(1)])?;
    let report = schematically_dense(&Ideal::new(&axes, vec![r.var(0)])?);
    let witness = report.witness.map_or("none".to_string(), |w| w.to_string());
    println!("x != 0 dense in QQ[x,y]/(xy): {} (witness {witness})", report.dense);

    let plane = AffineRing::polynomial(&r);
    let punctured = schematically_dense(&Ideal::new(&plane, vec![r.var(0), r.var(1)])?);
    println!("punctured plane dense: {}", punctured.dense);

    let p = Ideal::new(&axes, vec![r.var(0)])?;
    let a = assofrees_check(&FPModule::free(&axes, 1), &[p])?;
    println!("preimage predicted dense in the blow-up of A: {}", a.aggregate);
    Ok(())
}
