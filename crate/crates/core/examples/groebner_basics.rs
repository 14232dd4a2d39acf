//! Ideals, reduced Gröbner bases, elimination and saturation.

use reeskit::groebner::{eliminate, ideal_quotient, saturate, Ideal};
use reeskit::poly::PolyRing;
use reeskit::ring::AffineRing;

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["t", "x", "y"]);
    let (t, x, y) = (r.var(0), r.var(1), r.var(2));
    let a = AffineRing::polynomial(&r);

    let curve = Ideal::new(&a, vec![&x - &t.pow(2), &y - &t.pow(3)])?;
    println!("basis: {:?}", curve.groebner_basis().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    println!("implicit equation: {}", eliminate(&curve, &[0]));

    let i = Ideal::new(&a, vec![&x.pow(2) * &y, &x * &y.pow(2)])?;
    let m = Ideal::new(&a, vec![x.clone(), y.clone()])?;
    println!("{i} : {m} = {}", ideal_quotient(&i, &m)?);
    println!("{i} : {m}^inf = {}", saturate(&i, &m)?);
    println!("x*y in {i}: {}", i.contains(&(&x * &y)));
    Ok(())
}
