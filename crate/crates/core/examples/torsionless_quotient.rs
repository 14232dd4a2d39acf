//! The torsionless quotient of `A ⊕ A/(x)` over `QQ[x, y]`, computed through
//! the bidual and through the flat extension `A -> A[1/x]`.

use reeskit::fpmod::{torsionless_quotient, torsionless_via_flat, FPModule, FlatExtension, IsoCertificate};
use reeskit::groebner::Ideal;
use reeskit::poly::PolyRing;
use reeskit::rees::check_injectivity_flat;
use reeskit::ring::{AffineRing, RingMap};

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["x", "y"]);
    let a = AffineRing::polynomial(&r);
    let m = FPModule::free(&a, 1).direct_sum(&FPModule::cyclic(&Ideal::new(&a, vec![r.var(0)])?))?;

    let (tl, _) = torsionless_quotient(&m)?;
    println!("M      = {m}");
    println!("M^tl   = {tl}  (minimal: {})", tl.minimized());

    let s = PolyRing::rational(&["x", "y", "z"]);
    let loc = AffineRing::new(&s, vec![&(&s.var(0) * &s.var(2)) - &s.one()])?;
    let ext = FlatExtension::recognize(&RingMap::by_names(&a, &loc)?)?;
    let via = torsionless_via_flat(&m, &ext)?;
    println!("via A[1/x] = {via}");
    println!("isomorphic: {}", IsoCertificate::same_generators(&tl, &via)?.is_some());
    println!("R(M) injects into R(M ⊗ A[1/x]): {}", check_injectivity_flat(&m, &ext)?);
    Ok(())
}
