//! The Rees algebra of `(x)` over `QQ[x]/(x^2)` does not commute with the
//! base change to `B = A[S]/(xS)`: `T^2` vanishes in `R(M) ⊗ B` but not in
//! `R(M ⊗ B)`.

use reeskit::fpmod::FPModule;
use reeskit::poly::PolyRing;
use reeskit::projgeo::is_proj_empty;
use reeskit::rees::{compare_base_change, rees_presentation, sym_presentation, BaseChangeComparison};
use reeskit::ring::{AffineRing, RingMap};

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["x"]);
    let x = r.var(0);
    let a = AffineRing::new(&r, vec![x.pow(2)])?;
    let m = FPModule::new(&a, 1, vec![vec![x.clone()]])?;

    let rees = rees_presentation(&m)?;
    println!("Sym(M)  = {}", sym_presentation(&m));
    println!("R(M)    = {rees}");
    println!("Proj R(M) empty: {}", is_proj_empty(&rees));

    let s = PolyRing::rational(&["x", "S"]);
    let b = AffineRing::new(&s, vec![s.var(0).pow(2), &s.var(0) * &s.var(1)])?;
    let report = compare_base_change(&m, &RingMap::by_names(&a, &b)?)?;
    println!("R(M) ⊗ B   = {}", report.left);
    println!("R(M ⊗ B)   = {}", report.right);
    match report.outcome {
        BaseChangeComparison::Surjection => println!("canonical surjection exists"),
        BaseChangeComparison::NoCanonicalMap { witness } => println!("no canonical map; witness {witness}"),
    }
    Ok(())
}
