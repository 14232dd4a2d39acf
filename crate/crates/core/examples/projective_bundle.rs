//! For a free module the Rees and symmetric algebras agree and the total
//! blow-up is a projective bundle covered by the standard charts.

use reeskit::fpmod::FPModule;
use reeskit::poly::PolyRing;
use reeskit::projgeo::proj_charts;
use reeskit::rees::{rees_presentation, sym_presentation};
use reeskit::ring::AffineRing;

fn main() -> reeskit::Result<()> {
    let a = AffineRing::polynomial(&PolyRing::rational(&["x", "y"]));
    for n in 1..=3 {
        let f = FPModule::free(&a, n);
        let rees = rees_presentation(&f)?;
        println!("rank {n}: Rees {}  Sym {}", rees.ideal(), sym_presentation(&f).ideal());
        for c in proj_charts(&rees) {
            println!("  chart {}: coordinates [{}], ideal {}", c.index + 1, c.chart_vars().join(", "), c.ideal);
        }
    }
    Ok(())
}
