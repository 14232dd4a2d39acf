//! The blow-up of the plane at the origin, its two affine charts, and the
//! graded pieces `(x, y)^n` of the Rees algebra.

use reeskit::fpmod::present;
use reeskit::modsyz::Matrix;
use reeskit::poly::PolyRing;
use reeskit::projgeo::proj_charts;
use reeskit::rees::{graded_piece, rees_presentation};
use reeskit::ring::AffineRing;

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["x", "y"]);
    let a = AffineRing::polynomial(&r);
    let m = present(&Matrix::from_rows(&a, vec![vec![r.var(0), r.var(1)]])?);
    let rees = rees_presentation(&m)?;
    println!("R((x, y)) = {rees}");
    for c in proj_charts(&rees) {
        println!("chart {} over [{}]: {}", c.index + 1, c.chart_vars().join(", "), c.ideal);
    }
    for n in 1..=3 {
        println!("degree {n}: {}", graded_piece(&rees, n));
    }
    Ok(())
}
