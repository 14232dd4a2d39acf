//! The Nash transform of the cusp `y^2 = x^3`, as the closure of the smooth
//! locus in the total blow-up of its module of differentials.

use reeskit::fpmod::FPModule;
use reeskit::groebner::Ideal;
use reeskit::modsyz::Matrix;
use reeskit::poly::PolyRing;
use reeskit::projgeo::nash_transform;
use reeskit::ring::AffineRing;

fn main() -> reeskit::Result<()> {
    let r = PolyRing::rational(&["x", "y"]);
    let (x, y) = (r.var(0), r.var(1));
    let a = AffineRing::new(&r, vec![&y.pow(2) - &x.pow(3)])?;
    let omega = FPModule::coker(&Matrix::from_rows(&a, vec![vec![&r.from_i64(-3) * &x.pow(2)], vec![&r.from_i64(2) * &y]])?);
    let singular = Ideal::new(&a, vec![x, y])?;
    let nash = nash_transform(&omega, 1, &singular)?;
    println!("{}", nash.algebra);
    for c in &nash.charts {
        println!("chart {}: {}{}", c.index + 1, c.ideal, if c.is_empty() { " (empty)" } else { "" });
    }
    Ok(())
}
