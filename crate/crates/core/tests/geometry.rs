mod common;

use common::{ideal, polys, quotient};
use reeskit::fpmod::{present, FPModule};
use reeskit::groebner::Ideal;
use reeskit::modsyz::Matrix;
use reeskit::projgeo::{
    chart_overlap, closure_of_preimage, is_proj_empty, nash_transform, proj_chart, proj_charts, same_proj,
};
use reeskit::rees::{graded_piece, rees_presentation, sym_presentation};

#[test]
fn blowup_of_the_origin_in_three_space() {
    // The ideal (x, y, z) of QQ[x,y,z]: charts are affine 3-spaces.
    let a = quotient(&["x", "y", "z"], "");
    let m = present(&Matrix::from_rows(&a, vec![polys(a.poly_ring(), "x, y, z")]).unwrap());
    let r = rees_presentation(&m).unwrap();
    assert_eq!(r.ideal().canonical_generators().len(), 3);
    for c in proj_charts(&r) {
        assert!(!c.is_empty());
        // Two base variables are solved in terms of the third and the u's.
        let base: Vec<usize> = (0..3).filter(|&v| v != c.index).collect();
        assert!(reeskit::groebner::eliminate(&c.ideal, &base).is_zero());
    }
}

#[test]
fn sym_and_rees_differ_for_torsion() {
    let a = quotient(&["x", "y"], "");
    let sum = FPModule::free(&a, 1).direct_sum(&FPModule::cyclic(&ideal(&a, "x"))).unwrap();
    assert_eq!(sym_presentation(&sum).ideal().to_string(), "(x*T2)");
    assert_eq!(rees_presentation(&sum).unwrap().ideal().to_string(), "(T2)");
}

#[test]
fn closure_removes_components_over_the_complement() {
    let a = quotient(&["x", "y"], "");
    let sum = FPModule::free(&a, 1).direct_sum(&FPModule::cyclic(&ideal(&a, "x"))).unwrap();
    let sym = sym_presentation(&sum);
    let closed = closure_of_preimage(&sym, &ideal(&a, "x")).unwrap();
    assert!(closed.same_as(&rees_presentation(&sum).unwrap()));
    assert!(!same_proj(&closed, &sym).unwrap());
}

#[test]
fn graded_piece_zero_is_the_base_ring() {
    let a = quotient(&["x", "y"], "");
    let m = present(&Matrix::from_rows(&a, vec![polys(a.poly_ring(), "x, y")]).unwrap());
    let r = rees_presentation(&m).unwrap();
    assert_eq!(graded_piece(&r, 0).to_string(), "free 1");
    assert_eq!(graded_piece(&r, 2).ngens(), 3);
}

#[test]
fn overlapping_charts_of_the_blowup_agree() {
    let a = quotient(&["x", "y"], "");
    let m = present(&Matrix::from_rows(&a, vec![polys(a.poly_ring(), "x, y")]).unwrap());
    let r = rees_presentation(&m).unwrap();
    let c1 = proj_chart(&r, 0).unwrap();
    let overlap = chart_overlap(&c1, 1).unwrap();
    assert!(!overlap.is_trivial());
    assert!(proj_chart(&r, 2).is_err());
}

#[test]
fn nash_transform_of_cusp_differentials() {
    // The module of Kähler differentials of the cusp y^2 = x^3, generic rank 1.
    let a = quotient(&["x", "y"], "y^2 - x^3");
    let p = a.poly_ring();
    let omega = FPModule::coker(&Matrix::from_rows(&a, vec![polys(p, "-3*x^2"), polys(p, "2*y")]).unwrap());
    let jc = ideal(&a, "x, y");
    let n = nash_transform(&omega, 1, &jc).unwrap();
    assert!(!is_proj_empty(&n.algebra));
    assert!(n.charts.iter().any(|c| !c.is_empty()));
    // Away from the singular point nothing changes.
    let r = rees_presentation(&omega).unwrap();
    let away = closure_of_preimage(&r, &jc).unwrap();
    assert!(away.same_as(&n.algebra));
}

#[test]
fn saturation_with_zero_ideal_empties_everything() {
    let a = quotient(&["x"], "x^2");
    let r = rees_presentation(&FPModule::free(&a, 1)).unwrap();
    let closed = closure_of_preimage(&r, &Ideal::zero(&a)).unwrap();
    assert!(closed.ideal().is_unit());
}
