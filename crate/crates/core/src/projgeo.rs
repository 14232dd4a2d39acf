//! Proj of a graded algebra: affine charts, emptiness, schematic density,
//! closures of preimages of opens, and the Nash transform.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::fpmod::{ass_membership, dual, exterior_power, FPModule};
use crate::groebner::{saturate, Ideal};
use crate::poly::{PolyRing, Polynomial};
use crate::rees::{rees_presentation, GradedAlgebra};
use crate::ring::{AffineRing, RingMap};

/// The chart `T_index ≠ 0`: base variables plus `u_j = T_j / T_index`.
#[derive(Debug, Clone)]
pub struct ProjChart {
    pub index: usize,
    /// Base ring with the chart variables adjoined.
    pub ring: Arc<AffineRing>,
    /// Dehomogenized ideal.
    pub ideal: Ideal,
    /// Indices of the chart variables in `ring`.
    pub u_vars: Vec<usize>,
}

impl ProjChart {
    pub fn is_empty(&self) -> bool {
        self.ideal.is_unit()
    }

    /// The chart as an affine ring.
    pub fn coordinate_ring(&self) -> Arc<AffineRing> {
        self.ideal.quotient_ring()
    }

    pub fn chart_vars(&self) -> Vec<String> {
        let vars = self.ring.poly_ring().vars();
        self.u_vars.iter().map(|&i| vars[i].clone()).collect()
    }
}

/// The map `A[T] → A[u]`, `T_index ↦ 1`, `T_j ↦ u_j`, and its target.
fn dehomogenization(g: &GradedAlgebra, index: usize) -> (RingMap, Vec<usize>) {
    let base = g.base();
    let bp = base.poly_ring();
    let mut vars = bp.vars().to_vec();
    let mut u_idx = Vec::new();
    for j in 0..g.ngens() {
        if j == index {
            continue;
        }
        let name = PolyRing::fresh_name(&vars, &format!("u{}", j + 1));
        u_idx.push(vars.len());
        vars.push(name);
    }
    let poly = PolyRing::new(bp.field(), vars, bp.order().clone()).expect("fresh names");
    let embed: Vec<usize> = (0..bp.nvars()).collect();
    let rels = base.relation_basis().iter().map(|q| q.map_vars(&poly, &embed)).collect();
    let ring = AffineRing::new(&poly, rels).expect("same ring");
    let mut images: Vec<Polynomial> = (0..bp.nvars()).map(|i| poly.var(i)).collect();
    let mut k = 0;
    for j in 0..g.ngens() {
        if j == index {
            images.push(poly.one());
        } else {
            images.push(poly.var(u_idx[k]));
            k += 1;
        }
    }
    (RingMap::new(g.ambient(), &ring, images).expect("base relations are preserved"), u_idx)
}

pub fn proj_chart(g: &GradedAlgebra, index: usize) -> Result<ProjChart> {
    if index >= g.ngens() {
        return Err(AlgebraError::InvalidArgument(format!("chart {} of {}", index + 1, g.ngens())));
    }
    let (map, u_vars) = dehomogenization(g, index);
    let gens = g.ideal().gens().iter().map(|p| map.apply(p)).collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(map.target(), gens)?;
    Ok(ProjChart { index, ring: map.target().clone(), ideal, u_vars })
}

/// One chart per T-variable.
pub fn proj_charts(g: &GradedAlgebra) -> Vec<ProjChart> {
    (0..g.ngens()).map(|i| proj_chart(g, i).expect("index in range")).collect()
}

/// Every `T_i` is nilpotent modulo `J`: `(J : T_i^∞) = (1)` for all `i`.
pub fn is_proj_empty(g: &GradedAlgebra) -> bool {
    g.t_vars().iter().all(|&t| {
        let ti = Ideal::new(g.ambient(), vec![g.ambient().var(t)]).expect("same ring");
        saturate(g.ideal(), &ti).expect("same ring").is_unit()
    })
}

/// The chart route to emptiness.
pub fn charts_all_empty(g: &GradedAlgebra) -> bool {
    proj_charts(g).iter().all(|c| c.is_empty())
}

/// The irrelevant ideal `(T_1, ..., T_n)` of the ambient ring.
pub fn irrelevant_ideal(g: &GradedAlgebra) -> Ideal {
    Ideal::new(g.ambient(), g.t_vars().iter().map(|&t| g.ambient().var(t)).collect()).expect("same ring")
}

/// Equality of the Proj schemes: the ideals agree after saturating by the
/// irrelevant ideal.
pub fn same_proj(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<bool> {
    if !crate::ring::same_affine(a.ambient(), b.ambient()) {
        return Err(AlgebraError::RingMismatch);
    }
    let irr = irrelevant_ideal(a);
    Ok(saturate(a.ideal(), &irr)? == saturate(b.ideal(), &irr)?)
}

#[derive(Debug, Clone)]
pub struct DensityReport {
    pub dense: bool,
    /// A nonzero element of `(0 : Jc^∞)` when not dense.
    pub witness: Option<Polynomial>,
}

/// `U = Spec A ∖ V(Jc)` is schematically dense iff `(0 : Jc^∞) = 0`.
pub fn schematically_dense(jc: &Ideal) -> DensityReport {
    let zero = Ideal::zero(jc.ring());
    let sat = saturate(&zero, jc).expect("same ring");
    let witness = sat.canonical_generators().into_iter().next();
    DensityReport { dense: witness.is_none(), witness }
}

#[derive(Debug, Clone)]
pub struct AssofReport {
    /// Per prime: every dual generator sends every generator into the prime.
    pub per_prime: Vec<bool>,
    pub aggregate: bool,
}

/// For the given associated primes of `A` outside `U`, tests whether
/// `Hom(M, A) = Hom(M, p)`. The aggregate predicts density of the preimage
/// of `U` in the total blow-up.
pub fn assofrees_check(m: &FPModule, primes: &[Ideal]) -> Result<AssofReport> {
    let a = FPModule::free(m.ring(), 1);
    for p in primes {
        if !ass_membership(p, &a)? {
            return Err(AlgebraError::NotAssociated(p.to_string()));
        }
    }
    let d = dual(m)?;
    let per_prime: Vec<bool> = primes
        .iter()
        .map(|p| d.maps.iter().all(|phi| phi.matrix().cols().iter().all(|c| p.contains(&c[0]))))
        .collect();
    let aggregate = per_prime.iter().all(|&b| b);
    Ok(AssofReport { per_prime, aggregate })
}

/// `Jc` extended to the ambient ring of `g`.
fn extend_base_ideal(g: &GradedAlgebra, jc: &Ideal) -> Result<Ideal> {
    if !crate::ring::same_affine(jc.ring(), g.base()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ap = g.ambient().poly_ring();
    let embed: Vec<usize> = (0..g.base().nvars()).collect();
    Ideal::new(g.ambient(), jc.gens().iter().map(|p| p.map_vars(ap, &embed)).collect())
}

/// Closure of the preimage of `U = Spec A ∖ V(Jc)`: `A[T] / (J : Jc^∞)`.
pub fn closure_of_preimage(g: &GradedAlgebra, jc: &Ideal) -> Result<GradedAlgebra> {
    let ext = extend_base_ideal(g, jc)?;
    let sat = saturate(g.ideal(), &ext)?;
    g.with_ideal(sat.gens().to_vec())
}

#[derive(Debug, Clone)]
pub struct NashTransform {
    pub algebra: GradedAlgebra,
    pub charts: Vec<ProjChart>,
}

/// The closure of the preimage of `U` in the total blow-up of `∧^d M`.
pub fn nash_transform(m: &FPModule, d: usize, jc: &Ideal) -> Result<NashTransform> {
    if d == 0 {
        return Err(AlgebraError::InvalidArgument("generic rank must be positive".into()));
    }
    let wedge = exterior_power(m, d);
    let algebra = closure_of_preimage(&rees_presentation(&wedge)?, jc)?;
    let charts = proj_charts(&algebra);
    Ok(NashTransform { algebra, charts })
}

/// Inverts `u_j` in chart `i`, as `chart[w]/(u_j w - 1)`; used to compare
/// overlapping charts.
pub fn chart_overlap(chart: &ProjChart, j: usize) -> Result<Arc<AffineRing>> {
    let cr = chart.coordinate_ring();
    let cp = cr.poly_ring();
    if j == chart.index || j > chart.u_vars.len() {
        return Err(AlgebraError::InvalidArgument(format!("no chart variable u{}", j + 1)));
    }
    let k = if j < chart.index { j } else { j - 1 };
    let uj = cp.var(chart.u_vars[k]);
    let mut vars = cp.vars().to_vec();
    let w = PolyRing::fresh_name(&vars, "w");
    vars.push(w);
    let poly = PolyRing::new(cp.field(), vars, cp.order().clone())?;
    let embed: Vec<usize> = (0..cp.nvars()).collect();
    let mut rels: Vec<Polynomial> = cr.relation_basis().iter().map(|q| q.map_vars(&poly, &embed)).collect();
    rels.push(&(&uj.map_vars(&poly, &embed) * &poly.var(cp.nvars())) - &poly.one());
    AffineRing::new(&poly, rels)
}
