//! Graded algebras `A[T_1..T_n]/J`: symmetric and Rees algebras of modules,
//! versal maps, graded pieces and base-change comparisons.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::fpmod::{base_change, dual, evaluation_matrix, FPModule, FlatExtension, ModuleMap};
use crate::groebner::{ring_map_kernel, Ideal};
use crate::modsyz::{zero_column, Column, Matrix, Submodule};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{same_affine, AffineRing, RingMap};

/// Names `T` (one variable) or `T1..Tn`, made fresh against `taken`.
fn graded_names(taken: &[String], base: &str, n: usize) -> Vec<String> {
    let mut all = taken.to_vec();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let want = if n == 1 { base.to_string() } else { format!("{base}{}", i + 1) };
        let name = PolyRing::fresh_name(&all, &want);
        all.push(name.clone());
        out.push(name);
    }
    out
}

/// `base[names]` with the base relations, degrevlex on all variables.
/// Returns the ring and the indices of the new variables.
pub(crate) fn adjoin_variables(base: &Arc<AffineRing>, prefix: &str, n: usize) -> (Arc<AffineRing>, Vec<usize>) {
    let bp = base.poly_ring();
    let names = graded_names(bp.vars(), prefix, n);
    let mut vars = bp.vars().to_vec();
    vars.extend(names);
    let poly = PolyRing::new(bp.field(), vars, MonomialOrder::DegRevLex).expect("fresh names");
    let embed: Vec<usize> = (0..bp.nvars()).collect();
    let rels = base.relation_basis().iter().map(|q| q.map_vars(&poly, &embed)).collect();
    let ring = AffineRing::new(&poly, rels).expect("same ring");
    (ring, (bp.nvars()..bp.nvars() + n).collect())
}

/// `A[T_1..T_n] / J` with `J` homogeneous for the grading by T-degree.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    base: Arc<AffineRing>,
    ambient: Arc<AffineRing>,
    t_vars: Vec<usize>,
    ideal: Ideal,
}

impl GradedAlgebra {
    /// `A[T_1..T_n]` with `J = (0)`.
    pub fn polynomial(base: &Arc<AffineRing>, n: usize) -> GradedAlgebra {
        let (ambient, t_vars) = adjoin_variables(base, "T", n);
        let ideal = Ideal::zero(&ambient);
        GradedAlgebra { base: base.clone(), ambient, t_vars, ideal }
    }

    /// Same ring as `self` with ideal generated by `gens`.
    pub fn with_ideal(&self, gens: Vec<Polynomial>) -> Result<GradedAlgebra> {
        let ideal = Ideal::new(&self.ambient, gens)?;
        let g = GradedAlgebra { ideal, ..self.clone() };
        if !g.is_homogeneous() {
            return Err(AlgebraError::InvalidArgument("ideal is not homogeneous in the graded variables".into()));
        }
        Ok(g)
    }

    pub fn base(&self) -> &Arc<AffineRing> {
        &self.base
    }

    /// `A[T]` without `J`.
    pub fn ambient(&self) -> &Arc<AffineRing> {
        &self.ambient
    }

    pub fn t_vars(&self) -> &[usize] {
        &self.t_vars
    }

    pub fn ngens(&self) -> usize {
        self.t_vars.len()
    }

    pub fn t_names(&self) -> Vec<String> {
        let vars = self.ambient.poly_ring().vars();
        self.t_vars.iter().map(|&i| vars[i].clone()).collect()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The algebra as an affine ring `k[x, T] / (Q + J)`.
    pub fn algebra_ring(&self) -> Arc<AffineRing> {
        self.ideal.quotient_ring()
    }

    pub fn t_degree(&self, m: &Monomial) -> u32 {
        m.partial_degree(&self.t_vars)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.ideal.canonical_generators().iter().all(|g| self.is_homogeneous_poly(g))
    }

    fn is_homogeneous_poly(&self, g: &Polynomial) -> bool {
        let mut degs = g.terms().iter().map(|(m, _)| self.t_degree(m));
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Same presentation ring and equal ideals.
    pub fn same_as(&self, other: &GradedAlgebra) -> bool {
        same_affine(&self.ambient, &other.ambient) && self.ideal == other.ideal
    }

    /// The algebra with ideal `J` replaced by `J + I` for `I` given in the
    /// same ambient ring.
    pub fn plus(&self, extra: &Ideal) -> Result<GradedAlgebra> {
        let ideal = self.ideal.sum(extra)?;
        Ok(GradedAlgebra { ideal, ..self.clone() })
    }

    /// T-monomials of degree `n`, in descending order.
    pub fn monomials_of_degree(&self, n: u32) -> Vec<Monomial> {
        let nv = self.ambient.nvars();
        let mut out = Vec::new();
        fn go(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            match vars.split_first() {
                None => {
                    if left == 0 {
                        out.push(exps.clone());
                    }
                }
                Some((&v, rest)) => {
                    for e in (0..=left).rev() {
                        exps[v] = e;
                        go(rest, left - e, exps, out);
                    }
                    exps[v] = 0;
                }
            }
        }
        let mut raw = Vec::new();
        go(&self.t_vars, n, &mut vec![0; nv], &mut raw);
        for e in raw {
            out.push(Monomial::new(e));
        }
        let order = self.ambient.poly_ring().order().clone();
        out.sort_by(|a, b| order.compare(b, a).expect("same length"));
        out
    }
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})[{}] / {}", self.base, self.t_names().join(", "), self.ideal)
    }
}

/// A map `M → A^r` whose dual `A^r → M*` is surjective. Column `i` of
/// `matrix` is the image of generator `i`.
#[derive(Debug, Clone)]
pub struct VersalMap {
    module: FPModule,
    matrix: Matrix,
}

impl VersalMap {
    /// Rows of `rows` are homomorphisms `M → A` given by their values on the
    /// generators. Checks well-definedness and that they generate `M*`.
    pub fn from_dual_rows(m: &FPModule, rows: Vec<Vec<Polynomial>>) -> Result<VersalMap> {
        let ring = m.ring();
        let r = rows.len();
        let matrix = if r == 0 {
            Matrix::new(ring, 0, vec![Vec::new(); m.ngens()])?
        } else {
            Matrix::from_rows(ring, rows)?
        };
        ModuleMap::new(m, &FPModule::free(ring, r), matrix.clone())?;
        let v = VersalMap { module: m.clone(), matrix };
        if !v.dual_is_surjective()? {
            return Err(AlgebraError::InvalidArgument("the given homomorphisms do not generate the dual".into()));
        }
        Ok(v)
    }

    /// A second versal map: the dual generators followed by redundant
    /// combinations of them.
    pub fn padded(&self) -> Result<VersalMap> {
        let mut rows = self.matrix.rows();
        if let Some(first) = rows.first().cloned() {
            let ring = self.module.ring();
            let sum: Vec<Polynomial> = (0..self.module.ngens())
                .map(|i| rows.iter().fold(ring.zero(), |acc, r| &acc + &r[i]))
                .collect();
            rows.push(sum);
            let scale = if ring.nvars() > 0 { ring.var(0) } else { ring.one() };
            rows.push(first.iter().map(|p| ring.reduce(&(&scale * p))).collect());
        }
        VersalMap::from_dual_rows(&self.module, rows)
    }

    pub fn module(&self) -> &FPModule {
        &self.module
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn as_module_map(&self) -> ModuleMap {
        ModuleMap::new(&self.module, &FPModule::free(self.module.ring(), self.rank()), self.matrix.clone())
            .expect("checked at construction")
    }

    /// Every generator of `M*` is an `A`-combination of the rows.
    pub fn dual_is_surjective(&self) -> Result<bool> {
        let d = dual(&self.module)?;
        let span = Submodule::new(self.module.ring(), self.module.ngens(), self.matrix.rows())?;
        for phi in &d.maps {
            if !span.contains(&phi.matrix().rows()[0])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The versal map built from the generators of `M*`.
pub fn versal_map(m: &FPModule) -> Result<VersalMap> {
    let d = dual(m)?;
    let matrix = evaluation_matrix(m, &d);
    let v = VersalMap { module: m.clone(), matrix };
    debug_assert!(v.dual_is_surjective().unwrap_or(false));
    Ok(v)
}

/// `Sym(M) = A[T] / (Σ_i P_ij T_i)`.
pub fn sym_presentation(m: &FPModule) -> GradedAlgebra {
    let g = GradedAlgebra::polynomial(m.ring(), m.ngens());
    let ap = g.ambient.poly_ring().clone();
    let embed: Vec<usize> = (0..m.ring().nvars()).collect();
    let gens = m
        .relations()
        .iter()
        .map(|col| {
            col.iter()
                .enumerate()
                .fold(ap.zero(), |acc, (i, p)| &acc + &(&p.map_vars(&ap, &embed) * &ap.var(g.t_vars[i])))
        })
        .collect();
    g.with_ideal(gens).expect("linear forms are homogeneous")
}

/// The map `A[T] → A[Y_1..Y_r]`, `T_i ↦ Σ_k v_ki Y_k`, into a fresh ring.
pub fn versal_algebra_map(g: &GradedAlgebra, v: &VersalMap) -> RingMap {
    let base = &g.base;
    let (target, y_vars) = adjoin_variables(base, "Y", v.rank());
    let tp = target.poly_ring();
    let embed: Vec<usize> = (0..base.nvars()).collect();
    let mut images: Vec<Polynomial> = (0..base.nvars()).map(|i| tp.var(i)).collect();
    for i in 0..g.ngens() {
        let im = (0..v.rank()).fold(tp.zero(), |acc, k| {
            &acc + &(&v.matrix.entry(k, i).map_vars(tp, &embed) * &tp.var(y_vars[k]))
        });
        images.push(im);
    }
    RingMap::new(&g.ambient, &target, images).expect("base relations are preserved")
}

/// `R(M)` as the image of `Sym(M) → Sym(A^r)` along `v`.
pub fn rees_presentation_with(m: &FPModule, v: &VersalMap) -> GradedAlgebra {
    let g = GradedAlgebra::polynomial(m.ring(), m.ngens());
    let phi = versal_algebra_map(&g, v);
    let kernel = ring_map_kernel(&phi);
    g.with_ideal(kernel.gens().to_vec()).expect("kernel of a graded map is homogeneous")
}

pub fn rees_presentation(m: &FPModule) -> Result<GradedAlgebra> {
    Ok(rees_presentation_with(m, &versal_map(m)?))
}

/// The degree-`n` part of `G` as an `A`-module on the T-monomials of
/// degree `n` (descending).
pub fn graded_piece(g: &GradedAlgebra, n: u32) -> FPModule {
    let basis = g.monomials_of_degree(n);
    let ap = g.ambient.poly_ring();
    let base = &g.base;
    let bp = base.poly_ring();
    let nb = base.nvars();
    let split = |p: &Polynomial| -> Column {
        let mut col = zero_column(base, basis.len());
        let mut parts: Vec<Vec<(Monomial, crate::coeff::Coeff)>> = vec![Vec::new(); basis.len()];
        for (mon, c) in p.terms() {
            let e = mon.exponents();
            let mut t = vec![0u32; e.len()];
            for &v in &g.t_vars {
                t[v] = e[v];
            }
            let k = basis.iter().position(|b| b.exponents() == t.as_slice()).expect("degree-n monomial");
            parts[k].push((Monomial::new(e[..nb].to_vec()), c.clone()));
        }
        for (k, ts) in parts.into_iter().enumerate() {
            col[k] = base.reduce(&Polynomial::from_terms(bp, ts));
        }
        col
    };
    let mut rels = Vec::new();
    for h in g.ideal.canonical_generators() {
        let d = h.terms().first().map(|(m, _)| g.t_degree(m)).unwrap_or(0);
        if d > n {
            continue;
        }
        for mono in g.monomials_of_degree(n - d) {
            let prod = g.ambient.reduce(&h.mul_term(&mono, &ap.field().one()));
            if !prod.is_zero() {
                rels.push(split(&prod));
            }
        }
    }
    FPModule::new(base, basis.len(), rels).expect("valid")
}

/// `B / ker(ψ)`.
pub fn algebra_image_quotient(psi: &RingMap) -> Arc<AffineRing> {
    ring_map_kernel(psi).quotient_ring()
}

/// `Sym(M)^tl` through the versal map: the image of `Sym(M)` in `Sym(A^r)`,
/// returned as a graded algebra on the same T-variables.
pub fn sym_image_quotient(m: &FPModule, v: &VersalMap) -> Result<GradedAlgebra> {
    let sym = sym_presentation(m);
    let b = sym.algebra_ring();
    let g0 = versal_algebra_map(&sym, v);
    let psi = RingMap::new(&b, g0.target(), g0.images().to_vec())?;
    let quotient = algebra_image_quotient(&psi);
    sym.with_ideal(quotient.relations().to_vec())
}

/// Outcome of comparing `R(M) ⊗_A B` with `R(M ⊗_A B)`.
#[derive(Debug, Clone)]
pub enum BaseChangeComparison {
    /// `J_left ⊆ J_right`: the identity on T-variables induces a surjection.
    Surjection,
    /// A generator of `J_left` that does not vanish in `R(M ⊗_A B)`.
    NoCanonicalMap { witness: Polynomial },
}

#[derive(Debug, Clone)]
pub struct BaseChangeReport {
    pub left: GradedAlgebra,
    pub right: GradedAlgebra,
    pub outcome: BaseChangeComparison,
}

/// Extends `G`'s ideal along `φ: A → B` to `B[T]` (same T-names).
pub fn extend_graded(g: &GradedAlgebra, phi: &RingMap) -> Result<GradedAlgebra> {
    if !same_affine(&g.base, phi.source()) {
        return Err(AlgebraError::RingMismatch);
    }
    let target = GradedAlgebra::polynomial(phi.target(), g.ngens());
    let tp = target.ambient.poly_ring();
    let embed: Vec<usize> = (0..phi.target().nvars()).collect();
    let mut images: Vec<Polynomial> = phi.images().iter().map(|p| p.map_vars(tp, &embed)).collect();
    images.extend(target.t_vars.iter().map(|&t| tp.var(t)));
    let ext = RingMap::new(&g.ambient, &target.ambient, images)?;
    let gens = g.ideal.gens().iter().map(|p| ext.apply(p)).collect::<Result<Vec<_>>>()?;
    target.with_ideal(gens)
}

pub fn compare_base_change(m: &FPModule, phi: &RingMap) -> Result<BaseChangeReport> {
    let rees = rees_presentation(m)?;
    let left = extend_graded(&rees, phi)?;
    let right = rees_presentation(&base_change(m, phi)?)?;
    let witness = left.ideal.canonical_generators().into_iter().find(|g| !right.ideal.contains(g));
    let outcome = match witness {
        None => BaseChangeComparison::Surjection,
        Some(w) => BaseChangeComparison::NoCanonicalMap { witness: right.ideal.normal_form(&w) },
    };
    Ok(BaseChangeReport { left, right, outcome })
}

/// Whether `R(M) → R(M ⊗_A A')` is injective.
pub fn check_injectivity_flat(m: &FPModule, ext: &FlatExtension) -> Result<bool> {
    ext.check_injective()?;
    let rees = rees_presentation(m)?;
    let changed = rees_presentation(&base_change(m, &ext.map)?)?;
    let src = rees.algebra_ring();
    let tgt = changed.algebra_ring();
    let tp = tgt.poly_ring();
    let embed: Vec<usize> = (0..ext.map.target().nvars()).collect();
    let mut images: Vec<Polynomial> = ext.map.images().iter().map(|p| p.map_vars(tp, &embed)).collect();
    images.extend(changed.t_vars.iter().map(|&t| tp.var(t)));
    let induced = RingMap::new(&src, &tgt, images)?;
    Ok(ring_map_kernel(&induced).is_zero())
}
