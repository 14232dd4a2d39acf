//! Submodules of free modules over affine rings: module Gröbner bases,
//! membership, lifting, syzygies and kernels of maps between free modules.
//!
//! Over `A = k[x]/Q` every computation runs in `k[x]^r` with the extra
//! generators `q e_i` (`q` in the reduced basis of `Q`). The default module
//! order is position-over-term on top of the ring's monomial order.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::groebner::engine::{
    column_to_vector, groebner, normal_form, vector_to_column, Term, TermOrder, Vector,
};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{same_affine, AffineRing, RingMap};

/// A column vector of ring elements.
pub type Column = Vec<Polynomial>;

/// Matrix over an affine ring, stored by columns.
#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Arc<AffineRing>,
    nrows: usize,
    cols: Vec<Column>,
}

impl Matrix {
    pub fn new(ring: &Arc<AffineRing>, nrows: usize, cols: Vec<Column>) -> Result<Matrix> {
        let mut out = Vec::with_capacity(cols.len());
        for c in cols {
            if c.len() != nrows {
                return Err(AlgebraError::LengthMismatch { expected: nrows, found: c.len() });
            }
            for p in &c {
                ring.check(p)?;
            }
            out.push(c.iter().map(|p| ring.reduce(p)).collect());
        }
        Ok(Matrix { ring: ring.clone(), nrows, cols: out })
    }

    pub fn from_rows(ring: &Arc<AffineRing>, rows: Vec<Vec<Polynomial>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            if r.len() != ncols {
                return Err(AlgebraError::LengthMismatch { expected: ncols, found: r.len() });
            }
        }
        let cols = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Matrix::new(ring, nrows, cols)
    }

    pub fn identity(ring: &Arc<AffineRing>, n: usize) -> Matrix {
        let cols = (0..n).map(|j| unit_column(ring, n, j)).collect();
        Matrix { ring: ring.clone(), nrows: n, cols }
    }

    pub fn empty(ring: &Arc<AffineRing>, nrows: usize) -> Matrix {
        Matrix { ring: ring.clone(), nrows, cols: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<AffineRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[Column] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows).map(|i| self.cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let cols = self.rows();
        Matrix { ring: self.ring.clone(), nrows: self.ncols(), cols }
    }

    pub fn mul_column(&self, v: &[Polynomial]) -> Result<Column> {
        if v.len() != self.ncols() {
            return Err(AlgebraError::LengthMismatch { expected: self.ncols(), found: v.len() });
        }
        let mut acc = vec![self.ring.zero(); self.nrows];
        for (c, a) in self.cols.iter().zip(v) {
            if a.is_zero() {
                continue;
            }
            for (i, e) in c.iter().enumerate() {
                acc[i] = &acc[i] + &(e * a);
            }
        }
        Ok(acc.iter().map(|p| self.ring.reduce(p)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        let cols = other.cols.iter().map(|c| self.mul_column(c)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { ring: self.ring.clone(), nrows: self.nrows, cols })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        same_affine(&self.ring, &other.ring) && self.nrows == other.nrows && self.cols == other.cols
    }
}

impl fmt::Display for Matrix {
    /// Row-major bracket notation, e.g. `[[y], [-x]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub fn unit_column(ring: &Arc<AffineRing>, n: usize, j: usize) -> Column {
    (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect()
}

pub fn zero_column(ring: &Arc<AffineRing>, n: usize) -> Column {
    vec![ring.zero(); n]
}

/// An element of a free module `A^r`, with coordinates in normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeElement {
    coords: Column,
}

impl FreeElement {
    pub fn new(ring: &AffineRing, coords: Column) -> Result<FreeElement> {
        for c in &coords {
            ring.check(c)?;
        }
        Ok(FreeElement { coords: coords.iter().map(|c| ring.reduce(c)).collect() })
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Submodule of `A^rank` spanned by `gens`.
#[derive(Debug, Clone)]
pub struct Submodule {
    ring: Arc<AffineRing>,
    rank: usize,
    gens: Vec<Column>,
    basis: OnceLock<Vec<Vector>>,
    tagged: OnceLock<Vec<Vector>>,
}

fn module_order(ring: &AffineRing) -> TermOrder {
    TermOrder::pot(ring.poly_ring().order().clone())
}

/// `q e_i` for every relation `q` of the ring and every position in range.
fn relation_vectors(ring: &AffineRing, positions: std::ops::Range<usize>, ord: &TermOrder) -> Vec<Vector> {
    let mut out = Vec::new();
    for q in ring.relation_basis() {
        for pos in positions.clone() {
            let mut v: Vector = q.terms().iter().map(|(m, c)| Term { mon: m.clone(), pos, coeff: c.clone() }).collect();
            crate::groebner::engine::sort_vector(&mut v, ord);
            out.push(v);
        }
    }
    out
}

impl Submodule {
    pub fn new(ring: &Arc<AffineRing>, rank: usize, gens: Vec<Column>) -> Result<Submodule> {
        let m = Matrix::new(ring, rank, gens)?;
        let gens = m.cols.into_iter().filter(|c| c.iter().any(|p| !p.is_zero())).collect();
        Ok(Submodule { ring: ring.clone(), rank, gens, basis: OnceLock::new(), tagged: OnceLock::new() })
    }

    pub fn from_matrix(m: &Matrix) -> Submodule {
        Submodule::new(&m.ring, m.nrows, m.cols.clone()).expect("matrix entries are valid")
    }

    pub fn zero(ring: &Arc<AffineRing>, rank: usize) -> Submodule {
        Submodule::new(ring, rank, Vec::new()).expect("empty")
    }

    pub fn ring(&self) -> &Arc<AffineRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Column] {
        &self.gens
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix { ring: self.ring.clone(), nrows: self.rank, cols: self.gens.clone() }
    }

    fn lifted_basis(&self) -> &[Vector] {
        self.basis.get_or_init(|| {
            let ord = module_order(&self.ring);
            let mut gens: Vec<Vector> = self.gens.iter().map(|c| column_to_vector(c, &ord)).collect();
            gens.extend(relation_vectors(&self.ring, 0..self.rank, &ord));
            groebner(gens, &ord, self.rank <= 1)
        })
    }

    /// Basis of the module of `(v; e_j)` vectors, used for lifting and
    /// syzygies. Positions `0..rank` hold the vector, `rank..rank+m` the tag.
    fn tagged_basis(&self) -> &[Vector] {
        self.tagged.get_or_init(|| {
            let ord = module_order(&self.ring);
            let m = self.gens.len();
            let mut gens: Vec<Vector> = Vec::with_capacity(m);
            for (j, c) in self.gens.iter().enumerate() {
                let mut col = c.clone();
                col.extend(unit_column(&self.ring, m, j));
                gens.push(column_to_vector(&col, &ord));
            }
            gens.extend(relation_vectors(&self.ring, 0..self.rank + m, &ord));
            groebner(gens, &ord, false)
        })
    }

    /// Module Gröbner basis (position over term), as columns reduced modulo
    /// the ring relations; elements that vanish in `A^rank` are dropped.
    pub fn module_gb(&self) -> Vec<Column> {
        let poly = self.ring.poly_ring();
        self.lifted_basis()
            .iter()
            .map(|v| vector_to_column(v, poly, 0, self.rank))
            .map(|c| c.iter().map(|p| self.ring.reduce(p)).collect::<Column>())
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect()
    }

    fn check_rank(&self, v: &[Polynomial]) -> Result<()> {
        if v.len() != self.rank {
            return Err(AlgebraError::LengthMismatch { expected: self.rank, found: v.len() });
        }
        for p in v {
            self.ring.check(p)?;
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Result<Column> {
        self.check_rank(v)?;
        let ord = module_order(&self.ring);
        let basis = self.lifted_basis();
        let refs: Vec<&Vector> = basis.iter().collect();
        let r = normal_form(&column_to_vector(v, &ord), &refs, &ord);
        Ok(vector_to_column(&r, self.ring.poly_ring(), 0, self.rank))
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.normal_form(v)?.iter().all(|p| p.is_zero()))
    }

    pub fn contains_all(&self, other: &Submodule) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as(&self, other: &Submodule) -> Result<bool> {
        Ok(self.rank == other.rank && self.contains_all(other)? && other.contains_all(self)?)
    }

    /// Coefficients `c` with `v = Σ c_j gens_j`, or `None` when `v` is not in
    /// the submodule.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Column>> {
        self.check_rank(v)?;
        let ord = module_order(&self.ring);
        let m = self.gens.len();
        let mut padded = v.to_vec();
        padded.extend(zero_column(&self.ring, m));
        let basis = self.tagged_basis();
        let refs: Vec<&Vector> = basis.iter().collect();
        let r = normal_form(&column_to_vector(&padded, &ord), &refs, &ord);
        if r.iter().any(|t| t.pos < self.rank) {
            return Ok(None);
        }
        let tag = vector_to_column(&r, self.ring.poly_ring(), self.rank, m);
        Ok(Some(tag.iter().map(|p| self.ring.reduce(&p.neg())).collect()))
    }

    /// Generators of the relations among `gens`.
    pub fn syzygies(&self) -> Vec<Column> {
        let m = self.gens.len();
        if m == 0 {
            return Vec::new();
        }
        let poly = self.ring.poly_ring();
        let raw: Vec<Column> = self
            .tagged_basis()
            .iter()
            .filter(|v| v[0].pos >= self.rank)
            .map(|v| vector_to_column(v, poly, self.rank, m))
            .map(|c| c.iter().map(|p| self.ring.reduce(p)).collect::<Column>())
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        prune(&self.ring, m, raw, &[])
    }
}

/// Module Gröbner basis of `s` for the position-over-term order.
pub fn module_gb(s: &Submodule) -> Vec<Column> {
    s.module_gb()
}

/// Columns generating all relations among the columns of `m`.
pub fn syzygies(m: &Matrix) -> Matrix {
    let s = Submodule::from_matrix(m);
    // zero columns are dropped by Submodule; put their unit relations back
    let mut cols = Vec::new();
    let mut kept = Vec::new();
    for (j, c) in m.cols.iter().enumerate() {
        if c.iter().all(|p| p.is_zero()) {
            cols.push(unit_column(&m.ring, m.ncols(), j));
        } else {
            kept.push(j);
        }
    }
    for syz in s.syzygies() {
        let mut full = zero_column(&m.ring, m.ncols());
        for (k, &j) in kept.iter().enumerate() {
            full[j] = syz[k].clone();
        }
        cols.push(full);
    }
    Matrix { ring: m.ring.clone(), nrows: m.ncols(), cols }
}

/// Kernel of the map `A^ncols → A^nrows` given by `m`.
pub fn kernel_of_free_map(m: &Matrix) -> Submodule {
    let s = syzygies(m);
    Submodule::new(&m.ring, m.ncols(), s.cols).expect("valid syzygies")
}

/// Drops generators that lie in the span of the remaining ones together
/// with `extra`, scanning from the last generator backwards.
pub(crate) fn prune(ring: &Arc<AffineRing>, rank: usize, gens: Vec<Column>, extra: &[Column]) -> Vec<Column> {
    let mut gens: Vec<Column> = gens.into_iter().filter(|c| c.iter().any(|p| !p.is_zero())).collect();
    let mut dedup: Vec<Column> = Vec::new();
    for g in gens.drain(..) {
        if !dedup.contains(&g) {
            dedup.push(g);
        }
    }
    let mut gens = dedup;
    if !extra.is_empty() {
        let ex = Submodule::new(ring, rank, extra.to_vec()).expect("valid");
        gens.retain(|g| !ex.contains(g).expect("rank"));
    }
    let mut k = gens.len();
    while k > 0 {
        k -= 1;
        if gens.len() <= 1 && extra.is_empty() {
            break;
        }
        let mut others: Vec<Column> = gens.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
        others.extend(extra.iter().cloned());
        let s = Submodule::new(ring, rank, others).expect("valid");
        if s.contains(&gens[k]).expect("rank") {
            gens.remove(k);
        }
    }
    gens
}

/// Preimage under `φ: A → B` of the submodule of `B^rank` spanned by
/// `target_gens`: all `a ∈ A^rank` with `φ(a)` in the span. Computed by
/// eliminating the variables of `B` from the graph module in `k[y, x]^rank`.
pub fn preimage_under_ring_map(phi: &RingMap, rank: usize, target_gens: &[Column]) -> Result<Vec<Column>> {
    let src = phi.source();
    let tgt = phi.target();
    for g in target_gens {
        if g.len() != rank {
            return Err(AlgebraError::LengthMismatch { expected: rank, found: g.len() });
        }
        for p in g {
            tgt.check(p)?;
        }
    }
    let sp = src.poly_ring();
    let tp = tgt.poly_ring();
    let m = tp.nvars();
    let mut vars: Vec<String> = tp.vars().to_vec();
    for v in sp.vars() {
        let fresh = PolyRing::fresh_name(&vars, v);
        vars.push(fresh);
    }
    let graph = PolyRing::new(sp.field(), vars, MonomialOrder::DegRevLex)?;
    let target_embed: Vec<usize> = (0..m).collect();
    let elim: Vec<usize> = (0..m).collect();
    let ord = TermOrder::top(MonomialOrder::block(elim.clone(), MonomialOrder::DegRevLex));

    let mut gens: Vec<Vector> = Vec::new();
    for g in target_gens {
        let col: Column = g.iter().map(|p| p.map_vars(&graph, &target_embed)).collect();
        gens.push(column_to_vector(&col, &ord));
    }
    let mut graph_polys: Vec<Polynomial> =
        tgt.relation_basis().iter().map(|q| q.map_vars(&graph, &target_embed)).collect();
    for (i, im) in phi.images().iter().enumerate() {
        graph_polys.push(&graph.var(m + i) - &im.map_vars(&graph, &target_embed));
    }
    for q in &graph_polys {
        for pos in 0..rank {
            let mut v: Vector = q.terms().iter().map(|(mm, c)| Term { mon: mm.clone(), pos, coeff: c.clone() }).collect();
            crate::groebner::engine::sort_vector(&mut v, &ord);
            gens.push(v);
        }
    }
    let basis = groebner(gens, &ord, false);
    let back: Vec<usize> = (0..graph.nvars()).map(|k| k.saturating_sub(m)).collect();
    let mut out = Vec::new();
    for v in basis {
        if v.iter().any(|t| t.mon.involves_any(&elim)) {
            continue;
        }
        let col = vector_to_column(&v, &graph, 0, rank);
        let col: Column = col.iter().map(|p| src.reduce(&p.map_vars(sp, &back))).collect();
        if col.iter().any(|p| !p.is_zero()) {
            out.push(col);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> (Arc<PolyRing>, Arc<AffineRing>) {
        let r = PolyRing::rational(&["x", "y"]);
        let a = AffineRing::polynomial(&r);
        (r, a)
    }

    #[test]
    fn disjoint_positions_are_a_basis() {
        let (r, a) = plane();
        let s = Submodule::new(&a, 2, vec![vec![r.var(0), r.zero()], vec![r.zero(), r.var(1)]]).unwrap();
        assert_eq!(s.module_gb().len(), 2);
        let k = Submodule::new(&a, 2, vec![vec![r.var(1), r.var(0).neg()]]).unwrap();
        assert_eq!(k.module_gb(), vec![vec![r.var(1), r.var(0).neg()]]);
    }

    #[test]
    fn membership_via_combination() {
        let (r, a) = plane();
        let (x, y) = (r.var(0), r.var(1));
        let s = Submodule::new(&a, 2, vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]).unwrap();
        let target = vec![&(&x * &x) - &(&y * &y), r.zero()];
        assert!(s.contains(&target).unwrap());
        let c = s.lift(&target).unwrap().unwrap();
        assert_eq!(c, vec![x.clone(), y.neg()]);
        assert!(!s.contains(&[x.clone(), r.zero()]).unwrap());
    }

    #[test]
    fn koszul_syzygy() {
        let (r, a) = plane();
        let m = Matrix::from_rows(&a, vec![vec![r.var(0), r.var(1)]]).unwrap();
        let s = syzygies(&m);
        assert_eq!(s.ncols(), 1);
        let col = &s.cols()[0];
        // (y, -x) up to sign
        assert!(*col == vec![r.var(1), r.var(0).neg()] || *col == vec![r.var(1).neg(), r.var(0)]);
        assert!(m.mul(&s).unwrap().is_zero());
    }

    #[test]
    fn unit_entry_has_no_syzygies() {
        let (r, a) = plane();
        let m = Matrix::from_rows(&a, vec![vec![r.one()]]).unwrap();
        assert_eq!(syzygies(&m).ncols(), 0);
    }

    #[test]
    fn nilpotent_annihilates_itself() {
        let r = PolyRing::rational(&["x"]);
        let a = AffineRing::new(&r, vec![r.var(0).pow(2)]).unwrap();
        let m = Matrix::from_rows(&a, vec![vec![r.var(0)]]).unwrap();
        let k = kernel_of_free_map(&m);
        assert_eq!(k.gens(), &[vec![r.var(0)]]);
        let id = Matrix::identity(&a, 2);
        assert!(kernel_of_free_map(&id).gens().is_empty());
    }

    #[test]
    fn preimage_along_square_map() {
        let t = PolyRing::rational(&["t"]);
        let src = AffineRing::polynomial(&t);
        let (r, a) = plane();
        let phi = RingMap::new(&src, &a, vec![r.var(0).pow(2)]).unwrap();
        let pre = preimage_under_ring_map(&phi, 1, &[vec![r.var(0)]]).unwrap();
        assert_eq!(pre, vec![vec![t.var(0)]]);
        let pre2 = preimage_under_ring_map(&phi, 2, &[vec![r.var(0), r.var(1)]]).unwrap();
        assert!(pre2.is_empty());
    }
}
