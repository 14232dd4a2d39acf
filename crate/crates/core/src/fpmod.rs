//! Finitely presented modules `coker(P: A^m → A^n)` and maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::groebner::{intersect, ring_map_kernel, Ideal};
use crate::modsyz::{preimage_under_ring_map, prune, syzygies, unit_column, zero_column, Column, Matrix, Submodule};
use crate::poly::Polynomial;
use crate::ring::{same_affine, AffineRing, RingMap};

/// The module generated by `ngens` elements subject to the relation columns.
#[derive(Debug, Clone)]
pub struct FPModule {
    ring: Arc<AffineRing>,
    ngens: usize,
    relations: Vec<Column>,
    rel_sub: OnceLock<Submodule>,
}

impl FPModule {
    pub fn new(ring: &Arc<AffineRing>, ngens: usize, relations: Vec<Column>) -> Result<FPModule> {
        let m = Matrix::new(ring, ngens, relations)?;
        let relations = m.cols().iter().filter(|c| c.iter().any(|p| !p.is_zero())).map(|c| normalize_column(c)).collect();
        Ok(FPModule { ring: ring.clone(), ngens, relations, rel_sub: OnceLock::new() })
    }

    /// `coker(m)`; the columns of `m` are the relations.
    pub fn coker(m: &Matrix) -> FPModule {
        FPModule::new(m.ring(), m.nrows(), m.cols().to_vec()).expect("matrix entries are valid")
    }

    pub fn free(ring: &Arc<AffineRing>, n: usize) -> FPModule {
        FPModule { ring: ring.clone(), ngens: n, relations: Vec::new(), rel_sub: OnceLock::new() }
    }

    pub fn zero(ring: &Arc<AffineRing>) -> FPModule {
        FPModule::free(ring, 0)
    }

    /// `A / I` as a cyclic module.
    pub fn cyclic(ideal: &Ideal) -> FPModule {
        let rels = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
        FPModule::new(ideal.ring(), 1, rels).expect("ideal generators live in the ring")
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        if !same_affine(&self.ring, &other.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let n = self.ngens + other.ngens;
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut c = r.clone();
            c.extend(zero_column(&self.ring, other.ngens));
            rels.push(c);
        }
        for r in &other.relations {
            let mut c = zero_column(&self.ring, self.ngens);
            c.extend(r.iter().cloned());
            rels.push(c);
        }
        FPModule::new(&self.ring, n, rels)
    }

    pub fn ring(&self) -> &Arc<AffineRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &[Column] {
        &self.relations
    }

    pub fn presentation(&self) -> Matrix {
        Matrix::new(&self.ring, self.ngens, self.relations.clone()).expect("valid")
    }

    pub fn relation_submodule(&self) -> &Submodule {
        self.rel_sub
            .get_or_init(|| Submodule::new(&self.ring, self.ngens, self.relations.clone()).expect("valid"))
    }

    /// Whether the element with coordinates `v` in the generators is zero.
    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        self.relation_submodule().contains(v)
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    /// Whether the module itself is zero: every generator dies.
    pub fn is_zero_module(&self) -> bool {
        (0..self.ngens).all(|i| self.is_zero_element(&unit_column(&self.ring, self.ngens, i)).expect("rank"))
    }

    /// Presentation with unit pivots eliminated and redundant relations
    /// dropped. Returns the new module and the matrix expressing each old
    /// generator in the new generators.
    pub fn minimize(&self) -> (FPModule, Matrix) {
        let ring = &self.ring;
        let mut rels: Vec<Column> = self.relations.clone();
        let mut express: Vec<Vec<Polynomial>> = (0..self.ngens)
            .map(|i| (0..self.ngens).map(|o| if i == o { ring.one() } else { ring.zero() }).collect())
            .collect();
        if !ring.is_trivial() {
            while let Some((j, i)) = find_unit_pivot(&rels) {
                let pivot = rels[j][i].terms()[0].1.clone();
                let inv = pivot.inv();
                let pc = rels.remove(j);
                for col in rels.iter_mut() {
                    if col[i].is_zero() {
                        continue;
                    }
                    let factor = col[i].scale(&inv);
                    for (l, e) in col.iter_mut().enumerate() {
                        *e = ring.reduce(&(&*e - &(&factor * &pc[l])));
                    }
                }
                // g_i = -(1/c) Σ_{l≠i} pc_l g_l
                let row_i = express[i].clone();
                for (l, row) in express.iter_mut().enumerate() {
                    if l == i || pc[l].is_zero() {
                        continue;
                    }
                    let f = pc[l].scale(&inv).neg();
                    for (o, e) in row.iter_mut().enumerate() {
                        *e = ring.reduce(&(&*e + &(&f * &row_i[o])));
                    }
                }
                express.remove(i);
                for col in rels.iter_mut() {
                    col.remove(i);
                }
            }
        } else {
            rels.clear();
            express.clear();
        }
        let n = express.len();
        let rels = prune(ring, n, rels, &[]);
        let module = FPModule::new(ring, n, rels).expect("valid");
        let cols = (0..self.ngens).map(|o| express.iter().map(|row| row[o].clone()).collect()).collect();
        (module, Matrix::new(ring, n, cols).expect("valid"))
    }

    pub fn minimized(&self) -> FPModule {
        self.minimize().0
    }
}

/// Scales a column so that its first nonzero entry has leading coefficient 1.
pub(crate) fn normalize_column(c: &[Polynomial]) -> Column {
    match c.iter().find(|p| !p.is_zero()) {
        Some(p) if !p.terms()[0].1.is_one() => {
            let inv = p.terms()[0].1.inv();
            c.iter().map(|q| q.scale(&inv)).collect()
        }
        _ => c.to_vec(),
    }
}

fn find_unit_pivot(rels: &[Column]) -> Option<(usize, usize)> {
    for (j, c) in rels.iter().enumerate() {
        for (i, e) in c.iter().enumerate() {
            if !e.is_zero() && e.is_constant() {
                return Some((j, i));
            }
        }
    }
    None
}

impl fmt::Display for FPModule {
    /// `free n` or `coker [[row], ...]` with the presentation's rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.relations.is_empty() {
            return write!(f, "free {}", self.ngens);
        }
        write!(f, "coker {}", self.presentation())
    }
}

/// A module homomorphism given by the images of the source generators
/// (columns, in the target's generators).
#[derive(Debug, Clone)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    matrix: Matrix,
}

impl ModuleMap {
    /// Checks that every source relation maps into the target relations.
    pub fn new(source: &FPModule, target: &FPModule, matrix: Matrix) -> Result<ModuleMap> {
        if !same_affine(&source.ring, &target.ring) || !same_affine(&source.ring, matrix.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        if matrix.nrows() != target.ngens || matrix.ncols() != source.ngens {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} matrix for a map from {} to {} generators",
                matrix.nrows(),
                matrix.ncols(),
                source.ngens,
                target.ngens
            )));
        }
        for (j, r) in source.relations.iter().enumerate() {
            if !target.is_zero_element(&matrix.mul_column(r)?)? {
                return Err(AlgebraError::IllDefinedModuleMap(j));
            }
        }
        Ok(ModuleMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(m: &FPModule) -> ModuleMap {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(&m.ring, m.ngens) }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Column> {
        self.matrix.mul_column(v)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if self.target.ngens != next.source.ngens || !same_affine(&self.source.ring, &next.source.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(ModuleMap { source: self.source.clone(), target: next.target.clone(), matrix: next.matrix.mul(&self.matrix)? })
    }

    /// Image plus target relations, as a submodule of the target's free cover.
    fn image_with_relations(&self) -> Submodule {
        let mut g = self.matrix.cols().to_vec();
        g.extend(self.target.relations.iter().cloned());
        Submodule::new(&self.target.ring, self.target.ngens, g).expect("valid")
    }

    pub fn is_surjective(&self) -> bool {
        let s = self.image_with_relations();
        (0..self.target.ngens).all(|i| s.contains(&unit_column(&self.target.ring, self.target.ngens, i)).expect("rank"))
    }

    /// Kernel as a submodule of the source's free cover (contains the
    /// source relations).
    pub fn kernel(&self) -> Submodule {
        let n = self.source.ngens;
        let mut cols = self.matrix.cols().to_vec();
        cols.extend(self.target.relations.iter().map(|c| c.iter().map(|p| p.neg()).collect::<Column>()));
        let big = Matrix::new(&self.source.ring, self.target.ngens, cols).expect("valid");
        let syz = syzygies(&big);
        let mut gens: Vec<Column> = syz.cols().iter().map(|c| c[..n].to_vec()).collect();
        gens.extend(self.source.relations.iter().cloned());
        Submodule::new(&self.source.ring, n, gens).expect("valid")
    }

    pub fn is_injective(&self) -> bool {
        let k = self.kernel();
        self.source.relation_submodule().contains_all(&k).expect("rank")
    }
}

/// Mutual surjections `f: M → N`, `g: N → M`. For finitely generated modules
/// over a Noetherian ring this certifies `M ≅ N`.
#[derive(Debug, Clone)]
pub struct IsoCertificate {
    pub forward: ModuleMap,
    pub backward: ModuleMap,
}

impl IsoCertificate {
    pub fn new(m: &FPModule, n: &FPModule, forward: Matrix, backward: Matrix) -> Result<Option<IsoCertificate>> {
        let f = ModuleMap::new(m, n, forward)?;
        let g = ModuleMap::new(n, m, backward)?;
        if f.is_surjective() && g.is_surjective() {
            Ok(Some(IsoCertificate { forward: f, backward: g }))
        } else {
            Ok(None)
        }
    }

    /// Both modules share generators; the identity matrices must be
    /// mutually surjective well-defined maps.
    pub fn same_generators(m: &FPModule, n: &FPModule) -> Result<Option<IsoCertificate>> {
        if m.ngens != n.ngens {
            return Ok(None);
        }
        let id = Matrix::identity(&m.ring, m.ngens);
        match IsoCertificate::new(m, n, id.clone(), id) {
            Err(AlgebraError::IllDefinedModuleMap(_)) => Ok(None),
            other => other,
        }
    }
}

/// The module of generators relations `syz(gens)`; generators are the
/// columns of `gens`.
pub fn present(gens: &Matrix) -> FPModule {
    let rels = syzygies(gens);
    FPModule::new(gens.ring(), gens.ncols(), prune(gens.ring(), gens.ncols(), rels.cols().to_vec(), &[]))
        .expect("valid")
}

pub fn present_submodule(s: &Submodule) -> FPModule {
    present(&s.as_matrix())
}

/// `Hom(M, N)` with one explicit homomorphism per generator.
#[derive(Debug, Clone)]
pub struct HomModule {
    pub module: FPModule,
    pub maps: Vec<ModuleMap>,
}

/// Hom as the kernel of the induced map on free covers, modulo the maps
/// landing in the relations of `N`.
pub fn hom_module(m: &FPModule, n: &FPModule) -> Result<HomModule> {
    if !same_affine(&m.ring, &n.ring) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = &m.ring;
    let (gn, k) = (m.ngens, n.ngens);
    let q = n.relations.len();
    let rels_m = &m.relations;
    // unknowns: h (k*gn entries, block i = image of generator i), then z (q per relation of M)
    let nunk = k * gn + q * rels_m.len();
    let nrows = k * rels_m.len();
    let mut cols: Vec<Column> = vec![zero_column(ring, nrows); nunk];
    for (j, p) in rels_m.iter().enumerate() {
        for (i, pij) in p.iter().enumerate() {
            for a in 0..k {
                cols[i * k + a][j * k + a] = pij.clone();
            }
        }
        for (b, qcol) in n.relations.iter().enumerate() {
            for a in 0..k {
                cols[k * gn + j * q + b][j * k + a] = qcol[a].neg();
            }
        }
    }
    let big = Matrix::new(ring, nrows, cols)?;
    let kernel = syzygies(&big);
    let raw: Vec<Column> = kernel.cols().iter().map(|c| c[..k * gn].to_vec()).collect();
    let mut trivial: Vec<Column> = Vec::new();
    for i in 0..gn {
        for qcol in &n.relations {
            let mut c = zero_column(ring, k * gn);
            for a in 0..k {
                c[i * k + a] = qcol[a].clone();
            }
            trivial.push(c);
        }
    }
    let gens = prune(ring, k * gn, raw, &trivial);
    let s = gens.len();
    let mut rel_cols = gens.clone();
    rel_cols.extend(trivial.iter().cloned());
    let syz = syzygies(&Matrix::new(ring, k * gn, rel_cols)?);
    let rels: Vec<Column> = syz.cols().iter().map(|c| c[..s].to_vec()).collect();
    let rels = prune(ring, s, rels, &[]);
    let module = FPModule::new(ring, s, rels)?;
    let maps = gens
        .iter()
        .map(|h| {
            let mcols: Vec<Column> = (0..gn).map(|i| h[i * k..(i + 1) * k].to_vec()).collect();
            ModuleMap::new(m, n, Matrix::new(ring, k, mcols)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomModule { module, maps })
}

/// `M* = Hom(M, A)`.
pub fn dual(m: &FPModule) -> Result<HomModule> {
    hom_module(m, &FPModule::free(&m.ring, 1))
}

/// Row `k` holds the values `φ_k(g_i)` of the dual generators on the
/// module generators.
pub fn evaluation_matrix(m: &FPModule, dual: &HomModule) -> Matrix {
    let cols: Vec<Column> =
        (0..m.ngens).map(|i| dual.maps.iter().map(|phi| phi.matrix().entry(0, i).clone()).collect()).collect();
    Matrix::new(&m.ring, dual.maps.len(), cols).expect("valid")
}

/// The canonical map `M → M**`.
pub fn double_dual_map(m: &FPModule) -> Result<(HomModule, ModuleMap)> {
    let d = dual(m)?;
    let dd = dual(&d.module)?;
    let ev = evaluation_matrix(m, &d);
    let span_rows: Vec<Column> = dd.maps.iter().map(|psi| psi.matrix().rows()[0].clone()).collect();
    let span = Submodule::new(&m.ring, d.maps.len(), span_rows)?;
    let mut cols = Vec::with_capacity(m.ngens);
    for c in ev.cols() {
        let lift = span.lift(c)?.ok_or_else(|| AlgebraError::InvalidArgument("evaluation outside the bidual".into()))?;
        cols.push(lift);
    }
    let map = ModuleMap::new(m, &dd.module, Matrix::new(&m.ring, dd.maps.len(), cols)?)?;
    Ok((dd, map))
}

/// `M^tl` presented on the generators of `M`, together with `M ↠ M^tl`.
/// Computed as the image of `M` in the free module `A^r` of a versal map,
/// which coincides with the image of `M → M**`.
pub fn torsionless_quotient(m: &FPModule) -> Result<(FPModule, ModuleMap)> {
    let d = dual(m)?;
    let image = present(&evaluation_matrix(m, &d));
    let surj = ModuleMap::new(m, &image, Matrix::identity(&m.ring, m.ngens))?;
    Ok((image, surj))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Flatness {
    /// Caller obligation.
    Asserted,
    /// Recognised shape `A[z]/(f z - 1)`; holds `f`.
    PrincipalLocalization(Polynomial),
}

/// A ring map together with the reason it is taken to be flat.
#[derive(Debug, Clone)]
pub struct FlatExtension {
    pub map: RingMap,
    pub flatness: Flatness,
}

impl FlatExtension {
    pub fn asserted(map: &RingMap) -> FlatExtension {
        let flatness = match map.principal_localization() {
            Some(f) => Flatness::PrincipalLocalization(f),
            None => Flatness::Asserted,
        };
        FlatExtension { map: map.clone(), flatness }
    }

    /// Only principal localizations are accepted without an assertion.
    pub fn recognize(map: &RingMap) -> Result<FlatExtension> {
        match map.principal_localization() {
            Some(f) => Ok(FlatExtension { map: map.clone(), flatness: Flatness::PrincipalLocalization(f) }),
            None => Err(AlgebraError::FlatnessUnknown),
        }
    }

    pub fn check_injective(&self) -> Result<()> {
        let k = ring_map_kernel(&self.map);
        if k.is_zero() {
            Ok(())
        } else {
            Err(AlgebraError::NonInjectiveBaseChange(k.to_string()))
        }
    }
}

/// `M ⊗_A B` by applying `φ` to the presentation.
pub fn base_change(m: &FPModule, phi: &RingMap) -> Result<FPModule> {
    if !same_affine(&m.ring, phi.source()) {
        return Err(AlgebraError::RingMismatch);
    }
    let rels = m
        .relations
        .iter()
        .map(|c| c.iter().map(|p| phi.apply(p)).collect::<Result<Column>>())
        .collect::<Result<Vec<_>>>()?;
    FPModule::new(phi.target(), m.ngens, rels)
}

/// Image of `M → M ⊗_A A'` as an `A`-module on the generators of `M`.
pub fn torsionless_via_flat(m: &FPModule, ext: &FlatExtension) -> Result<FPModule> {
    if !same_affine(&m.ring, ext.map.source()) {
        return Err(AlgebraError::RingMismatch);
    }
    ext.check_injective()?;
    let changed = base_change(m, &ext.map)?;
    let rels = preimage_under_ring_map(&ext.map, m.ngens, changed.relations())?;
    FPModule::new(&m.ring, m.ngens, prune(&m.ring, m.ngens, rels, &[]))
}

/// Increasing `d`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        go(0, n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `∧^d M` on the generators `g_S`, `S` a `d`-subset in lexicographic order,
/// with relations `r ∧ g_S` for each relation `r` and `(d-1)`-subset `S`.
pub fn exterior_power(m: &FPModule, d: usize) -> FPModule {
    let ring = &m.ring;
    let basis = subsets(m.ngens, d);
    let index = |s: &[usize]| basis.iter().position(|b| b == s).expect("subset");
    let mut rels = Vec::new();
    if d >= 1 {
        for r in &m.relations {
            for s in subsets(m.ngens, d - 1) {
                let mut col = zero_column(ring, basis.len());
                for (i, ri) in r.iter().enumerate() {
                    if ri.is_zero() || s.contains(&i) {
                        continue;
                    }
                    let before = s.iter().filter(|&&x| x < i).count();
                    let mut t = s.clone();
                    t.push(i);
                    t.sort_unstable();
                    let e = if before % 2 == 0 { ri.clone() } else { ri.neg() };
                    let k = index(&t);
                    col[k] = &col[k] + &e;
                }
                rels.push(col);
            }
        }
    }
    FPModule::new(ring, basis.len(), rels).expect("valid")
}

/// `Ann(M) = ∩_i (relations : g_i)`; the zero module gives `(1)`.
pub fn annihilator(m: &FPModule) -> Ideal {
    let ring = &m.ring;
    let mut acc = Ideal::unit(ring);
    for i in 0..m.ngens {
        let mut cols = vec![unit_column(ring, m.ngens, i)];
        cols.extend(m.relations.iter().cloned());
        let syz = syzygies(&Matrix::new(ring, m.ngens, cols).expect("valid"));
        let colon = Ideal::new(ring, syz.cols().iter().map(|c| c[0].clone()).collect()).expect("valid");
        acc = intersect(&acc, &colon).expect("same ring");
    }
    acc
}

/// `p ∈ Ass(M)` for a prime `p`: `Ann(Hom(A/p, M)) ⊆ p`.
pub fn ass_membership(p: &Ideal, m: &FPModule) -> Result<bool> {
    if !same_affine(p.ring(), &m.ring) {
        return Err(AlgebraError::RingMismatch);
    }
    if p.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let h = hom_module(&FPModule::cyclic(p), m)?;
    Ok(annihilator(&h.module).is_subset_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn dual_numbers() -> Arc<AffineRing> {
        let r = PolyRing::rational(&["x"]);
        AffineRing::new(&r, vec![r.var(0).pow(2)]).unwrap()
    }

    fn m1(a: &Arc<AffineRing>) -> FPModule {
        FPModule::new(a, 1, vec![vec![a.var(0)]]).unwrap()
    }

    fn line() -> Arc<AffineRing> {
        AffineRing::polynomial(&PolyRing::rational(&["x"]))
    }

    fn free_plus_torsion(a: &Arc<AffineRing>) -> FPModule {
        let t = FPModule::cyclic(&Ideal::new(a, vec![a.var(0)]).unwrap());
        FPModule::free(a, 1).direct_sum(&t).unwrap()
    }

    #[test]
    fn dual_of_nilpotent_module() {
        let a = dual_numbers();
        let h = dual(&m1(&a)).unwrap();
        assert_eq!(h.maps.len(), 1);
        assert_eq!(h.maps[0].matrix().entry(0, 0), &a.var(0));
        assert_eq!(h.module.to_string(), "coker [[x]]");
    }

    #[test]
    fn hom_into_domain_from_torsion_is_zero() {
        let a = line();
        let t = FPModule::cyclic(&Ideal::new(&a, vec![a.var(0)]).unwrap());
        let h = dual(&t).unwrap();
        assert!(h.module.ngens() == 0 || h.module.is_zero_module());
        let f = dual(&FPModule::free(&a, 2)).unwrap();
        assert_eq!(f.module.ngens(), 2);
        assert!(f.module.is_free_presentation());
    }

    #[test]
    fn torsion_summand_dies() {
        let a = line();
        let m = free_plus_torsion(&a);
        let (tl, _) = torsionless_quotient(&m).unwrap();
        let (min, _) = tl.minimize();
        assert_eq!(min.to_string(), "free 1");
        let (dd, map) = double_dual_map(&m).unwrap();
        assert_eq!(dd.module.minimized().to_string(), "free 1");
        assert!(map.is_surjective());
        assert!(!map.is_injective());
    }

    #[test]
    fn nilpotent_module_is_torsionless() {
        let a = dual_numbers();
        let m = m1(&a);
        let (_, map) = double_dual_map(&m).unwrap();
        assert!(map.is_injective() && map.is_surjective());
        let (tl, _) = torsionless_quotient(&m).unwrap();
        assert!(IsoCertificate::same_generators(&m, &tl).unwrap().is_some());
    }

    #[test]
    fn wedge_square_of_free_plus_torsion() {
        let a = line();
        let w = exterior_power(&free_plus_torsion(&a), 2);
        assert_eq!(w.to_string(), "coker [[x]]");
        assert_eq!(exterior_power(&FPModule::free(&a, 3), 2).to_string(), "free 3");
    }

    #[test]
    fn annihilators() {
        let a = dual_numbers();
        assert_eq!(annihilator(&m1(&a)).to_string(), "(x)");
        assert!(annihilator(&FPModule::zero(&a)).is_unit());
        assert!(annihilator(&FPModule::free(&a, 2)).is_zero() || annihilator(&FPModule::free(&a, 2)).to_string() == "(0)");
    }

    #[test]
    fn associated_primes() {
        let a = dual_numbers();
        let p = Ideal::new(&a, vec![a.var(0)]).unwrap();
        assert!(ass_membership(&p, &FPModule::free(&a, 1)).unwrap());
        let r = PolyRing::rational(&["x", "y"]);
        let b = AffineRing::new(&r, vec![&r.var(0) * &r.var(1)]).unwrap();
        let free = FPModule::free(&b, 1);
        assert!(ass_membership(&Ideal::new(&b, vec![r.var(0)]).unwrap(), &free).unwrap());
        assert!(ass_membership(&Ideal::new(&b, vec![r.var(1)]).unwrap(), &free).unwrap());
        let c = AffineRing::polynomial(&r);
        let m = Ideal::new(&c, vec![r.var(0), r.var(1)]).unwrap();
        assert!(!ass_membership(&m, &FPModule::free(&c, 1)).unwrap());
        assert!(matches!(ass_membership(&Ideal::unit(&c), &FPModule::free(&c, 1)), Err(AlgebraError::UnitIdeal)));
    }

    #[test]
    fn ideal_presentation_and_flat_route() {
        let r = PolyRing::rational(&["x", "y"]);
        let a = AffineRing::polynomial(&r);
        let gens = Matrix::from_rows(&a, vec![vec![r.var(0), r.var(1)]]).unwrap();
        let m = present(&gens);
        assert_eq!(m.ngens(), 2);
        assert_eq!(m.relations().len(), 1);
        let s = PolyRing::rational(&["x", "y", "z"]);
        let loc = AffineRing::new(&s, vec![&(&s.var(0) * &s.var(2)) - &s.one()]).unwrap();
        let ext = FlatExtension::recognize(&RingMap::by_names(&a, &loc).unwrap()).unwrap();
        let via = torsionless_via_flat(&m, &ext).unwrap();
        assert!(IsoCertificate::same_generators(&m, &via).unwrap().is_some());
        let b = AffineRing::new(&r, vec![r.var(1)]).unwrap();
        let changed = base_change(&m, &RingMap::by_names(&a, &b).unwrap()).unwrap();
        assert_eq!(changed.to_string(), "coker [[0], [x]]");
    }
}
