//! Evaluation of parsed scripts.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ast::*;
use super::output::{Block, Out};
use super::parse::{parse_incremental, Declared};
use super::ScriptError;
use crate::coeff::Field;
use crate::error::AlgebraError;
use crate::fpmod::{
    annihilator, ass_membership, base_change, dual, exterior_power, hom_module, present, torsionless_quotient,
    torsionless_via_flat, FPModule, Flatness, FlatExtension, HomModule,
};
use crate::groebner::Ideal;
use crate::modsyz::Matrix;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::projgeo::{
    assofrees_check, charts_all_empty, closure_of_preimage, is_proj_empty, nash_transform, proj_charts,
    schematically_dense, ProjChart,
};
use crate::rees::{
    check_injectivity_flat, compare_base_change, graded_piece, rees_presentation, sym_image_quotient,
    sym_presentation, versal_map, BaseChangeComparison, GradedAlgebra,
};
use crate::ring::{same_affine, AffineRing, RingMap};

/// A named object of a session.
#[derive(Debug, Clone)]
pub enum Value {
    Ring(Arc<AffineRing>),
    Ideal(Ideal),
    Module(FPModule),
    Map(RingMap),
    Algebra(GradedAlgebra),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ring(r) => write!(f, "{r}"),
            Value::Ideal(i) => write!(f, "{i}"),
            Value::Module(m) => write!(f, "{m}"),
            Value::Map(m) => {
                let vars = m.source().poly_ring().vars();
                let parts: Vec<String> = vars.iter().zip(m.images()).map(|(v, p)| format!("{v} -> {p}")).collect();
                write!(f, "{{ {} }}", parts.join(", "))
            }
            Value::Algebra(g) => write!(f, "{g}"),
        }
    }
}

/// Named values plus the maps asserted flat.
#[derive(Debug, Default)]
pub struct Session {
    values: HashMap<String, Value>,
    flat: HashSet<String>,
    declared: Declared,
}

/// Result of running a script: the blocks produced before any error.
#[derive(Debug, Default)]
pub struct Execution {
    pub blocks: Vec<Block>,
    pub error: Option<ScriptError>,
    /// Set when a `verify` command found a mismatch.
    pub verify_failed: bool,
}

impl Execution {
    /// 0 on success, 1 on error, 2 on a verification mismatch.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            1
        } else if self.verify_failed {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        self.blocks.iter().map(|b| b.to_text()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = serde_json::Map::new();
        doc.insert("results".into(), serde_json::Value::Array(self.blocks.iter().map(|b| b.to_json()).collect()));
        if let Some(e) = &self.error {
            doc.insert("error".into(), serde_json::Value::String(e.to_string()));
        }
        serde_json::Value::Object(doc)
    }
}

/// Parses and runs a complete script in a fresh session.
pub fn run_source(src: &str) -> Execution {
    let mut s = Session::new();
    s.run_source(src)
}

/// Runs a parsed script in a fresh session.
pub fn execute(script: &Script) -> Execution {
    let mut s = Session::new();
    s.execute(script)
}

fn engine(pos: Pos, context: &str) -> impl Fn(AlgebraError) -> ScriptError + '_ {
    move |source| ScriptError::Engine { pos, context: context.to_string(), source }
}

impl Session {
    pub fn new() -> Session {
        Session::default()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    /// Parses `src` against this session's declarations and runs it.
    pub fn run_source(&mut self, src: &str) -> Execution {
        match parse_incremental(src, &mut self.declared) {
            Ok(script) => self.execute(&script),
            Err(e) => Execution { error: Some(e), ..Execution::default() },
        }
    }

    pub fn execute(&mut self, script: &Script) -> Execution {
        let mut ex = Execution::default();
        for item in &script.items {
            match self.run_item(item) {
                Ok(Some((block, failed))) => {
                    ex.verify_failed |= failed;
                    ex.blocks.push(block);
                }
                Ok(None) => {}
                Err(e) => {
                    ex.error = Some(e);
                    break;
                }
            }
        }
        ex
    }

    fn run_item(&mut self, item: &Item) -> Result<Option<(Block, bool)>, ScriptError> {
        let ctx = item.source.as_str();
        match &item.kind {
            ItemKind::Decl { name, decl } => {
                let v = self.declaration(decl, item.pos, ctx)?;
                self.values.insert(name.text.clone(), v);
                Ok(None)
            }
            ItemKind::AssumeFlat(m) => {
                self.map(m)?;
                self.flat.insert(m.text.clone());
                Ok(None)
            }
            ItemKind::Command(c) => {
                let (body, failed) = self.command(c, item.pos, ctx)?;
                Ok(Some((Block { command: item.source.clone(), body }, failed)))
            }
        }
    }

    fn lookup(&self, n: &Name) -> Result<&Value, ScriptError> {
        self.values.get(&n.text).ok_or_else(|| ScriptError::Undefined { pos: n.pos, name: n.text.clone() })
    }

    fn wrong(n: &Name, expected: &'static str, v: &Value) -> ScriptError {
        let found = match v {
            Value::Ring(_) => "ring",
            Value::Ideal(_) => "ideal",
            Value::Module(_) => "module",
            Value::Map(_) => "map",
            Value::Algebra(_) => "algebra",
        };
        ScriptError::WrongKind { pos: n.pos, name: n.text.clone(), expected, found }
    }

    fn ring(&self, n: &Name) -> Result<Arc<AffineRing>, ScriptError> {
        match self.lookup(n)? {
            Value::Ring(r) => Ok(r.clone()),
            v => Err(Self::wrong(n, "ring", v)),
        }
    }

    fn module(&self, n: &Name) -> Result<FPModule, ScriptError> {
        match self.lookup(n)? {
            Value::Module(m) => Ok(m.clone()),
            v => Err(Self::wrong(n, "module", v)),
        }
    }

    fn map(&self, n: &Name) -> Result<RingMap, ScriptError> {
        match self.lookup(n)? {
            Value::Map(m) => Ok(m.clone()),
            v => Err(Self::wrong(n, "map", v)),
        }
    }

    fn ideal_value(&self, n: &Name) -> Result<Ideal, ScriptError> {
        match self.lookup(n)? {
            Value::Ideal(i) => Ok(i.clone()),
            v => Err(Self::wrong(n, "ideal", v)),
        }
    }

    fn flat_extension(&self, n: &Name, pos: Pos, ctx: &str) -> Result<FlatExtension, ScriptError> {
        let m = self.map(n)?;
        if self.flat.contains(&n.text) {
            Ok(FlatExtension::asserted(&m))
        } else {
            FlatExtension::recognize(&m).map_err(engine(pos, ctx))
        }
    }

    /// An ideal of `ring`, named or inline.
    fn ideal_in(&self, r: &IdealRef, ring: &Arc<AffineRing>, ctx: &str) -> Result<Ideal, ScriptError> {
        match r {
            IdealRef::Named(n) => {
                let i = self.ideal_value(n)?;
                if !same_affine(i.ring(), ring) {
                    return Err(engine(n.pos, ctx)(AlgebraError::RingMismatch));
                }
                Ok(i)
            }
            IdealRef::Inline(gens, pos) => {
                let polys = eval_all(gens, ring.poly_ring())?;
                Ideal::new(ring, polys).map_err(engine(*pos, ctx))
            }
        }
    }

    fn algebra(&self, r: &AlgRef, pos: Pos, ctx: &str) -> Result<GradedAlgebra, ScriptError> {
        match r {
            AlgRef::Named(n) => match self.lookup(n)? {
                Value::Algebra(g) => Ok(g.clone()),
                v => Err(Self::wrong(n, "algebra", v)),
            },
            AlgRef::Inline(e) => self.alg_expr(e, pos, ctx),
        }
    }

    fn alg_expr(&self, e: &AlgExpr, pos: Pos, ctx: &str) -> Result<GradedAlgebra, ScriptError> {
        let err = engine(pos, ctx);
        match e {
            AlgExpr::Rees(m) => rees_presentation(&self.module(m)?).map_err(err),
            AlgExpr::Sym(m) => Ok(sym_presentation(&self.module(m)?)),
            AlgExpr::SymTl(m) => {
                let m = self.module(m)?;
                let v = versal_map(&m).map_err(&err)?;
                sym_image_quotient(&m, &v).map_err(err)
            }
            AlgExpr::Closure(g, jc) => {
                let g = self.algebra(g, pos, ctx)?;
                let jc = self.ideal_in(jc, g.base(), ctx)?;
                closure_of_preimage(&g, &jc).map_err(err)
            }
        }
    }

    fn declaration(&self, d: &Decl, pos: Pos, ctx: &str) -> Result<Value, ScriptError> {
        let err = engine(pos, ctx);
        Ok(match d {
            Decl::Ring { field, vars, relations, order } => {
                let field = match field {
                    FieldSpec::Rational => Field::Rational,
                    FieldSpec::Prime(p, ppos) => Field::prime(*p).map_err(engine(*ppos, ctx))?,
                };
                let order = match order {
                    OrderSpec::Lex => MonomialOrder::Lex,
                    OrderSpec::DegRevLex => MonomialOrder::DegRevLex,
                };
                let names = vars.iter().map(|v| v.text.clone()).collect();
                let poly = PolyRing::new(field, names, order).map_err(&err)?;
                let rels = eval_all(relations, &poly)?;
                Value::Ring(AffineRing::new(&poly, rels).map_err(err)?)
            }
            Decl::Ideal { ring, gens } => {
                let r = self.ring(ring)?;
                let polys = eval_all(gens, r.poly_ring())?;
                Value::Ideal(Ideal::new(&r, polys).map_err(err)?)
            }
            Decl::Module(e) => Value::Module(self.mod_expr(e, pos, ctx)?),
            Decl::Map { source, target, images } => {
                let s = self.ring(source)?;
                let t = self.ring(target)?;
                let mut ims: Vec<Option<Polynomial>> = vec![None; s.nvars()];
                for (v, e) in images {
                    let i = s.poly_ring().index_of(&v.text).ok_or_else(|| {
                        engine(v.pos, ctx)(AlgebraError::UnknownVariable(v.text.clone()))
                    })?;
                    if ims[i].is_some() {
                        return Err(engine(v.pos, ctx)(AlgebraError::DuplicateVariable(v.text.clone())));
                    }
                    ims[i] = Some(eval(e, t.poly_ring())?);
                }
                let mut out = Vec::with_capacity(ims.len());
                for (i, im) in ims.into_iter().enumerate() {
                    match im {
                        Some(p) => out.push(p),
                        None => {
                            let v = &s.poly_ring().vars()[i];
                            return Err(err(AlgebraError::InvalidArgument(format!("no image given for {v}"))));
                        }
                    }
                }
                Value::Map(RingMap::new(&s, &t, out).map_err(err)?)
            }
            Decl::Algebra(e) => Value::Algebra(self.alg_expr(e, pos, ctx)?),
        })
    }

    fn matrix(&self, ring: &Arc<AffineRing>, rows: &[Vec<Expr>], pos: Pos, ctx: &str) -> Result<Matrix, ScriptError> {
        let rows = rows.iter().map(|r| eval_all(r, ring.poly_ring())).collect::<Result<Vec<_>, _>>()?;
        if rows.is_empty() {
            return Ok(Matrix::empty(ring, 0));
        }
        Matrix::from_rows(ring, rows).map_err(engine(pos, ctx))
    }

    fn mod_expr(&self, e: &ModExpr, pos: Pos, ctx: &str) -> Result<FPModule, ScriptError> {
        let err = engine(pos, ctx);
        Ok(match e {
            ModExpr::Coker { ring, rows, pos: mpos } => {
                let r = self.ring(ring)?;
                FPModule::coker(&self.matrix(&r, rows, *mpos, ctx)?)
            }
            ModExpr::Image { ring, rows, pos: mpos } => {
                let r = self.ring(ring)?;
                present(&self.matrix(&r, rows, *mpos, ctx)?)
            }
            ModExpr::Free { ring, rank } => FPModule::free(&self.ring(ring)?, *rank),
            ModExpr::Quotient { ring, ideal } => {
                let r = self.ring(ring)?;
                FPModule::cyclic(&self.ideal_in(ideal, &r, ctx)?)
            }
            ModExpr::Tl { module, via } => {
                let m = self.module(module)?;
                match via {
                    None => torsionless_quotient(&m).map_err(err)?.0,
                    Some(f) => torsionless_via_flat(&m, &self.flat_extension(f, pos, ctx)?).map_err(err)?,
                }
            }
            ModExpr::Dual(m) => dual(&self.module(m)?).map_err(err)?.module,
            ModExpr::Wedge(m, d) => exterior_power(&self.module(m)?, *d),
            ModExpr::Base { module, map } => base_change(&self.module(module)?, &self.map(map)?).map_err(err)?,
            ModExpr::Hom(a, b) => hom_module(&self.module(a)?, &self.module(b)?).map_err(err)?.module,
            ModExpr::Sum(a, b) => self.module(a)?.direct_sum(&self.module(b)?).map_err(err)?,
            ModExpr::Piece(g, n) => graded_piece(&self.algebra(g, pos, ctx)?, *n),
        })
    }

    fn command(&mut self, c: &Command, pos: Pos, ctx: &str) -> Result<(Out, bool), ScriptError> {
        let err = engine(pos, ctx);
        let out = match c {
            Command::Gb(t) => {
                let i = match t {
                    IdealTarget::Named(n) => self.ideal_value(n)?,
                    IdealTarget::Inline { ring, gens } => {
                        let r = self.ring(ring)?;
                        Ideal::new(&r, eval_all(gens, r.poly_ring())?).map_err(err)?
                    }
                };
                Out::map(vec![
                    ("ring", Out::str(i.ring())),
                    ("basis", Out::List(i.canonical_generators().iter().map(Out::str).collect())),
                    ("ideal", Out::str(&i)),
                ])
            }
            Command::Rees(m) => algebra_out(&rees_presentation(&self.module(m)?).map_err(err)?),
            Command::Sym(m) => algebra_out(&sym_presentation(&self.module(m)?)),
            Command::Versal(m) => {
                let v = versal_map(&self.module(m)?).map_err(err)?;
                Out::map(vec![("rank", Out::Int(v.rank() as i64)), ("matrix", Out::str(v.matrix()))])
            }
            Command::Tl { module, via } => {
                let m = self.module(module)?;
                let (tl, route) = match via {
                    None => (torsionless_quotient(&m).map_err(err)?.0, "bidual".to_string()),
                    Some(f) => {
                        let ext = self.flat_extension(f, pos, ctx)?;
                        (torsionless_via_flat(&m, &ext).map_err(err)?, flatness_text(&ext))
                    }
                };
                let mut entries = module_entries(&tl);
                entries.push(("route", Out::Str(route)));
                Out::map(entries)
            }
            Command::Algtl(m) => {
                let m = self.module(m)?;
                let v = versal_map(&m).map_err(&err)?;
                let g = sym_image_quotient(&m, &v).map_err(&err)?;
                let r = rees_presentation(&m).map_err(err)?;
                Out::map(vec![("ideal", Out::str(g.ideal())), ("equals_rees", Out::Bool(g.same_as(&r)))])
            }
            Command::Blowup(m) => {
                let g = rees_presentation(&self.module(m)?).map_err(err)?;
                let mut entries = vec![("ideal", Out::str(g.ideal())), ("variables", Out::Str(g.t_names().join(", ")))];
                entries.push(("charts", charts_out(&proj_charts(&g))));
                entries.push(("empty", Out::Bool(is_proj_empty(&g))));
                Out::map(entries)
            }
            Command::Charts(g) => {
                let g = self.algebra(g, pos, ctx)?;
                Out::map(vec![("charts", charts_out(&proj_charts(&g)))])
            }
            Command::Empty(g) => {
                let g = self.algebra(g, pos, ctx)?;
                Out::map(vec![("empty", Out::Bool(is_proj_empty(&g))), ("charts_empty", Out::Bool(charts_all_empty(&g)))])
            }
            Command::Piece(g, n) => {
                let g = self.algebra(g, pos, ctx)?;
                let piece = graded_piece(&g, *n);
                let vars = g.ambient().poly_ring().clone();
                let gens: Vec<Out> = g
                    .monomials_of_degree(*n)
                    .into_iter()
                    .map(|m| Out::str(Polynomial::from_terms(&vars, vec![(m, vars.field().one())])))
                    .collect();
                let mut entries = vec![("generators", Out::List(gens))];
                entries.extend(module_entries(&piece));
                Out::map(entries)
            }
            Command::Closure(g, jc) => {
                let g = self.algebra(g, pos, ctx)?;
                let jc = self.ideal_in(jc, g.base(), ctx)?;
                algebra_out(&closure_of_preimage(&g, &jc).map_err(err)?)
            }
            Command::Nash { module, rank, minus } => {
                let m = self.module(module)?;
                let jc = self.ideal_in(minus, m.ring(), ctx)?;
                let n = nash_transform(&m, *rank, &jc).map_err(err)?;
                Out::map(vec![
                    ("variables", Out::Str(n.algebra.t_names().join(", "))),
                    ("ideal", Out::str(n.algebra.ideal())),
                    ("charts", charts_out(&n.charts)),
                ])
            }
            Command::Dense { ring, minus } => {
                let r = self.ring(ring)?;
                let rep = schematically_dense(&self.ideal_in(minus, &r, ctx)?);
                let mut entries = vec![("dense", Out::Bool(rep.dense))];
                if let Some(w) = rep.witness {
                    entries.push(("witness", Out::str(w)));
                }
                Out::map(entries)
            }
            Command::Assof { module, primes } => {
                let m = self.module(module)?;
                let ps = primes.iter().map(|p| self.ideal_in(p, m.ring(), ctx)).collect::<Result<Vec<_>, _>>()?;
                let rep = assofrees_check(&m, &ps).map_err(err)?;
                let rows = ps
                    .iter()
                    .zip(&rep.per_prime)
                    .map(|(p, &ok)| Out::map(vec![("prime", Out::str(p)), ("holds", Out::Bool(ok))]))
                    .collect();
                Out::map(vec![("primes", Out::List(rows)), ("predicts_dense", Out::Bool(rep.aggregate))])
            }
            Command::Compare { module, via } => {
                let rep = compare_base_change(&self.module(module)?, &self.map(via)?).map_err(err)?;
                let mut entries = vec![
                    ("ring", Out::str(rep.left.ambient())),
                    ("left", Out::str(rep.left.ideal())),
                    ("right", Out::str(rep.right.ideal())),
                ];
                match rep.outcome {
                    BaseChangeComparison::Surjection => entries.push(("result", Out::str("surjection"))),
                    BaseChangeComparison::NoCanonicalMap { witness } => {
                        entries.push(("result", Out::str("no canonical map")));
                        entries.push(("witness", Out::str(witness)));
                    }
                }
                Out::map(entries)
            }
            Command::Inject { module, via } => {
                let ext = self.flat_extension(via, pos, ctx)?;
                let ok = check_injectivity_flat(&self.module(module)?, &ext).map_err(err)?;
                Out::map(vec![("injective", Out::Bool(ok)), ("flatness", Out::Str(flatness_text(&ext)))])
            }
            Command::Hom(a, b) => hom_out(&hom_module(&self.module(a)?, &self.module(b)?).map_err(err)?),
            Command::Dual(m) => hom_out(&dual(&self.module(m)?).map_err(err)?),
            Command::Ann(m) => Out::map(vec![("ideal", Out::str(annihilator(&self.module(m)?)))]),
            Command::Ass { module, prime } => {
                let m = self.module(module)?;
                let p = self.ideal_in(prime, m.ring(), ctx)?;
                Out::map(vec![("associated", Out::Bool(ass_membership(&p, &m).map_err(err)?))])
            }
            Command::Show(n) => {
                let v = self.lookup(n)?;
                match v {
                    Value::Module(m) => Out::map(module_entries(m)),
                    Value::Algebra(g) => algebra_out(g),
                    other => Out::map(vec![("value", Out::str(other))]),
                }
            }
            Command::Verify => {
                let checks = crate::verify::run_all();
                let failed = checks.iter().any(|c| !c.passed);
                let rows = checks
                    .iter()
                    .map(|c| {
                        let mut e = vec![("check", Out::str(&c.name)), ("passed", Out::Bool(c.passed))];
                        if !c.passed {
                            e.push(("expected", Out::str(&c.expected)));
                            e.push(("found", Out::str(&c.found)));
                        }
                        Out::map(e)
                    })
                    .collect();
                return Ok((Out::map(vec![("checks", Out::List(rows)), ("all_passed", Out::Bool(!failed))]), failed));
            }
        };
        Ok((out, false))
    }
}

fn flatness_text(ext: &FlatExtension) -> String {
    match &ext.flatness {
        Flatness::Asserted => "asserted".to_string(),
        Flatness::PrincipalLocalization(f) => format!("principal localization at {f}"),
    }
}

fn module_entries(m: &FPModule) -> Vec<(&'static str, Out)> {
    let min = m.minimized();
    let mut e = vec![("module", Out::str(m))];
    if min.to_string() != m.to_string() {
        e.push(("minimal", Out::str(min)));
    }
    e
}

fn algebra_out(g: &GradedAlgebra) -> Out {
    Out::map(vec![
        ("ring", Out::str(g.base())),
        ("variables", Out::Str(g.t_names().join(", "))),
        ("ideal", Out::str(g.ideal())),
    ])
}

fn charts_out(charts: &[ProjChart]) -> Out {
    Out::List(
        charts
            .iter()
            .map(|c| {
                Out::map(vec![
                    ("chart", Out::Int(c.index as i64 + 1)),
                    ("variables", Out::Str(c.chart_vars().join(", "))),
                    ("ideal", Out::str(&c.ideal)),
                    ("empty", Out::Bool(c.is_empty())),
                ])
            })
            .collect(),
    )
}

fn hom_out(h: &HomModule) -> Out {
    let mut e = module_entries(&h.module);
    e.push(("generators", Out::List(h.maps.iter().map(|m| Out::str(m.matrix())).collect())));
    Out::map(e)
}

fn eval_all(es: &[Expr], ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>, ScriptError> {
    es.iter().map(|e| eval(e, ring)).collect()
}

fn int_poly(n: &BigInt, ring: &Arc<PolyRing>) -> Polynomial {
    let c = ring.field().from_rational(&BigRational::from_integer(n.clone())).expect("integers embed");
    ring.constant(c)
}

/// Evaluates an expression in `ring`.
pub fn eval(e: &Expr, ring: &Arc<PolyRing>) -> Result<Polynomial, ScriptError> {
    Ok(match e {
        Expr::Int(n) => int_poly(n, ring),
        Expr::Var(n) => ring
            .var_named(&n.text)
            .map_err(|source| ScriptError::Engine { pos: n.pos, context: "polynomial".into(), source })?,
        Expr::Neg(a) => eval(a, ring)?.neg(),
        Expr::Add(a, b) => &eval(a, ring)? + &eval(b, ring)?,
        Expr::Sub(a, b) => &eval(a, ring)? - &eval(b, ring)?,
        Expr::Mul(a, b) => &eval(a, ring)? * &eval(b, ring)?,
        Expr::Div(a, d, pos) => {
            let inv = BigRational::new(BigInt::from(1), d.clone());
            let c = ring
                .field()
                .from_rational(&inv)
                .map_err(|source| ScriptError::Engine { pos: *pos, context: "polynomial".into(), source })?;
            eval(a, ring)?.scale(&c)
        }
        Expr::Pow(a, k) => eval(a, ring)?.pow(*k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "ring A = QQ[x] / (x^2);\nmodule M = coker A [[x]];\nrees M;\n";

    #[test]
    fn rees_block() {
        let ex = run_source(EXAMPLE);
        assert!(ex.error.is_none());
        assert_eq!(ex.to_text(), "> rees M\n  ring: QQ[x] / (x^2)\n  variables: T\n  ideal: (x*T, T^2)\n");
        assert_eq!(ex.exit_code(), 0);
    }

    #[test]
    fn charts_of_inline_rees() {
        let ex = run_source("ring A = QQ[x,y]; module M = image A [[x, y]]; charts (rees M);");
        let charts = ex.blocks[0].body.get("charts").unwrap();
        match charts {
            Out::List(cs) => {
                assert_eq!(cs.len(), 2);
                assert_eq!(cs[0].get("ideal").unwrap().as_str(), Some("(x*u2 - y)"));
            }
            _ => panic!("charts list"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let ex = run_source("ring A = QQ[x];\nideal I = A (y);");
        assert_eq!(ex.exit_code(), 1);
        assert_eq!(ex.error.unwrap().to_string(), "2:14: polynomial: unknown variable `y`");
    }

    #[test]
    fn flatness_must_be_visible() {
        let src = "ring A = QQ[x]; ring B = QQ[x,y]; map f : A -> B { x -> x }; module M = free A 1; inject M via f;";
        assert_eq!(run_source(src).exit_code(), 1);
        let asserted = src.replace("inject", "assume flat f; inject");
        let ex = run_source(&asserted);
        assert!(ex.error.is_none(), "{:?}", ex.error);
        assert_eq!(ex.blocks[0].body.get("flatness").unwrap().as_str(), Some("asserted"));
    }

    #[test]
    fn json_leaves_are_canonical_strings() {
        let ex = run_source(EXAMPLE);
        assert_eq!(ex.to_json()["results"][0]["output"]["ideal"], "(x*T, T^2)");
    }
}
