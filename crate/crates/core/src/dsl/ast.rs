//! Syntax tree of reeskit scripts.

use num_bigint::BigInt;

/// A source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

/// Polynomial expression, evaluated once the ambient ring is known.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var(Name),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by a nonzero integer literal.
    Div(Box<Expr>, BigInt, Pos),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldSpec {
    Rational,
    Prime(u64, Pos),
}

#[derive(Debug, Clone, PartialEq)]
pub enum OrderSpec {
    DegRevLex,
    Lex,
}

/// An ideal: a declared name or an inline generator list whose ring is
/// determined by the surrounding command.
#[derive(Debug, Clone, PartialEq)]
pub enum IdealRef {
    Named(Name),
    Inline(Vec<Expr>, Pos),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModExpr {
    /// Rows of the presentation matrix; its columns are the relations.
    Coker { ring: Name, rows: Vec<Vec<Expr>>, pos: Pos },
    Free { ring: Name, rank: usize },
    /// Submodule of a free module spanned by the matrix columns.
    Image { ring: Name, rows: Vec<Vec<Expr>>, pos: Pos },
    /// `A / I`.
    Quotient { ring: Name, ideal: IdealRef },
    Tl { module: Name, via: Option<Name> },
    Dual(Name),
    Wedge(Name, usize),
    Base { module: Name, map: Name },
    Hom(Name, Name),
    Sum(Name, Name),
    Piece(AlgRef, u32),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgExpr {
    Rees(Name),
    Sym(Name),
    SymTl(Name),
    Closure(AlgRef, IdealRef),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgRef {
    Named(Name),
    Inline(Box<AlgExpr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decl {
    Ring { field: FieldSpec, vars: Vec<Name>, relations: Vec<Expr>, order: OrderSpec },
    Ideal { ring: Name, gens: Vec<Expr> },
    Module(ModExpr),
    Map { source: Name, target: Name, images: Vec<(Name, Expr)> },
    Algebra(AlgExpr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// An ideal name, or a ring with inline generators.
    Gb(IdealTarget),
    Rees(Name),
    Sym(Name),
    Versal(Name),
    Tl { module: Name, via: Option<Name> },
    Algtl(Name),
    Blowup(Name),
    Charts(AlgRef),
    Empty(AlgRef),
    Piece(AlgRef, u32),
    Closure(AlgRef, IdealRef),
    Nash { module: Name, rank: usize, minus: IdealRef },
    Dense { ring: Name, minus: IdealRef },
    Assof { module: Name, primes: Vec<IdealRef> },
    Compare { module: Name, via: Name },
    Inject { module: Name, via: Name },
    Hom(Name, Name),
    Dual(Name),
    Ann(Name),
    Ass { module: Name, prime: IdealRef },
    Show(Name),
    Verify,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdealTarget {
    Named(Name),
    Inline { ring: Name, gens: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ItemKind {
    Decl { name: Name, decl: Decl },
    AssumeFlat(Name),
    Command(Command),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub pos: Pos,
    /// Source text of the item without the trailing `;`, whitespace collapsed.
    pub source: String,
    pub kind: ItemKind,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Script {
    pub items: Vec<Item>,
}
