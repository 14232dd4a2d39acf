//! Lexer and recursive-descent parser for reeskit scripts.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::*;
use super::ScriptError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
    offset: usize,
}

const PUNCT: [&str; 17] = ["->", ";", "=", "[", "]", "(", ")", "{", "}", ",", "+", "-", "*", "^", "/", ":", "."];

fn lex(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1).map(|x| x.1) == Some('/')) {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), pos, offset: off });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), pos, offset: off });
            continue;
        }
        let rest = &src[off..];
        match PUNCT.iter().find(|p| rest.starts_with(**p)) {
            Some(p) => {
                out.push(Token { tok: Tok::Punct(p), pos, offset: off });
                col += p.len();
                i += p.len();
            }
            None => return Err(ScriptError::syntax(pos, format!("unexpected character '{c}'"))),
        }
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col }, offset: src.len() });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ring,
    Ideal,
    Module,
    Map,
    Algebra,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::Algebra => "algebra",
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    at: usize,
    names: HashMap<String, Kind>,
}

/// Names declared so far, carried across incremental parses.
#[derive(Debug, Clone, Default)]
pub struct Declared {
    names: HashMap<String, Kind>,
}

/// Parses a whole script. Names must be declared before use and only once.
pub fn parse(src: &str) -> Result<Script, ScriptError> {
    parse_incremental(src, &mut Declared::default())
}

/// Parses `src` in the context of earlier declarations; `declared` is only
/// updated when the whole input parses.
pub fn parse_incremental(src: &str, declared: &mut Declared) -> Result<Script, ScriptError> {
    let mut p = Parser { src, toks: lex(src)?, at: 0, names: declared.names.clone() };
    let mut items = Vec::new();
    while !p.is_eof() {
        items.push(p.item()?);
    }
    declared.names = p.names;
    Ok(Script { items })
}

/// Parses a comma-separated polynomial list such as `x*T, T^2` (used to
/// read back printed output).
pub fn parse_expr_list(src: &str) -> Result<Vec<Expr>, ScriptError> {
    let mut p = Parser { src, toks: lex(src)?, at: 0, names: HashMap::new() };
    let mut out = Vec::new();
    if p.is_eof() {
        return Ok(out);
    }
    loop {
        out.push(p.expr()?);
        if !p.eat(",") {
            break;
        }
    }
    if !p.is_eof() {
        return Err(p.unexpected("end of input"));
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn is_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Punct(p) => format!("'{p}'"),
            Tok::Eof => "end of input".to_string(),
        }
    }

    fn unexpected(&self, wanted: &str) -> ScriptError {
        let t = self.peek();
        ScriptError::syntax(t.pos, format!("expected {wanted}, found {}", Self::describe(&t.tok)))
    }

    fn at_punct(&self, p: &str) -> bool {
        matches!(&self.peek().tok, Tok::Punct(q) if *q == p)
    }

    fn at_keyword(&self, k: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == k)
    }

    fn eat(&mut self, p: &str) -> bool {
        if self.at_punct(p) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, p: &str) -> Result<Pos, ScriptError> {
        if self.at_punct(p) {
            Ok(self.bump().pos)
        } else {
            Err(self.unexpected(&format!("'{p}'")))
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), ScriptError> {
        if self.at_keyword(k) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{k}'")))
        }
    }

    fn ident(&mut self) -> Result<Name, ScriptError> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let pos = self.bump().pos;
                Ok(Name { text: s, pos })
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn int(&mut self) -> Result<(BigInt, Pos), ScriptError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                let pos = self.bump().pos;
                Ok((n, pos))
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn small(&mut self) -> Result<usize, ScriptError> {
        let (n, pos) = self.int()?;
        n.to_usize().filter(|&v| v <= 1 << 20).ok_or_else(|| ScriptError::syntax(pos, "integer out of range".into()))
    }

    /// A reference to a previously declared name of kind `kind`.
    fn use_name(&mut self, kind: Kind) -> Result<Name, ScriptError> {
        let n = self.ident()?;
        match self.names.get(&n.text) {
            None => Err(ScriptError::Undefined { pos: n.pos, name: n.text }),
            Some(k) if *k != kind => Err(ScriptError::WrongKind {
                pos: n.pos,
                name: n.text,
                expected: kind.noun(),
                found: k.noun(),
            }),
            Some(_) => Ok(n),
        }
    }

    fn declare(&mut self, name: &Name, kind: Kind) -> Result<(), ScriptError> {
        if self.names.contains_key(&name.text) {
            return Err(ScriptError::Redefined { pos: name.pos, name: name.text.clone() });
        }
        self.names.insert(name.text.clone(), kind);
        Ok(())
    }

    fn item(&mut self) -> Result<Item, ScriptError> {
        let start = self.peek().clone();
        let head = match &start.tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.unexpected("a declaration or command")),
        };
        let kind = match head.as_str() {
            "ring" | "ideal" | "module" | "map" | "algebra" => self.decl(&head)?,
            "assume" => {
                self.bump();
                self.keyword("flat")?;
                ItemKind::AssumeFlat(self.use_name(Kind::Map)?)
            }
            _ => ItemKind::Command(self.command()?),
        };
        let end = self.peek().offset;
        self.expect(";")?;
        let source = self.src[start.offset..end].split_whitespace().collect::<Vec<_>>().join(" ");
        Ok(Item { pos: start.pos, source, kind })
    }

    fn decl(&mut self, head: &str) -> Result<ItemKind, ScriptError> {
        self.bump();
        let name = self.ident()?;
        let (decl, kind) = match head {
            "ring" => {
                self.expect("=")?;
                (self.ring_decl()?, Kind::Ring)
            }
            "ideal" => {
                self.expect("=")?;
                let ring = self.use_name(Kind::Ring)?;
                let gens = self.paren_list()?;
                (Decl::Ideal { ring, gens }, Kind::Ideal)
            }
            "module" => {
                self.expect("=")?;
                (Decl::Module(self.mod_expr()?), Kind::Module)
            }
            "map" => {
                self.expect(":")?;
                let source = self.use_name(Kind::Ring)?;
                self.expect("->")?;
                let target = self.use_name(Kind::Ring)?;
                self.expect("{")?;
                let mut images = Vec::new();
                if !self.at_punct("}") {
                    loop {
                        let v = self.ident()?;
                        self.expect("->")?;
                        images.push((v, self.expr()?));
                        if !self.eat(",") {
                            break;
                        }
                    }
                }
                self.expect("}")?;
                (Decl::Map { source, target, images }, Kind::Map)
            }
            _ => {
                self.expect("=")?;
                (Decl::Algebra(self.alg_expr()?), Kind::Algebra)
            }
        };
        self.declare(&name, kind)?;
        Ok(ItemKind::Decl { name, decl })
    }

    fn ring_decl(&mut self) -> Result<Decl, ScriptError> {
        let f = self.ident()?;
        let field = match f.text.as_str() {
            "QQ" => FieldSpec::Rational,
            "GF" => {
                self.expect("(")?;
                let (p, pos) = self.int()?;
                self.expect(")")?;
                let p = p.to_u64().ok_or_else(|| ScriptError::syntax(pos, "modulus out of range".into()))?;
                FieldSpec::Prime(p, pos)
            }
            _ => return Err(ScriptError::syntax(f.pos, format!("unknown field '{}'", f.text))),
        };
        self.expect("[")?;
        let mut vars = Vec::new();
        if !self.at_punct("]") {
            loop {
                vars.push(self.ident()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect("]")?;
        let relations = if self.eat("/") { self.paren_list()? } else { Vec::new() };
        let order = if self.at_keyword("with") {
            self.bump();
            let o = self.ident()?;
            match o.text.as_str() {
                "lex" => OrderSpec::Lex,
                "degrevlex" => OrderSpec::DegRevLex,
                _ => return Err(ScriptError::syntax(o.pos, format!("unknown order '{}'", o.text))),
            }
        } else {
            OrderSpec::DegRevLex
        };
        Ok(Decl::Ring { field, vars, relations, order })
    }

    fn paren_list(&mut self) -> Result<Vec<Expr>, ScriptError> {
        self.expect("(")?;
        let mut out = Vec::new();
        if !self.at_punct(")") {
            loop {
                out.push(self.expr()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        Ok(out)
    }

    fn matrix(&mut self) -> Result<(Vec<Vec<Expr>>, Pos), ScriptError> {
        let pos = self.expect("[")?;
        let mut rows: Vec<Vec<Expr>> = Vec::new();
        if !self.at_punct("]") {
            loop {
                let rpos = self.expect("[")?;
                let mut row = Vec::new();
                if !self.at_punct("]") {
                    loop {
                        row.push(self.expr()?);
                        if !self.eat(",") {
                            break;
                        }
                    }
                }
                self.expect("]")?;
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(ScriptError::Ragged { pos: rpos, expected: first.len(), found: row.len() });
                    }
                }
                rows.push(row);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect("]")?;
        Ok((rows, pos))
    }

    fn ideal_ref(&mut self) -> Result<IdealRef, ScriptError> {
        if self.at_punct("(") {
            let pos = self.peek().pos;
            Ok(IdealRef::Inline(self.paren_list()?, pos))
        } else {
            Ok(IdealRef::Named(self.use_name(Kind::Ideal)?))
        }
    }

    fn via(&mut self) -> Result<Option<Name>, ScriptError> {
        if self.at_keyword("via") {
            self.bump();
            Ok(Some(self.use_name(Kind::Map)?))
        } else {
            Ok(None)
        }
    }

    fn required_via(&mut self) -> Result<Name, ScriptError> {
        self.keyword("via")?;
        self.use_name(Kind::Map)
    }

    fn mod_expr(&mut self) -> Result<ModExpr, ScriptError> {
        let head = self.ident()?;
        Ok(match head.text.as_str() {
            "coker" => {
                let ring = self.use_name(Kind::Ring)?;
                let (rows, pos) = self.matrix()?;
                ModExpr::Coker { ring, rows, pos }
            }
            "image" => {
                let ring = self.use_name(Kind::Ring)?;
                let (rows, pos) = self.matrix()?;
                ModExpr::Image { ring, rows, pos }
            }
            "free" => {
                let ring = self.use_name(Kind::Ring)?;
                ModExpr::Free { ring, rank: self.small()? }
            }
            "quotient" => {
                let ring = self.use_name(Kind::Ring)?;
                ModExpr::Quotient { ring, ideal: self.ideal_ref()? }
            }
            "tl" => {
                let module = self.use_name(Kind::Module)?;
                ModExpr::Tl { module, via: self.via()? }
            }
            "dual" => ModExpr::Dual(self.use_name(Kind::Module)?),
            "wedge" => {
                let m = self.use_name(Kind::Module)?;
                ModExpr::Wedge(m, self.small()?)
            }
            "base" => {
                let module = self.use_name(Kind::Module)?;
                ModExpr::Base { module, map: self.required_via()? }
            }
            "hom" => {
                let a = self.use_name(Kind::Module)?;
                ModExpr::Hom(a, self.use_name(Kind::Module)?)
            }
            "sum" => {
                let a = self.use_name(Kind::Module)?;
                ModExpr::Sum(a, self.use_name(Kind::Module)?)
            }
            "piece" => {
                let g = self.alg_ref()?;
                ModExpr::Piece(g, self.small()? as u32)
            }
            _ => return Err(ScriptError::syntax(head.pos, format!("unknown module expression '{}'", head.text))),
        })
    }

    fn alg_expr(&mut self) -> Result<AlgExpr, ScriptError> {
        let head = self.ident()?;
        Ok(match head.text.as_str() {
            "rees" => AlgExpr::Rees(self.use_name(Kind::Module)?),
            "sym" => AlgExpr::Sym(self.use_name(Kind::Module)?),
            "symtl" => AlgExpr::SymTl(self.use_name(Kind::Module)?),
            "closure" => {
                let g = self.alg_ref()?;
                self.keyword("minus")?;
                AlgExpr::Closure(g, self.ideal_ref()?)
            }
            _ => return Err(ScriptError::syntax(head.pos, format!("unknown algebra expression '{}'", head.text))),
        })
    }

    fn alg_ref(&mut self) -> Result<AlgRef, ScriptError> {
        if self.eat("(") {
            let e = self.alg_expr()?;
            self.expect(")")?;
            Ok(AlgRef::Inline(Box::new(e)))
        } else {
            Ok(AlgRef::Named(self.use_name(Kind::Algebra)?))
        }
    }

    fn command(&mut self) -> Result<Command, ScriptError> {
        let head = self.ident()?;
        Ok(match head.text.as_str() {
            "gb" => {
                let n = self.ident()?;
                match self.names.get(&n.text) {
                    Some(Kind::Ideal) => Command::Gb(IdealTarget::Named(n)),
                    Some(Kind::Ring) => Command::Gb(IdealTarget::Inline { ring: n, gens: self.paren_list()? }),
                    Some(k) => {
                        return Err(ScriptError::WrongKind { pos: n.pos, name: n.text, expected: "ideal", found: k.noun() })
                    }
                    None => return Err(ScriptError::Undefined { pos: n.pos, name: n.text }),
                }
            }
            "rees" => Command::Rees(self.use_name(Kind::Module)?),
            "sym" => Command::Sym(self.use_name(Kind::Module)?),
            "versal" => Command::Versal(self.use_name(Kind::Module)?),
            "tl" => {
                let module = self.use_name(Kind::Module)?;
                Command::Tl { module, via: self.via()? }
            }
            "algtl" => Command::Algtl(self.use_name(Kind::Module)?),
            "blowup" => Command::Blowup(self.use_name(Kind::Module)?),
            "charts" => Command::Charts(self.alg_ref()?),
            "empty" => Command::Empty(self.alg_ref()?),
            "piece" => {
                let g = self.alg_ref()?;
                Command::Piece(g, self.small()? as u32)
            }
            "closure" => {
                let g = self.alg_ref()?;
                self.keyword("minus")?;
                Command::Closure(g, self.ideal_ref()?)
            }
            "nash" => {
                let module = self.use_name(Kind::Module)?;
                let rank = self.small()?;
                self.keyword("minus")?;
                Command::Nash { module, rank, minus: self.ideal_ref()? }
            }
            "dense" => {
                let ring = self.use_name(Kind::Ring)?;
                self.keyword("minus")?;
                Command::Dense { ring, minus: self.ideal_ref()? }
            }
            "assof" => {
                let module = self.use_name(Kind::Module)?;
                self.keyword("primes")?;
                let mut primes = Vec::new();
                loop {
                    primes.push(self.ideal_ref()?);
                    if !self.eat(",") {
                        break;
                    }
                }
                Command::Assof { module, primes }
            }
            "compare" => {
                let module = self.use_name(Kind::Module)?;
                Command::Compare { module, via: self.required_via()? }
            }
            "inject" => {
                let module = self.use_name(Kind::Module)?;
                Command::Inject { module, via: self.required_via()? }
            }
            "hom" => {
                let a = self.use_name(Kind::Module)?;
                Command::Hom(a, self.use_name(Kind::Module)?)
            }
            "dual" => Command::Dual(self.use_name(Kind::Module)?),
            "ann" => Command::Ann(self.use_name(Kind::Module)?),
            "ass" => {
                let module = self.use_name(Kind::Module)?;
                self.keyword("prime")?;
                Command::Ass { module, prime: self.ideal_ref()? }
            }
            "show" => {
                let n = self.ident()?;
                if !self.names.contains_key(&n.text) {
                    return Err(ScriptError::Undefined { pos: n.pos, name: n.text });
                }
                Command::Show(n)
            }
            "verify" => Command::Verify,
            _ => return Err(ScriptError::syntax(head.pos, format!("unknown command '{}'", head.text))),
        })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = if self.eat("-") {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat("+");
            self.term()?
        };
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = self.power()?;
        loop {
            if self.eat("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.at_punct("/") {
                let pos = self.bump().pos;
                let (d, dpos) = self.int()?;
                if d.is_zero() {
                    return Err(ScriptError::syntax(dpos, "division by zero".into()));
                }
                lhs = Expr::Div(Box::new(lhs), d, pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ScriptError> {
        let base = self.atom()?;
        if self.eat("^") {
            let (e, pos) = self.int()?;
            let e = e.to_u32().filter(|&v| v <= 10_000).ok_or_else(|| ScriptError::syntax(pos, "exponent out of range".into()))?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ScriptError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(_) => Ok(Expr::Var(self.ident()?)),
            Tok::Punct("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Punct("-") => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.power()?)))
            }
            _ => Err(self.unexpected("a polynomial")),
        }
    }
}
