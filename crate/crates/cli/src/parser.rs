//! Statements of the script language, checked against the names declared
//! on earlier lines.

use std::collections::HashMap;
use std::fmt;

use crate::lexer::{tokenize_line, Token, TokenKind};
use crate::ParseError;

/// A polynomial expression over the variables of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Ring,
    Ideal,
    Quotient,
    Module,
    Map,
    Submodule,
    Algebra,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Quotient => "quotient",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::Submodule => "submodule",
            Kind::Algebra => "algebra",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderDecl {
    Lex,
    GrevLex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealDef {
    Gens { ring: String, gens: Vec<Expr> },
    Power { ideal: String, n: u32 },
    Sum(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    /// Cokernel of the relation vectors, one per inner list.
    Coker { quotient: String, relations: Vec<Vec<Expr>> },
    /// Submodule of `R^rank` spanned by the listed vectors.
    Submodule { quotient: String, rank: usize, gens: Vec<Vec<Expr>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDef {
    Rees(String),
    ReesOf(String),
    Classical { ideal: String, quotient: String },
    Sym(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    Ring {
        field: FieldDecl,
        vars: Vec<String>,
        order: Option<OrderDecl>,
    },
    Ideal(IdealDef),
    Quotient {
        ring: String,
        ideal: String,
    },
    Module(ModuleDef),
    Map {
        module: String,
        rank: usize,
        rows: Vec<Vec<Expr>>,
    },
    Span {
        module: String,
        rows: Vec<Vec<Expr>>,
    },
    Algebra(AlgebraDef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub kind: Kind,
    pub def: Definition,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Rees(String),
    ReesOf(String),
    Classical { ideal: String, quotient: String },
    Compare(String, String),
    Kdim(String),
    Hilb(String, u64),
    Krull(String),
    Spread { module: String, ideal: String },
    MinGens { module: String, ideal: String },
    Reduction { u: String, module: String, maxdeg: Option<u32> },
    Integral { u: String, l: String, module: String, maxdeg: Option<u32> },
    NilKernel { module: String, map: String },
    BaseChange { module: String, fresh: Vec<String> },
    Lemma16 { module: String, split: usize, deg: u32 },
    Versal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    /// The source line with comments removed and whitespace collapsed.
    pub echo: String,
    pub kind: CommandKind,
    pub line: usize,
}

/// A parsed and name-checked script.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub bindings: Vec<Binding>,
    pub commands: Vec<Command>,
}

#[derive(Clone, Debug)]
struct Symbol {
    kind: Kind,
    /// Ambient polynomial ring.
    ring: String,
    /// Parent module of a map or span.
    module: Option<String>,
    /// Number of generators of a module.
    ngens: usize,
    /// Whether a module is given as a submodule of `R^1`.
    ideal_like: bool,
}

#[derive(Default)]
struct Scope {
    symbols: HashMap<String, Symbol>,
    ring_vars: HashMap<String, Vec<String>>,
    last_ring: Option<String>,
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(t) => ParseError {
                line: t.line,
                col: t.col,
                token: t.kind.to_string(),
                message: message.into(),
            },
            None => ParseError {
                line: self.line,
                col: self.end_col,
                token: "end of line".into(),
                message: message.into(),
            },
        }
    }

    fn error_at(&self, t: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: t.line,
            col: t.col,
            token: t.kind.to_string(),
            message: message.into(),
        }
    }


    fn at(&self, kind: &TokenKind) -> bool {
        self.peek().is_some_and(|t| &t.kind == kind)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.at(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{kind}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<&'a Token, ParseError> {
        match self.peek() {
            Some(t @ Token { kind: TokenKind::Ident(_), .. }) => {
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.error_here(format!("expected {what}"))),
        }
    }

    fn ident_text(&mut self, what: &str) -> Result<String, ParseError> {
        let t = self.ident(what)?;
        Ok(ident_of(t).to_string())
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(s), .. }) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error_here(format!("expected `{word}`"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Int(n), .. }) => {
                self.pos += 1;
                Ok(*n)
            }
            _ => Err(self.error_here(format!("expected {what}"))),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let t = self.peek();
        let n = self.int(what)?;
        u32::try_from(n).map_err(|_| self.error_at(t.unwrap(), format!("{what} out of range")))
    }

    /// `word = n`
    fn option(&mut self, word: &str) -> Result<u32, ParseError> {
        self.keyword(word)?;
        self.expect(TokenKind::Equals)?;
        self.small_int("an integer")
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error_here("unexpected token after statement")),
        }
    }
}

fn ident_of(t: &Token) -> &str {
    match &t.kind {
        TokenKind::Ident(s) => s,
        _ => unreachable!("identifier token"),
    }
}

impl Scope {
    fn lookup(&self, c: &Cursor, t: &Token, allowed: &[Kind]) -> Result<Symbol, ParseError> {
        let name = ident_of(t);
        let Some(sym) = self.symbols.get(name) else {
            return Err(c.error_at(t, format!("unknown name `{name}`")));
        };
        if !allowed.contains(&sym.kind) {
            let expected: Vec<String> = allowed.iter().map(|k| k.to_string()).collect();
            return Err(c.error_at(
                t,
                format!("`{name}` is a {}, expected {}", sym.kind, expected.join(" or ")),
            ));
        }
        Ok(sym.clone())
    }

    fn name(&self, c: &mut Cursor, allowed: &[Kind]) -> Result<(String, Symbol), ParseError> {
        let what = allowed.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" or ");
        let t = c.ident(&format!("a {what} name"))?;
        let sym = self.lookup(c, t, allowed)?;
        Ok((ident_of(t).to_string(), sym))
    }

    fn poly(&self, c: &mut Cursor, ring: &str) -> Result<Expr, ParseError> {
        let vars = &self.ring_vars[ring];
        parse_sum(c, vars, ring)
    }

    fn poly_list(&self, c: &mut Cursor, ring: &str, close: TokenKind) -> Result<Vec<Expr>, ParseError> {
        let mut out = Vec::new();
        if c.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(self.poly(c, ring)?);
            if c.eat(&close) {
                return Ok(out);
            }
            c.expect(TokenKind::Comma)?;
        }
    }

    /// `[[p, ...], ...]` with every row of length `width` when given.
    fn matrix(&self, c: &mut Cursor, ring: &str, width: Option<usize>) -> Result<Vec<Vec<Expr>>, ParseError> {
        c.expect(TokenKind::LBracket)?;
        let mut rows = Vec::new();
        let mut width = width;
        loop {
            let open = c.peek();
            c.expect(TokenKind::LBracket)?;
            let row = self.poly_list(c, ring, TokenKind::RBracket)?;
            match width {
                Some(w) if w != row.len() => {
                    return Err(c.error_at(open.unwrap(), format!("row of length {}, expected {w}", row.len())))
                }
                None if row.is_empty() => return Err(c.error_at(open.unwrap(), "empty row")),
                _ => width = Some(row.len()),
            }
            rows.push(row);
            if c.eat(&TokenKind::RBracket) {
                return Ok(rows);
            }
            c.expect(TokenKind::Comma)?;
        }
    }
}

fn parse_sum(c: &mut Cursor, vars: &[String], ring: &str) -> Result<Expr, ParseError> {
    let mut e = parse_product(c, vars, ring)?;
    loop {
        if c.eat(&TokenKind::Plus) {
            e = Expr::Add(Box::new(e), Box::new(parse_product(c, vars, ring)?));
        } else if c.eat(&TokenKind::Minus) {
            e = Expr::Sub(Box::new(e), Box::new(parse_product(c, vars, ring)?));
        } else {
            return Ok(e);
        }
    }
}

fn parse_product(c: &mut Cursor, vars: &[String], ring: &str) -> Result<Expr, ParseError> {
    let mut e = parse_unary(c, vars, ring)?;
    while c.eat(&TokenKind::Star) {
        e = Expr::Mul(Box::new(e), Box::new(parse_unary(c, vars, ring)?));
    }
    Ok(e)
}

fn parse_unary(c: &mut Cursor, vars: &[String], ring: &str) -> Result<Expr, ParseError> {
    if c.eat(&TokenKind::Minus) {
        return Ok(Expr::Neg(Box::new(parse_unary(c, vars, ring)?)));
    }
    let base = parse_atom(c, vars, ring)?;
    if c.eat(&TokenKind::Caret) {
        let n = c.small_int("an exponent")?;
        return Ok(Expr::Pow(Box::new(base), n));
    }
    Ok(base)
}

fn parse_atom(c: &mut Cursor, vars: &[String], ring: &str) -> Result<Expr, ParseError> {
    let Some(t) = c.peek() else {
        return Err(c.error_here("expected a polynomial"));
    };
    match &t.kind {
        TokenKind::Int(n) => {
            c.pos += 1;
            Ok(Expr::Int(*n))
        }
        TokenKind::Ident(name) => match vars.iter().position(|v| v == name) {
            Some(i) => {
                c.pos += 1;
                Ok(Expr::Var(i))
            }
            None => Err(c.error_at(t, format!("unknown variable `{name}` in ring {ring}"))),
        },
        TokenKind::LParen => {
            c.pos += 1;
            let e = parse_sum(c, vars, ring)?;
            c.expect(TokenKind::RParen)?;
            Ok(e)
        }
        _ => Err(c.error_here("expected a polynomial")),
    }
}

const ALGEBRAS: [Kind; 3] = [Kind::Module, Kind::Map, Kind::Algebra];
const GRADED: [Kind; 4] = [Kind::Module, Kind::Map, Kind::Algebra, Kind::Quotient];

fn echo_of(text: &str) -> String {
    let code = text.split('#').next().unwrap_or("");
    code.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Parses a whole script, resolving every name against earlier lines.
pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let mut scope = Scope::default();
    let mut script = Script::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens = tokenize_line(raw, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut c = Cursor {
            tokens: &tokens,
            pos: 0,
            line,
            end_col: raw.chars().count() + 1,
        };
        let head = c.ident("a statement keyword")?;
        match ident_of(head) {
            "ring" | "ideal" | "quotient" | "module" | "map" | "submodule" | "algebra" => {
                let b = parse_binding(&mut c, &mut scope, ident_of(head), line)?;
                script.bindings.push(b);
            }
            word => {
                let kind = parse_command(&mut c, &scope, word, head)?;
                script.commands.push(Command {
                    echo: echo_of(raw),
                    kind,
                    line,
                });
            }
        }
        c.finish()?;
    }
    Ok(script)
}

fn parse_binding(c: &mut Cursor, scope: &mut Scope, keyword: &str, line: usize) -> Result<Binding, ParseError> {
    let name_tok = c.ident("a name")?;
    let name = ident_of(name_tok).to_string();
    if scope.symbols.contains_key(&name) {
        return Err(c.error_at(name_tok, format!("`{name}` is already defined")));
    }
    c.expect(TokenKind::Equals)?;
    let (kind, def, symbol) = match keyword {
        "ring" => {
            c.keyword("poly")?;
            c.expect(TokenKind::LParen)?;
            let field = parse_field(c)?;
            c.expect(TokenKind::Comma)?;
            c.expect(TokenKind::LBracket)?;
            let mut vars: Vec<String> = Vec::new();
            if !c.eat(&TokenKind::RBracket) {
                loop {
                    let t = c.ident("a variable name")?;
                    let v = ident_of(t).to_string();
                    if vars.contains(&v) {
                        return Err(c.error_at(t, format!("duplicate variable `{v}`")));
                    }
                    vars.push(v);
                    if c.eat(&TokenKind::RBracket) {
                        break;
                    }
                    c.expect(TokenKind::Comma)?;
                }
            }
            let mut order = None;
            if c.eat(&TokenKind::Comma) {
                c.keyword("order")?;
                c.expect(TokenKind::Equals)?;
                let t = c.ident("`lex` or `grevlex`")?;
                order = Some(match ident_of(t) {
                    "lex" => OrderDecl::Lex,
                    "grevlex" => OrderDecl::GrevLex,
                    _ => return Err(c.error_at(t, "expected `lex` or `grevlex`")),
                });
            }
            c.expect(TokenKind::RParen)?;
            scope.ring_vars.insert(name.clone(), vars.clone());
            scope.last_ring = Some(name.clone());
            (
                Kind::Ring,
                Definition::Ring { field, vars, order },
                symbol(Kind::Ring, &name),
            )
        }
        "ideal" => {
            let t = c.ident("`ideal`, `power` or `sum`")?;
            c.expect(TokenKind::LParen)?;
            let (def, ring) = match ident_of(t) {
                "ideal" => {
                    let Some(ring) = scope.last_ring.clone() else {
                        return Err(c.error_at(t, "no ring declared before this ideal"));
                    };
                    let gens = scope.poly_list(c, &ring, TokenKind::RParen)?;
                    (IdealDef::Gens { ring: ring.clone(), gens }, ring)
                }
                "power" => {
                    let (base, sym) = scope.name(c, &[Kind::Ideal])?;
                    c.expect(TokenKind::Comma)?;
                    let n = c.small_int("an exponent")?;
                    c.expect(TokenKind::RParen)?;
                    (IdealDef::Power { ideal: base, n }, sym.ring)
                }
                "sum" => {
                    let (a, sa) = scope.name(c, &[Kind::Ideal])?;
                    c.expect(TokenKind::Comma)?;
                    let bt = c.ident("an ideal name")?;
                    let sb = scope.lookup(c, bt, &[Kind::Ideal])?;
                    if sb.ring != sa.ring {
                        return Err(c.error_at(bt, format!("ideals over different rings {} and {}", sa.ring, sb.ring)));
                    }
                    c.expect(TokenKind::RParen)?;
                    (IdealDef::Sum(a, ident_of(bt).to_string()), sa.ring)
                }
                _ => return Err(c.error_at(t, "expected `ideal`, `power` or `sum`")),
            };
            (Kind::Ideal, Definition::Ideal(def), symbol(Kind::Ideal, &ring))
        }
        "quotient" => {
            let (ring, _) = scope.name(c, &[Kind::Ring])?;
            c.expect(TokenKind::Slash)?;
            let it = c.ident("an ideal name")?;
            let si = scope.lookup(c, it, &[Kind::Ideal])?;
            if si.ring != ring {
                return Err(c.error_at(it, format!("ideal lives in {}, not {ring}", si.ring)));
            }
            let ideal = ident_of(it).to_string();
            (Kind::Quotient, Definition::Quotient { ring: ring.clone(), ideal }, symbol(Kind::Quotient, &ring))
        }
        "module" => {
            let t = c.ident("`coker` or `submodule`")?;
            let word = ident_of(t);
            if word != "coker" && word != "submodule" {
                return Err(c.error_at(t, "expected `coker` or `submodule`"));
            }
            c.expect(TokenKind::LParen)?;
            let (quotient, sq) = scope.name(c, &[Kind::Quotient])?;
            c.expect(TokenKind::Comma)?;
            let (def, ngens, ideal_like) = if word == "coker" {
                let relations = scope.matrix(c, &sq.ring, None)?;
                let n = relations[0].len();
                (ModuleDef::Coker { quotient, relations }, n, false)
            } else {
                parse_generators(c, scope, quotient, &sq.ring)?
            };
            c.expect(TokenKind::RParen)?;
            let mut s = symbol(Kind::Module, &sq.ring);
            s.ngens = ngens;
            s.ideal_like = ideal_like;
            (Kind::Module, Definition::Module(def), s)
        }
        "map" => {
            c.keyword("map")?;
            c.expect(TokenKind::LParen)?;
            let (module, sm) = scope.name(c, &[Kind::Module])?;
            c.expect(TokenKind::Comma)?;
            let rank = c.option("rank")? as usize;
            c.expect(TokenKind::Comma)?;
            c.keyword("rows")?;
            c.expect(TokenKind::Equals)?;
            let open = c.peek();
            let rows = scope.matrix(c, &sm.ring, Some(rank))?;
            if rows.len() != sm.ngens {
                return Err(c.error_at(
                    open.unwrap(),
                    format!("{} rows for a module with {} generators", rows.len(), sm.ngens),
                ));
            }
            c.expect(TokenKind::RParen)?;
            let mut s = symbol(Kind::Map, &sm.ring);
            s.module = Some(module.clone());
            (Kind::Map, Definition::Map { module, rank, rows }, s)
        }
        "submodule" => {
            c.keyword("span")?;
            c.expect(TokenKind::LParen)?;
            let (module, sm) = scope.name(c, &[Kind::Module])?;
            c.expect(TokenKind::Comma)?;
            let rows = scope.matrix(c, &sm.ring, Some(sm.ngens))?;
            c.expect(TokenKind::RParen)?;
            let mut s = symbol(Kind::Submodule, &sm.ring);
            s.module = Some(module.clone());
            (Kind::Submodule, Definition::Span { module, rows }, s)
        }
        "algebra" => {
            let t = c.ident("`rees`, `rees_of`, `classical` or `sym`")?;
            c.expect(TokenKind::LParen)?;
            let (def, ring) = match ident_of(t) {
                "rees" => {
                    let (m, s) = scope.name(c, &[Kind::Module])?;
                    (AlgebraDef::Rees(m), s.ring)
                }
                "sym" => {
                    let (m, s) = scope.name(c, &[Kind::Module])?;
                    (AlgebraDef::Sym(m), s.ring)
                }
                "rees_of" => {
                    let (g, s) = scope.name(c, &[Kind::Map])?;
                    (AlgebraDef::ReesOf(g), s.ring)
                }
                "classical" => {
                    let (ideal, quotient, ring) = parse_classical(c, scope)?;
                    (AlgebraDef::Classical { ideal, quotient }, ring)
                }
                _ => return Err(c.error_at(t, "expected `rees`, `rees_of`, `classical` or `sym`")),
            };
            c.expect(TokenKind::RParen)?;
            (Kind::Algebra, Definition::Algebra(def), symbol(Kind::Algebra, &ring))
        }
        _ => unreachable!("binding keyword"),
    };
    scope.symbols.insert(name.clone(), symbol);
    Ok(Binding { name, kind, def, line })
}

fn symbol(kind: Kind, ring: &str) -> Symbol {
    Symbol {
        kind,
        ring: ring.to_string(),
        module: None,
        ngens: 0,
        ideal_like: false,
    }
}

fn parse_field(c: &mut Cursor) -> Result<FieldDecl, ParseError> {
    let t = c.ident("`GF(p)` or `QQ`")?;
    match ident_of(t) {
        "QQ" => Ok(FieldDecl::Rationals),
        "GF" => {
            c.expect(TokenKind::LParen)?;
            let p = c.int("a prime")?;
            c.expect(TokenKind::RParen)?;
            Ok(FieldDecl::Prime(p))
        }
        _ => Err(c.error_at(t, "expected `GF(p)` or `QQ`")),
    }
}

/// `[g1, ...]` with polynomials or `[[a, b], ...]` with vectors.
fn parse_generators(
    c: &mut Cursor,
    scope: &Scope,
    quotient: String,
    ring: &str,
) -> Result<(ModuleDef, usize, bool), ParseError> {
    let vectors = c.tokens.get(c.pos + 1).is_some_and(|t| t.kind == TokenKind::LBracket);
    if vectors {
        let rows = scope.matrix(c, ring, None)?;
        let rank = rows[0].len();
        let n = rows.len();
        return Ok((ModuleDef::Submodule { quotient, rank, gens: rows }, n, rank == 1));
    }
    let open = c.peek();
    c.expect(TokenKind::LBracket)?;
    let gens = scope.poly_list(c, ring, TokenKind::RBracket)?;
    if gens.is_empty() {
        return Err(c.error_at(open.unwrap(), "a submodule needs at least one generator"));
    }
    let n = gens.len();
    let gens = gens.into_iter().map(|g| vec![g]).collect();
    Ok((ModuleDef::Submodule { quotient, rank: 1, gens }, n, true))
}

/// `IDEAL in QUOTIENT`
fn parse_classical(c: &mut Cursor, scope: &Scope) -> Result<(String, String, String), ParseError> {
    let (ideal, si) = scope.name(c, &[Kind::Ideal])?;
    c.keyword("in")?;
    let qt = c.ident("a quotient name")?;
    let sq = scope.lookup(c, qt, &[Kind::Quotient])?;
    if sq.ring != si.ring {
        return Err(c.error_at(qt, format!("quotient of {}, but the ideal lives in {}", sq.ring, si.ring)));
    }
    Ok((ideal, ident_of(qt).to_string(), si.ring))
}

fn parse_maxdeg(c: &mut Cursor) -> Result<Option<u32>, ParseError> {
    if c.peek().is_none() {
        return Ok(None);
    }
    Ok(Some(c.option("maxdeg")?))
}

/// A submodule of `module`: a span over it, or an ideal when the module
/// is an ideal.
struct Sub {
    name: String,
    symbol: Symbol,
    token: Token,
}

fn parse_sub(c: &mut Cursor, scope: &Scope) -> Result<Sub, ParseError> {
    let t = c.ident("a submodule or ideal name")?;
    let symbol = scope.lookup(c, t, &[Kind::Submodule, Kind::Ideal])?;
    Ok(Sub {
        name: ident_of(t).to_string(),
        symbol,
        token: t.clone(),
    })
}

fn check_sub(c: &Cursor, scope: &Scope, sub: &Sub, module: &str) -> Result<(), ParseError> {
    let (name, s, t) = (&sub.name, &sub.symbol, &sub.token);
    let m = &scope.symbols[module];
    match s.kind {
        Kind::Submodule if s.module.as_deref() != Some(module) => {
            Err(c.error_at(t, format!("`{name}` spans {}, not {module}", s.module.as_deref().unwrap_or("?"))))
        }
        Kind::Ideal if !m.ideal_like => Err(c.error_at(t, format!("`{module}` is not an ideal, so `{name}` must be a submodule"))),
        Kind::Ideal if s.ring != m.ring => Err(c.error_at(t, format!("`{name}` lives in {}, not {}", s.ring, m.ring))),
        _ => Ok(()),
    }
}

fn parse_command(c: &mut Cursor, scope: &Scope, word: &str, head: &Token) -> Result<CommandKind, ParseError> {
    Ok(match word {
        "rees" => CommandKind::Rees(scope.name(c, &[Kind::Module])?.0),
        "rees_of" => CommandKind::ReesOf(scope.name(c, &[Kind::Map])?.0),
        "versal" => CommandKind::Versal(scope.name(c, &[Kind::Module])?.0),
        "classical" => {
            let (ideal, quotient, _) = parse_classical(c, scope)?;
            CommandKind::Classical { ideal, quotient }
        }
        "compare" => {
            let a = scope.name(c, &ALGEBRAS)?.0;
            let b = scope.name(c, &ALGEBRAS)?.0;
            CommandKind::Compare(a, b)
        }
        "kdim" => CommandKind::Kdim(scope.name(c, &GRADED)?.0),
        "krull" => CommandKind::Krull(scope.name(c, &GRADED)?.0),
        "hilb" => {
            let name = scope.name(c, &GRADED)?.0;
            let d = c.int("a degree")?;
            CommandKind::Hilb(name, d)
        }
        "spread" | "mingens" => {
            let (module, sm) = scope.name(c, &[Kind::Module])?;
            c.keyword("at")?;
            let it = c.ident("an ideal name")?;
            let si = scope.lookup(c, it, &[Kind::Ideal])?;
            if si.ring != sm.ring {
                return Err(c.error_at(it, format!("ideal lives in {}, not {}", si.ring, sm.ring)));
            }
            let ideal = ident_of(it).to_string();
            if word == "spread" {
                CommandKind::Spread { module, ideal }
            } else {
                CommandKind::MinGens { module, ideal }
            }
        }
        "reduction" => {
            let u = parse_sub(c, scope)?;
            c.keyword("in")?;
            let module = scope.name(c, &[Kind::Module])?.0;
            check_sub(c, scope, &u, &module)?;
            let maxdeg = parse_maxdeg(c)?;
            CommandKind::Reduction { u: u.name, module, maxdeg }
        }
        "integral" => {
            let u = parse_sub(c, scope)?;
            let l = parse_sub(c, scope)?;
            c.keyword("in")?;
            let module = scope.name(c, &[Kind::Module])?.0;
            check_sub(c, scope, &u, &module)?;
            check_sub(c, scope, &l, &module)?;
            let maxdeg = parse_maxdeg(c)?;
            CommandKind::Integral {
                u: u.name,
                l: l.name,
                module,
                maxdeg,
            }
        }
        "nilkernel" => {
            let module = scope.name(c, &[Kind::Module])?.0;
            let gt = c.ident("a map name")?;
            let sg = scope.lookup(c, gt, &[Kind::Map])?;
            if sg.module.as_deref() != Some(module.as_str()) {
                return Err(c.error_at(gt, format!("map does not start at `{module}`")));
            }
            CommandKind::NilKernel {
                module,
                map: ident_of(gt).to_string(),
            }
        }
        "basechange" => {
            let module = scope.name(c, &[Kind::Module])?.0;
            c.expect(TokenKind::LBracket)?;
            let mut fresh = Vec::new();
            loop {
                fresh.push(c.ident_text("a variable name")?);
                if c.eat(&TokenKind::RBracket) {
                    break;
                }
                c.expect(TokenKind::Comma)?;
            }
            CommandKind::BaseChange { module, fresh }
        }
        "lemma16" => {
            let mt = c.ident("a module name")?;
            let sm = scope.lookup(c, mt, &[Kind::Module])?;
            let split = c.option("split")? as usize;
            let deg = c.option("deg")?;
            let module = ident_of(mt).to_string();
            if sm.ngens == 0 {
                return Err(c.error_at(mt, "module has no generators"));
            }
            CommandKind::Lemma16 { module, split, deg }
        }
        _ => return Err(c.error_at(head, "unknown statement")),
    })
}
