//! Polynomial system files.
//!
//! ```text
//! # comment
//! ring: x, y, z;
//! order: degrevlex;
//! polys: x*y - x, x^2 - y, 1/2 z^3;
//! expect: dim = 1, deg = 4;
//! ```
//!
//! Variables are listed greatest first. `order` defaults to `degrevlex`;
//! `polys: 0;` declares the zero ideal.
//! `expect` carries optional reference values used by `bench`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use involutive_core::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};
use num_traits::One;

#[derive(Clone, Debug, PartialEq)]
pub struct SystemFile {
    pub ring: Ring,
    pub polys: Vec<Polynomial>,
    pub expect: BTreeMap<String, i64>,
}

impl SystemFile {
    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn names(&self) -> &[String] {
        &self.ring.names
    }

    /// The same system under another monomial ordering.
    pub fn with_order(&self, order: MonomialOrder) -> SystemFile {
        SystemFile {
            ring: Ring::new(self.ring.names.clone(), order),
            polys: self.polys.iter().map(|f| f.reorder(order)).collect(),
            expect: self.expect.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    UnknownOrder(String),
    DuplicateVariable(String),
    DuplicateSection(String),
    MissingSection(&'static str),
    EmptyPolys,
    ZeroPolynomial(usize),
    Io(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the error has no position.
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "{}:{}: ", self.line, self.col)?;
        }
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::UnknownOrder(o) => write!(f, "unknown monomial order `{o}`"),
            ParseErrorKind::DuplicateVariable(v) => write!(f, "variable `{v}` declared twice"),
            ParseErrorKind::DuplicateSection(s) => write!(f, "section `{s}` given twice"),
            ParseErrorKind::MissingSection(s) => write!(f, "missing `{s}` section"),
            ParseErrorKind::EmptyPolys => f.write_str("empty polys section"),
            ParseErrorKind::ZeroPolynomial(i) => write!(f, "polynomial {} is zero", i + 1),
            ParseErrorKind::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Int(s), line: l0, col: c0 });
        } else if ":;,+-*/^()=".contains(c) {
            chars.next();
            col += 1;
            out.push(Token { tok: Tok::Sym(c), line: l0, col: c0 });
        } else {
            return Err(ParseError { line, col, kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError { line, col, kind })
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Ident(s)) | Some(Tok::Int(s)) => format!("`{s}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        self.err(ParseErrorKind::Syntax(format!("expected {msg}, found {found}")))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.syntax(&format!("`{c}`"))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.syntax("a name"),
        }
    }

    fn int(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.syntax("an integer"),
        }
    }

    fn at_section_end(&self) -> bool {
        matches!(self.peek(), None | Some(Tok::Sym(';')))
    }
}

struct ExprCtx<'a> {
    ring: &'a Ring,
}

impl ExprCtx<'_> {
    fn n(&self) -> usize {
        self.ring.names.len()
    }

    fn expr(&self, p: &mut Parser) -> Result<Polynomial, ParseError> {
        let ord = self.ring.order;
        let mut acc = Polynomial::zero();
        let mut first = true;
        loop {
            let neg = if p.eat('-') {
                true
            } else if p.eat('+') || first {
                false
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term(p)?;
            acc = if neg { acc.sub(&t, ord) } else { acc.add(&t, ord) };
        }
    }

    fn starts_factor(p: &Parser) -> bool {
        matches!(p.peek(), Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::Sym('(')))
    }

    fn term(&self, p: &mut Parser) -> Result<Polynomial, ParseError> {
        let ord = self.ring.order;
        let mut acc = self.factor(p)?;
        loop {
            if p.eat('*') {
                acc = acc.mul(&self.factor(p)?, ord);
            } else if p.eat('/') {
                let (line, col) = p.here();
                let d: Coeff = p.int()?.parse().expect("digits");
                if d.is_zero() {
                    return Err(ParseError { line, col, kind: ParseErrorKind::Syntax("division by zero".into()) });
                }
                acc = acc.scale(&(Coeff::ONE / d));
            } else if Self::starts_factor(p) {
                acc = acc.mul(&self.factor(p)?, ord);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&self, p: &mut Parser) -> Result<Polynomial, ParseError> {
        let base = self.atom(p)?;
        if p.eat('^') {
            let (line, col) = p.here();
            let e: u32 = p.int()?.parse().map_err(|_| ParseError {
                line,
                col,
                kind: ParseErrorKind::Syntax("exponent too large".into()),
            })?;
            Ok(base.pow(e, self.n(), self.ring.order))
        } else {
            Ok(base)
        }
    }

    fn atom(&self, p: &mut Parser) -> Result<Polynomial, ParseError> {
        let n = self.n();
        match p.peek().cloned() {
            Some(Tok::Int(s)) => {
                p.pos += 1;
                let c: Coeff = s.parse().expect("digits");
                Ok(if c.is_zero() { Polynomial::zero() } else { Polynomial::constant(c, n) })
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    p.pos += 1;
                    Ok(Polynomial::term(Coeff::one(), Monomial::var(n, i)))
                }
                None => p.err(ParseErrorKind::UnknownVariable(name)),
            },
            Some(Tok::Sym('(')) => {
                p.pos += 1;
                let e = self.expr(p)?;
                p.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                p.pos += 1;
                Ok(self.factor(p)?.neg())
            }
            _ => p.syntax("a number, variable or `(`"),
        }
    }
}

/// Parses a single polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0, end: (1, text.len() + 1) };
    let f = ExprCtx { ring }.expr(&mut p)?;
    if p.peek().is_some() {
        return p.syntax("end of polynomial");
    }
    Ok(f)
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let toks = lex(text)?;
    let last_line = text.lines().count().max(1);
    let last_col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    let mut p = Parser { toks: &toks, pos: 0, end: (last_line, last_col) };
    let mut names: Option<Vec<String>> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut raw_polys: Option<usize> = None;
    let mut expect = BTreeMap::new();
    let mut seen: Vec<String> = Vec::new();
    while p.peek().is_some() {
        if p.eat(';') {
            continue;
        }
        let at = p.here();
        let key = p.ident()?;
        if seen.contains(&key) {
            return Err(ParseError { line: at.0, col: at.1, kind: ParseErrorKind::DuplicateSection(key) });
        }
        p.expect(':')?;
        match key.as_str() {
            "ring" => {
                let mut vs: Vec<String> = Vec::new();
                loop {
                    let at = p.here();
                    let v = p.ident()?;
                    if vs.contains(&v) {
                        return Err(ParseError { line: at.0, col: at.1, kind: ParseErrorKind::DuplicateVariable(v) });
                    }
                    vs.push(v);
                    if !p.eat(',') {
                        break;
                    }
                }
                names = Some(vs);
            }
            "order" => {
                let at = p.here();
                let o = p.ident()?;
                order = Some(MonomialOrder::from_name(&o).ok_or(ParseError {
                    line: at.0,
                    col: at.1,
                    kind: ParseErrorKind::UnknownOrder(o),
                })?);
            }
            "polys" => {
                // Parsed once the ring is known; remember where the section starts.
                raw_polys = Some(p.pos);
                while !p.at_section_end() {
                    p.pos += 1;
                }
            }
            "expect" => {
                while !p.at_section_end() {
                    let k = p.ident()?;
                    p.expect('=')?;
                    let neg = p.eat('-');
                    let at = p.here();
                    let v: i64 = p.int()?.parse().map_err(|_| ParseError {
                        line: at.0,
                        col: at.1,
                        kind: ParseErrorKind::Syntax("value out of range".into()),
                    })?;
                    expect.insert(k, if neg { -v } else { v });
                    if !p.eat(',') {
                        break;
                    }
                }
            }
            _ => {
                return Err(ParseError {
                    line: at.0,
                    col: at.1,
                    kind: ParseErrorKind::Syntax(format!("unknown section `{key}`")),
                })
            }
        }
        seen.push(key);
        if !p.at_section_end() {
            return p.syntax("`;`");
        }
    }
    let names = names.ok_or(ParseError { line: 0, col: 0, kind: ParseErrorKind::MissingSection("ring") })?;
    let start = raw_polys.ok_or(ParseError { line: 0, col: 0, kind: ParseErrorKind::MissingSection("polys") })?;
    let ring = Ring::new(names, order.unwrap_or(MonomialOrder::DegRevLex));
    p.pos = start;
    if p.at_section_end() {
        return p.err(ParseErrorKind::EmptyPolys);
    }
    let ctx = ExprCtx { ring: &ring };
    let mut polys = Vec::new();
    loop {
        let at = p.here();
        let f = ctx.expr(&mut p)?;
        if f.is_zero() {
            // a lone `0` declares the zero ideal
            if polys.is_empty() && p.at_section_end() {
                break;
            }
            return Err(ParseError { line: at.0, col: at.1, kind: ParseErrorKind::ZeroPolynomial(polys.len()) });
        }
        polys.push(f);
        if p.eat(',') {
            continue;
        }
        if p.at_section_end() {
            break;
        }
        return p.syntax("`,` or `;`");
    }
    Ok(SystemFile { ring, polys, expect })
}

pub fn parse_system_file(path: &Path) -> Result<SystemFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        line: 0,
        col: 0,
        kind: ParseErrorKind::Io(format!("{}: {e}", path.display())),
    })?;
    parse_system(&text)
}

/// Renders a system in the file format.
pub fn format_system(sys: &SystemFile) -> String {
    let names = sys.names();
    let mut s = format!("ring: {};\norder: {};\npolys:\n", names.join(", "), sys.order().name());
    let body: Vec<String> = sys.polys.iter().map(|f| format!("  {}", f.display(names))).collect();
    s.push_str(if body.is_empty() { "  0" } else { "" });
    s.push_str(&body.join(",\n"));
    s.push_str(";\n");
    if !sys.expect.is_empty() {
        let kv: Vec<String> = sys.expect.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        s.push_str(&format!("expect: {};\n", kv.join(", ")));
    }
    s
}
