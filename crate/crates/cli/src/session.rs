//! Session files: one statement per line, parsed in full before anything runs.
//!
//! ```text
//! ring 32003 x1 x2 x3 x4
//! ideal I = x1*x3, x1*x4, x2*x3, x2*x4
//! module M = coker twists:[0,0] rel:[x1, 0; 0, x2]
//! map f: M -> I = [x1; x2]
//! art X = F1 I
//! invariants I
//! ```

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use lochom::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ideal,
    Module,
    Map,
    Art,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ideal => "ideal",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::Art => "artinian module",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functor {
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verb {
    Invariants,
    Gb,
    Resolve,
    Betti,
    Hilbert,
    Ext,
    Koszul,
    F1,
    F2,
    G1,
    G2,
    Ndim,
    Width,
    Cocm,
    LochomTop,
    KoszulArt,
    Cmfication,
    VerifyCmf,
    Uniqueness,
    Thm4Check,
    GotoCheck,
    Cor2Check,
    TwoPlanesExample,
    Iso,
}

/// Argument slots of a verb.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Module,
    Art,
    Map,
    Int,
    Polys,
    OptInt,
    OptPolys,
    OptIdeal,
}

impl Verb {
    pub const ALL: [(&'static str, Verb); 24] = [
        ("invariants", Verb::Invariants),
        ("gb", Verb::Gb),
        ("resolve", Verb::Resolve),
        ("betti", Verb::Betti),
        ("hilbert", Verb::Hilbert),
        ("ext", Verb::Ext),
        ("koszul", Verb::Koszul),
        ("F1", Verb::F1),
        ("F2", Verb::F2),
        ("G1", Verb::G1),
        ("G2", Verb::G2),
        ("ndim", Verb::Ndim),
        ("width", Verb::Width),
        ("cocm", Verb::Cocm),
        ("lochom-top", Verb::LochomTop),
        ("koszul-art", Verb::KoszulArt),
        ("cmfication", Verb::Cmfication),
        ("verify-cmf", Verb::VerifyCmf),
        ("uniqueness", Verb::Uniqueness),
        ("thm4-check", Verb::Thm4Check),
        ("goto-check", Verb::GotoCheck),
        ("cor2-check", Verb::Cor2Check),
        ("paper-example", Verb::TwoPlanesExample),
        ("iso", Verb::Iso),
    ];

    pub fn from_name(s: &str) -> Option<Verb> {
        Self::ALL.iter().find(|(n, _)| *n == s).map(|(_, v)| *v)
    }

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, v)| *v == self).map(|(n, _)| *n).unwrap()
    }

    fn slots(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            Verb::Invariants | Verb::Gb | Verb::Resolve | Verb::Betti | Verb::F1 | Verb::F2 => &[Module],
            Verb::Cmfication | Verb::GotoCheck => &[Module],
            Verb::Hilbert => &[Module, OptInt, OptInt],
            Verb::Ext => &[Int, Module, OptInt],
            Verb::Koszul => &[Module, Int, Polys],
            Verb::G1 | Verb::G2 | Verb::Ndim | Verb::Width | Verb::Cocm => &[Art],
            Verb::LochomTop => &[Art, OptPolys],
            Verb::KoszulArt => &[Art, Int, Int, Polys],
            Verb::VerifyCmf | Verb::Uniqueness | Verb::Thm4Check => &[Module, Module, Map],
            Verb::Cor2Check => &[Module, OptIdeal],
            Verb::TwoPlanesExample => &[],
            Verb::Iso => &[Module, Module],
        }
    }

    /// Whether the verb leaves a module or artinian module behind as `_`.
    pub fn sets_last(self) -> bool {
        matches!(
            self,
            Verb::Ext
                | Verb::Koszul
                | Verb::F1
                | Verb::F2
                | Verb::G1
                | Verb::G2
                | Verb::LochomTop
                | Verb::KoszulArt
                | Verb::Cmfication
                | Verb::Cor2Check
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    /// A bound name, or `_` for the last result.
    Name(String),
    Int(i64),
    Polys(Vec<Polynomial>),
}

#[derive(Debug, Clone)]
pub enum StatementKind {
    Ring,
    Ideal { name: String, gens: Vec<Polynomial> },
    Module { name: String, twists: Vec<i32>, relations: Vec<Vec<Polynomial>> },
    Map { name: String, source: String, target: String, rows: Vec<Vec<Polynomial>> },
    Art { name: String, functor: Functor, module: String },
    Command { verb: Verb, args: Vec<Arg> },
}

#[derive(Debug, Clone)]
pub struct Statement {
    pub line: usize,
    pub text: String,
    pub kind: StatementKind,
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    pub ring: Option<Arc<Ring>>,
    pub statements: Vec<Statement>,
}

/// A token with its 1-based column.
#[derive(Debug, Clone)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

struct LineParser<'a> {
    line: usize,
    src: &'a str,
    pos: usize,
}

impl<'a> LineParser<'a> {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, col, msg: msg.into() })
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    /// A run of characters up to whitespace or one of `stops`.
    fn word(&mut self, stops: &[char]) -> Option<Tok<'a>> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| c.is_whitespace() || stops.contains(&c)).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(Tok { col: start + 1, text: &rest[..len] })
    }

    fn expect_word(&mut self, what: &str, stops: &[char]) -> Result<Tok<'a>, ParseError> {
        match self.word(stops) {
            Some(t) => Ok(t),
            None => self.err(self.col(), format!("expected {what}")),
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            self.err(self.col(), format!("expected '{lit}'"))
        }
    }

    /// Text up to the matching close bracket, returned with its start column.
    fn bracketed(&mut self, open: char, close: char) -> Result<Tok<'a>, ParseError> {
        self.skip_ws();
        if !self.src[self.pos..].starts_with(open) {
            return self.err(self.col(), format!("expected '{open}'"));
        }
        let start = self.pos + 1;
        match self.src[start..].find(close) {
            Some(len) => {
                self.pos = start + len + 1;
                Ok(Tok { col: start + 1, text: &self.src[start..start + len] })
            }
            None => self.err(self.src.len() + 1, format!("missing '{close}'")),
        }
    }

    fn rest(&mut self) -> Tok<'a> {
        self.skip_ws();
        let t = Tok { col: self.col(), text: &self.src[self.pos..] };
        self.pos = self.src.len();
        t
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            self.err(self.col(), "unexpected trailing input")
        }
    }
}

/// Pieces of `tok` separated by `sep`, each trimmed, with columns.
fn split<'a>(tok: &Tok<'a>, sep: char) -> Vec<Tok<'a>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in tok.text.split(sep) {
        let lead = piece.len() - piece.trim_start().len();
        out.push(Tok { col: tok.col + offset + lead, text: piece.trim() });
        offset += piece.len() + 1;
    }
    out
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

struct Parser {
    ring: Option<Arc<Ring>>,
    names: HashMap<String, Kind>,
    has_last: bool,
}

impl Parser {
    fn ring(&self, lp: &LineParser) -> Result<Arc<Ring>, ParseError> {
        match &self.ring {
            Some(r) => Ok(r.clone()),
            None => lp.err(1, "no ring declared yet"),
        }
    }

    fn poly(&self, lp: &LineParser, tok: &Tok) -> Result<Polynomial, ParseError> {
        let ring = self.ring(lp)?;
        let p = ring.parse(tok.text).map_err(|e| match e {
            lochom::Error::Parse { col, msg } => ParseError { line: lp.line, col: tok.col + col - 1, msg },
            other => ParseError { line: lp.line, col: tok.col, msg: other.to_string() },
        })?;
        let degs: Vec<u32> = p.terms().iter().map(|(_, m)| m.degree()).collect();
        if degs.windows(2).any(|w| w[0] != w[1]) {
            return lp.err(tok.col, format!("inhomogeneous polynomial '{}'", tok.text));
        }
        Ok(p)
    }

    fn poly_list(&self, lp: &LineParser, tok: &Tok) -> Result<Vec<Polynomial>, ParseError> {
        if tok.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        split(tok, ',').iter().map(|t| self.poly(lp, t)).collect()
    }

    /// `[row; row; ...]` with comma separated entries per row.
    fn matrix(&self, lp: &mut LineParser) -> Result<Vec<(usize, Vec<Polynomial>)>, ParseError> {
        let body = lp.bracketed('[', ']')?;
        if body.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        split(&body, ';').iter().map(|row| Ok((row.col, self.poly_list(lp, row)?))).collect()
    }

    fn bind(&mut self, lp: &LineParser, tok: &Tok, kind: Kind) -> Result<String, ParseError> {
        if !is_name(tok.text) {
            return lp.err(tok.col, format!("invalid name '{}'", tok.text));
        }
        if self.ring.as_ref().is_some_and(|r| r.var_index(tok.text).is_some()) {
            return lp.err(tok.col, format!("'{}' is a variable of the ring", tok.text));
        }
        if self.names.contains_key(tok.text) {
            return lp.err(tok.col, format!("name '{}' already bound", tok.text));
        }
        self.names.insert(tok.text.to_string(), kind);
        Ok(tok.text.to_string())
    }

    /// A reference to a bound object usable in a slot of kind `want`.
    fn reference(&self, lp: &LineParser, tok: &Tok, want: Kind) -> Result<String, ParseError> {
        if tok.text == "_" {
            if !self.has_last || want == Kind::Map || want == Kind::Ideal {
                return lp.err(tok.col, format!("'_' does not refer to a {want} here"));
            }
            return Ok("_".into());
        }
        let Some(&kind) = self.names.get(tok.text) else {
            return lp.err(tok.col, format!("unbound name '{}'", tok.text));
        };
        let ok = kind == want || (want == Kind::Module && kind == Kind::Ideal);
        if !ok {
            return lp.err(tok.col, format!("'{}' is a {kind}, expected a {want}", tok.text));
        }
        Ok(tok.text.to_string())
    }

    fn ring_line(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        if self.ring.is_some() {
            return lp.err(1, "ring already declared");
        }
        let p = lp.expect_word("a prime", &[])?;
        let prime: u32 = p.text.parse().or_else(|_| lp.err(p.col, "expected a prime"))?;
        let mut vars = Vec::new();
        let mut first_col = lp.col();
        while let Some(v) = lp.word(&[]) {
            if vars.is_empty() {
                first_col = v.col;
            }
            vars.push(v.text.to_string());
        }
        if vars.is_empty() {
            return lp.err(lp.col(), "expected variable names");
        }
        let ring = Ring::new(prime, vars).or_else(|e| lp.err(first_col, e.to_string()))?;
        self.ring = Some(ring);
        Ok(StatementKind::Ring)
    }

    fn ideal_line(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        let name = lp.expect_word("a name", &['='])?;
        lp.expect("=")?;
        let body = lp.rest();
        let gens = self.poly_list(lp, &body)?;
        let name = self.bind(lp, &name, Kind::Ideal)?;
        Ok(StatementKind::Ideal { name, gens })
    }

    fn module_line(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        let name = lp.expect_word("a name", &['='])?;
        lp.expect("=")?;
        lp.expect("coker")?;
        lp.expect("twists:")?;
        let tw = lp.bracketed('[', ']')?;
        let mut twists = Vec::new();
        if !tw.text.trim().is_empty() {
            for t in split(&tw, ',') {
                twists.push(t.text.parse::<i32>().or_else(|_| lp.err(t.col, "expected an integer twist"))?);
            }
        }
        lp.expect("rel:")?;
        let rows = self.matrix(lp)?;
        lp.finish()?;
        for (col, row) in &rows {
            if row.len() != twists.len() {
                return lp.err(*col, format!("relation has {} entries, expected {}", row.len(), twists.len()));
            }
            let degs: Vec<i64> = row
                .iter()
                .zip(&twists)
                .filter_map(|(p, &a)| p.degree().map(|d| d as i64 + a as i64))
                .collect();
            if degs.windows(2).any(|w| w[0] != w[1]) {
                return lp.err(*col, "inhomogeneous relation");
            }
        }
        let name = self.bind(lp, &name, Kind::Module)?;
        Ok(StatementKind::Module { name, twists, relations: rows.into_iter().map(|(_, r)| r).collect() })
    }

    fn map_line(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        let name = lp.expect_word("a name", &[':'])?;
        lp.expect(":")?;
        let src = lp.expect_word("a source module", &['-'])?;
        lp.expect("->")?;
        let dst = lp.expect_word("a target module", &['='])?;
        lp.expect("=")?;
        let source = self.reference(lp, &src, Kind::Module)?;
        let target = self.reference(lp, &dst, Kind::Module)?;
        let rows = self.matrix(lp)?;
        lp.finish()?;
        let name = self.bind(lp, &name, Kind::Map)?;
        Ok(StatementKind::Map { name, source, target, rows: rows.into_iter().map(|(_, r)| r).collect() })
    }

    fn art_line(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        let name = lp.expect_word("a name", &['='])?;
        lp.expect("=")?;
        let f = lp.expect_word("F1 or F2", &[])?;
        let functor = match f.text {
            "F1" => Functor::F1,
            "F2" => Functor::F2,
            _ => return lp.err(f.col, "expected F1 or F2"),
        };
        let m = lp.expect_word("a module", &[])?;
        let module = self.reference(lp, &m, Kind::Module)?;
        lp.finish()?;
        let name = self.bind(lp, &name, Kind::Art)?;
        Ok(StatementKind::Art { name, functor, module })
    }

    fn command(&mut self, lp: &mut LineParser, verb_tok: Tok, verb: Verb) -> Result<StatementKind, ParseError> {
        self.ring(lp)?;
        let mut args = Vec::new();
        for &slot in verb.slots() {
            lp.skip_ws();
            let optional = matches!(slot, Slot::OptInt | Slot::OptPolys | Slot::OptIdeal);
            if optional && lp.at_end() {
                break;
            }
            let arg = match slot {
                Slot::Polys | Slot::OptPolys => {
                    if lp.src[lp.pos..].starts_with("sop=") {
                        lp.pos += 4;
                    }
                    let body = lp.bracketed('(', ')')?;
                    Arg::Polys(self.poly_list(lp, &body)?)
                }
                Slot::Int | Slot::OptInt => {
                    let t = lp.expect_word("an integer", &[])?;
                    Arg::Int(t.text.parse().or_else(|_| lp.err(t.col, "expected an integer"))?)
                }
                Slot::Module | Slot::Art | Slot::Map | Slot::OptIdeal => {
                    let t = lp.expect_word("a name", &[])?;
                    let want = match slot {
                        Slot::Module => Kind::Module,
                        Slot::Art => Kind::Art,
                        Slot::Map => Kind::Map,
                        _ => Kind::Ideal,
                    };
                    Arg::Name(self.reference(lp, &t, want)?)
                }
            };
            args.push(arg);
        }
        lp.finish()?;
        if verb == Verb::TwoPlanesExample {
            for n in ["I", "R", "B", "iota"] {
                let kind = match n {
                    "I" => Kind::Ideal,
                    "iota" => Kind::Map,
                    _ => Kind::Module,
                };
                self.bind(lp, &Tok { col: verb_tok.col, text: n }, kind)?;
            }
        }
        if verb.sets_last() {
            self.has_last = true;
        }
        Ok(StatementKind::Command { verb, args })
    }

    fn statement(&mut self, lp: &mut LineParser) -> Result<StatementKind, ParseError> {
        let head = lp.expect_word("a statement", &[])?;
        match head.text {
            "ring" => self.ring_line(lp),
            "ideal" | "module" | "map" | "art" => {
                self.ring(lp)?;
                match head.text {
                    "ideal" => self.ideal_line(lp),
                    "module" => self.module_line(lp),
                    "map" => self.map_line(lp),
                    _ => self.art_line(lp),
                }
            }
            v => match Verb::from_name(v) {
                Some(verb) => self.command(lp, head, verb),
                None => lp.err(head.col, format!("unknown verb '{v}'")),
            },
        }
    }
}

/// Parse a whole session. Blank lines and lines starting with `#` are skipped.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut parser = Parser { ring: None, names: HashMap::new(), has_last: false };
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_end();
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let mut lp = LineParser { line: i + 1, src: trimmed, pos: 0 };
        let kind = parser.statement(&mut lp)?;
        statements.push(Statement { line: i + 1, text: trimmed.trim_start().to_string(), kind });
    }
    Ok(Session { ring: parser.ring, statements })
}
