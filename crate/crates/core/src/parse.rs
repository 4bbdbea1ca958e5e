//! Lexer and recursive-descent parser for the `.lfd` agent-network
//! language and its formula sublanguage.
//!
//! Concrete syntax, tightest first: `~`, quantifiers, `&`, `|`, `->`
//! (right-associative). Terms use infix `+` and `*` with `*` binding
//! tighter, both left-associative. `t1 != t2` is surface syntax for
//! `~(t1 = t2)`. An identifier is a variable exactly when an enclosing
//! quantifier (or binding parameter list) binds it; anything else is a
//! function, predicate or agent symbol. `%` starts a line comment.

use std::collections::{BTreeMap, BTreeSet};

use crate::annotated::{AgentId, OmegaExpr};
use crate::formula::Formula;
use crate::network::{
    Agent, AgentNetwork, Binding, EntryKind, KBEntry, NetworkError, Query,
};
use crate::term::Term;

/// Errors from parsing or validating an agent network.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LfdError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: u32,
        col: u32,
        message: String,
    },
    #[error(transparent)]
    Network(#[from] NetworkError),
}

impl LfdError {
    fn at(pos: Pos, message: impl Into<String>) -> LfdError {
        LfdError::Syntax {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: u32,
    col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Kw(Kw),
    LParen,
    RParen,
    Comma,
    Dot,
    Colon,
    ColonEq,
    Caret,
    At,
    QuestionDash,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Plus,
    Star,
    EqSign,
    NeqSign,
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kw {
    Agent,
    End,
    Axiom,
    Query,
    From,
    Schema,
    Let,
    Forall,
    Exists,
    True,
    False,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s}"),
            Tok::Number(s) => format!("number {s}"),
            Tok::Kw(k) => format!("keyword {}", k.text()),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Dot => "'.'".into(),
            Tok::Colon => "':'".into(),
            Tok::ColonEq => "':='".into(),
            Tok::Caret => "'^'".into(),
            Tok::At => "'@'".into(),
            Tok::QuestionDash => "'?-'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Amp => "'&'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Star => "'*'".into(),
            Tok::EqSign => "'='".into(),
            Tok::NeqSign => "'!='".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

impl Kw {
    fn text(&self) -> &'static str {
        match self {
            Kw::Agent => "agent",
            Kw::End => "end",
            Kw::Axiom => "axiom",
            Kw::Query => "query",
            Kw::From => "from",
            Kw::Schema => "schema",
            Kw::Let => "let",
            Kw::Forall => "forall",
            Kw::Exists => "exists",
            Kw::True => "true",
            Kw::False => "false",
        }
    }

    fn from_text(s: &str) -> Option<Kw> {
        Some(match s {
            "agent" => Kw::Agent,
            "end" => Kw::End,
            "axiom" => Kw::Axiom,
            "query" => Kw::Query,
            "from" => Kw::From,
            "schema" => Kw::Schema,
            "let" => Kw::Let,
            "forall" => Kw::Forall,
            "exists" => Kw::Exists,
            "true" => Kw::True,
            "false" => Kw::False,
            _ => return None,
        })
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, LfdError> {
    let mut out = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let advance = |n: usize, i: &mut usize, col: &mut u32| {
            *i += n;
            *col += n as u32;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => advance(1, &mut i, &mut col),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' => {
                out.push((Tok::LParen, pos));
                advance(1, &mut i, &mut col);
            }
            ')' => {
                out.push((Tok::RParen, pos));
                advance(1, &mut i, &mut col);
            }
            ',' => {
                out.push((Tok::Comma, pos));
                advance(1, &mut i, &mut col);
            }
            '.' => {
                out.push((Tok::Dot, pos));
                advance(1, &mut i, &mut col);
            }
            '^' => {
                out.push((Tok::Caret, pos));
                advance(1, &mut i, &mut col);
            }
            '@' => {
                out.push((Tok::At, pos));
                advance(1, &mut i, &mut col);
            }
            '~' => {
                out.push((Tok::Tilde, pos));
                advance(1, &mut i, &mut col);
            }
            '&' => {
                out.push((Tok::Amp, pos));
                advance(1, &mut i, &mut col);
            }
            '|' => {
                out.push((Tok::Pipe, pos));
                advance(1, &mut i, &mut col);
            }
            '+' => {
                out.push((Tok::Plus, pos));
                advance(1, &mut i, &mut col);
            }
            '*' => {
                out.push((Tok::Star, pos));
                advance(1, &mut i, &mut col);
            }
            '=' => {
                out.push((Tok::EqSign, pos));
                advance(1, &mut i, &mut col);
            }
            ':' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push((Tok::ColonEq, pos));
                    advance(2, &mut i, &mut col);
                } else {
                    out.push((Tok::Colon, pos));
                    advance(1, &mut i, &mut col);
                }
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push((Tok::NeqSign, pos));
                    advance(2, &mut i, &mut col);
                } else {
                    return Err(LfdError::at(pos, "expected '=' after '!'"));
                }
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push((Tok::Arrow, pos));
                    advance(2, &mut i, &mut col);
                } else {
                    return Err(LfdError::at(pos, "expected '>' after '-'"));
                }
            }
            '?' => {
                if chars.get(i + 1) == Some(&'-') {
                    out.push((Tok::QuestionDash, pos));
                    advance(2, &mut i, &mut col);
                } else {
                    return Err(LfdError::at(pos, "expected '-' after '?'"));
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                out.push((Tok::Number(text), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                match Kw::from_text(&text) {
                    Some(kw) => out.push((Tok::Kw(kw), pos)),
                    None => out.push((Tok::Ident(text), pos)),
                }
            }
            other => {
                return Err(LfdError::at(pos, format!("unexpected character '{other}'")));
            }
        }
    }
    out.push((
        Tok::Eof,
        Pos { line, col },
    ));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    idx: usize,
    /// Stack of (surface name, internal name) for bound variables.
    scope: Vec<(String, String)>,
    /// Every name seen in the current formula, for fresh-rename decisions.
    seen: BTreeSet<String>,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, LfdError> {
        Ok(Parser {
            tokens: lex(src)?,
            idx: 0,
            scope: Vec::new(),
            seen: BTreeSet::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.idx].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.idx].0.clone();
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LfdError> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            Err(LfdError::at(
                self.pos(),
                format!("expected {}, found {}", tok.describe(), self.peek().describe()),
            ))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, LfdError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => Err(LfdError::at(
                self.pos(),
                format!("expected {what}, found {}", other.describe()),
            )),
        }
    }

    // --- variable scope --------------------------------------------------

    /// Push a binder, renaming it when the same surface name is already
    /// bound in an enclosing scope so the tree stays capture-free.
    fn push_binder(&mut self, surface: &str) -> Result<String, LfdError> {
        if crate::clause::is_reserved_symbol(surface) {
            return Err(LfdError::at(
                self.pos(),
                format!("{surface} lies in the reserved namespace"),
            ));
        }
        let shadowed = self.scope.iter().any(|(s, _)| s == surface);
        let internal = if shadowed {
            let name = crate::formula::fresh_name(surface, &self.seen);
            self.seen.insert(name.clone());
            name
        } else {
            surface.to_string()
        };
        self.seen.insert(surface.to_string());
        self.scope.push((surface.to_string(), internal.clone()));
        Ok(internal)
    }

    fn pop_binder(&mut self) {
        self.scope.pop();
    }

    fn lookup_var(&self, surface: &str) -> Option<&str> {
        self.scope
            .iter()
            .rev()
            .find(|(s, _)| s == surface)
            .map(|(_, i)| i.as_str())
    }

    // --- terms ------------------------------------------------------------

    fn parse_term(&mut self) -> Result<Term, LfdError> {
        let mut t = self.parse_product()?;
        while self.peek() == &Tok::Plus {
            self.bump();
            let rhs = self.parse_product()?;
            t = Term::fun("+", vec![t, rhs]);
        }
        Ok(t)
    }

    fn parse_product(&mut self) -> Result<Term, LfdError> {
        let mut t = self.parse_term_primary()?;
        while self.peek() == &Tok::Star {
            self.bump();
            let rhs = self.parse_term_primary()?;
            t = Term::fun("*", vec![t, rhs]);
        }
        Ok(t)
    }

    fn parse_term_primary(&mut self) -> Result<Term, LfdError> {
        match self.peek().clone() {
            Tok::Number(n) => {
                self.bump();
                self.seen.insert(n.clone());
                Ok(Term::constant(&n))
            }
            Tok::Ident(name) => {
                let pos = self.pos();
                self.bump();
                self.seen.insert(name.clone());
                if self.peek() == &Tok::LParen {
                    if self.lookup_var(&name).is_some() {
                        return Err(LfdError::at(
                            pos,
                            format!("bound variable {name} applied to arguments"),
                        ));
                    }
                    self.bump();
                    let mut args = vec![self.parse_term()?];
                    while self.peek() == &Tok::Comma {
                        self.bump();
                        args.push(self.parse_term()?);
                    }
                    self.expect(Tok::RParen)?;
                    Ok(Term::fun(&name, args))
                } else if let Some(internal) = self.lookup_var(&name) {
                    Ok(Term::Var(internal.to_string()))
                } else {
                    Ok(Term::constant(&name))
                }
            }
            Tok::LParen => {
                self.bump();
                let t = self.parse_term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(LfdError::at(
                self.pos(),
                format!("expected a term, found {}", other.describe()),
            )),
        }
    }

    // --- formulas ----------------------------------------------------------

    fn parse_expr(&mut self) -> Result<OmegaExpr, LfdError> {
        let lhs = self.parse_or()?;
        if self.peek() == &Tok::Arrow {
            self.bump();
            let rhs = self.parse_expr()?; // right-associative
            Ok(OmegaExpr::Implies(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn parse_or(&mut self) -> Result<OmegaExpr, LfdError> {
        let mut e = self.parse_and()?;
        while self.peek() == &Tok::Pipe {
            self.bump();
            let rhs = self.parse_and()?;
            e = OmegaExpr::Or(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn parse_and(&mut self) -> Result<OmegaExpr, LfdError> {
        let mut e = self.parse_unary()?;
        while self.peek() == &Tok::Amp {
            self.bump();
            let rhs = self.parse_unary()?;
            e = OmegaExpr::And(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn parse_unary(&mut self) -> Result<OmegaExpr, LfdError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(OmegaExpr::Not(Box::new(self.parse_unary()?)))
            }
            Tok::Kw(Kw::Forall) | Tok::Kw(Kw::Exists) => {
                let is_forall = self.peek() == &Tok::Kw(Kw::Forall);
                self.bump();
                let surface = self.expect_ident("a variable after the quantifier")?;
                let internal = self.push_binder(&surface)?;
                let body = self.parse_unary();
                self.pop_binder();
                let body = Box::new(body?);
                Ok(if is_forall {
                    OmegaExpr::Forall(internal, body)
                } else {
                    OmegaExpr::Exists(internal, body)
                })
            }
            _ => self.parse_postfix(),
        }
    }

    fn parse_postfix(&mut self) -> Result<OmegaExpr, LfdError> {
        let mut e = self.parse_primary()?;
        while self.peek() == &Tok::Caret {
            self.bump();
            let env = self.expect_ident("an agent name after '^'")?;
            e = OmegaExpr::Annotated(Box::new(e), AgentId::new(&env));
        }
        Ok(e)
    }

    fn parse_primary(&mut self) -> Result<OmegaExpr, LfdError> {
        match self.peek().clone() {
            Tok::Kw(Kw::True) => {
                self.bump();
                Ok(OmegaExpr::Top)
            }
            Tok::Kw(Kw::False) => {
                self.bump();
                Ok(OmegaExpr::Bottom)
            }
            Tok::Ident(_) | Tok::Number(_) | Tok::LParen => {
                // Try a relational atom first: `term (=|!=) term`.
                let saved = self.idx;
                if let Ok(lhs) = self.parse_term() {
                    match self.peek() {
                        Tok::EqSign => {
                            self.bump();
                            let rhs = self.parse_term()?;
                            return Ok(OmegaExpr::Eq(lhs, rhs));
                        }
                        Tok::NeqSign => {
                            self.bump();
                            let rhs = self.parse_term()?;
                            return Ok(OmegaExpr::Not(Box::new(OmegaExpr::Eq(lhs, rhs))));
                        }
                        _ => {}
                    }
                }
                // Not relational: re-parse as a propositional shape.
                self.idx = saved;
                match self.peek().clone() {
                    Tok::LParen => {
                        self.bump();
                        let e = self.parse_expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(e)
                    }
                    Tok::Ident(name) => {
                        let pos = self.pos();
                        self.bump();
                        self.seen.insert(name.clone());
                        if self.lookup_var(&name).is_some() && self.peek() != &Tok::LParen {
                            return Err(LfdError::at(
                                pos,
                                format!("bound variable {name} cannot stand as a formula"),
                            ));
                        }
                        if self.peek() == &Tok::LParen {
                            if self.lookup_var(&name).is_some() {
                                return Err(LfdError::at(
                                    pos,
                                    format!("bound variable {name} applied to arguments"),
                                ));
                            }
                            self.bump();
                            let mut args = vec![self.parse_term()?];
                            while self.peek() == &Tok::Comma {
                                self.bump();
                                args.push(self.parse_term()?);
                            }
                            self.expect(Tok::RParen)?;
                            Ok(OmegaExpr::Atom(name, args))
                        } else {
                            Ok(OmegaExpr::Atom(name, vec![]))
                        }
                    }
                    other => Err(LfdError::at(
                        self.pos(),
                        format!("expected '=' or '!=' after a term, found {}", other.describe()),
                    )),
                }
            }
            other => Err(LfdError::at(
                self.pos(),
                format!("expected a formula, found {}", other.describe()),
            )),
        }
    }

    fn parse_pure_formula(&mut self) -> Result<Formula, LfdError> {
        let pos = self.pos();
        let raw = self.parse_expr()?;
        raw.to_formula()
            .map_err(|e| LfdError::at(pos, format!("{e} (network bodies are first-order)")))
    }

    // --- network ------------------------------------------------------------

    fn parse_network(&mut self) -> Result<AgentNetwork, LfdError> {
        let mut agents: Vec<Agent> = Vec::new();
        let mut bindings: BTreeMap<String, Binding> = BTreeMap::new();
        let mut query: Option<Query> = None;
        loop {
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Kw(Kw::Agent) => {
                    self.bump();
                    let name = self.expect_ident("an agent name")?;
                    self.expect(Tok::Dot)?;
                    let mut entries = Vec::new();
                    let mut axiom_count = 0usize;
                    loop {
                        match self.peek().clone() {
                            Tok::Kw(Kw::End) => {
                                self.bump();
                                self.expect(Tok::Dot)?;
                                break;
                            }
                            Tok::Kw(Kw::Axiom) => {
                                self.bump();
                                let body = self.parse_pure_formula()?;
                                self.expect(Tok::Dot)?;
                                axiom_count += 1;
                                entries.push(KBEntry {
                                    label: format!("ax{axiom_count}"),
                                    kind: EntryKind::Axiom,
                                    body,
                                });
                            }
                            Tok::Kw(Kw::Query) => {
                                self.bump();
                                let label = self.expect_ident("a label")?;
                                self.expect(Tok::Kw(Kw::From))?;
                                let provider = self.expect_ident("a provider agent")?;
                                self.expect(Tok::Colon)?;
                                let body = self.parse_pure_formula()?;
                                self.expect(Tok::Dot)?;
                                entries.push(KBEntry {
                                    label,
                                    kind: EntryKind::QueryKnowledge {
                                        provider: AgentId::new(&provider),
                                    },
                                    body,
                                });
                            }
                            Tok::Kw(Kw::Schema) => {
                                self.bump();
                                let label = self.expect_ident("a label")?;
                                self.expect(Tok::LParen)?;
                                let mut params = vec![self.expect_ident("a predicate parameter")?];
                                while self.peek() == &Tok::Comma {
                                    self.bump();
                                    params.push(self.expect_ident("a predicate parameter")?);
                                }
                                self.expect(Tok::RParen)?;
                                self.expect(Tok::Colon)?;
                                let body = self.parse_pure_formula()?;
                                self.expect(Tok::Dot)?;
                                entries.push(KBEntry {
                                    label,
                                    kind: EntryKind::Schema { params },
                                    body,
                                });
                            }
                            other => {
                                return Err(LfdError::at(
                                    self.pos(),
                                    format!(
                                        "expected axiom, query, schema or end, found {}",
                                        other.describe()
                                    ),
                                ));
                            }
                        }
                    }
                    agents.push(Agent {
                        id: AgentId::new(&name),
                        entries,
                    });
                }
                Tok::Kw(Kw::Let) => {
                    self.bump();
                    let pos = self.pos();
                    let name = self.expect_ident("a predicate name")?;
                    self.expect(Tok::LParen)?;
                    let mut params = Vec::new();
                    let first = self.expect_ident("a parameter variable")?;
                    params.push(first);
                    while self.peek() == &Tok::Comma {
                        self.bump();
                        params.push(self.expect_ident("a parameter variable")?);
                    }
                    self.expect(Tok::RParen)?;
                    self.expect(Tok::ColonEq)?;
                    if params.iter().collect::<BTreeSet<_>>().len() != params.len() {
                        return Err(LfdError::at(pos, "binding parameters must be distinct"));
                    }
                    let mut internals = Vec::new();
                    for p in &params {
                        internals.push(self.push_binder(p)?);
                    }
                    let body = self.parse_pure_formula();
                    for _ in &params {
                        self.pop_binder();
                    }
                    let body = body?;
                    self.expect(Tok::Dot)?;
                    if bindings
                        .insert(
                            name.clone(),
                            Binding {
                                params: internals,
                                body,
                            },
                        )
                        .is_some()
                    {
                        return Err(LfdError::at(pos, format!("{name} is bound twice")));
                    }
                }
                Tok::QuestionDash => {
                    let pos = self.pos();
                    self.bump();
                    let goal = self.parse_pure_formula()?;
                    self.expect(Tok::At)?;
                    let target = self.expect_ident("a target agent")?;
                    self.expect(Tok::Dot)?;
                    if query.is_some() {
                        return Err(LfdError::at(pos, "more than one query declared"));
                    }
                    query = Some(Query {
                        goal,
                        target: AgentId::new(&target),
                    });
                }
                other => {
                    return Err(LfdError::at(
                        self.pos(),
                        format!("expected agent, let or ?-, found {}", other.describe()),
                    ));
                }
            }
        }
        let Some(query) = query else {
            return Err(LfdError::at(self.pos(), "missing query (?- <goal> @ <agent>.)"));
        };
        let net = AgentNetwork {
            agents,
            bindings,
            query,
        };
        net.validate()?;
        Ok(net)
    }
}

/// Parse and validate a whole agent network.
pub fn parse_network(src: &str) -> Result<AgentNetwork, LfdError> {
    let mut p = Parser::new(src)?;
    p.parse_network()
}

/// Parse a standalone first-order formula (no annotations).
pub fn parse_formula(src: &str) -> Result<Formula, LfdError> {
    let mut p = Parser::new(src)?;
    let f = p.parse_pure_formula()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

/// Parse a raw annotated expression; annotations `^agent` may appear
/// anywhere and are checked separately by validation.
pub fn parse_annotated(src: &str) -> Result<OmegaExpr, LfdError> {
    let mut p = Parser::new(src)?;
    let e = p.parse_expr()?;
    p.expect(Tok::Eof)?;
    Ok(e)
}

/// Parse a standalone term.
pub fn parse_term(src: &str) -> Result<Term, LfdError> {
    let mut p = Parser::new(src)?;
    let t = p.parse_term()?;
    p.expect(Tok::Eof)?;
    Ok(t)
}

/// The two-agent arithmetic network of the worked example, used by tests
/// across the crate.
#[cfg(test)]
pub(crate) fn peano_source() -> String {
    "\
agent m1.
  axiom forall x forall y (x + 1 = y + 1 -> x = y).
  axiom forall x (x + 1 != 0).
  axiom 0 + 1 = 1.
  axiom forall x (x + 0 = x).
  axiom forall x forall y (x + (y + 1) = (x + y) + 1).
  axiom forall x (x * 0 = 0).
  axiom forall x forall y (x * (y + 1) = (x + y) + x).
end.

agent m.
  query Q0 from m1: Q(0).
  query Step from m1: forall x (Q(x) -> Q(x + 1)).
  schema Ind(Q): (Q(0) & forall x (Q(x) -> Q(x + 1))) -> forall x (Q(x)).
end.

let Q(x) := x + 1 = 1 + x.

?- forall x (x + 1 = 1 + x) @ m.
"
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn plus(a: Term, b: Term) -> Term {
        Term::fun("+", vec![a, b])
    }

    #[test]
    fn parses_terms_with_precedence() {
        assert_eq!(
            parse_term("x * (y + 1) + 0").unwrap().to_string(),
            "x * (y + 1) + 0"
        );
        // x and y are unbound here, hence constants
        assert_eq!(parse_term("x").unwrap(), Term::constant("x"));
    }

    #[test]
    fn parses_quantified_equality() {
        let f = parse_formula("forall x (x + 0 = x)").unwrap();
        assert_eq!(
            f,
            Formula::forall(
                "x",
                Formula::eq(plus(Term::var("x"), Term::constant("0")), Term::var("x"))
            )
        );
    }

    #[test]
    fn neq_desugars_to_negated_equality() {
        let f = parse_formula("forall x (x + 1 != 0)").unwrap();
        assert_eq!(
            f,
            Formula::forall(
                "x",
                Formula::not(Formula::eq(
                    plus(Term::var("x"), Term::constant("1")),
                    Term::constant("0")
                ))
            )
        );
    }

    #[test]
    fn connective_precedence() {
        let f = parse_formula("~p & q | r -> s").unwrap();
        assert_eq!(f.to_string(), "~p & q | r -> s");
        assert_eq!(
            f,
            Formula::implies(
                Formula::or(
                    Formula::and(Formula::not(Formula::atom("p", vec![])), Formula::atom("q", vec![])),
                    Formula::atom("r", vec![])
                ),
                Formula::atom("s", vec![])
            )
        );
        // right-associative implication
        let g = parse_formula("p -> q -> r").unwrap();
        assert_eq!(
            g,
            Formula::implies(
                Formula::atom("p", vec![]),
                Formula::implies(Formula::atom("q", vec![]), Formula::atom("r", vec![]))
            )
        );
    }

    #[test]
    fn shadowed_binder_is_renamed() {
        let f = parse_formula("forall x (p(x) & forall x (q(x)))").unwrap();
        match f {
            Formula::Forall(outer, body) => match *body {
                Formula::And(_, rhs) => match *rhs {
                    Formula::Forall(inner, _) => {
                        assert_eq!(outer, "x");
                        assert_ne!(inner, "x");
                    }
                    other => panic!("unexpected {other:?}"),
                },
                other => panic!("unexpected {other:?}"),
            },
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn annotated_postfix_parses() {
        let e = parse_annotated("(p & q^b)^a").unwrap();
        match e {
            OmegaExpr::Annotated(body, env) => {
                assert_eq!(env, AgentId::new("a"));
                assert!(matches!(*body, OmegaExpr::And(_, _)));
            }
            other => panic!("unexpected {other:?}"),
        }
        // annotations are rejected in first-order positions
        assert!(parse_formula("p^a").is_err());
    }

    #[test]
    fn minimal_network_parses() {
        let net = parse_network("agent a. axiom p. end. ?- p @ a.").unwrap();
        assert_eq!(net.agents.len(), 1);
        assert_eq!(net.agents[0].entries.len(), 1);
        assert_eq!(net.agents[0].entries[0].label, "ax1");
        assert_eq!(net.query.goal, Formula::atom("p", vec![]));
        assert_eq!(net.query.target, AgentId::new("a"));
    }

    #[test]
    fn unknown_provider_is_reported() {
        let err = parse_network("agent a. query L from m2: p. end. ?- p @ a.").unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::UnknownProvider { .. })
        ));
    }

    #[test]
    fn duplicate_agent_is_reported() {
        let err = parse_network("agent a. end. agent a. end. ?- p @ a.").unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::DuplicateAgent(_))
        ));
    }

    #[test]
    fn unbound_schema_parameter_is_reported() {
        let err = parse_network("agent a. schema S(Q): Q(0) -> Q(0). end. ?- p @ a.").unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::UnboundSchemaParam { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_network("agent a.\n  axiom p & .\nend. ?- p @ a.").unwrap_err();
        match err {
            LfdError::Syntax { line, col, .. } => {
                assert_eq!(line, 2);
                assert!(col >= 11);
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn reserved_symbols_rejected() {
        let err = parse_network("agent a. axiom p(sk0). end. ?- p(0) @ a.").unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::ReservedSymbol(_))
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = parse_network(
            "agent a. end. \
             agent b. query L from a: p. query L from a: q. end. ?- p @ b.",
        )
        .unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::DuplicateLabel { .. })
        ));
    }

    #[test]
    fn placeholder_in_axiom_rejected() {
        let err = parse_network(
            "agent a. axiom Q(0). end. let Q(x) := p(x). ?- p(0) @ a.",
        )
        .unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::PlaceholderInAxiom { .. })
        ));
    }

    #[test]
    fn exactly_one_query_required() {
        assert!(matches!(
            parse_network("agent a. axiom p. end."),
            Err(LfdError::Syntax { .. })
        ));
        assert!(matches!(
            parse_network("agent a. axiom p. end. ?- p @ a. ?- p @ a."),
            Err(LfdError::Syntax { .. })
        ));
    }

    #[test]
    fn variable_symbol_clash_rejected() {
        // p is a predicate elsewhere and a binder here
        let err = parse_network("agent a. axiom p(0) & forall p (q(p)). end. ?- p(0) @ a.")
            .unwrap_err();
        assert!(matches!(
            err,
            LfdError::Network(NetworkError::VarSymbolClash { .. })
        ));
    }

    #[test]
    fn render_parse_round_trip_on_peano() {
        let src = peano_source();
        let net = parse_network(&src).unwrap();
        let rendered = net.render();
        let reparsed = parse_network(&rendered).unwrap();
        assert_eq!(net, reparsed);
    }

    #[test]
    fn peano_network_shape() {
        let net = parse_network(&peano_source()).unwrap();
        assert_eq!(net.agents.len(), 2);
        let m1 = &net.agents[0];
        assert_eq!(m1.entries.len(), 7);
        assert!(m1
            .entries
            .iter()
            .all(|e| matches!(e.kind, EntryKind::Axiom)));
        let m = &net.agents[1];
        assert_eq!(m.entries.len(), 3);
        assert_eq!(m.entries[0].label, "Q0");
        assert_eq!(m.entries[1].label, "Step");
        assert!(matches!(m.entries[2].kind, EntryKind::Schema { .. }));
        assert_eq!(
            net.query.goal.to_string(),
            "forall x (x + 1 = 1 + x)"
        );
        // agent m expands to 4 leaves: two lemmas at m1, schema and goal at m
        let exp = net.expand_agent(&AgentId::new("m"), &net.query.goal).unwrap();
        let leaves = exp.leaves();
        assert_eq!(leaves.len(), 4);
        assert_eq!(leaves[0].1.as_str(), "m1");
        assert_eq!(leaves[1].1.as_str(), "m1");
        assert_eq!(leaves[2].1.as_str(), "m");
        assert_eq!(leaves[3].1.as_str(), "m");
        assert_eq!(leaves[0].0.to_string(), "0 + 1 = 1 + 0");
    }
}
