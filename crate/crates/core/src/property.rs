//! A small language for graph properties.
//!
//! ```text
//! prop    := or
//! or      := and ("or" and)*
//! and     := unary ("and" unary)*
//! unary   := "not" unary | primary
//! primary := "(" prop ")" | quant "(" local ")" | "apex" "(" prop ")"
//!          | name [ "(" k ")" ]
//! quant   := some_vertex | all_vertices | some_edge | all_edges
//!          | all_edge_vertex_pairs
//! local   := local-or over leaves  tag ":" unary,  tag := rm | del | con
//! ```
//!
//! Inside a quantifier, `rm:P` tests `P` on `G - v`, `del:P` on `G - ab`
//! and `con:P` on `G / ab`. Vertex quantifiers accept `rm`, edge quantifiers
//! accept `del` and `con`, and the edge-vertex pair quantifier accepts `rm`
//! and `del` (ranging over edges `ab` and vertices `v` not in `{a, b}`).

use std::fmt;

use crate::canon::enumerate_by_order;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::minor::{all_one_step_minors, OneStepMinor};
use crate::par::{self, Exec};
use crate::planarity::{is_outerplanar, is_planar};
use crate::treewidth::{treewidth_le, MAX_TW_ORDER};

/// Registry entries that expand to a fixed expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    Sap,
    AlmostPlanar,
    Ca,
    Ce,
    Cc,
    Ne,
    Nc,
    Cace,
    StrongCace,
}

impl Named {
    pub const ALL: [Named; 9] = [
        Named::Sap,
        Named::AlmostPlanar,
        Named::Ca,
        Named::Ce,
        Named::Cc,
        Named::Ne,
        Named::Nc,
        Named::Cace,
        Named::StrongCace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::Sap => "sap",
            Named::AlmostPlanar => "almost_planar",
            Named::Ca => "ca",
            Named::Ce => "ce",
            Named::Cc => "cc",
            Named::Ne => "ne",
            Named::Nc => "nc",
            Named::Cace => "cace",
            Named::StrongCace => "strong_cace",
        }
    }

    pub fn definition(self) -> &'static str {
        match self {
            Named::Sap => "all_edges(del:planar and con:planar)",
            Named::AlmostPlanar => "all_edges(del:planar or con:planar)",
            Named::Ca => "all_vertices(rm:planar)",
            Named::Ce => "all_edges(del:planar)",
            Named::Cc => "all_edges(con:planar)",
            Named::Ne => "not planar and not some_edge(del:planar)",
            Named::Nc => "not planar and not some_edge(con:planar)",
            Named::Cace => "all_edge_vertex_pairs(rm:planar or del:planar)",
            Named::StrongCace => "all_edge_vertex_pairs(rm:planar and del:planar)",
        }
    }

    /// Minor-closure backed by a known theorem.
    fn declared_closed(self) -> bool {
        matches!(self, Named::Sap | Named::AlmostPlanar)
    }

    fn expansion(self) -> &'static Prop {
        use std::sync::OnceLock;
        static CACHE: OnceLock<Vec<Prop>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            Named::ALL
                .iter()
                .map(|n| parse_property(n.definition()).expect("registry definitions parse"))
                .collect()
        });
        &all[Named::ALL.iter().position(|n| *n == self).expect("listed")]
    }

    fn from_name(s: &str) -> Option<Named> {
        Named::ALL.iter().copied().find(|n| n.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    SomeVertex,
    AllVertices,
    SomeEdge,
    AllEdges,
    AllEdgeVertexPairs,
}

impl Quantifier {
    const ALL: [Quantifier; 5] = [
        Quantifier::SomeVertex,
        Quantifier::AllVertices,
        Quantifier::SomeEdge,
        Quantifier::AllEdges,
        Quantifier::AllEdgeVertexPairs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantifier::SomeVertex => "some_vertex",
            Quantifier::AllVertices => "all_vertices",
            Quantifier::SomeEdge => "some_edge",
            Quantifier::AllEdges => "all_edges",
            Quantifier::AllEdgeVertexPairs => "all_edge_vertex_pairs",
        }
    }

    fn allows(self, tag: Tag) -> bool {
        match self {
            Quantifier::SomeVertex | Quantifier::AllVertices => tag == Tag::Rm,
            Quantifier::SomeEdge | Quantifier::AllEdges => matches!(tag, Tag::Del | Tag::Con),
            Quantifier::AllEdgeVertexPairs => matches!(tag, Tag::Rm | Tag::Del),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Rm,
    Del,
    Con,
}

impl Tag {
    fn name(self) -> &'static str {
        match self {
            Tag::Rm => "rm",
            Tag::Del => "del",
            Tag::Con => "con",
        }
    }
}

/// Body of a quantifier: a boolean combination of tagged properties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Local {
    Leaf(Tag, Box<Prop>),
    Not(Box<Local>),
    And(Box<Local>, Box<Local>),
    Or(Box<Local>, Box<Local>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prop {
    Const(bool),
    Planar,
    Outerplanar,
    TwLe(u32),
    EdgesLe(u32),
    OrderLe(u32),
    Named(Named),
    Apex(Box<Prop>),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Quant(Quantifier, Box<Local>),
}

/// Minor-closure status of a property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorClosedness {
    DeclaredClosed,
    DeclaredOpen,
    Checked { bound: usize, counterexample: Option<Box<Counterexample>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub minor: OneStepMinor,
}

impl MinorClosedness {
    pub fn is_clean(&self) -> bool {
        matches!(self, MinorClosedness::Checked { counterexample: None, .. })
    }
}

struct Site<'g> {
    g: &'g Graph,
    vertex: Option<usize>,
    edge: Option<(usize, usize)>,
}

impl Local {
    fn eval(&self, site: &Site<'_>, whole_ok: &mut dyn FnMut(&Prop) -> Option<bool>) -> bool {
        match self {
            Local::Leaf(tag, p) => {
                if let Some(true) = whole_ok(p) {
                    return true;
                }
                let h = match tag {
                    Tag::Rm => site.g.without_vertex(site.vertex.expect("vertex site")),
                    Tag::Del => {
                        let (a, b) = site.edge.expect("edge site");
                        site.g.without_edge(a, b)
                    }
                    Tag::Con => {
                        let (a, b) = site.edge.expect("edge site");
                        site.g.contracted(a, b)
                    }
                };
                p.eval(&h)
            }
            Local::Not(x) => !x.eval(site, whole_ok),
            Local::And(a, b) => a.eval(site, whole_ok) && b.eval(site, whole_ok),
            Local::Or(a, b) => a.eval(site, whole_ok) || b.eval(site, whole_ok),
        }
    }

    fn leaves<'a>(&'a self, out: &mut Vec<(Tag, &'a Prop)>) {
        match self {
            Local::Leaf(t, p) => out.push((*t, p)),
            Local::Not(x) => x.leaves(out),
            Local::And(a, b) | Local::Or(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }
}

impl std::ops::Not for Prop {
    type Output = Prop;

    fn not(self) -> Prop {
        Prop::Not(Box::new(self))
    }
}

impl Prop {
    /// Evaluate on `g`. Call [`Prop::check_capacity`] first for graphs
    /// beyond the treewidth DP bound.
    pub fn eval(&self, g: &Graph) -> bool {
        match self {
            Prop::Const(b) => *b,
            Prop::Planar => is_planar(g),
            Prop::Outerplanar => is_outerplanar(g).expect("capacity checked"),
            Prop::TwLe(k) => treewidth_le(g, *k).expect("capacity checked"),
            Prop::EdgesLe(k) => g.size() <= *k as usize,
            Prop::OrderLe(k) => g.order() <= *k as usize,
            Prop::Named(n) => n.expansion().eval(g),
            Prop::Apex(p) => (0..g.order()).any(|v| p.eval(&g.without_vertex(v))),
            Prop::Not(p) => !p.eval(g),
            Prop::And(a, b) => a.eval(g) && b.eval(g),
            Prop::Or(a, b) => a.eval(g) || b.eval(g),
            Prop::Quant(q, body) => eval_quant(*q, body, g),
        }
    }

    /// Checked evaluation.
    pub fn evaluate(&self, g: &Graph) -> Result<bool> {
        self.check_capacity(g.order())?;
        Ok(self.eval(g))
    }

    /// Ensure every atom can be evaluated on graphs of order `n` and below.
    pub fn check_capacity(&self, n: usize) -> Result<()> {
        match self {
            Prop::Outerplanar if n + 1 > crate::graph::MAX_ORDER => {
                Err(Error::Capacity { requested: n + 1, limit: crate::graph::MAX_ORDER })
            }
            Prop::TwLe(k) if n > MAX_TW_ORDER && (*k as usize) + 1 < n => {
                Err(Error::Capacity { requested: n, limit: MAX_TW_ORDER })
            }
            Prop::Named(x) => x.expansion().check_capacity(n),
            Prop::Apex(p) | Prop::Not(p) => p.check_capacity(n),
            Prop::And(a, b) | Prop::Or(a, b) => {
                a.check_capacity(n)?;
                b.check_capacity(n)
            }
            Prop::Quant(_, body) => {
                let mut leaves = Vec::new();
                body.leaves(&mut leaves);
                leaves.iter().try_for_each(|(_, p)| p.check_capacity(n))
            }
            _ => Ok(()),
        }
    }

    /// Minor-closure declared from known results: atoms, the closed registry
    /// entries, apex of a closed property, and and/or of closed properties.
    pub fn declared_closed(&self) -> bool {
        match self {
            Prop::Const(_) | Prop::Planar | Prop::Outerplanar | Prop::TwLe(_) | Prop::EdgesLe(_) | Prop::OrderLe(_) => true,
            Prop::Named(n) => n.declared_closed(),
            Prop::Apex(p) => p.declared_closed(),
            Prop::And(a, b) | Prop::Or(a, b) => a.declared_closed() && b.declared_closed(),
            Prop::Not(_) | Prop::Quant(..) => false,
        }
    }

    /// Is the negation of this property declared minor-closed?
    pub fn complement_declared_closed(&self) -> bool {
        match self {
            Prop::Not(p) => p.declared_closed(),
            Prop::Const(_) => true,
            _ => false,
        }
    }

    pub fn closedness(&self) -> MinorClosedness {
        if self.declared_closed() {
            MinorClosedness::DeclaredClosed
        } else {
            MinorClosedness::DeclaredOpen
        }
    }

    /// Depends on the order of the graph, so obstructions may carry
    /// isolated vertices.
    pub fn order_sensitive(&self) -> bool {
        match self {
            Prop::OrderLe(_) => true,
            Prop::Named(n) => n.expansion().order_sensitive(),
            Prop::Apex(p) | Prop::Not(p) => p.order_sensitive(),
            Prop::And(a, b) | Prop::Or(a, b) => a.order_sensitive() || b.order_sensitive(),
            Prop::Quant(_, body) => {
                let mut leaves = Vec::new();
                body.leaves(&mut leaves);
                leaves.iter().any(|(_, p)| p.order_sensitive())
            }
            _ => false,
        }
    }
}

fn eval_quant(q: Quantifier, body: &Local, g: &Graph) -> bool {
    // A closed property that holds on g holds on every minor of g, so a
    // leaf over such a property is true without building the minor.
    let mut cache: Vec<(*const Prop, bool)> = Vec::new();
    let mut whole_ok = |p: &Prop| -> Option<bool> {
        if !p.declared_closed() {
            return None;
        }
        let key = p as *const Prop;
        if let Some((_, v)) = cache.iter().find(|(k, _)| *k == key) {
            return Some(*v);
        }
        let v = p.eval(g);
        cache.push((key, v));
        Some(v)
    };
    let vertex_site = |v| Site { g, vertex: Some(v), edge: None };
    let edge_site = |a, b| Site { g, vertex: None, edge: Some((a, b)) };
    match q {
        Quantifier::SomeVertex => (0..g.order()).any(|v| body.eval(&vertex_site(v), &mut whole_ok)),
        Quantifier::AllVertices => (0..g.order()).all(|v| body.eval(&vertex_site(v), &mut whole_ok)),
        Quantifier::SomeEdge => g.edges().any(|e| body.eval(&edge_site(e.u(), e.v()), &mut whole_ok)),
        Quantifier::AllEdges => g.edges().all(|e| body.eval(&edge_site(e.u(), e.v()), &mut whole_ok)),
        Quantifier::AllEdgeVertexPairs => g.edges().all(|e| {
            let others = g.vertex_mask() & !(1 << e.u()) & !(1 << e.v());
            bits(others).all(|v| {
                let site = Site { g, vertex: Some(v), edge: Some((e.u(), e.v())) };
                body.eval(&site, &mut whole_ok)
            })
        }),
    }
}

/// Scan every graph up to `max_order` for one that satisfies `p` while one
/// of its one-step minors does not. The first such graph in enumeration
/// order is reported.
pub fn check_minor_closed(p: &Prop, max_order: usize) -> Result<MinorClosedness> {
    check_minor_closed_with(p, max_order, Exec::default())
}

pub fn check_minor_closed_with(p: &Prop, max_order: usize, exec: Exec) -> Result<MinorClosedness> {
    p.check_capacity(max_order)?;
    let levels = enumerate_by_order(max_order, None, exec)?;
    for level in &levels {
        let found = par::find_first(exec, level, |g| {
            if !p.eval(g) {
                return None;
            }
            all_one_step_minors(g)
                .find(|m| !p.eval(&m.result))
                .map(|minor| Box::new(Counterexample { graph: *g, minor }))
        });
        if let Some(c) = found {
            return Ok(MinorClosedness::Checked { bound: max_order, counterexample: Some(c) });
        }
    }
    Ok(MinorClosedness::Checked { bound: max_order, counterexample: None })
}

// ---------------------------------------------------------------------------
// printing

fn prec(p: &Prop) -> u8 {
    match p {
        Prop::Or(..) => 1,
        Prop::And(..) => 2,
        Prop::Not(_) => 3,
        _ => 4,
    }
}

fn local_prec(l: &Local) -> u8 {
    match l {
        Local::Or(..) => 1,
        Local::And(..) => 2,
        Local::Not(_) => 3,
        Local::Leaf(..) => 4,
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, paren: bool, inner: &dyn fmt::Display) -> fmt::Result {
    if paren {
        write!(f, "({inner})")
    } else {
        write!(f, "{inner}")
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Const(true) => write!(f, "true"),
            Prop::Const(false) => write!(f, "false"),
            Prop::Planar => write!(f, "planar"),
            Prop::Outerplanar => write!(f, "outerplanar"),
            Prop::TwLe(k) => write!(f, "tw_le({k})"),
            Prop::EdgesLe(k) => write!(f, "e_le({k})"),
            Prop::OrderLe(k) => write!(f, "order_le({k})"),
            Prop::Named(n) => write!(f, "{}", n.name()),
            Prop::Apex(p) => write!(f, "apex({p})"),
            Prop::Not(p) => {
                write!(f, "not ")?;
                wrap(f, prec(p) < 3, p)
            }
            Prop::And(a, b) | Prop::Or(a, b) => {
                let (op, me) = if matches!(self, Prop::And(..)) { ("and", 2) } else { ("or", 1) };
                wrap(f, prec(a) < me, a)?;
                write!(f, " {op} ")?;
                wrap(f, prec(b) <= me, b)
            }
            Prop::Quant(q, body) => write!(f, "{}({body})", q.name()),
        }
    }
}

impl fmt::Display for Local {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Local::Leaf(t, p) => {
                write!(f, "{}:", t.name())?;
                wrap(f, prec(p) < 3, p)
            }
            Local::Not(x) => {
                write!(f, "not ")?;
                wrap(f, local_prec(x) < 3, x)
            }
            Local::And(a, b) | Local::Or(a, b) => {
                let (op, me) = if matches!(self, Local::And(..)) { ("and", 2) } else { ("or", 1) };
                wrap(f, local_prec(a) < me, a)?;
                write!(f, " {op} ")?;
                wrap(f, local_prec(b) <= me, b)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Colon,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            ':' => {
                out.push((i, Tok::Colon));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s = &text[start..i];
                let v = s.parse::<i64>().map_err(|_| Error::Parse { pos: start, msg: format!("bad number {s:?}") })?;
                out.push((start, Tok::Int(v)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_ascii_lowercase())));
            }
            _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.at(), msg: msg.into() })
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {t:?}"))
        }
    }

    fn or(&mut self) -> Result<Prop> {
        let mut lhs = self.and()?;
        while self.keyword("or") {
            let rhs = self.and()?;
            lhs = Prop::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Prop> {
        let mut lhs = self.unary()?;
        while self.keyword("and") {
            let rhs = self.unary()?;
            lhs = Prop::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Prop> {
        if self.keyword("not") {
            return Ok(Prop::Not(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn count_arg(&mut self) -> Result<u32> {
        self.expect(Tok::LParen)?;
        let k = match self.peek() {
            Some(Tok::Int(k)) if *k < 0 => return self.err(format!("negative bound {k}")),
            Some(Tok::Int(k)) if *k > u32::MAX as i64 => return self.err("bound too large"),
            Some(Tok::Int(k)) => *k as u32,
            _ => return self.err("expected a bound"),
        };
        self.pos += 1;
        self.expect(Tok::RParen)?;
        Ok(k)
    }

    fn primary(&mut self) -> Result<Prop> {
        let start = self.at();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.or()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(q) = Quantifier::ALL.iter().copied().find(|q| q.name() == name) {
                    self.expect(Tok::LParen)?;
                    let body = self.local_or(q)?;
                    self.expect(Tok::RParen)?;
                    return Ok(Prop::Quant(q, Box::new(body)));
                }
                match name.as_str() {
                    "true" => Ok(Prop::Const(true)),
                    "false" => Ok(Prop::Const(false)),
                    "planar" => Ok(Prop::Planar),
                    "outerplanar" => Ok(Prop::Outerplanar),
                    "tw_le" => Ok(Prop::TwLe(self.count_arg()?)),
                    "e_le" | "edges_le" => Ok(Prop::EdgesLe(self.count_arg()?)),
                    "order_le" => Ok(Prop::OrderLe(self.count_arg()?)),
                    "apex" => {
                        self.expect(Tok::LParen)?;
                        let p = self.or()?;
                        self.expect(Tok::RParen)?;
                        Ok(Prop::Apex(Box::new(p)))
                    }
                    other => match Named::from_name(other) {
                        Some(n) => Ok(Prop::Named(n)),
                        None => Err(Error::Parse { pos: start, msg: format!("unknown atom `{other}`") }),
                    },
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn local_or(&mut self, q: Quantifier) -> Result<Local> {
        let mut lhs = self.local_and(q)?;
        while self.keyword("or") {
            let rhs = self.local_and(q)?;
            lhs = Local::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn local_and(&mut self, q: Quantifier) -> Result<Local> {
        let mut lhs = self.local_unary(q)?;
        while self.keyword("and") {
            let rhs = self.local_unary(q)?;
            lhs = Local::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn local_unary(&mut self, q: Quantifier) -> Result<Local> {
        if self.keyword("not") {
            return Ok(Local::Not(Box::new(self.local_unary(q)?)));
        }
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let l = self.local_or(q)?;
            self.expect(Tok::RParen)?;
            return Ok(l);
        }
        let start = self.at();
        let tag = match self.peek() {
            Some(Tok::Ident(s)) if s == "rm" => Tag::Rm,
            Some(Tok::Ident(s)) if s == "del" => Tag::Del,
            Some(Tok::Ident(s)) if s == "con" => Tag::Con,
            _ => return self.err("expected rm:, del: or con: inside a quantifier"),
        };
        if !q.allows(tag) {
            return Err(Error::Parse { pos: start, msg: format!("`{}:` not allowed in {}", tag.name(), q.name()) });
        }
        self.pos += 1;
        self.expect(Tok::Colon)?;
        Ok(Local::Leaf(tag, Box::new(self.unary()?)))
    }
}

pub fn parse_property(text: &str) -> Result<Prop> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let prop = p.or()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(prop)
}

impl std::str::FromStr for Prop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Prop> {
        parse_property(s)
    }
}

/// Registry listing: name and definition text.
pub fn registry() -> Vec<(&'static str, &'static str)> {
    let mut out = vec![
        ("planar", "atom"),
        ("outerplanar", "atom"),
        ("tw_le(k)", "atom: treewidth at most k"),
        ("e_le(k)", "atom: at most k edges"),
        ("order_le(k)", "atom: at most k vertices"),
        ("apex(P)", "some_vertex(rm:P)"),
    ];
    out.extend(Named::ALL.iter().map(|n| (n.name(), n.definition())));
    out
}
