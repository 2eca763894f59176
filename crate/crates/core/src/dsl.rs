//! The specification language: contexts, soft sets, (co)topologies,
//! ditopologies and maps, one declaration per statement.
//!
//! ```text
//! context C1 { universe = {x, z}  params = {e1, e2, e3, e4} }
//! softset F in C1 over {e1, e2} { e1: {x}  e2: {x, z} }
//! softset G in C1 over {e1}     { e1: {x} }
//! topology tau in C1 = { F, G }        # null sets and whole set implicit
//! cotopology kappa in C1 = { G }
//! ditopology d in C1 = (tau, kappa)
//! map f : C1 -> C1 { points { x->x  z->x }  params { e1->e1  e2->e1  e3->e3  e4->e4 } }
//! ```
//!
//! Keywords are contextual, names must be declared before use and share one
//! namespace. Parsing reports every error it finds, each with a position.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use indexmap::IndexMap;

use crate::cotopo::SoftCotopology;
use crate::dito::Ditopology;
use crate::error::{Result, SoftError};
use crate::map::SoftMap;
use crate::soft::{Context, SoftSet};
use crate::topo::SoftTopology;

/// A 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

/// Every error found in one document, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char('\n')?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

/// A declaration and where it starts. Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Decl<T> {
    pub value: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Decl<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Eq> Eq for Decl<T> {}

/// A topology or cotopology as declared: member names and their values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDecl {
    pub context: String,
    pub members: Vec<String>,
    pub sets: Vec<SoftSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DitoDecl {
    pub context: String,
    pub tau: String,
    pub kappa: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDecl {
    pub context: String,
    pub set: SoftSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDecl {
    pub source: String,
    pub target: String,
    pub map: SoftMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Context,
    SoftSet,
    Topology,
    Cotopology,
    Ditopology,
    Map,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Context => "context",
            Kind::SoftSet => "softset",
            Kind::Topology => "topology",
            Kind::Cotopology => "cotopology",
            Kind::Ditopology => "ditopology",
            Kind::Map => "map",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    contexts: IndexMap<String, Decl<Arc<Context>>>,
    sets: IndexMap<String, Decl<SetDecl>>,
    topologies: IndexMap<String, Decl<FamilyDecl>>,
    cotopologies: IndexMap<String, Decl<FamilyDecl>>,
    ditopologies: IndexMap<String, Decl<DitoDecl>>,
    maps: IndexMap<String, Decl<MapDecl>>,
}

fn unknown(kind: Kind, name: &str) -> SoftError {
    SoftError::UnknownName {
        kind: kind.to_string(),
        name: name.to_string(),
    }
}

impl Document {
    pub fn new() -> Document {
        Document::default()
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        if self.contexts.contains_key(name) {
            Some(Kind::Context)
        } else if self.sets.contains_key(name) {
            Some(Kind::SoftSet)
        } else if self.topologies.contains_key(name) {
            Some(Kind::Topology)
        } else if self.cotopologies.contains_key(name) {
            Some(Kind::Cotopology)
        } else if self.ditopologies.contains_key(name) {
            Some(Kind::Ditopology)
        } else if self.maps.contains_key(name) {
            Some(Kind::Map)
        } else {
            None
        }
    }

    fn claim(&self, name: &str) -> Result<()> {
        if !is_ident(name) {
            return Err(SoftError::Argument(format!("`{name}` is not a valid name")));
        }
        match self.kind_of(name) {
            Some(k) => Err(SoftError::Argument(format!(
                "`{name}` is already declared as a {k}"
            ))),
            None => Ok(()),
        }
    }

    pub fn contexts(&self) -> impl Iterator<Item = (&str, &Arc<Context>)> {
        self.contexts.iter().map(|(k, d)| (k.as_str(), &d.value))
    }

    pub fn sets(&self) -> impl Iterator<Item = (&str, &SoftSet)> {
        self.sets.iter().map(|(k, d)| (k.as_str(), &d.value.set))
    }

    pub fn topologies(&self) -> impl Iterator<Item = (&str, &FamilyDecl)> {
        self.topologies.iter().map(|(k, d)| (k.as_str(), &d.value))
    }

    pub fn cotopologies(&self) -> impl Iterator<Item = (&str, &FamilyDecl)> {
        self.cotopologies
            .iter()
            .map(|(k, d)| (k.as_str(), &d.value))
    }

    pub fn ditopologies(&self) -> impl Iterator<Item = (&str, &DitoDecl)> {
        self.ditopologies
            .iter()
            .map(|(k, d)| (k.as_str(), &d.value))
    }

    pub fn maps(&self) -> impl Iterator<Item = (&str, &MapDecl)> {
        self.maps.iter().map(|(k, d)| (k.as_str(), &d.value))
    }

    pub fn span_of(&self, name: &str) -> Option<Span> {
        let s = [
            self.contexts.get(name).map(|d| d.span),
            self.sets.get(name).map(|d| d.span),
            self.topologies.get(name).map(|d| d.span),
            self.cotopologies.get(name).map(|d| d.span),
            self.ditopologies.get(name).map(|d| d.span),
            self.maps.get(name).map(|d| d.span),
        ];
        s.into_iter().flatten().next()
    }

    pub fn context(&self, name: &str) -> Result<&Arc<Context>> {
        self.contexts
            .get(name)
            .map(|d| &d.value)
            .ok_or_else(|| unknown(Kind::Context, name))
    }

    pub fn set(&self, name: &str) -> Result<&SoftSet> {
        self.sets
            .get(name)
            .map(|d| &d.value.set)
            .ok_or_else(|| unknown(Kind::SoftSet, name))
    }

    pub fn topology_decl(&self, name: &str) -> Result<&FamilyDecl> {
        self.topologies
            .get(name)
            .map(|d| &d.value)
            .ok_or_else(|| unknown(Kind::Topology, name))
    }

    pub fn cotopology_decl(&self, name: &str) -> Result<&FamilyDecl> {
        self.cotopologies
            .get(name)
            .map(|d| &d.value)
            .ok_or_else(|| unknown(Kind::Cotopology, name))
    }

    pub fn ditopology_decl(&self, name: &str) -> Result<&DitoDecl> {
        self.ditopologies
            .get(name)
            .map(|d| &d.value)
            .ok_or_else(|| unknown(Kind::Ditopology, name))
    }

    pub fn map_decl(&self, name: &str) -> Result<&MapDecl> {
        self.maps
            .get(name)
            .map(|d| &d.value)
            .ok_or_else(|| unknown(Kind::Map, name))
    }

    pub fn map(&self, name: &str) -> Result<&SoftMap> {
        self.map_decl(name).map(|d| &d.map)
    }

    /// The declared topology; an error if its members are not closed.
    pub fn topology(&self, name: &str) -> Result<SoftTopology> {
        let d = self.topology_decl(name)?;
        SoftTopology::new(self.context(&d.context)?, d.sets.clone())
    }

    pub fn cotopology(&self, name: &str) -> Result<SoftCotopology> {
        let d = self.cotopology_decl(name)?;
        SoftCotopology::new(self.context(&d.context)?, d.sets.clone())
    }

    pub fn ditopology(&self, name: &str) -> Result<Ditopology> {
        let d = self.ditopology_decl(name)?;
        Ditopology::new(self.topology(&d.tau)?, self.cotopology(&d.kappa)?)
    }

    pub fn add_context(&mut self, ctx: Arc<Context>) -> Result<()> {
        self.claim(ctx.name())?;
        for l in ctx.universe().iter().chain(ctx.params()) {
            if !is_ident(l) {
                return Err(SoftError::Argument(format!(
                    "label `{l}` is not a valid name"
                )));
            }
        }
        self.contexts.insert(
            ctx.name().to_string(),
            Decl {
                value: ctx,
                span: Span::default(),
            },
        );
        Ok(())
    }

    fn context_name_of(&self, ctx: &Arc<Context>) -> Result<String> {
        let found = self.context(ctx.name())?;
        if **found != **ctx {
            return Err(SoftError::ContextMismatch {
                expected: found.name().into(),
                found: ctx.name().into(),
            });
        }
        Ok(ctx.name().to_string())
    }

    pub fn add_set(&mut self, name: &str, set: SoftSet) -> Result<()> {
        self.claim(name)?;
        let context = self.context_name_of(set.context())?;
        self.sets.insert(
            name.into(),
            Decl {
                value: SetDecl { context, set },
                span: Span::default(),
            },
        );
        Ok(())
    }

    fn family_decl(&self, ctx: &str, members: &[&str]) -> Result<FamilyDecl> {
        let c = self.context(ctx)?.clone();
        let mut sets = Vec::new();
        for m in members {
            let s = self.set(m)?;
            crate::soft::ensure_same(&c, s.context())?;
            sets.push(s.clone());
        }
        Ok(FamilyDecl {
            context: ctx.into(),
            members: members.iter().map(|m| m.to_string()).collect(),
            sets,
        })
    }

    pub fn add_topology(&mut self, name: &str, ctx: &str, members: &[&str]) -> Result<()> {
        self.claim(name)?;
        let d = self.family_decl(ctx, members)?;
        self.topologies.insert(
            name.into(),
            Decl {
                value: d,
                span: Span::default(),
            },
        );
        Ok(())
    }

    pub fn add_cotopology(&mut self, name: &str, ctx: &str, members: &[&str]) -> Result<()> {
        self.claim(name)?;
        let d = self.family_decl(ctx, members)?;
        self.cotopologies.insert(
            name.into(),
            Decl {
                value: d,
                span: Span::default(),
            },
        );
        Ok(())
    }

    pub fn add_ditopology(&mut self, name: &str, ctx: &str, tau: &str, kappa: &str) -> Result<()> {
        self.claim(name)?;
        let t = self.topology_decl(tau)?;
        let k = self.cotopology_decl(kappa)?;
        for c in [&t.context, &k.context] {
            if c != ctx {
                return Err(SoftError::ContextMismatch {
                    expected: ctx.into(),
                    found: c.clone(),
                });
            }
        }
        let d = DitoDecl {
            context: ctx.into(),
            tau: tau.into(),
            kappa: kappa.into(),
        };
        self.ditopologies.insert(
            name.into(),
            Decl {
                value: d,
                span: Span::default(),
            },
        );
        Ok(())
    }

    pub fn add_map(&mut self, name: &str, map: SoftMap) -> Result<()> {
        self.claim(name)?;
        let source = self.context_name_of(map.source())?;
        let target = self.context_name_of(map.target())?;
        self.maps.insert(
            name.into(),
            Decl {
                value: MapDecl {
                    source,
                    target,
                    map,
                },
                span: Span::default(),
            },
        );
        Ok(())
    }

    /// Canonical text; parsing it yields an equal document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, d) in &self.contexts {
            let c = &d.value;
            let _ = writeln!(
                out,
                "context {name} {{ universe = {{{}}}  params = {{{}}} }}",
                c.universe().join(", "),
                c.params().join(", ")
            );
        }
        for (name, d) in &self.sets {
            let s = &d.value.set;
            let c = s.context();
            let dom = c.param_labels(s.domain()).join(", ");
            let entries: Vec<String> = s
                .entries()
                .map(|(e, v)| format!("{}: {{{}}}", c.param_label(e), c.point_labels(v).join(", ")))
                .collect();
            let body = if entries.is_empty() {
                " ".to_string()
            } else {
                format!(" {} ", entries.join("  "))
            };
            let _ = writeln!(
                out,
                "softset {name} in {} over {{{dom}}} {{{body}}}",
                d.value.context
            );
        }
        for (kw, fams) in [
            ("topology", &self.topologies),
            ("cotopology", &self.cotopologies),
        ] {
            for (name, d) in fams {
                let body = if d.value.members.is_empty() {
                    " ".to_string()
                } else {
                    format!(" {} ", d.value.members.join(", "))
                };
                let _ = writeln!(out, "{kw} {name} in {} = {{{body}}}", d.value.context);
            }
        }
        for (name, d) in &self.ditopologies {
            let v = &d.value;
            let _ = writeln!(
                out,
                "ditopology {name} in {} = ({}, {})",
                v.context, v.tau, v.kappa
            );
        }
        for (name, d) in &self.maps {
            let m = &d.value.map;
            let (s, t) = (m.source(), m.target());
            let points: Vec<String> = m
                .phi()
                .iter()
                .enumerate()
                .map(|(i, &j)| format!("{}->{}", s.point_label(i), t.point_label(j)))
                .collect();
            let params: Vec<String> = m
                .psi()
                .iter()
                .enumerate()
                .map(|(i, &j)| format!("{}->{}", s.param_label(i), t.param_label(j)))
                .collect();
            let _ = writeln!(
                out,
                "map {name} : {} -> {} {{ points {{ {} }}  params {{ {} }} }}",
                d.value.source,
                d.value.target,
                points.join("  "),
                params.join("  ")
            );
        }
        out
    }
}

/// An identifier and where it appears.
type Named = (String, Span);

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Eq,
    Arrow,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str, errors: &mut Vec<ParseError>) -> Vec<(Tok, Span)> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        chars.next();
        col += 1;
        let tok = match c {
            '\n' => {
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => continue,
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
                continue;
            }
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => Tok::Eq,
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                col += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut s = String::from(c);
                while let Some(&d) = chars
                    .peek()
                    .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
                {
                    s.push(d);
                    chars.next();
                    col += 1;
                }
                Tok::Ident(s)
            }
            other => {
                errors.push(ParseError {
                    span,
                    message: format!("unexpected character `{other}`"),
                });
                continue;
            }
        };
        out.push((tok, span));
    }
    out.push((Tok::Eof, Span { line, col }));
    out
}

const STATEMENT_KEYWORDS: [&str; 6] = [
    "context",
    "softset",
    "topology",
    "cotopology",
    "ditopology",
    "map",
];

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    errors: Vec<ParseError>,
    doc: Document,
}

/// Aborts the current statement; the error is already recorded. Only
/// syntax errors leave the token stream mid-statement.
#[derive(PartialEq, Eq)]
enum Abort {
    Syntax,
    Semantic,
}

type PResult<T> = std::result::Result<T, Abort>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&mut self, span: Span, message: String) -> PResult<T> {
        self.errors.push(ParseError { span, message });
        Err(Abort::Syntax)
    }

    fn reject<T>(&mut self, span: Span, message: String) -> PResult<T> {
        self.errors.push(ParseError { span, message });
        Err(Abort::Semantic)
    }

    fn error(&mut self, span: Span, message: String) {
        self.errors.push(ParseError { span, message });
    }

    fn expect(&mut self, want: Tok) -> PResult<Span> {
        let (t, s) = self.bump();
        if t == want {
            Ok(s)
        } else {
            self.pos -= usize::from(t != Tok::Eof);
            self.fail(s, format!("expected {want}, found {t}"))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Span)> {
        match self.bump() {
            (Tok::Ident(s), span) => Ok((s, span)),
            (t, span) => {
                self.pos -= usize::from(t != Tok::Eof);
                self.fail(span, format!("expected {what}, found {t}"))
            }
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.bump() {
            (Tok::Ident(s), _) if s == kw => Ok(()),
            (t, span) => {
                self.pos -= usize::from(t != Tok::Eof);
                self.fail(span, format!("expected `{kw}`, found {t}"))
            }
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    /// `{ a, b, c }`
    fn name_list(&mut self, what: &str) -> PResult<Vec<(String, Span)>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(self.ident(what)?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    /// Skips to the next statement keyword outside braces.
    fn recover(&mut self) {
        let mut depth = 0usize;
        loop {
            match self.peek() {
                Tok::Eof => return,
                Tok::LBrace | Tok::LParen => depth += 1,
                Tok::RBrace | Tok::RParen => depth = depth.saturating_sub(1),
                Tok::Ident(s) if depth == 0 && STATEMENT_KEYWORDS.contains(&s.as_str()) => return,
                _ => {}
            }
            self.bump();
        }
    }

    fn declare(&mut self, name: &str, span: Span) -> PResult<()> {
        if let Some(k) = self.doc.kind_of(name) {
            let prev = self.doc.span_of(name).unwrap_or_default();
            return self.reject(
                span,
                format!("`{name}` is already declared as a {k} at {prev}"),
            );
        }
        Ok(())
    }

    fn lookup_context(&mut self, name: &str, span: Span) -> PResult<Arc<Context>> {
        match self.doc.context(name) {
            Ok(c) => Ok(c.clone()),
            Err(_) => self.reject(span, format!("unknown context `{name}`")),
        }
    }

    fn statement(&mut self) -> PResult<()> {
        let (kw, span) = self.ident("a declaration")?;
        match kw.as_str() {
            "context" => self.context(span),
            "softset" => self.softset(span),
            "topology" => self.family(span, Kind::Topology),
            "cotopology" => self.family(span, Kind::Cotopology),
            "ditopology" => self.ditopology(span),
            "map" => self.map(span),
            other => self.fail(span, format!("unknown declaration `{other}`")),
        }
    }

    fn context(&mut self, at: Span) -> PResult<()> {
        let (name, nspan) = self.ident("a context name")?;
        self.expect(Tok::LBrace)?;
        let (mut universe, mut params) = (None, None);
        while !self.eat(&Tok::RBrace) {
            let (field, fspan) = self.ident("`universe` or `params`")?;
            self.expect(Tok::Eq)?;
            let labels = self.name_list("a label")?;
            let slot = match field.as_str() {
                "universe" => &mut universe,
                "params" => &mut params,
                other => return self.fail(fspan, format!("unknown context field `{other}`")),
            };
            if slot.replace(labels).is_some() {
                return self.fail(fspan, format!("`{field}` given twice"));
            }
        }
        let Some(universe) = universe else {
            return self.reject(at, format!("context `{name}` has no universe"));
        };
        let Some(params) = params else {
            return self.reject(at, format!("context `{name}` has no params"));
        };
        self.declare(&name, nspan)?;
        let u: Vec<&str> = universe.iter().map(|(s, _)| s.as_str()).collect();
        let p: Vec<&str> = params.iter().map(|(s, _)| s.as_str()).collect();
        match Context::new(name.clone(), u, p) {
            Ok(ctx) => {
                self.doc.contexts.insert(
                    name,
                    Decl {
                        value: ctx,
                        span: at,
                    },
                );
                Ok(())
            }
            Err(e) => self.reject(nspan, e.to_string()),
        }
    }

    fn softset(&mut self, at: Span) -> PResult<()> {
        let (name, nspan) = self.ident("a soft set name")?;
        self.keyword("in")?;
        let (cname, cspan) = self.ident("a context name")?;
        let over = match self.peek() {
            Tok::Ident(s) if s == "over" => {
                self.bump();
                Some(self.name_list("a parameter")?)
            }
            _ => None,
        };
        self.expect(Tok::LBrace)?;
        let mut entries: Vec<(Named, Vec<Named>)> = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let key = self.ident("a parameter")?;
            self.expect(Tok::Colon)?;
            let value = self.name_list("a point")?;
            entries.push((key, value));
            self.eat(&Tok::Comma);
        }
        self.declare(&name, nspan)?;
        let ctx = self.lookup_context(&cname, cspan)?;
        let mut ok = true;
        let mut resolved = Vec::new();
        let mut seen = Vec::new();
        for ((key, kspan), value) in &entries {
            let e = match ctx.param_index(key) {
                Ok(e) => e,
                Err(_) => {
                    self.error(
                        *kspan,
                        format!("unknown parameter `{key}` in context `{cname}`"),
                    );
                    ok = false;
                    continue;
                }
            };
            if seen.contains(&e) {
                self.error(*kspan, format!("parameter `{key}` given twice"));
                ok = false;
                continue;
            }
            seen.push(e);
            let mut pts = Vec::new();
            for (x, xspan) in value {
                match ctx.point_index(x) {
                    Ok(i) => pts.push(i),
                    Err(_) => {
                        self.error(*xspan, format!("unknown point `{x}` in context `{cname}`"));
                        ok = false;
                    }
                }
            }
            resolved.push((e, pts));
        }
        if let Some(over) = &over {
            for (p, pspan) in over {
                match ctx.param_index(p) {
                    Ok(e) if !seen.contains(&e) => {
                        self.error(
                            *pspan,
                            format!("parameter `{p}` is in the domain but has no value"),
                        );
                        ok = false;
                    }
                    Ok(_) => {}
                    Err(_) => {
                        self.error(
                            *pspan,
                            format!("unknown parameter `{p}` in context `{cname}`"),
                        );
                        ok = false;
                    }
                }
            }
            for ((key, kspan), _) in &entries {
                if !over.iter().any(|(p, _)| p == key) {
                    self.error(
                        *kspan,
                        format!("parameter `{key}` has a value but is not in the domain"),
                    );
                    ok = false;
                }
            }
        }
        if !ok {
            return Err(Abort::Semantic);
        }
        let domain = crate::bits::ParamSet::from_indices(resolved.iter().map(|(e, _)| *e));
        let set = SoftSet::new(&ctx, domain, |e| {
            let pts = &resolved
                .iter()
                .find(|(k, _)| *k == e)
                .expect("domain from entries")
                .1;
            crate::bits::PointSet::from_indices(pts.iter().copied())
        })
        .expect("indices resolved against the context");
        self.doc.sets.insert(
            name,
            Decl {
                value: SetDecl {
                    context: cname,
                    set,
                },
                span: at,
            },
        );
        Ok(())
    }

    fn family(&mut self, at: Span, kind: Kind) -> PResult<()> {
        let (name, nspan) = self.ident(&format!("a {kind} name"))?;
        self.keyword("in")?;
        let (cname, cspan) = self.ident("a context name")?;
        self.expect(Tok::Eq)?;
        let members = self.name_list("a soft set name")?;
        self.declare(&name, nspan)?;
        let ctx = self.lookup_context(&cname, cspan)?;
        let mut sets = Vec::new();
        let mut ok = true;
        for (m, mspan) in &members {
            match self.doc.sets.get(m) {
                Some(d) if d.value.context == cname && *d.value.set.context() == ctx => {
                    sets.push(d.value.set.clone())
                }
                Some(d) => {
                    let msg = format!(
                        "soft set `{m}` belongs to context `{}`, not `{cname}`",
                        d.value.context
                    );
                    self.error(*mspan, msg);
                    ok = false;
                }
                None => {
                    self.error(*mspan, format!("unknown soft set `{m}`"));
                    ok = false;
                }
            }
        }
        if !ok {
            return Err(Abort::Semantic);
        }
        let value = FamilyDecl {
            context: cname,
            members: members.into_iter().map(|(m, _)| m).collect(),
            sets,
        };
        let target = if kind == Kind::Topology {
            &mut self.doc.topologies
        } else {
            &mut self.doc.cotopologies
        };
        target.insert(name, Decl { value, span: at });
        Ok(())
    }

    fn ditopology(&mut self, at: Span) -> PResult<()> {
        let (name, nspan) = self.ident("a ditopology name")?;
        self.keyword("in")?;
        let (cname, cspan) = self.ident("a context name")?;
        self.expect(Tok::Eq)?;
        self.expect(Tok::LParen)?;
        let (tau, tspan) = self.ident("a topology name")?;
        self.expect(Tok::Comma)?;
        let (kappa, kspan) = self.ident("a cotopology name")?;
        self.expect(Tok::RParen)?;
        self.declare(&name, nspan)?;
        self.lookup_context(&cname, cspan)?;
        let mut ok = true;
        for (n, s, table, kind) in [
            (&tau, tspan, &self.doc.topologies, Kind::Topology),
            (&kappa, kspan, &self.doc.cotopologies, Kind::Cotopology),
        ] {
            let msg = match table.get(n) {
                None => format!("unknown {kind} `{n}`"),
                Some(d) if d.value.context != cname => {
                    format!(
                        "{kind} `{n}` belongs to context `{}`, not `{cname}`",
                        d.value.context
                    )
                }
                Some(_) => continue,
            };
            self.errors.push(ParseError {
                span: s,
                message: msg,
            });
            ok = false;
        }
        if !ok {
            return Err(Abort::Semantic);
        }
        self.doc.ditopologies.insert(
            name,
            Decl {
                value: DitoDecl {
                    context: cname,
                    tau,
                    kappa,
                },
                span: at,
            },
        );
        Ok(())
    }

    fn pairs(&mut self, section: &str) -> PResult<Vec<(Named, Named)>> {
        self.keyword(section)?;
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let from = self.ident("a label")?;
            self.expect(Tok::Arrow)?;
            let to = self.ident("a label")?;
            out.push((from, to));
            self.eat(&Tok::Comma);
        }
        Ok(out)
    }

    fn map(&mut self, at: Span) -> PResult<()> {
        let (name, nspan) = self.ident("a map name")?;
        self.expect(Tok::Colon)?;
        let (sname, sspan) = self.ident("a context name")?;
        self.expect(Tok::Arrow)?;
        let (tname, tspan) = self.ident("a context name")?;
        self.expect(Tok::LBrace)?;
        let points = self.pairs("points")?;
        let params = self.pairs("params")?;
        self.expect(Tok::RBrace)?;
        self.declare(&name, nspan)?;
        let source = self.lookup_context(&sname, sspan);
        let target = self.lookup_context(&tname, tspan);
        let (source, target) = (source?, target?);
        let mut ok = true;
        let mut resolve = |p: &mut Parser, pairs: &[(Named, Named)], points: bool| {
            let (n_from, what) = if points {
                (source.n_points(), "point")
            } else {
                (source.n_params(), "parameter")
            };
            let mut table: Vec<Option<usize>> = vec![None; n_from];
            for ((from, fspan), (to, tspan)) in pairs {
                let i = if points {
                    source.point_index(from)
                } else {
                    source.param_index(from)
                };
                let j = if points {
                    target.point_index(to)
                } else {
                    target.param_index(to)
                };
                match (i, j) {
                    (Ok(i), Ok(j)) => {
                        if table[i].replace(j).is_some() {
                            p.error(*fspan, format!("{what} `{from}` mapped twice"));
                            ok = false;
                        }
                    }
                    (Err(_), _) => {
                        p.error(
                            *fspan,
                            format!("unknown {what} `{from}` in context `{sname}`"),
                        );
                        ok = false;
                    }
                    (_, Err(_)) => {
                        p.error(
                            *tspan,
                            format!("unknown {what} `{to}` in context `{tname}`"),
                        );
                        ok = false;
                    }
                }
            }
            for (i, slot) in table.iter().enumerate() {
                if slot.is_none() {
                    let label = if points {
                        source.point_label(i)
                    } else {
                        source.param_label(i)
                    };
                    p.error(at, format!("map `{name}` leaves {what} `{label}` unmapped"));
                    ok = false;
                }
            }
            table
                .into_iter()
                .map(|x| x.unwrap_or(0))
                .collect::<Vec<_>>()
        };
        let phi = resolve(self, &points, true);
        let psi = resolve(self, &params, false);
        if !ok {
            return Err(Abort::Semantic);
        }
        let map = SoftMap::new(&source, &target, phi, psi)
            .expect("tables resolved against both contexts");
        self.doc.maps.insert(
            name,
            Decl {
                value: MapDecl {
                    source: sname,
                    target: tname,
                    map,
                },
                span: at,
            },
        );
        Ok(())
    }
}

pub fn parse(text: &str) -> std::result::Result<Document, ParseErrors> {
    let mut errors = Vec::new();
    let toks = lex(text, &mut errors);
    let mut p = Parser {
        toks,
        pos: 0,
        errors,
        doc: Document::new(),
    };
    while *p.peek() != Tok::Eof {
        let start = p.pos;
        if p.statement() == Err(Abort::Syntax) {
            if p.pos == start {
                p.bump();
            }
            p.recover();
        }
    }
    let mut errors = p.errors;
    if errors.is_empty() {
        Ok(p.doc)
    } else {
        errors.sort_by_key(|e| e.span);
        Err(ParseErrors(errors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: &str = "\
context C1 { universe = {x, z}  params = {e1, e2, e3, e4} }
softset F in C1 over {e1, e2} { e1: {x}  e2: {x, z} }
softset G in C1 over {e1}     { e1: {x} }
topology tau in C1 = { F, G }        # null sets and whole set implicit
";

    #[test]
    fn parses_fixture() {
        let doc = parse(P1).unwrap();
        assert_eq!(doc.contexts().count(), 1);
        assert_eq!(doc.sets().count(), 2);
        assert_eq!(doc.topologies().count(), 1);
        let tau = doc.topology("tau").unwrap();
        assert_eq!(tau.members().len(), 2);
        assert_eq!(doc.span_of("G"), Some(Span { line: 3, col: 1 }));
    }

    #[test]
    fn round_trip() {
        let doc = parse(P1).unwrap();
        let text = doc.to_text();
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn maps_and_ditopologies() {
        let text = "\
context U { universe = {a, c} params = {e1, e2} }
context V { universe = {1, 2} params = {p1, p2} }
softset K in U over {e1, e2} { e1: {c} e2: {c} }
softset L in V { p1: {1, 2} p2: {2} }
cotopology k1 in U = { K }
cotopology k2 in V = { L }
topology t1 in U = {}
ditopology d in U = (t1, k1)
map f : U -> V { points { a->1  c->2 }  params { e1->p2  e2->p2 } }
";
        let doc = parse(text).unwrap();
        let f = doc.map("f").unwrap();
        assert_eq!(f.phi(), &[0, 1]);
        assert_eq!(f.psi(), &[1, 1]);
        assert!(doc.ditopology("d").is_ok());
        assert_eq!(parse(&doc.to_text()).unwrap(), doc);
    }

    #[test]
    fn collects_every_error() {
        let text = "\
context C { universe = {x} params = {e} }
softset F in C { e: {y} }
softset F in C { e: {x} }
softset H in D { e: {x} }
topology t in C = { F, Q }
map m : C -> C { points { } params { e->e } }
bogus
";
        let errs = parse(text).unwrap_err().0;
        let lines: Vec<usize> = errs.iter().map(|e| e.span.line).collect();
        assert_eq!(lines, [2, 4, 5, 6, 7], "{errs:?}");
        assert!(errs[0].message.contains("unknown point `y`"));
        assert!(errs[1].message.contains("unknown context `D`"));
        assert!(errs[2].message.contains("unknown soft set `Q`"));
        assert!(errs[3].message.contains("unmapped"));
        // the duplicate F is reported on its own line
        let text = "context C { universe = {x} params = {e} }\nsoftset F in C { e: {x} }\nsoftset F in C { e: {} }\n";
        let errs = parse(text).unwrap_err().0;
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].span, Span { line: 3, col: 9 });
        assert!(errs[0].message.contains("already declared"));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let errs = parse("context C { universe = {x,} params = {e} }")
            .unwrap_err()
            .0;
        assert_eq!(errs[0].span, Span { line: 1, col: 27 });
        let errs = parse("softset $").unwrap_err().0;
        assert!(errs
            .iter()
            .any(|e| e.message.contains("unexpected character")));
    }

    #[test]
    fn domain_must_match_entries() {
        let text = "context C { universe = {x} params = {e1, e2} }\nsoftset F in C over {e1, e2} { e1: {x} }\n";
        let errs = parse(text).unwrap_err().0;
        assert!(errs[0].message.contains("has no value"));
    }
}
