//! The job text format.
//!
//! ```text
//! job    := (stmt ';')*
//! stmt   := 'ring' FIELD '[' var (',' var)* ']' ('weights' int (',' int)*)?
//!         | 'ideal' NAME '=' poly (',' poly)*
//!         | 'matrix' NAME '=' '[' row ('|' row)* ']'      row := poly (',' poly)*
//!         | 'poly' NAME '=' poly
//!         | 'cmd' COMMAND ('--' FLAG VALUE?)*
//! FIELD  := 'GF(' prime ')' | 'QQ'
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Polynomials are
//! stored in the canonical text of the declared ring, so printing a parsed
//! job and parsing it again yields an equal [`JobSpec`].

use std::fmt;
use std::str::FromStr;

use evoalg::{
    AlgebraError, Gf, GfKind, MonomialOrder, Polynomial, Rational, Rationals, Ring, RingRef,
};

/// A parse error with its location in the job text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobError {
    /// Byte offset into the job text.
    pub offset: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for JobError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => f.write_str("QQ"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "QQ" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("unknown field {s:?}; expected GF(p) or QQ"))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| format!("bad characteristic {inner:?}"))?;
        GfKind::new(p).map_err(|e| e.to_string())?;
        Ok(FieldSpec::Prime(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    Member,
    SymbolicPower,
    Fitting,
    EvolutionCheck,
    Toric,
    PaperExample,
    Kunz,
    HilbertBurch,
    Conjecture,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Gb,
        Command::Member,
        Command::SymbolicPower,
        Command::Fitting,
        Command::EvolutionCheck,
        Command::Toric,
        Command::PaperExample,
        Command::Kunz,
        Command::HilbertBurch,
        Command::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Member => "member",
            Command::SymbolicPower => "symbolic-power",
            Command::Fitting => "fitting",
            Command::EvolutionCheck => "evolution-check",
            Command::Toric => "toric",
            Command::PaperExample => "paper-example",
            Command::Kunz => "kunz",
            Command::HilbertBurch => "hilbert-burch",
            Command::Conjecture => "conjecture",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderFlag {
    Grevlex,
    Lex,
}

impl OrderFlag {
    pub fn name(self) -> &'static str {
        match self {
            OrderFlag::Grevlex => "grevlex",
            OrderFlag::Lex => "lex",
        }
    }

    pub fn order(self) -> MonomialOrder {
        match self {
            OrderFlag::Grevlex => MonomialOrder::Grevlex,
            OrderFlag::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyFlag {
    Saturation,
    Monomial,
    Fitting,
}

impl StrategyFlag {
    pub fn name(self) -> &'static str {
        match self {
            StrategyFlag::Saturation => "saturation",
            StrategyFlag::Monomial => "monomial",
            StrategyFlag::Fitting => "fitting",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub order: Option<OrderFlag>,
    pub strategy: Option<StrategyFlag>,
    /// Saturating element, canonical text.
    pub h: Option<String>,
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub p: Option<u64>,
    pub d: Option<u32>,
    pub field: Option<FieldSpec>,
    pub exponents: Option<Vec<u32>>,
    pub out: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub weights: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub ring: Option<RingDecl>,
    /// Named generator lists.
    pub ideals: Vec<(String, Vec<String>)>,
    /// Named matrices, row by row.
    pub matrices: Vec<(String, Vec<Vec<String>>)>,
    pub polys: Vec<(String, String)>,
    pub command: Command,
    pub flags: Flags,
}

/// A declared ring over either supported field.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Prime(RingRef<Gf>),
    Rational(RingRef<Rational>),
}

impl AnyRing {
    pub fn build(decl: &RingDecl, order: Option<OrderFlag>) -> Result<Self, AlgebraError> {
        Ok(match decl.field {
            FieldSpec::Prime(p) => AnyRing::Prime(configure(
                Ring::<Gf>::new(GfKind::new(p)?, &decl.vars)?,
                decl,
                order,
            )?),
            FieldSpec::Rationals => AnyRing::Rational(configure(
                Ring::<Rational>::new(Rationals, &decl.vars)?,
                decl,
                order,
            )?),
        })
    }

    /// Canonical text of a polynomial.
    pub fn canonical(&self, text: &str) -> Result<String, AlgebraError> {
        Ok(match self {
            AnyRing::Prime(r) => Polynomial::parse(r, text)?.to_string(),
            AnyRing::Rational(r) => Polynomial::parse(r, text)?.to_string(),
        })
    }
}

fn configure<F: evoalg::Field>(
    ring: RingRef<F>,
    decl: &RingDecl,
    order: Option<OrderFlag>,
) -> Result<RingRef<F>, AlgebraError> {
    let ring = match &decl.weights {
        Some(w) => ring.with_weights(w.clone())?,
        None => ring,
    };
    match order {
        Some(o) => ring.with_order(o.order()),
        None => Ok(ring),
    }
}

impl JobSpec {
    /// The ideal named `I`, else the first declared one.
    pub fn primary_ideal(&self) -> Option<&(String, Vec<String>)> {
        self.ideals
            .iter()
            .find(|(n, _)| n == "I")
            .or_else(|| self.ideals.first())
    }

    /// The matrix named `M`, else the first declared one.
    pub fn primary_matrix(&self) -> Option<&(String, Vec<Vec<String>>)> {
        self.matrices
            .iter()
            .find(|(n, _)| n == "M")
            .or_else(|| self.matrices.first())
    }

    pub fn ring(&self) -> Option<Result<AnyRing, AlgebraError>> {
        self.ring
            .as_ref()
            .map(|d| AnyRing::build(d, self.flags.order))
    }

    /// Merges flags given outside the job text (later wins). Polynomials
    /// are re-canonicalized when the order changes.
    pub fn apply_flags(&mut self, text: &str) -> Result<(), JobError> {
        let src = Source::new(text);
        let mut extra = Flags::default();
        let h = parse_flags(&src, text, 0, &mut extra)?;
        let f = &mut self.flags;
        macro_rules! merge {
            ($($name:ident),*) => { $( if extra.$name.is_some() { f.$name = extra.$name; } )* };
        }
        merge!(order, strategy, budget, seed, p, d, field, exponents, out);
        let ring = match self.ring() {
            Some(r) => Some(r.map_err(|e| src.error(0, e.to_string()))?),
            None => None,
        };
        if let Some(h) = h {
            let ring = ring
                .as_ref()
                .ok_or_else(|| src.error(h.at, "--h needs a declared ring".into()))?;
            self.flags.h = Some(
                ring.canonical(h.text)
                    .map_err(|e| src.error(h.at, e.to_string()))?,
            );
        }
        if let Some(ring) = ring {
            let canon = |t: &mut String| -> Result<(), JobError> {
                *t = ring.canonical(t).map_err(|e| src.error(0, e.to_string()))?;
                Ok(())
            };
            for (_, gens) in &mut self.ideals {
                gens.iter_mut().try_for_each(canon)?;
            }
            for (_, rows) in &mut self.matrices {
                rows.iter_mut().flatten().try_for_each(canon)?;
            }
            self.polys.iter_mut().try_for_each(|(_, p)| canon(p))?;
            if let Some(h) = &mut self.flags.h {
                canon(h)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for JobSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.ring {
            write!(f, "ring {}[{}]", r.field, r.vars.join(","))?;
            if let Some(w) = &r.weights {
                write!(f, " weights {}", join(w))?;
            }
            writeln!(f, ";")?;
        }
        for (name, gens) in &self.ideals {
            writeln!(f, "ideal {name} = {};", gens.join(", "))?;
        }
        for (name, rows) in &self.matrices {
            let rows: Vec<String> = rows.iter().map(|r| r.join(", ")).collect();
            writeln!(f, "matrix {name} = [{}];", rows.join(" | "))?;
        }
        for (name, p) in &self.polys {
            writeln!(f, "poly {name} = {p};")?;
        }
        write!(f, "cmd {}", self.command.name())?;
        let fl = &self.flags;
        if let Some(o) = fl.order {
            write!(f, " --order {}", o.name())?;
        }
        if let Some(s) = fl.strategy {
            write!(f, " --strategy {}", s.name())?;
        }
        if let Some(h) = &fl.h {
            write!(f, " --h {h}")?;
        }
        if let Some(b) = fl.budget {
            write!(f, " --budget {b}")?;
        }
        if let Some(s) = fl.seed {
            write!(f, " --seed {s}")?;
        }
        if let Some(p) = fl.p {
            write!(f, " --p {p}")?;
        }
        if let Some(d) = fl.d {
            write!(f, " --d {d}")?;
        }
        if let Some(k) = fl.field {
            write!(f, " --field {k}")?;
        }
        if let Some(e) = &fl.exponents {
            write!(f, " --exponents {}", join(e))?;
        }
        if let Some(o) = &fl.out {
            write!(f, " --out {o}")?;
        }
        writeln!(f, ";")
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// The original text, for turning byte offsets into line and column.
struct Source<'a> {
    text: &'a str,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        Source { text }
    }

    fn error(&self, offset: usize, message: String) -> JobError {
        let offset = offset.min(self.text.len());
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        JobError {
            offset,
            line,
            column,
            message,
        }
    }
}

/// Substring with its byte offset in the job text.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Self {
        let start = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            at: self.at + start,
        }
    }

    fn split(self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut at = self.at;
        for piece in self.text.split(sep) {
            out.push(Span { text: piece, at });
            at += piece.len() + sep.len_utf8();
        }
        out
    }

    fn slice(self, from: usize, to: usize) -> Self {
        Span {
            text: &self.text[from..to],
            at: self.at + from,
        }
    }

    /// Leading token up to whitespace, and the rest.
    fn word(self) -> (Span<'a>, Span<'a>) {
        let t = self.trim();
        let end = t.text.find(char::is_whitespace).unwrap_or(t.text.len());
        (t.slice(0, end), t.slice(end, t.text.len()))
    }
}

/// Polynomial text awaiting the ring.
struct Pending<'a> {
    span: Span<'a>,
}

struct Draft<'a> {
    ring: Option<RingDecl>,
    ring_at: usize,
    ideals: Vec<(String, Vec<Pending<'a>>)>,
    matrices: Vec<(String, Vec<Vec<Pending<'a>>>)>,
    polys: Vec<(String, Pending<'a>)>,
    command: Option<(Command, usize)>,
    flags: Flags,
    h: Option<Pending<'a>>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a job. Polynomials are validated against the declared ring and
/// stored in canonical form.
pub fn parse_job(text: &str) -> Result<JobSpec, JobError> {
    let src = Source::new(text);
    // comments become spaces of equal byte length, so offsets stay valid
    let mut cleaned = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        match c {
            '\n' => {
                in_comment = false;
                cleaned.push('\n');
            }
            '#' => {
                in_comment = true;
                cleaned.push(' ');
            }
            _ if in_comment => cleaned.extend(std::iter::repeat_n(' ', c.len_utf8())),
            _ => cleaned.push(c),
        }
    }
    let whole = Span {
        text: &cleaned,
        at: 0,
    };
    let mut pieces = whole.split(';');
    let last = pieces.pop().unwrap();
    if !last.text.trim().is_empty() {
        return Err(src.error(
            last.trim().at,
            "statement is missing its terminating ';'".into(),
        ));
    }
    let mut draft = Draft {
        ring: None,
        ring_at: 0,
        ideals: Vec::new(),
        matrices: Vec::new(),
        polys: Vec::new(),
        command: None,
        flags: Flags::default(),
        h: None,
    };
    for stmt in pieces {
        let stmt = stmt.trim();
        if stmt.text.is_empty() {
            continue;
        }
        statement(&src, stmt, &mut draft)?;
    }
    finish(&src, draft)
}

fn statement<'a>(src: &Source, stmt: Span<'a>, draft: &mut Draft<'a>) -> Result<(), JobError> {
    let (kw, rest) = stmt.word();
    match kw.text {
        "ring" => {
            if draft.ring.is_some() {
                return Err(src.error(kw.at, "a job declares at most one ring".into()));
            }
            draft.ring = Some(ring_decl(src, rest.trim())?);
            draft.ring_at = kw.at;
        }
        "ideal" => {
            let (name, body) = assignment(src, rest, "ideal")?;
            if draft.ideals.iter().any(|(n, _)| *n == name) {
                return Err(src.error(rest.trim().at, format!("ideal {name} declared twice")));
            }
            let gens = body
                .split(',')
                .into_iter()
                .map(|s| Pending { span: s.trim() })
                .collect();
            draft.ideals.push((name, gens));
        }
        "matrix" => {
            let (name, body) = assignment(src, rest, "matrix")?;
            if draft.matrices.iter().any(|(n, _)| *n == name) {
                return Err(src.error(rest.trim().at, format!("matrix {name} declared twice")));
            }
            let inner = body
                .text
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| src.error(body.at, "matrix body must be enclosed in [ ]".into()))?;
            let inner = Span {
                text: inner,
                at: body.at + 1,
            };
            let rows: Vec<Vec<Pending>> = inner
                .split('|')
                .into_iter()
                .map(|row| {
                    row.split(',')
                        .into_iter()
                        .map(|s| Pending { span: s.trim() })
                        .collect()
                })
                .collect();
            let width = rows[0].len();
            if let Some(bad) = rows.iter().find(|r| r.len() != width) {
                return Err(src.error(
                    bad[0].span.at,
                    format!("row has {} entries, expected {width}", bad.len()),
                ));
            }
            draft.matrices.push((name, rows));
        }
        "poly" => {
            let (name, body) = assignment(src, rest, "poly")?;
            if draft.polys.iter().any(|(n, _)| *n == name) {
                return Err(src.error(rest.trim().at, format!("poly {name} declared twice")));
            }
            draft.polys.push((name, Pending { span: body }));
        }
        "cmd" => {
            if draft.command.is_some() {
                return Err(src.error(kw.at, "a job runs exactly one command".into()));
            }
            let (name, flags) = rest.word();
            let command = Command::from_name(name.text).ok_or_else(|| {
                let names: Vec<&str> = Command::ALL.iter().map(|c| c.name()).collect();
                src.error(
                    name.at,
                    format!(
                        "unknown command {:?}; expected one of {}",
                        name.text,
                        names.join(", ")
                    ),
                )
            })?;
            draft.command = Some((command, name.at));
            draft.h = parse_flags(src, flags.text, flags.at, &mut draft.flags)?
                .map(|span| Pending { span });
        }
        other => return Err(src.error(kw.at, format!("unknown statement {other:?}"))),
    }
    Ok(())
}

fn ring_decl(src: &Source, body: Span) -> Result<RingDecl, JobError> {
    let open = body
        .text
        .find('[')
        .ok_or_else(|| src.error(body.at, "expected FIELD[vars]".into()))?;
    let close = body
        .text
        .rfind(']')
        .ok_or_else(|| src.error(body.at + open, "unclosed '['".into()))?;
    let field_span = body.slice(0, open).trim();
    let field = field_span
        .text
        .parse::<FieldSpec>()
        .map_err(|m| src.error(field_span.at, m))?;
    let mut vars = Vec::new();
    for v in body.slice(open + 1, close).split(',') {
        let v = v.trim();
        if !is_identifier(v.text) {
            return Err(src.error(v.at, format!("invalid variable name {:?}", v.text)));
        }
        if vars.iter().any(|w: &String| w == v.text) {
            return Err(src.error(v.at, format!("duplicate variable {}", v.text)));
        }
        vars.push(v.text.to_string());
    }
    let tail = body.slice(close + 1, body.text.len()).trim();
    let weights = if tail.text.is_empty() {
        None
    } else {
        let (kw, list) = tail.word();
        if kw.text != "weights" {
            return Err(src.error(
                kw.at,
                format!("unexpected {:?} after the variable list", kw.text),
            ));
        }
        let w = int_list(list.trim()).map_err(|m| src.error(list.trim().at, m))?;
        if w.len() != vars.len() || w.contains(&0) {
            return Err(src.error(
                list.trim().at,
                format!("need {} positive weights", vars.len()),
            ));
        }
        Some(w)
    };
    Ok(RingDecl {
        field,
        vars,
        weights,
    })
}

fn int_list(s: Span) -> Result<Vec<u32>, String> {
    s.text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected a list of integers, got {:?}", s.text))
        })
        .collect()
}

fn assignment<'a>(
    src: &Source,
    rest: Span<'a>,
    what: &str,
) -> Result<(String, Span<'a>), JobError> {
    let rest = rest.trim();
    let eq = rest
        .text
        .find('=')
        .ok_or_else(|| src.error(rest.at, format!("expected `{what} NAME = ...`")))?;
    let name = rest.slice(0, eq).trim();
    if !is_identifier(name.text) {
        return Err(src.error(name.at, format!("invalid name {:?}", name.text)));
    }
    let body = rest.slice(eq + 1, rest.text.len()).trim();
    if body.text.is_empty() {
        return Err(src.error(body.at, format!("empty {what} body")));
    }
    Ok((name.text.to_string(), body))
}

/// Flags of a `cmd` statement. Returns the raw `--h` value, which can only be
/// validated once the ring is known.
fn parse_flags<'a>(
    src: &Source,
    text: &'a str,
    at: usize,
    flags: &mut Flags,
) -> Result<Option<Span<'a>>, JobError> {
    let all = Span { text, at };
    let mut starts = Vec::new();
    let bytes = text.as_bytes();
    for k in 0..bytes.len().saturating_sub(1) {
        if bytes[k] == b'-'
            && bytes[k + 1] == b'-'
            && (k == 0 || bytes[k - 1].is_ascii_whitespace())
        {
            starts.push(k);
        }
    }
    let first = starts.first().copied().unwrap_or(text.len());
    let lead = all.slice(0, first).trim();
    if !lead.text.is_empty() {
        return Err(src.error(
            lead.at,
            format!("unexpected {:?}; flags start with --", lead.text),
        ));
    }
    let mut h = None;
    let mut seen: Vec<&str> = Vec::new();
    for (i, &s) in starts.iter().enumerate() {
        let end = starts.get(i + 1).copied().unwrap_or(text.len());
        let seg = all.slice(s + 2, end);
        let (name, value) = seg.word();
        let value = value.trim();
        if seen.contains(&name.text) {
            return Err(src.error(name.at, format!("flag --{} given twice", name.text)));
        }
        seen.push(name.text);
        let bad = |m: String| src.error(value.at, format!("bad value for --{}: {m}", name.text));
        let need = |v: Span<'a>| -> Result<&'a str, JobError> {
            if v.text.is_empty() {
                Err(bad("missing value".into()))
            } else {
                Ok(v.text)
            }
        };
        match name.text {
            "order" => {
                flags.order = Some(match need(value)? {
                    "grevlex" => OrderFlag::Grevlex,
                    "lex" => OrderFlag::Lex,
                    o => return Err(bad(format!("{o:?} is not grevlex or lex"))),
                })
            }
            "strategy" => {
                flags.strategy = Some(match need(value)? {
                    "saturation" => StrategyFlag::Saturation,
                    "monomial" => StrategyFlag::Monomial,
                    "fitting" => StrategyFlag::Fitting,
                    o => return Err(bad(format!("{o:?} is not saturation, monomial or fitting"))),
                })
            }
            "h" => {
                need(value)?;
                h = Some(value);
            }
            "budget" => flags.budget = Some(need(value)?.parse().map_err(|_| bad("expected an integer".into()))?),
            "seed" => flags.seed = Some(need(value)?.parse().map_err(|_| bad("expected an integer".into()))?),
            "p" => {
                let p: u64 = need(value)?.parse().map_err(|_| bad("expected an integer".into()))?;
                GfKind::new(p).map_err(|e| bad(e.to_string()))?;
                flags.p = Some(p);
            }
            "d" => flags.d = Some(need(value)?.parse().map_err(|_| bad("expected an integer".into()))?),
            "field" => flags.field = Some(need(value)?.parse().map_err(bad)?),
            "exponents" => flags.exponents = Some(int_list(value).map_err(bad)?),
            "out" => flags.out = Some(need(value)?.to_string()),
            other => {
                return Err(src.error(
                    name.at,
                    format!(
                        "unknown flag --{other}; expected --order, --strategy, --h, --budget, --seed, --p, --d, \
                         --field, --exponents or --out"
                    ),
                ))
            }
        }
    }
    Ok(h)
}

fn finish(src: &Source, draft: Draft) -> Result<JobSpec, JobError> {
    let (command, _) = draft
        .command
        .ok_or_else(|| src.error(src.text.len(), "no `cmd` statement".into()))?;
    let ring = match &draft.ring {
        Some(decl) => Some(
            AnyRing::build(decl, draft.flags.order)
                .map_err(|e| src.error(draft.ring_at, e.to_string()))?,
        ),
        None => None,
    };
    let canon = |p: &Pending| -> Result<String, JobError> {
        if p.span.text.is_empty() {
            return Err(src.error(p.span.at, "empty polynomial".into()));
        }
        let ring = ring.as_ref().ok_or_else(|| {
            src.error(
                p.span.at,
                "polynomials need a `ring` declaration first".into(),
            )
        })?;
        ring.canonical(p.span.text).map_err(|e| match e {
            AlgebraError::Parse { pos, msg } => src.error(p.span.at + pos, msg),
            other => src.error(p.span.at, other.to_string()),
        })
    };
    let mut flags = draft.flags;
    if let Some(h) = &draft.h {
        flags.h = Some(canon(h)?);
    }
    let ideals = draft
        .ideals
        .iter()
        .map(|(n, gens)| {
            Ok((
                n.clone(),
                gens.iter().map(&canon).collect::<Result<Vec<_>, _>>()?,
            ))
        })
        .collect::<Result<Vec<_>, JobError>>()?;
    let matrices = draft
        .matrices
        .iter()
        .map(|(n, rows)| {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(&canon).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok((n.clone(), rows))
        })
        .collect::<Result<Vec<_>, JobError>>()?;
    let polys = draft
        .polys
        .iter()
        .map(|(n, p)| Ok((n.clone(), canon(p)?)))
        .collect::<Result<Vec<_>, JobError>>()?;
    Ok(JobSpec {
        ring: draft.ring,
        ideals,
        matrices,
        polys,
        command,
        flags,
    })
}
