//! Term language for lattice identities and quasi-identities.
//!
//! Grammar (tightest binding first: postfix `'`, then `*`, `/\`, `\/`, and
//! right-associative `->`; parentheses override):
//!
//! ```text
//! formula := quasis | cmp
//! quasis  := cmp ('&' cmp)* '=>' cmp
//! cmp     := term ('=' | '<=') term
//! term    := disj ('->' term)?
//! disj    := conj ('\/' conj)*
//! conj    := prod ('/\' prod)*
//! prod    := post ('*' post)*
//! post    := atom "'"*
//! atom    := ident | '0' | '1' | '(' term ')'
//! ```
//!
//! Evaluation is plain model checking over a finite algebra: `holds` scans
//! every assignment of the formula's variables (in lexicographic order over
//! sorted variable names) and reports the first violation.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{BinaryOpTable, CheckReport, UnaryAlgebra};
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Comp(Box<Term>),
    Arrow(Box<Term>, Box<Term>),
    Prod(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Leq,
}

/// An equation `lhs = rhs` or an inequality `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub op: CmpOp,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Cmp(Comparison),
    /// `h1 & h2 & ... => conclusion`; at least one hypothesis.
    Quasi {
        hypotheses: Vec<Comparison>,
        conclusion: Comparison,
    },
}

/// Result of `parse`: the input was either a bare term or a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Formula(Formula),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown symbol `{sym}` at byte {pos}")]
    UnknownSymbol { pos: usize, sym: String },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no table for operation `{0}` in this context")]
    MissingOperation(&'static str),
    #[error("constant `{0}` needs a {1} element, which this lattice lacks")]
    MissingConstant(&'static str, &'static str),
    #[error("variable `{0}` is not assigned")]
    UnboundVariable(String),
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Join,
    Meet,
    Prime,
    Arrow,
    Star,
    Eq,
    Leq,
    Amp,
    Implies,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '\'' => {
                toks.push((i, Tok::Prime));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            '\\' => {
                if text[i..].starts_with("\\/") {
                    toks.push((i, Tok::Join));
                    i += 2;
                } else {
                    return Err(ParseError::UnknownSymbol { pos: i, sym: "\\".into() });
                }
            }
            '/' => {
                if text[i..].starts_with("/\\") {
                    toks.push((i, Tok::Meet));
                    i += 2;
                } else {
                    return Err(ParseError::UnknownSymbol { pos: i, sym: "/".into() });
                }
            }
            '-' => {
                if text[i..].starts_with("->") {
                    toks.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return Err(ParseError::UnknownSymbol { pos: i, sym: "-".into() });
                }
            }
            '=' => {
                if text[i..].starts_with("=>") {
                    toks.push((i, Tok::Implies));
                    i += 2;
                } else {
                    toks.push((i, Tok::Eq));
                    i += 1;
                }
            }
            '<' => {
                if text[i..].starts_with("<=") {
                    toks.push((i, Tok::Leq));
                    i += 2;
                } else {
                    return Err(ParseError::UnknownSymbol { pos: i, sym: "<".into() });
                }
            }
            '0' => {
                toks.push((i, Tok::Zero));
                i += 1;
            }
            '1' => {
                toks.push((i, Tok::One));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] as char == '_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(ParseError::UnknownSymbol { pos: i, sym: other.to_string() });
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> ParseError {
        ParseError::SyntaxError { pos: self.here(), msg }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.bump() {
            Some(Tok::Ident(name)) => Ok(Term::Var(name)),
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::One) => Ok(Term::One),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("expected a variable, `0`, `1` or `(`".into()))
            }
        }
    }

    fn post(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            t = Term::Comp(Box::new(t));
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut t = self.post()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            t = Term::Prod(Box::new(t), Box::new(self.post()?));
        }
        Ok(t)
    }

    fn conj(&mut self) -> Result<Term, ParseError> {
        let mut t = self.prod()?;
        while self.peek() == Some(&Tok::Meet) {
            self.pos += 1;
            t = Term::Meet(Box::new(t), Box::new(self.prod()?));
        }
        Ok(t)
    }

    fn disj(&mut self) -> Result<Term, ParseError> {
        let mut t = self.conj()?;
        while self.peek() == Some(&Tok::Join) {
            self.pos += 1;
            t = Term::Join(Box::new(t), Box::new(self.conj()?));
        }
        Ok(t)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let t = self.disj()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.term()?;
            Ok(Term::Arrow(Box::new(t), Box::new(rhs)))
        } else {
            Ok(t)
        }
    }

    fn cmp_or_term(&mut self) -> Result<Result<Comparison, Term>, ParseError> {
        let lhs = self.term()?;
        let op = match self.peek() {
            Some(Tok::Eq) => CmpOp::Eq,
            Some(Tok::Leq) => CmpOp::Leq,
            _ => return Ok(Err(lhs)),
        };
        self.pos += 1;
        let rhs = self.term()?;
        Ok(Ok(Comparison { op, lhs, rhs }))
    }
}

/// Parses a bare term or a formula.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let first = p.cmp_or_term()?;
    let parsed = match first {
        Err(term) => Parsed::Term(term),
        Ok(cmp) => {
            let mut comparisons = vec![cmp];
            while p.peek() == Some(&Tok::Amp) {
                p.pos += 1;
                match p.cmp_or_term()? {
                    Ok(c) => comparisons.push(c),
                    Err(_) => return Err(p.err("expected `=` or `<=` after term".into())),
                }
            }
            if p.peek() == Some(&Tok::Implies) {
                p.pos += 1;
                let conclusion = match p.cmp_or_term()? {
                    Ok(c) => c,
                    Err(_) => return Err(p.err("expected `=` or `<=` after term".into())),
                };
                Parsed::Formula(Formula::Quasi { hypotheses: comparisons, conclusion })
            } else if comparisons.len() == 1 {
                Parsed::Formula(Formula::Cmp(comparisons.pop().unwrap()))
            } else {
                return Err(p.err("hypothesis list needs a `=>` conclusion".into()));
            }
        }
    };
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input".into()));
    }
    Ok(parsed)
}

/// Parses input that must be a bare term.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    match parse(text)? {
        Parsed::Term(t) => Ok(t),
        Parsed::Formula(_) => Err(ParseError::SyntaxError {
            pos: 0,
            msg: "expected a term, found a formula".into(),
        }),
    }
}

/// Parses input that must be a formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    match parse(text)? {
        Parsed::Formula(f) => Ok(f),
        Parsed::Term(_) => Err(ParseError::SyntaxError {
            pos: 0,
            msg: "expected a formula, found a bare term".into(),
        }),
    }
}

// ---------------------------------------------------------------------------
// Printing (inverse of the parser on ASTs)
// ---------------------------------------------------------------------------

// Precedence levels used by the printer; higher binds tighter.
const PREC_ARROW: u8 = 0;
const PREC_JOIN: u8 = 1;
const PREC_MEET: u8 = 2;
const PREC_PROD: u8 = 3;
const PREC_POST: u8 = 4;

impl Term {
    fn prec(&self) -> u8 {
        match self {
            Term::Var(_) | Term::Zero | Term::One => PREC_POST,
            Term::Comp(_) => PREC_POST,
            Term::Prod(_, _) => PREC_PROD,
            Term::Meet(_, _) => PREC_MEET,
            Term::Join(_, _) => PREC_JOIN,
            Term::Arrow(_, _) => PREC_ARROW,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let me = self.prec();
        let parens = me < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Term::Var(name) => write!(f, "{name}")?,
            Term::Zero => write!(f, "0")?,
            Term::One => write!(f, "1")?,
            Term::Comp(t) => {
                t.fmt_prec(f, PREC_POST)?;
                write!(f, "'")?;
            }
            Term::Prod(l, r) => {
                l.fmt_prec(f, PREC_PROD)?;
                write!(f, " * ")?;
                r.fmt_prec(f, PREC_PROD + 1)?;
            }
            Term::Meet(l, r) => {
                l.fmt_prec(f, PREC_MEET)?;
                write!(f, " /\\ ")?;
                r.fmt_prec(f, PREC_MEET + 1)?;
            }
            Term::Join(l, r) => {
                l.fmt_prec(f, PREC_JOIN)?;
                write!(f, " \\/ ")?;
                r.fmt_prec(f, PREC_JOIN + 1)?;
            }
            Term::Arrow(l, r) => {
                l.fmt_prec(f, PREC_ARROW + 1)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, PREC_ARROW)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }

    /// Variables of the term, sorted and deduplicated.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = BTreeSet::new();
        self.collect_vars(&mut vars);
        vars
    }

    fn collect_vars(&self, vars: &mut BTreeSet<String>) {
        match self {
            Term::Var(name) => {
                vars.insert(name.clone());
            }
            Term::Zero | Term::One => {}
            Term::Comp(t) => t.collect_vars(vars),
            Term::Join(l, r) | Term::Meet(l, r) | Term::Arrow(l, r) | Term::Prod(l, r) => {
                l.collect_vars(vars);
                r.collect_vars(vars);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmpOp::Eq => write!(f, "="),
            CmpOp::Leq => write!(f, "<="),
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.op, self.rhs)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Cmp(c) => write!(f, "{c}"),
            Formula::Quasi { hypotheses, conclusion } => {
                for (i, h) in hypotheses.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    write!(f, "{h}")?;
                }
                write!(f, " => {conclusion}")
            }
        }
    }
}

impl Formula {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = BTreeSet::new();
        match self {
            Formula::Cmp(c) => {
                c.lhs.collect_vars(&mut vars);
                c.rhs.collect_vars(&mut vars);
            }
            Formula::Quasi { hypotheses, conclusion } => {
                for h in hypotheses {
                    h.lhs.collect_vars(&mut vars);
                    h.rhs.collect_vars(&mut vars);
                }
                conclusion.lhs.collect_vars(&mut vars);
                conclusion.rhs.collect_vars(&mut vars);
            }
        }
        vars
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Everything a term may need: the lattice and tables for whichever
/// operation symbols occur.
#[derive(Clone, Copy)]
pub struct EvalContext<'a> {
    pub lattice: &'a FiniteLattice,
    pub comp: Option<&'a [usize]>,
    pub arrow: Option<&'a [usize]>,
    pub prod: Option<&'a [usize]>,
}

impl<'a> EvalContext<'a> {
    pub fn lattice_only(lattice: &'a FiniteLattice) -> Self {
        EvalContext { lattice, comp: None, arrow: None, prod: None }
    }

    pub fn for_algebra(algebra: &'a UnaryAlgebra) -> Self {
        EvalContext {
            lattice: algebra.lattice(),
            comp: Some(algebra.comp_table()),
            arrow: None,
            prod: None,
        }
    }

    pub fn with_arrow(mut self, arrow: &'a BinaryOpTable) -> Self {
        self.arrow = Some(arrow.entries());
        self
    }

    pub fn with_prod(mut self, prod: &'a BinaryOpTable) -> Self {
        self.prod = Some(prod.entries());
        self
    }
}

impl Term {
    /// Bottom-up evaluation under an assignment given as parallel slices of
    /// variable names and element ids.
    pub fn eval(
        &self,
        ctx: &EvalContext<'_>,
        vars: &[String],
        vals: &[usize],
    ) -> Result<usize, EvalError> {
        let n = ctx.lattice.size();
        match self {
            Term::Var(name) => vars
                .iter()
                .position(|v| v == name)
                .map(|i| vals[i])
                .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
            Term::Zero => ctx
                .lattice
                .bottom()
                .ok_or(EvalError::MissingConstant("0", "smallest")),
            Term::One => ctx
                .lattice
                .top()
                .ok_or(EvalError::MissingConstant("1", "greatest")),
            Term::Comp(t) => {
                let v = t.eval(ctx, vars, vals)?;
                let comp = ctx.comp.ok_or(EvalError::MissingOperation("'"))?;
                Ok(comp[v])
            }
            Term::Join(l, r) => {
                let (a, b) = (l.eval(ctx, vars, vals)?, r.eval(ctx, vars, vals)?);
                Ok(ctx.lattice.join(a, b))
            }
            Term::Meet(l, r) => {
                let (a, b) = (l.eval(ctx, vars, vals)?, r.eval(ctx, vars, vals)?);
                Ok(ctx.lattice.meet(a, b))
            }
            Term::Arrow(l, r) => {
                let (a, b) = (l.eval(ctx, vars, vals)?, r.eval(ctx, vars, vals)?);
                let arrow = ctx.arrow.ok_or(EvalError::MissingOperation("->"))?;
                Ok(arrow[a * n + b])
            }
            Term::Prod(l, r) => {
                let (a, b) = (l.eval(ctx, vars, vals)?, r.eval(ctx, vars, vals)?);
                let prod = ctx.prod.ok_or(EvalError::MissingOperation("*"))?;
                Ok(prod[a * n + b])
            }
        }
    }
}

impl Comparison {
    fn eval(
        &self,
        ctx: &EvalContext<'_>,
        vars: &[String],
        vals: &[usize],
    ) -> Result<(bool, usize, usize), EvalError> {
        let lhs = self.lhs.eval(ctx, vars, vals)?;
        let rhs = self.rhs.eval(ctx, vars, vals)?;
        let ok = match self.op {
            CmpOp::Eq => lhs == rhs,
            CmpOp::Leq => ctx.lattice.leq(lhs, rhs),
        };
        Ok((ok, lhs, rhs))
    }
}

/// Exhaustively checks a formula over all assignments. Quasi-identities
/// check the conclusion only where every hypothesis holds. The witness is
/// the first violating assignment in lexicographic order (variables sorted
/// by name, elements by id).
pub fn holds(formula: &Formula, ctx: &EvalContext<'_>) -> Result<CheckReport, EvalError> {
    let vars: Vec<String> = formula.variables().into_iter().collect();
    let n = ctx.lattice.size();
    let property = formula.to_string();
    let mut vals = vec![0usize; vars.len()];
    loop {
        let applicable = match formula {
            Formula::Cmp(_) => true,
            Formula::Quasi { hypotheses, .. } => {
                let mut all = true;
                for h in hypotheses {
                    let (ok, _, _) = h.eval(ctx, &vars, &vals)?;
                    if !ok {
                        all = false;
                        break;
                    }
                }
                all
            }
        };
        if applicable {
            let conclusion = match formula {
                Formula::Cmp(c) => c,
                Formula::Quasi { conclusion, .. } => conclusion,
            };
            let (ok, lhs, rhs) = conclusion.eval(ctx, &vars, &vals)?;
            if !ok {
                let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                let witness = ctx.lattice.label_assignment(&var_refs, &vals);
                let at = witness
                    .iter()
                    .map(|(v, e)| format!("{v}={e}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                let detail = format!(
                    "`{property}` violated at {}: lhs={}, rhs={}",
                    if at.is_empty() { "the empty assignment".to_string() } else { at },
                    ctx.lattice.name(lhs),
                    ctx.lattice.name(rhs)
                );
                return Ok(CheckReport::fail(property, witness, detail));
            }
        }

        // advance odometer; most significant variable first
        let mut i = vals.len();
        loop {
            if i == 0 {
                return Ok(CheckReport::pass(
                    property,
                    format!("holds for all {} assignment(s)", n.pow(vars.len() as u32)),
                ));
            }
            i -= 1;
            vals[i] += 1;
            if vals[i] < n {
                break;
            }
            vals[i] = 0;
        }
    }
}
