//! Polynomial systems with exact rational coefficients and integer
//! (possibly negative) exponent vectors.
//!
//! Text format, one statement per `;`:
//!
//! ```text
//! # optional declaration fixing the variable order
//! var x11, x12, x21, x22;
//! x11*x22 - x21*x12;
//! 2/3*a^2*b - a*b^(-1) + 5;
//! ```
//!
//! Variables that are not declared are ordered by first appearance.
//! `#` starts a comment running to the end of the line.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = Self::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidArgument(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if table.index.contains_key(&name) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{name}`")));
            }
            table.insert(name);
        }
        Ok(table)
    }

    fn insert(&mut self, name: String) -> usize {
        if let Some(&i) = self.index.get(&name) {
            return i;
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        i
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial `coeff * x^exponents`. The coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigRational,
    pub exponents: Vec<i64>,
}

impl Term {
    pub fn new(coeff: BigRational, exponents: Vec<i64>) -> Self {
        debug_assert!(!coeff.is_zero());
        Self { coeff, exponents }
    }

    pub fn from_int(coeff: i64, exponents: Vec<i64>) -> Self {
        Self::new(BigRational::from_integer(coeff.into()), exponents)
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Clone)]
pub struct PolynomialSystem {
    vars: VariableTable,
    equations: Vec<Vec<Term>>,
}

impl PolynomialSystem {
    /// Builds a system, merging repeated monomials inside each equation.
    pub fn new(vars: VariableTable, equations: Vec<Vec<Term>>) -> Result<Self> {
        let n = vars.len();
        let mut merged = Vec::with_capacity(equations.len());
        for (e, terms) in equations.into_iter().enumerate() {
            for t in &terms {
                if t.exponents.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "equation {e}: exponent vector of length {} for {n} variables",
                        t.exponents.len()
                    )));
                }
                if t.coeff.is_zero() {
                    return Err(Error::InvalidArgument(format!(
                        "equation {e} has a zero coefficient"
                    )));
                }
            }
            let terms = merge_terms(terms);
            if terms.is_empty() {
                return Err(Error::ZeroPolynomial { equation: e });
            }
            merged.push(terms);
        }
        Ok(Self {
            vars,
            equations: merged,
        })
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn equations(&self) -> &[Vec<Term>] {
        &self.equations
    }

    pub fn num_equations(&self) -> usize {
        self.equations.len()
    }

    pub fn is_binomial(&self) -> bool {
        self.equations.iter().all(|eq| eq.len() == 2)
    }

    /// Fails with the first equation that does not have exactly two terms.
    pub fn require_binomial(&self) -> Result<()> {
        match self.equations.iter().position(|eq| eq.len() != 2) {
            Some(e) => Err(Error::NotBinomial {
                equation: e,
                terms: self.equations[e].len(),
            }),
            None => Ok(()),
        }
    }

    /// Renders a monomial with the system's variable names, `1` for constants.
    pub fn monomial_label(&self, exponents: &[i64]) -> String {
        let mut parts = Vec::new();
        for (k, &e) in exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars.name(k).to_string()),
                e if e < 0 => parts.push(format!("{}^({e})", self.vars.name(k))),
                e => parts.push(format!("{}^{e}", self.vars.name(k))),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Equal up to term order inside each equation.
impl PartialEq for PolynomialSystem {
    fn eq(&self, other: &Self) -> bool {
        if self.vars.names != other.vars.names || self.equations.len() != other.equations.len() {
            return false;
        }
        self.equations
            .iter()
            .zip(&other.equations)
            .all(|(a, b)| sorted_terms(a) == sorted_terms(b))
    }
}

fn sorted_terms(terms: &[Term]) -> Vec<&Term> {
    let mut v: Vec<&Term> = terms.iter().collect();
    v.sort_by(|a, b| a.exponents.cmp(&b.exponents));
    v
}

fn merge_terms(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.iter_mut().find(|o| o.exponents == t.exponents) {
            Some(o) => o.coeff += t.coeff,
            None => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

/// The adjacent 2x2 minors `x[i][j]*x[i+1][j+1] - x[i+1][j]*x[i][j+1]` of a
/// general `m` x `n` matrix, variables named `x{i}{j}` in row-major order.
pub fn adjacent_minors(m: usize, n: usize) -> Result<PolynomialSystem> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "adjacent minors need at least a 2x2 matrix, got {m}x{n}"
        )));
    }
    let wi = if m > 9 { m.to_string().len() } else { 1 };
    let wj = if n > 9 { n.to_string().len() } else { 1 };
    let names = (1..=m).flat_map(|i| (1..=n).map(move |j| format!("x{i:0wi$}{j:0wj$}")));
    let vars = VariableTable::from_names(names)?;
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mono = |a: usize, b: usize| {
        let mut e = vec![0i64; m * n];
        e[a] += 1;
        e[b] += 1;
        e
    };
    let mut equations = Vec::with_capacity((m - 1) * (n - 1));
    for i in 1..m {
        for j in 1..n {
            equations.push(vec![
                Term::from_int(1, mono(idx(i, j), idx(i + 1, j + 1))),
                Term::from_int(-1, mono(idx(i + 1, j), idx(i, j + 1))),
            ]);
        }
    }
    PolynomialSystem::new(vars, equations)
}

/// Inverse of [`parse_system`], one equation per line.
///
/// A `var` declaration is emitted first whenever the variable order differs
/// from the order of first appearance in the rendered equations.
pub fn serialize_system(sys: &PolynomialSystem) -> String {
    let mut lines = Vec::with_capacity(sys.num_equations() + 1);
    if needs_declaration(sys) {
        lines.push(format!("var {};", sys.vars.names.join(", ")));
    }
    for eq in &sys.equations {
        lines.push(format!("{};", render_polynomial(sys, eq)));
    }
    lines.join("\n")
}

fn needs_declaration(sys: &PolynomialSystem) -> bool {
    let mut seen = vec![false; sys.num_vars()];
    let mut order = Vec::with_capacity(sys.num_vars());
    for t in sys.equations.iter().flatten() {
        for (k, &e) in t.exponents.iter().enumerate() {
            if e != 0 && !seen[k] {
                seen[k] = true;
                order.push(k);
            }
        }
    }
    order.len() != sys.num_vars() || order.iter().enumerate().any(|(i, &k)| i != k)
}

fn render_polynomial(sys: &PolynomialSystem, terms: &[Term]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let negative = t.coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = t.coeff.abs();
        if t.is_constant() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&sys.monomial_label(&t.exponents));
        }
    }
    out
}

impl fmt::Display for PolynomialSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_system(self))
    }
}

pub fn parse_system(text: &str) -> Result<PolynomialSystem> {
    Parser::new(text).parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    Semi,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    lex_error: Option<Error>,
    at: usize,
    vars: VariableTable,
}

impl Parser {
    fn new(text: &str) -> Self {
        let (toks, lex_error) = lex(text);
        Self {
            toks,
            lex_error,
            at: 0,
            vars: VariableTable::new(),
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let p = self.pos();
        Err(Error::Syntax {
            line: p.line,
            column: p.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn parse(mut self) -> Result<PolynomialSystem> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        // Terms are collected with exponent vectors sized to the variables
        // known at the time and padded once the table is complete.
        let mut equations: Vec<Vec<Term>> = Vec::new();
        while *self.peek() != Tok::Eof {
            if self.at_declaration() {
                self.declaration()?;
                continue;
            }
            let start = self.pos();
            let terms = self.polynomial()?;
            self.expect(Tok::Semi)?;
            let n = self.vars.len();
            let terms: Vec<Term> = terms
                .into_iter()
                .map(|mut t| {
                    t.exponents.resize(n, 0);
                    t
                })
                .collect();
            let terms = merge_terms(terms);
            if terms.is_empty() {
                return Err(Error::Syntax {
                    line: start.line,
                    column: start.column,
                    message: "polynomial cancels to zero".into(),
                });
            }
            equations.push(terms);
        }
        let n = self.vars.len();
        for t in equations.iter_mut().flatten() {
            t.exponents.resize(n, 0);
        }
        PolynomialSystem::new(self.vars, equations)
    }

    fn at_declaration(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "var") && matches!(self.peek2(), Tok::Ident(_))
    }

    fn declaration(&mut self) -> Result<()> {
        self.bump();
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    if self.vars.position(&name).is_some() {
                        return self.error(format!("variable `{name}` declared twice"));
                    }
                    self.vars.insert(name);
                    self.bump();
                }
                t => return self.error(format!("expected a variable name, found {t}")),
            }
            match self.bump() {
                Tok::Comma => continue,
                Tok::Semi => return Ok(()),
                t => {
                    self.at -= 1;
                    return self.error(format!("expected `,` or `;`, found {t}"));
                }
            }
        }
    }

    fn polynomial(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let start = self.pos();
        let mut coeff = BigRational::one();
        let mut exps: Vec<i64> = vec![0; self.vars.len()];
        loop {
            match self.peek().clone() {
                Tok::Int(p) => {
                    self.bump();
                    let q = if *self.peek() == Tok::Slash {
                        self.bump();
                        match self.bump() {
                            Tok::Int(q) if !q.is_zero() => q,
                            Tok::Int(_) => {
                                self.at -= 1;
                                return self.error("zero denominator");
                            }
                            t => {
                                self.at -= 1;
                                return self.error(format!("expected a denominator, found {t}"));
                            }
                        }
                    } else {
                        BigInt::one()
                    };
                    coeff *= BigRational::new(p, q);
                }
                Tok::Ident(name) => {
                    self.bump();
                    let k = self.vars.insert(name);
                    if exps.len() < self.vars.len() {
                        exps.resize(self.vars.len(), 0);
                    }
                    let e = if *self.peek() == Tok::Caret {
                        self.bump();
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[k] = exps[k].checked_add(e).ok_or_else(|| {
                        Error::Overflow(format!("exponent of `{}`", self.vars.name(k)))
                    })?;
                }
                t => return self.error(format!("expected a number or variable, found {t}")),
            }
            if *self.peek() == Tok::Star {
                self.bump();
            } else {
                break;
            }
        }
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient {
                line: start.line,
                column: start.column,
            });
        }
        Ok(Term::new(coeff, exps))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let value = match self.peek().clone() {
            Tok::Int(v) => {
                let v: i64 = match i64::try_from(&v) {
                    Ok(v) => v,
                    Err(_) => return self.error("exponent out of range"),
                };
                self.bump();
                v
            }
            t => return self.error(format!("expected an integer exponent, found {t}")),
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(if negative { -value } else { value })
    }
}

fn lex(text: &str) -> (Vec<(Tok, Pos)>, Option<Error>) {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    let mut error = None;
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column: col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            toks.push((Tok::Ident(s), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            toks.push((Tok::Int(s.parse().expect("digits")), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            other => {
                error = Some(Error::Syntax {
                    line,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                });
                break;
            }
        };
        chars.next();
        col += 1;
        toks.push((tok, pos));
    }
    toks.push((Tok::Eof, Pos { line, column: col }));
    (toks, error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn parses_first_minor() {
        let sys = parse_system("x11*x22 - x21*x12;").unwrap();
        assert_eq!(sys.num_equations(), 1);
        assert_eq!(sys.equations()[0].len(), 2);
        assert_eq!(sys.vars().names(), ["x11", "x22", "x21", "x12"]);
        assert_eq!(sys.equations()[0][0].exponents, vec![1, 1, 0, 0]);
        assert_eq!(sys.equations()[0][1].coeff, int(-1));
    }

    #[test]
    fn zero_exponent_is_constant() {
        let sys = parse_system("x^0;").unwrap();
        assert_eq!(sys.num_vars(), 1);
        let t = &sys.equations()[0][0];
        assert_eq!(t.exponents, vec![0]);
        assert!(t.is_constant());
    }

    #[test]
    fn cancellation_leaves_single_term() {
        let sys = parse_system("2*a^2*b - 2*a^2*b + a;").unwrap();
        assert_eq!(sys.equations()[0].len(), 1);
        assert_eq!(sys.equations()[0][0].exponents, vec![1, 0]);
        assert_eq!(sys.equations()[0][0].coeff, int(1));
    }

    #[test]
    fn full_cancellation_is_an_error() {
        assert!(matches!(
            parse_system("a - a;"),
            Err(Error::Syntax { line: 1, column: 1, .. })
        ));
    }

    #[test]
    fn zero_coefficient_is_an_error() {
        assert_eq!(
            parse_system("x + y;\n  0*x;").unwrap_err(),
            Error::ZeroCoefficient { line: 2, column: 3 }
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_system("x*y - \n z w;").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 4)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_system("x - y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_system("x $ y;"), Err(Error::Syntax { line: 1, column: 3, .. })));
        assert!(matches!(parse_system("x/2;"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_system("1/0*x;"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rationals_and_negative_exponents() {
        let sys = parse_system("-3/6*x*y^(-1) + 2 - y^-2*x^3;").unwrap();
        let eq = &sys.equations()[0];
        assert_eq!(eq[0].coeff, BigRational::new((-1).into(), 2.into()));
        assert_eq!(eq[0].exponents, vec![1, -1]);
        assert_eq!(eq[1].coeff, int(2));
        assert!(eq[1].is_constant());
        assert_eq!(eq[2].exponents, vec![3, -2]);
    }

    #[test]
    fn declaration_fixes_order() {
        let sys = parse_system("var b, a; a - b; c*a - 1;").unwrap();
        assert_eq!(sys.vars().names(), ["b", "a", "c"]);
        assert!(parse_system("var a, a; a - 1;").is_err());
        // `var` alone is an ordinary variable
        let sys = parse_system("var - 1;").unwrap();
        assert_eq!(sys.vars().names(), ["var"]);
    }

    #[test]
    fn comments_and_empty_input() {
        let sys = parse_system("# nothing here\n").unwrap();
        assert_eq!(sys.num_equations(), 0);
        let sys = parse_system("x - y; # trailing\ny - 1;").unwrap();
        assert_eq!(sys.num_equations(), 2);
    }

    #[test]
    fn adjacent_minors_two_by_three() {
        let sys = adjacent_minors(2, 3).unwrap();
        assert_eq!(
            sys.vars().names(),
            ["x11", "x12", "x13", "x21", "x22", "x23"]
        );
        let expected = parse_system(
            "var x11, x12, x13, x21, x22, x23; x11*x22 - x21*x12; x12*x23 - x22*x13;",
        )
        .unwrap();
        assert_eq!(sys, expected);
    }

    #[test]
    fn adjacent_minors_shapes() {
        let sys = adjacent_minors(2, 2).unwrap();
        assert_eq!(sys.num_equations(), 1);
        assert_eq!(sys.num_vars(), 4);

        // hand expansion for i, j in {1, 2}
        let sys = adjacent_minors(3, 3).unwrap();
        let expected = parse_system(
            "var x11, x12, x13, x21, x22, x23, x31, x32, x33;
             x11*x22 - x21*x12;
             x12*x23 - x22*x13;
             x21*x32 - x31*x22;
             x22*x33 - x32*x23;",
        )
        .unwrap();
        assert_eq!(sys, expected);

        assert!(adjacent_minors(1, 5).is_err());
        assert!(adjacent_minors(4, 1).is_err());
    }

    #[test]
    fn adjacent_minor_names_are_padded() {
        let sys = adjacent_minors(2, 12).unwrap();
        assert_eq!(sys.vars().name(0), "x101");
        assert_eq!(sys.vars().name(11), "x112");
        assert_eq!(sys.vars().name(12), "x201");
        let sys = adjacent_minors(10, 2).unwrap();
        assert_eq!(sys.vars().name(19), "x102");
    }

    #[test]
    fn serializes_single_minor() {
        let text = serialize_system(&adjacent_minors(2, 2).unwrap());
        assert_eq!(text, "var x11, x12, x21, x22;\nx11*x22 - x12*x21;");
        // no declaration when first appearance already gives the order
        let sys = parse_system("x11*x22 - x21*x12;").unwrap();
        assert_eq!(serialize_system(&sys), "x11*x22 - x21*x12;");
    }

    #[test]
    fn serializes_empty_system() {
        let sys = PolynomialSystem::new(VariableTable::new(), vec![]).unwrap();
        assert_eq!(serialize_system(&sys), "");
    }

    #[test]
    fn round_trips_two_by_three() {
        let sys = adjacent_minors(2, 3).unwrap();
        let text = serialize_system(&sys);
        assert_eq!(text.lines().filter(|l| !l.starts_with("var ")).count(), 2);
        assert!(text
            .lines()
            .all(|l| l.ends_with(';')));
        assert_eq!(parse_system(&text).unwrap(), sys);
    }

    #[test]
    fn serializes_coefficients_and_exponents() {
        let sys = parse_system("-2/3*a^2*b^(-1) + 5 - c;").unwrap();
        assert_eq!(serialize_system(&sys), "-2/3*a^2*b^(-1) + 5 - c;");
    }

    #[test]
    fn binomial_check() {
        assert!(adjacent_minors(3, 4).unwrap().is_binomial());
        let sys = parse_system("x - y; x*y;").unwrap();
        assert!(!sys.is_binomial());
        assert_eq!(
            sys.require_binomial().unwrap_err(),
            Error::NotBinomial { equation: 1, terms: 1 }
        );
    }
}
