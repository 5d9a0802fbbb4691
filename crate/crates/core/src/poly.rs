//! Exact bivariate polynomials over the rationals, with the apolarity action.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse polynomial in two variables; keys are `(exp of x, exp of y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(Q::one(), a, b)
    }

    pub fn term(c: Q, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, a, b);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    /// The linear form `a x + b y`.
    pub fn linear(a: &Q, b: &Q) -> Self {
        let mut p = Self::zero();
        p.add_term(a.clone(), 1, 0);
        p.add_term(b.clone(), 0, 1);
        p
    }

    pub fn add_term(&mut self, c: Q, a: u32, b: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Q {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|&(a, b)| a + b);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Coefficients of a form of degree `deg`, indexed by the exponent of x.
    pub fn coeff_vector(&self, deg: u32) -> Vec<Q> {
        (0..=deg).map(|a| self.coeff(a, deg - a)).collect()
    }

    /// The form of degree `deg` with the given coefficients (indexed by exponent of x).
    pub fn from_coeff_vector(deg: u32, v: &[Q]) -> Self {
        let mut p = Self::zero();
        for (a, c) in v.iter().enumerate() {
            p.add_term(c.clone(), a as u32, deg - a as u32);
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(Q::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitutes `x ← u`, `y ← v`.
    pub fn compose(&self, u: &BivariatePoly, v: &BivariatePoly) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out = &out + &(&u.pow(a) * &v.pow(b)).scale(c);
        }
        out
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut acc = Q::zero();
        for (&(a, b), c) in &self.terms {
            acc +=
                c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize);
        }
        acc
    }

    /// Apolarity action `self ∘ f`: `x^a y^b ∘ X^u Y^v = u_(a) v_(b) X^{u−a} Y^{v−b}`.
    pub fn contract(&self, f: &BivariatePoly) -> BivariatePoly {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(u, v), d) in &f.terms {
                if u < a || v < b {
                    continue;
                }
                let factor = falling(u, a) * falling(v, b);
                out.add_term(c * d * Q::from_integer(factor), u - a, v - b);
            }
        }
        out
    }

    /// Restriction `t ↦ self(1, t)` as coefficients of powers of t.
    pub fn dehomogenize_x(&self) -> Vec<Q> {
        let top = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0) as usize;
        let mut v = vec![Q::zero(); top + 1];
        for (&(_, b), c) in &self.terms {
            v[b as usize] += c;
        }
        v
    }

    /// Display with the dual variable names X, Y.
    pub fn to_dual_string(&self) -> String {
        self.render("X", "Y")
    }

    fn render(&self, xs: &str, ys: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| std::cmp::Reverse((a + b, b)));
        let mut out = String::new();
        for (idx, &&(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                factors.push(abs.to_string());
            }
            for (v, e) in [(xs, a), (ys, b)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn falling(u: u32, a: u32) -> BigInt {
    (0..a).fold(BigInt::one(), |acc, i| acc * BigInt::from(u - i))
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", "y"))
    }
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(c.clone(), a, b);
        }
        out
    }
}

impl<'a> Sub<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(-c.clone(), a, b);
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(u, v), d) in &rhs.terms {
                out.add_term(c * d, a + u, b + v);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(&-Q::one())
    }
}

impl FromStr for BivariatePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(out)
    }
}

/// Parses a comma-separated list of polynomials.
pub fn parse_poly_list(s: &str) -> Result<Vec<BivariatePoly>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == ',' || ch == ';') && depth == 0 {
            out.push(cur.parse()?);
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.parse()?);
    }
    if out.is_empty() {
        return Err(Error::Parse("no polynomials given".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().unwrap()));
            }
            'x' | 'X' => out.push(Tok::X),
            'y' | 'Y' => out.push(Tok::Y),
            '+' => out.push(Tok::Plus),
            '-' | '\u{2212}' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
        i += 1;
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<BivariatePoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BivariatePoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let div = self.unary()?;
                    let c = match div.terms.iter().next() {
                        Some((&(0, 0), c)) if div.terms.len() == 1 => c.clone(),
                        _ => {
                            return Err(Error::Parse(
                                "can only divide by a nonzero constant".into(),
                            ))
                        }
                    };
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_)) | Some(Tok::X) | Some(Tok::Y) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivariatePoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BivariatePoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BivariatePoly> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => Ok(BivariatePoly::constant(Q::from_integer(n))),
            Some(Tok::X) => Ok(BivariatePoly::x()),
            Some(Tok::Y) => Ok(BivariatePoly::y()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Rational roots of `Σ c_i t^i`, when the extreme coefficients are small
/// enough for trial division; `None` if the search was skipped.
pub fn rational_roots(coeffs: &[Q]) -> Option<Vec<Q>> {
    use num_integer::Integer;
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(|v| v.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(Q::zero());
        let shift = c.iter().position(|v| !v.is_zero()).unwrap();
        c.drain(..shift);
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|v| (v * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let limit = BigInt::from(1_000_000u32);
    let (a0, an) = (ints[0].abs(), ints.last().unwrap().abs());
    if a0 > limit || an > limit {
        return None;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut v = Vec::new();
        let mut i = BigInt::one();
        while &i * &i <= *n {
            if (n % &i).is_zero() {
                v.push(i.clone());
                v.push(n / &i);
            }
            i += 1;
        }
        v
    };
    let poly = BivariatePoly {
        terms: c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| ((0, i as u32), v.clone()))
            .collect(),
    };
    let mut found = std::collections::BTreeSet::new();
    for p in divisors(&a0) {
        for qd in divisors(&an) {
            for sign in [1, -1] {
                let r = Q::new(&p * sign, qd.clone());
                if poly.eval(&Q::zero(), &r).is_zero() {
                    found.insert(r);
                }
            }
        }
    }
    roots.extend(found);
    Some(roots)
}
