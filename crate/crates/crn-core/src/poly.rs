//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! A [`Polynomial`] owns its arity (number of ambient variables) and stores
//! nonzero terms in a canonical map, so equality is structural. Term order
//! is a separate concern: every order-sensitive operation takes a
//! [`MonomialOrder`].

use crate::error::Error;
use crate::Result;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Exponent vector. Fixed length equal to the ambient arity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity].into_boxed_slice())
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(exps.to_vec().into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// `self / other`, or `None` when not divisible.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0
                    .iter()
                    .zip(other.0.iter())
                    .map(|(&a, &b)| a - b)
                    .collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// A total order on monomials of a fixed arity.
///
/// Each variant carries the variable sequence it compares, from most to
/// least significant. `Elimination(front, back)` compares by `front` first;
/// with graded inner orders this makes the front block an elimination
/// block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    GrevLex(Vec<usize>),
    Elimination(Box<MonomialOrder>, Box<MonomialOrder>),
}

impl MonomialOrder {
    /// Graded reverse lexicographic order on all `arity` variables.
    pub fn grevlex(arity: usize) -> Self {
        MonomialOrder::GrevLex((0..arity).collect())
    }

    /// Lexicographic order on all `arity` variables in natural sequence.
    pub fn lex(arity: usize) -> Self {
        MonomialOrder::Lex((0..arity).collect())
    }

    /// Lexicographic order with variable `last` moved to the end and the
    /// rest kept in natural sequence.
    pub fn lex_with_last(arity: usize, last: usize) -> Self {
        let mut seq: Vec<usize> = (0..arity).filter(|&v| v != last).collect();
        seq.push(last);
        MonomialOrder::Lex(seq)
    }

    /// Elimination order with graded reverse lex inside both blocks; the
    /// `front` variables are eliminated.
    pub fn eliminating(front: Vec<usize>, back: Vec<usize>) -> Self {
        MonomialOrder::Elimination(
            Box::new(MonomialOrder::GrevLex(front)),
            Box::new(MonomialOrder::GrevLex(back)),
        )
    }

    /// The variables this order inspects, most significant first.
    pub fn variables(&self) -> Vec<usize> {
        match self {
            MonomialOrder::Lex(seq) | MonomialOrder::GrevLex(seq) => seq.clone(),
            MonomialOrder::Elimination(f, b) => {
                let mut v = f.variables();
                v.extend(b.variables());
                v
            }
        }
    }

    /// Checks the order is a total order on all `arity` variables.
    pub fn validate(&self, arity: usize) -> Result<()> {
        let vars = self.variables();
        let mut seen = vec![false; arity];
        for &v in &vars {
            if v >= arity {
                return Err(Error::VariableOutOfRange { index: v, arity });
            }
            if seen[v] {
                return Err(Error::BadOrder(format!("variable {v} listed twice")));
            }
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::BadOrder(format!("variable {missing} not covered")));
        }
        Ok(())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex(seq) => {
                for &v in seq {
                    match a.degree(v).cmp(&b.degree(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex(seq) => {
                let da: u32 = seq.iter().map(|&v| a.degree(v) as u32).sum();
                let db: u32 = seq.iter().map(|&v| b.degree(v) as u32).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for &v in seq.iter().rev() {
                    match a.degree(v).cmp(&b.degree(v)) {
                        Ordering::Equal => continue,
                        // Reverse lex: smaller exponent in the least
                        // significant position wins.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(front, back) => match front.cmp(a, b) {
                Ordering::Equal => back.cmp(a, b),
                ord => ord,
            },
        }
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arity), c);
        }
        p
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut p = Self::zero(arity);
        p.terms.insert(Monomial::var(arity, index), BigRational::one());
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one(self.arity))
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// `self * c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = Self::zero(self.arity);
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(self.arity);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.degree(var)).max()
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.degree(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(
                Monomial::from_exponents(&exps),
                c * BigRational::from(BigInt::from(e)),
            );
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        debug_assert_eq!(point.len(), self.arity);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t * &point[v];
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.arity];
        for m in self.terms.keys() {
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[v] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(v, &u)| u.then_some(v))
            .collect()
    }

    /// True when every occurring variable lies in `keep`.
    pub fn supported_on(&self, keep: &[usize]) -> bool {
        self.support().iter().all(|v| keep.contains(v))
    }

    /// Reindexes variables into a new ambient ring. `map[v]` is the new
    /// index of old variable `v`.
    pub fn map_variables(&self, new_arity: usize, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.arity);
        let mut out = Self::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; new_arity];
            for (v, &e) in m.exponents().iter().enumerate() {
                exps[map[v]] += e;
            }
            out.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        out
    }

    /// All coefficients strictly positive or all strictly negative. Such a
    /// nonzero polynomial cannot vanish on the open positive orthant.
    pub fn is_sign_definite(&self) -> bool {
        if self.terms.is_empty() {
            return false;
        }
        let mut pos = 0usize;
        let mut neg = 0usize;
        for c in self.terms.values() {
            if c.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        pos == 0 || neg == 0
    }

    /// Leading monomial under `order`, or `None` for the zero polynomial.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b))
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&BigRational> {
        self.leading_monomial(order).map(|m| &self.terms[m])
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Divides out the gcd of integer numerators and normalizes the sign of
    /// the leading coefficient under `order` to be positive.
    pub fn primitive_part(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom = BigInt::one();
        for c in self.terms.values() {
            denom = num::integer::lcm(denom, c.denom().clone());
        }
        let mut numer = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&denom / c.denom());
            numer = num::integer::gcd(numer, n);
        }
        let mut scale = BigRational::new(denom, numer);
        if self
            .leading_coefficient(order)
            .map(|lc| (lc * &scale).is_negative())
            .unwrap_or(false)
        {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Exact division: `Some(q)` with `self == q * g`, else `None`.
    pub fn checked_div(&self, g: &Polynomial) -> Option<Polynomial> {
        debug_assert_eq!(self.arity, g.arity);
        if g.is_zero() {
            return None;
        }
        let order = MonomialOrder::grevlex(self.arity);
        let glm = g.leading_monomial(&order).unwrap().clone();
        let glc = g.terms[&glm].clone();
        let mut h = self.clone();
        let mut q = Polynomial::zero(self.arity);
        while !h.is_zero() {
            let hm = h.leading_monomial(&order).unwrap().clone();
            let factor = hm.checked_div(&glm)?;
            let c = &h.terms[&hm] / &glc;
            q.add_term(factor.clone(), c.clone());
            h = h.sub(&g.mul_term(&factor, &c));
        }
        Some(q)
    }

    /// Renders with the given variable names, terms descending under
    /// `order`.
    pub fn to_text(&self, names: &[String], order: &MonomialOrder) -> String {
        debug_assert_eq!(names.len(), self.arity);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coef = !abs.is_one() || m.is_one();
            if show_coef {
                let _ = write!(out, "{abs}");
            }
            let mut first_var = !show_coef;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var || show_coef {
                    out.push('*');
                }
                first_var = false;
                out.push_str(&names[v]);
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }
}

/// Parses a polynomial in the syntax emitted by [`Polynomial::to_text`]:
/// terms joined by `+`/`-`, factors joined by `*` (or `/` before a numeric
/// literal), powers with `^`, exact decimal and fractional coefficients.
pub fn parse_polynomial(input: &str, names: &[String]) -> Result<Polynomial> {
    let arity = names.len();
    let mut lexer = Lexer::new(input);
    let mut poly = Polynomial::zero(arity);
    let mut sign = BigRational::one();
    let mut started = false;
    loop {
        match lexer.peek()? {
            Token::End => {
                if !started {
                    return Err(Error::Invalid("empty polynomial".into()));
                }
                return Ok(poly);
            }
            Token::Plus => {
                lexer.next()?;
                sign = BigRational::one();
            }
            Token::Minus => {
                lexer.next()?;
                sign = -BigRational::one();
            }
            _ => {
                if started {
                    return Err(Error::Invalid(format!(
                        "expected '+' or '-' in polynomial '{input}'"
                    )));
                }
            }
        }
        let (m, c) = parse_term(&mut lexer, names)?;
        poly.add_term(m, c * &sign);
        started = true;
        sign = BigRational::one();
    }
}

fn parse_term(lexer: &mut Lexer, names: &[String]) -> Result<(Monomial, BigRational)> {
    let arity = names.len();
    let mut coef = BigRational::one();
    let mut exps = vec![0u16; arity];
    loop {
        match lexer.next()? {
            Token::Number(n) => {
                coef *= n;
            }
            Token::Ident(name) => {
                let v = names
                    .iter()
                    .position(|s| *s == name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                let mut e = 1u16;
                if matches!(lexer.peek()?, Token::Caret) {
                    lexer.next()?;
                    match lexer.next()? {
                        Token::Number(n) if n.is_integer() && !n.is_negative() => {
                            e = n.numer().try_into().map_err(|_| {
                                Error::Invalid("exponent too large".into())
                            })?;
                        }
                        _ => return Err(Error::Invalid("expected integer exponent".into())),
                    }
                }
                exps[v] += e;
            }
            t => return Err(Error::Invalid(format!("unexpected token {t:?} in term"))),
        }
        match lexer.peek()? {
            Token::Star => {
                lexer.next()?;
            }
            Token::Slash => {
                lexer.next()?;
                match lexer.next()? {
                    Token::Number(n) if !n.is_zero() => coef /= n,
                    _ => return Err(Error::Invalid("expected nonzero number after '/'".into())),
                }
                match lexer.peek()? {
                    Token::Star => {
                        lexer.next()?;
                    }
                    _ => break,
                }
            }
            _ => break,
        }
    }
    Ok((Monomial::from_exponents(&exps), coef))
}

#[derive(Clone, Debug)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    lookahead: Option<Token>,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { chars: s.chars().peekable(), lookahead: None }
    }

    fn peek(&mut self) -> Result<&Token> {
        if self.lookahead.is_none() {
            self.lookahead = Some(self.lex()?);
        }
        Ok(self.lookahead.as_ref().unwrap())
    }

    fn next(&mut self) -> Result<Token> {
        match self.lookahead.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn lex(&mut self) -> Result<Token> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
        let Some(&c) = self.chars.peek() else {
            return Ok(Token::End);
        };
        match c {
            '+' => {
                self.chars.next();
                Ok(Token::Plus)
            }
            '-' => {
                self.chars.next();
                Ok(Token::Minus)
            }
            '*' => {
                self.chars.next();
                Ok(Token::Star)
            }
            '/' => {
                self.chars.next();
                Ok(Token::Slash)
            }
            '^' => {
                self.chars.next();
                Ok(Token::Caret)
            }
            c if c.is_ascii_digit() => {
                let mut intpart = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    intpart.push(self.chars.next().unwrap());
                }
                let mut fracpart = String::new();
                if matches!(self.chars.peek(), Some('.')) {
                    self.chars.next();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                        fracpart.push(self.chars.next().unwrap());
                    }
                    if fracpart.is_empty() {
                        return Err(Error::Invalid("digit expected after '.'".into()));
                    }
                }
                Ok(Token::Number(exact_decimal(&intpart, &fracpart)?))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                {
                    ident.push(self.chars.next().unwrap());
                }
                Ok(Token::Ident(ident))
            }
            other => Err(Error::Invalid(format!("unexpected character '{other}'"))),
        }
    }
}

/// Exact rational value of `intpart.fracpart`.
pub fn exact_decimal(intpart: &str, fracpart: &str) -> Result<BigRational> {
    let digits = format!("{intpart}{fracpart}");
    let numer: BigInt = digits
        .parse()
        .map_err(|_| Error::Invalid(format!("bad number '{intpart}.{fracpart}'")))?;
    let denom = BigInt::from(10u32).pow(fracpart.len() as u32);
    Ok(BigRational::new(numer, denom))
}

/// Parses `p/q`, a decimal, or an integer as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let value = if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rational '{s}'")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rational '{s}'")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        BigRational::new(n, d)
    } else if let Some((i, f)) = s.split_once('.') {
        exact_decimal(i, f)?
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rational '{s}'")))?;
        BigRational::from(n)
    };
    Ok(if neg { -value } else { value })
}

/// Renders a rational without a denominator when integral.
pub fn rational_to_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
