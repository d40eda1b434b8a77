use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;

use super::{GaussianRational, Symbol};
use crate::{Error, Result};

/// A product of commuting symbols, stored sorted.
///
/// Monomials are ordered reverse-lexicographically: the factor lists are
/// compared from their largest factor downwards. This puts `E_z*H_x` before
/// `E_x*H_z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<Symbol>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(mut factors: Vec<Symbol>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn factors(&self) -> &[Symbol] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.degree() + other.degree());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        Monomial::new(factors)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.iter().rev().cmp(other.factors.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Into<Symbol>> FromIterator<S> for Monomial {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Monomial::new(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.factors.len() {
            let sym = &self.factors[idx];
            let run = self.factors[idx..].iter().take_while(|s| *s == sym).count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{sym}^{run}")?;
            } else {
                write!(f, "{sym}")?;
            }
            idx += run;
        }
        Ok(())
    }
}

/// Linear combination of monomials with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality of the term
/// map is symbolic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Expr {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Expr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn symbol(s: impl Into<Symbol>) -> Self {
        Self::term(GaussianRational::one(), Monomial::new(vec![s.into()]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// Substitute numeric values for every symbol.
    pub fn eval(&self, value: impl Fn(&Symbol) -> Complex64) -> Complex64 {
        self.terms.iter().map(|(m, c)| m.factors().iter().fold(c.to_complex64(), |acc, s| acc * value(s))).sum()
    }

    /// True iff every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }
}

impl Add<&Expr> for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Expr> for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&Expr> for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(&GaussianRational::real(-1))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

impl std::iter::Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        iter.fold(Expr::zero(), |acc, e| &acc + &e)
    }
}

fn coefficient_text(c: &GaussianRational) -> String {
    if !c.re().is_zero() && !c.im().is_zero() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Canonical text form, e.g. `-2*E_z*H_x + 2*E_x*H_z`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let minus_one = GaussianRational::real(-1);
            let text = if m.is_one() {
                coefficient_text(c)
            } else if c.is_one() {
                m.to_string()
            } else if *c == minus_one {
                format!("-{m}")
            } else {
                format!("{}*{m}", coefficient_text(c))
            };
            match (idx, text.strip_prefix('-')) {
                (0, _) => f.write_str(&text)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if current.is_empty() {
                if !out.is_empty() || negative {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                negative = ch == '-';
            } else {
                out.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            }
            continue;
        }
        current.push(ch);
    }
    if depth != 0 || current.is_empty() {
        return Err(Error::Parse(format!("malformed expression `{s}`")));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_factor(piece: &str) -> Result<Vec<Symbol>> {
    let (name, power) = match piece.split_once('^') {
        Some((n, p)) => {
            let p: usize = p.parse().map_err(|_| Error::Parse(format!("bad exponent in `{piece}`")))?;
            (n, p)
        }
        None => (piece, 1),
    };
    let sym: Symbol = name.parse()?;
    Ok(vec![sym; power])
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Expr::zero());
        }
        let mut out = Expr::zero();
        for (negative, term) in split_terms(s)? {
            let mut coeff = GaussianRational::one();
            let mut factors = Vec::new();
            for (idx, piece) in term.split('*').enumerate() {
                if piece.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{term}`")));
                }
                if idx == 0 {
                    if let Ok(c) = piece.parse::<GaussianRational>() {
                        coeff = c;
                        continue;
                    }
                }
                factors.extend(parse_factor(piece)?);
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(Monomial::new(factors), &coeff);
        }
        Ok(out)
    }
}
