//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::rational::{Point, Rational};

/// A polynomial in `nvars` variables, stored as a map from exponent vector
/// to nonzero coefficient. Iteration is in ascending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

/// The three ring operations, for callers that want arity checking instead
/// of the panicking operator impls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

pub fn ring_op(op: RingOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.nvars != g.nvars {
        return Err(Error::ArityMismatch {
            expected: f.nvars,
            found: g.nvars,
        });
    }
    Ok(match op {
        RingOp::Add => f + g,
        RingOp::Sub => f - g,
        RingOp::Mul => f * g,
    })
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    /// The coordinate function `x_j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, j), Rational::one())
    }

    pub fn monomial(m: MultiIndex, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector has wrong length");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(MultiIndex::is_constant)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &MultiIndex, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.add(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, m: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Iterated partial derivative `∂^|α| f / ∂x^α`.
    pub fn differentiate(&self, alpha: &MultiIndex) -> Polynomial {
        assert_eq!(alpha.len(), self.nvars, "derivative order has wrong length");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some(rest) = m.checked_sub(alpha) {
                let factor = m
                    .exponents()
                    .iter()
                    .zip(alpha.exponents())
                    .fold(BigInt::one(), |acc, (&e, &a)| acc * falling_factorial(e, a));
                out.add_term(rest, c * Rational::from_integer(factor));
            }
        }
        out
    }

    pub fn evaluate(&self, x: &Point) -> Rational {
        assert_eq!(x.dim(), self.nvars, "point has wrong dimension");
        let mut top = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (t, &e) in top.iter_mut().zip(m.exponents()) {
                *t = (*t).max(e);
            }
        }
        // powers[j][k] = x_j^k
        let powers: Vec<Vec<Rational>> = x
            .coords()
            .iter()
            .zip(&top)
            .map(|(xj, &t)| {
                let mut row = Vec::with_capacity(t as usize + 1);
                row.push(Rational::one());
                for k in 1..=t as usize {
                    let next = &row[k - 1] * xj;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= &powers[j][e as usize];
                }
            }
            sum += t;
        }
        sum
    }

    /// Returns `g` with `g(y) = f(x0 + y)`.
    pub fn shift_to_origin(&self, x0: &Point) -> Polynomial {
        assert_eq!(x0.dim(), self.nvars, "point has wrong dimension");
        if x0.is_origin() {
            return self.clone();
        }
        let n = self.nvars;
        // powers[j][k] = (y_j + a_j)^k
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(n)]; n];
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(n, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let lin = &Polynomial::var(n, j) + &Polynomial::constant(n, x0.0[j].clone());
                    let next = powers[j].last().unwrap() * &lin;
                    powers[j].push(next);
                }
                if e > 0 {
                    t = &t * &powers[j][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Total degree; an error for the zero polynomial.
    pub fn degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .next_back()
            .map(MultiIndex::degree)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Total degree together with the homogeneous part of that degree.
    pub fn degree_and_leading_form(&self) -> Result<(u32, Polynomial)> {
        let d = self.degree()?;
        let form = Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        };
        Ok((d, form))
    }

    /// Substitutes `x_j = value`, keeping the ambient variable count.
    pub fn substitute(&self, j: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            let k = std::mem::replace(&mut e[j], 0);
            out.add_term(
                MultiIndex::new(e),
                c * num_traits::pow(value.clone(), k as usize),
            );
        }
        out
    }

    /// Dense coefficients (constant first) when only `x_j` occurs.
    pub fn univariate_coeffs(&self, j: usize) -> Option<Vec<Rational>> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != j && k > 0) {
                return None;
            }
            let k = e[j] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(coeffs)
    }

    /// Inverse of [`univariate_coeffs`](Self::univariate_coeffs).
    pub fn from_univariate(nvars: usize, j: usize, coeffs: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[j] = k as u32;
                (MultiIndex::new(e), c.clone())
            }),
        )
    }

    /// Indices of the variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&j| self.terms.keys().any(|m| m.exponents()[j] > 0))
            .collect()
    }
}

/// `e (e-1) ... (e-a+1)`.
pub(crate) fn falling_factorial(e: u32, a: u32) -> BigInt {
    (0..a).fold(BigInt::one(), |acc, i| acc * BigInt::from(e - i))
}

/// `α! = Π α_j!`.
pub(crate) fn multi_factorial(m: &MultiIndex) -> BigInt {
    m.exponents()
        .iter()
        .fold(BigInt::one(), |acc, &e| acc * falling_factorial(e, e))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{rat, ratio};

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn ring_examples() {
        assert!(ring_op(RingOp::Add, &p("x"), &p("-x")).unwrap().is_zero());
        assert_eq!(p("x+y") * p("x-y"), p("x^2 - y^2"));
        assert_eq!(p("x^2-y") * p("y^2"), p("x^2*y^2 - y^3"));
        let one_var = parse_poly("x", &["x"]).unwrap();
        assert_eq!(
            ring_op(RingOp::Mul, &p("x"), &one_var),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn powers() {
        assert_eq!(p("x+1").pow(2), p("x^2 + 2*x + 1"));
        assert_eq!(p("3*x - y^7").pow(0), Polynomial::one(2));
        assert_eq!(p("x*y").pow(2), p("x^2*y^2"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^2").differentiate(&mi(&[1, 0])), p("2*x"));
        assert_eq!(p("x^2 - y").differentiate(&mi(&[2, 0])), p("2"));
        assert!(p("y^2").differentiate(&mi(&[0, 3])).is_zero());
        assert_eq!(p("x^3*y^2").differentiate(&mi(&[2, 1])), p("12*x*y"));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("x^2+y").evaluate(&Point::from_ints(&[2, 3])), rat(7));
        assert_eq!(p("x^2+y^2-1").evaluate(&Point::from_ints(&[1, 0])), rat(0));
        assert_eq!(p("x-1").evaluate(&Point::from_ints(&[0, 0])), rat(-1));
        let half = Point(vec![ratio(1, 2), ratio(-1, 3)]);
        assert_eq!(p("x*y").evaluate(&half), ratio(-1, 6));
    }

    #[test]
    fn shifts() {
        let f = parse_poly("x^2", &["x"]).unwrap();
        let g = f.shift_to_origin(&Point::from_ints(&[1]));
        assert_eq!(g, parse_poly("x^2 + 2*x + 1", &["x"]).unwrap());
        let h = p("x^3 - 2*x*y + 5");
        assert_eq!(h.shift_to_origin(&Point::origin(2)), h);
        // (x+1)(y+2)
        assert_eq!(
            p("x*y").shift_to_origin(&Point::from_ints(&[1, 2])),
            p("x*y + 2*x + y + 2")
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(
            p("x^2+y^2-1").degree_and_leading_form().unwrap(),
            (2, p("x^2+y^2"))
        );
        assert_eq!(
            p("y - x^2").degree_and_leading_form().unwrap(),
            (2, p("-x^2"))
        );
        assert_eq!(p("5").degree_and_leading_form().unwrap(), (0, p("5")));
        assert_eq!(Polynomial::zero(2).degree(), Err(Error::ZeroPolynomial));
        assert!(Polynomial::zero(2).degree_and_leading_form().is_err());
    }

    #[test]
    fn univariate_views() {
        let f = p("3*y^2 - y + 1/2");
        let c = f.univariate_coeffs(1).unwrap();
        assert_eq!(c, vec![ratio(1, 2), rat(-1), rat(3)]);
        assert_eq!(Polynomial::from_univariate(2, 1, &c), f);
        assert!(p("x*y").univariate_coeffs(1).is_none());
        assert_eq!(p("x*y + y").substitute(0, &rat(2)), p("3*y"));
        assert_eq!(p("x*y + 1").support_vars(), vec![0, 1]);
    }
}
