//! Dense univariate polynomials over the rationals: Euclidean gcd and
//! rational roots. Coefficient vectors are constant-term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

/// Degree, `None` for zero.
pub fn degree(c: &[Rational]) -> Option<usize> {
    c.iter().rposition(|x| !x.is_zero())
}

pub fn eval(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
}

fn monic(c: Vec<Rational>) -> Vec<Rational> {
    let c = trim(c);
    match c.last() {
        Some(lc) if !lc.is_one() => {
            let inv = lc.recip();
            c.iter().map(|a| a * &inv).collect()
        }
        _ => c,
    }
}

/// Remainder of `a` divided by nonzero `b`.
pub fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = degree(b).expect("division by zero polynomial");
    let lc = b[db].clone();
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] / &lc;
        let shift = dr - db;
        for (i, bi) in b[..=db].iter().enumerate() {
            r[i + shift] -= &q * bi;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd; zero only when both inputs are zero.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while degree(&b).is_some() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Exact division by `(x - root)`; the caller guarantees `root` is a root.
fn deflate(c: &[Rational], root: &Rational) -> Vec<Rational> {
    let d = degree(c).expect("nonzero");
    let mut q = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for i in (1..=d).rev() {
        carry = &carry * root + &c[i];
        q[i - 1] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a dense polynomial, with multiplicities, plus the
/// monic cofactor left after deflating them (if it has degree >= 1).
pub fn rational_roots_dense(c: &[Rational]) -> (Vec<(Rational, usize)>, Option<Vec<Rational>>) {
    let mut c = trim(c.to_vec());
    assert!(!c.is_empty(), "zero polynomial");
    let mut roots = Vec::new();

    let zeros = c.iter().take_while(|a| a.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
        c.drain(..zeros);
    }

    if degree(&c).unwrap_or(0) > 0 {
        // primitive integer form
        let lcm = c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = c
            .iter()
            .map(|a| (a * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().expect("nonempty").clone();
        let mut candidates: Vec<Rational> = Vec::new();
        for p in divisors(&ints[0]) {
            for q in divisors(&lead) {
                let r = Rational::new(p.clone(), q);
                candidates.push(-r.clone());
                candidates.push(r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mut mult = 0;
            while degree(&c).unwrap_or(0) > 0 && eval(&c, &r).is_zero() {
                c = deflate(&c, &r);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }

    roots.sort();
    let rest = (degree(&c).unwrap_or(0) > 0).then(|| monic(c));
    (roots, rest)
}

/// Rational roots of a univariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// Distinct roots in increasing order, with multiplicities.
    pub roots: Vec<(Rational, usize)>,
    /// Monic factor of degree >= 1 with no rational roots, if any remains.
    pub remaining_factor: Option<Polynomial>,
}

/// Rational roots of `u` (a polynomial in exactly one variable) by the
/// rational root theorem, with multiplicities from repeated deflation.
pub fn univariate_rational_roots(u: &Polynomial) -> Result<RationalRoots> {
    if u.nvars() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: u.nvars(),
        });
    }
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = u.univariate_coeffs(0).expect("one variable");
    let (roots, rest) = rational_roots_dense(&coeffs);
    Ok(RationalRoots {
        roots,
        remaining_factor: rest.map(|c| Polynomial::from_univariate(1, 0, &c)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{rat, ratio};

    fn u(s: &str) -> Polynomial {
        parse_poly(s, &["x"]).unwrap()
    }

    #[test]
    fn root_examples() {
        let r = univariate_rational_roots(&u("x^2 - x")).unwrap();
        assert_eq!(r.roots, vec![(rat(0), 1), (rat(1), 1)]);
        assert_eq!(r.remaining_factor, None);

        let r = univariate_rational_roots(&u("x^2")).unwrap();
        assert_eq!(r.roots, vec![(rat(0), 2)]);

        let r = univariate_rational_roots(&u("x^2 - 2")).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.remaining_factor, Some(u("x^2 - 2")));
    }

    #[test]
    fn mixed_roots() {
        // (2x - 1)^2 (x + 3) (x^2 + 1) / 7
        let f = u("(2*x - 1)^2 * (x + 3) * (x^2 + 1) * 1/7");
        let r = univariate_rational_roots(&f).unwrap();
        assert_eq!(r.roots, vec![(rat(-3), 1), (ratio(1, 2), 2)]);
        assert_eq!(r.remaining_factor, Some(u("x^2 + 1")));
        assert!(univariate_rational_roots(&u("5")).unwrap().roots.is_empty());
        assert_eq!(
            univariate_rational_roots(&Polynomial::zero(1)),
            Err(Error::ZeroPolynomial)
        );
        let two = parse_poly("x", &["x", "y"]).unwrap();
        assert!(matches!(
            univariate_rational_roots(&two),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn gcd_examples() {
        let c = |s: &str| u(s).univariate_coeffs(0).unwrap();
        assert_eq!(gcd(&c("x^2 - 1"), &c("2*x - 2")), c("x - 1"));
        assert_eq!(gcd(&c("x^2 + 1"), &c("1")), c("1"));
        assert_eq!(gcd(&c("0"), &c("3*x + 6")), c("x + 2"));
        assert!(gcd(&c("0"), &c("0")).is_empty());
    }
}
