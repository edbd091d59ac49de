//! Exact solver for zero-dimensional systems whose common zeros are
//! rational: lex Gröbner basis, then back-substitution through the
//! triangular structure.

use crate::error::{Error, Result};
use crate::groebner::univariate::{gcd, rational_roots_dense};
use crate::groebner::{buchberger, quotient_dimension, MonomialOrder, QuotientDimension};
use crate::parse::format_poly;
use crate::polynomial::Polynomial;
use crate::rational::{Point, Rational};

/// Common zeros found with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolutions {
    /// Distinct points, sorted.
    pub points: Vec<Point>,
    /// Univariate factors (in the variable being solved for) that had no
    /// rational roots. Empty iff the point list is complete.
    pub unresolved: Vec<Polynomial>,
}

impl RationalSolutions {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// All common zeros of `f` with rational coordinates.
///
/// Fails with `NotZeroDimensional` when the ideal has infinitely many
/// zeros. Zeros that would need irrational coordinates are reported
/// through `unresolved` rather than approximated.
pub fn solve_rational(f: &[Polynomial]) -> Result<RationalSolutions> {
    let n = f.first().ok_or(Error::EmptySystem)?.nvars();
    let order = MonomialOrder::lex(n);
    let gb = buchberger(f, &order)?;
    if quotient_dimension(&gb) == QuotientDimension::Infinite {
        return Err(Error::NotZeroDimensional);
    }
    let mut solutions = RationalSolutions {
        points: Vec::new(),
        unresolved: Vec::new(),
    };
    if gb.is_unit() {
        return Ok(solutions);
    }

    // Partial solutions hold values for x_{k+1}..x_n (stored in order).
    let mut partial: Vec<Vec<Rational>> = vec![Vec::new()];
    for k in (0..n).rev() {
        // generators of the elimination ideal in x_k..x_n
        let elim: Vec<&Polynomial> = gb
            .generators()
            .iter()
            .filter(|g| g.support_vars().iter().all(|&j| j >= k))
            .collect();
        let mut next = Vec::new();
        for tail in &partial {
            let mut common: Vec<Rational> = Vec::new();
            for g in &elim {
                let mut s = (*g).clone();
                for (off, v) in tail.iter().enumerate() {
                    s = s.substitute(k + 1 + off, v);
                }
                let c = s.univariate_coeffs(k).expect("only x_k remains");
                common = gcd(&common, &c);
            }
            // the lex basis has a generator with leading term a pure power
            // of x_k, so the gcd cannot vanish
            debug_assert!(!common.is_empty(), "elimination gcd vanished");
            if common.is_empty() {
                return Err(Error::NotZeroDimensional);
            }
            let (roots, rest) = rational_roots_dense(&common);
            if let Some(rest) = rest {
                solutions
                    .unresolved
                    .push(Polynomial::from_univariate(n, k, &rest));
            }
            for (r, _) in roots {
                let mut ext = Vec::with_capacity(tail.len() + 1);
                ext.push(r);
                ext.extend(tail.iter().cloned());
                next.push(ext);
            }
        }
        partial = next;
    }
    solutions.points = partial.into_iter().map(Point).collect();
    solutions.points.sort();
    solutions.points.dedup();
    Ok(solutions)
}

/// Like [`solve_rational`], but fails with `IrrationalRoots` unless every
/// common zero is rational.
pub fn solve_rational_all(f: &[Polynomial]) -> Result<Vec<Point>> {
    let sol = solve_rational(f)?;
    if sol.is_complete() {
        return Ok(sol.points);
    }
    let n = f[0].nvars();
    let names: Vec<String> = (1..=n).map(|j| format!("x{j}")).collect();
    let details = sol
        .unresolved
        .iter()
        .map(|p| format_poly(p, &names))
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::IrrationalRoots(details))
}
