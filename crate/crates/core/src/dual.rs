//! Local dual spaces.
//!
//! A dual polynomial `p` in variables `λ_1..λ_n` acts on a polynomial `f` at
//! a point `x` as the functional `f ↦ (p(D) f)(x)`, where `λ_j` is replaced
//! by `∂/∂x_j`. The dual space of a system `G` at `x` is the set of `p` such
//! that every derivative `D^α p`, used this way, annihilates every generator
//! at `x`. It is closed under differentiation, and its dimension is the
//! intersection multiplicity of `G` at `x`.
//!
//! Computation is done on the truncation to degree `d`, which is the null
//! space of a finite condition matrix. Two matrices are provided: one
//! written straight from the definition (rows indexed by `(g_i, α)`), and
//! the Macaulay form (rows indexed by shifted multiples `(X - x)^β g_i`).
//! They have the same row space.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{row_space_equal, RationalMatrix};
use crate::monomial::MultiIndex;
use crate::parse::{dual_var_names, format_poly};
use crate::polynomial::{falling_factorial, multi_factorial, Polynomial};
use crate::rational::{Point, Rational};

/// A polynomial in the dual variables `λ_1..λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualPolynomial(Polynomial);

impl DualPolynomial {
    pub fn new(p: Polynomial) -> Self {
        DualPolynomial(p)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars()
    }

    /// `∂p/∂λ_j`.
    pub fn partial(&self, j: usize) -> DualPolynomial {
        DualPolynomial(self.0.differentiate(&MultiIndex::unit(self.nvars(), j)))
    }

    /// Largest monomial in graded-lex order.
    pub fn leading_monomial(&self) -> Option<&MultiIndex> {
        self.0.terms().next_back().map(|(m, _)| m)
    }
}

impl fmt::Display for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.0, &dual_var_names(self.nvars())))
    }
}

/// Which condition matrix defines the truncated dual space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionMode {
    /// Rows `[D^α p](D) g_i (x) = 0`.
    Derivatives,
    /// Rows `p(D)((X - x)^β g_i)(x) = 0`.
    Multiples,
}

/// Canonical basis of the dual space at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSpaceBasis {
    pub point: Point,
    pub basis: Vec<DualPolynomial>,
    /// Degree at which the basis was read off (one below the degree at
    /// which the dimension was seen to stabilize).
    pub truncation_degree: u32,
}

impl DualSpaceBasis {
    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

fn check_system(g: &[Polynomial], x: &Point) -> Result<usize> {
    let first = g.first().ok_or(Error::EmptySystem)?;
    let n = first.nvars();
    for gi in g {
        check_arity(n, gi.nvars())?;
    }
    check_arity(n, x.dim())?;
    Ok(n)
}

/// `(p(D) f)(x) = Σ_β coeff_β(p) · (D^β f)(x)`.
pub fn apply_functional(p: &DualPolynomial, f: &Polynomial, x: &Point) -> Result<Rational> {
    check_arity(f.nvars(), p.nvars())?;
    check_arity(f.nvars(), x.dim())?;
    let mut sum = Rational::zero();
    for (beta, c) in p.poly().terms() {
        let d = f.differentiate(beta);
        if !d.is_zero() {
            sum += c * d.evaluate(x);
        }
    }
    Ok(sum)
}

/// Column monomials of the condition matrices at truncation `d`: all
/// `λ^β` with `|β| <= d`, in descending graded-lex order.
pub fn dual_columns(n: usize, d: u32) -> Vec<MultiIndex> {
    let mut cols = MultiIndex::all_up_to(n, d);
    cols.reverse();
    cols
}

/// Condition matrix read directly off the definition: for each generator
/// `g_i` and each `|α| <= d`, the row whose entry at column `λ^β` is
/// `[D^α λ^β](D) g_i (x) = β!/(β-α)! · (D^(β-α) g_i)(x)`.
pub fn paper_condition_rows(g: &[Polynomial], x: &Point, d: u32) -> Result<RationalMatrix> {
    let n = check_system(g, x)?;
    let cols = dual_columns(n, d);
    let alphas = MultiIndex::all_up_to(n, d);
    let mut rows = Vec::with_capacity(g.len() * alphas.len());
    for gi in g {
        let values: HashMap<&MultiIndex, Rational> = alphas
            .iter()
            .zip(derivative_values(gi, x, &alphas))
            .collect();
        for alpha in &alphas {
            let row = cols
                .iter()
                .map(|beta| match beta.checked_sub(alpha) {
                    Some(rest) => {
                        let v = &values[&rest];
                        if v.is_zero() {
                            return Rational::zero();
                        }
                        let ff = beta
                            .exponents()
                            .iter()
                            .zip(alpha.exponents())
                            .fold(BigInt::one(), |acc, (&b, &a)| acc * falling_factorial(b, a));
                        Rational::from_integer(ff) * v
                    }
                    None => Rational::zero(),
                })
                .collect();
            rows.push(row);
        }
    }
    Ok(RationalMatrix::from_rows(cols.len(), rows))
}

/// `(D^γ h)(x)` for every `γ` in `gammas`. Iterated derivatives are shared:
/// each `D^γ h` is one partial derivative of an already computed
/// `D^(γ - e_j) h`.
fn derivative_values(h: &Polynomial, x: &Point, gammas: &[MultiIndex]) -> Vec<Rational> {
    let n = x.dim();
    let mut order: Vec<&MultiIndex> = gammas.iter().collect();
    order.sort();
    let mut derivs: HashMap<&MultiIndex, Polynomial> = HashMap::with_capacity(order.len());
    for gamma in order {
        let d = match gamma.exponents().iter().position(|&e| e > 0) {
            None => h.clone(),
            Some(j) => {
                let mut parent = gamma.exponents().to_vec();
                parent[j] -= 1;
                match derivs.get(&MultiIndex::new(parent)) {
                    Some(p) if p.is_zero() => Polynomial::zero(n),
                    Some(p) => p.differentiate(&MultiIndex::unit(n, j)),
                    None => h.differentiate(gamma),
                }
            }
        };
        derivs.insert(gamma, d);
    }
    gammas
        .iter()
        .map(|gamma| {
            let d = &derivs[gamma];
            if d.is_zero() {
                Rational::zero()
            } else {
                d.evaluate(x)
            }
        })
        .collect()
}

/// Macaulay condition matrix: for each generator `g_i` and each
/// `|β| <= d`, the row expressing `p(D)((X - x)^β g_i)(x) = 0`.
///
/// Entries come from the Taylor expansion of the multiple about `x`: the
/// functional `λ^γ` takes the value `γ! · [(X - x)^γ] ((X - x)^β g_i)`.
pub fn multiple_condition_rows(g: &[Polynomial], x: &Point, d: u32) -> Result<RationalMatrix> {
    let n = check_system(g, x)?;
    let cols = dual_columns(n, d);
    let factorials: Vec<Rational> = cols
        .iter()
        .map(|gamma| Rational::from_integer(multi_factorial(gamma)))
        .collect();
    let betas = MultiIndex::all_up_to(n, d);
    let mut rows = Vec::with_capacity(g.len() * betas.len());
    for gi in g {
        let local = gi.shift_to_origin(x);
        for beta in &betas {
            let multiple = local.mul_term(beta, &Rational::one());
            let row = cols
                .iter()
                .zip(&factorials)
                .map(|(gamma, fact)| multiple.coeff(gamma) * fact)
                .collect();
            rows.push(row);
        }
    }
    Ok(RationalMatrix::from_rows(cols.len(), rows))
}

/// Orders a basis by leading monomial, breaking ties by the rest of the
/// terms (descending), which is deterministic for any input.
fn canonical_order(basis: &mut [DualPolynomial]) {
    basis.sort_by(|a, b| {
        let ta = a.poly().terms().rev().map(|(m, _)| m);
        let tb = b.poly().terms().rev().map(|(m, _)| m);
        a.leading_monomial()
            .cmp(&b.leading_monomial())
            .then_with(|| ta.cmp(tb))
    });
}

/// Basis of the dual space truncated to degree `d`, taken from the null
/// space of the chosen condition matrix.
///
/// Each element is the canonical null vector of one free column (that
/// coefficient is 1), and elements are listed by increasing leading
/// monomial.
pub fn truncated_dual(
    g: &[Polynomial],
    x: &Point,
    d: u32,
    mode: ConditionMode,
) -> Result<Vec<DualPolynomial>> {
    let n = check_system(g, x)?;
    let matrix = match mode {
        ConditionMode::Derivatives => paper_condition_rows(g, x, d)?,
        ConditionMode::Multiples => multiple_condition_rows(g, x, d)?,
    };
    let cols = dual_columns(n, d);
    let mut basis: Vec<DualPolynomial> = matrix
        .null_space()
        .into_iter()
        .map(|v| DualPolynomial(Polynomial::from_terms(n, cols.iter().cloned().zip(v))))
        .collect();
    canonical_order(&mut basis);
    Ok(basis)
}

/// Degree cap for the stabilization search: product of generator degrees
/// plus one.
pub fn stabilization_cap(g: &[Polynomial]) -> Result<u32> {
    let mut prod: u64 = 1;
    for gi in g {
        prod = prod.saturating_mul(gi.degree()? as u64);
    }
    Ok(u32::try_from(prod).unwrap_or(u32::MAX - 1) + 1)
}

/// The dual space of `g` at `x`.
///
/// Generators are shifted so that `x` becomes the origin, and truncations
/// of degree 0, 1, 2, ... are computed until the dimension repeats. Fails
/// with `NonIsolatedPoint` when no repeat happens by the degree cap.
pub fn dual_space(g: &[Polynomial], x: &Point) -> Result<DualSpaceBasis> {
    let n = check_system(g, x)?;
    let cap = stabilization_cap(g)?;
    let local: Vec<Polynomial> = g.iter().map(|gi| gi.shift_to_origin(x)).collect();
    let origin = Point::origin(n);
    let mut prev: Option<Vec<DualPolynomial>> = None;
    for d in 0..=cap {
        let basis = truncated_dual(&local, &origin, d, ConditionMode::Derivatives)?;
        if let Some(prev) = prev.take() {
            if prev.len() == basis.len() {
                return Ok(DualSpaceBasis {
                    point: x.clone(),
                    basis: prev,
                    truncation_degree: d - 1,
                });
            }
        }
        prev = Some(basis);
    }
    Err(Error::NonIsolatedPoint(x.to_string(), cap as usize))
}

/// Dual spaces at several points, computed in parallel. Results are in
/// the order of `points`.
pub fn dual_spaces(g: &[Polynomial], points: &[Point]) -> Vec<Result<DualSpaceBasis>> {
    points.par_iter().map(|x| dual_space(g, x)).collect()
}

/// Intersection multiplicity: the dimension of the dual space. Zero when
/// `x` is not a common zero.
pub fn multiplicity(g: &[Polynomial], x: &Point) -> Result<usize> {
    dual_space(g, x).map(|b| b.multiplicity())
}

fn coefficient_matrix(polys: &[&Polynomial], cols: &[MultiIndex]) -> RationalMatrix {
    RationalMatrix::from_rows(
        cols.len(),
        polys
            .iter()
            .map(|p| cols.iter().map(|m| p.coeff(m)).collect())
            .collect(),
    )
}

/// True iff the span of `basis` is closed under every `∂/∂λ_j`.
pub fn is_d_invariant(basis: &[DualPolynomial]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let n = first.nvars();
    let top = basis
        .iter()
        .filter_map(|p| p.poly().degree().ok())
        .max()
        .unwrap_or(0);
    let cols = dual_columns(n, top);
    let polys: Vec<&Polynomial> = basis.iter().map(DualPolynomial::poly).collect();
    let span = coefficient_matrix(&polys, &cols);
    for p in basis {
        for j in 0..n {
            let dp = p.partial(j);
            if dp.poly().is_zero() {
                continue;
            }
            let extra = coefficient_matrix(&[dp.poly()], &cols);
            let widened = span.vstack(&extra).expect("same column set");
            if !row_space_equal(&span, &widened).expect("same column set") {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{rat, ratio};

    fn sys(polys: &[&str]) -> Vec<Polynomial> {
        polys
            .iter()
            .map(|s| parse_poly(s, &["x", "y"]).unwrap())
            .collect()
    }

    fn dual(s: &str) -> DualPolynomial {
        DualPolynomial::new(parse_poly(s, &["l1", "l2"]).unwrap())
    }

    fn o() -> Point {
        Point::origin(2)
    }

    #[test]
    fn functional_examples() {
        let f1 = |s: &str| parse_poly(s, &["x"]).unwrap();
        let d1 = |s: &str| DualPolynomial::new(parse_poly(s, &["l1"]).unwrap());
        assert_eq!(
            apply_functional(&d1("l1"), &f1("x^2"), &Point::origin(1)).unwrap(),
            rat(0)
        );
        for a in [-3, 0, 5] {
            assert_eq!(
                apply_functional(&d1("l1^2"), &f1("x^2"), &Point::from_ints(&[a])).unwrap(),
                rat(2)
            );
        }
        let p = dual("l2 + 1/2*l1^2");
        assert_eq!(
            apply_functional(&p, &sys(&["x^2 - y"])[0], &o()).unwrap(),
            rat(0)
        );
        assert!(matches!(
            apply_functional(&d1("l1"), &sys(&["x"])[0], &o()),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn condition_rows_examples() {
        let m = paper_condition_rows(&sys(&["x^2", "y"]), &o(), 1).unwrap();
        // columns: l1, l2, 1 ; only nonzero row kills l2
        assert_eq!(m.rank(), 1);
        assert_eq!(m.null_space().len(), 2);
        let only = RationalMatrix::from_i64(&[&[0, 1, 0]]);
        assert!(row_space_equal(&m, &only).unwrap());

        let gx = vec![parse_poly("x", &["x"]).unwrap()];
        let m0 = paper_condition_rows(&gx, &Point::origin(1), 0).unwrap();
        assert_eq!(m0, RationalMatrix::from_i64(&[&[0]]));
        assert_eq!(m0.null_space().len(), 1);
        let m1 = paper_condition_rows(&gx, &Point::from_ints(&[1]), 0).unwrap();
        assert_eq!(m1, RationalMatrix::from_i64(&[&[1]]));
        assert!(m1.null_space().is_empty());
    }

    #[test]
    fn multiples_rows_examples() {
        let g = sys(&["x^2", "y"]);
        let a = paper_condition_rows(&g, &o(), 1).unwrap();
        let b = multiple_condition_rows(&g, &o(), 1).unwrap();
        assert!(row_space_equal(&a, &b).unwrap());

        // G = {x}, d = 2: every dual monomial containing l1 is killed.
        let m = multiple_condition_rows(&sys(&["x"]), &o(), 2).unwrap();
        let ns = truncated_dual(&sys(&["x"]), &o(), 2, ConditionMode::Multiples).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(ns, vec![dual("1"), dual("l2"), dual("l2^2")]);

        // beta = 0 rows are the plain functional conditions
        let g = sys(&["x^2 - y", "y^2"]);
        let x = Point(vec![ratio(1, 2), rat(3)]);
        let m = multiple_condition_rows(&g, &x, 2).unwrap();
        let cols = dual_columns(2, 2);
        let rows_per_gen = cols.len();
        for (i, gi) in g.iter().enumerate() {
            let row = m.row(i * rows_per_gen);
            for (c, gamma) in cols.iter().enumerate() {
                let e = DualPolynomial::new(Polynomial::monomial(gamma.clone(), rat(1)));
                assert_eq!(row[c], apply_functional(&e, gi, &x).unwrap());
            }
        }
    }

    #[test]
    fn truncated_examples() {
        let b = truncated_dual(&sys(&["x", "y"]), &o(), 3, ConditionMode::Derivatives).unwrap();
        assert_eq!(b, vec![dual("1")]);
        let b = truncated_dual(&sys(&["x^2", "y"]), &o(), 2, ConditionMode::Derivatives).unwrap();
        assert_eq!(b, vec![dual("1"), dual("l1")]);
        let g = sys(&["x^2 - y", "y^2"]);
        let expected = vec![
            dual("1"),
            dual("l1"),
            dual("l2 + 1/2*l1^2"),
            dual("l1*l2 + 1/6*l1^3"),
        ];
        for mode in [ConditionMode::Derivatives, ConditionMode::Multiples] {
            assert_eq!(truncated_dual(&g, &o(), 3, mode).unwrap(), expected);
        }
    }

    #[test]
    fn dual_space_examples() {
        let b = dual_space(&sys(&["x", "y"]), &o()).unwrap();
        assert_eq!(b.basis, vec![dual("1")]);
        assert_eq!(b.multiplicity(), 1);

        let b = dual_space(&sys(&["x^2 - y", "y^2"]), &o()).unwrap();
        assert_eq!(b.multiplicity(), 4);
        assert_eq!(b.truncation_degree, 3);

        for q in [0, 2, -7] {
            let r = dual_space(&sys(&["x*y", "x*y - x"]), &Point::from_ints(&[0, q]));
            assert!(matches!(r, Err(Error::NonIsolatedPoint(_, 5))));
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            multiplicity(&sys(&["x^2 + y^2 - 1", "y"]), &Point::from_ints(&[1, 0])).unwrap(),
            1
        );
        let b = dual_space(&sys(&["y - x^2", "y"]), &o()).unwrap();
        assert_eq!(b.basis, vec![dual("1"), dual("l1")]);
        assert_eq!(
            multiplicity(&sys(&["x", "y"]), &Point::from_ints(&[1, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn d_invariance_examples() {
        assert!(is_d_invariant(&[dual("1"), dual("l1")]));
        assert!(!is_d_invariant(&[dual("l1")]));
        assert!(is_d_invariant(&[
            dual("1"),
            dual("l1"),
            dual("l2 + 1/2*l1^2"),
            dual("l1*l2 + 1/6*l1^3"),
        ]));
        assert!(is_d_invariant(&[]));
    }

    #[test]
    fn constant_generator_has_no_zeros() {
        let g = sys(&["3", "x"]);
        assert_eq!(multiplicity(&g, &o()).unwrap(), 0);
    }
}
