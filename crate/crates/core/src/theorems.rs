//! Executable forms of the two main statements: the Bezout count of a
//! square system as a sum of local dual-space dimensions, and ideal
//! membership decided by annihilation under every local dual functional.
//! Each verdict is accompanied by the Gröbner-basis answer to the same
//! question.

use num_traits::Zero;

use crate::dual::{apply_functional, dual_spaces, DualPolynomial, DualSpaceBasis};
use crate::error::{Error, Result};
use crate::groebner::univariate::gcd;
use crate::groebner::{
    buchberger, quotient_dimension, solve_rational_all, GroebnerBasis, MonomialOrder,
    QuotientDimension,
};
use crate::monomial::MultiIndex;
use crate::parse::{parse_poly, validate_vars};
use crate::polynomial::Polynomial;
use crate::rational::{Point, Rational};

/// A list of nonzero polynomials over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialSystem {
    vars: Vec<String>,
    polys: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl PolynomialSystem {
    pub fn new(vars: Vec<String>, polys: Vec<Polynomial>) -> Result<Self> {
        validate_vars(&vars)?;
        if polys.is_empty() {
            return Err(Error::EmptySystem);
        }
        let mut degrees = Vec::with_capacity(polys.len());
        for p in &polys {
            if p.nvars() != vars.len() {
                return Err(Error::ArityMismatch {
                    expected: vars.len(),
                    found: p.nvars(),
                });
            }
            degrees.push(p.degree()?);
        }
        Ok(PolynomialSystem {
            vars,
            polys,
            degrees,
        })
    }

    /// Parses each expression against `vars`.
    pub fn parse(vars: &[&str], exprs: &[&str]) -> Result<Self> {
        let polys = exprs
            .iter()
            .map(|e| parse_poly(e, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars.iter().map(|v| v.to_string()).collect(), polys)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Product of the total degrees.
    pub fn bezout_number(&self) -> u64 {
        self.degrees
            .iter()
            .fold(1u64, |acc, &d| acc.saturating_mul(d as u64))
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        buchberger(&self.polys, order)
    }

    fn lex_basis(&self) -> Result<GroebnerBasis> {
        self.groebner(&MonomialOrder::lex(self.nvars()))
    }

    fn check_point(&self, x: &Point) -> Result<()> {
        if x.dim() == self.nvars() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: x.dim(),
            })
        }
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: f.nvars(),
            })
        }
    }
}

/// True iff every polynomial of the system vanishes at `x`.
pub fn verify_common_zero(system: &PolynomialSystem, x: &Point) -> Result<bool> {
    system.check_point(x)?;
    Ok(system.polys.iter().all(|g| g.evaluate(x).is_zero()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BezoutVerdict {
    /// The multiplicities sum to the product of the degrees.
    Match,
    /// Finitely many zeros, but fewer than the product of the degrees.
    Deficit,
    /// Infinitely many common zeros.
    Infinite,
}

impl std::fmt::Display for BezoutVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BezoutVerdict::Match => "MATCH",
            BezoutVerdict::Deficit => "DEFICIT",
            BezoutVerdict::Infinite => "INFINITE",
        })
    }
}

/// Whether two plane curves meet on the line at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinityEvidence {
    None,
    /// The common factor of the two leading forms, as a binary form.
    Present(Polynomial),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutReport {
    /// Common zeros with their multiplicities, sorted by point.
    pub roots: Vec<(Point, usize)>,
    /// The dual space computed at each root, same order as `roots`.
    pub dual_bases: Vec<DualSpaceBasis>,
    pub total: usize,
    pub bezout_number: u64,
    pub verdict: BezoutVerdict,
    /// Only for two curves in the plane with a deficit.
    pub infinity_evidence: Option<InfinityEvidence>,
    /// True when the roots account for every common zero.
    pub completeness: bool,
    /// Dimension of the quotient ring, from a lex Gröbner basis.
    pub quotient_dimension: QuotientDimension,
}

/// Sums local multiplicities over the common zeros and compares with the
/// product of the degrees.
///
/// With `roots = None` the zeros are found by the exact solver (failing
/// with `IrrationalRoots` if some are not rational). Supplied roots must
/// each be common zeros; the report is then complete exactly when their
/// multiplicities exhaust the quotient dimension.
pub fn bezout_report(system: &PolynomialSystem, roots: Option<&[Point]>) -> Result<BezoutReport> {
    let bezout_number = system.bezout_number();
    let gb = system.lex_basis()?;
    let qdim = quotient_dimension(&gb);
    if qdim == QuotientDimension::Infinite {
        return Ok(BezoutReport {
            roots: Vec::new(),
            dual_bases: Vec::new(),
            total: 0,
            bezout_number,
            verdict: BezoutVerdict::Infinite,
            infinity_evidence: None,
            completeness: false,
            quotient_dimension: qdim,
        });
    }

    let (points, solved) = match roots {
        Some(given) => {
            for x in given {
                if !verify_common_zero(system, x)? {
                    return Err(Error::InvalidRoot(x.to_string()));
                }
            }
            let mut pts = given.to_vec();
            pts.sort();
            pts.dedup();
            (pts, false)
        }
        None => (solve_rational_all(system.polys())?, true),
    };

    let dual_bases = dual_spaces(system.polys(), &points)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let roots: Vec<(Point, usize)> = dual_bases
        .iter()
        .map(|b| (b.point.clone(), b.multiplicity()))
        .collect();
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    let completeness = solved || qdim == QuotientDimension::Finite(total);
    debug_assert!(
        total as u64 <= bezout_number,
        "multiplicity total exceeds Bezout number"
    );

    let verdict = if total as u64 == bezout_number {
        BezoutVerdict::Match
    } else {
        BezoutVerdict::Deficit
    };
    let infinity_evidence =
        if verdict == BezoutVerdict::Deficit && system.nvars() == 2 && system.polys().len() == 2 {
            Some(infinity_check_2d(system)?)
        } else {
            None
        };

    Ok(BezoutReport {
        roots,
        dual_bases,
        total,
        bezout_number,
        verdict,
        infinity_evidence,
        completeness,
        quotient_dimension: qdim,
    })
}

/// Exponent of `y` dividing a binary form.
fn y_order(form: &Polynomial) -> u32 {
    form.terms()
        .map(|(m, _)| m.exponents()[1])
        .min()
        .unwrap_or(0)
}

/// Coefficients of `form(x, 1)`, constant first.
fn dehomogenize(form: &Polynomial) -> Vec<Rational> {
    let mut c = Vec::new();
    for (m, a) in form.terms() {
        let k = m.exponents()[0] as usize;
        if c.len() <= k {
            c.resize(k + 1, Rational::zero());
        }
        c[k] += a;
    }
    c
}

fn homogenize(c: &[Rational], extra_y: u32) -> Polynomial {
    let e = c.len().saturating_sub(1) as u32;
    Polynomial::from_terms(
        2,
        c.iter().enumerate().map(|(k, a)| {
            let k = k as u32;
            (MultiIndex::new(vec![k, e - k + extra_y]), a.clone())
        }),
    )
}

/// Decides whether two plane curves share a point at infinity, i.e.
/// whether their leading forms have a common projective zero. The test is
/// exact: a nonconstant gcd of the forms dehomogenized at `y = 1`, or both
/// forms divisible by `y`.
pub fn infinity_check_2d(system: &PolynomialSystem) -> Result<InfinityEvidence> {
    if system.nvars() != 2 || system.polys().len() != 2 {
        return Err(Error::WrongArity {
            polys: system.polys().len(),
            vars: system.nvars(),
        });
    }
    let (_, l1) = system.polys[0].degree_and_leading_form()?;
    let (_, l2) = system.polys[1].degree_and_leading_form()?;
    let g = gcd(&dehomogenize(&l1), &dehomogenize(&l2));
    let shared_y = y_order(&l1).min(y_order(&l2));
    if g.len() <= 1 && shared_y == 0 {
        return Ok(InfinityEvidence::None);
    }
    Ok(InfinityEvidence::Present(homogenize(&g, shared_y)))
}

/// A dual functional at a common zero that does not annihilate `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub point: Point,
    pub functional: DualPolynomial,
    /// `(p(D) f)(point)`, nonzero.
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    /// Present exactly when `member` is false.
    pub witness: Option<Witness>,
    /// Gröbner normal-form answer.
    pub oracle_member: bool,
    pub oracle_agrees: bool,
}

/// Decides `f ∈ <F>` by checking that every dual functional at every
/// common zero annihilates `f`, and compares with the normal form of `f`
/// modulo a Gröbner basis.
///
/// Requires a zero-dimensional ideal whose zeros are all rational.
pub fn dual_member(f: &Polynomial, system: &PolynomialSystem) -> Result<MembershipVerdict> {
    system.check_poly(f)?;
    if f.is_zero() {
        return Ok(MembershipVerdict {
            member: true,
            witness: None,
            oracle_member: true,
            oracle_agrees: true,
        });
    }
    let gb = system.lex_basis()?;
    if quotient_dimension(&gb) == QuotientDimension::Infinite {
        return Err(Error::NotZeroDimensional);
    }
    let points = solve_rational_all(system.polys())?;
    let bases = dual_spaces(system.polys(), &points)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut witness = None;
    'outer: for b in &bases {
        for p in &b.basis {
            let value = apply_functional(p, f, &b.point)?;
            if !value.is_zero() {
                witness = Some(Witness {
                    point: b.point.clone(),
                    functional: p.clone(),
                    value,
                });
                break 'outer;
            }
        }
    }
    let member = witness.is_none();
    let oracle_member = gb.contains(f);
    Ok(MembershipVerdict {
        member,
        witness,
        oracle_member,
        oracle_agrees: member == oracle_member,
    })
}

/// Smallest `m >= 1` with `f^m` in the ideal, and the a priori bound
/// `deg f_1 ··· deg f_s + 1` it must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerCertificate {
    pub m: u32,
    pub bound: u64,
}

/// Finds the least power of `f` lying in `<F>` by a linear scan up to the
/// degree-product bound. `f` must vanish at every common zero.
pub fn nullstellensatz_power(
    f: &Polynomial,
    system: &PolynomialSystem,
) -> Result<PowerCertificate> {
    system.check_poly(f)?;
    let gb = system.lex_basis()?;
    if quotient_dimension(&gb) == QuotientDimension::Infinite {
        return Err(Error::NotZeroDimensional);
    }
    for x in solve_rational_all(system.polys())? {
        if !f.evaluate(&x).is_zero() {
            return Err(Error::NotVanishing(x.to_string()));
        }
    }
    let bound = system.bezout_number().saturating_add(1);
    // NF(f^m) = NF(NF(f^(m-1)) * f)
    let mut residue = gb.normal_form(f);
    let mut m: u32 = 1;
    loop {
        if residue.is_zero() {
            return Ok(PowerCertificate { m, bound });
        }
        if u64::from(m) >= bound {
            return Err(Error::BoundViolation(bound as usize));
        }
        residue = gb.normal_form(&(&residue * f));
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::rat;

    fn sys(exprs: &[&str]) -> PolynomialSystem {
        PolynomialSystem::parse(&["x", "y"], exprs).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn system_validation() {
        assert_eq!(
            PolynomialSystem::parse(&["x", "y"], &["x", "0"]),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            PolynomialSystem::parse(&["x"], &[]),
            Err(Error::EmptySystem)
        );
        assert_eq!(sys(&["x^2 - y", "y^3"]).degrees(), &[2, 3]);
        assert_eq!(sys(&["x^2 - y", "y^3"]).bezout_number(), 6);
    }

    #[test]
    fn common_zero_examples() {
        let g = sys(&["x^2 + y^2 - 1", "y"]);
        assert!(verify_common_zero(&g, &Point::from_ints(&[1, 0])).unwrap());
        assert!(!verify_common_zero(&g, &Point::from_ints(&[0, 0])).unwrap());
        assert!(verify_common_zero(&sys(&["x", "y"]), &Point::origin(2)).unwrap());
        assert!(verify_common_zero(&g, &Point::origin(3)).is_err());
    }

    #[test]
    fn bezout_examples() {
        let r = bezout_report(&sys(&["x^2 + y^2 - 1", "y"]), None).unwrap();
        assert_eq!(
            r.roots,
            vec![
                (Point::from_ints(&[-1, 0]), 1),
                (Point::from_ints(&[1, 0]), 1)
            ]
        );
        assert_eq!((r.total, r.bezout_number), (2, 2));
        assert_eq!(r.verdict, BezoutVerdict::Match);
        assert_eq!(r.infinity_evidence, None);
        assert!(r.completeness);

        let f7 = PolynomialSystem::parse(&["x"], &["x", "x - 1"]).unwrap();
        let r = bezout_report(&f7, None).unwrap();
        assert_eq!((r.total, r.bezout_number), (0, 1));
        assert_eq!(r.verdict, BezoutVerdict::Deficit);
        assert_eq!(r.infinity_evidence, None);

        let r = bezout_report(&sys(&["x*y", "x*y - x"]), None).unwrap();
        assert_eq!(r.verdict, BezoutVerdict::Infinite);
    }

    #[test]
    fn bezout_supplied_roots() {
        let g = sys(&["x^2 + y^2 - 1", "y"]);
        let r = bezout_report(&g, Some(&[Point::from_ints(&[1, 0])])).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.verdict, BezoutVerdict::Deficit);
        assert!(!r.completeness);
        assert_eq!(r.infinity_evidence, Some(InfinityEvidence::None));
        assert_eq!(
            bezout_report(&g, Some(&[Point::from_ints(&[0, 0])])),
            Err(Error::InvalidRoot("(0, 0)".into()))
        );
        let both = [
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[-1, 0]),
            Point::from_ints(&[1, 0]),
        ];
        let r = bezout_report(&g, Some(&both)).unwrap();
        assert_eq!(r.verdict, BezoutVerdict::Match);
        assert!(r.completeness);
    }

    #[test]
    fn parallel_lines_meet_at_infinity() {
        let g = sys(&["x - y", "x - y - 1"]);
        assert_eq!(
            infinity_check_2d(&g).unwrap(),
            InfinityEvidence::Present(p("x - y"))
        );
        let r = bezout_report(&g, None).unwrap();
        assert_eq!(r.verdict, BezoutVerdict::Deficit);
        assert_eq!(
            r.infinity_evidence,
            Some(InfinityEvidence::Present(p("x - y")))
        );
    }

    #[test]
    fn infinity_examples() {
        assert_eq!(
            infinity_check_2d(&sys(&["x^2 + y^2 - 1", "y"])).unwrap(),
            InfinityEvidence::None
        );
        assert_eq!(
            infinity_check_2d(&sys(&["x", "y"])).unwrap(),
            InfinityEvidence::None
        );
        // both leading forms divisible by y: shared zero (1:0)
        assert_eq!(
            infinity_check_2d(&sys(&["x*y - 1", "y^2 + x"])).unwrap(),
            InfinityEvidence::Present(p("y"))
        );
        let f7 = PolynomialSystem::parse(&["x"], &["x", "x - 1"]).unwrap();
        assert!(matches!(
            infinity_check_2d(&f7),
            Err(Error::WrongArity { .. })
        ));
        let three = sys(&["x", "y", "x + y"]);
        assert!(matches!(
            infinity_check_2d(&three),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let v = dual_member(&p("y - x^2"), &sys(&["x^2 - y", "y^2"])).unwrap();
        assert!(v.member && v.oracle_agrees && v.witness.is_none());

        let v = dual_member(&p("x"), &sys(&["x^2", "y"])).unwrap();
        assert!(!v.member);
        assert!(v.oracle_agrees);
        let w = v.witness.unwrap();
        assert_eq!(w.point, Point::origin(2));
        assert_eq!(w.functional.to_string(), "l1");
        assert_eq!(w.value, rat(1));

        for g in [sys(&["x", "y"]), sys(&["x*y", "x*y - x"])] {
            let v = dual_member(&Polynomial::zero(2), &g).unwrap();
            assert!(v.member && v.oracle_agrees);
        }
        assert_eq!(
            dual_member(&p("x"), &sys(&["x*y", "x*y - x"])),
            Err(Error::NotZeroDimensional)
        );
        assert!(matches!(
            dual_member(&p("x"), &sys(&["x^2 - 2", "y"])),
            Err(Error::IrrationalRoots(_))
        ));
    }

    #[test]
    fn power_examples() {
        let c = nullstellensatz_power(&p("x"), &sys(&["x^2", "y"])).unwrap();
        assert_eq!(c, PowerCertificate { m: 2, bound: 3 });
        let c = nullstellensatz_power(&p("x + y"), &sys(&["x", "y"])).unwrap();
        assert_eq!(c, PowerCertificate { m: 1, bound: 2 });
        let c = nullstellensatz_power(&p("x*y"), &sys(&["x^2", "y^2"])).unwrap();
        assert_eq!(c, PowerCertificate { m: 2, bound: 5 });
        assert_eq!(
            nullstellensatz_power(&p("x - 1"), &sys(&["x^2", "y"])),
            Err(Error::NotVanishing("(0, 0)".into()))
        );
    }
}
