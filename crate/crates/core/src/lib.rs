//! Exact computation of local dual spaces and intersection multiplicities
//! of polynomial systems over the rationals, with Gröbner-basis machinery
//! used as an independent check.
//!
//! All arithmetic is exact. Coefficients are arbitrary-precision rationals,
//! so every dimension and verdict is a proof rather than an estimate.

pub mod dual;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod theorems;

pub use dual::{
    apply_functional, dual_space, is_d_invariant, multiple_condition_rows, multiplicity,
    paper_condition_rows, stabilization_cap, truncated_dual, ConditionMode, DualPolynomial,
    DualSpaceBasis,
};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, normal_form, quotient_dimension, solve_rational, solve_rational_all,
    standard_monomials, univariate_rational_roots, GroebnerBasis, MonomialOrder, OrderKind,
    QuotientDimension, RationalRoots, RationalSolutions,
};
pub use matrix::{row_space_equal, RationalMatrix, Rref};
pub use monomial::MultiIndex;
pub use parse::{dual_var_names, format_poly, parse_poly};
pub use polynomial::{ring_op, Polynomial, RingOp};
pub use rational::{format_rational, parse_rational, Point, Rational};
pub use theorems::{
    bezout_report, dual_member, infinity_check_2d, nullstellensatz_power, verify_common_zero,
    BezoutReport, BezoutVerdict, InfinityEvidence, MembershipVerdict, PolynomialSystem,
    PowerCertificate,
};
