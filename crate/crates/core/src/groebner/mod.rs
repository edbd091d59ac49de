//! Gröbner-basis machinery used as an independent oracle: monomial orders,
//! multivariate division, Buchberger's algorithm, standard monomials and a
//! small exact solver for zero-dimensional systems with rational roots.

mod solve;
pub mod univariate;

use std::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

pub use solve::{solve_rational, solve_rational_all, RationalSolutions};
pub use univariate::{univariate_rational_roots, RationalRoots};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order. `priority[0]` is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// `kind` with `x_1 > x_2 > ... > x_n`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    /// `priority` must be a permutation of `0..n`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= seen.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidVariables(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self
                .priority
                .iter()
                .map(|&j| ea[j].cmp(&eb[j]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                self.priority
                    .iter()
                    .rev()
                    .map(|&j| eb[j].cmp(&ea[j]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    /// Leading monomial and coefficient, `None` for the zero polynomial.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Option<(&'a MultiIndex, &'a Rational)> {
        f.terms().max_by(|(a, _), (b, _)| self.cmp(a, b))
    }

    pub fn leading_monomial(&self, f: &Polynomial) -> Option<MultiIndex> {
        self.leading_term(f).map(|(m, _)| m.clone())
    }

    fn monic(&self, f: &Polynomial) -> Polynomial {
        match self.leading_term(f) {
            Some((_, c)) if !c.is_one() => f.scale(&c.recip()),
            _ => f.clone(),
        }
    }
}

/// Remainder of `f` on division by `divisors`, always using the first
/// divisor (in list order) whose leading monomial divides the current
/// leading term. No term of the result is divisible by any divisor's
/// leading monomial.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<Option<(MultiIndex, Rational)>> = divisors
        .iter()
        .map(|g| order.leading_term(g).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    while let Some((lm, lc)) = order.leading_term(&p).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = divisors.iter().zip(&leads).find_map(|(g, lead)| {
            let (gm, gc) = lead.as_ref()?;
            lm.checked_sub(gm).map(|q| (g, q, gc))
        });
        match hit {
            Some((g, q, gc)) => {
                p = &p - &g.mul_term(&q, &(&lc / gc));
            }
            None => {
                p.add_term(lm.clone(), -lc.clone());
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

/// A reduced Gröbner basis: monic generators, none with a term divisible
/// by another's leading monomial, listed by decreasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn leading_monomials(&self) -> Vec<MultiIndex> {
        self.generators
            .iter()
            .filter_map(|g| self.order.leading_monomial(g))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Polynomial::is_constant)
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = order.leading_term(f).expect("nonzero");
    let (gm, gc) = order.leading_term(g).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.checked_sub(fm).expect("lcm"), &fc.recip());
    let b = g.mul_term(&l.checked_sub(gm).expect("lcm"), &gc.recip());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `f`.
///
/// Pairs are processed by the normal strategy (smallest lcm of leading
/// monomials first), and pairs with coprime leading monomials are skipped.
pub fn buchberger(f: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let n = order.nvars();
    for p in f {
        if p.nvars() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: p.nvars(),
            });
        }
    }
    let mut basis: Vec<Polynomial> = f
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| order.monic(p))
        .collect();
    let mut leads: Vec<MultiIndex> = basis
        .iter()
        .map(|p| order.leading_monomial(p).expect("nonzero"))
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();

    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ia, ja) = pairs[a];
                let (ib, jb) = pairs[b];
                order
                    .cmp(&leads[ia].lcm(&leads[ja]), &leads[ib].lcm(&leads[jb]))
                    .then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pick);
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = order.monic(&h);
        let k = basis.len();
        leads.push(order.leading_monomial(&h).expect("nonzero"));
        basis.push(h);
        pairs.extend((0..k).map(|i| (i, k)));
    }

    // Minimize: drop generators whose leading monomial is a multiple of
    // another's (keeping the earliest among equals).
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len())
                .any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();

    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let (lm, lc) = order.leading_term(&minimal[i]).expect("nonzero");
            let tail = &minimal[i] - &Polynomial::monomial(lm.clone(), lc.clone());
            let mut g = normal_form(&tail, &others, order);
            g.add_term(lm.clone(), lc.clone());
            order.monic(&g)
        })
        .collect();
    reduced.sort_by(|a, b| {
        let la = order.leading_monomial(a).expect("nonzero");
        let lb = order.leading_monomial(b).expect("nonzero");
        order.cmp(&lb, &la)
    });
    Ok(GroebnerBasis {
        order: order.clone(),
        generators: reduced,
    })
}

/// Monomials outside the leading-term ideal, in ascending graded-lex
/// order. `None` when there are infinitely many (the ideal is not
/// zero-dimensional).
pub fn standard_monomials(gb: &GroebnerBasis) -> Option<Vec<MultiIndex>> {
    let n = gb.nvars();
    let leads = gb.leading_monomials();
    if leads.iter().any(MultiIndex::is_constant) {
        return Some(Vec::new());
    }
    let mut bounds = vec![None::<u32>; n];
    for m in &leads {
        if let Some(j) = m.pure_power_var() {
            let e = m.exponents()[j];
            bounds[j] = Some(bounds[j].map_or(e, |b| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let m = MultiIndex::new(cur.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, bounds)
        let mut j = 0;
        loop {
            if j == n {
                out.sort();
                return Some(out);
            }
            cur[j] += 1;
            if cur[j] < bounds[j] {
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(k) => Some(k),
            QuotientDimension::Infinite => None,
        }
    }
}

impl std::fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientDimension::Finite(k) => write!(f, "{k}"),
            QuotientDimension::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// Dimension of the quotient ring as a vector space.
pub fn quotient_dimension(gb: &GroebnerBasis) -> QuotientDimension {
    match standard_monomials(gb) {
        Some(v) => QuotientDimension::Finite(v.len()),
        None => QuotientDimension::Infinite,
    }
}
