//! Fitting counting sequences to quasipolynomials and detecting periods.
//!
//! Periods found here are only ever "consistent up to `n_max`": a fit is
//! accepted when every constituent reproduces at least one count it was not
//! interpolated from.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::exact::{Piece, Rat};
use crate::vertex::{self, EnumOptions};

/// A quasipolynomial of the given degree; constituent `r` (coefficients,
/// constant term first) applies when `n ≡ r (mod period)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPoly {
    pub degree: usize,
    pub period: usize,
    pub constituents: Vec<Vec<Rat>>,
}

impl QuasiPoly {
    pub fn eval(&self, n: usize) -> Rat {
        let coeffs = &self.constituents[n % self.period];
        let x = Rat::from_integer(BigInt::from(n));
        coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * &x + c)
    }

    pub fn leading_coefficients(&self) -> Vec<&Rat> {
        self.constituents.iter().map(|c| &c[self.degree]).collect()
    }
}

fn poly_mul_linear(p: &[Rat], root: &Rat) -> Vec<Rat> {
    // p(x)·(x − root)
    let mut out = vec![Rat::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

/// Coefficients of the unique polynomial of degree `< xs.len()` through the
/// given points (Lagrange form expanded).
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    assert_eq!(xs.len(), ys.len());
    let k = xs.len();
    let mut coeffs = vec![Rat::zero(); k];
    for i in 0..k {
        let mut basis = vec![Rat::one()];
        let mut scale = Rat::one();
        for j in 0..k {
            if i != j {
                basis = poly_mul_linear(&basis, &xs[j]);
                scale *= &xs[i] - &xs[j];
            }
        }
        let f = &ys[i] / scale;
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += &f * b;
        }
    }
    coeffs
}

fn entries_needed(degree: usize, p: usize) -> usize {
    (degree + 2) * p
}

/// Fits a period-`p` quasipolynomial of the given degree: each residue class
/// is interpolated through its first `degree + 1` entries and checked on the
/// rest. `Ok(None)` means some check failed.
pub fn fit_quasipoly(table: &CountTable, p: usize, degree: usize) -> Result<Option<QuasiPoly>> {
    if p == 0 {
        return Err(Error::InvalidInput("period must be positive".into()));
    }
    let needed = entries_needed(degree, p);
    if table.n_max() < needed {
        return Err(Error::InsufficientData {
            needed,
            have: table.n_max(),
        });
    }
    let mut constituents = Vec::with_capacity(p);
    for r in 0..p {
        let class: Vec<(usize, &BigInt)> = table.iter().filter(|(n, _)| n % p == r).collect();
        let (fit, check) = class.split_at(degree + 1);
        let xs: Vec<Rat> = fit.iter().map(|(n, _)| Rat::from_integer((*n).into())).collect();
        let ys: Vec<Rat> = fit.iter().map(|(_, v)| Rat::from_integer((*v).clone())).collect();
        let coeffs = interpolate(&xs, &ys);
        let qp = QuasiPoly {
            degree,
            period: 1,
            constituents: vec![coeffs.clone()],
        };
        if check
            .iter()
            .any(|(n, v)| qp.eval(*n) != Rat::from_integer((*v).clone()))
        {
            return Ok(None);
        }
        constituents.push(coeffs);
    }
    Ok(Some(QuasiPoly {
        degree,
        period: p,
        constituents,
    }))
}

/// The smallest period in `1..=p_max` whose fit succeeds.
///
/// When a polytope denominator is supplied, its divisors are tried first
/// (the period divides it); the full range is the fallback.
pub fn detect_period(
    table: &CountTable,
    degree: usize,
    p_max: usize,
    denominator_hint: Option<&BigInt>,
) -> Result<QuasiPoly> {
    let needed = entries_needed(degree, p_max);
    if table.n_max() < needed {
        return Err(Error::InsufficientData {
            needed,
            have: table.n_max(),
        });
    }
    if let Some(d) = denominator_hint.and_then(|d| d.to_usize()) {
        for p in (1..=p_max.min(d)).filter(|p| d % p == 0) {
            if let Some(qp) = fit_quasipoly(table, p, degree)? {
                return Ok(qp);
            }
        }
    }
    for p in 1..=p_max {
        if let Some(qp) = fit_quasipoly(table, p, degree)? {
            return Ok(qp);
        }
    }
    Err(Error::NoPeriodFits(p_max))
}

/// Period and polytope denominator side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub period: usize,
    pub denominator: BigInt,
    pub equal: bool,
}

/// Computes the period from counts up to `n_max` and the denominator by
/// vertex enumeration, and compares them.
pub fn check_period_equals_denominator(
    piece: &Piece,
    q: usize,
    n_max: usize,
    options: &EnumOptions,
) -> Result<PeriodReport> {
    let summary = vertex::polytope_denominator(piece, q, options)?;
    let table = CountTable::build(piece, q, n_max);
    let degree = 2 * q;
    let p_max = n_max / (degree + 2);
    let qp = detect_period(&table, degree, p_max, Some(&summary.denominator))?;
    Ok(PeriodReport {
        period: qp.period,
        equal: BigInt::from(qp.period) == summary.denominator,
        denominator: summary.denominator,
    })
}

/// `1/q!`, the leading coefficient every constituent must have.
pub fn expected_leading(q: usize) -> Rat {
    let fact: BigInt = (1..=q).map(BigInt::from).product();
    Rat::new(BigInt::one(), fact)
}
