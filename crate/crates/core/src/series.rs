//! Truncated formal power series over the integers and symmetric-power
//! generating functions for E-polynomials.
//!
//! [`TruncSeries`] is a sparse multivariate series with a truncation rule:
//! either per-variable exponent bounds, or a weighted total-degree bound
//! (an integer linear functional on exponent vectors). The latter carries
//! Euler-Chow series, whose exponents live in a class lattice and need not
//! be componentwise nonnegative.
//!
//! [`sym_powers`] expands the product formula
//! `sum_d E(Sp^d X) t^d = prod_{p,q} (1 - u^p v^q t)^(-c_{p,q})`
//! where `c_{p,q}` are the signed coefficients of `E(X)`; factors with
//! negative exponent contribute finite polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_i64};
use crate::epoly::EPoly;

/// Truncation rule for a [`TruncSeries`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Truncation {
    /// Keep exponent vectors `e` with `0 <= e_j <= bound_j` for every j.
    PerVar(Vec<u32>),
    /// Keep exponent vectors `e` with `sum_j weights_j * e_j <= bound`.
    Weighted { weights: Vec<i64>, bound: i64 },
}

impl Truncation {
    pub fn nvars(&self) -> usize {
        match self {
            Truncation::PerVar(b) => b.len(),
            Truncation::Weighted { weights, .. } => weights.len(),
        }
    }

    /// Weighted degree of an exponent vector (sum of exponents in
    /// per-variable mode).
    pub fn degree(&self, exps: &[i64]) -> i128 {
        match self {
            Truncation::PerVar(_) => exps.iter().map(|&e| e as i128).sum(),
            Truncation::Weighted { weights, .. } => weights
                .iter()
                .zip(exps)
                .map(|(&w, &e)| w as i128 * e as i128)
                .sum(),
        }
    }

    fn keeps(&self, exps: &[i64]) -> bool {
        match self {
            Truncation::PerVar(bounds) => exps
                .iter()
                .zip(bounds)
                .all(|(&e, &b)| e >= 0 && e <= b as i64),
            Truncation::Weighted { bound, .. } => self.degree(exps) <= *bound as i128,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    /// Operands have different variable counts or truncation rules.
    ShapeMismatch,
    /// A geometric factor over the zero monomial does not converge
    /// degreewise.
    ZeroMonomial,
    /// Per-variable truncation requires nonnegative monomial exponents.
    NegativeExponent,
    /// An infinite geometric factor needs strictly positive weighted degree.
    NonPositiveDegree,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ShapeMismatch => write!(f, "series shapes do not match"),
            SeriesError::ZeroMonomial => write!(f, "geometric factor over the zero monomial"),
            SeriesError::NegativeExponent => {
                write!(f, "negative exponent under per-variable truncation")
            }
            SeriesError::NonPositiveDegree => {
                write!(f, "geometric factor monomial has nonpositive degree")
            }
        }
    }
}

impl core::error::Error for SeriesError {}

/// Sparse truncated multivariate power series over `BigInt`.
///
/// Canonical form: no zero coefficients, every stored exponent vector is
/// within the truncation bound. Terms iterate in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    trunc: Truncation,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl TruncSeries {
    pub fn zero(trunc: Truncation) -> Self {
        TruncSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        let mut s = TruncSeries::zero(trunc);
        s.add_term(alloc::vec![0; s.nvars()], BigInt::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.trunc.nvars()
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic order on exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars());
        if c.is_zero() || !self.trunc.keeps(&exps) {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Truncated product; terms exceeding the bound are discarded.
    pub fn mul(&self, rhs: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        if self.trunc != rhs.trunc {
            return Err(SeriesError::ShapeMismatch);
        }
        let mut out = TruncSeries::zero(self.trunc.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    /// Truncated expansion of `(1 - m)^(-c)` for the monomial `m` given by
    /// an exponent vector.
    ///
    /// For `c > 0` this is the binomial series with coefficients
    /// `C(c - 1 + k, k)`; for `c < 0` the finite polynomial `(1 - m)^|c|`;
    /// for `c = 0` the constant 1.
    pub fn geom_factor(
        trunc: Truncation,
        monomial: &[i64],
        c: i64,
    ) -> Result<TruncSeries, SeriesError> {
        assert_eq!(monomial.len(), trunc.nvars(), "monomial arity mismatch");
        if monomial.iter().all(|&e| e == 0) {
            return Err(SeriesError::ZeroMonomial);
        }
        if matches!(trunc, Truncation::PerVar(_)) && monomial.iter().any(|&e| e < 0) {
            return Err(SeriesError::NegativeExponent);
        }
        let mut out = TruncSeries::zero(trunc);
        if c >= 0 {
            if c > 0 && out.trunc.degree(monomial) <= 0 {
                return Err(SeriesError::NonPositiveDegree);
            }
            let mut k: i64 = 0;
            loop {
                let exps: Vec<i64> = monomial.iter().map(|&e| e * k).collect();
                if !out.trunc.keeps(&exps) {
                    break;
                }
                out.add_term(exps, binomial(&(BigInt::from(c) - 1 + k), &BigInt::from(k)));
                if c == 0 {
                    break;
                }
                k += 1;
            }
        } else {
            let m = -c;
            for k in 0..=m {
                let exps: Vec<i64> = monomial.iter().map(|&e| e * k).collect();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                out.add_term(exps, binomial_i64(m, k) * sign);
            }
        }
        Ok(out)
    }

    /// Truncated product of geometric factors `(1 - m_i)^(-c_i)`, folded in
    /// input order. The result does not depend on that order.
    pub fn product_expand(
        factors: &[(Vec<i64>, i64)],
        trunc: Truncation,
    ) -> Result<TruncSeries, SeriesError> {
        let mut acc = TruncSeries::one(trunc.clone());
        for (monomial, c) in factors {
            let factor = TruncSeries::geom_factor(trunc.clone(), monomial, *c)?;
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }
}

/// E-polynomials of the symmetric powers `Sp^0 X, ..., Sp^dmax X` of a base
/// variety, as coefficients of the generating series in `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSeries {
    base: EPoly,
    coeffs: Vec<EPoly>,
}

impl SymSeries {
    pub fn base(&self) -> &EPoly {
        &self.base
    }

    pub fn dmax(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// E-polynomial of the d-th symmetric power.
    pub fn entry(&self, d: u32) -> &EPoly {
        &self.coeffs[d as usize]
    }

    pub fn entries(&self) -> &[EPoly] {
        &self.coeffs
    }
}

/// Expands `prod_{p,q} (1 - u^p v^q t)^(-c_{p,q})` up to `t^dmax`, where
/// `c_{p,q}` runs over the coefficients of `base`.
pub fn sym_powers(base: &EPoly, dmax: u32) -> SymSeries {
    let n = dmax as usize + 1;
    let mut acc: Vec<EPoly> = alloc::vec![EPoly::zero(); n];
    acc[0] = EPoly::one();
    for (&(p, q), c) in base.terms() {
        // t-coefficients of (1 - u^p v^q t)^(-c), up to t^dmax; canonical
        // form guarantees c != 0
        let mut factor: Vec<EPoly> = Vec::with_capacity(n);
        for k in 0..n as i64 {
            let coeff = if c > &BigInt::zero() {
                crate::arith::binomial(&(c - 1 + k), &BigInt::from(k))
            } else {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                crate::arith::binomial(&(-c), &BigInt::from(k)) * sign
            };
            let kp = p * k as u32;
            let kq = q * k as u32;
            factor.push(EPoly::monomial(kp, kq, coeff));
        }
        let mut next: Vec<EPoly> = alloc::vec![EPoly::zero(); n];
        for d in 0..n {
            for k in 0..=d {
                if factor[k].is_zero() || acc[d - k].is_zero() {
                    continue;
                }
                next[d] = &next[d] + &(&acc[d - k] * &factor[k]);
            }
        }
        acc = next;
    }
    SymSeries {
        base: base.clone(),
        coeffs: acc,
    }
}
