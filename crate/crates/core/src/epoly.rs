//! The ring of E-polynomials (virtual Hodge polynomials).
//!
//! An [`EPoly`] is a sparse bivariate polynomial over arbitrary-precision
//! integers; the coefficient of `u^p v^q` is the signed virtual Hodge number
//! of the variety it represents. Addition models decomposition into a closed
//! subvariety and its open complement, multiplication models products of
//! varieties. Specializations give the virtual Poincare polynomial
//! `P(t) = E(-t, -t)`, virtual Betti numbers, and the Euler characteristic
//! `E(1, 1)`.
//!
//! Signs live in the coefficients: a smooth projective curve of genus g is
//! `1 - g u - g v + uv`, and `P(t) = E(-t, -t)` recovers the classical
//! Poincare polynomial `1 + 2g t + t^2` on it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse bivariate polynomial in `u`, `v` with `BigInt` coefficients.
///
/// Canonical form: no stored coefficient is zero, exponents are nonnegative.
/// Equality is term-by-term equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl EPoly {
    pub fn zero() -> Self {
        EPoly::default()
    }

    pub fn one() -> Self {
        EPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        EPoly::monomial(0, 0, c)
    }

    /// The single term `c * u^p v^q`.
    pub fn monomial(p: u32, q: u32, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        EPoly { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut out = EPoly::zero();
        for ((p, q), c) in iter {
            out.add_term(p, q, c.into());
        }
        out
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((p, q)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order on `(p, q)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// The virtual Hodge number: coefficient of `u^p v^q`, zero if absent.
    pub fn coefficient(&self, p: u32, q: u32) -> BigInt {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn pow(&self, k: u32) -> EPoly {
        let mut acc = EPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Virtual Poincare polynomial `P(t) = E(-t, -t)`: the coefficient of
    /// `t^k` is `(-1)^k` times the sum of coefficients with `p + q = k`.
    pub fn poincare(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(p, q), c) in &self.terms {
            let k = p + q;
            let signed = if k % 2 == 0 { c.clone() } else { -c };
            out.add_term(k, signed);
        }
        out
    }

    /// Euler characteristic: evaluation at `u = v = 1`.
    pub fn euler_char(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sum of coefficients over all terms with `p - q = i`.
    pub fn diagonal_sum(&self, i: i64) -> BigInt {
        self.terms
            .iter()
            .filter(|(&(p, q), _)| p as i64 - q as i64 == i)
            .map(|(_, c)| c)
            .sum()
    }

    /// True when every coefficient off the diagonal `p = q` vanishes.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|&(p, q)| p == q)
    }

    /// Largest `p + q` over stored terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(p, q)| p + q).max()
    }
}

impl Add for &EPoly {
    type Output = EPoly;
    fn add(self, rhs: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl Sub for &EPoly {
    type Output = EPoly;
    fn sub(self, rhs: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, -c);
        }
        out
    }
}

impl Neg for &EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        EPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &EPoly {
    type Output = EPoly;
    fn mul(self, rhs: &EPoly) -> EPoly {
        let mut out = EPoly::zero();
        for (&(pa, qa), ca) in &self.terms {
            for (&(pb, qb), cb) in &rhs.terms {
                out.add_term(pa + pb, qa + qb, ca * cb);
            }
        }
        out
    }
}

/// Renders in lexicographic-descending exponent order with explicit signs
/// and ASCII carets, e.g. `u^2v^2-u^2v-uv^2+2uv+u+v+1`.
impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(p, q), c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &[("u", p), ("v", q)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPoly({})", self)
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    vars: &[(&str, u32)],
) -> fmt::Result {
    let negative = c < &BigInt::zero();
    if negative {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    let abs = if negative { -c } else { c.clone() };
    let bare = vars.iter().all(|&(_, e)| e == 0);
    if !abs.is_one() || bare {
        write!(f, "{}", abs)?;
    }
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => write!(f, "{}", name)?,
            _ => write!(f, "{}^{}", name, e)?,
        }
    }
    Ok(())
}

/// Sparse univariate polynomial over `BigInt`, canonical sparse form.
///
/// Carries virtual Poincare polynomials; displayed in the variable `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::from_coeffs([(0u32, 1i64)])
    }

    pub fn from_coeffs<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = UniPoly::zero();
        for (k, c) in iter {
            out.add_term(k, c.into());
        }
        out
    }

    fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`; zero if absent.
    pub fn coefficient(&self, k: u32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Ascending exponent order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().map(|(&k, c)| c * t.pow(k)).sum()
    }

    /// Dense coefficient vector `[c_0, ..., c_deg]`; `[0]` for the zero
    /// polynomial.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        let deg = self.degree().unwrap_or(0);
        let mut out = alloc::vec![BigInt::zero(); deg as usize + 1];
        for (&k, c) in &self.coeffs {
            out[k as usize] = c.clone();
        }
        out
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&ka, ca) in &self.coeffs {
            for (&kb, cb) in &rhs.coeffs {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            write_term(f, i == 0, c, &[("t", k)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

/// Standard varieties with known E-polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    /// A single point.
    Point,
    /// Affine space `C^n`.
    Affine(u32),
    /// Algebraic torus `(C*)^n`.
    Torus(u32),
    /// Complex projective space `P^n`.
    Projective(u32),
    /// Grassmannian of k-dimensional subspaces of an n-dimensional space.
    Grassmannian(u32, u32),
    /// Smooth projective curve of genus g.
    Curve(u32),
}

/// Atom parameter out of range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AtomError {
    pub atom: Atom,
}

impl fmt::Display for AtomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.atom {
            Atom::Grassmannian(k, n) => {
                write!(f, "grassmannian G({}, {}) requires k <= n", k, n)
            }
            _ => write!(f, "invalid atom parameters: {:?}", self.atom),
        }
    }
}

impl core::error::Error for AtomError {}

impl Atom {
    /// E-polynomial of the atom.
    pub fn epoly(&self) -> Result<EPoly, AtomError> {
        Ok(match *self {
            Atom::Point => EPoly::one(),
            Atom::Affine(n) => EPoly::monomial(n, n, 1),
            Atom::Torus(n) => {
                let class = EPoly::from_terms([((1, 1), 1i64), ((0, 0), -1i64)]);
                class.pow(n)
            }
            Atom::Projective(n) => EPoly::from_terms((0..=n).map(|j| ((j, j), BigInt::one()))),
            Atom::Grassmannian(k, n) => {
                if k > n {
                    return Err(AtomError { atom: *self });
                }
                let coeffs = gaussian_binomial(n, k);
                EPoly::from_terms(
                    coeffs
                        .into_iter()
                        .enumerate()
                        .map(|(j, c)| ((j as u32, j as u32), c)),
                )
            }
            Atom::Curve(g) => EPoly::from_terms([
                ((0u32, 0u32), BigInt::one()),
                ((1, 0), BigInt::from(-(g as i64))),
                ((0, 1), BigInt::from(-(g as i64))),
                ((1, 1), BigInt::one()),
            ]),
        })
    }
}

/// Dense coefficients of the Gaussian binomial `[n choose k]_q`, computed by
/// the q-Pascal recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Exact, no
/// division.
pub fn gaussian_binomial(n: u32, k: u32) -> Vec<BigInt> {
    assert!(k <= n, "gaussian_binomial: k > n");
    // row-by-row table; row m holds [m choose j]_q for j = 0..=min(m, k)
    let mut row: Vec<Vec<BigInt>> = alloc::vec![alloc::vec![BigInt::one()]];
    for m in 1..=n {
        let prev = core::mem::take(&mut row);
        let jmax = k.min(m) as usize;
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(jmax + 1);
        for j in 0..=jmax {
            if j == 0 || j as u32 == m {
                next.push(alloc::vec![BigInt::one()]);
                continue;
            }
            let mut acc = prev[j - 1].clone();
            // add q^j * [m-1, j]
            let shifted = &prev[j];
            if acc.len() < shifted.len() + j {
                acc.resize(shifted.len() + j, BigInt::zero());
            }
            for (i, c) in shifted.iter().enumerate() {
                acc[i + j] += c;
            }
            next.push(acc);
        }
        row = next;
    }
    row.swap_remove(k.min(n) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial_i64;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn torus1() -> EPoly {
        Atom::Torus(1).epoly().unwrap()
    }

    fn p(n: u32) -> EPoly {
        Atom::Projective(n).epoly().unwrap()
    }

    fn curve(g: u32) -> EPoly {
        Atom::Curve(g).epoly().unwrap()
    }

    /// E-polynomial of the Example-4.7-style surface for genus g,
    /// written out termwise.
    fn surface(g: i64) -> EPoly {
        EPoly::from_terms([
            ((0u32, 0u32), 1i64),
            ((1, 0), g),
            ((0, 1), g),
            ((1, 1), 2),
            ((2, 1), -g),
            ((1, 2), -g),
            ((2, 2), 1),
        ])
    }

    #[test]
    fn add_examples() {
        // (uv - 1) + 1 = uv
        assert_eq!(&torus1() + &EPoly::one(), EPoly::monomial(1, 1, 1));
        // additive identity
        let a = curve(3);
        assert_eq!(&a + &EPoly::zero(), a);
        // (1 + uv) + (1 - u - v + uv) = 2 - u - v + 2uv
        let sum = &p(1) + &curve(1);
        assert_eq!(
            sum,
            EPoly::from_terms([
                ((0u32, 0u32), 2i64),
                ((1, 0), -1),
                ((0, 1), -1),
                ((1, 1), 2),
            ])
        );
    }

    #[test]
    fn mul_examples() {
        // (1 + uv)(1 - u - v + uv), the g = 1 product surface
        let prod = &p(1) * &curve(1);
        assert_eq!(
            prod,
            EPoly::from_terms([
                ((0u32, 0u32), 1i64),
                ((1, 0), -1),
                ((0, 1), -1),
                ((1, 1), 2),
                ((2, 1), -1),
                ((1, 2), -1),
                ((2, 2), 1),
            ])
        );
        // multiplicative identity
        let a = curve(2);
        assert_eq!(&a * &EPoly::one(), a);
        // (uv - 1)^2 = u^2v^2 - 2uv + 1, the 2-torus
        assert_eq!(&torus1() * &torus1(), Atom::Torus(2).epoly().unwrap());
        assert_eq!(
            &torus1() * &torus1(),
            EPoly::from_terms([((0u32, 0u32), 1i64), ((1, 1), -2), ((2, 2), 1)])
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(torus1().pow(0), EPoly::one());
        assert_eq!(torus1().pow(2), &torus1() * &torus1());
        assert_eq!(
            p(1).pow(2),
            EPoly::from_terms([((0u32, 0u32), 1i64), ((1, 1), 2), ((2, 2), 1)])
        );
    }

    #[test]
    fn coefficient_examples() {
        let uv = EPoly::monomial(1, 1, 1);
        assert_eq!(uv.coefficient(1, 1), BigInt::from(1));
        assert_eq!(uv.coefficient(0, 1), BigInt::from(0));
        for g in 0..5u32 {
            assert_eq!(curve(g).coefficient(1, 0), BigInt::from(-(g as i64)));
        }
    }

    #[test]
    fn poincare_examples() {
        // the singular surface with g = 1: t^4 + 2t^3 + 2t^2 - 2t + 1
        assert_eq!(
            surface(1).poincare(),
            UniPoly::from_coeffs([(4u32, 1i64), (3, 2), (2, 2), (1, -2), (0, 1)])
        );
        assert_eq!(
            p(1).poincare(),
            UniPoly::from_coeffs([(0u32, 1i64), (2, 1)])
        );
        for g in 0..4i64 {
            assert_eq!(
                curve(g as u32).poincare(),
                UniPoly::from_coeffs([(0u32, 1i64), (1, 2 * g), (2, 1)])
            );
        }
    }

    #[test]
    fn euler_char_examples() {
        assert_eq!(torus1().euler_char(), BigInt::from(0));
        assert_eq!(p(2).euler_char(), BigInt::from(3));
        assert_eq!(curve(1).euler_char(), BigInt::from(0));
        for g in 0..6i64 {
            assert_eq!(curve(g as u32).euler_char(), BigInt::from(2 - 2 * g));
        }
    }

    #[test]
    fn diagonal_sum_examples() {
        for g in 1..4 {
            let s = surface(g);
            for i in -4..=4i64 {
                let expected = if i == 0 { 4 } else { 0 };
                assert_eq!(s.diagonal_sum(i), BigInt::from(expected), "i = {}", i);
            }
        }
        assert_eq!(p(1).diagonal_sum(0), BigInt::from(2));
        for g in 0..4i64 {
            assert_eq!(curve(g as u32).diagonal_sum(1), BigInt::from(-g));
        }
    }

    #[test]
    fn atom_examples() {
        assert_eq!(
            p(2),
            EPoly::from_terms([((0u32, 0u32), 1i64), ((1, 1), 1), ((2, 2), 1)])
        );
        assert_eq!(
            torus1(),
            EPoly::from_terms([((0u32, 0u32), -1i64), ((1, 1), 1)])
        );
        assert_eq!(Atom::Affine(3).epoly().unwrap(), EPoly::monomial(3, 3, 1));
        assert_eq!(Atom::Point.epoly().unwrap(), EPoly::one());
        assert!(Atom::Grassmannian(3, 2).epoly().is_err());
    }

    #[test]
    fn gaussian_binomial_by_subset_enumeration() {
        // oracle: [n, k]_q = sum over k-subsets S of {0..n-1} of
        // q^(sum(S) - k(k-1)/2)
        fn oracle(n: u32, k: u32) -> Vec<BigInt> {
            let items: Vec<u32> = (0..n).collect();
            let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
            let mut pick = |mask: u64| {
                let chosen: Vec<u32> = items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                if chosen.len() as u32 == k {
                    let s: u32 = chosen.iter().sum();
                    let offset: u32 = (0..k).sum();
                    *counts.entry(s - offset).or_insert(0) += 1;
                }
            };
            for mask in 0..1u64 << n {
                pick(mask);
            }
            let deg = (k * (n - k)) as usize;
            let mut out = vec![BigInt::zero(); deg + 1];
            for (e, c) in counts {
                out[e as usize] = BigInt::from(c);
            }
            out
        }
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(gaussian_binomial(n, k), oracle(n, k), "[{}, {}]_q", n, k);
            }
        }
        // frozen: [4, 2]_q = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(
            gaussian_binomial(4, 2),
            vec![
                BigInt::from(1),
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(1),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn grassmannian_epoly() {
        let g24 = Atom::Grassmannian(2, 4).epoly().unwrap();
        assert_eq!(
            g24,
            EPoly::from_terms([
                ((0u32, 0u32), 1i64),
                ((1, 1), 1),
                ((2, 2), 2),
                ((3, 3), 1),
                ((4, 4), 1),
            ])
        );
        // G(k, n) is C_{k-1,1}(P^{n-1}); Euler characteristic C(n, k)
        for n in 0..=6u32 {
            for k in 0..=n {
                let e = Atom::Grassmannian(k, n).epoly().unwrap().euler_char();
                assert_eq!(e, binomial_i64(n as i64, k as i64));
            }
        }
    }

    #[test]
    fn golden_poincare_polynomials() {
        // classical Poincare polynomials of smooth projective atoms
        for n in 0..=5u32 {
            let pp = p(n).poincare();
            let expected = UniPoly::from_coeffs((0..=n).map(|j| (2 * j, 1i64)));
            assert_eq!(pp, expected, "P^{}", n);
            assert_eq!(pp.evaluate(&BigInt::from(1)), BigInt::from(n + 1));
        }
        assert_eq!(
            Atom::Grassmannian(2, 4).epoly().unwrap().poincare(),
            UniPoly::from_coeffs([(0u32, 1i64), (2, 1), (4, 2), (6, 1), (8, 1)])
        );
        for g in 0..=3i64 {
            let pp = curve(g as u32).poincare();
            assert_eq!(pp, UniPoly::from_coeffs([(0u32, 1i64), (1, 2 * g), (2, 1)]));
            assert!(pp.coeffs().all(|(_, c)| c >= &BigInt::zero()));
        }
        assert!(Atom::Point
            .epoly()
            .unwrap()
            .poincare()
            .coeffs()
            .all(|(_, c)| c >= &BigInt::zero()));
    }

    #[test]
    fn display_golden() {
        assert_eq!(surface(1).poincare().to_string(), "t^4+2t^3+2t^2-2t+1");
        assert_eq!(EPoly::monomial(1, 1, 1).to_string(), "uv");
        assert_eq!(surface(1).to_string(), "u^2v^2-u^2v-uv^2+2uv+u+v+1");
        assert_eq!(EPoly::zero().to_string(), "0");
        assert_eq!(torus1().to_string(), "uv-1");
        assert_eq!(EPoly::constant(-7).to_string(), "-7");
        assert_eq!(p(2).to_string(), "u^2v^2+uv+1");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn arb_epoly() -> impl Strategy<Value = EPoly> {
        proptest::collection::btree_map((0u32..4, 0u32..4), -5i64..=5, 0..6)
            .prop_map(EPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_epoly(), b in arb_epoly(), c in arb_epoly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, EPoly::zero());
        }

        #[test]
        fn euler_char_is_ring_hom(a in arb_epoly(), b in arb_epoly()) {
            prop_assert_eq!((&a * &b).euler_char(), a.euler_char() * b.euler_char());
            prop_assert_eq!((&a + &b).euler_char(), a.euler_char() + b.euler_char());
        }

        #[test]
        fn poincare_is_multiplicative(a in arb_epoly(), b in arb_epoly()) {
            prop_assert_eq!((&a * &b).poincare(), &a.poincare() * &b.poincare());
        }

        #[test]
        fn diagonal_sums_total_to_euler_char(a in arb_epoly()) {
            let total: BigInt = (-8i64..=8).map(|i| a.diagonal_sum(i)).sum();
            prop_assert_eq!(total, a.euler_char());
        }

        #[test]
        fn canonical_form_has_no_zero_terms(a in arb_epoly(), b in arb_epoly()) {
            let sum = &a + &b;
            prop_assert!(sum.terms().all(|(_, c)| !c.is_zero()));
            let prod = &a * &b;
            prop_assert!(prod.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
