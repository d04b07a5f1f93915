//! Closed-form numerical invariants of Chow varieties of projective space
//! and constraint checkers for their virtual Hodge numbers.
//!
//! `C(p, d, n)` below denotes the Chow variety of effective p-cycles of
//! degree d in complex projective n-space. The Euler characteristic has the
//! closed form `C(v + d - 1, d)` with `v = C(n+1, p+1)` ([`chow_euler`]) and
//! independently satisfies a recursion obtained by slicing cycles with a
//! hyperplane ([`chow_euler_rec`]); the two are checked against each other.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::epoly::{Atom, EPoly};
use crate::expr::VarietyExpr;
use crate::series::sym_powers;

/// Index (p, d, n) out of range for the requested invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexError {
    pub message: String,
}

impl IndexError {
    fn new(message: String) -> Self {
        IndexError { message }
    }
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl core::error::Error for IndexError {}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), IndexError> {
    if cond {
        Ok(())
    } else {
        Err(IndexError::new(msg()))
    }
}

/// Number of invariant p-dimensional linear subspaces of P^n under the
/// standard torus action: `C(n+1, p+1)`.
pub fn v(p: i64, n: i64) -> Result<BigInt, IndexError> {
    require(0 <= p && p <= n, || {
        format!("v(p, n) requires 0 <= p <= n, got p = {}, n = {}", p, n)
    })?;
    Ok(binomial(&(BigInt::from(n) + 1), &(BigInt::from(p) + 1)))
}

/// Euler characteristic of C(p, d, n): `C(v_{p,n} + d - 1, d)`.
pub fn chow_euler(p: i64, d: i64, n: i64) -> Result<BigInt, IndexError> {
    require(0 <= p && p <= n && d >= 0, || {
        format!(
            "chow_euler requires 0 <= p <= n and d >= 0, got p = {}, d = {}, n = {}",
            p, d, n
        )
    })?;
    let vpn = v(p, n)?;
    Ok(binomial(&(vpn + d - 1), &BigInt::from(d)))
}

/// Euler characteristic of C(p, d, n) by the hyperplane-slicing recursion
///
/// ```text
/// chi(p, d, n) = chi(p-1, d, n-1)
///              + sum_{i=1..d} chi(p, i, n-1) * chi(p-1, d-i, n-1)
/// ```
///
/// with bases: d = 0 and p = n give 1, and p = 0 is the Euler
/// characteristic of the d-th symmetric power of P^n computed through the
/// generating-function machinery (independent of the closed form).
pub fn chow_euler_rec(p: i64, d: i64, n: i64) -> Result<BigInt, IndexError> {
    require(0 <= p && p <= n && d >= 0, || {
        format!(
            "chow_euler_rec requires 0 <= p <= n and d >= 0, got p = {}, d = {}, n = {}",
            p, d, n
        )
    })?;
    // the recursion expands symmetric powers at its p = 0 base
    require(n <= u32::MAX as i64 && d <= u32::MAX as i64, || {
        format!("chow_euler_rec indices d = {}, n = {} are too large", d, n)
    })?;
    let mut memo: BTreeMap<(i64, i64, i64), BigInt> = BTreeMap::new();
    Ok(rec(p, d, n, &mut memo))
}

fn rec(p: i64, d: i64, n: i64, memo: &mut BTreeMap<(i64, i64, i64), BigInt>) -> BigInt {
    if d == 0 || p == n {
        return BigInt::one();
    }
    if p == 0 {
        // chi(Sp^d(P^n)) through the symmetric-power product formula
        let base = Atom::Projective(n as u32).epoly().expect("valid atom");
        return sym_powers(&base, d as u32).entry(d as u32).euler_char();
    }
    if let Some(hit) = memo.get(&(p, d, n)) {
        return hit.clone();
    }
    let mut acc = rec(p - 1, d, n - 1, memo);
    for i in 1..=d {
        acc += rec(p, i, n - 1, memo) * rec(p - 1, d - i, n - 1, memo);
    }
    memo.insert((p, d, n), acc.clone());
    acc
}

/// Dimension of C(p, d, n): the larger of `d(p+1)(n-p)` (unions of degree-d
/// collections of linear spaces) and `C(d+p+1, p+1) - 1 + (p+2)(n-p-1)`
/// (degree-d hypersurfaces in a linear subspace). For p = n the Chow
/// variety is a point and the dimension is 0.
pub fn chow_dim(p: i64, d: i64, n: i64) -> Result<BigInt, IndexError> {
    require(0 <= p && p <= n && d >= 1, || {
        format!(
            "chow_dim requires 0 <= p <= n and d >= 1, got p = {}, d = {}, n = {}",
            p, d, n
        )
    })?;
    if p == n {
        return Ok(BigInt::zero());
    }
    let linear: BigInt = BigInt::from(d) * (BigInt::from(p) + 1) * BigInt::from(n - p);
    let hyper = binomial(&(BigInt::from(d) + p + 1), &(BigInt::from(p) + 1)) - 1
        + (BigInt::from(p) + 2) * (n - p - 1);
    Ok(linear.max(hyper))
}

/// Dimension of the space of effective 1-cycles of degree d in P^n:
/// `max(2d(n-1), 3(n-2) + d(d+3)/2)`.
pub fn chow_dim_curves(d: i64, n: i64) -> Result<BigInt, IndexError> {
    require(n >= 2 && d >= 1, || {
        format!(
            "chow_dim_curves requires n >= 2 and d >= 1, got d = {}, n = {}",
            d, n
        )
    })?;
    let a = BigInt::from(2) * d * (n - 1);
    let b = BigInt::from(3) * (n - 2) + BigInt::from(d) * (BigInt::from(d) + 3) / 2;
    Ok(a.max(b))
}

/// Upper bound on the number of irreducible components of C(p, d, n):
/// `C(nd+d, n) ^ m` with `m = d*C(d+p-1, p) + C(d+p-1, p-1)`.
pub fn kollar_bound(p: i64, d: i64, n: i64) -> Result<BigInt, IndexError> {
    require(0 <= p && p <= n && d >= 1, || {
        format!(
            "kollar_bound requires 0 <= p <= n and d >= 1, got p = {}, d = {}, n = {}",
            p, d, n
        )
    })?;
    // C(a, -1) = 0 covers p = 0
    let top = BigInt::from(d) + p - 1;
    let m =
        BigInt::from(d) * binomial(&top, &BigInt::from(p)) + binomial(&top, &(BigInt::from(p) - 1));
    let m_u32 = u32::try_from(&m)
        .map_err(|_| IndexError::new(format!("kollar_bound exponent {} is out of range", m)))?;
    Ok(binomial(&(BigInt::from(n) * d + d), &BigInt::from(n)).pow(m_u32))
}

/// Expression for the degree-2 Chow variety C(p, 2, n): the symmetric
/// square of the Grassmannian of p-planes, together with a bundle of smooth
/// quadrics in a (p+1)-plane over the Grassmannian of (p+1)-planes.
pub fn chow2_expr(p: i64, n: i64) -> Result<VarietyExpr, IndexError> {
    require(0 <= p && p < n, || {
        format!(
            "chow2_expr requires 0 <= p <= n - 1, got p = {}, n = {}",
            p, n
        )
    })?;
    let fiber_dim = binomial(&(BigInt::from(p) + 3), &BigInt::from(2)) - 1;
    let to_u32 = |x: i64, what: &str| {
        u32::try_from(x).map_err(|_| IndexError::new(format!("{} out of range", what)))
    };
    let fiber_dim = u32::try_from(fiber_dim)
        .map_err(|_| IndexError::new(String::from("quadric fiber dimension out of range")))?;
    let g1 = Atom::Grassmannian(to_u32(p + 1, "p + 1")?, to_u32(n + 1, "n + 1")?);
    let g2 = Atom::Grassmannian(to_u32(p + 2, "p + 2")?, to_u32(n + 1, "n + 1")?);
    let sp2 = |a: Atom| VarietyExpr::SymPower(alloc::boxed::Box::new(VarietyExpr::Atom(a)), 2);
    Ok(VarietyExpr::Disjoint(
        alloc::boxed::Box::new(sp2(g1)),
        alloc::boxed::Box::new(VarietyExpr::Product(
            alloc::boxed::Box::new(VarietyExpr::Atom(g2)),
            alloc::boxed::Box::new(VarietyExpr::Complement(
                alloc::boxed::Box::new(VarietyExpr::Atom(Atom::Projective(fiber_dim))),
                alloc::boxed::Box::new(sp2(Atom::Projective(to_u32(p + 1, "p + 1")?))),
            )),
        )),
    ))
}

/// One checked constraint on the virtual Hodge numbers of a Chow variety.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Offending values when the check fails.
    pub detail: Option<String>,
}

/// Outcome of [`check_chow_constraints`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintReport {
    pub checks: Vec<ConstraintCheck>,
}

impl ConstraintReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Check the virtual-Hodge-number constraints satisfied by every Chow
/// variety of projective space against a candidate E-polynomial:
/// off-diagonal sums vanish, the diagonal sum is the Euler characteristic
/// of C(p, d, n), the constant coefficient is 1, and the first row and
/// column vanish above degree 0.
pub fn check_chow_constraints(
    a: &EPoly,
    p: i64,
    d: i64,
    n: i64,
) -> Result<ConstraintReport, IndexError> {
    let chi = chow_euler(p, d, n)?;
    let mut checks = Vec::new();

    let max_deg = a.total_degree().unwrap_or(0) as i64;
    let mut offenders = Vec::new();
    for i in -max_deg..=max_deg {
        if i == 0 {
            continue;
        }
        let s = a.diagonal_sum(i);
        if !s.is_zero() {
            offenders.push(format!("i = {}: sum = {}", i, s));
        }
    }
    checks.push(ConstraintCheck {
        name: "off_diagonal_sums_vanish",
        passed: offenders.is_empty(),
        detail: if offenders.is_empty() {
            None
        } else {
            Some(offenders.join("; "))
        },
    });

    let diag = a.diagonal_sum(0);
    checks.push(ConstraintCheck {
        name: "diagonal_sum_equals_chi",
        passed: diag == chi,
        detail: if diag == chi {
            None
        } else {
            Some(format!("diagonal sum = {}, chi = {}", diag, chi))
        },
    });

    let h00 = a.coefficient(0, 0);
    checks.push(ConstraintCheck {
        name: "h00_equals_one",
        passed: h00.is_one(),
        detail: if h00.is_one() {
            None
        } else {
            Some(format!("h(0,0) = {}", h00))
        },
    });

    let row_offenders: Vec<String> = a
        .terms()
        .filter(|(&(r, s), _)| s == 0 && r > 0)
        .map(|(&(r, _), c)| format!("h({},0) = {}", r, c))
        .collect();
    checks.push(ConstraintCheck {
        name: "first_row_vanishes",
        passed: row_offenders.is_empty(),
        detail: if row_offenders.is_empty() {
            None
        } else {
            Some(row_offenders.join("; "))
        },
    });

    let col_offenders: Vec<String> = a
        .terms()
        .filter(|(&(r, s), _)| r == 0 && s > 0)
        .map(|(&(_, s), c)| format!("h(0,{}) = {}", s, c))
        .collect();
    checks.push(ConstraintCheck {
        name: "first_column_vanishes",
        passed: col_offenders.is_empty(),
        detail: if col_offenders.is_empty() {
            None
        } else {
            Some(col_offenders.join("; "))
        },
    });

    Ok(ConstraintReport { checks })
}

/// True iff every off-diagonal virtual Hodge number of `a` is zero.
pub fn check_conjecture51(a: &EPoly) -> bool {
    a.is_diagonal()
}
