//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`ExponentVector`], whose ordering is
//! graded lexicographic. Iteration, printing and hashing are therefore
//! deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {left} vs {right}")]
    Arity { left: usize, right: usize },
    #[error("division is not exact")]
    Inexact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial term {0:?}")]
    Parse(String),
}

/// Exponents of a monomial `x1^e1 * ... * xn^en`.
///
/// Ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    /// A bound that never prunes anything.
    pub fn unbounded(arity: usize) -> Self {
        ExponentVector(vec![u32::MAX; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum of a set of exponent vectors.
    pub fn join<'a>(arity: usize, it: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        let mut out = vec![0; arity];
        for e in it {
            for (o, &x) in out.iter_mut().zip(&e.0) {
                *o = (*o).max(x);
            }
        }
        ExponentVector(out)
    }

    fn checked_add(&self, other: &ExponentVector, bound: &ExponentVector) -> Option<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for ((&a, &b), &m) in self.0.iter().zip(&other.0).zip(&bound.0) {
            let s = a.checked_add(b)?;
            if s > m {
                return None;
            }
            out.push(s);
        }
        Some(ExponentVector(out))
    }

    fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(ExponentVector::zero(arity), BigInt::one())
    }

    pub fn monomial(exps: ExponentVector, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.arity());
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(ExponentVector(e), BigInt::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Self, PolyError> {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(PolyError::Arity {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: ExponentVector, coeff: BigInt) {
        debug_assert_eq!(exps.arity(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &SparsePoly) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::Arity {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn coeff(&self, e: &ExponentVector) -> Result<BigInt, PolyError> {
        if e.arity() != self.arity {
            return Err(PolyError::Arity {
                left: self.arity,
                right: e.arity(),
            });
        }
        Ok(self.terms.get(e).cloned().unwrap_or_default())
    }

    /// Coefficient lookup without the arity check; absent terms give zero.
    pub fn get(&self, e: &ExponentVector) -> Option<&BigInt> {
        self.terms.get(e)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Product restricted to terms whose exponent is componentwise `<= bound`.
    ///
    /// Exponents of a product only grow, so every coefficient at or below the
    /// bound equals the corresponding coefficient of the exact product.
    pub fn mul_pruned(&self, other: &SparsePoly, bound: &ExponentVector) -> Result<SparsePoly, PolyError> {
        self.check_arity(other)?;
        if bound.arity() != self.arity {
            return Err(PolyError::Arity {
                left: self.arity,
                right: bound.arity(),
            });
        }
        let mut acc: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            if !ea.divides(bound) {
                continue;
            }
            for (eb, cb) in &other.terms {
                if let Some(e) = ea.checked_add(eb, bound) {
                    *acc.entry(e).or_default() += ca * cb;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(SparsePoly {
            arity: self.arity,
            terms: acc,
        })
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.mul_pruned(other, &ExponentVector::unbounded(self.arity))
    }

    /// Drops every term not componentwise `<= bound`.
    pub fn truncate(&self, bound: &ExponentVector) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.divides(bound))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow_pruned(&self, k: u32, bound: &ExponentVector) -> Result<SparsePoly, PolyError> {
        let mut out = SparsePoly::one(self.arity).truncate(bound);
        for _ in 0..k {
            out = out.mul_pruned(self, bound)?;
        }
        Ok(out)
    }

    pub fn scale_coeffs(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Substitutes `x_i -> x_i^l` for every variable.
    pub fn scale_exponents(&self, l: u32) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (ExponentVector(e.0.iter().map(|&x| x * l).collect()), c.clone()))
                .collect(),
        }
    }

    /// Value at `x_1 = ... = x_n = 1`.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies `x_i -> x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> SparsePoly {
        assert_eq!(perm.len(), self.arity);
        let mut out = SparsePoly::zero(self.arity);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.arity];
            for (i, &x) in e.0.iter().enumerate() {
                ne[perm[i]] = x;
            }
            out.add_term(ExponentVector(ne), c.clone());
        }
        out
    }

    pub fn swap_variables(&self, i: usize, j: usize) -> SparsePoly {
        let mut perm: Vec<usize> = (0..self.arity).collect();
        perm.swap(i, j);
        self.permute_variables(&perm)
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.arity).all(|i| self.swap_variables(i - 1, i) == *self)
    }

    /// Sets the last variable to zero and drops it.
    pub fn drop_last_variable(&self) -> SparsePoly {
        assert!(self.arity > 0);
        SparsePoly {
            arity: self.arity - 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0[self.arity - 1] == 0)
                .map(|(e, c)| (ExponentVector(e.0[..self.arity - 1].to_vec()), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_arity(divisor)?;
        let (lead_e, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.arity);
        while let Some((e, c)) = rem.leading_term() {
            let shift = e.checked_sub(lead_e).ok_or(PolyError::Inexact)?;
            if !(c % lead_c).is_zero() {
                return Err(PolyError::Inexact);
            }
            let factor = SparsePoly::monomial(shift, c / lead_c);
            rem = &rem - &factor.try_mul(divisor)?;
            quot = &quot + &factor;
        }
        Ok(quot)
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(text: &str, arity: usize) -> Result<SparsePoly, PolyError> {
        let text = text.trim();
        let mut p = SparsePoly::zero(arity);
        if text == "0" {
            return Ok(p);
        }
        for token in text.split_whitespace() {
            let bad = || PolyError::Parse(token.to_string());
            let (neg, body) = match token.as_bytes().first() {
                Some(b'+') => (false, &token[1..]),
                Some(b'-') => (true, &token[1..]),
                _ => return Err(bad()),
            };
            let mut factors = body.split('*');
            let mut coeff: BigInt = factors.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if neg {
                coeff = -coeff;
            }
            let mut exps = vec![0u32; arity];
            for f in factors {
                let f = f.strip_prefix('x').ok_or_else(bad)?;
                let (var, pow) = match f.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                    None => (f, 1),
                };
                let var: usize = var.parse().map_err(|_| bad())?;
                if var == 0 || var > arity {
                    return Err(bad());
                }
                exps[var - 1] += pow;
            }
            p.add_term(ExponentVector(exps), coeff);
        }
        Ok(p)
    }
}

/// Terms in descending graded-lex order: `+1*x1^2*x2 -1*x1^2*x3`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            for (i, &x) in e.0.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Panics on arity mismatch; see [`SparsePoly::try_mul`] for the fallible form.
impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

/// `∏_{i<j} (x_i - x_j)`, the Vandermonde determinant `det(x_i^{n-j})`.
pub fn vandermonde(n: usize) -> SparsePoly {
    let mut out = SparsePoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let factor = &SparsePoly::var(n, i) - &SparsePoly::var(n, j);
            out = &out * &factor;
        }
    }
    out
}

/// Sign of a permutation given in one-line notation.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
