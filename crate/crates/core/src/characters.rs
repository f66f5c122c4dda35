//! Characters of products of symmetric groups acting on multiplicity spaces of
//! tensor products of `gl_n`-modules.
//!
//! For `σ = σ_1 × ... × σ_s` with `σ_i` of cycle type `(l_{i1}, ..., l_{ic_i})`,
//! the trace of `σ` on the multiplicity space of `L_μ` is the coefficient of
//! `x^{μ+δ}` in `Δ_n · ∏_i ∏_j S_{λ^(i)}(x_1^{l_ij}, ..., x_n^{l_ij})`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::partitions::{staircase, Partition};
use crate::poly::{permutation_sign, permutations, vandermonde, ExponentVector, PolyError, SparsePoly};
use crate::symfunc::{schur_expand, schur_poly, CycleType, SymFuncError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("mu = ({mu}) has more than n = {n} parts")]
    TooManyParts { mu: Partition, n: usize },
    #[error("n must be positive")]
    ZeroRank,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

/// One factor `S_{k_i}` of the product group, acting on `L_λ^{⊗k_i}`, together
/// with the cycle type of its component of `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassFactor {
    pub lambda: Partition,
    pub cycles: CycleType,
}

impl ClassFactor {
    pub fn k(&self) -> u64 {
        self.cycles.size()
    }
}

/// A conjugacy class of `S_{k_1} × ... × S_{k_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductClass {
    pub factors: Vec<ClassFactor>,
}

impl ProductClass {
    pub fn new(factors: impl IntoIterator<Item = (Partition, CycleType)>) -> Self {
        ProductClass {
            factors: factors
                .into_iter()
                .map(|(lambda, cycles)| ClassFactor { lambda, cycles })
                .collect(),
        }
    }

    /// `S_k` permuting `k` copies of the vector representation.
    pub fn vector(cycles: CycleType) -> Self {
        Self::new([(Partition::rectangle(1, 1), cycles)])
    }

    /// `Σ k_i |λ^(i)|`, the only weight with a nonzero multiplicity space.
    pub fn weight(&self) -> u64 {
        self.factors.iter().map(|f| f.k() * f.lambda.weight()).sum()
    }

    /// `(λ, l)` for every cycle of every factor.
    pub fn plethysm_factors(&self) -> Vec<(Partition, u32)> {
        self.factors
            .iter()
            .flat_map(|f| f.cycles.lengths().iter().map(move |&l| (f.lambda.clone(), l)))
            .collect()
    }
}

/// A coefficient that may have been forced to zero by the weight condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    pub value: BigInt,
    /// Set when `|μ|` differs from the total weight, so the multiplicity space is trivial.
    pub weight_gated: bool,
}

impl CharacterValue {
    fn gated() -> Self {
        CharacterValue {
            value: BigInt::zero(),
            weight_gated: true,
        }
    }

    fn of(value: BigInt) -> Self {
        CharacterValue {
            value,
            weight_gated: false,
        }
    }
}

/// `μ + δ` as an exponent vector with `n` entries.
pub fn shifted_target(mu: &Partition, n: usize) -> Result<ExponentVector, CharacterError> {
    if n == 0 {
        return Err(CharacterError::ZeroRank);
    }
    let padded = mu
        .padded(n)
        .ok_or_else(|| CharacterError::TooManyParts { mu: mu.clone(), n })?;
    Ok(padded
        .iter()
        .zip(staircase(n))
        .map(|(m, s)| m + s)
        .collect::<Vec<_>>()
        .into())
}

/// `∏ S_λ(x^l)` over the given factors, keeping only terms `<= bound`.
///
/// Factors are multiplied in increasing order of term count.
pub fn plethysm_product(
    factors: &[(Partition, u32)],
    n: usize,
    bound: &ExponentVector,
) -> Result<SparsePoly, CharacterError> {
    let mut schur: HashMap<&Partition, SparsePoly> = HashMap::new();
    let mut polys: Vec<SparsePoly> = factors
        .iter()
        .map(|(lambda, l)| {
            schur
                .entry(lambda)
                .or_insert_with(|| schur_poly(lambda, n))
                .scale_exponents(*l)
                .truncate(bound)
        })
        .collect();
    polys.sort_by_key(SparsePoly::num_terms);
    let mut out = SparsePoly::one(n).truncate(bound);
    for p in &polys {
        out = out.mul_pruned(p, bound)?;
    }
    Ok(out)
}

/// Coefficient of `x^target` in `Δ_n · p`, computed without forming `Δ_n · p`:
/// `Σ_w sgn(w) [x^{target - w(δ)}] p`.
///
/// Either the `n!` permutations are enumerated, or, when `p` has fewer terms,
/// its support is scanned for exponents `e` with `target - e` a permutation of
/// `δ`. Both evaluate the same sum.
pub fn antisymmetrized_coeff(p: &SparsePoly, target: &ExponentVector) -> BigInt {
    let n = p.arity();
    let t = target.as_slice();
    let delta = staircase(n);
    let perm_count: usize = (1..=n)
        .try_fold(1usize, |acc, i| acc.checked_mul(i))
        .unwrap_or(usize::MAX);
    if perm_count <= p.num_terms() {
        let perms = permutations(n);
        return perms
            .par_iter()
            .map(|perm| {
                let e: Option<Vec<u32>> = (0..n).map(|i| t[i].checked_sub(delta[perm[i]])).collect();
                match e.and_then(|e| p.get(&e.into()).cloned()) {
                    Some(c) => c * permutation_sign(perm),
                    None => BigInt::zero(),
                }
            })
            .reduce(BigInt::zero, |a, b| a + b);
    }
    let mut total = BigInt::zero();
    let mut perm = vec![0usize; n];
    let mut seen = vec![false; n];
    'terms: for (e, c) in p.terms() {
        seen.iter_mut().for_each(|s| *s = false);
        for i in 0..n {
            let Some(diff) = t[i].checked_sub(e.as_slice()[i]) else {
                continue 'terms;
            };
            let diff = diff as usize;
            if diff >= n || seen[diff] {
                continue 'terms;
            }
            seen[diff] = true;
            perm[i] = n - 1 - diff;
        }
        total += c * permutation_sign(&perm);
    }
    total
}

/// Coefficient of `x^{μ+δ}` in `Δ_n · ∏ S_λ(x^l)`, via antisymmetrization.
pub fn twisted_coefficient(
    factors: &[(Partition, u32)],
    mu: &Partition,
    n: usize,
) -> Result<CharacterValue, CharacterError> {
    let target = shifted_target(mu, n)?;
    if !weight_matches(factors, mu) {
        return Ok(CharacterValue::gated());
    }
    let p = plethysm_product(factors, n, &target)?;
    Ok(CharacterValue::of(antisymmetrized_coeff(&p, &target)))
}

/// Same coefficient, by multiplying `Δ_n` into the pruned product and reading it off.
pub fn twisted_coefficient_direct(
    factors: &[(Partition, u32)],
    mu: &Partition,
    n: usize,
) -> Result<CharacterValue, CharacterError> {
    let target = shifted_target(mu, n)?;
    if !weight_matches(factors, mu) {
        return Ok(CharacterValue::gated());
    }
    let p = plethysm_product(factors, n, &target)?;
    let full = vandermonde(n).mul_pruned(&p, &target)?;
    Ok(CharacterValue::of(full.coeff(&target)?))
}

/// Same coefficient, by expanding the full symmetric product in Schur polynomials.
pub fn twisted_coefficient_via_expansion(
    factors: &[(Partition, u32)],
    mu: &Partition,
    n: usize,
) -> Result<CharacterValue, CharacterError> {
    shifted_target(mu, n)?;
    if !weight_matches(factors, mu) {
        return Ok(CharacterValue::gated());
    }
    let p = plethysm_product(factors, n, &ExponentVector::unbounded(n))?;
    let expansion = schur_expand(&p, n)?;
    Ok(CharacterValue::of(expansion.coeff(mu)))
}

fn weight_matches(factors: &[(Partition, u32)], mu: &Partition) -> bool {
    let w: u64 = factors.iter().map(|(l, len)| l.weight() * u64::from(*len)).sum();
    w == mu.weight()
}

/// Trace of the class `cls` on the multiplicity space of `L_μ`.
pub fn character_value(cls: &ProductClass, mu: &Partition, n: usize) -> Result<CharacterValue, CharacterError> {
    twisted_coefficient(&cls.plethysm_factors(), mu, n)
}

/// [`character_value`] with `Δ_n` multiplied out explicitly.
pub fn character_value_direct(cls: &ProductClass, mu: &Partition, n: usize) -> Result<CharacterValue, CharacterError> {
    twisted_coefficient_direct(&cls.plethysm_factors(), mu, n)
}

/// [`character_value`] through the Schur expansion of the trace.
pub fn character_value_via_expansion(
    cls: &ProductClass,
    mu: &Partition,
    n: usize,
) -> Result<CharacterValue, CharacterError> {
    twisted_coefficient_via_expansion(&cls.plethysm_factors(), mu, n)
}
