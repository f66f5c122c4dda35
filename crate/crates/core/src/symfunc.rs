//! Schur polynomials and the combinatorial rules used to cross-check them:
//! semistandard tableaux, bialternants, Littlewood–Richardson tableaux,
//! Murnaghan–Nakayama rim hooks, and expansion in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::Partition;
use crate::poly::{permutation_sign, permutations, vandermonde, ExponentVector, PolyError, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("cycle lengths must be positive")]
    ZeroCycle,
    #[error("size mismatch: |mu| = {partition}, cycle type sums to {cycles}")]
    SizeMismatch { partition: u64, cycles: u64 },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Cycle lengths of a permutation, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut lengths: Vec<u32>) -> Result<Self, SymFuncError> {
        if lengths.contains(&0) {
            return Err(SymFuncError::ZeroCycle);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(lengths))
    }

    pub fn identity(k: u32) -> Self {
        CycleType(vec![1; k as usize])
    }

    pub fn lengths(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&l| u64::from(l)).sum()
    }

    /// Number of permutations in `S_k` with this cycle type: `k! / ∏ l^{m_l} m_l!`.
    pub fn class_size(&self) -> BigInt {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &l in &self.0 {
            *counts.entry(l).or_default() += 1;
        }
        let mut centralizer = BigInt::one();
        for (&l, &m) in &counts {
            centralizer *= BigInt::from(l).pow(m) * factorial(m);
        }
        factorial(self.size() as u32) / centralizer
    }

    /// All cycle types of `S_k`.
    pub fn all(k: u32) -> Vec<CycleType> {
        Partition::all_of_weight(k)
            .into_iter()
            .map(|p| CycleType(p.parts().to_vec()))
            .collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `S_λ(x_1, ..., x_n)` as a sum over semistandard tableaux.
///
/// A tableau with entries at most `n` is a chain of horizontal strips; the
/// entries equal to `n` form the last strip. Returns zero when λ has more than
/// `n` rows.
pub fn schur_poly(lambda: &Partition, n: usize) -> SparsePoly {
    let mut memo = HashMap::new();
    schur_rec(lambda, n, n, &mut memo)
}

fn schur_rec(
    lambda: &Partition,
    vars: usize,
    arity: usize,
    memo: &mut HashMap<(Partition, usize), SparsePoly>,
) -> SparsePoly {
    if lambda.len() > vars {
        return SparsePoly::zero(arity);
    }
    if lambda.is_empty() {
        return SparsePoly::one(arity);
    }
    if let Some(p) = memo.get(&(lambda.clone(), vars)) {
        return p.clone();
    }
    let mut out = SparsePoly::zero(arity);
    for inner in horizontal_strips_removed(lambda) {
        if inner.len() > vars - 1 {
            continue;
        }
        let strip = (lambda.weight() - inner.weight()) as u32;
        let rest = schur_rec(&inner, vars - 1, arity, memo);
        for (e, c) in rest.terms() {
            let mut e = e.as_slice().to_vec();
            e[vars - 1] += strip;
            out.add_term(ExponentVector::new(e), c.clone());
        }
    }
    memo.insert((lambda.clone(), vars), out.clone());
    out
}

/// Every `μ ⊆ λ` such that `λ/μ` is a horizontal strip (`λ_{i+1} <= μ_i <= λ_i`).
fn horizontal_strips_removed(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for m in lo..=lambda[i] {
            cur.push(m);
            go(lambda, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), 0, &mut Vec::new(), &mut out);
    out
}

/// The alternant `det(x_i^{a_j})` expanded over permutations.
pub fn alternant(exps: &[u32]) -> SparsePoly {
    let n = exps.len();
    let mut out = SparsePoly::zero(n);
    for perm in permutations(n) {
        let e: Vec<u32> = perm.iter().map(|&j| exps[j]).collect();
        out.add_term(ExponentVector::new(e), BigInt::from(permutation_sign(&perm)));
    }
    out
}

/// `S_λ` as the quotient `det(x_i^{λ_j + n - j}) / Δ_n`.
pub fn schur_poly_bialternant(lambda: &Partition, n: usize) -> Result<SparsePoly, SymFuncError> {
    let Some(padded) = lambda.padded(n) else {
        return Ok(SparsePoly::zero(n));
    };
    let shifted: Vec<u32> = padded
        .iter()
        .enumerate()
        .map(|(j, &l)| l + (n - 1 - j) as u32)
        .collect();
    Ok(alternant(&shifted).div_exact(&vandermonde(n))?)
}

/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`, the dimension of the irreducible
/// `gl_n`-module of highest weight λ.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> BigInt {
    let Some(l) = lambda.padded(n) else {
        return BigInt::zero();
    };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(i64::from(l[i]) - i64::from(l[j]) + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Number of Littlewood–Richardson tableaux of shape `outer/inner` and content `content`.
pub fn lr_coefficient(inner: &Partition, content: &Partition, outer: &Partition) -> u64 {
    if !outer.contains(inner) || outer.weight() != inner.weight() + content.weight() {
        return 0;
    }
    let rows = outer.len();
    let mut filling: Vec<Vec<u32>> = (0..rows)
        .map(|i| vec![0; (outer.part(i) - inner.part(i)) as usize])
        .collect();
    let mut counts = vec![0u32; content.len() + 1];
    let mut total = 0;
    lr_fill(inner, content, 0, None, &mut filling, &mut counts, &mut total);
    total
}

// Cells are filled row by row from the top, each row right to left, which is
// the reverse reading order, so the lattice condition is checked as we go.
fn lr_fill(
    inner: &Partition,
    content: &Partition,
    row: usize,
    col: Option<usize>,
    filling: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut u64,
) {
    if row == filling.len() {
        *total += 1;
        return;
    }
    let width = filling[row].len();
    let pos = match col {
        Some(c) => c,
        None if width == 0 => {
            return lr_fill(inner, content, row + 1, None, filling, counts, total);
        }
        None => width - 1,
    };
    let abs_col = inner.part(row) as usize + pos;
    let max_right = if pos + 1 < width {
        filling[row][pos + 1]
    } else {
        u32::MAX
    };
    let min_above = if row > 0 && abs_col >= inner.part(row - 1) as usize {
        filling[row - 1][abs_col - inner.part(row - 1) as usize] + 1
    } else {
        1
    };
    let top = (content.len() as u32).min(max_right);
    for v in min_above..=top {
        let vi = v as usize;
        if counts[vi] >= content.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        filling[row][pos] = v;
        let next = if pos == 0 {
            (row + 1, None)
        } else {
            (row, Some(pos - 1))
        };
        lr_fill(inner, content, next.0, next.1, filling, counts, total);
        counts[vi] -= 1;
    }
}

type LrKey = (Partition, Partition, usize);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, BTreeMap<Partition, u64>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Decomposition of `L_ρ ⊗ L_λ` for `gl_n`: `ν -> c^ν_{ρ,λ}` over ν with at most `n` rows.
pub fn lr_product(rho: &Partition, lambda: &Partition, n: usize) -> BTreeMap<Partition, u64> {
    let key = (rho.clone(), lambda.clone(), n);
    if let Some(hit) = lr_cache().lock().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    let size = (rho.weight() + lambda.weight()) as u32;
    let cols = rho.first() + lambda.first();
    for nu in Partition::in_box(size, n, cols) {
        if !nu.contains(rho) {
            continue;
        }
        let c = lr_coefficient(rho, lambda, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    lr_cache().lock().expect("lr cache poisoned").insert(key, out.clone());
    out
}

/// Multiplicity of `L_μ` in `L_{λ^(1)} ⊗ ... ⊗ L_{λ^(k)}` as `gl_n`-modules.
pub fn lr_multiplicity(lambdas: &[Partition], mu: &Partition, n: usize) -> BigInt {
    let total: u64 = lambdas.iter().map(Partition::weight).sum();
    if total != mu.weight() || mu.len() > n {
        return BigInt::zero();
    }
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::new();
    current.insert(Partition::empty(), BigInt::one());
    for lambda in lambdas {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (rho, mult) in &current {
            for (nu, c) in lr_product(rho, lambda, n) {
                // factors only add boxes, so anything outside μ is dead
                if mu.contains(&nu) {
                    *next.entry(nu).or_default() += mult * BigInt::from(c);
                }
            }
        }
        current = next;
    }
    current.remove(mu).unwrap_or_default()
}

/// Irreducible character `χ^μ` of `S_k` on the class `cycle_type`, by rim-hook removal.
pub fn murnaghan_nakayama(mu: &Partition, cycle_type: &CycleType) -> Result<BigInt, SymFuncError> {
    if mu.weight() != cycle_type.size() {
        return Err(SymFuncError::SizeMismatch {
            partition: mu.weight(),
            cycles: cycle_type.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(BigInt::from(mn_rec(mu.clone(), cycle_type.lengths(), &mut memo)))
}

fn mn_rec(mu: Partition, cycles: &[u32], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&l, rest)) = cycles.split_first() else {
        return i64::from(mu.is_empty());
    };
    if let Some(&v) = memo.get(&(mu.clone(), cycles.len())) {
        return v;
    }
    // beta-set: positions μ_i + (r - 1 - i); a rim hook of length l moves one bead down by l
    let r = mu.len();
    let beta: Vec<u32> = (0..r).map(|i| mu.part(i) + (r - 1 - i) as u32).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < l || beta.contains(&(b - l)) {
            continue;
        }
        let target = b - l;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &x)| x - (r - 1 - j) as u32).collect();
        let smaller = Partition::new(parts).expect("beta-set yields a partition");
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(smaller, rest, memo);
    }
    memo.insert((mu, cycles.len()), total);
    total
}

/// Coefficients of a symmetric polynomial in the Schur basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    /// `Σ c_μ S_μ(x_1..x_n)`.
    pub fn reconstruct(&self, n: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(n);
        for (mu, c) in &self.coeffs {
            let s = schur_poly(mu, n);
            out = &out + &s.scale_coeffs(c);
        }
        out
    }
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly peeling
/// off the term with the lexicographically largest exponent. That exponent is
/// dominance-maximal, and it is the leading term of the matching `S_μ`.
pub fn schur_expand(p: &SparsePoly, n: usize) -> Result<SchurExpansion, SymFuncError> {
    if p.arity() != n {
        return Err(PolyError::Arity {
            left: p.arity(),
            right: n,
        }
        .into());
    }
    if !p.is_symmetric() {
        return Err(SymFuncError::NotSymmetric);
    }
    let mut rem = p.clone();
    let mut out = SchurExpansion::default();
    let mut cache: HashMap<Partition, SparsePoly> = HashMap::new();
    while !rem.is_zero() {
        let (lead, c) = rem
            .terms()
            .max_by(|a, b| a.0.as_slice().cmp(b.0.as_slice()))
            .map(|(e, c)| (e.as_slice().to_vec(), c.clone()))
            .expect("nonzero");
        let mu = Partition::new(lead).map_err(|_| SymFuncError::NotSymmetric)?;
        let s = cache.entry(mu.clone()).or_insert_with(|| schur_poly(&mu, n));
        let scaled = s.scale_coeffs(&c);
        rem = &rem - &scaled;
        out.coeffs.insert(mu, c);
    }
    Ok(out)
}
