//! Lower bounds for the number of real solutions of osculating Schubert problems.
//!
//! With `c` complex conjugate pairs among the points, the flip of each pair of
//! equal tensor factors acts on the multiplicity space `M_{λ,μ}`. The trace of
//! their product is the signature `q(λ, μ, c)` of a twisted Hermitian form, and
//! `|q|` bounds the number of real solutions from below. Here `μ` is the
//! complement of `ν` in the `n x (d-n)` rectangle.

pub mod compare;
pub mod counterexample;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{
    plethysm_product, shifted_target, twisted_coefficient, twisted_coefficient_via_expansion, CharacterError,
    CharacterValue,
};
use crate::partitions::{Partition, PartitionError, SchubertProblem, ValidationReport};
use crate::poly::SparsePoly;
use crate::symfunc::lr_multiplicity;

pub use compare::{hhs_count_r, hhs_sharp_bound, white_bound};
pub use counterexample::{verify_indefinite_counterexample, CounterexampleReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid problem: {0}")]
    InvalidProblem(ValidationReport),
    #[error("pairing violated: 2c = {} with k = {k} factors, or lambda[2i-1] != lambda[2i]", 2 * .c)]
    Pairing { c: usize, k: usize },
    #[error("white bound needs 1 <= p <= m, got m = {m}, p = {p}")]
    ImbalanceRange { m: u32, p: u32 },
    #[error("r(k, n, s) needs 1 <= n <= k and 2s <= k - 1, got k = {k}, n = {n}, s = {s}")]
    RealCountRange { k: u32, n: u32, s: u32 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// `(λ, l)` factors of the twisted product: `S_{λ^(2i)}(x^2)` for each pair,
/// `S_{λ^(j)}(x)` for each real point.
fn twisted_factors(lambdas: &[Partition], c: usize) -> Result<Vec<(Partition, u32)>, BoundsError> {
    let k = lambdas.len();
    if 2 * c > k || (0..c).any(|i| lambdas[2 * i] != lambdas[2 * i + 1]) {
        return Err(BoundsError::Pairing { c, k });
    }
    let pairs = (0..c).map(|i| (lambdas[2 * i + 1].clone(), 2));
    let singles = lambdas[2 * c..].iter().map(|l| (l.clone(), 1));
    Ok(pairs.chain(singles).collect())
}

/// Signature `q(λ, μ, c)`: the coefficient of `x^{μ+δ}` in
/// `Δ_n · ∏_{i<=c} S_{λ^(2i)}(x^2) · ∏_{j>2c} S_{λ^(j)}(x)`.
pub fn signature_q(lambdas: &[Partition], mu: &Partition, c: usize, n: usize) -> Result<CharacterValue, BoundsError> {
    let factors = twisted_factors(lambdas, c)?;
    Ok(twisted_coefficient(&factors, mu, n)?)
}

/// The product `∏ S_{λ^(2i)}(x^2) · ∏ S_{λ^(j)}(x)` with every term above
/// `μ + δ` dropped; `q` is read off this polynomial.
pub fn twisted_product(lambdas: &[Partition], mu: &Partition, c: usize, n: usize) -> Result<SparsePoly, BoundsError> {
    let factors = twisted_factors(lambdas, c)?;
    let target = shifted_target(mu, n)?;
    Ok(plethysm_product(&factors, n, &target)?)
}

/// [`signature_q`] read off the Schur expansion of the twisted product.
pub fn signature_q_via_expansion(
    lambdas: &[Partition],
    mu: &Partition,
    c: usize,
    n: usize,
) -> Result<CharacterValue, BoundsError> {
    let factors = twisted_factors(lambdas, c)?;
    Ok(twisted_coefficient_via_expansion(&factors, mu, n)?)
}

/// How each number in a [`BoundReport`] was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub a_signed: &'static str,
    pub complex_count: &'static str,
    pub white_bound: Option<&'static str>,
    pub hhs_bound: Option<&'static str>,
    /// `None` unless the report was cross-checked; then whether the Schur
    /// expansion and the Littlewood–Richardson count agreed.
    pub oracle_agreement: Option<bool>,
}

pub const METHOD_ANTISYMMETRIZATION: &str =
    "antisymmetrized coefficient of x^(mu+delta) in Delta_n * prod S(x^2) * prod S(x)";
pub const METHOD_COMPLEX_COUNT: &str = "same coefficient at c = 0";
pub const METHOD_SIGN_IMBALANCE: &str = "sign-imbalance of the n x (d-n) rectangle";
pub const METHOD_REAL_COUNT: &str = "coefficient r(k, n, s) of x^(k-n) y^(n-1) in (x+y)^(k-1-2s) (x^2+y^2)^s";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub problem: SchubertProblem,
    pub mu: Partition,
    /// `a(λ, ν, c)`, signed.
    pub a_signed: BigInt,
    /// `|a|`, the lower bound on the number of real solutions.
    pub lower_bound: BigInt,
    /// `m(λ, ν)`, the number of complex solutions.
    pub complex_count: BigInt,
    pub white_bound: Option<BigInt>,
    pub hhs_bound: Option<BigInt>,
    pub provenance: Provenance,
}

/// Exponent `(d-1-ν_n, d-2-ν_{n-1}, ..., d-n-ν_1)` of the monomial whose
/// coefficient is `a`.
pub fn bound_monomial(p: &SchubertProblem) -> Option<Vec<u32>> {
    let nu = p.nu.padded(p.n)?;
    (1..=p.n)
        .map(|i| p.d.checked_sub(i as u32)?.checked_sub(nu[p.n - i]))
        .collect()
}

/// Computes `a(λ, ν, c)` together with the complex count and, where they apply,
/// the competing bounds.
pub fn lower_bound_a(p: &SchubertProblem) -> Result<BoundReport, BoundsError> {
    let report = p.validate();
    if !report.is_ok() {
        return Err(BoundsError::InvalidProblem(report));
    }
    let mu = p.mu()?;
    let target = shifted_target(&mu, p.n)?;
    assert_eq!(
        bound_monomial(p).as_deref(),
        Some(target.as_slice()),
        "bound monomial must equal mu + delta"
    );
    let a_signed = signature_q(&p.lambdas, &mu, p.c, p.n)?.value;
    let complex_count = if p.c == 0 {
        a_signed.clone()
    } else {
        signature_q(&p.lambdas, &mu, 0, p.n)?.value
    };
    let white = imbalance_applies(p).map(|(m, rows)| white_bound(m, rows)).transpose()?;
    let hhs = real_count_applies(p)
        .map(|(k, n, c)| hhs_sharp_bound(k, n, c))
        .transpose()?;
    Ok(BoundReport {
        problem: p.clone(),
        mu,
        lower_bound: a_signed.abs(),
        a_signed,
        complex_count,
        provenance: Provenance {
            a_signed: METHOD_ANTISYMMETRIZATION,
            complex_count: METHOD_COMPLEX_COUNT,
            white_bound: white.as_ref().map(|_| METHOD_SIGN_IMBALANCE),
            hhs_bound: hhs.as_ref().map(|_| METHOD_REAL_COUNT),
            oracle_agreement: None,
        },
        white_bound: white,
        hhs_bound: hhs,
    })
}

/// [`lower_bound_a`] plus the independent routes: Schur expansion for `a` and
/// the Littlewood–Richardson rule for the complex count.
pub fn lower_bound_a_verified(p: &SchubertProblem) -> Result<BoundReport, BoundsError> {
    let mut report = lower_bound_a(p)?;
    let expanded = signature_q_via_expansion(&p.lambdas, &report.mu, p.c, p.n)?.value;
    let lr = lr_multiplicity(&p.lambdas, &report.mu, p.n);
    report.provenance.oracle_agreement = Some(expanded == report.a_signed && lr == report.complex_count);
    Ok(report)
}

/// Reports for every `c` in `cs`, in order.
pub fn bound_table(
    p: &SchubertProblem,
    cs: impl IntoIterator<Item = usize>,
    verify: bool,
) -> Result<Vec<BoundReport>, BoundsError> {
    let cs: Vec<usize> = cs.into_iter().collect();
    cs.par_iter()
        .map(|&c| {
            let q = p.with_pairs(c);
            if verify {
                lower_bound_a_verified(&q)
            } else {
                lower_bound_a(&q)
            }
        })
        .collect()
}

/// `(m, p)` for the rectangle sign-imbalance: vector problems with `ν = ∅` and `n <= d - n`.
fn imbalance_applies(p: &SchubertProblem) -> Option<(u32, u32)> {
    let m = p.d - p.n as u32;
    (p.is_vector_problem() && p.nu.is_empty() && p.n as u32 <= m).then_some((m, p.n as u32))
}

/// `(k, n, c)` for vector problems in `Gr(n, k+1)` with `ν = (k-n)^{n-1}`.
fn real_count_applies(p: &SchubertProblem) -> Option<(u32, u32, u32)> {
    let k = p.k() as u32;
    let n = p.n as u32;
    let fits = p.is_vector_problem()
        && n <= k
        && p.d == k + 1
        && p.nu == Partition::rectangle(p.n - 1, k - n)
        && 2 * p.c as u32 <= k;
    fits.then_some((k, n, p.c as u32))
}

/// The transposed problem in `Gr(d-n, d)` and the sign `(-1)^m`,
/// `m = Σ_{i<=c} |λ^(2i)|`, with `a(p) = sign · a(dual)`.
pub fn transpose_dual(p: &SchubertProblem) -> Result<(SchubertProblem, i8), BoundsError> {
    let report = p.validate();
    if !report.is_ok() {
        return Err(BoundsError::InvalidProblem(report));
    }
    let sign = if p.paired_weight().is_multiple_of(2) { 1 } else { -1 };
    Ok((p.transposed(), sign))
}

/// `a` for the problem with `ν` moved into the factor list, in the same `Gr(n, d)`.
pub fn reduced_bound(p: &SchubertProblem) -> Result<BigInt, BoundsError> {
    Ok(lower_bound_a(&p.reduced())?.a_signed)
}

/// `true` when the transpose duality forces `a = 0`: the problem is its own
/// dual and the sign is `-1`.
pub fn forced_zero_by_symmetry(p: &SchubertProblem) -> bool {
    p.is_self_dual() && p.paired_weight() % 2 == 1
}

impl BoundReport {
    pub fn is_consistent(&self) -> bool {
        self.lower_bound == self.a_signed.abs()
            && self.lower_bound <= self.complex_count
            && !self.complex_count.is_negative()
            && (self.problem.c > 0 || self.a_signed == self.complex_count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row(lambdas: &[Partition], mu: &Partition, n: usize, cs: std::ops::RangeInclusive<usize>) -> Vec<i64> {
        cs.map(|c| {
            let v = signature_q(lambdas, mu, c, n).unwrap().value;
            i64::try_from(v).unwrap()
        })
        .collect()
    }

    #[test]
    fn gr36_row() {
        let lambdas = vec![p(&[1]); 9];
        let q = row(&lambdas, &p(&[3, 3, 3]), 3, 0..=4);
        assert_eq!(q.iter().map(|v| v.abs()).collect::<Vec<_>>(), vec![42, 0, 2, 0, 6]);
    }

    #[test]
    fn gr48_row() {
        let lambdas = vec![p(&[1]); 7];
        let q = row(&lambdas, &p(&[4, 1, 1, 1]), 4, 0..=3);
        assert_eq!(q.iter().map(|v| v.abs()).collect::<Vec<_>>(), vec![20, 0, 4, 0]);
    }

    #[test]
    fn gr38_row() {
        let lambdas = vec![p(&[1]); 15];
        let q = row(&lambdas, &p(&[5, 5, 5]), 3, 0..=7);
        assert_eq!(
            q.iter().map(|v| v.abs()).collect::<Vec<_>>(),
            vec![6006, 858, 198, 42, 6, 10, 10, 70]
        );
    }

    #[test]
    fn hhs_family_rows() {
        // vector problems in Gr(n, k+1) with nu = (k-n)^(n-1)
        let prob = SchubertProblem::vector(14, p(&[11, 11]), 3, 15, 0);
        let a: Vec<i64> = bound_table(&prob, 0..=7, false)
            .unwrap()
            .iter()
            .map(|r| i64::try_from(r.lower_bound.clone()).unwrap())
            .collect();
        assert_eq!(a, vec![78, 54, 34, 18, 6, 2, 6, 6]);

        let prob = SchubertProblem::vector(11, p(&[7, 7, 7]), 4, 12, 0);
        let reports = bound_table(&prob, 0..=5, false).unwrap();
        let a: Vec<i64> = reports
            .iter()
            .map(|r| i64::try_from(r.lower_bound.clone()).unwrap())
            .collect();
        assert_eq!(a, vec![120, 48, 8, 8, 8, 0]);
        let hhs: Vec<i64> = reports
            .iter()
            .map(|r| i64::try_from(r.hhs_bound.clone().unwrap()).unwrap())
            .collect();
        assert_eq!(hhs, vec![120, 64, 32, 16, 8, 0]);
    }

    #[test]
    fn report_fields() {
        let prob = SchubertProblem::vector(9, Partition::empty(), 3, 6, 2);
        let r = lower_bound_a_verified(&prob).unwrap();
        assert_eq!(r.mu, p(&[3, 3, 3]));
        assert_eq!(r.lower_bound, BigInt::from(2));
        assert_eq!(r.complex_count, BigInt::from(42));
        assert_eq!(r.white_bound, Some(BigInt::zero()));
        assert_eq!(r.hhs_bound, None);
        assert_eq!(r.provenance.oracle_agreement, Some(true));
        assert!(r.is_consistent());

        let c0 = lower_bound_a(&prob.with_pairs(0)).unwrap();
        assert_eq!(c0.lower_bound, c0.complex_count);
    }

    #[test]
    fn twisted_product_carries_q() {
        let lambdas = vec![p(&[1]); 9];
        let mu = p(&[3, 3, 3]);
        let target = shifted_target(&mu, 3).unwrap();
        for c in 0..=4 {
            let prod = twisted_product(&lambdas, &mu, c, 3).unwrap();
            assert!(prod.terms().all(|(e, _)| e <= &target));
            let q = crate::characters::antisymmetrized_coeff(&prod, &target);
            assert_eq!(q, signature_q(&lambdas, &mu, c, 3).unwrap().value);
        }
    }

    #[test]
    fn invalid_problem_is_rejected() {
        let prob = SchubertProblem::vector(9, Partition::empty(), 3, 7, 0);
        assert!(matches!(lower_bound_a(&prob), Err(BoundsError::InvalidProblem(_))));
        assert!(transpose_dual(&prob).is_err());
    }

    #[test]
    fn pairing_is_enforced() {
        let lambdas = vec![p(&[2]), p(&[1]), p(&[1])];
        assert!(matches!(
            signature_q(&lambdas, &p(&[3, 1]), 1, 2),
            Err(BoundsError::Pairing { .. })
        ));
        assert!(signature_q(&lambdas, &p(&[3, 1]), 2, 2).is_err());
    }

    #[test]
    fn bound_monomial_is_mu_plus_delta() {
        let prob = SchubertProblem::vector(7, p(&[3, 3, 3]), 4, 8, 0);
        assert_eq!(bound_monomial(&prob).unwrap(), vec![7, 3, 2, 1]);
    }

    #[test]
    fn transpose_examples() {
        let prob = SchubertProblem::vector(4, Partition::empty(), 2, 4, 1);
        let (dual, sign) = transpose_dual(&prob).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(dual.n, 2);
        assert_eq!(dual.lambdas, vec![p(&[1]); 4]);
        assert_eq!(
            lower_bound_a(&prob).unwrap().a_signed,
            -lower_bound_a(&dual).unwrap().a_signed
        );

        let (_, sign) = transpose_dual(&prob.with_pairs(0)).unwrap();
        assert_eq!(sign, 1);

        let prob = SchubertProblem {
            lambdas: vec![p(&[2]), p(&[2]), p(&[1, 1]), p(&[1, 1])],
            nu: Partition::empty(),
            n: 2,
            d: 6,
            c: 1,
        };
        assert!(prob.validate().is_ok(), "{}", prob.validate());
        let (dual, sign) = transpose_dual(&prob).unwrap();
        assert_eq!(dual.n, 4);
        assert_eq!(sign, 1);
        assert_eq!(
            lower_bound_a(&prob).unwrap().a_signed,
            lower_bound_a(&dual).unwrap().a_signed * i32::from(sign)
        );
    }

    #[test]
    fn reduction_examples() {
        let prob = SchubertProblem::vector(7, p(&[3, 3, 3]), 4, 8, 0);
        for c in 0..=3 {
            let q = prob.with_pairs(c);
            assert_eq!(lower_bound_a(&q).unwrap().a_signed, reduced_bound(&q).unwrap());
        }
    }

    #[test]
    fn bound_does_not_depend_on_d_for_fixed_mu() {
        let lambdas = vec![p(&[1]); 6];
        let mu = p(&[3, 2, 1]);
        let base: Vec<BigInt> = (0..=3)
            .map(|c| signature_q(&lambdas, &mu, c, 3).unwrap().value)
            .collect();
        for d in 6..=8 {
            let prob = SchubertProblem::from_mu(lambdas.clone(), &mu, 3, d, 0).unwrap();
            // the reduced problem has a d-dependent rectangle as its mu
            let red = prob.reduced();
            for (c, want) in base.iter().enumerate() {
                assert_eq!(
                    &lower_bound_a(&red.with_pairs(c)).unwrap().a_signed,
                    want,
                    "d={d} c={c}"
                );
            }
        }
    }

    #[test]
    fn symmetric_problem_vanishing() {
        for prob in [
            SchubertProblem::vector(4, Partition::empty(), 2, 4, 1),
            SchubertProblem::vector(9, Partition::empty(), 3, 6, 1),
            SchubertProblem::vector(9, Partition::empty(), 3, 6, 3),
        ] {
            assert!(prob.validate().is_ok());
            assert!(forced_zero_by_symmetry(&prob));
            assert!(lower_bound_a(&prob).unwrap().a_signed.is_zero());
        }
        assert!(!forced_zero_by_symmetry(&SchubertProblem::vector(
            9,
            Partition::empty(),
            3,
            6,
            2
        )));
    }
}
