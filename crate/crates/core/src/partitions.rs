//! Integer partitions and the data model of an osculating Schubert problem.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: Partition,
        rows: usize,
        cols: u32,
    },
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions that differ
/// only by zero padding compare equal. Views with a fixed number of rows are
/// produced by [`Partition::padded`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(part, part, ..., part)` with `rows` rows.
    pub fn rectangle(rows: usize, part: u32) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![part; rows],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Exactly `n` entries, zero padded. `None` if there are more than `n` parts.
    pub fn padded(&self, n: usize) -> Option<Vec<u32>> {
        if self.parts.len() > n {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Some(v)
    }

    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Complement of `self` in the `n x (d - n)` rectangle, read backwards:
    /// `(d-n-ν_n, ..., d-n-ν_1)`.
    pub fn complement(&self, n: usize, d: u32) -> Result<Partition, PartitionError> {
        let cols = d.saturating_sub(n as u32);
        if d < n as u32 || !self.fits_in(n, cols) {
            return Err(PartitionError::DoesNotFit {
                partition: self.clone(),
                rows: n,
                cols,
            });
        }
        let padded = self.padded(n).expect("checked by fits_in");
        Partition::new(padded.iter().rev().map(|&p| cols - p).collect())
    }

    /// All partitions of `k`, in reverse lexicographic order starting at `(k)`.
    pub fn all_of_weight(k: u32) -> Vec<Partition> {
        Self::in_box(k, usize::MAX, k)
    }

    /// All partitions of `k` with at most `rows` rows and parts at most `cols`,
    /// in reverse lexicographic order.
    pub fn in_box(k: u32, rows: usize, cols: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, cols, rows, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance order `self ⊵ other` for partitions of equal weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        (0..n).all(|i| {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            a >= b
        })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// Parses comma-separated parts: `"3,1"`, `"2"`. Both `""` and `"0"` give the
/// empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// The staircase exponent `(n-1, n-2, ..., 1, 0)`.
pub fn staircase(n: usize) -> Vec<u32> {
    (0..n as u32).rev().collect()
}

/// Data of an osculating Schubert problem in `Gr(n, d)`.
///
/// `lambdas[2i]` and `lambdas[2i+1]` (zero-based) are attached to the `i`-th
/// complex conjugate pair of points for `i < c`; the remaining points are real.
/// Only the number of pairs is stored, never the points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertProblem {
    pub lambdas: Vec<Partition>,
    pub nu: Partition,
    pub n: usize,
    pub d: u32,
    pub c: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroRank,
    DegreeNotAboveRank { n: usize, d: u32 },
    LambdaDoesNotFit { index: usize, lambda: Partition },
    NuDoesNotFit { nu: Partition },
    Weight { total: u64, expected: u64 },
    TooManyPairs { c: usize, k: usize },
    Unpaired { pair: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroRank => write!(f, "n must be positive"),
            Violation::DegreeNotAboveRank { n, d } => {
                write!(f, "d must exceed n (n={n}, d={d})")
            }
            Violation::LambdaDoesNotFit { index, lambda } => write!(
                f,
                "rectangle fit: lambda[{}]=({lambda}) exceeds the n x (d-n) rectangle",
                index + 1
            ),
            Violation::NuDoesNotFit { nu } => {
                write!(f, "rectangle fit: nu=({nu}) exceeds the n x (d-n) rectangle")
            }
            Violation::Weight { total, expected } => write!(
                f,
                "weight condition: |nu| + sum |lambda| = {total}, expected n(d-n) = {expected}"
            ),
            Violation::TooManyPairs { c, k } => {
                write!(f, "conjugation pairing: 2c = {} exceeds k = {k}", 2 * c)
            }
            Violation::Unpaired { pair } => write!(
                f,
                "conjugation pairing: lambda[{}] != lambda[{}]",
                2 * pair + 1,
                2 * pair + 2
            ),
        }
    }
}

/// Outcome of [`validate_problem`]; empty means the problem is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        let msgs: Vec<String> = self.violations.iter().map(Violation::to_string).collect();
        f.write_str(&msgs.join("; "))
    }
}

pub fn validate_problem(p: &SchubertProblem) -> ValidationReport {
    let mut violations = Vec::new();
    if p.n == 0 {
        violations.push(Violation::ZeroRank);
    }
    let n32 = p.n as u32;
    if p.d <= n32 {
        violations.push(Violation::DegreeNotAboveRank { n: p.n, d: p.d });
    }
    let cols = p.d.saturating_sub(n32);
    for (index, lambda) in p.lambdas.iter().enumerate() {
        if !lambda.fits_in(p.n, cols) {
            violations.push(Violation::LambdaDoesNotFit {
                index,
                lambda: lambda.clone(),
            });
        }
    }
    if !p.nu.fits_in(p.n, cols) {
        violations.push(Violation::NuDoesNotFit { nu: p.nu.clone() });
    }
    let total = p.nu.weight() + p.lambdas.iter().map(Partition::weight).sum::<u64>();
    let expected = p.n as u64 * u64::from(cols);
    if total != expected {
        violations.push(Violation::Weight { total, expected });
    }
    if 2 * p.c > p.lambdas.len() {
        violations.push(Violation::TooManyPairs {
            c: p.c,
            k: p.lambdas.len(),
        });
    } else {
        for pair in 0..p.c {
            if p.lambdas[2 * pair] != p.lambdas[2 * pair + 1] {
                violations.push(Violation::Unpaired { pair });
            }
        }
    }
    ValidationReport { violations }
}

impl SchubertProblem {
    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_problem(self)
    }

    /// The complement of `nu` in the `n x (d-n)` rectangle.
    pub fn mu(&self) -> Result<Partition, PartitionError> {
        self.nu.complement(self.n, self.d)
    }

    /// Builds the problem whose complement partition is `mu`, with the given `d`
    /// (at least `n + mu_1`).
    pub fn from_mu(
        lambdas: Vec<Partition>,
        mu: &Partition,
        n: usize,
        d: u32,
        c: usize,
    ) -> Result<Self, PartitionError> {
        let nu = mu.complement(n, d)?;
        Ok(SchubertProblem { lambdas, nu, n, d, c })
    }

    /// The `d` forced by the weight condition, if it is an integer above `n`.
    pub fn degree_from_weight(lambdas: &[Partition], nu: &Partition, n: usize) -> Option<u32> {
        if n == 0 {
            return None;
        }
        let total = nu.weight() + lambdas.iter().map(Partition::weight).sum::<u64>();
        if total == 0 || !total.is_multiple_of(n as u64) {
            return None;
        }
        u32::try_from(n as u64 + total / n as u64).ok()
    }

    /// Vector Schubert problem: `k` copies of the single box.
    pub fn vector(k: usize, nu: Partition, n: usize, d: u32, c: usize) -> Self {
        SchubertProblem {
            lambdas: vec![Partition::rectangle(1, 1); k],
            nu,
            n,
            d,
            c,
        }
    }

    pub fn is_vector_problem(&self) -> bool {
        self.lambdas.iter().all(|l| l.parts() == [1])
    }

    /// Largest `c` for which the pairing convention holds.
    pub fn max_pairs(&self) -> usize {
        let mut c = 0;
        while 2 * c + 1 < self.lambdas.len() && self.lambdas[2 * c] == self.lambdas[2 * c + 1] {
            c += 1;
        }
        c
    }

    pub fn with_pairs(&self, c: usize) -> Self {
        SchubertProblem { c, ..self.clone() }
    }

    /// `m = Σ_{i<c} |lambda[2i+1]|`, the exponent of the sign in the transpose duality.
    pub fn paired_weight(&self) -> u64 {
        (0..self.c.min(self.lambdas.len() / 2))
            .map(|i| self.lambdas[2 * i + 1].weight())
            .sum()
    }

    /// Appends `nu` as an extra factor and replaces it with the empty partition.
    pub fn reduced(&self) -> Self {
        let mut lambdas = self.lambdas.clone();
        lambdas.push(self.nu.clone());
        SchubertProblem {
            lambdas,
            nu: Partition::empty(),
            ..self.clone()
        }
    }

    /// The problem in `Gr(d-n, d)` with every partition transposed.
    pub fn transposed(&self) -> Self {
        SchubertProblem {
            lambdas: self.lambdas.iter().map(Partition::conjugate).collect(),
            nu: self.nu.conjugate(),
            n: (self.d as usize).saturating_sub(self.n),
            d: self.d,
            c: self.c,
        }
    }

    /// `true` if every partition is self-conjugate and the dual lives in the
    /// same Grassmannian.
    pub fn is_self_dual(&self) -> bool {
        self.d as usize == 2 * self.n
            && self.nu.is_self_conjugate()
            && self.lambdas.iter().all(Partition::is_self_conjugate)
    }
}
