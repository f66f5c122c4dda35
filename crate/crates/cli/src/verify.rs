//! Verification suites behind `oscbound verify`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oscbound::bounds::{
    bound_table, hhs_count_r, reduced_bound, signature_q, signature_q_via_expansion, transpose_dual,
    verify_indefinite_counterexample, white_bound,
};
use oscbound::characters::{character_value, ProductClass};
use oscbound::partitions::{Partition, SchubertProblem};
use oscbound::symfunc::{
    factorial, lr_multiplicity, murnaghan_nakayama, schur_poly, schur_poly_bialternant, CycleType,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn line(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckLine {
    CheckLine {
        suite,
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn bound_row(problem: &SchubertProblem, cmax: usize) -> (Vec<BigInt>, Vec<Option<BigInt>>) {
    match bound_table(problem, 0..=cmax, false) {
        Ok(reports) => (
            reports.iter().map(|r| r.lower_bound.clone()).collect(),
            reports.iter().map(|r| r.hhs_bound.clone()).collect(),
        ),
        Err(_) => (Vec::new(), Vec::new()),
    }
}

/// The printed tables of bounds `|a|` and the competing counts.
pub fn published_tables() -> Vec<CheckLine> {
    const S: &str = "tables";
    let mut out = Vec::new();
    // (name, k, nu, n, d, printed |a| for c = 0, 1, ...)
    type Row = (&'static str, usize, Vec<u32>, usize, u32, Vec<i64>);
    let vector_rows: [Row; 4] = [
        ("Gr(3,6)", 9, vec![], 3, 6, vec![42, 0, 2, 0, 6]),
        ("Gr(3,8)", 15, vec![], 3, 8, vec![6006, 858, 198, 42, 6, 10, 10, 70]),
        (
            "Gr(3,9)",
            18,
            vec![],
            3,
            9,
            vec![87516, 15444, 3432, 792, 180, 60, 0, 0, 140, 420],
        ),
        ("Gr(4,8)", 7, vec![3, 3, 3], 4, 8, vec![20, 0, 4, 0]),
    ];
    for (name, k, nu, n, d, want) in vector_rows {
        let problem = SchubertProblem::vector(k, p(&nu), n, d, 0);
        let (got, _) = bound_row(&problem, want.len() - 1);
        out.push(line(
            S,
            format!("{name} |a|"),
            got == ints(&want),
            format!("got {}", join(&got)),
        ));
    }

    // vector problems in Gr(n, k+1) with nu = (k-n)^(n-1)
    let hhs_rows: [(usize, usize, Vec<i64>, Vec<i64>); 2] = [
        (
            14,
            3,
            vec![78, 54, 34, 18, 6, 2, 6, 6],
            vec![78, 56, 38, 24, 14, 8, 6, 6],
        ),
        (11, 4, vec![120, 48, 8, 8, 8, 0], vec![120, 64, 32, 16, 8, 0]),
    ];
    for (k, n, want_a, want_r) in hhs_rows {
        let nu = Partition::rectangle(n - 1, (k - n) as u32);
        let problem = SchubertProblem::vector(k, nu, n, k as u32 + 1, 0);
        let (got, hhs) = bound_row(&problem, want_a.len() - 1);
        out.push(line(
            S,
            format!("k={k} n={n} |a|"),
            got == ints(&want_a),
            format!("got {}", join(&got)),
        ));
        let hhs: Vec<BigInt> = hhs.into_iter().map(|h| h.unwrap_or_else(|| BigInt::from(-1))).collect();
        out.push(line(
            S,
            format!("k={k} n={n} r"),
            hhs == ints(&want_r),
            format!("got {}", join(&hhs)),
        ));
    }

    for ((m, rows), want) in [((3, 3), 0), ((5, 3), 0), ((6, 3), 12)] {
        let got = white_bound(m, rows).ok();
        out.push(line(
            S,
            format!("sign-imbalance m={m} p={rows}"),
            got == Some(BigInt::from(want)),
            format!("got {}", got.map_or("error".into(), |g| g.to_string())),
        ));
    }
    out
}

/// Characters of `S_k` on `V^{⊗k}` against Murnaghan–Nakayama, and orthogonality.
pub fn frobenius(max_k: u32) -> Vec<CheckLine> {
    const S: &str = "frobenius";
    let mut out = Vec::new();
    for k in 1..=max_k {
        let shapes = Partition::all_of_weight(k);
        let classes = CycleType::all(k);
        let mut mismatches = Vec::new();
        let mut table = Vec::new();
        for mu in &shapes {
            let row: Vec<BigInt> = classes
                .iter()
                .map(|cl| {
                    let v = character_value(&ProductClass::vector(cl.clone()), mu, k as usize)
                        .map(|v| v.value)
                        .unwrap_or_default();
                    let mn = murnaghan_nakayama(mu, cl).unwrap_or_default();
                    if v != mn {
                        mismatches.push(format!("mu=({mu}) class {cl}: {v} vs {mn}"));
                    }
                    v
                })
                .collect();
            table.push(row);
        }
        out.push(line(
            S,
            format!("k={k} character table"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{} values", shapes.len() * classes.len())
            } else {
                mismatches.join("; ")
            },
        ));
        let kf = factorial(k);
        let orthogonal = table.iter().enumerate().all(|(i, a)| {
            table.iter().enumerate().all(|(j, b)| {
                let s = classes
                    .iter()
                    .zip(a.iter().zip(b))
                    .fold(BigInt::zero(), |acc, (cl, (x, y))| acc + cl.class_size() * x * y);
                s == if i == j { kf.clone() } else { BigInt::zero() }
            })
        });
        out.push(line(S, format!("k={k} orthogonality"), orthogonal, ""));
    }
    out
}

pub fn counterexample() -> Vec<CheckLine> {
    verify_indefinite_counterexample()
        .checks
        .into_iter()
        .map(|c| line("counterexample", c.name, c.passed, c.detail))
        .collect()
}

fn random_partition(rng: &mut ChaCha8Rng, max_weight: u32, rows: usize, cols: u32) -> Partition {
    let w = rng.gen_range(0..=max_weight);
    let pool: Vec<Partition> = Partition::all_of_weight(w)
        .into_iter()
        .filter(|l| l.fits_in(rows, cols))
        .collect();
    pool.choose(rng).cloned().unwrap_or_else(Partition::empty)
}

fn paired_factors(rng: &mut ChaCha8Rng, k: usize, n: usize, max_weight: u32, cols: u32) -> (Vec<Partition>, usize) {
    let c = rng.gen_range(0..=k / 2);
    let mut lambdas = Vec::with_capacity(k);
    for _ in 0..c {
        let l = random_partition(rng, max_weight, n, cols);
        lambdas.push(l.clone());
        lambdas.push(l);
    }
    while lambdas.len() < k {
        lambdas.push(random_partition(rng, max_weight, n, cols));
    }
    (lambdas, c)
}

/// Random instances with `n <= 4`, at most 6 factors of weight at most 4:
/// LR against `q(0)`, both routes for `q(c)`, both Schur constructions.
pub fn oracles(instances: usize, seed: u64) -> Vec<CheckLine> {
    const S: &str = "oracles";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lr_fail, mut route_fail, mut schur_fail) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..instances {
        let n = rng.gen_range(1..=4usize);
        let k = rng.gen_range(1..=6usize);
        let (lambdas, c) = paired_factors(&mut rng, k, n, 4, u32::MAX);
        let total: u64 = lambdas.iter().map(Partition::weight).sum();
        let shapes: Vec<Partition> = Partition::all_of_weight(total as u32)
            .into_iter()
            .filter(|m| m.len() <= n)
            .collect();
        let mu = shapes.choose(&mut rng).cloned().unwrap_or_else(Partition::empty);
        let q0 = signature_q(&lambdas, &mu, 0, n).map(|v| v.value).ok();
        if q0 != Some(lr_multiplicity(&lambdas, &mu, n)) {
            lr_fail.push(i);
        }
        let a = signature_q(&lambdas, &mu, c, n).ok();
        let b = signature_q_via_expansion(&lambdas, &mu, c, n).ok();
        if a.is_none() || a != b {
            route_fail.push(i);
        }
        if lambdas
            .iter()
            .any(|l| schur_poly_bialternant(l, n).ok() != Some(schur_poly(l, n)))
        {
            schur_fail.push(i);
        }
    }
    let report = |name: &str, fails: Vec<usize>| {
        line(
            S,
            name,
            fails.is_empty(),
            if fails.is_empty() {
                format!("{instances} instances")
            } else {
                format!("instances {fails:?}")
            },
        )
    };
    vec![
        report("q at c=0 equals Littlewood-Richardson", lr_fail),
        report("antisymmetrization equals Schur expansion", route_fail),
        report("tableaux Schur equals bialternant", schur_fail),
    ]
}

/// A random valid problem with `d <= 6`.
fn random_problem(rng: &mut ChaCha8Rng) -> SchubertProblem {
    loop {
        let d = rng.gen_range(2..=6u32);
        let n = rng.gen_range(1..d) as usize;
        let cols = d - n as u32;
        let area = n as u32 * cols;
        let k = rng.gen_range(1..=5usize);
        let (lambdas, c) = paired_factors(rng, k, n, area.min(4), cols);
        let used: u64 = lambdas.iter().map(Partition::weight).sum();
        if used > u64::from(area) {
            continue;
        }
        let Some(nu) = Partition::in_box(area - used as u32, n, cols).choose(rng).cloned() else {
            continue;
        };
        let problem = SchubertProblem { lambdas, nu, n, d, c };
        if problem.validate().is_ok() {
            return problem;
        }
    }
}

fn a_of(problem: &SchubertProblem) -> Option<BigInt> {
    let mu = problem.mu().ok()?;
    signature_q(&problem.lambdas, &mu, problem.c, problem.n)
        .ok()
        .map(|v| v.value)
}

/// Transpose duality, reduction, parity and `|q(c)| <= q(0)` on random problems.
pub fn dualities(instances: usize, seed: u64) -> Vec<CheckLine> {
    const S: &str = "dualities";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails: [Vec<usize>; 4] = Default::default();
    for i in 0..instances {
        let problem = random_problem(&mut rng);
        let (Some(a), Some(a0)) = (a_of(&problem), a_of(&problem.with_pairs(0))) else {
            fails.iter_mut().for_each(|f| f.push(i));
            continue;
        };
        let dual_ok = transpose_dual(&problem)
            .ok()
            .and_then(|(dual, sign)| a_of(&dual).map(|ad| ad * sign))
            == Some(a.clone());
        let reduced_ok = reduced_bound(&problem).ok() == Some(a.clone());
        let parity_ok = (&a - &a0).is_even();
        let bound_ok = a.abs() <= a0;
        for (f, ok) in fails.iter_mut().zip([dual_ok, reduced_ok, parity_ok, bound_ok]) {
            if !ok {
                f.push(i);
            }
        }
    }
    let names = [
        "transpose identity a(p) = (-1)^m a(p')",
        "reduction a(lambda, nu, c) = a(lambda + [nu], 0, c)",
        "parity q(c) = q(0) mod 2",
        "|q(c)| <= q(0)",
    ];
    names
        .into_iter()
        .zip(fails)
        .map(|(name, f)| {
            let detail = if f.is_empty() {
                format!("{instances} problems")
            } else {
                format!("problems {f:?}")
            };
            line(S, name, f.is_empty(), detail)
        })
        .collect()
}

/// `r(k, n, s-1) >= r(k, n, s)` for `k <= max_k`.
pub fn monotonicity(max_k: u32) -> CheckLine {
    let mut bad = Vec::new();
    for k in 2..=max_k {
        for n in 1..=k {
            for s in 1..=(k - 1) / 2 {
                if hhs_count_r(k, n, s - 1).ok() < hhs_count_r(k, n, s).ok() {
                    bad.push(format!("({k},{n},{s})"));
                }
            }
        }
    }
    line(
        "tables",
        format!("r monotone in s for k <= {max_k}"),
        bad.is_empty(),
        bad.join(" "),
    )
}
