//! A pair of commuting operators, selfadjoint for an indefinite Hermitian form
//! of signature 2, that share only one eigenvector.
//!
//! The operators are multiplication by `x` and `y` on `C[x,y]/(x^2 = y^2, xy = 0)`
//! in the basis `(1, x, x^2, y)`, and the form comes from the residue pairing.
//! Everything here is integer arithmetic on 4x4 matrices.

type Matrix = [[i64; 4]; 4];

pub const X: Matrix = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]];
pub const Y: Matrix = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0]];
pub const J: Matrix = [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]];

const ZERO: Matrix = [[0; 4]; 4];

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = ZERO;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn transpose(a: &Matrix) -> Matrix {
    let mut out = ZERO;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Rank of an integer matrix by fraction-free elimination.
fn rank(rows: &[[i64; 4]]) -> usize {
    let mut m: Vec<[i128; 4]> = rows.iter().map(|r| r.map(i128::from)).collect();
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                let pivot_row = m[rank];
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x = *x * a - p * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn kernel_dim(rows: &[[i64; 4]]) -> usize {
    4 - rank(rows)
}

/// Characteristic polynomial `det(t - A)`, coefficients from `t^4` down, by
/// Faddeev–LeVerrier. Every division is exact.
fn char_poly(a: &Matrix) -> [i64; 5] {
    let mut coeffs = [0i64; 5];
    coeffs[0] = 1;
    let mut m = ZERO;
    for k in 1..=4 {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        m = next;
        let am = mul(a, &m);
        let trace: i64 = (0..4).map(|i| am[i][i]).sum();
        assert_eq!(trace % k as i64, 0);
        coeffs[k] = -trace / k as i64;
    }
    coeffs
}

fn sign_changes(coeffs: impl IntoIterator<Item = i64>) -> usize {
    let signs: Vec<i64> = coeffs.into_iter().filter(|&c| c != 0).map(i64::signum).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Signature of a real symmetric matrix.
///
/// All roots of the characteristic polynomial are real, so Descartes' rule of
/// signs counts the positive and negative eigenvalues exactly.
pub fn signature(a: &Matrix) -> i64 {
    let cp = char_poly(a);
    let positive = sign_changes(cp);
    // p(-t): flip the sign of odd-degree coefficients
    let negative = sign_changes(
        cp.iter()
            .enumerate()
            .map(|(i, &c)| if (4 - i) % 2 == 1 { -c } else { c }),
    );
    positive as i64 - negative as i64
}

fn det(a: &Matrix) -> i64 {
    char_poly(a)[4]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub checks: Vec<Check>,
    pub signature: i64,
    pub kernel_x: usize,
    pub kernel_y: usize,
    pub kernel_common: usize,
}

impl CounterexampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks every claimed property of the 4x4 example.
pub fn verify_indefinite_counterexample() -> CounterexampleReport {
    let x2 = mul(&X, &X);
    let y2 = mul(&Y, &Y);
    let x3 = mul(&x2, &X);
    let y3 = mul(&y2, &Y);
    let xy = mul(&X, &Y);
    let yx = mul(&Y, &X);
    let signature = signature(&J);
    let kernel_x = kernel_dim(&X);
    let kernel_y = kernel_dim(&Y);
    let stacked: Vec<[i64; 4]> = X.iter().chain(Y.iter()).copied().collect();
    let kernel_common = kernel_dim(&stacked);
    let determinant = det(&J);

    let check = |name, passed, detail: String| Check { name, passed, detail };
    // x and y are real, so conjugation is the identity on them
    let checks = vec![
        check("x^2 = y^2", x2 == y2, format!("{x2:?}")),
        check("x^3 = 0", x3 == ZERO, format!("{x3:?}")),
        check("y^3 = 0", y3 == ZERO, format!("{y3:?}")),
        check("xy = 0", xy == ZERO, format!("{xy:?}")),
        check("yx = 0", yx == ZERO, format!("{yx:?}")),
        check("J is Hermitian", transpose(&J) == J, String::new()),
        check("J is nondegenerate", determinant != 0, format!("det J = {determinant}")),
        check(
            "x^t J = J conj(x)",
            mul(&transpose(&X), &J) == mul(&J, &X),
            String::new(),
        ),
        check(
            "y^t J = J conj(y)",
            mul(&transpose(&Y), &J) == mul(&J, &Y),
            String::new(),
        ),
        check(
            "signature of J is 2",
            signature == 2,
            format!("signature = {signature}"),
        ),
        check("dim ker x = 2", kernel_x == 2, format!("{kernel_x}")),
        check("dim ker y = 2", kernel_y == 2, format!("{kernel_y}")),
        check(
            "dim (ker x ∩ ker y) = 1",
            kernel_common == 1,
            format!("{kernel_common}"),
        ),
    ];
    CounterexampleReport {
        checks,
        signature,
        kernel_x,
        kernel_y,
        kernel_common,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let r = verify_indefinite_counterexample();
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(r.signature, 2);
        assert_eq!(r.kernel_common, 1);
        assert_eq!((r.kernel_x, r.kernel_y), (2, 2));
    }

    #[test]
    fn signature_of_diagonal_matrices() {
        let d = [[3, 0, 0, 0], [0, -1, 0, 0], [0, 0, 2, 0], [0, 0, 0, -5]];
        assert_eq!(signature(&d), 0);
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(signature(&id), 4);
        assert_eq!(det(&id), 1);
        // hyperbolic plane plus two positive squares
        assert_eq!(signature(&J), 2);
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&ZERO), 0);
        assert_eq!(rank(&J), 4);
        assert_eq!(rank(&X), 2);
        assert_eq!(rank(&[[1, 2, 3, 4], [2, 4, 6, 8]]), 1);
    }
}
