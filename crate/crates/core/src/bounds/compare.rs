//! Competing bounds for vector Schubert problems.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

use super::BoundsError;
use crate::symfunc::factorial;

/// Sign-imbalance of the `p x m` rectangle, the topological degree bound for
/// the vector problem in `Gr(p, m+p)`. Zero when `m + p` is even, otherwise
///
/// `(mp/2)! / ((m+p-1)/2)! · ∏_{i=1}^{p-1} i! (m-i)! / ((m-p+2i)! ((m-p-1)/2+i)!)`.
pub fn white_bound(m: u32, p: u32) -> Result<BigInt, BoundsError> {
    if p == 0 || p > m {
        return Err(BoundsError::ImbalanceRange { m, p });
    }
    if (m + p).is_multiple_of(2) {
        return Ok(BigInt::zero());
    }
    let frac = |num: BigInt, den: BigInt| BigRational::new(num, den);
    let half = (m - p - 1) / 2;
    let mut value = frac(factorial(m * p / 2), factorial((m + p - 1) / 2));
    for i in 1..p {
        value *= frac(
            factorial(i) * factorial(m - i),
            factorial(m - p + 2 * i) * factorial(half + i),
        );
    }
    assert!(value.is_integer(), "sign-imbalance must be an integer, got {value}");
    Ok(value.to_integer())
}

/// `r(k, n, s)`: coefficient of `x^{k-n} y^{n-1}` in `(x+y)^{k-1-2s} (x^2+y^2)^s`.
pub fn hhs_count_r(k: u32, n: u32, s: u32) -> Result<BigInt, BoundsError> {
    if n == 0 || n > k || 2 * s > k - 1 {
        return Err(BoundsError::RealCountRange { k, n, s });
    }
    let linear = k - 1 - 2 * s;
    // y^{2j} from the quadratic factor, y^{n-1-2j} from the linear one
    let total = (0..=s)
        .filter(|&j| 2 * j < n && n - 1 - 2 * j <= linear)
        .map(|j| {
            binomial(BigInt::from(s), BigInt::from(j)) * binomial(BigInt::from(linear), BigInt::from(n - 1 - 2 * j))
        })
        .fold(BigInt::zero(), |a, b| a + b);
    Ok(total)
}

/// The sharp real-solution count for `c` conjugate pairs: `r(k, n, c)` when
/// `2c < k`, `r(k, n, c-1)` when `2c = k`.
pub fn hhs_sharp_bound(k: u32, n: u32, c: u32) -> Result<BigInt, BoundsError> {
    match (2 * c).cmp(&k) {
        std::cmp::Ordering::Less => hhs_count_r(k, n, c),
        std::cmp::Ordering::Equal if c > 0 => hhs_count_r(k, n, c - 1),
        _ => Err(BoundsError::RealCountRange { k, n, s: c }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExponentVector, SparsePoly};

    /// Expands the two-variable product directly.
    fn r_oracle(k: u32, n: u32, s: u32) -> BigInt {
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let lin = &x + &y;
        let quad = &(&x * &x) + &(&y * &y);
        let unbounded = ExponentVector::unbounded(2);
        let prod = &lin.pow_pruned(k - 1 - 2 * s, &unbounded).unwrap() * &quad.pow_pruned(s, &unbounded).unwrap();
        prod.coeff(&vec![k - n, n - 1].into()).unwrap()
    }

    /// Sign-imbalance by brute force: signed count of standard tableaux of the
    /// rectangle, sign of the reading word of each.
    fn white_oracle(m: u32, p: u32) -> i64 {
        fn go(shape: &mut Vec<u32>, cols: u32, next: u32, word: &mut Vec<(usize, u32, u32)>, total: &mut i64) {
            let size: u32 = shape.iter().sum();
            if size == cols * shape.len() as u32 {
                // row reading word: rows top to bottom, left to right
                let mut cells = word.clone();
                cells.sort_by_key(|&(r, c, _)| (r, c));
                let w: Vec<u32> = cells.iter().map(|&(_, _, v)| v).collect();
                let inv = (0..w.len())
                    .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| w[i] > w[j])
                    .count();
                *total += if inv % 2 == 0 { 1 } else { -1 };
                return;
            }
            for r in 0..shape.len() {
                if shape[r] < cols && (r == 0 || shape[r - 1] > shape[r]) {
                    word.push((r, shape[r], next));
                    shape[r] += 1;
                    go(shape, cols, next + 1, word, total);
                    shape[r] -= 1;
                    word.pop();
                }
            }
        }
        let mut total = 0;
        go(&mut vec![0; p as usize], m, 1, &mut Vec::new(), &mut total);
        total.abs()
    }

    #[test]
    fn white_examples() {
        assert_eq!(white_bound(3, 3).unwrap(), BigInt::zero());
        assert_eq!(white_bound(5, 3).unwrap(), BigInt::zero());
        assert_eq!(white_bound(6, 3).unwrap(), BigInt::from(12));
        assert!(white_bound(2, 3).is_err());
        assert!(white_bound(3, 0).is_err());
    }

    #[test]
    fn white_matches_signed_tableaux_count() {
        // a single row has imbalance 1 whatever the parity, so the closed form starts at p = 2
        for p in 2..=3 {
            for m in p..=6 {
                if m * p > 18 {
                    continue;
                }
                assert_eq!(
                    white_bound(m, p).unwrap(),
                    BigInt::from(white_oracle(m, p)),
                    "m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn white_zero_iff_even() {
        for p in 1..=6 {
            for m in p..=12 {
                let w = white_bound(m, p).unwrap();
                assert_eq!(w.is_zero(), (m + p) % 2 == 0, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn r_examples() {
        let row: Vec<BigInt> = (0..=6).map(|s| hhs_count_r(14, 3, s).unwrap()).collect();
        let expected: Vec<BigInt> = [78, 56, 38, 24, 14, 8, 6].into_iter().map(BigInt::from).collect();
        assert_eq!(row, expected);
        let row: Vec<BigInt> = (0..=5).map(|s| hhs_count_r(11, 4, s).unwrap()).collect();
        let expected: Vec<BigInt> = [120, 64, 32, 16, 8, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(row, expected);
        for k in 1..=12u32 {
            for n in 1..=k {
                assert_eq!(
                    hhs_count_r(k, n, 0).unwrap(),
                    binomial(BigInt::from(k - 1), BigInt::from(n - 1))
                );
            }
        }
    }

    #[test]
    fn r_matches_expansion() {
        for k in 1..=14u32 {
            for n in 1..=k {
                for s in 0..=(k - 1) / 2 {
                    assert_eq!(hhs_count_r(k, n, s).unwrap(), r_oracle(k, n, s), "k={k} n={n} s={s}");
                }
            }
        }
    }

    #[test]
    fn r_range_errors() {
        assert!(hhs_count_r(14, 3, 7).is_err());
        assert!(hhs_count_r(4, 5, 0).is_err());
        assert!(hhs_count_r(4, 0, 0).is_err());
    }

    #[test]
    fn sharp_bound_uses_previous_s_when_all_points_paired() {
        let row: Vec<BigInt> = (0..=7).map(|c| hhs_sharp_bound(14, 3, c).unwrap()).collect();
        let expected: Vec<BigInt> = [78, 56, 38, 24, 14, 8, 6, 6].into_iter().map(BigInt::from).collect();
        assert_eq!(row, expected);
        assert!(hhs_sharp_bound(14, 3, 8).is_err());
    }

    #[test]
    fn r_is_monotone_in_s() {
        for k in 2..=20u32 {
            for n in 1..=k {
                for s in 1..=(k - 1) / 2 {
                    assert!(hhs_count_r(k, n, s - 1).unwrap() >= hhs_count_r(k, n, s).unwrap());
                }
            }
        }
    }
}
