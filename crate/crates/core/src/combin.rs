//! Exact binomials and Krawtchouk values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// C(a, b), taken to be 0 when b < 0, b > a or a < 0.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_q(a: i64, b: i64) -> Rational {
    Rational::from_integer(binom(a, b))
}

/// q^e for any integer e, as an exact rational.
pub fn pow_q(q: u32, e: i64) -> Rational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// K_k(x) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j).
pub fn krawtchouk(q: u32, n: usize, k: usize, x: usize) -> BigInt {
    let (n, k, x) = (n as i64, k as i64, x as i64);
    let qm1 = BigInt::from(q - 1);
    (0..=k).fold(BigInt::zero(), |acc, j| {
        let term = qm1.pow((k - j) as u32) * binom(x, j) * binom(n - x, k - j);
        acc + sign(j) * term
    })
}

/// Classical MacWilliams transform: weight distribution of the dual of a
/// code of dimension `k` with distribution `w`.
pub fn macwilliams(q: u32, n: usize, k: usize, w: &[BigInt]) -> Vec<BigRational> {
    let scale = pow_q(q, -(k as i64));
    (0..=n)
        .map(|i| {
            let s = w
                .iter()
                .enumerate()
                .fold(BigInt::zero(), |acc, (j, wj)| acc + wj * krawtchouk(q, n, i, j));
            Rational::from_integer(s) * &scale
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, 0), BigInt::one());
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn krawtchouk_low_orders() {
        for q in [2u32, 3, 5] {
            for n in 1..8usize {
                for x in 0..=n {
                    assert_eq!(krawtchouk(q, n, 0, x), BigInt::one());
                    let k1 = BigInt::from(n as i64 * (q as i64 - 1) - q as i64 * x as i64);
                    assert_eq!(krawtchouk(q, n, 1, x), k1);
                }
                let total = (0..=n).fold(BigInt::zero(), |a, k| a + krawtchouk(q, n, k, 0));
                assert_eq!(total, BigInt::from(q).pow(n as u32));
            }
        }
    }

    #[test]
    fn macwilliams_of_repetition_code() {
        // [3,1] binary repetition: dual is the even-weight code
        let w = vec![1, 0, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>();
        let dual = macwilliams(2, 3, 1, &w);
        let expect: Vec<BigRational> = [1, 0, 3, 0].iter().map(|&v| Rational::from_integer(v.into())).collect();
        assert_eq!(dual, expect);
    }
}
