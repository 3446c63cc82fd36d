//! Exact integer and rational arithmetic plus the small number-theoretic
//! kernels the counting formulas are built from.
//!
//! Nothing here ever rounds: counts are `ExactInt` (arbitrary-precision
//! integers) and weighted intermediate sums are `ExactRat` (arbitrary-
//! precision rationals, kept reduced with a positive denominator by the
//! backing type).  Formula transliteration relies on the conventions
//! * `binomial(n, k) = 0` for `k < 0`, `k > n` or `n < 0`, and
//! * `multinomial(n, parts) = 0` for any infeasible distribution,
//!
//! so that sums over partially infeasible index ranges can simply include
//! every term.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// Small-integer constant as an `ExactInt`.
pub fn int(x: i64) -> ExactInt {
    BigInt::from(x)
}

/// Promotes an integer to a rational.
pub fn rat(x: ExactInt) -> ExactRat {
    BigRational::from_integer(x)
}

/// Small-integer constant as an `ExactRat`.
pub fn rat_i(x: i64) -> ExactRat {
    rat(int(x))
}

/// `base^exp` for a small base.
pub fn pow_int(base: i64, exp: u32) -> ExactInt {
    int(base).pow(exp)
}

/// `base^exp` with a possibly negative exponent; `base` must be nonzero when
/// `exp < 0`.
pub fn pow_rat(base: &ExactRat, exp: i32) -> ExactRat {
    if exp >= 0 {
        let num = base.numer().pow(exp as u32);
        let den = base.denom().pow(exp as u32);
        BigRational::new(num, den)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        let num = base.numer().pow((-exp) as u32);
        let den = base.denom().pow((-exp) as u32);
        BigRational::new(den, num)
    }
}

/// Converts a rational that is known to be a whole number, reporting the
/// context on failure.
pub fn expect_int(value: &ExactRat, context: &str) -> Result<ExactInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            context: context.to_string(),
            value: value.clone(),
        })
    }
}

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!` with a process-wide cache; safe under concurrent use.
pub fn factorial(n: u64) -> ExactInt {
    let n = n as usize;
    {
        let cache = FACTORIALS.read().unwrap();
        if let Some(v) = cache.get(n) {
            return v.clone();
        }
    }
    let mut cache = FACTORIALS.write().unwrap();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    while cache.len() <= n {
        let next = cache.last().unwrap() * BigInt::from(cache.len());
        cache.push(next);
    }
    cache[n].clone()
}

/// `n!` for a possibly negative argument; `None` marks a term that vanishes.
pub(crate) fn factorial_opt(n: i64) -> Option<ExactInt> {
    if n < 0 {
        None
    } else {
        Some(factorial(n as u64))
    }
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling(n: u64, k: u64) -> ExactInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n as i64 - i as i64);
    }
    acc
}

/// Binomial coefficient, total: zero whenever the selection is infeasible
/// (`k < 0`, `k > n`, or `n < 0`).
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

/// Multinomial `n! / (parts[0]! ... parts[m]! (n - sum)!)`, total: zero when
/// the distribution is impossible (`n < 0`, a negative part, or sum > n).
pub fn multinomial(n: i64, parts: &[i64]) -> ExactInt {
    if n < 0 || parts.iter().any(|&p| p < 0) {
        return BigInt::zero();
    }
    let sum: i64 = parts.iter().sum();
    if sum > n {
        return BigInt::zero();
    }
    let mut den = factorial((n - sum) as u64);
    for &p in parts {
        den *= factorial(p as u64);
    }
    factorial(n as u64) / den
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Least common multiple of a slice; 1 for an empty slice.
pub fn lcm_all(xs: &[u64]) -> u64 {
    xs.iter().fold(1, |acc, &x| lcm(acc, x))
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Moebius function, in {-1, 0, 1}.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius requires n >= 1");
    let fs = factorize(n);
    if fs.iter().any(|&(_, e)| e > 1) {
        0
    } else if fs.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Jordan totient `J_k(n) = n^k prod_{p|n} (1 - p^{-k})`.
///
/// `J_0(n)` degenerates to the indicator of `n = 1` and `J_1 = euler_phi`;
/// both fall out of the product form without special cases.
pub fn jordan_totient(k: u32, n: u64) -> ExactInt {
    assert!(n >= 1, "jordan_totient requires n >= 1");
    let mut acc = BigInt::one();
    for (p, e) in factorize(n) {
        let pk = pow_int(p as i64, k);
        acc *= pow_int(p as i64, k * (e - 1)) * (&pk - BigInt::one());
    }
    acc
}

/// Exact division helper for places where divisibility is an invariant of the
/// surrounding combinatorics, not of user input.
pub(crate) fn exact_div(num: ExactInt, den: &ExactInt) -> ExactInt {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    assert!(r.is_zero(), "non-exact division: {num} / {den}");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(20), int(2432902008176640000));
    }

    #[test]
    fn factorial_recurrence_holds() {
        for n in 1..=300u64 {
            assert_eq!(factorial(n), factorial(n - 1) * int(n as i64));
        }
    }

    #[test]
    fn binomial_edges_and_symmetry() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(4, 7), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(-2, 0), int(0));
        for n in 0..=40i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if k > 0 {
                    assert_eq!(
                        binomial(n, k),
                        binomial(n - 1, k - 1) + binomial(n - 1, k)
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_row_sums_are_powers_of_two() {
        for n in 0..=60i64 {
            let sum: ExactInt = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, pow_int(2, n as u32));
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(4, &[2, 2]), int(6));
        assert_eq!(multinomial(4, &[2]), int(6));
        assert_eq!(multinomial(3, &[1, 1, 1]), int(6));
        assert_eq!(multinomial(3, &[2, 2]), int(0));
        assert_eq!(multinomial(-1, &[]), int(0));
        assert_eq!(multinomial(0, &[]), int(1));
        assert_eq!(multinomial(5, &[-1, 2]), int(0));
    }

    #[test]
    fn multinomial_is_iterated_binomial() {
        for n in 0..=12i64 {
            for a in 0..=n {
                for b in 0..=(n - a) {
                    assert_eq!(
                        multinomial(n, &[a, b]),
                        binomial(n, a) * binomial(n - a, b)
                    );
                }
            }
        }
    }

    #[test]
    fn totient_examples_and_divisor_sum() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        // sum_{d|n} phi(d) = n
        for n in 1..=1000u64 {
            let sum: u64 = (1..=n).filter(|d| n % d == 0).map(euler_phi).sum();
            assert_eq!(sum, n);
        }
    }

    #[test]
    fn totient_counts_coprime_residues() {
        for n in 1..=200u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), direct);
        }
    }

    #[test]
    fn mobius_examples_and_divisor_sum() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        // sum_{d|n} mu(d) = [n = 1]
        for n in 1..=1000u64 {
            let sum: i64 = (1..=n).filter(|d| n % d == 0).map(mobius).sum();
            assert_eq!(sum, i64::from(n == 1));
        }
    }

    #[test]
    fn jordan_totient_matches_pair_counts() {
        // J_2(n) counts pairs (a, b) in [1, n]^2 with gcd(a, b, n) = 1.
        for n in 1..=60u64 {
            let mut direct = 0i64;
            for a in 1..=n {
                for b in 1..=n {
                    if gcd(gcd(a, b), n) == 1 {
                        direct += 1;
                    }
                }
            }
            assert_eq!(jordan_totient(2, n), int(direct));
        }
        assert_eq!(jordan_totient(2, 4), int(12));
        assert_eq!(jordan_totient(0, 1), int(1));
        assert_eq!(jordan_totient(0, 5), int(0));
    }

    #[test]
    fn jordan_totient_degenerates_to_phi() {
        for n in 1..=300u64 {
            assert_eq!(jordan_totient(1, n), int(euler_phi(n) as i64));
        }
    }

    #[test]
    fn prime_detection() {
        let primes: Vec<u64> = (2..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn lcm_and_falling() {
        assert_eq!(lcm_all(&[]), 1);
        assert_eq!(lcm_all(&[2, 3, 6]), 6);
        assert_eq!(lcm_all(&[4, 6]), 12);
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(3, 0), int(1));
        assert_eq!(falling(2, 3), int(0));
    }

    #[test]
    fn rational_normalization_and_powers() {
        let x = ExactRat::new(int(4), int(-6));
        assert_eq!(x.numer(), &int(-2));
        assert_eq!(x.denom(), &int(3));
        assert_eq!(pow_rat(&rat_i(3), -2), ExactRat::new(int(1), int(9)));
        assert_eq!(pow_rat(&rat_i(-2), 3), rat_i(-8));
        assert_eq!(pow_rat(&rat_i(7), 0), rat_i(1));
    }

    #[test]
    fn expect_int_accepts_and_rejects() {
        assert_eq!(expect_int(&rat_i(9), "t").unwrap(), int(9));
        assert!(expect_int(&ExactRat::new(int(1), int(2)), "t").is_err());
    }

    proptest::proptest! {
        #[test]
        fn prop_binomial_product_identity(n in 0i64..40, k in 0i64..40, j in 0i64..40) {
            // C(n,k) C(k,j) = C(n,j) C(n-j, k-j)
            let lhs = binomial(n, k) * binomial(k, j);
            let rhs = binomial(n, j) * binomial(n - j, k - j);
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_totient_is_multiplicative(a in 1u64..80, b in 1u64..80) {
            if gcd(a, b) == 1 {
                proptest::prop_assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
            }
        }

        #[test]
        fn prop_jordan_divisor_sum(n in 1u64..120) {
            // sum_{d|n} J_2(d) = n^2
            let sum: ExactInt = (1..=n).filter(|d| n % d == 0).map(|d| jordan_totient(2, d)).sum();
            proptest::prop_assert_eq!(sum, pow_int(n as i64, 2));
        }
    }
}
