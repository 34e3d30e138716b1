//! Small integer helpers shared by the surd and radical code.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Primes below this bound are divided out when extracting square factors.
const TRIAL_BOUND: u32 = 1 << 12;

fn small_primes() -> &'static [u32] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Exact square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Splits `n = k^2 * m`, removing every square factor built from small primes
/// and, when the cofactor is itself a perfect square, that too.
///
/// `m` is squarefree whenever `n` has no repeated prime factor above the trial
/// bound; value comparisons never rely on `m` being squarefree.
pub fn split_square(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::one(), BigUint::zero());
    }
    if let Some(s) = exact_sqrt(n) {
        return (s, BigUint::one());
    }
    let mut k = BigUint::one();
    let mut m = n.clone();
    for &p in small_primes() {
        let p = BigUint::from(p);
        let p2 = &p * &p;
        if p2 > m {
            break;
        }
        while (&m % &p2).is_zero() {
            m /= &p2;
            k *= &p;
        }
    }
    if let Some(s) = exact_sqrt(&m) {
        k *= s;
        m = BigUint::one();
    }
    (k, m)
}

/// Largest `g` (up to the trial bound's resolution) with `g | d` and
/// `g^2 | n`; returns `(n / g^2, d / g)`.
pub fn reduce_radical_ratio(n: &BigUint, d: &BigUint) -> (BigUint, BigUint) {
    let mut n = n.clone();
    let mut d = d.clone();
    if n.is_zero() {
        return (n, BigUint::one());
    }
    for &p in small_primes() {
        let p = BigUint::from(p);
        if p > d {
            break;
        }
        let p2 = &p * &p;
        while (&d % &p).is_zero() && (&n % &p2).is_zero() {
            d /= &p;
            n /= &p2;
        }
    }
    // Cofactor pass: any common factor h of d and n with h^2 | n.
    loop {
        let h = d.gcd(&n);
        if h.is_one() {
            break;
        }
        let h2 = &h * &h;
        if (&n % &h2).is_zero() {
            d /= &h;
            n /= &h2;
        } else {
            break;
        }
    }
    (n, d)
}

/// Floor division for signed integers with a positive divisor.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// `floor(q * sqrt(d))` for `d` not a perfect square (or `q = 0`).
pub fn floor_q_sqrt(q: &BigInt, d: &BigUint) -> BigInt {
    if q.is_zero() || d.is_zero() {
        return BigInt::zero();
    }
    let mag = q.magnitude();
    let inner = mag * mag * d;
    let root = inner.sqrt();
    let exact = &root * &root == inner;
    let root = BigInt::from_biguint(Sign::Plus, root);
    if q.is_positive() || exact {
        if q.is_positive() {
            root
        } else {
            -root
        }
    } else {
        -(root + BigInt::one())
    }
}

pub fn to_bigint(u: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, u.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn square_split() {
        assert_eq!(split_square(&u(134685)), (u(3), u(14965)));
        assert_eq!(split_square(&u(32)), (u(4), u(2)));
        assert_eq!(split_square(&u(49)), (u(7), u(1)));
        assert_eq!(split_square(&u(5)), (u(1), u(5)));
        // square of a prime above the trial bound
        let big = u(1_000_003) * u(1_000_003) * u(2);
        assert_eq!(split_square(&big), (u(1), big.clone()));
        let big_sq = u(1_000_003) * u(1_000_003);
        assert_eq!(split_square(&big_sq), (u(1_000_003), u(1)));
    }

    #[test]
    fn radical_reduction() {
        assert_eq!(reduce_radical_ratio(&u(134685), &u(99)), (u(14965), u(33)));
        assert_eq!(reduce_radical_ratio(&u(32), &u(2)), (u(8), u(1)));
        assert_eq!(reduce_radical_ratio(&u(221), &u(5)), (u(221), u(5)));
    }

    #[test]
    fn floor_sqrt_signs() {
        assert_eq!(floor_q_sqrt(&BigInt::from(1), &u(5)), BigInt::from(2));
        assert_eq!(floor_q_sqrt(&BigInt::from(-1), &u(5)), BigInt::from(-3));
        assert_eq!(floor_q_sqrt(&BigInt::from(3), &u(2)), BigInt::from(4));
    }
}
