//! Exact binomial helpers over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// C(n, k) in u128, None on overflow. Used for enumeration-budget guards.
pub fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 0..k {
        res = res.checked_mul(n - i)? / (i + 1);
    }
    Some(res)
}

pub fn factorial(k: usize) -> BigUint {
    let mut res = BigUint::one();
    for i in 2..=k {
        res *= i;
    }
    res
}

/// C(n, k) where the top argument is itself a big integer.
pub fn binomial_of_big(n: &BigUint, k: usize) -> BigUint {
    if *n < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    for i in 0..k {
        num *= n - BigUint::from(i);
    }
    num / factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(4, 7), BigUint::zero());
        assert_eq!(binomial(400, 200).to_string().len(), 120);
    }

    #[test]
    fn binomial_big_top() {
        // C(C(4,2), 2) = C(6,2) = 15
        assert_eq!(binomial_of_big(&binomial(4, 2), 2), BigUint::from(15u32));
        assert_eq!(binomial_of_big(&BigUint::from(1u32), 2), BigUint::zero());
        assert_eq!(binomial_of_big(&BigUint::from(3u32), 0), BigUint::one());
    }

    #[test]
    fn binomial_u128_guard() {
        assert_eq!(binomial_u128(10, 3), Some(120));
        assert_eq!(binomial_u128(1000, 500), None);
    }
}
