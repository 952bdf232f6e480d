//! Integer combinatorics reduced mod a prime.

/// C(n, k) mod p by Lucas' theorem.
pub fn binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// C(n, k) mod p for n < p.
fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// n! mod p.
pub fn factorial_mod(n: u64, p: u64) -> u64 {
    (1..=n).fold(1 % p, |acc, i| acc * (i % p) % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_binom(n: u64, k: u64) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }

    #[test]
    fn lucas_matches_exact() {
        for p in [2u64, 3, 5, 7, 11] {
            for n in 0..60 {
                for k in 0..=n + 1 {
                    assert_eq!(
                        binom_mod(n, k, p) as u128,
                        exact_binom(n, k) % p as u128,
                        "C({n},{k}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial_mod(3, 5), 1);
        assert_eq!(factorial_mod(5, 7), 120 % 7);
        assert_eq!(factorial_mod(7, 7), 0);
    }
}
