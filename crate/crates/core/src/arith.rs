//! Integer helpers: primality, factorization, prime powers.

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization as sorted `(prime, exponent)` pairs.
///
/// Trial division up to 10^6, then Pollard rho on whatever cofactor remains.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut primes = Vec::new();
        split_large(n, &mut primes);
        primes.sort_unstable();
        for p in primes {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

// Brent's variant; deterministic sequence of starting constants.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

/// Writes `q = p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// All prime powers `q` with `lo <= q <= hi`, ascending.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<u64> {
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    let mut out = Vec::new();
    for i in 2..=hi_us {
        if !sieve[i] {
            continue;
        }
        let mut j = i * i;
        while j <= hi_us {
            sieve[j] = false;
            j += i;
        }
        let mut pk = i as u64;
        while pk <= hi {
            if pk >= lo {
                out.push(pk);
            }
            match pk.checked_mul(i as u64) {
                Some(next) => pk = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(4_294_967_291));
        assert!(!is_prime(4_294_967_297)); // 641 * 6700417
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factorize(4095), vec![(3, 2), (5, 1), (7, 1), (13, 1)]);
        assert_eq!(factorize(4_294_967_297), vec![(641, 1), (6_700_417, 1)]);
        // both factors above the trial-division limit
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(factorize(n), vec![(1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_powers_in(2, 16), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }
}
