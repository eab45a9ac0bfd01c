//! Dense polynomials over a prime field F_p, ascending-degree coefficient vectors.
//!
//! Only what the irreducibility test needs.

use crate::arith::factorize;

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

fn mulmod_p(a: u64, b: u64, p: u64) -> u64 {
    crate::arith::mul_mod(a, b, p)
}

/// Remainder of `a` modulo `f`. `f` must be nonzero.
pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut f = f.to_vec();
    trim(&mut f);
    let df = f.len() - 1;
    let lead_inv = inv_mod_p(f[df], p);
    while r.len() > df {
        let top = r.len() - 1;
        let c = mulmod_p(r[top], lead_inv, p);
        if c != 0 {
            let shift = top - df;
            for (j, &fj) in f.iter().enumerate() {
                let t = mulmod_p(c, fj, p);
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod_p(ai, bj, p)) % p;
        }
    }
    trim(&mut out);
    out
}

pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod_p(lead, p);
        for c in a.iter_mut() {
            *c = mulmod_p(*c, inv, p);
        }
    }
    a
}

// x^(p^k) mod f
fn frobenius_x(f: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut r = rem(&[0, 1], f, p);
    for _ in 0..k {
        r = pow_mod(&r, p, f, p);
    }
    r
}

/// Rabin's irreducibility test for a monic `f` of degree n ≥ 1.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = [0u64, 1];
    if sub(&frobenius_x(f, p, n as u32), &x, p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in factorize(n as u64) {
        let k = (n as u64 / r) as u32;
        let h = sub(&frobenius_x(f, p, k), &x, p);
        if gcd(&h, f, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Monic degree-n polynomials in lexicographic order of their ascending
/// coefficient tuple, the constant term being the most significant.
fn candidates(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut coeffs = vec![0u64; n + 1];
        for i in (0..n).rev() {
            coeffs[i] = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        coeffs[n] = 1;
        coeffs
    })
}

/// The lexicographically smallest monic irreducible polynomial of degree `n` over F_p.
pub fn find_irreducible(p: u64, n: usize) -> Vec<u64> {
    find_irreducible_nth(p, n, 0).expect("irreducible polynomials exist in every degree")
}

/// The `k`-th monic irreducible polynomial in the same order, counting from zero.
pub fn find_irreducible_nth(p: u64, n: usize, k: usize) -> Option<Vec<u64>> {
    candidates(p, n).filter(|f| is_irreducible(f, p)).nth(k)
}
