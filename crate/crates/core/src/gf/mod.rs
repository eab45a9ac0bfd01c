//! The ambient finite field F_{p^n} and its subfield levels.
//!
//! Elements are stored as the base-p integer whose digits are the polynomial
//! coefficients, coefficient i sitting at p^i. The ambient order is capped at
//! 2^32 so every element fits in a `u32`.

pub mod poly;

use serde::Serialize;

use crate::arith::{factorize, is_prime};
use crate::config::Caps;
use crate::error::{Error, Result};

pub use poly::{find_irreducible, find_irreducible_nth};

const MAX_DEG: usize = 32;

/// A field element in the encoding of some [`FieldContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Subfield levels F_p ⊆ F_{q0} ⊆ F_q ⊆ F_{q²}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Level {
    Fp,
    Q0,
    Q,
    Q2,
}

/// Multiplicative subgroups named by the codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Subgroup {
    H,
    FqStar,
    Fq0Star,
}

/// Which field the context realizes: F_{q²} (degree 2sm) or only F_q (degree sm).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Arena {
    Quadratic,
    Base,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub s: u32,
    pub arena: Arena,
    /// Monic irreducible modulus, ascending-degree coefficients.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn degree_for(m: u32, s: u32, arena: Arena) -> u32 {
        match arena {
            Arena::Quadratic => 2 * s * m,
            Arena::Base => s * m,
        }
    }

    pub fn degree(&self) -> u32 {
        Self::degree_for(self.m, self.s, self.arena)
    }
}

/// Serialized form of a context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldJson {
    pub p: u64,
    pub m: u32,
    pub s: u32,
    pub modulus: Vec<u64>,
    pub generator: Vec<u64>,
}

#[derive(Debug, Clone)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FieldContext {
    spec: FieldSpec,
    p: u64,
    n: usize,
    order: u64,
    pow_p: Vec<u64>,
    // low n coefficients of the modulus; p = 2 also keeps it as a bit mask
    modulus_low: Vec<u64>,
    modulus_bits: u64,
    q0: u64,
    q: u64,
    generator: Fe,
    factorization: Vec<(u64, u32)>,
    tables: Option<Tables>,
}

/// Builds F_{p^{2sm}} with the default modulus and default caps.
pub fn make_field(p: u64, m: u32, s: u32) -> Result<FieldContext> {
    FieldContext::new(p, m, s, Arena::Quadratic, &Caps::default())
}

fn checked_order(p: u64, n: u32, cap: u64) -> Result<u64> {
    let cap = cap.min(1 << 32);
    let order = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: "ambient field order",
            needed: order,
            cap: cap as u128,
        });
    }
    Ok(order as u64)
}

fn validate_params(p: u64, m: u32, s: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || s == 0 {
        return Err(Error::InvalidParameter("m and s must be positive".into()));
    }
    Ok(())
}

impl FieldContext {
    /// Context with the lexicographically smallest irreducible modulus.
    pub fn new(p: u64, m: u32, s: u32, arena: Arena, caps: &Caps) -> Result<FieldContext> {
        validate_params(p, m, s)?;
        let n = FieldSpec::degree_for(m, s, arena);
        checked_order(p, n, caps.max_ambient_order)?;
        let modulus = find_irreducible(p, n as usize);
        Self::from_spec(FieldSpec { p, m, s, arena, modulus }, caps)
    }

    /// Context whose modulus is the `k`-th irreducible in lexicographic order.
    pub fn with_nth_modulus(p: u64, m: u32, s: u32, arena: Arena, k: usize, caps: &Caps) -> Result<FieldContext> {
        validate_params(p, m, s)?;
        let n = FieldSpec::degree_for(m, s, arena);
        checked_order(p, n, caps.max_ambient_order)?;
        let modulus = find_irreducible_nth(p, n as usize, k)
            .ok_or_else(|| Error::NotFound(format!("irreducible #{k} of degree {n} over F_{p}")))?;
        Self::from_spec(FieldSpec { p, m, s, arena, modulus }, caps)
    }

    pub fn from_spec(spec: FieldSpec, caps: &Caps) -> Result<FieldContext> {
        validate_params(spec.p, spec.m, spec.s)?;
        let p = spec.p;
        let n = spec.degree() as usize;
        let order = checked_order(p, n as u32, caps.max_ambient_order)?;
        if spec.modulus.len() != n + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients, got {}",
                n + 1,
                spec.modulus.len()
            )));
        }
        if spec.modulus[n] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if spec.modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficients must lie in [0, p)".into()));
        }
        if !poly::is_irreducible(&spec.modulus, p) {
            return Err(Error::InvalidModulus("modulus is reducible".into()));
        }
        let mut pow_p = vec![1u64; n + 1];
        for i in 1..=n {
            pow_p[i] = pow_p[i - 1] * p;
        }
        let modulus_low = spec.modulus[..n].to_vec();
        let modulus_bits = if p == 2 {
            modulus_low.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        let q0 = p.pow(spec.m);
        let q = q0.pow(spec.s);
        let factorization = factorize(order - 1);
        let mut ctx = FieldContext {
            spec,
            p,
            n,
            order,
            pow_p,
            modulus_low,
            modulus_bits,
            q0,
            q,
            generator: Fe::ONE,
            factorization,
            tables: None,
        };
        ctx.generator = ctx.search_generator();
        if order <= caps.table_cap {
            ctx.build_tables();
        }
        Ok(ctx)
    }

    fn search_generator(&self) -> Fe {
        let nm1 = self.order - 1;
        (1..self.order)
            .map(|e| Fe(e as u32))
            .find(|&x| {
                self.factorization
                    .iter()
                    .all(|&(r, _)| self.pow_slow(x, nm1 / r) != Fe::ONE)
            })
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&mut self) {
        let nm1 = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(nm1);
        let mut log = vec![0u32; self.order as usize];
        let mut x = Fe::ONE;
        for k in 0..nm1 {
            exp.push(x.0);
            log[x.0 as usize] = k as u32;
            x = self.mul_slow(x, self.generator);
        }
        debug_assert_eq!(x, Fe::ONE);
        self.tables = Some(Tables { exp, log });
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Number of elements of the ambient field.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn q0(&self) -> u64 {
        self.q0
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// Prime factorization of the multiplicative group order.
    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn is_even(&self) -> bool {
        self.p == 2
    }

    pub fn level_degree(&self, level: Level) -> Result<u32> {
        let (m, s) = (self.spec.m, self.spec.s);
        match level {
            Level::Fp => Ok(1),
            Level::Q0 => Ok(m),
            Level::Q => Ok(m * s),
            Level::Q2 if self.spec.arena == Arena::Quadratic => Ok(2 * m * s),
            Level::Q2 => Err(Error::LevelUnavailable(level)),
        }
    }

    pub fn level_order(&self, level: Level) -> Result<u64> {
        Ok(self.p.pow(self.level_degree(level)?))
    }

    /// A generator of the multiplicative group of the given level.
    pub fn level_generator(&self, level: Level) -> Result<Fe> {
        let l = self.level_order(level)?;
        Ok(self.pow(self.generator, (self.order - 1) / (l - 1)))
    }

    /// Elements of a level: zero first, then successive powers of its generator.
    pub fn level_elements(&self, level: Level) -> Result<Vec<Fe>> {
        let l = self.level_order(level)?;
        let gen = self.level_generator(level)?;
        let mut out = Vec::with_capacity(l as usize);
        out.push(Fe::ZERO);
        let mut x = Fe::ONE;
        for _ in 0..l - 1 {
            out.push(x);
            x = self.mul(x, gen);
        }
        Ok(out)
    }

    pub fn in_level(&self, x: Fe, level: Level) -> Result<bool> {
        Ok(self.frobenius(x, level)? == x)
    }

    /// `x ↦ x^{|level|}`.
    pub fn frobenius(&self, x: Fe, level: Level) -> Result<Fe> {
        Ok(self.pow(x, self.level_order(level)?))
    }

    /// `x̄ = x^q`.
    pub fn conjugate(&self, x: Fe) -> Fe {
        self.pow(x, self.q)
    }

    pub fn subgroup_order(&self, tag: Subgroup) -> Result<u64> {
        match tag {
            Subgroup::H if self.spec.arena == Arena::Quadratic => Ok(self.q + 1),
            Subgroup::H => Err(Error::LevelUnavailable(Level::Q2)),
            Subgroup::FqStar => Ok(self.q - 1),
            Subgroup::Fq0Star => Ok(self.q0 - 1),
        }
    }

    /// The exponent e with subgroup = ⟨g^e⟩.
    pub fn subgroup_exponent(&self, tag: Subgroup) -> Result<u64> {
        Ok((self.order - 1) / self.subgroup_order(tag)?)
    }

    pub fn subgroup_generator(&self, tag: Subgroup) -> Result<Fe> {
        Ok(self.pow(self.generator, self.subgroup_exponent(tag)?))
    }

    // ---- encoding ----

    /// Coefficient vector of length n, ascending degree.
    pub fn coeffs(&self, x: Fe) -> Vec<u64> {
        let mut d = [0u64; MAX_DEG];
        self.decode(x, &mut d);
        d[..self.n].to_vec()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() > self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter("coefficient out of range".into()));
        }
        Ok(self.encode(coeffs))
    }

    /// The image of an integer under Z → F_p ⊆ F.
    pub fn from_int(&self, k: i64) -> Fe {
        Fe(k.rem_euclid(self.p as i64) as u32)
    }

    /// Inverse of [`from_int`](Self::from_int) on F_p.
    pub fn to_prime_field(&self, x: Fe) -> Option<u64> {
        ((x.0 as u64) < self.p).then_some(x.0 as u64)
    }

    #[inline]
    fn decode(&self, x: Fe, out: &mut [u64; MAX_DEG]) {
        let mut v = x.0 as u64;
        if self.p == 2 {
            for (i, o) in out.iter_mut().enumerate().take(self.n) {
                *o = (v >> i) & 1;
            }
        } else {
            for o in out.iter_mut().take(self.n) {
                *o = v % self.p;
                v /= self.p;
            }
        }
    }

    #[inline]
    fn encode(&self, digits: &[u64]) -> Fe {
        let mut v = 0u64;
        for (i, &d) in digits.iter().enumerate() {
            v += d * self.pow_p[i];
        }
        Fe(v as u32)
    }

    pub fn to_json(&self) -> FieldJson {
        FieldJson {
            p: self.spec.p,
            m: self.spec.m,
            s: self.spec.s,
            modulus: self.spec.modulus.clone(),
            generator: self.coeffs(self.generator),
        }
    }

    // ---- arithmetic ----

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut v = 0u64;
        let mut i = 0;
        while x != 0 || y != 0 {
            let d = x % p + y % p;
            let d = if d >= p { d - p } else { d };
            v += d * self.pow_p[i];
            x /= p;
            y /= p;
            i += 1;
        }
        Fe(v as u32)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut x = a.0 as u64;
        let mut v = 0u64;
        let mut i = 0;
        while x != 0 {
            let d = x % p;
            if d != 0 {
                v += (p - d) * self.pow_p[i];
            }
            x /= p;
            i += 1;
        }
        Fe(v as u32)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let nm1 = (self.order - 1) as usize;
                let mut k = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                if k >= nm1 {
                    k -= nm1;
                }
                Fe(t.exp[k])
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Discrete logarithm to the base of the context generator, when tables exist.
    #[inline]
    pub fn log(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[a.0 as usize] as u64)
    }

    /// `g^k` for the context generator.
    #[inline]
    pub fn exp(&self, k: u64) -> Fe {
        let nm1 = self.order - 1;
        match &self.tables {
            Some(t) => Fe(t.exp[(k % nm1) as usize]),
            None => self.pow_slow(self.generator, k % nm1),
        }
    }

    fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return self.mul_gf2(a, b);
        }
        let n = self.n;
        let p = self.p;
        let mut da = [0u64; MAX_DEG];
        let mut db = [0u64; MAX_DEG];
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        let mut prod = [0u128; 2 * MAX_DEG];
        for i in 0..n {
            if da[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] += da[i] as u128 * db[j] as u128;
            }
        }
        let mut r = [0u64; 2 * MAX_DEG];
        for k in 0..2 * n - 1 {
            r[k] = (prod[k] % p as u128) as u64;
        }
        // x^n = -(m_0 + m_1 x + ... + m_{n-1} x^{n-1})
        for k in (n..2 * n - 1).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            r[k] = 0;
            for j in 0..n {
                let t = (c as u128 * self.modulus_low[j] as u128 % p as u128) as u64;
                let idx = k - n + j;
                r[idx] = if r[idx] >= t { r[idx] - t } else { r[idx] + p - t };
            }
        }
        self.encode(&r[..n])
    }

    fn mul_gf2(&self, a: Fe, b: Fe) -> Fe {
        let n = self.n;
        let (a, b) = (a.0 as u64, b.0 as u64);
        let mut prod = 0u64;
        for i in 0..n {
            if (b >> i) & 1 == 1 {
                prod ^= a << i;
            }
        }
        for k in (n..2 * n - 1).rev() {
            if (prod >> k) & 1 == 1 {
                prod ^= 1 << k;
                prod ^= self.modulus_bits << (k - n);
            }
        }
        Fe(prod as u32)
    }

    fn pow_slow(&self, a: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    /// `a^e` by square-and-multiply, or by discrete logs when tables exist.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let nm1 = self.order - 1;
        match &self.tables {
            Some(t) => {
                let k = (t.log[a.0 as usize] as u128 * (e % nm1) as u128 % nm1 as u128) as usize;
                Fe(t.exp[k])
            }
            None => self.pow_slow(a, e % nm1),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// A square root of `a`, if one exists (Tonelli-Shanks; Frobenius inverse when p = 2).
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        if self.p == 2 {
            return Some(self.pow(a, self.order / 2));
        }
        let nm1 = self.order - 1;
        if self.pow(a, nm1 / 2) != Fe::ONE {
            return None;
        }
        let e = nm1.trailing_zeros();
        let t = nm1 >> e;
        // the generator is a nonsquare
        let mut c = self.pow(self.generator, t);
        let mut x = self.pow(a, t.div_ceil(2));
        let mut b = self.pow(a, t);
        let mut m = e;
        while b != Fe::ONE {
            let mut i = 0;
            let mut b2 = b;
            while b2 != Fe::ONE {
                b2 = self.mul(b2, b2);
                i += 1;
            }
            let mut w = c;
            for _ in 0..m - i - 1 {
                w = self.mul(w, w);
            }
            x = self.mul(x, w);
            c = self.mul(w, w);
            b = self.mul(b, c);
            m = i;
        }
        Some(x)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.order - 1;
        for &(r, _) in &self.factorization {
            while ord % r == 0 && self.pow(a, ord / r) == Fe::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Iterates over every element in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(|v| Fe(v as u32))
    }
}
