//! Polynomials with coefficients in a [`FieldContext`].

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldContext};

/// Ascending-degree coefficients; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly(pub Vec<Fe>);

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last() == Some(&Fe::ZERO) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn one() -> Poly {
        Poly(vec![Fe::ONE])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [Fe::ONE]
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<Fe> {
        self.0.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(Fe::ONE)
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(ctx: &FieldContext, roots: &[Fe]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(ctx, &Poly::new(vec![ctx.neg(r), Fe::ONE]))
        })
    }

    pub fn eval(&self, ctx: &FieldContext, x: Fe) -> Fe {
        self.0
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    pub fn add(&self, ctx: &FieldContext, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.0.get(i).copied().unwrap_or(Fe::ZERO);
                let b = other.0.get(i).copied().unwrap_or(Fe::ZERO);
                ctx.add(a, b)
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, ctx: &FieldContext, other: &Poly) -> Poly {
        let neg = Poly(other.0.iter().map(|&c| ctx.neg(c)).collect());
        self.add(ctx, &neg)
    }

    pub fn mul(&self, ctx: &FieldContext, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Fe::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, ctx: &FieldContext, c: Fe) -> Poly {
        Poly::new(self.0.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn div_rem(&self, ctx: &FieldContext, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = ctx.inv(divisor.lead().unwrap())?;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Ok((Poly(Vec::new()), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = ctx.mul(r[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (j, &dj) in divisor.0.iter().enumerate() {
                let idx = k - dd + j;
                r[idx] = ctx.sub(r[idx], ctx.mul(c, dj));
            }
        }
        Ok((Poly::new(quot), Poly::new(r)))
    }

    pub fn monic(&self, ctx: &FieldContext) -> Result<Poly> {
        let lead = self.lead().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(ctx, ctx.inv(lead)?))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, ctx: &FieldContext, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(ctx, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(ctx).expect("nonzero")
        }
    }

    pub fn derivative(&self, ctx: &FieldContext) -> Poly {
        let coeffs = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ctx.mul(ctx.from_int(i as i64), c))
            .collect();
        Poly::new(coeffs)
    }

    // For f = g(x^p) with coefficients in a field of order `field_order`, returns
    // the polynomial whose p-th power is f.
    fn pth_root(&self, ctx: &FieldContext, field_order: u64) -> Poly {
        let p = ctx.p() as usize;
        let e = field_order / ctx.p();
        let coeffs = self.0.iter().step_by(p).map(|&c| ctx.pow(c, e)).collect();
        Poly::new(coeffs)
    }

    /// Squarefree decomposition `f = ∏ g_k^{e_k}` of a monic polynomial over a
    /// field of order `field_order`; the `g_k` are squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self, ctx: &FieldContext, field_order: u64) -> Vec<(Poly, u64)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative(ctx);
        let mut c = self.gcd(ctx, &d);
        let mut w = self.div_rem(ctx, &c).expect("nonzero").0;
        let mut i = 1u64;
        while !w.is_one() {
            let y = w.gcd(ctx, &c);
            let z = w.div_rem(ctx, &y).expect("nonzero").0;
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_rem(ctx, &w).expect("nonzero").0;
        }
        if !c.is_one() {
            let root = c.pth_root(ctx, field_order);
            for (g, k) in root.squarefree_decomposition(ctx, field_order) {
                out.push((g, k * ctx.p()));
            }
        }
        out
    }
}
