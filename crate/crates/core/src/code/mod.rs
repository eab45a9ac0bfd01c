//! Generalized Zetterberg codes and their half (constacyclic) variant.

pub mod matrix;
pub mod mindist;
pub mod witness;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::prime_power;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::{Arena, Fe, FieldContext, Level, Subgroup};

pub use matrix::{kernel_basis, parity_check_matrix, rank_over_q0, CoordinateMap};
pub use mindist::{min_distance_exhaustive, min_distance_formula, MinDistance};
pub use witness::{weight3_witness_even, weight3_witness_half_odd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Half,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Half => "half",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "full" => Ok(Variant::Full),
            "half" => Ok(Variant::Half),
            other => Err(Error::InvalidParameter(format!("unknown variant {other:?}"))),
        }
    }
}

/// Length and dimension of the code with parameters `(q0, s, variant)`.
pub fn code_parameters(q0: u64, s: u32, variant: Variant) -> Result<(u64, u64)> {
    let q = q0
        .checked_pow(s)
        .ok_or_else(|| Error::InvalidParameter("q0^s overflows".into()))?;
    let length = match variant {
        Variant::Full => q + 1,
        Variant::Half if q0 % 2 == 1 => (q + 1) / 2,
        Variant::Half => return Err(Error::HalfVariantNeedsOddQ0),
    };
    let redundancy = 2 * s as u64;
    if redundancy > length {
        return Err(Error::InvalidParameter(format!(
            "length {length} is smaller than 2s = {redundancy}"
        )));
    }
    Ok((length, length - redundancy))
}

/// C_s(q0) = {c ∈ F_{q0}^{q+1} : Σ c_i ξ^i = 0}, or its half of length (q+1)/2.
#[derive(Debug, Clone)]
pub struct ZetterbergCode {
    ctx: FieldContext,
    variant: Variant,
    xi: Fe,
    length: usize,
    dimension: usize,
    positions: Vec<Fe>,
}

/// A vector over F_{q0} given in the ambient encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    pub coeffs: Vec<Fe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodewordJson {
    pub q0: u64,
    pub s: u32,
    pub variant: Variant,
    pub support: Vec<usize>,
    pub coeffs: Vec<Vec<u64>>,
}

impl Codeword {
    pub fn zero(length: usize) -> Codeword {
        Codeword { coeffs: vec![Fe::ZERO; length] }
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl ZetterbergCode {
    pub fn new(ctx: FieldContext, variant: Variant) -> Result<ZetterbergCode> {
        if ctx.spec().arena != Arena::Quadratic {
            return Err(Error::LevelUnavailable(Level::Q2));
        }
        let (length, dimension) = code_parameters(ctx.q0(), ctx.spec().s, variant)?;
        let xi = ctx.subgroup_generator(Subgroup::H)?;
        let mut positions = Vec::with_capacity(length as usize);
        let mut x = Fe::ONE;
        for _ in 0..length {
            positions.push(x);
            x = ctx.mul(x, xi);
        }
        Ok(ZetterbergCode {
            ctx,
            variant,
            xi,
            length: length as usize,
            dimension: dimension as usize,
            positions,
        })
    }

    /// Builds the ambient field for `q0^s` under `caps` and the code on top of it.
    pub fn for_params(q0: u64, s: u32, variant: Variant, caps: &Caps) -> Result<ZetterbergCode> {
        let (p, m) = prime_power(q0).ok_or(Error::NotPrimePower(q0))?;
        code_parameters(q0, s, variant)?;
        let ctx = FieldContext::new(p, m, s, Arena::Quadratic, caps)?;
        ZetterbergCode::new(ctx, variant)
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn q0(&self) -> u64 {
        self.ctx.q0()
    }

    pub fn s(&self) -> u32 {
        self.ctx.spec().s
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn xi(&self) -> Fe {
        self.xi
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// ξ^0, ..., ξ^{length-1}.
    pub fn positions(&self) -> &[Fe] {
        &self.positions
    }

    /// `Σ c_i ξ^i` in F_{q²}.
    pub fn syndrome(&self, word: &Codeword) -> Result<Fe> {
        if word.coeffs.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                got: word.coeffs.len(),
            });
        }
        let mut acc = Fe::ZERO;
        for (&c, &x) in word.coeffs.iter().zip(&self.positions) {
            if c.is_zero() {
                continue;
            }
            if !self.ctx.in_level(c, Level::Q0)? {
                return Err(Error::NotInSubfield);
            }
            acc = self.ctx.add(acc, self.ctx.mul(c, x));
        }
        Ok(acc)
    }

    pub fn contains(&self, word: &Codeword) -> Result<bool> {
        Ok(self.syndrome(word)?.is_zero())
    }

    /// Multiplication by X in F_{q0}[X]/(X^n - 1) (full) or F_{q0}[X]/(X^n + 1) (half).
    pub fn shift(&self, word: &Codeword) -> Codeword {
        let n = word.coeffs.len();
        let mut coeffs = Vec::with_capacity(n);
        let last = word.coeffs[n - 1];
        coeffs.push(match self.variant {
            Variant::Full => last,
            Variant::Half => self.ctx.neg(last),
        });
        coeffs.extend_from_slice(&word.coeffs[..n - 1]);
        Codeword { coeffs }
    }

    /// Position index `k` with `ξ^k = h`, together with the sign needed to bring
    /// the index into the code's range: `h = sign·ξ^k`.
    pub fn locate(&self, h: Fe) -> Option<(usize, bool)> {
        let q1 = self.q() + 1;
        let k = match self.ctx.log(h) {
            Some(l) => {
                let e = self.ctx.subgroup_exponent(Subgroup::H).ok()?;
                if l % e != 0 {
                    return None;
                }
                l / e
            }
            None => {
                let mut x = Fe::ONE;
                let mut found = None;
                for k in 0..q1 {
                    if x == h {
                        found = Some(k);
                        break;
                    }
                    x = self.ctx.mul(x, self.xi);
                }
                found?
            }
        } as usize;
        if k < self.length {
            Some((k, false))
        } else {
            // ξ^{(q+1)/2} = -1 for the half code
            Some((k - self.length, true))
        }
    }

    pub fn to_json(&self, word: &Codeword) -> CodewordJson {
        let support = word.support();
        let coeffs = support.iter().map(|&i| self.ctx.coeffs(word.coeffs[i])).collect();
        CodewordJson {
            q0: self.q0(),
            s: self.s(),
            variant: self.variant,
            support,
            coeffs,
        }
    }
}
