//! Parity-check matrix over F_{q0} and Gaussian elimination.

use crate::error::{Error, Result};
use crate::gf::{Arena, Fe, FieldContext, Level};

use super::{Codeword, ZetterbergCode};

/// Coordinates of F_{q²} elements in the F_{q0}-basis 1, g, ..., g^{2s-1}.
#[derive(Debug, Clone)]
pub struct CoordinateMap {
    p: u64,
    m: usize,
    dim: usize,
    // inverse of the F_p matrix whose column j·m + k holds γ0^k g^j
    inv: Vec<Vec<u64>>,
    gamma0_pows: Vec<Fe>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

impl CoordinateMap {
    pub fn new(ctx: &FieldContext) -> Result<CoordinateMap> {
        if ctx.spec().arena != Arena::Quadratic {
            return Err(Error::LevelUnavailable(Level::Q2));
        }
        let p = ctx.p();
        let n = ctx.degree();
        let m = ctx.spec().m as usize;
        let dim = 2 * ctx.spec().s as usize;
        let gamma0 = ctx.level_generator(Level::Q0)?;
        let gamma0_pows: Vec<Fe> = (0..m as u64).map(|k| ctx.pow(gamma0, k)).collect();
        let g = ctx.generator();
        // augmented [A | I] with A's columns the basis vectors
        let mut a = vec![vec![0u64; 2 * n]; n];
        for j in 0..dim {
            let gj = ctx.pow(g, j as u64);
            for (k, &gk) in gamma0_pows.iter().enumerate() {
                let col = j * m + k;
                for (row, c) in ctx.coeffs(ctx.mul(gk, gj)).into_iter().enumerate() {
                    a[row][col] = c;
                }
            }
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[n + i] = 1;
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r][col] != 0)
                .ok_or_else(|| Error::FormulaMismatch("basis vectors are dependent".into()))?;
            a.swap(col, pivot);
            let iv = inv_mod(a[col][col], p);
            for v in a[col].iter_mut() {
                *v = *v * iv % p;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..2 * n {
                        a[r][c] = (a[r][c] + p * p - f * a[col][c] % p) % p;
                    }
                }
            }
        }
        let inv = a.into_iter().map(|row| row[n..].to_vec()).collect();
        Ok(CoordinateMap { p, m, dim, inv, gamma0_pows })
    }

    /// The 2s coordinates of `y` in F_{q0}.
    pub fn coordinates(&self, ctx: &FieldContext, y: Fe) -> Vec<Fe> {
        let v = ctx.coeffs(y);
        let b: Vec<u64> = self
            .inv
            .iter()
            .map(|row| row.iter().zip(&v).map(|(&r, &x)| r * x % self.p).sum::<u64>() % self.p)
            .collect();
        (0..self.dim)
            .map(|j| {
                (0..self.m).fold(Fe::ZERO, |acc, k| {
                    let c = ctx.from_int(b[j * self.m + k] as i64);
                    ctx.add(acc, ctx.mul(c, self.gamma0_pows[k]))
                })
            })
            .collect()
    }
}

/// The 2s × length matrix whose column i holds the coordinates of ξ^i.
pub fn parity_check_matrix(code: &ZetterbergCode) -> Result<Vec<Vec<Fe>>> {
    let ctx = code.ctx();
    let map = CoordinateMap::new(ctx)?;
    let dim = 2 * code.s() as usize;
    let mut h = vec![vec![Fe::ZERO; code.length()]; dim];
    for (i, &x) in code.positions().iter().enumerate() {
        for (r, c) in map.coordinates(ctx, x).into_iter().enumerate() {
            h[r][i] = c;
        }
    }
    Ok(h)
}

// Reduced row echelon form in place; returns pivot columns.
fn rref(ctx: &FieldContext, a: &mut [Vec<Fe>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let iv = ctx.inv(a[r][c]).expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = ctx.mul(*v, iv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..cols {
                    let t = ctx.mul(f, a[r][j]);
                    a[i][j] = ctx.sub(a[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_over_q0(ctx: &FieldContext, matrix: &[Vec<Fe>]) -> usize {
    let mut a = matrix.to_vec();
    rref(ctx, &mut a).len()
}

/// A basis of the right kernel.
pub fn kernel_basis(ctx: &FieldContext, matrix: &[Vec<Fe>]) -> Vec<Codeword> {
    let mut a = matrix.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let pivots = rref(ctx, &mut a);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Fe::ZERO; cols];
        v[free] = Fe::ONE;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(a[row][free]);
        }
        out.push(Codeword { coeffs: v });
    }
    out
}
