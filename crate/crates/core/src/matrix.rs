//! Square matrices over [`NCPoly`], the rational R-matrix, the sl2 L-matrix
//! and the Yang–Baxter, RLL and reflection equation checks.
//!
//! Matrix legs (the `C^2 ⊗ C^2` auxiliary space) are the row/column index;
//! algebra tensor sites live inside the entries. The R-matrix is used in
//! the cleared form `R̂(u) = u·I − P`, which differs from `R(u) = I − P/u`
//! by the scalar `u` on both sides of every identity checked here.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nc::{casimir, NCPoly};
use crate::scalar::{int, rat, CPoly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMatrix {
    dim: usize,
    entries: Vec<NCPoly>,
}

impl SpectralMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![NCPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// Row-major entries; panics unless `entries.len() == dim * dim`.
    pub fn from_entries(dim: usize, entries: Vec<NCPoly>) -> Self {
        assert_eq!(entries.len(), dim * dim, "expected {dim}x{dim} entries");
        Self { dim, entries }
    }

    pub fn from_scalars(dim: usize, entries: Vec<CPoly>) -> Self {
        Self::from_entries(dim, entries.into_iter().map(NCPoly::scalar).collect())
    }

    pub fn diag(entries: Vec<NCPoly>) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, NCPoly::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCPoly) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    /// Total number of stored terms over all entries.
    pub fn term_count(&self) -> usize {
        self.entries.iter().map(NCPoly::len).sum()
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly + Sync + Send) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.par_iter().map(f).collect(),
        }
    }

    pub fn subst(&self, var: Var, value: &CPoly) -> Self {
        self.map(|e| e.subst(var, value))
    }

    pub fn scale_scalar(&self, s: &CPoly) -> Self {
        self.map(|e| e.mul_scalar(s))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Entry order is preserved: `(AB)_ij = sum_k A_ik B_kj`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let entries = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc += &(a * b);
                }
                acc
            })
            .collect();
        Ok(Self { dim: n, entries })
    }

    /// Kronecker product; entry products keep `self` on the left.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Panicking conveniences for matrices already known to be compatible.
impl std::ops::Mul for &SpectralMatrix {
    type Output = SpectralMatrix;
    fn mul(self, rhs: &SpectralMatrix) -> SpectralMatrix {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Sub for &SpectralMatrix {
    type Output = SpectralMatrix;
    fn sub(self, rhs: &SpectralMatrix) -> SpectralMatrix {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl std::ops::Add for &SpectralMatrix {
    type Output = SpectralMatrix;
    fn add(self, rhs: &SpectralMatrix) -> SpectralMatrix {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

/// One line per nonzero entry, `[i,j] = ...` with 1-based indices.
impl fmt::Display for SpectralMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if !e.is_zero() {
                    writeln!(f, "[{},{}] = {e}", i + 1, j + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Which auxiliary leg a 2x2 matrix occupies in `C^2 ⊗ C^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    First,
    Second,
}

/// `B ⊗ I₂` or `I₂ ⊗ B`.
pub fn leg_embed(b: &SpectralMatrix, leg: Leg) -> Result<SpectralMatrix> {
    if b.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: b.dim(),
            right: 2,
        });
    }
    let id = SpectralMatrix::identity(2);
    Ok(match leg {
        Leg::First => b.kron(&id),
        Leg::Second => id.kron(b),
    })
}

/// The flip `P` on `C^2 ⊗ C^2`.
pub fn flip() -> SpectralMatrix {
    SpectralMatrix::permutation(&[0, 2, 1, 3])
}

/// `R̂(u) = u·I₄ − P`.
pub fn rhat(u: &CPoly) -> SpectralMatrix {
    rhat_with(u, &flip())
}

/// `u·I − swap`, for controls with a substitute for `P`.
pub fn rhat_with(u: &CPoly, swap: &SpectralMatrix) -> SpectralMatrix {
    let scaled = SpectralMatrix::identity(swap.dim()).scale_scalar(u);
    &scaled - swap
}

/// `R̂₁₂(x−y)R̂₁₃(x−z)R̂₂₃(y−z) − R̂₂₃(y−z)R̂₁₃(x−z)R̂₁₂(x−y)` on `(C^2)^{⊗3}`.
pub fn check_yang_baxter() -> SpectralMatrix {
    check_yang_baxter_with(&flip())
}

pub fn check_yang_baxter_with(swap: &SpectralMatrix) -> SpectralMatrix {
    let (x, y, z) = (CPoly::x(), CPoly::y(), CPoly::z());
    let id2 = SpectralMatrix::identity(2);
    let p23 = id2.kron(&flip());
    let r12 = |u: &CPoly| rhat_with(u, swap).kron(&id2);
    let r23 = |u: &CPoly| id2.kron(&rhat_with(u, swap));
    let r13 = |u: &CPoly| &(&p23 * &r12(u)) * &p23;

    let (a, b, c) = (r12(&(&x - &y)), r13(&(&x - &z)), r23(&(&y - &z)));
    let lhs = &(&a * &b) * &c;
    let rhs = &(&c * &b) * &a;
    &lhs - &rhs
}

/// `L(x) = ½ [[2x−1−h, −2f], [−2e, 2x−1+h]]` with generators at `site`.
pub fn l_matrix(site: u32) -> SpectralMatrix {
    let half = rat(1, 2);
    let diag_part = NCPoly::scalar(&CPoly::x().scale(&int(2)) - &CPoly::one());
    SpectralMatrix::from_entries(
        2,
        vec![
            (&diag_part - &NCPoly::h(site)).scale(&half),
            -NCPoly::f(site),
            -NCPoly::e(site),
            (&diag_part + &NCPoly::h(site)).scale(&half),
        ],
    )
}

/// Both RLL residuals for `l` (a 2x2 matrix in `x`):
/// `R̂(x−y)L₁(x)L₂(y) − L₂(y)L₁(x)R̂(x−y)` and
/// `L₂(y)R̂(x+y)L₁(x) − L₁(x)R̂(x+y)L₂(y)`.
pub fn check_rll_for(l: &SpectralMatrix) -> Result<(SpectralMatrix, SpectralMatrix)> {
    let (x, y) = (CPoly::x(), CPoly::y());
    let l1 = leg_embed(l, Leg::First)?;
    let l2 = leg_embed(&l.subst(Var::X, &y), Leg::Second)?;
    let r_minus = rhat(&(&x - &y));
    let r_plus = rhat(&(&x + &y));
    let first = &(&(&r_minus * &l1) * &l2) - &(&(&l2 * &l1) * &r_minus);
    let second = &(&(&l2 * &r_plus) * &l1) - &(&(&l1 * &r_plus) * &l2);
    Ok((first, second))
}

pub fn check_rll(site: u32) -> (SpectralMatrix, SpectralMatrix) {
    check_rll_for(&l_matrix(site)).expect("L is 2x2")
}

/// `L(x)L(−x) − (−x² + (1 + c)/4)·I₂` for the L-matrix on `site`.
pub fn check_l_unitarity(site: u32) -> SpectralMatrix {
    let l = l_matrix(site);
    let prod = &l * &l.subst(Var::X, &-CPoly::x());
    let s = &NCPoly::scalar(-(&CPoly::x() * &CPoly::x()))
        + &(&NCPoly::one() + &casimir(site)).scale(&rat(1, 4));
    &prod - &SpectralMatrix::diag(vec![s.clone(), s])
}

/// `R̂(x−y)B₁(x)R̂(x+y)B₂(y) − B₂(y)R̂(x+y)B₁(x)R̂(x−y)`; `b` is a 2x2
/// matrix in `x`.
pub fn check_reflection(b: &SpectralMatrix) -> Result<SpectralMatrix> {
    let (x, y) = (CPoly::x(), CPoly::y());
    let b1 = leg_embed(b, Leg::First)?;
    let b2 = leg_embed(&b.subst(Var::X, &y), Leg::Second)?;
    let r_minus = rhat(&(&x - &y));
    let r_plus = rhat(&(&x + &y));
    let lhs = &(&(&r_minus * &b1) * &r_plus) * &b2;
    let rhs = &(&(&b2 * &r_plus) * &b1) * &r_minus;
    Ok(&lhs - &rhs)
}
