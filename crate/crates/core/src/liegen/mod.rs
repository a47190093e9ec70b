//! Exact-rational matrix Lie algebras acting on the octonions: bracket
//! closure of left multiplications, the derivation algebra, stabilizers of
//! a vector, and infinitesimal triality.

pub mod basis;
pub mod matrix;
pub mod triality;

pub use basis::{lie_closure, LieBasis, MAX_GENERATIONS};
pub use matrix::{left_mult_matrix, right_mult_matrix, RatMatrix};
pub use triality::{
    theta_all, triality_decompose, triality_decompose_all, triality_order_probe, OrderProbe, TrialityTriple,
};

use crate::algebra::{Octonion, BASIS_PRODUCT};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational::Rational;

/// Left multiplications by the seven imaginary units.
pub fn left_mult_generators() -> Vec<RatMatrix> {
    (1..8).map(|i| left_mult_matrix(&Octonion::basis(i))).collect()
}

/// Bracket closure of [`left_mult_generators`].
pub fn left_mult_closure() -> Result<LieBasis> {
    lie_closure(&left_mult_generators())
}

/// Null space of `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` over all 64 basis
/// pairs, with the 64 entries of `D` as unknowns.
pub fn derivation_algebra() -> Result<LieBasis> {
    let mut sys = Matrix::zeros(512, 64);
    let unknown = |r: usize, c: usize| r * 8 + c;
    for i in 0..8 {
        for j in 0..8 {
            let row = (i * 8 + j) * 8;
            // D(e_i e_j) = s D(e_k): component r is s * D[r][k]
            let (s, k) = BASIS_PRODUCT[i][j];
            for r in 0..8 {
                let cur = sys.get(row + r, unknown(r, k));
                sys.set(row + r, unknown(r, k), cur + Rational::int(s.into()));
            }
            // D(e_i) e_j = sum_m D[m][i] e_m e_j
            for m in 0..8 {
                let (s, r) = BASIS_PRODUCT[m][j];
                let cur = sys.get(row + r, unknown(m, i));
                sys.set(row + r, unknown(m, i), cur - Rational::int(s.into()));
            }
            // e_i D(e_j) = sum_m D[m][j] e_i e_m
            for m in 0..8 {
                let (s, r) = BASIS_PRODUCT[i][m];
                let cur = sys.get(row + r, unknown(m, j));
                sys.set(row + r, unknown(m, j), cur - Rational::int(s.into()));
            }
        }
    }
    let members = sys.nullspace().into_iter().map(|v| RatMatrix::from_flat(8, v));
    LieBasis::from_members(8, members)
}

/// `{a in span(ambient) : a(v) = 0}`.
pub fn stabilizer_subalgebra(ambient: &LieBasis, v: &Octonion) -> Result<LieBasis> {
    let members = ambient.members();
    if members.is_empty() {
        return Ok(ambient.clone());
    }
    let mut sys = Matrix::zeros(8, members.len());
    for (c, m) in members.iter().enumerate() {
        let image = m.apply_octonion(v);
        for r in 0..8 {
            sys.set(r, c, image[r]);
        }
    }
    let kernel = sys.nullspace();
    let mats = kernel.iter().map(|coeffs| RatMatrix::combination(8, coeffs, members));
    LieBasis::from_members(8, mats)
}
