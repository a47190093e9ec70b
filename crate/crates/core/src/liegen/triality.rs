//! Infinitesimal triality on `so(8)`.
//!
//! For an antisymmetric `a`, the pair `(a', a'')` of antisymmetric matrices
//! with `a(xy) = a'(x) y + x a''(y)` for all octonions `x, y` is found by one
//! exact solve of the 512 equations (64 basis pairs, 8 components) in the 56
//! unknowns parametrising `a'` and `a''`. The coefficient matrix does not
//! depend on `a`, so any number of right-hand sides are solved together.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SolveFailure};
use crate::rational::Rational;

use super::matrix::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityTriple {
    pub a: RatMatrix,
    pub a_prime: RatMatrix,
    pub a_dblprime: RatMatrix,
}

impl TrialityTriple {
    /// First basis pair `(i, j)` at which `a(e_i e_j) != a'(e_i) e_j + e_i a''(e_j)`.
    pub fn relation_violation(&self) -> Option<(usize, usize)> {
        relation_violation(&self.a, &self.a_prime, &self.a_dblprime)
    }
}

pub fn relation_violation(a: &RatMatrix, ap: &RatMatrix, app: &RatMatrix) -> Option<(usize, usize)> {
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (Octonion::basis(i), Octonion::basis(j));
            let lhs = a.apply_octonion(&x.multiply(&y));
            let rhs = ap.apply_octonion(&x).multiply(&y) + x.multiply(&app.apply_octonion(&y));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

fn antisymmetric_pairs() -> Vec<(usize, usize)> {
    (0..8).flat_map(|p| (p + 1..8).map(move |q| (p, q))).collect()
}

pub const EQUATIONS: usize = 512;
pub const UNKNOWNS: usize = 56;

/// The 512 x 56 coefficient matrix, shared by every solve.
pub fn coefficient_matrix() -> &'static Matrix {
    static COEFFS: OnceLock<Matrix> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let pairs = antisymmetric_pairs();
        let mut m = Matrix::zeros(EQUATIONS, UNKNOWNS);
        for (u, &(p, q)) in pairs.iter().enumerate() {
            let gen = RatMatrix::elementary_antisymmetric(8, p, q);
            for i in 0..8 {
                for j in 0..8 {
                    let (x, y) = (Octonion::basis(i), Octonion::basis(j));
                    let via_left = gen.apply_octonion(&x).multiply(&y);
                    let via_right = x.multiply(&gen.apply_octonion(&y));
                    let row = (i * 8 + j) * 8;
                    for r in 0..8 {
                        m.set(row + r, u, via_left[r]);
                        m.set(row + r, u + pairs.len(), via_right[r]);
                    }
                }
            }
        }
        m
    })
}

/// Solves for the triality partners of every matrix in `mats` at once.
pub fn triality_decompose_all(mats: &[RatMatrix]) -> Result<Vec<TrialityTriple>> {
    for (idx, a) in mats.iter().enumerate() {
        if a.dim() != 8 || !a.is_antisymmetric() {
            return Err(Error::Domain(format!("input {idx} is not an antisymmetric 8x8 matrix")));
        }
    }
    if mats.is_empty() {
        return Ok(Vec::new());
    }
    let mut rhs = Matrix::zeros(EQUATIONS, mats.len());
    for (c, a) in mats.iter().enumerate() {
        for i in 0..8 {
            for j in 0..8 {
                let v = a.apply_octonion(&Octonion::basis(i).multiply(&Octonion::basis(j)));
                for r in 0..8 {
                    rhs.set((i * 8 + j) * 8 + r, c, v[r]);
                }
            }
        }
    }
    let sol = coefficient_matrix().solve(&rhs).map_err(|f| match f {
        SolveFailure::Inconsistent { rhs_column } => {
            Error::TrialityViolation(format!("no solution for input {rhs_column}"))
        }
        SolveFailure::Underdetermined { rank, unknowns } => {
            Error::TrialityViolation(format!("solution not unique: rank {rank} < {unknowns}"))
        }
    })?;
    let pairs = antisymmetric_pairs();
    Ok(mats
        .iter()
        .enumerate()
        .map(|(c, a)| {
            let build = |offset: usize| {
                let mut m = RatMatrix::zeros(8);
                for (u, &(p, q)) in pairs.iter().enumerate() {
                    let v = sol.get(offset + u, c);
                    m.set(p, q, v);
                    m.set(q, p, -v);
                }
                m
            };
            TrialityTriple { a: a.clone(), a_prime: build(0), a_dblprime: build(pairs.len()) }
        })
        .collect())
}

pub fn triality_decompose(a: &RatMatrix) -> Result<TrialityTriple> {
    Ok(triality_decompose_all(std::slice::from_ref(a))?.remove(0))
}

/// `theta(a) = a'`.
pub fn theta_all(mats: &[RatMatrix]) -> Result<Vec<RatMatrix>> {
    Ok(triality_decompose_all(mats)?.into_iter().map(|t| t.a_prime).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderProbe {
    /// Rank of `{theta(b)}` over the supplied basis.
    pub image_rank: usize,
    pub basis_size: usize,
    pub theta_cubed_is_identity: bool,
    /// Basis indices where `theta^3(b) != b`, with the number of differing entries.
    pub deviations: Vec<(usize, usize)>,
    /// `Some(s)` when `theta^3 = s * id` for a rational `s`.
    pub theta_cubed_scalar: Option<Rational>,
    /// Smallest `k <= MAX_PROBED_ORDER` with `theta^k = id` on the basis.
    pub order: Option<usize>,
}

pub const MAX_PROBED_ORDER: usize = 6;

/// Iterates `theta` over `basis` and reports whether `theta^3 = id`, along
/// with the actual order of `theta` when it is small.
pub fn triality_order_probe(basis: &[RatMatrix]) -> Result<OrderProbe> {
    let mut iterates = vec![basis.to_vec()];
    let mut order = None;
    for k in 1..=MAX_PROBED_ORDER {
        let next = theta_all(&iterates[k - 1])?;
        let back = next.as_slice() == basis;
        iterates.push(next);
        if back {
            order = Some(k);
            break;
        }
    }
    while iterates.len() < 4 {
        let next = theta_all(iterates.last().expect("nonempty"))?;
        iterates.push(next);
    }
    let (t1, t3) = (&iterates[1], &iterates[3]);
    let flat: Vec<Vec<Rational>> = t1.iter().map(|m| m.flat().to_vec()).collect();
    let image_rank = if flat.is_empty() { 0 } else { Matrix::from_rows(flat).rank() };
    let deviations: Vec<(usize, usize)> = basis
        .iter()
        .zip(t3)
        .enumerate()
        .filter(|(_, (b, c))| b != c)
        .map(|(k, (b, c))| (k, b.flat().iter().zip(c.flat()).filter(|(x, y)| x != y).count()))
        .collect();
    let theta_cubed_scalar = scalar_ratio(basis, t3);
    Ok(OrderProbe {
        image_rank,
        basis_size: basis.len(),
        theta_cubed_is_identity: deviations.is_empty(),
        deviations,
        theta_cubed_scalar,
        order,
    })
}

fn scalar_ratio(basis: &[RatMatrix], images: &[RatMatrix]) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for (b, c) in basis.iter().zip(images) {
        for (x, y) in b.flat().iter().zip(c.flat()) {
            if x.is_zero() {
                if !y.is_zero() {
                    return None;
                }
                continue;
            }
            let r = *y / *x;
            match ratio {
                None => ratio = Some(r),
                Some(s) if s != r => return None,
                _ => {}
            }
        }
    }
    ratio
}
