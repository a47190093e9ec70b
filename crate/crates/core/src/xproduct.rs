//! Point-dependent octonion products on the unit sphere and the torsion
//! they induce.
//!
//! Every unit octonion `X` carries its own product `a ∘_X b = (aX)(conj(X) b)`,
//! which has `1` as identity and composes norms. Tangent vectors at `X` are
//! written in the right-translated frame `e_i X`. Two tangent vectors `u, v`
//! are bracketed by pulling them back to the identity (`u conj(X)`), taking
//! the `∘_X` commutator there, and translating the result back by `X`. The
//! coefficients of `[e_i X, e_j X]` in the frame `{e_k X}` are `2 T_ijk(X)`.

use serde::Serialize;

use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SolveFailure};
use crate::rational::Rational;

/// An octonion of norm exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UnitPoint(Octonion);

impl UnitPoint {
    pub fn new(value: Octonion) -> Result<Self> {
        let n = value.norm();
        if n == Rational::ONE {
            Ok(UnitPoint(value))
        } else {
            Err(Error::Normalization(format!("norm({value}) = {n}")))
        }
    }

    pub fn one() -> Self {
        UnitPoint(Octonion::ONE)
    }

    pub fn basis(i: usize) -> Self {
        UnitPoint(Octonion::basis(i))
    }

    pub fn value(&self) -> &Octonion {
        &self.0
    }

    pub fn negate(&self) -> Self {
        UnitPoint(-self.0)
    }
}

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn point(terms: &[(usize, i128)], denom: i128) -> UnitPoint {
    let mut c = [Rational::ZERO; 8];
    for &(i, n) in terms {
        c[i] = q(n, denom);
    }
    UnitPoint::new(Octonion::new(c)).expect("catalog point must be unit")
}

/// Exactly-rational points of the seven-sphere used by the verification suite.
pub fn unit_point_catalog() -> Vec<UnitPoint> {
    vec![
        UnitPoint::one(),
        UnitPoint::one().negate(),
        UnitPoint::basis(1),
        UnitPoint::basis(4),
        UnitPoint::basis(7),
        point(&[(0, 3), (1, 4)], 5),
        point(&[(2, 3), (5, 4)], 5),
        point(&[(0, 5), (7, 12)], 13),
        point(&[(0, 8), (6, -15)], 17),
        point(&[(0, 1), (1, 1), (2, 1), (4, 1)], 2),
        point(&[(0, 1), (1, 1), (2, 1), (3, 1)], 2),
        point(&[(0, 1), (1, 2), (2, 2)], 3),
        point(&[(1, 2), (2, 3), (4, 6)], 7),
        point(&[(0, 1), (3, 2), (5, 2), (6, 4)], 5),
        point(&[(0, 1), (1, -1), (2, 1), (3, 1), (4, -2), (5, 2), (6, 2), (7, -3)], 5),
    ]
}

/// Cataloged unit points lying in the quaternionic subalgebra `span{1, e1, e2, e4}`.
pub fn quaternionic_catalog() -> Vec<UnitPoint> {
    unit_point_catalog().into_iter().filter(|p| p.value().support().all(|i| matches!(i, 0 | 1 | 2 | 4))).collect()
}

/// `a ∘_X b = (aX)(conj(X) b)`.
pub fn x_product(a: &Octonion, b: &Octonion, x: &UnitPoint) -> Octonion {
    let x = x.value();
    a.multiply(x).multiply(&x.conjugate().multiply(b))
}

/// `a ∘_{X,Y} b = (aX)(conj(Y) b)`; equals [`x_product`] when `Y = X`.
pub fn xy_product(a: &Octonion, b: &Octonion, x: &UnitPoint, y: &UnitPoint) -> Octonion {
    a.multiply(x.value()).multiply(&y.value().conjugate().multiply(b))
}

pub fn x_commutator(a: &Octonion, b: &Octonion, x: &UnitPoint) -> Octonion {
    x_product(a, b, x) - x_product(b, a, x)
}

/// `e_i X`, the `i`-th tangent frame vector at `X`.
pub fn frame_vector(i: usize, x: &UnitPoint) -> Octonion {
    Octonion::basis(i).multiply(x.value())
}

/// Bracket of two tangent vectors at `X` in the right-translated frame.
pub fn tangent_bracket(u: &Octonion, v: &Octonion, x: &UnitPoint) -> Octonion {
    let xbar = x.value().conjugate();
    let a = u.multiply(&xbar);
    let b = v.multiply(&xbar);
    x_commutator(&a, &b, x).multiply(x.value())
}

/// Totally antisymmetric torsion structure constants at a base point;
/// indices run over `1..=7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionTensor {
    base: UnitPoint,
    t: [[[Rational; 7]; 7]; 7],
}

impl TorsionTensor {
    pub fn base(&self) -> &UnitPoint {
        &self.base
    }

    /// `T_ijk` with `1 <= i, j, k <= 7`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.t[i - 1][j - 1][k - 1]
    }

    /// Every nonzero `(i, j, k) -> T_ijk`, in lexicographic index order.
    pub fn nonzero_entries(&self) -> Vec<((usize, usize, usize), Rational)> {
        let mut out = Vec::new();
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push(((i, j, k), v));
                    }
                }
            }
        }
        out
    }

    /// First `(i, j, k)` at which total antisymmetry fails, if any.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    let v = self.get(i, j, k);
                    if v != -self.get(j, i, k) || v != -self.get(i, k, j) || v != -self.get(k, j, i) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First index triple where the two tensors differ.
    pub fn first_difference(&self, other: &TorsionTensor) -> Option<((usize, usize, usize), Rational, Rational)> {
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    let (a, b) = (self.get(i, j, k), other.get(i, j, k));
                    if a != b {
                        return Some(((i, j, k), a, b));
                    }
                }
            }
        }
        None
    }

    /// Lines `(i,j,k): p/q` for every nonzero entry.
    pub fn render(&self) -> String {
        self.nonzero_entries().into_iter().map(|((i, j, k), v)| format!("({i},{j},{k}): {v}\n")).collect()
    }
}

/// Solves `[e_i X, e_j X] = 2 T_ijk(X) e_k X` for all `i < j` by one exact
/// linear solve in the frame `{e_k X}`.
pub fn torsion_tensor(x: &UnitPoint) -> Result<TorsionTensor> {
    let frame: Vec<Octonion> = (1..=7).map(|k| frame_vector(k, x)).collect();
    let mut basis = Matrix::zeros(8, 7);
    for (k, f) in frame.iter().enumerate() {
        for r in 0..8 {
            basis.set(r, k, f[r]);
        }
    }
    let pairs: Vec<(usize, usize)> = (1..=7).flat_map(|i| (i + 1..=7).map(move |j| (i, j))).collect();
    let mut rhs = Matrix::zeros(8, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let br = tangent_bracket(&frame[i - 1], &frame[j - 1], x);
        for r in 0..8 {
            rhs.set(r, c, br[r]);
        }
    }
    let coeffs = basis.solve(&rhs).map_err(|f| match f {
        SolveFailure::Inconsistent { rhs_column } => {
            let (i, j) = pairs[rhs_column];
            Error::InternalConsistency(format!(
                "bracket of frame vectors {i},{j} at {} leaves the tangent frame",
                x.value()
            ))
        }
        SolveFailure::Underdetermined { rank, .. } => {
            Error::InternalConsistency(format!("tangent frame at {} has rank {rank}", x.value()))
        }
    })?;
    let mut t = [[[Rational::ZERO; 7]; 7]; 7];
    for (c, &(i, j)) in pairs.iter().enumerate() {
        for k in 0..7 {
            let v = coeffs.get(k, c) * Rational::HALF;
            t[i - 1][j - 1][k] = v;
            t[j - 1][i - 1][k] = -v;
        }
    }
    Ok(TorsionTensor { base: *x, t })
}

/// Cyclic sum `[[e_iX, e_jX], e_kX] + [[e_jX, e_kX], e_iX] + [[e_kX, e_iX], e_jX]`.
pub fn jacobi_defect(i: usize, j: usize, k: usize, x: &UnitPoint) -> Result<Octonion> {
    for idx in [i, j, k] {
        if !(1..=7).contains(&idx) {
            return Err(Error::Domain(format!("frame index {idx} outside 1..=7")));
        }
    }
    let (a, b, c) = (frame_vector(i, x), frame_vector(j, x), frame_vector(k, x));
    let br = |u: &Octonion, v: &Octonion| tangent_bracket(u, v, x);
    Ok(br(&br(&a, &b), &c) + br(&br(&b, &c), &a) + br(&br(&c, &a), &b))
}

/// A start point and two successive segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathPair {
    pub start: Octonion,
    pub seg_a: Octonion,
    pub seg_b: Octonion,
}

/// Squared length of `(start seg_a) seg_b - start (seg_a seg_b)`: the gap
/// between the endpoints reached by the two association orders.
pub fn path_discrepancy(p: &PathPair) -> Rational {
    Octonion::associator(&p.start, &p.seg_a, &p.seg_b).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{e, BASIS_PRODUCT};

    #[test]
    fn catalog_points_are_unit() {
        let cat = unit_point_catalog();
        assert!(cat.len() >= 10);
        for p in &cat {
            assert_eq!(p.value().norm(), Rational::ONE);
        }
        assert!(quaternionic_catalog().len() >= 5);
    }

    #[test]
    fn unit_point_rejects_non_unit() {
        assert!(matches!(UnitPoint::new(e(0) + e(1)), Err(Error::Normalization(_))));
    }

    #[test]
    fn x_product_at_identity_is_ordinary_product() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(x_product(&e(i), &e(j), &UnitPoint::one()), e(i) * e(j));
            }
        }
    }

    #[test]
    fn x_product_keeps_unit_at_e1() {
        assert_eq!(x_product(&Octonion::ONE, &Octonion::ONE, &UnitPoint::basis(1)), Octonion::ONE);
    }

    #[test]
    fn xy_product_reduces_to_x_product() {
        let x = unit_point_catalog()[5];
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(xy_product(&e(i), &e(j), &x, &x), x_product(&e(i), &e(j), &x));
                assert_eq!(xy_product(&e(i), &e(j), &UnitPoint::one(), &UnitPoint::one()), e(i) * e(j));
            }
        }
    }

    #[test]
    fn torsion_at_identity_matches_table() {
        let t = torsion_tensor(&UnitPoint::one()).unwrap();
        assert_eq!(t.get(1, 2, 4), Rational::ONE);
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let expected = if i != j && BASIS_PRODUCT[i][j].1 == k {
                        Rational::int(BASIS_PRODUCT[i][j].0 as i128)
                    } else {
                        Rational::ZERO
                    };
                    assert_eq!(t.get(i, j, k), expected, "({i},{j},{k})");
                }
                assert_eq!(t.get(i, i, j), Rational::ZERO);
            }
        }
    }

    #[test]
    fn torsion_varies_with_base_point() {
        let t1 = torsion_tensor(&UnitPoint::one()).unwrap();
        let te1 = torsion_tensor(&UnitPoint::basis(1)).unwrap();
        assert!(te1.first_difference(&t1).is_some());
    }

    #[test]
    fn torsion_render_is_sorted() {
        let t = torsion_tensor(&UnitPoint::one()).unwrap();
        let s = t.render();
        assert!(s.starts_with("(1,2,4): 1\n"));
        assert_eq!(s.lines().count(), 42);
    }

    #[test]
    fn jacobi_defect_examples() {
        let one = UnitPoint::one();
        assert!(jacobi_defect(1, 2, 4, &one).unwrap().is_zero());
        assert!(!jacobi_defect(1, 2, 3, &one).unwrap().is_zero());
        assert_eq!(jacobi_defect(1, 2, 3, &one).unwrap(), -jacobi_defect(2, 1, 3, &one).unwrap());
        assert!(jacobi_defect(0, 1, 2, &one).is_err());
    }

    #[test]
    fn path_discrepancy_examples() {
        let p = PathPair { start: e(1) + e(0), seg_a: e(2), seg_b: e(4) - e(1) };
        assert_eq!(path_discrepancy(&p), Rational::ZERO);
        let p = PathPair { start: e(1), seg_a: e(2), seg_b: e(3) };
        assert_eq!(path_discrepancy(&p), Rational::int(4));
        let p = PathPair { start: e(3), seg_a: e(5), seg_b: Octonion::real(Rational::int(7)) };
        assert_eq!(path_discrepancy(&p), Rational::ZERO);
    }
}
