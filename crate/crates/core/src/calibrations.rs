//! The associative 3-form and coassociative 4-form on the imaginary
//! octonions, associative 3-planes, quaternionic subalgebras and their
//! orthogonal complements.

use serde::Serialize;

use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;
use crate::rational::Rational;

fn require_imaginary(args: &[&Octonion]) -> Result<()> {
    match args.iter().find(|x| !x.is_imaginary()) {
        Some(x) => Err(Error::Domain(format!("argument {x} is not imaginary"))),
        None => Ok(()),
    }
}

/// `phi(x, y, z) = Re(x conj(y z))` on imaginary arguments.
pub fn phi(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<Rational> {
    require_imaginary(&[x, y, z])?;
    Ok(x.inner(&y.multiply(z)))
}

/// `psi(x, y, z, w) = 1/2 <x, y(conj(z) w) - w(conj(z) y)>` on imaginary arguments.
pub fn psi(x: &Octonion, y: &Octonion, z: &Octonion, w: &Octonion) -> Result<Rational> {
    require_imaginary(&[x, y, z, w])?;
    let zb = z.conjugate();
    let v = y.multiply(&zb.multiply(w)) - w.multiply(&zb.multiply(y));
    Ok(x.inner(&v) * Rational::HALF)
}

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

/// Components `phi_ijk`, indices `1..=7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    components: [[[Rational; 7]; 7]; 7],
}

impl ThreeForm {
    pub fn associative() -> Self {
        let mut c = [[[Rational::ZERO; 7]; 7]; 7];
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    c[i - 1][j - 1][k - 1] = phi(&e(i), &e(j), &e(k)).expect("basis units are imaginary");
                }
            }
        }
        ThreeForm { components: c }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.components[i - 1][j - 1][k - 1]
    }

    /// Increasing triples with a nonzero component.
    pub fn support(&self) -> Vec<[usize; 3]> {
        combinations(3)
            .into_iter()
            .map(|c| [c[0], c[1], c[2]])
            .filter(|&[i, j, k]| !self.get(i, j, k).is_zero())
            .collect()
    }
}

/// Components `psi_ijkl`, indices `1..=7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourForm {
    components: Vec<Rational>,
}

impl FourForm {
    pub fn coassociative() -> Self {
        let mut components = Vec::with_capacity(7usize.pow(4));
        for i in 1..=7 {
            for j in 1..=7 {
                for k in 1..=7 {
                    for l in 1..=7 {
                        components.push(psi(&e(i), &e(j), &e(k), &e(l)).expect("basis units are imaginary"));
                    }
                }
            }
        }
        FourForm { components }
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        self.components[(((i - 1) * 7 + (j - 1)) * 7 + (k - 1)) * 7 + (l - 1)]
    }

    pub fn support(&self) -> Vec<[usize; 4]> {
        combinations(4)
            .into_iter()
            .map(|c| [c[0], c[1], c[2], c[3]])
            .filter(|&[i, j, k, l]| !self.get(i, j, k, l).is_zero())
            .collect()
    }
}

/// Increasing `size`-subsets of `1..=7`, lexicographic.
pub fn combinations(size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..=7 {
            cur.push(i);
            go(i + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, size, &mut Vec::new(), &mut out);
    out
}

fn require_orthonormal(vs: &[&Octonion]) -> Result<()> {
    for (a, x) in vs.iter().enumerate() {
        if x.norm() != Rational::ONE {
            return Err(Error::Domain(format!("{x} is not a unit vector")));
        }
        for y in &vs[a + 1..] {
            if !x.inner(y).is_zero() {
                return Err(Error::Domain(format!("{x} and {y} are not orthogonal")));
            }
        }
    }
    Ok(())
}

/// Whether the orthonormal imaginary triple spans an associative 3-plane.
///
/// The associator test and the calibration test `|phi| = 1` are computed
/// independently; disagreement is reported as an internal error.
pub fn is_associative_plane(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<bool> {
    require_imaginary(&[x, y, z])?;
    require_orthonormal(&[x, y, z])?;
    let by_associator = Octonion::associator(x, y, z).is_zero();
    let by_calibration = phi(x, y, z)?.abs() == Rational::ONE;
    if by_associator != by_calibration {
        return Err(Error::InternalConsistency(format!("associator and calibration disagree on ({x}, {y}, {z})")));
    }
    Ok(by_associator)
}

/// A unital subalgebra given by an orthonormal basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subalgebra {
    pub basis: Vec<Octonion>,
    pub dim: usize,
}

impl Subalgebra {
    fn span(&self) -> EchelonSpan {
        let mut s = EchelonSpan::new(8);
        for b in &self.basis {
            s.insert(b.coeffs());
        }
        s
    }

    pub fn contains(&self, x: &Octonion) -> bool {
        self.span().contains(x.coeffs())
    }

    /// First basis pair whose product leaves the span.
    pub fn closure_violation(&self) -> Option<(Octonion, Octonion)> {
        let span = self.span();
        for a in &self.basis {
            for b in &self.basis {
                if !span.contains(a.multiply(b).coeffs()) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.closure_violation().is_none() && self.basis.iter().all(|b| self.contains(&b.conjugate()))
    }

    /// First basis triple with a nonzero associator.
    pub fn associator_violation(&self) -> Option<[Octonion; 3]> {
        for a in &self.basis {
            for b in &self.basis {
                for c in &self.basis {
                    if !Octonion::associator(a, b, c).is_zero() {
                        return Some([*a, *b, *c]);
                    }
                }
            }
        }
        None
    }
}

/// The quaternionic subalgebra with basis `{1, a, b, ab}`.
pub fn quaternion_hull(a: &Octonion, b: &Octonion) -> Result<Subalgebra> {
    let degenerate = |why: &str| Error::Degenerate(format!("quaternion hull of {a}, {b}: {why}"));
    if !a.is_imaginary() || !b.is_imaginary() {
        return Err(degenerate("arguments must be imaginary"));
    }
    if a.norm() != Rational::ONE || b.norm() != Rational::ONE {
        return Err(degenerate("arguments must have unit norm"));
    }
    if !a.inner(b).is_zero() {
        return Err(degenerate("arguments must be orthogonal"));
    }
    let ab = a.multiply(b);
    debug_assert!(ab.re().is_zero());
    Ok(Subalgebra { basis: vec![Octonion::ONE, *a, *b, ab], dim: 4 })
}

/// Writes `n > 0` as a sum of four integer squares by direct search.
fn four_squares(n: i128) -> [i128; 4] {
    let root = |v: i128| {
        let mut r = (v as f64).sqrt() as i128;
        while r * r > v {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= v {
            r += 1;
        }
        r
    };
    for a in (0..=root(n)).rev() {
        let ra = n - a * a;
        for b in (0..=root(ra).min(a)).rev() {
            let rb = ra - b * b;
            for c in (0..=root(rb).min(b)).rev() {
                let rc = rb - c * c;
                let d = root(rc);
                if d * d == rc && d <= c {
                    return [a, b, c, d];
                }
            }
        }
    }
    unreachable!("every positive integer is a sum of four squares")
}

/// Orthonormal basis `{u, a u, b u, (ab) u}` of the orthogonal complement of
/// a quaternionic subalgebra `{1, a, b, ab}`, with `u` an exactly-rational
/// unit vector orthogonal to the subalgebra.
pub fn coassociative_complement(s: &Subalgebra) -> Result<Vec<Octonion>> {
    if s.dim != 4 || s.basis.len() != 4 {
        return Err(Error::Domain(format!("expected a 4-dimensional subalgebra, got dimension {}", s.dim)));
    }
    if s.basis[0] != Octonion::ONE {
        return Err(Error::Domain("subalgebra basis must start with 1".into()));
    }
    let refs: Vec<&Octonion> = s.basis.iter().collect();
    require_orthonormal(&refs)?;
    let (a, b, ab) = (s.basis[1], s.basis[2], s.basis[3]);
    if a.multiply(&b) != ab {
        return Err(Error::Domain("subalgebra basis must have the form {1, a, b, ab}".into()));
    }
    let project = |v: Octonion| s.basis.iter().fold(v, |acc, h| acc - h.scale(v.inner(h)));
    let p = (1..8)
        .map(|k| project(Octonion::basis(k)))
        .find(|p| !p.is_zero())
        .ok_or_else(|| Error::InternalConsistency("subalgebra spans every basis direction".into()))?;
    // {p, ap, bp, (ab)p} is orthogonal with common squared length n = num/den;
    // a unit combination needs coefficients s_i/num with sum s_i^2 = num*den.
    let n = p.norm();
    let frame = [p, a.multiply(&p), b.multiply(&p), ab.multiply(&p)];
    let sq = four_squares(n.numer() * n.denom());
    let u = frame.iter().zip(sq).fold(Octonion::ZERO, |acc, (f, c)| acc + f.scale(Rational::new(c, n.numer())));
    debug_assert_eq!(u.norm(), Rational::ONE);
    Ok(vec![u, a.multiply(&u), b.multiply(&u), ab.multiply(&u)])
}

/// Why adjoining a direction to an associative subalgebra fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum ExtensionFailure {
    NotClosed { left: Octonion, right: Octonion },
    NotAssociative { witness: [Octonion; 3] },
}

/// Adjoins `extra` to `s` and reports how the five-dimensional span fails
/// to be an associative subalgebra, or `None` if it is one.
pub fn extension_failure(s: &Subalgebra, extra: &Octonion) -> Option<ExtensionFailure> {
    let mut basis = s.basis.clone();
    basis.push(*extra);
    let ext = Subalgebra { dim: basis.len(), basis };
    if let Some((left, right)) = ext.closure_violation() {
        return Some(ExtensionFailure::NotClosed { left, right });
    }
    ext.associator_violation().map(|witness| ExtensionFailure::NotAssociative { witness })
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeMismatch {
    pub quadruple: [usize; 4],
    pub psi: Rational,
    pub star_phi: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeReport {
    pub orientation: i32,
    pub compared: usize,
    pub agreements: usize,
    pub mismatches: Vec<HodgeMismatch>,
}

impl HodgeReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Compares `psi_ijkl` with `(*phi)_ijkl = sign(ijkl abc) phi_abc` on all 35
/// increasing quadruples, where `abc` is the complementary triple and the
/// volume form is `orientation * e1 ^ ... ^ e7`.
pub fn hodge_dual_check(orientation: i32) -> HodgeReport {
    assert!(orientation == 1 || orientation == -1, "orientation must be +1 or -1");
    let three = ThreeForm::associative();
    let four = FourForm::coassociative();
    let mut mismatches = Vec::new();
    let quads = combinations(4);
    for q in &quads {
        let comp: Vec<usize> = (1..=7).filter(|i| !q.contains(i)).collect();
        let order: Vec<usize> = q.iter().chain(&comp).copied().collect();
        let sign = permutation_sign(&order) * orientation;
        let star_phi = three.get(comp[0], comp[1], comp[2]) * Rational::int(sign.into());
        let psi_v = four.get(q[0], q[1], q[2], q[3]);
        if psi_v != star_phi {
            mismatches.push(HodgeMismatch { quadruple: [q[0], q[1], q[2], q[3]], psi: psi_v, star_phi });
        }
    }
    HodgeReport { orientation, compared: quads.len(), agreements: quads.len() - mismatches.len(), mismatches }
}

const PYTHAGOREAN: [(i128, i128, i128); 5] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)];

fn rotate(v: &Octonion, p: usize, q: usize, (a, b, c): (i128, i128, i128)) -> Octonion {
    let (cs, sn) = (Rational::new(a, c), Rational::new(b, c));
    let mut out = *v.coeffs();
    out[p] = cs * v[p] - sn * v[q];
    out[q] = sn * v[p] + cs * v[q];
    Octonion::new(out)
}

/// `count` orthonormal imaginary triples with rational coordinates: basis
/// triples moved by two rational plane rotations of the imaginary space.
pub fn orthonormal_triple_catalog(count: usize) -> Vec<[Octonion; 3]> {
    let triples = combinations(3);
    let planes: Vec<(usize, usize)> = (1..=7).flat_map(|p| (p + 1..=7).map(move |q| (p, q))).collect();
    (0..count)
        .map(|n| {
            let t = &triples[n % triples.len()];
            let (p1, q1) = planes[(n * 7) % planes.len()];
            let (p2, q2) = planes[(n * 11 + 5) % planes.len()];
            let (r1, r2) = (PYTHAGOREAN[n % 5], PYTHAGOREAN[(n / 5) % 5]);
            let mv = |i: usize| rotate(&rotate(&e(i), p1, q1, r1), p2, q2, r2);
            [mv(t[0]), mv(t[1]), mv(t[2])]
        })
        .collect()
}
