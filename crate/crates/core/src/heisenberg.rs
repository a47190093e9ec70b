//! Strictly triangular 3×3 matrices with octonion entries.
//!
//! Only the three off-diagonal slots are stored. An upper element is
//!
//! ```text
//! [0  creator  central    ]
//! [0  0        annihilator]
//! [0  0        0          ]
//! ```
//!
//! and a lower element is the conjugate transpose of one, stored after
//! reversing the index order (`i -> 4 - i`) so the same three slots and the
//! same product formula serve both. Products never mix orientations: the sum
//! of an upper and a lower matrix is not nilpotent and has no place here.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    #[default]
    Upper,
    Lower,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Upper => Orientation::Lower,
            Orientation::Lower => Orientation::Upper,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HeisenbergElement {
    pub creator: Octonion,
    pub annihilator: Octonion,
    pub central: Octonion,
    pub orientation: Orientation,
}

impl HeisenbergElement {
    pub fn new(creator: Octonion, annihilator: Octonion, central: Octonion) -> Self {
        HeisenbergElement { creator, annihilator, central, orientation: Orientation::Upper }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn central_only(central: Octonion) -> Self {
        Self::new(Octonion::ZERO, Octonion::ZERO, central)
    }

    pub fn is_zero(&self) -> bool {
        self.creator.is_zero() && self.annihilator.is_zero() && self.central.is_zero()
    }

    pub fn is_central_only(&self) -> bool {
        self.creator.is_zero() && self.annihilator.is_zero()
    }

    fn with_orientation(mut self, o: Orientation) -> Self {
        self.orientation = o;
        self
    }

    /// The dense matrix, rows indexed from 0. Lower elements are placed below the diagonal.
    pub fn to_matrix(&self) -> [[Octonion; 3]; 3] {
        let mut m: [[Octonion; 3]; 3] = Default::default();
        match self.orientation {
            Orientation::Upper => {
                m[0][1] = self.creator;
                m[1][2] = self.annihilator;
                m[0][2] = self.central;
            }
            Orientation::Lower => {
                // reversed storage: slot (a, b) sits at (2 - a, 2 - b)
                m[2][1] = self.creator;
                m[1][0] = self.annihilator;
                m[2][0] = self.central;
            }
        }
        m
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        same_orientation(self, rhs)?;
        Ok(HeisenbergElement {
            creator: self.creator + rhs.creator,
            annihilator: self.annihilator + rhs.annihilator,
            central: self.central + rhs.central,
            orientation: self.orientation,
        })
    }
}

fn same_orientation(a: &HeisenbergElement, b: &HeisenbergElement) -> Result<()> {
    if a.orientation == b.orientation {
        Ok(())
    } else {
        Err(Error::Domain("upper and lower triangular elements do not combine".into()))
    }
}

/// Matrix product. Only the corner survives: `central = m1.creator * m2.annihilator`.
pub fn h_multiply(m1: &HeisenbergElement, m2: &HeisenbergElement) -> Result<HeisenbergElement> {
    same_orientation(m1, m2)?;
    let corner = m1.creator.multiply(&m2.annihilator);
    Ok(HeisenbergElement::central_only(corner).with_orientation(m1.orientation))
}

pub fn h_bracket(m1: &HeisenbergElement, m2: &HeisenbergElement) -> Result<HeisenbergElement> {
    let a = h_multiply(m1, m2)?;
    let b = h_multiply(m2, m1)?;
    Ok(HeisenbergElement::central_only(a.central - b.central).with_orientation(m1.orientation))
}

/// Conjugate transpose with octonion conjugation.
pub fn h_dagger(m: &HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement {
        creator: m.annihilator.conjugate(),
        annihilator: m.creator.conjugate(),
        central: m.central.conjugate(),
        orientation: m.orientation.flipped(),
    }
}

/// Dense 3×3 product, used to cross-check the slot formula.
pub fn dense_multiply(a: &[[Octonion; 3]; 3], b: &[[Octonion; 3]; 3]) -> [[Octonion; 3]; 3] {
    let mut out: [[Octonion; 3]; 3] = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..3 {
                *cell = *cell + a[i][k].multiply(&b[k][j]);
            }
        }
    }
    out
}

/// Basis-valued elements: every slot is one of `e0..e7`, optionally also zero.
pub fn basis_valued_elements(include_zero: bool) -> Vec<HeisenbergElement> {
    let mut slot: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
    if include_zero {
        slot.insert(0, Octonion::ZERO);
    }
    let mut out = Vec::with_capacity(slot.len().pow(3));
    for c in &slot {
        for a in &slot {
            for z in &slot {
                out.push(HeisenbergElement::new(*c, *a, *z));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyReport {
    pub elements: usize,
    pub pairs: usize,
    /// Distinct values taken by length-2 products.
    pub distinct_pair_products: usize,
    pub pair_products_central_only: bool,
    pub triple_checks_left: usize,
    pub triple_checks_right: usize,
    pub first_nonzero_triple: Option<(usize, usize, usize)>,
    pub nilpotent_index_3: bool,
}

/// Exhaustive over the 512 basis-valued upper elements.
///
/// All 512² pair products are computed. Triple products are then taken over
/// the distinct pair-product values, which covers every `(m1 m2) m3` and
/// `m1 (m2 m3)` without repeating identical work.
pub fn nilpotency_check() -> Result<NilpotencyReport> {
    let elems = basis_valued_elements(false);
    // insertion order kept so witnesses are reproducible
    let mut seen: HashSet<HeisenbergElement> = HashSet::new();
    let mut products = Vec::new();
    let mut first_pair = None;
    for (i, m1) in elems.iter().enumerate() {
        for (j, m2) in elems.iter().enumerate() {
            let p = h_multiply(m1, m2)?;
            if first_pair.is_none() && !p.is_central_only() {
                first_pair = Some((i, j));
            }
            if seen.insert(p) {
                products.push(p);
            }
        }
    }
    let mut left = 0;
    let mut right = 0;
    let mut first_nonzero_triple = None;
    for (pi, p) in products.iter().enumerate() {
        for (k, m) in elems.iter().enumerate() {
            left += 1;
            right += 1;
            let l = h_multiply(p, m)?;
            let r = h_multiply(m, p)?;
            if first_nonzero_triple.is_none() && (!l.is_zero() || !r.is_zero()) {
                first_nonzero_triple = Some((pi, k, usize::from(l.is_zero())));
            }
        }
    }
    Ok(NilpotencyReport {
        elements: elems.len(),
        pairs: elems.len() * elems.len(),
        distinct_pair_products: products.len(),
        pair_products_central_only: first_pair.is_none(),
        triple_checks_left: left,
        triple_checks_right: right,
        nilpotent_index_3: first_pair.is_none() && first_nonzero_triple.is_none(),
        first_nonzero_triple,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub elements: usize,
    pub central_count: usize,
    pub central_only_count: usize,
    /// An element whose centrality disagrees with having empty creator and annihilator slots.
    pub mismatch: Option<HeisenbergElement>,
}

/// Brute force over the 9³ elements with slots in `{0, e0..e7}`.
pub fn center_check() -> Result<CenterReport> {
    let elems = basis_valued_elements(true);
    let mut central_count = 0;
    let mut mismatch = None;
    for z in &elems {
        let mut central = true;
        for m in &elems {
            if !h_bracket(z, m)?.is_zero() {
                central = false;
                break;
            }
        }
        central_count += usize::from(central);
        if mismatch.is_none() && central != z.is_central_only() {
            mismatch = Some(*z);
        }
    }
    Ok(CenterReport {
        elements: elems.len(),
        central_count,
        central_only_count: elems.iter().filter(|e| e.is_central_only()).count(),
        mismatch,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketSpanReport {
    /// Span of the corners `[x, y]` from elements with equal creator and annihilator.
    pub diagonal_bracket_dim: usize,
    pub commutator_dim: usize,
    /// Span of every bracket corner over basis creators and annihilators.
    pub full_bracket_dim: usize,
    pub diagonal_equals_commutators: bool,
    pub commutators_inside_full: bool,
}

fn coeff_vec(x: &Octonion) -> Vec<Rational> {
    x.coeffs().to_vec()
}

/// Compares bracket corners with the span of octonion commutators of basis units.
pub fn bracket_span_check() -> Result<BracketSpanReport> {
    let basis: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
    let mut diag = EchelonSpan::new(8);
    let mut comm = EchelonSpan::new(8);
    let mut full = EchelonSpan::new(8);
    for x in &basis {
        for y in &basis {
            comm.insert(&coeff_vec(&Octonion::commutator(x, y)));
            let mx = HeisenbergElement::new(*x, *x, Octonion::ZERO);
            let my = HeisenbergElement::new(*y, *y, Octonion::ZERO);
            diag.insert(&coeff_vec(&h_bracket(&mx, &my)?.central));
            for a in &basis {
                for b in &basis {
                    let m1 = HeisenbergElement::new(*x, *a, Octonion::ZERO);
                    let m2 = HeisenbergElement::new(*y, *b, Octonion::ZERO);
                    full.insert(&coeff_vec(&h_bracket(&m1, &m2)?.central));
                }
            }
        }
    }
    let diagonal_equals_commutators = diag.dim() == comm.dim() && comm.reduced_rows().iter().all(|r| diag.contains(r));
    let commutators_inside_full = comm.reduced_rows().iter().all(|r| full.contains(r));
    Ok(BracketSpanReport {
        diagonal_bracket_dim: diag.dim(),
        commutator_dim: comm.dim(),
        full_bracket_dim: full.dim(),
        diagonal_equals_commutators,
        commutators_inside_full,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::e;

    fn creator(x: Octonion) -> HeisenbergElement {
        HeisenbergElement::new(x, Octonion::ZERO, Octonion::ZERO)
    }

    fn annihilator(x: Octonion) -> HeisenbergElement {
        HeisenbergElement::new(Octonion::ZERO, x, Octonion::ZERO)
    }

    #[test]
    fn product_lands_in_the_corner() {
        let p = h_multiply(&creator(e(1)), &annihilator(e(2))).unwrap();
        assert!(p.is_central_only());
        assert_eq!(p.central, e(4));
        let z = HeisenbergElement::central_only(e(3));
        let m = HeisenbergElement::new(e(1), e(2), e(5));
        assert!(h_multiply(&z, &m).unwrap().is_zero());
        assert!(h_multiply(&m, &z).unwrap().is_zero());
        assert!(h_multiply(&z, &z).unwrap().is_zero());
    }

    #[test]
    fn bracket_examples() {
        let m1 = HeisenbergElement::new(e(1), e(1), Octonion::ZERO);
        let m2 = HeisenbergElement::new(e(2), e(2), Octonion::ZERO);
        assert_eq!(h_bracket(&m1, &m2).unwrap().central, e(4).scale(Rational::int(2)));
        assert!(h_bracket(&m1, &m1).unwrap().is_zero());
        let z1 = HeisenbergElement::central_only(e(3));
        let z2 = HeisenbergElement::central_only(e(6));
        assert!(h_bracket(&z1, &z2).unwrap().is_zero());
    }

    #[test]
    fn dagger_is_an_involution_and_swaps_roles() {
        let m = HeisenbergElement::new(
            Octonion::from_ints([1, 2, 0, -1, 0, 0, 3, 0]),
            e(5),
            Octonion::from_ints([0, 0, 1, 0, 0, 0, 0, -2]),
        );
        assert_eq!(h_dagger(&h_dagger(&m)), m);
        let d = h_dagger(&creator(e(1)));
        assert_eq!(d.orientation, Orientation::Lower);
        assert!(d.creator.is_zero());
        assert_eq!(d.annihilator, -e(1));
        assert_eq!(d.annihilator.norm(), Rational::ONE);
    }

    #[test]
    fn dense_product_agrees_with_slot_formula() {
        let samples = [
            HeisenbergElement::new(e(1), e(2), e(3)),
            HeisenbergElement::new(Octonion::from_ints([1, 0, 2, 0, 0, -1, 0, 0]), e(7), e(0)),
            HeisenbergElement::new(e(6), Octonion::from_ints([0, 1, 1, 1, 0, 0, 0, 1]), e(4)),
        ];
        for a in &samples {
            for b in &samples {
                for (x, y) in [(*a, *b), (h_dagger(a), h_dagger(b))] {
                    let dense = dense_multiply(&x.to_matrix(), &y.to_matrix());
                    assert_eq!(dense, h_multiply(&x, &y).unwrap().to_matrix());
                }
            }
        }
    }

    #[test]
    fn dagger_reverses_products() {
        let a = HeisenbergElement::new(e(1), e(3), e(2));
        let b = HeisenbergElement::new(e(5), e(6), e(7));
        let lhs = h_dagger(&h_multiply(&a, &b).unwrap());
        let rhs = h_multiply(&h_dagger(&b), &h_dagger(&a)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_orientations_are_rejected() {
        let a = creator(e(1));
        assert!(h_multiply(&a, &h_dagger(&a)).is_err());
        assert!(a.add(&h_dagger(&a)).is_err());
    }

    #[test]
    fn basis_valued_triples_vanish() {
        let r = nilpotency_check().unwrap();
        assert_eq!(r.elements, 512);
        assert!(r.pair_products_central_only);
        assert!(r.nilpotent_index_3, "{:?}", r.first_nonzero_triple);
        assert_eq!(r.distinct_pair_products, 16);
    }

    #[test]
    fn center_is_the_corner() {
        let r = center_check().unwrap();
        assert_eq!(r.elements, 729);
        assert_eq!(r.central_count, 9);
        assert_eq!(r.central_only_count, 9);
        assert!(r.mismatch.is_none());
    }

    #[test]
    fn bracket_span() {
        let r = bracket_span_check().unwrap();
        assert_eq!(r.commutator_dim, 7);
        assert!(r.diagonal_equals_commutators);
        assert_eq!(r.full_bracket_dim, 8);
        assert!(r.commutators_inside_full);
    }
}
