//! Root systems in quaternionic coordinates `(1, i, j, k)`: the 24 Hurwitz
//! units as the D4 roots, root-system axioms, Dynkin classification and the
//! split of the positive roots into blocks.

pub mod coset;
pub mod dynkin;

pub use coset::{coset_split_report, positive_roots, BlockReport, BlockStatus, CosetSplit, CosetSplitReport};
pub use dynkin::{dynkin_identify, Classification, DynkinComponent, DynkinType, Family};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A vector `(a, b, c, d)` standing for `a + b i + c j + d k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Root(pub [Rational; 4]);

impl Root {
    pub fn ints(a: i128, b: i128, c: i128, d: i128) -> Self {
        Root([a, b, c, d].map(Rational::int))
    }

    pub fn halves(a: i128, b: i128, c: i128, d: i128) -> Self {
        Root([a, b, c, d].map(|x| Rational::new(x, 2)))
    }

    pub fn dot(&self, o: &Root) -> Rational {
        self.0.iter().zip(&o.0).map(|(a, b)| *a * *b).sum()
    }

    pub fn norm(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.map(|x| -x))
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(&self, o: &Root) -> Root {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: Rational) -> Root {
        Root(self.0.map(|x| x * s))
    }

    /// First nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.signum() > 0)
    }

    /// `2 <beta, alpha> / <alpha, alpha>`.
    pub fn cartan_integer(beta: &Root, alpha: &Root) -> Rational {
        Rational::int(2) * beta.dot(alpha) / alpha.norm()
    }

    /// Reflection of `self` in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Root) -> Root {
        self.sub(&alpha.scale(Root::cartan_integer(self, alpha)))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "i", "j", "k"];
        let mut out = String::new();
        for (c, u) in self.0.iter().zip(UNITS) {
            if c.is_zero() {
                continue;
            }
            if c.signum() < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if u.is_empty() || mag != Rational::ONE {
                out.push_str(&mag.to_string());
            }
            out.push_str(u);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({self})")
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A finite set of nonzero vectors, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSet {
    vectors: Vec<Root>,
}

impl RootSet {
    pub fn new(vectors: impl IntoIterator<Item = Root>) -> Result<Self> {
        let set: BTreeSet<Root> = vectors.into_iter().collect();
        if set.iter().any(Root::is_zero) {
            return Err(Error::Domain("root set contains the zero vector".into()));
        }
        Ok(RootSet { vectors: set.into_iter().collect() })
    }

    pub fn vectors(&self) -> &[Root] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.vectors.binary_search(r).is_ok()
    }

    /// The set together with the negatives of its members.
    pub fn with_negatives(&self) -> RootSet {
        RootSet::new(self.vectors.iter().flat_map(|r| [*r, r.neg()])).expect("negatives of nonzero vectors are nonzero")
    }

    /// Distinct values of `<a, b>` over unordered pairs of distinct members.
    pub fn inner_product_spectrum(&self) -> Vec<Rational> {
        let mut s = BTreeSet::new();
        for (a, x) in self.vectors.iter().enumerate() {
            for y in &self.vectors[a + 1..] {
                s.insert(x.dot(y));
            }
        }
        s.into_iter().collect()
    }

    /// Orbit of `start` under the reflections in every member.
    pub fn reflection_orbit(&self, start: &Root) -> BTreeSet<Root> {
        let mut seen = BTreeSet::from([*start]);
        let mut queue = VecDeque::from([*start]);
        while let Some(r) = queue.pop_front() {
            for alpha in &self.vectors {
                let image = r.reflect(alpha);
                if seen.insert(image) {
                    queue.push_back(image);
                }
            }
        }
        seen
    }
}

/// `{±1, ±i, ±j, ±k, (±1 ±i ±j ±k)/2}`.
pub fn d4_roots() -> RootSet {
    let mut v = Vec::with_capacity(24);
    for axis in 0..4 {
        for s in [1, -1] {
            let mut c = [0; 4];
            c[axis] = s;
            v.push(Root::ints(c[0], c[1], c[2], c[3]));
        }
    }
    for mask in 0..16u32 {
        let sign = |bit: u32| if mask & (1 << bit) == 0 { 1 } else { -1 };
        v.push(Root::halves(sign(0), sign(1), sign(2), sign(3)));
    }
    RootSet::new(v).expect("Hurwitz units are nonzero")
}

/// Six vectors of a hexagon in the plane `a + b + c = 0, d = 0`.
pub fn a2_instance() -> RootSet {
    RootSet::new(
        [Root::ints(1, -1, 0, 0), Root::ints(0, 1, -1, 0), Root::ints(1, 0, -1, 0)].iter().flat_map(|r| [*r, r.neg()]),
    )
    .expect("nonzero")
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RootAxiomReport {
    pub size: usize,
    /// A member whose negative is missing.
    pub negation_witness: Option<Root>,
    /// `(alpha, beta)` with `s_alpha(beta)` outside the set.
    pub reflection_witness: Option<(Root, Root, Root)>,
    /// `(alpha, beta, 2<beta,alpha>/<alpha,alpha>)` with a non-integral value.
    pub integrality_witness: Option<(Root, Root, Rational)>,
    /// `(alpha, c alpha)` both present with `c` other than `±1`.
    pub reducedness_witness: Option<(Root, Root)>,
}

impl RootAxiomReport {
    pub fn passes(&self) -> bool {
        self.negation_witness.is_none()
            && self.reflection_witness.is_none()
            && self.integrality_witness.is_none()
            && self.reducedness_witness.is_none()
    }
}

pub fn root_axiom_check(rs: &RootSet) -> Result<RootAxiomReport> {
    if rs.is_empty() {
        return Err(Error::Domain("root axioms need a nonempty set".into()));
    }
    let mut report = RootAxiomReport { size: rs.len(), ..Default::default() };
    report.negation_witness = rs.vectors().iter().find(|r| !rs.contains(&r.neg())).copied();
    'outer: for alpha in rs.vectors() {
        for beta in rs.vectors() {
            let c = Root::cartan_integer(beta, alpha);
            if report.integrality_witness.is_none() && !c.is_integer() {
                report.integrality_witness = Some((*alpha, *beta, c));
            }
            let image = beta.reflect(alpha);
            if report.reflection_witness.is_none() && !rs.contains(&image) {
                report.reflection_witness = Some((*alpha, *beta, image));
            }
            if report.reducedness_witness.is_none()
                && alpha != beta
                && beta.dot(alpha).abs() * beta.dot(alpha).abs() == alpha.norm() * beta.norm()
                && *beta != alpha.neg()
            {
                report.reducedness_witness = Some((*alpha, *beta));
            }
            if report.integrality_witness.is_some()
                && report.reflection_witness.is_some()
                && report.reducedness_witness.is_some()
            {
                break 'outer;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_has_24_unit_roots() {
        let d4 = d4_roots();
        assert_eq!(d4.len(), 24);
        assert!(d4.vectors().iter().all(|r| r.norm() == Rational::ONE));
        assert_eq!(d4.with_negatives(), d4);
        let allowed = [Rational::ZERO, Rational::HALF, -Rational::HALF, Rational::ONE, -Rational::ONE];
        for x in d4.vectors() {
            for y in d4.vectors() {
                assert!(allowed.contains(&x.dot(y)));
            }
        }
    }

    #[test]
    fn axioms_on_examples() {
        assert!(root_axiom_check(&d4_roots()).unwrap().passes());
        let a1 = RootSet::new([Root::ints(0, 1, 0, 0), Root::ints(0, -1, 0, 0)]).unwrap();
        assert!(root_axiom_check(&a1).unwrap().passes());
        let half = RootSet::new([Root::ints(0, 1, 0, 0), Root::ints(0, 0, 1, 0)]).unwrap();
        let r = root_axiom_check(&half).unwrap();
        assert!(!r.passes());
        assert!(r.negation_witness.is_some());
    }

    #[test]
    fn empty_and_zero_sets_are_rejected() {
        assert!(RootSet::new([Root::ints(0, 0, 0, 0)]).is_err());
        assert!(root_axiom_check(&RootSet::new([]).unwrap()).is_err());
    }

    #[test]
    fn non_reduced_sets_are_detected() {
        let bc1 = RootSet::new([
            Root::ints(1, 0, 0, 0),
            Root::ints(-1, 0, 0, 0),
            Root::ints(2, 0, 0, 0),
            Root::ints(-2, 0, 0, 0),
        ])
        .unwrap();
        assert!(root_axiom_check(&bc1).unwrap().reducedness_witness.is_some());
    }

    #[test]
    fn weyl_orbit_of_one_root_is_everything() {
        let d4 = d4_roots();
        for r in d4.vectors() {
            assert_eq!(d4.reflection_orbit(r).len(), 24);
        }
    }

    #[test]
    fn display_uses_quaternion_units() {
        assert_eq!(Root::halves(1, -1, 1, -1).to_string(), "1/2-1/2i+1/2j-1/2k");
        assert_eq!(Root::ints(0, 0, -1, 0).to_string(), "-j");
    }
}
