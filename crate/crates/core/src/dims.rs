//! Dimension bookkeeping for the groups, cosets, symmetric spaces and
//! Shilov boundaries that appear in the construction.
//!
//! Exceptional and `D_n` dimensions come from the classification formulas;
//! none of these groups is constructed here.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::roots::positive_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Spin(u64),
    So(u64),
    Su(u64),
    U(u64),
    /// The rank-`n` orthogonal algebra `D_n`, i.e. `Spin(2n)`.
    D(u64),
    G2,
    E6,
}

impl Group {
    pub fn dim(&self) -> u64 {
        match *self {
            Group::Spin(n) | Group::So(n) => n * n.saturating_sub(1) / 2,
            Group::Su(n) => (n * n).saturating_sub(1),
            Group::U(n) => n * n,
            Group::D(n) => n * (2 * n).saturating_sub(1),
            Group::G2 => 14,
            Group::E6 => 78,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Spin(n) => write!(f, "Spin({n})"),
            Group::So(n) => write!(f, "SO({n})"),
            Group::Su(n) => write!(f, "SU({n})"),
            Group::U(n) => write!(f, "U({n})"),
            Group::D(n) => write!(f, "D{n}"),
            Group::G2 => f.write_str("G2"),
            Group::E6 => f.write_str("E6"),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Group {
    type Err = Error;

    /// Accepts `Spin(n)`, `SO(n)`, `SU(n)`, `U(n)`, `Dn`, `G2` and `E6`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Domain(format!("unrecognized group `{s}`"));
        let t = s.trim();
        match t {
            "G2" => return Ok(Group::G2),
            "E6" => return Ok(Group::E6),
            _ => {}
        }
        if let Some(n) = t.strip_prefix('D') {
            let n: u64 = n.parse().map_err(|_| unknown())?;
            return if n >= 1 { Ok(Group::D(n)) } else { Err(unknown()) };
        }
        let (head, rest) = t.split_once('(').ok_or_else(unknown)?;
        let n: u64 = rest.strip_suffix(')').ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        match head {
            "Spin" => Ok(Group::Spin(n)),
            "SO" => Ok(Group::So(n)),
            "SU" => Ok(Group::Su(n)),
            "U" => Ok(Group::U(n)),
            _ => Err(unknown()),
        }
    }
}

pub fn group_dim(name: &str) -> Result<u64> {
    Ok(name.parse::<Group>()?.dim())
}

/// Real manifolds whose dimensions are compared against coset dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    Sphere(u64),
    ComplexProjective(u64),
    RealProjective(u64),
    Product(Vec<Space>),
}

impl Space {
    pub fn dim(&self) -> u64 {
        match self {
            Space::Sphere(n) | Space::RealProjective(n) => *n,
            Space::ComplexProjective(n) => 2 * n,
            Space::Product(parts) => parts.iter().map(Space::dim).sum(),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Sphere(n) => write!(f, "S{n}"),
            Space::ComplexProjective(n) => write!(f, "CP{n}"),
            Space::RealProjective(n) => write!(f, "RP{n}"),
            Space::Product(parts) => {
                let p: Vec<String> = parts.iter().map(ToString::to_string).collect();
                f.write_str(&p.join("x"))
            }
        }
    }
}

impl Serialize for Space {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Consistent,
    Discrepancy,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricSpaceRow {
    pub gauge_group: Group,
    pub numerator: Group,
    pub denominator: Vec<Group>,
    pub coset_dim: u64,
    pub listed_space: Space,
    pub listed_dim: u64,
    pub status: RowStatus,
}

fn row(gauge: Group, numerator: Group, denominator: Vec<Group>, listed_space: Space) -> SymmetricSpaceRow {
    let coset_dim = numerator.dim() - denominator.iter().map(Group::dim).sum::<u64>();
    let listed_dim = listed_space.dim();
    SymmetricSpaceRow {
        gauge_group: gauge,
        numerator,
        denominator,
        coset_dim,
        listed_dim,
        listed_space,
        status: if coset_dim == listed_dim { RowStatus::Consistent } else { RowStatus::Discrepancy },
    }
}

/// One row per force: `dim G - dim H` against the dimension of the listed space.
pub fn symmetric_space_check() -> Vec<SymmetricSpaceRow> {
    vec![
        row(Group::Spin(5), Group::Spin(5), vec![Group::Spin(4)], Space::Sphere(4)),
        row(Group::Su(3), Group::Su(3), vec![Group::Su(2), Group::U(1)], Space::ComplexProjective(2)),
        row(Group::Su(2), Group::Su(2), vec![Group::U(1)], Space::Product(vec![Space::Sphere(2), Space::Sphere(2)])),
        row(Group::U(1), Group::U(1), vec![], Space::Product(vec![Space::Sphere(1); 4])),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct ShilovCase {
    pub name: String,
    pub coset_real_dim: u64,
    /// Half the real coset dimension (or the compared count for the root case).
    pub compared_dim: u64,
    pub boundary: String,
    pub boundary_dim: u64,
    pub matches: bool,
}

pub fn shilov_check() -> Vec<ShilovCase> {
    let s7_rp1 = Space::Product(vec![Space::Sphere(7), Space::RealProjective(1)]);
    let e6 = Group::E6.dim() - Group::D(5).dim() - Group::U(1).dim();
    let d5 = Group::D(5).dim() - Group::D(4).dim() - Group::U(1).dim();
    let spin8 = Group::Spin(8).dim() - Group::U(4).dim();
    let positives = positive_roots().len() as u64;
    vec![
        ShilovCase {
            name: "E6/(D5xU(1))".into(),
            coset_real_dim: e6,
            compared_dim: e6 / 2,
            boundary: format!("2 copies of {s7_rp1}"),
            boundary_dim: 2 * s7_rp1.dim(),
            matches: e6.is_multiple_of(2) && e6 / 2 == 2 * s7_rp1.dim(),
        },
        ShilovCase {
            name: "D5/(D4xU(1))".into(),
            coset_real_dim: d5,
            compared_dim: d5 / 2,
            boundary: s7_rp1.to_string(),
            boundary_dim: s7_rp1.dim(),
            matches: d5.is_multiple_of(2) && d5 / 2 == s7_rp1.dim(),
        },
        ShilovCase {
            name: "Spin(8)/U(4)".into(),
            coset_real_dim: spin8,
            compared_dim: spin8,
            boundary: "positive D4 roots".into(),
            boundary_dim: positives,
            matches: spin8 == positives,
        },
    ]
}
