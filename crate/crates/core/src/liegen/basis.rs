use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;

use super::matrix::RatMatrix;

/// Bracket generations allowed before closure is declared divergent.
pub const MAX_GENERATIONS: usize = 10;

/// Linearly independent matrices, in insertion order, together with the
/// reduced echelon form of their span.
#[derive(Clone, Debug)]
pub struct LieBasis {
    n: usize,
    members: Vec<RatMatrix>,
    span: EchelonSpan,
    closed: bool,
}

impl LieBasis {
    pub fn empty(n: usize) -> Self {
        LieBasis { n, members: Vec::new(), span: EchelonSpan::new(n * n), closed: true }
    }

    /// Keeps the independent members of `mats`, in order, and tests closure.
    pub fn from_members(n: usize, mats: impl IntoIterator<Item = RatMatrix>) -> Result<Self> {
        let mut b = LieBasis::empty(n);
        for m in mats {
            b.push(m)?;
        }
        b.closed = b.bracket_closure_witness().is_none();
        Ok(b)
    }

    fn push(&mut self, m: RatMatrix) -> Result<bool> {
        if m.dim() != self.n {
            return Err(Error::Domain(format!("matrix of size {} in a {}x{} basis", m.dim(), self.n, self.n)));
        }
        let added = self.span.insert(m.flat());
        if added {
            self.members.push(m);
        }
        Ok(added)
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[RatMatrix] {
        &self.members
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        m.dim() == self.n && self.span.contains(m.flat())
    }

    /// Exact rank test: every member of `other` lies in this span.
    pub fn contains_span(&self, other: &LieBasis) -> bool {
        other.members.iter().all(|m| self.contains(m))
    }

    /// First member pair whose bracket leaves the span.
    pub fn bracket_closure_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if !self.contains(&self.members[i].bracket(&self.members[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// SHA-256 of the canonical reduced row echelon form of the span, hex encoded.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("n={};dim={};", self.n, self.dim()));
        for row in self.span.reduced_rows() {
            let s: Vec<String> = row.iter().map(ToString::to_string).collect();
            hasher.update(s.join(","));
            hasher.update(";");
        }
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Smallest bracket-closed rational span containing `gens`.
pub fn lie_closure(gens: &[RatMatrix]) -> Result<LieBasis> {
    let n = gens.first().map_or(0, RatMatrix::dim);
    let mut basis = LieBasis::empty(n);
    for g in gens {
        basis.push(g.clone())?;
    }
    let mut fresh_from = 0;
    for _ in 0..MAX_GENERATIONS {
        let len = basis.members.len();
        let mut found = false;
        for j in fresh_from..len {
            for i in 0..j {
                let br = basis.members[i].bracket(&basis.members[j]);
                found |= basis.push(br)?;
            }
        }
        if !found {
            basis.closed = true;
            return Ok(basis);
        }
        fresh_from = len;
    }
    Err(Error::InternalConsistency(format!(
        "bracket closure not reached after {MAX_GENERATIONS} generations (dimension {})",
        basis.dim()
    )))
}
