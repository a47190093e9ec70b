//! The twelve positive D4 roots representing `Spin(8)/U(4)` and their
//! proposed partition into `SU(3)`, `SU(2)` and `U(1)` blocks.
//!
//! Each block is evaluated literally: the negation-extended block is run
//! through the root-system axioms and, when it passes, classified and
//! compared with the root pattern of the named group. A block that does not
//! reproduce the pattern is `Indeterminate`, since the grouping is offered as
//! a heuristic rather than a theorem.

use serde::Serialize;

use crate::error::Result;
use crate::rational::Rational;

use super::dynkin::{dynkin_identify, DynkinType, Family};
use super::{d4_roots, root_axiom_check, Root, RootAxiomReport, RootSet};

/// `{+1, +i, +j, +k, (+1 ±i ±j ±k)/2}`.
pub fn positive_roots() -> Vec<Root> {
    let mut v = vec![Root::ints(1, 0, 0, 0), Root::ints(0, 1, 0, 0), Root::ints(0, 0, 1, 0), Root::ints(0, 0, 0, 1)];
    v.extend(half_sum_block());
    v
}

fn half_sum_block() -> Vec<Root> {
    (0..8u32)
        .map(|mask| {
            let s = |bit: u32| if mask & (1 << bit) == 0 { 1 } else { -1 };
            Root::halves(1, s(0), s(1), s(2))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetSplit {
    pub positive: Vec<Root>,
    /// The negatives of `positive`; with the four Cartan directions they account for `U(4)`.
    pub residual: Vec<Root>,
    pub cartan_slots: usize,
}

pub fn coset_split() -> CosetSplit {
    let positive = positive_roots();
    let residual = positive.iter().map(Root::neg).collect();
    CosetSplit { positive, residual, cartan_slots: 4 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockStatus {
    Pass,
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub group: &'static str,
    pub vectors: Vec<Root>,
    pub declared_cartan: Vec<Root>,
    pub group_dimension: u64,
    /// Distinct pairwise inner products inside the block.
    pub inner_products: Vec<Rational>,
    pub extended_size: usize,
    pub extended_axioms: RootAxiomReport,
    /// Dynkin type of the negation-extended block, when it is a root system.
    pub extended_type: Option<DynkinType>,
    /// Root pattern of the named group (`None` for an abelian group).
    pub expected_type: Option<DynkinType>,
    pub cartan_in_block: bool,
    pub status: BlockStatus,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetSplitReport {
    pub block_sizes: Vec<usize>,
    pub positive_count: usize,
    /// Positive roots together with their negatives reproduce the 24 D4 roots.
    pub covers_d4: bool,
    /// Block sizes equal the dimensions of the named groups.
    pub sizes_match_group_dimensions: bool,
    pub blocks: Vec<BlockReport>,
}

fn evaluate_block(
    group: &'static str,
    vectors: Vec<Root>,
    declared_cartan: Vec<Root>,
    group_dimension: u64,
    expected_type: Option<DynkinType>,
) -> Result<BlockReport> {
    let set = RootSet::new(vectors.iter().copied())?;
    let extended = set.with_negatives();
    let extended_axioms = root_axiom_check(&extended)?;
    let extended_type = if extended_axioms.passes() { Some(dynkin_identify(&extended)?.dynkin_type) } else { None };
    let cartan_in_block = declared_cartan.iter().all(|c| set.contains(c));
    let matches = extended_type.is_some() && extended_type == expected_type;
    let note = match (&extended_type, &expected_type) {
        (None, _) => "negation-extended block is not a root system".to_owned(),
        (Some(t), None) => format!("extended block is {t}, but an abelian group has no roots"),
        (Some(t), Some(e)) if t == e => format!("extended block is {t}, as expected"),
        (Some(t), Some(e)) => format!("extended block is {t}, expected {e}"),
    };
    Ok(BlockReport {
        group,
        inner_products: set.inner_product_spectrum(),
        vectors,
        declared_cartan,
        group_dimension,
        extended_size: extended.len(),
        extended_axioms,
        extended_type,
        expected_type,
        cartan_in_block,
        status: if matches { BlockStatus::Pass } else { BlockStatus::Indeterminate },
        note,
    })
}

pub fn coset_split_report() -> Result<CosetSplitReport> {
    let su3 = evaluate_block(
        "SU(3)",
        half_sum_block(),
        vec![Root::halves(1, 1, 1, 1), Root::halves(1, -1, -1, -1)],
        8,
        Some(DynkinType::irreducible(Family::A, 2)),
    )?;
    let su2 = evaluate_block(
        "SU(2)",
        vec![Root::ints(0, 1, 0, 0), Root::ints(0, 0, 1, 0), Root::ints(0, 0, 0, 1)],
        vec![Root::ints(0, 0, 1, 0)],
        3,
        Some(DynkinType::irreducible(Family::A, 1)),
    )?;
    let u1 = evaluate_block("U(1)", vec![Root::ints(1, 0, 0, 0)], vec![Root::ints(1, 0, 0, 0)], 1, None)?;
    let blocks = vec![su3, su2, u1];

    let positive = positive_roots();
    let covers_d4 = RootSet::new(positive.iter().flat_map(|r| [*r, r.neg()]))? == d4_roots()
        && RootSet::new(positive.iter().copied())?.len() == positive.len();
    let block_sizes: Vec<usize> = blocks.iter().map(|b| b.vectors.len()).collect();
    let sizes_match_group_dimensions = blocks.iter().all(|b| b.vectors.len() as u64 == b.group_dimension);
    Ok(CosetSplitReport {
        positive_count: positive.len(),
        block_sizes,
        covers_d4,
        sizes_match_group_dimensions,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_partition_the_positive_roots() {
        let r = coset_split_report().unwrap();
        assert_eq!(r.block_sizes, vec![8, 3, 1]);
        assert_eq!(r.positive_count, 12);
        assert!(r.covers_d4);
        assert!(r.sizes_match_group_dimensions);
        let mut all: Vec<Root> = r.blocks.iter().flat_map(|b| b.vectors.clone()).collect();
        all.sort();
        let mut pos = positive_roots();
        pos.sort();
        assert_eq!(all, pos);
    }

    #[test]
    fn su2_block_is_mutually_orthogonal() {
        let r = coset_split_report().unwrap();
        assert_eq!(r.blocks[1].inner_products, vec![Rational::ZERO]);
    }

    #[test]
    fn positive_roots_are_the_lexicographic_positive_system() {
        let mut lex: Vec<Root> = d4_roots().vectors().iter().copied().filter(Root::is_lex_positive).collect();
        let mut pos = positive_roots();
        lex.sort();
        pos.sort();
        assert_eq!(lex, pos);
    }

    #[test]
    fn split_residual_is_the_negatives() {
        let s = coset_split();
        assert_eq!(s.positive.len(), 12);
        assert_eq!(s.residual.len(), 12);
        assert!(s.positive.iter().zip(&s.residual).all(|(p, n)| p.neg() == *n));
    }

    #[test]
    fn literal_block_outcomes() {
        let r = coset_split_report().unwrap();
        let [su3, su2, u1] = [&r.blocks[0], &r.blocks[1], &r.blocks[2]];
        assert!(su3.extended_type.is_none());
        assert_eq!(su3.status, BlockStatus::Indeterminate);
        assert_eq!(su2.extended_type.as_ref().unwrap().to_string(), "A1+A1+A1");
        assert_eq!(su2.status, BlockStatus::Indeterminate);
        assert_eq!(u1.extended_type.as_ref().unwrap().to_string(), "A1");
        assert_eq!(u1.status, BlockStatus::Indeterminate);
        assert!(r.blocks.iter().all(|b| b.cartan_in_block));
    }
}
