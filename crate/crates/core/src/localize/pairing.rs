use serde::Serialize;

use super::LocalizeError;
use crate::algebra::{LocalizedSum, MultiSeries, Ring};
use crate::quasitoric::FixedPointData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockResult {
    /// 1-based point indices.
    pub points: Vec<usize>,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub blocks: Vec<BlockResult>,
    /// Every block sum vanishes.
    pub vanishes: bool,
}

/// `sum ς(x) prod_j 1/(w_j(x)·u)` over the block is exactly zero. The common
/// numerator is homogeneous, so a zero-order sum already sees all of it.
fn block_vanishes(fpd: &FixedPointData, block: &[usize]) -> bool {
    let q = Ring::rationals();
    let mut sum = LocalizedSum::new(&q, fpd.k(), 0);
    for &i in block {
        let p = &fpd.points()[i - 1];
        let mut num = MultiSeries::one(&q, fpd.k(), 0);
        if p.sign < 0 {
            num = num.neg();
        }
        sum.push(num, p.weights.clone()).expect("shapes agree");
    }
    sum.common_fraction().numerator.is_zero()
}

/// Tests the augmentation-genus sum over each block of a partition of the
/// points (1-based indices).
pub fn pairing_obstruction(
    fpd: &FixedPointData,
    blocks: &[Vec<usize>],
) -> Result<PairingReport, LocalizeError> {
    let count = fpd.points().len();
    let mut seen = vec![false; count];
    for &i in blocks.iter().flatten() {
        if i == 0 || i > count {
            return Err(LocalizeError::InvalidBlocks(format!(
                "point {i} is outside 1..{count}"
            )));
        }
        if std::mem::replace(&mut seen[i - 1], true) {
            return Err(LocalizeError::InvalidBlocks(format!("point {i} appears twice")));
        }
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(LocalizeError::InvalidBlocks(format!(
            "point {} is in no block",
            i + 1
        )));
    }
    let results: Vec<BlockResult> = blocks
        .iter()
        .map(|b| BlockResult {
            points: b.clone(),
            vanishes: block_vanishes(fpd, b),
        })
        .collect();
    let vanishes = results.iter().all(|b| b.vanishes);
    Ok(PairingReport {
        blocks: results,
        vanishes,
    })
}

fn perfect_pairings(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (j, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &x)| x)
            .collect();
        for mut tail in perfect_pairings(&remaining) {
            tail.insert(0, vec![first, partner]);
            out.push(tail);
        }
    }
    out
}

/// Every perfect pairing of the points with its verdict; empty for an odd
/// number of points.
pub fn search_pairings(fpd: &FixedPointData) -> Vec<PairingReport> {
    let count = fpd.points().len();
    if count % 2 == 1 {
        return Vec::new();
    }
    let items: Vec<usize> = (1..=count).collect();
    perfect_pairings(&items)
        .iter()
        .map(|blocks| pairing_obstruction(fpd, blocks).expect("perfect pairings partition"))
        .collect()
}
