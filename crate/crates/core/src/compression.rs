//! Central compression along coordinate axes.
//!
//! Compressing `S` in coordinate `i` replaces each `i`-section of size `m` by
//! the centred segment [`canonical_segment`]`(m)`. Cardinality is preserved and
//! the edge boundary never increases.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::boundary::edge_boundary_count;
use crate::error::Result;
use crate::lattice::{axis_sections, insert_coordinate, PointSet};

/// `{-a..=a}` for `m = 2a + 1`, `{-a..=a + 1}` for `m = 2a + 2`, empty for 0.
pub fn canonical_segment(m: usize) -> RangeInclusive<i64> {
    if m == 0 {
        #[allow(clippy::reversed_empty_ranges)]
        return 0..=-1;
    }
    let m = m as i64;
    let lo = -((m - 1) / 2);
    lo..=lo + m - 1
}

/// Whether `xs` (sorted) is exactly `canonical_segment(xs.len())`.
pub fn is_canonical_section(xs: &[i64]) -> bool {
    let seg = canonical_segment(xs.len());
    xs.iter().copied().eq(seg)
}

pub fn central_compress(set: &PointSet, i: usize) -> Result<PointSet> {
    let sections = axis_sections(set, i)?;
    let mut out = PointSet::new(set.dimension())?;
    for (p, xs) in &sections {
        for x in canonical_segment(xs.len()) {
            out.insert(insert_coordinate(p, x, i)?)?;
        }
    }
    Ok(out)
}

/// True when every axis section, in every coordinate, is a canonical segment.
pub fn is_compressed(set: &PointSet) -> bool {
    (1..=set.dimension()).all(|i| {
        axis_sections(set, i)
            .map(|secs| secs.values().all(|xs| is_canonical_section(xs)))
            .unwrap_or(false)
    })
}

/// Lexicographic termination measure `(sum of |p|^2, -(sum of coordinates))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Potential {
    pub sum_sq: i64,
    pub neg_sum: i64,
}

pub fn potential(set: &PointSet) -> Potential {
    let mut sum_sq = 0i64;
    let mut sum = 0i64;
    for p in set {
        for &c in p.coords() {
            sum_sq += c * c;
            sum += c;
        }
    }
    Potential {
        sum_sq,
        neg_sum: -sum,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressionStep {
    /// 1-based coordinate that was compressed.
    pub coordinate: usize,
    pub changed: bool,
    pub boundary_before: u64,
    pub boundary_after: u64,
    pub potential_before: Potential,
    pub potential_after: Potential,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionTrace {
    pub steps: Vec<CompressionStep>,
    pub final_set: PointSet,
}

impl CompressionTrace {
    pub fn changing_steps(&self) -> impl Iterator<Item = &CompressionStep> + '_ {
        self.steps.iter().filter(|s| s.changed)
    }

    /// Checks the recorded trace: boundary never rises and the potential
    /// strictly falls on every step that changed the set.
    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|s| {
            s.boundary_after <= s.boundary_before
                && (!s.changed || s.potential_after < s.potential_before)
                && (s.changed || s.potential_after == s.potential_before)
        })
    }
}

/// Compresses in coordinates `1, 2, ..., n` round-robin until a full pass
/// leaves the set unchanged.
///
/// Every changing step strictly lowers [`potential`], which takes finitely
/// many values on sets of fixed size inside a bounded region, so the loop
/// needs no iteration cap.
pub fn compress_to_fixed_point(set: &PointSet) -> CompressionTrace {
    let n = set.dimension();
    let mut current = set.clone();
    let mut boundary = edge_boundary_count(&current);
    let mut pot = potential(&current);
    let mut steps = Vec::new();
    loop {
        let mut pass_changed = false;
        for i in 1..=n {
            let next = central_compress(&current, i).expect("coordinate within dimension");
            let changed = next != current;
            let (next_boundary, next_pot) = if changed {
                (edge_boundary_count(&next), potential(&next))
            } else {
                (boundary, pot)
            };
            steps.push(CompressionStep {
                coordinate: i,
                changed,
                boundary_before: boundary,
                boundary_after: next_boundary,
                potential_before: pot,
                potential_after: next_pot,
            });
            if changed {
                pass_changed = true;
                current = next;
                boundary = next_boundary;
                pot = next_pot;
            }
        }
        if !pass_changed {
            return CompressionTrace {
                steps,
                final_set: current,
            };
        }
    }
}
