//! Minimal edge boundary search over sets of fixed size.
//!
//! Central compression preserves size and never increases the edge boundary,
//! and iterating it always reaches a set fixed by every coordinate
//! compression. The minimum over all size-`k` sets is therefore attained on
//! such fixed points, and there are only finitely many of them.
//!
//! A fixed point has every axis section equal to a centred segment. Relabel
//! each coordinate by its rank in the order `0, 1, -1, 2, -2, ...`; centred
//! segments become initial segments `{0, .., m-1}`, so fixed points are
//! exactly the finite down-sets of `N^n` (n-dimensional partitions). That is
//! what [`enumerate_compressed_sets`] generates.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boundary::{
    edge_boundary_count, edge_boundary_formula_total, exterior_neighbors, exterior_vertex_boundary,
    gap_set,
};
use crate::compression::compress_to_fixed_point;
use crate::error::{LatticeError, Result};
use crate::lattice::{directions, LatticePoint, PointSet};

/// Environment variable overriding [`DEFAULT_MAX_SETS`].
pub const MAX_SETS_ENV: &str = "LATTICE_BOUNDARY_MAX_SETS";

pub const DEFAULT_MAX_SETS: usize = 2_000_000;

/// Enumeration cap from [`MAX_SETS_ENV`], or [`DEFAULT_MAX_SETS`].
pub fn default_max_sets() -> usize {
    std::env::var(MAX_SETS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_SETS)
}

fn rank_to_coordinate(r: u32) -> i64 {
    let r = r as i64;
    if r % 2 == 1 {
        (r + 1) / 2
    } else {
        -r / 2
    }
}

/// Every size-`k` set in `Z^n` whose axis sections are all centred segments,
/// in a deterministic order.
///
/// Fails with [`LatticeError::EnumerationOverflow`] as soon as any
/// intermediate level holds more than `max_sets` sets.
pub fn enumerate_compressed_sets(n: usize, k: usize, max_sets: usize) -> Result<Vec<PointSet>> {
    if n == 0 {
        return Err(LatticeError::InvalidDimension(0));
    }
    // down-sets in rank coordinates, each kept as a sorted list of cells
    let mut level: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    level.insert(Vec::new());
    for _ in 0..k {
        let mut next: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        for ideal in &level {
            for cell in addable_cells(ideal, n) {
                let mut grown = ideal.clone();
                let at = grown.binary_search(&cell).unwrap_err();
                grown.insert(at, cell);
                next.insert(grown);
                if next.len() > max_sets {
                    return Err(LatticeError::EnumerationOverflow { cap: max_sets });
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|ideal| {
            PointSet::from_points(
                n,
                ideal
                    .into_iter()
                    .map(|cell| cell.into_iter().map(rank_to_coordinate).collect::<Vec<_>>()),
            )
        })
        .collect()
}

/// Cells outside `ideal` whose lower neighbours along every axis are inside.
fn addable_cells(ideal: &[Vec<u32>], n: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    if ideal.is_empty() {
        out.insert(vec![0; n]);
        return out;
    }
    let contains = |c: &Vec<u32>| ideal.binary_search(c).is_ok();
    for cell in ideal {
        for axis in 0..n {
            let mut up = cell.clone();
            up[axis] += 1;
            if contains(&up) {
                continue;
            }
            let supported = (0..n).all(|b| {
                if up[b] == 0 {
                    return true;
                }
                let mut down = up.clone();
                down[b] -= 1;
                contains(&down)
            });
            if supported {
                out.insert(up);
            }
        }
    }
    out
}

/// True iff the set has no gap points in any direction.
pub fn fully_gap_free(set: &PointSet) -> bool {
    directions(set.dimension())
        .map(|dirs| {
            dirs.iter()
                .all(|d| gap_set(set, d).map(|g| g.is_empty()).unwrap_or(false))
        })
        .unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMethod {
    Exhaustive,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStats {
    pub exterior_vertex_boundary: u64,
    pub fully_gap_free: bool,
    pub direct_boundary: u64,
    pub formula_boundary: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub dimension: usize,
    pub size: usize,
    pub min_edge_boundary: u64,
    /// Translated so that each axis minimum is 0; distinct up to translation.
    pub witnesses: Vec<PointSet>,
    pub witness_stats: Vec<WitnessStats>,
    pub method: SearchMethod,
    /// Set only when the exhaustive scan of compressed sets completed.
    pub proven_optimal: bool,
    pub sets_scanned: u64,
}

impl SearchReport {
    pub fn some_witness_gap_free(&self) -> bool {
        self.witness_stats.iter().any(|w| w.fully_gap_free)
    }

    pub fn all_witnesses_gap_free(&self) -> bool {
        self.witness_stats.iter().all(|w| w.fully_gap_free)
    }

    /// Every witness has the declared size and both boundary computations
    /// agree on the reported minimum.
    pub fn witnesses_verify(&self) -> bool {
        self.witnesses.len() == self.witness_stats.len()
            && self
                .witnesses
                .iter()
                .zip(&self.witness_stats)
                .all(|(w, s)| {
                    w.len() == self.size
                        && w.dimension() == self.dimension
                        && s.direct_boundary == self.min_edge_boundary
                        && s.formula_boundary == self.min_edge_boundary
                })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicConfig {
    pub seed: u64,
    pub restarts: usize,
    pub moves_per_restart: usize,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            seed: 0,
            restarts: 16,
            moves_per_restart: 400,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive { max_sets: usize },
    Heuristic(HeuristicConfig),
}

pub fn min_edge_boundary(n: usize, k: usize, mode: SearchMode) -> Result<SearchReport> {
    if n == 0 {
        return Err(LatticeError::InvalidDimension(0));
    }
    if k == 0 {
        return Err(LatticeError::OutsideLimits(
            "set size must be at least 1".into(),
        ));
    }
    match mode {
        SearchMode::Exhaustive { max_sets } => exhaustive(n, k, max_sets),
        SearchMode::Heuristic(config) => heuristic(n, k, config),
    }
}

fn exhaustive(n: usize, k: usize, max_sets: usize) -> Result<SearchReport> {
    let candidates = enumerate_compressed_sets(n, k, max_sets)?;
    let scanned = candidates.len() as u64;
    let mut best = u64::MAX;
    let mut winners = BTreeSet::new();
    for s in candidates {
        let b = edge_boundary_count(&s);
        if b < best {
            best = b;
            winners.clear();
        }
        if b == best {
            winners.insert(s.normalized());
        }
    }
    Ok(build_report(
        n,
        k,
        best,
        winners,
        SearchMethod::Exhaustive,
        true,
        scanned,
    ))
}

fn heuristic(n: usize, k: usize, config: HeuristicConfig) -> Result<SearchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let side = ((k as f64).powf(1.0 / n as f64).ceil() as u64 + 2).max(2);
    let mut extents = vec![side; n];
    while extents.iter().map(|&e| e as u128).product::<u128>() < k as u128 {
        extents[0] += 1;
    }
    let mut best = u64::MAX;
    let mut winners = BTreeSet::new();
    let mut scanned = 0u64;
    let record = |s: &PointSet, b: u64, best: &mut u64, winners: &mut BTreeSet<PointSet>| {
        if b < *best {
            *best = b;
            winners.clear();
        }
        if b == *best {
            winners.insert(s.normalized());
        }
    };
    for _ in 0..config.restarts.max(1) {
        let start = random_point_set(n, k, &extents, rng.gen())?;
        let mut current = compress_to_fixed_point(&start).final_set;
        let mut current_b = edge_boundary_count(&current);
        scanned += 1;
        record(&current, current_b, &mut best, &mut winners);
        for _ in 0..config.moves_per_restart {
            let pts: Vec<&LatticePoint> = current.iter().collect();
            let targets: Vec<LatticePoint> = exterior_neighbors(&current).into_iter().collect();
            if targets.is_empty() {
                break;
            }
            let from = pts[rng.gen_range(0..pts.len())].clone();
            let to = targets[rng.gen_range(0..targets.len())].clone();
            let mut moved = current.clone();
            moved.remove(&from);
            moved.insert(to)?;
            let moved = compress_to_fixed_point(&moved).final_set;
            let b = edge_boundary_count(&moved);
            scanned += 1;
            if b <= current_b {
                current = moved;
                current_b = b;
                record(&current, current_b, &mut best, &mut winners);
            }
        }
    }
    Ok(build_report(
        n,
        k,
        best,
        winners,
        SearchMethod::Heuristic,
        false,
        scanned,
    ))
}

fn build_report(
    n: usize,
    k: usize,
    best: u64,
    winners: BTreeSet<PointSet>,
    method: SearchMethod,
    proven_optimal: bool,
    sets_scanned: u64,
) -> SearchReport {
    let witnesses: Vec<PointSet> = winners.into_iter().collect();
    let witness_stats = witnesses
        .iter()
        .map(|w| WitnessStats {
            exterior_vertex_boundary: exterior_vertex_boundary(w),
            fully_gap_free: fully_gap_free(w),
            direct_boundary: edge_boundary_count(w),
            formula_boundary: edge_boundary_formula_total(w),
        })
        .collect();
    SearchReport {
        dimension: n,
        size: k,
        min_edge_boundary: best,
        witnesses,
        witness_stats,
        method,
        proven_optimal,
        sets_scanned,
    }
}

/// A uniformly random `k`-subset of the window `[0, extents[0]) x ...`,
/// fully determined by `seed`.
pub fn random_point_set(n: usize, k: usize, extents: &[u64], seed: u64) -> Result<PointSet> {
    if n == 0 {
        return Err(LatticeError::InvalidDimension(0));
    }
    if extents.len() != n {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            found: extents.len(),
        });
    }
    let available = extents
        .iter()
        .try_fold(1u128, |acc, &e| acc.checked_mul(e as u128))
        .unwrap_or(u128::MAX);
    if available < k as u128 {
        return Err(LatticeError::WindowTooSmall {
            available,
            requested: k,
        });
    }
    let total = usize::try_from(available).map_err(|_| {
        LatticeError::OutsideLimits(format!(
            "window of {available} points is too large to sample"
        ))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = index::sample(&mut rng, total, k);
    let points = chosen.into_iter().map(|mut flat| {
        extents
            .iter()
            .map(|&e| {
                let c = (flat % e as usize) as i64;
                flat /= e as usize;
                c
            })
            .collect::<Vec<_>>()
    });
    PointSet::from_points(n, points)
}

/// Exhaustive reports for every size `1..=k_max`.
pub fn survey_gap_free_optima(
    n: usize,
    k_max: usize,
    max_sets: usize,
) -> Result<Vec<SearchReport>> {
    (1..=k_max)
        .map(|k| min_edge_boundary(n, k, SearchMode::Exhaustive { max_sets }))
        .collect()
}
