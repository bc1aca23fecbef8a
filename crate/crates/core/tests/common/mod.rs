//! Oracles that share no code path with the library implementations they
//! check. Points are plain `Vec<i64>` and neighbourhoods are rebuilt here.

#![allow(dead_code)]

use std::collections::HashSet;

use lattice_boundary::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All vectors in `{-1,0,1}^n` except zero.
pub fn king_offsets(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        if v.iter().any(|&d| d != 0) {
            out.push(v);
        }
    }
    out
}

/// Edge boundary by counting, for each point, neighbours outside the set.
pub fn brute_edge_boundary(points: &[Vec<i64>]) -> u64 {
    let Some(first) = points.first() else {
        return 0;
    };
    let n = first.len();
    let set: HashSet<&Vec<i64>> = points.iter().collect();
    let offsets = king_offsets(n);
    let mut count = 0;
    for p in points {
        for o in &offsets {
            let q: Vec<i64> = p.iter().zip(o).map(|(a, b)| a + b).collect();
            if !set.contains(&q) {
                count += 1;
            }
        }
    }
    count
}

pub fn raw_points(set: &PointSet) -> Vec<Vec<i64>> {
    set.iter().map(|p| p.coords().to_vec()).collect()
}

/// Whether every axis line of the set is `{-a..a}` or `{-a..a+1}`, checked
/// by direct membership tests.
pub fn brute_is_compressed(points: &[Vec<i64>]) -> bool {
    let set: HashSet<&Vec<i64>> = points.iter().collect();
    let Some(first) = points.first() else {
        return true;
    };
    let n = first.len();
    for p in points {
        for axis in 0..n {
            let mut line = Vec::new();
            let lo = p[axis] - points.len() as i64 - 1;
            let hi = p[axis] + points.len() as i64 + 1;
            for x in lo..=hi {
                let mut q = p.clone();
                q[axis] = x;
                if set.contains(&q) {
                    line.push(x);
                }
            }
            let m = line.len() as i64;
            let a = (m - 1) / 2;
            let want: Vec<i64> = (-a..=(m - 1 - a)).collect();
            if line != want {
                return false;
            }
        }
    }
    true
}

/// All `k`-subsets of the cube `[lo, hi]^n` that are fixed by every axis
/// compression, found by scanning every subset.
pub fn brute_compressed_sets(n: usize, k: usize) -> Vec<Vec<Vec<i64>>> {
    let lo = -((k as i64 - 1) / 2);
    let hi = k as i64 / 2;
    let side = (hi - lo + 1) as usize;
    let cells: Vec<Vec<i64>> = (0..side.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let v = lo + (c % side) as i64;
                    c /= side;
                    v
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(
        cells: &[Vec<i64>],
        start: usize,
        k: usize,
        pick: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if pick.len() == k {
            if brute_is_compressed(pick) {
                let mut s = pick.clone();
                s.sort();
                out.push(s);
            }
            return;
        }
        for idx in start..cells.len() {
            if cells.len() - idx < k - pick.len() {
                break;
            }
            pick.push(cells[idx].clone());
            rec(cells, idx + 1, k, pick, out);
            pick.pop();
        }
    }
    rec(&cells, 0, k, &mut pick, &mut out);
    out.sort();
    out
}

fn out_edges(a: u128, b: u128) -> u64 {
    // edges from cells of row `a` to the three cells below/above them that
    // are missing from row `b`
    ((a & !(b >> 1)).count_ones() + (a & !b).count_ones() + (a & !(b << 1)).count_ones()) as u64
}

fn row_edges(a: u128) -> u64 {
    ((a & !(a >> 1)).count_ones() + (a & !(a << 1)).count_ones()) as u64
}

struct WindowSearch {
    height: usize,
    convex: bool,
    best: u64,
    /// Candidate rows indexed by the number of points still to place,
    /// largest rows first.
    choices: Vec<Vec<u128>>,
    /// `floor[r]`: minimum boundary of an r-point set of the same class in
    /// the same window, for `r < k`.
    floor: Vec<u64>,
}

impl WindowSearch {
    fn new(width: u32, height: usize, convex: bool, k: usize, floor: Vec<u64>) -> Self {
        let choices = (0..=k)
            .map(|remaining| {
                let mut rows = Vec::new();
                if convex {
                    for len in (1..=remaining.min(width as usize)).rev() {
                        for start in 0..=(width as usize - len) {
                            rows.push(((1u128 << len) - 1) << start);
                        }
                    }
                } else {
                    for mask in 1u128..(1u128 << width) {
                        if mask.count_ones() as usize <= remaining {
                            rows.push(mask);
                        }
                    }
                    rows.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
                }
                rows
            })
            .collect();
        WindowSearch {
            height,
            convex,
            best: u64::MAX,
            choices,
            floor,
        }
    }

    /// `prev` is the last placed row, `cost` counts every edge already
    /// determined (everything except edges from `prev` to the next row).
    #[allow(clippy::too_many_arguments)]
    fn dfs(&mut self, y: usize, prev: u128, remaining: usize, cost: u64, seen: u128, union: u128) {
        if remaining == 0 {
            let total = cost + out_edges(prev, 0);
            if union & 1 == 1 && total < self.best {
                self.best = total;
            }
            return;
        }
        if y >= self.height {
            return;
        }
        // Unplaced rows F form a set of `remaining` points. Everything not yet
        // counted is out(prev -> F) + |dF| - A = 3|prev| + |dF| - 2A, where A
        // counts edges between prev and F, A <= 3 min(|prev|, remaining).
        let p = prev.count_ones() as u64;
        let r = remaining as u64;
        let prev_need = (3 * p).saturating_sub(3 * r);
        let floor = self.floor.get(remaining).copied().unwrap_or(0);
        let with_floor = (floor + 3 * p).saturating_sub(6 * p.min(r));
        if cost + prev_need.max(with_floor) >= self.best {
            return;
        }
        let empty_row: &[u128] = if y > 0 { &[0] } else { &[] };
        let options: Vec<u128> = self.choices[remaining]
            .iter()
            .chain(empty_row)
            .copied()
            .collect();
        for row in options {
            if self.convex && row & seen & !prev != 0 {
                continue;
            }
            let next_cost = cost + out_edges(prev, row) + out_edges(row, prev) + row_edges(row);
            if next_cost >= self.best {
                continue;
            }
            self.dfs(
                y + 1,
                row,
                remaining - row.count_ones() as usize,
                next_cost,
                seen | row,
                union | row,
            );
        }
    }
}

/// Minimum edge boundary over `k`-point sets in `Z^2` that fit, up to
/// translation, in a `(2k) x (2k)` window, by branch and bound over rows.
/// With `convex` set, only sets whose every row and column is a run of
/// consecutive cells are considered.
pub fn window_min_boundary(k: usize, convex: bool) -> u64 {
    assert!(k >= 1 && 2 * k <= 100);
    let width = 2 * k as u32;
    let mut floor = vec![0u64];
    for r in 1..=k {
        let mut search = WindowSearch::new(width, 2 * k, convex, r, floor.clone());
        search.dfs(0, 0, r, 0, 0, 0);
        floor.push(search.best);
    }
    floor[k]
}

/// Deterministic corpus generator: `count` sets in `[0, side)^n` with sizes
/// drawn from `1..=k_max`.
pub fn seeded_sets(seed: u64, count: usize, n: usize, side: u64, k_max: usize) -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=k_max);
            lattice_boundary::random_point_set(n, k, &vec![side; n], rng.gen()).unwrap()
        })
        .collect()
}

/// Every subset of the `w x h` window.
pub fn all_window_subsets(w: i64, h: i64) -> Vec<PointSet> {
    let cells: Vec<Vec<i64>> = (0..h)
        .flat_map(|y| (0..w).map(move |x| vec![x, y]))
        .collect();
    (0u32..(1 << cells.len()))
        .map(|mask| {
            PointSet::from_points(
                2,
                cells
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, c)| c.clone()),
            )
            .unwrap()
        })
        .collect()
}
