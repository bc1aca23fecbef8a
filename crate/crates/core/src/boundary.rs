//! Edge and vertex boundaries in the king graph.
//!
//! The edge boundary is computed two independent ways:
//!
//! * [`edge_boundary_direct`] walks every point's `3^n - 1` neighbours and
//!   keeps the edges that leave the set.
//! * [`edge_boundary_formula`] sums, over every direction `d`, the number of
//!   lines of the set parallel to `d` plus the number of gap points along `d`.
//!
//! The two must always agree. A gap point along `d` is a point `x` outside the
//! set with `x - d` inside and some `x + b*d` (`b >= 1`) inside; per line that
//! is one gap per break between maximal runs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::lattice::{
    axis_sections, check_index, directions, insert_coordinate, line_sections, neighbors,
    offset_cube, Direction, LatticePoint, PointSet,
};

/// A boundary edge, stored with its in-set endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub inside: LatticePoint,
    pub outside: LatticePoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBoundary {
    pub count: u64,
    pub edges: Vec<EdgeRecord>,
}

/// Contribution of one direction to the edge-boundary formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionTerm {
    pub direction: Direction,
    pub projection_count: u64,
    pub gap_count: u64,
}

/// Per-direction projection and gap counts whose sum is the edge boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryBreakdown {
    pub dimension: usize,
    /// One entry per direction, in lexicographic direction order.
    pub per_direction: Vec<DirectionTerm>,
    pub total: u64,
}

impl BoundaryBreakdown {
    pub fn term(&self, d: &Direction) -> Option<&DirectionTerm> {
        self.per_direction
            .binary_search_by(|t| t.direction.cmp(d))
            .ok()
            .map(|k| &self.per_direction[k])
    }

    pub fn projection_total(&self) -> u64 {
        self.per_direction.iter().map(|t| t.projection_count).sum()
    }

    pub fn gap_total(&self) -> u64 {
        self.per_direction.iter().map(|t| t.gap_count).sum()
    }
}

/// Enumerates the boundary edges: every `(u, u + d)` with `u` in the set and
/// `u + d` outside. Each unordered edge appears once since exactly one of its
/// endpoints is in the set.
pub fn edge_boundary_direct(set: &PointSet) -> EdgeBoundary {
    let mut edges = Vec::new();
    for u in set {
        for v in neighbors(u) {
            if !set.contains(&v) {
                edges.push(EdgeRecord {
                    inside: u.clone(),
                    outside: v,
                });
            }
        }
    }
    EdgeBoundary {
        count: edges.len() as u64,
        edges,
    }
}

/// Count-only variant of [`edge_boundary_direct`].
pub fn edge_boundary_count(set: &PointSet) -> u64 {
    let dirs = match directions(set.dimension()) {
        Ok(d) => d,
        Err(_) => return 0,
    };
    let mut count = 0;
    for u in set {
        for d in &dirs {
            if !set.contains(&u.step(d)) {
                count += 1;
            }
        }
    }
    count
}

/// Points outside the set adjacent to some point of the set.
pub fn exterior_neighbors(set: &PointSet) -> BTreeSet<LatticePoint> {
    set.iter()
        .flat_map(neighbors)
        .filter(|v| !set.contains(v))
        .collect()
}

pub fn exterior_vertex_boundary(set: &PointSet) -> u64 {
    exterior_neighbors(set).len() as u64
}

/// Size of `{v : d(v, S) <= 1}`, which includes the set itself.
pub fn closed_vertex_boundary(set: &PointSet) -> u64 {
    exterior_vertex_boundary(set) + set.len() as u64
}

/// Number of lines parallel to `d` that meet the set.
pub fn projection_count(set: &PointSet, d: &Direction) -> Result<u64> {
    Ok(line_sections(set, d)?.len() as u64)
}

pub fn gap_set(set: &PointSet, d: &Direction) -> Result<BTreeSet<LatticePoint>> {
    let mut gaps = BTreeSet::new();
    for section in line_sections(set, d)? {
        for w in section.positions.windows(2) {
            if w[1] - w[0] >= 2 {
                gaps.insert(section.point_at(w[0] + 1));
            }
        }
    }
    Ok(gaps)
}

fn gap_count(set: &PointSet, d: &Direction) -> Result<u64> {
    Ok(line_sections(set, d)?
        .iter()
        .map(|s| s.run_count().saturating_sub(1) as u64)
        .sum())
}

pub fn edge_boundary_formula(set: &PointSet) -> BoundaryBreakdown {
    let dirs = directions(set.dimension()).expect("point sets have positive dimension");
    let per_direction: Vec<DirectionTerm> = dirs
        .into_iter()
        .map(|d| {
            let sections = line_sections(set, &d).expect("dimensions match");
            let gaps = gap_set(set, &d).expect("dimensions match");
            DirectionTerm {
                projection_count: sections.len() as u64,
                gap_count: gaps.len() as u64,
                direction: d,
            }
        })
        .collect();
    let total = per_direction
        .iter()
        .map(|t| t.projection_count + t.gap_count)
        .sum();
    BoundaryBreakdown {
        dimension: set.dimension(),
        per_direction,
        total,
    }
}

/// Formula total without materializing gap points.
pub fn edge_boundary_formula_total(set: &PointSet) -> u64 {
    let dirs = directions(set.dimension()).expect("point sets have positive dimension");
    dirs.iter()
        .map(|d| {
            projection_count(set, d).expect("dimensions match")
                + gap_count(set, d).expect("dimensions match")
        })
        .sum()
}

/// Counts boundary edges whose in-set endpoint lies on the `i`-line indexed
/// by `p` and whose outside endpoint lies on the `i`-line indexed by `p + eps`.
///
/// `eps` ranges over all of `{-1, 0, 1}^(n-1)`, zero included. For `eps = 0`
/// the result is twice the number of maximal runs on the line.
pub fn partial_edge_boundary(set: &PointSet, i: usize, p: &[i64], eps: &[i64]) -> Result<u64> {
    let n = set.dimension();
    check_index(i, n)?;
    if p.len() != n - 1 || eps.len() != n - 1 {
        return Err(LatticeError::DimensionMismatch {
            expected: n - 1,
            found: if p.len() != n - 1 { p.len() } else { eps.len() },
        });
    }
    if eps.iter().any(|e| !(-1..=1).contains(e)) {
        return Err(LatticeError::InvalidDirection(eps.to_vec()));
    }
    let target: Vec<i64> = p.iter().zip(eps).map(|(a, b)| a + b).collect();
    let flat = eps.iter().all(|&e| e == 0);
    let mut count = 0;
    for u in set {
        let mut rest = u.coords().to_vec();
        let x = rest.remove(i - 1);
        if rest != p {
            continue;
        }
        for dx in -1..=1 {
            if flat && dx == 0 {
                continue;
            }
            let v = insert_coordinate(&target, x + dx, i)?;
            if !set.contains(&v) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Sum of [`partial_edge_boundary`] over every line index meeting the set and
/// every offset in `{-1, 0, 1}^(n-1)`.
pub fn partial_edge_boundary_sum(set: &PointSet, i: usize) -> Result<u64> {
    let sections = axis_sections(set, i)?;
    let offsets = offset_cube(set.dimension() - 1);
    let mut total = 0;
    for p in sections.keys() {
        for eps in &offsets {
            total += partial_edge_boundary(set, i, p, eps)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn line(xs: &[i64]) -> PointSet {
        PointSet::from_points(1, xs.iter().map(|&x| vec![x])).unwrap()
    }

    fn set2(points: &[(i64, i64)]) -> PointSet {
        PointSet::from_points(2, points.iter().map(|&(x, y)| vec![x, y])).unwrap()
    }

    fn dir(steps: &[i64]) -> Direction {
        Direction::new(steps.to_vec()).unwrap()
    }

    fn pt(coords: &[i64]) -> LatticePoint {
        LatticePoint::new(coords.to_vec())
    }

    #[test]
    fn direct_examples() {
        assert_eq!(edge_boundary_direct(&set2(&[(0, 0)])).count, 8);
        let two = edge_boundary_direct(&line(&[0, 2]));
        assert_eq!(two.count, 4);
        let want: BTreeSet<(i64, i64)> = [(0, -1), (0, 1), (2, 1), (2, 3)].into_iter().collect();
        let got: BTreeSet<(i64, i64)> = two
            .edges
            .iter()
            .map(|e| (e.inside.coords()[0], e.outside.coords()[0]))
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            edge_boundary_direct(&PointSet::a_box(&[2, 2]).unwrap()).count,
            20
        );
    }

    #[test]
    fn vertex_boundary_examples() {
        let b = PointSet::a_box(&[4, 3]).unwrap();
        assert_eq!(exterior_vertex_boundary(&b), 18);
        assert_eq!(closed_vertex_boundary(&b), 30);
        assert_eq!(exterior_vertex_boundary(&set2(&[(0, 0)])), 8);
        assert_eq!(closed_vertex_boundary(&set2(&[(0, 0)])), 9);
        assert_eq!(exterior_vertex_boundary(&line(&[0, 2])), 3);
        assert_eq!(closed_vertex_boundary(&PointSet::new(2).unwrap()), 0);
    }

    #[test]
    fn projection_examples() {
        let b = PointSet::a_box(&[4, 3]).unwrap();
        assert_eq!(projection_count(&b, &dir(&[1, 0])).unwrap(), 3);
        assert_eq!(projection_count(&b, &dir(&[0, 1])).unwrap(), 4);
        assert_eq!(projection_count(&b, &dir(&[1, 1])).unwrap(), 6);
        assert_eq!(projection_count(&b, &dir(&[1, -1])).unwrap(), 6);
        for d in directions(3).unwrap() {
            assert_eq!(
                projection_count(&PointSet::from_points(3, [vec![1, 2, 3]]).unwrap(), &d).unwrap(),
                1
            );
        }
    }

    #[test]
    fn gap_examples() {
        let s = line(&[0, 2]);
        let one: BTreeSet<_> = [pt(&[1])].into_iter().collect();
        assert_eq!(gap_set(&s, &dir(&[1])).unwrap(), one);
        assert_eq!(gap_set(&s, &dir(&[-1])).unwrap(), one);
        let b = PointSet::a_box(&[3, 4]).unwrap();
        for d in directions(2).unwrap() {
            assert!(gap_set(&b, &d).unwrap().is_empty());
        }
    }

    #[test]
    fn gap_points_differ_by_sign() {
        // {0, 3}: the first missing point after 0 going right is 1,
        // going left from 3 it is 2
        let s = line(&[0, 3]);
        assert_eq!(
            gap_set(&s, &dir(&[1]))
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![pt(&[1])]
        );
        assert_eq!(
            gap_set(&s, &dir(&[-1]))
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![pt(&[2])]
        );
    }

    #[test]
    fn formula_examples() {
        let s = line(&[0, 2]);
        let bd = edge_boundary_formula(&s);
        assert_eq!(bd.total, 4);
        for t in &bd.per_direction {
            assert_eq!((t.projection_count, t.gap_count), (1, 1));
        }
        assert_eq!(
            edge_boundary_formula(&PointSet::a_box(&[4, 3]).unwrap()).total,
            38
        );
        for n in 1..=4 {
            let single = PointSet::from_points(n, [vec![0; n]]).unwrap();
            assert_eq!(edge_boundary_formula(&single).total, 3u64.pow(n as u32) - 1);
        }
    }

    #[test]
    fn empty_set_is_all_zero() {
        let e = PointSet::new(3).unwrap();
        assert_eq!(edge_boundary_direct(&e).count, 0);
        let bd = edge_boundary_formula(&e);
        assert_eq!(bd.total, 0);
        assert_eq!(bd.per_direction.len(), 26);
        assert!(bd
            .per_direction
            .iter()
            .all(|t| t.projection_count == 0 && t.gap_count == 0));
        assert_eq!(partial_edge_boundary_sum(&e, 2).unwrap(), 0);
    }

    #[test]
    fn breakdown_lookup() {
        let bd = edge_boundary_formula(&PointSet::a_box(&[4, 3]).unwrap());
        assert_eq!(bd.term(&dir(&[1, 1])).unwrap().projection_count, 6);
        assert_eq!(bd.projection_total(), 38);
        assert_eq!(bd.gap_total(), 0);
    }

    #[test]
    fn partial_examples() {
        // a single run on the line y = 0
        let run = set2(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(partial_edge_boundary(&run, 1, &[0], &[0]).unwrap(), 2);
        assert_eq!(partial_edge_boundary(&run, 1, &[0], &[1]).unwrap(), 9);
        assert_eq!(partial_edge_boundary(&run, 1, &[5], &[0]).unwrap(), 0);
        assert_eq!(
            partial_edge_boundary(&line(&[0, 2]), 1, &[], &[]).unwrap(),
            4
        );
        assert!(partial_edge_boundary(&run, 3, &[0], &[0]).is_err());
        assert!(partial_edge_boundary(&run, 1, &[0, 0], &[0]).is_err());
        assert!(partial_edge_boundary(&run, 1, &[0], &[2]).is_err());
    }

    #[test]
    fn box_closed_form() {
        for a in 1..=10 {
            for b in 1..=10 {
                let s = PointSet::a_box(&[a, b]).unwrap();
                let want = (6 * a + 6 * b - 4) as u64;
                assert_eq!(edge_boundary_count(&s), want);
                assert_eq!(edge_boundary_formula(&s).total, want);
            }
        }
    }

    /// Brute-force check of the gap definition, scanning a window around the
    /// set for points `x` with `x - d` in S, `x` not in S and `x + b d` in S.
    fn gap_oracle(set: &PointSet, d: &Direction) -> BTreeSet<LatticePoint> {
        let mut out = BTreeSet::new();
        let Some(bounds) = set.bounding_box() else {
            return out;
        };
        let span = bounds.iter().map(|b| b.1 - b.0).max().unwrap() + 1;
        for u in set {
            let x = u.step(d);
            if set.contains(&x) {
                continue;
            }
            if (1..=span).any(|b| set.contains(&x.offset(d.steps(), b))) {
                out.insert(x);
            }
        }
        out
    }

    fn arb_set() -> impl Strategy<Value = PointSet> {
        (1usize..=3).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..14)
                .prop_map(move |pts| PointSet::from_points(n, pts).unwrap())
        })
    }

    proptest! {
        #[test]
        fn formula_matches_direct(s in arb_set()) {
            let direct = edge_boundary_direct(&s).count;
            prop_assert_eq!(edge_boundary_formula(&s).total, direct);
            prop_assert_eq!(edge_boundary_formula_total(&s), direct);
            prop_assert_eq!(edge_boundary_count(&s), direct);
        }

        #[test]
        fn gap_set_matches_definition(s in arb_set()) {
            for d in directions(s.dimension()).unwrap() {
                prop_assert_eq!(gap_set(&s, &d).unwrap(), gap_oracle(&s, &d));
            }
        }

        #[test]
        fn gap_counts_are_sign_symmetric(s in arb_set()) {
            for d in directions(s.dimension()).unwrap() {
                prop_assert_eq!(gap_set(&s, &d).unwrap().len(), gap_set(&s, &d.negate()).unwrap().len());
            }
        }

        #[test]
        fn partition_identity(s in arb_set()) {
            let direct = edge_boundary_direct(&s).count;
            for i in 1..=s.dimension() {
                prop_assert_eq!(partial_edge_boundary_sum(&s, i).unwrap(), direct);
            }
        }

        #[test]
        fn translation_invariance(s in arb_set(), shift in prop::collection::vec(-20i64..20, 3)) {
            let t = s.translate(&shift[..s.dimension()]).unwrap();
            prop_assert_eq!(edge_boundary_direct(&t).count, edge_boundary_direct(&s).count);
            prop_assert_eq!(exterior_vertex_boundary(&t), exterior_vertex_boundary(&s));
            prop_assert_eq!(edge_boundary_formula(&t), edge_boundary_formula(&s));
        }

        #[test]
        fn symmetry_invariance(s in arb_set(), flips in prop::collection::vec(any::<bool>(), 3), rot in 0usize..3) {
            let n = s.dimension();
            let image = PointSet::from_points(n, s.iter().map(|p| {
                let c = p.coords();
                (0..n).map(|k| {
                    let v = c[(k + rot) % n];
                    if flips[k] { -v } else { v }
                }).collect::<Vec<_>>()
            })).unwrap();
            prop_assert_eq!(edge_boundary_direct(&image).count, edge_boundary_direct(&s).count);
        }

        #[test]
        fn degree_bound(s in arb_set()) {
            let n = s.dimension();
            let full = s.len() as u64 * (3u64.pow(n as u32) - 1);
            let count = edge_boundary_direct(&s).count;
            prop_assert!(count <= full);
            let spread = s.iter().all(|u| s.iter().all(|v| u == v || crate::lattice::chebyshev_distance(u, v).unwrap() >= 2));
            prop_assert_eq!(count == full, spread);
        }
    }
}
