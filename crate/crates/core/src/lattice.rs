//! Integer lattice primitives for the king graph on `Z^n`.
//!
//! Two points are adjacent when their Chebyshev (`l_inf`) distance is 1, so
//! every vertex has `3^n - 1` neighbours, one per [`Direction`].
//!
//! Coordinate indices passed to this crate are 1-based (`1..=n`), matching the
//! usual mathematical convention for `(p, x -> i)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};

/// A vertex of the lattice graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// `self + scale * dir`.
    pub fn offset(&self, dir: &[i64], scale: i64) -> LatticePoint {
        debug_assert_eq!(self.0.len(), dir.len());
        LatticePoint(self.0.iter().zip(dir).map(|(c, d)| c + scale * d).collect())
    }

    pub fn step(&self, dir: &Direction) -> LatticePoint {
        self.offset(dir.steps(), 1)
    }

    /// Drops coordinate `i` (1-based); the inverse of [`insert_coordinate`].
    pub fn remove_coordinate(&self, i: usize) -> Result<Vec<i64>> {
        check_index(i, self.dimension())?;
        let mut rest = self.0.clone();
        rest.remove(i - 1);
        Ok(rest)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A nonzero vector in `{-1, 0, 1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Direction(Vec<i64>);

impl Direction {
    pub fn new(steps: Vec<i64>) -> Result<Self> {
        if steps.is_empty()
            || steps.iter().any(|s| !(-1..=1).contains(s))
            || steps.iter().all(|&s| s == 0)
        {
            return Err(LatticeError::InvalidDirection(steps));
        }
        Ok(Direction(steps))
    }

    /// The standard basis vector `e_i` (1-based) in dimension `n`.
    pub fn basis(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut steps = vec![0; n];
        steps[i - 1] = 1;
        Ok(Direction(steps))
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn steps(&self) -> &[i64] {
        &self.0
    }

    pub fn negate(&self) -> Direction {
        Direction(self.0.iter().map(|s| -s).collect())
    }

    /// Index (0-based) of the first nonzero step.
    fn leading_axis(&self) -> usize {
        self.0
            .iter()
            .position(|&s| s != 0)
            .expect("direction is nonzero")
    }
}

impl TryFrom<Vec<i64>> for Direction {
    type Error = LatticeError;

    fn try_from(steps: Vec<i64>) -> Result<Self> {
        Direction::new(steps)
    }
}

impl From<Direction> for Vec<i64> {
    fn from(d: Direction) -> Self {
        d.0
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match s {
                1 => write!(f, "+1")?,
                -1 => write!(f, "-1")?,
                _ => write!(f, "0")?,
            }
        }
        write!(f, ")")
    }
}

/// A finite set of lattice points of a fixed dimension.
///
/// Iteration order is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet", into = "RawPointSet")]
pub struct PointSet {
    dimension: usize,
    points: BTreeSet<LatticePoint>,
}

impl PointSet {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(LatticeError::InvalidDimension(0));
        }
        Ok(PointSet {
            dimension,
            points: BTreeSet::new(),
        })
    }

    /// Builds a set from points; repeated points collapse to one.
    pub fn from_points<I, P>(dimension: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<LatticePoint>,
    {
        let mut set = PointSet::new(dimension)?;
        for p in points {
            set.insert(p.into())?;
        }
        Ok(set)
    }

    /// The axis-aligned box `[0, extents[0]) x ... x [0, extents[n-1])`.
    pub fn a_box(extents: &[i64]) -> Result<Self> {
        let mut set = PointSet::new(extents.len())?;
        let mut cursor = vec![0i64; extents.len()];
        if extents.iter().any(|&e| e <= 0) {
            return Ok(set);
        }
        loop {
            set.points.insert(LatticePoint(cursor.clone()));
            let mut axis = 0;
            loop {
                if axis == extents.len() {
                    return Ok(set);
                }
                cursor[axis] += 1;
                if cursor[axis] < extents[axis] {
                    break;
                }
                cursor[axis] = 0;
                axis += 1;
            }
        }
    }

    /// Inserts a point, returning `false` if it was already present.
    pub fn insert(&mut self, p: LatticePoint) -> Result<bool> {
        self.check_point(&p)?;
        Ok(self.points.insert(p))
    }

    pub fn remove(&mut self, p: &LatticePoint) -> bool {
        self.points.remove(p)
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> + '_ {
        self.points.iter()
    }

    pub fn points(&self) -> &BTreeSet<LatticePoint> {
        &self.points
    }

    pub fn translate(&self, by: &[i64]) -> Result<PointSet> {
        self.check_arity(by.len())?;
        Ok(PointSet {
            dimension: self.dimension,
            points: self.points.iter().map(|p| p.offset(by, 1)).collect(),
        })
    }

    /// Per-axis `(min, max)` over the set; `None` when empty.
    pub fn bounding_box(&self) -> Option<Vec<(i64, i64)>> {
        let mut iter = self.points.iter();
        let first = iter.next()?;
        let mut bounds: Vec<(i64, i64)> = first.coords().iter().map(|&c| (c, c)).collect();
        for p in iter {
            for (b, &c) in bounds.iter_mut().zip(p.coords()) {
                b.0 = b.0.min(c);
                b.1 = b.1.max(c);
            }
        }
        Some(bounds)
    }

    /// Translates so that the per-axis minimum is 0. Two sets are translates
    /// of each other iff their normalized forms are equal.
    pub fn normalized(&self) -> PointSet {
        match self.bounding_box() {
            None => self.clone(),
            Some(bounds) => {
                let shift: Vec<i64> = bounds.iter().map(|b| -b.0).collect();
                self.translate(&shift).expect("arity matches")
            }
        }
    }

    pub(crate) fn check_point(&self, p: &LatticePoint) -> Result<()> {
        self.check_arity(p.dimension())
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if found != self.dimension {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dimension,
                found,
            });
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawPointSet {
    dimension: usize,
    points: Vec<LatticePoint>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = LatticeError;

    fn try_from(raw: RawPointSet) -> Result<Self> {
        let mut set = PointSet::new(raw.dimension)?;
        for p in raw.points {
            if !set.insert(p.clone())? {
                return Err(LatticeError::DuplicatePoint(p));
            }
        }
        Ok(set)
    }
}

impl From<PointSet> for RawPointSet {
    fn from(set: PointSet) -> Self {
        RawPointSet {
            dimension: set.dimension,
            points: set.points.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::collections::btree_set::Iter<'a, LatticePoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// The points of a set lying on one lattice line `base + t * direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSection {
    pub base: LatticePoint,
    pub direction: Direction,
    /// Strictly increasing.
    pub positions: Vec<i64>,
}

impl LineSection {
    pub fn point_at(&self, t: i64) -> LatticePoint {
        self.base.offset(self.direction.steps(), t)
    }

    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.positions.iter().map(move |&t| self.point_at(t))
    }

    /// Number of maximal runs of consecutive positions.
    pub fn run_count(&self) -> usize {
        if self.positions.is_empty() {
            return 0;
        }
        1 + self
            .positions
            .windows(2)
            .filter(|w| w[1] - w[0] >= 2)
            .count()
    }
}

/// All `3^n - 1` directions in lexicographic order.
pub fn directions(n: usize) -> Result<Vec<Direction>> {
    if n == 0 {
        return Err(LatticeError::InvalidDimension(0));
    }
    let total = 3usize
        .checked_pow(n as u32)
        .ok_or(LatticeError::InvalidDimension(n))?;
    let mut out = Vec::with_capacity(total - 1);
    let mut steps = vec![-1i64; n];
    loop {
        if steps.iter().any(|&s| s != 0) {
            out.push(Direction(steps.clone()));
        }
        // odometer with the last coordinate fastest, giving lexicographic order
        let mut axis = n;
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            if steps[axis] < 1 {
                steps[axis] += 1;
                break;
            }
            steps[axis] = -1;
        }
    }
}

/// Every vector in `{-1, 0, 1}^m` including zero, lexicographic. For `m = 0`
/// this is the single empty vector.
pub fn offset_cube(m: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-1..=1).map(move |s| {
                    let mut v = prefix.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn neighbors(p: &LatticePoint) -> Vec<LatticePoint> {
    match directions(p.dimension()) {
        Ok(dirs) => dirs.iter().map(|d| p.step(d)).collect(),
        Err(_) => Vec::new(),
    }
}

pub fn chebyshev_distance(u: &LatticePoint, v: &LatticePoint) -> Result<u64> {
    if u.dimension() != v.dimension() {
        return Err(LatticeError::DimensionMismatch {
            expected: u.dimension(),
            found: v.dimension(),
        });
    }
    Ok(u.coords()
        .iter()
        .zip(v.coords())
        .map(|(a, b)| a.abs_diff(*b))
        .max()
        .unwrap_or(0))
}

/// `(p, x -> i)`: places `x` at coordinate `i` (1-based) and shifts the
/// remaining entries of `p` right.
pub fn insert_coordinate(p: &[i64], x: i64, i: usize) -> Result<LatticePoint> {
    check_index(i, p.len() + 1)?;
    let mut coords = Vec::with_capacity(p.len() + 1);
    coords.extend_from_slice(&p[..i - 1]);
    coords.push(x);
    coords.extend_from_slice(&p[i - 1..]);
    Ok(LatticePoint(coords))
}

/// Partitions `set` into maximal classes of points differing by integer
/// multiples of `dir`. Sections come out ordered by base point.
///
/// The base of a line is its unique point whose coordinate at the first
/// nonzero step of `dir` equals 0.
pub fn line_sections(set: &PointSet, dir: &Direction) -> Result<Vec<LineSection>> {
    if dir.dimension() != set.dimension() {
        return Err(LatticeError::DimensionMismatch {
            expected: set.dimension(),
            found: dir.dimension(),
        });
    }
    let lead = dir.leading_axis();
    let sign = dir.steps()[lead];
    let mut classes: BTreeMap<LatticePoint, Vec<i64>> = BTreeMap::new();
    for p in set {
        let t = p.coords()[lead] * sign;
        let base = p.offset(dir.steps(), -t);
        classes.entry(base).or_default().push(t);
    }
    Ok(classes
        .into_iter()
        .map(|(base, mut positions)| {
            positions.sort_unstable();
            LineSection {
                base,
                direction: dir.clone(),
                positions,
            }
        })
        .collect())
}

/// The 1-dimensional `i`-sections of a set: for every `p` in `Z^(n-1)` with a
/// nonempty section, the sorted `x` such that `(p, x -> i)` is in the set.
pub fn axis_sections(set: &PointSet, i: usize) -> Result<BTreeMap<Vec<i64>, Vec<i64>>> {
    check_index(i, set.dimension())?;
    let mut out: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for pt in set {
        let mut rest = pt.coords().to_vec();
        let x = rest.remove(i - 1);
        out.entry(rest).or_default().push(x);
    }
    // points iterate lexicographically, but x is not the leading key for i > 1
    for xs in out.values_mut() {
        xs.sort_unstable();
    }
    Ok(out)
}

pub(crate) fn check_index(i: usize, dimension: usize) -> Result<()> {
    if i == 0 || i > dimension {
        return Err(LatticeError::IndexOutOfRange {
            index: i,
            dimension,
        });
    }
    Ok(())
}
