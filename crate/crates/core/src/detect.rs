//! Pattern detectors and witness verifiers.
//!
//! `find_ap` scans a 1-D set for a k-term arithmetic progression; `find_grid`
//! scans a planar set for an s-by-s axes-parallel grid with equal spacing in
//! both directions. Both return the deterministic minimum witness under their
//! documented tie-break, or `None` when the set is pattern-free. The
//! verifiers replay a witness against a set by membership alone, so they stay
//! independent of the search logic.

use crate::error::{Error, Result};
use crate::points::{Point, PointSet};
use crate::set::NaturalSet;
use crate::witness::{ApWitness, GridWitness};
use std::collections::HashMap;

/// Above this bounding-box volume the detectors probe a hash index instead
/// of allocating a dense bitmap.
const DENSE_LIMIT: u64 = 1 << 24;

/// Membership index over a 1-D set: dense for compact sets, binary search
/// otherwise.
enum SetIndex<'a> {
    Dense(Vec<bool>),
    Sorted(&'a [u64]),
}

impl<'a> SetIndex<'a> {
    fn build(set: &'a NaturalSet) -> Self {
        match set.max() {
            Some(max) if max <= DENSE_LIMIT => {
                let mut dense = vec![false; (max + 1) as usize];
                for element in set.iter() {
                    dense[element as usize] = true;
                }
                SetIndex::Dense(dense)
            }
            _ => SetIndex::Sorted(set.elements()),
        }
    }

    #[inline]
    fn contains(&self, value: u64) -> bool {
        match self {
            SetIndex::Dense(dense) => {
                (value as usize) < dense.len() && dense[value as usize]
            }
            SetIndex::Sorted(elements) => elements.binary_search(&value).is_ok(),
        }
    }
}

/// Finds a k-term arithmetic progression inside `set`, or `None` if the set
/// is k-AP-free. Among all progressions the returned witness minimizes
/// (start, diff) lexicographically.
///
/// Every pair of elements proposes a start and a difference; the remaining
/// k-2 terms are membership probes. O(n^2 * k) with an O(1) index.
pub fn find_ap(set: &NaturalSet, k: u32) -> Result<Option<ApWitness>> {
    if k < 3 {
        return Err(Error::ApLengthTooSmall(k));
    }
    if (set.len() as u64) < u64::from(k) {
        return Ok(None);
    }
    let elements = set.elements();
    let max = *elements.last().expect("nonempty");
    let index = SetIndex::build(set);

    for (i, &start) in elements.iter().enumerate() {
        for &second in &elements[i + 1..] {
            let diff = second - start;
            // Larger j only increases diff, so once the span leaves the set
            // no later pair with this start can work either.
            let span = match diff.checked_mul(u64::from(k - 1)) {
                Some(span) => span,
                None => break,
            };
            if span > max - start {
                break;
            }
            let mut term = second;
            let mut missing = false;
            for _ in 2..k {
                term += diff;
                if !index.contains(term) {
                    missing = true;
                    break;
                }
            }
            if !missing {
                return Ok(Some(ApWitness::new(start, diff, k)?));
            }
        }
    }
    Ok(None)
}

/// True iff every term of the witness is a member of `set`.
pub fn verify_ap_witness(set: &NaturalSet, witness: &ApWitness) -> bool {
    witness.terms().all(|term| set.contains(term))
}

/// True iff every denoted point of the witness is a member of `points`.
pub fn verify_grid_witness(points: &PointSet, witness: &GridWitness) -> bool {
    witness.points().all(|point| points.contains(point))
}

/// Distinct same-row pairwise gaps up to `side_limit`, ascending. A bitmap
/// dedups when the limit is small; a sort covers sparse huge ranges.
fn candidate_sides(rows: &HashMap<u64, Vec<u64>>, side_limit: u64) -> Vec<u64> {
    let mut gaps = Vec::new();
    if side_limit <= DENSE_LIMIT {
        let mut seen = vec![false; side_limit as usize + 1];
        for xs in rows.values() {
            // Points arrive (x, y)-sorted, so each row's xs are ascending.
            for (i, &x) in xs.iter().enumerate() {
                for &x2 in &xs[i + 1..] {
                    let gap = x2 - x;
                    if gap > side_limit {
                        break;
                    }
                    if !seen[gap as usize] {
                        seen[gap as usize] = true;
                        gaps.push(gap);
                    }
                }
            }
        }
        gaps.sort_unstable();
    } else {
        for xs in rows.values() {
            for (i, &x) in xs.iter().enumerate() {
                for &x2 in &xs[i + 1..] {
                    let gap = x2 - x;
                    if gap > side_limit {
                        break;
                    }
                    gaps.push(gap);
                }
            }
        }
        gaps.sort_unstable();
        gaps.dedup();
    }
    gaps
}

/// Membership index over a 2-D set: dense bitmap over the bounding box when
/// it is small enough, hash probes otherwise.
enum GridIndex<'a> {
    Dense {
        min_x: u64,
        min_y: u64,
        width: usize,
        cells: Vec<bool>,
    },
    Hash(&'a PointSet),
}

impl<'a> GridIndex<'a> {
    fn build(points: &'a PointSet, bounds: (u64, u64, u64, u64)) -> Self {
        let (min_x, min_y, max_x, max_y) = bounds;
        let width = max_x - min_x + 1;
        let height = max_y - min_y + 1;
        if width.checked_mul(height).is_some_and(|area| area <= DENSE_LIMIT) {
            let width = width as usize;
            let mut cells = vec![false; width * height as usize];
            for (x, y) in points.iter() {
                cells[(y - min_y) as usize * width + (x - min_x) as usize] = true;
            }
            GridIndex::Dense {
                min_x,
                min_y,
                width,
                cells,
            }
        } else {
            GridIndex::Hash(points)
        }
    }

    #[inline]
    fn contains(&self, x: u64, y: u64) -> bool {
        match self {
            GridIndex::Dense {
                min_x,
                min_y,
                width,
                cells,
            } => {
                // Callers keep (x, y) inside the bounding box.
                cells[(y - min_y) as usize * width + (x - min_x) as usize]
            }
            GridIndex::Hash(points) => points.contains((x, y)),
        }
    }
}

/// Finds an s-by-s axes-parallel grid inside `points`, or `None` if the set
/// is grid-free. Among all grids the returned witness minimizes
/// (side, x0, y0) lexicographically.
///
/// Any grid places two points at distance `side` in its bottom row, so the
/// pairwise gaps within rows are a complete list of candidate spacings.
/// For each spacing in increasing order every point is tried as the
/// bottom-left corner.
pub fn find_grid(points: &PointSet, s: u32) -> Result<Option<GridWitness>> {
    if s < 2 {
        return Err(Error::GridSizeTooSmall(s));
    }
    let needed = (s as usize).saturating_mul(s as usize);
    if points.len() < needed {
        return Ok(None);
    }
    let bounds = points.bounds().expect("nonempty");
    let (min_x, min_y, max_x, max_y) = bounds;
    let steps = u64::from(s - 1);
    // A grid of spacing l needs (s-1)*l of horizontal and vertical room.
    let side_limit = ((max_x - min_x) / steps).min((max_y - min_y) / steps);
    if side_limit == 0 {
        return Ok(None);
    }

    // Candidate spacings: all same-row pairwise gaps up to the limit.
    let mut rows: HashMap<u64, Vec<u64>> = HashMap::new();
    for (x, y) in points.iter() {
        rows.entry(y).or_default().push(x);
    }
    let sides = candidate_sides(&rows, side_limit);

    let index = GridIndex::build(points, bounds);
    for side in sides {
        let span = side * steps;
        for &(x0, y0) in points.points() {
            // All subtractions are safe: every point lies in the box.
            if span > max_x - x0 || span > max_y - y0 {
                continue;
            }
            let mut complete = true;
            'cells: for j in 0..u64::from(s) {
                for i in 0..u64::from(s) {
                    if !index.contains(x0 + i * side, y0 + j * side) {
                        complete = false;
                        break 'cells;
                    }
                }
            }
            if complete {
                return Ok(Some(GridWitness::new(x0, y0, side, s)?));
            }
        }
    }
    Ok(None)
}
