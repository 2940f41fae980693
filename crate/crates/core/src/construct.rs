//! Builders and the lifting that connects the two pattern worlds.
//!
//! `theta` maps a 1-D set onto the diagonals of a 2-D band: membership of
//! (x, y) in the image is exactly "x - y is an element". A grid in the image
//! therefore collapses to an arithmetic progression (`grid_to_ap`), and a
//! long-enough progression re-embeds as a grid (`ap_to_grid`). Together these
//! two conversions carry witnesses across the reduction in both directions.

use crate::error::{Error, Result};
use crate::points::PointSet;
use crate::set::NaturalSet;
use crate::witness::{ApWitness, GridWitness};

/// The lexicographically greedy k-AP-free subset of {1..n}: scan upward and
/// keep every element that does not complete a k-term progression among the
/// kept ones.
pub fn greedy_ap_free(k: u32, n: u64) -> Result<NaturalSet> {
    if k < 3 {
        return Err(Error::ApLengthTooSmall(k));
    }
    let len = usize::try_from(n.checked_add(1).ok_or(Error::Overflow("n + 1"))?)
        .map_err(|_| Error::Overflow("n + 1"))?;
    let mut chosen: Vec<u64> = Vec::new();
    let mut dense = vec![false; len];
    for x in 1..=n {
        if completes_ap(&chosen, &dense, x, k) {
            continue;
        }
        chosen.push(x);
        dense[x as usize] = true;
    }
    NaturalSet::new(chosen)
}

/// True iff adding `x` (larger than everything chosen) completes a k-term
/// progression, i.e. some chosen c = x - d continues downward k-1 more steps
/// through chosen elements. Scanning chosen from the top keeps d small first
/// and exits as soon as the span leaves the positive range. Shared with the
/// branch-and-bound search, whose legality test is the same question.
pub(crate) fn completes_ap(chosen: &[u64], dense: &[bool], x: u64, k: u32) -> bool {
    for &c in chosen.iter().rev() {
        let d = x - c;
        if d.checked_mul(u64::from(k - 1)).is_none_or(|span| span > x - 1) {
            return false;
        }
        let mut term = c;
        let mut all = true;
        for _ in 2..k {
            term -= d;
            if !dense[term as usize] {
                all = false;
                break;
            }
        }
        if all {
            return true;
        }
    }
    false
}

/// The band lifting: {(a + m, m) : a in set, 1 <= m <= rows}.
///
/// Every diagonal x - y = a of the band is fully populated for the first
/// `rows` rows, so |result| = |set| * rows exactly.
pub fn theta(set: &NaturalSet, rows: u64) -> Result<PointSet> {
    if rows == 0 {
        return Err(Error::InvalidParameter("rows must be at least 1".into()));
    }
    if let Some(max) = set.max() {
        max.checked_add(rows).ok_or(Error::Overflow("a + rows"))?;
    }
    let capacity = (set.len() as u64)
        .checked_mul(rows)
        .ok_or(Error::Overflow("|set| * rows"))?;
    let mut points = Vec::with_capacity(capacity as usize);
    for m in 1..=rows {
        for a in set.iter() {
            points.push((a + m, m));
        }
    }
    points.sort_unstable();
    PointSet::new(points)
}

/// Collapses a grid found in a lifted band to the progression it forces.
///
/// The s^2 points of a grid witness inside theta(A, rows) pin down the
/// diagonals x0 - y0 + t * side for t = -(size-1) .. size-1, all of which
/// must be elements: a (2*size - 1)-term progression with difference `side`.
pub fn grid_to_ap(witness: &GridWitness) -> Result<ApWitness> {
    let size = witness.size();
    let span = witness.side() * u64::from(size - 1); // in range: witness invariant
    let start = witness
        .x0()
        .checked_sub(witness.y0())
        .and_then(|center| center.checked_sub(span))
        .filter(|&start| start >= 1)
        .ok_or(Error::NotLiftable {
            x0: witness.x0(),
            y0: witness.y0(),
            side: witness.side(),
            size,
        })?;
    let length = size
        .checked_mul(2)
        .and_then(|v| v.checked_sub(1))
        .ok_or(Error::Overflow("2*size - 1"))?;
    ApWitness::new(start, witness.side(), length)
}

/// Re-embeds a (2s-1)-term progression as an s-by-s grid in the band of the
/// given depth, anchored at the shallowest placement y0 = 1, x0 = center + 1.
/// Returns `None` when the band is too shallow: the grid needs rows
/// 1 .. 1 + (s-1) * diff.
pub fn ap_to_grid(witness: &ApWitness, rows: u64) -> Result<Option<GridWitness>> {
    let length = witness.length();
    if length % 2 == 0 {
        return Err(Error::EvenLength(length));
    }
    let s = (length + 1) / 2; // length >= 3 and odd, so s >= 2
    let span = witness.diff() * u64::from(s - 1); // at most (length-1)*diff, checked by ApWitness
    let depth = 1 + span;
    if depth > rows {
        return Ok(None);
    }
    let center = witness.start() + span;
    let x0 = center.checked_add(1).ok_or(Error::Overflow("center + 1"))?;
    Ok(Some(GridWitness::new(x0, 1, witness.diff(), s)?))
}
