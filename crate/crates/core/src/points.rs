//! 2-D domain type: a finite set of lattice points in the positive quadrant.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::io::{BufRead, Write};

/// A lattice point with both coordinates >= 1.
pub type Point = (u64, u64);

/// A finite set of lattice points with positive coordinates.
///
/// Points are stored sorted by (x, y), which is also the serialization
/// order, and mirrored into a hash index so membership probes are O(1)
/// amortized. Values are immutable after construction.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    index: HashSet<Point>,
}

impl PointSet {
    /// Builds a point set from an already (x, y)-sorted vector. Rejects
    /// zero coordinates, duplicates and out-of-order points.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        for window in points.windows(2) {
            if window[1] <= window[0] {
                return Err(Error::PointsNotIncreasing {
                    px: window[0].0,
                    py: window[0].1,
                    nx: window[1].0,
                    ny: window[1].1,
                });
            }
        }
        if points.iter().any(|&(x, y)| x == 0 || y == 0) {
            return Err(Error::NotPositive);
        }
        let index = points.iter().copied().collect();
        Ok(Self { points, index })
    }

    /// Builds a point set from arbitrary input, sorting and deduplicating.
    pub fn from_unsorted(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        Self::new(points)
    }

    pub fn empty() -> Self {
        Self {
            points: Vec::new(),
            index: HashSet::new(),
        }
    }

    /// Points sorted by (x, y).
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: Point) -> bool {
        self.index.contains(&point)
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    /// Bounding box as (min_x, min_y, max_x, max_y); None when empty.
    pub fn bounds(&self) -> Option<(u64, u64, u64, u64)> {
        let (mut min_x, mut min_y) = (u64::MAX, u64::MAX);
        let (mut max_x, mut max_y) = (0, 0);
        for &(x, y) in &self.points {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        if self.points.is_empty() {
            None
        } else {
            Some((min_x, min_y, max_x, max_y))
        }
    }

    /// Reads the "x y" one-point-per-line format. Lines must be sorted
    /// strictly increasing by (x, y); violations carry their line number.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self> {
        let mut points: Vec<Point> = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("read error: {e}"),
            })?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let parse = |token: Option<&str>| -> Result<u64> {
                let token = token.ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("expected \"x y\", got {trimmed:?}"),
                })?;
                token.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("expected a positive integer, got {token:?}"),
                })
            };
            let x = parse(parts.next())?;
            let y = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected \"x y\", got {trimmed:?}"),
                });
            }
            if x == 0 || y == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "coordinates must be at least 1".into(),
                });
            }
            if let Some(&prev) = points.last() {
                if (x, y) <= prev {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!(
                            "points must be sorted strictly increasing by (x, y): \
                             ({}, {}) then ({x}, {y})",
                            prev.0, prev.1
                        ),
                    });
                }
            }
            points.push((x, y));
        }
        let index = points.iter().copied().collect();
        Ok(Self { points, index })
    }

    /// Writes the "x y" per line format, (x, y)-sorted, LF endings.
    pub fn write_text<W: Write>(&self, mut writer: W) -> std::io::Result<()> {
        for &(x, y) in &self.points {
            writeln!(writer, "{x} {y}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        self.write_text(&mut out).expect("writing to Vec cannot fail");
        String::from_utf8(out).expect("output is ASCII")
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_accepts_sorted_points() {
        let set = PointSet::new(vec![(1, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains((1, 2)));
        assert!(!set.contains((2, 2)));
        assert_eq!(set.bounds(), Some((1, 1, 2, 2)));
    }

    #[test]
    fn new_rejects_zero_and_duplicates() {
        assert_eq!(PointSet::new(vec![(0, 1)]), Err(Error::NotPositive));
        assert!(matches!(
            PointSet::new(vec![(1, 1), (1, 1)]),
            Err(Error::PointsNotIncreasing { .. })
        ));
        assert!(matches!(
            PointSet::new(vec![(2, 1), (1, 1)]),
            Err(Error::PointsNotIncreasing { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let set = PointSet::from_unsorted([(3, 2), (2, 1), (2, 3)]).unwrap();
        let text = set.to_text();
        assert_eq!(text, "2 1\n2 3\n3 2\n");
        let back = PointSet::read_text(text.as_bytes()).unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn read_text_diagnostics_carry_line_numbers() {
        let err = PointSet::read_text("1 1\n1 1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = PointSet::read_text("1 1 1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = PointSet::read_text("1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
