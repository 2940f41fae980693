//! Pattern certificates: a k-term progression and an s-by-s grid.
//!
//! Both witnesses are plain data. Whether a witness actually sits inside a
//! given set is a separate question answered by the verifiers in `detect`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Certificate for a k-term arithmetic progression
/// `start, start + diff, ..., start + (length-1) * diff`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawApWitness")]
pub struct ApWitness {
    start: u64,
    diff: u64,
    length: u32,
}

#[derive(Deserialize)]
struct RawApWitness {
    start: u64,
    diff: u64,
    length: u32,
}

impl TryFrom<RawApWitness> for ApWitness {
    type Error = Error;

    fn try_from(raw: RawApWitness) -> Result<Self> {
        ApWitness::new(raw.start, raw.diff, raw.length)
    }
}

impl ApWitness {
    /// Validates the invariants: length >= 3, diff >= 1, start >= 1, and
    /// the last term representable in 64 bits.
    pub fn new(start: u64, diff: u64, length: u32) -> Result<Self> {
        if length < 3 {
            return Err(Error::ApLengthTooSmall(length));
        }
        if diff == 0 {
            return Err(Error::ZeroDiff);
        }
        if start == 0 {
            return Err(Error::NotPositive);
        }
        let span = diff
            .checked_mul(u64::from(length - 1))
            .ok_or(Error::Overflow("(length-1)*diff"))?;
        start
            .checked_add(span)
            .ok_or(Error::Overflow("start + (length-1)*diff"))?;
        Ok(Self { start, diff, length })
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn diff(&self) -> u64 {
        self.diff
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// The terms in increasing order. Cannot overflow: `new` checked the
    /// last term.
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..u64::from(self.length)).map(move |i| self.start + i * self.diff)
    }

    pub fn last_term(&self) -> u64 {
        self.start + u64::from(self.length - 1) * self.diff
    }

    /// Single-line JSON with keys {"start","diff","length"}.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization cannot fail")
    }
}

/// Certificate for an s-by-s axes-parallel grid with equal spacing:
/// the point set `{(x0 + i*side, y0 + j*side) : 0 <= i, j < size}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGridWitness")]
pub struct GridWitness {
    x0: u64,
    y0: u64,
    side: u64,
    size: u32,
}

#[derive(Deserialize)]
struct RawGridWitness {
    x0: u64,
    y0: u64,
    side: u64,
    size: u32,
}

impl TryFrom<RawGridWitness> for GridWitness {
    type Error = Error;

    fn try_from(raw: RawGridWitness) -> Result<Self> {
        GridWitness::new(raw.x0, raw.y0, raw.side, raw.size)
    }
}

impl GridWitness {
    /// Validates the invariants: size >= 2, side >= 1, positive corner, and
    /// the far corner representable in 64 bits.
    pub fn new(x0: u64, y0: u64, side: u64, size: u32) -> Result<Self> {
        if size < 2 {
            return Err(Error::GridSizeTooSmall(size));
        }
        if side == 0 {
            return Err(Error::ZeroSide);
        }
        if x0 == 0 || y0 == 0 {
            return Err(Error::NotPositive);
        }
        let span = side
            .checked_mul(u64::from(size - 1))
            .ok_or(Error::Overflow("(size-1)*side"))?;
        x0.checked_add(span)
            .ok_or(Error::Overflow("x0 + (size-1)*side"))?;
        y0.checked_add(span)
            .ok_or(Error::Overflow("y0 + (size-1)*side"))?;
        Ok(Self { x0, y0, side, size })
    }

    pub fn x0(&self) -> u64 {
        self.x0
    }

    pub fn y0(&self) -> u64 {
        self.y0
    }

    pub fn side(&self) -> u64 {
        self.side
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// The size^2 denoted points, row by row. Cannot overflow: `new`
    /// checked the far corner.
    pub fn points(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let size = u64::from(self.size);
        (0..size).flat_map(move |j| {
            (0..size).map(move |i| (self.x0 + i * self.side, self.y0 + j * self.side))
        })
    }

    /// Single-line JSON with keys {"x0","y0","side","size"}.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ap_witness_terms() {
        let w = ApWitness::new(2, 3, 5).unwrap();
        assert_eq!(w.terms().collect::<Vec<_>>(), vec![2, 5, 8, 11, 14]);
        assert_eq!(w.last_term(), 14);
    }

    #[test]
    fn ap_witness_rejects_bad_inputs() {
        assert_eq!(ApWitness::new(1, 1, 2), Err(Error::ApLengthTooSmall(2)));
        assert_eq!(ApWitness::new(1, 0, 3), Err(Error::ZeroDiff));
        assert_eq!(ApWitness::new(0, 1, 3), Err(Error::NotPositive));
        assert!(matches!(
            ApWitness::new(u64::MAX, 2, 3),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn grid_witness_points() {
        let w = GridWitness::new(2, 1, 2, 2).unwrap();
        let points: Vec<_> = w.points().collect();
        assert_eq!(points, vec![(2, 1), (4, 1), (2, 3), (4, 3)]);
    }

    #[test]
    fn grid_witness_rejects_bad_inputs() {
        assert_eq!(GridWitness::new(1, 1, 1, 1), Err(Error::GridSizeTooSmall(1)));
        assert_eq!(GridWitness::new(1, 1, 0, 2), Err(Error::ZeroSide));
        assert_eq!(GridWitness::new(1, 0, 1, 2), Err(Error::NotPositive));
        assert!(matches!(
            GridWitness::new(u64::MAX - 1, 1, 3, 2),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn json_shapes_match_the_wire_format() {
        let ap = ApWitness::new(1, 2, 3).unwrap();
        assert_eq!(ap.to_json(), r#"{"start":1,"diff":2,"length":3}"#);
        let grid = GridWitness::new(2, 1, 2, 2).unwrap();
        assert_eq!(grid.to_json(), r#"{"x0":2,"y0":1,"side":2,"size":2}"#);

        let back: ApWitness = serde_json::from_str(&ap.to_json()).unwrap();
        assert_eq!(back, ap);
        let bad: std::result::Result<ApWitness, _> =
            serde_json::from_str(r#"{"start":1,"diff":0,"length":3}"#);
        assert!(bad.is_err());
    }
}
