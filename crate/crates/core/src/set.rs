//! 1-D domain type: a finite, strictly increasing sequence of positive integers.

use crate::error::{Error, Result};
use std::fmt;
use std::io::{BufRead, Write};

/// A finite set of positive integers, stored strictly increasing.
///
/// This is the ground object of the whole crate: AP detectors run over it,
/// the greedy and Behrend builders emit it, and the lifting turns it into a
/// 2-D band. The empty set is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaturalSet {
    elements: Vec<u64>,
}

impl NaturalSet {
    /// Builds a set from an already sorted vector. Rejects zeros, duplicates
    /// and out-of-order elements rather than repairing them.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        for window in elements.windows(2) {
            if window[1] <= window[0] {
                return Err(Error::NotIncreasing {
                    prev: window[0],
                    next: window[1],
                });
            }
        }
        if elements.first().is_some_and(|&first| first == 0) {
            return Err(Error::NotPositive);
        }
        Ok(Self { elements })
    }

    /// Builds a set from arbitrary input, sorting and deduplicating.
    /// Zeros are still rejected.
    pub fn from_unsorted(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    pub fn empty() -> Self {
        Self { elements: Vec::new() }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    /// Reads the one-integer-per-line text format. The file must be strictly
    /// increasing; violations are reported with their line number.
    pub fn read_text<R: BufRead>(reader: R) -> Result<Self> {
        let mut elements = Vec::new();
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
            let value: u64 = trimmed.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected a positive integer, got {trimmed:?}"),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "elements must be at least 1".into(),
                });
            }
            if let Some(&prev) = elements.last() {
                if value <= prev {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("elements must be strictly increasing: {prev} then {value}"),
                    });
                }
            }
            elements.push(value);
        }
        Ok(Self { elements })
    }

    /// Writes the one-integer-per-line text format with LF line endings.
    pub fn write_text<W: Write>(&self, mut writer: W) -> std::io::Result<()> {
        for &element in &self.elements {
            writeln!(writer, "{element}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        self.write_text(&mut out).expect("writing to Vec cannot fail");
        String::from_utf8(out).expect("output is ASCII")
    }
}

impl fmt::Display for NaturalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_accepts_strictly_increasing() {
        let set = NaturalSet::new(vec![1, 2, 4, 5]).unwrap();
        assert_eq!(set.elements(), &[1, 2, 4, 5]);
        assert_eq!(set.max(), Some(5));
        assert!(set.contains(4));
        assert!(!set.contains(3));
    }

    #[test]
    fn new_rejects_zero_duplicates_and_disorder() {
        assert_eq!(NaturalSet::new(vec![0, 1]), Err(Error::NotPositive));
        assert_eq!(
            NaturalSet::new(vec![1, 1]),
            Err(Error::NotIncreasing { prev: 1, next: 1 })
        );
        assert_eq!(
            NaturalSet::new(vec![2, 1]),
            Err(Error::NotIncreasing { prev: 2, next: 1 })
        );
    }

    #[test]
    fn from_unsorted_normalizes() {
        let set = NaturalSet::from_unsorted([5, 1, 4, 2, 5]).unwrap();
        assert_eq!(set.elements(), &[1, 2, 4, 5]);
    }

    #[test]
    fn text_round_trip() {
        let set = NaturalSet::new(vec![1, 2, 4, 5]).unwrap();
        let text = set.to_text();
        assert_eq!(text, "1\n2\n4\n5\n");
        let back = NaturalSet::read_text(text.as_bytes()).unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn read_text_reports_line_numbers() {
        let err = NaturalSet::read_text("1\n3\n2\n".as_bytes()).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "elements must be strictly increasing: 3 then 2".into()
            }
        );
        let err = NaturalSet::read_text("1\nx\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_set_is_fine() {
        let set = NaturalSet::read_text("".as_bytes()).unwrap();
        assert!(set.is_empty());
        assert_eq!(set.max(), None);
    }
}
