use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `find_ap` and friends require progressions of length at least 3.
    #[error("progression length must be at least 3, got {0}")]
    ApLengthTooSmall(u32),

    /// Grids smaller than 2x2 are single points or lines, not patterns.
    #[error("grid size must be at least 2, got {0}")]
    GridSizeTooSmall(u32),

    /// Set elements and coordinates must be >= 1.
    #[error("expected a positive integer, got 0")]
    NotPositive,

    /// Spacing of a grid witness must be >= 1.
    #[error("grid side must be at least 1")]
    ZeroSide,

    /// Common difference of a progression witness must be >= 1.
    #[error("progression difference must be at least 1")]
    ZeroDiff,

    /// 64-bit arithmetic would wrap; the operation refuses instead.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// Elements out of order or duplicated when a sorted set was required.
    #[error("elements must be strictly increasing: {prev} followed by {next}")]
    NotIncreasing { prev: u64, next: u64 },

    /// Points out of order or duplicated when a sorted point list was required.
    #[error("points must be strictly increasing in (x, y): ({px}, {py}) followed by ({nx}, {ny})")]
    PointsNotIncreasing { px: u64, py: u64, nx: u64, ny: u64 },

    /// A grid witness whose lifted progression would leave the positive integers.
    #[error("grid witness does not lift: x0 - y0 - (size-1)*side < 1 (x0={x0}, y0={y0}, side={side}, size={size})")]
    NotLiftable { x0: u64, y0: u64, side: u64, size: u32 },

    /// `ap_to_grid` is defined only for odd progression lengths 2s-1.
    #[error("progression length must be odd to embed as a grid, got {0}")]
    EvenLength(u32),

    /// Parameter out of the documented range for the operation.
    #[error("{0}")]
    InvalidParameter(String),

    /// A line of an input file failed to parse.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
