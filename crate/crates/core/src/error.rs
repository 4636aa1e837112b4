use std::fmt;

/// Validation and precondition failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A seed set must contain at least one seed.
    EmptySeedSet,
    /// More seeds than grid pixels.
    TooManySeeds { count: u64, capacity: u64 },
    /// A seed position lies outside `[0, n) x [0, n)`.
    SeedOutOfBounds { id: u32, x: i32, y: i32, n: u32 },
    /// Seed ids must be dense and ordered: `seeds[i].id == i`.
    NonContiguousId { index: usize, id: u32 },
    /// Grid side below the operation's minimum.
    GridTooSmall { n: u32, min: u32 },
    /// Grid side too large for 32-bit pixel arithmetic.
    GridTooLarge { n: u32, max: u32 },
    /// Claim buffer length does not match `n * n`.
    ClaimCountMismatch { expected: u64, actual: u64 },
    /// Jump distances must be at least 1.
    ZeroJump,
    /// Repair rounds are limited to 0, 1 or 2.
    ExtraRoundsOutOfRange { value: u8 },
    /// Von Neumann phase waves are limited to 0, 1 or 2.
    VnWavesOutOfRange { value: u8 },
    /// Motion bound for the dynamic schedule must be at least 1.
    ZeroDisplacementBound,
    /// A wave schedule must halve strictly down to 1.
    MalformedSchedule(&'static str),
    /// Two grids (or a grid and a seed set) disagree on the side length.
    DimensionMismatch { left: u32, right: u32 },
    /// Operation requires a grid with no EMPTY claims.
    IncompleteGrid,
    /// A claim references a seed id outside the current seed set.
    StaleClaim { id: u32, seed_count: u32 },
    /// Speedup is only defined for positive times.
    NonPositiveTime,
    /// Histogram bin width must be positive and finite.
    InvalidBinWidth,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySeedSet => write!(f, "seed set is empty"),
            Error::TooManySeeds { count, capacity } => {
                write!(f, "{count} seeds exceed grid capacity of {capacity} pixels")
            }
            Error::SeedOutOfBounds { id, x, y, n } => {
                write!(f, "seed {id} at ({x}, {y}) is outside the {n}x{n} grid")
            }
            Error::NonContiguousId { index, id } => {
                write!(
                    f,
                    "seed at position {index} has id {id}; ids must be 0..s-1 in order"
                )
            }
            Error::GridTooSmall { n, min } => {
                write!(f, "grid side {n} is below the minimum of {min}")
            }
            Error::GridTooLarge { n, max } => {
                write!(f, "grid side {n} exceeds the supported maximum of {max}")
            }
            Error::ClaimCountMismatch { expected, actual } => {
                write!(
                    f,
                    "claim buffer holds {actual} entries, expected {expected}"
                )
            }
            Error::ZeroJump => write!(f, "jump distance must be at least 1"),
            Error::ExtraRoundsOutOfRange { value } => {
                write!(f, "extra rounds must be 0, 1 or 2 (got {value})")
            }
            Error::VnWavesOutOfRange { value } => {
                write!(f, "Von Neumann phase waves must be 0, 1 or 2 (got {value})")
            }
            Error::ZeroDisplacementBound => {
                write!(f, "motion bound d_max must be at least 1")
            }
            Error::MalformedSchedule(why) => write!(f, "malformed wave schedule: {why}"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "grid side mismatch: {left} vs {right}")
            }
            Error::IncompleteGrid => write!(f, "grid contains EMPTY claims"),
            Error::StaleClaim { id, seed_count } => {
                write!(
                    f,
                    "claim references seed {id}, but only {seed_count} seeds exist"
                )
            }
            Error::NonPositiveTime => write!(f, "times must be positive"),
            Error::InvalidBinWidth => write!(f, "bin width must be positive and finite"),
        }
    }
}

impl std::error::Error for Error {}
