use crate::scalar::{real_from_f64, real_from_u64, Real};

/// Distance function used when pixels compete for a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceMetric {
    Euclidean,
    Manhattan,
}

impl DistanceMetric {
    /// Exact integer comparison cost between two pixel centers.
    ///
    /// Euclidean costs are squared distances; Manhattan costs are the plain
    /// coordinate sums. Both are monotone in the true distance, and every
    /// kernel in this crate compares claims through this function, so
    /// claim resolution is exact and platform-independent.
    #[inline]
    pub fn cost(self, a: (i32, i32), b: (i32, i32)) -> u64 {
        match self {
            DistanceMetric::Euclidean => SquaredEuclidean::cost(a, b),
            DistanceMetric::Manhattan => Taxicab::cost(a, b),
        }
    }
}

/// The real-valued distance between two pixel centers.
pub fn distance<R: Real>(metric: DistanceMetric, a: (i32, i32), b: (i32, i32)) -> R {
    match metric {
        DistanceMetric::Euclidean => real_from_f64::<R>(SquaredEuclidean::cost(a, b) as f64).sqrt(),
        DistanceMetric::Manhattan => real_from_u64(Taxicab::cost(a, b)),
    }
}

/// Static-dispatch cost function for the wave kernels.
pub(crate) trait CostFn {
    fn cost(a: (i32, i32), b: (i32, i32)) -> u64;
}

pub(crate) struct SquaredEuclidean;

impl CostFn for SquaredEuclidean {
    #[inline(always)]
    fn cost(a: (i32, i32), b: (i32, i32)) -> u64 {
        let dx = (a.0 - b.0) as i64;
        let dy = (a.1 - b.1) as i64;
        (dx * dx + dy * dy) as u64
    }
}

pub(crate) struct Taxicab;

impl CostFn for Taxicab {
    #[inline(always)]
    fn cost(a: (i32, i32), b: (i32, i32)) -> u64 {
        let dx = (a.0 - b.0) as i64;
        let dy = (a.1 - b.1) as i64;
        (dx.abs() + dy.abs()) as u64
    }
}
