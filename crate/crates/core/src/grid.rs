use crate::seed::check_side;
use crate::{Error, Result, SeedSet};

/// Dense seed index, `0..s`.
pub type SeedId = u32;

/// A per-pixel claim: either a seed id or the reserved EMPTY sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(transparent)]
pub struct Claim(u32);

/// The unclaimed sentinel. Distinct from every valid seed id.
pub const EMPTY: Claim = Claim(u32::MAX);

impl Claim {
    pub fn seed(id: SeedId) -> Claim {
        debug_assert!(id != u32::MAX, "seed id collides with the EMPTY sentinel");
        Claim(id)
    }

    pub fn seed_id(self) -> Option<SeedId> {
        if self == EMPTY {
            None
        } else {
            Some(self.0)
        }
    }

    pub fn is_empty(self) -> bool {
        self == EMPTY
    }

    pub(crate) fn from_raw(raw: u32) -> Claim {
        Claim(raw)
    }
}

/// A rasterized Voronoi diagram: `n x n` claims in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoronoiGrid {
    n: u32,
    claims: Vec<Claim>,
}

impl VoronoiGrid {
    /// An all-EMPTY grid.
    pub fn empty(n: u32) -> Result<Self> {
        check_side(n)?;
        Ok(Self {
            n,
            claims: vec![EMPTY; (n as usize) * (n as usize)],
        })
    }

    /// Wraps an existing claim buffer; the length must be exactly `n * n`.
    pub fn from_claims(n: u32, claims: Vec<Claim>) -> Result<Self> {
        check_side(n)?;
        let expected = (n as u64) * (n as u64);
        if claims.len() as u64 != expected {
            return Err(Error::ClaimCountMismatch {
                expected,
                actual: claims.len() as u64,
            });
        }
        Ok(Self { n, claims })
    }

    pub(crate) fn from_claims_unchecked(n: u32, claims: Vec<Claim>) -> Self {
        debug_assert_eq!(claims.len(), (n as usize) * (n as usize));
        Self { n, claims }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub(crate) fn into_claims(self) -> Vec<Claim> {
        self.claims
    }

    #[inline]
    pub fn index(&self, x: u32, y: u32) -> usize {
        debug_assert!(x < self.n && y < self.n);
        (y as usize) * (self.n as usize) + x as usize
    }

    #[inline]
    pub fn claim_at(&self, x: u32, y: u32) -> Claim {
        self.claims[self.index(x, y)]
    }

    /// True when no pixel is EMPTY.
    pub fn is_complete(&self) -> bool {
        self.claims.iter().all(|c| !c.is_empty())
    }

    /// Largest referenced seed id, or None for an all-EMPTY grid.
    pub fn max_seed_id(&self) -> Option<SeedId> {
        self.claims.iter().filter_map(|c| c.seed_id()).max()
    }
}

/// Writes each seed's own pixel into an otherwise EMPTY grid.
///
/// This is the shared initialization of every flooding variant. When seeds
/// share a pixel the lowest id wins.
pub fn stamp_seeds(seeds: &SeedSet) -> VoronoiGrid {
    let n = seeds.n();
    let mut claims = vec![EMPTY; (n as usize) * (n as usize)];
    stamp_into(seeds, &mut claims);
    VoronoiGrid::from_claims_unchecked(n, claims)
}

/// Stamps seed pixels into an existing buffer (used by the dynamic variant,
/// which starts from the previous diagram instead of an empty one).
pub(crate) fn stamp_into(seeds: &SeedSet, claims: &mut [Claim]) {
    let n = seeds.n() as usize;
    // Descending id order, so co-located seeds end with the lowest id.
    for seed in seeds.seeds().iter().rev() {
        claims[(seed.y as usize) * n + seed.x as usize] = Claim::seed(seed.id);
    }
}
