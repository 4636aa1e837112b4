use crate::{Error, Result};

/// Largest supported grid side. Keeps pixel coordinates and jump offsets
/// comfortably inside `i32` and squared distances inside `u64`.
pub(crate) const MAX_GRID_SIDE: u32 = 1 << 20;

/// An identified particle sitting on a grid pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    pub id: u32,
    pub x: i32,
    pub y: i32,
}

/// An ordered set of seeds on an `n x n` grid.
///
/// Ids are dense and ordered (`seeds[i].id == i`), every position lies in
/// `[0, n) x [0, n)`, and the set is never empty. Several seeds may share a
/// pixel; wherever that matters the lowest id owns the pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSet {
    n: u32,
    seeds: Vec<Seed>,
}

impl SeedSet {
    pub fn new(n: u32, seeds: Vec<Seed>) -> Result<Self> {
        check_side(n)?;
        if seeds.is_empty() {
            return Err(Error::EmptySeedSet);
        }
        for (index, seed) in seeds.iter().enumerate() {
            if seed.id as usize != index {
                return Err(Error::NonContiguousId { index, id: seed.id });
            }
            if seed.x < 0 || seed.y < 0 || seed.x >= n as i32 || seed.y >= n as i32 {
                return Err(Error::SeedOutOfBounds {
                    id: seed.id,
                    x: seed.x,
                    y: seed.y,
                    n,
                });
            }
        }
        Ok(Self { n, seeds })
    }

    /// Builds a set from bare positions, assigning ids in input order.
    pub fn from_positions<I>(n: u32, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, i32)>,
    {
        let seeds = positions
            .into_iter()
            .enumerate()
            .map(|(id, (x, y))| Seed {
                id: id as u32,
                x,
                y,
            })
            .collect();
        Self::new(n, seeds)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u32 {
        self.seeds.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sets
    }

    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn position(&self, id: u32) -> (i32, i32) {
        let seed = &self.seeds[id as usize];
        (seed.x, seed.y)
    }

    /// Positions indexed by seed id, the lookup table used by grid kernels.
    pub fn positions(&self) -> Vec<(i32, i32)> {
        self.seeds.iter().map(|s| (s.x, s.y)).collect()
    }
}

pub(crate) fn check_side(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::GridTooSmall { n, min: 1 });
    }
    if n > MAX_GRID_SIDE {
        return Err(Error::GridTooLarge {
            n,
            max: MAX_GRID_SIDE,
        });
    }
    Ok(())
}
