use crate::{Error, Result};

/// Which ring of neighbors a wave explores at jump distance `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    /// All 8 surrounding offsets at range `k`.
    Moore,
    /// The 4 axis-aligned offsets at range `k`.
    VonNeumann,
}

// Fixed ring order: east first, then around the ring. The Von Neumann set is
// the axis-aligned subset in the same relative order. Both sets are symmetric
// under negation, which is what makes gather and scatter waves equivalent.
const MOORE_UNITS: [(i32, i32); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];
const VON_NEUMANN_UNITS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

impl Neighborhood {
    /// Offsets at unit range, in the fixed published order.
    pub fn unit_offsets(self) -> &'static [(i32, i32)] {
        match self {
            Neighborhood::Moore => &MOORE_UNITS,
            Neighborhood::VonNeumann => &VON_NEUMANN_UNITS,
        }
    }

    /// Number of neighbors explored per pixel: 8 for Moore, 4 for Von Neumann.
    pub fn arity(self) -> usize {
        self.unit_offsets().len()
    }
}

/// The neighbor offsets explored at jump distance `k`.
///
/// Rejects `k = 0`; a zero jump would make every pixel its own neighbor.
pub fn neighbor_offsets(nb: Neighborhood, k: u32) -> Result<Vec<(i32, i32)>> {
    if k < 1 {
        return Err(Error::ZeroJump);
    }
    let k = k as i32;
    Ok(nb
        .unit_offsets()
        .iter()
        .map(|&(dx, dy)| (dx * k, dy * k))
        .collect())
}
