//! The stuck-isotopy move calculus, the unstick move, rigidity barriers and
//! unsticking distance.
//!
//! Classical Reidemeister moves act away from stuck crossings. A strand that
//! is over (or under) both edges of a stuck crossing along a triangle face
//! may slide to the opposite pair of edges. Unstick turns a stuck crossing
//! classical and is never reversed.

mod barrier;
mod distance;
mod moves;

pub use barrier::{barrier_crossings, barrier_lower_bound, detect_barriers, Barrier, BarrierKind};
pub use distance::{
    check_classical_match, replay_certificate, simplify, unstick_upper_bound, unsticking_distance, DistanceReport,
    DISTANCE_CAVEAT,
};
pub use moves::{apply_move, available_moves, fuzz_sequence, Move, MoveKind};

#[cfg(test)]
mod tests;
