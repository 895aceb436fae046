//! Minimal projective resolutions, syzygies, `Tor` and `Ext`.

mod derived;
mod resolution;

pub use derived::{ext, ext_from_resolution, tor, tor_from_resolution, tor_resolving_left, GradedDims};
pub use resolution::{
    minimal_resolution, projective_cover, projective_dimension, syzygy, ProjDim, Resolution, MAX_TERM_DIM,
};

/// Default number of resolution steps before giving up.
pub const DEFAULT_CUTOFF: usize = 32;
