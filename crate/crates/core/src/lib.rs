//! Exact classification of weighted blowups of affine space.
//!
//! The weighted blowup of `A^d` with primitive weights `n` has
//! eps-log terminal (resp. eps-log canonical) singularities exactly when the
//! simplex `p + eps (Delta - p)`, with `p = n / (sum(n) - 1)`, is empty
//! (resp. hollow) with respect to the lattice `Z^d + Z p`. This crate
//! decides that with exact arithmetic and builds censuses, quintuple family
//! scans, facet width bounds and sporadic-simplex histograms on top of it.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod exactgeom;
pub mod families;
pub mod projections;
pub mod rat;
pub mod search;
pub mod sporadic;

pub use classifier::{classify, is_canonical_fast, is_terminal_fast, kawakita_form, SingularityClass};
pub use error::{Error, Result};
pub use exactgeom::{
    brute_force_lattice_points, classify_point, frac_point, lattice_points_in_shrunk_simplex,
    GeneratingPoint, LatticeWitness, MembershipClass, Mode, OraclePoint, ShrunkSimplex,
    WeightVector,
};
pub use rat::Rat;
pub use search::{enumerate_blowups, run_census, CensusOptions, CensusQuery, CensusReport, Histogram, Verdict};
