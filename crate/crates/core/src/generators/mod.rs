//! Reproducible graph families for the suites and the search harness.

mod enumerate;
mod families;
mod rng;

pub use enumerate::{isomorphism_classes, EdgeSetSweep};
pub use families::{
    chvatal_family, chvatal_family_with, chvatal_unchecked, perturb, random_2k2_free, random_gnp,
    random_split_graph, GenError, GenSpec,
};
pub use rng::GenRng;
