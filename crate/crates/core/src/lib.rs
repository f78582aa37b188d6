//! Certifying Hamiltonicity engine for 2-tough 2K₂-free graphs.
//!
//! [`engine::run_engine`] starts from any 2-factor and merges cycles until one
//! remains. When no merge is available it returns a checkable witness that the
//! graph is not 2-tough instead. The [`oracles`] module holds exact
//! small-graph procedures used to check every answer.

mod bits;
pub mod certificate;
pub mod engine;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod oracles;
pub mod properties;
pub mod rational;
pub mod two_factor;

pub use certificate::{verify_certificate, Certificate, VerifyError};
pub use graph::{Graph, GraphError, OrientedCycle, OrientedPath, VertexSet};
pub use limits::SizeLimits;
pub use rational::Rational;
pub use two_factor::TwoFactor;
