//! Finite-category monad laboratory: categories with explicit tables,
//! monads and adjunctions with checked laws, the weights of the formal
//! theory with their cofibrancy certificates, weighted-cone solving, and
//! the classical Eilenberg–Moore comparison.

pub mod cones;
pub mod em;
pub mod fincat;
pub mod laws;
pub mod weights;

pub use cones::{algebra_of_cone, compare_em, cone_solver, CompareEmReport, Cone, ConeSet};
pub use em::{canonical_resolution, conservativity_check, eilenberg_moore, EmAdjunction};
pub use fincat::{FinCategory, FinFunctor, FinNatTrans};
pub use laws::{monad_resolution, FinAdjunction, FinMonad, LawReport};
pub use weights::{
    build_weight, custom_weight, relative_computad_check, Collage, CofibrancyCertificate,
    Inclusion, WeightKind, WeightPresentation,
};
