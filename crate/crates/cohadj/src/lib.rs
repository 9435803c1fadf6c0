//! Exact combinatorics of the free homotopy coherent adjunction.
//!
//! The crate implements the squiggle calculus for the two-object simplicial
//! category freely generated by an adjunction: validation, composition and
//! the simplicial action; its computad structure (atomic decompositions,
//! normal forms, generated subcomputads, Segal splicing); the fillable
//! filtration with its pushout cell certificates; the ordinal-sum
//! presentation and the translation between the two; and a finite-category
//! monad laboratory (weights, collages, cofibrancy certificates,
//! Eilenberg–Moore comparison, split coequalisers).
//!
//! Everything is exact and finite: enumerative claims always carry the
//! dimension and width bounds they were certified at.
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! blocks are compiled as doc-tests through the [`guide`] module.

pub mod bridge;
pub mod computad;
pub mod fillable;
pub mod guide;
pub mod hammock;
pub mod monad;
pub mod ops;
pub mod squiggle;
pub mod text;

pub use hammock::{hammock_grid, HammockGrid};
pub use ops::{act, crossing_count, face, reduce, vertex, SimplicialOperator};
pub use squiggle::{Letter, Sign, Squiggle, UndulatingWord};
pub use text::{parse, render};

/// The named low-dimensional arrows: `f`, `u`, the unit and counit, the
/// triangle-identity witnesses, and the multiplication cell they share.
pub mod names {
    use crate::squiggle::Squiggle;
    use crate::text::parse;

    fn sq(text: &str) -> Squiggle {
        parse(text).expect("named arrow literal")
    }

    pub fn f() -> Squiggle {
        sq("0:(-,+)")
    }

    pub fn u() -> Squiggle {
        sq("0:(+,-)")
    }

    pub fn eta() -> Squiggle {
        sq("1:(+,1,+)")
    }

    pub fn eps() -> Squiggle {
        sq("1:(-,1,-)")
    }

    pub fn alpha() -> Squiggle {
        sq("2:(+,1,2,-)")
    }

    pub fn beta() -> Squiggle {
        sq("2:(-,2,1,+)")
    }

    pub fn omega() -> Squiggle {
        sq("3:(-,3,1,2,-)")
    }

    pub fn tau() -> Squiggle {
        sq("3:(-,2,1,3,-)")
    }

    pub fn mu() -> Squiggle {
        sq("2:(-,2,1,2,-)")
    }

    /// Looks a literal up by name, the spellings the command line accepts.
    pub fn by_name(name: &str) -> Option<Squiggle> {
        Some(match name {
            "f" => f(),
            "u" => u(),
            "eta" => eta(),
            "eps" | "epsilon" => eps(),
            "alpha" => alpha(),
            "beta" => beta(),
            "omega" => omega(),
            "tau" => tau(),
            "mu" => mu(),
            _ => return None,
        })
    }
}
