//! ℓ²-Betti numbers and algebraic fibring for automorphism groups of
//! right-angled Artin groups, decided combinatorially from the defining graph.
//!
//! Everything is exact: homology ranks use arbitrary-precision elimination and
//! every ℓ²-value is a [`num_rational::BigRational`].

pub mod automorphism;
pub mod catalog;
pub mod conjugations;
pub mod domination;
pub mod error;
pub mod fibring;
pub mod graph;
pub mod homology;
pub mod l2;
pub mod linalg;
pub mod theta;
pub mod words;

pub use automorphism::{automorphism_count, find_isomorphism};
pub use conjugations::{PartialConjugation, SupportGraph, SupportSummary};
pub use domination::{DominationStructure, PropertyReport};
pub use error::{Error, Result};
pub use fibring::{Character, FibreAnswer, FibreVerdict, GroupTarget, QPresentation};
pub use graph::{CombineMode, GraphJson, SimplicialGraph, VertexSet};
pub use homology::{BettiVector, FlagComplex, HomologyMode};
pub use l2::{BettiProfile, L2Status, L2Verdict, QStructure, Reason};
pub use theta::{ThetaResult, ThetaVertex};
pub use words::{AutSpec, RaagAutomorphism, RaagWord};

/// Size caps for the exponential or polynomial-but-large searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for automorphism and isomorphism search.
    pub automorphism_vertices: usize,
    /// Vertex cap for whole-graph analyses.
    pub analysis_vertices: usize,
    /// Simplex cap for flag complexes.
    pub simplices: usize,
    /// Cap on the number of partial conjugations for p-set searches.
    pub conjugations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            automorphism_vertices: 16,
            analysis_vertices: 24,
            simplices: 2_000_000,
            conjugations: 20,
        }
    }
}

impl Limits {
    pub fn check_vertices(&self, g: &SimplicialGraph) -> Result<()> {
        if g.vertex_count() > self.analysis_vertices {
            return Err(Error::CapExceeded {
                what: "analysis vertices",
                limit: self.analysis_vertices,
                actual: g.vertex_count(),
            });
        }
        Ok(())
    }
}
