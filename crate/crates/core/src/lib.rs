//! Exact combinatorics of the higher cluster categories of type `A_n` realized
//! on a cyclic vertex set.
//!
//! Objects are `(d+1)`-subsets of an `(n + 2d + 1)`-element cycle with no two
//! neighbouring vertices. On top of that model this crate computes Hom
//! dimensions, cluster tilting objects and their mutations, indices in split
//! Grothendieck groups, g- and c-vectors, the tropical duality isomorphisms,
//! and sign-coherence classifications. The [`verify`] module packages the
//! structural identities (duality, summand counts, sign coherence, exchange
//! formulas) as machine-checkable suites with JSON reports.
//!
//! Everything is exact integer arithmetic; overflow aborts instead of
//! wrapping.

pub mod cyclic_model;
pub mod k0;
pub mod matrix;
pub mod tilting;
pub mod verify;

pub use cyclic_model::{
    enumerate_indecs, factors_through, hom_dim, intertwines, quotient_hom_dim, shift, HomDim,
    Indec, Intertwining, ModelError, ModelParams,
};
pub use k0::{
    c_matrix, c_vector, duality_backward, duality_forward, g_matrix, g_vector, index_linear,
    index_of, sign_coherence, staircase, CVector, K0Error, K0Vector, SignCoherence,
    StaircaseAngle,
};
pub use tilting::{
    enumerate_tiltings, exchange_report, find_mutations, summand_count, validate_tilting,
    vertex_tilting, ClusterTilting, ExchangeAngle, ExchangeReport, TiltingError,
};
pub use verify::{SuiteReport, DEFAULT_GRID};
