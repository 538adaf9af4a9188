//! Curve neighborhoods of Schubert varieties in flag manifolds `G/P`.
//!
//! The neighborhood `Γ_d(X(w))` of the Schubert variety `X(w)` is the Schubert
//! variety `X(w · z_d^P)`, where `·` is the Hecke product on the Weyl group and
//! `z_d^P` is built from a greedy decomposition of the degree `d` into
//! maximal roots. The crate computes `z_d^P`, the cosmall roots that govern it,
//! two-point Gromov-Witten invariants and the equivariant quantum Chevalley
//! formula, and checks neighborhoods against a brute-force moment-graph search.
//!
//! ```
//! use curvenbhd::{curve_neighborhood, Degree, Parabolic};
//!
//! // Gr(2,4): lines through a point sweep out the codimension-one Schubert
//! // divisor, conics fill the whole space.
//! let p = Parabolic::from_labels("A3", "1,3").unwrap();
//! let e = p.group().identity();
//! let line = curve_neighborhood(&p, &e, &Degree::new(&p, vec![1]).unwrap()).unwrap();
//! assert_eq!(p.coset_length(line.min_rep()), 3);
//! ```

pub mod degree;
pub mod error;
pub mod gwchev;
pub mod hecke;
pub mod nbhd;
pub mod rootsys;
pub mod weyl;

pub use degree::{
    c1_pairing, cosmall_criteria, cosmall_roots, greedy, is_cosmall, is_small, maximal_roots,
    z_coset, z_of_degree, CosmallCriteria, Degree, GreedyDecomposition, ZElement,
};
pub use error::{Error, Result};
pub use gwchev::{
    divisor_three_point, gw_two_point, ktheory_two_point, pushforward_class, quantum_chevalley,
    ChevalleyResult,
};
pub use hecke::{hecke_mul, hecke_mul_coset, is_reduced_product};
pub use nbhd::{curve_neighborhood, neighborhood_oracle, MomentGraph, DEFAULT_ORACLE_CAP};
pub use rootsys::{CartanDatum, CartanType, Family, Root, RootSystem};
pub use weyl::{Coset, Parabolic, WeylElt, WeylGroup, DEFAULT_COSET_CAP};
