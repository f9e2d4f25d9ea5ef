//! Exact fixed-point calculator for equivariant unoriented cobordism.
//!
//! For a group `G = (Z2)^q` acting on a closed manifold with finitely many
//! stationary points, the cobordism class `[M, G]` is determined by the
//! isotropy representations at those points, and vanishes exactly when the
//! Stong invariant `η(M) = Σ_x [T_x M] ∈ R_*(G)` does. This crate models
//! spaces through that data alone and decides vanishing by exact
//! computation over `Z2`.
//!
//! ```
//! use stong_core::{ast::SpaceAst, cobordism::eta};
//!
//! let rp2 = SpaceAst::from_json(r#"{"kind":"proj","s":3,"chars":[[1],[2],[3]]}"#)
//!     .unwrap()
//!     .build()
//!     .unwrap();
//! assert_eq!(eta(rp2.model()).len(), 3);
//! ```

pub mod ast;
pub mod character;
pub mod cobordism;
pub mod error;
pub mod oracle;
pub mod rep_ring;
pub mod spaces;
pub mod suites;

pub use character::{Character, GroupElement, GroupRank, Sign};
pub use cobordism::{eta, is_null_cobordant, pairing_witness, PairingWitness};
pub use error::{Error, Result};
pub use rep_ring::{Monomial, RepRingElement};
pub use spaces::{ConjugationModel, FixedPoint, FixedPointModel, FlagSpec, OrderedPartition, ProjSpec};
