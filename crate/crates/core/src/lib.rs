//! Exact arithmetic for fiber-preserving branched coverings of Seifert
//! fibered solid tori.
//!
//! A fibered solid torus is the quotient of D²×ℝ by a screw motion and is
//! classified, relative to a (cross section, fiber) basis of its boundary
//! torus, by a Seifert invariant (α, β) with α ≥ 1 and gcd(α, β) = 1. This
//! crate decides when a degree-k fiber-preserving branched covering exists
//! between two such tori, builds the covering map explicitly on the
//! universal cover, and verifies its defining identities — equivariance,
//! covering degree, fiber degree, branching — by exact rational computation.
//! There is no floating point anywhere: every check is an integer or
//! rational identity that either holds or fails.
//!
//! The layers, bottom up:
//!
//! - [`Rational`], [`AngleMod1`], [`ext_gcd`], [`bezout`]: exact arithmetic
//!   and normalized Bézout pairs.
//! - [`SeifertInvariant`] and the decision arithmetic
//!   ([`ratio_condition`], [`necessity_scale`], [`enumerate_sources`],
//!   [`decide_cover`]): when does a covering exist, and from which sources.
//! - [`CoverSpec`] with [`DeckAction`] and [`UCPoint`]: the explicit map on
//!   D²×ℝ, its descent to the quotient tori, preimages, fiber degree, and
//!   branching data.
//! - [`CoverSpec::verify`] over [`sample_points`]: exact verification
//!   sweeps reporting failures as data.
//!
//! ```
//! use num_bigint::BigInt;
//! use seifert_cover::{decide_cover, sample_points, CoverSpec, SeifertInvariant};
//!
//! let inv1 = SeifertInvariant::new(2, 3)?;
//! let inv2 = SeifertInvariant::new(2, 1)?;
//! let k = BigInt::from(3);
//!
//! assert!(decide_cover(&inv1, &inv2, &k, false).exists);
//!
//! let spec = CoverSpec::build(&inv1, &inv2, &k)?;
//! assert_eq!(spec.branching_data().branch_order, BigInt::from(3));
//! assert!(spec.verify(&sample_points(0, 50, 40)).passed());
//! # Ok::<(), seifert_cover::Error>(())
//! ```

mod covering;
mod error;
mod exact;
mod homology;
pub(crate) mod jsonnum;
mod verify;

pub use covering::{BranchingData, CoverSpec, DeckAction, QuotientPoint, UCPoint};
pub use error::{Error, Result};
pub use exact::{bezout, ext_gcd, reduce_mod1, AngleMod1, BezoutPair, Rational};
pub use homology::{
    boundary_degree, boundary_pushforward, decide_cover, divisors, enumerate_sources,
    necessity_scale, ratio_condition, solve_source_beta, BoundaryMapMatrix, DecisionRecord,
    NecessityWitness, SeifertInvariant, TorusClass,
};
pub use verify::{sample_points, CheckKind, FailureDetail, VerificationReport};
