//! Exact computations with the exceptional Lie algebra G₂.
//!
//! The crate builds G₂ several ways (a 7×7 matrix model, derivations of the
//! split and division octonions, stabilizers of generic 3-forms, the compact
//! model su(3)⊕ℂ³ and the stabilizer of a spinor) and checks that they agree.
//! Everything runs over ℚ or ℚ(i), apart from orbit witnesses which need one
//! cube root and a few square roots and use [`numerics::BigFloat`].

pub mod numerics;
pub mod rootsys;
pub mod derivsolver;
pub mod octonion;
pub mod threeform;
pub mod g2model;
pub mod homogeneous;
pub mod spinor;
pub mod compactmodel;
pub mod sample;
pub mod cli;
