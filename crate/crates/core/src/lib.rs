//! Exact algebra of quantized free algebras at roots of unity.
//!
//! The crate computes with the free algebra 𝔉 on generators θ_i twisted by a
//! symmetric Cartan form, its contravariant form S, Verma modules V(Λ) with
//! their forms S_Λ and coactions, radical quotients 𝔣 and L(Λ), bar
//! complexes and their homology, and the averaging maps attached to an
//! unfolding of a multidegree. Everything is exact: scalars live in ℚ(ζ_l)
//! or in ℚ[q, q⁻¹].
//!
//! Most quantities are computed by two unrelated algorithms (a permutation
//! sum and a recursion), and the test suite checks that they agree.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cartan;
pub mod check;
pub mod combination;
pub mod free;
pub mod hochschild;
pub mod linalg;
pub mod quotient;
pub mod scalar;
pub mod symmetrize;
pub mod tensor;
pub mod verma;
pub mod word;

pub use cartan::{CartanDatum, MultiDegree, Weight};
pub use combination::Combination;
pub use free::{DualElement, FreeAlgebra, FreeElement, TensorElement};
pub use linalg::Matrix;
pub use scalar::{
    CyclotomicField, CyclotomicNumber, LaurentRing, LaurentScalar, RootOfUnitySpec, ScalarRing,
};
pub use verma::{VermaElement, VermaModule};
pub use word::Word;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("shape mismatch")]
    ShapeMismatch,
    #[error("permutation sum over {depth} letters exceeds the limit of {limit}")]
    PermutationEnumerationTooLarge { depth: usize, limit: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation needs a field")]
    NotAField,
    #[error("input is not homogeneous")]
    NonHomogeneousInput,
    #[error("not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not contained in 1..={n}")]
    InvalidSubset { n: usize },
    #[error("degree {requested} lies outside the computed window of depth {window}")]
    WindowExceeded { requested: usize, window: usize },
    #[error("matrix of dimension {dim} exceeds the limit of {limit}")]
    MatrixTooLarge { dim: usize, limit: usize },
    #[error("element does not have the required degree")]
    DegreeMismatch,
    #[error("ordering is not a refinement of the map")]
    NotARefinement,
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(&'static str),
    #[error("unknown Cartan preset")]
    UnknownPreset,
    #[error("generator {0} out of range")]
    InvalidGenerator(usize),
    #[error("invalid symmetrizer value {0}")]
    InvalidSymmetrizer(i64),
    #[error("Verma modules are not modules over the quotient algebra")]
    NotAQuotientModule,
    #[error("invalid root of unity of order {l}: {reason}")]
    InvalidRootOfUnity { l: u32, reason: &'static str },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
