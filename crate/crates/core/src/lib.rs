//! Construction and structural analysis of perfect binary codes.
//!
//! The crate builds Hamming codes and their Vasiliev extensions, extracts
//! the Steiner triple systems sitting in code neighborhoods, and decides
//! the structural properties that separate the classes of codes close to
//! linear: homogeneity (every neighborhood system isomorphic to the one at
//! zero) and transitivity (every codeword reachable by an automorphism).
//! The rotation-group criterion reduces transitivity to an equation search
//! over Sym(base) × F^n, and a recursive λ lift carries both properties to
//! every admissible longer length.

pub mod code;
pub mod groups;
pub mod io;
pub mod perm;
pub mod report;
pub mod sts;
pub mod suite;
pub mod vasiliev;
pub mod word;

pub use code::{
    coset_representatives, hamming, hamming7_paper, is_perfect, kernel, kernel_brute, rank, span,
    stats, Code, CodeStats, Gf2Basis,
};
pub use groups::{
    is_automorphism, is_homogeneous, is_translator, is_transitive, order_identity_check,
    rot_z_brute, rot_z_criterion, sts_automorphisms, sym_group, transitivity_reduction,
    Automorphism, GroupDescription,
};
pub use perm::{duplicator, tau, Permutation};
pub use sts::{
    am_doubling, apply_perm, are_isomorphic, automorphisms, invariants, neighborhood_sts,
    theta_from_lambda, SteinerTripleSystem, ThetaFn, Triple,
};
pub use vasiliev::{
    find_equivalence, full_parity_component, i_component, is_linear_lambda, is_piercing,
    lambda_balance, lambda_lift, lambda_named, named_code, vasiliev_construct, Component,
    LambdaFn,
};
pub use word::Word;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("duplicate word")]
    DuplicateWord,
    #[error("code does not contain the zero word")]
    MissingZeroWord,
    #[error("length {0} is not admissible (need 2^k - 1)")]
    NotAdmissibleLength(usize),
    #[error("not linear: {0}")]
    NotLinear(&'static str),
    #[error("subcode is not contained in the code")]
    SubcodeNotContained,
    #[error("bad word string: {0}")]
    BadWordString(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("λ domain error: {0}")]
    LambdaDomain(String),
    #[error("λ(0) must be 0")]
    LambdaZero,
    #[error("unknown named object {0:?}")]
    UnknownName(String),
    #[error("not a codeword: {0}")]
    NotACodeword(String),
    #[error("invalid Steiner triple system: {0}")]
    InvalidSts(String),
    #[error("coordinate {0} out of range 1..={1}")]
    CoordinateOutOfRange(usize, usize),
    #[error("component is not contained in λ's base code")]
    ComponentNotInBase,
    #[error("malformed tower: {0}")]
    MalformedTower(String),
    #[error("group too large to enumerate (over {0} elements); use sampling mode")]
    GroupTooLarge(u64),
    #[error("unsupported backing: {0}")]
    UnsupportedBacking(String),
    #[error("λ is linear: {0}")]
    LinearLambda(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
