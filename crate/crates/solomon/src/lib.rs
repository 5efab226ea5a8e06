//! Exact combinatorics of Solomon's descent algebras of types A and B.
//!
//! The crate computes, over the integers and without any floating point:
//!
//! * structure constants of the descent algebra of the symmetric group `S_n`
//!   and of the hyperoctahedral group `B_n` ([`descent_a`], [`descent_b`]),
//! * descent statistics of standard Young tableaux and standard domino
//!   tableaux ([`tableau`], [`domino`]),
//! * irreducible characters of `S_n` and `B_n` and the Kronecker coefficients
//!   built from them ([`character`]),
//! * quasisymmetric and symmetric polynomials on finite alphabets, including
//!   Chow's type B quasisymmetric functions and domino functions ([`poly`]),
//! * machine-checkable verifications tying all of the above together
//!   ([`verify`]).
//!
//! Conventions used throughout:
//!
//! * Compositions of `n` correspond to descent sets: a composition
//!   `(c_1, ..., c_k)` maps to the set of partial sums `{c_1, c_1+c_2, ...}`
//!   with the total `n` omitted.
//! * Type A descent sets are subsets of `{1, ..., n-1}`; type B descent sets
//!   are subsets of `{0, 1, ..., n-1}` where `0` records a sign change in the
//!   first window position.
//! * Partitions enumerate in reverse lexicographic order, subsets in binary
//!   counter order on their bitmask; all exported tables follow these orders,
//!   so identical inputs always serialize identically.
//! * All counts are exact `i64` values; every build profile enables overflow
//!   checks, so an out-of-range computation aborts instead of wrapping.

pub mod character;
pub mod descent_a;
pub mod descent_b;
pub mod domino;
pub mod export;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod tableau;
pub mod verify;

pub use character::{
    centralizer_order, centralizer_order_b, chi, class_size, class_size_b, psi, CharTableA,
    CharTableB, KroneckerA, KroneckerB,
};
pub use domino::{
    semistandard_domino_tableaux, standard_domino_tableaux, DescentCountsB, Domino, DominoTableau,
    QuotientPair,
};
pub use descent_a::{
    matrix_count, matrix_count_3d, reading_word_matrix_count, DescentTableA, TripleTableA,
};
pub use descent_b::{DescentTableB, TripleTableB};
pub use export::{render_table, RenderedTable, TableKind};
pub use partition::{BiPartition, Composition, IndexSubset, Partition, SubsetKind};
pub use poly::{Alphabet, AlphabetKind, Monomial, Poly, VarSpace};
pub use perm::{Permutation, SignedPermutation};
pub use tableau::{SemistandardTableau, StandardTableau};
pub use verify::{
    identities, run_identity, run_many, Counterexample, IdentitySpec, VerificationReport,
};

/// Error type for the fallible operations of the crate.
///
/// Construction of the basic combinatorial objects panics on malformed input
/// (those are programmer errors); this type covers the data-dependent failure
/// paths a caller may legitimately hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A composition with a zero part was passed where a strict composition
    /// is required.
    ZeroPart,
    /// The partition does not have an empty 2-core, so it admits no domino
    /// tiling and no 2-quotient.
    NonEmptyTwoCore(Partition),
    /// Product alphabets require both factors to have the same kind.
    AlphabetKindMismatch,
    /// The alphabet kind does not support the requested operation.
    WrongAlphabetKind,
    /// A polynomial could not be expanded in the requested basis; the string
    /// shows the first monomial of the nonzero residual.
    NotInSpan(String),
    /// An identity id unknown to the verifier registry.
    UnknownIdentity(String),
    /// A parameter outside the documented desk-scale range.
    OutOfRange { what: String, max: usize, got: usize },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::ZeroPart => write!(f, "composition has a zero part"),
            Error::NonEmptyTwoCore(p) => write!(f, "partition {p} has a nonempty 2-core"),
            Error::AlphabetKindMismatch => write!(f, "product of alphabets of different kinds"),
            Error::WrongAlphabetKind => write!(f, "operation not defined for this alphabet kind"),
            Error::NotInSpan(m) => write!(f, "polynomial is not in the span, residual starts at {m}"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity id {id:?}"),
            Error::OutOfRange { what, max, got } => {
                write!(f, "{what} supports at most {max}, got {got}")
            }
        }
    }
}

impl std::error::Error for Error {}
