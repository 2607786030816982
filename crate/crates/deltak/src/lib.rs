//! Exact computations in the mod-2 homology of smash powers of `RP^∞`,
//! viewed as a right module over the Steenrod algebra.
//!
//! The ambient object is the free associative `F₂`-algebra on generators
//! `γ₁, γ₂, …`, one in each positive degree; a word `[i₁, …, i_s]` has
//! length `s` and degree `i₁ + ⋯ + i_s`, and the words of a fixed bidegree
//! `(s, d)` form the canonical monomial basis there. The Steenrod squares
//! act on the right through the Cartan formula, lowering degree and
//! preserving length. On top of this action the crate computes, bidegree
//! by bidegree:
//!
//! * the subalgebras `Δ(k)` of elements annihilated by `Sq¹, Sq², Sq⁴, …,
//!   Sq^{2^k}` ([`annihilated`]),
//! * the fully annihilated elements, i.e. those killed by every positive
//!   square ([`annihilated::full_annihilated_basis`]),
//! * the `σ`-generators of `Δ(0) = ker Sq¹` together with the dimension
//!   tables they predict ([`delta0`]),
//! * degree-bounded certificates that `Δ(k)` is a free associative algebra,
//!   obtained by extracting minimal generators and comparing actual graded
//!   dimensions with the word count of the free algebra on those generators
//!   ([`freeness`]).
//!
//! All linear algebra is exact over the two-element field, with bit-packed
//! dense matrices ([`gf2`]). Everything is deterministic: monomials are
//! ordered lexicographically, subspaces are kept in reduced echelon form,
//! and equal subspaces have equal representations.

pub mod algebra;
pub mod annihilated;
pub mod combinatorics;
pub mod delta0;
pub mod freeness;
pub mod gf2;
pub mod steenrod;
pub mod subspace;
pub mod suites;
pub mod text;

pub use algebra::{monomial_basis, resolve_relation, Bidegree, Dependence, Element, Monomial};
pub use annihilated::{full_annihilated_basis, image_sq1_basis, BasisCache};
pub use delta0::HilbertTable;
pub use freeness::{certify_free, FreenessReport};
pub use gf2::MatrixGf2;
pub use steenrod::{sq, sq_generator, sq_matrix};
pub use subspace::SubspaceBasis;
pub use text::parse_element;

/// Errors surfaced by the crate. Contract violations that cannot arise from
/// well-formed external input (zero matrix shape mismatches, invalid
/// generator indices) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("element is not homogeneous in bidegree {expected}")]
    NotHomogeneous { expected: Bidegree },
    #[error("empty input")]
    EmptyInput,
    #[error("right factor at index {index} is zero")]
    ZeroRightFactor { index: usize },
    #[error("right factor at index {index} is not homogeneous")]
    InhomogeneousFactor { index: usize },
    #[error("the pairs do not sum to zero")]
    NonzeroRelationSum,
    #[error("arithmetic overflow in a dimension count")]
    Overflow,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
