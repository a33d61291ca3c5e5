//! Graph-invariants engine built around the Lovász ϑ-function.
//!
//! The crate is organized as follows:
//!
//! - [`graph`]: immutable bitset graphs, family constructors, operators
//!   (complement, strong product, joins, line graph, Mycielskian, Seidel
//!   switching), graph6 / edge-list codecs, and isomorphism testing.
//! - [`linalg`]: dense symmetric linear algebra, generic over the scalar
//!   type (tridiagonalization + implicit-shift QL eigensolver, Cholesky).
//! - [`spectral`]: float spectra of the four graph matrices, exact
//!   big-integer characteristic polynomials, cospectrality decisions, and
//!   enumeration of cospectral nonisomorphic pairs.
//! - [`conic`]: an operator-splitting solver for conic programs over
//!   zero × nonnegative × PSD product cones.
//! - [`srg`]: exact closed forms for strongly regular graph parameters.
//! - [`theta`]: ϑ, ϑ′, vector and strict vector chromatic numbers, and the
//!   spectral sandwich bounds for regular graphs.
//! - [`invariants`]: exact α/ω/χ/χ_f searches, Shannon-capacity bounding,
//!   permanents, max-cut, and the closed-form bound library.

pub mod conic;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod spectral;
pub mod srg;
pub mod theta;

/// Default scalar for all floating-point computations in the toolkit.
///
/// The numeric kernel ([`linalg`], [`conic`]) is generic over
/// [`linalg::Real`]; everything downstream instantiates it at this alias.
pub type Scalar = f64;

/// Dense matrix over the default scalar.
pub type Matrix = linalg::Mat<Scalar>;

/// Conic solution over the default scalar.
pub type Solution = conic::ConicSolution<Scalar>;

pub use graph::Graph;
