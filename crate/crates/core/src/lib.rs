//! Exact symbolic computation of N=2 Jack superpolynomials.
//!
//! The crate builds the N=2 Jack superpolynomials `P_Λ` from the
//! non-symmetric Jack polynomials `E_η` by symmetrization over variable
//! triplets `(z_i, φ_i, θ_i)`, characterizes them as joint eigenfunctions
//! of the supersymmetric Calogero-Sutherland conserved charges, and
//! machine-checks their orthogonality, norm and evaluation formulas with
//! exact arithmetic over the field ℚ(α).
//!
//! Module layout:
//! - [`exact`]: big rationals, polynomials in α, rational functions in α
//! - [`spart`]: superpartition combinatorics (sectors, diagrams, dominance)
//! - [`ring`]: the sparse superpolynomial ring in N triplets
//! - [`nsjack`]: Dunkl operators and non-symmetric Jack polynomials
//! - [`sjack`]: monomial / quasi-power-sum bases and the Jack superpolynomials
//! - [`charges`]: Sekiguchi operators, conserved charges, eigenvalues
//! - [`inner`]: combinatorial and analytic scalar products, norm/evaluation sweeps
//! - [`cli`]: command line front end and the on-disk cache
//!
//! All values are immutable after construction; every operation is a pure
//! function, so sector sweeps can be distributed across threads freely.

pub mod charges;
pub mod cli;
pub mod exact;
pub mod inner;
pub mod nsjack;
pub mod ring;
pub mod sjack;
pub mod spart;

pub use exact::{AlphaPoly, AlphaRat, Rat};
