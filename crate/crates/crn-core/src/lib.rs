//! Exact and numerical concentration-robustness analysis for mass-action
//! chemical reaction networks.
//!
//! The library is organized bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over arbitrary-precision
//!   rationals, with pluggable monomial orders.
//! * [`gb`]: Buchberger's algorithm, normal forms, reduced Groebner bases.
//! * [`ideal`]: colon ideals, saturation, elimination.
//! * [`unipoly`]: dense univariate helpers (gcd, squarefree part, rational
//!   roots).
//! * [`realroots`]: Sturm sequences, positive-root counting and isolation.
//! * [`network`]: the `.crn` reaction-network format, mass-action ODEs,
//!   stoichiometry and conservation laws.
//! * [`acr`]: exact decision procedures for absolute concentration
//!   robustness (candidate generation, verification, sufficient conditions,
//!   complex-torus robustness, the full analysis pipeline).
//! * [`numeric`]: homotopy continuation (total-degree solving, witness
//!   points, numerical robustness detection, real-point sampling and the
//!   robustness preclusion test).

pub mod acr;
pub mod error;
pub mod gb;
pub mod ideal;
pub mod network;
pub mod numeric;
pub mod poly;
pub mod realroots;
pub mod unipoly;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
