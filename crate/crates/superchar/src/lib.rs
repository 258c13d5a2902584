//! Supercharacter theories on Z/nZ and the transform algebras they induce.
//!
//! A subgroup Γ of the units of Z/nZ acts on Z/nZ by multiplication.  Its
//! orbits cut Z/nZ into superclasses, each orbit sum σ_i(y) = Σ_{x∈X_i}
//! exp(-2πi·xy/n) is a supercharacter, and the matrix of σ values, scaled by
//! class sizes, is a unitary involution-of-order-four generalizing the DFT.
//! Three classical transforms arise from this one construction:
//!
//! * Γ = {1} yields the discrete Fourier transform, whose algebra is the
//!   circulant matrices ([`circulant`]);
//! * Γ = {±1} yields a discrete cosine transform and a banded algebra with
//!   exact entries in Z + Z√2 ([`dct`]);
//! * the odd-function complement of the Γ = {±1} theory yields a discrete
//!   sine transform whose algebra carries two integer parametrizations
//!   ([`dst`]).
//!
//! Every algebra module exposes exact basis matrices, dense element
//! construction, closed-form eigenvalues, multiplication, diagonalization
//! solves, and membership tests; [`group`] builds the general theory for any
//! unit subgroup, and [`oracle`] re-verifies all structural claims per
//! modulus against independent recomputation.

pub mod circulant;
pub mod dct;
pub mod dst;
pub mod error;
pub mod exact;
pub mod group;
pub mod matrix;
pub mod oracle;
pub mod tolerances;
pub mod transforms;

pub use circulant::CirculantElement;
pub use dct::DctElement;
pub use dst::{DstElementS, DstElementT};
pub use error::{Error, Result};
pub use exact::ExactQuadratic;
pub use group::{OrbitPartition, StructureConstants, SupercharacterTable, UnitSubgroup};
pub use matrix::Matrix;
pub use oracle::{run_suite, CheckResult, SuiteReport};
pub use transforms::{dct_matrix, dft_matrix, dst_matrix, Signal};
