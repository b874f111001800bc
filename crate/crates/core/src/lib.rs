//! Three-dimensional Lie algebras carrying a left-invariant almost paracontact
//! almost paracomplex Riemannian structure.
//!
//! * [`lie`] builds the class algebras and their matrix representation `A = aM₀ + bM₁ + cM₂`.
//! * [`expengine`] evaluates `e^A = E + tA + uA²` with full branch handling.
//! * [`levicivita`] runs the reverse direction: structure constants → Levi-Civita
//!   connection → fundamental tensor `F` → basic class.
//! * [`mat3`] carries the 3×3 kernel and an independent series exponential.
//!
//! All numeric code is generic over [`Real`] (`f32`, `f64`); the `*F64` and `*F32`
//! aliases below name the common instantiations.

pub mod cli;
pub mod error;
pub mod expengine;
pub mod grid;
pub mod levicivita;
pub mod lie;
pub mod mat3;
pub mod scalar;
pub mod structure;
pub mod tensor;

pub use error::{Error, Result};
pub use expengine::{closed_form, para_sasakian_group, verify_closed_form, Branch, ExpResult};
pub use levicivita::{classify_manifold, connection_coeffs, f_tensor, is_para_sasakian, ConnectionCoeffs};
pub use lie::{adjoint_rep, bracket, class_algebra, jacobi_defect, para_sasakian_algebra, StructureConstants};
pub use mat3::{annihilator, expm_oracle, Annihilator, Mat3, Vec3};
pub use scalar::Real;
pub use structure::{
    check_structure, class_pattern, lee_forms, match_class, standard_structure, ClassId, ClassParams, ClassReport,
    FTensor, LeeForms, PhiBasisStructure,
};
pub use tensor::Tensor3;

pub type Mat3F64 = Mat3<f64>;
pub type Mat3F32 = Mat3<f32>;
pub type Vec3F64 = Vec3<f64>;
pub type Vec3F32 = Vec3<f32>;
pub type StructureConstantsF64 = StructureConstants<f64>;
pub type StructureConstantsF32 = StructureConstants<f32>;
pub type FTensorF64 = FTensor<f64>;
pub type ClassParamsF64 = ClassParams<f64>;
pub type ClassReportF64 = ClassReport<f64>;
pub type ExpResultF64 = ExpResult<f64>;
pub type ExpResultF32 = ExpResult<f32>;
