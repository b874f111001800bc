//! Levi-Civita connection of the left-invariant metric that makes `(E₀, E₁, E₂)`
//! orthonormal, and the classification of the resulting manifold.
//!
//! For left-invariant fields the metric coefficients are constant, so the Koszul
//! formula reduces to
//!
//! ```text
//! 2 g(∇_X Y, Z) = g([X,Y], Z) − g([X,Z], Y) − g([Y,Z], X)
//! ```
//!
//! and on an orthonormal frame `Γ_ijk = ½ (C_ij^k − C_ik^j − C_jk^i)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{jacobi_defect, StructureConstants};
use crate::mat3::Mat3;
use crate::scalar::Real;
use crate::structure::{
    check_structure, match_class, standard_structure, ClassId, ClassReport, FTensor, PhiBasisStructure,
};
use crate::tensor::{triples, Tensor3};

/// Largest Jacobi defect accepted as a Lie algebra.
pub const JACOBI_TOL: f64 = 1e-12;
/// Largest structure-identity residual accepted by [`f_tensor`].
pub const STRUCTURE_TOL: f64 = 1e-14;
/// Default classification tolerance.
pub const CLASSIFY_TOL: f64 = 1e-12;
/// Allowed deviation of θ(ξ) from −2 in the para-Sasakian test.
pub const PARA_SASAKIAN_TOL: f64 = 1e-9;

/// `Γ[i][j][k] = g(∇_{e_i} e_j, e_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConnectionCoeffs<T> {
    #[serde(rename = "Gamma")]
    pub gamma: Tensor3<T>,
}

impl<T: Real> ConnectionCoeffs<T> {
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.gamma[(i, j, k)]
    }

    /// `max |Γ_ijk + Γ_ikj|`; zero for a metric connection.
    pub fn metric_defect(&self) -> T {
        triples().fold(T::zero(), |m, (i, j, k)| m.max((self.get(i, j, k) + self.get(i, k, j)).abs()))
    }

    /// `max |Γ_ijk − Γ_jik − C_ij^k|`; zero for a torsion-free connection.
    pub fn torsion_defect(&self, c: &StructureConstants<T>) -> T {
        triples().fold(T::zero(), |m, (i, j, k)| m.max((self.get(i, j, k) - self.get(j, i, k) - c.get(i, j, k)).abs()))
    }
}

fn require_lie<T: Real>(c: &StructureConstants<T>) -> Result<()> {
    let defect = jacobi_defect(c);
    if defect > T::lit(JACOBI_TOL) {
        return Err(Error::Jacobi { defect: defect.to_f64().unwrap_or(f64::NAN), limit: JACOBI_TOL });
    }
    Ok(())
}

pub fn connection_coeffs<T: Real>(c: &StructureConstants<T>) -> Result<ConnectionCoeffs<T>> {
    require_lie(c)?;
    let half = T::half();
    let gamma = Tensor3::from_fn(|i, j, k| half * (c.get(i, j, k) - c.get(i, k, j) - c.get(j, k, i)));
    Ok(ConnectionCoeffs { gamma })
}

/// `F_ijk = g(∇_{e_i}(φe_j) − φ(∇_{e_i} e_j), e_k)` on an orthonormal φ-basis.
pub fn f_tensor<T: Real>(c: &StructureConstants<T>, s: &PhiBasisStructure<T>) -> Result<FTensor<T>> {
    let check = check_structure(s, T::lit(STRUCTURE_TOL));
    if let Some(worst) = check.worst().filter(|_| !check.passes()) {
        return Err(Error::Structure { name: worst.name, residual: worst.residual.to_f64().unwrap_or(f64::NAN) });
    }
    if s.g.dist(&Mat3::identity()) > T::lit(STRUCTURE_TOL) {
        return Err(Error::NonOrthonormalMetric);
    }
    let nabla = connection_coeffs(c)?;
    let phi = &s.phi;
    Ok(FTensor::from_fn(|i, j, k| {
        (0..3).fold(T::zero(), |acc, m| acc + phi[(m, j)] * nabla.get(i, m, k) - nabla.get(i, j, m) * phi[(k, m)])
    }))
}

/// Classifies the left-invariant manifold with the standard φ-basis structure.
pub fn classify_manifold<T: Real>(c: &StructureConstants<T>) -> Result<ClassReport<T>> {
    classify_manifold_with(c, &standard_structure(), T::lit(CLASSIFY_TOL))
}

pub fn classify_manifold_with<T: Real>(
    c: &StructureConstants<T>,
    s: &PhiBasisStructure<T>,
    tol: T,
) -> Result<ClassReport<T>> {
    if !(tol > T::zero()) {
        return Err(Error::BadTolerance(tol.to_f64().unwrap_or(f64::NAN)));
    }
    let f = f_tensor(c, s)?;
    Ok(match_class(&f, tol))
}

/// Para-Sasakian means pure F4 with `θ(ξ) = −2` (dimension 3), i.e. α = −1.
pub fn is_para_sasakian<T: Real>(report: &ClassReport<T>) -> bool {
    report.is_pure_class(ClassId::F4) && (report.lee.theta[0] + T::two()).abs() <= T::lit(PARA_SASAKIAN_TOL)
}
