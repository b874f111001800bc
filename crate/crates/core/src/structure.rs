//! The almost paracontact almost paracomplex Riemannian structure on a φ-basis,
//! the fundamental tensor `F(x, y, z) = g((∇ₓφ)y, z)`, its Lee forms, and the
//! seven basic-class patterns that survive in dimension 3.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::mat3::{Mat3, Vec3};
use crate::scalar::Real;
use crate::tensor::Tensor3;

/// Basic classes of 3-dimensional almost paracontact almost paracomplex
/// Riemannian manifolds. `F0` is the integrable class `F = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    F0,
    F1,
    F4,
    F5,
    F8,
    F9,
    F10,
    F11,
}

impl ClassId {
    /// The seven non-trivial classes, in ascending order.
    pub const BASIC: [ClassId; 7] =
        [ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8, ClassId::F9, ClassId::F10, ClassId::F11];

    /// Whether the family carries a second parameter β.
    pub fn has_beta(self) -> bool {
        matches!(self, ClassId::F1 | ClassId::F11)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::F0 => "F0",
            ClassId::F1 => "F1",
            ClassId::F4 => "F4",
            ClassId::F5 => "F5",
            ClassId::F8 => "F8",
            ClassId::F9 => "F9",
            ClassId::F10 => "F10",
            ClassId::F11 => "F11",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s.trim().to_ascii_uppercase().as_str() {
            "F0" => ClassId::F0,
            "F1" => ClassId::F1,
            "F4" => ClassId::F4,
            "F5" => ClassId::F5,
            "F8" => ClassId::F8,
            "F9" => ClassId::F9,
            "F10" => ClassId::F10,
            "F11" => ClassId::F11,
            _ => return Err(Error::UnknownClass(s.to_string())),
        };
        Ok(id)
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ClassId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A class together with its real parameters.
///
/// β is only meaningful for `F1` and `F11`; for the other classes it is held at zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassParams<T> {
    #[serde(rename = "class")]
    pub class_id: ClassId,
    pub alpha: T,
    #[serde(default)]
    pub beta: T,
}

impl<T: Real> ClassParams<T> {
    pub fn new(class_id: ClassId, alpha: T, beta: T) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::NonFinite("class parameters"));
        }
        let (alpha, beta) = match class_id {
            ClassId::F0 => (T::zero(), T::zero()),
            c if c.has_beta() => (alpha, beta),
            _ => (alpha, T::zero()),
        };
        Ok(Self { class_id, alpha, beta })
    }

    /// Single-parameter shorthand.
    pub fn with_alpha(class_id: ClassId, alpha: T) -> Result<Self> {
        Self::new(class_id, alpha, T::zero())
    }

    pub fn abelian() -> Self {
        Self { class_id: ClassId::F0, alpha: T::zero(), beta: T::zero() }
    }
}

/// Frame matrices of `(φ, ξ, η, g)` on `(e₀, e₁, e₂)`.
///
/// `phi[r][c]` is the `e_r` component of `φe_c`; `eta` holds the covector components `η(e_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiBasisStructure<T> {
    pub phi: Mat3<T>,
    pub xi: Vec3<T>,
    pub eta: Vec3<T>,
    pub g: Mat3<T>,
}

/// `φe₀ = 0, φe₁ = e₂, φe₂ = e₁, ξ = e₀, η = e⁰, g = E`.
pub fn standard_structure<T: Real>() -> PhiBasisStructure<T> {
    let (o, z) = (T::one(), T::zero());
    PhiBasisStructure {
        phi: Mat3::new([[z, z, z], [z, z, o], [z, o, z]]),
        xi: Vec3::basis(0),
        eta: Vec3::basis(0),
        g: Mat3::identity(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IdentityResidual<T> {
    pub name: &'static str,
    pub residual: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureCheck<T> {
    pub residuals: Vec<IdentityResidual<T>>,
    pub tol: T,
}

impl<T: Real> StructureCheck<T> {
    pub fn passes(&self) -> bool {
        self.residuals.iter().all(|r| r.residual <= self.tol)
    }

    pub fn get(&self, name: &str) -> Option<T> {
        self.residuals.iter().find(|r| r.name == name).map(|r| r.residual)
    }

    pub fn worst(&self) -> Option<IdentityResidual<T>> {
        self.residuals.iter().copied().max_by(|a, b| a.residual.partial_cmp(&b.residual).unwrap())
    }
}

pub const PHI_SQUARED: &str = "phi_squared";
pub const ETA_XI: &str = "eta_xi";
pub const ETA_PHI: &str = "eta_phi";
pub const PHI_XI: &str = "phi_xi";
pub const TRACE_PHI: &str = "trace_phi";
pub const METRIC_COMPAT: &str = "metric_compat";

/// Residuals of `φ² = I − η⊗ξ`, `η(ξ) = 1`, `η∘φ = 0`, `φξ = 0`, `tr φ = 0` and
/// `g(φx, φy) = g(x, y) − η(x)η(y)` over all frame pairs.
pub fn check_structure<T: Real>(s: &PhiBasisStructure<T>, tol: T) -> StructureCheck<T> {
    let id = Mat3::identity();
    let eta_xi = Mat3::outer(&s.xi, &s.eta);
    let phi_sq = (s.phi * s.phi - id + eta_xi).max_abs();
    let eta_of_xi = (s.eta.dot(&s.xi) - T::one()).abs();
    let eta_phi = Mat3::vec_mul(&s.eta, &s.phi).max_abs();
    let phi_xi = s.phi.mul_vec(&s.xi).max_abs();
    let trace = s.phi.trace().abs();
    let metric = (s.phi.transpose() * s.g * s.phi - s.g + Mat3::outer(&s.eta, &s.eta)).max_abs();

    let residuals = [
        (PHI_SQUARED, phi_sq),
        (ETA_XI, eta_of_xi),
        (ETA_PHI, eta_phi),
        (PHI_XI, phi_xi),
        (TRACE_PHI, trace),
        (METRIC_COMPAT, metric),
    ]
    .into_iter()
    .map(|(name, residual)| IdentityResidual { name, residual })
    .collect();
    StructureCheck { residuals, tol }
}

/// Frame components `F[i][j][k] = F(e_i, e_j, e_k)` of the fundamental tensor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FTensor<T> {
    #[serde(rename = "F")]
    pub f: Tensor3<T>,
}

impl<T: Real> FTensor<T> {
    pub fn zero() -> Self {
        Self { f: Tensor3::zero() }
    }

    pub fn from_fn(f: impl FnMut(usize, usize, usize) -> T) -> Self {
        Self { f: Tensor3::from_fn(f) }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.f[(i, j, k)]
    }
}

impl<T: Real> std::ops::Add for FTensor<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { f: self.f + rhs.f }
    }
}

/// Lee forms θ, θ*, ω on the φ-basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LeeForms<T> {
    pub theta: Vec3<T>,
    pub theta_star: Vec3<T>,
    pub omega: Vec3<T>,
}

impl<T: Real> std::ops::Add for LeeForms<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            theta: self.theta + rhs.theta,
            theta_star: self.theta_star + rhs.theta_star,
            omega: self.omega + rhs.omega,
        }
    }
}

pub fn lee_forms<T: Real>(f: &FTensor<T>) -> LeeForms<T> {
    let c = |i, j, k| f.get(i, j, k);
    LeeForms {
        theta: Vec3::new(c(1, 1, 0) + c(2, 2, 0), c(1, 1, 1), c(2, 2, 2)),
        theta_star: Vec3::new(c(1, 2, 0) + c(2, 1, 0), T::zero() - c(2, 2, 2), T::zero() - c(1, 1, 1)),
        omega: Vec3::new(T::zero(), c(0, 0, 1), c(0, 0, 2)),
    }
}

/// Trilinear form `F_s(x, y, z)` of a basic class, in terms of the component
/// parameters (θ₁, θ₂ for F1; θ₀ for F4; θ*₀ for F5; λ, μ, ν; ω₁, ω₂ for F11).
fn class_form<T: Real>(class_id: ClassId, p: T, q: T, x: &Vec3<T>, y: &Vec3<T>, z: &Vec3<T>) -> T {
    let half = T::half();
    // y⁰zⁱ + yⁱz⁰
    let sym0 = |i: usize| y[0] * z[i] + y[i] * z[0];
    let hyp = y[1] * z[1] - y[2] * z[2];
    match class_id {
        ClassId::F0 => T::zero(),
        ClassId::F1 => (x[1] * p - x[2] * q) * hyp,
        ClassId::F4 => p * half * (x[1] * sym0(1) + x[2] * sym0(2)),
        ClassId::F5 => p * half * (x[1] * sym0(2) + x[2] * sym0(1)),
        ClassId::F8 => p * (x[1] * sym0(1) - x[2] * sym0(2)),
        ClassId::F9 => p * (x[1] * sym0(2) - x[2] * sym0(1)),
        ClassId::F10 => p * x[0] * hyp,
        ClassId::F11 => x[0] * (q * sym0(1) + p * sym0(2)),
    }
}

/// Builds the full tensor of a pure basic class by evaluating its trilinear form
/// on every frame triple.
///
/// Parameters enter as: F1 `θ₁ = 2α, θ₂ = −2β`; F4 `θ₀ = 2α`; F5 `θ*₀ = 2α`;
/// F8 `λ = α`; F9 `μ = α`; F10 `ν = 2α`; F11 `ω₂ = α, ω₁ = β`.
pub fn class_pattern<T: Real>(p: &ClassParams<T>) -> FTensor<T> {
    let two = T::two();
    let (first, second) = match p.class_id {
        ClassId::F0 => (T::zero(), T::zero()),
        ClassId::F1 => (two * p.alpha, -two * p.beta),
        ClassId::F4 | ClassId::F5 | ClassId::F10 => (two * p.alpha, T::zero()),
        ClassId::F8 | ClassId::F9 => (p.alpha, T::zero()),
        ClassId::F11 => (p.alpha, p.beta),
    };
    FTensor::from_fn(|i, j, k| class_form(p.class_id, first, second, &Vec3::basis(i), &Vec3::basis(j), &Vec3::basis(k)))
}

/// Recovered parameters of one basic class.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassComponent<T> {
    #[serde(rename = "class")]
    pub class_id: ClassId,
    pub alpha: T,
    pub beta: T,
}

impl<T: Real> ClassComponent<T> {
    pub fn magnitude(&self) -> T {
        self.alpha.abs().max(self.beta.abs())
    }

    pub fn params(&self) -> ClassParams<T> {
        ClassParams { class_id: self.class_id, alpha: self.alpha, beta: self.beta }
    }
}

/// Outcome of decomposing an F tensor into the basic-class patterns.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassReport<T> {
    /// Classes whose recovered parameters exceed the tolerance; `[F0]` if none do.
    pub verdict: Vec<ClassId>,
    /// Parameters of the first verdict class (zero for `F0`).
    pub alpha: T,
    pub beta: T,
    /// Recovered parameters for all seven classes.
    pub classes: Vec<ClassComponent<T>>,
    /// `‖F − Σ F_s‖_max`.
    pub residual: T,
    /// Set when the residual exceeds the tolerance: the tensor is outside the span
    /// of the seven patterns.
    pub unclassified: bool,
    pub lee: LeeForms<T>,
    pub para_sasakian: bool,
    #[serde(skip)]
    pub tol: T,
}

impl<T: Real> ClassReport<T> {
    pub fn component(&self, class_id: ClassId) -> Option<&ClassComponent<T>> {
        self.classes.iter().find(|c| c.class_id == class_id)
    }

    /// True when exactly one basic class (or F0) explains the tensor.
    pub fn is_pure(&self) -> bool {
        !self.unclassified && self.verdict.len() == 1
    }

    pub fn is_pure_class(&self, class_id: ClassId) -> bool {
        self.is_pure() && self.verdict[0] == class_id
    }
}

fn unit_patterns<T: Real>(class_id: ClassId) -> (FTensor<T>, Option<FTensor<T>>) {
    let (o, z) = (T::one(), T::zero());
    let a = class_pattern(&ClassParams { class_id, alpha: o, beta: z });
    let b = class_id.has_beta().then(|| class_pattern(&ClassParams { class_id, alpha: z, beta: o }));
    (a, b)
}

fn project<T: Real>(f: &FTensor<T>, unit: &FTensor<T>) -> T {
    f.f.dot(&unit.f) / unit.f.dot(&unit.f)
}

/// Decomposes `f` by orthogonal projection onto the nine unit patterns (they are
/// mutually orthogonal in ℝ²⁷), so mixtures of classes are resolved exactly.
pub fn match_class<T: Real>(f: &FTensor<T>, tol: T) -> ClassReport<T> {
    let classes: Vec<ClassComponent<T>> = ClassId::BASIC
        .iter()
        .map(|&class_id| {
            let (ua, ub) = unit_patterns::<T>(class_id);
            let alpha = project(f, &ua);
            let beta = ub.map_or(T::zero(), |ub| project(f, &ub));
            ClassComponent { class_id, alpha, beta }
        })
        .collect();

    let recon = classes.iter().fold(FTensor::zero(), |acc, c| acc + class_pattern(&c.params()));
    let residual = (f.f - recon.f).max_abs();

    let active: Vec<&ClassComponent<T>> = classes.iter().filter(|c| c.magnitude() > tol).collect();
    let (verdict, alpha, beta) = match active.first() {
        None => (vec![ClassId::F0], T::zero(), T::zero()),
        Some(lead) => (active.iter().map(|c| c.class_id).collect(), lead.alpha, lead.beta),
    };

    let mut report = ClassReport {
        verdict,
        alpha,
        beta,
        classes,
        residual,
        unclassified: residual > tol,
        lee: lee_forms(f),
        para_sasakian: false,
        tol,
    };
    report.para_sasakian = crate::levicivita::is_para_sasakian(&report);
    report
}
