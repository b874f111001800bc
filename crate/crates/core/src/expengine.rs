//! Closed-form group exponentials `e^A = E + tA + uA²` for the Lie algebras of the
//! basic classes.
//!
//! Every class matrix satisfies a low-degree identity: `A² = κA` with `κ = tr A`
//! (F1, F11) or `κ = tr A / 2` (F5), and `A³ = κA` with `κ = tr(A²)/2` (F4, F8, F9,
//! F10). The exponential series then collapses to
//!
//! * `A² = κA`: `t = (e^κ − 1)/κ`, `u = 0`;
//! * `A³ = κA`, `κ = r² > 0`: `t = sinh r / r`, `u = (cosh r − 1)/r²`;
//! * `A³ = κA`, `κ = −θ² < 0`: `t = sin θ / θ`, `u = (1 − cos θ)/θ²`.
//!
//! Below the branch threshold the nilpotent series is used instead.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{adjoint_rep, class_algebra};
use crate::mat3::{annihilator, expm_oracle, Annihilator, Mat3};
use crate::scalar::Real;
use crate::structure::{ClassId, ClassParams};

/// Which row of the closed form produced `(t, u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "generic")]
    Generic,
    /// `tr A = 0` in an `A² = κA` family: `e^A = E + A`.
    #[serde(rename = "trace_zero")]
    TraceZero,
    /// `tr A² = 0` in an `A³ = κA` family: nilpotent series.
    #[serde(rename = "trA2_zero")]
    TrA2Zero,
    /// F8 at `A = 0`, where only the analytic limit is available.
    #[serde(rename = "zero_matrix")]
    ZeroMatrix,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Generic => "generic",
            Branch::TraceZero => "trace_zero",
            Branch::TrA2Zero => "trA2_zero",
            Branch::ZeroMatrix => "zero_matrix",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExpResult<T> {
    #[serde(rename = "A")]
    pub a: Mat3<T>,
    pub t: T,
    pub u: T,
    pub branch: Branch,
    #[serde(rename = "expA")]
    pub exp_a: Mat3<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_residual: Option<T>,
}

impl<T: Real> ExpResult<T> {
    fn assemble(a: Mat3<T>, t: T, u: T, branch: Branch) -> Self {
        let exp_a = Mat3::identity() + a.scale(t) + (a * a).scale(u);
        Self { a, t, u, branch, exp_a, oracle_residual: None }
    }

    pub fn det(&self) -> T {
        self.exp_a.det()
    }

    /// Fills `oracle_residual` with `‖expA − expm_oracle(A)‖_max`.
    pub fn with_oracle(mut self) -> Result<Self> {
        let reference = expm_oracle(&self.a, oracle_tol())?;
        self.oracle_residual = Some(self.exp_a.dist(&reference));
        Ok(self)
    }
}

fn oracle_tol<T: Real>() -> T {
    T::lit(1e-15).max(T::epsilon())
}

/// `(e^x − 1)/x`, or 1 at the seam.
fn quadratic_coeff<T: Real>(x: T) -> (T, Branch) {
    if x.abs() > T::BRANCH_EPS {
        (x.exp_m1() / x, Branch::Generic)
    } else {
        (T::one(), Branch::TraceZero)
    }
}

/// `(t, u)` for `A³ = κA`. `trace_sq = tr A² = 2κ` selects the branch.
fn cubic_coeffs<T: Real>(kappa: T, a_sq_is_zero: bool, degenerate: Branch) -> (T, T, Branch) {
    let half = T::half();
    if (kappa + kappa).abs() <= T::BRANCH_EPS {
        // A³ ≈ 0: e^A = E + A + A²/2, which is E + A when A² vanishes.
        let u = if a_sq_is_zero { T::zero() } else { half };
        return (T::one(), u, degenerate);
    }
    let (t, h) = if kappa > T::zero() {
        let r = kappa.sqrt();
        (r.sinh() / r, (half * r).sinh() / (half * r))
    } else {
        let th = (-kappa).sqrt();
        (th.sin() / th, (half * th).sin() / (half * th))
    };
    // (cosh r − 1)/r² = 2 sinh²(r/2)/r², (1 − cos θ)/θ² = 2 sin²(θ/2)/θ²
    (t, half * h * h, Branch::Generic)
}

fn check_finite<T: Real>(xs: &[T]) -> Result<()> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite("closed_form input"))
    }
}

/// Evaluates the group element at `A = aM₀ + bM₁ + cM₂` for the class algebra.
pub fn closed_form<T: Real>(p: &ClassParams<T>, a: T, b: T, c: T) -> Result<ExpResult<T>> {
    check_finite(&[p.alpha, p.beta, a, b, c])?;
    let m = adjoint_rep(&class_algebra(p), a, b, c);
    let out = match p.class_id {
        ClassId::F0 => return Err(Error::AbelianClass(ClassId::F0)),
        ClassId::F1 | ClassId::F11 => {
            let (t, branch) = quadratic_coeff(m.trace());
            ExpResult::assemble(m, t, T::zero(), branch)
        }
        ClassId::F5 => {
            let (t, branch) = quadratic_coeff(m.trace() * T::half());
            ExpResult::assemble(m, t, T::zero(), branch)
        }
        ClassId::F4 | ClassId::F9 | ClassId::F10 | ClassId::F8 => {
            let degenerate = if p.class_id == ClassId::F8 { Branch::ZeroMatrix } else { Branch::TrA2Zero };
            let a_sq_is_zero = (m * m).is_zero();
            let (t, u, branch) = cubic_coeffs(m.trace_sq() * T::half(), a_sq_is_zero, degenerate);
            ExpResult::assemble(m, t, u, branch)
        }
    };
    if out.exp_a.is_finite() {
        Ok(out)
    } else {
        Err(Error::NonFinite("closed_form result"))
    }
}

/// Para-Sasakian group: the F4 algebra at α = −1, `A = [[0,−c,−b],[0,0,a],[0,a,0]]`.
///
/// `t = sinh|a|/|a|`, `u = (cosh|a| − 1)/a²` (1 and 0 at `a = 0`).
pub fn para_sasakian_group<T: Real>(a: T, b: T, c: T) -> Result<ExpResult<T>> {
    let p = ClassParams { class_id: ClassId::F4, alpha: -T::one(), beta: T::zero() };
    closed_form(&p, a, b, c)
}

/// `‖closed_form(...).expA − expm_oracle(A)‖_max`.
pub fn verify_closed_form<T: Real>(p: &ClassParams<T>, a: T, b: T, c: T, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::BadTolerance(tol.to_f64().unwrap_or(f64::NAN)));
    }
    let r = closed_form(p, a, b, c)?.with_oracle()?;
    Ok(r.oracle_residual.expect("filled by with_oracle"))
}

/// Class-agnostic reconstruction driven only by [`annihilator`]: returns `None`
/// when `A` satisfies neither `A² = κA` nor `A³ = κA`.
pub fn exp_via_annihilator<T: Real>(a: &Mat3<T>, tol: T) -> Option<ExpResult<T>> {
    match annihilator(a, tol) {
        Annihilator::Quadratic(kappa) => {
            let (t, branch) = quadratic_coeff(kappa);
            Some(ExpResult::assemble(*a, t, T::zero(), branch))
        }
        Annihilator::Cubic(kappa) => {
            let (t, u, branch) = cubic_coeffs(kappa, (*a * *a).is_zero(), Branch::TrA2Zero);
            Some(ExpResult::assemble(*a, t, u, branch))
        }
        Annihilator::None => None,
    }
}
