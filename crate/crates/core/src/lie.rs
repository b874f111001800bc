//! Structure constants of the class-parameterized 3-dimensional Lie algebras,
//! brackets, the Jacobi check and the matrix representation `A = aM₀ + bM₁ + cM₂`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat3::{Mat3, Vec3};
use crate::scalar::Real;
use crate::structure::{ClassId, ClassParams};
use crate::tensor::{triples, Tensor3};

/// Coefficients `C[i][j][k]` of `[E_i, E_j] = C_ij^k E_k`, antisymmetric in `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StructureConstants<T> {
    #[serde(rename = "C")]
    c: Tensor3<T>,
}

impl<T: Real> StructureConstants<T> {
    /// Validates finiteness and exact antisymmetry.
    pub fn new(c: Tensor3<T>) -> Result<Self> {
        if !c.is_finite() {
            return Err(Error::NonFinite("structure constants"));
        }
        for (i, j, k) in triples() {
            if c[(i, j, k)] != -c[(j, i, k)] {
                return Err(Error::NotAntisymmetric { i, j, k });
            }
        }
        Ok(Self { c })
    }

    pub fn zero() -> Self {
        Self { c: Tensor3::zero() }
    }

    /// Builds constants from the three independent brackets `[E₀,E₁]`, `[E₀,E₂]`, `[E₁,E₂]`.
    pub fn from_brackets(e01: Vec3<T>, e02: Vec3<T>, e12: Vec3<T>) -> Self {
        let mut c = Tensor3::zero();
        for (i, j, v) in [(0, 1, e01), (0, 2, e02), (1, 2, e12)] {
            for k in 0..3 {
                c[(i, j, k)] = v[k];
                c[(j, i, k)] = T::zero() - v[k];
            }
        }
        Self { c }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.c[(i, j, k)]
    }

    pub fn tensor(&self) -> &Tensor3<T> {
        &self.c
    }

    pub fn scale(&self, s: T) -> Self {
        Self { c: self.c.scale(s) }
    }

    pub fn cast<U: Real>(&self) -> StructureConstants<U> {
        StructureConstants { c: Tensor3::from_fn(|i, j, k| U::from(self.c[(i, j, k)]).expect("representable")) }
    }
}

impl<'de, T> Deserialize<'de> for StructureConstants<T>
where
    T: Real + Deserialize<'de>,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw<T> {
            #[serde(rename = "C")]
            c: Tensor3<T>,
        }
        let raw = Raw::<T>::deserialize(d)?;
        Self::new(raw.c).map_err(serde::de::Error::custom)
    }
}

/// The brackets that put the left-invariant φ-structure in the given basic class.
pub fn class_algebra<T: Real>(p: &ClassParams<T>) -> StructureConstants<T> {
    let (a, b) = (p.alpha, p.beta);
    let z = T::zero();
    let v = Vec3::new;
    let (e01, e02, e12) = match p.class_id {
        ClassId::F0 => (v(z, z, z), v(z, z, z), v(z, z, z)),
        ClassId::F1 => (v(z, z, z), v(z, z, z), v(z, a, z - b)),
        ClassId::F4 => (v(z, z, a), v(z, a, z), v(z, z, z)),
        ClassId::F5 => (v(z, a, z), v(z, z, a), v(z, z, z)),
        ClassId::F8 => (v(z, z, a), v(z, z - a, z), v(T::two() * a, z, z)),
        ClassId::F9 => (v(z, a, z), v(z, z, z - a), v(z, z, z)),
        ClassId::F10 => (v(z, z, z - a), v(z, a, z), v(z, z, z)),
        ClassId::F11 => (v(a, z, z), v(b, z, z), v(z, z, z)),
    };
    StructureConstants::from_brackets(e01, e02, e12)
}

/// `[E₀,E₁] = −E₂, [E₀,E₂] = −E₁, [E₁,E₂] = 0`, the F4 algebra at α = −1.
pub fn para_sasakian_algebra<T: Real>() -> StructureConstants<T> {
    class_algebra(&ClassParams { class_id: ClassId::F4, alpha: -T::one(), beta: T::zero() })
}

/// `max_{i,j,k,m} |Σ_l (C_ij^l C_lk^m + C_jk^l C_li^m + C_ki^l C_lj^m)|`.
pub fn jacobi_defect<T: Real>(c: &StructureConstants<T>) -> T {
    let mut worst = T::zero();
    for (i, j, k) in triples() {
        for m in 0..3 {
            let s = (0..3).fold(T::zero(), |acc, l| {
                acc + c.get(i, j, l) * c.get(l, k, m)
                    + c.get(j, k, l) * c.get(l, i, m)
                    + c.get(k, i, l) * c.get(l, j, m)
            });
            worst = worst.max(s.abs());
        }
    }
    worst
}

/// `[x, y]^k = Σ xⁱ yʲ C_ij^k`.
pub fn bracket<T: Real>(c: &StructureConstants<T>, x: &Vec3<T>, y: &Vec3<T>) -> Vec3<T> {
    let mut z = Vec3::zero();
    for (i, j, k) in triples() {
        z[k] = z[k] + x[i] * y[j] * c.get(i, j, k);
    }
    z
}

/// `A = aM₀ + bM₁ + cM₂` with `(M_i)_j^k = −C_ij^k` stored at row `j`, column `k`.
///
/// This is `−ad(X)ᵀ` for `X = aE₀ + bE₁ + cE₂`.
pub fn adjoint_rep<T: Real>(c: &StructureConstants<T>, a: T, b: T, cc: T) -> Mat3<T> {
    let coeff = [a, b, cc];
    // Accumulating by subtraction from +0 keeps vanishing entries at +0 rather than −0.
    Mat3::from_fn(|j, k| (0..3).fold(T::zero(), |acc, i| acc - coeff[i] * c.get(i, j, k)))
}

/// The basis matrices `M₀, M₁, M₂`.
pub fn basis_matrices<T: Real>(c: &StructureConstants<T>) -> [Mat3<T>; 3] {
    let (o, z) = (T::one(), T::zero());
    [adjoint_rep(c, o, z, z), adjoint_rep(c, z, o, z), adjoint_rep(c, z, z, o)]
}

/// `max ‖[M_i, M_j] − C_ij^k M_k‖` over all pairs: zero iff the `M_i` represent the algebra.
pub fn representation_defect<T: Real>(c: &StructureConstants<T>, m: &[Mat3<T>; 3]) -> T {
    let mut worst = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            let comm = m[i] * m[j] - m[j] * m[i];
            let target = (0..3).fold(Mat3::zero(), |acc, k| acc + m[k].scale(c.get(i, j, k)));
            worst = worst.max(comm.dist(&target));
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(c: ClassId, a: f64, b: f64) -> StructureConstants<f64> {
        class_algebra(&ClassParams::new(c, a, b).unwrap())
    }

    fn nonzero_upper(c: &StructureConstants<f64>) -> Vec<((usize, usize, usize), f64)> {
        triples().filter(|&(i, j, _)| i < j).map(|t| (t, c.tensor()[t])).filter(|(_, v)| *v != 0.0).collect()
    }

    #[test]
    fn class_algebra_examples() {
        assert_eq!(nonzero_upper(&alg(ClassId::F1, 1.0, 2.0)), vec![((1, 2, 1), 1.0), ((1, 2, 2), -2.0)]);
        let c = alg(ClassId::F1, 1.0, 2.0);
        assert_eq!(c.get(2, 1, 1), -1.0);
        assert_eq!(c.get(2, 1, 2), 2.0);
        assert_eq!(nonzero_upper(&alg(ClassId::F11, 1.0, 0.0)), vec![((0, 1, 0), 1.0)]);
        assert_eq!(alg(ClassId::F0, 0.0, 0.0), StructureConstants::zero());
    }

    #[test]
    fn para_sasakian_constants() {
        let c = para_sasakian_algebra::<f64>();
        assert_eq!(c.get(0, 1, 2), -1.0);
        assert_eq!(c.get(0, 2, 1), -1.0);
        assert!((0..3).all(|k| c.get(1, 2, k) == 0.0));
        assert_eq!(c, alg(ClassId::F4, -1.0, 0.0));
        assert_eq!(jacobi_defect(&c), 0.0);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_defect(&alg(ClassId::F8, 1.0, 0.0)), 0.0);
        assert_eq!(jacobi_defect(&StructureConstants::<f64>::zero()), 0.0);
        let bad = StructureConstants::from_brackets(Vec3::new(0.0, 1.0, 0.0), Vec3::zero(), Vec3::new(1.0, 0.0, 0.0));
        // [E0,[E1,E2]] + [E1,[E2,E0]] + [E2,[E0,E1]] = [E2,E1] = -E0
        assert_eq!(jacobi_defect(&bad), 1.0);
    }

    #[test]
    fn bracket_examples() {
        let e = Vec3::<f64>::basis;
        let c = alg(ClassId::F5, 1.3, 0.0);
        let x = Vec3::new(0.2, -1.0, 3.0);
        assert!(bracket(&c, &x, &x).max_abs() < 1e-15);
        assert_eq!(bracket(&alg(ClassId::F1, 1.0, 0.0), &e(1), &e(2)), e(1));
        assert_eq!(bracket(&alg(ClassId::F8, 1.0, 0.0), &e(1), &e(2)), e(0).scale(2.0));
    }

    #[test]
    fn adjoint_rep_examples() {
        let a = adjoint_rep(&alg(ClassId::F1, 1.0, 1.0), 0.0, 1.0, 1.0);
        assert_eq!(a, Mat3::new([[0.0, 0.0, 0.0], [0.0, 1.0, -1.0], [0.0, -1.0, 1.0]]));
        let a = adjoint_rep(&alg(ClassId::F8, 1.0, 0.0), 1.0, 0.0, 0.0);
        assert_eq!(a, Mat3::new([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]));
        assert_eq!(adjoint_rep(&alg(ClassId::F9, 2.0, 0.0), 0.0, 0.0, 0.0), Mat3::zero());
    }

    #[test]
    fn adjoint_rep_is_a_representation() {
        for &class_id in &ClassId::BASIC {
            let c = alg(class_id, 1.5, -0.5);
            assert_eq!(representation_defect(&c, &basis_matrices(&c)), 0.0, "{class_id}");
        }
    }

    #[test]
    fn new_rejects_asymmetric_and_nan() {
        let mut t = Tensor3::<f64>::zero();
        t[(0, 1, 2)] = 1.0;
        assert_eq!(StructureConstants::new(t), Err(Error::NotAntisymmetric { i: 0, j: 1, k: 2 }));
        t[(1, 0, 2)] = -1.0;
        assert!(StructureConstants::new(t).is_ok());
        t[(2, 2, 2)] = f64::NAN;
        assert!(matches!(StructureConstants::new(t), Err(Error::NonFinite(_))));
    }

    #[test]
    fn json_shape() {
        let c = alg(ClassId::F8, 1.0, 0.0);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.starts_with(r#"{"C":[[[0.0,0.0,0.0],[0.0,0.0,1.0]"#), "{s}");
        let back: StructureConstants<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let broken = r#"{"C": [[[0,0,0],[0,0,1],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]]}"#;
        assert!(serde_json::from_str::<StructureConstants<f64>>(broken).is_err());
    }
}
