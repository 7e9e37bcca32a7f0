//! The fixed Lorentzian frame data: metric signs and the product structure J.
//!
//! Everything happens in a pseudo-orthonormal frame e₁, e₂, e₃ with
//! g(eᵢ,eⱼ) = εᵢ δᵢⱼ, ε = (+1, +1, −1) — e₃ is the timelike direction.
//! J = diag(+1, +1, −1) satisfies J² = id and g(Jx, Jy) = g(x, y).

use crate::scalar::Scalar;

/// A frame vector: coordinates (c₁, c₂, c₃) with respect to e₁, e₂, e₃.
pub type Vec3<T> = [T; 3];

/// Metric signs of the pseudo-orthonormal frame; fixed to (+1, +1, −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric {
    pub eps: [i8; 3],
}

impl Default for Metric {
    fn default() -> Self {
        Metric { eps: [1, 1, -1] }
    }
}

impl Metric {
    /// Sign εᵢ as a scalar (i is 0-based).
    pub fn sign<T: Scalar>(&self, i: usize) -> T {
        T::from_int(i64::from(self.eps[i]))
    }

    /// g(x, y) = x₁y₁ + x₂y₂ − x₃y₃.
    pub fn g<T: Scalar>(&self, x: &Vec3<T>, y: &Vec3<T>) -> T {
        let mut acc = T::zero();
        for i in 0..3 {
            acc = acc + self.sign::<T>(i) * x[i].clone() * y[i].clone();
        }
        acc
    }
}

/// The product structure J = diag(+1, +1, −1) acting componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductStructure {
    pub diag: [i8; 3],
}

impl Default for ProductStructure {
    fn default() -> Self {
        ProductStructure { diag: [1, 1, -1] }
    }
}

impl ProductStructure {
    /// Eigenvalue of J on eᵢ (i is 0-based): +1, +1, −1.
    pub fn sigma<T: Scalar>(&self, i: usize) -> T {
        T::from_int(i64::from(self.diag[i]))
    }

    /// Apply J to a frame vector.
    pub fn apply<T: Scalar>(&self, x: &Vec3<T>) -> Vec3<T> {
        std::array::from_fn(|i| self.sigma::<T>(i) * x[i].clone())
    }
}

/// Zero vector.
pub fn zero_vec<T: Scalar>() -> Vec3<T> {
    std::array::from_fn(|_| T::zero())
}

/// Basis vector eᵢ (0-based index).
pub fn basis_vec<T: Scalar>(i: usize) -> Vec3<T> {
    std::array::from_fn(|k| if k == i { T::one() } else { T::zero() })
}

/// Componentwise sum.
pub fn add_vec<T: Scalar>(x: &Vec3<T>, y: &Vec3<T>) -> Vec3<T> {
    std::array::from_fn(|i| x[i].clone() + y[i].clone())
}

/// Scale a vector.
pub fn scale_vec<T: Scalar>(s: &T, x: &Vec3<T>) -> Vec3<T> {
    std::array::from_fn(|i| s.clone() * x[i].clone())
}
