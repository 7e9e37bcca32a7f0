//! Curvature of an arbitrary frame connection, the signature-weighted Ricci
//! trace, and symmetrized Ricci bilinear forms — plus the conversion between
//! row-convention operator matrices and bilinear forms.

use crate::algebra::LieAlgebra3;
use crate::connection::{connection, Connection, Flavor};
use crate::metric::{Metric, Vec3};
use crate::scalar::Scalar;

/// Curvature components: R(eᵢ,eⱼ)eₖ = Σₗ r[i][j][k][l] eₗ.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTensor<T> {
    pub r: [[[[T; 3]; 3]; 3]; 3],
}

/// A (0,2)-tensor in frame components: T(eᵢ,eⱼ) = t[i][j].
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm<T> {
    pub t: [[T; 3]; 3],
}

impl<T: Scalar> BilinearForm<T> {
    pub fn zero() -> Self {
        BilinearForm {
            t: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.t[i][j] == self.t[j][i]))
    }

    /// T(x, y) by bilinear extension.
    pub fn eval(&self, x: &Vec3<T>, y: &Vec3<T>) -> T {
        let mut acc = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc = acc + x[i].clone() * self.t[i][j].clone() * y[j].clone();
            }
        }
        acc
    }
}

/// A linear operator in the row convention: image of eᵢ is Σⱼ a[i][j] eⱼ.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<T> {
    pub a: [[T; 3]; 3],
}

/// R(eᵢ,eⱼ)eₖ = ∇_{eᵢ}∇_{eⱼ}eₖ − ∇_{eⱼ}∇_{eᵢ}eₖ − ∇_{[eᵢ,eⱼ]}eₖ,
/// in frame components; antisymmetric in (i,j) by construction.
pub fn curvature<T: Scalar>(c: &Connection<T>, a: &LieAlgebra3<T>) -> CurvatureTensor<T> {
    let mut r: [[[[T; 3]; 3]; 3]; 3] = std::array::from_fn(|_| {
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| T::zero())))
    });
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for (l, slot) in r[i][j][k].iter_mut().enumerate() {
                    let mut acc = T::zero();
                    for m in 0..3 {
                        acc = acc
                            + c.gamma[j][k][m].clone() * c.gamma[i][m][l].clone()
                            - c.gamma[i][k][m].clone() * c.gamma[j][m][l].clone()
                            - a.c[i][j][m].clone() * c.gamma[m][k][l].clone();
                    }
                    *slot = acc;
                }
            }
        }
    }
    CurvatureTensor { r }
}

/// Signature-weighted Ricci trace:
/// Ric(eᵢ,eⱼ) = −g(R(eᵢ,e₁)eⱼ,e₁) − g(R(eᵢ,e₂)eⱼ,e₂) + g(R(eᵢ,e₃)eⱼ,e₃).
pub fn ricci_form<T: Scalar>(r: &CurvatureTensor<T>) -> BilinearForm<T> {
    let m = Metric::default();
    let mut t = BilinearForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = T::zero();
            for k in 0..3 {
                let trace_sign = T::from_int(if k < 2 { -1 } else { 1 });
                // g(R(eᵢ,eₖ)eⱼ, eₖ) = εₖ · r[i][k][j][k]
                acc = acc + trace_sign * m.sign::<T>(k) * r.r[i][k][j][k].clone();
            }
            t.t[i][j] = acc;
        }
    }
    t
}

/// (t + tᵀ)/2.
pub fn symmetrize<T: Scalar>(t: &BilinearForm<T>) -> BilinearForm<T> {
    let half = T::frac(1, 2);
    let mut out = BilinearForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            out.t[i][j] = half.clone() * (t.t[i][j].clone() + t.t[j][i].clone());
        }
    }
    out
}

/// Convert a row-convention operator to the bilinear form g(A(eᵢ), eⱼ):
/// t[i][j] = a[i][j]·εⱼ with ε = (1,1,−1).
pub fn operator_to_form<T: Scalar>(m: &OperatorMatrix<T>) -> BilinearForm<T> {
    let metric = Metric::default();
    let mut out = BilinearForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            out.t[i][j] = m.a[i][j].clone() * metric.sign::<T>(j);
        }
    }
    out
}

/// Full pipeline: symmetrized Ricci form of the algebra's derived connection.
pub fn symmetric_ricci<T: Scalar>(a: &LieAlgebra3<T>, flavor: Flavor) -> BilinearForm<T> {
    let conn = connection(a, flavor);
    symmetrize(&ricci_form(&curvature(&conn, a)))
}
