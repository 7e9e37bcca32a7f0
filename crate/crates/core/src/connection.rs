//! Connections in the invariant frame: Levi-Civita via the Koszul formula,
//! then the canonical connection ∇⁰ and the Kobayashi–Nomizu connection ∇¹.
//!
//! Because the frame fields are left-invariant and the metric coefficients
//! constant, every derivative-of-metric term in the Koszul formula vanishes;
//! what remains is pure structure-constant algebra.

use std::fmt;
use std::str::FromStr;

use crate::algebra::LieAlgebra3;
use crate::error::Error;
use crate::metric::{Metric, ProductStructure, Vec3};
use crate::scalar::Scalar;

/// Which connection a coefficient table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    LeviCivita,
    Canonical,
    KobayashiNomizu,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::LeviCivita => "levi-civita",
            Flavor::Canonical => "canonical",
            Flavor::KobayashiNomizu => "kn",
        };
        f.write_str(s)
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lc" | "levi-civita" | "levicivita" => Ok(Flavor::LeviCivita),
            "can" | "canonical" => Ok(Flavor::Canonical),
            "kn" | "kobayashi-nomizu" | "kobayashinomizu" => Ok(Flavor::KobayashiNomizu),
            other => Err(Error::ConfigError(format!(
                "unknown connection {other:?} (expected lc, canonical or kn)"
            ))),
        }
    }
}

/// Connection coefficients: ∇_{eᵢ} eⱼ = Σₖ gamma[i][j][k] eₖ.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection<T> {
    pub gamma: [[[T; 3]; 3]; 3],
    pub flavor: Flavor,
}

impl<T: Scalar> Connection<T> {
    /// ∇_{eᵢ} applied to a constant-coefficient field.
    pub fn derive_vec(&self, i: usize, v: &Vec3<T>) -> Vec3<T> {
        let mut out: Vec3<T> = std::array::from_fn(|_| T::zero());
        for j in 0..3 {
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = slot.clone() + v[j].clone() * self.gamma[i][j][k].clone();
            }
        }
        out
    }
}

/// Covariant derivative of J: (∇_{eᵢ}J)eⱼ = Σₖ nj[i][j][k] eₖ.
#[derive(Debug, Clone, PartialEq)]
pub struct NablaJ<T> {
    pub nj: [[[T; 3]; 3]; 3],
}

impl<T: Scalar> NablaJ<T> {
    /// (∇_{eᵢ}J) applied to a constant-coefficient field.
    pub fn apply(&self, i: usize, v: &Vec3<T>) -> Vec3<T> {
        let mut out: Vec3<T> = std::array::from_fn(|_| T::zero());
        for j in 0..3 {
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = slot.clone() + v[j].clone() * self.nj[i][j][k].clone();
            }
        }
        out
    }
}

/// Levi-Civita connection by the Koszul formula specialized to invariant
/// frames: 2 g(∇_{eᵢ}eⱼ, eₖ) = g([eᵢ,eⱼ],eₖ) − g([eⱼ,eₖ],eᵢ) + g([eₖ,eᵢ],eⱼ).
pub fn levi_civita<T: Scalar>(a: &LieAlgebra3<T>) -> Connection<T> {
    let m = Metric::default();
    let mut gamma: [[[T; 3]; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| T::zero())));
    let half = T::frac(1, 2);
    for i in 0..3 {
        for j in 0..3 {
            for (k, slot) in gamma[i][j].iter_mut().enumerate() {
                let rhs = m.sign::<T>(k) * a.c[i][j][k].clone()
                    - m.sign::<T>(i) * a.c[j][k][i].clone()
                    + m.sign::<T>(j) * a.c[k][i][j].clone();
                *slot = half.clone() * rhs / m.sign::<T>(k);
            }
        }
    }
    Connection {
        gamma,
        flavor: Flavor::LeviCivita,
    }
}

/// (∇J) of the Levi-Civita connection: ∇_{eᵢ}(Jeⱼ) − J(∇_{eᵢ}eⱼ),
/// which in the J-eigenframe is (σⱼ − σₖ)·Γᵏᵢⱼ per component.
pub fn nabla_j<T: Scalar>(lc: &Connection<T>, j_structure: &ProductStructure) -> NablaJ<T> {
    debug_assert_eq!(lc.flavor, Flavor::LeviCivita);
    let mut nj: [[[T; 3]; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| T::zero())));
    for i in 0..3 {
        for j in 0..3 {
            for (k, slot) in nj[i][j].iter_mut().enumerate() {
                let factor = j_structure.sigma::<T>(j) - j_structure.sigma::<T>(k);
                *slot = factor * lc.gamma[i][j][k].clone();
            }
        }
    }
    NablaJ { nj }
}

/// Canonical connection: ∇⁰_X Y = ∇_X Y − ½ (∇_X J)(J Y).
pub fn canonical_connection<T: Scalar>(lc: &Connection<T>, nj: &NablaJ<T>) -> Connection<T> {
    debug_assert_eq!(lc.flavor, Flavor::LeviCivita);
    let j = ProductStructure::default();
    let half = T::frac(1, 2);
    let mut gamma = lc.gamma.clone();
    for i in 0..3 {
        for (jj, row) in gamma[i].iter_mut().enumerate() {
            // (∇_{eᵢ}J)(J eⱼ) = σⱼ · (∇_{eᵢ}J)eⱼ
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = slot.clone()
                    - half.clone() * j.sigma::<T>(jj) * nj.nj[i][jj][k].clone();
            }
        }
    }
    Connection {
        gamma,
        flavor: Flavor::Canonical,
    }
}

/// Kobayashi–Nomizu connection:
/// ∇¹_X Y = ∇⁰_X Y − ¼ [ (∇_Y J)(J X) − (∇_{JY} J)(X) ].
/// With X = eᵢ, Y = eⱼ in the J-eigenframe the correction per component k is
/// ¼ (σᵢ − σⱼ) · nj[j][i][k].
pub fn kobayashi_nomizu<T: Scalar>(
    lc: &Connection<T>,
    can: &Connection<T>,
    nj: &NablaJ<T>,
) -> Connection<T> {
    debug_assert_eq!(lc.flavor, Flavor::LeviCivita);
    debug_assert_eq!(can.flavor, Flavor::Canonical);
    let j = ProductStructure::default();
    let quarter = T::frac(1, 4);
    let mut gamma = can.gamma.clone();
    for i in 0..3 {
        for (jj, row) in gamma[i].iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                let factor = j.sigma::<T>(i) - j.sigma::<T>(jj);
                *slot = slot.clone() - quarter.clone() * factor * nj.nj[jj][i][k].clone();
            }
        }
    }
    Connection {
        gamma,
        flavor: Flavor::KobayashiNomizu,
    }
}

/// Derive the requested connection of an algebra in one call.
pub fn connection<T: Scalar>(a: &LieAlgebra3<T>, flavor: Flavor) -> Connection<T> {
    let lc = levi_civita(a);
    if flavor == Flavor::LeviCivita {
        return lc;
    }
    let nj = nabla_j(&lc, &ProductStructure::default());
    let can = canonical_connection(&lc, &nj);
    if flavor == Flavor::Canonical {
        return can;
    }
    kobayashi_nomizu(&lc, &can, &nj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_group, Family, Params};
    use crate::scalar::Rational;

    fn r(n: i64) -> Rational {
        Scalar::from_int(n)
    }

    fn g1(alpha: i64, beta: i64) -> LieAlgebra3<Rational> {
        make_group(
            Family::G1,
            Params {
                alpha: r(alpha),
                beta: r(beta),
                ..Params::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn g1_levi_civita_spot_values() {
        let lc = levi_civita(&g1(1, 0));
        // ∇_{e1}e1 = −e2 − e3
        assert_eq!(lc.gamma[0][0], [r(0), r(-1), r(-1)]);
        // ∇_{e1}e2 = e1, ∇_{e1}e3 = −e1
        assert_eq!(lc.gamma[0][1], [r(1), r(0), r(0)]);
        assert_eq!(lc.gamma[0][2], [r(-1), r(0), r(0)]);
        // ∇_{e2}e2 = e3, ∇_{e2}e3 = e2
        assert_eq!(lc.gamma[1][1], [r(0), r(0), r(1)]);
        assert_eq!(lc.gamma[1][2], [r(0), r(1), r(0)]);
        // ∇_{e3}e2 = −e3, ∇_{e3}e3 = −e2
        assert_eq!(lc.gamma[2][1], [r(0), r(0), r(-1)]);
        assert_eq!(lc.gamma[2][2], [r(0), r(-1), r(0)]);
    }

    #[test]
    fn g1_nabla_j_spot_values() {
        let lc = levi_civita(&g1(1, 0));
        let nj = nabla_j(&lc, &ProductStructure::default());
        assert_eq!(nj.nj[0][0], [r(0), r(0), r(-2)]);
        assert_eq!(nj.nj[0][2], [r(2), r(0), r(0)]);
        assert_eq!(nj.nj[1][1], [r(0), r(0), r(2)]);
        assert_eq!(nj.nj[1][2], [r(0), r(-2), r(0)]);
        assert_eq!(nj.nj[2][1], [r(0), r(0), r(-2)]);
        assert_eq!(nj.nj[2][2], [r(0), r(2), r(0)]);
    }

    #[test]
    fn g1_canonical_spot_values() {
        let can = connection(&g1(1, 0), Flavor::Canonical);
        // the −e3 part of ∇_{e1}e1 is removed
        assert_eq!(can.gamma[0][0], [r(0), r(-1), r(0)]);
        assert_eq!(can.gamma[0][1], [r(1), r(0), r(0)]);
    }

    #[test]
    fn g5_levi_civita_spot_values() {
        let a = make_group(
            Family::G5,
            Params {
                alpha: r(1),
                delta: r(1),
                ..Params::default()
            },
        )
        .unwrap();
        let lc = levi_civita(&a);
        assert_eq!(lc.gamma[0][0], [r(0), r(0), r(1)]);
        assert_eq!(lc.gamma[0][2], [r(1), r(0), r(0)]);
        assert_eq!(lc.gamma[1][1], [r(0), r(0), r(1)]);
        assert_eq!(lc.gamma[1][2], [r(0), r(1), r(0)]);
    }

    #[test]
    fn abelian_connections_vanish() {
        let zero = || [r(0), r(0), r(0)];
        let a = crate::algebra::custom_group(zero(), zero(), zero()).unwrap();
        for flavor in [Flavor::LeviCivita, Flavor::Canonical, Flavor::KobayashiNomizu] {
            let c = connection(&a, flavor);
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(c.gamma[i][j], [r(0), r(0), r(0)]);
                }
            }
        }
    }

    #[test]
    fn g1_kn_spot_values() {
        let kn = connection(&g1(1, 1), Flavor::KobayashiNomizu);
        assert_eq!(kn.gamma[0][0], [r(0), r(-1), r(0)]);
        assert_eq!(kn.gamma[0][1], [r(1), r(0), r(0)]);
        assert_eq!(kn.gamma[1][2], [r(0), r(0), r(1)]);
        assert_eq!(kn.gamma[2][0], [r(1), r(1), r(0)]);
        assert_eq!(kn.gamma[2][1], [r(-1), r(-1), r(0)]);
    }
}
