//! The catalog of three-dimensional Lorentzian Lie algebras G1–G7, plus
//! user-supplied Custom algebras, all given by exact structure constants.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::metric::Vec3;
use crate::scalar::Scalar;

/// Group family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    Custom,
}

pub const CATALOG_FAMILIES: [Family; 7] = [
    Family::G1,
    Family::G2,
    Family::G3,
    Family::G4,
    Family::G5,
    Family::G6,
    Family::G7,
];

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::G4 => "G4",
            Family::G5 => "G5",
            Family::G6 => "G6",
            Family::G7 => "G7",
            Family::Custom => "Custom",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G1" => Ok(Family::G1),
            "G2" => Ok(Family::G2),
            "G3" => Ok(Family::G3),
            "G4" => Ok(Family::G4),
            "G5" => Ok(Family::G5),
            "G6" => Ok(Family::G6),
            "G7" => Ok(Family::G7),
            "CUSTOM" => Ok(Family::Custom),
            other => Err(Error::ConfigError(format!(
                "unknown family {other:?} (expected G1..G7 or Custom)"
            ))),
        }
    }
}

/// Parameter record (α, β, γ, δ; η ∈ {−1,+1} present only for G4).
/// Parameters a family does not use stay at zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub delta: T,
    pub eta: Option<i8>,
}

impl<T: Scalar> Default for Params<T> {
    fn default() -> Self {
        Params {
            alpha: T::zero(),
            beta: T::zero(),
            gamma: T::zero(),
            delta: T::zero(),
            eta: None,
        }
    }
}

impl<T: Scalar> Params<T> {
    /// η as a scalar; zero when absent (only G4 reads it).
    pub fn eta_scalar(&self) -> T {
        T::from_int(i64::from(self.eta.unwrap_or(0)))
    }
}

/// A 3-dimensional Lie algebra in the fixed pseudo-orthonormal frame:
/// `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ` (indices 0-based in code, 1-based in docs).
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra3<T> {
    pub c: [[[T; 3]; 3]; 3],
    pub family: Family,
    pub params: Params<T>,
}

/// Ordered (name, exact value) pairs of the parameters a family actually
/// reads, for reports and certificates. Custom algebras carry no parameters.
pub fn param_list<T: Scalar>(family: Family, p: &Params<T>) -> Vec<(&'static str, String)> {
    let mut out = vec![
        ("alpha", format!("{}", p.alpha)),
        ("beta", format!("{}", p.beta)),
    ];
    match family {
        Family::G1 => {}
        Family::G2 | Family::G3 => out.push(("gamma", format!("{}", p.gamma))),
        Family::G4 => out.push(("eta", format!("{:+}", p.eta.unwrap_or(0)))),
        Family::G5 | Family::G6 | Family::G7 => {
            out.push(("gamma", format!("{}", p.gamma)));
            out.push(("delta", format!("{}", p.delta)));
        }
        Family::Custom => out.clear(),
    }
    out
}

/// Which inequality/equation a family's parameters must satisfy, as text.
pub fn family_constraint_text(family: Family) -> &'static str {
    match family {
        Family::G1 => "α≠0",
        Family::G2 => "γ≠0",
        Family::G3 => "(none enforced)",
        Family::G4 => "η∈{−1,+1}",
        Family::G5 => "α+δ≠0, αγ+βδ=0",
        Family::G6 => "α+δ≠0, αγ−βδ=0",
        Family::G7 => "α+δ≠0, αγ=0",
        Family::Custom => "Jacobi identity",
    }
}

/// Families where the bundled reference catalog lists a constraint that the
/// engine deliberately does not enforce; surfaced in report metadata.
pub fn family_constraint_note(family: Family) -> Option<&'static str> {
    match family {
        Family::G3 => Some(
            "the reference catalog lists α≠0 for G3, but its own G3 case \
             analysis covers α=0; the constraint is recorded and not enforced",
        ),
        _ => None,
    }
}

fn check_constraints<T: Scalar>(family: Family, p: &Params<T>) -> Result<()> {
    let violated = |txt: &str| Err(Error::ConstraintViolation(txt.to_string()));
    match family {
        Family::G1 => {
            if p.alpha.is_zero() {
                return violated("α≠0");
            }
        }
        Family::G2 => {
            if p.gamma.is_zero() {
                return violated("γ≠0");
            }
        }
        Family::G3 => {}
        Family::G4 => match p.eta {
            Some(1) | Some(-1) => {}
            _ => return violated("η∈{−1,+1}"),
        },
        Family::G5 => {
            if (p.alpha.clone() + p.delta.clone()).is_zero() {
                return violated("α+δ≠0");
            }
            if !(p.alpha.clone() * p.gamma.clone() + p.beta.clone() * p.delta.clone()).is_zero() {
                return violated("αγ+βδ=0");
            }
        }
        Family::G6 => {
            if (p.alpha.clone() + p.delta.clone()).is_zero() {
                return violated("α+δ≠0");
            }
            if !(p.alpha.clone() * p.gamma.clone() - p.beta.clone() * p.delta.clone()).is_zero() {
                return violated("αγ−βδ=0");
            }
        }
        Family::G7 => {
            if (p.alpha.clone() + p.delta.clone()).is_zero() {
                return violated("α+δ≠0");
            }
            if !(p.alpha.clone() * p.gamma.clone()).is_zero() {
                return violated("αγ=0");
            }
        }
        Family::Custom => {}
    }
    if family != Family::G4 && p.eta.is_some() {
        return violated("η is only a G4 parameter");
    }
    Ok(())
}

/// Basis bracket table of a catalog family: ([e₁,e₂], [e₁,e₃], [e₂,e₃]).
fn catalog_brackets<T: Scalar>(family: Family, p: &Params<T>) -> (Vec3<T>, Vec3<T>, Vec3<T>) {
    let a = || p.alpha.clone();
    let b = || p.beta.clone();
    let g = || p.gamma.clone();
    let d = || p.delta.clone();
    let z = T::zero;
    match family {
        Family::G1 => (
            [a(), z(), -b()],
            [-a(), -b(), z()],
            [b(), a(), a()],
        ),
        Family::G2 => (
            [z(), g(), -b()],
            [z(), -b(), -g()],
            [a(), z(), z()],
        ),
        Family::G3 => (
            [z(), z(), g()],
            [z(), -b(), z()],
            [a(), z(), z()],
        ),
        Family::G4 => {
            let two_eta = T::from_int(2) * p.eta_scalar();
            (
                [z(), -T::one(), two_eta - b()],
                [z(), -b(), T::one()],
                [a(), z(), z()],
            )
        }
        Family::G5 => (
            [z(), z(), z()],
            [a(), b(), z()],
            [g(), d(), z()],
        ),
        Family::G6 => (
            [z(), a(), b()],
            [z(), g(), d()],
            [z(), z(), z()],
        ),
        Family::G7 => (
            [-a(), -b(), -b()],
            [a(), b(), b()],
            [g(), d(), d()],
        ),
        Family::Custom => unreachable!("Custom algebras are built from raw constants"),
    }
}

fn constants_from_pairs<T: Scalar>(
    c12: Vec3<T>,
    c13: Vec3<T>,
    c23: Vec3<T>,
) -> [[[T; 3]; 3]; 3] {
    let mut c: [[[T; 3]; 3]; 3] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| T::zero())));
    let pairs = [(0usize, 1usize, c12), (0, 2, c13), (1, 2, c23)];
    for (i, j, v) in pairs {
        for k in 0..3 {
            c[i][j][k] = v[k].clone();
            c[j][i][k] = -v[k].clone();
        }
    }
    c
}

/// Build a catalog algebra, checking the family's printed constraints and
/// then the Jacobi identity (always satisfied for valid catalog input).
pub fn make_group<T: Scalar>(family: Family, params: Params<T>) -> Result<LieAlgebra3<T>> {
    if family == Family::Custom {
        return Err(Error::ConfigError(
            "Custom algebras take raw structure constants; use custom_group".into(),
        ));
    }
    check_constraints(family, &params)?;
    let (c12, c13, c23) = catalog_brackets(family, &params);
    let algebra = LieAlgebra3 {
        c: constants_from_pairs(c12, c13, c23),
        family,
        params,
    };
    ensure_jacobi(&algebra)?;
    Ok(algebra)
}

/// Build an algebra from raw bracket coefficients [e₁,e₂], [e₁,e₃], [e₂,e₃].
/// The Jacobi identity is enforced, not assumed.
pub fn custom_group<T: Scalar>(c12: Vec3<T>, c13: Vec3<T>, c23: Vec3<T>) -> Result<LieAlgebra3<T>> {
    let algebra = LieAlgebra3 {
        c: constants_from_pairs(c12, c13, c23),
        family: Family::Custom,
        params: Params::default(),
    };
    ensure_jacobi(&algebra)?;
    Ok(algebra)
}

fn ensure_jacobi<T: Scalar>(a: &LieAlgebra3<T>) -> Result<()> {
    let defect = jacobi_defect(a);
    for (which, v) in defect.iter().enumerate() {
        for (k, x) in v.iter().enumerate() {
            if !x.is_zero() {
                return Err(Error::JacobiFailure(format!(
                    "cyclic term {} has nonzero e{} component {}",
                    which + 1,
                    k + 1,
                    x
                )));
            }
        }
    }
    Ok(())
}

/// Bracket of two arbitrary frame vectors: bilinear extension of the basis
/// table, [x, y] = Σᵢⱼ xᵢ yⱼ [eᵢ, eⱼ].
pub fn bracket<T: Scalar>(x: &Vec3<T>, y: &Vec3<T>, a: &LieAlgebra3<T>) -> Vec3<T> {
    let mut out: Vec3<T> = std::array::from_fn(|_| T::zero());
    for i in 0..3 {
        for j in 0..3 {
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = slot.clone() + x[i].clone() * y[j].clone() * a.c[i][j][k].clone();
            }
        }
    }
    out
}

/// The Jacobi defect Σ_cyc [e_x, [e_y, e_z]] for the three cyclic rotations
/// of (e₁, e₂, e₃). All three entries are zero exactly iff Jacobi holds.
pub fn jacobi_defect<T: Scalar>(a: &LieAlgebra3<T>) -> [Vec3<T>; 3] {
    let rotations = [[0usize, 1, 2], [1, 2, 0], [2, 0, 1]];
    std::array::from_fn(|r| {
        let [i, j, k] = rotations[r];
        let mut total: Vec3<T> = std::array::from_fn(|_| T::zero());
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            // [e_x, [e_y, e_z]] = Σ_m c[y][z][m] [e_x, e_m]
            for m in 0..3 {
                for (l, slot) in total.iter_mut().enumerate() {
                    *slot = slot.clone() + a.c[y][z][m].clone() * a.c[x][m][l].clone();
                }
            }
        }
        total
    })
}
