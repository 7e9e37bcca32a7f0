//! Lie derivatives of symmetric bilinear forms, the 6×3 collineation system,
//! and exact null spaces in canonical (RREF) form.

use crate::algebra::{bracket, LieAlgebra3};
use crate::connection::Flavor;
use crate::curvature::{symmetric_ricci, BilinearForm};
use crate::metric::{basis_vec, Vec3};
use crate::scalar::Scalar;

/// Independent components (i,j) with i ≤ j, in the fixed row order
/// (1,1), (1,2), (1,3), (2,2), (2,3), (3,3) (0-based in code).
pub const ROW_PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// The 6×3 system whose null space is the collineation space: the entry at
/// row (i,j), column k is (L_{eₖ}t)(eᵢ,eⱼ).
#[derive(Debug, Clone, PartialEq)]
pub struct CollineationSystem<T> {
    pub rows: [[T; 3]; 6],
}

/// A subspace of frame vectors in canonical form: the basis rows are the
/// nonzero rows of a reduced row echelon form (pivots ascending, pivot
/// entries 1), so two equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSpace<T> {
    pub dimension: usize,
    pub basis: Vec<Vec3<T>>,
}

impl<T: Scalar> SolutionSpace<T> {
    pub fn trivial() -> Self {
        SolutionSpace {
            dimension: 0,
            basis: Vec::new(),
        }
    }

    pub fn full() -> Self {
        SolutionSpace {
            dimension: 3,
            basis: (0..3).map(basis_vec).collect(),
        }
    }

    /// Canonicalize a spanning set (rows need not be independent).
    pub fn from_spanning(rows: &[Vec3<T>]) -> Self {
        let mat: Vec<Vec<T>> = rows.iter().map(|r| r.to_vec()).collect();
        let reduced = rref(&mat);
        let basis: Vec<Vec3<T>> = reduced
            .iter()
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .map(|row| std::array::from_fn(|i| row[i].clone()))
            .collect();
        SolutionSpace {
            dimension: basis.len(),
            basis,
        }
    }

    /// Exact membership test.
    pub fn contains(&self, v: &Vec3<T>) -> bool {
        // reduce v against the canonical basis rows
        let mut v = v.clone();
        for b in &self.basis {
            let pivot = b.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let coef = v[pivot].clone();
            if !coef.is_zero() {
                for i in 0..3 {
                    v[i] = v[i].clone() - coef.clone() * b[i].clone();
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Reduced row echelon form of an arbitrary rectangular exact matrix.
pub fn rref<T: Scalar>(mat: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut m: Vec<Vec<T>> = mat.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(src) = (pivot_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv_pivot = T::one() / m[pivot_row][col].clone();
        for x in &mut m[pivot_row] {
            *x = x.clone() * inv_pivot.clone();
        }
        for r in 0..nrows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let delta = factor.clone() * m[pivot_row][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        pivot_row += 1;
    }
    m
}

/// (L_ξ t)(eᵢ,eⱼ) = −t([ξ,eᵢ],eⱼ) − t(eᵢ,[ξ,eⱼ]) for a constant-component
/// tensor t in a left-invariant frame (the ξ(t(·,·)) term vanishes).
pub fn lie_derivative_form<T: Scalar>(
    t: &BilinearForm<T>,
    xi: &Vec3<T>,
    a: &LieAlgebra3<T>,
) -> BilinearForm<T> {
    let mut out = BilinearForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            let bi = bracket(xi, &basis_vec(i), a);
            let bj = bracket(xi, &basis_vec(j), a);
            out.t[i][j] = -t.eval(&bi, &basis_vec(j)) - t.eval(&basis_vec(i), &bj);
        }
    }
    out
}

/// Assemble the 6×3 system: column k holds the six independent components of
/// L_{eₖ}t in the fixed row order.
pub fn assemble_system<T: Scalar>(t: &BilinearForm<T>, a: &LieAlgebra3<T>) -> CollineationSystem<T> {
    let derivatives: [BilinearForm<T>; 3] =
        std::array::from_fn(|k| lie_derivative_form(t, &basis_vec(k), a));
    let rows: [[T; 3]; 6] = std::array::from_fn(|r| {
        let (i, j) = ROW_PAIRS[r];
        std::array::from_fn(|k| derivatives[k].t[i][j].clone())
    });
    CollineationSystem { rows }
}

/// Exact null space of the system in canonical form.
pub fn null_space<T: Scalar>(s: &CollineationSystem<T>) -> SolutionSpace<T> {
    let mat: Vec<Vec<T>> = s.rows.iter().map(|r| r.to_vec()).collect();
    let reduced = rref(&mat);
    // pivot column of each nonzero row
    let mut pivots: Vec<usize> = Vec::new();
    for row in &reduced {
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            pivots.push(p);
        }
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec3<T>> = Vec::new();
    for &f in &free {
        let mut v: Vec3<T> = std::array::from_fn(|_| T::zero());
        v[f] = T::one();
        for (row_idx, &p) in pivots.iter().enumerate() {
            v[p] = -reduced[row_idx][f].clone();
        }
        basis.push(v);
    }
    SolutionSpace::from_spanning(&basis)
}

/// Full pipeline: V_RC of the algebra's symmetrized Ricci form under the
/// chosen connection.
pub fn collineation_space<T: Scalar>(a: &LieAlgebra3<T>, flavor: Flavor) -> SolutionSpace<T> {
    let t = symmetric_ricci(a, flavor);
    null_space(&assemble_system(&t, a))
}
