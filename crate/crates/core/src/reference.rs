//! Bundled closed-form reference expectations for the catalog families:
//! Ricci operator matrices, Lie-derivative component tables, and the 2×2
//! determinant blocks (A, B, C, D) with their printed determinant values.
//!
//! The pipeline is the ground truth. These formulas are a fixed data set the
//! engine is cross-checked against; where the two disagree, the check
//! functions return [`LemmaDiscrepancy`] records carrying exact,
//! pencil-checkable certificates instead of silently repairing either side.
//! Known divergences localized by this crate's test suite: the G3 matrices
//! and tables (a global sign-convention difference in one structure
//! constant), one G6 canonical table component, one G7 Kobayashi–Nomizu
//! table component, and several printed determinant values.

use crate::algebra::{param_list, Family, LieAlgebra3, Params, CATALOG_FAMILIES};
use crate::connection::Flavor;
use crate::curvature::{operator_to_form, symmetric_ricci, BilinearForm, OperatorMatrix};
use crate::metric::basis_vec;
use crate::sample::sample_group;
use crate::scalar::{format_rational, Rational, Scalar};
use crate::solver::lie_derivative_form;

fn ri(n: i64) -> Rational {
    <Rational as Scalar>::from_int(n)
}

fn rq(n: i64, d: i64) -> Rational {
    <Rational as Scalar>::frac(n, d)
}

fn half(x: &Rational) -> Rational {
    x / &ri(2)
}

fn quarter(x: &Rational) -> Rational {
    x / &ri(4)
}

fn dbl(x: &Rational) -> Rational {
    x * &ri(2)
}

/// Σ coef·xᵖ·yᑫ with integer coefficients.
fn poly2(terms: &[(i64, u32, u32)], x: &Rational, y: &Rational) -> Rational {
    let mut acc = ri(0);
    for &(coef, px, py) in terms {
        let mut t = ri(coef);
        for _ in 0..px {
            t = &t * x;
        }
        for _ in 0..py {
            t = &t * y;
        }
        acc = &acc + &t;
    }
    acc
}

/// Σ coef·xᵖ·yᑫ·zʳ with integer coefficients.
fn poly3(terms: &[(i64, u32, u32, u32)], x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let mut acc = ri(0);
    for &(coef, px, py, pz) in terms {
        let mut t = ri(coef);
        for _ in 0..px {
            t = &t * x;
        }
        for _ in 0..py {
            t = &t * y;
        }
        for _ in 0..pz {
            t = &t * z;
        }
        acc = &acc + &t;
    }
    acc
}

/// The reference Ricci operator matrix for a catalog (family, flavor) pair,
/// evaluated at the given parameters. `None` when no reference matrix exists
/// (Levi-Civita flavor, Custom family, or G4 without η).
pub fn reference_ricci_operator(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<OperatorMatrix<Rational>> {
    let kn = match flavor {
        Flavor::LeviCivita => return None,
        Flavor::Canonical => false,
        Flavor::KobayashiNomizu => true,
    };
    let z = ri(0);
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let a2 = al * al;
    let b2 = be * be;
    let g2 = ga * ga;
    let a = match family {
        Family::G1 => {
            let ab = al * be;
            if !kn {
                let diag = -(&a2 + &half(&b2));
                [
                    [diag.clone(), z.clone(), -quarter(&ab)],
                    [z.clone(), diag, -half(&a2)],
                    [quarter(&ab), half(&a2), z],
                ]
            } else {
                let diag = -(&a2 + &b2);
                [
                    [diag.clone(), ab.clone(), half(&ab)],
                    [ab.clone(), diag, -half(&a2)],
                    [-half(&ab), half(&a2), z],
                ]
            }
        }
        Family::G2 => {
            let ab = al * be;
            if !kn {
                let diag = -(&g2 + &half(&ab));
                let k = &quarter(&(al * ga)) - &half(&(be * ga));
                [
                    [diag.clone(), z.clone(), z.clone()],
                    [z.clone(), diag, k.clone()],
                    [z, -k, ri(0)],
                ]
            } else {
                let k = half(&(al * ga));
                [
                    [-(&b2 + &g2), z.clone(), z.clone()],
                    [z.clone(), -(&g2 + &ab), k.clone()],
                    [z, -k, ri(0)],
                ]
            }
        }
        Family::G3 => {
            // a₁ = (α−β−γ)/2, a₂ = (α−β+γ)/2, a₃ = (α+β−γ)/2
            let a1 = half(&(&(al - be) - ga));
            let a2q = half(&(&(al - be) + ga));
            let a3 = half(&(&(al + be) - ga));
            if !kn {
                let d = -(ga * &a3);
                [
                    [d.clone(), z.clone(), z.clone()],
                    [z.clone(), d, z.clone()],
                    [z.clone(), z.clone(), z],
                ]
            } else {
                [
                    [ga * &(&a1 - &a3), z.clone(), z.clone()],
                    [z.clone(), -(ga * &(&a2q + &a3)), z.clone()],
                    [z.clone(), z.clone(), z],
                ]
            }
        }
        Family::G4 => {
            // b₁ = α/2+η−β, b₂ = α/2−η, b₃ = α/2+η, with η = ±1
            p.eta?;
            let et = p.eta_scalar();
            let b1 = &(&half(al) + &et) - be;
            let b2q = &half(al) - &et;
            let b3 = &half(al) + &et;
            if !kn {
                let d = &(&(&dbl(&et) - be) * &b3) - &ri(1);
                let k = half(&(be - &b3));
                [
                    [d.clone(), z.clone(), z.clone()],
                    [z.clone(), d, k.clone()],
                    [z, -k, ri(0)],
                ]
            } else {
                let bm = be - &dbl(&et);
                let m11 = -(&ri(1) + &(&bm * &(&b3 - &b1)));
                let m22 = -(&ri(1) + &(&bm * &(&b2q + &b3)));
                let k = half(&(&(&(&b1 + be) - al) - &b3));
                [
                    [m11, z.clone(), z.clone()],
                    [z.clone(), m22, k.clone()],
                    [z, -k, ri(0)],
                ]
            }
        }
        Family::G5 => [
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z],
        ],
        Family::G6 => {
            if !kn {
                let diag = &half(&(be * &(be - ga))) - &a2;
                let k = half(&(&(ga * al) - &half(&(de * &(be - ga)))));
                [
                    [diag.clone(), z.clone(), z.clone()],
                    [z.clone(), diag, k.clone()],
                    [z, -k, ri(0)],
                ]
            } else {
                [
                    [-(&a2 + &(be * ga)), z.clone(), z.clone()],
                    [z.clone(), -a2, z.clone()],
                    [z.clone(), z.clone(), z],
                ]
            }
        }
        Family::G7 => {
            if !kn {
                let q = &a2 + &half(&(be * ga));
                let w = half(&(&(ga * al) + &half(&(de * ga))));
                [
                    [-q.clone(), z.clone(), w.clone()],
                    [z, -q.clone(), -half(&q)],
                    [-w, half(&q), ri(0)],
                ]
            } else {
                let d2 = de * de;
                let m01 = half(&(&(be * de) - &(al * be)));
                let m02 = -(be * &(al + de));
                let m12 = -half(&(&(&(be * ga) + &(al * de)) + &dbl(&d2)));
                [
                    [-a2.clone(), m01.clone(), m02.clone()],
                    [m01, -(&(&a2 + &b2) + &(be * ga)), m12.clone()],
                    [-m02, -m12, z],
                ]
            }
        }
        Family::Custom => return None,
    };
    Some(OperatorMatrix { a })
}

/// The reference Ricci operator converted to a bilinear form (row convention).
pub fn reference_ricci_form(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<BilinearForm<Rational>> {
    Some(operator_to_form(&reference_ricci_operator(family, flavor, p)?))
}

/// The reference Lie-derivative component tables: three symmetric forms
/// L_{e₁}Ric̃, L_{e₂}Ric̃, L_{e₃}Ric̃ per (family, flavor), evaluated at the
/// given parameters. Components the tables leave unlisted are zero; the G5
/// tables are identically zero.
pub fn reference_lie_table(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<[BilinearForm<Rational>; 3]> {
    let kn = match flavor {
        Flavor::LeviCivita => return None,
        Flavor::Canonical => false,
        Flavor::KobayashiNomizu => true,
    };
    if family == Family::Custom {
        return None;
    }
    if family == Family::G4 {
        p.eta?;
    }
    let mut l: [BilinearForm<Rational>; 3] = std::array::from_fn(|_| BilinearForm::zero());
    {
        let mut set = |k: usize, i: usize, j: usize, v: Rational| {
            l[k].t[i][j] = v.clone();
            l[k].t[j][i] = v;
        };
        let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
        let a2 = al * al;
        let b2 = be * be;
        let g2 = ga * ga;
        let d2 = de * de;
        match (family, kn) {
            (Family::G1, false) => {
                let u = al * &(&a2 + &half(&b2)); // α(α²+β²/2)
                let v = al * &(&a2 + &(&b2 * &rq(3, 4))); // α(α²+¾β²)
                let w = al * &(&a2 + &b2); // α(α²+β²)
                let ab2 = &a2 * be; // α²β
                set(0, 0, 1, v.clone());
                set(0, 0, 2, -u.clone());
                set(0, 1, 1, ab2.clone());
                set(0, 1, 2, -(be * &(&(&a2 * &rq(5, 4)) + &half(&b2))));
                set(0, 2, 2, &ab2 * &rq(3, 2));
                set(1, 0, 0, -dbl(&v));
                set(1, 0, 1, -half(&ab2));
                set(1, 0, 2, be * &(&a2 + &half(&b2)));
                set(1, 1, 2, half(&w));
                set(1, 2, 2, -u.clone());
                set(2, 0, 0, dbl(&u));
                set(2, 0, 1, quarter(&ab2));
                set(2, 0, 2, -(&ab2 * &rq(3, 4)));
                set(2, 1, 1, -w);
                set(2, 1, 2, half(&u));
            }
            (Family::G1, true) => {
                let u = al * &(&a2 + &half(&b2)); // α(α²+β²/2)
                let a3 = &a2 * al; // α³
                let b3 = &b2 * be; // β³
                let ab2 = &a2 * be; // α²β
                set(0, 0, 1, u.clone());
                set(0, 0, 2, -a3.clone());
                set(0, 1, 1, -ab2.clone());
                set(0, 1, 2, be * &(&half(&a2) - &b2));
                set(1, 0, 0, -dbl(&u));
                set(1, 0, 1, half(&ab2));
                set(1, 0, 2, b3);
                set(1, 1, 2, half(&a3));
                set(1, 2, 2, al * &(&b2 - &a2));
                set(2, 0, 0, dbl(&a3));
                set(2, 0, 1, -half(&ab2));
                set(2, 1, 1, -a3);
                set(2, 1, 2, half(&(al * &(&a2 - &b2))));
            }
            (Family::G2, false) => {
                let ab = al * be;
                set(0, 1, 1, ga * &(&(&dbl(&g2) + &b2) + &half(&ab)));
                set(0, 1, 2, -(be * &(&g2 + &half(&ab))));
                set(0, 2, 2, be * &(&(be * ga) - &half(&(al * ga))));
                set(1, 0, 1, -(ga * &(&(&g2 + &half(&b2)) + &quarter(&ab))));
                set(
                    1,
                    0,
                    2,
                    &half(&(&g2 * &(be + &(al * &rq(3, 2))))) + &half(&(&a2 * be)),
                );
                set(
                    2,
                    0,
                    1,
                    &half(&(&g2 * &(be - &(al * &rq(3, 2))))) + &half(&(&ab * &(be - al))),
                );
                set(2, 0, 2, half(&(&(be * ga) * &(&half(al) - be))));
            }
            (Family::G2, true) => {
                let ab = al * be;
                set(0, 1, 1, dbl(&(ga * &(&g2 + &half(&ab)))));
                set(0, 1, 2, -(be * &(&g2 + &ab)));
                set(0, 2, 2, -(&ab * ga));
                set(1, 0, 1, -(ga * &(&g2 + &half(&ab))));
                set(1, 0, 2, al * &(&b2 + &half(&g2)));
                set(2, 0, 1, &g2 * &(be - &half(al)));
                set(2, 0, 2, half(&(&ab * ga)));
            }
            (Family::G3, false) => {
                let a3 = half(&(&(al + be) - ga));
                let f = ga * &a3;
                set(0, 1, 2, -(be * &f));
                set(1, 0, 2, al * &f);
                set(2, 0, 1, &(be - al) * &f);
            }
            (Family::G3, true) => {
                let a1 = half(&(&(al - be) - ga));
                let a2q = half(&(&(al - be) + ga));
                let a3 = half(&(&(al + be) - ga));
                let s = &a2q + &a3;
                let d31 = &a3 - &a1;
                set(0, 1, 2, -(&(be * ga) * &s));
                set(1, 0, 2, &(al * ga) * &d31);
                set(2, 0, 1, &(&(be * ga) * &s) - &(&(al * ga) * &d31));
            }
            (Family::G4, false) => {
                let et = p.eta_scalar();
                let b3 = &half(al) + &et;
                let tb = &dbl(&et) - be; // 2η−β
                let bm = be - &dbl(&et); // β−2η
                let d11 = &(&tb * &b3) - &ri(1); // (2η−β)b₃−1
                set(0, 1, 1, &(&tb * &(&b3 + be)) - &ri(2));
                set(0, 1, 2, be * &d11);
                set(0, 2, 2, be * &(&b3 - be));
                set(1, 0, 1, &(&(&b3 + be) * &(&half(be) - &et)) + &ri(1));
                set(
                    1,
                    0,
                    2,
                    &(al * &(&(&bm * &b3) + &ri(1))) + &half(&(be - &b3)),
                );
                set(2, 0, 1, &(&(al - be) * &d11) + &half(&(&b3 - be)));
                set(2, 0, 2, half(&(be * &(be - &b3))));
            }
            (Family::G4, true) => {
                let et = p.eta_scalar();
                let bm = be - &dbl(&et); // β−2η
                let abm = al * &bm; // α(β−2η)
                set(0, 1, 1, -(&ri(2) + &abm));
                set(0, 1, 2, -(be * &(&ri(1) + &abm)));
                set(0, 2, 2, al * be);
                set(1, 0, 1, &ri(1) + &half(&abm));
                set(1, 0, 2, al * &(&rq(1, 2) + &(be * &bm)));
                set(2, 0, 1, be - &half(al));
                set(2, 0, 2, -half(&(al * be)));
            }
            (Family::G5, _) => {}
            (Family::G6, false) => {
                let a3 = &a2 * al; // α³
                let bg = be * ga;
                let bmg = be - ga;
                let gmb = ga - be;
                let kk = &half(&(de * &bmg)) - &(al * ga); // −αγ+δ(β−γ)/2
                set(
                    0,
                    1,
                    1,
                    &(&dbl(&a3) + &(al * &bg)) - &(&(be * &bmg) * &(al + &half(de))),
                );
                set(
                    0,
                    1,
                    2,
                    &half(&(&(al * ga) * &(&(al * &ri(3)) + de)))
                        + &half(&(&gmb * &(&(&(al * de) + &d2) + &bg))),
                );
                set(0, 2, 2, ga * &(&(al * ga) + &half(&(de * &gmb))));
                set(
                    1,
                    0,
                    1,
                    &(&(-a3.clone()) - &half(&(al * &bg)))
                        + &half(&(&(be * &bmg) * &(al + &half(de)))),
                );
                set(1, 0, 2, half(&(al * &kk)));
                set(
                    2,
                    0,
                    1,
                    &(&(-(&a2 * ga)) - &half(&(&(al * ga) * de)))
                        + &half(&(&bmg * &(&bg + &half(&d2)))),
                );
                set(2, 0, 2, half(&(ga * &kk)));
            }
            (Family::G6, true) => {
                let a3 = &a2 * al;
                set(0, 1, 1, dbl(&a3));
                set(0, 1, 2, &a2 * ga);
                set(1, 0, 1, -a3);
                set(2, 0, 1, -(&a2 * ga));
            }
            (Family::G7, false) => {
                let a3 = &a2 * al; // α³
                let bg = be * ga;
                let q = &a2 + &half(&bg); // α²+βγ/2
                let bdg = &(be * de) * ga; // βδγ
                set(0, 0, 1, -(&a3 + &quarter(&bdg)));
                set(0, 0, 2, &a3 + &quarter(&bdg));
                set(0, 1, 1, -(be * &q));
                set(0, 1, 2, be * &q);
                set(0, 2, 2, -(be * &q));
                set(1, 0, 0, &dbl(&a3) + &half(&bdg));
                set(1, 0, 1, half(&(be * &q)));
                set(
                    1,
                    0,
                    2,
                    &quarter(&(ga * &(&d2 - &b2))) + &half(&(be * &(&g2 - &a2))),
                );
                set(1, 1, 2, half(&(de * &q)));
                set(1, 2, 2, de * &(&(&half(&g2) - &a2) - &half(&bg)));
                set(2, 0, 0, -(&dbl(&a3) + &half(&bdg)));
                set(
                    2,
                    0,
                    1,
                    -(&(&(ga + &half(be)) * &q) + &quarter(&(&d2 * ga))),
                );
                set(2, 0, 2, half(&(be * &q)));
                set(2, 1, 1, -(de * &q));
                set(2, 1, 2, &half(&(de * &q)) - &quarter(&(de * &g2)));
            }
            (Family::G7, true) => {
                let a3 = &a2 * al; // α³
                let bg = be * ga;
                let ad = al * de;
                let e = &b2 * &(&(de * &ri(3)) + al); // β²(3δ+α)
                set(0, 0, 1, &half(&e) - &a3);
                set(0, 0, 2, &a3 - &half(&e));
                set(
                    0,
                    1,
                    1,
                    be * &(&(&(&(&dbl(&ad) - &(&a2 * &ri(3))) - &dbl(&b2)) - &bg) + &dbl(&d2)),
                );
                set(
                    0,
                    1,
                    2,
                    be * &(&(&(&(&a2 * &rq(5, 2)) + &half(&ad)) + &b2) + &bg),
                );
                set(
                    0,
                    2,
                    2,
                    -(be * &(&(&(&dbl(&a2) + &(&ad * &ri(3))) + &bg) + &dbl(&d2))),
                );
                set(1, 0, 0, &dbl(&a2) - &e); // table lists 2α², unlike the 2α³ elsewhere
                set(
                    1,
                    0,
                    1,
                    half(&(be * &(&(&(&(&(&a2 * &ri(3)) + &dbl(&b2)) + &bg) - &dbl(&ad)) - &dbl(&d2)))),
                );
                set(
                    1,
                    0,
                    2,
                    -(be * &(&(&(&a2 + &(&d2 * &rq(5, 2))) + &dbl(&ad)) + &half(&bg))),
                );
                set(1, 1, 2, de * &(&(&(&a2 + &b2) - &d2) - &half(&ad)));
                set(1, 2, 2, -(de * &(&(&(&bg * &ri(3)) + &ad) + &dbl(&d2))));
                set(2, 0, 0, &e - &dbl(&a3));
                set(
                    2,
                    0,
                    1,
                    half(&(be * &(&(&(&(&(&d2 * &ri(5)) - &(&a2 * &ri(3))) - &dbl(&b2)) - &bg) + &(&ad * &ri(3))))),
                );
                set(
                    2,
                    0,
                    2,
                    half(&(be * &(&(&(&dbl(&a2) + &(&ad * &ri(3))) + &bg) + &dbl(&d2)))),
                );
                set(2, 1, 1, de * &(&(&(&dbl(&d2) + &ad) - &dbl(&a2)) - &dbl(&b2)));
                set(2, 1, 2, half(&(de * &(&(&(&bg * &ri(3)) + &ad) + &dbl(&d2)))));
            }
            (Family::Custom, _) => unreachable!("filtered above"),
        }
    }
    Some(l)
}

/// A 2×2 subsystem abbreviation block (A, B, C, D) from a case analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct DetBlock {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl DetBlock {
    /// AD − BC, expanded exactly.
    pub fn det(&self) -> Rational {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }
}

/// Which (family, flavor) pairs carry a reference determinant block.
pub fn has_det_reference(family: Family, flavor: Flavor) -> bool {
    matches!(
        (family, flavor),
        (Family::G2, Flavor::Canonical)
            | (Family::G2, Flavor::KobayashiNomizu)
            | (Family::G4, Flavor::Canonical)
            | (Family::G4, Flavor::KobayashiNomizu)
            | (Family::G6, Flavor::Canonical)
    )
}

/// The encoded A, B, C, D abbreviations at the given parameters.
pub fn reference_det_block(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<DetBlock> {
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    match (family, flavor) {
        (Family::G2, Flavor::Canonical) => {
            let g2 = ga * ga;
            Some(DetBlock {
                a: ga * &(&(&dbl(&g2) + &(be * be)) + &half(&(al * be))),
                b: &(&g2 * &(&(al * &rq(3, 2)) - be)) + &(&(al * be) * &(al - be)),
                c: &(&g2 * &(be + &(al * &rq(3, 2)))) + &(&(al * al) * be),
                d: &(be * ga) * &(&half(al) - be),
            })
        }
        (Family::G2, Flavor::KobayashiNomizu) => Some(DetBlock {
            a: &dbl(&(ga * ga)) + &(al * be),
            b: ga * &(al - &dbl(be)),
            c: &dbl(&(be * be)) + &(ga * ga),
            d: be * ga,
        }),
        (Family::G4, Flavor::Canonical) => {
            p.eta?;
            let et = p.eta_scalar();
            let h = half(al); // α/2
            Some(DetBlock {
                a: &(&(&(&h + &et) + be) * &(&half(be) - &et)) + &ri(1),
                b: &(&(al - be) * &(&(&(&dbl(&et) - be) * &(&h + &et)) - &ri(1)))
                    + &half(&(&(&h + &et) - be)),
                c: &(al * &(&(&(be - &dbl(&et)) * &(&h + &et)) + &ri(1)))
                    + &half(&(&(be - &h) - &et)),
                d: half(&(be * &(&(be - &h) - &et))),
            })
        }
        (Family::G4, Flavor::KobayashiNomizu) => {
            p.eta?;
            let et = p.eta_scalar();
            Some(DetBlock {
                a: &ri(1) + &half(&(al * &(be - &dbl(&et)))),
                b: be - &half(al),
                c: &rq(1, 2) + &(be * &(be - &dbl(&et))),
                d: -half(be),
            })
        }
        (Family::G6, Flavor::Canonical) => {
            let a2 = al * al;
            let bmg = be - ga;
            let kk = &half(&(de * &bmg)) - &(al * ga); // −αγ+δ(β−γ)/2
            Some(DetBlock {
                a: &(&(-(&a2 * al)) - &half(&(al * &(be * ga))))
                    + &half(&(&(be * &bmg) * &(al + &half(de)))),
                b: &(&(-(&a2 * ga)) - &half(&(&(al * ga) * de)))
                    + &half(&(&bmg * &(&(be * ga) + &half(&(de * de))))),
                c: half(&(al * &kk)),
                d: half(&(ga * &kk)),
            })
        }
        _ => None,
    }
}

/// The determinant value printed next to each A, B, C, D block, evaluated at
/// the given parameters. The pipeline-side counterpart is
/// `reference_det_block(..).det()`; the two are compared by the identity
/// checks and are not equal everywhere.
pub fn reference_printed_det(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<Rational> {
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    match (family, flavor) {
        (Family::G2, Flavor::Canonical) => Some(poly3(
            &[
                (4, 4, 2, 0),
                (-4, 3, 3, 0),
                (12, 3, 1, 2),
                (-7, 2, 2, 2),
                (9, 2, 4, 0),
                (-4, 1, 3, 2),
                (4, 1, 1, 4),
                (4, 0, 4, 2),
                (4, 0, 2, 4),
            ],
            al,
            be,
            ga,
        )),
        (Family::G2, Flavor::KobayashiNomizu) => {
            Some(&(al - &(be * &ri(4))) * &(&(be * be) + &(ga * ga)))
        }
        (Family::G4, Flavor::Canonical) => {
            let plus: [(i64, u32, u32); 20] = [
                (4, 4, 2),
                (-16, 4, 1),
                (16, 4, 0),
                (-4, 3, 3),
                (32, 3, 2),
                (-68, 3, 1),
                (40, 3, 0),
                (-16, 2, 3),
                (73, 2, 2),
                (-98, 2, 1),
                (41, 2, 0),
                (-20, 1, 3),
                (60, 1, 2),
                (-60, 1, 1),
                (20, 1, 0),
                (4, 0, 4),
                (-16, 0, 3),
                (24, 0, 2),
                (-16, 0, 1),
                (4, 0, 0),
            ];
            let minus: [(i64, u32, u32); 20] = [
                (4, 4, 2),
                (16, 4, 1),
                (16, 4, 0),
                (-4, 3, 3),
                (-32, 3, 2),
                (-68, 3, 1),
                (-40, 3, 0),
                (16, 2, 3),
                (73, 2, 2),
                (98, 2, 1),
                (41, 2, 0),
                (-20, 1, 3),
                (-60, 1, 2),
                (-60, 1, 1),
                (-20, 1, 0),
                (4, 0, 4),
                (16, 0, 3),
                (24, 0, 2),
                (16, 0, 1),
                (4, 0, 0),
            ];
            match p.eta? {
                1 => Some(poly2(&plus, al, be)),
                -1 => Some(poly2(&minus, al, be)),
                _ => None,
            }
        }
        (Family::G4, Flavor::KobayashiNomizu) => {
            p.eta?;
            let et = p.eta_scalar();
            Some(&(&quarter(al) - be) * &(&(be - &et) * &(be - &et)))
        }
        (Family::G6, Flavor::Canonical) => Some(
            &quarter(ga) * &(&(al + de) * &(&(al * de) - &(be * ga))),
        ),
        _ => None,
    }
}

/// One exactly-evaluated divergence between the pipeline and a bundled
/// reference expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaDiscrepancy {
    pub family: Family,
    pub flavor: Flavor,
    /// Parameter point, as ordered (name, exact value) pairs.
    pub point: Vec<(&'static str, String)>,
    /// Which component or identity diverged, e.g. "Ric~(1,1)" or "L_e2(1,1)".
    pub location: String,
    /// The bundled reference value at the point.
    pub reference: String,
    /// The pipeline value at the point.
    pub computed: String,
    /// Self-contained exact data for pencil re-checking.
    pub certificate: String,
}

/// Render an ordered (name, value) parameter list as `"α=1, β=1/2"`.
pub fn point_text(point: &[(&'static str, String)]) -> String {
    point
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn form_rows(t: &BilinearForm<Rational>) -> String {
    (0..3)
        .map(|i| {
            format!(
                "[{}, {}, {}]",
                format_rational(&t.t[i][0]),
                format_rational(&t.t[i][1]),
                format_rational(&t.t[i][2])
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compare the pipeline symmetric Ricci form against the reference matrix at
/// the algebra's parameters. `None` when no reference matrix applies; `Some`
/// with one record per diverging component otherwise.
pub fn check_ricci_at(a: &LieAlgebra3<Rational>, flavor: Flavor) -> Option<Vec<LemmaDiscrepancy>> {
    let reference = reference_ricci_form(a.family, flavor, &a.params)?;
    let computed = symmetric_ricci(a, flavor);
    let point = param_list(a.family, &a.params);
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if reference.t[i][j] != computed.t[i][j] {
                let diff = &computed.t[i][j] - &reference.t[i][j];
                out.push(LemmaDiscrepancy {
                    family: a.family,
                    flavor,
                    point: point.clone(),
                    location: format!("Ric~({},{})", i + 1, j + 1),
                    reference: format_rational(&reference.t[i][j]),
                    computed: format_rational(&computed.t[i][j]),
                    certificate: format!(
                        "{} {} at {}: pipeline Ric~ rows {} vs reference rows {}; \
                         difference (computed - reference) at ({},{}) = {}",
                        a.family,
                        flavor,
                        point_text(&point),
                        form_rows(&computed),
                        form_rows(&reference),
                        i + 1,
                        j + 1,
                        format_rational(&diff)
                    ),
                });
            }
        }
    }
    Some(out)
}

/// Compare the pipeline Lie-derivative tables against the reference tables at
/// the algebra's parameters, componentwise over i ≤ j.
pub fn check_table_at(a: &LieAlgebra3<Rational>, flavor: Flavor) -> Option<Vec<LemmaDiscrepancy>> {
    let reference = reference_lie_table(a.family, flavor, &a.params)?;
    let t = symmetric_ricci(a, flavor);
    let computed: [BilinearForm<Rational>; 3] =
        std::array::from_fn(|k| lie_derivative_form(&t, &basis_vec(k), a));
    let point = param_list(a.family, &a.params);
    let mut out = Vec::new();
    for k in 0..3 {
        for i in 0..3 {
            for j in i..3 {
                if reference[k].t[i][j] != computed[k].t[i][j] {
                    let diff = &computed[k].t[i][j] - &reference[k].t[i][j];
                    out.push(LemmaDiscrepancy {
                        family: a.family,
                        flavor,
                        point: point.clone(),
                        location: format!("L_e{}({},{})", k + 1, i + 1, j + 1),
                        reference: format_rational(&reference[k].t[i][j]),
                        computed: format_rational(&computed[k].t[i][j]),
                        certificate: format!(
                            "{} {} at {}: Ric~ rows {}; pipeline L_e{} rows {} vs \
                             reference rows {}; difference at ({},{}) = {}",
                            a.family,
                            flavor,
                            point_text(&point),
                            form_rows(&t),
                            k + 1,
                            form_rows(&computed[k]),
                            form_rows(&reference[k]),
                            i + 1,
                            j + 1,
                            format_rational(&diff)
                        ),
                    });
                }
            }
        }
    }
    Some(out)
}

/// Compare the expanded determinant of the encoded A, B, C, D block against
/// the printed determinant value at one parameter point.
pub fn check_det_identity_at(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Option<Vec<LemmaDiscrepancy>> {
    let block = reference_det_block(family, flavor, p)?;
    let printed = reference_printed_det(family, flavor, p)?;
    let det = block.det();
    if det == printed {
        return Some(Vec::new());
    }
    let point = param_list(family, p);
    let cert = format!(
        "{} {} at {}: A={}, B={}, C={}, D={}; AD-BC = {} but the printed \
         closed form gives {}",
        family,
        flavor,
        point_text(&point),
        format_rational(&block.a),
        format_rational(&block.b),
        format_rational(&block.c),
        format_rational(&block.d),
        format_rational(&det),
        format_rational(&printed)
    );
    Some(vec![LemmaDiscrepancy {
        family,
        flavor,
        point,
        location: "AD-BC closed form".to_string(),
        reference: format_rational(&printed),
        computed: format_rational(&det),
        certificate: cert,
    }])
}

/// Which reference data set a check row covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    RicciMatrix,
    LieDerivativeTable,
    DeterminantIdentity,
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckKind::RicciMatrix => write!(f, "ricci-matrix"),
            CheckKind::LieDerivativeTable => write!(f, "lie-derivative-table"),
            CheckKind::DeterminantIdentity => write!(f, "determinant-identity"),
        }
    }
}

/// Aggregated result of one reference check over sampled points.
#[derive(Debug, Clone)]
pub struct LemmaCheck {
    pub family: Family,
    pub flavor: Flavor,
    pub kind: CheckKind,
    pub points_checked: usize,
    /// Points at which every compared component agreed exactly.
    pub clean_points: usize,
    pub discrepancies: Vec<LemmaDiscrepancy>,
}

impl LemmaCheck {
    fn new(family: Family, flavor: Flavor, kind: CheckKind) -> Self {
        LemmaCheck {
            family,
            flavor,
            kind,
            points_checked: 0,
            clean_points: 0,
            discrepancies: Vec::new(),
        }
    }

    fn record(&mut self, found: Vec<LemmaDiscrepancy>) {
        self.points_checked += 1;
        if found.is_empty() {
            self.clean_points += 1;
        } else {
            self.discrepancies.extend(found);
        }
    }

    /// Every discrepancy carries a non-empty certificate.
    pub fn fully_certified(&self) -> bool {
        self.discrepancies.iter().all(|d| !d.certificate.is_empty())
    }
}

/// Run every reference check over `points_per_check` seeded random admissible
/// points per (family, flavor): Ricci matrices, Lie-derivative tables, and —
/// where present — determinant identities.
pub fn check_lemmas(seed: u64, points_per_check: usize) -> Vec<LemmaCheck> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for family in CATALOG_FAMILIES {
        for flavor in [Flavor::Canonical, Flavor::KobayashiNomizu] {
            let mut ricci = LemmaCheck::new(family, flavor, CheckKind::RicciMatrix);
            let mut table = LemmaCheck::new(family, flavor, CheckKind::LieDerivativeTable);
            let mut dets = LemmaCheck::new(family, flavor, CheckKind::DeterminantIdentity);
            for _ in 0..points_per_check {
                let a = sample_group(&mut rng, family);
                if let Some(found) = check_ricci_at(&a, flavor) {
                    ricci.record(found);
                }
                if let Some(found) = check_table_at(&a, flavor) {
                    table.record(found);
                }
                if let Some(found) = check_det_identity_at(family, flavor, &a.params) {
                    dets.record(found);
                }
            }
            out.push(ricci);
            out.push(table);
            if has_det_reference(family, flavor) {
                out.push(dets);
            }
        }
    }
    out
}
