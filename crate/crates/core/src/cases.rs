//! The encoded case catalog: for each catalog family and connection flavor,
//! the printed case predicates in their printed order, each mapping a
//! parameter region to a predicted collineation space.
//!
//! Encoding policy: predicates are transcribed verbatim — including the ones
//! the scan shows to be wrong — and evaluated first-match-wins in printed
//! order; "if and only if" statements get an explicit final complement case
//! predicting the trivial space. The computed null space, not this catalog,
//! is the ground truth; the catalog's purpose is to localize divergences.

use num_traits::Zero;

use crate::algebra::{Family, Params};
use crate::connection::Flavor;
use crate::error::{Error, Result};
use crate::metric::Vec3;
use crate::reference::reference_det_block;
use crate::scalar::{Rational, Scalar};
use crate::solver::SolutionSpace;

fn ri(n: i64) -> Rational {
    <Rational as Scalar>::from_int(n)
}

fn rq(n: i64, d: i64) -> Rational {
    <Rational as Scalar>::frac(n, d)
}

/// One printed case: a predicate region and its predicted space, as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCase {
    pub family: Family,
    pub flavor: Flavor,
    pub id: &'static str,
    pub condition: &'static str,
    pub prediction: &'static str,
}

const fn case(
    family: Family,
    flavor: Flavor,
    id: &'static str,
    condition: &'static str,
    prediction: &'static str,
) -> TheoremCase {
    TheoremCase {
        family,
        flavor,
        id,
        condition,
        prediction,
    }
}

use Family::{G1, G2, G3, G4, G5, G6, G7};
use Flavor::{Canonical as CAN, KobayashiNomizu as KN};

static CATALOG: [TheoremCase; 56] = [
    case(G1, CAN, "all", "any admissible (α, β)", "trivial"),
    case(G1, KN, "all", "any admissible (α, β)", "trivial"),
    case(G2, CAN, "1", "α=0, β=0", "span{e3}"),
    case(G2, CAN, "2", "α≠0, β≠0, AD−BC≠0", "span{e2 − (C/D)e3}"),
    case(G2, CAN, "complement", "otherwise", "trivial"),
    case(G2, KN, "1", "α=0, β=0", "span{e3}"),
    case(G2, KN, "2", "α=0, β≠0", "span{e2 + (γ/β)e3}"),
    case(G2, KN, "3", "α≠0, β≠0, α=4β", "span{e2 − ((2β²+γ²)/(βγ))e3}"),
    case(G2, KN, "complement", "otherwise", "trivial"),
    case(G3, CAN, "1", "γ=0", "full"),
    case(G3, CAN, "2", "γ≠0, α=0, β=0", "full"),
    case(G3, CAN, "3", "γ≠0, α=0, β≠0, β=γ", "full"),
    case(G3, CAN, "4", "γ≠0, α=0, β≠0, β≠γ", "span{e2}"),
    case(G3, CAN, "5", "γ≠0, α≠0, γ=α+β", "full"),
    case(G3, CAN, "6", "γ≠0, α≠0, γ≠α+β, α=β", "span{e3}"),
    case(G3, CAN, "complement", "otherwise", "trivial"),
    case(G3, KN, "1", "αβγ=0", "full"),
    case(G3, KN, "2", "αβγ≠0", "span{e3}"),
    case(G4, CAN, "1", "β=0, η=1, α=0", "span{e1}"),
    case(G4, CAN, "2", "β=0, η=1, (α+2)(α+1/4)=0", "span{e3}"),
    case(G4, CAN, "3", "β=0, η=−1, α=0", "span{e1}"),
    case(G4, CAN, "4", "β=0, η=−1, (α−2)(α−1/4)=0", "span{e3}"),
    case(G4, CAN, "5", "β≠0, η=1, α=0, β=1", "full"),
    case(G4, CAN, "6", "β≠0, η=1, α=2, β=2", "span{e3}"),
    case(G4, CAN, "7", "β≠0, η=1, α+2≠2β, AD−BC=0", "span{e2 − (C/D)e3}"),
    case(G4, CAN, "8", "β≠0, η=−1, α=0, β=−1", "full"),
    case(G4, CAN, "9", "β≠0, η=−1, α=−2, β=−2", "span{e3}"),
    case(G4, CAN, "10", "β≠0, η=−1, α−2≠2β, AD−BC=0", "span{e2 − (C/D)e3}"),
    case(G4, CAN, "complement", "otherwise", "trivial"),
    case(G4, KN, "1", "α=0, β=0", "span{e3}"),
    case(G4, KN, "2", "α=0, β≠0", "span{e2 − (1/β)e3}"),
    case(G4, KN, "3", "α≠0, β=0, αη=1", "span{e1}"),
    case(G4, KN, "4", "α≠0, β≠0, η=1, α=4β", "span{e2 + ((α²−8α+8)/(2α))e3}"),
    case(G4, KN, "5", "α≠0, β≠0, η=1, α=2, β=1", "span{e2 − e3}"),
    case(G4, KN, "6", "α≠0, β≠0, η=−1, α=4β", "span{e2 + ((α²+8α+8)/(2α))e3}"),
    case(G4, KN, "7", "α≠0, β≠0, η=−1, α=−2, β=−1", "span{e2 + e3}"),
    case(G4, KN, "complement", "otherwise", "trivial"),
    case(G5, CAN, "all", "any admissible (α, β, γ, δ)", "full"),
    case(G5, KN, "all", "any admissible (α, β, γ, δ)", "full"),
    case(G6, CAN, "1", "γ=0, α(2α²−β²)=0", "full"),
    case(G6, CAN, "2", "γ=0, α(2α²−β²)≠0", "span{e3}"),
    case(G6, CAN, "3", "γ≠0, α=0, β=0, δ≠0", "span{e2}"),
    case(G6, CAN, "4", "γ≠0, α≠0, α+β=0, γ+δ=0, δ≠0", "span{e2 + (α/δ)e3}"),
    case(G6, CAN, "5", "γ≠0, α≠0, α=β, γ=δ, δ≠0", "span{e2 − (α/δ)e3}"),
    case(G6, CAN, "complement", "otherwise", "trivial"),
    case(G6, KN, "1", "α=0, β=0, δ≠0", "full"),
    case(G6, KN, "2", "α≠0", "span{−(γ/α)e2 + e3}"),
    case(G6, KN, "complement", "otherwise", "trivial"),
    case(G7, CAN, "1", "α=0, δ≠0, γ≠0, β=0", "span{e1}"),
    case(G7, CAN, "2", "α=0, δ≠0, γ=0", "full"),
    case(G7, CAN, "3", "α≠0, γ=0, δ=0", "span{e2 + e3}"),
    case(G7, CAN, "complement", "otherwise", "trivial"),
    case(G7, KN, "1", "α=0, δ≠0, β≠0, γ=0", "span{e1 − (β/δ)e2 − (β/δ)e3}"),
    case(G7, KN, "2", "α=0, δ≠0, β=0", "span{e1}"),
    case(G7, KN, "3", "α≠0, γ=0, δ=0", "span{e2 + e3}"),
    case(G7, KN, "complement", "otherwise", "trivial"),
];

/// Every encoded case, in evaluation order.
pub fn case_catalog() -> &'static [TheoremCase] {
    &CATALOG
}

/// Look up one case's text by id.
pub fn case_info(family: Family, flavor: Flavor, id: &str) -> Option<&'static TheoremCase> {
    CATALOG
        .iter()
        .find(|c| c.family == family && c.flavor == flavor && c.id == id)
}

/// The prediction of the first matching case at a parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct Predicted {
    pub case_id: &'static str,
    pub space: SolutionSpace<Rational>,
}

fn ok(case_id: &'static str, space: SolutionSpace<Rational>) -> Result<Predicted> {
    Ok(Predicted { case_id, space })
}

fn span1(v: Vec3<Rational>) -> SolutionSpace<Rational> {
    SolutionSpace::from_spanning(&[v])
}

fn e(i: usize) -> SolutionSpace<Rational> {
    span1(crate::metric::basis_vec(i))
}

fn uncovered(family: Family, flavor: Flavor, id: &str) -> Error {
    Error::Uncovered(format!(
        "{family}/{flavor}/{id}: the predicted span coefficient C/D is \
         undefined at this point (D=0)"
    ))
}

/// Evaluate the encoded case predicates at a parameter point, in printed
/// order, first match wins.
///
/// Errors with [`Error::Uncovered`] when a matching span formula divides by
/// zero at the point, and for the flavors/families without a case catalog.
pub fn theorem_predicate(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
) -> Result<Predicted> {
    let kn = match flavor {
        Flavor::LeviCivita => {
            return Err(Error::Uncovered(
                "no case catalog exists for the levi-civita flavor".to_string(),
            ))
        }
        Flavor::Canonical => false,
        Flavor::KobayashiNomizu => true,
    };
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let one = ri(1);
    match (family, kn) {
        (Family::G1, _) => ok("all", SolutionSpace::trivial()),
        (Family::G2, false) => {
            if al.is_zero() && be.is_zero() {
                return ok("1", e(2));
            }
            if !al.is_zero() && !be.is_zero() {
                let block = reference_det_block(family, flavor, p).expect("G2 canonical block");
                if !block.det().is_zero() {
                    if block.d.is_zero() {
                        return Err(uncovered(family, flavor, "2"));
                    }
                    return ok("2", span1([ri(0), one, -(&block.c / &block.d)]));
                }
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G2, true) => {
            if al.is_zero() && be.is_zero() {
                return ok("1", e(2));
            }
            if al.is_zero() && !be.is_zero() {
                return ok("2", span1([ri(0), one, ga / be]));
            }
            if !al.is_zero() && !be.is_zero() && *al == be * &ri(4) {
                let num = &(&(be * be) * &ri(2)) + &(ga * ga); // 2β²+γ²
                return ok("3", span1([ri(0), one, -(&num / &(be * ga))]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G3, false) => {
            if ga.is_zero() {
                return ok("1", SolutionSpace::full());
            }
            if al.is_zero() && be.is_zero() {
                return ok("2", SolutionSpace::full());
            }
            if al.is_zero() && !be.is_zero() && be == ga {
                return ok("3", SolutionSpace::full());
            }
            if al.is_zero() && !be.is_zero() && be != ga {
                return ok("4", e(1));
            }
            if !al.is_zero() && *ga == al + be {
                return ok("5", SolutionSpace::full());
            }
            if !al.is_zero() && *ga != al + be && al == be {
                return ok("6", e(2));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G3, true) => {
            if (&(al * be) * ga).is_zero() {
                ok("1", SolutionSpace::full())
            } else {
                ok("2", e(2))
            }
        }
        (Family::G4, false) => {
            let eta = p
                .eta
                .ok_or_else(|| Error::ConstraintViolation("η∈{−1,+1}".to_string()))?;
            let bz = be.is_zero();
            if bz && eta == 1 && al.is_zero() {
                return ok("1", e(0));
            }
            if bz && eta == 1 && (&(al + &ri(2)) * &(al + &rq(1, 4))).is_zero() {
                return ok("2", e(2));
            }
            if bz && eta == -1 && al.is_zero() {
                return ok("3", e(0));
            }
            if bz && eta == -1 && (&(al - &ri(2)) * &(al - &rq(1, 4))).is_zero() {
                return ok("4", e(2));
            }
            if !bz && eta == 1 && al.is_zero() && *be == one {
                return ok("5", SolutionSpace::full());
            }
            if !bz && eta == 1 && *al == ri(2) && *be == ri(2) {
                return ok("6", e(2));
            }
            if !bz && eta == 1 && al + &ri(2) != be * &ri(2) {
                let block = reference_det_block(family, flavor, p).expect("G4 canonical block");
                if block.det().is_zero() {
                    if block.d.is_zero() {
                        return Err(uncovered(family, flavor, "7"));
                    }
                    return ok("7", span1([ri(0), one, -(&block.c / &block.d)]));
                }
            }
            if !bz && eta == -1 && al.is_zero() && *be == ri(-1) {
                return ok("8", SolutionSpace::full());
            }
            if !bz && eta == -1 && *al == ri(-2) && *be == ri(-2) {
                return ok("9", e(2));
            }
            if !bz && eta == -1 && al - &ri(2) != be * &ri(2) {
                let block = reference_det_block(family, flavor, p).expect("G4 canonical block");
                if block.det().is_zero() {
                    if block.d.is_zero() {
                        return Err(uncovered(family, flavor, "10"));
                    }
                    return ok("10", span1([ri(0), one, -(&block.c / &block.d)]));
                }
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G4, true) => {
            let eta = p
                .eta
                .ok_or_else(|| Error::ConstraintViolation("η∈{−1,+1}".to_string()))?;
            let az = al.is_zero();
            let bz = be.is_zero();
            if az && bz {
                return ok("1", e(2));
            }
            if az && !bz {
                return ok("2", span1([ri(0), one, -(&ri(1) / be)]));
            }
            if !az && bz && al * &p.eta_scalar() == one {
                return ok("3", e(0));
            }
            if !az && !bz && eta == 1 && *al == be * &ri(4) {
                let num = &(&(al * al) - &(al * &ri(8))) + &ri(8); // α²−8α+8
                return ok("4", span1([ri(0), one, &num / &(al * &ri(2))]));
            }
            if !az && !bz && eta == 1 && *al == ri(2) && *be == one {
                return ok("5", span1([ri(0), one, ri(-1)]));
            }
            if !az && !bz && eta == -1 && *al == be * &ri(4) {
                let num = &(&(al * al) + &(al * &ri(8))) + &ri(8); // α²+8α+8
                return ok("6", span1([ri(0), one, &num / &(al * &ri(2))]));
            }
            if !az && !bz && eta == -1 && *al == ri(-2) && *be == ri(-1) {
                return ok("7", span1([ri(0), one, ri(1)]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G5, _) => ok("all", SolutionSpace::full()),
        (Family::G6, false) => {
            let w = al * &(&(&(al * al) * &ri(2)) - &(be * be)); // α(2α²−β²)
            if ga.is_zero() && w.is_zero() {
                return ok("1", SolutionSpace::full());
            }
            if ga.is_zero() && !w.is_zero() {
                return ok("2", e(2));
            }
            if !ga.is_zero() && al.is_zero() && be.is_zero() && !de.is_zero() {
                return ok("3", e(1));
            }
            if !ga.is_zero()
                && !al.is_zero()
                && (al + be).is_zero()
                && (ga + de).is_zero()
                && !de.is_zero()
            {
                return ok("4", span1([ri(0), one, al / de]));
            }
            if !ga.is_zero() && !al.is_zero() && al == be && ga == de && !de.is_zero() {
                return ok("5", span1([ri(0), one, -(al / de)]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G6, true) => {
            if al.is_zero() && be.is_zero() && !de.is_zero() {
                return ok("1", SolutionSpace::full());
            }
            if !al.is_zero() {
                return ok("2", span1([ri(0), -(ga / al), one]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G7, false) => {
            if al.is_zero() && !de.is_zero() && !ga.is_zero() && be.is_zero() {
                return ok("1", e(0));
            }
            if al.is_zero() && !de.is_zero() && ga.is_zero() {
                return ok("2", SolutionSpace::full());
            }
            if !al.is_zero() && ga.is_zero() && de.is_zero() {
                return ok("3", span1([ri(0), one, ri(1)]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::G7, true) => {
            if al.is_zero() && !de.is_zero() && !be.is_zero() && ga.is_zero() {
                let c = -(be / de);
                return ok("1", span1([one, c.clone(), c]));
            }
            if al.is_zero() && !de.is_zero() && be.is_zero() {
                return ok("2", e(0));
            }
            if !al.is_zero() && ga.is_zero() && de.is_zero() {
                return ok("3", span1([ri(0), one, ri(1)]));
            }
            ok("complement", SolutionSpace::trivial())
        }
        (Family::Custom, _) => Err(Error::Uncovered(
            "no case catalog exists for custom algebras".to_string(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vals: [i64; 4], eta: Option<i8>) -> Params<Rational> {
        Params {
            alpha: ri(vals[0]),
            beta: ri(vals[1]),
            gamma: ri(vals[2]),
            delta: ri(vals[3]),
            eta,
        }
    }

    #[test]
    fn catalog_ids_are_unique_per_pair() {
        for c in case_catalog() {
            assert_eq!(
                case_catalog()
                    .iter()
                    .filter(|d| d.family == c.family && d.flavor == c.flavor && d.id == c.id)
                    .count(),
                1
            );
        }
    }

    #[test]
    fn g6_kn_full_case() {
        let got = theorem_predicate(G6, KN, &p([0, 0, 1, 1], None)).unwrap();
        assert_eq!(got.case_id, "1");
        assert_eq!(got.space, SolutionSpace::full());
    }

    #[test]
    fn g4_kn_case_five() {
        let got = theorem_predicate(G4, KN, &p([2, 1, 0, 0], Some(1))).unwrap();
        assert_eq!(got.case_id, "5");
        assert_eq!(got.space.basis, vec![[ri(0), ri(1), ri(-1)]]);
    }

    #[test]
    fn g1_always_trivial() {
        let got = theorem_predicate(G1, CAN, &p([1, 0, 0, 0], None)).unwrap();
        assert_eq!(got.case_id, "all");
        assert_eq!(got.space.dimension, 0);
    }

    #[test]
    fn g2_canonical_case_two_span_and_uncovered_boundary() {
        // (1,1,1): AD−BC ≠ 0, D = −1/2 → span{(0,1,7)}
        let got = theorem_predicate(G2, CAN, &p([1, 1, 1, 0], None)).unwrap();
        assert_eq!(got.case_id, "2");
        assert_eq!(got.space.basis, vec![[ri(0), ri(1), ri(7)]]);
        // α=2β: D = 0 while AD−BC ≠ 0 → Uncovered
        let err = theorem_predicate(G2, CAN, &p([2, 1, 1, 0], None)).unwrap_err();
        match err {
            Error::Uncovered(msg) => assert!(msg.contains("G2/canonical/2")),
            other => panic!("expected Uncovered, got {other:?}"),
        }
    }

    #[test]
    fn g3_canonical_complement_is_trivial() {
        // α=1, β=0, γ=2: no printed case applies
        let got = theorem_predicate(G3, CAN, &p([1, 0, 2, 0], None)).unwrap();
        assert_eq!(got.case_id, "complement");
        assert_eq!(got.space.dimension, 0);
    }

    #[test]
    fn g4_canonical_root_points_predict_e3() {
        for (a, eta) in [(-2, 1), (2, -1)] {
            let got = theorem_predicate(G4, CAN, &p([a, 0, 0, 0], Some(eta))).unwrap();
            assert_eq!(got.space.basis, vec![[ri(0), ri(0), ri(1)]]);
        }
        let got = theorem_predicate(G4, CAN, &p([-2, 0, 0, 0], Some(1))).unwrap();
        assert_eq!(got.case_id, "2");
    }

    #[test]
    fn g6_kn_case_two_canonicalizes() {
        let got = theorem_predicate(G6, KN, &p([1, 2, 2, 1], None)).unwrap();
        assert_eq!(got.case_id, "2");
        // raw span {(0,−2,1)} canonicalizes to leading-one form
        assert_eq!(got.space.basis, vec![[ri(0), ri(1), rq(-1, 2)]]);
    }

    #[test]
    fn g7_kn_spans() {
        let got = theorem_predicate(G7, KN, &p([0, 2, 0, 1], None)).unwrap();
        assert_eq!(got.case_id, "1");
        assert_eq!(got.space.basis, vec![[ri(1), ri(-2), ri(-2)]]);
        let got = theorem_predicate(G7, KN, &p([0, 0, 1, 1], None)).unwrap();
        assert_eq!(got.case_id, "2");
        assert_eq!(got.space.basis, vec![[ri(1), ri(0), ri(0)]]);
    }

    #[test]
    fn every_returned_id_exists_in_the_catalog() {
        let pts: [(Family, Flavor, Params<Rational>); 6] = [
            (G1, CAN, p([1, 1, 0, 0], None)),
            (G2, KN, p([4, 1, 1, 0], None)),
            (G3, CAN, p([1, 1, 2, 0], None)),
            (G4, KN, p([3, 1, 0, 0], Some(1))),
            (G6, CAN, p([2, 1, 1, 2], None)),
            (G7, CAN, p([1, 1, 0, 0], None)),
        ];
        for (family, flavor, params) in pts {
            let got = theorem_predicate(family, flavor, &params).unwrap();
            assert!(case_info(family, flavor, got.case_id).is_some());
        }
    }
}
