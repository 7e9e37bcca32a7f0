//! Grid sweeps: enumerate exact rational parameter points per family,
//! compare the encoded case prediction against the computed collineation
//! space at every point, and certify every disagreement.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{make_group, Family, Params, CATALOG_FAMILIES};
use crate::cases::{case_info, theorem_predicate};
use crate::connection::Flavor;
use crate::curvature::symmetric_ricci;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::solver::{assemble_system, collineation_space, rref, CollineationSystem, SolutionSpace};

/// Outcome of comparing one prediction with one computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Predicted and computed spaces are identical (dimension and canonical
    /// basis).
    Match,
    /// They differ; a certificate localizes the disagreement.
    Mismatch,
    /// No prediction exists at this point (no case applies, or a predicted
    /// span divides by zero there); also certified.
    Uncovered,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "Match",
            Verdict::Mismatch => "Mismatch",
            Verdict::Uncovered => "Uncovered",
        })
    }
}

/// Pencil-checkable evidence for a non-Match verdict: the exact linear
/// system, its reduced row echelon form, and both spans.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// The matched case's id, condition, and prediction text (or the reason
    /// the point is uncovered).
    pub case_text: String,
    /// The exact 6×3 system whose null space is the computed space.
    pub system: CollineationSystem<Rational>,
    /// Reduced row echelon form of that system.
    pub rref: Vec<Vec<Rational>>,
    /// The predicted span, when a case matched.
    pub predicted: Option<SolutionSpace<Rational>>,
    /// The computed null space.
    pub computed: SolutionSpace<Rational>,
}

/// One grid point's prediction-vs-computation record.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub family: Family,
    pub flavor: Flavor,
    pub params: Params<Rational>,
    /// Matched case id, or `"uncovered"`.
    pub case_id: String,
    /// `None` exactly when the verdict is `Uncovered`.
    pub predicted: Option<SolutionSpace<Rational>>,
    pub computed: SolutionSpace<Rational>,
    pub verdict: Verdict,
    /// Present exactly when the verdict is not `Match`.
    pub certificate: Option<Certificate>,
}

/// Verdict counts over a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScanSummary {
    pub total: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub uncovered: usize,
}

impl ScanSummary {
    pub fn from_reports(reports: &[CaseReport]) -> Self {
        let mut s = ScanSummary {
            total: reports.len(),
            ..ScanSummary::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::Match => s.matches += 1,
                Verdict::Mismatch => s.mismatches += 1,
                Verdict::Uncovered => s.uncovered += 1,
            }
        }
        s
    }

    pub fn match_fraction(&self) -> f64 {
        if self.total == 0 {
            return 1.0;
        }
        self.matches as f64 / self.total as f64
    }
}

/// A full scan: reports in deterministic order plus their summary.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutcome {
    pub reports: Vec<CaseReport>,
    pub summary: ScanSummary,
}

/// Grid description: which families and flavors to sweep, named rational
/// value sets driving the sweep axes, and whether to add the boundary-case
/// points (case-change loci, vanishing-determinant samples, span-denominator
/// zeros).
///
/// Two set names are meaningful: `"main"` (wide axis, used where the sweep
/// is at most quadratic in the set size) and `"dense"` (compact axis, used
/// for cubic sweeps; falls back to `"main"` when absent).
#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub families: Vec<Family>,
    pub flavors: Vec<Flavor>,
    pub sets: BTreeMap<String, Vec<Rational>>,
    pub include_boundaries: bool,
}

fn ri(n: i64) -> Rational {
    <Rational as Scalar>::from_int(n)
}

fn rq(n: i64, d: i64) -> Rational {
    <Rational as Scalar>::frac(n, d)
}

/// The default grid: every case predicate of every encoded case catalog is
/// exercised, including its boundary manifolds.
pub fn default_grid() -> ScanConfig {
    let main: Vec<Rational> = [
        (-3, 1),
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (-1, 3),
        (0, 1),
        (1, 3),
        (1, 2),
        (1, 1),
        (2, 1),
        (3, 1),
    ]
    .into_iter()
    .map(|(n, d)| rq(n, d))
    .collect();
    let dense: Vec<Rational> = [(-2, 1), (-1, 1), (0, 1), (1, 2), (1, 1), (2, 1)]
        .into_iter()
        .map(|(n, d)| rq(n, d))
        .collect();
    let mut sets = BTreeMap::new();
    sets.insert("main".to_string(), main);
    sets.insert("dense".to_string(), dense);
    ScanConfig {
        families: CATALOG_FAMILIES.to_vec(),
        flavors: vec![Flavor::Canonical, Flavor::KobayashiNomizu],
        sets,
        include_boundaries: true,
    }
}

fn nonzero(vals: &[Rational]) -> Vec<Rational> {
    vals.iter().filter(|v| !v.is_zero()).cloned().collect()
}

fn par(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Params<Rational> {
    Params {
        alpha,
        beta,
        gamma,
        delta,
        eta: None,
    }
}

fn par4(alpha: Rational, beta: Rational, eta: i8) -> Params<Rational> {
    Params {
        alpha,
        beta,
        gamma: ri(0),
        delta: ri(0),
        eta: Some(eta),
    }
}

/// Enumerate the admissible parameter points of one family. Constrained
/// families are parameterized by exact substitution (never by filtering
/// near-misses), so every emitted point satisfies its family constraints
/// exactly.
fn family_points(
    family: Family,
    main: &[Rational],
    dense: &[Rational],
    boundaries: bool,
) -> Result<Vec<Params<Rational>>> {
    let zero = ri(0);
    let mut pts = Vec::new();
    match family {
        Family::G1 => {
            for a in nonzero(main) {
                for b in main {
                    pts.push(par(a.clone(), b.clone(), zero.clone(), zero.clone()));
                }
            }
        }
        Family::G2 => {
            // The α·β = 0 region sweeps wide; the α·β ≠ 0 region (where the
            // encoded G2/canonical/2 span formula disagrees with the
            // computed space) is probed at fixed adjudication points.
            for a in main {
                for b in main {
                    if !a.is_zero() && !b.is_zero() {
                        continue;
                    }
                    for g in nonzero(main) {
                        pts.push(par(a.clone(), b.clone(), g, zero.clone()));
                    }
                }
            }
            pts.push(par(ri(1), ri(1), ri(1), ri(0)));
            pts.push(par(ri(-2), rq(-1, 2), ri(1), ri(0)));
            pts.push(par(rq(1, 2), ri(-1), ri(2), ri(0)));
            if boundaries {
                // α=2β puts D=0 inside the G2/canonical/2 span formula;
                // α=4β is the G2/kn/3 case line.
                pts.push(par(ri(2), ri(1), ri(1), ri(0)));
                pts.push(par(ri(4), ri(2), ri(1), ri(0)));
                pts.push(par(ri(4), ri(1), ri(1), ri(0)));
            }
        }
        Family::G3 => {
            // Full cube: the case loci (γ=0, β=γ, γ=α+β, α=β, α=β=0) are
            // all hit by value coincidences inside the cross product.
            for a in dense {
                for b in dense {
                    for g in dense {
                        pts.push(par(a.clone(), b.clone(), g.clone(), zero.clone()));
                    }
                }
            }
        }
        Family::G4 => {
            for eta in [1i8, -1] {
                for a in dense {
                    for b in dense {
                        pts.push(par4(a.clone(), b.clone(), eta));
                    }
                }
                if boundaries {
                    let sgn = i64::from(eta);
                    // Quadratic-root samples on the β=0 axis.
                    pts.push(par4(ri(-2 * sgn), ri(0), eta));
                    pts.push(par4(rq(-sgn, 4), ri(0), eta));
                    // The α=4β case line.
                    pts.push(par4(ri(4 * sgn), ri(sgn), eta));
                    pts.push(par4(ri(2 * sgn), rq(sgn, 2), eta));
                    // Vanishing-determinant samples for the span cases.
                    pts.push(par4(rq(2 * sgn, 9), ri(2 * sgn), eta));
                }
            }
        }
        Family::G5 => {
            // αγ+βδ=0, α+δ≠0, by substitution: δ = −αγ/β on the β≠0 branch.
            let g_axis = [ri(0), ri(1), ri(-2)];
            for a in nonzero(dense) {
                for b in nonzero(dense) {
                    for g in &g_axis {
                        let d = -(&(&a * g) / &b);
                        if (&a + &d).is_zero() {
                            continue;
                        }
                        pts.push(par(a.clone(), b.clone(), g.clone(), d));
                    }
                }
            }
            for d in nonzero(dense) {
                for g in dense {
                    pts.push(par(zero.clone(), zero.clone(), g.clone(), d.clone()));
                }
            }
            for a in main {
                for d in [ri(1), ri(-2)] {
                    if (a + &d).is_zero() {
                        continue;
                    }
                    pts.push(par(a.clone(), zero.clone(), zero.clone(), d));
                }
            }
        }
        Family::G6 => {
            // αγ−βδ=0, α+δ≠0, by substitution: γ = βδ/α on the α≠0 branch.
            let d_axis = [ri(0), ri(1), ri(-2)];
            for a in nonzero(dense) {
                for b in dense {
                    for d in &d_axis {
                        if (&a + d).is_zero() {
                            continue;
                        }
                        let g = &(b * d) / &a;
                        pts.push(par(a.clone(), b.clone(), g, d.clone()));
                    }
                }
            }
            for g in main {
                for d in nonzero(dense) {
                    pts.push(par(zero.clone(), zero.clone(), g.clone(), d.clone()));
                }
            }
            if boundaries {
                // Case lines α=β ∧ γ=δ and α+β=0 ∧ γ+δ=0 (both satisfy
                // αγ=βδ identically).
                for a in [ri(1), ri(-1), ri(2)] {
                    for d in [ri(1), ri(-1), ri(2)] {
                        if (&a + &d).is_zero() {
                            continue;
                        }
                        pts.push(par(a.clone(), a.clone(), d.clone(), d.clone()));
                        pts.push(par(a.clone(), -a.clone(), -d.clone(), d.clone()));
                    }
                }
            }
        }
        Family::G7 => {
            // αγ=0, α+δ≠0: either α=0 (δ≠0) or γ=0.
            let g_axis = [ri(0), ri(1), ri(-1)];
            for d in nonzero(dense) {
                for b in dense {
                    for g in &g_axis {
                        pts.push(par(zero.clone(), b.clone(), g.clone(), d.clone()));
                    }
                }
            }
            let d_axis = [ri(0), ri(1), ri(-2)];
            for a in nonzero(dense) {
                for b in dense {
                    for d in &d_axis {
                        if (&a + d).is_zero() {
                            continue;
                        }
                        pts.push(par(a.clone(), b.clone(), zero.clone(), d.clone()));
                    }
                }
            }
        }
        Family::Custom => {
            return Err(Error::ConfigError(
                "the scan grid covers catalog families only".to_string(),
            ))
        }
    }
    Ok(pts)
}

fn axis<'a>(cfg: &'a ScanConfig, name: &str) -> Result<&'a [Rational]> {
    match cfg.sets.get(name) {
        Some(v) if !v.is_empty() => Ok(v),
        Some(_) => Err(Error::ConfigError(format!("value set '{name}' is empty"))),
        None => Err(Error::ConfigError(format!("value set '{name}' is missing"))),
    }
}

/// All grid points of a config, before flavor crossing.
pub fn grid_points(cfg: &ScanConfig) -> Result<Vec<(Family, Params<Rational>)>> {
    let main = axis(cfg, "main")?;
    let dense = match cfg.sets.get("dense") {
        Some(v) if !v.is_empty() => v.as_slice(),
        _ => main,
    };
    let mut out = Vec::new();
    for &family in &cfg.families {
        for p in family_points(family, main, dense, cfg.include_boundaries)? {
            out.push((family, p));
        }
    }
    Ok(out)
}

type SortKey = (
    Family,
    Flavor,
    Rational,
    Rational,
    Rational,
    Rational,
    Option<i8>,
);

fn sort_key(r: &CaseReport) -> SortKey {
    (
        r.family,
        r.flavor,
        r.params.alpha.clone(),
        r.params.beta.clone(),
        r.params.gamma.clone(),
        r.params.delta.clone(),
        r.params.eta,
    )
}

/// Evaluate one (family, flavor, point): compute the null space, evaluate the
/// case predicates, compare, and certify when they disagree.
pub fn evaluate_point(
    family: Family,
    flavor: Flavor,
    params: Params<Rational>,
) -> Result<CaseReport> {
    let algebra = make_group(family, params.clone())?;
    let computed = collineation_space(&algebra, flavor);
    let mut report = match theorem_predicate(family, flavor, &params) {
        Ok(pred) => {
            let verdict = if pred.space == computed {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
            CaseReport {
                family,
                flavor,
                params,
                case_id: pred.case_id.to_string(),
                predicted: Some(pred.space),
                computed,
                verdict,
                certificate: None,
            }
        }
        Err(Error::Uncovered(_)) => CaseReport {
            family,
            flavor,
            params,
            case_id: "uncovered".to_string(),
            predicted: None,
            computed,
            verdict: Verdict::Uncovered,
            certificate: None,
        },
        Err(e) => return Err(e),
    };
    if report.verdict != Verdict::Match {
        report.certificate = Some(certify_mismatch(&report)?);
    }
    Ok(report)
}

/// Build the pencil-checkable certificate for a non-Match report.
///
/// Errors with [`Error::NotAMismatch`] on a Match report.
pub fn certify_mismatch(report: &CaseReport) -> Result<Certificate> {
    if report.verdict == Verdict::Match {
        return Err(Error::NotAMismatch(format!(
            "{}/{} at {} matches (case {})",
            report.family,
            report.flavor,
            crate::reference::point_text(&crate::algebra::param_list(
                report.family,
                &report.params
            )),
            report.case_id
        )));
    }
    let algebra = make_group(report.family, report.params.clone())?;
    let t = symmetric_ricci(&algebra, report.flavor);
    let system = assemble_system(&t, &algebra);
    let rows: Vec<Vec<Rational>> = system.rows.iter().map(|r| r.to_vec()).collect();
    let reduced = rref(&rows);
    let case_text = match report.verdict {
        Verdict::Uncovered => match theorem_predicate(report.family, report.flavor, &report.params)
        {
            Err(Error::Uncovered(msg)) => msg,
            _ => format!("{}/{}/uncovered", report.family, report.flavor),
        },
        _ => match case_info(report.family, report.flavor, &report.case_id) {
            Some(c) => format!(
                "{}/{}/{} [{} → {}]",
                c.family, c.flavor, c.id, c.condition, c.prediction
            ),
            None => format!("{}/{}/{}", report.family, report.flavor, report.case_id),
        },
    };
    Ok(Certificate {
        case_text,
        system,
        rref: reduced,
        predicted: report.predicted.clone(),
        computed: report.computed.clone(),
    })
}

/// Run a scan: every (family, flavor, point) of the grid, evaluated and
/// sorted lexicographically by family, flavor, parameter tuple (duplicates
/// collapsed), with summary counts.
pub fn scan(cfg: &ScanConfig) -> Result<ScanOutcome> {
    for flavor in &cfg.flavors {
        if *flavor == Flavor::LeviCivita {
            return Err(Error::ConfigError(
                "scans cover the canonical and kn flavors only".to_string(),
            ));
        }
    }
    let points = grid_points(cfg)?;
    let mut reports = Vec::with_capacity(points.len() * cfg.flavors.len());
    for (family, params) in &points {
        for &flavor in &cfg.flavors {
            reports.push(evaluate_point(*family, flavor, params.clone())?);
        }
    }
    reports.sort_by(|x, y| sort_key(x).cmp(&sort_key(y)));
    reports.dedup_by(|x, y| sort_key(x) == sort_key(y));
    let summary = ScanSummary::from_reports(&reports);
    Ok(ScanOutcome { reports, summary })
}
