//! Acceptance gate: one test per criterion. Each test prints exactly one
//! line — "criterion N: PASS — detail" or "criterion N: FAIL — detail" —
//! before asserting, so the gate status is readable from captured output.
//!
//! The criteria are evaluated faithfully against the bundled reference
//! catalog: a reference-side divergence only passes when it carries an exact
//! certificate, and property/identity suites assert the stated property
//! itself, with no allowance for known divergences.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use lrc_core::algebra::{bracket, make_group, Family, LieAlgebra3, Params};
use lrc_core::connection::{connection, Connection, Flavor};
use lrc_core::curvature::{curvature, symmetric_ricci, BilinearForm};
use lrc_core::metric::{Metric, ProductStructure, Vec3};
use lrc_core::reference::{
    check_lemmas, reference_det_block, reference_printed_det, CheckKind,
};
use lrc_core::sample::{random_nonzero, random_rational, random_vec3, sample_group, sample_params};
use lrc_core::scalar::{Rational, Scalar};
use lrc_core::scan::{default_grid, scan, Verdict};
use lrc_core::solver::{
    assemble_system, collineation_space, lie_derivative_form, null_space, SolutionSpace,
};

const FAMILIES: [Family; 7] = [
    Family::G1,
    Family::G2,
    Family::G3,
    Family::G4,
    Family::G5,
    Family::G6,
    Family::G7,
];

const FLAVORS: [Flavor; 3] = [
    Flavor::LeviCivita,
    Flavor::Canonical,
    Flavor::KobayashiNomizu,
];

fn r(n: i64) -> Rational {
    Scalar::from_int(n)
}

fn params(vals: [i64; 4]) -> Params<Rational> {
    Params {
        alpha: r(vals[0]),
        beta: r(vals[1]),
        gamma: r(vals[2]),
        delta: r(vals[3]),
        eta: None,
    }
}

fn report(criterion: u32, failures: &[String], detail_on_pass: String) {
    let ok = failures.is_empty();
    let status = if ok { "PASS" } else { "FAIL" };
    let detail = if ok {
        detail_on_pass
    } else {
        failures.join("; ")
    };
    println!("criterion {criterion}: {status} — {detail}");
    assert!(ok, "criterion {criterion} failed: {}", failures.join("; "));
}

/// Criterion 1 — Ricci reproduction: every (family, flavor) with a reference
/// Ricci matrix agrees with the pipeline at ≥20 random admissible points,
/// exactly; divergences are tolerable only with a certificate. Runtime < 5 s.
#[test]
fn criterion_1_ricci_reproduction() {
    let start = Instant::now();
    let checks = check_lemmas(2024, 20);
    let mut failures = Vec::new();
    let mut pairs = 0;
    let mut divergences = 0;
    for c in checks.iter().filter(|c| c.kind == CheckKind::RicciMatrix) {
        pairs += 1;
        divergences += c.discrepancies.len();
        if c.points_checked < 20 {
            failures.push(format!(
                "{}/{}: only {} points",
                c.family, c.flavor, c.points_checked
            ));
        }
        if !c.fully_certified() {
            failures.push(format!(
                "{}/{}: discrepancy without certificate",
                c.family, c.flavor
            ));
        }
    }
    let elapsed = start.elapsed();
    if pairs != 14 {
        failures.push(format!("expected 14 Ricci references, saw {pairs}"));
    }
    if elapsed.as_secs_f64() >= 5.0 {
        failures.push(format!("runtime {elapsed:.2?} ≥ 5 s"));
    }
    report(
        1,
        &failures,
        format!(
            "{pairs} Ricci references × 20 points, {divergences} divergences all certified, {elapsed:.2?}"
        ),
    );
}

/// Criterion 2 — Lie-derivative table reproduction under the same
/// certificate policy, ≥20 points per (family, flavor).
#[test]
fn criterion_2_table_reproduction() {
    let start = Instant::now();
    let checks = check_lemmas(2025, 20);
    let mut failures = Vec::new();
    let mut pairs = 0;
    let mut divergences = 0;
    for c in checks
        .iter()
        .filter(|c| c.kind == CheckKind::LieDerivativeTable)
    {
        pairs += 1;
        divergences += c.discrepancies.len();
        if c.points_checked < 20 {
            failures.push(format!(
                "{}/{}: only {} points",
                c.family, c.flavor, c.points_checked
            ));
        }
        if !c.fully_certified() {
            failures.push(format!(
                "{}/{}: discrepancy without certificate",
                c.family, c.flavor
            ));
        }
    }
    let elapsed = start.elapsed();
    if pairs != 14 {
        failures.push(format!("expected 14 table references, saw {pairs}"));
    }
    report(
        2,
        &failures,
        format!(
            "{pairs} table references × 20 points, {divergences} divergences all certified, {elapsed:.2?}"
        ),
    );
}

/// Criterion 3 — twelve fixed anchor cases for the computed collineation
/// space, exact, in < 1 s.
#[test]
fn criterion_3_anchor_spot_checks() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut failures = Vec::new();

    let mut check = |label: &str, actual: SolutionSpace<Rational>, expected: SolutionSpace<Rational>| {
        if actual != expected {
            failures.push(format!(
                "{label}: computed dim {} ≠ expected dim {}",
                actual.dimension, expected.dimension
            ));
        }
    };
    let span = |rows: &[[i64; 3]]| {
        let rows: Vec<Vec3<Rational>> = rows
            .iter()
            .map(|v| std::array::from_fn(|i| r(v[i])))
            .collect();
        SolutionSpace::from_spanning(&rows)
    };

    // G1, both flavors: trivial at sampled α ≠ 0.
    for flavor in [Flavor::Canonical, Flavor::KobayashiNomizu] {
        for _ in 0..5 {
            let a = sample_group(&mut rng, Family::G1);
            check(
                &format!("G1/{flavor} sampled"),
                collineation_space(&a, flavor),
                SolutionSpace::trivial(),
            );
        }
    }
    // G2 Kobayashi–Nomizu fixed points.
    let a = make_group(Family::G2, params([0, 0, 1, 0])).unwrap();
    check(
        "G2/kn (0,0,1)",
        collineation_space(&a, Flavor::KobayashiNomizu),
        span(&[[0, 0, 1]]),
    );
    let a = make_group(Family::G2, params([4, 1, 1, 0])).unwrap();
    check(
        "G2/kn (4,1,1)",
        collineation_space(&a, Flavor::KobayashiNomizu),
        span(&[[0, 1, -3]]),
    );
    // G3 canonical on γ = 0: full.
    for _ in 0..5 {
        let p = Params {
            alpha: random_rational(&mut rng),
            beta: random_rational(&mut rng),
            gamma: r(0),
            delta: r(0),
            eta: None,
        };
        let a = make_group(Family::G3, p).unwrap();
        check(
            "G3/canonical γ=0",
            collineation_space(&a, Flavor::Canonical),
            SolutionSpace::full(),
        );
    }
    // G3 Kobayashi–Nomizu with αβγ ≠ 0: span{e₃}.
    for _ in 0..5 {
        let p = Params {
            alpha: random_nonzero(&mut rng),
            beta: random_nonzero(&mut rng),
            gamma: random_nonzero(&mut rng),
            delta: r(0),
            eta: None,
        };
        let a = make_group(Family::G3, p).unwrap();
        check(
            "G3/kn αβγ≠0",
            collineation_space(&a, Flavor::KobayashiNomizu),
            span(&[[0, 0, 1]]),
        );
    }
    // G4 Kobayashi–Nomizu at (2,1,η=+1): span{(0,1,−1)}.
    let mut p = params([2, 1, 0, 0]);
    p.eta = Some(1);
    let a = make_group(Family::G4, p).unwrap();
    check(
        "G4/kn (2,1,+1)",
        collineation_space(&a, Flavor::KobayashiNomizu),
        span(&[[0, 1, -1]]),
    );
    // G5, both flavors, 20 samples: full.
    for n in 0..20 {
        let flavor = if n % 2 == 0 {
            Flavor::Canonical
        } else {
            Flavor::KobayashiNomizu
        };
        let a = sample_group(&mut rng, Family::G5);
        check(
            &format!("G5/{flavor} sampled"),
            collineation_space(&a, flavor),
            SolutionSpace::full(),
        );
    }
    // G6 Kobayashi–Nomizu on α = β = 0: full.
    for _ in 0..5 {
        let p = Params {
            alpha: r(0),
            beta: r(0),
            gamma: random_rational(&mut rng),
            delta: random_nonzero(&mut rng),
            eta: None,
        };
        let a = make_group(Family::G6, p).unwrap();
        check(
            "G6/kn α=β=0",
            collineation_space(&a, Flavor::KobayashiNomizu),
            SolutionSpace::full(),
        );
    }
    // G6 Kobayashi–Nomizu at α=1, γ=2 (β=2, δ=1): span{(0,−2,1)}.
    let a = make_group(Family::G6, params([1, 2, 2, 1])).unwrap();
    check(
        "G6/kn (1,2,2,1)",
        collineation_space(&a, Flavor::KobayashiNomizu),
        span(&[[0, -2, 1]]),
    );
    // G7 Kobayashi–Nomizu at (0,2,0,1): span{(1,−2,−2)}.
    let a = make_group(Family::G7, params([0, 2, 0, 1])).unwrap();
    check(
        "G7/kn (0,2,0,1)",
        collineation_space(&a, Flavor::KobayashiNomizu),
        span(&[[1, -2, -2]]),
    );
    // G7 canonical with α=1, γ=δ=0: span{(0,1,1)}.
    for _ in 0..5 {
        let p = Params {
            alpha: r(1),
            beta: random_rational(&mut rng),
            gamma: r(0),
            delta: r(0),
            eta: None,
        };
        let a = make_group(Family::G7, p).unwrap();
        check(
            "G7/canonical α=1,γ=δ=0",
            collineation_space(&a, Flavor::Canonical),
            span(&[[0, 1, 1]]),
        );
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:.2?} ≥ 1 s"));
    }
    report(
        3,
        &failures,
        format!("12 anchor groups (50 point checks) exact, {elapsed:.2?}"),
    );
}

/// Criterion 4 — full default-grid sweep: ≥95% Match, every non-Match
/// certified, the G2 canonical case (2) conflict surfaces as a certified
/// mismatch, < 30 s for ~2000 points.
#[test]
fn criterion_4_default_grid_sweep() {
    let start = Instant::now();
    let outcome = scan(&default_grid()).unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    let s = &outcome.summary;
    if s.total < 1500 {
        failures.push(format!("grid too small: {} points", s.total));
    }
    let fraction = s.matches as f64 / s.total as f64;
    if fraction < 0.95 {
        failures.push(format!("match fraction {fraction:.4} < 0.95"));
    }
    let mut uncertified = 0;
    let mut g2_case2_certified = false;
    for rep in &outcome.reports {
        match rep.verdict {
            Verdict::Match => {}
            _ => {
                if rep.certificate.is_none() {
                    uncertified += 1;
                } else if rep.family == Family::G2
                    && rep.flavor == Flavor::Canonical
                    && rep.case_id == "2"
                    && rep.verdict == Verdict::Mismatch
                {
                    g2_case2_certified = true;
                }
            }
        }
    }
    if uncertified > 0 {
        failures.push(format!("{uncertified} non-Match reports lack certificates"));
    }
    if !g2_case2_certified {
        failures.push("G2 canonical case (2) conflict missing from certificate list".to_string());
    }
    if elapsed.as_secs_f64() >= 30.0 {
        failures.push(format!("runtime {elapsed:.2?} ≥ 30 s"));
    }
    report(
        4,
        &failures,
        format!(
            "{} points: {} match / {} mismatch / {} uncovered (fraction {:.4}), all non-Match certified, {elapsed:.2?}",
            s.total, s.matches, s.mismatches, s.uncovered, fraction
        ),
    );
}

// ----------------------------------------------------------------- crit. 5

const SUITE_INSTANCES: usize = 105; // 15 sampled points × 7 families

fn groups(seed: u64) -> Vec<LieAlgebra3<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..(SUITE_INSTANCES / FAMILIES.len()) {
        for f in FAMILIES {
            out.push(sample_group(&mut rng, f));
        }
    }
    out
}

fn point(a: &LieAlgebra3<Rational>) -> String {
    format!(
        "{}(α={},β={},γ={},δ={},η={:?})",
        a.family, a.params.alpha, a.params.beta, a.params.gamma, a.params.delta, a.params.eta
    )
}

fn nabla(conn: &Connection<Rational>, x: &Vec3<Rational>, y: &Vec3<Rational>) -> Vec3<Rational> {
    let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
    for i in 0..3 {
        let d = conn.derive_vec(i, y);
        for k in 0..3 {
            out[k] = &out[k] + &(&x[i] * &d[k]);
        }
    }
    out
}

fn suite_jacobi() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for a in groups(1) {
        let x = random_vec3(&mut rng);
        let y = random_vec3(&mut rng);
        let z = random_vec3(&mut rng);
        let mut total = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (u, v, w) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
            let outer = bracket(&bracket(u, v, &a), w, &a);
            for k in 0..3 {
                total[k] = &total[k] + &outer[k];
            }
        }
        if total.iter().any(|c| !c.is_zero()) {
            return Err(format!("Jacobi defect at {}", point(&a)));
        }
    }
    Ok(())
}

fn suite_torsion_free() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for a in groups(2) {
        let conn = connection(&a, Flavor::LeviCivita);
        let x = random_vec3(&mut rng);
        let y = random_vec3(&mut rng);
        let fwd = nabla(&conn, &x, &y);
        let bwd = nabla(&conn, &y, &x);
        let br = bracket(&x, &y, &a);
        for k in 0..3 {
            if &(&fwd[k] - &bwd[k]) - &br[k] != r(0) {
                return Err(format!("torsion at {}", point(&a)));
            }
        }
    }
    Ok(())
}

fn suite_metric(flavor: Flavor, label: &str) -> Result<(), String> {
    let m = Metric::default();
    let mut rng = ChaCha8Rng::seed_from_u64(53 + flavor as u64);
    for a in groups(3 + flavor as u64) {
        let conn = connection(&a, flavor);
        let y = random_vec3(&mut rng);
        let z = random_vec3(&mut rng);
        for i in 0..3 {
            let d = &m.g(&conn.derive_vec(i, &y), &z) + &m.g(&y, &conn.derive_vec(i, &z));
            if !d.is_zero() {
                return Err(format!(
                    "{label} metric defect {d} in e{} at {}",
                    i + 1,
                    point(&a)
                ));
            }
        }
    }
    Ok(())
}

fn suite_j_parallel(flavor: Flavor, label: &str) -> Result<(), String> {
    let j = ProductStructure::default();
    let mut rng = ChaCha8Rng::seed_from_u64(57 + flavor as u64);
    for a in groups(7 + flavor as u64) {
        let conn = connection(&a, flavor);
        let y = random_vec3(&mut rng);
        for i in 0..3 {
            let lhs = conn.derive_vec(i, &j.apply(&y));
            let rhs = j.apply(&conn.derive_vec(i, &y));
            if lhs != rhs {
                return Err(format!("{label} not J-parallel at {}", point(&a)));
            }
        }
    }
    Ok(())
}

fn suite_curvature_antisymmetry() -> Result<(), String> {
    for (n, a) in groups(11).into_iter().enumerate() {
        let flavor = FLAVORS[n % 3];
        let rt = curvature(&connection(&a, flavor), &a);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        if &rt.r[i][j][k][l] + &rt.r[j][i][k][l] != r(0) {
                            return Err(format!(
                                "R not antisymmetric in first pair for {flavor} at {}",
                                point(&a)
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn suite_lie_symmetry() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for a in groups(12) {
        let mut t = BilinearForm::zero();
        for i in 0..3 {
            for j in i..3 {
                let v = random_rational(&mut rng);
                t.t[i][j] = v.clone();
                t.t[j][i] = v;
            }
        }
        let lt = lie_derivative_form(&t, &random_vec3(&mut rng), &a);
        for i in 0..3 {
            for j in 0..3 {
                if lt.t[i][j] != lt.t[j][i] {
                    return Err(format!("L_ξt asymmetric at {}", point(&a)));
                }
            }
        }
    }
    Ok(())
}

fn suite_lie_linearity() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for alg in groups(13) {
        let t = symmetric_ricci(&alg, Flavor::Canonical);
        let xi = random_vec3(&mut rng);
        let zeta = random_vec3(&mut rng);
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        let mixed: Vec3<Rational> = std::array::from_fn(|k| &(&a * &xi[k]) + &(&b * &zeta[k]));
        let lhs = lie_derivative_form(&t, &mixed, &alg);
        let lx = lie_derivative_form(&t, &xi, &alg);
        let lz = lie_derivative_form(&t, &zeta, &alg);
        for i in 0..3 {
            for j in 0..3 {
                if lhs.t[i][j] != &(&a * &lx.t[i][j]) + &(&b * &lz.t[i][j]) {
                    return Err(format!("L_ξ not linear in ξ at {}", point(&alg)));
                }
            }
        }
    }
    Ok(())
}

fn suite_membership() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let mut non_members = 0usize;
    while non_members < 100 {
        let family = FAMILIES[rng.gen_range(0..FAMILIES.len())];
        let flavor = FLAVORS[rng.gen_range(0..FLAVORS.len())];
        let a = sample_group(&mut rng, family);
        let t = symmetric_ricci(&a, flavor);
        let sys = assemble_system(&t, &a);
        let space = null_space(&sys);
        let apply = |v: &Vec3<Rational>| -> bool {
            sys.rows.iter().all(|row| {
                let mut acc = Rational::zero();
                for k in 0..3 {
                    acc = &acc + &(&row[k] * &v[k]);
                }
                acc.is_zero()
            })
        };
        for b in &space.basis {
            if !apply(b) {
                return Err(format!("basis not annihilated for {flavor} at {}", point(&a)));
            }
        }
        if space.dimension == 3 {
            continue;
        }
        let v = loop {
            let v = random_vec3(&mut rng);
            if !space.contains(&v) {
                break v;
            }
        };
        if apply(&v) {
            return Err(format!("non-member annihilated for {flavor} at {}", point(&a)));
        }
        non_members += 1;
    }
    Ok(())
}

fn suite_rref_uniqueness() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(65);
    let mut done = 0usize;
    while done < 100 {
        let dim = 1 + (done % 2);
        let rows: Vec<Vec3<Rational>> = (0..dim).map(|_| random_vec3(&mut rng)).collect();
        let first = SolutionSpace::from_spanning(&rows);
        if first.dimension != dim {
            continue;
        }
        let second_rows: Vec<Vec3<Rational>> = if dim == 1 {
            let mut s = random_rational(&mut rng);
            if s.is_zero() {
                s = Rational::one();
            }
            vec![std::array::from_fn(|k| &s * &rows[0][k])]
        } else {
            loop {
                let coef: [[Rational; 2]; 2] =
                    std::array::from_fn(|_| std::array::from_fn(|_| random_rational(&mut rng)));
                let det = &(&coef[0][0] * &coef[1][1]) - &(&coef[0][1] * &coef[1][0]);
                if det.is_zero() {
                    continue;
                }
                break (0..2)
                    .map(|row| {
                        std::array::from_fn(|k| {
                            &(&coef[row][0] * &rows[0][k]) + &(&coef[row][1] * &rows[1][k])
                        })
                    })
                    .collect();
            }
        };
        if first != SolutionSpace::from_spanning(&second_rows) {
            return Err("two bases of one subspace canonicalized differently".to_string());
        }
        done += 1;
    }
    Ok(())
}

/// Criterion 5 — exact property suites, ≥100 randomized instances each:
/// Jacobi; Levi-Civita torsion-free and metric; ∇⁰ and ∇¹ metric and
/// J-parallel; curvature first-pair antisymmetry; L_ξt symmetry and
/// ξ-linearity; membership oracle; RREF canonical-form uniqueness.
#[test]
fn criterion_5_property_suites() {
    let start = Instant::now();
    let suites: Vec<(&str, Result<(), String>)> = vec![
        ("jacobi", suite_jacobi()),
        ("lc torsion-free", suite_torsion_free()),
        ("lc metric", suite_metric(Flavor::LeviCivita, "lc")),
        ("∇⁰ metric", suite_metric(Flavor::Canonical, "∇⁰")),
        ("∇¹ metric", suite_metric(Flavor::KobayashiNomizu, "∇¹")),
        ("∇⁰ J-parallel", suite_j_parallel(Flavor::Canonical, "∇⁰")),
        ("∇¹ J-parallel", suite_j_parallel(Flavor::KobayashiNomizu, "∇¹")),
        ("curvature antisymmetry", suite_curvature_antisymmetry()),
        ("L_ξ symmetry", suite_lie_symmetry()),
        ("L_ξ linearity", suite_lie_linearity()),
        ("membership oracle", suite_membership()),
        ("rref uniqueness", suite_rref_uniqueness()),
    ];
    let total = suites.len();
    let failures: Vec<String> = suites
        .iter()
        .filter_map(|(name, res)| {
            res.as_ref()
                .err()
                .map(|e| format!("{name}: {e} ({} clean suites of {total})",
                    suites.iter().filter(|(_, r)| r.is_ok()).count()))
        })
        .collect();
    report(
        5,
        &failures,
        format!(
            "{total} suites × ≥100 exact instances clean, {:.2?}",
            start.elapsed()
        ),
    );
}

/// Criterion 6 — printed determinant abbreviations: the closed forms printed
/// for the G2 Kobayashi–Nomizu and G6 canonical 2×2 blocks must equal the
/// expanded AD−BC at 50 random admissible points each, exactly.
#[test]
fn criterion_6_determinant_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    let mut failures = Vec::new();
    for (family, flavor, label) in [
        (Family::G2, Flavor::KobayashiNomizu, "G2/kn (α−4β)(β²+γ²)"),
        (Family::G6, Flavor::Canonical, "G6/canonical ¼γ(α+δ)(αδ−βγ)"),
    ] {
        let mut bad = 0;
        let mut witness = String::new();
        for _ in 0..50 {
            let p = sample_params(&mut rng, family);
            let block = reference_det_block(family, flavor, &p).unwrap();
            let printed = reference_printed_det(family, flavor, &p).unwrap();
            if block.det() != printed {
                if bad == 0 {
                    witness = format!(
                        "first witness α={},β={},γ={},δ={}: AD−BC={} vs printed {}",
                        p.alpha,
                        p.beta,
                        p.gamma,
                        p.delta,
                        block.det(),
                        printed
                    );
                }
                bad += 1;
            }
        }
        if bad > 0 {
            failures.push(format!("{label}: {bad}/50 points diverge; {witness}"));
        }
    }
    report(
        6,
        &failures,
        "both printed determinants equal AD−BC at 50/50 points".to_string(),
    );
}
