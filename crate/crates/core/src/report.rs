//! Rendering: deterministic JSON (top-level `"schema": "lrc/1"`), CSV, and
//! plain-text views of scans, single-point solves, derived tensors, and
//! reference check tables. All numbers are exact rational text; float twins
//! appear only on request.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{family_constraint_note, param_list, Family, LieAlgebra3, Params};
use crate::connection::{connection, Flavor};
use crate::curvature::{curvature, symmetric_ricci, BilinearForm};
use crate::error::{Error, Result};
use crate::reference::{point_text, LemmaCheck};
use crate::scalar::{format_rational, Rational, Scalar};
use crate::scan::{CaseReport, Certificate, ScanOutcome, ScanSummary};
use crate::solver::SolutionSpace;

pub const SCHEMA: &str = "lrc/1";

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn vec3_json(v: &[Rational; 3]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn row_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn space_json(s: &SolutionSpace<Rational>) -> Value {
    json!({
        "dimension": s.dimension,
        "basis": s.basis.iter().map(vec3_json).collect::<Vec<_>>(),
    })
}

fn space_json_opt(s: Option<&SolutionSpace<Rational>>) -> Value {
    match s {
        Some(s) => space_json(s),
        None => Value::Null,
    }
}

fn params_json(family: Family, p: &Params<Rational>) -> Value {
    let mut obj = serde_json::Map::new();
    for (name, value) in param_list(family, p) {
        obj.insert(name.to_string(), Value::String(value));
    }
    Value::Object(obj)
}

fn form_json(t: &BilinearForm<Rational>) -> Value {
    Value::Array(t.t.iter().map(|row| vec3_json(row)).collect())
}

fn notes_json(families: impl Iterator<Item = Family>) -> Value {
    let mut seen = Vec::new();
    let mut notes = Vec::new();
    for family in families {
        if seen.contains(&family) {
            continue;
        }
        seen.push(family);
        if let Some(note) = family_constraint_note(family) {
            notes.push(Value::String(format!("{family}: {note}")));
        }
    }
    Value::Array(notes)
}

/// Serialize a JSON value with a trailing newline; byte-stable for equal
/// inputs (object keys are ordered).
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("in-memory JSON serializes");
    s.push('\n');
    s
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "case": c.case_text,
        "system": c.system.rows.iter().map(|r| vec3_json(r)).collect::<Vec<_>>(),
        "rref": c.rref.iter().map(|r| row_json(r)).collect::<Vec<_>>(),
        "predicted": space_json_opt(c.predicted.as_ref()),
        "computed": space_json(&c.computed),
    })
}

fn case_report_json(r: &CaseReport) -> Value {
    json!({
        "family": r.family.to_string(),
        "flavor": r.flavor.to_string(),
        "params": params_json(r.family, &r.params),
        "case": r.case_id,
        "predicted": space_json_opt(r.predicted.as_ref()),
        "computed": space_json(&r.computed),
        "verdict": r.verdict.to_string(),
        "certificate": match &r.certificate {
            Some(c) => certificate_json(c),
            None => Value::Null,
        },
    })
}

/// Full scan report as JSON.
pub fn scan_to_json(outcome: &ScanOutcome) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "scan",
        "summary": {
            "total": outcome.summary.total,
            "match": outcome.summary.matches,
            "mismatch": outcome.summary.mismatches,
            "uncovered": outcome.summary.uncovered,
        },
        "notes": notes_json(outcome.reports.iter().map(|r| r.family)),
        "reports": outcome.reports.iter().map(case_report_json).collect::<Vec<_>>(),
    })
}

/// Validate and parse a previously written scan JSON file.
pub fn parse_scan_json(text: &str) -> Result<Value> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::ConfigError(format!("malformed scan JSON: {e}")))?;
    if v.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(Error::ConfigError(format!(
            "unsupported report schema (want \"{SCHEMA}\")"
        )));
    }
    if v.get("kind").and_then(Value::as_str) != Some("scan") {
        return Err(Error::ConfigError(
            "not a scan report (kind != \"scan\")".to_string(),
        ));
    }
    Ok(v)
}

/// Verdict counts (total, match, mismatch, uncovered) from scan JSON.
pub fn json_verdict_counts(v: &Value) -> Result<ScanSummary> {
    let field = |name: &str| -> Result<usize> {
        v.get("summary")
            .and_then(|s| s.get(name))
            .and_then(Value::as_u64)
            .map(|n| n as usize)
            .ok_or_else(|| Error::ConfigError(format!("scan JSON lacks summary.{name}")))
    };
    Ok(ScanSummary {
        total: field("total")?,
        matches: field("match")?,
        mismatches: field("mismatch")?,
        uncovered: field("uncovered")?,
    })
}

const PARAM_ORDER: [&str; 5] = ["alpha", "beta", "gamma", "delta", "eta"];

fn params_cell(params: &Value) -> String {
    let mut parts = Vec::new();
    if let Some(obj) = params.as_object() {
        for name in PARAM_ORDER {
            if let Some(Value::String(s)) = obj.get(name) {
                parts.push(format!("{name}={s}"));
            }
        }
    }
    parts.join(";")
}

/// CSV rendering of scan JSON: one row per point.
pub fn json_to_csv(v: &Value) -> Result<String> {
    let reports = v
        .get("reports")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::ConfigError("scan JSON lacks a reports array".to_string()))?;
    let mut out = String::from("family,flavor,params,case,predicted_dim,computed_dim,verdict\n");
    for r in reports {
        let s = |name: &str| -> Result<&str> {
            r.get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::ConfigError(format!("report lacks field {name}")))
        };
        let dim = |name: &str| -> String {
            match r.get(name) {
                Some(Value::Object(o)) => o
                    .get("dimension")
                    .and_then(Value::as_u64)
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                _ => String::new(),
            }
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            s("family")?,
            s("flavor")?,
            params_cell(r.get("params").unwrap_or(&Value::Null)),
            s("case")?,
            dim("predicted"),
            dim("computed"),
            s("verdict")?,
        ));
    }
    Ok(out)
}

pub fn scan_to_csv(outcome: &ScanOutcome) -> String {
    json_to_csv(&scan_to_json(outcome)).expect("in-memory scan JSON is well-formed")
}

fn space_text(v: &Value) -> String {
    match v {
        Value::Object(o) => {
            let dim = o.get("dimension").and_then(Value::as_u64).unwrap_or(0);
            let basis = o
                .get("basis")
                .and_then(Value::as_array)
                .map(|rows| {
                    rows.iter()
                        .map(|row| {
                            let xs: Vec<&str> = row
                                .as_array()
                                .map(|a| a.iter().filter_map(Value::as_str).collect())
                                .unwrap_or_default();
                            format!("({})", xs.join(", "))
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .unwrap_or_default();
            if dim == 0 {
                "dim 0 (trivial)".to_string()
            } else {
                format!("dim {dim}, span{{{basis}}}")
            }
        }
        _ => "(none)".to_string(),
    }
}

fn rows_text(v: Option<&Value>) -> String {
    v.and_then(Value::as_array)
        .map(|rows| {
            rows.iter()
                .map(|row| {
                    let xs: Vec<&str> = row
                        .as_array()
                        .map(|a| a.iter().filter_map(Value::as_str).collect())
                        .unwrap_or_default();
                    format!("[{}]", xs.join(", "))
                })
                .collect::<Vec<_>>()
                .join("  ")
        })
        .unwrap_or_default()
}

/// Plain-text rendering of scan JSON: verdict counts, report notes, and a
/// full certificate block per non-Match point.
pub fn json_to_text(v: &Value) -> Result<String> {
    let summary = json_verdict_counts(v)?;
    let reports = v
        .get("reports")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::ConfigError("scan JSON lacks a reports array".to_string()))?;
    let mut out = String::new();
    out.push_str("scan report (lrc/1)\n");
    out.push_str(&format!(
        "total {}: match {}, mismatch {}, uncovered {}\n",
        summary.total, summary.matches, summary.mismatches, summary.uncovered
    ));
    out.push_str(&format!(
        "match fraction: {:.4}\n",
        summary.match_fraction()
    ));
    if let Some(notes) = v.get("notes").and_then(Value::as_array) {
        for note in notes.iter().filter_map(Value::as_str) {
            out.push_str(&format!("note: {note}\n"));
        }
    }
    let mut n = 0usize;
    for r in reports {
        let verdict = r.get("verdict").and_then(Value::as_str).unwrap_or("");
        if verdict == "Match" {
            continue;
        }
        n += 1;
        let family = r.get("family").and_then(Value::as_str).unwrap_or("?");
        let flavor = r.get("flavor").and_then(Value::as_str).unwrap_or("?");
        let case = r.get("case").and_then(Value::as_str).unwrap_or("?");
        out.push_str(&format!(
            "\n[{n}] {verdict} {family}/{flavor} case {case} at {}\n",
            params_cell(r.get("params").unwrap_or(&Value::Null)).replace(';', ", ")
        ));
        if let Some(cert) = r.get("certificate").filter(|c| !c.is_null()) {
            let case_text = cert.get("case").and_then(Value::as_str).unwrap_or("");
            out.push_str(&format!("    case:      {case_text}\n"));
            out.push_str(&format!(
                "    predicted: {}\n",
                space_text(cert.get("predicted").unwrap_or(&Value::Null))
            ));
            out.push_str(&format!(
                "    computed:  {}\n",
                space_text(cert.get("computed").unwrap_or(&Value::Null))
            ));
            out.push_str(&format!("    system:    {}\n", rows_text(cert.get("system"))));
            out.push_str(&format!("    rref:      {}\n", rows_text(cert.get("rref"))));
        }
    }
    if n == 0 {
        out.push_str("no mismatched or uncovered points\n");
    }
    Ok(out)
}

pub fn scan_to_text(outcome: &ScanOutcome) -> String {
    json_to_text(&scan_to_json(outcome)).expect("in-memory scan JSON is well-formed")
}

fn float_vec3(v: &[Rational; 3]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| json!(<Rational as Scalar>::to_f64_approx(x)))
            .collect(),
    )
}

/// Single-point solve result as JSON.
pub fn solve_to_json(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
    space: &SolutionSpace<Rational>,
    float: bool,
) -> Value {
    let mut v = json!({
        "schema": SCHEMA,
        "kind": "solve",
        "family": family.to_string(),
        "flavor": flavor.to_string(),
        "params": params_json(family, p),
        "dimension": space.dimension,
        "basis": space.basis.iter().map(vec3_json).collect::<Vec<_>>(),
    });
    if float {
        v["basis_float"] = Value::Array(space.basis.iter().map(float_vec3).collect());
    }
    v
}

pub fn solve_to_text(
    family: Family,
    flavor: Flavor,
    p: &Params<Rational>,
    space: &SolutionSpace<Rational>,
    float: bool,
) -> String {
    let mut out = format!(
        "collineation space for {family}/{flavor} at {}\n",
        point_text(&param_list(family, p))
    );
    out.push_str(&format!("dimension: {}\n", space.dimension));
    for b in &space.basis {
        let xs: Vec<String> = b.iter().map(format_rational).collect();
        out.push_str(&format!("basis: ({})", xs.join(", ")));
        if float {
            let fs: Vec<String> = b
                .iter()
                .map(|x| format!("{:?}", <Rational as Scalar>::to_f64_approx(x)))
                .collect();
            out.push_str(&format!("  ≈ ({})", fs.join(", ")));
        }
        out.push('\n');
    }
    if space.dimension == 0 {
        out.push_str("basis: (none — trivial space)\n");
    }
    out
}

/// Derived tensors (connection coefficients, curvature, symmetrized Ricci)
/// as JSON.
pub fn derive_to_json(a: &LieAlgebra3<Rational>, flavor: Flavor, float: bool) -> Value {
    let conn = connection(a, flavor);
    let r = curvature(&conn, a);
    let ric = symmetric_ricci(a, flavor);
    let gamma_json: Vec<Value> = conn
        .gamma
        .iter()
        .map(|plane| Value::Array(plane.iter().map(|row| vec3_json(row)).collect()))
        .collect();
    let curv_json: Vec<Value> = r
        .r
        .iter()
        .map(|cube| {
            Value::Array(
                cube.iter()
                    .map(|plane| Value::Array(plane.iter().map(|row| vec3_json(row)).collect()))
                    .collect(),
            )
        })
        .collect();
    let mut v = json!({
        "schema": SCHEMA,
        "kind": "derive",
        "family": a.family.to_string(),
        "flavor": flavor.to_string(),
        "params": params_json(a.family, &a.params),
        "gamma": gamma_json,
        "curvature": curv_json,
        "ricci": form_json(&ric),
    });
    if float {
        v["ricci_float"] = Value::Array(ric.t.iter().map(float_vec3).collect());
    }
    if let Some(note) = family_constraint_note(a.family) {
        v["note"] = Value::String(format!("{}: {note}", a.family));
    }
    v
}

pub fn derive_to_text(a: &LieAlgebra3<Rational>, flavor: Flavor, float: bool) -> String {
    let conn = connection(a, flavor);
    let r = curvature(&conn, a);
    let ric = symmetric_ricci(a, flavor);
    let mut out = format!(
        "derived tensors for {}/{flavor} at {}\n",
        a.family,
        point_text(&param_list(a.family, &a.params))
    );
    if let Some(note) = family_constraint_note(a.family) {
        out.push_str(&format!("note: {}: {note}\n", a.family));
    }
    out.push_str("connection coefficients (nonzero):\n");
    let mut any = false;
    for i in 0..3 {
        for j in 0..3 {
            let row = &conn.gamma[i][j];
            if row.iter().all(|x| x.is_zero()) {
                continue;
            }
            any = true;
            let xs: Vec<String> = row.iter().map(format_rational).collect();
            out.push_str(&format!(
                "  nabla_e{} e{} = ({})\n",
                i + 1,
                j + 1,
                xs.join(", ")
            ));
        }
    }
    if !any {
        out.push_str("  (all zero)\n");
    }
    out.push_str("curvature R(e_i,e_j)e_k (nonzero, i<j):\n");
    any = false;
    for i in 0..3 {
        for j in (i + 1)..3 {
            for k in 0..3 {
                let row = &r.r[i][j][k];
                if row.iter().all(|x| x.is_zero()) {
                    continue;
                }
                any = true;
                let xs: Vec<String> = row.iter().map(format_rational).collect();
                out.push_str(&format!(
                    "  R(e{},e{})e{} = ({})\n",
                    i + 1,
                    j + 1,
                    k + 1,
                    xs.join(", ")
                ));
            }
        }
    }
    if !any {
        out.push_str("  (all zero)\n");
    }
    out.push_str("symmetrized Ricci form:\n");
    for i in 0..3 {
        let xs: Vec<String> = ric.t[i].iter().map(format_rational).collect();
        out.push_str(&format!("  [{}]", xs.join(", ")));
        if float {
            let fs: Vec<String> = ric.t[i]
                .iter()
                .map(|x| format!("{:?}", <Rational as Scalar>::to_f64_approx(x)))
                .collect();
            out.push_str(&format!("  ≈ [{}]", fs.join(", ")));
        }
        out.push('\n');
    }
    out
}

fn discrepancy_json(d: &crate::reference::LemmaDiscrepancy) -> Value {
    let mut point = serde_json::Map::new();
    for (k, v) in &d.point {
        point.insert((*k).to_string(), Value::String(v.clone()));
    }
    json!({
        "family": d.family.to_string(),
        "flavor": d.flavor.to_string(),
        "point": Value::Object(point),
        "location": d.location,
        "reference": d.reference,
        "computed": d.computed,
        "certificate": d.certificate,
    })
}

/// Reference check table as JSON.
pub fn lemma_checks_to_json(checks: &[LemmaCheck], seed: u64, points_per_check: usize) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "check-lemmas",
        "seed": seed,
        "points_per_check": points_per_check,
        "checks": checks.iter().map(|c| json!({
            "family": c.family.to_string(),
            "flavor": c.flavor.to_string(),
            "check": c.kind.to_string(),
            "points": c.points_checked,
            "clean_points": c.clean_points,
            "fully_certified": c.fully_certified(),
            "discrepancies": c.discrepancies.iter().map(discrepancy_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Reference check table as text: one row per (family, flavor, check kind).
pub fn lemma_checks_to_text(checks: &[LemmaCheck]) -> String {
    let mut out = String::from("reference checks (exact, per sampled point)\n");
    for c in checks {
        let status = if c.discrepancies.is_empty() {
            "agrees".to_string()
        } else {
            let mut locations: Vec<&str> =
                c.discrepancies.iter().map(|d| d.location.as_str()).collect();
            locations.sort_unstable();
            locations.dedup();
            format!(
                "{} divergences ({}) at: {}",
                c.discrepancies.len(),
                if c.fully_certified() {
                    "all certified"
                } else {
                    "MISSING CERTIFICATES"
                },
                locations.join(", ")
            )
        };
        out.push_str(&format!(
            "{}/{} {}: {}/{} points clean — {}\n",
            c.family, c.flavor, c.kind, c.clean_points, c.points_checked, status
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::{default_grid, scan};

    fn small_scan() -> ScanOutcome {
        let mut cfg = default_grid();
        cfg.families = vec![Family::G2];
        scan(&cfg).unwrap()
    }

    #[test]
    fn json_has_schema_and_roundtrips() {
        let out = small_scan();
        let v = scan_to_json(&out);
        assert_eq!(v["schema"], "lrc/1");
        let text = render_json(&v);
        let parsed = parse_scan_json(&text).unwrap();
        assert_eq!(json_verdict_counts(&parsed).unwrap(), out.summary);
        assert_eq!(json_to_csv(&parsed).unwrap(), scan_to_csv(&out));
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = small_scan();
        let b = small_scan();
        assert_eq!(render_json(&scan_to_json(&a)), render_json(&scan_to_json(&b)));
        assert_eq!(scan_to_csv(&a), scan_to_csv(&b));
        assert_eq!(scan_to_text(&a), scan_to_text(&b));
    }

    #[test]
    fn csv_shape() {
        let out = small_scan();
        let csv = scan_to_csv(&out);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "family,flavor,params,case,predicted_dim,computed_dim,verdict"
        );
        assert_eq!(lines.count(), out.summary.total);
        assert!(csv.contains("G2,canonical,alpha=1;beta=1;gamma=1,2,1,0,Mismatch"));
    }

    #[test]
    fn text_mentions_suspect_case() {
        let out = small_scan();
        let text = scan_to_text(&out);
        assert!(text.contains("G2/canonical/2"));
        assert!(text.contains("predicted: dim 1"));
    }

    #[test]
    fn solve_json_example() {
        use crate::algebra::make_group;
        use crate::solver::collineation_space;
        let p = Params {
            alpha: <Rational as Scalar>::from_int(0),
            beta: <Rational as Scalar>::from_int(2),
            gamma: <Rational as Scalar>::from_int(0),
            delta: <Rational as Scalar>::from_int(1),
            eta: None,
        };
        let a = make_group(Family::G7, p.clone()).unwrap();
        let space = collineation_space(&a, Flavor::KobayashiNomizu);
        let v = solve_to_json(Family::G7, Flavor::KobayashiNomizu, &p, &space, true);
        assert_eq!(v["dimension"], 1);
        assert_eq!(v["basis"][0][0], "1");
        assert_eq!(v["basis"][0][1], "-2");
        assert_eq!(v["basis"][0][2], "-2");
        let f = v["basis_float"][0][1].as_f64().unwrap();
        assert!((f + 2.0).abs() < 1e-12);
    }

    #[test]
    fn derive_text_all_zero_for_abelian_custom() {
        use crate::algebra::custom_group;
        use crate::metric::zero_vec;
        let a = custom_group::<Rational>(zero_vec(), zero_vec(), zero_vec()).unwrap();
        let text = derive_to_text(&a, Flavor::Canonical, false);
        assert!(text.contains("connection coefficients (nonzero):\n  (all zero)"));
        let v = derive_to_json(&a, Flavor::Canonical, false);
        assert_eq!(v["ricci"][0][0], "0");
    }
}
