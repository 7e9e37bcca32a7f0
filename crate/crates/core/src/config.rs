//! Configuration files (TOML): single-point parameter records, Custom
//! structure-constant tables, and scan grid descriptions. All rational
//! values are bit-exact — `"p/q"` strings or plain integers, never floats.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::algebra::{Family, Params};
use crate::error::{Error, Result};
use crate::metric::Vec3;
use crate::scalar::{parse_rational, Rational, Scalar};
use crate::scan::{default_grid, ScanConfig};

/// A rational literal as written in TOML: an integer or a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RatLit {
    Int(i64),
    Str(String),
}

fn to_rational(lit: &RatLit) -> Result<Rational> {
    match lit {
        RatLit::Int(n) => Ok(<Rational as Scalar>::from_int(*n)),
        RatLit::Str(s) => parse_rational(s).map_err(Error::ConfigError),
    }
}

fn toml_err(e: toml::de::Error) -> Error {
    Error::ConfigError(format!("TOML parse error: {e}"))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamFileRaw {
    family: String,
    alpha: Option<RatLit>,
    beta: Option<RatLit>,
    gamma: Option<RatLit>,
    delta: Option<RatLit>,
    eta: Option<i64>,
}

/// A parsed single-point parameter record.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamFile {
    pub family: Family,
    pub params: Params<Rational>,
}

/// Parse a parameter record: keys `family`, `alpha`, `beta`, `gamma`,
/// `delta`, `eta`; missing parameters default to 0 (η to absent).
pub fn load_params(text: &str) -> Result<ParamFile> {
    let raw: ParamFileRaw = toml::from_str(text).map_err(toml_err)?;
    let family: Family = raw.family.parse()?;
    let get = |lit: &Option<RatLit>| -> Result<Rational> {
        match lit {
            Some(l) => to_rational(l),
            None => Ok(<Rational as Scalar>::from_int(0)),
        }
    };
    let eta = match raw.eta {
        None => None,
        Some(1) => Some(1),
        Some(-1) => Some(-1),
        Some(other) => {
            return Err(Error::ConfigError(format!(
                "eta must be 1 or -1, got {other}"
            )))
        }
    };
    Ok(ParamFile {
        family,
        params: Params {
            alpha: get(&raw.alpha)?,
            beta: get(&raw.beta)?,
            gamma: get(&raw.gamma)?,
            delta: get(&raw.delta)?,
            eta,
        },
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsRaw {
    c12: [RatLit; 3],
    c13: [RatLit; 3],
    c23: [RatLit; 3],
}

/// Parse a Custom structure-constant table: keys `c12`, `c13`, `c23`, each a
/// three-entry array giving the bracket coefficients of [e₁,e₂], [e₁,e₃],
/// [e₂,e₃] in the frame basis.
pub fn load_constants(text: &str) -> Result<(Vec3<Rational>, Vec3<Rational>, Vec3<Rational>)> {
    let raw: ConstantsRaw = toml::from_str(text).map_err(toml_err)?;
    let conv = |lits: &[RatLit; 3]| -> Result<Vec3<Rational>> {
        Ok([
            to_rational(&lits[0])?,
            to_rational(&lits[1])?,
            to_rational(&lits[2])?,
        ])
    };
    Ok((conv(&raw.c12)?, conv(&raw.c13)?, conv(&raw.c23)?))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScanFileRaw {
    families: Option<Vec<String>>,
    flavors: Option<Vec<String>>,
    include_boundaries: Option<bool>,
    sets: Option<BTreeMap<String, Vec<RatLit>>>,
}

/// Parse a scan grid description. Every key is optional; omitted keys keep
/// the default grid's values (all catalog families, both non-LC flavors,
/// boundary points on, the default `main`/`dense` value sets).
pub fn load_scan_config(text: &str) -> Result<ScanConfig> {
    let raw: ScanFileRaw = toml::from_str(text).map_err(toml_err)?;
    let mut cfg = default_grid();
    if let Some(families) = raw.families {
        cfg.families = families
            .iter()
            .map(|s| s.parse::<Family>())
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(flavors) = raw.flavors {
        cfg.flavors = flavors
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(b) = raw.include_boundaries {
        cfg.include_boundaries = b;
    }
    if let Some(sets) = raw.sets {
        for (name, lits) in sets {
            let vals = lits
                .iter()
                .map(to_rational)
                .collect::<Result<Vec<Rational>>>()?;
            cfg.sets.insert(name, vals);
        }
    }
    Ok(cfg)
}
