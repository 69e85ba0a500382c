//! Reading period matrices, curves, characteristics and arguments.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use theta_core::{BranchSet64, Characteristic, EvalConfig, HalfChar, RiemannMatrix64};

use crate::error::{CliError, CliResult};

pub const TOL_RANGE: (f64, f64) = (1e-13, 1e-3);

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// A period matrix file, or any object carrying one under `"tau"` (such as `curve periods` output).
pub fn read_tau(path: &Path) -> CliResult<RiemannMatrix64> {
    let v: serde_json::Value = read_json(path)?;
    let inner = match v.get("tau") {
        Some(t) if v.get("entries").is_none() => t.clone(),
        _ => v,
    };
    serde_json::from_value(inner).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_curve(path: &Path, genus: Option<usize>) -> CliResult<BranchSet64> {
    let b: BranchSet64 = read_json(path)?;
    if let Some(g) = genus {
        if g != b.genus() {
            return Err(theta_core::Error::GenusMismatch {
                expected: g,
                found: b.genus(),
            }
            .into());
        }
    }
    Ok(b)
}

pub fn check_tol(tol: f64) -> CliResult<f64> {
    if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&tol) {
        return Err(CliError::Usage(format!(
            "--tol {tol} outside [{:e}, {:e}]",
            TOL_RANGE.0, TOL_RANGE.1
        )));
    }
    Ok(tol)
}

pub fn eval_config(tol: Option<f64>) -> CliResult<EvalConfig> {
    let mut cfg = EvalConfig::default();
    if let Some(t) = tol {
        cfg.tol = check_tol(t)?;
    }
    Ok(cfg)
}

/// Compact digits over `denom`, or a JSON characteristic object.
pub fn parse_char(s: &str, denom: u32) -> CliResult<Characteristic> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad characteristic {s}: {e}")));
    }
    Ok(Characteristic::parse_compact(s, denom)?)
}

pub fn parse_half(s: &str) -> CliResult<HalfChar> {
    Ok(s.trim().parse::<HalfChar>()?)
}

/// `"0"` for the origin, otherwise one complex entry per coordinate, comma separated.
pub fn parse_z(s: &str, genus: usize) -> CliResult<Vec<Complex64>> {
    let s = s.trim();
    if s == "0" {
        return Ok(vec![Complex64::new(0.0, 0.0); genus]);
    }
    let z = s.split(',').map(parse_complex).collect::<CliResult<Vec<_>>>()?;
    if z.len() != genus {
        return Err(CliError::Usage(format!("--z has {} entries, genus is {genus}", z.len())));
    }
    Ok(z)
}

/// Accepts `a`, `bi`, `a+bi`, `a-bi` and the bare `i`.
pub fn parse_complex(s: &str) -> CliResult<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("cannot parse complex number {s:?}"));
    let num = |x: &str| x.parse::<f64>().map_err(|_| bad());
    let imag = |x: &str| match x {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => num(x),
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(num(&t)?, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(num(&body[..k])?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}
