//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};
use theta_core::characteristics::{
    enumerate_chars, enumerate_goepel_groups, goepel_group_count, goepel_systems, span, system_census,
    GoepelGroup, SystemCensus, ENUMERATION_LIMIT,
};
use theta_core::genus3::{CaseId, Detector};
use theta_core::hyperelliptic::{check_vanishing_pattern, verify_frobenius, verify_thomae, VerifyOptions};
use theta_core::identities::all_identities;
use theta_core::random::{random_tau, rng};
use theta_core::theta::{theta_char, truncation_radius};
use theta_core::{
    generate_identity, period_matrix, EvalConfig, HalfChar, Identity, IdentityKind, NullGrid, RiemannMatrix64,
    VanishThresholds,
};

use crate::args::*;
use crate::error::{CliError, CliResult};
use crate::input::{check_tol, eval_config, parse_char, parse_half, parse_z, read_curve, read_tau};
use crate::output::{fmt_complex, object, Report};

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn compact(m: &HalfChar) -> Value {
    Value::String(m.to_string())
}

pub fn run(command: Command) -> CliResult<Report> {
    match command {
        Command::Chars(c) => chars(c),
        Command::Goepel(c) => goepel(c),
        Command::Theta(ThetaCommand::Eval {
            tau,
            characteristic,
            denom,
            z,
            tol,
        }) => theta_eval(&tau, &characteristic, denom, &z, tol),
        Command::Curve(c) => curve(c),
        Command::Identities(c) => identities(c),
        Command::Detect(d) => detect(d),
    }
}

fn half_space_guard(genus: usize) -> CliResult<()> {
    if genus == 0 {
        return Err(CliError::Usage("--genus must be at least 1".into()));
    }
    if 4f64.powi(genus as i32) > ENUMERATION_LIMIT as f64 {
        return Err(theta_core::Error::GuardExceeded(format!(
            "4^{genus} half characteristics exceeds the enumeration limit"
        ))
        .into());
    }
    Ok(())
}

fn chars(cmd: CharsCommand) -> CliResult<Report> {
    match cmd {
        CharsCommand::Count(CharSpace { genus, denom: 2 }) => {
            half_space_guard(genus)?;
            let (mut even, mut odd) = (0u64, 0u64);
            for m in HalfChar::all(genus) {
                if m.is_even() {
                    even += 1;
                } else {
                    odd += 1;
                }
            }
            Ok(Report::ok(json!({ "even": even, "odd": odd })))
        }
        CharsCommand::Count(CharSpace { genus, denom }) => {
            let all = enumerate_chars(genus, denom)?;
            let mut by_order: BTreeMap<String, u64> = BTreeMap::new();
            for c in &all {
                *by_order.entry(c.order().to_string()).or_default() += 1;
            }
            Ok(Report::ok(json!({ "total": all.len(), "by_order": by_order })))
        }
        CharsCommand::List(CharSpace { genus, denom: 2 }) => {
            half_space_guard(genus)?;
            let rows: Vec<Value> = HalfChar::all(genus)
                .map(|m| {
                    json!({
                        "characteristic": m.to_string(),
                        "parity": if m.is_even() { "even" } else { "odd" },
                    })
                })
                .collect();
            Ok(Report::ok(Value::Array(rows)))
        }
        CharsCommand::List(CharSpace { genus, denom }) => {
            let rows: Vec<Value> = enumerate_chars(genus, denom)?
                .iter()
                .map(|c| json!({ "characteristic": c.to_string(), "order": c.order() }))
                .collect();
            Ok(Report::ok(Value::Array(rows)))
        }
    }
}

fn group_value(g: &GoepelGroup) -> Value {
    Value::Array(g.elements().iter().map(compact).collect())
}

fn goepel(cmd: GoepelCommand) -> CliResult<Report> {
    match cmd {
        GoepelCommand::Enumerate { genus, rank } => {
            let groups = enumerate_goepel_groups(genus, rank)?;
            let expected = goepel_group_count(genus, rank);
            Ok(Report::verdict(
                json!({
                    "genus": genus,
                    "rank": rank,
                    "count": groups.len(),
                    "expected_count": expected,
                    "groups": groups.iter().map(group_value).collect::<Vec<_>>(),
                }),
                groups.len() as u64 == expected,
            ))
        }
        GoepelCommand::Classify { genus, rank, chars } if !chars.is_empty() => {
            let gens = chars.iter().map(|s| parse_half(s)).collect::<CliResult<Vec<_>>>()?;
            if let Some(bad) = gens.iter().find(|m| m.genus() != genus) {
                return Err(theta_core::Error::GenusMismatch {
                    expected: genus,
                    found: bad.genus(),
                }
                .into());
            }
            let group = GoepelGroup::from_elements(span(&gens)?)?;
            if rank.is_some_and(|r| r != group.rank()) {
                return Err(CliError::Usage(format!(
                    "generators span a group of rank {}, not {}",
                    group.rank(),
                    rank.unwrap()
                )));
            }
            let systems: Vec<Value> = goepel_systems(&group)
                .iter()
                .map(|s| {
                    json!({
                        "representative": s.representative.to_string(),
                        "tag": to_value(&s.tag),
                        "elements": s.elements().map(|m| compact(&m)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let census = system_census(&group);
            let predicted = SystemCensus::predicted(genus, group.rank());
            Ok(Report::verdict(
                json!({
                    "genus": genus,
                    "rank": group.rank(),
                    "group": group_value(&group),
                    "systems": systems,
                    "census": to_value(&census),
                    "predicted": to_value(&predicted),
                }),
                census == predicted,
            ))
        }
        GoepelCommand::Classify { genus, rank, .. } => {
            let rank = rank.ok_or_else(|| CliError::Usage("give --rank or at least one --char generator".into()))?;
            let groups = enumerate_goepel_groups(genus, rank)?;
            let predicted = SystemCensus::predicted(genus, rank);
            let matching = groups.iter().filter(|g| system_census(g) == predicted).count();
            Ok(Report::verdict(
                json!({
                    "genus": genus,
                    "rank": rank,
                    "groups": groups.len(),
                    "groups_matching_prediction": matching,
                    "predicted": to_value(&predicted),
                }),
                matching == groups.len(),
            ))
        }
    }
}

fn theta_eval(
    tau_path: &std::path::Path,
    characteristic: &str,
    denom: u32,
    z: &str,
    tol: Option<f64>,
) -> CliResult<Report> {
    let tau = read_tau(tau_path)?;
    let g = tau.genus();
    let cfg = eval_config(tol)?;
    let c = if characteristic.is_empty() {
        theta_core::Characteristic::zero(g)
    } else {
        parse_char(characteristic, denom)?
    };
    let z = parse_z(z, g)?;
    let value = theta_char(&c, &z, &tau, &cfg)?;
    Ok(Report::ok(json!({
        "characteristic": to_value(&c),
        "z": z.iter().map(|x| fmt_complex(*x)).collect::<Vec<_>>(),
        "value": fmt_complex(value),
        "modulus": value.norm(),
        "tol": cfg.tol,
        "radius": truncation_radius(&tau, &cfg)?,
    })))
}

fn complex_rows(rows: Vec<Vec<Complex64>>) -> Value {
    rows.into_iter()
        .map(|r| r.into_iter().map(fmt_complex).collect::<Vec<_>>())
        .collect()
}

fn sampling(s: &Sampling, default_samples: usize, default_tol: f64) -> CliResult<(usize, u64, f64)> {
    let tol = s.tol.map(check_tol).transpose()?.unwrap_or(default_tol);
    Ok((s.samples.unwrap_or(default_samples), s.seed, tol))
}

fn curve(cmd: CurveCommand) -> CliResult<Report> {
    let cfg = EvalConfig::default();
    match cmd {
        CurveCommand::Periods(input) => {
            let branch = read_curve(&input.input, input.genus)?;
            let data = period_matrix(&branch)?;
            Ok(Report::ok(object(vec![
                ("curve", to_value(&branch)),
                ("tau", to_value(&data.tau)),
                ("a_periods", complex_rows(data.a_periods.rows())),
                ("b_periods", complex_rows(data.b_periods.rows())),
                ("quadrature_nodes", json!(data.quadrature_nodes)),
            ])))
        }
        CurveCommand::Vanishing(input) => {
            let branch = read_curve(&input.input, input.genus)?;
            let data = period_matrix(&branch)?;
            let check = check_vanishing_pattern(&data, VanishThresholds::default(), &cfg)?;
            let vanishing: Vec<Value> = check
                .rows
                .iter()
                .filter(|r| r.observed)
                .map(|r| json!({ "characteristic": r.characteristic.to_string(), "subset": to_value(&r.subset) }))
                .collect();
            let mut v = to_value(&check);
            v["vanishing"] = Value::Array(vanishing);
            v["pass"] = json!(check.pass());
            Ok(Report::verdict(v, check.pass()))
        }
        CurveCommand::Thomae { curve, sampling: s } => {
            let branch = read_curve(&curve.input, curve.genus)?;
            let data = period_matrix(&branch)?;
            let (samples, seed, tolerance) = sampling(&s, 10, 1e-5)?;
            let rep = verify_thomae(&data, &VerifyOptions { samples, seed, tolerance, eval: cfg })?;
            Ok(Report::verdict(to_value(&rep), rep.pass))
        }
        CurveCommand::Frobenius { curve, sampling: s } => {
            let branch = read_curve(&curve.input, curve.genus)?;
            let data = period_matrix(&branch)?;
            let (samples, seed, tolerance) = sampling(&s, 50, 1e-7)?;
            let rep = verify_frobenius(&data, samples, seed, tolerance, &cfg)?;
            Ok(Report::verdict(to_value(&rep), rep.pass))
        }
    }
}

fn kind_of(k: KindArg) -> IdentityKind {
    match k {
        KindArg::Product => IdentityKind::Product,
        KindArg::Quartic => IdentityKind::Quartic,
    }
}

fn kinds_of(k: Option<KindArg>) -> Vec<IdentityKind> {
    match k {
        Some(k) => vec![kind_of(k)],
        None => vec![IdentityKind::Product, IdentityKind::Quartic],
    }
}

const MAX_IDENTITY_GENUS: usize = 4;

fn identity_genus_guard(genus: usize) -> CliResult<()> {
    if genus == 0 || genus > MAX_IDENTITY_GENUS {
        return Err(theta_core::Error::GuardExceeded(format!(
            "identity families are generated for genus 1..={MAX_IDENTITY_GENUS}, got {genus}"
        ))
        .into());
    }
    Ok(())
}

fn identities(cmd: IdentitiesCommand) -> CliResult<Report> {
    match cmd {
        IdentitiesCommand::Generate { genus, kind, chars } => {
            identity_genus_guard(genus)?;
            let kinds = kinds_of(kind);
            let ids: Vec<Identity> = match chars.as_slice() {
                [] => kinds.iter().flat_map(|&k| all_identities(genus, k)).collect(),
                [a, h] => {
                    let (a, h) = (parse_half(a)?, parse_half(h)?);
                    if a.genus() != genus || h.genus() != genus {
                        return Err(CliError::Usage(format!("characteristics must have genus {genus}")));
                    }
                    kinds
                        .iter()
                        .map(|&k| generate_identity(a, h, k))
                        .collect::<Result<_, _>>()?
                }
                _ => return Err(CliError::Usage("give either no --char or exactly two (a, then h)".into())),
            };
            let latex = ids
                .iter()
                .map(|id| format!("\\[ {} \\]", id.to_latex()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report {
                value: json!({ "genus": genus, "count": ids.len(), "identities": to_value(&ids) }),
                latex: Some(latex),
                passed: true,
            })
        }
        IdentitiesCommand::Verify {
            genus,
            kind,
            tau,
            sampling: s,
        } => {
            identity_genus_guard(genus)?;
            let ids: Vec<Identity> = kinds_of(kind).iter().flat_map(|&k| all_identities(genus, k)).collect();
            let (samples, seed, tolerance) = sampling(&s, 10, 1e-8)?;
            let cfg = EvalConfig::default();
            let taus: Vec<RiemannMatrix64> = match &tau {
                Some(path) => {
                    let t = read_tau(path)?;
                    if t.genus() != genus {
                        return Err(theta_core::Error::GenusMismatch {
                            expected: genus,
                            found: t.genus(),
                        }
                        .into());
                    }
                    vec![t]
                }
                None => {
                    let mut r = rng(seed);
                    (0..samples).map(|_| random_tau(genus, &mut r)).collect::<Result<_, _>>()?
                }
            };
            let mut worst = 0.0f64;
            let mut worst_case = Value::Null;
            for (k, t) in taus.iter().enumerate() {
                let grid = NullGrid::compute(t, 2, &cfg)?;
                for id in &ids {
                    let res = id.residual_with(&grid)?;
                    if res.relative > worst || worst_case.is_null() {
                        worst = res.relative;
                        worst_case = json!({
                            "kind": to_value(&id.kind),
                            "a": id.a.to_string(),
                            "h": id.h.to_string(),
                            "tau_index": k,
                            "absolute": res.absolute,
                        });
                    }
                }
            }
            let pass = worst < tolerance;
            Ok(Report::verdict(
                json!({
                    "genus": genus,
                    "identities": ids.len(),
                    "tau_source": if tau.is_some() { "file" } else { "random" },
                    "samples": taus.len(),
                    "seed": seed,
                    "max_rel_err": worst,
                    "worst_case": worst_case,
                    "tolerance": tolerance,
                    "pass": pass,
                }),
                pass,
            ))
        }
    }
}

fn detect(args: DetectArgs) -> CliResult<Report> {
    let cfg = eval_config(args.tol)?;
    let tau = match (&args.tau, &args.input) {
        (Some(p), None) => read_tau(p)?,
        (None, Some(p)) => period_matrix(&read_curve(p, Some(3))?)?.tau,
        _ => return Err(CliError::Usage("give exactly one of --tau or --input".into())),
    };
    let detector = Detector::new(&tau, VanishThresholds::default(), cfg)?;
    if let Some(name) = &args.case {
        let case: CaseId = name.parse()?;
        return Ok(Report::ok(to_value(&detector.detect(case))));
    }
    let report = detector.report();
    Ok(Report::verdict(to_value(&report), report.is_consistent()))
}
