use std::f64::consts::PI;
use std::path::Path;

use cohstate::cstates::{self, CsExpansion, Family, MAX_TRUNCATION};
use cohstate::dynamics::{self, AutocorrTrace, RevivalParams, Spectrum};
use cohstate::gaussfactor;
use cohstate::ladder::verify::{check_hyp_pair, check_laguerre_pair, check_su11, Su11Generators};
use cohstate::ladder::LadderOp;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::output::{csv_table, json, json_table};
use crate::{parse, usage, AutocorrArgs, CliError, ClosedFormArgs, CsEvalArgs, FactorArgs, FamilyArg, FamilyParams};
use crate::{Format, GridArgs, Outcome, RevivalsArgs, TraceArgs, VerifyAlgebraArgs};

fn ok(bytes: Vec<u8>) -> Result<Outcome, CliError> {
    Ok(Outcome { bytes, pass: true })
}

pub fn verify_algebra(a: &VerifyAlgebraArgs) -> Result<Outcome, CliError> {
    if a.max_degree < 1 {
        return Err(usage("--max-degree must be at least 1"));
    }
    let lambda = parse::rational(&a.lambda).map_err(usage)?;
    let hyp = match (&a.b, &a.c) {
        (Some(b), Some(c)) => Some((parse::rational(b).map_err(usage)?, parse::rational(c).map_err(usage)?)),
        _ => None,
    };

    let mut gens = Su11Generators::new(&lambda);
    if a.tamper_k3 {
        gens.k3 = LadderOp::K3 {
            lambda: &lambda + parse::rational("1").expect("literal"),
        };
    }
    let mut checks = check_su11(&gens, &lambda, a.max_degree)?;
    checks.push(check_laguerre_pair(&lambda, a.max_degree)?);
    if let Some((b, c)) = &hyp {
        checks.push(check_hyp_pair(b, c, a.max_degree)?);
    }
    let all_pass = checks.iter().all(|c| c.pass);

    let mut params = serde_json::Map::new();
    params.insert("lambda".into(), parse::show(&lambda).into());
    if let Some((b, c)) = &hyp {
        params.insert("b".into(), parse::show(b).into());
        params.insert("c".into(), parse::show(c).into());
    }
    let report = json!({
        "all_pass": all_pass,
        "checks": checks,
        "max_degree": a.max_degree,
        "params": params,
    });
    Ok(Outcome {
        bytes: json(&report)?,
        pass: all_pass,
    })
}

/// Family and real eigenvalue, with per-family defaults.
fn resolve_family(p: &FamilyParams) -> Result<(Family, f64), CliError> {
    match p.family {
        FamilyArg::Laguerre => {
            if p.rho.is_some() || p.q.is_some() {
                return Err(usage("--rho/--q apply to the pt family; use --lambda/--alpha"));
            }
            let lambda = p.lambda.unwrap_or(2.0);
            Ok((Family::Laguerre { lambda }, p.alpha.unwrap_or(3.0)))
        }
        FamilyArg::Pt => {
            if p.lambda.is_some() || p.alpha.is_some() {
                return Err(usage("--lambda/--alpha apply to the laguerre family; use --rho/--q"));
            }
            let rho = p.rho.unwrap_or(2.0);
            Ok((Family::PoschlTeller { rho }, p.q.unwrap_or(5.0)))
        }
    }
}

fn linspace(from: f64, to: f64, samples: usize) -> Result<Vec<f64>, CliError> {
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(usage(format!("grid needs finite from < to (got {from}, {to})")));
    }
    if samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let last = (samples - 1) as f64;
    Ok((0..samples)
        .map(|k| {
            if k + 1 == samples {
                to
            } else {
                from + (to - from) * (k as f64 / last)
            }
        })
        .collect())
}

fn grid(family: FamilyArg, g: &GridArgs, defaults: (f64, f64, usize)) -> Result<Vec<f64>, CliError> {
    let from = g.from.unwrap_or(defaults.0);
    let to = g.to.unwrap_or(defaults.1);
    let pts = linspace(from, to, g.samples.unwrap_or(defaults.2))?;
    match family {
        FamilyArg::Laguerre if from < 0.0 => Err(usage("x grid must lie in [0, inf)")),
        FamilyArg::Pt if from < 0.0 || to > PI => Err(usage("theta grid must lie in [0, pi]")),
        _ => Ok(pts),
    }
}

fn check_truncation(n: usize) -> Result<usize, CliError> {
    if n > MAX_TRUNCATION {
        return Err(usage(format!("--truncation must not exceed {MAX_TRUNCATION}")));
    }
    Ok(n)
}

/// Polynomial argument for a grid point: `x` itself, or `cos theta`.
fn poly_arg(family: FamilyArg, t: f64) -> f64 {
    match family {
        FamilyArg::Laguerre => t,
        FamilyArg::Pt => t.cos(),
    }
}

fn column(family: FamilyArg) -> &'static str {
    match family {
        FamilyArg::Laguerre => "x",
        FamilyArg::Pt => "theta",
    }
}

pub fn cs_eval(a: &CsEvalArgs) -> Result<Outcome, CliError> {
    let (family, re) = resolve_family(&a.params)?;
    let eig = Complex64::new(re, a.imag);
    let fam = a.params.family;
    let pts = grid(
        fam,
        &a.grid,
        match fam {
            FamilyArg::Laguerre => (0.0, 20.0, 400),
            FamilyArg::Pt => (0.0, PI, 400),
        },
    )?;
    let cs = match (a.truncation, family) {
        (Some(n), _) => CsExpansion::with_truncation(family, eig, check_truncation(n)?)?,
        (None, Family::Laguerre { lambda }) => cstates::build_laguerre_cs(lambda, eig, a.tail_tol)?,
        (None, Family::PoschlTeller { rho }) => cstates::build_pt_cs(rho, eig, a.tail_tol)?,
    };
    let values = pts
        .iter()
        .map(|&t| match fam {
            FamilyArg::Laguerre => cstates::eval_laguerre_cs(&cs, t),
            FamilyArg::Pt => cstates::eval_pt_cs(&cs, poly_arg(fam, t)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let header = [column(fam), "re", "im", "abs2"];
    let rows = pts.iter().zip(&values).map(|(&t, &v)| (t, v, v.norm_sqr()));
    ok(match a.format {
        Format::Csv => csv_table(header, rows)?,
        Format::Json => json_table(header, rows)?,
    })
}

#[derive(Serialize)]
struct ClosedFormReport {
    family: Family,
    eigenvalue: f64,
    truncation: usize,
    from: f64,
    to: f64,
    samples: usize,
    max_rel_error: f64,
    worst_at: f64,
    tol: f64,
    pass: bool,
}

pub fn closed_form_check(a: &ClosedFormArgs) -> Result<Outcome, CliError> {
    let (family, eig) = resolve_family(&a.params)?;
    let fam = a.params.family;
    let (defaults, default_n) = match fam {
        FamilyArg::Laguerre => ((0.1, 10.0, 100), 80),
        FamilyArg::Pt => ((0.3, 2.5, 100), 200),
    };
    let pts = grid(fam, &a.grid, defaults)?;
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(usage("--tol must be positive"));
    }
    let n = check_truncation(a.truncation.unwrap_or(default_n))?;
    let cs = CsExpansion::with_truncation(family, Complex64::new(eig, 0.0), n)?;

    let (mut max_rel_error, mut worst_at) = (0.0f64, pts[0]);
    for &t in &pts {
        let series = cs.series_unnormalized(poly_arg(fam, t)).re;
        let closed = match family {
            Family::Laguerre { lambda } => cstates::eval_laguerre_cs_closed(lambda, eig, t)?,
            Family::PoschlTeller { rho } => cstates::eval_pt_cs_closed(rho, eig, t)?,
        };
        let rel = (series - closed).abs() / closed.abs();
        if rel.is_nan() || rel > max_rel_error {
            max_rel_error = rel;
            worst_at = t;
        }
    }
    let pass = max_rel_error <= a.tol;
    let report = ClosedFormReport {
        family,
        eigenvalue: eig,
        truncation: n,
        from: pts[0],
        to: pts[pts.len() - 1],
        samples: pts.len(),
        max_rel_error,
        worst_at,
        tol: a.tol,
        pass,
    };
    Ok(Outcome {
        bytes: json(&report)?,
        pass,
    })
}

/// The configured state's weights evolved under the configured spectrum.
fn pipeline(a: &TraceArgs) -> Result<(AutocorrTrace, Spectrum), CliError> {
    let spectrum = spectrum_of(a)?;
    let cs = cstates::build_pt_cs(a.rho, Complex64::new(a.q, 0.0), a.tail_tol)?;
    let weights = cstates::weights(&cs);
    let t_max = match a.t_max {
        Some(t) => t,
        None => 2.0 * dynamics::revival_time(&spectrum)?.t_rev,
    };
    if a.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let times = dynamics::uniform_grid(t_max, a.samples)?;
    Ok((dynamics::autocorr(&weights, &spectrum, &times)?, spectrum))
}

fn spectrum_of(a: &TraceArgs) -> Result<Spectrum, CliError> {
    match &a.spectrum {
        Some(s) => parse::spectrum(s).map_err(usage),
        None => Ok(dynamics::pt_spectrum(a.rho)?),
    }
}

const TRACE_HEADER: [&str; 4] = ["t", "re", "im", "abs2"];

pub fn autocorr(a: &AutocorrArgs) -> Result<Outcome, CliError> {
    let (trace, _) = pipeline(&a.trace)?;
    let rows = (0..trace.len()).map(|k| (trace.times[k], trace.values[k], trace.magsq[k]));
    ok(match a.format {
        Format::Csv => csv_table(TRACE_HEADER, rows)?,
        Format::Json => json_table(TRACE_HEADER, rows)?,
    })
}

fn read_trace(path: &Path) -> Result<AutocorrTrace, CliError> {
    let mut r = csv::Reader::from_path(path)?;
    let header: Vec<&str> = r.headers()?.iter().collect();
    if header != TRACE_HEADER {
        return Err(usage(format!("{}: expected header t,re,im,abs2", path.display())));
    }
    let (mut times, mut values, mut magsq) = (Vec::new(), Vec::new(), Vec::new());
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let field = |k: usize| -> Result<f64, CliError> {
            rec.get(k)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| usage(format!("{}: bad value in data row {}", path.display(), i + 1)))
        };
        times.push(field(0)?);
        values.push(Complex64::new(field(1)?, field(2)?));
        magsq.push(field(3)?);
    }
    Ok(AutocorrTrace::from_samples(times, values, magsq)?)
}

pub fn revivals(a: &RevivalsArgs) -> Result<Outcome, CliError> {
    let (trace, spectrum) = match &a.input {
        Some(path) => (read_trace(path)?, None),
        None => {
            let (t, s) = pipeline(&a.trace)?;
            (t, Some(s))
        }
    };
    let t_rev = match (a.t_rev, spectrum) {
        (Some(t), _) => t,
        (None, Some(s)) => dynamics::revival_time(&s)?.t_rev,
        (None, None) => dynamics::revival_time(&spectrum_of(&a.trace)?)?.t_rev,
    };
    let params = RevivalParams {
        full_threshold: a.full_threshold,
        frac_threshold: a.frac_threshold,
        q_max: a.q_max,
    };
    ok(json(&dynamics::detect_revivals(&trace, t_rev, &params)?)?)
}

pub fn factor(a: &FactorArgs) -> Result<Outcome, CliError> {
    ok(json(&gaussfactor::factor_scan(a.n, a.m, a.threshold)?)?)
}
