//! Command line front end. Every subcommand prints one JSON object
//! (`--text` gives `key: value` lines instead); `sample` prints CSV.
//!
//! Exit codes: 0 success or membership, 1 clean non-membership or identity
//! failure, 2 malformed input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::campaign::{run_campaign, CampaignConfig};
use crate::characterization::{eval_r, is_ratio_vector_with, peyser_bounds, MembershipVerdict, Tolerances};
use crate::field::{format_f64, format_rational, is_fraction_literal, parse_rational, Rational, Scalar};
use crate::quartic::{forward, forward_exact, ExactForward, QuarticRoots, RatioVector, DEFAULT_TOL};
use crate::reconstruction::{in_line_family_interval, line_family, reconstruct, round_trip, solve_w, Mode};
use crate::surd::Surd;
use crate::symbolic::{verify_all, PolySet};
use crate::Error;

pub const TOL_ENV: &str = "RATVEC_DEFAULT_TOL";
const SCHEMA: &str = "v1";

#[derive(Parser, Debug)]
#[command(name = "ratvec", version, about = "Ratio vectors of quartic polynomials")]
struct Cli {
    /// Print `key: value` lines instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ratio vector of the quartic with the given roots.
    Forward {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Relative bisection tolerance for critical points.
        #[arg(long)]
        tol: Option<f64>,
        /// JSON output (the default).
        #[arg(long)]
        json: bool,
    },
    /// Membership test for a triple `u,v,w`.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        uvw: String,
        /// Read decimal inputs as exact rationals.
        #[arg(long)]
        exact: bool,
    },
    /// Canonical quartic `(x+1)x(x-r)(x-s)` with ratio vector `u,v,w`.
    Reconstruct {
        #[arg(long, allow_hyphen_values = true)]
        uvw: String,
        /// Evaluate the formulas even off the admissible set.
        #[arg(long)]
        unchecked: bool,
    },
    /// Exact solutions `w` of `R(u, v, w) = 0`.
    SolveW {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// The point `(C, 1/2, 1-C)`.
    Line {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Bounds `1/(n-k+1) < σk < k/(k+1)`.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Check the polynomial identity suite.
    VerifyIdentities,
    /// Seeded random campaign, written as CSV.
    Sample {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use these roots for every row.
        #[arg(long, allow_hyphen_values = true)]
        fixed: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Serialize, Debug)]
struct Report {
    schema: &'static str,
    command: &'static str,
    verdict: String,
    region: Option<String>,
    values: Map<String, Value>,
    diagnostics: Vec<String>,
}

impl Report {
    fn new(command: &'static str, verdict: impl Into<String>) -> Self {
        Report { schema: SCHEMA, command, verdict: verdict.into(), region: None, values: Map::new(), diagnostics: Vec::new() }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }
}

enum Failure {
    Input(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotARatioVector | Error::FormulaDegenerate(_) | Error::DivisionByZero => Failure::Other(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = std::result::Result<(Option<Report>, i32), Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let text = cli.text;
    let result = match default_tol() {
        Ok(tol) => dispatch(cli.command, tol, out),
        Err(f) => Err(f),
    };
    match result {
        Ok((report, code)) => {
            if let Some(report) = report {
                let written = if text { write_text(&report, out) } else { write_json(&report, out) };
                match written {
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return code,
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return 1;
                    }
                    Ok(()) => {}
                }
            }
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn default_tol() -> std::result::Result<f64, Failure> {
    match std::env::var(TOL_ENV) {
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(Failure::Input(format!("{TOL_ENV} must be a positive number, got {text:?}"))),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn write_json(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, report)?;
    writeln!(out)
}

fn write_text(report: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "command: {}", report.command)?;
    writeln!(out, "verdict: {}", report.verdict)?;
    if let Some(region) = &report.region {
        writeln!(out, "region: {region}")?;
    }
    for (key, value) in &report.values {
        match value {
            Value::String(s) => writeln!(out, "{key}: {s}")?,
            other => writeln!(out, "{key}: {other}")?,
        }
    }
    for d in &report.diagnostics {
        writeln!(out, "note: {d}")?;
    }
    Ok(())
}

fn dispatch(command: Command, default_tol: f64, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Forward { roots, tol, json: _ } => cmd_forward(&roots, tol.unwrap_or(default_tol)),
        Command::Check { uvw, exact } => with_triple(&uvw, exact, CheckCmd),
        Command::Reconstruct { uvw, unchecked } => {
            with_triple(&uvw, false, ReconstructCmd { unchecked, tol: default_tol })
        }
        Command::SolveW { u, v } => cmd_solve_w(&u, &v),
        Command::Line { c } => cmd_line(&c),
        Command::Bounds { n, k } => cmd_bounds(n, k),
        Command::VerifyIdentities => cmd_identities(),
        Command::Sample { count, seed, out: path, fixed, tol } => {
            cmd_sample(count, seed, path, fixed.as_deref(), tol, out)
        }
    }
}

fn split_list(text: &str, expected: usize) -> std::result::Result<Vec<String>, Failure> {
    let parts: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if parts.len() != expected || parts.iter().any(String::is_empty) {
        return Err(Failure::Input(format!("expected {expected} comma separated values, got {text:?}")));
    }
    Ok(parts)
}

fn parse_float(text: &str) -> std::result::Result<f64, Failure> {
    if is_fraction_literal(text) {
        return Ok(parse_rational(text)?.to_f64());
    }
    match text.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Failure::Input(format!("not a finite number: {text:?}"))),
    }
}

/// Generic action on a ratio vector in whichever field the input selects.
trait TripleCmd {
    fn run<S: Scalar>(self, rv: RatioVector<S>) -> Outcome;
}

fn with_triple<C: TripleCmd>(text: &str, exact: bool, cmd: C) -> Outcome {
    let parts = split_list(text, 3)?;
    if parts.iter().any(|p| p.contains("sqrt")) {
        let v: Vec<Surd> = parts.iter().map(|p| p.parse::<Surd>()).collect::<Result<_, _>>()?;
        return cmd.run(RatioVector::new(v[0].clone(), v[1].clone(), v[2].clone()));
    }
    if exact || parts.iter().all(|p| is_fraction_literal(p)) {
        let v: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_, _>>()?;
        return cmd.run(RatioVector::new(v[0].clone(), v[1].clone(), v[2].clone()));
    }
    let v: Vec<f64> = parts.iter().map(|p| parse_float(p)).collect::<Result<_, _>>()?;
    cmd.run(RatioVector::new(v[0], v[1], v[2]))
}

fn path_name<S: Scalar>() -> &'static str {
    if S::EXACT {
        "exact"
    } else {
        "float"
    }
}

fn verdict_values<S: Scalar>(report: &mut Report, verdict: &MembershipVerdict<S>) {
    report.region = Some(verdict.region.to_string());
    report.set("R", verdict.r_value.render());
    report.set("k", verdict.k_value.render());
    report.set("on_surface", verdict.on_surface);
    let bounds: Vec<Value> = verdict
        .bound_report
        .iter()
        .map(|b| json!({"name": b.name, "bound": b.bound.render(), "approx": b.bound.to_f64(), "satisfied": b.satisfied}))
        .collect();
    report.set("bounds", bounds);
    report.diagnostics.extend(verdict.diagnostics.iter().cloned());
}

fn membership_word(member: bool) -> &'static str {
    if member {
        "member"
    } else {
        "non-member"
    }
}

struct CheckCmd;

impl TripleCmd for CheckCmd {
    fn run<S: Scalar>(self, rv: RatioVector<S>) -> Outcome {
        let verdict = is_ratio_vector_with(&rv, &Tolerances::default())?;
        let mut report = Report::new("check", membership_word(verdict.is_ratio_vector));
        report.set("path", path_name::<S>());
        report.set("u", rv.u.render());
        report.set("v", rv.v.render());
        report.set("w", rv.w.render());
        verdict_values(&mut report, &verdict);
        Ok((Some(report), if verdict.is_ratio_vector { 0 } else { 1 }))
    }
}

struct ReconstructCmd {
    unchecked: bool,
    tol: f64,
}

impl TripleCmd for ReconstructCmd {
    fn run<S: Scalar>(self, rv: RatioVector<S>) -> Outcome {
        let mode = if self.unchecked { Mode::Unchecked } else { Mode::Checked };
        let rec = match reconstruct(&rv, mode) {
            Ok(rec) => rec,
            Err(Error::NotARatioVector) => {
                let verdict = is_ratio_vector_with(&rv, &Tolerances::default())?;
                let mut report = Report::new("reconstruct", "non-member");
                verdict_values(&mut report, &verdict);
                report.diagnostics.push("not a ratio vector; use --unchecked to evaluate the formulas anyway".into());
                return Ok((Some(report), 1));
            }
            Err(e) => return Err(e.into()),
        };
        let mut report = Report::new("reconstruct", if rec.off_variety { "off-variety" } else { "member" });
        report.set("path", path_name::<S>());
        report.set("r", rec.r.render());
        report.set("s", rec.s.render());
        report.set("r_approx", rec.r.to_f64());
        report.set("s_approx", rec.s.to_f64());
        report.set("s_alt", rec.s_alt.as_ref().map(|x| Value::from(x.render())).unwrap_or(Value::Null));
        report.set("coefficients", rec.coefficients.iter().map(|c| c.render()).collect::<Vec<_>>());
        report.set("critical_points", rec.critical_points.iter().map(|c| c.render()).collect::<Vec<_>>());
        if !rec.off_variety {
            let trip = round_trip(&rv, self.tol)?;
            report.set("interlaced", trip.interlaced);
            if let Some(v) = trip.derivative_vanishes {
                report.set("derivative_vanishes", v);
            }
            report.set("round_trip_error", trip.max_numeric_deviation());
        } else {
            report.diagnostics.push("point is not a ratio vector; values are formal".into());
        }
        Ok((Some(report), 0))
    }
}

fn cmd_forward(text: &str, tol: f64) -> Outcome {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(format!("{tol}")).into());
    }
    let parts = split_list(text, 4)?;
    let mut report = Report::new("forward", "");
    let tolerances = Tolerances::default();
    if parts.iter().all(|p| is_fraction_literal(p)) {
        let roots: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_, _>>()?;
        let quartic = QuarticRoots::new([roots[0].clone(), roots[1].clone(), roots[2].clone(), roots[3].clone()])?;
        report.set("path", "exact");
        match forward_exact(&quartic, tol)? {
            ExactForward::Closed { critical_points, ratios } => {
                report.set("closed_form", true);
                report.set("critical_points", critical_points.iter().map(Surd::render).collect::<Vec<_>>());
                report.set("critical_points_approx", critical_points.iter().map(|x| x.to_f64()).collect::<Vec<_>>());
                set_ratios(&mut report, &ratios);
                let verdict = is_ratio_vector_with(&ratios, &tolerances)?;
                report.verdict = membership_word(verdict.is_ratio_vector).into();
                verdict_values(&mut report, &verdict);
            }
            ExactForward::Enclosed(fw) => {
                report.set("closed_form", false);
                let crits = fw.critical_points.points.clone().map(|x| x.to_f64());
                report.set("critical_points", crits.to_vec());
                let enclosures: Vec<Value> =
                    fw.ratio_enclosures.iter().map(|(lo, hi)| json!([lo.to_f64(), hi.to_f64()])).collect();
                report.set("ratio_enclosures", enclosures);
                let rv = fw.ratios.to_f64();
                set_ratios(&mut report, &rv);
                let verdict = is_ratio_vector_with(&rv, &tolerances)?;
                report.verdict = membership_word(verdict.is_ratio_vector).into();
                verdict_values(&mut report, &verdict);
            }
        }
    } else {
        let roots: Vec<f64> = parts.iter().map(|p| parse_float(p)).collect::<Result<_, _>>()?;
        let quartic = QuarticRoots::new([roots[0], roots[1], roots[2], roots[3]])?;
        let fw = forward(&quartic, tol)?;
        report.set("path", "float");
        report.set("critical_points", fw.critical_points.points.to_vec());
        set_ratios(&mut report, &fw.ratios);
        let verdict = is_ratio_vector_with(&fw.ratios, &tolerances)?;
        report.verdict = membership_word(verdict.is_ratio_vector).into();
        verdict_values(&mut report, &verdict);
    }
    Ok((Some(report), 0))
}

fn set_ratios<S: Scalar>(report: &mut Report, rv: &RatioVector<S>) {
    report.set("u", rv.u.render());
    report.set("v", rv.v.render());
    report.set("w", rv.w.render());
    if S::EXACT {
        report.set("ratios_approx", rv.to_f64().to_array().to_vec());
    }
}

fn cmd_solve_w(u: &str, v: &str) -> Outcome {
    let (u, v) = (parse_rational(u)?, parse_rational(v)?);
    let roots = solve_w(&u, &v)?;
    let members = roots.iter().filter(|r| r.verdict.is_ratio_vector).count();
    let mut report = Report::new("solve-w", if members > 0 { "member" } else { "non-member" });
    report.set("u", format_rational(&u));
    report.set("v", format_rational(&v));
    let list: Vec<Value> = roots
        .iter()
        .map(|r| {
            json!({
                "w": r.w.render(),
                "approx": r.w.to_f64(),
                "member": r.verdict.is_ratio_vector,
                "region": r.verdict.region.as_str(),
                "k": r.verdict.k_value.render(),
            })
        })
        .collect();
    report.set("roots", list);
    if let Some(first) = roots.iter().find(|r| r.verdict.is_ratio_vector) {
        report.region = Some(first.verdict.region.to_string());
        report.set("w", first.w.render());
    }
    Ok((Some(report), 0))
}

fn cmd_line(c: &str) -> Outcome {
    let c = parse_rational(c)?;
    let point = line_family(&c)?;
    let member = point.verdict.is_ratio_vector;
    let mut report = Report::new("line", membership_word(member));
    report.set("c", format_rational(&c));
    report.set("point", point.point.to_array().iter().map(format_rational).collect::<Vec<_>>());
    report.set("in_interval", in_line_family_interval(&c));
    report.set("k_on_line", format_rational(&point.k_on_line));
    verdict_values(&mut report, &point.verdict);
    if let Some(rec) = &point.reconstruction {
        report.set("r", format_rational(&rec.r));
        report.set("s", format_rational(&rec.s));
    }
    // R must vanish identically on the line
    if !eval_r(&point.point.u, &point.point.v, &point.point.w).is_zero_value() {
        report.diagnostics.push("R does not vanish on the line point".into());
    }
    Ok((Some(report), if member { 0 } else { 1 }))
}

fn cmd_bounds(n: u32, k: u32) -> Outcome {
    let (lo, hi) = peyser_bounds(n, k)?;
    let mut report = Report::new("bounds", "ok");
    report.set("n", n);
    report.set("k", k);
    report.set("lower", format_rational(&lo));
    report.set("upper", format_rational(&hi));
    report.set("lower_approx", lo.to_f64());
    report.set("upper_approx", hi.to_f64());
    Ok((Some(report), 0))
}

fn cmd_identities() -> Outcome {
    let outcomes = verify_all(&PolySet::from_tables())?;
    let all = outcomes.iter().all(|o| o.passed);
    let mut report = Report::new("verify-identities", if all { "pass" } else { "fail" });
    let mut entries = Vec::new();
    for o in &outcomes {
        let mut entry = json!({
            "id": o.id.as_str(),
            "passed": o.passed,
            "statement": o.id.description(),
            "detail": o.detail,
            "quotients": o.quotients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        if !o.passed {
            entry["witness"] = Value::from(o.witness.to_string());
        }
        entries.push(entry);
    }
    report.set("identities", entries);
    Ok((Some(report), if all { 0 } else { 1 }))
}

fn cmd_sample(
    count: usize,
    seed: u64,
    path: Option<PathBuf>,
    fixed: Option<&str>,
    tol: Option<f64>,
    out: &mut dyn Write,
) -> Outcome {
    if count == 0 {
        return Err(Failure::Input("--count must be at least 1".into()));
    }
    let mut config = CampaignConfig::new(count, seed);
    if let Some(t) = tol {
        config.tol = t;
    }
    if let Some(text) = fixed {
        let v: Vec<f64> = split_list(text, 4)?.iter().map(|p| parse_float(p)).collect::<Result<_, _>>()?;
        config.fixed = Some([v[0], v[1], v[2], v[3]]);
    }
    let campaign = run_campaign(&config)?;
    let clean = campaign.summary.violations.is_empty();
    let code = if clean { 0 } else { 1 };
    match path {
        Some(path) => {
            let file = File::create(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let mut writer = BufWriter::new(file);
            campaign.write_csv(&mut writer)?;
            writer.flush()?;
            let mut report = Report::new("sample", if clean { "pass" } else { "fail" });
            report.set("out", path.display().to_string());
            let summary = serde_json::to_value(&campaign.summary).map_err(|e| Failure::Other(e.to_string()))?;
            if let Value::Object(map) = summary {
                report.values.extend(map);
            }
            report.set("max_abs_r", format_f64(campaign.summary.max_abs_r));
            report.set("max_round_trip_error", format_f64(campaign.summary.max_round_trip_error));
            Ok((Some(report), code))
        }
        None => {
            campaign.write_csv(&mut *out)?;
            Ok((None, code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ratvec").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_of(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn forward_example1() {
        let (code, out, _) = call(&["forward", "--roots", "1,3/2,13/8,7/4"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["schema"], "v1");
        assert_eq!(v["region"], "Z1");
        assert_eq!(v["verdict"], "member");
    }

    #[test]
    fn check_nonmember_reports_k() {
        let (code, out, _) = call(&["check", "--uvw", "9/32,4/9,7/10", "--exact"]);
        assert_eq!(code, 1);
        let v = json_of(&out);
        assert_eq!(v["values"]["k"], "-127/12960");
        assert_eq!(v["verdict"], "non-member");
    }

    #[test]
    fn line_below_interval() {
        let (code, out, _) = call(&["line", "--c", "1/4"]);
        assert_eq!(code, 1);
        assert_eq!(json_of(&out)["verdict"], "non-member");
        let (code, out, _) = call(&["line", "--c", "3/10"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!((v["values"]["r"].as_str(), v["values"]["s"].as_str()), (Some("1/20"), Some("21/20")));
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(call(&["forward", "--roots", "1,2,3"]).0, 2);
        assert_eq!(call(&["forward", "--roots", "3,2,1,0"]).0, 2);
        assert_eq!(call(&["check", "--uvw", "a,b,c"]).0, 2);
        assert_eq!(call(&["bounds", "--n", "4", "--k", "5"]).0, 2);
        assert_eq!(call(&["sample", "--count", "0", "--seed", "1"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["forward", "--roots", "0,1,2,3", "--tol", "0"]).0, 2);
    }

    #[test]
    fn solve_w_example2() {
        let (code, out, _) = call(&["solve-w", "--u", "15/32", "--v", "5/9"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["values"]["w"], "(156303 - 9*sqrt(10054801))/211888");
        assert_eq!(v["region"], "Z3");
    }

    #[test]
    fn reconstruct_surd_input() {
        let (code, out, _) =
            call(&["reconstruct", "--uvw", "15/32,5/9,(156303 - 9*sqrt(10054801))/211888"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["values"]["derivative_vanishes"], true);
        let r = v["values"]["r_approx"].as_f64().unwrap();
        assert!((r - 5.9821).abs() < 5e-4);
        let (code, _, _) = call(&["reconstruct", "--uvw", "9/32,4/9,7/10"]);
        assert_eq!(code, 1);
        let (code, out, _) = call(&["reconstruct", "--uvw", "9/32,4/9,7/10", "--unchecked"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["verdict"], "off-variety");
    }

    #[test]
    fn text_output_and_bounds() {
        let (code, out, _) = call(&["bounds", "--n", "4", "--k", "2", "--text"]);
        assert_eq!(code, 0);
        assert!(out.contains("lower: 1/3"));
        assert!(out.contains("upper: 2/3"));
    }

    #[test]
    fn sample_is_deterministic() {
        let a = call(&["sample", "--count", "20", "--seed", "9"]);
        let b = call(&["sample", "--count", "20", "--seed", "9"]);
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
        assert_eq!(a.1.lines().count(), 21);
    }

    #[test]
    fn identities_pass() {
        let (code, out, _) = call(&["verify-identities"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["verdict"], "pass");
    }
}
