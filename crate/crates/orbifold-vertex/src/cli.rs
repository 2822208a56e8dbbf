//! Command-line front end behind the `orbivertex` binary.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{vertex_by_transfer, TransferMode};
use crate::group::Group;
use crate::partition::Partition;
use crate::pyramid::{pyramid_series, Frame};
use crate::qseries::{default_names, Series, SeriesRecord};
use crate::rpc::{generating_function, uniqueness_scan, UniquenessRow};
use crate::vertex::{self, IdentityCheck, Legs};

#[derive(Debug, Parser)]
#[command(
    name = "orbivertex",
    version,
    about = "Orbifold DT vertices and pyramid partitions as exact truncated series"
)]
pub struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "ORBIVERTEX_WORKERS")]
    pub workers: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One-leg vertex `V_{∅∅ν}` for `Z2×Z2` or `Z/n`.
    Vertex(VertexArgs),
    /// Pyramid partition generating function.
    Pyramid(PyramidArgs),
    /// Restricted pyramid configurations for a leg.
    Rpc(RpcArgs),
    /// Which legs give equal diagonal and antidiagonal regions.
    Uniqueness(UniquenessArgs),
    /// Run the built-in series identities.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Enumerate,
    Transfer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    Antidiagonal,
    Diagonal,
}

impl From<FrameArg> for Frame {
    fn from(f: FrameArg) -> Frame {
        match f {
            FrameArg::Antidiagonal => Frame::Antidiagonal,
            FrameArg::Diagonal => Frame::Diagonal,
        }
    }
}

#[derive(Debug, Args)]
pub struct VertexArgs {
    /// `z2z2` or `z<n>`.
    #[arg(long, default_value = "z2z2")]
    pub group: Group,
    /// Leg partition as comma-separated parts; empty for no leg.
    #[arg(long, default_value = "")]
    pub leg: Partition,
    /// Methods to run, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "closed")]
    pub method: Vec<Method>,
    /// Truncation degree.
    #[arg(long, default_value_t = 6)]
    pub degree: u32,
    /// Fail when the methods disagree.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct PyramidArgs {
    /// Methods to run, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "enumerate")]
    pub method: Vec<Method>,
    /// Truncation degree.
    #[arg(long, default_value_t = 6)]
    pub degree: u32,
    /// Fail when the methods disagree.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct RpcArgs {
    /// Leg partition as comma-separated parts; empty for no leg.
    #[arg(long, default_value = "")]
    pub leg: Partition,
    /// Slicing frame of the restriction region.
    #[arg(long, value_enum, default_value_t = FrameArg::Antidiagonal)]
    pub frame: FrameArg,
    /// Region shift `l`.
    #[arg(long, short = 'l', default_value_t = 0)]
    pub shift: u32,
    /// Methods to run, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "enumerate")]
    pub method: Vec<Method>,
    /// Truncation degree.
    #[arg(long, default_value_t = 6)]
    pub degree: u32,
    /// Fail when the methods disagree.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct UniquenessArgs {
    /// Largest leg size scanned.
    #[arg(long, default_value_t = 6)]
    pub max_leg_size: u32,
    /// Comparison window; derived from each leg when omitted.
    #[arg(long)]
    pub window: Option<u32>,
    /// Region shifts, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "0,1")]
    pub shift: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Truncation degree.
    #[arg(long, default_value_t = 6)]
    pub degree: u32,
    /// Largest staircase leg used in the one-leg identities.
    #[arg(long, default_value_t = 4)]
    pub max_staircase: u32,
}

/// One computed series.
#[derive(Debug, Serialize)]
pub struct SeriesOutput {
    pub vertex: String,
    pub group: String,
    pub leg: Vec<u32>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame: Option<Frame>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<u32>,
    pub series: SeriesRecord,
    #[serde(skip)]
    raw: Series,
}

/// One identity from `verify`.
#[derive(Debug, Serialize)]
pub struct CheckOutput {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<Difference>,
}

#[derive(Debug, Serialize)]
pub struct Difference {
    pub exp: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a command before it is written out.
pub struct Report {
    pub body: String,
    pub mismatches: Vec<String>,
}

impl Report {
    /// 0 when every comparison agreed, 1 otherwise.
    pub fn status(&self) -> u8 {
        u8::from(!self.mismatches.is_empty())
    }
}

fn names_for(arity: usize) -> Vec<String> {
    default_names(arity)
}

fn output(vertex: String, group: Group, leg: &Partition, method: Method, raw: Series) -> SeriesOutput {
    SeriesOutput {
        vertex,
        group: group.to_string(),
        leg: leg.rows().to_vec(),
        method,
        frame: None,
        shift: None,
        series: raw.to_record(&names_for(raw.arity())),
        raw,
    }
}

fn vertex_series(group: Group, leg: &Partition, method: Method, degree: u32) -> Result<Series> {
    match (method, group) {
        (Method::Enumerate, _) => vertex::enumerate_3d(leg, group, degree),
        (Method::Transfer, _) => vertex_by_transfer(group, leg, TransferMode::Standard, degree),
        (Method::Closed, Group::Zn(n)) => vertex::vertex_closed_zn(n, &Legs::third(leg.clone()), degree),
        (Method::Closed, Group::Z2xZ2) => {
            if leg.is_empty() {
                return vertex::closed_z2z2_nolegs(degree);
            }
            let m = leg
                .is_staircase()
                .ok_or_else(|| Error::Unsupported(format!("no closed form for the z2z2 vertex with leg {leg}")))?;
            vertex::closed_z2z2_nolegs(degree)?.mul(&vertex::staircase_leg_factor(vertex::STANDARD_ROLES, m, degree)?)
        }
    }
}

fn rpc_series(leg: &Partition, frame: Frame, shift: u32, method: Method, degree: u32) -> Result<Series> {
    match method {
        Method::Enumerate => Ok(generating_function(leg, shift, frame, degree)),
        Method::Transfer => {
            if shift != 0 {
                return Err(Error::Unsupported("transfer products use shift 0".to_string()));
            }
            let mode = match frame {
                Frame::Antidiagonal => TransferMode::RpcAntidiag,
                Frame::Diagonal => TransferMode::RpcDiag,
            };
            vertex_by_transfer(Group::Z2xZ2, leg, mode, degree)
        }
        Method::Closed => {
            if leg.is_empty() {
                return vertex::z_pyramid_closed(degree);
            }
            let m = leg
                .is_staircase()
                .ok_or_else(|| Error::Unsupported(format!("no closed form for restricted pyramids with leg {leg}")))?;
            vertex::restricted_closed(m, degree)
        }
    }
}

/// Pairwise comparison against the first output.
fn compare(outputs: &[SeriesOutput]) -> Vec<String> {
    let Some(first) = outputs.first() else { return Vec::new() };
    let names = names_for(first.raw.arity());
    outputs[1..]
        .iter()
        .filter_map(|o| {
            first.raw.first_difference(&o.raw).map(|(m, a, b)| {
                format!("{:?} vs {:?} differ at {}: {a} vs {b}", first.method, o.method, m.display_with(&names))
            })
        })
        .collect()
}

fn unique_methods(methods: &[Method]) -> Vec<Method> {
    let mut out: Vec<Method> = Vec::new();
    for &m in methods {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn render_series(outputs: &[SeriesOutput], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(outputs),
        Format::Csv => {
            let mut out = String::new();
            let names = outputs.first().map(|o| o.series.vars.clone()).unwrap_or_default();
            let _ = writeln!(out, "vertex,group,leg,method,{},coef", names.join(","));
            for o in outputs {
                let leg: Vec<String> = o.leg.iter().map(u32::to_string).collect();
                for t in &o.series.terms {
                    let exps: Vec<String> = t.exp.iter().map(u32::to_string).collect();
                    let method = serde_json::to_value(o.method).expect("method serializes");
                    let _ = writeln!(
                        out,
                        "{},{},\"{}\",{},{},{}",
                        o.vertex,
                        o.group,
                        leg.join(","),
                        method.as_str().unwrap_or_default(),
                        exps.join(","),
                        t.coef
                    );
                }
            }
            Ok(out)
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Unsupported(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn run_vertex(args: &VertexArgs, format: Format) -> Result<Report> {
    let name = format!("V_{{∅∅{}}}", args.leg);
    let outputs = unique_methods(&args.method)
        .into_iter()
        .map(|m| {
            vertex_series(args.group, &args.leg, m, args.degree)
                .map(|s| output(name.clone(), args.group, &args.leg, m, s))
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = if args.verify { compare(&outputs) } else { Vec::new() };
    Ok(Report { body: render_series(&outputs, format)?, mismatches })
}

fn run_pyramid(args: &PyramidArgs, format: Format) -> Result<Report> {
    let empty = Partition::empty();
    let outputs = unique_methods(&args.method)
        .into_iter()
        .map(|m| {
            let s = match m {
                Method::Enumerate => Ok(pyramid_series(args.degree)),
                Method::Closed => vertex::z_pyramid_closed(args.degree),
                Method::Transfer => vertex_by_transfer(Group::Z2xZ2, &empty, TransferMode::RpcDiag, args.degree),
            }?;
            Ok(output("Z_P".to_string(), Group::Z2xZ2, &empty, m, s))
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = if args.verify { compare(&outputs) } else { Vec::new() };
    Ok(Report { body: render_series(&outputs, format)?, mismatches })
}

fn run_rpc(args: &RpcArgs, format: Format) -> Result<Report> {
    let frame = Frame::from(args.frame);
    let sign = if frame == Frame::Antidiagonal { '+' } else { '-' };
    let name = format!("Z_RP{sign}{}", args.leg);
    let outputs = unique_methods(&args.method)
        .into_iter()
        .map(|m| {
            let s = rpc_series(&args.leg, frame, args.shift, m, args.degree)?;
            let mut o = output(name.clone(), Group::Z2xZ2, &args.leg, m, s);
            o.frame = Some(frame);
            o.shift = Some(args.shift);
            Ok(o)
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = if args.verify { compare(&outputs) } else { Vec::new() };
    Ok(Report { body: render_series(&outputs, format)?, mismatches })
}

fn run_uniqueness(args: &UniquenessArgs, format: Format) -> Result<Report> {
    let rows = uniqueness_scan(args.max_leg_size, &args.shift, args.window)?;
    let mismatches = rows
        .iter()
        .filter(|r| r.staircase != r.complements_equal)
        .map(|r| {
            format!("leg {} with shift {}: staircase={} but equal={}", r.leg, r.shift, r.staircase, r.complements_equal)
        })
        .collect();
    let body = match format {
        Format::Json => to_json(&rows)?,
        Format::Csv => uniqueness_csv(&rows),
    };
    Ok(Report { body, mismatches })
}

fn uniqueness_csv(rows: &[UniquenessRow]) -> String {
    let mut out = String::from("leg,shift,staircase,complements_equal\n");
    for r in rows {
        let leg: Vec<String> = r.leg.rows().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "\"{}\",{},{},{}", leg.join(","), r.shift, r.staircase, r.complements_equal);
    }
    out
}

fn series_check(name: &str, lhs: Series, rhs: Series) -> IdentityCheck {
    IdentityCheck { name: name.to_string(), lhs, rhs }
}

/// The identity battery behind `verify`.
pub fn identity_suite(degree: u32, max_staircase: u32) -> Result<Vec<IdentityCheck>> {
    let d = degree;
    let empty = Partition::empty();
    let mut checks = Vec::new();

    let closed = vertex::closed_z2z2_nolegs(d)?;
    checks.push(series_check(
        "z2z2 no legs: enumeration",
        vertex::enumerate_3d(&empty, Group::Z2xZ2, d)?,
        closed.clone(),
    ));
    checks.push(series_check(
        "z2z2 no legs: transfer",
        vertex_by_transfer(Group::Z2xZ2, &empty, TransferMode::Standard, d)?,
        closed,
    ));
    checks.push(series_check(
        "z4 no legs: transfer",
        vertex_by_transfer(Group::Zn(4), &empty, TransferMode::Standard, d)?,
        vertex::zn_nolegs(4, d)?,
    ));
    checks.push(series_check("pyramids: enumeration", pyramid_series(d), vertex::z_pyramid_closed(d)?));
    for m in 1..=max_staircase {
        let nu = Partition::staircase(m);
        checks.push(vertex::one_leg_z2z2_check(m, d)?);
        checks.push(vertex::z2z2_z4_check(m, d)?);
        checks.push(series_check(
            &format!("z4 staircase m={m}: branch formula"),
            vertex::one_leg_zn_staircase(m, d)?,
            vertex::vertex_closed_zn(4, &Legs::third(nu.clone()), d)?,
        ));
        let plus = generating_function(&nu, 0, Frame::Antidiagonal, d);
        let minus = generating_function(&nu, 0, Frame::Diagonal, d);
        checks.push(series_check(&format!("restricted pyramids m={m}: frames agree"), plus.clone(), minus));
        checks.push(series_check(
            &format!("restricted pyramids m={m}: closed form"),
            plus,
            vertex::restricted_closed(m, d)?,
        ));
        checks.push(vertex::z2z2_rpc_plus_check(m, d)?);
        checks.push(vertex::z4_rpc_minus_check(m, d)?);
    }
    Ok(checks)
}

fn run_verify(args: &VerifyArgs, format: Format) -> Result<Report> {
    let checks = identity_suite(args.degree, args.max_staircase)?;
    let names = names_for(4);
    let rows: Vec<CheckOutput> = checks
        .iter()
        .map(|c| CheckOutput {
            name: c.name.clone(),
            holds: c.holds(),
            first_difference: c.first_difference().map(|(m, a, b)| Difference {
                exp: m.exps().to_vec(),
                lhs: a.to_string(),
                rhs: b.to_string(),
            }),
        })
        .collect();
    let mismatches = checks
        .iter()
        .filter_map(|c| {
            c.first_difference()
                .map(|(m, a, b)| format!("{}: differ at {}: {a} vs {b}", c.name, m.display_with(&names)))
        })
        .collect();
    let body = match format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = String::from("name,holds\n");
            for r in &rows {
                let _ = writeln!(out, "\"{}\",{}", r.name, r.holds);
            }
            out
        }
    };
    Ok(Report { body, mismatches })
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Vertex(a) => run_vertex(a, cli.format),
        Command::Pyramid(a) => run_pyramid(a, cli.format),
        Command::Rpc(a) => run_rpc(a, cli.format),
        Command::Uniqueness(a) => run_uniqueness(a, cli.format),
        Command::Verify(a) => run_verify(a, cli.format),
    }
}

/// Parses arguments, runs, writes output. Exit codes: 0 success, 1 mismatch,
/// 2 usage or input error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers.unwrap_or(0)).build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(&cli)),
        Err(e) => Err(Error::Unsupported(e.to_string())),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.body),
        None => {
            print!("{}", report.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    for m in &report.mismatches {
        eprintln!("mismatch: {m}");
    }
    ExitCode::from(report.status())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn body(args: &[&str]) -> Report {
        let cli = Cli::try_parse_from(args).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn empty_leg_vertex() {
        let r = body(&["orbivertex", "vertex", "--leg", "", "--degree", "2"]);
        let v: serde_json::Value = serde_json::from_str(&r.body).unwrap();
        assert_eq!(v[0]["leg"], serde_json::json!([]));
        assert_eq!(v[0]["method"], "closed");
        assert_eq!(v[0]["group"], "z2z2");
    }

    #[test]
    fn triple_agreement() {
        let r = body(&[
            "orbivertex",
            "vertex",
            "--leg",
            "2,1",
            "--method",
            "closed,enumerate,transfer",
            "--degree",
            "3",
            "--verify",
        ]);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    }

    #[test]
    fn parse_errors() {
        assert!(Cli::try_parse_from(["orbivertex", "vertex", "--leg", "1,2"]).is_err());
        assert!(Cli::try_parse_from(["orbivertex", "vertex", "--group", "q"]).is_err());
        assert!(Cli::try_parse_from(["orbivertex", "vertex", "--method", "magic"]).is_err());
    }

    #[test]
    fn csv_output() {
        let r = body(&["orbivertex", "--format", "csv", "pyramid", "--degree", "1"]);
        assert_eq!(r.body, "vertex,group,leg,method,q0,qa,qb,qc,coef\nZ_P,z2z2,\"\",enumerate,0,0,0,0,1\nZ_P,z2z2,\"\",enumerate,1,0,0,0,1\n");
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let cli = Cli::try_parse_from(["orbivertex", "rpc", "--leg", "2,1", "--degree", "4"]).unwrap();
        let bodies: Vec<String> = [1, 3]
            .iter()
            .map(|&n| {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
                pool.install(|| run(&cli)).unwrap().body
            })
            .collect();
        assert_eq!(bodies[0], bodies[1]);
    }

    #[test]
    fn uniqueness_lists_staircases() {
        let r = body(&["orbivertex", "uniqueness", "--max-leg-size", "3", "--window", "10"]);
        assert!(r.mismatches.is_empty());
        assert_eq!(r.status(), 0);
    }

    #[test]
    fn mismatches_set_status() {
        let r = Report { body: String::new(), mismatches: vec!["x".into()] };
        assert_eq!(r.status(), 1);
    }

    #[test]
    fn no_closed_form_for_generic_z2z2_leg() {
        let cli = Cli::try_parse_from(["orbivertex", "vertex", "--leg", "2"]).unwrap();
        assert!(run(&cli).is_err());
    }
}
