//! Command-line driver. `run` returns the process exit code:
//! 0 on success, 1 when an identity or certification fails, 2 on usage errors.

use crate::abel;
use crate::arith::{format_rational, Rational};
use crate::error::Error;
use crate::hilb::{self, FixedPointCache, HilbFixedPoint, LocalizationOutcome, SeedPlan};
use crate::identities;
use crate::toric::{make_surface, EquivLineBundle, SurfaceName, ToricSurfaceModel};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "eqloc", about = "Exact torus-localization checks", disable_version_flag = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// c₁(T_D)^g on the moduli of sheaves on plane curves: d^g g!
    Ttd(RunArgs),
    /// Euler number of Hilbⁿ by localization
    Gottsche(RunArgs),
    /// ∫ c_{2n}(Ext¹(I, I ⊗ L)) over Hilbⁿ
    #[command(name = "co-degree")]
    CoDegree(RunArgs),
    /// Quadric identity for n ≤ 1
    P1p1(RunArgs),
    /// Rank-2 identity over a conic
    Rk2(RunArgs),
    /// Euler classes of the base directions
    Weights(RunArgs),
    /// Virtual dimensions
    Vd(RunArgs),
    /// Run the invariant suite
    Selftest(RunArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum SurfaceArg {
    #[value(name = "p2")]
    P2,
    #[value(name = "p1xp1")]
    P1xp1,
}

impl From<SurfaceArg> for SurfaceName {
    fn from(s: SurfaceArg) -> Self {
        match s {
            SurfaceArg::P2 => SurfaceName::P2,
            SurfaceArg::P1xp1 => SurfaceName::P1xP1,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    #[arg(long, value_enum)]
    surface: Option<SurfaceArg>,
    #[arg(long = "L", value_delimiter = ',', allow_hyphen_values = true)]
    l: Option<Vec<i64>>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    dprime: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "seed-count", default_value_t = 2)]
    seed_count: usize,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: &'static str,
    pub surface: Option<SurfaceName>,
    pub degree: Option<Vec<i64>>,
    pub n: Option<u32>,
    pub d: Option<u32>,
    pub dprime: Option<u32>,
    pub seeds: SeedPlan,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GeneralGenus
            | Error::OutOfRange(_)
            | Error::MsUnavailable
            | Error::UnknownSurface(_)
            | Error::UnsupportedTwist(_)
            | Error::Ext2Obstruction
            | Error::HigherCohomology => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

/// What one command produced.
struct Outcome {
    lines: Vec<String>,
    value: Rational,
    params: Value,
    seeds: Vec<[Rational; 2]>,
    fixed_point_count: usize,
    pass: Option<bool>,
}

impl Outcome {
    fn plain(value: Rational, params: Value) -> Self {
        Outcome { lines: vec![format_rational(&value)], value, params, seeds: vec![], fixed_point_count: 0, pass: None }
    }

    fn localized(o: LocalizationOutcome, params: Value) -> Self {
        Outcome {
            lines: vec![format_rational(&o.value)],
            value: o.value,
            params,
            seeds: o.seeds_used,
            fixed_point_count: o.fixed_point_count,
            pass: None,
        }
    }
}

#[derive(Serialize)]
struct Record {
    command: String,
    params: Value,
    value: String,
    seeds: Vec<String>,
    fixed_point_count: usize,
    pass: Option<bool>,
    wall_time_ms: u128,
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err)
}

/// `run` with explicit output streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> =
        std::iter::once("eqloc".into()).chain(argv.into_iter().map(Into::into)).collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let cfg = match configure(cli.command) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let start = Instant::now();
    let result = match cfg.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cfg)),
            Err(e) => Err(Failure::Check(e.to_string())),
        },
        None => execute(&cfg),
    };
    let elapsed = start.elapsed().as_millis();
    match result {
        Ok(o) => {
            for l in &o.lines {
                let _ = writeln!(out, "{l}");
            }
            if let Some(path) = &cfg.out {
                if let Err(e) = append_record(path, &cfg, &o, elapsed) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            if o.pass == Some(false) {
                1
            } else {
                0
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "failed: {msg}");
            1
        }
    }
}

fn append_record(path: &PathBuf, cfg: &RunConfig, o: &Outcome, wall_time_ms: u128) -> std::io::Result<()> {
    let rec = Record {
        command: cfg.command.to_string(),
        params: o.params.clone(),
        value: format_rational(&o.value),
        seeds: o.seeds.iter().map(|[a, b]| format!("{},{}", format_rational(a), format_rational(b))).collect(),
        fixed_point_count: o.fixed_point_count,
        pass: o.pass,
        wall_time_ms,
    };
    let mut f = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{}", serde_json::to_string(&rec)?)
}

fn configure(cmd: Command) -> Result<RunConfig, String> {
    let (name, a) = match cmd {
        Command::Ttd(a) => ("ttd", a),
        Command::Gottsche(a) => ("gottsche", a),
        Command::CoDegree(a) => ("co-degree", a),
        Command::P1p1(a) => ("p1p1", a),
        Command::Rk2(a) => ("rk2", a),
        Command::Weights(a) => ("weights", a),
        Command::Vd(a) => ("vd", a),
        Command::Selftest(a) => ("selftest", a),
    };
    if a.seed_count < 2 {
        return Err("--seed-count must be at least 2".into());
    }
    if a.threads == Some(0) {
        return Err("--threads must be at least 1".into());
    }
    let need = |ok: bool, flag: &str| if ok { Ok(()) } else { Err(format!("{name} requires {flag}")) };
    match name {
        "ttd" => need(a.d.is_some(), "--d")?,
        "gottsche" => {
            need(a.surface.is_some(), "--surface")?;
            need(a.n.is_some(), "--n")?;
        }
        "co-degree" => {
            need(a.surface.is_some(), "--surface")?;
            need(a.l.is_some(), "--L")?;
            need(a.n.is_some(), "--n")?;
        }
        "p1p1" => need(a.n.is_some(), "--n")?,
        "vd" => need(a.d.is_some() || a.l.is_some(), "--d or --L")?,
        _ => {}
    }
    let surface = a.surface.map(SurfaceName::from);
    if let (Some(s), Some(l)) = (surface, &a.l) {
        let want = if s == SurfaceName::P2 { 1 } else { 2 };
        if l.len() != want {
            return Err(format!("--L needs {want} degree(s) on {s}"));
        }
    }
    Ok(RunConfig {
        command: name,
        surface,
        degree: a.l,
        n: a.n,
        d: a.d,
        dprime: a.dprime,
        seeds: SeedPlan::new(a.seed, a.seed_count),
        threads: a.threads,
        out: a.out,
        cache_dir: a.cache_dir,
    })
}

fn points(cfg: &RunConfig, s: &ToricSurfaceModel, n: u32) -> Result<Vec<HilbFixedPoint>, Failure> {
    match &cfg.cache_dir {
        Some(dir) => FixedPointCache::new(dir)
            .load_or_generate(s, n)
            .map(|(p, _)| p)
            .map_err(|e| Failure::Check(format!("cache: {e}"))),
        None => Ok(hilb::hilb_fixed_points(s, n)),
    }
}

fn execute(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let plan = &cfg.seeds;
    match cfg.command {
        "ttd" => {
            let d = cfg.d.unwrap_or_default();
            if d == 0 {
                return Err(Failure::Usage("--d must be positive".into()));
            }
            Ok(Outcome::plain(abel::ttd_value(d), json!({ "d": d })))
        }
        "gottsche" => {
            let s = make_surface(cfg.surface.unwrap_or(SurfaceName::P2));
            let n = cfg.n.unwrap_or_default();
            let pts = points(cfg, &s, n)?;
            let o = hilb::euler_integral(&s, &pts, n, plan)?;
            let want = hilb::gottsche_coefficient(s.euler_number as u32, n);
            let pass = o.value.is_integer() && *o.value.numer() == want;
            let mut out = Outcome::localized(o, json!({ "surface": s.name.to_string(), "n": n }));
            out.lines.push(format!("expected {want}/1 {}", verdict(pass)));
            out.pass = Some(pass);
            Ok(out)
        }
        "co-degree" => {
            let s = make_surface(cfg.surface.unwrap_or(SurfaceName::P1xP1));
            let n = cfg.n.unwrap_or_default();
            let deg = cfg.degree.clone().unwrap_or_default();
            let l = EquivLineBundle::new(deg.clone());
            let pts = points(cfg, &s, n)?;
            let o = hilb::co_degree(&s, &pts, &l, n, plan)?;
            Ok(Outcome::localized(o, json!({ "surface": s.name.to_string(), "L": deg, "n": n })))
        }
        "p1p1" => {
            let n = cfg.n.unwrap_or_default();
            let r = identities::p1p1_check(n, plan)?;
            let twisted = identities::p1p1_check_all_twists(n, plan)?;
            let mut lines = vec![format!("lhs {}", format_rational(&r.lhs))];
            for (label, v) in &r.rhs_terms {
                lines.push(format!("  {label} {}", format_rational(v)));
            }
            lines.push(format!("rhs {}", format_rational(&r.rhs_total)));
            lines.push(verdict(r.pass).to_string());
            lines.push(format!("lhs with all determinant twists {} {}", format_rational(&twisted.lhs), verdict(twisted.pass)));
            Ok(Outcome {
                lines,
                value: r.lhs,
                params: json!({
                    "n": n,
                    "rhs": format_rational(&r.rhs_total),
                    "rhs_terms": r.rhs_terms.iter().map(|(l, v)| json!([l, format_rational(v)])).collect::<Vec<_>>(),
                    "lhs_all_twists": format_rational(&twisted.lhs),
                    "pass_all_twists": twisted.pass,
                }),
                seeds: r.seeds,
                fixed_point_count: r.fixed_point_count,
                pass: Some(r.pass),
            })
        }
        "rk2" => {
            let dp = cfg.dprime.unwrap_or(2);
            let r = abel::rk2_check(dp, plan)?;
            let mut lines = vec![format!("lhs {}", format_rational(&r.lhs))];
            for (k, o) in &r.terms {
                lines.push(format!("  C_{k} {}", format_rational(&o.value)));
            }
            lines.push(format!("rhs {}", format_rational(&r.rhs)));
            lines.push(verdict(r.pass).to_string());
            let seeds = r.terms.first().map(|(_, o)| o.seeds_used.clone()).unwrap_or_default();
            let count = r.terms.iter().map(|(_, o)| o.fixed_point_count).sum();
            Ok(Outcome {
                lines,
                params: json!({
                    "dprime": dp,
                    "rhs": format_rational(&r.rhs),
                    "terms": r.terms.iter().map(|(k, o)| json!([k, format_rational(&o.value)])).collect::<Vec<_>>(),
                }),
                value: r.lhs,
                seeds,
                fixed_point_count: count,
                pass: Some(r.pass),
            })
        }
        "weights" => {
            let (w, params) = match cfg.dprime {
                Some(dp) => (identities::weight_factor_p2(dp)?, json!({ "dprime": dp })),
                None => (identities::weight_factor_p3()?, json!({ "target": "p3" })),
            };
            let mut o = Outcome::plain(w.coefficient.clone(), params);
            o.params["s_exponent"] = json!(w.s_exponent);
            o.lines = vec![format!("{}*s^{}", format_rational(&w.coefficient), w.s_exponent)];
            Ok(o)
        }
        "vd" => vd(cfg),
        "selftest" => selftest(plan),
        other => Err(Failure::Usage(format!("unknown command {other}"))),
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn vd(cfg: &RunConfig) -> Result<Outcome, Failure> {
    use identities::{vd_calc, VdSetting};
    let (label, det, div) = match (cfg.surface, &cfg.degree, cfg.d) {
        (Some(SurfaceName::P1xP1), Some(l), _) => {
            let (a, b) = (l[0], l[1]);
            let l2 = 2 * a * b;
            let dim = (a + 1) * (b + 1) - 1;
            (
                format!("p1xp1 O({a},{b})"),
                vd_calc(VdSetting::SurfaceFixedDet { l_squared: l2 })?,
                vd_calc(VdSetting::SurfaceFixedDivisor { l_squared: l2, dim_linear_system: dim, h01: 0 })?,
            )
        }
        (Some(SurfaceName::P2), l, d) => {
            let d = d.map(i64::from).or_else(|| l.as_ref().map(|v| v[0])).unwrap_or_default();
            let (det, div) = identities::vd_p2(d)?;
            (format!("p2 O({d})"), det, div)
        }
        (None, _, Some(d)) => {
            let (det, div) = identities::vd_p3(d as i64)?;
            (format!("p3 O({d})"), det, div)
        }
        _ => return Err(Failure::Usage("vd needs --surface with --d/--L, or --d alone for p3".into())),
    };
    let mut o = Outcome::plain(Rational::from_integer(div.into()), json!({ "setting": label, "fixed_det": det, "fixed_divisor": div }));
    o.lines = vec![format!("{label} fixed-det {det}"), format!("{label} fixed-divisor {div}")];
    Ok(o)
}

fn selftest(plan: &SeedPlan) -> Result<Outcome, Failure> {
    let mut lines = Vec::new();
    let mut all = true;
    let mut check = |name: &str, r: Result<bool, Error>| {
        let ok = matches!(r, Ok(true));
        all &= ok;
        match r {
            Ok(_) => lines.push(format!("{} {name}", verdict(ok))),
            Err(e) => lines.push(format!("FAIL {name}: {e}")),
        }
    };
    for name in [SurfaceName::P2, SurfaceName::P1xP1] {
        let s = make_surface(name);
        for n in 0..=4 {
            check(&format!("euler number {name} n={n}"), hilb::chi_top_check(&s, n, plan).map(|_| true));
        }
        for n in 1..=3 {
            let pts = hilb::hilb_fixed_points(&s, n);
            check(
                &format!("integral of 1 {name} n={n}"),
                hilb::unit_integral(&s, &pts, plan).map(|o| o.value == Rational::from_integer(0.into())),
            );
        }
    }
    let q = make_surface(SurfaceName::P1xP1);
    let l = EquivLineBundle::new(vec![2, 2]);
    check(
        "co-degree p1xp1 O(2,2) n=1 is 20",
        hilb::co_degree(&q, &hilb::hilb_fixed_points(&q, 1), &l, 1, plan).map(|o| o.value == Rational::from_integer(20.into())),
    );
    for n in 0..=1 {
        check(&format!("p1p1 n={n}"), identities::p1p1_check(n, plan).map(|r| r.pass));
        check(&format!("p1p1 all twists n={n}"), identities::p1p1_check_all_twists(n, plan).map(|r| r.pass));
    }
    check("rk2 d'=2", abel::rk2_check(2, plan).map(|r| r.pass));
    check("weights d'=1,2", identities::weight_factor_p2(1).and(identities::weight_factor_p2(2)).map(|_| true));
    check("weights p3", identities::weight_factor_p3().map(|_| true));
    let passed = lines.iter().filter(|l| l.starts_with("PASS")).count();
    let total = lines.len();
    lines.push(format!("{passed}/{total} passed"));
    Ok(Outcome {
        lines,
        value: Rational::from_integer(passed.into()),
        params: json!({ "checks": total }),
        seeds: vec![],
        fixed_point_count: 0,
        pass: Some(all),
    })
}
