//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use homex_core::algebra::AlgRef;
use homex_core::arith::{Field, PrimeField, Rationals};
use homex_core::extensions::{
    check_bounded, ehi_dimension_test, relative_bar_exactness, simple_pairs, verify_sandwich_pd,
    verify_tor_consequences, BarFailure, BoundedConfig, BoundedPending, BoundedReport, ConsequencePending,
    Extension, TorFamily, TorSide,
};
use homex_core::gorenstein::{gorenstein_check, gproj_check, smt_level_verify, GpFailure};
use homex_core::homology::{ext, minimal_resolution, projective_dimension, tor};
use homex_core::module::FdModule;
use homex_core::verdict::{Status, Verdict};

use crate::certificate::Certificate;
use crate::dsl::{self, FieldSpec, SourceFile};
use crate::report::{dims_json, verdict_json, Report, RunConfig};
use crate::workspace::{declared_field, Kind, Workspace};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "homex", version, about = "Homological checks for extensions of finite-dimensional algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Ground field, `Q` or `F<p>`; overrides the file.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldSpec>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Print the JSON report (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print a plain-text rendering of the report.
    #[arg(long, global = true)]
    pub text: bool,
    /// Resolution length limit.
    #[arg(long, global = true, default_value_t = homex_core::homology::DEFAULT_CUTOFF)]
    pub cutoff_pd: usize,
    /// Largest tensor power tried.
    #[arg(long, global = true, default_value_t = 8)]
    pub cutoff_nil: usize,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions, vertices and radical layers of the declared objects.
    Info {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Minimal projective resolution of a module or bimodule.
    Resolve {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Projective dimension; bimodules are taken over the enveloping algebra.
    Pd {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// `Tor_i(M, N)` for a right module `M` and a left module `N`.
    Tor(PairArgs),
    /// `Ext^i(M, N)` for modules over the same algebra.
    Ext(PairArgs),
    /// Decide whether an extension is bounded.
    CheckBounded {
        file: PathBuf,
        #[arg(long)]
        extension: Option<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        tor_side: SideArg,
    },
    /// Check a consequence of boundedness.
    Verify {
        which: Consequence,
        file: PathBuf,
        #[arg(long)]
        extension: Option<String>,
        /// Degrees above the overshoot compared by `ehi`.
        #[arg(long, default_value_t = 5)]
        window: usize,
    },
    /// Gorenstein projectivity through degree `bound`.
    Gproj {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
    /// Injective dimension of the regular module on both sides.
    Gorenstein {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 10)]
        bound: usize,
    },
    /// Check a certificate for a singular equivalence with level.
    VerifySmt { certificate: PathBuf },
    /// Reprint a source file in canonical form.
    Print { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub m: String,
    #[arg(long)]
    pub n: String,
    /// Degrees `a..b`, inclusive.
    #[arg(long, default_value = "0..5", value_parser = parse_range)]
    pub range: (usize, usize),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consequence {
    Lemma33,
    Lemma34,
    Barcomplex,
    Ehi,
}

impl Consequence {
    fn name(self) -> &'static str {
        match self {
            Consequence::Lemma33 => "lemma33",
            Consequence::Lemma34 => "lemma34",
            Consequence::Barcomplex => "barcomplex",
            Consequence::Ehi => "ehi",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Left,
    Right,
}

pub fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let t = s.trim();
    if t == "Q" || t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.strip_prefix(['F', 'f']).map(|d| d.trim_start_matches(['_', ' ']));
    match digits.and_then(|d| d.parse::<u64>().ok()) {
        Some(p) => Ok(FieldSpec::Prime(p)),
        None => Err(format!("expected Q or F<prime>, got '{s}'")),
    }
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got '{s}'"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in '{s}'"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in '{s}'"))?;
    if a > b {
        return Err(format!("empty range '{s}'"));
    }
    Ok((a, b))
}

/// A failure that ends the run with exit code 1.
#[derive(Debug)]
pub struct UsageError(pub String);

type Run<T> = Result<T, UsageError>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(UsageError(msg.into()))
}

/// Parses `argv` (including the program name), runs the command and
/// writes the report. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(Output::Report(mut r)) => {
            if cli.global.timing {
                r.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = if cli.global.text { r.to_text() } else { r.to_json() };
            let _ = out.write_all(text.as_bytes());
            r.exit_code()
        }
        Ok(Output::Source(r, source)) => {
            let text = if cli.global.text { source } else { r.to_json() };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

enum Output {
    Report(Report),
    Source(Report, String),
}

fn load(path: &Path) -> Run<SourceFile> {
    let text = std::fs::read_to_string(path).or_else(|e| usage(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).or_else(|e| usage(format!("{}:{e}", path.display())))
}

fn config(g: &Global, field: &FieldSpec) -> RunConfig {
    RunConfig {
        field: match field {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        },
        seed: g.seed,
        cutoff_pd: g.cutoff_pd,
        cutoff_nil: g.cutoff_nil,
    }
}

fn execute(cli: &Cli) -> Run<Output> {
    let (file, cert) = match &cli.command {
        Command::VerifySmt { certificate } => {
            let text = std::fs::read_to_string(certificate)
                .or_else(|e| usage(format!("{}: {e}", certificate.display())))?;
            let cert = Certificate::from_json(&text).or_else(|e| usage(format!("{}: {e}", certificate.display())))?;
            let src = cert.source_path(certificate);
            (src, Some(cert))
        }
        Command::Info { file, .. }
        | Command::Resolve { file, .. }
        | Command::Pd { file, .. }
        | Command::Tor(PairArgs { file, .. })
        | Command::Ext(PairArgs { file, .. })
        | Command::CheckBounded { file, .. }
        | Command::Verify { file, .. }
        | Command::Gproj { file, .. }
        | Command::Gorenstein { file, .. }
        | Command::Print { file } => (file.clone(), None),
    };
    let source = load(&file)?;
    let field = cli.global.field.clone().unwrap_or_else(|| declared_field(&source));
    let cfg = config(&cli.global, &field);
    if let Command::Print { file } = &cli.command {
        let text = dsl::print(&source);
        let args = json!({ "file": file.display().to_string() });
        let r = Report::new("print", args, cfg, json!({ "source": text }), Status::Certified);
        return Ok(Output::Source(r, text));
    }
    let report = match field {
        FieldSpec::Rationals => dispatch(Rationals, cli, &file, &source, cert.as_ref(), cfg)?,
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).or_else(|e| usage(e.to_string()))?;
            dispatch(f, cli, &file, &source, cert.as_ref(), cfg)?
        }
    };
    Ok(Output::Report(report))
}

fn workspace<K: Field>(field: K, file: &Path, source: &SourceFile) -> Run<Workspace<K>> {
    Workspace::build(field, source).or_else(|e| usage(format!("{}:{}: {}", file.display(), e.line, e.message)))
}

fn bounded_config(g: &Global, side: SideArg) -> BoundedConfig {
    BoundedConfig {
        nil_cap: g.cutoff_nil,
        pd_cutoff: g.cutoff_pd,
        tor_side: match side {
            SideArg::Left => TorSide::Left,
            SideArg::Right => TorSide::Right,
        },
    }
}

fn dispatch<K: Field>(
    field: K,
    cli: &Cli,
    file: &Path,
    source: &SourceFile,
    cert: Option<&Certificate>,
    cfg: RunConfig,
) -> Run<Report> {
    let mut ws = workspace(field, file, source)?;
    let g = &cli.global;
    let path = file.display().to_string();
    let (name, args, result, status) = match &cli.command {
        Command::Info { algebra, .. } => {
            let args = json!({ "file": path, "algebra": algebra });
            ("info", args, info(&ws, algebra.as_deref())?, Status::Certified)
        }
        Command::Resolve { module, cutoff, .. } => {
            let cutoff = cutoff.unwrap_or(g.cutoff_pd);
            let args = json!({ "file": path, "module": module, "cutoff": cutoff });
            let (m, over) = module_for_resolution(&ws, module)?;
            let res = minimal_resolution(&m, cutoff);
            let terms: Vec<Value> = (0..res.num_terms()).map(|n| json!(res.term_multiplicities(n))).collect();
            let dims: Vec<usize> = (0..res.num_terms()).map(|n| res.projective(n).dim()).collect();
            let status = if res.is_complete() { Status::Certified } else { Status::Inconclusive };
            let result = json!({
                "module": module,
                "over": over,
                "dim": m.dim(),
                "vertices": m.algebra().vertex_labels(),
                "terms": terms,
                "term_dims": dims,
                "complete": res.is_complete(),
                "length": res.length(),
                "size_limited": res.is_size_limited(),
            });
            ("resolve", args, result, status)
        }
        Command::Pd { module, .. } => {
            let args = json!({ "file": path, "module": module });
            let (m, over) = module_for_resolution(&ws, module)?;
            let v = projective_dimension(&m, g.cutoff_pd);
            let result = json!({
                "module": module,
                "over": over,
                "dim": m.dim(),
                "pd": verdict_json(&v, |d| json!(d.value), |_| Value::Null, |c| json!({ "cutoff": c })),
            });
            ("pd", args, result, v.status())
        }
        Command::Tor(p) | Command::Ext(p) => {
            let is_tor = matches!(cli.command, Command::Tor(_));
            let args = json!({ "file": path, "m": p.m, "n": p.n, "range": format!("{}..{}", p.range.0, p.range.1) });
            let n = named_module(&ws, &p.n)?;
            let (dims, over) = if is_tor {
                let y = right_module_for(&ws, &p.m, &n.module)?;
                let d = tor(&y, &n.module, p.range.0..=p.range.1, g.cutoff_pd.max(p.range.1 + 1))
                    .or_else(|e| usage(e.to_string()))?;
                (d, n.over.clone())
            } else {
                let m = named_module(&ws, &p.m)?;
                if !m.module.algebra().same_as(n.module.algebra()) {
                    return usage(format!("'{}' and '{}' are over different algebras", p.m, p.n));
                }
                let d = ext(&m.module, &n.module, p.range.0..=p.range.1, g.cutoff_pd.max(p.range.1 + 1))
                    .or_else(|e| usage(e.to_string()))?;
                (d, m.over.clone())
            };
            let status = if dims.is_complete() { Status::Certified } else { Status::Inconclusive };
            let result = json!({
                "m": p.m,
                "n": p.n,
                "over": over,
                "degrees": (p.range.0..=p.range.1).collect::<Vec<_>>(),
                "dims": dims_json(&dims.dims),
            });
            (if is_tor { "tor" } else { "ext" }, args, result, status)
        }
        Command::CheckBounded { extension, tor_side, .. } => {
            let (ename, e) = pick_extension(&ws, extension.as_deref())?;
            let args = json!({ "file": path, "extension": ename, "tor_side": side_name(*tor_side) });
            let report = check_bounded(e, bounded_config(g, *tor_side));
            let result = bounded_json(&ename, e, &report);
            ("check-bounded", args, result, report.status())
        }
        Command::Verify { which, extension, window, .. } => {
            let (ename, e) = pick_extension(&ws, extension.as_deref())?;
            let args = json!({ "file": path, "which": which.name(), "extension": ename, "window": window });
            let report = check_bounded(e, bounded_config(g, SideArg::Left));
            let (verdict, status) = consequence(*which, e, &report, g.cutoff_pd, *window)?;
            let result = json!({
                "extension": ename,
                "bounded": report.status().as_str(),
                "p": report.p(),
                "bimodule_pd": report.bimodule_pd.certified(),
                "check": which.name(),
                "verdict": verdict,
            });
            ("verify", args, result, status)
        }
        Command::Gproj { module, bound, .. } => {
            let args = json!({ "file": path, "module": module, "bound": bound });
            let m = named_module(&ws, module)?;
            let w = gproj_check(&m.module, *bound);
            let v = w.verdict();
            let result = json!({
                "module": module,
                "over": m.over,
                "bound": w.bound,
                "ext_dims": dims_json(&w.left_vanishing),
                "dual_ext_dims": dims_json(&w.dual_vanishing),
                "reflexive": verdict_json(&w.reflexivity, |_| Value::Null, |(d, dd, r)| json!({ "dim": d, "double_dual_dim": dd, "rank": r }), |_| Value::Null),
                "gproj": verdict_json(&v, |_| Value::Null, gp_failure, |b| json!({ "bound": b })),
            });
            ("gproj", args, result, v.status())
        }
        Command::Gorenstein { algebra, bound, .. } => {
            let args = json!({ "file": path, "algebra": algebra, "bound": bound });
            let a = algebra_ref(&ws, algebra)?;
            let v = gorenstein_check(&a, *bound);
            let result = json!({
                "algebra": algebra,
                "bound": bound,
                "injdim": verdict_json(&v, |(l, r)| json!({ "left": l, "right": r }), |_| Value::Null, |b| json!({ "bound": b })),
            });
            ("gorenstein", args, result, v.status())
        }
        Command::VerifySmt { certificate } => {
            let cert = cert.expect("certificate loaded");
            let args = json!({ "certificate": certificate.display().to_string() });
            let a = algebra_ref(&ws, &cert.a)?;
            let b = algebra_ref(&ws, &cert.b)?;
            let m = ws
                .eval_bimodule("m", &(cert.a.clone(), cert.b.clone()), &cert.m.to_expr())
                .or_else(|e| usage(format!("certificate bimodule m: {}", e.message)))?;
            let n = ws
                .eval_bimodule("n", &(cert.b.clone(), cert.a.clone()), &cert.n.to_expr())
                .or_else(|e| usage(format!("certificate bimodule n: {}", e.message)))?;
            let v = smt_level_verify(&a, &b, &m, &n, cert.level, g.seed).or_else(|e| usage(e.to_string()))?;
            let result = json!({
                "a": cert.a,
                "b": cert.b,
                "level": cert.level,
                "m_dim": m.dim(),
                "n_dim": n.dim(),
                "verdict": verdict_json(
                    &v,
                    |w| json!({ "mn_nonprojective_dim": w.mn_core, "nm_nonprojective_dim": w.nm_core }),
                    |c| json!(c.as_str()),
                    |c| json!(c.as_str()),
                ),
            });
            ("verify-smt", args, result, v.status())
        }
        Command::Print { .. } => unreachable!("handled before the field is chosen"),
    };
    Ok(Report::new(name, args, cfg, result, status))
}

fn side_name(s: SideArg) -> &'static str {
    match s {
        SideArg::Left => "left",
        SideArg::Right => "right",
    }
}

fn gp_failure(f: &GpFailure) -> Value {
    match f {
        GpFailure::Ext(i) => json!({ "ext_nonzero": i }),
        GpFailure::DualExt(i) => json!({ "dual_ext_nonzero": i }),
        GpFailure::NotReflexive => json!("not reflexive"),
    }
}

fn algebra_ref<K: Field>(ws: &Workspace<K>, name: &str) -> Run<AlgRef<K>> {
    match (ws.kind(name), ws.algebra(name)) {
        (Some(Kind::Algebra), Some(a)) => Ok(a.clone()),
        (Some(k), _) => usage(format!("'{name}' is a {}, not an algebra", k.as_str())),
        _ => usage(format!("unknown algebra '{name}'")),
    }
}

fn named_module<'a, K: Field>(ws: &'a Workspace<K>, name: &str) -> Run<&'a crate::workspace::NamedModule<K>> {
    match (ws.kind(name), ws.module(name)) {
        (Some(Kind::Module), Some(m)) => Ok(m),
        (Some(k), _) => usage(format!("'{name}' is a {}, not a module", k.as_str())),
        _ => usage(format!("unknown module '{name}'")),
    }
}

/// A module, or a bimodule as a module over its enveloping algebra.
fn module_for_resolution<K: Field>(ws: &Workspace<K>, name: &str) -> Run<(FdModule<K>, String)> {
    if let Some(m) = ws.module(name) {
        let over = if m.right { format!("{}^op", m.over) } else { m.over.clone() };
        return Ok((m.module.clone(), over));
    }
    if let Some(b) = ws.bimodule(name) {
        let (l, r) = (b.left_algebra(), b.right_algebra());
        let env = if l.same_as(r) { l.enveloping() } else { l.tensor(&r.opposite()) };
        let env = std::sync::Arc::new(env.or_else(|e| usage(e.to_string()))?);
        let m = b.to_enveloping(env).or_else(|e| usage(e.to_string()))?;
        return Ok((m, "enveloping".into()));
    }
    usage(format!("unknown module or bimodule '{name}'"))
}

/// `name` as a module over the opposite of the algebra of `n`.
fn right_module_for<K: Field>(ws: &Workspace<K>, name: &str, n: &FdModule<K>) -> Run<FdModule<K>> {
    let m = named_module(ws, name)?;
    let op = std::sync::Arc::new(n.algebra().opposite());
    if m.module.algebra().same_as(&op) {
        return m.module.rebase(op).or_else(|e| usage(e.to_string()));
    }
    usage(format!(
        "'{name}' must be a right module over the algebra of the second argument \
         (declare it with rmodule, or use an algebra equal to its opposite)"
    ))
}

fn pick_extension<'a, K: Field>(ws: &'a Workspace<K>, name: Option<&str>) -> Run<(String, &'a Extension<K>)> {
    let name = match name {
        Some(n) => n.to_string(),
        None => match ws.names(Kind::Extension).first() {
            Some(n) => n.to_string(),
            None => return usage("the file declares no extension"),
        },
    };
    match ws.extension(&name) {
        Some(e) => Ok((name, e)),
        None => usage(format!("unknown extension '{name}'")),
    }
}

fn pd_json(v: &Verdict<usize, std::convert::Infallible, usize>) -> Value {
    match v {
        Verdict::Certified(n) => json!(n),
        _ => Value::Null,
    }
}

pub fn bounded_json<K: Field>(name: &str, e: &Extension<K>, r: &BoundedReport) -> Value {
    let table: Vec<Value> = r.tor_table.iter().map(|row| dims_json(row)).collect();
    let pending = |p: &BoundedPending| match p {
        BoundedPending::NilpotencyCap(c) => json!({ "nilpotency_cap": c }),
        BoundedPending::BimodulePdCutoff(c) => json!({ "bimodule_pd_cutoff": c }),
        BoundedPending::OneSidedPdCutoff(c) => json!({ "one_sided_pd_cutoff": c }),
    };
    let mut obj = Map::new();
    obj.insert("extension".into(), json!(name));
    obj.insert("small_dim".into(), json!(e.small().dim()));
    obj.insert("big_dim".into(), json!(e.big().dim()));
    obj.insert("quotient_dim".into(), json!(r.quotient_dim));
    obj.insert("split".into(), json!(e.is_split()));
    obj.insert("power_dims".into(), json!(r.power_dims));
    obj.insert("p".into(), json!(r.p()));
    obj.insert("bimodule_pd".into(), pd_json(&r.bimodule_pd));
    obj.insert("one_sided_pd".into(), pd_json(&r.one_sided_pd));
    obj.insert("tor_table".into(), Value::Array(table));
    obj.insert("overall".into(), json!(r.status().as_str()));
    obj.insert(
        "detail".into(),
        verdict_json(
            &r.overall,
            |w| json!({ "p": w.p, "bimodule_pd": w.bimodule_pd }),
            |v| json!({ "i": v.i, "j": v.j, "dim": v.dim }),
            pending,
        ),
    );
    Value::Object(obj)
}

fn consequence_pending(p: &ConsequencePending) -> Value {
    match p {
        ConsequencePending::ReportNotCertified => json!("extension not certified bounded"),
        ConsequencePending::Cutoff(c) => json!({ "cutoff": c }),
    }
}

fn consequence<K: Field>(
    which: Consequence,
    e: &Extension<K>,
    report: &BoundedReport,
    cutoff: usize,
    window: usize,
) -> Run<(Value, Status)> {
    Ok(match which {
        Consequence::Lemma33 => {
            let v = verify_tor_consequences(e, report, cutoff);
            let family = |f: TorFamily| match f {
                TorFamily::AA => "Tor(A, A)",
                TorFamily::PowerA => "Tor(M^j, A)",
                TorFamily::APowerA => "Tor(A, M^j A)",
            };
            let j = verdict_json(
                &v,
                |_| Value::Null,
                |t| json!({ "family": family(t.family), "i": t.i, "j": t.j, "dim": t.dim }),
                consequence_pending,
            );
            (j, v.status())
        }
        Consequence::Lemma34 => {
            let v = verify_sandwich_pd(e, report, cutoff);
            (verdict_json(&v, |pds| json!({ "pds": pds }), |_| Value::Null, consequence_pending), v.status())
        }
        Consequence::Barcomplex => {
            let v = relative_bar_exactness(e, report).or_else(|err| usage(err.to_string()))?;
            let j = verdict_json(
                &v,
                |w| json!({ "dims": w.dims, "ranks": w.ranks }),
                |f| match f {
                    BarFailure::NotComplex(n) => json!({ "not_a_complex_at": n }),
                    BarFailure::Homology { position, dim } => json!({ "position": position, "homology_dim": dim }),
                },
                consequence_pending,
            );
            (j, v.status())
        }
        Consequence::Ehi => {
            let samples = simple_pairs(e.big());
            let v = ehi_dimension_test(e, report, &samples, window);
            let j = verdict_json(
                &v,
                |w| json!({ "overshoot": w.overshoot, "window": w.window, "pairs": w.pairs }),
                |x| json!({ "pair": x.pair, "degree": x.degree, "over_big": x.over_big, "over_small": x.over_small }),
                consequence_pending,
            );
            (j, v.status())
        }
    })
}

/// `dim rad^k A / rad^{k+1} A` for `k = 0, 1, ...`.
fn radical_layers<K: Field>(a: &AlgRef<K>) -> Vec<usize> {
    let mut layers = Vec::new();
    let mut m = FdModule::regular(a.clone());
    while m.dim() > 0 {
        let tr = m.top_and_radical();
        layers.push(tr.top.dim());
        m = tr.radical;
    }
    layers
}

fn algebra_json<K: Field>(name: &str, a: &AlgRef<K>) -> Value {
    let arrows: Vec<Value> = a
        .generators()
        .iter()
        .map(|g| json!(format!("{}: {} -> {}", g.label, a.vertex_labels()[g.source], a.vertex_labels()[g.target])))
        .collect();
    json!({
        "name": name,
        "dim": a.dim(),
        "vertices": a.vertex_labels(),
        "arrows": arrows,
        "projective_dims": (0..a.num_vertices()).map(|i| a.projective_dim(i)).collect::<Vec<_>>(),
        "cartan": a.cartan_matrix(),
        "radical_layers": radical_layers(a),
    })
}

fn info<K: Field>(ws: &Workspace<K>, only: Option<&str>) -> Run<Value> {
    if let Some(name) = only {
        let a = algebra_ref(ws, name)?;
        return Ok(json!({ "algebras": [algebra_json(name, &a)] }));
    }
    let algebras: Vec<Value> =
        ws.names(Kind::Algebra).iter().map(|n| algebra_json(n, ws.algebra(n).expect("declared"))).collect();
    let modules: Vec<Value> = ws
        .names(Kind::Module)
        .iter()
        .map(|n| {
            let m = ws.module(n).expect("declared");
            json!({
                "name": n,
                "over": m.over,
                "side": if m.right { "right" } else { "left" },
                "dim": m.module.dim(),
                "dimension_vector": m.module.dimension_vector(),
            })
        })
        .collect();
    let bimodules: Vec<Value> = ws
        .names(Kind::Bimodule)
        .iter()
        .map(|n| {
            let b = ws.bimodule(n).expect("declared");
            json!({ "name": n, "dim": b.dim() })
        })
        .collect();
    let extensions: Vec<Value> = ws
        .names(Kind::Extension)
        .iter()
        .map(|n| {
            let e = ws.extension(n).expect("declared");
            json!({
                "name": n,
                "small_dim": e.small().dim(),
                "big_dim": e.big().dim(),
                "quotient_dim": e.quotient_dim(),
                "split": e.is_split(),
            })
        })
        .collect();
    Ok(json!({ "algebras": algebras, "modules": modules, "bimodules": bimodules, "extensions": extensions }))
}
