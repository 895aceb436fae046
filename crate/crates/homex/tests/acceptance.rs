//! One line per acceptance criterion, written past the test harness's
//! output capture so it shows up in plain `cargo test` runs.

#[path = "../../core/tests/common/mod.rs"]
mod core_common;
mod common;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use core_common::props;
use core_common::random::{q_spec_algebra, quiver_spec, random_module};
use homex::dsl::parse;
use homex::report::Report;
use homex::workspace::Workspace;
use homex_core::error::ExtensionError;
use homex_core::extensions::*;
use homex_core::gorenstein::{gorenstein_check, gproj_check};
use homex_core::homology::{ext, minimal_resolution, projective_cover, projective_dimension, syzygy, tor};
use homex_core::module::{random_iso_test, tensor_over, Bimodule, FdModule};
use homex_core::{Rationals, Verdict};
use proptest::prelude::*;
use serde_json::json;

const EXAMPLE64_LIMIT: Duration = Duration::from_secs(10);
const EXAMPLE24_LIMIT: Duration = Duration::from_secs(60);
const ISO_TRIALS: usize = 20;
const EHI_WINDOW: usize = 5;
const RANDOM_EXTENSIONS: u32 = 20;
const TRIANGULAR_DRAWS: u32 = 3;
const TRIANGULAR_MAX_DIM: usize = 6;
const PERIODIC_DEGREES: usize = 10;
const PROPERTY_CASES: u32 = 200;
const GP_BOUND: usize = 6;

type Suite = fn(u32) -> Result<(), String>;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn workspace(name: &str) -> Workspace<Rationals> {
    let src = std::fs::read_to_string(data(name)).unwrap();
    Workspace::build(Rationals, &parse(&src).unwrap()).unwrap()
}

fn cli(args: &[&str]) -> (i32, Report) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = homex::cli::run(std::iter::once("homex").chain(args.iter().copied()), &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    let r = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{}", String::from_utf8_lossy(&err)));
    (code, r)
}

/// Runs `body`, prints the verdict line and fails the test on a failure.
fn criterion(n: usize, title: &str, body: impl FnOnce() -> Result<String, String>) {
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(body))
        .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
    let line = match &outcome {
        Ok(detail) => format!("PASS criterion {n}: {title} ({detail})"),
        Err(why) => format!("FAIL criterion {n}: {title} ({why})"),
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    if let Err(why) = outcome {
        panic!("criterion {n}: {why}");
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn iso(m: &FdModule<Rationals>, n: &FdModule<Rationals>) -> bool {
    random_iso_test(m, n, ISO_TRIALS, 7).map(|v| v.is_certified()).unwrap_or(false)
}

fn consequences(e: &Extension<Rationals>, r: &BoundedReport) -> bool {
    verify_tor_consequences(e, r, 16).is_certified()
        && verify_sandwich_pd(e, r, 16).is_certified()
        && relative_bar_exactness(e, r).map(|v| v.is_certified()).unwrap_or(false)
}

#[test]
fn criterion_1_gamma_in_lambda() {
    criterion(1, "9-dimensional extension of a 5-dimensional subalgebra", || {
        let t = Instant::now();
        let file = data("example64.hx");
        let (code, r) = cli(&["check-bounded", file.to_str().unwrap()]);
        ensure!(code == 0 && r.status == "certified", "check-bounded gave {} (exit {code})", r.status);
        ensure!(r.result["big_dim"] == 9 && r.result["small_dim"] == 5, "dims {} {}", r.result["big_dim"], r.result["small_dim"]);
        ensure!(r.result["quotient_dim"] == 4, "quotient dim {}", r.result["quotient_dim"]);
        ensure!(r.result["p"] == 2 && r.result["bimodule_pd"] == 1, "p {} pd {}", r.result["p"], r.result["bimodule_pd"]);
        ensure!(r.result["tor_table"] == json!([[0]]), "tor table {}", r.result["tor_table"]);

        let ws = workspace("example64.hx");
        let g = ws.algebra("Gamma").unwrap().clone();
        ensure!(ws.algebra("Lambda").unwrap().dim() == 9 && g.dim() == 5, "workspace dims");
        let m = ws.bimodule("LaL_over_Ge").unwrap();
        ensure!(m.dim() == 4, "quotient bimodule has dim {}", m.dim());
        let op = ws.opposite_of("Gamma").unwrap();
        let top = FdModule::simple(op.clone(), 1).unwrap();
        let four = FdModule::direct_sum(op.clone(), &[top.clone(), top.clone(), top.clone(), top]);
        ensure!(iso(&m.right_module(op).unwrap(), &four), "right structure is not (top e_2)^4");
        ensure!(iso(&m.left_module(), &FdModule::projective(g.clone(), 0).unwrap()), "left structure is not Gamma e_1");
        let env = Arc::new(g.enveloping().unwrap());
        let om = syzygy(&m.to_enveloping(env.clone()).unwrap(), 1);
        // vertex (1, 1^op) of the enveloping algebra is index 0
        ensure!(iso(&om, &FdModule::projective(env, 0).unwrap()), "first syzygy is not projective at (1, 1)");
        let took = t.elapsed();
        ensure!(took < EXAMPLE64_LIMIT, "took {took:?}");
        Ok(format!("p 2, pd 1, Tor 0, {took:.2?}"))
    });
}

#[test]
fn criterion_2_trivial_extension_of_a4() {
    criterion(2, "trivial extension of A4 by S(3) (x) T(2)", || {
        let t = Instant::now();
        let file = data("example24.hx");
        let (code, r) = cli(&["check-bounded", file.to_str().unwrap()]);
        ensure!(code == 0 && r.status == "certified", "check-bounded gave {} (exit {code})", r.status);
        ensure!(r.result["small_dim"] == 10 && r.result["big_dim"] == 11, "dims {} {}", r.result["small_dim"], r.result["big_dim"]);
        ensure!(r.result["power_dims"] == json!([1, 0]), "tensor powers {}", r.result["power_dims"]);
        ensure!(r.result["p"] == 2 && r.result["bimodule_pd"] == 2, "p {} pd {}", r.result["p"], r.result["bimodule_pd"]);

        let ws = workspace("example24.hx");
        let b = ws.algebra("B").unwrap().clone();
        let m = ws.bimodule("M").unwrap();
        let mm = tensor_over(m, m).map_err(|e| e.to_string())?;
        ensure!(mm.module.dim() == 0, "M (x) M has dim {}", mm.module.dim());
        let env = Arc::new(b.enveloping().unwrap());
        ensure!(env.dim() == 100, "enveloping dim {}", env.dim());
        let res = minimal_resolution(&m.to_enveloping(env).unwrap(), 8);
        ensure!(res.length() == Some(2), "resolution over the enveloping algebra has length {:?}", res.length());
        for side in [m.left_module(), m.right_module(ws.opposite_of("B").unwrap()).unwrap()] {
            let (_, cover, _) = projective_cover(&side);
            ensure!(cover.dim() > side.dim(), "a side of M is projective");
        }
        let took = t.elapsed();
        ensure!(took < EXAMPLE24_LIMIT, "took {took:?}");
        Ok(format!("p 2, pd 2, M(x)M = 0, {took:.2?}"))
    });
}

#[test]
fn criterion_3_consequences() {
    criterion(3, "consequence verifiers certify on certified extensions", || {
        for name in ["example64.hx", "example24.hx"] {
            let ws = workspace(name);
            let e = ws.extension("E").unwrap();
            let r = check_bounded(e, BoundedConfig::default());
            ensure!(r.overall.is_certified(), "{name} not bounded");
            ensure!(consequences(e, &r), "{name}: a consequence check did not certify");
        }
        props::consequences_on_projective_bimodules(RANDOM_EXTENSIONS)?;
        Ok(format!("2 worked extensions, {RANDOM_EXTENSIONS} random projective bimodules"))
    });
}

#[test]
fn criterion_4_eventual_ext_agreement() {
    criterion(4, "Ext over A and B agree above the overshoot", || {
        let mut seen = Vec::new();
        for name in ["example64.hx", "example24.hx"] {
            let ws = workspace(name);
            let e = ws.extension("E").unwrap();
            let r = check_bounded(e, BoundedConfig::default());
            match ehi_dimension_test(e, &r, &simple_pairs(e.big()), EHI_WINDOW) {
                Verdict::Certified(w) => seen.push(format!("t* {} over {} pairs", w.overshoot, w.pairs)),
                other => return Err(format!("{name}: {other:?}")),
            }
        }
        Ok(format!("window {EHI_WINDOW}; {}", seen.join(", ")))
    });
}

#[test]
fn criterion_5_arrow_removal() {
    criterion(5, "arrow removal", || {
        let file = data("kronecker.hx");
        let (code, r) = cli(&["check-bounded", file.to_str().unwrap()]);
        ensure!(code == 0, "exit {code}");
        ensure!(r.result["bimodule_pd"] == 0 && r.result["p"] == 2, "pd {} p {}", r.result["bimodule_pd"], r.result["p"]);
        let ws = workspace("example64.hx");
        match remove_arrow(ws.presentation_of("Lambda").unwrap(), "alpha") {
            Err(ExtensionError::ArrowInRelations(a)) if a == "alpha" => {}
            other => return Err(format!("removing alpha from Lambda gave {other:?}")),
        }
        Ok("Kronecker pd 0, p 2; alpha refused".into())
    });
}

#[test]
fn criterion_6_triangular() {
    criterion(6, "random triangular matrix algebras", || {
        let s = (quiver_spec(2, 2, false), quiver_spec(2, 2, false), any::<u64>());
        let summary = std::sync::Mutex::new(Vec::new());
        props::run(TRIANGULAR_DRAWS, s, |(sl, sg, seed)| {
            let l = q_spec_algebra(&sl, TRIANGULAR_MAX_DIM);
            let g = q_spec_algebra(&sg, TRIANGULAR_MAX_DIM);
            let env = Arc::new(g.tensor(&l.opposite()).unwrap());
            let wm = random_module(&env, seed, TRIANGULAR_MAX_DIM);
            let w = Bimodule::from_enveloping(&wm, g.clone(), l.clone()).unwrap();
            let t = triangular_algebra(l.clone(), g.clone(), &w).unwrap();
            prop_assert!(t.trivial_model_isomorphic);
            prop_assert_eq!(t.algebra.dim(), l.dim() + g.dim() + w.dim());
            let q = t.extension.quotient_bimodule().module;
            prop_assert_eq!(tensor_over(&q, &q).unwrap().module.dim(), 0);
            let r = check_bounded(&t.extension, BoundedConfig::default());
            if r.bimodule_pd.is_certified() {
                prop_assert!(r.overall.is_certified(), "{:?}", r.overall);
            }
            summary.lock().unwrap().push(format!("{}+{}+{}", l.dim(), g.dim(), w.dim()));
            Ok(())
        })?;
        Ok(format!("dims {}", summary.into_inner().unwrap().join(", ")))
    });
}

#[test]
fn criterion_7_gorenstein() {
    criterion(7, "Gorenstein suite", || {
        let ws = workspace("kxx2.hx");
        let k = ws.algebra("K").unwrap().clone();
        ensure!(gorenstein_check(&k, GP_BOUND) == Verdict::Certified((0, 0)), "k[x]/x^2 is not self-injective");
        let s = ws.module("S").unwrap().module.clone();
        let reg = ws.module("R").unwrap().module.clone();
        ensure!(gproj_check(&s, GP_BOUND).is_certified() && gproj_check(&reg, GP_BOUND).is_certified(), "gproj over k[x]/x^2");
        let s_op = FdModule::simple(ws.opposite_of("K").unwrap(), 0).unwrap();
        let t = tor(&s_op, &s, 0..=PERIODIC_DEGREES, 32).map_err(|e| e.to_string())?;
        let e = ext(&s, &s, 0..=PERIODIC_DEGREES, 32).map_err(|e| e.to_string())?;
        ensure!(t.dims == vec![Some(1); PERIODIC_DEGREES + 1], "Tor {:?}", t.dims);
        ensure!(e.dims == vec![Some(1); PERIODIC_DEGREES + 1], "Ext {:?}", e.dims);

        let ws = workspace("a4.hx");
        let a = ws.algebra("A4").unwrap().clone();
        for v in 0..4 {
            for m in [FdModule::simple(a.clone(), v).unwrap(), FdModule::projective(a.clone(), v).unwrap()] {
                let proj = matches!(projective_dimension(&m, 8), Verdict::Certified(p) if p.value == 0);
                ensure!(gproj_check(&m, GP_BOUND).is_certified() == proj, "A4 vertex {v}, dim {}", m.dim());
            }
        }
        let s1 = ws.module("S1").unwrap().module.clone();
        let s2 = ws.module("S2").unwrap().module.clone();
        let e12 = ext(&s1, &s2, 1..=1, 8).map_err(|e| e.to_string())?.get(1);
        ensure!(e12 == Some(1), "Ext^1(S1, S2) = {e12:?}");
        Ok(format!("k[x]/x^2 degrees 0..={PERIODIC_DEGREES}; A4 gproj = proj"))
    });
}

#[test]
fn criterion_8_property_suites() {
    criterion(8, "property suites", || {
        let suites: [(&str, Suite); 7] = [
            ("rank-nullity", props::rank_nullity),
            ("Tor balance", props::tor_balance),
            ("Tor-side symmetry", props::tor_side_symmetry),
            ("constructor axioms", props::constructor_axioms),
            ("resolution minimality", props::resolution_minimality),
            ("parse/print round trip", common::run_round_trip),
            ("cutoff monotonicity", props::cutoff_monotonicity),
        ];
        for (name, run) in suites {
            run(PROPERTY_CASES).map_err(|e| format!("{name}: {e}"))?;
        }
        Ok(format!("7 suites x {PROPERTY_CASES} cases, seed {:#x}", props::SEED))
    });
}
