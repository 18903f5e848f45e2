//! `kmk` — verification front end for the κ-Minkowski spectral toolkit.
//!
//! Subcommands: `verify` (run the property suites and write report.json),
//! `zeta` (c(s) table + plot data), `residue` (the spectral-dimension
//! residue suite), `classify` (twisted-primitive basis), `dirac` (the
//! uniqueness solve with its elimination ledger), `kernel` (Schwartz-kernel
//! trace cross-check).
//!
//! Exit codes: 0 = everything passed, 1 = a property failed, 2 = invalid
//! input or configuration.

use clap::{Parser, Subcommand};
use kappa_minkowski::algebra::{
    export_function, import_function, weight_omega, FamilyParams, FunctionFile, NumericOpts,
    TestFunctionFamily,
};
use kappa_minkowski::config::{RunConfig, SuiteName};
use kappa_minkowski::hopf;
use kappa_minkowski::operators::MomentumSymbol;
use kappa_minkowski::suites;
use kappa_minkowski::zeta::{c_closed_form, SchwartzKernel, ZetaParams};
use kappa_minkowski::GridSpec64;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "kmk", version, about = "κ-Minkowski spectral triple toolkit")]
struct Cli {
    /// JSON configuration file (defaults apply if omitted).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Deformation length λ override.
    #[arg(long, global = true)]
    lambda: Option<f64>,
    /// Mass regulator μ override.
    #[arg(long, global = true)]
    mu: Option<f64>,
    /// Seed override for fixture generation.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Comma-separated s samples override.
    #[arg(long, global = true, value_delimiter = ',')]
    s_list: Option<Vec<f64>>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suites and write report.json.
    Verify {
        /// Run a single suite (hopf, algebra, operators, spectral, real).
        #[arg(long)]
        suite: Option<String>,
    },
    /// Tabulate c(s) closed form vs quadrature; write zeta.csv and plot data.
    Zeta,
    /// Run the residue suite and write residue.json.
    Residue,
    /// Print the twisted-primitive basis for a twist power m.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 3)]
        e_power: u32,
    },
    /// Solve for the unique Dirac operator and print the elimination ledger.
    Dirac,
    /// Cross-check the Schwartz-kernel diagonal trace against the
    /// factorized form.
    Kernel {
        /// Read the test function from a fixture file instead of
        /// generating one (JSON grid header + base64 samples).
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(l) = cli.lambda {
        cfg.lambda = l;
    }
    if let Some(m) = cli.mu {
        cfg.mu = m;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(s_list) = &cli.s_list {
        cfg.s_list = s_list.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_out(dir: &Path, name: &str, contents: &str) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {}", dir.display(), e))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cfg = load_config(&cli)?;
    match &cli.cmd {
        Cmd::Verify { suite } => cmd_verify(&cli, cfg, suite.as_deref()),
        Cmd::Zeta => cmd_zeta(&cli, cfg),
        Cmd::Residue => cmd_residue(&cli, cfg),
        Cmd::Classify { m, degree, e_power } => cmd_classify(&cli, *m, *degree, *e_power),
        Cmd::Dirac => cmd_dirac(&cli),
        Cmd::Kernel { fixture } => cmd_kernel(&cli, cfg, fixture.clone()),
    }
}

fn cmd_verify(cli: &Cli, mut cfg: RunConfig, suite: Option<&str>) -> Result<ExitCode, String> {
    if let Some(name) = suite {
        let s = SuiteName::parse(name)
            .ok_or_else(|| format!("unknown suite {:?} (expected hopf, algebra, operators, spectral or real)", name))?;
        cfg.suites = vec![s];
    }
    let start = Instant::now();
    let report = suites::run_all(&cfg);
    let elapsed = start.elapsed();
    for p in &report.properties {
        println!(
            "[{}] {}/{} defect={:.3e} tol={:.3e}  {}",
            if p.pass { "PASS" } else { "FAIL" },
            p.suite,
            p.anchor,
            p.defect,
            p.tolerance,
            p.name
        );
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    write_out(&cli.out, "report.json", &(json + "\n"))?;
    eprintln!(
        "{} properties, {} failed, {:.1}s",
        report.properties.len(),
        report.properties.iter().filter(|p| !p.pass).count(),
        elapsed.as_secs_f64()
    );
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_zeta(cli: &Cli, cfg: RunConfig) -> Result<ExitCode, String> {
    if cfg.s_list.is_empty() {
        return Err("zeta needs a non-empty s list".into());
    }
    if !(cfg.lambda > 0.0) {
        return Err("zeta needs lambda > 0".into());
    }
    let rows = suites::zeta_table(&cfg.s_list, &[cfg.lambda], &[cfg.mu])
        .map_err(|e| format!("zeta table: {}", e))?;
    let mut csv = String::from("lambda,mu,s,c_closed,c_quadrature,rel_gap\n");
    for r in &rows {
        println!(
            "s={:<6} c_closed={:.12e} c_quadrature={:.12e} rel_gap={:.3e}",
            r.s, r.c_closed, r.c_quadrature, r.rel_gap
        );
        csv.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            r.lambda, r.mu, r.s, r.c_closed, r.c_quadrature, r.rel_gap
        ));
    }
    write_out(&cli.out, "zeta.csv", &csv)?;

    // plot data: (s−2)·c(s) against s on a log-spaced approach to s = 2;
    // the curve tends to 1/(4π) at the left edge.
    let mut dat = String::new();
    for i in 0..60 {
        let eps = 10f64.powf(-3.0 + 3.0 * i as f64 / 59.0);
        let s = 2.0 + eps;
        let params = ZetaParams::new(cfg.lambda, cfg.mu, s).map_err(|e| e.to_string())?;
        let c = c_closed_form(&params).map_err(|e| e.to_string())?;
        dat.push_str(&format!("{:.16e} {:.16e}\n", s, eps * c));
    }
    write_out(&cli.out, "zeta_residue.dat", &dat)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_residue(cli: &Cli, cfg: RunConfig) -> Result<ExitCode, String> {
    let report = suites::residue_report(&cfg).map_err(|e| format!("residue suite: {}", e))?;
    let tol = cfg.tolerance("phi-residue");
    let mut all_pass = true;
    for entry in &report.residues {
        let pass = entry.ratio_defect <= tol;
        all_pass &= pass;
        println!(
            "[{}] {}: residue=({:.8e}, {:.8e}) omega/(2π) ratio defect={:.3e}",
            if pass { "PASS" } else { "FAIL" },
            entry.fixture,
            entry.extrapolated_re,
            entry.extrapolated_im,
            entry.ratio_defect
        );
    }
    for (lambda, mu, defect) in &report.c_residue_defects {
        let pass = *defect <= cfg.tolerance("c-residue");
        all_pass &= pass;
        println!(
            "[{}] (s-2)c(s) -> 1/(4π) at λ={} μ={}: defect={:.3e}",
            if pass { "PASS" } else { "FAIL" },
            lambda,
            mu,
            defect
        );
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    write_out(&cli.out, "residue.json", &(json + "\n"))?;
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_classify(cli: &Cli, m: i32, degree: u32, e_power: u32) -> Result<ExitCode, String> {
    if degree < 1 {
        return Err("classification needs degree >= 1".into());
    }
    let basis =
        hopf::classify_twisted_primitives(m, degree, e_power).map_err(|e| e.to_string())?;
    let names: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
    println!("twisted-primitive basis for σ = E^{}: {}", m, names.join(", "));
    let json_terms: Result<Vec<_>, _> = basis.iter().map(hopf::hopf_element_to_json).collect();
    let payload = serde_json::json!({
        "m": m,
        "degree": degree,
        "e_power": e_power,
        "basis": json_terms.map_err(|e| e.to_string())?,
    });
    write_out(
        &cli.out,
        &format!("classify_m{}.json", m),
        &(serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())? + "\n"),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dirac(cli: &Cli) -> Result<ExitCode, String> {
    match hopf::solve_dirac_uniqueness() {
        Ok(sol) => {
            println!("D0 = {}; D1 = {}; sigma = {}", sol.d0, sol.d1, sol.sigma);
            println!("constraint ledger:");
            for line in sol.ledger() {
                println!("  {}", line);
            }
            let payload = serde_json::json!({
                "d0": hopf::hopf_element_to_json(&sol.d0).map_err(|e| e.to_string())?,
                "d1": hopf::hopf_element_to_json(&sol.d1).map_err(|e| e.to_string())?,
                "sigma": hopf::hopf_element_to_json(&sol.sigma).map_err(|e| e.to_string())?,
                "twist_power": sol.twist_power,
                "ledger": sol.ledger(),
            });
            write_out(
                &cli.out,
                "dirac.json",
                &(serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())? + "\n"),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("dirac solve failed: {}", e);
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_kernel(cli: &Cli, cfg: RunConfig, fixture: Option<PathBuf>) -> Result<ExitCode, String> {
    let s = cfg.s_list.first().copied().unwrap_or(3.0);
    let f = match &fixture {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
            let file: FunctionFile =
                serde_json::from_str(&text).map_err(|e| format!("fixture parse: {}", e))?;
            import_function(&file).map_err(|e| e.to_string())?
        }
        None => {
            let lambda = if cfg.lambda > 0.0 { cfg.lambda } else { 0.5 };
            let grid = GridSpec64::new(
                cfg.grid.p0_max,
                cfg.grid.n_p0,
                cfg.grid.x1_max,
                cfg.grid.n_x1,
                lambda,
            )
            .map_err(|e| e.to_string())?;
            let f = TestFunctionFamily::new(grid, FamilyParams::default(), cfg.seed).next();
            let file = export_function(&f);
            write_out(
                &cli.out,
                "fixture.json",
                &(serde_json::to_string(&file).map_err(|e| e.to_string())? + "\n"),
            )?;
            f
        }
    };
    let lambda = f.grid().lambda;
    if !(lambda > 0.0) {
        return Err("kernel needs a fixture with lambda > 0".into());
    }
    let opts = NumericOpts::with_order(cfg.interp_order);
    let symbol = MomentumSymbol::g_delta(lambda, cfg.mu, s);
    let kernel = SchwartzKernel::new(&f, symbol, 1000.0, &opts)
        .and_then(|k| k.validated(1e-3))
        .map_err(|e| e.to_string())?;
    let direct = kernel.diagonal_trace().map_err(|e| e.to_string())?;
    let fact = kernel.factorized_trace(weight_omega(&f));
    let gap = (direct - fact).norm() / fact.norm();
    let tol = cfg.tolerance("kernel-trace");
    let pass = gap <= tol;
    println!(
        "[{}] diagonal trace ({:.8e}, {:.8e}) vs factorized ({:.8e}, {:.8e}); rel gap {:.3e}",
        if pass { "PASS" } else { "FAIL" },
        direct.re,
        direct.im,
        fact.re,
        fact.im,
        gap
    );
    let payload = serde_json::json!({
        "lambda": lambda,
        "mu": cfg.mu,
        "s": s,
        "diagonal_trace": [direct.re, direct.im],
        "factorized_trace": [fact.re, fact.im],
        "rel_gap": gap,
        "window_diagnostic": kernel.window_diagnostic(),
    });
    write_out(
        &cli.out,
        "kernel.json",
        &(serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())? + "\n"),
    )?;
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
