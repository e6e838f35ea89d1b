//! Subcommand implementations. Each returns the process exit code.
//!
//! Exit codes are part of the contract:
//! 0 valid/certified, 1 constraint violation (or numeric failure),
//! 2 parse/usage error, 3 uncontrollable mode found, 4 indeterminate
//! (near-multiple frequencies).

use std::path::PathBuf;

use flexbeam_core::cert::{certify_placement, decay_rate_estimate, lyapunov_v_modal};
use flexbeam_core::dynamics::{assemble, feedback, simulate, spectral_abscissa, ModalState};
use flexbeam_core::model::validate_system;
use flexbeam_core::nalgebra::DVector;
use flexbeam_core::spectral::{
    find_roots_with, period_phi0, phi0, phi_full, GrowthFit, ModalBasis, RootScanOptions,
};
use flexbeam_core::Error as CoreError;

use crate::config::{self, InitialSpec, RunConfig};
use crate::io::{ensure_dir, fmt_float, write_data_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONSTRAINT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNCONTROLLABLE: i32 = 3;
pub const EXIT_INDETERMINATE: i32 = 4;

/// Smallest shaker coupling |φ_j(l0)| treated as nonzero.
pub const TOL_COUPLING_SHAKER: f64 = 1e-8;
/// Smallest actuator coupling |B_ji| treated as nonzero.
pub const TOL_COUPLING_ACTUATOR: f64 = 1e-8;

pub struct CommonOpts {
    pub config: PathBuf,
    pub out: Option<PathBuf>,
    pub n_modes: Option<usize>,
}

struct Ctx {
    cfg: RunConfig,
    effective: String,
    hash: String,
    out_dir: PathBuf,
}

fn prepare(opts: &CommonOpts) -> Result<Ctx, i32> {
    let mut cfg = match config::load(&opts.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Err(EXIT_PARSE);
        }
    };
    if let Some(n) = opts.n_modes {
        cfg.spectral.n_modes = n;
    }
    let effective = match cfg.effective_toml() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Err(EXIT_CONSTRAINT);
        }
    };
    let hash = config::config_hash(&effective);
    let out_dir = opts
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(&cfg.output.directory));
    Ok(Ctx {
        cfg,
        effective,
        hash,
        out_dir,
    })
}

fn exit_for(err: &CoreError) -> i32 {
    match err {
        CoreError::NearMultipleRoot { .. } | CoreError::BasisNotOrthogonal { .. } => {
            EXIT_INDETERMINATE
        }
        _ => EXIT_CONSTRAINT,
    }
}

/// Prints constraint violations (if any) and returns the exit code to use.
fn check_valid(ctx: &Ctx) -> Result<(), i32> {
    let report = validate_system(&ctx.cfg.beam_system(), &ctx.cfg.actuators());
    if report.is_valid() {
        Ok(())
    } else {
        for v in &report.violations {
            println!("violation = {v}");
        }
        Err(EXIT_CONSTRAINT)
    }
}

fn write_effective(ctx: &Ctx) -> Result<(), i32> {
    if let Err(e) = ensure_dir(&ctx.out_dir) {
        eprintln!("error: {e:#}");
        return Err(EXIT_CONSTRAINT);
    }
    let path = ctx.out_dir.join("effective_config.toml");
    let text = format!("# config_hash = {}\n{}", ctx.hash, ctx.effective);
    if let Err(e) = std::fs::write(&path, text) {
        eprintln!("error: writing {}: {e}", path.display());
        return Err(EXIT_CONSTRAINT);
    }
    Ok(())
}

fn scan_options(cfg: &RunConfig) -> RootScanOptions {
    RootScanOptions {
        bisect_tol: cfg.root_tol(),
        ..RootScanOptions::default()
    }
}

fn build_basis(ctx: &Ctx, n_max: Option<usize>) -> Result<ModalBasis, i32> {
    let sys = ctx.cfg.beam_system();
    ModalBasis::build_with(
        &sys,
        ctx.cfg.spectral.mu_max,
        ctx.cfg.grid_step(),
        n_max,
        scan_options(&ctx.cfg),
    )
    .map_err(|e| {
        eprintln!("error: {e}");
        exit_for(&e)
    })
}

fn print_scan_warnings(basis: &ModalBasis, precision: u32) {
    for (a, b) in &basis.flagged_pairs {
        println!(
            "warning = near-multiple root pair ({}, {})",
            fmt_float(*a, precision),
            fmt_float(*b, precision)
        );
    }
    for t in &basis.tangential {
        println!(
            "warning = possible tangential root near {}",
            fmt_float(*t, precision)
        );
    }
}

pub fn cmd_validate(opts: &CommonOpts) -> i32 {
    let ctx = match prepare(opts) {
        Ok(c) => c,
        Err(code) => return code,
    };
    println!("# config_hash = {}", ctx.hash);
    print!("{}", ctx.effective);
    let report = validate_system(&ctx.cfg.beam_system(), &ctx.cfg.actuators());
    if report.is_valid() {
        println!("valid = true");
        EXIT_OK
    } else {
        for v in &report.violations {
            println!("violation = {v}");
        }
        println!("valid = false");
        EXIT_CONSTRAINT
    }
}

pub fn cmd_spectrum(opts: &CommonOpts) -> i32 {
    let ctx = match prepare(opts) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if let Err(code) = check_valid(&ctx) {
        return code;
    }
    if let Err(code) = write_effective(&ctx) {
        return code;
    }
    let cfg = &ctx.cfg;
    let sys = cfg.beam_system();
    let prec = cfg.output.precision;
    let step = cfg.grid_step();
    let lo = step.max(1e-6);
    let mu_max = cfg.spectral.mu_max;
    let sopts = scan_options(cfg);
    let scan0 = find_roots_with(|mu| phi0(mu, sys.l, sys.l0), lo, mu_max, step, sopts);
    let scan_full = find_roots_with(|mu| phi_full(mu, &sys), lo, mu_max, step, sopts);

    for scan in [&scan0, &scan_full] {
        for (a, b) in &scan.near_multiple {
            println!(
                "warning = near-multiple root pair ({}, {})",
                fmt_float(*a, prec),
                fmt_float(*b, prec)
            );
        }
        for t in &scan.tangential {
            println!(
                "warning = possible tangential root near {}",
                fmt_float(*t, prec)
            );
        }
    }

    let n_rows = scan0.roots.len().max(scan_full.roots.len());
    let mut rows = Vec::with_capacity(n_rows);
    for j in 0..n_rows {
        let mu0 = scan0.roots.get(j).copied();
        let muf = scan_full.roots.get(j).copied();
        let gap = match (mu0, muf) {
            (Some(a), Some(b)) => Some((b - a).abs()),
            _ => None,
        };
        let cell = |v: Option<f64>| v.map_or(String::new(), |x| fmt_float(x, prec));
        rows.push(vec![
            format!("{}", j + 1),
            cell(mu0),
            cell(muf),
            cell(gap),
        ]);
    }
    let columns: Vec<String> = ["j", "mu_phi0", "mu_full", "gap"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let path = ctx.out_dir.join("spectrum.csv");
    if let Err(e) = write_data_file(&path, "spectrum", &ctx.hash, &columns, &rows) {
        eprintln!("error: {e:#}");
        return EXIT_CONSTRAINT;
    }

    println!("n_phi0_roots = {}", scan0.roots.len());
    println!("n_full_roots = {}", scan_full.roots.len());
    if scan_full.roots.len() >= 2 {
        let fit = GrowthFit::fit(&scan_full.roots);
        println!("fit_slope = {}", fmt_float(fit.a, prec));
        println!("fit_intercept = {}", fmt_float(fit.b, prec));
        println!("fit_rel_residual = {}", fmt_float(fit.rel_residual, prec));
    }
    if let (Some(p1), Some(p2)) = (cfg.spectral.p1, cfg.spectral.p2) {
        match period_phi0(sys.l, sys.l0, p1, p2) {
            Ok(p) => {
                println!("period = {}", fmt_float(p, prec));
                if mu_max >= p {
                    let count = scan0
                        .roots
                        .iter()
                        .filter(|&&r| r <= p * (1.0 + 1e-12))
                        .count();
                    println!("roots_per_period = {count}");
                } else {
                    println!("roots_per_period = unavailable (mu_max < period)");
                }
            }
            Err(CoreError::DegeneratePeriod) => {
                println!("period = degenerate (2*p1 == p2)");
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CONSTRAINT;
            }
        }
    }
    if scan0.roots.is_empty() && scan_full.roots.is_empty() {
        println!("notice = no roots in scan range");
    }
    println!("table = {}", path.display());
    EXIT_OK
}

pub fn cmd_modes(opts: &CommonOpts) -> i32 {
    let ctx = match prepare(opts) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if let Err(code) = check_valid(&ctx) {
        return code;
    }
    if let Err(code) = write_effective(&ctx) {
        return code;
    }
    let prec = ctx.cfg.output.precision;
    let n_modes = ctx.cfg.spectral.n_modes;
    let basis = match build_basis(&ctx, Some(n_modes)) {
        Ok(b) => b,
        Err(code) => return code,
    };
    print_scan_warnings(&basis, prec);
    if basis.len() < n_modes {
        println!(
            "notice = scan produced {} of {} requested modes",
            basis.len(),
            n_modes
        );
    }
    let l0 = ctx.cfg.shaker.l0;
    let rows: Vec<Vec<String>> = basis
        .modes
        .iter()
        .enumerate()
        .map(|(i, m)| {
            vec![
                format!("{}", i + 1),
                fmt_float(m.mu, prec),
                fmt_float(m.omega, prec),
                fmt_float(m.eval(l0), prec),
                fmt_float(m.coeffs[0], prec),
                fmt_float(m.coeffs[1], prec),
                fmt_float(m.coeffs[2], prec),
                fmt_float(m.coeffs[3], prec),
            ]
        })
        .collect();
    let columns: Vec<String> = ["j", "mu", "omega", "phi_l0", "a1", "a2", "a3", "a4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let path = ctx.out_dir.join("modes.csv");
    if let Err(e) = write_data_file(&path, "modes", &ctx.hash, &columns, &rows) {
        eprintln!("error: {e:#}");
        return EXIT_CONSTRAINT;
    }
    println!("n_modes = {}", basis.len());
    println!("table = {}", path.display());
    EXIT_OK
}

pub fn cmd_certify(opts: &CommonOpts) -> i32 {
    let ctx = match prepare(opts) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if let Err(code) = check_valid(&ctx) {
        return code;
    }
    if let Err(code) = write_effective(&ctx) {
        return code;
    }
    let cfg = &ctx.cfg;
    let prec = cfg.output.precision;
    let n = cfg.spectral.n_modes;
    let basis = match build_basis(&ctx, Some(n)) {
        Ok(b) => b,
        Err(code) => return code,
    };
    print_scan_warnings(&basis, prec);
    if basis.flagged_within(n) {
        println!("verdict = indeterminate");
        println!("reason = near-multiple roots inside the requested truncation");
        return EXIT_INDETERMINATE;
    }
    if basis.len() < n {
        eprintln!(
            "error: scan produced only {} of {} requested modes below mu_max",
            basis.len(),
            n
        );
        return EXIT_CONSTRAINT;
    }
    let acts = cfg.actuators();
    let alpha0 = cfg.shaker.alpha0;
    let report = match certify_placement(
        &basis,
        &acts,
        alpha0,
        n,
        TOL_COUPLING_SHAKER,
        TOL_COUPLING_ACTUATOR,
    ) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };

    let k = acts.len();
    let mut columns: Vec<String> = vec!["j".into(), "omega".into(), "c_j".into()];
    for i in 1..=k {
        columns.push(format!("B_j{i}"));
    }
    columns.push("controllable".into());
    let rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            let mut row = vec![
                format!("{}", r.j),
                fmt_float(r.omega, prec),
                fmt_float(r.c, prec),
            ];
            for &b in &r.b {
                row.push(fmt_float(b, prec));
            }
            row.push(format!("{}", r.controllable));
            row
        })
        .collect();
    let path = ctx.out_dir.join("certification.csv");
    if let Err(e) = write_data_file(&path, "certify", &ctx.hash, &columns, &rows) {
        eprintln!("error: {e:#}");
        return EXIT_CONSTRAINT;
    }
    println!("n_modes = {n}");
    println!("tol_c = {}", fmt_float(report.tol_c, prec));
    println!("tol_b = {}", fmt_float(report.tol_b, prec));
    println!("table = {}", path.display());

    if report.is_indeterminate() {
        for &(i, j) in &report.near_pairs {
            println!(
                "near_pair = ({}, {})",
                report.records[i].j, report.records[j].j
            );
        }
        println!("verdict = indeterminate");
        return EXIT_INDETERMINATE;
    }

    let closed = match assemble(&basis, &acts, alpha0, n) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let sp = match spectral_abscissa(&closed) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    println!("abscissa = {}", fmt_float(sp.abscissa, prec));

    if report.certified() {
        println!("verdict = certified");
        EXIT_OK
    } else {
        let modes = report.uncontrollable_modes();
        let list: Vec<String> = modes.iter().map(|j| j.to_string()).collect();
        println!("uncontrollable_modes = [{}]", list.join(", "));
        println!("verdict = uncontrollable");
        EXIT_UNCONTROLLABLE
    }
}

pub fn cmd_simulate(opts: &CommonOpts) -> i32 {
    let ctx = match prepare(opts) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let sim = match &ctx.cfg.sim {
        Some(s) => s.clone(),
        None => {
            eprintln!("error: config has no [sim] section");
            return EXIT_PARSE;
        }
    };
    if let Err(code) = check_valid(&ctx) {
        return code;
    }
    if let Err(code) = write_effective(&ctx) {
        return code;
    }
    let cfg = &ctx.cfg;
    let prec = cfg.output.precision;
    let n = cfg.spectral.n_modes;
    let basis = match build_basis(&ctx, Some(n)) {
        Ok(b) => b,
        Err(code) => return code,
    };
    print_scan_warnings(&basis, prec);
    if basis.len() < n {
        eprintln!(
            "error: scan produced only {} of {} requested modes below mu_max",
            basis.len(),
            n
        );
        return EXIT_CONSTRAINT;
    }
    let acts = cfg.actuators();
    let closed = match assemble(&basis, &acts, cfg.shaker.alpha0, n) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };

    let mut q0 = DVector::zeros(n);
    match &sim.initial {
        InitialSpec::Named(_) => q0[0] = 1.0, // validated: first_mode_displacement
        InitialSpec::Amplitudes(v) => {
            if v.len() > n {
                eprintln!(
                    "error: initial amplitude list has {} entries but n_modes = {n}",
                    v.len()
                );
                return EXIT_CONSTRAINT;
            }
            for (i, &a) in v.iter().enumerate() {
                q0[i] = a;
            }
        }
    }
    let mut qdot0 = DVector::zeros(n);
    if let Some(v) = &sim.initial_velocity {
        if v.len() > n {
            eprintln!(
                "error: initial velocity list has {} entries but n_modes = {n}",
                v.len()
            );
            return EXIT_CONSTRAINT;
        }
        for (i, &a) in v.iter().enumerate() {
            qdot0[i] = a;
        }
    }
    let x0 = ModalState::new(q0, qdot0, 0.0);
    let traj = match simulate(&closed, &x0, sim.t_end, sim.dt) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };

    let k = closed.k();
    let mut columns: Vec<String> = vec!["t".into(), "V".into(), "w_l0".into(), "v_l0".into()];
    for i in 1..=n {
        columns.push(format!("q_{i}"));
    }
    for i in 1..=n {
        columns.push(format!("qdot_{i}"));
    }
    for i in 1..=k {
        columns.push(format!("M_{i}"));
    }
    columns.push("F".into());

    let mut rows = Vec::with_capacity(traj.states.len());
    let mut times = Vec::with_capacity(traj.states.len());
    let mut energies = Vec::with_capacity(traj.states.len());
    for st in &traj.states {
        let v = lyapunov_v_modal(&closed, st);
        let w_l0 = closed.c.dot(&st.q);
        let v_l0 = closed.c.dot(&st.qdot);
        let fb = feedback(&closed, &st.qdot);
        let mut row = Vec::with_capacity(columns.len());
        row.push(fmt_float(st.t, prec));
        row.push(fmt_float(v, prec));
        row.push(fmt_float(w_l0, prec));
        row.push(fmt_float(v_l0, prec));
        for i in 0..n {
            row.push(fmt_float(st.q[i], prec));
        }
        for i in 0..n {
            row.push(fmt_float(st.qdot[i], prec));
        }
        for &u in &fb {
            row.push(fmt_float(u, prec));
        }
        rows.push(row);
        times.push(st.t);
        energies.push(v);
    }
    let path = ctx.out_dir.join("trajectory.csv");
    if let Err(e) = write_data_file(&path, "simulate", &ctx.hash, &columns, &rows) {
        eprintln!("error: {e:#}");
        return EXIT_CONSTRAINT;
    }

    let v0 = energies[0];
    let v_end = *energies.last().expect("nonempty");
    println!("v_start = {}", fmt_float(v0, prec));
    println!("v_end = {}", fmt_float(v_end, prec));
    if v0 > 0.0 {
        println!(
            "conservation_defect = {}",
            fmt_float((v_end / v0 - 1.0).abs(), prec)
        );
    }
    let mut max_increase: f64 = 0.0;
    for w in energies.windows(2) {
        max_increase = max_increase.max(w[1] - w[0]);
    }
    println!("max_step_increase = {}", fmt_float(max_increase, prec));
    let fit = decay_rate_estimate(&times, &energies);
    println!("sigma_hat = {}", fmt_float(fit.sigma_hat, prec));
    if fit.degenerate {
        println!("sigma_hat_degenerate = true");
    }
    println!("steps = {}", traj.states.len() - 1);
    println!("table = {}", path.display());
    EXIT_OK
}

pub struct SweepOpts {
    pub common: CommonOpts,
    pub param: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

fn apply_param(cfg: &mut RunConfig, name: &str, value: f64) -> Result<(), String> {
    match name {
        "alpha0" => cfg.shaker.alpha0 = value,
        "kappa" => cfg.shaker.kappa = value,
        "m" => cfg.shaker.m = value,
        "l0" => cfg.shaker.l0 = value,
        _ => {
            let rest = name
                .strip_prefix("actuator")
                .ok_or_else(|| format!("unknown sweep parameter `{name}`"))?;
            let (idx_s, field) = rest
                .split_once('.')
                .ok_or_else(|| format!("malformed sweep parameter `{name}`"))?;
            let idx: usize = idx_s
                .parse()
                .map_err(|_| format!("malformed actuator index in `{name}`"))?;
            if idx == 0 || idx > cfg.actuators.len() {
                return Err(format!(
                    "actuator index {idx} out of range (config has {})",
                    cfg.actuators.len()
                ));
            }
            let a = &mut cfg.actuators[idx - 1];
            match field {
                "center" => a.center = value,
                "width" => a.width = value,
                "height" => a.height = value,
                "alpha" => a.alpha = value,
                _ => return Err(format!("unknown actuator field `{field}` in `{name}`")),
            }
        }
    }
    Ok(())
}

pub fn cmd_sweep(opts: &SweepOpts) -> i32 {
    let ctx = match prepare(&opts.common) {
        Ok(c) => c,
        Err(code) => return code,
    };
    // reject unknown parameter names before doing any work
    {
        let mut probe = ctx.cfg.clone();
        if let Err(e) = apply_param(&mut probe, &opts.param, opts.from) {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    }
    if let Err(code) = write_effective(&ctx) {
        return code;
    }
    let prec = ctx.cfg.output.precision;
    let n = ctx.cfg.spectral.n_modes;
    let mut rows = Vec::with_capacity(opts.steps);
    for i in 0..opts.steps {
        let value = if opts.steps == 1 {
            opts.from
        } else {
            opts.from + (opts.to - opts.from) * i as f64 / (opts.steps - 1) as f64
        };
        let mut cfg_i = ctx.cfg.clone();
        if let Err(e) = apply_param(&mut cfg_i, &opts.param, value) {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
        let sys_i = cfg_i.beam_system();
        let acts_i = cfg_i.actuators();
        let report_v = validate_system(&sys_i, &acts_i);
        if !report_v.is_valid() {
            eprintln!(
                "error: sweep point {} = {} is invalid:\n{}",
                opts.param,
                fmt_float(value, prec),
                report_v.describe()
            );
            return EXIT_CONSTRAINT;
        }
        let basis = match ModalBasis::build_with(
            &sys_i,
            cfg_i.spectral.mu_max,
            cfg_i.grid_step(),
            Some(n),
            scan_options(&cfg_i),
        ) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("error: at {} = {}: {e}", opts.param, fmt_float(value, prec));
                return exit_for(&e);
            }
        };
        let verdict;
        let abscissa_cell;
        if basis.flagged_within(n) || basis.len() < n {
            verdict = "indeterminate";
            abscissa_cell = String::new();
        } else {
            let report = match certify_placement(
                &basis,
                &acts_i,
                cfg_i.shaker.alpha0,
                n,
                TOL_COUPLING_SHAKER,
                TOL_COUPLING_ACTUATOR,
            ) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: at {} = {}: {e}", opts.param, fmt_float(value, prec));
                    return exit_for(&e);
                }
            };
            if report.is_indeterminate() {
                verdict = "indeterminate";
                abscissa_cell = String::new();
            } else {
                let closed = match assemble(&basis, &acts_i, cfg_i.shaker.alpha0, n) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("error: at {} = {}: {e}", opts.param, fmt_float(value, prec));
                        return exit_for(&e);
                    }
                };
                let sp = match spectral_abscissa(&closed) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: at {} = {}: {e}", opts.param, fmt_float(value, prec));
                        return exit_for(&e);
                    }
                };
                verdict = if report.certified() {
                    "certified"
                } else {
                    "uncontrollable"
                };
                abscissa_cell = fmt_float(sp.abscissa, prec);
            }
        }
        rows.push(vec![
            fmt_float(value, prec),
            abscissa_cell,
            verdict.to_string(),
        ]);
    }
    let columns: Vec<String> = ["param", "abscissa", "verdict"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let path = ctx.out_dir.join("sweep.csv");
    if let Err(e) = write_data_file(&path, "sweep", &ctx.hash, &columns, &rows) {
        eprintln!("error: {e:#}");
        return EXIT_CONSTRAINT;
    }
    println!("sweep_param = {}", opts.param);
    println!("n_points = {}", rows.len());
    println!("table = {}", path.display());
    EXIT_OK
}

/// Convenience for tests: run a subcommand by name against a config path.
pub fn run_named(cmd: &str, opts: &CommonOpts) -> i32 {
    match cmd {
        "validate" => cmd_validate(opts),
        "spectrum" => cmd_spectrum(opts),
        "modes" => cmd_modes(opts),
        "certify" => cmd_certify(opts),
        "simulate" => cmd_simulate(opts),
        other => {
            eprintln!("error: unknown subcommand `{other}`");
            EXIT_PARSE
        }
    }
}
