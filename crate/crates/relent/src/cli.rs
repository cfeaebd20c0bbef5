//! Command-line front end.
//!
//! Subcommands: `compute`, `theorem1`, `mregs`, `additivity`, `bound`,
//! `state`. Identical invocations (including seeds) produce byte-identical
//! JSON. Exit codes: 0 success, 1 input error, 2 optimizer did not
//! converge.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{
    additivity_gap, continuity_bound, mregs_balance, necessary_residual, pair_e_values,
    ContinuityInput, MregsReport, TOL_OPTIMIZER,
};
use crate::entropy::{necnew_rhs, von_neumann};
use crate::qlinalg::{trace_norm, DensityMatrix};
use crate::reeopt::{
    ree_constrained, ree_mixture, stationarity_inverse, OptimizationResult, OptimizerConfig,
};
use crate::states::{
    epr, ghz, lambda_reduced, lambda_state, w_reduced, w_state, LambdaParams, Pair, WParams,
};
use crate::symmetry::ConstrainedSigmaParams;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "relent",
    version,
    about = "Relative entropy of entanglement for small bipartite states",
    long_about = "Computes the relative entropy of entanglement E for small bipartite\n\
                  states with two independent minimizers, and audits GHZ/EPR yield\n\
                  accounting for tripartite pure states."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    W,
    Lambda,
    Ghz,
    Epr,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Constrained,
    Mixture,
}

#[derive(Args, Clone)]
struct StateArgs {
    /// Built-in state family.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,

    /// Squared amplitude e² of the W family (defaults to 1 − 2f²).
    #[arg(long)]
    e2: Option<f64>,

    /// Squared amplitude f² of the W family.
    #[arg(long)]
    f2: Option<f64>,

    /// Squared amplitude a² of the Λ family.
    #[arg(long)]
    a2: Option<f64>,

    /// Squared amplitude b² of the Λ family (defaults to (1 − a²)/4).
    #[arg(long)]
    b2: Option<f64>,

    /// Two-party reduction of a three-party family.
    #[arg(long, value_parser = Pair::from_str)]
    pair: Option<Pair>,

    /// Density matrix JSON file ({"dims":[..],"re":[[..]],"im":[[..]]}).
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct OptArgs {
    /// Base RNG seed for the mixture search.
    #[arg(long)]
    seed: Option<u64>,

    /// Number of random restarts.
    #[arg(long)]
    restarts: Option<usize>,

    /// Product components in the separable ansatz (default 4·d_A·d_B).
    #[arg(long)]
    mixture_size: Option<usize>,

    /// Iteration cap per restart.
    #[arg(long)]
    max_iters: Option<usize>,
}

impl OptArgs {
    fn config(&self) -> OptimizerConfig {
        let mut cfg = OptimizerConfig::default();
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(r) = self.restarts {
            cfg.restarts = r;
        }
        if let Some(m) = self.mixture_size {
            cfg.mixture_size = Some(m);
        }
        if let Some(n) = self.max_iters {
            cfg.max_iters = n;
        }
        cfg
    }
}

/// start:stop:step grid, inclusive of stop up to rounding.
#[derive(Clone, Copy)]
struct Sweep {
    start: f64,
    stop: f64,
    step: f64,
}

impl FromStr for Sweep {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err("expected start:stop:step".into());
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.parse::<f64>().map_err(|e| e.to_string()))
            .collect::<std::result::Result<_, _>>()?;
        if nums[2] <= 0.0 || nums[1] < nums[0] {
            return Err("need stop ≥ start and step > 0".into());
        }
        Ok(Sweep { start: nums[0], stop: nums[1], step: nums[2] })
    }
}

impl Sweep {
    fn points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut k = 0usize;
        loop {
            let v = self.start + self.step * k as f64;
            if v > self.stop + 1e-12 {
                break;
            }
            out.push(v);
            k += 1;
        }
        out
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimize the relative entropy to the separable states.
    Compute {
        #[command(flatten)]
        state: StateArgs,

        /// Minimizer: the symmetry-reduced three-parameter search or the
        /// general product-mixture search.
        #[arg(long, value_enum, default_value_t = MethodArg::Mixture)]
        method: MethodArg,

        #[command(flatten)]
        opt: OptArgs,

        /// Sweep f² (W family) or a² (Λ family) over start:stop:step.
        #[arg(long)]
        sweep: Option<Sweep>,
    },

    /// Full report on the asymmetric W point: both E computations, the
    /// stationary-state construction, the continuity bound, and the yield
    /// balance verdict.
    Theorem1,

    /// GHZ/EPR yield balance audit for a three-party family state.
    Mregs {
        #[command(flatten)]
        state: StateArgs,

        #[command(flatten)]
        opt: OptArgs,

        /// Residual tolerance for the consistency verdict.
        #[arg(long, default_value_t = TOL_OPTIMIZER)]
        tolerance: f64,

        /// Sweep f² (W family) or a² (Λ family) over start:stop:step.
        #[arg(long)]
        sweep: Option<Sweep>,
    },

    /// Two-copy additivity probe for a two-qubit state.
    Additivity {
        #[command(flatten)]
        state: StateArgs,

        #[command(flatten)]
        opt: OptArgs,

        /// Sweep f² (W family) over start:stop:step.
        #[arg(long)]
        sweep: Option<Sweep>,
    },

    /// Continuity bound on |E(ρ₁) − E(ρ₂)| from the trace distance.
    Bound {
        /// First density matrix (JSON).
        #[arg(long)]
        rho1: PathBuf,

        /// Second density matrix (JSON).
        #[arg(long)]
        rho2: PathBuf,
    },

    /// Print a family state or one of its reductions as a matrix.
    State {
        #[command(flatten)]
        state: StateArgs,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Compute { state, method, opt, sweep } => {
            cmd_compute(cli, state, *method, opt, *sweep)
        }
        Command::Theorem1 => cmd_theorem1(cli),
        Command::Mregs { state, opt, tolerance, sweep } => {
            cmd_mregs(cli, state, opt, *tolerance, *sweep)
        }
        Command::Additivity { state, opt, sweep } => cmd_additivity(cli, state, opt, *sweep),
        Command::Bound { rho1, rho2 } => cmd_bound(cli, rho1, rho2),
        Command::State { state } => cmd_state(cli, state),
    }
}

// --- state selection --------------------------------------------------------

fn w_params(state: &StateArgs) -> Result<WParams> {
    match (state.e2, state.f2) {
        (Some(e2), Some(f2)) => WParams::from_squares(e2, f2),
        (None, Some(f2)) => WParams::from_f2(f2),
        _ => Err(Error::InvalidArgument("the w family needs --f2 (and optionally --e2)".into())),
    }
}

fn lambda_params(state: &StateArgs) -> Result<LambdaParams> {
    match (state.a2, state.b2) {
        (Some(a2), Some(b2)) => LambdaParams::from_squares(a2, b2),
        (Some(a2), None) => LambdaParams::from_a2(a2),
        _ => Err(Error::InvalidArgument("the lambda family needs --a2 (and optionally --b2)".into())),
    }
}

/// Bipartite target for compute/additivity, with a description of where
/// it came from.
fn bipartite_state(state: &StateArgs) -> Result<(DensityMatrix, String)> {
    if let Some(path) = &state.input {
        let text = fs::read_to_string(path)?;
        let rho: DensityMatrix = serde_json::from_str(&text)?;
        return Ok((rho, format!("file:{}", path.display())));
    }
    match state.family {
        Some(FamilyArg::W) => {
            let p = w_params(state)?;
            let pair = state
                .pair
                .ok_or_else(|| Error::InvalidArgument("--pair is required for the w family".into()))?;
            Ok((w_reduced(&p, pair), format!("w(f2={:.10},pair={pair})", p.f2())))
        }
        Some(FamilyArg::Lambda) => {
            let p = lambda_params(state)?;
            let pair = state.pair.ok_or_else(|| {
                Error::InvalidArgument("--pair is required for the lambda family".into())
            })?;
            Ok((lambda_reduced(&p, pair), format!("lambda(a2={:.10},pair={pair})", p.a2())))
        }
        Some(FamilyArg::Ghz) => {
            let pair = state
                .pair
                .ok_or_else(|| Error::InvalidArgument("--pair is required for ghz".into()))?;
            Ok((ghz().reduced(&pair.keep())?, format!("ghz(pair={pair})")))
        }
        Some(FamilyArg::Epr) => Ok((epr().density(), "epr".into())),
        None => Err(Error::InvalidArgument("select --family or --input".into())),
    }
}

// --- rendering --------------------------------------------------------------

fn emit(cli: &Cli, text: String) -> Result<i32> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(0)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn kv_table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn kv_csv(rows: &[(String, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{k},{v}\n"));
    }
    out.pop();
    out
}

fn render_kv(cli: &Cli, json: &impl Serialize, rows: Vec<(String, String)>) -> Result<String> {
    Ok(match cli.format {
        OutputFormat::Json => to_json(json)?,
        OutputFormat::Table => kv_table(&rows),
        OutputFormat::Csv => kv_csv(&rows),
    })
}

fn csv_grid(header: &str, rows: Vec<String>) -> String {
    let mut out = String::from(header);
    for row in rows {
        out.push('\n');
        out.push_str(&row);
    }
    out
}

// --- compute ----------------------------------------------------------------

#[derive(Serialize)]
struct ComputeReport {
    command: &'static str,
    state: String,
    method: String,
    seed: u64,
    tolerances: ComputeTolerances,
    result: OptimizationResult,
}

#[derive(Serialize)]
struct ComputeTolerances {
    value_recompute: f64,
    gradient: f64,
}

fn cmd_compute(
    cli: &Cli,
    state: &StateArgs,
    method: MethodArg,
    opt: &OptArgs,
    sweep: Option<Sweep>,
) -> Result<i32> {
    if let Some(grid) = sweep {
        return compute_sweep(cli, state, method, opt, grid);
    }
    let (rho, label) = bipartite_state(state)?;
    let config = opt.config();
    let result = match method {
        MethodArg::Constrained => ree_constrained(&rho)?,
        MethodArg::Mixture => ree_mixture(&rho, &config)?,
    };
    let converged = result.converged;
    let report = ComputeReport {
        command: "compute",
        state: label,
        method: result.method.to_string(),
        seed: result.seed,
        tolerances: ComputeTolerances { value_recompute: 1e-9, gradient: config.grad_tol },
        result,
    };
    let rows = vec![
        ("state".into(), report.state.clone()),
        ("method".into(), report.method.clone()),
        ("E (bits)".into(), format!("{:.9}", report.result.value)),
        ("converged".into(), report.result.converged.to_string()),
        ("iterations".into(), report.result.iterations.to_string()),
        ("restarts".into(), report.result.restarts_used.to_string()),
        ("seed".into(), report.result.seed.to_string()),
        (
            "boundary certificate (min eig σ^Γ)".into(),
            format!("{:+.3e}", report.result.boundary_certificate),
        ),
        (
            "params (x,y,z)".into(),
            report
                .result
                .params
                .map(|p| format!("{:.10}, {:.10}, {:.10}", p[0], p[1], p[2]))
                .unwrap_or_else(|| "-".into()),
        ),
    ];
    let text = render_kv(cli, &report, rows)?;
    let code = emit(cli, text)?;
    Ok(if converged { code } else { 2 })
}

fn compute_sweep(
    cli: &Cli,
    state: &StateArgs,
    method: MethodArg,
    opt: &OptArgs,
    grid: Sweep,
) -> Result<i32> {
    let mut rows = Vec::new();
    let mut all_converged = true;
    for point in grid.points() {
        let mut sel = state.clone();
        match state.family {
            Some(FamilyArg::W) | None => sel.f2 = Some(point),
            Some(FamilyArg::Lambda) => sel.a2 = Some(point),
            _ => {
                return Err(Error::InvalidArgument(
                    "sweep needs the w or lambda family".into(),
                ))
            }
        }
        sel.e2 = None;
        sel.b2 = None;
        let (rho, _) = bipartite_state(&sel)?;
        let result = match method {
            MethodArg::Constrained => ree_constrained(&rho)?,
            MethodArg::Mixture => ree_mixture(&rho, &opt.config())?,
        };
        all_converged &= result.converged;
        rows.push(format!(
            "{point:.10},{:.10},{},{:+.3e},{}",
            result.value, result.converged, result.boundary_certificate, result.method
        ));
    }
    let text = csv_grid("param,e_bits,converged,boundary_certificate,method", rows);
    let code = emit(cli, text)?;
    Ok(if all_converged { code } else { 2 })
}

// --- theorem1 ---------------------------------------------------------------

#[derive(Serialize)]
struct Theorem1Report {
    command: &'static str,
    /// Minimizer run on the exact asymmetric W reduction (f² = 1/6).
    e_minimized: f64,
    minimizer_converged: bool,
    optimal_xyz: [f64; 3],
    /// Pure evaluation at the inverse stationary state of the reference
    /// boundary parameters.
    e_at_stationary_state: f64,
    stationary_xyz: [f64; 3],
    stationarity_residual: f64,
    stationary_state_min_eigenvalue: f64,
    stationary_state_rank: usize,
    /// Largest entry of (stationary state − exact W reduction).
    reconstruction_residual: f64,
    /// Trace distance between the stationary state and the exact W
    /// reduction, and the continuity bound it implies on |ΔE|.
    delta_trace_distance: f64,
    continuity_bound_bits: f64,
    /// The E value the GHZ/EPR yield accounting would force (f² = 1/6).
    balance_prediction: f64,
    /// Computed E minus the forced value.
    balance_residual: f64,
    verdict: String,
    tolerances: Theorem1Tolerances,
}

#[derive(Serialize)]
struct Theorem1Tolerances {
    stationarity: f64,
    cross_method: f64,
}

/// Canonical boundary parameters for the asymmetric W point: the
/// ten-digit triple the stationary-state construction is evaluated at.
pub const REFERENCE_XYZ: [f64; 3] = [0.4875473233, 0.1286406856, 0.2953073521];

fn cmd_theorem1(cli: &Cli) -> Result<i32> {
    let f2 = 1.0 / 6.0;
    let rho = w_reduced(&WParams::from_f2(f2)?, Pair::AB);
    let minimized = ree_constrained(&rho)?;
    let xyz = minimized.params.expect("constrained result carries params");

    let stationary_params =
        ConstrainedSigmaParams::new(REFERENCE_XYZ[0], REFERENCE_XYZ[1], REFERENCE_XYZ[2])?;
    let inverse = stationarity_inverse(&stationary_params)?;
    let rho_a = inverse.density()?;
    let sigma = crate::symmetry::constrained_sigma(&stationary_params);
    let e_at_stationary = crate::entropy::relative_entropy(&rho_a, &sigma)?
        .value()
        .ok_or_else(|| Error::InvalidArgument("stationary state leaves σ support".into()))?;

    let diff = rho_a.matrix().sub(rho.matrix());
    let reconstruction_residual = diff.max_abs();
    let delta = trace_norm(&diff)?;
    let bound = continuity_bound(&ContinuityInput::new(delta, rho.dim())?);

    let prediction = necnew_rhs(f2)?;
    let residual = necessary_residual(f2, minimized.value)?;
    let verdict = if residual.abs() > bound + 1e-6 {
        "necessary condition violated".to_string()
    } else {
        "necessary condition compatible".to_string()
    };

    let report = Theorem1Report {
        command: "theorem1",
        e_minimized: minimized.value,
        minimizer_converged: minimized.converged,
        optimal_xyz: xyz,
        e_at_stationary_state: e_at_stationary,
        stationary_xyz: REFERENCE_XYZ,
        stationarity_residual: inverse.stationarity_residual,
        stationary_state_min_eigenvalue: inverse.min_eigenvalue,
        stationary_state_rank: inverse.rank,
        reconstruction_residual,
        delta_trace_distance: delta,
        continuity_bound_bits: bound,
        balance_prediction: prediction,
        balance_residual: residual,
        verdict: verdict.clone(),
        tolerances: Theorem1Tolerances { stationarity: 1e-9, cross_method: 1e-5 },
    };
    let rows = vec![
        ("E minimized over boundary family (bits)".into(), format!("{:.12}", report.e_minimized)),
        ("optimal (x,y,z)".into(), format!("{:.10}, {:.10}, {:.10}", xyz[0], xyz[1], xyz[2])),
        ("E at inverse stationary state (bits)".into(), format!("{:.12}", report.e_at_stationary_state)),
        ("stationarity residual".into(), format!("{:.3e}", report.stationarity_residual)),
        ("stationary state min eigenvalue".into(), format!("{:+.3e}", report.stationary_state_min_eigenvalue)),
        ("stationary state rank".into(), report.stationary_state_rank.to_string()),
        ("reconstruction residual (max entry)".into(), format!("{:.3e}", report.reconstruction_residual)),
        ("trace distance Δ".into(), format!("{:.6e}", report.delta_trace_distance)),
        ("continuity bound on |ΔE| (bits)".into(), format!("{:.6e}", report.continuity_bound_bits)),
        ("yield-balance prediction (bits)".into(), format!("{:.6}", report.balance_prediction)),
        ("computed − prediction (bits)".into(), format!("{:+.6}", report.balance_residual)),
        ("verdict".into(), verdict),
    ];
    let text = render_kv(cli, &report, rows)?;
    let code = emit(cli, text)?;
    Ok(if minimized.converged { code } else { 2 })
}

// --- mregs ------------------------------------------------------------------

#[derive(Serialize)]
struct MregsCliReport {
    command: &'static str,
    state: String,
    seed: u64,
    report: MregsReport,
}

fn three_party_state(state: &StateArgs) -> Result<(crate::states::PureState, String)> {
    match state.family {
        Some(FamilyArg::W) => {
            let p = w_params(state)?;
            Ok((w_state(&p), format!("w(f2={:.10})", p.f2())))
        }
        Some(FamilyArg::Lambda) => {
            let p = lambda_params(state)?;
            Ok((lambda_state(&p), format!("lambda(a2={:.10})", p.a2())))
        }
        Some(FamilyArg::Ghz) => Ok((ghz(), "ghz".into())),
        _ => Err(Error::InvalidArgument("mregs needs --family w, lambda, or ghz".into())),
    }
}

fn cmd_mregs(
    cli: &Cli,
    state: &StateArgs,
    opt: &OptArgs,
    tolerance: f64,
    sweep: Option<Sweep>,
) -> Result<i32> {
    let config = opt.config();
    if let Some(grid) = sweep {
        let mut rows = Vec::new();
        for point in grid.points() {
            let mut sel = state.clone();
            match state.family {
                Some(FamilyArg::Lambda) => sel.a2 = Some(point),
                _ => sel.f2 = Some(point),
            }
            sel.e2 = None;
            sel.b2 = None;
            let (psi, _) = three_party_state(&sel)?;
            let values = pair_e_values(&psi, &config)?;
            let report = mregs_balance(&psi, &values, tolerance)?;
            rows.push(format!(
                "{point:.10},{:.10},{:.10},{:.10},{:.10},{:.10},{:.10},{:.10},{:+.3e},{:+.3e},{:+.3e},{}",
                report.entropies[0],
                report.entropies[1],
                report.entropies[2],
                report.s_ab,
                report.s_ac,
                report.s_bc,
                report.g,
                report.residuals[0],
                report.residuals[1],
                report.residuals[2],
                report.consistent
            ));
        }
        let text = csv_grid(
            "param,S_A,S_B,S_C,E_AB,E_AC,E_BC,g,res_A,res_B,res_C,consistent",
            rows,
        );
        return emit(cli, text);
    }

    let (psi, label) = three_party_state(state)?;
    let values = pair_e_values(&psi, &config)?;
    let report = mregs_balance(&psi, &values, tolerance)?;
    let wrapped = MregsCliReport { command: "mregs", state: label, seed: config.seed, report };
    let r = &wrapped.report;
    let rows = vec![
        ("state".into(), wrapped.state.clone()),
        ("S(ρ_A), S(ρ_B), S(ρ_C)".into(), format!("{:.9}, {:.9}, {:.9}", r.entropies[0], r.entropies[1], r.entropies[2])),
        ("E_AB / E_AC / E_BC (bits)".into(), format!("{:.9} / {:.9} / {:.9}", r.s_ab, r.s_ac, r.s_bc)),
        ("method".into(), r.e_values.ab.method.clone()),
        ("solved GHZ yield g".into(), format!("{:.9}", r.g)),
        ("residuals (A,B,C)".into(), format!("{:+.3e}, {:+.3e}, {:+.3e}", r.residuals[0], r.residuals[1], r.residuals[2])),
        ("tolerance".into(), format!("{:.1e}", r.tolerance)),
        ("consistent".into(), r.consistent.to_string()),
        ("feasible (g ≥ 0)".into(), r.feasible.to_string()),
        ("conditional on asymptotic additivity".into(), r.conditional_on_asymptotic_additivity.to_string()),
    ];
    let text = render_kv(cli, &wrapped, rows)?;
    emit(cli, text)
}

// --- additivity ---------------------------------------------------------

#[derive(Serialize)]
struct AdditivityCliReport {
    command: &'static str,
    state: String,
    seed: u64,
    gap_bits: f64,
    single_copy_bits: f64,
    two_copy_bits: f64,
    single_converged: bool,
    double_converged: bool,
    upper_bound_caveat: &'static str,
}

fn cmd_additivity(
    cli: &Cli,
    state: &StateArgs,
    opt: &OptArgs,
    sweep: Option<Sweep>,
) -> Result<i32> {
    let config = opt.config();
    if let Some(grid) = sweep {
        let mut rows = Vec::new();
        for point in grid.points() {
            let mut sel = state.clone();
            match state.family {
                Some(FamilyArg::Lambda) => sel.a2 = Some(point),
                _ => sel.f2 = Some(point),
            }
            sel.e2 = None;
            sel.b2 = None;
            if sel.pair.is_none() {
                sel.pair = Some(Pair::AB);
            }
            let (rho, _) = bipartite_state(&sel)?;
            let report = additivity_gap(&rho, 2, &config, None)?;
            rows.push(format!(
                "{point:.10},{:.10},{:.10},{:+.4e}",
                report.single_copy, report.two_copy, report.gap
            ));
        }
        let text = csv_grid("param,single_copy_bits,two_copy_bits,gap_bits", rows);
        return emit(cli, text);
    }

    let mut sel = state.clone();
    if sel.family.is_some() && sel.pair.is_none() {
        sel.pair = Some(Pair::AB);
    }
    let (rho, label) = bipartite_state(&sel)?;
    let report = additivity_gap(&rho, 2, &config, None)?;
    let wrapped = AdditivityCliReport {
        command: "additivity",
        state: label,
        seed: config.seed,
        gap_bits: report.gap,
        single_copy_bits: report.single_copy,
        two_copy_bits: report.two_copy,
        single_converged: report.single.converged,
        double_converged: report.double.converged,
        upper_bound_caveat:
            "both values are separable-mixture upper bounds; a gap near zero is consistency with additivity, not proof",
    };
    let rows = vec![
        ("state".into(), wrapped.state.clone()),
        ("single-copy E upper bound (bits)".into(), format!("{:.9}", wrapped.single_copy_bits)),
        ("two-copy E upper bound (bits)".into(), format!("{:.9}", wrapped.two_copy_bits)),
        ("gap = two − 2·single (bits)".into(), format!("{:+.4e}", wrapped.gap_bits)),
        ("seed".into(), wrapped.seed.to_string()),
        ("converged (single / double)".into(), format!("{} / {}", wrapped.single_converged, wrapped.double_converged)),
        ("caveat".into(), wrapped.upper_bound_caveat.to_string()),
    ];
    let text = render_kv(cli, &wrapped, rows)?;
    let code = emit(cli, text)?;
    Ok(if wrapped.single_converged { code } else { 2 })
}

// --- bound --------------------------------------------------------------

#[derive(Serialize)]
struct BoundReport {
    command: &'static str,
    delta_trace_distance: f64,
    dim: usize,
    bound_bits: f64,
    /// Values under nearby readings of the dimension, for context.
    bound_bits_dim_squared: f64,
    note: &'static str,
}

fn cmd_bound(cli: &Cli, rho1: &PathBuf, rho2: &PathBuf) -> Result<i32> {
    let a: DensityMatrix = serde_json::from_str(&fs::read_to_string(rho1)?)?;
    let b: DensityMatrix = serde_json::from_str(&fs::read_to_string(rho2)?)?;
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(format!(
            "{:?} vs {:?}",
            a.dims(),
            b.dims()
        )));
    }
    let delta = trace_norm(&a.matrix().sub(b.matrix()))?;
    let dim = a.dim();
    let bound = continuity_bound(&ContinuityInput::new(delta, dim)?);
    let alt = continuity_bound(&ContinuityInput::new(delta, dim * dim)?);
    let report = BoundReport {
        command: "bound",
        delta_trace_distance: delta,
        dim,
        bound_bits: bound,
        bound_bits_dim_squared: alt,
        note: "joint-dimension, base-2 reading; the dim² column shows the interpretation spread",
    };
    let rows = vec![
        ("trace distance Δ".into(), format!("{:.6e}", report.delta_trace_distance)),
        ("dimension".into(), report.dim.to_string()),
        ("bound on |ΔE| (bits)".into(), format!("{:.6e}", report.bound_bits)),
        ("bound at dim² (bits)".into(), format!("{:.6e}", report.bound_bits_dim_squared)),
        ("note".into(), report.note.to_string()),
    ];
    let text = render_kv(cli, &report, rows)?;
    emit(cli, text)
}

// --- state --------------------------------------------------------------

fn cmd_state(cli: &Cli, state: &StateArgs) -> Result<i32> {
    let rho: DensityMatrix = match (state.family, state.pair) {
        (Some(FamilyArg::Epr), _) | (_, Some(_)) => bipartite_state(state)?.0,
        (Some(_), None) => three_party_state(state)?.0.density(),
        (None, None) => bipartite_state(state)?.0,
    };
    let text = match cli.format {
        OutputFormat::Json => to_json(&rho)?,
        OutputFormat::Table => {
            let n = rho.dim();
            let mut lines = vec![format!(
                "dims {:?}, trace {:.12}, entropy {:.9} bits",
                rho.dims(),
                rho.matrix().trace().re,
                von_neumann(&rho)
            )];
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| {
                        let z = rho.matrix().get(i, j);
                        if z.im.abs() < 1e-14 {
                            format!("{:>10.6}", z.re)
                        } else {
                            format!("{:>10.6}{:+.6}i", z.re, z.im)
                        }
                    })
                    .collect();
                lines.push(row.join(" "));
            }
            lines.join("\n")
        }
        OutputFormat::Csv => {
            let n = rho.dim();
            let mut rows = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let z = rho.matrix().get(i, j);
                    rows.push(format!("{i},{j},{:.17e},{:.17e}", z.re, z.im));
                }
            }
            csv_grid("row,col,re,im", rows)
        }
    };
    emit(cli, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s: Sweep = "0.05:0.45:0.05".parse().unwrap();
        let pts = s.points();
        assert_eq!(pts.len(), 9);
        assert!((pts[0] - 0.05).abs() < 1e-12);
        assert!((pts[8] - 0.45).abs() < 1e-12);
        assert!("1:0:0.1".parse::<Sweep>().is_err());
        assert!("0:1".parse::<Sweep>().is_err());
    }

    #[test]
    fn cli_parses_spec_surface() {
        Cli::try_parse_from([
            "relent", "compute", "--family", "w", "--f2", "0.1666666667", "--pair", "AB",
            "--method", "constrained",
        ])
        .unwrap();
        Cli::try_parse_from([
            "relent", "compute", "--family", "w", "--f2", "0.2", "--pair", "BC", "--method",
            "mixture", "--seed", "7", "--restarts", "4", "--mixture-size", "16",
        ])
        .unwrap();
        Cli::try_parse_from(["relent", "theorem1", "--format", "json"]).unwrap();
        Cli::try_parse_from(["relent", "mregs", "--family", "w", "--f2", "0.3333333333"]).unwrap();
        Cli::try_parse_from(["relent", "additivity", "--family", "w", "--f2", "0.1666666667"])
            .unwrap();
        Cli::try_parse_from(["relent", "bound", "--rho1", "a.json", "--rho2", "b.json"]).unwrap();
        Cli::try_parse_from(["relent", "state", "--family", "lambda", "--a2", "0.5"]).unwrap();
        Cli::try_parse_from([
            "relent", "compute", "--family", "w", "--pair", "BC", "--method", "mixture",
            "--sweep", "0.05:0.45:0.05",
        ])
        .unwrap();
    }
}
