use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diracem_core::dirac_algebra::{basis_from_generators, standard_set, MatrixLabel};
use diracem_core::equation_engine::{
    charge_conjugation_claim_check, compare_paper, expand_with, DeviationLedger, ExpandOptions, MassTerm, Verdict,
    SYSTEM_IDS,
};
use diracem_core::field_maps::mapping;
use diracem_core::planewave::{adjoint_duality_check, dispersion, kernel_wave, perturbation_check, residual, Units};
use diracem_core::suite::{self, SuiteConfig};
use diracem_core::tolerance::Tolerances;
use diracem_core::{poynting_table, Axis, DiracForm, Matrix4, Orientation};
use serde_json::json;

mod render;

use render::Output;

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "diracem", version, about = "Verify the Dirac-matrix description of electromagnetic fields")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct RunConfig {
    /// Output format
    #[arg(long, global = true, value_enum, env = "DIRACEM_FORMAT", default_value = "text")]
    format: Format,
    /// Seed for every random draw
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Speed of light
    #[arg(long = "c", global = true, default_value_t = 1.0)]
    c: f64,
    /// Reduced Planck constant
    #[arg(long = "hbar", global = true, default_value_t = 1.0)]
    hbar: f64,
    /// On-shell and kernel tolerance
    #[arg(long, global = true)]
    tol_kernel: Option<f64>,
    /// Symbolic-versus-direct tolerance
    #[arg(long, global = true)]
    tol_spotcheck: Option<f64>,
    /// Amplitude-relative lower bound for perturbation detection
    #[arg(long, global = true)]
    tol_perturbation: Option<f64>,
    /// Lower bound on the relative determinant off shell
    #[arg(long, global = true)]
    tol_off_shell: Option<f64>,
}

impl RunConfig {
    fn units(&self) -> Units {
        Units { c: self.c, hbar: self.hbar }
    }

    fn tolerances(&self) -> Tolerances {
        let d = Tolerances::default();
        Tolerances {
            kernel: self.tol_kernel.unwrap_or(d.kernel),
            spotcheck: self.tol_spotcheck.unwrap_or(d.spotcheck),
            perturbation: self.tol_perturbation.unwrap_or(d.perturbation),
            off_shell: self.tol_off_shell.unwrap_or(d.off_shell),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Clifford relations and the 16-element basis
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// The 18-row Poynting table
    Poynting,
    /// Expand a Dirac form with a stored map
    Derive {
        /// 2.1, 2.4, 2.5, 2.10, 2.2 or 2.11
        #[arg(long)]
        form: DiracForm,
        #[arg(long)]
        axis: Axis,
        /// cw or ccw
        #[arg(long)]
        orientation: Orientation,
        /// Drop the mass term
        #[arg(long)]
        massless: bool,
        /// Use the charge-conjugated map
        #[arg(long)]
        charge_conjugate: bool,
    },
    /// Diff a printed system against its derivation
    ComparePaper {
        /// 2.8, 2.9, 2.12, 3.7, 3.8, 3.9, charge-conjugation or all
        id: String,
        /// Deviation ledger replacing the shipped one
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
    /// Plane-wave checks
    #[command(subcommand)]
    Planewave(PlanewaveCmd),
    /// Every check, for CI
    VerifyAll {
        /// JSON file with [alpha1, alpha2, alpha3, beta]
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Anticommutation and hermiticity
    Verify {
        /// JSON file with [alpha1, alpha2, alpha3, beta]
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// Products of the generators and their rank
    Basis {
        #[arg(long)]
        set: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct WaveArgs {
    #[arg(long, default_value = "2.10")]
    form: DiracForm,
    #[arg(long)]
    axis: Axis,
    #[arg(long, default_value = "cw")]
    orientation: Orientation,
    #[arg(long)]
    k: f64,
    #[arg(long)]
    m: f64,
    /// Negative frequency branch
    #[arg(long)]
    negative: bool,
    /// Number of random (t, ξ) sample points
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

#[derive(Subcommand)]
enum PlanewaveCmd {
    /// ε± for mass and momentum
    Dispersion {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        p: f64,
    },
    /// Residual of the on-shell kernel wave, and of a system with one source sign flipped
    Residual(WaveArgs),
    /// Column solution conjugated into the row form
    Duality {
        #[command(flatten)]
        wave: WaveArgs,
        /// Multiply ω by this factor, moving the wave off shell
        #[arg(long, default_value_t = 1.0)]
        detune: f64,
    },
}

fn usage(msg: impl std::fmt::Display) -> Output {
    Output::error(USAGE, msg.to_string())
}

fn read_set(path: &Option<PathBuf>) -> Result<[Matrix4; 4], Output> {
    match path {
        None => Ok(standard_set()),
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| usage(format!("{}: {e}", p.display())))
            .and_then(|t| suite::parse_matrix_set(&t).map_err(|e| usage(format!("{}: {e}", p.display())))),
    }
}

fn read_ledger(path: &Option<PathBuf>) -> Result<DeviationLedger, Output> {
    match path {
        None => Ok(DeviationLedger::shipped()),
        Some(p) => DeviationLedger::load(p).map_err(usage),
    }
}

fn run(cli: &Cli) -> Result<Output, Output> {
    let cfg = &cli.config;
    let tol = cfg.tolerances();
    cfg.units().validate().map_err(usage)?;
    match &cli.command {
        Command::Algebra(AlgebraCmd::Verify { set }) => {
            let section = suite::algebra_section(&read_set(set)?);
            let ok = section.count(suite::Status::Pass) == section.checks.len();
            Ok(Output::new(if ok { 0 } else { 1 }, json!(section), render::section(&section)))
        }
        Command::Algebra(AlgebraCmd::Basis { set }) => {
            let set = read_set(set)?;
            let labels = [1, 2, 3, 4].map(|i| MatrixLabel::new(i, None).expect("valid index"));
            match basis_from_generators(&set, &labels) {
                Ok(b) => Ok(Output::new(0, json!(b), render::basis(&b))),
                Err(e) => Ok(Output::error(1, e.to_string())),
            }
        }
        Command::Poynting => {
            let t = poynting_table();
            let mismatches = t.mismatches();
            let code = if mismatches.is_empty() { 0 } else { 1 };
            Ok(Output::new(
                code,
                json!({ "rows": t.rows, "mismatches": mismatches }),
                render::poynting(&t, &mismatches),
            ))
        }
        Command::Derive { form, axis, orientation, massless, charge_conjugate } => {
            let mut map = mapping(*axis, *orientation);
            if *charge_conjugate {
                map = diracem_core::charge_conjugate(&map);
            }
            let mass = if *massless { MassTerm::Massless } else { MassTerm::Massive };
            let s = expand_with(*form, &map, ExpandOptions { mass, ..Default::default() });
            Ok(Output::new(0, json!(s), render::system(&s)))
        }
        Command::ComparePaper { id, ledger } => {
            let ledger = read_ledger(ledger)?;
            compare(id, &ledger)
        }
        Command::Planewave(cmd) => planewave(cmd, cfg, &tol),
        Command::VerifyAll { set, ledger } => {
            let config = SuiteConfig {
                seed: cfg.seed,
                tolerances: tol,
                units: cfg.units(),
                matrix_set: set.as_ref().map(|_| read_set(set)).transpose()?,
                ledger: read_ledger(ledger)?,
                ..SuiteConfig::default()
            };
            let report = suite::run(&config);
            Ok(Output::new(report.exit_code(), json!(report), render::suite(&report)))
        }
    }
}

fn compare(id: &str, ledger: &DeviationLedger) -> Result<Output, Output> {
    let verdict_code = |v: Verdict| if v == Verdict::Discrepancy { 3 } else { 0 };
    match id {
        "all" => {
            let mut comparisons = Vec::new();
            for id in SYSTEM_IDS {
                comparisons.push(compare_paper(id, ledger).map_err(usage)?);
            }
            let cc = charge_conjugation_claim_check(ledger);
            let code = comparisons
                .iter()
                .map(|c| c.classification.verdict)
                .chain([cc.classification.verdict])
                .map(verdict_code)
                .max()
                .unwrap_or(0);
            let text = render::comparisons(&comparisons, Some(&cc));
            Ok(Output::new(code, json!({ "systems": comparisons, "charge_conjugation": cc }), text))
        }
        "charge-conjugation" => {
            let cc = charge_conjugation_claim_check(ledger);
            Ok(Output::new(verdict_code(cc.classification.verdict), json!(cc), render::charge_conjugation(&cc)))
        }
        _ => {
            let c = compare_paper(id, ledger).map_err(usage)?;
            Ok(Output::new(verdict_code(c.classification.verdict), json!(c), render::comparisons(&[c], None)))
        }
    }
}

fn planewave(cmd: &PlanewaveCmd, cfg: &RunConfig, tol: &Tolerances) -> Result<Output, Output> {
    let units = cfg.units();
    match cmd {
        PlanewaveCmd::Dispersion { m, p } => {
            if *m < 0.0 {
                return Err(usage(format!("m must be non-negative, got {m}")));
            }
            let (plus, minus) = dispersion(*m, *p, cfg.c, cfg.hbar).map_err(usage)?;
            let v = json!({
                "check": "dispersion",
                "parameters": { "m": m, "p": p, "c": cfg.c, "hbar": cfg.hbar },
                "energies": [plus, minus],
            });
            Ok(Output::new(0, v, format!("ε+ = {plus}\nε- = {minus}\n")))
        }
        PlanewaveCmd::Residual(w) => {
            let (map, wave) = wave_for(w, units, tol)?;
            let system = expand_with(w.form, &map, ExpandOptions::default());
            let r = residual(&system, &wave, w.samples, cfg.seed);
            let pass = r < tol.kernel;
            let mut reports = vec![json!({
                "check": "residual",
                "parameters": {
                    "form": w.form, "map": map.tag(), "omega": wave.omega, "k": wave.k, "m": wave.m,
                    "c": wave.c, "hbar": wave.hbar, "samples": w.samples, "tolerance": tol.kernel,
                },
                "residuals": { "max_abs": r },
                "verdict": if pass { "pass" } else { "fail" },
                "seed": cfg.seed,
            })];
            let mut ok = pass;
            let mut text = format!(
                "{}\nmax residual over {} points: {r:.3e} ({})\n",
                render::wave(&wave),
                w.samples,
                if pass { "pass" } else { "FAIL" }
            );
            if wave.m > 0.0 {
                let p = perturbation_check(&system, &wave, w.samples, cfg.seed, tol);
                ok &= p.passed();
                text.push_str(&render::report(&p));
                reports.push(json!(p));
            }
            Ok(Output::new(if ok { 0 } else { 1 }, json!(reports), text))
        }
        PlanewaveCmd::Duality { wave: w, detune } => {
            let (map, wave) = wave_for(w, units, tol)?;
            let wave = diracem_core::PlaneWaveParams { omega: wave.omega * detune, ..wave };
            let r = adjoint_duality_check(w.form, &map, &wave, w.samples, cfg.seed, tol);
            let code = if r.verdict == diracem_core::planewave::CheckVerdict::Fail { 1 } else { 0 };
            Ok(Output::new(code, json!(r), render::report(&r)))
        }
    }
}

fn wave_for(
    w: &WaveArgs,
    units: Units,
    tol: &Tolerances,
) -> Result<(diracem_core::BispinorMap, diracem_core::PlaneWaveParams), Output> {
    if !(w.k.is_finite() && w.m.is_finite() && w.m >= 0.0) {
        return Err(usage(format!("k must be finite and m non-negative, got k={} m={}", w.k, w.m)));
    }
    if w.samples == 0 {
        return Err(usage("samples must be positive"));
    }
    let map = mapping(w.axis, w.orientation);
    let branch = if w.negative { -1.0 } else { 1.0 };
    match kernel_wave(w.form, &map, w.k, w.m, units, branch, tol.kernel).map_err(usage)? {
        Some(wave) => Ok((map, wave)),
        None => Err(Output::error(1, "no kernel vector on shell".into())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.config.format;
    let out = run(&cli).unwrap_or_else(|e| e);
    out.emit(format == Format::Json);
    ExitCode::from(out.code)
}
