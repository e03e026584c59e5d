//! Command-line front end: single-state energies, reference-style tables,
//! analytic-vs-numerical comparisons, wave-function sampling and the molecule
//! registry, all emitted as deterministic CSV (or a pretty listing).

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use manning_rosen::{
    batch, molecules, spectrum, wavefunction, ApproxScheme, Error as MrError,
    MoleculeRegistry, PotentialParams, QuantumState, SchemeVariant, SolverConfig, UnitContext,
    WavefunctionSpec,
};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "mrpot",
    about = "Bound-state spectra and wave functions for the Manning-Rosen potential",
    version
)]
struct Cli {
    /// Centrifugal approximation scheme.
    #[arg(long, global = true, default_value = "improved")]
    scheme: SchemeArg,
    /// Output format.
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    /// JSON file overriding the builtin molecule registry.
    #[arg(long, global = true, value_name = "PATH")]
    molecule_file: Option<PathBuf>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Usual,
    Improved,
    WeiDong,
}

impl From<SchemeArg> for SchemeVariant {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Usual => SchemeVariant::Usual,
            SchemeArg::Improved => SchemeVariant::Improved,
            SchemeArg::WeiDong => SchemeVariant::WeiDong,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Pretty,
}

#[derive(Args)]
struct PotentialArgs {
    /// Potential shape parameter alpha.
    #[arg(long)]
    alpha: f64,
    /// Strength A (dimensionless).
    #[arg(long = "A", value_name = "A", conflicts_with = "a_two_b")]
    a_strength: Option<f64>,
    /// Use the A = 2 b convention.
    #[arg(long = "A2b")]
    a_two_b: bool,
    /// Range b (same unit as radii; pm for eV output).
    #[arg(long, conflicts_with = "invb")]
    b: Option<f64>,
    /// Inverse range 1/b.
    #[arg(long)]
    invb: Option<f64>,
}

impl PotentialArgs {
    fn build(&self) -> Result<PotentialParams> {
        let b = match (self.b, self.invb) {
            (Some(b), None) => b,
            (None, Some(invb)) if invb > 0.0 => 1.0 / invb,
            (None, Some(invb)) => return Err(anyhow!("--invb must be positive, got {invb}")),
            _ => return Err(anyhow!("provide exactly one of --b or --invb")),
        };
        let a = match (self.a_strength, self.a_two_b) {
            (Some(a), false) => a,
            (None, true) => 2.0 * b,
            _ => return Err(anyhow!("provide exactly one of --A or --A2b")),
        };
        Ok(PotentialParams::new(self.alpha, a, b)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy of a single state.
    Energy {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Spectroscopic label, e.g. 2p.
        #[arg(long)]
        state: String,
        /// Also report the energy in eV for this molecule.
        #[arg(long)]
        molecule: Option<String>,
    },
    /// Reference-style tables (t1 dimensionless; t2-t6 in eV; custom sweeps).
    Table {
        /// t1 | t2 | t3 | t4 | t5 | t6 | custom
        id: String,
        /// Molecule for t2-t6 (defaults to the table's pair) or custom eV output.
        #[arg(long)]
        molecule: Option<String>,
        /// States for `custom`, comma separated (e.g. 2p,3d).
        #[arg(long, value_delimiter = ',')]
        states: Vec<String>,
        /// 1/b values for `custom`, comma separated.
        #[arg(long, value_delimiter = ',')]
        invb: Vec<f64>,
        /// Alpha values for `custom`, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.75, 1.5])]
        alpha: Vec<f64>,
    },
    /// Closed-form energies against the Numerov eigensolver.
    Compare {
        /// Potential shape parameter alpha.
        #[arg(long, default_value_t = 0.75)]
        alpha: f64,
        /// Inverse range 1/b (A = 2 b convention).
        #[arg(long, default_value_t = 0.025)]
        invb: f64,
        /// States, comma separated; defaults to the full reference list.
        #[arg(long, value_delimiter = ',')]
        states: Vec<String>,
    },
    /// Sample a normalized radial wave function as (r, u) pairs.
    Wavefunction {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Spectroscopic label, e.g. 2p.
        #[arg(long)]
        state: String,
        /// Number of samples (first one at r = 0).
        #[arg(long, default_value_t = 512)]
        points: usize,
        /// Largest sampled radius (defaults to ~46 b / epsilon).
        #[arg(long)]
        rmax: Option<f64>,
    },
    /// List the molecule registry.
    Molecules,
}

const TABLE_STATES_MULTI: [&str; 6] = ["2p", "3p", "3d", "4p", "4d", "4f"];
const TABLE_STATES_SINGLE: [&str; 8] = ["5p", "5d", "5f", "5g", "6p", "6d", "6f", "6g"];
const TABLE_INVB: [f64; 4] = [0.025, 0.050, 0.075, 0.100];

/// Row layout of the reference tables: how many 1/b values each state gets.
fn table_rows(dimensionless: bool) -> Vec<(&'static str, f64)> {
    let mut rows = Vec::new();
    for state in TABLE_STATES_MULTI {
        let count = match state {
            "2p" | "3p" => 4,
            // The dimensionless table stops 3d at 1/b = 0.075.
            "3d" => {
                if dimensionless {
                    3
                } else {
                    4
                }
            }
            _ => 3,
        };
        for &invb in &TABLE_INVB[..count] {
            rows.push((state, invb));
        }
    }
    for state in TABLE_STATES_SINGLE {
        rows.push((state, TABLE_INVB[0]));
    }
    rows
}

fn molecule_pair(table: &str) -> Option<[&'static str; 2]> {
    match table {
        "t2" => Some(["HCl", "CH"]),
        "t3" => Some(["LiH", "CO"]),
        "t4" => Some(["NO", "O2"]),
        "t5" => Some(["I2", "N2"]),
        "t6" => Some(["H2", "Ar2"]),
        _ => None,
    }
}

/// Fixed 7-decimal format of the dimensionless table.
fn fmt7(x: f64) -> String {
    format!("{x:.7}")
}

/// Plain-decimal format with `sig` significant digits (eV tables).
fn fmt_sig(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn scheme_for(variant: SchemeVariant, p: &PotentialParams) -> Result<ApproxScheme> {
    Ok(ApproxScheme::make(variant, p)?)
}

fn registry(path: &Option<PathBuf>) -> Result<MoleculeRegistry> {
    Ok(match path {
        Some(p) => MoleculeRegistry::from_json_path(p)?,
        None => MoleculeRegistry::builtin(),
    })
}

struct Output {
    lines: Vec<String>,
}

impl Output {
    fn new() -> Self {
        Self { lines: Vec::new() }
    }

    fn push(&mut self, line: String) {
        self.lines.push(line);
    }

    fn finish(self, out: &Option<PathBuf>) -> Result<()> {
        let text = self.lines.join("\n") + "\n";
        match out {
            Some(path) => {
                let mut f = std::fs::File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?;
                f.write_all(text.as_bytes())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            None => {
                print!("{text}");
            }
        }
        Ok(())
    }
}

fn cmd_energy(
    cli_scheme: SchemeVariant,
    format: Format,
    registry_path: &Option<PathBuf>,
    potential: &PotentialArgs,
    state: &str,
    molecule: &Option<String>,
    out: &Option<PathBuf>,
) -> Result<()> {
    let p = potential.build()?;
    let q = QuantumState::from_spectroscopic(state)?;
    let scheme = scheme_for(cli_scheme, &p)?;
    let result = spectrum::energy(&p, &scheme, &q);
    let a_c = spectrum::critical_coupling(p.alpha, &scheme, &q);

    let ev = match molecule {
        Some(name) => {
            let reg = registry(registry_path)?;
            let mol = reg.lookup(name)?.clone();
            result
                .energy_dimensionless
                .map(|e| -molecules::energy_to_ev(e, &mol, p.b, &UnitContext::default()))
        }
        None => None,
    };

    let mut output = Output::new();
    let neg_dim = result.energy_dimensionless.map(|e| -e);
    let neg_atomic = result.energy_hartree(p.b).map(|e| -e);
    match format {
        Format::Csv => {
            let mut header =
                "state,alpha,invb,A,scheme,epsilon,bound,neg_energy_dimensionless,neg_energy_atomic,critical_coupling".to_string();
            let mut row = format!(
                "{},{},{},{},{},{:.10},{},{},{},{:.10}",
                q.label(),
                p.alpha,
                1.0 / p.b,
                p.a,
                scheme.variant(),
                result.epsilon,
                result.bound,
                neg_dim.map(|e| format!("{e:.10}")).unwrap_or_default(),
                neg_atomic.map(fmt7).unwrap_or_default(),
                a_c,
            );
            if let Some(name) = molecule {
                header.push_str(",molecule,neg_energy_ev");
                row.push_str(&format!(
                    ",{name},{}",
                    ev.map(|e| fmt_sig(e, 6)).unwrap_or_default()
                ));
            }
            output.push(header);
            output.push(row);
        }
        Format::Pretty => {
            output.push(format!("state            : {}", q.label()));
            output.push(format!("alpha, A, b      : {}, {}, {}", p.alpha, p.a, p.b));
            output.push(format!("scheme           : {}", scheme.variant()));
            output.push(format!("epsilon          : {:.10}", result.epsilon));
            output.push(format!("bound            : {}", result.bound));
            if let Some(e) = neg_dim {
                output.push(format!("-E (dimensionless): {e:.10}"));
            }
            if let Some(e) = neg_atomic {
                output.push(format!("-E (atomic units) : {}", fmt7(e)));
            }
            if let (Some(e), Some(name)) = (ev, molecule) {
                output.push(format!("-E ({name})        : {} eV", fmt_sig(e, 6)));
            }
            output.push(format!("critical coupling : {a_c:.10}"));
        }
    }
    output.finish(out)?;
    if !result.bound {
        return Err(MrError::Unbound.into());
    }
    Ok(())
}

fn cmd_table_dimensionless(out: &Option<PathBuf>) -> Result<()> {
    let mut cells = Vec::new();
    let rows = table_rows(true);
    for &(state, invb) in &rows {
        for &alpha in &[0.75, 1.5] {
            let b = 1.0 / invb;
            let params = PotentialParams::new(alpha, 2.0 * b, b)?;
            let q = QuantumState::from_spectroscopic(state)?;
            for scheme in [ApproxScheme::improved(), ApproxScheme::usual()] {
                cells.push(batch::EnergyCell { params, scheme, state: q });
            }
        }
    }
    let energies = batch::energies(&cells);
    let mut output = Output::new();
    output.push("state,invb,alpha,neg_e_improved,neg_e_usual".to_string());
    let mut it = energies.iter();
    for &(state, invb) in &rows {
        for &alpha in &[0.75, 1.5] {
            let improved = it.next().unwrap();
            let usual = it.next().unwrap();
            let b = 1.0 / invb;
            let cell = |r: &spectrum::SpectrumResult| {
                r.energy_hartree(b).map(|e| fmt7(-e)).unwrap_or_default()
            };
            output.push(format!("{state},{invb},{alpha},{},{}", cell(improved), cell(usual)));
        }
    }
    output.finish(out)
}

fn cmd_table_ev(
    table: &str,
    molecule: &Option<String>,
    registry_path: &Option<PathBuf>,
    out: &Option<PathBuf>,
) -> Result<()> {
    let pair = molecule_pair(table).expect("checked by caller");
    let reg = registry(registry_path)?;
    let names: Vec<String> = match molecule {
        Some(m) => vec![reg.lookup(m)?.name.clone()],
        None => pair.iter().map(|s| s.to_string()).collect(),
    };
    let ctx = UnitContext::default();
    let mut output = Output::new();
    output.push("table,molecule,state,invb,neg_e_hulthen_ev,neg_e_a075_ev,neg_e_a150_ev".to_string());
    let rows = table_rows(false);
    let alphas = [0.0, 0.75, 1.5];
    let mut cells = Vec::new();
    for &(state, invb) in &rows {
        let b = 1.0 / invb;
        let q = QuantumState::from_spectroscopic(state)?;
        for &alpha in &alphas {
            // alpha = 0 is the Hulthen reduction column (identical at alpha = 1).
            cells.push(batch::EnergyCell {
                params: PotentialParams::new(alpha, 2.0 * b, b)?,
                scheme: ApproxScheme::improved(),
                state: q,
            });
        }
    }
    let energies = batch::energies(&cells);
    for name in &names {
        let mol = reg.lookup(name)?;
        let mut it = energies.iter();
        for &(state, invb) in &rows {
            let b = 1.0 / invb;
            let mut row = format!("{table},{name},{state},{invb}");
            for _ in &alphas {
                let r = it.next().unwrap();
                let cell = r
                    .energy_dimensionless
                    .map(|e| fmt_sig(-molecules::energy_to_ev(e, mol, b, &ctx), 6))
                    .unwrap_or_default();
                row.push(',');
                row.push_str(&cell);
            }
            output.push(row);
        }
    }
    output.finish(out)
}

fn cmd_table_custom(
    cli_scheme: SchemeVariant,
    states: &[String],
    invbs: &[f64],
    alphas: &[f64],
    molecule: &Option<String>,
    registry_path: &Option<PathBuf>,
    out: &Option<PathBuf>,
) -> Result<()> {
    if states.is_empty() || invbs.is_empty() {
        return Err(anyhow!("custom tables need --states and --invb"));
    }
    for &invb in invbs {
        if invb > 0.1 {
            eprintln!(
                "warning: 1/b = {invb} is outside the validated screening range (<= 0.1); \
                 the closed forms assume r/b << 1"
            );
        }
    }
    let mol = match molecule {
        Some(name) => Some(registry(registry_path)?.lookup(name)?.clone()),
        None => None,
    };
    let ctx = UnitContext::default();
    let mut output = Output::new();
    let mut header = "state,invb,alpha,neg_e_dimensionless,neg_e_atomic".to_string();
    if mol.is_some() {
        header.push_str(",neg_e_ev");
    }
    output.push(header);
    for state in states {
        let q = QuantumState::from_spectroscopic(state)?;
        for &invb in invbs {
            // Negated form so NaN is rejected too.
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(invb > 0.0) {
                return Err(anyhow!("--invb values must be positive, got {invb}"));
            }
            let b = 1.0 / invb;
            for &alpha in alphas {
                let p = PotentialParams::new(alpha, 2.0 * b, b)?;
                let scheme = scheme_for(cli_scheme, &p)?;
                let r = spectrum::energy(&p, &scheme, &q);
                let mut row = format!(
                    "{state},{invb},{alpha},{},{}",
                    r.energy_dimensionless.map(|e| format!("{:.10}", -e)).unwrap_or_default(),
                    r.energy_hartree(b).map(|e| fmt7(-e)).unwrap_or_default(),
                );
                if let Some(mol) = &mol {
                    let cell = r
                        .energy_dimensionless
                        .map(|e| fmt_sig(-molecules::energy_to_ev(e, mol, b, &ctx), 6))
                        .unwrap_or_default();
                    row.push(',');
                    row.push_str(&cell);
                }
                output.push(row);
            }
        }
    }
    output.finish(out)
}

fn cmd_compare(
    cli_scheme: SchemeVariant,
    alpha: f64,
    invb: f64,
    states: &[String],
    out: &Option<PathBuf>,
) -> Result<()> {
    let default_states: Vec<String> = TABLE_STATES_MULTI
        .iter()
        .chain(TABLE_STATES_SINGLE.iter())
        .map(|s| s.to_string())
        .collect();
    let states = if states.is_empty() { &default_states } else { states };
    let b = 1.0 / invb;
    let p = PotentialParams::new(alpha, 2.0 * b, b)?;
    let scheme = scheme_for(cli_scheme, &p)?;

    let mut jobs = Vec::new();
    let mut analytic_rows = Vec::new();
    for state in states {
        let q = QuantumState::from_spectroscopic(state)?;
        let analytic = spectrum::energy(&p, &scheme, &q);
        let job = analytic
            .energy_dimensionless
            .map(|_| -> Result<batch::EigenvalueJob> {
                Ok(batch::EigenvalueJob {
                    params: p,
                    l: q.l,
                    target_nodes: q.n,
                    cfg: SolverConfig::for_state(&p, q.l, &analytic)?,
                })
            })
            .transpose()?;
        analytic_rows.push((state.clone(), analytic));
        jobs.push(job);
    }
    let solvable: Vec<batch::EigenvalueJob> = jobs.iter().flatten().copied().collect();
    let mut solved = batch::eigenvalues(&solvable).into_iter();

    let mut output = Output::new();
    output.push(
        "state,invb,alpha,scheme,neg_e_analytic,neg_e_numerical,abs_gap,gap_percent,converged"
            .to_string(),
    );
    for ((state, analytic), job) in analytic_rows.iter().zip(&jobs) {
        let mut row = format!("{state},{invb},{alpha},{}", scheme.variant());
        match (analytic.energy_hartree(b), job) {
            (Some(ea), Some(_)) => {
                row.push_str(&format!(",{}", fmt7(-ea)));
                match solved.next().unwrap() {
                    Ok(num) => {
                        let en = spectrum::to_hartree(num.energy, b);
                        let gap = (ea - en).abs();
                        row.push_str(&format!(
                            ",{},{:.3e},{:.5},{}",
                            fmt7(-en),
                            gap,
                            100.0 * gap / en.abs(),
                            num.converged
                        ));
                    }
                    Err(err) => {
                        eprintln!("warning: {state}: {err}");
                        row.push_str(",,,,false");
                    }
                }
            }
            _ => row.push_str(",,,,"),
        }
        output.push(row);
    }
    output.finish(out)
}

fn cmd_wavefunction(
    cli_scheme: SchemeVariant,
    potential: &PotentialArgs,
    state: &str,
    points: usize,
    rmax: Option<f64>,
    out: &Option<PathBuf>,
) -> Result<()> {
    if points < 2 {
        return Err(anyhow!("--points must be at least 2"));
    }
    let p = potential.build()?;
    let q = QuantumState::from_spectroscopic(state)?;
    let scheme = scheme_for(cli_scheme, &p)?;
    let spec = WavefunctionSpec::new(p, scheme, q)?;
    let r_max = rmax.unwrap_or_else(|| spec.default_r_max());
    let samples = spec.sample_log_grid(points, r_max);
    let norm = spec.norm_quadrature();
    let nodes = wavefunction::count_nodes(&samples);
    let mut output = Output::new();
    output.push("r,u".to_string());
    for (r, u) in samples {
        output.push(format!("{r:.10e},{u:.10e}"));
    }
    output.push(format!("# norm,{norm:.6}"));
    output.push(format!("# nodes,{nodes}"));
    output.finish(out)
}

fn cmd_molecules(registry_path: &Option<PathBuf>, format: Format, out: &Option<PathBuf>) -> Result<()> {
    let reg = registry(registry_path)?;
    let mut output = Output::new();
    match format {
        Format::Csv => {
            output.push("name,reduced_mass_amu".to_string());
            for m in reg.iter() {
                output.push(format!("{},{}", m.name, m.reduced_mass_amu));
            }
        }
        Format::Pretty => {
            for m in reg.iter() {
                output.push(format!("{:<5} {:>12.7} amu", m.name, m.reduced_mass_amu));
            }
        }
    }
    output.finish(out)
}

fn run(cli: Cli) -> Result<()> {
    let scheme = cli.scheme.into();
    match &cli.command {
        Command::Energy { potential, state, molecule } => cmd_energy(
            scheme,
            cli.format,
            &cli.molecule_file,
            potential,
            state,
            molecule,
            &cli.out,
        ),
        Command::Table { id, molecule, states, invb, alpha } => match id.as_str() {
            "t1" => cmd_table_dimensionless(&cli.out),
            "t2" | "t3" | "t4" | "t5" | "t6" => {
                cmd_table_ev(id, molecule, &cli.molecule_file, &cli.out)
            }
            "custom" => cmd_table_custom(
                scheme,
                states,
                invb,
                alpha,
                molecule,
                &cli.molecule_file,
                &cli.out,
            ),
            other => Err(anyhow!("unknown table {other:?}; expected t1..t6 or custom")),
        },
        Command::Compare { alpha, invb, states } => {
            cmd_compare(scheme, *alpha, *invb, states, &cli.out)
        }
        Command::Wavefunction { potential, state, points, rmax } => {
            cmd_wavefunction(scheme, potential, state, *points, *rmax, &cli.out)
        }
        Command::Molecules => cmd_molecules(&cli.molecule_file, cli.format, &cli.out),
    }
}

/// 0 success, 2 usage, 3 unbound or no eigenvalue, 4 I/O.
fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(mr) = cause.downcast_ref::<MrError>() {
            return match mr {
                MrError::Unbound
                | MrError::NoEigenvalue { .. }
                | MrError::BracketAdjustment { .. } => 3,
                MrError::MoleculeData(_) => 4,
                _ => 2,
            };
        }
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return 4;
        }
    }
    2
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}
