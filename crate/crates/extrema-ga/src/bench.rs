//! Benchmark harness: operator convergence tables, per-phase time profiles,
//! and thread-scaling measurements, with CSV, JSON, and pretty-table output.
//!
//! The harness itself is single-threaded control logic; parallelism lives in
//! the engine underneath. Run one benchmark at a time per process so the
//! timings stay meaningful.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::engine::{Engine, GaConfig, StopRule};
use crate::error::{Error, Result};
use crate::genome::Interval;
use crate::objectives::{oracle_extremum, FunctionId, Mode, ObjectiveSpec};
use crate::operators::{CrossoverKind, FitnessScaling, SelectionKind};

/// Version tag carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Output formats of [`emit_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    PrettyTable,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "table" => Ok(ReportFormat::PrettyTable),
            _ => Err(Error::UnknownOperator {
                name: s.to_string(),
                valid: "csv, json, table".to_string(),
            }),
        }
    }
}

/// A report that can be emitted in every supported format.
pub trait Report: Serialize {
    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()>;
    fn write_table(&self, w: &mut dyn Write) -> io::Result<()>;
}

/// Serialize a report to the requested format.
pub fn emit_report<R: Report>(report: &R, format: ReportFormat, w: &mut dyn Write) -> io::Result<()> {
    match format {
        ReportFormat::Csv => report.write_csv(w),
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *w, report).map_err(io::Error::other)?;
            writeln!(w)
        }
        ReportFormat::PrettyTable => report.write_table(w),
    }
}

// ---------------------------------------------------------------------------
// Convergence suite
// ---------------------------------------------------------------------------

/// GA parameters shared by every run of a convergence suite. Defaults mirror
/// the benchmark-table header: population 64, 1% bit-inversion mutation, 50%
/// crossover probability.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub pop_size: usize,
    pub chromosome_len: usize,
    pub p_cross: f64,
    pub p_mut: f64,
    pub scaling: FitnessScaling,
    pub max_generations: u32,
    pub elitism: bool,
    pub threads: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            pop_size: 64,
            chromosome_len: 32,
            p_cross: 0.5,
            p_mut: 0.01,
            scaling: FitnessScaling::linear(),
            max_generations: 2000,
            elitism: true,
            threads: 1,
        }
    }
}

/// One convergence experiment: a grid of crossover x selection x mode cells,
/// each run over several seeds with the convergence stop.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSuite {
    pub function: FunctionId,
    pub interval: Interval,
    pub modes: Vec<Mode>,
    pub crossovers: Vec<CrossoverKind>,
    pub selections: Vec<SelectionKind>,
    /// Independent runs per cell, seeded `base_seed..base_seed + seeds`.
    pub seeds: u32,
    pub base_seed: u64,
    /// Grid step of the brute-force oracle judging correctness.
    pub oracle_step: f64,
    /// A run counts as correct when its best raw objective lands within
    /// this distance of the oracle extremum.
    pub tol: f64,
    pub params: SuiteParams,
}

impl ConvergenceSuite {
    /// The table-shaped default study for one function on `[2, 130]`: both
    /// modes, the twelve table crossovers, and the selection schemes the
    /// corresponding tables report (linear ranking for the first function;
    /// linear ranking, roulette, and both tournament sizes for the second).
    pub fn table_defaults(function: FunctionId) -> Self {
        let selections = match function {
            FunctionId::F1 => vec![SelectionKind::LinearRanking],
            FunctionId::F2 => vec![
                SelectionKind::LinearRanking,
                SelectionKind::Roulette,
                SelectionKind::Tournament(10),
                SelectionKind::Tournament(2),
            ],
        };
        ConvergenceSuite {
            function,
            interval: Interval::new(2.0, 130.0).expect("static interval"),
            modes: vec![Mode::Minimum, Mode::Maximum],
            crossovers: CrossoverKind::TABLE_SET.to_vec(),
            selections,
            seeds: 25,
            base_seed: 1,
            oracle_step: 1e-4,
            tol: 1e-2,
            params: SuiteParams::default(),
        }
    }

    fn config_for(&self, mode: Mode, crossover: CrossoverKind, selection: SelectionKind, seed: u64) -> GaConfig {
        GaConfig {
            objective: ObjectiveSpec::new(self.function, self.interval, mode),
            pop_size: self.params.pop_size,
            chromosome_len: self.params.chromosome_len,
            crossover,
            p_cross: self.params.p_cross,
            p_mut: self.params.p_mut,
            selection,
            scaling: self.params.scaling,
            stop: StopRule::Converged(self.params.max_generations),
            seed,
            threads: self.params.threads,
            elitism: self.params.elitism,
            converge_eps: 0.0,
        }
    }
}

/// One run of a convergence suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub function: FunctionId,
    pub mode: Mode,
    pub crossover: CrossoverKind,
    pub selection: SelectionKind,
    pub seed: u64,
    pub generations: u32,
    pub converged: bool,
    pub best_x: f64,
    pub best_raw: f64,
    pub correct: bool,
}

/// Per-cell aggregate over the seeds of one crossover x selection x mode cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceCell {
    pub function: FunctionId,
    pub mode: Mode,
    pub crossover: CrossoverKind,
    pub selection: SelectionKind,
    pub runs: u32,
    pub median_generations: f64,
    pub correct_fraction: f64,
    pub converged_fraction: f64,
}

/// Full outcome of a convergence suite, in table row order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    #[serde(rename = "schema-version")]
    pub schema_version: u32,
    /// Oracle extremum per mode: (mode, x, f).
    pub oracles: Vec<(Mode, f64, f64)>,
    pub rows: Vec<ConvergenceRow>,
    pub cells: Vec<ConvergenceCell>,
}

fn median(sorted: &mut [u32]) -> f64 {
    sorted.sort_unstable();
    let n = sorted.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        f64::from(sorted[n / 2])
    } else {
        (f64::from(sorted[n / 2 - 1]) + f64::from(sorted[n / 2])) / 2.0
    }
}

/// Run every cell of the suite and aggregate per-cell medians and
/// correctness fractions against the brute-force oracle.
pub fn run_convergence_suite(suite: &ConvergenceSuite) -> Result<ConvergenceReport> {
    if suite.seeds == 0 {
        return Err(Error::InvalidConfig("suite needs at least one seed".to_string()));
    }
    let mut oracles = Vec::new();
    let mut oracle_for = std::collections::HashMap::new();
    for &mode in &suite.modes {
        let spec = ObjectiveSpec::new(suite.function, suite.interval, mode);
        let (x, f) = oracle_extremum(&spec, suite.oracle_step);
        oracles.push((mode, x, f));
        oracle_for.insert(mode.canonical_name(), f);
    }

    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for &mode in &suite.modes {
        let target = oracle_for[mode.canonical_name()];
        for &crossover in &suite.crossovers {
            for &selection in &suite.selections {
                let mut generations = Vec::with_capacity(suite.seeds as usize);
                let mut correct = 0u32;
                let mut converged_runs = 0u32;
                for s in 0..u64::from(suite.seeds) {
                    let cfg = suite.config_for(mode, crossover, selection, suite.base_seed + s);
                    let report = Engine::new(cfg)?.run();
                    let is_correct = (report.best_raw - target).abs() <= suite.tol;
                    correct += u32::from(is_correct);
                    converged_runs += u32::from(report.converged);
                    generations.push(report.generations);
                    rows.push(ConvergenceRow {
                        function: suite.function,
                        mode,
                        crossover,
                        selection,
                        seed: suite.base_seed + s,
                        generations: report.generations,
                        converged: report.converged,
                        best_x: report.best_x,
                        best_raw: report.best_raw,
                        correct: is_correct,
                    });
                }
                cells.push(ConvergenceCell {
                    function: suite.function,
                    mode,
                    crossover,
                    selection,
                    runs: suite.seeds,
                    median_generations: median(&mut generations),
                    correct_fraction: f64::from(correct) / f64::from(suite.seeds),
                    converged_fraction: f64::from(converged_runs) / f64::from(suite.seeds),
                });
            }
        }
    }
    Ok(ConvergenceReport {
        schema_version: SCHEMA_VERSION,
        oracles,
        rows,
        cells,
    })
}

impl Report for ConvergenceReport {
    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "function,mode,crossover,selection,seed,generations,converged,best_x,best_raw,correct")?;
        for r in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{}",
                r.function, r.mode, r.crossover, r.selection, r.seed, r.generations,
                r.converged, r.best_x, r.best_raw, r.correct
            )?;
        }
        Ok(())
    }

    fn write_table(&self, w: &mut dyn Write) -> io::Result<()> {
        for (mode, x, f) in &self.oracles {
            writeln!(w, "oracle {mode}: f({x:.6}) = {f:.9}")?;
        }
        let mut current_mode: Option<Mode> = None;
        for cell in &self.cells {
            if current_mode != Some(cell.mode) {
                current_mode = Some(cell.mode);
                let mode_name = match cell.mode {
                    Mode::Minimum => "Minimum",
                    Mode::Maximum => "Maximum",
                };
                writeln!(w)?;
                writeln!(w, "Function {} ({mode_name})", cell.function)?;
                writeln!(
                    w,
                    "{:<16} {:<16} {:>12} {:>9} {:>10} {:>6}",
                    "crossover", "selection", "median gens", "correct", "converged", "best"
                )?;
            }
            writeln!(
                w,
                "{:<16} {:<16} {:>12.1} {:>8.0}% {:>9.0}% {:>6}",
                cell.crossover.to_string(),
                cell.selection.to_string(),
                cell.median_generations,
                100.0 * cell.correct_fraction,
                100.0 * cell.converged_fraction,
                if cell.correct_fraction >= 0.5 { "Yes" } else { "No" }
            )?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Phase profile
// ---------------------------------------------------------------------------

/// One profiled phase: cumulative seconds across generations and workers,
/// and its share of the total.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseEntry {
    pub phase: String,
    pub seconds: f64,
    pub percent: f64,
}

/// Where the run's processor time went, phase by phase.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseProfile {
    #[serde(rename = "schema-version")]
    pub schema_version: u32,
    pub entries: Vec<PhaseEntry>,
    pub real_s: f64,
    pub cumulative_busy_s: f64,
}

impl PhaseProfile {
    /// Seconds attributed to a named phase (0 when absent).
    pub fn seconds_of(&self, phase: &str) -> f64 {
        self.entries
            .iter()
            .find(|e| e.phase == phase)
            .map_or(0.0, |e| e.seconds)
    }

    /// Name of the largest phase by cumulative time.
    pub fn largest_phase(&self) -> &str {
        self.entries
            .iter()
            .max_by(|a, b| a.seconds.total_cmp(&b.seconds))
            .map_or("", |e| &e.phase)
    }
}

/// Execute one run with per-phase accounting and return its time breakdown.
/// Phase times are cumulative across generations and workers; `other` absorbs
/// orchestration work outside the four GA phases.
pub fn run_phase_profile(cfg: &GaConfig) -> Result<PhaseProfile> {
    let report = Engine::new(cfg.clone())?.run();
    let t = report.timings;
    let known = t.selection_s + t.crossover_s + t.mutation_s + t.evaluation_s;
    let other = (t.cumulative_busy_s - known).max(0.0);
    let total = known + other;
    let entries = [
        ("selection", t.selection_s),
        ("crossover", t.crossover_s),
        ("mutation", t.mutation_s),
        ("evaluation", t.evaluation_s),
        ("other", other),
    ]
    .into_iter()
    .map(|(phase, seconds)| PhaseEntry {
        phase: phase.to_string(),
        seconds,
        percent: if total > 0.0 { 100.0 * seconds / total } else { 0.0 },
    })
    .collect();
    Ok(PhaseProfile {
        schema_version: SCHEMA_VERSION,
        entries,
        real_s: t.real_s,
        cumulative_busy_s: t.cumulative_busy_s,
    })
}

impl Report for PhaseProfile {
    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "phase,seconds,percent")?;
        for e in &self.entries {
            writeln!(w, "{},{},{}", e.phase, e.seconds, e.percent)?;
        }
        Ok(())
    }

    fn write_table(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{:<12} {:>12} {:>8}", "phase", "seconds", "percent")?;
        for e in &self.entries {
            writeln!(w, "{:<12} {:>12.6} {:>7.2}%", e.phase, e.seconds, e.percent)?;
        }
        writeln!(w, "real {:.6} s, cumulative busy {:.6} s", self.real_s, self.cumulative_busy_s)
    }
}

// ---------------------------------------------------------------------------
// Thread scaling
// ---------------------------------------------------------------------------

/// Timing of the workload at one thread count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub threads: usize,
    pub pinned: bool,
    pub real_s: f64,
    pub cumulative_s: f64,
}

/// Numerical outcome of one scaling run; identical across rows by the
/// engine's thread-count invariance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingOutcome {
    pub threads: usize,
    pub best_x: f64,
    pub best_raw: f64,
    pub generations: u32,
}

/// Wall-time and cumulative-thread-time across thread counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    #[serde(rename = "schema-version")]
    pub schema_version: u32,
    pub rows: Vec<ScalingRow>,
    pub outcomes: Vec<ScalingOutcome>,
}

/// Run the identical workload once per thread count, recording real time and
/// summed per-worker busy time. With `pin`, workers are pinned to distinct
/// logical CPUs (best effort; timing only, never results).
pub fn run_scaling(cfg: &GaConfig, thread_list: &[usize], pin: bool) -> Result<ScalingReport> {
    if thread_list.is_empty() {
        return Err(Error::InvalidConfig("thread list must not be empty".to_string()));
    }
    if thread_list.contains(&0) {
        return Err(Error::InvalidConfig("thread counts must be at least 1".to_string()));
    }
    let mut rows = Vec::with_capacity(thread_list.len());
    let mut outcomes = Vec::with_capacity(thread_list.len());
    for &threads in thread_list {
        let mut run_cfg = cfg.clone();
        run_cfg.threads = threads;
        let report = Engine::new(run_cfg)?.with_pinning(pin).run();
        rows.push(ScalingRow {
            threads,
            pinned: pin,
            real_s: report.timings.real_s,
            cumulative_s: report.timings.cumulative_busy_s,
        });
        outcomes.push(ScalingOutcome {
            threads,
            best_x: report.best_x,
            best_raw: report.best_raw,
            generations: report.generations,
        });
    }
    Ok(ScalingReport {
        schema_version: SCHEMA_VERSION,
        rows,
        outcomes,
    })
}

impl Report for ScalingReport {
    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "threads,pinned,real_s,cumulative_s")?;
        for r in &self.rows {
            writeln!(w, "{},{},{},{}", r.threads, r.pinned, r.real_s, r.cumulative_s)?;
        }
        Ok(())
    }

    fn write_table(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{:>7} {:>7} {:>12} {:>14}", "threads", "pinned", "real_s", "cumulative_s")?;
        for r in &self.rows {
            writeln!(w, "{:>7} {:>7} {:>12.6} {:>14.6}", r.threads, r.pinned, r.real_s, r.cumulative_s)?;
        }
        if let Some(first) = self.rows.first() {
            for r in &self.rows[1..] {
                writeln!(w, "speedup x{:.2} at {} threads", first.real_s / r.real_s, r.threads)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Single-run document
// ---------------------------------------------------------------------------

/// A single run packaged for emission: the configuration and its report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunDocument {
    #[serde(rename = "schema-version")]
    pub schema_version: u32,
    pub config: GaConfig,
    pub report: crate::engine::RunReport,
}

impl RunDocument {
    pub fn new(config: GaConfig, report: crate::engine::RunReport) -> Self {
        RunDocument {
            schema_version: SCHEMA_VERSION,
            config,
            report,
        }
    }
}

impl Report for RunDocument {
    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "generation,best_fitness,mean_fitness,worst_fitness,best_x,best_raw")?;
        for s in &self.report.stats {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                s.generation, s.best_fitness, s.mean_fitness, s.worst_fitness, s.best_x, s.best_raw
            )?;
        }
        Ok(())
    }

    fn write_table(&self, w: &mut dyn Write) -> io::Result<()> {
        let r = &self.report;
        writeln!(
            w,
            "{} {} of {} on [{}, {}]",
            self.config.selection,
            self.config.objective.mode,
            self.config.objective.function,
            self.config.objective.interval.lo,
            self.config.objective.interval.hi
        )?;
        writeln!(w, "crossover {}  pop {}  bits {}", self.config.crossover, self.config.pop_size, self.config.chromosome_len)?;
        writeln!(w, "generations {}  converged {}", r.generations, r.converged)?;
        writeln!(w, "best x = {:.9}, raw objective = {:.9}", r.best_x, r.best_raw)?;
        writeln!(
            w,
            "real {:.4} s (selection {:.4}, crossover {:.4}, mutation {:.4}, evaluation {:.4})",
            r.timings.real_s,
            r.timings.selection_s,
            r.timings.crossover_s,
            r.timings.mutation_s,
            r.timings.evaluation_s
        )
    }
}
