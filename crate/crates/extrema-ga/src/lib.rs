//! Parallel genetic-algorithm toolkit for approximating extrema of
//! single-variable functions over an interval, plus a benchmark harness for
//! convergence studies, per-phase time profiles, and thread-scaling runs.
//!
//! Candidate solutions are fixed-length bitstrings decoded linearly into the
//! search interval. Every stochastic operator draws from a counter-keyed
//! random stream `(seed, generation, phase, slot)`, so a run's numerical
//! results are bit-identical for any worker-thread count.
//!
//! ```
//! use extrema_ga::{engine, FunctionId, GaConfig, Interval, Mode, ObjectiveSpec};
//!
//! let objective = ObjectiveSpec::new(
//!     FunctionId::F1,
//!     Interval::new(2.0, 130.0).unwrap(),
//!     Mode::Maximum,
//! );
//! let report = engine::run(&GaConfig::new(objective)).unwrap();
//! println!("best f({:.6}) = {:.6}", report.best_x, report.best_raw);
//! ```

pub mod affinity;
pub mod bench;
pub mod engine;
pub mod error;
pub mod genome;
pub mod objectives;
pub mod operators;
mod parallel;
pub mod rng;

pub use engine::{run, Engine, GaConfig, GenerationStats, Population, RunReport, StopRule};
pub use error::{Error, Result};
pub use genome::{decode, random_genome, Genome, Interval};
pub use objectives::{
    eval_f1, eval_f2, oracle_extremum, raw_objective, FunctionId, Mode, ObjectiveSpec,
};
pub use operators::{CrossoverKind, FitnessScaling, SelectionKind};
