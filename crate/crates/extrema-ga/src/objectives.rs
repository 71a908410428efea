//! Built-in benchmark objective functions, search-mode handling, and a
//! brute-force grid oracle used to judge search correctness.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::genome::Interval;

/// Which built-in objective function to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionId {
    F1,
    F2,
}

impl FunctionId {
    pub fn canonical_name(self) -> &'static str {
        match self {
            FunctionId::F1 => "f1",
            FunctionId::F2 => "f2",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            FunctionId::F1 => eval_f1(x),
            FunctionId::F2 => eval_f2(x),
        }
    }
}

/// Search direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Minimum,
    Maximum,
}

impl Mode {
    pub fn canonical_name(self) -> &'static str {
        match self {
            Mode::Minimum => "min",
            Mode::Maximum => "max",
        }
    }

    /// True when `a` is a better raw objective than `b` for this mode.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Mode::Maximum => a > b,
            Mode::Minimum => a < b,
        }
    }
}

/// Objective function, search interval, and direction of one search problem.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveSpec {
    pub function: FunctionId,
    pub interval: Interval,
    pub mode: Mode,
}

impl ObjectiveSpec {
    pub fn new(function: FunctionId, interval: Interval, mode: Mode) -> Self {
        ObjectiveSpec {
            function,
            interval,
            mode,
        }
    }
}

/// Smooth benchmark objective: a shallow quadratic trend with two sine
/// ripples of very different periods.
pub fn eval_f1(x: f64) -> f64 {
    (10.2 * x * x - 0.3 * x + 2.0) / 100.0 + x.sin() + 120.0 * (x / 10.0).sin() + 768.0
}

/// Piecewise benchmark objective with a jump discontinuity at `x = 65`; the
/// branches are implemented exactly as written, no smoothing.
pub fn eval_f2(x: f64) -> f64 {
    let p = x.cos() * x.sin() * x.atan() * (x + 1.0).cos();
    if x < 65.0 {
        p + x / 100.0 + 5.0
    } else {
        p - x / 100.0 + 5.65
    }
}

/// Raw (mode-independent) objective value; `x` must lie inside the spec's
/// interval.
pub fn raw_objective(spec: &ObjectiveSpec, x: f64) -> Result<f64> {
    if !spec.interval.contains(x) {
        return Err(Error::OutOfInterval {
            x,
            lo: spec.interval.lo,
            hi: spec.interval.hi,
        });
    }
    Ok(spec.function.eval(x))
}

/// Brute-force grid scan of the interval: returns the grid point with the
/// extremal raw objective for the spec's mode, ties broken toward smaller x.
///
/// The grid is `lo + i * step` for `i = 0..=floor((hi - lo) / step)`, plus
/// `hi` itself when the last grid point falls short of it.
pub fn oracle_extremum(spec: &ObjectiveSpec, step: f64) -> (f64, f64) {
    assert!(
        step > 0.0 && step <= spec.interval.width(),
        "oracle step must be positive and no wider than the interval"
    );
    let (lo, hi) = (spec.interval.lo, spec.interval.hi);
    let n = ((hi - lo) / step).floor() as u64;
    let mut best_x = lo;
    let mut best_f = spec.function.eval(lo);
    for i in 1..=n {
        let x = (lo + i as f64 * step).min(hi);
        let v = spec.function.eval(x);
        if spec.mode.better(v, best_f) {
            best_x = x;
            best_f = v;
        }
    }
    if lo + n as f64 * step < hi {
        let v = spec.function.eval(hi);
        if spec.mode.better(v, best_f) {
            best_x = hi;
            best_f = v;
        }
    }
    (best_x, best_f)
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f1" => Ok(FunctionId::F1),
            "f2" => Ok(FunctionId::F2),
            _ => Err(Error::UnknownOperator {
                name: s.to_string(),
                valid: "f1, f2".to_string(),
            }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" | "minimum" => Ok(Mode::Minimum),
            "max" | "maximum" => Ok(Mode::Maximum),
            _ => Err(Error::UnknownOperator {
                name: s.to_string(),
                valid: "min, max".to_string(),
            }),
        }
    }
}

impl Serialize for FunctionId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.canonical_name())
    }
}

impl<'de> Deserialize<'de> for FunctionId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.canonical_name())
    }
}

impl<'de> Deserialize<'de> for Mode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen values from an independent high-precision evaluation (mpmath,
    // 50 digits) of the two objectives.
    const F1_AT_2: f64 = 793.1716171222330275505;
    const F1_AT_130: f64 = 2540.919938469010148869;
    const F2_AT_64_999: f64 = 6.37253058103934644754;
    const F2_AT_65: f64 = 5.72309439575846644134;

    // Frozen grid extrema from an independent float64 scan of [2, 130] at
    // step 1e-4 (and a coarser cross-check at 1e-2).
    const F1_MAX: (f64, f64) = (130.0, 2540.91993846901);
    const F1_MIN: (f64, f64) = (2.0, 793.171617122233);
    const F2_MAX: (f64, f64) = (64.9999, 6.37303817827855);
    const F2_MIN: (f64, f64) = (124.83770000000001, 3.634564776176095);
    const F2_MAX_COARSE: (f64, f64) = (64.99000000000001, 6.367292825701103);
    const F2_MIN_COARSE: (f64, f64) = (124.84, 3.634574864260111);

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    fn spec(function: FunctionId, lo: f64, hi: f64, mode: Mode) -> ObjectiveSpec {
        ObjectiveSpec::new(function, Interval::new(lo, hi).unwrap(), mode)
    }

    #[test]
    fn f1_at_zero_is_exact() {
        // All trig terms vanish; only (2)/100 + 768 remains.
        assert!((eval_f1(0.0) - 768.02).abs() < 1e-12);
    }

    #[test]
    fn f1_matches_high_precision_oracle() {
        assert!(rel_close(eval_f1(2.0), F1_AT_2, 1e-9));
        assert!(rel_close(eval_f1(130.0), F1_AT_130, 1e-9));
    }

    #[test]
    fn f2_at_zero_is_exact() {
        // sin(0) = atan(0) = 0 kill the product term.
        assert_eq!(eval_f2(0.0), 5.0);
    }

    #[test]
    fn f2_matches_high_precision_oracle_near_split() {
        assert!(rel_close(eval_f2(64.999), F2_AT_64_999, 1e-9));
        assert!(rel_close(eval_f2(65.0), F2_AT_65, 1e-9));
    }

    #[test]
    fn f2_branch_boundary_is_x_ge_65() {
        let product = |x: f64| x.cos() * x.sin() * x.atan() * (x + 1.0).cos();
        let just_below = 65.0 - 1e-9;
        assert_eq!(eval_f2(just_below), product(just_below) + just_below / 100.0 + 5.0);
        assert_eq!(eval_f2(65.0), product(65.0) - 65.0 / 100.0 + 5.65);
        let just_above = 65.0 + 1e-9;
        assert_eq!(eval_f2(just_above), product(just_above) - just_above / 100.0 + 5.65);
    }

    #[test]
    fn raw_objective_dispatches() {
        let s = spec(FunctionId::F2, 2.0, 130.0, Mode::Minimum);
        assert_eq!(raw_objective(&s, 5.0).unwrap(), eval_f2(5.0));
        let s = spec(FunctionId::F1, 2.0, 130.0, Mode::Minimum);
        assert!(rel_close(raw_objective(&s, 2.0).unwrap(), F1_AT_2, 1e-9));
    }

    #[test]
    fn raw_objective_rejects_out_of_interval() {
        let s = spec(FunctionId::F1, 2.0, 130.0, Mode::Maximum);
        assert_eq!(
            raw_objective(&s, 0.0),
            Err(Error::OutOfInterval { x: 0.0, lo: 2.0, hi: 130.0 })
        );
        assert!(raw_objective(&s, 130.0001).is_err());
    }

    #[test]
    fn oracle_matches_independent_fine_scan() {
        for (function, mode, (x, f)) in [
            (FunctionId::F1, Mode::Maximum, F1_MAX),
            (FunctionId::F1, Mode::Minimum, F1_MIN),
            (FunctionId::F2, Mode::Maximum, F2_MAX),
            (FunctionId::F2, Mode::Minimum, F2_MIN),
        ] {
            let s = spec(function, 2.0, 130.0, mode);
            let (bx, bf) = oracle_extremum(&s, 1e-4);
            assert!((bx - x).abs() < 1e-9, "{function} {mode}: x {bx} vs {x}");
            assert!(rel_close(bf, f, 1e-9), "{function} {mode}: f {bf} vs {f}");
        }
    }

    #[test]
    fn oracle_matches_independent_coarse_scan() {
        for (mode, (x, f)) in [(Mode::Maximum, F2_MAX_COARSE), (Mode::Minimum, F2_MIN_COARSE)] {
            let s = spec(FunctionId::F2, 2.0, 130.0, mode);
            let (bx, bf) = oracle_extremum(&s, 1e-2);
            assert!((bx - x).abs() < 1e-9);
            assert!(rel_close(bf, f, 1e-9));
        }
    }

    #[test]
    fn oracle_degenerate_two_point_grid() {
        let s = spec(FunctionId::F1, 0.0, 0.5, Mode::Maximum);
        let (bx, bf) = oracle_extremum(&s, 0.5);
        let (f0, f1) = (eval_f1(0.0), eval_f1(0.5));
        if f1 > f0 {
            assert_eq!((bx, bf), (0.5, f1));
        } else {
            assert_eq!((bx, bf), (0.0, f0));
        }
    }

    #[test]
    fn oracle_beats_every_grid_point_on_small_grid() {
        let s = spec(FunctionId::F2, 2.0, 10.0, Mode::Maximum);
        let step = 0.1;
        let (_, bf) = oracle_extremum(&s, step);
        let n = ((10.0 - 2.0) / step).floor() as u64;
        for i in 0..=n {
            let x = 2.0 + i as f64 * step;
            assert!(bf >= eval_f2(x.min(10.0)));
        }
    }

    #[test]
    fn oracle_refinement_never_worsens() {
        for function in [FunctionId::F1, FunctionId::F2] {
            for mode in [Mode::Maximum, Mode::Minimum] {
                let s = spec(function, 2.0, 130.0, mode);
                let mut prev: Option<f64> = None;
                let mut step = 0.4;
                // Halving from a common origin keeps coarse points on the
                // fine grid, so the extremum can only improve.
                for _ in 0..4 {
                    let (_, f) = oracle_extremum(&s, step);
                    if let Some(p) = prev {
                        assert!(f == p || mode.better(f, p), "{function} {mode} step {step}");
                    }
                    prev = Some(f);
                    step /= 2.0;
                }
            }
        }
    }

    #[test]
    fn mode_and_function_names_round_trip() {
        for m in [Mode::Minimum, Mode::Maximum] {
            assert_eq!(m.canonical_name().parse::<Mode>().unwrap(), m);
        }
        for f in [FunctionId::F1, FunctionId::F2] {
            assert_eq!(f.canonical_name().parse::<FunctionId>().unwrap(), f);
        }
    }
}
