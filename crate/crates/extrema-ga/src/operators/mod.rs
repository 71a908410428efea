//! Crossover, mutation, selection, and fitness-scaling operators.
//!
//! All operators are pure given an explicit random stream; the engine hands
//! disjoint streams to concurrent invocations, so nothing here holds shared
//! mutable state.

pub mod crossover;
pub mod mutation;
pub mod scaling;
pub mod selection;

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

pub use crossover::{
    arith_crossover, half_uniform, k_point, one_point, one_point_multi, uniform, ArithFn,
    MixingRatio,
};
pub use mutation::mutate_bit_inversion;
pub use scaling::{adjust_fitness, linear_scale, FitnessScaling};
pub use selection::{rank_order, select_by_rank, select_linear_ranking, select_roulette, select_tournament};

use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::rng::StreamRng;

/// The crossover operator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossoverKind {
    OnePoint,
    OnePointMulti,
    TwoPoint,
    ThreePoint,
    UniformFixed,
    UniformRandom,
    HalfUniform,
    Arith(ArithFn),
}

impl CrossoverKind {
    /// Every implemented crossover operator.
    pub const ALL: [CrossoverKind; 13] = [
        CrossoverKind::OnePoint,
        CrossoverKind::OnePointMulti,
        CrossoverKind::TwoPoint,
        CrossoverKind::ThreePoint,
        CrossoverKind::UniformFixed,
        CrossoverKind::UniformRandom,
        CrossoverKind::HalfUniform,
        CrossoverKind::Arith(ArithFn::And),
        CrossoverKind::Arith(ArithFn::Or),
        CrossoverKind::Arith(ArithFn::Nor),
        CrossoverKind::Arith(ArithFn::Nand),
        CrossoverKind::Arith(ArithFn::Xor),
        CrossoverKind::Arith(ArithFn::Random),
    ];

    /// The twelve variants that appear in the benchmark tables, in table row
    /// order. Three-point crossover is implemented but not part of this set.
    pub const TABLE_SET: [CrossoverKind; 12] = [
        CrossoverKind::OnePoint,
        CrossoverKind::OnePointMulti,
        CrossoverKind::TwoPoint,
        CrossoverKind::UniformFixed,
        CrossoverKind::UniformRandom,
        CrossoverKind::HalfUniform,
        CrossoverKind::Arith(ArithFn::And),
        CrossoverKind::Arith(ArithFn::Or),
        CrossoverKind::Arith(ArithFn::Nor),
        CrossoverKind::Arith(ArithFn::Nand),
        CrossoverKind::Arith(ArithFn::Xor),
        CrossoverKind::Arith(ArithFn::Random),
    ];

    pub fn canonical_name(self) -> &'static str {
        match self {
            CrossoverKind::OnePoint => "one-point",
            CrossoverKind::OnePointMulti => "one-point-multi",
            CrossoverKind::TwoPoint => "two-point",
            CrossoverKind::ThreePoint => "three-point",
            CrossoverKind::UniformFixed => "uniform-0.5",
            CrossoverKind::UniformRandom => "uniform-random",
            CrossoverKind::HalfUniform => "hux",
            CrossoverKind::Arith(ArithFn::And) => "arith-and",
            CrossoverKind::Arith(ArithFn::Or) => "arith-or",
            CrossoverKind::Arith(ArithFn::Nor) => "arith-nor",
            CrossoverKind::Arith(ArithFn::Nand) => "arith-nand",
            CrossoverKind::Arith(ArithFn::Xor) => "arith-xor",
            CrossoverKind::Arith(ArithFn::Random) => "arith-random",
        }
    }

    /// Minimum genome length the operator can cut.
    pub fn min_genome_len(self) -> usize {
        match self {
            CrossoverKind::OnePoint | CrossoverKind::OnePointMulti => 2,
            CrossoverKind::TwoPoint => 3,
            CrossoverKind::ThreePoint => 4,
            _ => 1,
        }
    }

    /// Apply the operator to one parent pair, returning every produced child
    /// (one for all operators except `one-point-multi`, which yields 1..=3).
    pub fn apply(self, p1: &Genome, p2: &Genome, rng: &mut StreamRng) -> Result<Vec<Genome>> {
        Ok(match self {
            CrossoverKind::OnePoint => vec![one_point(p1, p2, rng)?],
            CrossoverKind::OnePointMulti => one_point_multi(p1, p2, rng)?,
            CrossoverKind::TwoPoint => vec![k_point(p1, p2, 2, rng)?],
            CrossoverKind::ThreePoint => vec![k_point(p1, p2, 3, rng)?],
            CrossoverKind::UniformFixed => vec![uniform(p1, p2, MixingRatio::FixedHalf, rng)?],
            CrossoverKind::UniformRandom => vec![uniform(p1, p2, MixingRatio::RandomPerCall, rng)?],
            CrossoverKind::HalfUniform => vec![half_uniform(p1, p2, rng)?],
            CrossoverKind::Arith(f) => vec![arith_crossover(p1, p2, f, rng)?],
        })
    }

    fn valid_names() -> String {
        Self::ALL
            .iter()
            .map(|k| k.canonical_name())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for CrossoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

impl FromStr for CrossoverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.canonical_name() == s)
            .ok_or_else(|| Error::UnknownOperator {
                name: s.to_string(),
                valid: Self::valid_names(),
            })
    }
}

/// The selection operator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SelectionKind {
    Roulette,
    /// Best of `group` individuals drawn without replacement.
    Tournament(usize),
    LinearRanking,
}

impl SelectionKind {
    pub fn canonical_name(self) -> String {
        match self {
            SelectionKind::Roulette => "roulette".to_string(),
            SelectionKind::Tournament(k) => format!("tournament:{k}"),
            SelectionKind::LinearRanking => "linear-ranking".to_string(),
        }
    }
}

impl fmt::Display for SelectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

impl FromStr for SelectionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "roulette" {
            return Ok(SelectionKind::Roulette);
        }
        if s == "linear-ranking" {
            return Ok(SelectionKind::LinearRanking);
        }
        if let Some(k) = s.strip_prefix("tournament:") {
            if let Ok(k) = k.parse::<usize>() {
                return Ok(SelectionKind::Tournament(k));
            }
        }
        Err(Error::UnknownOperator {
            name: s.to_string(),
            valid: "roulette, tournament:<k>, linear-ranking".to_string(),
        })
    }
}

macro_rules! string_serde {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(de::Error::custom)
            }
        }
    };
}

string_serde!(CrossoverKind);
string_serde!(SelectionKind);
string_serde!(FitnessScaling);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossover_names_round_trip() {
        for kind in CrossoverKind::ALL {
            let parsed: CrossoverKind = kind.canonical_name().parse().unwrap();
            assert_eq!(parsed, kind);
        }
    }

    #[test]
    fn selection_names_round_trip() {
        for kind in [
            SelectionKind::Roulette,
            SelectionKind::Tournament(2),
            SelectionKind::Tournament(10),
            SelectionKind::LinearRanking,
        ] {
            let parsed: SelectionKind = kind.canonical_name().parse().unwrap();
            assert_eq!(parsed, kind);
        }
    }

    #[test]
    fn unknown_names_list_the_valid_set() {
        let err = "four-point".parse::<CrossoverKind>().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("four-point"));
        assert!(msg.contains("one-point") && msg.contains("arith-random"));
        assert!("tournament:x".parse::<SelectionKind>().is_err());
        assert!("tournament".parse::<SelectionKind>().is_err());
    }

    #[test]
    fn table_set_is_the_paper_rows() {
        assert_eq!(CrossoverKind::TABLE_SET.len(), 12);
        assert!(!CrossoverKind::TABLE_SET.contains(&CrossoverKind::ThreePoint));
        assert_eq!(CrossoverKind::ALL.len(), 13);
    }

    #[test]
    fn kinds_serialize_as_canonical_strings() {
        let j = serde_json::to_string(&CrossoverKind::UniformFixed).unwrap();
        assert_eq!(j, "\"uniform-0.5\"");
        let k: CrossoverKind = serde_json::from_str(&j).unwrap();
        assert_eq!(k, CrossoverKind::UniformFixed);
        let j = serde_json::to_string(&SelectionKind::Tournament(10)).unwrap();
        assert_eq!(j, "\"tournament:10\"");
    }
}
