//! Fixed-length bitstring genotype and its linear decoding into a search
//! interval.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::StreamRng;

/// Closed search interval `[lo, hi]`, `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Fixed-length bitstring genotype, most significant bit first.
///
/// Genomes are immutable values; operators build new ones. Every operator
/// preserves the length of its inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genome {
    bits: Vec<bool>,
}

impl Genome {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Genome { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Unsigned integer value of the big-endian bit pattern. Lengths above
    /// 64 bits are not decodable.
    pub fn to_unsigned(&self) -> u64 {
        assert!(self.len() <= 64, "genome longer than 64 bits");
        self.bits
            .iter()
            .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
    }

    /// Number of positions at which two genomes differ.
    pub fn hamming(&self, other: &Genome) -> usize {
        assert_eq!(self.len(), other.len());
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }
}

impl std::fmt::Display for Genome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Decode a genome into the interval: `lo + u * (hi - lo) / (2^L - 1)` where
/// `u` is the genome's unsigned value. All-zeros maps to `lo`, all-ones to
/// `hi`, and the mapping is monotone in `u`.
pub fn decode(genome: &Genome, interval: Interval) -> f64 {
    let len = genome.len();
    assert!((1..=64).contains(&len), "decodable genomes have 1..=64 bits");
    let u = genome.to_unsigned() as f64;
    let den = (u64::MAX >> (64 - len)) as f64;
    let x = interval.lo + (u * interval.width()) / den;
    // Guard the interval against the last-ulp rounding of odd widths.
    x.clamp(interval.lo, interval.hi)
}

/// Genome of `len` independent fair coin flips drawn from the stream.
pub fn random_genome(rng: &mut StreamRng, len: usize) -> Genome {
    assert!(len >= 1, "genomes have at least one bit");
    Genome::from_bits((0..len).map(|_| rng.next_bit()).collect())
}

#[cfg(test)]
pub(crate) fn genome_from_str(s: &str) -> Genome {
    Genome::from_bits(s.chars().map(|c| c == '1').collect())
}
