//! Crossover operators over bitstring genomes.
//!
//! Every operator takes two equal-length parents and an explicit random
//! stream, and returns children of the same length. All operators produce
//! exactly one child per application except [`one_point_multi`], which
//! produces one to three.

use crate::error::{Error, Result};
use crate::genome::Genome;
use crate::rng::StreamRng;

fn check_equal_len(p1: &Genome, p2: &Genome) -> Result<usize> {
    if p1.len() != p2.len() {
        return Err(Error::LengthMismatch {
            left: p1.len(),
            right: p2.len(),
        });
    }
    Ok(p1.len())
}

/// Uniform cut position in `[1, len - 1]`.
fn draw_cut(rng: &mut StreamRng, len: usize) -> usize {
    1 + rng.next_below(len as u64 - 1) as usize
}

fn splice(p1: &Genome, p2: &Genome, cut: usize) -> Genome {
    let mut bits = Vec::with_capacity(p1.len());
    bits.extend_from_slice(&p1.bits()[..cut]);
    bits.extend_from_slice(&p2.bits()[cut..]);
    Genome::from_bits(bits)
}

/// Single-cut splice: `p1[..c] ++ p2[c..]` with `c` uniform in `[1, L-1]`.
pub fn one_point(p1: &Genome, p2: &Genome, rng: &mut StreamRng) -> Result<Genome> {
    let len = check_equal_len(p1, p2)?;
    if len < 2 {
        return Err(Error::GenomeTooShort { len, min: 2 });
    }
    Ok(splice(p1, p2, draw_cut(rng, len)))
}

/// Recursive one-point variant that emits one child per recursion level:
/// at each level below three, a draw divisible by three descends one level
/// before the level's own child is spliced. Child counts come out 1, 2, or 3
/// with probabilities 2/3, 2/9, and 1/9.
pub fn one_point_multi(p1: &Genome, p2: &Genome, rng: &mut StreamRng) -> Result<Vec<Genome>> {
    let len = check_equal_len(p1, p2)?;
    if len < 2 {
        return Err(Error::GenomeTooShort { len, min: 2 });
    }
    let mut children = Vec::with_capacity(3);
    splice_level(p1, p2, 0, rng, &mut children);
    Ok(children)
}

fn splice_level(p1: &Genome, p2: &Genome, level: u32, rng: &mut StreamRng, out: &mut Vec<Genome>) {
    if level < 3 {
        if rng.next_below(3) == 0 {
            splice_level(p1, p2, level + 1, rng, out);
        }
        // One child is created at this point, with its own cut.
        out.push(splice(p1, p2, draw_cut(rng, p1.len())));
    }
}

/// Multi-cut splice: `k` distinct cut positions, sorted; the child alternates
/// source parent across the `k + 1` segments, starting from `p1`.
pub fn k_point(p1: &Genome, p2: &Genome, k: usize, rng: &mut StreamRng) -> Result<Genome> {
    let len = check_equal_len(p1, p2)?;
    if len <= k {
        return Err(Error::GenomeTooShort { len, min: k + 1 });
    }
    let mut cuts: Vec<usize> = Vec::with_capacity(k);
    while cuts.len() < k {
        let c = draw_cut(rng, len);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();

    let mut bits = Vec::with_capacity(len);
    let mut from_p1 = true;
    let mut start = 0;
    for &cut in cuts.iter().chain(std::iter::once(&len)) {
        let src = if from_p1 { p1 } else { p2 };
        bits.extend_from_slice(&src.bits()[start..cut]);
        from_p1 = !from_p1;
        start = cut;
    }
    Ok(Genome::from_bits(bits))
}

/// How the per-bit source parent is chosen in [`uniform`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixingRatio {
    /// Every bit comes from `p1` with probability 0.5.
    FixedHalf,
    /// One mixing ratio `m ~ U[0, 1)` is drawn per call; every bit then
    /// comes from `p1` with probability `m`.
    RandomPerCall,
}

/// Uniform crossover: each child bit is taken from `p1` with the mixing
/// probability, independently per bit.
pub fn uniform(p1: &Genome, p2: &Genome, ratio: MixingRatio, rng: &mut StreamRng) -> Result<Genome> {
    let len = check_equal_len(p1, p2)?;
    let m = match ratio {
        MixingRatio::FixedHalf => 0.5,
        MixingRatio::RandomPerCall => rng.next_f64(),
    };
    let bits = (0..len)
        .map(|i| if rng.next_f64() < m { p1.bit(i) } else { p2.bit(i) })
        .collect();
    Ok(Genome::from_bits(bits))
}

/// Half-uniform crossover: exactly `floor(|D| / 2)` of the differing
/// positions `D` are replaced by `p2`'s bits, chosen uniformly; the child is
/// otherwise a copy of `p1`, so its Hamming distance to `p1` is exactly
/// `floor(|D| / 2)`.
pub fn half_uniform(p1: &Genome, p2: &Genome, rng: &mut StreamRng) -> Result<Genome> {
    let len = check_equal_len(p1, p2)?;
    let mut diff: Vec<usize> = (0..len).filter(|&i| p1.bit(i) != p2.bit(i)).collect();
    let swaps = diff.len() / 2;
    // Partial Fisher-Yates: the first `swaps` entries become a uniform subset.
    for i in 0..swaps {
        let j = i + rng.next_below((diff.len() - i) as u64) as usize;
        diff.swap(i, j);
    }
    let mut bits = p1.bits().to_vec();
    for &pos in &diff[..swaps] {
        bits[pos] = p2.bit(pos);
    }
    Ok(Genome::from_bits(bits))
}

/// Bitwise Boolean function applied by [`arith_crossover`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithFn {
    And,
    Or,
    Nor,
    Nand,
    Xor,
    /// One of the five concrete functions, drawn uniformly per call.
    Random,
}

impl ArithFn {
    const CONCRETE: [ArithFn; 5] = [
        ArithFn::And,
        ArithFn::Or,
        ArithFn::Nor,
        ArithFn::Nand,
        ArithFn::Xor,
    ];

    fn apply_bit(self, a: bool, b: bool) -> bool {
        match self {
            ArithFn::And => a & b,
            ArithFn::Or => a | b,
            ArithFn::Nor => !(a | b),
            ArithFn::Nand => !(a & b),
            ArithFn::Xor => a ^ b,
            ArithFn::Random => unreachable!("resolved to a concrete function per call"),
        }
    }
}

/// Arithmetic crossover: the child is the bitwise Boolean combination of the
/// parents. `Random` draws the concrete function uniformly per call.
pub fn arith_crossover(p1: &Genome, p2: &Genome, f: ArithFn, rng: &mut StreamRng) -> Result<Genome> {
    let len = check_equal_len(p1, p2)?;
    let f = match f {
        ArithFn::Random => ArithFn::CONCRETE[rng.next_below(5) as usize],
        concrete => concrete,
    };
    let bits = (0..len).map(|i| f.apply_bit(p1.bit(i), p2.bit(i))).collect();
    Ok(Genome::from_bits(bits))
}
