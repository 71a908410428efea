//! Bit-inversion mutation.

use crate::genome::Genome;
use crate::rng::StreamRng;

/// Flip every bit independently with probability `p_mut`.
pub fn mutate_bit_inversion(genome: &Genome, p_mut: f64, rng: &mut StreamRng) -> Genome {
    assert!((0.0..=1.0).contains(&p_mut), "p_mut must be a probability");
    let bits = genome
        .bits()
        .iter()
        .map(|&b| if rng.next_bool(p_mut) { !b } else { b })
        .collect();
    Genome::from_bits(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::genome_from_str as g;

    #[test]
    fn zero_probability_is_identity() {
        let p = g("10110100");
        let mut rng = StreamRng::new(1);
        assert_eq!(mutate_bit_inversion(&p, 0.0, &mut rng), p);
    }

    #[test]
    fn certain_mutation_is_the_complement() {
        let p = g("10110100");
        let mut rng = StreamRng::new(1);
        assert_eq!(mutate_bit_inversion(&p, 1.0, &mut rng), g("01001011"));
    }

    #[test]
    fn mean_flip_count_matches_the_binomial() {
        let p = Genome::from_bits(vec![false; 32]);
        let mut rng = StreamRng::new(42);
        let genomes = 1_000_000u64;
        let mut flips = 0u64;
        for _ in 0..genomes {
            let child = mutate_bit_inversion(&p, 0.01, &mut rng);
            flips += child.bits().iter().filter(|&&b| b).count() as u64;
        }
        let mean = flips as f64 / genomes as f64;
        // Expected 0.32 flips per genome; sigma of the mean is ~0.00056.
        assert!((mean - 0.32).abs() < 0.003, "mean flips {mean}");
    }
}
