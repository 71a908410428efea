//! Selection operators: roulette wheel, tournament, and linear ranking.

use crate::error::{Error, Result};
use crate::rng::StreamRng;

/// Roulette-wheel selection over nonnegative weights: index `i` is drawn with
/// probability `w[i] / sum(w)`. A wheel with no mass falls back to a uniform
/// draw.
///
/// The wheel is walked linearly per draw, which is the dominant cost of a
/// generation at large population sizes.
pub fn select_roulette(weights: &[f64], rng: &mut StreamRng) -> usize {
    debug_assert!(weights.iter().all(|&w| w >= 0.0));
    let n = weights.len();
    assert!(n > 0);
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) {
        return rng.next_below(n as u64) as usize;
    }
    let r = rng.next_f64() * total;
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        acc += w;
        if r < acc {
            return i;
        }
    }
    // Rounding fell off the wheel's end; settle on the last carrying slot.
    weights.iter().rposition(|&w| w > 0.0).unwrap_or(n - 1)
}

/// Tournament selection: draw `group` distinct indices uniformly without
/// replacement and return the one with maximal fitness, ties going to the
/// smallest index.
pub fn select_tournament(fitness: &[f64], group: usize, rng: &mut StreamRng) -> Result<usize> {
    let n = fitness.len();
    if group > n {
        return Err(Error::TournamentGroupTooLarge { group, pop: n });
    }
    assert!(group >= 2, "tournament group must hold at least two");
    let mut indices: Vec<usize> = (0..n).collect();
    let mut best: Option<usize> = None;
    for i in 0..group {
        let j = i + rng.next_below((n - i) as u64) as usize;
        indices.swap(i, j);
        let candidate = indices[i];
        best = Some(match best {
            None => candidate,
            Some(b) => {
                if fitness[candidate] > fitness[b]
                    || (fitness[candidate] == fitness[b] && candidate < b)
                {
                    candidate
                } else {
                    b
                }
            }
        });
    }
    Ok(best.expect("group >= 2"))
}

/// Indices sorted by ascending fitness; ties keep their original order.
pub fn rank_order(fitness: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..fitness.len()).collect();
    order.sort_by(|&a, &b| fitness[a].total_cmp(&fitness[b]));
    order
}

/// Draw one index from a precomputed ascending rank order using the linear
/// ranking law with selection pressure `s`: rank `r` (0 = worst) is chosen
/// with probability `(2 - s)/n + 2 r (s - 1) / (n (n - 1))`.
pub fn select_by_rank(order: &[usize], s: f64, rng: &mut StreamRng) -> usize {
    assert!(s > 1.0 && s <= 2.0, "selection pressure must be in (1, 2]");
    let n = order.len();
    assert!(n > 0);
    if n == 1 {
        return order[0];
    }
    let nf = n as f64;
    let u = rng.next_f64();
    let mut acc = 0.0;
    for (r, &idx) in order.iter().enumerate() {
        acc += (2.0 - s) / nf + 2.0 * r as f64 * (s - 1.0) / (nf * (nf - 1.0));
        if u < acc {
            return idx;
        }
    }
    order[n - 1]
}

/// Linear-ranking selection over a fitness vector (sorts per call; callers
/// drawing many times per generation should sort once with [`rank_order`]
/// and use [`select_by_rank`]).
pub fn select_linear_ranking(fitness: &[f64], s: f64, rng: &mut StreamRng) -> usize {
    select_by_rank(&rank_order(fitness), s, rng)
}
