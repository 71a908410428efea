//! Index-partitioned parallel phase execution.
//!
//! A phase maps slot indices `0..slots` to values. Slots are split into
//! contiguous ranges, one per worker; results are stitched back in slot
//! order, so the output never depends on the worker count. Each worker's
//! wall time on its range is returned as busy time.

use std::ops::Range;
use std::time::{Duration, Instant};

use crate::affinity;

/// Contiguous near-equal ranges covering `0..len` (empty ranges dropped).
fn chunk_ranges(len: usize, parts: usize) -> Vec<Range<usize>> {
    let parts = parts.max(1);
    let base = len / parts;
    let extra = len % parts;
    let mut ranges = Vec::with_capacity(parts);
    let mut start = 0;
    for p in 0..parts {
        let size = base + usize::from(p < extra);
        if size > 0 {
            ranges.push(start..start + size);
            start += size;
        }
    }
    ranges
}

/// Run `f` over every slot, split across `threads` workers, and return the
/// results in slot order plus the summed per-worker busy time.
///
/// With one thread and no pinning the slots run inline on the caller.
/// Pinning always uses spawned workers so the caller's own affinity mask is
/// left untouched.
pub(crate) fn map_slots<T, F>(threads: usize, pin: bool, slots: usize, f: F) -> (Vec<T>, Duration)
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if (threads <= 1 && !pin) || slots == 0 {
        let start = Instant::now();
        let results = (0..slots).map(f).collect();
        return (results, start.elapsed());
    }

    let ranges = chunk_ranges(slots, threads);
    let mut results = Vec::with_capacity(slots);
    let mut busy = Duration::ZERO;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .enumerate()
            .map(|(worker, range)| {
                let f = &f;
                scope.spawn(move || {
                    if pin {
                        affinity::pin_current_thread(worker);
                    }
                    let start = Instant::now();
                    let out: Vec<T> = range.map(f).collect();
                    (out, start.elapsed())
                })
            })
            .collect();
        for handle in handles {
            let (out, elapsed) = handle.join().expect("phase worker panicked");
            results.extend(out);
            busy += elapsed;
        }
    });
    (results, busy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_cover_everything_in_order() {
        for len in [0usize, 1, 2, 7, 64, 1000] {
            for parts in [1usize, 2, 3, 8, 64] {
                let ranges = chunk_ranges(len, parts);
                let flat: Vec<usize> = ranges.into_iter().flatten().collect();
                assert_eq!(flat, (0..len).collect::<Vec<_>>(), "len {len} parts {parts}");
            }
        }
    }

    #[test]
    fn results_are_thread_count_invariant() {
        let slot_value = |i: usize| i * i + 1;
        let (seq, _) = map_slots(1, false, 100, slot_value);
        for threads in [2, 3, 8, 17] {
            let (par, _) = map_slots(threads, false, 100, slot_value);
            assert_eq!(par, seq, "threads {threads}");
        }
    }

    #[test]
    fn more_workers_than_slots_is_fine() {
        let (out, _) = map_slots(16, false, 3, |i| i);
        assert_eq!(out, vec![0, 1, 2]);
    }
}
