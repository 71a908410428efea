//! Best-effort pinning of worker threads to logical CPUs.

use std::sync::Once;

static PIN_WARNING: Once = Once::new();

fn warn_unavailable(reason: &str) {
    PIN_WARNING.call_once(|| {
        eprintln!("warning: CPU pinning unavailable ({reason}); continuing unpinned");
    });
}

/// Number of logical CPUs visible to this process.
pub fn logical_cpus() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Pin the calling thread to one logical CPU (wrapping around the available
/// set). Returns `false` and warns once per process when pinning is
/// unsupported or rejected by the OS.
#[cfg(target_os = "linux")]
pub fn pin_current_thread(cpu: usize) -> bool {
    let cpu = cpu % logical_cpus();
    // SAFETY: cpu_set_t is a plain bitmask; pid 0 targets the calling thread.
    unsafe {
        let mut set: libc::cpu_set_t = std::mem::zeroed();
        libc::CPU_ZERO(&mut set);
        libc::CPU_SET(cpu, &mut set);
        if libc::sched_setaffinity(0, std::mem::size_of::<libc::cpu_set_t>(), &set) == 0 {
            return true;
        }
    }
    warn_unavailable("sched_setaffinity failed");
    false
}

#[cfg(not(target_os = "linux"))]
pub fn pin_current_thread(_cpu: usize) -> bool {
    warn_unavailable("unsupported platform");
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinning_is_best_effort() {
        // Must not panic whatever the platform answers.
        let _ = pin_current_thread(0);
        let _ = pin_current_thread(logical_cpus() + 3);
        assert!(logical_cpus() >= 1);
    }
}
