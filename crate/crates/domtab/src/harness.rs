//! Timed, optionally multi-threaded suite runs.

use std::time::Instant;

use domtab_core::{Bounds, Report, Suite, VerifyError};

/// Runs `suite` with its shards dealt round-robin to `threads` workers.
/// Shard reports are merged in shard order, so the result does not depend
/// on the thread count apart from `elapsed`.
pub fn run_suite(suite: Suite, bounds: &Bounds, threads: usize) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let shards = suite.shards(bounds);
    let threads = threads.clamp(1, shards.len().max(1));
    let mut slots: Vec<Option<Result<Report, VerifyError>>> =
        (0..shards.len()).map(|_| None).collect();
    if threads == 1 {
        for (slot, shape) in slots.iter_mut().zip(&shards) {
            *slot = Some(suite.run_shard(bounds, shape));
        }
    } else {
        let done: Vec<Vec<(usize, Result<Report, VerifyError>)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let shards = &shards;
                    scope.spawn(move || {
                        (w..shards.len())
                            .step_by(threads)
                            .map(|k| (k, suite.run_shard(bounds, &shards[k])))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        for (k, r) in done.into_iter().flatten() {
            slots[k] = Some(r);
        }
    }
    let mut report = Report::new(suite.name(), bounds.clone());
    for r in slots.into_iter().flatten() {
        report = report.merge(r?);
    }
    let mut report = report.finalize();
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

pub fn run_named(name: &str, bounds: &Bounds, threads: usize) -> Result<Report, VerifyError> {
    run_suite(Suite::from_name(name)?, bounds, threads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_change_reports() {
        let b = Bounds::boxed(5, 3, 3);
        for suite in [Suite::Thm16a, Suite::Eq15, Suite::Eq01] {
            let mut one = run_suite(suite, &b, 1).unwrap();
            let mut four = run_suite(suite, &b, 4).unwrap();
            one.elapsed = None;
            four.elapsed = None;
            assert_eq!(one, four);
            assert_eq!(one, suite.run(&b).unwrap());
        }
    }
}
