//! Sweep over `(k, m, n)` triples on a fixed pool of scoped threads. The
//! merged report is identical to the sequential one.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use petrie_core::schur::{evaluate_triple, SweepReport, TripleResult};

pub fn parallel_sweep(
    k_max: usize,
    m_max: usize,
    n_max: usize,
    jobs: usize,
) -> petrie_core::Result<SweepReport> {
    let triples = SweepReport::triples_in_range(k_max, m_max, n_max);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<petrie_core::Result<TripleResult>>> =
        Mutex::new(Vec::with_capacity(triples.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, triples.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(k, m, n)) = triples.get(i) else {
                    break;
                };
                let r = evaluate_triple(k, m, n);
                results
                    .lock()
                    .expect("no worker panics while holding the lock")
                    .push(r);
            });
        }
    });
    let results = results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .collect::<petrie_core::Result<Vec<_>>>()?;
    Ok(SweepReport::from_results(k_max, m_max, n_max, results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use petrie_core::schur::sweep_smf;

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(
            parallel_sweep(4, 6, 4, 3).unwrap(),
            sweep_smf(4, 6, 4).unwrap()
        );
        assert_eq!(
            parallel_sweep(1, 1, 1, 8).unwrap(),
            sweep_smf(1, 1, 1).unwrap()
        );
    }
}
