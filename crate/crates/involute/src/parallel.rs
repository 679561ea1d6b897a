//! Threaded enumeration: the search tree is split at a fixed depth and the
//! subtrees are handed to scoped worker threads.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use involute_core::catalog::Catalog;
use involute_core::classify::{Census, ClassifyError};
use involute_core::enumerate::{
    explore_subtree, frontier, ClassCollector, EnumerateError, EnumerationConfig,
    EnumerationResult, MAX_ENUM_ORDER,
};
use involute_core::FiniteGroup;

#[derive(Debug, Clone, Copy)]
pub struct DriverConfig {
    pub enumeration: EnumerationConfig,
    pub threads: usize,
    pub timeout: Option<Duration>,
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig {
            enumeration: EnumerationConfig::default(),
            threads: default_threads(),
            timeout: None,
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// All groups of order `n`. The result does not depend on the thread count.
pub fn enumerate_parallel(
    n: usize,
    config: &DriverConfig,
) -> Result<EnumerationResult, EnumerateError> {
    let start = Instant::now();
    let deadline = config.timeout.map(|t| start + t);
    enumerate_until(n, config, deadline, start)
}

fn enumerate_until(
    n: usize,
    config: &DriverConfig,
    deadline: Option<Instant>,
    start: Instant,
) -> Result<EnumerationResult, EnumerateError> {
    let cap = config.enumeration.cap.min(MAX_ENUM_ORDER);
    if n == 0 || n > cap {
        return Err(EnumerateError::OrderOutOfRange { order: n, cap });
    }
    let (nodes, done, top_nodes) = frontier(n)?;
    let next = AtomicUsize::new(0);
    let explored = AtomicU64::new(top_nodes);
    let stop = AtomicBool::new(false);
    let slots: Vec<Mutex<Vec<FiniteGroup>>> =
        nodes.iter().map(|_| Mutex::new(Vec::new())).collect();
    let failure: Mutex<Option<EnumerateError>> = Mutex::new(None);
    let limit = config.enumeration.node_limit;

    std::thread::scope(|scope| {
        for _ in 0..config.threads.max(1).min(nodes.len().max(1)) {
            scope.spawn(|| loop {
                let pending = next.load(Ordering::Relaxed) < nodes.len();
                if pending && deadline.is_some_and(|d| Instant::now() >= d) {
                    stop.store(true, Ordering::Relaxed);
                }
                if stop.load(Ordering::Relaxed) {
                    return;
                }
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(node) = nodes.get(idx) else { return };
                let budget = limit.map(|l| l.saturating_sub(explored.load(Ordering::Relaxed)));
                let mut interrupt = || {
                    stop.load(Ordering::Relaxed) || deadline.is_some_and(|d| Instant::now() >= d)
                };
                match explore_subtree(node.clone(), budget, &mut interrupt) {
                    Ok(sub) => {
                        explored.fetch_add(sub.nodes, Ordering::Relaxed);
                        *slots[idx].lock().expect("slot lock") = sub.tables;
                        if sub.interrupted {
                            stop.store(true, Ordering::Relaxed);
                        }
                    }
                    Err(e) => {
                        failure.lock().expect("failure lock").get_or_insert(e);
                        stop.store(true, Ordering::Relaxed);
                    }
                }
            });
        }
    });

    if let Some(e) = failure.into_inner().expect("failure lock") {
        return Err(e);
    }
    let mut collector = ClassCollector::new();
    for g in done {
        collector.insert(g);
    }
    for slot in slots {
        for g in slot.into_inner().expect("slot lock") {
            collector.insert(g);
        }
    }
    let explored = explored.into_inner();
    if stop.into_inner() {
        return Err(EnumerateError::Interrupted {
            order: n,
            tables_explored: explored,
            complete_tables: collector.tables_seen(),
            classes_so_far: collector.class_count(),
        });
    }
    let complete_tables = collector.tables_seen();
    Ok(EnumerationResult {
        order: n,
        groups: collector.finish(Some(&Catalog::standard())),
        tables_explored: explored,
        complete_tables,
        elapsed: Some(start.elapsed()),
    })
}

/// Enumerates every order up to `max_order`; the timeout covers the whole
/// census.
pub fn census_parallel(max_order: usize, config: &DriverConfig) -> Result<Census, ClassifyError> {
    let start = Instant::now();
    let deadline = config.timeout.map(|t| start + t);
    let mut results = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        results.push(enumerate_until(n, config, deadline, Instant::now())?);
    }
    Census::from_results(results)
}
