//! Execution strategy for the data-parallel loops (Monte Carlo trials,
//! exhaustive graph sweeps, twin scans).
//!
//! With the `parallel` feature (on by default) loops can be fanned out over
//! rayon's global pool. Every helper returns exactly what the sequential
//! loop returns: results are collected in index order and reductions are
//! associative, so the choice of [`Exec`] never changes an answer.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// `f` applied to every item, results in item order.
pub fn map<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        Exec::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
    }
}

/// Number of indices in `0..len` satisfying `pred`.
pub fn count<F>(exec: Exec, len: u64, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).filter(|&i| pred(i)).count() as u64,
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().filter(|&i| pred(i)).count() as u64,
    }
}

/// The result for the smallest index in `0..len` where `f` returns `Some`.
pub fn find_first<T, F>(exec: Exec, len: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).find_map(f),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().find_map_first(f),
    }
}

/// Every index in `0..len` satisfies `pred`; returns the first violation.
pub fn first_failure<F>(exec: Exec, len: u64, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    find_first(exec, len, |i| (!pred(i)).then_some(i))
}
