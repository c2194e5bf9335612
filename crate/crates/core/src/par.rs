//! Range-partitioned execution with deterministic reduction.
//!
//! Heavy loops (span enumeration, error sweeps, dense Gram matrices, LP table
//! cells) are written once against [`Execution`]. With the `parallel` feature
//! they fan out over rayon; without it, or with [`Execution::Sequential`], the
//! same chunks are folded in order. Reductions are associative and
//! commutative, so results do not depend on the thread count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a data-parallel loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// `true` when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

const MIN_CHUNK: u64 = 1 << 12;
const MAX_CHUNKS: u64 = 1 << 10;

/// Splits `0..total` into contiguous chunks.
pub fn chunks(total: u64) -> Vec<Range<u64>> {
    if total == 0 {
        return Vec::new();
    }
    let count = (total / MIN_CHUNK).clamp(1, MAX_CHUNKS);
    let size = total.div_ceil(count);
    (0..count)
        .map(|i| i * size..((i + 1) * size).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Maps every chunk of `0..total` and reduces the partial results.
pub fn map_reduce_range<T, M, R>(exec: Execution, total: u64, identity: T, map: M, reduce: R) -> T
where
    T: Send + Sync + Clone,
    M: Fn(Range<u64>) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    map_reduce(exec, chunks(total), identity, map, reduce)
}

/// Maps every item and reduces the results.
pub fn map_reduce<I, T, M, R>(exec: Execution, items: Vec<I>, identity: T, map: M, reduce: R) -> T
where
    I: Send,
    T: Send + Sync + Clone,
    M: Fn(I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        return items
            .into_par_iter()
            .map(map)
            .reduce(|| identity.clone(), reduce);
    }
    let _ = exec;
    items.into_iter().map(map).fold(identity, reduce)
}

/// Maps every item, preserving order.
pub fn map_collect<I, T, M>(exec: Execution, items: Vec<I>, map: M) -> Vec<T>
where
    I: Send,
    T: Send,
    M: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        return items.into_par_iter().map(map).collect();
    }
    let _ = exec;
    items.into_iter().map(map).collect()
}

/// First item (in input order) for which `f` returns `Some`.
pub fn find_map_first<I, T, F>(exec: Execution, items: Vec<I>, f: F) -> Option<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        return items.into_par_iter().find_map_first(f);
    }
    let _ = exec;
    items.into_iter().find_map(f)
}
