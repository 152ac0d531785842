//! Sequential or rayon-backed execution of independent work items.
//!
//! Results are always returned in input order so callers can merge them
//! into canonical order regardless of the strategy. Without the `parallel`
//! feature, [`Execution::Parallel`] runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `0..n` in contiguous chunks and concatenates the chunk
    /// outputs in index order.
    pub fn chunked<R, F>(self, n: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(std::ops::Range<u64>) -> Vec<R> + Sync + Send,
    {
        const CHUNK: u64 = 1 << 12;
        let ranges: Vec<_> = (0..n.div_ceil(CHUNK))
            .map(|c| c * CHUNK..((c + 1) * CHUNK).min(n))
            .collect();
        self.map(&ranges, |r| f(r.clone()))
            .into_iter()
            .flatten()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = Execution::Sequential.map(&items, |x| x * 2);
        let par = Execution::Parallel.map(&items, |x| x * 2);
        assert_eq!(seq, par);
        let chunks = Execution::Parallel.chunked(10_000, |r| r.collect());
        assert_eq!(chunks, (0..10_000).collect::<Vec<u64>>());
    }
}
