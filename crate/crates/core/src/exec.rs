//! Data-parallel execution helpers.
//!
//! Batch gradients and batch evaluation are embarrassingly parallel across
//! examples. Work is split into fixed-size chunks and chunk results are
//! combined in chunk order, so the floating-point result is bit-identical
//! whether chunks run on one thread or many — and identical between
//! [`Mode::Parallel`] and [`Mode::Sequential`].
//!
//! With the `parallel` feature disabled, `Parallel` silently degrades to the
//! sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to drive a chunked loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    /// Library default: parallel when compiled in, sequential otherwise.
    pub fn auto() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Number of examples per gradient/eval chunk.
///
/// Fixed (never derived from the thread count) so that chunk boundaries, and
/// therefore summation order, are a pure function of the input length.
pub const CHUNK: usize = 8;

/// Map `f` over fixed-size chunks of `items`, returning results in chunk
/// order. `f` receives the chunk index and the chunk slice.
pub fn map_chunks<T, R, F>(mode: Mode, items: &[T], chunk_size: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &[T]) -> R + Sync,
{
    assert!(chunk_size > 0, "chunk_size must be positive");
    match mode {
        Mode::Sequential => items.chunks(chunk_size).enumerate().map(|(i, c)| f(i, c)).collect(),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items
                    .par_chunks(chunk_size)
                    .enumerate()
                    .map(|(i, c)| f(i, c))
                    .collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.chunks(chunk_size).enumerate().map(|(i, c)| f(i, c)).collect()
            }
        }
    }
}

/// Map `f` over items one at a time (parallel across items), preserving
/// input order. Used for read-only batch inference.
pub fn map_items<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    match mode {
        Mode::Sequential => items.iter().map(&f).collect(),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(&f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(&f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunk_results_in_order() {
        let items: Vec<u64> = (0..37).collect();
        let seq = map_chunks(Mode::Sequential, &items, 5, |i, c| (i, c.iter().sum::<u64>()));
        let par = map_chunks(Mode::Parallel, &items, 5, |i, c| (i, c.iter().sum::<u64>()));
        assert_eq!(seq, par);
        assert_eq!(seq.len(), 8);
        assert_eq!(seq[0], (0, 10));
    }

    #[test]
    fn item_map_matches_sequential() {
        let items: Vec<i64> = (0..100).collect();
        let seq = map_items(Mode::Sequential, &items, |x| x * x);
        let par = map_items(Mode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
    }
}
