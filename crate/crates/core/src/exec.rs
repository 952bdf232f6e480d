//! Execution strategy for the exhaustive kernels.
//!
//! Every hot loop in the crate (axis transforms, preimage counting,
//! restriction checks, table scans) is written once against [`Exec`].
//! With the `parallel` feature the `Parallel` strategy fans work out over
//! rayon; without it, `Parallel` quietly degrades to the sequential path so
//! callers never need their own `cfg` switches.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// True when this strategy will actually run on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Calls `f(chunk_index, chunk)` for consecutive chunks of `data`.
    pub fn for_each_chunk_mut<T, F>(self, data: &mut [T], chunk: usize, f: F)
    where
        T: Send,
        F: Fn(usize, &mut [T]) + Sync + Send,
    {
        let chunk = chunk.max(1);
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
            return;
        }
        data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
    }

    /// Lowest index `i` in `0..len` for which `f(i)` is `Some`, with its value.
    /// Deterministic under both strategies.
    pub fn find_first<R, F>(self, len: usize, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().find_map_first(f);
        }
        (0..len).find_map(f)
    }

    /// Maps every index of `0..len` and collects in index order.
    pub fn map_collect<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Folds `0..len` into per-worker accumulators and merges them.
    /// `merge` must be associative and `identity` its neutral element.
    pub fn fold_reduce<A, I, F, M>(self, len: usize, identity: I, fold: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, usize) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len)
                .into_par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &merge);
        }
        let _ = &merge;
        (0..len).fold(identity(), fold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let v = exec.map_collect(100, |i| i * i);
            assert_eq!(v[7], 49);
            let s = exec.fold_reduce(100, || 0usize, |a, i| a + i, |a, b| a + b);
            assert_eq!(s, 4950);
            assert_eq!(exec.find_first(100, |i| (i % 17 == 16).then_some(i)), Some(16));
            let mut data = vec![0u32; 10];
            exec.for_each_chunk_mut(&mut data, 3, |ci, c| c.iter_mut().for_each(|x| *x = ci as u32));
            assert_eq!(data, vec![0, 0, 0, 1, 1, 1, 2, 2, 2, 3]);
        }
    }
}
