/// How to run the data-parallel loops of the enumerators and oracles.
///
/// `Parallel` silently degrades to `Sequential` when the crate is built
/// without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `0..len`, preserving index order in the output.
    pub fn map_indices<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Returns the result for the lowest index `i` in `0..len` with
    /// `f(i) == Some(_)`. Deterministic under both modes; the parallel path
    /// may evaluate indices past the winner but never reports them.
    pub fn find_first<R, F>(self, len: usize, f: F) -> Option<(usize, R)>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..len)
                .into_par_iter()
                .filter_map(|i| f(i).map(|r| (i, r)))
                .min_by_key(|(i, _)| *i);
        }
        (0..len).find_map(|i| f(i).map(|r| (i, r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map_indices(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(exec.find_first(100, |i| (i % 7 == 3).then_some(i * 2)), Some((3, 6)));
            assert_eq!(exec.find_first(10, |_| None::<()>), None);
        }
    }
}
