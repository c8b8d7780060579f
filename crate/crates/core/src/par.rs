//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) the loops run on rayon; without it
//! every strategy degrades to the sequential path. Results never depend on the
//! strategy: reductions break ties on the input index.

/// How a data-parallel loop should be executed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Parallel when the `parallel` feature is compiled in.
    #[default]
    Auto,
    Sequential,
    Parallel,
}

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self != Strategy::Sequential
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], strategy: Strategy, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Maps `0..len` through `f`, preserving order.
pub fn map_range<R, F>(len: usize, strategy: Strategy, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(&xs, Strategy::Sequential, |x| x * x);
        let b = map(&xs, Strategy::Parallel, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(
            map_range(10, Strategy::Auto, |i| i + 1),
            (1..=10).collect::<Vec<_>>()
        );
    }
}
