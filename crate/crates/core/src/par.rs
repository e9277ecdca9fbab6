//! Optional data parallelism.
//!
//! Sweeps call [`map_collect`] with an [`Execution`] mode. With the `parallel`
//! feature the parallel mode runs on the rayon pool; without it both modes are
//! sequential. Either way the output order equals the input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// Whether this mode actually runs on multiple threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map_collect<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved_in_both_modes() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_collect(&xs, Execution::Parallel, |x| x * x);
        let b = map_collect(&xs, Execution::Sequential, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[999], 998001);
    }
}
