//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers dispatch to rayon unless parallelism
//! was switched off at runtime with [`set_parallel`]. Every helper returns its
//! results in input order, so callers produce identical output either way.

use std::sync::atomic::{AtomicBool, Ordering};

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Enable or disable the parallel paths at runtime. Returns the previous setting.
/// Without the `parallel` feature this only records the flag.
pub fn set_parallel(on: bool) -> bool {
    ENABLED.swap(on, Ordering::SeqCst)
}

/// Whether the parallel paths are compiled in and switched on.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::Relaxed)
}

/// Map over a slice, in parallel when enabled and the batch has at least `min_len` items.
pub fn map<T, R, F>(items: &[T], min_len: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() >= min_len.max(2) && parallel_enabled() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = min_len;
    items.iter().map(f).collect()
}

/// Map over an integer range, in parallel when enabled.
pub fn map_range<R, F>(lo: i64, hi_inclusive: i64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(i64) -> R + Sync + Send,
{
    if hi_inclusive < lo {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() && hi_inclusive > lo {
            use rayon::prelude::*;
            return (lo..=hi_inclusive).into_par_iter().map(f).collect();
        }
    }
    (lo..=hi_inclusive).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..1000).collect();
        let a = map(&v, 1, |x| x * x);
        let prev = set_parallel(false);
        let b = map(&v, 1, |x| x * x);
        set_parallel(prev);
        assert_eq!(a, b);
        assert_eq!(map_range(-3, 3, |i| i * 2), vec![-6, -4, -2, 0, 2, 4, 6]);
        assert!(map_range(2, 1, |i| i).is_empty());
    }
}
