//! Parallel/sequential execution of per-sample kernels.
//!
//! With the `parallel` feature (default) scans run on the rayon pool;
//! without it the same entry points run sequential loops. Reductions are
//! associative and tie-break by index, so the result is identical for any
//! worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Location and value of the worst (smallest) margin in a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorstCase {
    pub index: usize,
    pub margin: f64,
}

fn pick_worse(a: WorstCase, b: WorstCase) -> WorstCase {
    // NaN counts as worst so it can never be masked by a healthy margin.
    let a_key = if a.margin.is_nan() { f64::NEG_INFINITY } else { a.margin };
    let b_key = if b.margin.is_nan() { f64::NEG_INFINITY } else { b.margin };
    match a_key.total_cmp(&b_key) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if a.index <= b.index {
                a
            } else {
                b
            }
        }
    }
}

/// Sequential reference implementation of [`worst_margin`].
pub fn worst_margin_seq<T, F>(items: &[T], kernel: F) -> Option<WorstCase>
where
    F: Fn(usize, &T) -> f64,
{
    items
        .iter()
        .enumerate()
        .map(|(i, t)| WorstCase { index: i, margin: kernel(i, t) })
        .reduce(pick_worse)
}

/// Smallest kernel value over `items`, with the index where it occurs.
pub fn worst_margin<T, F>(items: &[T], kernel: F) -> Option<WorstCase>
where
    T: Sync,
    F: Fn(usize, &T) -> f64 + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .enumerate()
            .map(|(i, t)| WorstCase { index: i, margin: kernel(i, t) })
            .reduce_with(pick_worse)
    }
    #[cfg(not(feature = "parallel"))]
    {
        worst_margin_seq(items, kernel)
    }
}

/// Map a kernel over items, preserving order.
pub fn map_collect<T, U, F>(items: &[T], kernel: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(kernel).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(kernel).collect()
    }
}
