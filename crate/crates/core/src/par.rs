//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the [`Execution::Parallel`] mode runs on the
//! rayon pool; without it every mode runs sequentially. Results never
//! depend on the mode: searches report the lowest failing index and maps
//! keep input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
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

/// Index of the first item satisfying `pred`.
pub fn find_first<T, P>(exec: Execution, items: &[T], pred: P) -> Option<usize>
where
    T: Sync,
    P: Fn(&T) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().position_first(pred),
        _ => items.iter().position(pred),
    }
}

/// `items.iter().map(f).collect()`, order preserved.
pub fn map<T, R, G>(exec: Execution, items: &[T], f: G) -> Vec<R>
where
    T: Sync,
    R: Send,
    G: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Runs `f` over `0..n` and returns the first `Err` by index, if any.
pub fn try_for_each_index<E, G>(exec: Execution, n: usize, f: G) -> Result<(), E>
where
    E: Send,
    G: Fn(usize) -> Result<(), E> + Sync + Send,
{
    let idx: Vec<usize> = (0..n).collect();
    let results = map(exec, &idx, |&i| f(i).err());
    match results.into_iter().flatten().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u32> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(find_first(exec, &v, |&x| x > 10 && x % 7 == 0), Some(14));
            assert_eq!(map(exec, &v, |x| x * 2)[999], 1998);
            let r = try_for_each_index(exec, 100, |i| if i % 30 == 29 { Err(i) } else { Ok(()) });
            assert_eq!(r, Err(29));
        }
    }
}
