//! Order-preserving map helpers that run on rayon when the `parallel`
//! feature is enabled and the config asks for it, sequentially otherwise.

use crate::config::Config;
use crate::error::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(cfg: &Config, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = cfg;
    items.iter().map(f).collect()
}

/// Like [`map`], but the first error in item order wins.
pub fn try_map<T, R, F>(cfg: &Config, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    map(cfg, items, f).into_iter().collect()
}

/// First item (in order) for which `f` returns `Some`.
pub fn find_map_first<T, R, F>(cfg: &Config, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return items.par_iter().find_map_first(f);
    }
    let _ = cfg;
    items.iter().find_map(f)
}

/// Whether computations under `cfg` actually run on the thread pool.
pub fn is_parallel(cfg: &Config) -> bool {
    cfg!(feature = "parallel") && cfg.parallel
}
