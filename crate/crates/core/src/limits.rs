//! Process-wide size guards. Set once at startup (the CLI does this from
//! `--max-dim` / `--max-enum`); read everywhere else.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: u64 = 4096;
pub const DEFAULT_MAX_ENUM: u64 = 2_000_000;

static MAX_DIM: AtomicU64 = AtomicU64::new(DEFAULT_MAX_DIM);
static MAX_ENUM: AtomicU64 = AtomicU64::new(DEFAULT_MAX_ENUM);

pub fn max_dim() -> u64 {
    MAX_DIM.load(Ordering::Relaxed)
}

pub fn max_enum() -> u64 {
    MAX_ENUM.load(Ordering::Relaxed)
}

pub fn set_max_dim(limit: u64) {
    MAX_DIM.store(limit, Ordering::Relaxed);
}

pub fn set_max_enum(limit: u64) {
    MAX_ENUM.store(limit, Ordering::Relaxed);
}

/// Fails with [`Error::SizeLimit`] when an ambient tensor dimension is too large.
pub fn guard_dim(requested: usize) -> Result<()> {
    let limit = max_dim();
    if requested as u64 > limit {
        return Err(Error::SizeLimit {
            requested: requested as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// `base^exp` candidates must not exceed the enumeration guard.
pub fn guard_enum(base: u64, exp: usize) -> Result<u64> {
    let limit = max_enum();
    let mut count: u128 = 1;
    for _ in 0..exp {
        count = count.saturating_mul(base as u128);
    }
    if count > limit as u128 {
        return Err(Error::SizeLimit {
            requested: count,
            limit: limit as u128,
        });
    }
    Ok(count as u64)
}
