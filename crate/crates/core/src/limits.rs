//! Workload caps shared by the dense representations and the verifiers.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default bound on q^n for dense tables and coefficient arrays.
pub const DEFAULT_POINT_CAP: u64 = 1 << 20;

/// Default bound on the number of value tables an exhaustive scan may visit.
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

pub const POINT_CAP_ENV: &str = "FFPERM_POINT_CAP";

/// The process-wide point cap: `FFPERM_POINT_CAP` if set and parseable,
/// otherwise [`DEFAULT_POINT_CAP`]. Read once.
pub fn point_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(POINT_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_POINT_CAP)
    })
}

/// `q^n` as a u128, saturating.
pub fn points(q: u32, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(q as u128);
    }
    acc
}

pub fn check_points(q: u32, n: usize, cap: u64) -> Result<usize> {
    let needed = points(q, n);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            needed,
            cap: cap as u128,
        });
    }
    Ok(needed as usize)
}
