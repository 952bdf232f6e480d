//! Enumeration of every balanced value table F_q^n → F_q.

use std::collections::BTreeMap;

use serde_json::json;

use super::{Clock, ReportKind, Verifier, VerifyReport, Witness};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{Elem, FieldSpec};
use crate::limits;
use crate::mvpoly::FuncTable;

const BATCH: usize = 4096;

/// Number of balanced tables, `(q^n)! / ((q^(n−1))!)^q`, saturating.
pub fn balanced_count(q: u32, n: usize) -> u128 {
    let total = limits::points(q, n);
    let block = limits::points(q, n.saturating_sub(1));
    let mut acc: u128 = 1;
    let mut left = total;
    for _ in 0..q {
        // multiply by C(left, block)
        for i in 0..block {
            acc = match acc.checked_mul(left - i) {
                Some(v) => v / (i + 1),
                None => return u128::MAX,
            };
        }
        left -= block;
    }
    acc
}

/// Lexicographic successor of a multiset arrangement; false when `v` was the
/// last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub(super) fn scan_pp_degree_bound(ver: &Verifier, field: &FieldSpec, n: usize) -> Result<VerifyReport> {
    let clock = Clock(ver.timing.then(std::time::Instant::now));
    let q = field.q();
    let len = limits::check_points(q, n, ver.point_cap)?;
    let count = balanced_count(q, n);
    if count > ver.scan_cap as u128 {
        return Err(Error::CapExceeded {
            needed: count,
            cap: ver.scan_cap as u128,
        });
    }
    let bound = n as i64 * (q as i64 - 1) - 1;
    let block = len / q as usize;

    let mut table: Vec<u32> = (0..q).flat_map(|v| std::iter::repeat_n(v, block)).collect();
    let mut histogram: BTreeMap<i64, u64> = BTreeMap::new();
    let mut visited: u64 = 0;
    let mut pp_count: u64 = 0;
    let mut witness = None;
    let mut more = true;
    while more {
        let mut batch = Vec::with_capacity(BATCH);
        while more && batch.len() < BATCH {
            batch.push(table.clone());
            more = next_permutation(&mut table);
        }
        let results = ver.exec.map_collect(batch.len(), |i| {
            let vals: Vec<Elem> = batch[i].iter().map(|&r| Elem::from_rank_unchecked(r)).collect();
            let t = FuncTable::from_values(field, n, vals).expect("table length checked");
            let f = t.interpolate_with(Exec::Sequential);
            // Re-evaluate the interpolant and count preimages from scratch.
            let back = f.to_table_with(Exec::Sequential);
            let mut counts = vec![0usize; q as usize];
            back.values().iter().for_each(|v| counts[v.rank() as usize] += 1);
            let is_pp = counts.iter().all(|&c| c == block);
            (f.total_degree(), is_pp)
        });
        for (i, (deg, is_pp)) in results.into_iter().enumerate() {
            visited += 1;
            *histogram.entry(deg).or_default() += 1;
            if is_pp {
                pp_count += 1;
            }
            if witness.is_none() && (deg > bound || !is_pp) {
                witness = Some(Witness::Scan {
                    table: batch[i].clone(),
                    degree: deg,
                    bound,
                });
            }
        }
    }
    debug_assert_eq!(visited as u128, count);
    let detail = json!({
        "q": q,
        "n": n,
        "balanced": visited,
        "pp_count": pp_count,
        "bound": bound,
        "max_degree": histogram.keys().next_back(),
        "degree_histogram": histogram.iter().map(|(d, c)| json!([d, c])).collect::<Vec<_>>(),
    });
    Ok(VerifyReport::new(ReportKind::Scan, witness, visited * len as u64, clock.ms()).with_detail(detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_counts() {
        assert_eq!(balanced_count(2, 2), 6);
        assert_eq!(balanced_count(2, 3), 70);
        assert_eq!(balanced_count(3, 2), 1680);
        assert_eq!(balanced_count(3, 1), 6);
        assert!(balanced_count(4, 2) > 10_000_000);
    }

    #[test]
    fn multiset_permutations_enumerate_all() {
        let mut v = vec![0, 0, 1, 1];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert_eq!(v, vec![1, 1, 0, 0]);
    }
}
