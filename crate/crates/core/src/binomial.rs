use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use spin::{Once, RwLock};

use crate::ExactInt;

/// Append-only table of Pascal's triangle rows.
///
/// Rows are built by addition only and never change after they are
/// published, so readers only hold the lock long enough to clone an `Arc`.
/// Requests beyond `cap` bypass the table and use the multiplicative formula.
pub struct BinomialCache {
    cap: u64,
    rows: RwLock<Vec<Arc<[ExactInt]>>>,
}

impl BinomialCache {
    pub const DEFAULT_CAP: u64 = 4096;

    pub fn new(cap: u64) -> Self {
        BinomialCache {
            cap,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Number of rows currently published.
    pub fn len(&self) -> usize {
        self.rows.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `n` choose `k`, zero when `k` lies outside `0..=n`.
    pub fn get(&self, n: u64, k: i64) -> ExactInt {
        if k < 0 || k as u64 > n {
            return ExactInt::zero();
        }
        let k = k as u64;
        let k = k.min(n - k);
        if k == 0 {
            return ExactInt::one();
        }
        match self.row(n) {
            Some(row) => row[k as usize].clone(),
            None => multiplicative(n, k),
        }
    }

    /// Row `n` of the triangle, or `None` if `n` is beyond the cap.
    pub fn row(&self, n: u64) -> Option<Arc<[ExactInt]>> {
        if n > self.cap {
            return None;
        }
        let idx = n as usize;
        if let Some(row) = self.rows.read().get(idx) {
            return Some(row.clone());
        }
        self.extend_to(idx);
        self.rows.read().get(idx).cloned()
    }

    fn extend_to(&self, idx: usize) {
        let mut rows = self.rows.write();
        // another writer may have got here first
        while rows.len() <= idx {
            let next: Arc<[ExactInt]> = match rows.last() {
                None => Arc::from([ExactInt::one()]),
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(ExactInt::one());
                    for w in prev.windows(2) {
                        row.push(&w[0] + &w[1]);
                    }
                    row.push(ExactInt::one());
                    row.into()
                }
            };
            rows.push(next);
        }
    }
}

impl Default for BinomialCache {
    fn default() -> Self {
        BinomialCache::new(Self::DEFAULT_CAP)
    }
}

fn multiplicative(n: u64, k: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 1..=k {
        // acc * (n - k + i) is always divisible by i at this point
        acc = acc * ExactInt::from(n - k + i) / ExactInt::from(i);
    }
    acc
}

static GLOBAL: Once<BinomialCache> = Once::new();

fn global() -> &'static BinomialCache {
    GLOBAL.call_once(BinomialCache::default)
}

/// Binomial coefficient through the process-wide cache.
///
/// Returns zero for `k < 0` or `k > n`; closed forms and M-sums rely on
/// these vanishing terms.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    global().get(n, k)
}

/// [`binomial`] for an unsigned lower index.
pub fn choose(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    global().get(n, k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), ExactInt::from(6));
        assert_eq!(binomial(7, 0), ExactInt::from(1));
        assert_eq!(binomial(6, 3), ExactInt::from(20));
        assert_eq!(binomial(5, -1), ExactInt::zero());
        assert_eq!(binomial(5, 6), ExactInt::zero());
        assert_eq!(binomial(0, 0), ExactInt::one());
    }

    #[test]
    fn rows_have_pascal_shape() {
        let cache = BinomialCache::new(64);
        for n in 0..=40u64 {
            let row = cache.row(n).unwrap();
            assert_eq!(row.len() as u64, n + 1);
            assert!(row[0].is_one() && row[n as usize].is_one());
            if n > 0 {
                let prev = cache.row(n - 1).unwrap();
                for k in 1..n as usize {
                    assert_eq!(row[k], &prev[k - 1] + &prev[k]);
                }
            }
        }
        assert_eq!(cache.len(), 41);
    }

    #[test]
    fn beyond_cap_uses_multiplicative_formula() {
        let small = BinomialCache::new(10);
        let full = BinomialCache::new(200);
        for n in [11u64, 50, 123, 200] {
            for k in [0i64, 1, 7, (n / 2) as i64, n as i64] {
                assert_eq!(small.get(n, k), full.get(n, k), "C({n},{k})");
            }
        }
        assert!(small.row(11).is_none());
        assert_eq!(small.len(), 0);
    }

    #[test]
    fn known_large_value() {
        let expected: ExactInt = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn published_rows_are_stable() {
        let cache = BinomialCache::new(32);
        let first = cache.row(5).unwrap();
        cache.row(30).unwrap();
        assert!(Arc::ptr_eq(&first, &cache.row(5).unwrap()));
    }
}
