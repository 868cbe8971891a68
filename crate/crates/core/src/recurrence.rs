//! The triangle `v(n, k)`, `1 <= k <= n`, in exact arithmetic.
//!
//! ```text
//! v(n, n) = 1
//! v(n, 1) = sum_{i=1}^{n-1} v(n-1, i)                                  n >= 2
//! v(n, k) = sum_{i=k}^{n-1} v(n-1, i)
//!         + sum_{i=k+1}^{n} sum_{d=2}^{k} C(k-2, d-2) v(n-d, i-d)      2 <= k <= n-1
//! ```
//!
//! Row `n` only reads rows `n-1, ..., n-k`, so rows are filled in order and
//! the whole triangle is kept. Row sums are the Bessel numbers.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTable {
    // rows[n - 1][k - 1] = v(n, k)
    rows: Vec<Vec<BigUint>>,
}

impl VTable {
    pub fn new(n_max: u32) -> Self {
        let mut table = VTable { rows: Vec::with_capacity(n_max as usize) };
        let mut pascal = Pascal::default();
        for n in 1..=n_max {
            let row = table.next_row(n, &mut pascal);
            table.rows.push(row);
        }
        table
    }

    #[allow(clippy::needless_range_loop)]
    fn next_row(&self, n: u32, pascal: &mut Pascal) -> Vec<BigUint> {
        let n = n as usize;
        if n == 1 {
            return vec![BigUint::one()];
        }
        let prev = &self.rows[n - 2];
        // suffix[i] = sum_{j >= i} v(n-1, j), 1-based i, suffix[n] = 0
        let mut suffix = vec![BigUint::zero(); n + 1];
        for i in (1..n).rev() {
            suffix[i] = &suffix[i + 1] + &prev[i - 1];
        }
        let mut row = Vec::with_capacity(n);
        row.push(suffix[1].clone());
        for k in 2..n {
            let mut v = suffix[k].clone();
            for d in 2..=k {
                let c = pascal.get(k - 2, d - 2);
                let lower = &self.rows[n - d - 1];
                let mut inner = BigUint::zero();
                for i in k + 1..=n {
                    inner += &lower[i - d - 1];
                }
                v += c * inner;
            }
            row.push(v);
        }
        row.push(BigUint::one());
        row
    }

    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn get(&self, n: u32, k: u32) -> Option<&BigUint> {
        if k == 0 || k > n {
            return None;
        }
        self.rows.get(n as usize - 1)?.get(k as usize - 1)
    }

    /// `v(n, 1), ..., v(n, n)`.
    pub fn row(&self, n: u32) -> Option<&[BigUint]> {
        self.rows.get((n as usize).checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn row_sum(&self, n: u32) -> Option<BigUint> {
        self.row(n).map(|r| r.iter().sum())
    }

    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Serializes as `{"n_max": .., "rows": [[".."]], "row_sums": [".."]}` with decimal strings.
impl Serialize for VTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(BigUint::to_string).collect()).collect();
        let sums: Vec<String> = self.row_sums().iter().map(BigUint::to_string).collect();
        let mut st = s.serialize_struct("VTable", 3)?;
        st.serialize_field("n_max", &self.n_max())?;
        st.serialize_field("rows", &rows)?;
        st.serialize_field("row_sums", &sums)?;
        st.end()
    }
}

/// Memoized Pascal triangle.
#[derive(Debug, Default)]
struct Pascal {
    rows: Vec<Vec<BigUint>>,
}

impl Pascal {
    fn get(&mut self, a: usize, b: usize) -> &BigUint {
        while self.rows.len() <= a {
            let next = match self.rows.last() {
                None => vec![BigUint::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigUint::one());
                    row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
                    row.push(BigUint::one());
                    row
                }
            };
            self.rows.push(next);
        }
        &self.rows[a][b]
    }
}

pub fn v_table(n_max: u32) -> VTable {
    VTable::new(n_max)
}

pub fn v_compute(n: u32, k: u32) -> Result<BigUint> {
    if k < 1 || k > n {
        return Err(Error::Domain { n, k });
    }
    Ok(VTable::new(n).get(n, k).expect("within triangle").clone())
}

/// Bessel number: the number of nonoverlapping partitions of `[n]`. `bessel(0) = 1`.
pub fn bessel(n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    VTable::new(n).row_sum(n).expect("row n exists")
}

/// `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut c = BigUint::one();
    for i in 0..b {
        c *= a - i;
        c /= i + 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    const PAPER_TABLE: [&[u32]; 7] = [
        &[1],
        &[1, 1],
        &[2, 2, 1],
        &[5, 5, 3, 1],
        &[14, 14, 9, 5, 1],
        &[43, 43, 29, 18, 9, 1],
        &[143, 143, 100, 66, 39, 17, 1],
    ];

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_compute(7, 5).unwrap(), big(39));
        assert_eq!(v_compute(6, 1).unwrap(), big(43));
        assert_eq!(v_compute(4, 4).unwrap(), big(1));
        assert_eq!(v_compute(4, 2).unwrap(), big(5));
        assert_eq!(v_compute(4, 0), Err(Error::Domain { n: 4, k: 0 }));
        assert_eq!(v_compute(4, 5), Err(Error::Domain { n: 4, k: 5 }));
    }

    #[test]
    fn reproduces_table() {
        let t = v_table(7);
        for (n, expected) in PAPER_TABLE.iter().enumerate() {
            let row: Vec<BigUint> = expected.iter().map(|&v| big(v)).collect();
            assert_eq!(t.row(n as u32 + 1).unwrap(), row.as_slice(), "row {}", n + 1);
        }
        assert_eq!(v_table(1).row(1).unwrap(), &[big(1)]);
        assert_eq!(v_table(3).rows().count(), 3);
    }

    #[test]
    fn bessel_values() {
        assert_eq!(bessel(7), big(509));
        assert_eq!(bessel(1), big(1));
        assert_eq!(bessel(0), big(1));
        // A006789
        let t = v_table(12);
        let expected = [1u64, 2, 5, 14, 43, 143, 509, 1922, 7651, 31965, 139685, 636712];
        for (n, &e) in (1..=12).zip(&expected) {
            assert_eq!(t.row_sum(n).unwrap(), BigUint::from(e), "n = {n}");
        }
    }

    #[test]
    fn first_column_is_previous_bessel() {
        let t = v_table(12);
        for n in 2..=12 {
            assert_eq!(t.get(n, 1).unwrap(), &t.row_sum(n - 1).unwrap());
        }
    }

    #[test]
    fn first_two_columns_agree() {
        let t = v_table(12);
        for n in 2..=12 {
            assert_eq!(t.get(n, 1), t.get(n, 2), "n = {n}");
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 3), big(0));
        let mut pascal = Pascal::default();
        for a in 0..30u64 {
            for b in 0..=a {
                assert_eq!(&binomial(a, b), pascal.get(a as usize, b as usize));
            }
        }
    }

    /// Top-down evaluation with the double sum taken d-outer and i descending.
    fn v_top_down(n: usize, k: usize, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
        if let Some(v) = memo.get(&(n, k)) {
            return v.clone();
        }
        let v = if k == n {
            BigUint::one()
        } else if k == 1 {
            (1..n).rev().map(|i| v_top_down(n - 1, i, memo)).sum()
        } else {
            let mut acc = BigUint::zero();
            for d in (2..=k).rev() {
                let c = binomial((k - 2) as u64, (d - 2) as u64);
                for i in (k + 1..=n).rev() {
                    acc += &c * v_top_down(n - d, i - d, memo);
                }
            }
            for i in (k..n).rev() {
                acc += v_top_down(n - 1, i, memo);
            }
            acc
        };
        memo.insert((n, k), v.clone());
        v
    }

    #[test]
    fn exact_at_n40() {
        let t = v_table(40);
        let mut memo = HashMap::new();
        for k in [1, 2, 17, 39] {
            let v = t.get(40, k as u32).unwrap();
            assert_eq!(v, &v_top_down(40, k, &mut memo));
        }
        // well past u64
        assert!(t.row_sum(40).unwrap().bits() > 64);
    }

    #[test]
    fn entries_positive_and_diagonal_one() {
        let t = v_table(15);
        for n in 1..=15 {
            assert_eq!(t.get(n, n), Some(&big(1)));
            assert!(t.row(n).unwrap().iter().all(|v| !v.is_zero()));
        }
    }

    #[test]
    fn json_uses_decimal_strings() {
        let v = serde_json::to_value(v_table(3)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "n_max": 3,
                "rows": [["1"], ["1", "1"], ["2", "2", "1"]],
                "row_sums": ["1", "2", "5"],
            })
        );
    }
}
