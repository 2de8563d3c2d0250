//! Exact rank computation for the small dense boundary matrices arising
//! from Koszul subcomplexes.  Entries are ±1; dimensions are decided
//! exactly, over the integers (characteristic 0) or modulo a prime.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::Field;

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Matrix product, used by the complex self-checks (D∘D = 0).
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: Field) -> usize {
        match field.characteristic() {
            0 => rank_bigint(self),
            p => rank_mod_p(self, p as u64),
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss) over arbitrary-precision
/// integers; exact for any matrix size.
fn rank_bigint(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..m.cols {
        // Pick the pivot with smallest magnitude to limit growth.
        let pivot = (row..m.rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].abs());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in row + 1..m.rows {
            for c in col + 1..m.cols {
                let v = (&a[row][col] * &a[r][c] - &a[r][col] * &a[row][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == m.rows {
            break;
        }
    }
    rank
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let reduce = |v: i64| -> u64 {
        let r = v.rem_euclid(p as i64);
        r as u64
    };
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| reduce(m.get(r, c))).collect())
        .collect();
    let inv = |x: u64| -> u64 { mod_pow(x, p - 2, p) };
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m.cols {
        let Some(piv) = (row..m.rows).find(|&r| a[r][col] % p != 0) else {
            continue;
        };
        a.swap(row, piv);
        let pinv = inv(a[row][col] % p);
        for c in col..m.cols {
            a[row][c] = mod_mul(a[row][c], pinv, p);
        }
        for r in 0..m.rows {
            if r == row || a[r][col] == 0 {
                continue;
            }
            let factor = a[r][col];
            for c in col..m.cols {
                let sub = mod_mul(factor, a[row][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        row += 1;
        if row == m.rows {
            break;
        }
    }
    rank
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}
