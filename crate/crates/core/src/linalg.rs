//! Exact matrix ranks over the rationals and over prime fields. Floating
//! point is never used: homology dimensions must be exact.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense integer matrix, row major.
#[derive(Clone)]
pub(crate) struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }
}

/// Rank over Q (char 0) or GF(p).
pub(crate) fn rank(m: &IntMatrix, characteristic: u32) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    if characteristic == 0 {
        match rank_bareiss_i128(m) {
            Some(r) => r,
            // entry growth overflowed i128; redo with arbitrary precision
            None => rank_bareiss_bigint(m),
        }
    } else {
        rank_mod_p(m, u64::from(characteristic))
    }
}

/// Fraction-free Gaussian elimination (Bareiss) over i128 with overflow
/// checks. Division by the previous pivot is exact.
fn rank_bareiss_i128(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<i128> = m.data.iter().map(|&v| i128::from(v)).collect();
    let at = |a: &[i128], r: usize, c: usize| a[r * cols + c];
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut row_perm: Vec<usize> = (0..rows).collect();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    while rank < rows && rank < cols {
        // full pivot search over the remaining block
        let mut pivot = None;
        'search: for i in rank..rows {
            for j in rank..cols {
                if at(&a, row_perm[i], col_perm[j]) != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_perm.swap(rank, pi);
        col_perm.swap(rank, pj);
        let piv = at(&a, row_perm[rank], col_perm[rank]);
        for i in rank + 1..rows {
            for j in rank + 1..cols {
                let num = piv
                    .checked_mul(at(&a, row_perm[i], col_perm[j]))?
                    .checked_sub(
                        at(&a, row_perm[i], col_perm[rank])
                            .checked_mul(at(&a, row_perm[rank], col_perm[j]))?,
                    )?;
                a[row_perm[i] * cols + col_perm[j]] = num / prev;
            }
            a[row_perm[i] * cols + col_perm[rank]] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<BigInt> = m.data.iter().map(|&v| BigInt::from(v)).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row_perm: Vec<usize> = (0..rows).collect();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    while rank < rows && rank < cols {
        let mut pivot = None;
        'search: for i in rank..rows {
            for j in rank..cols {
                if !a[row_perm[i] * cols + col_perm[j]].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_perm.swap(rank, pi);
        col_perm.swap(rank, pj);
        let piv = a[row_perm[rank] * cols + col_perm[rank]].clone();
        for i in rank + 1..rows {
            let head = a[row_perm[i] * cols + col_perm[rank]].clone();
            for j in rank + 1..cols {
                let num = &piv * &a[row_perm[i] * cols + col_perm[j]]
                    - &head * &a[row_perm[rank] * cols + col_perm[j]];
                a[row_perm[i] * cols + col_perm[j]] = num / &prev;
            }
            a[row_perm[i] * cols + col_perm[rank]] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<u64> = m.data.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| a[r * cols + col] % p != 0) else {
            continue;
        };
        for c in 0..cols {
            a.swap(rank * cols + c, pivot_row * cols + c);
        }
        let inv = mod_inverse(a[rank * cols + col], p);
        for c in col..cols {
            a[rank * cols + c] = a[rank * cols + c] * inv % p;
        }
        for r in 0..rows {
            if r != rank && a[r * cols + col] % p != 0 {
                let factor = a[r * cols + col] % p;
                for c in col..cols {
                    let sub = factor * a[rank * cols + c] % p;
                    a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // Fermat: p is prime and x != 0 mod p
    mod_pow(x % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.wrapping_mul(base) % p;
        }
        base = base.wrapping_mul(base) % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
