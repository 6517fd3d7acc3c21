//! Column rank over the prime fields GF(2), GF(3), GF(5) and GF(7).

use crate::error::{Error, Result};

/// Arithmetic in GF(p) for a small prime, backed by residue tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u8,
    inv: Vec<u8>,
}

impl PrimeField {
    pub fn new(p: u8) -> Result<Self> {
        if !matches!(p, 2 | 3 | 5 | 7) {
            return Err(Error::Undefined(format!(
                "field GF({p}) is not supported (use 2, 3, 5 or 7)"
            )));
        }
        let mut inv = vec![0u8; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| (a as u16 * *b as u16) % p as u16 == 1).unwrap();
        }
        Ok(PrimeField { p, inv })
    }

    pub fn order(&self) -> u8 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    /// Rank of the selected columns of a row-major matrix.
    ///
    /// Elimination pivots on the lowest available row index, so the result is
    /// deterministic.
    pub fn column_rank(&self, rows: &[Vec<u8>], columns: impl Iterator<Item = usize>) -> usize {
        let cols: Vec<usize> = columns.collect();
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let mut m: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        let n_rows = m.len();
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(pivot) = (rank..n_rows).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv[m[rank][c] as usize];
            for v in m[rank].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for r in 0..n_rows {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c];
                    let pivot_row = m[rank].clone();
                    for (v, p) in m[r].iter_mut().zip(pivot_row) {
                        *v = self.sub(*v, self.mul(f, p));
                    }
                }
            }
            rank += 1;
            if rank == n_rows {
                break;
            }
        }
        rank
    }
}
