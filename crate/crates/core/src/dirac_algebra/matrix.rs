use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix4 as NMatrix4;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symcore::GaussianRational;
use crate::{Error, Result};

/// Dense 4×4 matrix with exact Gaussian-rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix4 {
    entries: [[GaussianRational; 4]; 4],
}

impl Matrix4 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        Self { entries: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))) }
    }

    /// Build from `(re, im)` integer pairs, row-major.
    pub fn from_int_pairs(rows: [[(i64, i64); 4]; 4]) -> Self {
        Self::from_fn(|r, c| GaussianRational::from_ints(rows[r][c].0, rows[r][c].1))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| GaussianRational::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { GaussianRational::one() } else { GaussianRational::zero() })
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &GaussianRational {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[[GaussianRational; 4]; 4] {
        &self.entries
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_fn(|r, col| &self.entries[r][col] * c)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GaussianRational::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_unitary(&self) -> bool {
        (self * &self.adjoint()) == Self::identity()
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vec<GaussianRational> {
        self.entries.iter().flatten().cloned().collect()
    }

    pub fn first_nonzero(&self) -> Option<&GaussianRational> {
        self.entries.iter().flatten().find(|e| !e.is_zero())
    }

    pub fn to_complex(&self) -> NMatrix4<Complex64> {
        NMatrix4::from_fn(|r, c| self.entries[r][c].to_complex64())
    }

    /// Row-major text grid of `a+bi` entries.
    pub fn to_string_rows(&self) -> [[String; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c].to_string()))
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(Error::Parse("matrix must be 4×4".into()));
        }
        let mut parsed = Vec::with_capacity(16);
        for s in rows.iter().flatten() {
            parsed.push(s.parse::<GaussianRational>()?);
        }
        let mut it = parsed.into_iter();
        Ok(Self::from_fn(|_, _| it.next().expect("16 entries")))
    }
}

impl Mul<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4::from_fn(|r, c| (0..4).map(|k| &self.entries[r][k] * &rhs.entries[k][c]).sum())
    }
}

impl Add<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4::from_fn(|r, c| &self.entries[r][c] + &rhs.entries[r][c])
    }
}

impl Sub<&Matrix4> for &Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4::from_fn(|r, c| &self.entries[r][c] - &rhs.entries[r][c])
    }
}

impl Neg for &Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        Matrix4::from_fn(|r, c| -&self.entries[r][c])
    }
}

impl Mul<Matrix4> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        &self * &rhs
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (idx, row) in cells.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix4 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Matrix4::from_string_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Exact rank of a list of row vectors over the Gaussian rationals.
pub fn exact_rank(rows: &[Vec<GaussianRational>]) -> usize {
    let mut m: Vec<Vec<GaussianRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<GaussianRational> = m[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(p * &factor);
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary_and_hermitian() {
        let id = Matrix4::identity();
        assert!(id.is_unitary());
        assert!(id.is_hermitian());
        assert_eq!(&id * &id, id);
    }

    #[test]
    fn rank_detects_dependence() {
        let one = GaussianRational::one;
        let zero = GaussianRational::zero;
        let i = GaussianRational::i;
        let rows = vec![vec![one(), i(), zero()], vec![i(), -one(), zero()], vec![zero(), zero(), one()]];
        // second row = i·first row
        assert_eq!(exact_rank(&rows), 2);
        assert_eq!(exact_rank(&[]), 0);
    }

    #[test]
    fn string_rows_round_trip() {
        let m = Matrix4::from_int_pairs([
            [(1, 0), (0, 1), (0, 0), (2, -3)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (-1, 0), (0, 0)],
            [(0, -1), (0, 0), (0, 0), (1, 1)],
        ]);
        let json = serde_json::to_string(&m).unwrap();
        let back: Matrix4 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_wrong_shape() {
        let rows = vec![vec!["1".to_string(); 4]; 3];
        assert!(Matrix4::from_string_rows(&rows).is_err());
    }
}
