use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};
use super::vector::QVector;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: Vec<QVector>,
    cols: usize,
}

/// Result of [`QMatrix::solve`] for a consistent system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinearSolution {
    Unique(QVector),
    /// Every solution is `particular + Σ tᵢ·null_basis[i]`.
    Family {
        particular: QVector,
        null_basis: Vec<QVector>,
    },
}

impl LinearSolution {
    pub fn particular(&self) -> &QVector {
        match self {
            LinearSolution::Unique(x) => x,
            LinearSolution::Family { particular, .. } => particular,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, LinearSolution::Unique(_))
    }
}

impl QMatrix {
    pub fn from_rows(rows: Vec<QVector>) -> Result<Self> {
        let cols = rows.first().map(QVector::dim).unwrap_or(0);
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.dim(),
            });
        }
        Ok(QMatrix { rows, cols })
    }

    /// A matrix with no rows but a known column count.
    pub fn empty(cols: usize) -> Self {
        QMatrix {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| QVector::from_ints(r)).collect())
            .expect("rectangular literal")
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            rows: (0..n).map(|i| QVector::basis(n, i)).collect(),
            cols: n,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[QVector]) -> Result<Self> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &QVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.cols)
            .map(|j| QVector::new(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        QMatrix {
            rows,
            cols: self.rows.len(),
        }
    }

    pub fn mul_vec(&self, x: &QVector) -> QVector {
        debug_assert_eq!(x.dim(), self.cols);
        QVector::new(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.nrows(),
            });
        }
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| QVector::new(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Ok(QMatrix {
            rows,
            cols: other.cols,
        })
    }

    /// Exact rank via fraction-free (Bareiss) elimination on an integer copy.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(integer_row).collect();
        bareiss(&mut a, self.cols).0
    }

    /// Determinant of a square matrix, fraction-free.
    pub fn det(&self) -> Result<Rational> {
        if self.nrows() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: self.nrows(),
            });
        }
        if self.cols == 0 {
            return Ok(rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(self.cols);
        for r in &self.rows {
            let l = denominator_lcm(r);
            a.push(r.coords().iter().map(|c| (c * &l).to_integer()).collect());
            scale *= l;
        }
        let (rank, sign) = bareiss(&mut a, self.cols);
        if rank < self.cols {
            return Ok(rational::zero());
        }
        let last = a[self.cols - 1][self.cols - 1].clone() * sign;
        Ok(Rational::new(last, scale))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut a: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let pivots = rref_in_place(&mut a, self.cols);
        let rows = a.into_iter().map(QVector::new).collect();
        (
            QMatrix {
                rows,
                cols: self.cols,
            },
            pivots,
        )
    }

    /// Canonical basis of the right null space: one vector per free column,
    /// with a 1 in that column, read off the reduced echelon form.
    pub fn null_space(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        null_basis_from_rref(&r, &pivots, self.cols)
    }

    /// Solves `self · x = b`.
    pub fn solve(&self, b: &QVector) -> Result<LinearSolution> {
        if b.dim() != self.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                got: b.dim(),
            });
        }
        let mut a: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(b.coords())
            .map(|(r, bi)| {
                let mut row = r.coords().to_vec();
                row.push(bi.clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut a, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = a[i][self.cols].clone();
        }
        let particular = QVector::new(x);
        if pivots.len() == self.cols {
            return Ok(LinearSolution::Unique(particular));
        }
        let reduced = QMatrix {
            rows: a
                .into_iter()
                .map(|mut r| {
                    r.pop();
                    QVector::new(r)
                })
                .collect(),
            cols: self.cols,
        };
        Ok(LinearSolution::Family {
            particular,
            null_basis: null_basis_from_rref(&reduced, &pivots, self.cols),
        })
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        let n = self.cols;
        if self.nrows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.nrows(),
            });
        }
        let mut a: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.coords().to_vec();
                row.extend(QVector::basis(n, i).into_coords());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut a, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DependentVectors);
        }
        let rows = a
            .into_iter()
            .map(|r| QVector::new(r[n..].to_vec()))
            .collect();
        Ok(QMatrix { rows, cols: n })
    }

    /// Operator norm induced by ‖·‖∞: the largest absolute row sum.
    pub fn linf_norm(&self) -> Rational {
        self.rows
            .iter()
            .map(|r| r.coords().iter().fold(rational::zero(), |a, c| a + c.abs()))
            .fold(rational::zero(), |a, b| if b > a { b } else { a })
    }
}

fn denominator_lcm(v: &QVector) -> BigInt {
    v.coords()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
}

fn integer_row(v: &QVector) -> Vec<BigInt> {
    let l = denominator_lcm(v);
    v.coords().iter().map(|c| (c * &l).to_integer()).collect()
}

/// In-place Bareiss elimination. Returns the rank and the sign of the row
/// permutation. For a full-rank square input the last diagonal entry is the
/// determinant (before the sign correction).
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, i32) {
    let m = a.len();
    let mut r = 0;
    let mut sign = 1;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in (col + 1)..cols {
                let v = &pivot_row[col] * &row[j] - &row[col] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        r += 1;
    }
    (r, sign)
}

fn rref_in_place(a: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][col].recip();
        for x in &mut a[r][col..cols] {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..cols {
                row[j] = &row[j] - &f * &pivot_row[j];
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn null_basis_from_rref(r: &QMatrix, pivots: &[usize], cols: usize) -> Vec<QVector> {
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![rational::zero(); cols];
            v[free] = rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            QVector::new(v)
        })
        .collect()
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<QVector>::deserialize(d)?;
        QMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
