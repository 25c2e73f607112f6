//! Exact rational linear algebra and linear programming.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no rounding anywhere. `lp_max`/`lp_min` return optimal primal *and* dual
//! points so that every verdict downstream carries a certificate checkable by
//! plain arithmetic.

// Elimination steps read one row while writing another; indexed loops are
// the clearest way to write that.
#![allow(clippy::needless_range_loop)]

mod simplex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Render as `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        QVector {
            entries: vec![Rational::zero(); dim],
        }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QVector {
            entries: entries.iter().map(|&x| rat_int(x)).collect(),
        }
    }

    pub fn ones(dim: usize) -> Self {
        QVector {
            entries: vec![Rational::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        let mut acc = Rational::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc += a * b;
        }
        acc
    }

    pub fn sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for a in &self.entries {
            acc += a;
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &QVector) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Componentwise `self >= other`.
    pub fn ge(&self, other: &QVector) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }

    /// Scale to an integer vector: returns (scaled entries, common denominator).
    pub fn to_integers(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for e in &self.entries {
            den = num_integer::lcm(den, e.denom().clone());
        }
        let ints = self
            .entries
            .iter()
            .map(|e| e.numer() * (&den / e.denom()))
            .collect();
        (ints, den)
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(e))?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
        }
        Ok(QMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> QVector {
        QVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `A * y` for a column vector `y` of length `cols`.
    pub fn mul_vec(&self, y: &QVector) -> QVector {
        assert_eq!(self.cols, y.dim());
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Rational::zero();
            for j in 0..self.cols {
                acc += self.get(i, j) * y.get(j);
            }
            out.push(acc);
        }
        QVector::new(out)
    }

    /// `x^T * A` for a row vector `x` of length `rows`.
    pub fn vec_mul(&self, x: &QVector) -> QVector {
        assert_eq!(self.rows, x.dim());
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut acc = Rational::zero();
            for i in 0..self.rows {
                acc += x.get(i) * self.get(i, j);
            }
            out.push(acc);
        }
        QVector::new(out)
    }

    /// Exact rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..self.cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solve the square system `self * x = rhs` exactly. `None` when the
    /// matrix is singular.
    pub fn solve_square(&self, rhs: &QVector) -> Option<QVector> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.dim());
        let n = self.rows;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(rhs.get(i).clone());
                row
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot_row);
            let pivot = m[col][col].clone();
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..=n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        Some(QVector::new((0..n).map(|i| &m[i][n] / &m[i][i]).collect()))
    }
}

/// Outcome of an exact LP solve. When optimal, both certificates are present
/// and the two objective values agree exactly.
#[derive(Clone, Debug)]
pub enum LpSolution {
    Optimal {
        value: Rational,
        primal: QVector,
        dual: QVector,
    },
    /// The primal is empty; `farkas` certifies it: for the max form,
    /// `farkas >= 0`, `farkas^T A >= 0` and `<farkas, b> < 0`.
    Infeasible {
        farkas: QVector,
    },
    Unbounded,
}

impl LpSolution {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpSolution::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpSolution::Optimal { .. })
    }
}

fn check_dims(a: &QMatrix, b: &QVector, c: &QVector) -> Result<()> {
    if a.rows() != b.dim() || a.cols() != c.dim() {
        return Err(Error::DimensionMismatch(format!(
            "LP data: A is {}x{}, b has {}, c has {}",
            a.rows(),
            a.cols(),
            b.dim(),
            c.dim()
        )));
    }
    Ok(())
}

/// Solve `max { <c, y> : y >= 0, A y <= b }` exactly.
///
/// The dual point solves `min { <b, x> : x >= 0, x^T A >= c^T }` and attains
/// the same value.
pub fn lp_max(a: &QMatrix, b: &QVector, c: &QVector) -> Result<LpSolution> {
    check_dims(a, b, c)?;
    Ok(simplex::solve_max(a, b, c))
}

/// Solve `min { <c, y> : y >= 0, A y >= b }` exactly, with a dual point for
/// `max { <b, x> : x >= 0, x^T A <= c^T }`.
pub fn lp_min(a: &QMatrix, b: &QVector, c: &QVector) -> Result<LpSolution> {
    check_dims(a, b, c)?;
    // min{cy : Ay >= b} = -max{(-c)y : (-A)y <= -b}; certificates carry over.
    let neg_a = QMatrix::from_rows(
        (0..a.rows())
            .map(|i| a.row(i).iter().map(|x| -x).collect())
            .collect(),
    )?;
    let neg_b = QVector::new(b.entries().iter().map(|x| -x).collect());
    let neg_c = QVector::new(c.entries().iter().map(|x| -x).collect());
    Ok(match simplex::solve_max(&neg_a, &neg_b, &neg_c) {
        LpSolution::Optimal {
            value,
            primal,
            dual,
        } => LpSolution::Optimal {
            value: -value,
            primal,
            dual,
        },
        LpSolution::Infeasible { farkas } => LpSolution::Infeasible { farkas },
        LpSolution::Unbounded => LpSolution::Unbounded,
    })
}

/// Exact rank of a rational matrix.
pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}
