//! Exact integer linear algebra for the cone engine: ranks, nullspace
//! vectors, unimodular row reduction for lattice saturation, and the
//! Hermite-diagonal used to enumerate fundamental-parallelepiped residues.

// Elimination steps read one row while writing another; indexed loops are
// the clearest way to write that.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lp::{QMatrix, QVector, Rational};

pub type IVec = Vec<BigInt>;

pub fn to_bigint_vec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Divide by the content, keeping the direction.
pub fn make_primitive(v: &mut IVec) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Rank over the rationals of a set of integer row vectors.
pub fn rank_int(rows: &[IVec], dim: usize) -> usize {
    let mut m: Vec<IVec> = rows.to_vec();
    let nrows = m.len();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            // Integer cross-multiplication elimination; growth is irrelevant
            // at the sizes handled here.
            let a = m[rank][col].clone();
            let b = m[r][col].clone();
            for c in 0..dim {
                let v = &m[r][c] * &a - &m[rank][c] * &b;
                m[r][c] = v;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// One primitive integer vector in the nullspace of the given rows.
/// Intended for systems whose nullity is exactly one.
pub fn nullspace_one(rows: &[IVec], dim: usize) -> Option<IVec> {
    let mat = QMatrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect()
            })
            .collect(),
    )
    .ok()?;
    // Reduced row echelon over the rationals.
    let mut m: Vec<Vec<Rational>> = (0..mat.rows()).map(|i| mat.row(i).to_vec()).collect();
    let nrows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for c in col..dim {
            m[rank][c] = &m[rank][c] / &pivot;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..dim {
                    let delta = &f * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_col = (0..dim).find(|c| !pivot_cols.contains(c))?;
    let mut sol = vec![Rational::zero(); dim];
    sol[free_col] = Rational::one();
    for &(r, c) in &pivots {
        sol[c] = -m[r][free_col].clone();
    }
    // Clear denominators and the content.
    let mut den = BigInt::one();
    for x in &sol {
        den = den.lcm(x.denom());
    }
    let mut out: IVec = sol.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    make_primitive(&mut out);
    if out.iter().all(|x| x.is_zero()) {
        None
    } else {
        Some(out)
    }
}

/// Unimodular row reduction: returns `(rank, linv)` where some unimodular `L`
/// takes the column matrix of `cols` to a form with nonzero rows exactly in
/// the first `rank` positions, and `linv` is `L^{-1}`. The first `rank`
/// columns of `linv` are then a lattice basis of span(cols) ∩ Z^dim.
pub fn saturation_basis(cols: &[IVec], dim: usize) -> (usize, Vec<IVec>) {
    // a[r][c]: matrix with the input vectors as columns.
    let k = cols.len();
    let mut a: Vec<IVec> = (0..dim)
        .map(|r| (0..k).map(|c| cols[c][r].clone()).collect())
        .collect();
    // linv kept column-major: linv_cols[j] is the j-th column.
    let mut linv_cols: Vec<IVec> = (0..dim)
        .map(|j| {
            let mut e = vec![BigInt::zero(); dim];
            e[j] = BigInt::one();
            e
        })
        .collect();

    let swap_rows = |a: &mut Vec<IVec>, linv: &mut Vec<IVec>, i: usize, j: usize| {
        a.swap(i, j);
        linv.swap(i, j);
    };
    // row_i += mu * row_j  =>  linv col_j -= mu * col_i
    let add_row = |a: &mut Vec<IVec>, linv: &mut Vec<IVec>, i: usize, j: usize, mu: &BigInt| {
        for c in 0..k {
            let v = &a[i][c] + mu * &a[j][c];
            a[i][c] = v;
        }
        for r in 0..dim {
            let v = &linv[j][r] - mu * &linv[i][r];
            linv[j][r] = v;
        }
    };

    let mut rank = 0;
    for col in 0..k {
        if rank == dim {
            break;
        }
        loop {
            // Pick the row at or below `rank` with smallest nonzero |entry|.
            let mut best: Option<usize> = None;
            for r in rank..dim {
                if a[r][col].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| a[r][col].abs() < a[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else {
                break;
            };
            if b != rank {
                swap_rows(&mut a, &mut linv_cols, rank, b);
            }
            let mut done = true;
            for r in rank + 1..dim {
                if a[r][col].is_zero() {
                    continue;
                }
                let mu = -(&a[r][col] / &a[rank][col]);
                add_row(&mut a, &mut linv_cols, r, rank, &mu);
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }
    let basis: Vec<IVec> = (0..rank).map(|j| linv_cols[j].clone()).collect();
    (rank, basis)
}

/// Diagonal of a column-style Hermite form of a nonsingular square integer
/// matrix (columns generate the lattice). The product of the diagonal is
/// |det|, and the box below the diagonal enumerates the residues.
pub fn hermite_diagonal(cols: &[IVec]) -> Option<Vec<BigInt>> {
    let r = cols.len();
    let mut a: Vec<IVec> = (0..r)
        .map(|row| (0..r).map(|c| cols[c][row].clone()).collect())
        .collect();
    for i in 0..r {
        loop {
            let mut best: Option<usize> = None;
            for c in i..r {
                if a[i][c].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| a[i][c].abs() < a[i][b].abs()) {
                    best = Some(c);
                }
            }
            let b = best?;
            if b != i {
                for row in a.iter_mut() {
                    row.swap(i, b);
                }
            }
            let mut done = true;
            for c in i + 1..r {
                if a[i][c].is_zero() {
                    continue;
                }
                let mu = -(&a[i][c] / &a[i][i]);
                for row in a.iter_mut() {
                    let v = &row[c] + &mu * &row[i];
                    row[c] = v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    Some((0..r).map(|i| a[i][i].abs()).collect())
}

/// Exact inverse of a nonsingular square integer matrix given by columns.
pub fn rational_inverse(cols: &[IVec]) -> Option<Vec<Vec<Rational>>> {
    let r = cols.len();
    let mat = QMatrix::from_rows(
        (0..r)
            .map(|row| {
                (0..r)
                    .map(|c| Rational::from_integer(cols[c][row].clone()))
                    .collect()
            })
            .collect(),
    )
    .ok()?;
    let mut inv_rows: Vec<Vec<Rational>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut e = vec![Rational::zero(); r];
        e[i] = Rational::one();
        // Column i of the inverse solves M x = e_i; collect as rows below.
        let x = mat.solve_square(&QVector::new(e))?;
        inv_rows.push(x.entries().to_vec());
    }
    // inv_rows[i] currently holds column i; transpose into row-major form.
    let mut out = vec![vec![Rational::zero(); r]; r];
    for (i, col) in inv_rows.iter().enumerate() {
        for (j, v) in col.iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    Some(out)
}
