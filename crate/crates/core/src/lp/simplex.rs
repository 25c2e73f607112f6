//! Two-phase primal simplex over exact rationals with Bland's pivot rule.
//!
//! Bland's rule never cycles, so the solver terminates on every input, and
//! the fixed rule makes results deterministic. The tableau keeps explicit
//! slack columns; at optimality the objective-row entries over them are the
//! optimal dual point (and, in phase one, the Farkas certificate).

// Elimination steps read one row while writing another; indexed loops are
// the clearest way to write that.
#![allow(clippy::needless_range_loop)]

use num_traits::{Signed, Zero};

use super::{LpSolution, QMatrix, QVector, Rational};

struct Tableau {
    m: usize,
    ncols: usize,
    /// `m` rows of length `ncols + 1`; the last entry is the rhs.
    rows: Vec<Vec<Rational>>,
    /// Objective row `z_j - c_j`, last entry is the current objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

enum End {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let pivot = self.rows[r][e].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..self.m {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let factor = self.rows[i][e].clone();
            for j in 0..=self.ncols {
                let delta = &factor * &self.rows[r][j];
                self.rows[i][j] -= delta;
            }
        }
        if !self.obj[e].is_zero() {
            let factor = self.obj[e].clone();
            for j in 0..=self.ncols {
                let delta = &factor * &self.rows[r][j];
                self.obj[j] -= delta;
            }
        }
        self.basis[r] = e;
    }

    fn run_bland(&mut self, enterable: usize) -> End {
        loop {
            let Some(e) = (0..enterable).find(|&j| self.obj[j].is_negative()) else {
                return End::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.m {
                if !self.rows[r][e].is_positive() {
                    continue;
                }
                let ratio = &self.rows[r][self.ncols] / &self.rows[r][e];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return End::Unbounded,
            }
        }
    }

    /// Recompute the objective row for cost vector `c` (length `ncols`).
    fn set_objective(&mut self, c: &[Rational]) {
        for j in 0..=self.ncols {
            let mut z = Rational::zero();
            for r in 0..self.m {
                let cb = &c[self.basis[r]];
                if !cb.is_zero() {
                    z += cb * &self.rows[r][j];
                }
            }
            if j < self.ncols {
                z -= &c[j];
            }
            self.obj[j] = z;
        }
    }
}

/// Solve `max { <c, y> : y >= 0, A y <= b }`.
pub(super) fn solve_max(a: &QMatrix, b: &QVector, c: &QVector) -> LpSolution {
    let n = a.cols();
    let m = a.rows();
    let negative_rows: Vec<usize> = (0..m).filter(|&i| b.get(i).is_negative()).collect();
    let nart = negative_rows.len();
    let art_start = n + m;
    let ncols = n + m + nart;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_no = 0;
    for i in 0..m {
        let mut row = vec![Rational::zero(); ncols + 1];
        let negate = b.get(i).is_negative();
        for j in 0..n {
            row[j] = if negate {
                -a.get(i, j)
            } else {
                a.get(i, j).clone()
            };
        }
        row[n + i] = if negate {
            -Rational::from_integer(1.into())
        } else {
            Rational::from_integer(1.into())
        };
        row[ncols] = if negate { -b.get(i) } else { b.get(i).clone() };
        if negate {
            row[art_start + art_no] = Rational::from_integer(1.into());
            basis.push(art_start + art_no);
            art_no += 1;
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }

    let mut t = Tableau {
        m,
        ncols,
        rows,
        obj: vec![Rational::zero(); ncols + 1],
        basis,
    };

    if nart > 0 {
        // Phase one: maximize minus the sum of artificials.
        let mut c1 = vec![Rational::zero(); ncols];
        for j in art_start..ncols {
            c1[j] = -Rational::from_integer(1.into());
        }
        t.set_objective(&c1);
        match t.run_bland(ncols) {
            End::Optimal => {}
            End::Unbounded => unreachable!("phase-one objective is bounded by zero"),
        }
        if t.obj[t.ncols].is_negative() {
            // Farkas certificate read off the slack columns of the objective
            // row: x >= 0, x^T A >= 0, <x, b> = phase-one value < 0.
            let farkas = QVector::new((0..m).map(|i| t.obj[n + i].clone()).collect());
            debug_assert!(farkas.is_nonnegative());
            debug_assert!(a.vec_mul(&farkas).is_nonnegative());
            debug_assert!(farkas.dot(b).is_negative());
            return LpSolution::Infeasible { farkas };
        }
        // Drive leftover artificials out of the basis; rows with no
        // non-artificial support are redundant and stay inert.
        for r in 0..m {
            if t.basis[r] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, j);
                }
            }
        }
    }

    let mut c2 = vec![Rational::zero(); ncols];
    c2[..n].clone_from_slice(c.entries());
    t.set_objective(&c2);
    match t.run_bland(art_start) {
        End::Unbounded => LpSolution::Unbounded,
        End::Optimal => {
            let mut primal = vec![Rational::zero(); n];
            for r in 0..m {
                if t.basis[r] < n {
                    primal[t.basis[r]] = t.rows[r][t.ncols].clone();
                }
            }
            let primal = QVector::new(primal);
            let dual = QVector::new((0..m).map(|i| t.obj[n + i].clone()).collect());
            let value = t.obj[t.ncols].clone();
            debug_assert!(primal.is_nonnegative());
            debug_assert!(a.mul_vec(&primal).le(b));
            debug_assert!(dual.is_nonnegative());
            debug_assert!(a.vec_mul(&dual).ge(c));
            debug_assert_eq!(c.dot(&primal), value);
            debug_assert_eq!(b.dot(&dual), value);
            LpSolution::Optimal {
                value,
                primal,
                dual,
            }
        }
    }
}
