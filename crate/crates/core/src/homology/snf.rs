//! Smith diagonalization of integer matrices.
//!
//! Elimination runs on `i64` with checked arithmetic; any overflow restarts
//! the whole computation on `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Scalar:
    Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64>
{
}

impl<T> Scalar for T where T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64>
{}

/// Dense row-major integer matrix.
#[derive(Clone, Debug)]
pub(crate) struct Dense<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Dense {
            rows,
            cols,
            data: entries.iter().map(|&x| T::from(x)).collect(),
        }
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src], touching columns `from..`.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for c in from..self.cols {
            let s = &self.data[src * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let prod = q.checked_mul(s).ok_or(Overflow)?;
            let d = &self.data[dst * self.cols + c];
            let v = d.checked_sub(&prod).ok_or(Overflow)?;
            self.data[dst * self.cols + c] = v;
        }
        Ok(())
    }

    /// col[dst] -= q * col[src], touching rows `from..`.
    fn col_axpy(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for r in from..self.rows {
            let s = &self.data[r * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let prod = q.checked_mul(s).ok_or(Overflow)?;
            let d = &self.data[r * self.cols + dst];
            let v = d.checked_sub(&prod).ok_or(Overflow)?;
            self.data[r * self.cols + dst] = v;
        }
        Ok(())
    }

    /// Position of a nonzero entry of least absolute value in the lower-right
    /// block starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((br, bc)) => v.abs() < self.at(br, bc).abs(),
                };
                if better {
                    best = Some((r, c));
                    if v.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }
}

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// `d_1 | d_2 | ...`, all positive.
pub(crate) fn invariant_factors<T: Scalar>(mut m: Dense<T>) -> Result<Vec<T>, Overflow> {
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.rows.min(m.cols) {
        let Some((pr, pc)) = m.min_pivot(t) else {
            break;
        };
        m.swap_rows(t, pr);
        m.swap_cols(t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..m.rows {
                if m.at(r, t).is_zero() {
                    continue;
                }
                let q = m.at(r, t).div_floor(m.at(t, t));
                m.row_axpy(r, t, &q, t)?;
                dirty |= !m.at(r, t).is_zero();
            }
            for c in t + 1..m.cols {
                if m.at(t, c).is_zero() {
                    continue;
                }
                let q = m.at(t, c).div_floor(m.at(t, t));
                m.col_axpy(c, t, &q, t)?;
                dirty |= !m.at(t, c).is_zero();
            }
            if dirty {
                // a smaller remainder sits in row or column t; promote it
                let mut best = (t, t);
                for r in t + 1..m.rows {
                    let v = m.at(r, t);
                    if !v.is_zero() && v.abs() < m.at(best.0, best.1).abs() {
                        best = (r, t);
                    }
                }
                for c in t + 1..m.cols {
                    let v = m.at(t, c);
                    if !v.is_zero() && v.abs() < m.at(best.0, best.1).abs() {
                        best = (t, c);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
                continue;
            }
            // divisibility: every remaining entry must be a multiple of the pivot
            let pivot = m.at(t, t).clone();
            let bad_row = (t + 1..m.rows)
                .find(|&r| (t + 1..m.cols).any(|c| !m.at(r, c).is_multiple_of(&pivot)));
            match bad_row {
                Some(r) => {
                    let minus_one = T::from(-1);
                    m.row_axpy(t, r, &minus_one, t)?;
                }
                None => break,
            }
        }
        diag.push(m.at(t, t).abs());
        t += 1;
    }
    Ok(diag)
}

/// Invariant factors of an integer matrix given by rows of `i64`, with the
/// `BigInt` fallback. Factors that do not fit in `u64` are reported as `None`.
pub(crate) fn integer_invariant_factors(rows: usize, cols: usize, entries: &[i64]) -> Vec<Option<u64>> {
    match invariant_factors(Dense::<i64>::from_i64(rows, cols, entries)) {
        Ok(d) => d.into_iter().map(|x| Some(x as u64)).collect(),
        Err(Overflow) => {
            let big = Dense::<BigInt>::from_i64(rows, cols, entries);
            invariant_factors(big)
                .expect("BigInt arithmetic cannot overflow")
                .into_iter()
                .map(|x| x.to_u64())
                .collect()
        }
    }
}
