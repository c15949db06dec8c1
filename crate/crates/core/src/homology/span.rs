//! Incremental column span over `Q`, kept as primitive integer vectors.

use num_bigint::BigInt;
use num_traits::Zero;

use super::snf::{Overflow, Scalar};

#[derive(Clone, Debug, Default)]
struct Echelon<T> {
    /// `(pivot, vector)`; vector `i` vanishes at the pivots of vectors `< i`.
    basis: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Echelon<T> {
    /// Reduces `v` against the basis. Returns the residue, zero iff `v` lies
    /// in the span.
    fn reduce(&self, mut v: Vec<T>) -> Result<Vec<T>, Overflow> {
        for (p, b) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let g = b[*p].gcd(&v[*p]);
            let scale_v = b[*p].div_floor(&g);
            let scale_b = v[*p].div_floor(&g);
            for (x, y) in v.iter_mut().zip(b) {
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let lhs = x.checked_mul(&scale_v).ok_or(Overflow)?;
                let rhs = y.checked_mul(&scale_b).ok_or(Overflow)?;
                *x = lhs.checked_sub(&rhs).ok_or(Overflow)?;
            }
            normalize(&mut v);
        }
        Ok(v)
    }

    fn push(&mut self, v: Vec<T>) {
        let p = v.iter().position(|x| !x.is_zero()).expect("nonzero residue");
        self.basis.push((p, v));
    }
}

fn normalize<T: Scalar>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g == T::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_floor(&g);
    }
}

/// Span of integer column vectors over the rationals.
#[derive(Clone, Debug)]
pub struct RationalSpan {
    len: usize,
    small: Option<Echelon<i64>>,
    big: Echelon<BigInt>,
}

impl RationalSpan {
    pub fn new(len: usize) -> Self {
        RationalSpan {
            len,
            small: Some(Echelon::default()),
            big: Echelon::default(),
        }
    }

    pub fn rank(&self) -> usize {
        match &self.small {
            Some(e) => e.basis.len(),
            None => self.big.basis.len(),
        }
    }

    pub fn dim(&self) -> usize {
        self.len
    }

    /// Is `v` in the span?
    pub fn contains(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.len);
        if let Some(e) = &self.small {
            match e.reduce(v.to_vec()) {
                Ok(r) => return r.iter().all(|x| x.is_zero()),
                Err(Overflow) => self.promote(),
            }
        }
        let r = self
            .big
            .reduce(v.iter().map(|&x| BigInt::from(x)).collect())
            .expect("BigInt cannot overflow");
        r.iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of the span; returns whether it was added.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.len);
        if let Some(e) = &mut self.small {
            match e.reduce(v.to_vec()) {
                Ok(r) => {
                    if r.iter().all(|x| x.is_zero()) {
                        return false;
                    }
                    e.push(r);
                    return true;
                }
                Err(Overflow) => self.promote(),
            }
        }
        let r = self
            .big
            .reduce(v.iter().map(|&x| BigInt::from(x)).collect())
            .expect("BigInt cannot overflow");
        if r.iter().all(|x| x.is_zero()) {
            return false;
        }
        self.big.push(r);
        true
    }

    fn promote(&mut self) {
        if let Some(e) = self.small.take() {
            self.big.basis = e
                .basis
                .into_iter()
                .map(|(p, v)| (p, v.into_iter().map(BigInt::from).collect()))
                .collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_dependence() {
        let mut s = RationalSpan::new(3);
        assert!(s.insert(&[1, 2, 3]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(s.contains(&[2, 5, 7]));
        assert!(!s.insert(&[2, 5, 7]));
        assert!(s.insert(&[0, 0, 5]));
        assert_eq!(s.rank(), 3);
        assert!(s.contains(&[9, -4, 11]));
    }

    #[test]
    fn promotion_keeps_answers() {
        let mut s = RationalSpan::new(2);
        let big = i64::MAX / 2;
        assert!(s.insert(&[big, big - 1]));
        // reducing this against the first vector overflows i64
        assert!(s.insert(&[big - 3, big - 5]));
        assert_eq!(s.rank(), 2);
        assert!(s.small.is_none());
        assert!(s.contains(&[1, 1]));
    }
}
