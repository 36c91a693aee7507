//! Smith normal form over the integers.
//!
//! Elimination always pivots on the entry of smallest nonzero absolute value in
//! the remaining submatrix. Every row operation is mirrored into `u` and every
//! column operation into `v`, so `u·a·v = d` holds by construction.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use super::rational::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    /// Diagonal entries of `d`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<Integer> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<Integer> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pr, pc)) = smallest_nonzero(&d, t) else {
                return SnfResult { u, d, v };
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for r in t + 1..m {
                let q = d.get(r, t).div_floor(&pivot);
                if !q.is_zero() {
                    add_row_multiple(&mut d, r, t, &-q.clone());
                    add_row_multiple(&mut u, r, t, &-q);
                }
                clean &= d.get(r, t).is_zero();
            }
            for c in t + 1..n {
                let q = d.get(t, c).div_floor(&pivot);
                if !q.is_zero() {
                    add_col_multiple(&mut d, c, t, &-q.clone());
                    add_col_multiple(&mut v, c, t, &-q);
                }
                clean &= d.get(t, c).is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot isolated; it must also divide the rest before we move on.
            let offender = (t + 1..m)
                .flat_map(|r| (t + 1..n).map(move |c| (r, c)))
                .find(|&(r, c)| !d.get(r, c).is_multiple_of(&pivot));
            match offender {
                Some((r, _)) => {
                    add_row_multiple(&mut d, t, r, &Integer::one());
                    add_row_multiple(&mut u, t, r, &Integer::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    SnfResult { u, d, v }
}

fn smallest_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Integer)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let x = d.get(r, c);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((r, c), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// row[dst] += k·row[src]
fn add_row_multiple(m: &mut IntegerMatrix, dst: usize, src: usize, k: &Integer) {
    for c in 0..m.cols() {
        let delta = m.get(src, c) * k;
        *m.get_mut(dst, c) += delta;
    }
}

/// col[dst] += k·col[src]
fn add_col_multiple(m: &mut IntegerMatrix, dst: usize, src: usize, k: &Integer) {
    for r in 0..m.rows() {
        let delta = m.get(r, src) * k;
        *m.get_mut(r, dst) += delta;
    }
}

fn negate_row(m: &mut IntegerMatrix, r: usize) {
    for c in 0..m.cols() {
        let x = -m.get(r, c).clone();
        m.set(r, c, x);
    }
}

impl IntegerMatrix {
    pub fn smith_normal_form(&self) -> SnfResult {
        smith_normal_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn check(a: &IntegerMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(
                w[0].is_zero() && w[1].is_zero()
                    || !w[0].is_zero() && (w[1].is_zero() || w[1].is_multiple_of(&w[0]))
            );
            assert!(!w[0].is_negative());
        }
        s
    }

    fn factors(s: &SnfResult) -> Vec<i64> {
        s.invariant_factors().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn identity() {
        let s = check(&IntegerMatrix::identity(3));
        assert_eq!(s.d, IntegerMatrix::identity(3));
    }

    #[test]
    fn two_by_two() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(factors(&s), vec![2, 4]);
    }

    #[test]
    fn single_row() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[0, 0, 3]]));
        assert_eq!(factors(&s), vec![3]);
    }

    #[test]
    fn negative_and_empty() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[0, 0, -2]]));
        assert_eq!(factors(&s), vec![2]);
        let e = check(&IntegerMatrix::zeros(0, 3));
        assert!(e.invariant_factors().is_empty());
        let z = check(&IntegerMatrix::zeros(2, 2));
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is diagonal but not in normal form: expect (1, 6).
        let s = check(&IntegerMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(factors(&s), vec![1, 6]);
    }
}
