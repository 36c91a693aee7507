//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::matrix::{RationalMatrix, Vector};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced row echelon form together with the pivot column of each nonzero row.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a.get(row, col).recip();
        for c in col..a.cols() {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows() {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols() {
                let v = a.get(r, c) - &factor * a.get(row, c);
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).1.len()
}

/// Exact determinant; the empty matrix has determinant 1.
pub fn determinant(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        for r in col + 1..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col) / &pivot;
            for c in col..n {
                let v = a.get(r, c) - &factor * a.get(col, c);
                a.set(r, c, v);
            }
        }
        det *= pivot;
    }
    Ok(det)
}

/// Basis of the null space, one vector per free column of the echelon form.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// Basis of the column space: the pivot columns of `m` itself.
pub fn image_basis(m: &RationalMatrix) -> Vec<Vector> {
    rref(m).1.into_iter().map(|c| m.column(c)).collect()
}

/// Some `w` with `m·w = v`; free variables are set to zero.
pub fn preimage(m: &RationalMatrix, v: &[Rational]) -> Result<Vector> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "target vector has length {}, matrix has {} rows",
            v.len(),
            m.rows()
        )));
    }
    let mut aug = RationalMatrix::zeros(m.rows(), m.cols() + 1);
    aug.put_block(0, 0, m);
    for (i, x) in v.iter().enumerate() {
        aug.set(i, m.cols(), x.clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Err(Error::NotInImage);
    }
    let mut w = vec![Rational::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        w[p] = r.get(row, m.cols()).clone();
    }
    Ok(w)
}

pub fn inverse(m: &RationalMatrix) -> Result<Option<RationalMatrix>> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut aug = RationalMatrix::zeros(n, 2 * n);
    aug.put_block(0, 0, m);
    aug.put_block(0, n, &RationalMatrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return Ok(None);
    }
    let mut inv = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Ok(Some(inv))
}

impl RationalMatrix {
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn determinant(&self) -> Result<Rational> {
        determinant(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        kernel_basis(self)
    }

    pub fn image_basis(&self) -> Vec<Vector> {
        image_basis(self)
    }

    pub fn preimage(&self, v: &[Rational]) -> Result<Vector> {
        preimage(self, v)
    }

    pub fn inverse(&self) -> Result<Option<RationalMatrix>> {
        inverse(self)
    }
}
