//! Based chain complexes over the rationals and their invariants.
//!
//! Degree `i` has the standard basis of `Q^{degrees[i]}` as preferred basis.
//! `boundaries[j]` is the differential `d_{j+1}: C_{j+1} -> C_j`, so a complex
//! with degrees `0..=top` carries exactly `top` matrices.

mod integral;
mod tensor;
mod torsion;

pub use integral::{integral_homology, AbelianGroupDescription, IntegerChainComplex};
pub use tensor::tensor_product;
pub use torsion::{
    torsion, torsion_choice_independence_check, torsion_with_seed, BasisOrder, HomologyBasis, TorsionValue,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedChainComplex {
    degrees: Vec<usize>,
    boundaries: Vec<RationalMatrix>,
}

impl BasedChainComplex {
    /// Builds and validates a complex.
    pub fn new(degrees: Vec<usize>, boundaries: Vec<RationalMatrix>) -> Result<Self> {
        let c = Self { degrees, boundaries };
        c.validate()?;
        Ok(c)
    }

    /// Builds a complex without checking `d∘d = 0`. Shapes are still checked.
    pub fn new_unchecked(degrees: Vec<usize>, boundaries: Vec<RationalMatrix>) -> Result<Self> {
        let c = Self { degrees, boundaries };
        c.check_shapes()?;
        Ok(c)
    }

    /// Complex with the given ranks and all differentials zero.
    pub fn zero_differentials(degrees: Vec<usize>) -> Self {
        let boundaries =
            (1..degrees.len()).map(|i| RationalMatrix::zeros(degrees[i - 1], degrees[i])).collect();
        Self { degrees, boundaries }
    }

    /// A single point: `Q` in degree 0.
    pub fn point() -> Self {
        Self::zero_differentials(vec![1])
    }

    /// Cellular model of the circle: one 0-cell, one 1-cell.
    pub fn circle() -> Self {
        Self::zero_differentials(vec![1, 1])
    }

    /// Cellular model of the closed orientable surface of genus `g`.
    pub fn surface(g: usize) -> Self {
        if g == 0 {
            return Self::zero_differentials(vec![1, 0, 1]);
        }
        Self::zero_differentials(vec![1, 2 * g, 1])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    pub fn boundaries(&self) -> &[RationalMatrix] {
        &self.boundaries
    }

    /// `d_i: C_i -> C_{i-1}`, or `None` outside `1..=top`.
    pub fn boundary(&self, i: usize) -> Option<&RationalMatrix> {
        i.checked_sub(1).and_then(|j| self.boundaries.get(j))
    }

    pub fn rank_of_boundary(&self, i: usize) -> usize {
        self.boundary(i).map_or(0, RationalMatrix::rank)
    }

    fn check_shapes(&self) -> Result<()> {
        if self.boundaries.len() + 1 != self.degrees.len().max(1) {
            return Err(Error::ShapeMismatch {
                degree: self.degrees.len(),
                detail: format!(
                    "{} degrees need {} boundary matrices, got {}",
                    self.degrees.len(),
                    self.degrees.len().saturating_sub(1),
                    self.boundaries.len()
                ),
            });
        }
        for (j, d) in self.boundaries.iter().enumerate() {
            let i = j + 1;
            if d.rows() != self.degrees[i - 1] || d.cols() != self.degrees[i] {
                return Err(Error::ShapeMismatch {
                    degree: i,
                    detail: format!(
                        "d_{i} is {}x{}, expected {}x{}",
                        d.rows(),
                        d.cols(),
                        self.degrees[i - 1],
                        self.degrees[i]
                    ),
                });
            }
        }
        Ok(())
    }

    /// Checks matrix shapes and `d_{i-1}∘d_i = 0`.
    pub fn validate(&self) -> Result<()> {
        self.check_shapes()?;
        for i in 2..self.degrees.len() {
            let comp = self.boundary(i - 1).unwrap().mul(self.boundary(i).unwrap())?;
            if !comp.is_zero() {
                return Err(Error::NotAComplex { degree: i });
            }
        }
        Ok(())
    }

    /// `b_i = dim ker d_i − rank d_{i+1}`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.degrees.len()).map(|i| self.rank_of_boundary(i)).collect();
        self.degrees.iter().enumerate().map(|(i, &n)| n - ranks[i] - ranks[i + 1]).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti_numbers().iter().all(Zero::is_zero)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.degrees)
    }

    /// Degreewise direct sum with block-diagonal differentials.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let len = self.degrees.len().max(other.degrees.len());
        let deg = |c: &Self, i: usize| c.degrees.get(i).copied().unwrap_or(0);
        let degrees = (0..len).map(|i| deg(self, i) + deg(other, i)).collect();
        let block = |c: &Self, i: usize| {
            c.boundary(i).cloned().unwrap_or_else(|| RationalMatrix::zeros(deg(c, i - 1), deg(c, i)))
        };
        let boundaries =
            (1..len).map(|i| RationalMatrix::block_diagonal(&[block(self, i), block(other, i)])).collect();
        Self { degrees, boundaries }
    }
}

pub(crate) fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}
