use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{Integer, IntegerMatrix};

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_m` with `t_1 | t_2 | … | t_m`, all `t_j > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupDescription {
    pub free_rank: usize,
    pub torsion_coefficients: Vec<Integer>,
}

impl AbelianGroupDescription {
    /// Cokernel of an integer matrix `Z^cols -> Z^rows`.
    pub fn cokernel(m: &IntegerMatrix) -> Self {
        let factors = m.smith_normal_form().invariant_factors();
        Self {
            free_rank: m.rows() - factors.len(),
            torsion_coefficients: factors.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }

    pub fn torsion_order(&self) -> Integer {
        self.torsion_coefficients.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_coefficients.is_empty()
    }
}

/// Chain complex of free abelian groups; same indexing as the rational complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerChainComplex {
    pub degrees: Vec<usize>,
    pub boundaries: Vec<IntegerMatrix>,
}

impl IntegerChainComplex {
    pub fn boundary(&self, i: usize) -> Option<&IntegerMatrix> {
        i.checked_sub(1).and_then(|j| self.boundaries.get(j))
    }

    pub fn validate(&self) -> Result<()> {
        if self.boundaries.len() + 1 != self.degrees.len().max(1) {
            return Err(Error::ShapeMismatch {
                degree: self.degrees.len(),
                detail: "wrong number of boundary matrices".into(),
            });
        }
        for i in 1..self.degrees.len() {
            let d = self.boundary(i).unwrap();
            if d.rows() != self.degrees[i - 1] || d.cols() != self.degrees[i] {
                return Err(Error::ShapeMismatch {
                    degree: i,
                    detail: format!("d_{i} is {}x{}", d.rows(), d.cols()),
                });
            }
        }
        for i in 2..self.degrees.len() {
            if !self.boundary(i - 1).unwrap().mul(self.boundary(i).unwrap())?.is_zero() {
                return Err(Error::NotAComplex { degree: i });
            }
        }
        Ok(())
    }
}

/// `H_i = ker d_i / im d_{i+1}` for every degree.
///
/// The free rank is `n_i − rank d_i − rank d_{i+1}` and the torsion part is
/// read off the Smith form of `d_{i+1}`.
pub fn integral_homology(c: &IntegerChainComplex) -> Result<Vec<AbelianGroupDescription>> {
    c.validate()?;
    let snfs: Vec<Option<Vec<Integer>>> = (0..=c.degrees.len())
        .map(|i| c.boundary(i).map(|d| d.smith_normal_form().invariant_factors()))
        .collect();
    let rank = |i: usize| snfs[i].as_ref().map_or(0, Vec::len);
    Ok(c.degrees
        .iter()
        .enumerate()
        .map(|(i, &n)| AbelianGroupDescription {
            free_rank: n - rank(i) - rank(i + 1),
            torsion_coefficients: snfs[i + 1]
                .iter()
                .flatten()
                .filter(|f| f.abs() > Integer::one())
                .cloned()
                .collect(),
        })
        .collect())
}
