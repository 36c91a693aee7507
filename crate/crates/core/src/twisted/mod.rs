//! Twisted chain complexes of presentation 2-complexes.
//!
//! The cellular chains of the universal cover of a presentation complex form a
//! complex of free `Z[π]`-modules with one 0-cell, a 1-cell per generator and a
//! 2-cell per relator. Specializing along a representation `ρ` replaces each
//! group-ring entry `Σ c_w w` by the block `Σ c_w ρ(w)`.
//!
//! Boundaries act on column vectors: `d₁` has entries `g − 1` and `d₂` has
//! entries `∂'r/∂g` (right Fox derivative), so that `d₁·d₂ = r − 1` entrywise
//! in the group ring and vanishes under any representation.

mod fox;
mod group_ring;
mod representation;

pub use fox::{fox_derivative, right_fox_derivative};
pub use group_ring::{reduce, GroupRingElement};
pub use representation::{conjugate_representation, pythagorean_rotation, Representation};

use num_traits::{One, Zero};

use crate::complex::{BasedChainComplex, IntegerChainComplex};
use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};
use crate::linalg::{Matrix, RationalMatrix};

pub type GroupRingMatrix = Matrix<GroupRingElement>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingComplex {
    presentation: GroupPresentation,
    degrees: Vec<usize>,
    boundaries: Vec<GroupRingMatrix>,
}

impl GroupRingComplex {
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn boundaries(&self) -> &[GroupRingMatrix] {
        &self.boundaries
    }

    /// Untwisted integral chains of the presentation complex (augmentation `w ↦ 1`).
    pub fn augmented(&self) -> IntegerChainComplex {
        IntegerChainComplex {
            degrees: self.degrees.clone(),
            boundaries: self.boundaries.iter().map(|d| d.map(GroupRingElement::augmentation)).collect(),
        }
    }

    /// Group-ring composite `d_{i-1}·d_i`, before any specialization.
    pub fn composite(&self, i: usize) -> Option<GroupRingMatrix> {
        let (a, b) = (self.boundaries.get(i.checked_sub(2)?)?, self.boundaries.get(i - 1)?);
        let mut out = GroupRingMatrix::zeros(a.rows(), b.cols());
        for r in 0..a.rows() {
            for c in 0..b.cols() {
                let v = (0..a.cols())
                    .map(|k| a.get(r, k) * b.get(k, c))
                    .fold(GroupRingElement::zero(), |x, y| x + y);
                out.set(r, c, v);
            }
        }
        Some(out)
    }
}

/// Chains of the universal cover of the presentation 2-complex.
///
/// Degrees are `(1, #generators, #relators)` with trailing empty degrees
/// dropped, so `⟨t | ⟩` gives the circle and `⟨ | ⟩` a point.
pub fn presentation_complex(p: &GroupPresentation) -> GroupRingComplex {
    let (ng, nr) = (p.generators().len(), p.relators().len());
    let mut degrees = vec![1, ng, nr];
    while degrees.len() > 1 && *degrees.last().unwrap() == 0 {
        degrees.pop();
    }
    let mut boundaries = Vec::new();
    if degrees.len() > 1 {
        let d1 = (0..ng).map(|g| GroupRingElement::generator(g) - GroupRingElement::one()).collect();
        boundaries.push(GroupRingMatrix::from_vec(1, ng, d1).unwrap());
    }
    if degrees.len() > 2 {
        let mut d2 = GroupRingMatrix::zeros(ng, nr);
        for (r, w) in p.relators().iter().enumerate() {
            for g in 0..ng {
                d2.set(g, r, right_fox_derivative(w, g));
            }
        }
        boundaries.push(d2);
    }
    GroupRingComplex { presentation: p.clone(), degrees, boundaries }
}

/// `C_*(X; ρ)`: every group-ring entry becomes a `d×d` block.
pub fn specialize(c: &GroupRingComplex, rho: &Representation) -> Result<BasedChainComplex> {
    if rho.presentation() != c.presentation() {
        return Err(Error::DimensionMismatch("representation is defined on a different presentation".into()));
    }
    for (r, w) in c.presentation().relators().iter().enumerate() {
        if !representation::is_identity(&rho.eval_word(w)) {
            return Err(Error::RelatorNotKilled { relator: r });
        }
    }
    let d = rho.dimension();
    let degrees: Vec<usize> = c.degrees.iter().map(|n| n * d).collect();
    let boundaries = c
        .boundaries
        .iter()
        .map(|m| {
            let mut out = RationalMatrix::zeros(m.rows() * d, m.cols() * d);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = m.get(i, j);
                    if !e.is_zero() {
                        out.put_block(i * d, j * d, &rho.eval(e));
                    }
                }
            }
            out
        })
        .collect();
    let complex = BasedChainComplex::new_unchecked(degrees, boundaries)?;
    match complex.validate() {
        Err(Error::NotAComplex { degree }) => Err(Error::NotAComplexAfterSpecialization { degree }),
        other => other.map(|()| complex),
    }
}

/// Circle complex twisted by a single holonomy matrix: `d₁ = A − I`.
pub fn twisted_circle(holonomy: &RationalMatrix) -> Result<BasedChainComplex> {
    let p = GroupPresentation::new(vec!["t".into()], vec![])?;
    let rho = Representation::new(&p, vec![holonomy.clone()])?;
    specialize(&presentation_complex(&p), &rho)
}

/// Convenience: the word `r − 1` as a group-ring element.
pub fn relator_minus_one(w: &Word) -> GroupRingElement {
    GroupRingElement::word(w) - GroupRingElement::one()
}
