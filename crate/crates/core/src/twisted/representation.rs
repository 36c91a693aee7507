use num_traits::{One, Zero};

use super::group_ring::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};
use crate::linalg::{Rational, RationalMatrix};

/// Homomorphism from a presented group into invertible `d×d` rational matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    presentation: GroupPresentation,
    dimension: usize,
    images: Vec<RationalMatrix>,
    inverses: Vec<RationalMatrix>,
}

impl Representation {
    /// Checks invertibility of every image and that every relator maps to the identity.
    pub fn new(presentation: &GroupPresentation, images: Vec<RationalMatrix>) -> Result<Self> {
        let n = presentation.generators().len();
        if images.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} generator images for {n} generators",
                images.len()
            )));
        }
        let dimension = images.first().map_or(1, RationalMatrix::rows);
        let mut inverses = Vec::with_capacity(n);
        for (g, m) in images.iter().enumerate() {
            if m.rows() != dimension || m.cols() != dimension {
                return Err(Error::DimensionMismatch(format!(
                    "image of `{}` is {}x{}, expected {dimension}x{dimension}",
                    presentation.generators()[g],
                    m.rows(),
                    m.cols()
                )));
            }
            let inv =
                m.inverse()?.ok_or_else(|| Error::SingularImage(presentation.generators()[g].clone()))?;
            inverses.push(inv);
        }
        let rep = Self { presentation: presentation.clone(), dimension, images, inverses };
        for (r, w) in presentation.relators().iter().enumerate() {
            if rep.eval_word(w) != RationalMatrix::identity(dimension) {
                return Err(Error::RelatorNotKilled { relator: r });
            }
        }
        Ok(rep)
    }

    /// Every generator acts as the identity on `Q^d`.
    pub fn trivial(presentation: &GroupPresentation, dimension: usize) -> Self {
        let n = presentation.generators().len();
        Self::new(presentation, vec![RationalMatrix::identity(dimension); n])
            .expect("identity images always form a representation")
    }

    /// Adjoint action of a representation into `U(1)`.
    ///
    /// `U(1)` is abelian, so conjugation is trivial on its one-dimensional Lie
    /// algebra whatever the representation is.
    pub fn u1_adjoint(presentation: &GroupPresentation) -> Self {
        Self::trivial(presentation, 1)
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn images(&self) -> &[RationalMatrix] {
        &self.images
    }

    pub fn eval_word(&self, w: &Word) -> RationalMatrix {
        let mut acc = RationalMatrix::identity(self.dimension);
        for l in w.letters() {
            let m = if l.inverse { &self.inverses[l.generator] } else { &self.images[l.generator] };
            acc = acc.mul(m).expect("square images of equal size");
        }
        acc
    }

    /// `Σ c_w ρ(w)`.
    pub fn eval(&self, e: &GroupRingElement) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.dimension, self.dimension);
        for (w, c) in e.terms() {
            let m = self.eval_word(w).scale_by(&Rational::from_integer(c.clone()));
            acc = acc.add(&m).expect("equal shapes");
        }
        acc
    }

    /// `g ↦ h·ρ(g)·h^{-1}`.
    pub fn conjugate(&self, h: &RationalMatrix) -> Result<Self> {
        if h.rows() != self.dimension || h.cols() != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "conjugator is {}x{}, representation has dimension {}",
                h.rows(),
                h.cols(),
                self.dimension
            )));
        }
        let h_inv = h.inverse()?.ok_or(Error::SingularConjugator)?;
        let images =
            self.images.iter().map(|m| h.mul(m).and_then(|x| x.mul(&h_inv))).collect::<Result<Vec<_>>>()?;
        Self::new(&self.presentation, images)
    }
}

pub fn conjugate_representation(rho: &Representation, h: &RationalMatrix) -> Result<Representation> {
    rho.conjugate(h)
}

/// Rotation by the angle with cosine `a/c` and sine `b/c`, for a Pythagorean
/// triple `a² + b² = c²`.
pub fn pythagorean_rotation(a: i64, b: i64, c: i64) -> RationalMatrix {
    assert_eq!(a * a + b * b, c * c, "not a Pythagorean triple");
    let r = |x: i64| Rational::new(x.into(), c.into());
    RationalMatrix::from_rows(&[vec![r(a), r(-b)], vec![r(b), r(a)]]).unwrap()
}

pub(crate) fn is_identity(m: &RationalMatrix) -> bool {
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let x = m.get(i, j);
            if i == j {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    })
}
