//! Exterior algebra on `2g` degree-one generators `e_1, …, e_{2g}` with
//! coefficients in `Q[k]`, modelling `H^*(U(1)^{2g}; Q)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::polynomial::LevelPolynomial;
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Monomials are bitmasks: bit `i` set means `e_{i+1}` is present, in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorClass {
    genus: usize,
    terms: BTreeMap<u64, LevelPolynomial>,
}

/// Sign of `e_A ∧ e_B` relative to the sorted monomial `e_{A∪B}`.
fn wedge_sign(a: u64, b: u64) -> i32 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ExteriorClass {
    pub fn zero(genus: usize) -> Self {
        assert!(genus <= 32, "at most 64 generators are supported");
        Self { genus, terms: BTreeMap::new() }
    }

    pub fn one(genus: usize) -> Self {
        Self::scalar(genus, LevelPolynomial::one())
    }

    pub fn scalar(genus: usize, c: LevelPolynomial) -> Self {
        let mut out = Self::zero(genus);
        out.add_term(0, c);
        out
    }

    /// `c · e_{i_1} ∧ … ∧ e_{i_m}` for 1-based indices in any order.
    pub fn monomial(genus: usize, indices: &[usize], c: LevelPolynomial) -> Option<Self> {
        let mut out = Self::one(genus);
        for &i in indices {
            if i == 0 || i > 2 * genus {
                return None;
            }
            out = out.wedge(&Self::generator(genus, i)).ok()?;
        }
        Some(out.scale(&c))
    }

    /// `e_i`, 1-based.
    pub fn generator(genus: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= 2 * genus, "generator index out of range");
        let mut out = Self::zero(genus);
        out.add_term(1 << (i - 1), LevelPolynomial::one());
        out
    }

    /// `Ω = Σ_p e_{2p-1} ∧ e_{2p}`, the standard symplectic class on the torus.
    pub fn omega(genus: usize) -> Self {
        let mut out = Self::zero(genus);
        for p in 0..genus {
            out.add_term(0b11 << (2 * p), LevelPolynomial::one());
        }
        out
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &LevelPolynomial)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// 1-based generator indices of a monomial mask.
    pub fn indices(mask: u64) -> Vec<usize> {
        (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u64, c: LevelPolynomial) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_default();
        *slot = std::mem::take(slot) + c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn check_genus(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch { left: self.genus, right: other.genus });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LevelPolynomial) -> Self {
        let mut out = Self::zero(self.genus);
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&LevelPolynomial::constant(c.clone()))
    }

    /// Graded-commutative product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        let mut out = Self::zero(self.genus);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = x * y;
                let c = if wedge_sign(a, b) < 0 { -c } else { c };
                out.add_term(a | b, c);
            }
        }
        Ok(out)
    }

    /// Part of exterior degree `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        Self {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `Some(d)` when every term has exterior degree `d`; the zero class is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.count_ones());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// `Σ_m a^m / m!`, finite because `a` has no degree-0 part.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&0) {
            return Err(Error::NonNilpotentInput);
        }
        let mut result = Self::one(self.genus);
        let mut power = Self::one(self.genus);
        for m in 1..=2 * self.genus as i64 {
            power = power.wedge(self)?.scale_rational(&Rational::new(1.into(), m.into()));
            if power.is_zero() {
                break;
            }
            result = result.add(&power)?;
        }
        Ok(result)
    }

    /// `a^m`
    pub fn power(&self, m: usize) -> Self {
        let mut out = Self::one(self.genus);
        for _ in 0..m {
            out = out.wedge(self).expect("same genus");
        }
        out
    }

    /// Coefficient of `e_1 ∧ … ∧ e_{2g}`, with `∫ e_1 ∧ … ∧ e_{2g} = 1`.
    pub fn integrate_top(&self) -> LevelPolynomial {
        let top = if self.genus == 0 { 0 } else { u64::MAX >> (64 - 2 * self.genus) };
        self.terms.get(&top).cloned().unwrap_or_default()
    }
}

pub fn wedge(a: &ExteriorClass, b: &ExteriorClass) -> Result<ExteriorClass> {
    a.wedge(b)
}

pub fn exp_class(a: &ExteriorClass) -> Result<ExteriorClass> {
    a.exp()
}

pub fn integrate_top(a: &ExteriorClass) -> LevelPolynomial {
    a.integrate_top()
}
