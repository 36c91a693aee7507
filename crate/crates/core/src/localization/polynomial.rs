use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::linalg::Rational;

/// Polynomial in the level `k` with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LevelPolynomial {
    coeffs: Vec<Rational>,
}

impl LevelPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·k^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// The level `k` itself.
    pub fn level() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * k + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Zero for LevelPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LevelPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for LevelPolynomial {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..n).map(|i| get(&self, i) + get(&rhs, i)).collect())
    }
}

impl Neg for LevelPolynomial {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &LevelPolynomial {
    type Output = LevelPolynomial;

    fn mul(self, rhs: Self) -> LevelPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LevelPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[i + j] += a * b;
            }
        }
        LevelPolynomial::new(out)
    }
}

impl Mul for LevelPolynomial {
    type Output = LevelPolynomial;

    fn mul(self, rhs: Self) -> LevelPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LevelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 => format!("{c}*k"),
                _ => format!("{c}*k^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    #[test]
    fn arithmetic_and_eval() {
        let k = LevelPolynomial::level();
        let p = &(k.clone() + LevelPolynomial::one()) * &(k.clone() + -LevelPolynomial::one());
        assert_eq!(p.coeffs(), &[rat(-1), rat(0), rat(1)]);
        assert_eq!(p.eval(&rat(3)), rat(8));
        assert_eq!(p.degree(), Some(2));
        assert_eq!((p.clone() + -p).degree(), None);
        assert_eq!(LevelPolynomial::monomial(ratio(1, 2), 3).to_string(), "1/2*k^3");
    }
}
