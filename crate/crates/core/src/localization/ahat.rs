//! The Â-genus series `(x/2)/sinh(x/2)`.

use num_integer::binomial;
use num_traits::{One, Zero};

use super::exterior::ExteriorClass;
use crate::error::{Error, Result};
use crate::linalg::{Integer, Rational};

/// Bernoulli numbers `B_0 … B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let s: Rational = (0..m)
            .map(|j| Rational::from_integer(binomial(Integer::from(m + 1), Integer::from(j))) * &b[j])
            .sum();
        b.push(-s / Rational::from_integer(Integer::from(m + 1)));
    }
    b
}

/// Taylor coefficients of `(x/2)/sinh(x/2)` up to `x^order`.
///
/// Uses `x/sinh x = Σ (2 − 2^{2m}) B_{2m} x^{2m} / (2m)!` with `x ↦ x/2`.
pub fn a_hat_coefficients(order: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(order);
    (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                return Rational::zero();
            }
            let four_m = Integer::from(1) << n;
            let fact: Integer = (1..=n).map(Integer::from).product();
            let num = Rational::from_integer(Integer::from(2) - &four_m);
            num * &b[n] / Rational::from_integer(four_m * fact)
        })
        .collect()
}

/// `∏_j (x_j/2)/sinh(x_j/2)`, each factor truncated at `x_j^order`.
pub fn a_hat_series(genus: usize, roots: &[ExteriorClass], order: usize) -> Result<ExteriorClass> {
    let coeffs = a_hat_coefficients(order);
    let mut total = ExteriorClass::one(genus);
    for x in roots {
        if x.genus() != genus {
            return Err(Error::GenusMismatch { left: genus, right: x.genus() });
        }
        if !x.degree_part(0).is_zero() {
            return Err(Error::NonNilpotentInput);
        }
        let mut factor = ExteriorClass::zero(genus);
        let mut power = ExteriorClass::one(genus);
        for c in &coeffs {
            if !c.is_zero() {
                factor = factor.add(&power.scale_rational(c))?;
            }
            power = power.wedge(x)?;
            if power.is_zero() {
                break;
            }
        }
        total = total.wedge(&factor)?;
    }
    Ok(total)
}
