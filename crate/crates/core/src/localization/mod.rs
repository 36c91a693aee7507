//! Evaluation of the localization formula on the torus component of the
//! moduli space of flat `U(1)` connections.
//!
//! For `G = U(1)` the integrand simplifies completely: the Poincaré bundle has
//! degree zero on the Jacobian so `Θ = 0`, the torus has trivial tangent
//! bundle so `Â = 1` and `c₁ = 0`, and `ĉ = 0` makes `ε_r = ε = 2π/k`. What
//! is left is `∫ exp(kΩ)` on `U(1)^{2g}`, computed here in the exterior algebra.

mod ahat;
mod exterior;
mod polynomial;

pub use ahat::{a_hat_coefficients, a_hat_series, bernoulli_numbers};
pub use exterior::{exp_class, integrate_top, wedge, ExteriorClass};
pub use polynomial::LevelPolynomial;

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Integer, Rational};

/// Order to which `Â` is expanded; any order is exact on a torus.
const A_HAT_ORDER: usize = 8;

/// The coupling `2π/(k + shift)`, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCoupling {
    pub shift: Rational,
}

impl std::fmt::Display for FormalCoupling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.shift.is_zero() {
            write!(f, "2π/k")
        } else {
            write!(f, "2π/(k+{})", self.shift)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationData {
    pub genus: usize,
    pub euler_degree: i64,
    pub dim_g: usize,
    pub eta0: Rational,
    pub epsilon: FormalCoupling,
    pub epsilon_r: FormalCoupling,
    pub dual_coxeter: Rational,
    pub theta_class: ExteriorClass,
}

impl LocalizationData {
    pub fn u1(genus: usize, euler_degree: i64) -> Self {
        let dual_coxeter = Rational::zero();
        Self {
            genus,
            euler_degree,
            dim_g: 1,
            eta0: eta0(euler_degree, 1),
            epsilon: FormalCoupling { shift: Rational::zero() },
            epsilon_r: FormalCoupling { shift: dual_coxeter.clone() },
            dual_coxeter,
            theta_class: ExteriorClass::zero(genus),
        }
    }
}

fn eta0(n: i64, dim_g: usize) -> Rational {
    Rational::new(Integer::from(-n) * Integer::from(dim_g), Integer::from(6))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaPrefactor {
    /// `η₀ = −n·dim G / 6`
    pub eta0: Rational,
    /// Phase angle of `exp(−iπη₀/2)` divided by `π`.
    pub angle_over_pi: Rational,
    /// `(cos, sin)` of the phase when both are rational.
    pub phase: Option<(Rational, Rational)>,
}

pub fn eta_prefactor(n: i64, dim_g: usize) -> EtaPrefactor {
    let eta0 = eta0(n, dim_g);
    let angle_over_pi = -eta0.clone() / rat(2);
    let doubled = &angle_over_pi * rat(2);
    // cos and sin of a rational multiple of π are both rational only at multiples of π/2.
    let phase = doubled.is_integer().then(|| {
        match doubled.to_integer().mod_floor(&Integer::from(4)).to_u8().unwrap() {
            0 => (rat(1), rat(0)),
            1 => (rat(0), rat(1)),
            2 => (rat(-1), rat(0)),
            _ => (rat(0), rat(-1)),
        }
    });
    EtaPrefactor { eta0, angle_over_pi, phase }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwPartition {
    /// `∫ Â · exp(kΩ + c₁/2 + Θ-term)` as a polynomial in `k`.
    pub magnitude_polynomial: LevelPolynomial,
    /// The polynomial evaluated at the requested level.
    pub magnitude: Rational,
    pub k_exponent: usize,
    pub phase: EtaPrefactor,
}

/// Torus-component contribution for genus `g`, Euler degree `n ≥ 1`, level `k ≥ 1`,
/// under the unit-volume normalization `∫ e_1 ∧ … ∧ e_{2g} = 1`.
pub fn bw_partition_torus(g: usize, n: i64, k: i64) -> Result<BwPartition> {
    if n == 0 {
        return Err(Error::EulerDegreeZero);
    }
    if k < 1 {
        return Err(Error::InvalidLevel(k));
    }
    let data = LocalizationData::u1(g, n);
    debug_assert!(data.theta_class.is_zero());

    // Chern roots of the tangent bundle of a torus all vanish.
    let roots = vec![ExteriorClass::zero(g); g];
    let a_hat = a_hat_series(g, &roots, A_HAT_ORDER)?;
    let c1 = ExteriorClass::zero(g);

    let exponent = ExteriorClass::omega(g)
        .scale(&LevelPolynomial::level())
        .add(&c1.scale_rational(&Rational::new(1.into(), 2.into())))?;
    // The Θ term carries the factor i·n/(4π²ε_r); Θ vanishes so it never enters.
    let integrand = a_hat.wedge(&exponent.exp()?)?;
    let poly = integrand.integrate_top();
    Ok(BwPartition {
        magnitude: poly.eval(&rat(k)),
        k_exponent: poly.degree().unwrap_or(0),
        magnitude_polynomial: poly,
        phase: eta_prefactor(n, data.dim_g),
    })
}
