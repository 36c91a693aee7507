//! Reidemeister torsion of a based chain complex.
//!
//! In each degree `i` the new basis is, in this order: lifts into `C_i` of the
//! chosen basis of `B_{i-1}`, the chosen basis of `B_i` (obtained as `d_{i+1}`
//! of its lifts), and lifts of the homology representatives. The factor of
//! degree `i` is the determinant of that basis against the standard basis,
//! raised to `(-1)^{i+1}`; all degrees `i >= 0` contribute.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BasedChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{determinant, preimage, Rational, RationalMatrix, Vector};

/// Cycle representatives of a homology basis, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyBasis {
    per_degree: Vec<Vec<Vector>>,
}

impl HomologyBasis {
    pub fn new(per_degree: Vec<Vec<Vector>>) -> Self {
        Self { per_degree }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn in_degree(&self, i: usize) -> &[Vector] {
        self.per_degree.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn set_degree(&mut self, i: usize, vectors: Vec<Vector>) {
        if self.per_degree.len() <= i {
            self.per_degree.resize(i + 1, Vec::new());
        }
        self.per_degree[i] = vectors;
    }

    pub fn per_degree(&self) -> &[Vec<Vector>] {
        &self.per_degree
    }

    /// Some valid homology basis: kernel vectors of `d_i` greedily chosen to be
    /// independent modulo `im d_{i+1}`.
    pub fn compute(c: &BasedChainComplex) -> Self {
        let mut out = Self::empty();
        for (i, &n) in c.degrees().iter().enumerate() {
            let cycles = match c.boundary(i) {
                Some(d) => d.kernel_basis(),
                None => RationalMatrix::identity(n).columns(),
            };
            let mut span = c.boundary(i + 1).map_or_else(Vec::new, RationalMatrix::image_basis);
            let mut chosen = Vec::new();
            for z in cycles {
                let before = span.len();
                span.push(z.clone());
                if RationalMatrix::from_columns(n, &span).unwrap().rank() > before {
                    chosen.push(z);
                } else {
                    span.pop();
                }
            }
            out.set_degree(i, chosen);
        }
        out
    }

    /// Multiplies the `index`-th representative in degree `i` by `lambda`.
    pub fn rescaled(&self, i: usize, index: usize, lambda: &Rational) -> Self {
        let mut out = self.clone();
        for x in &mut out.per_degree[i][index] {
            *x *= lambda;
        }
        out
    }
}

/// Basis ordering within each degree used for the sign of the torsion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BasisOrder {
    /// Lifted boundaries, then boundaries, then homology lifts.
    #[default]
    LiftsBoundariesHomology,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionValue {
    /// Absolute value of the torsion; always positive.
    pub magnitude: Rational,
    /// Sign of the product under `order`; +1 or -1.
    pub sign: i8,
    pub order: BasisOrder,
}

impl TorsionValue {
    pub fn signed(&self) -> Rational {
        if self.sign < 0 {
            -self.magnitude.clone()
        } else {
            self.magnitude.clone()
        }
    }
}

/// Torsion with deterministic choices (echelon image bases, zero free variables).
pub fn torsion(c: &BasedChainComplex, h: Option<&HomologyBasis>) -> Result<TorsionValue> {
    torsion_inner(c, h, None)
}

/// Torsion with bases of `B_i`, lifts and homology lifts drawn from `seed`.
pub fn torsion_with_seed(
    c: &BasedChainComplex,
    h: Option<&HomologyBasis>,
    seed: u64,
) -> Result<TorsionValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    torsion_inner(c, h, Some(&mut rng))
}

/// Recomputes the torsion under `trials` random valid choices and fails if any
/// magnitude differs from the deterministic one.
pub fn torsion_choice_independence_check(
    c: &BasedChainComplex,
    h: Option<&HomologyBasis>,
    trials: usize,
    seed: u64,
) -> Result<TorsionValue> {
    let reference = torsion(c, h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let t = torsion_inner(c, h, Some(&mut rng))?;
        if t.magnitude != reference.magnitude {
            return Err(Error::IndependenceViolated {
                first: reference.magnitude.to_string(),
                second: t.magnitude.to_string(),
            });
        }
    }
    Ok(reference)
}

fn torsion_inner(
    c: &BasedChainComplex,
    h: Option<&HomologyBasis>,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<TorsionValue> {
    c.validate()?;
    let degrees = c.degrees();
    let betti = c.betti_numbers();
    let empty = HomologyBasis::empty();
    let h = match h {
        Some(h) => h,
        None => {
            if let Some(i) = betti.iter().position(|&b| b > 0) {
                return Err(Error::MissingHomologyBasis { degree: i });
            }
            &empty
        }
    };
    check_homology_basis(c, h, &betti)?;

    // b[i]: chosen basis of B_i; lifts[i]: lifts of b[i-1] into C_i.
    let mut b: Vec<Vec<Vector>> = Vec::with_capacity(degrees.len());
    let mut lifts: Vec<Vec<Vector>> = vec![Vec::new(); degrees.len() + 1];
    for i in 0..degrees.len() {
        let Some(d) = c.boundary(i + 1) else {
            b.push(Vec::new());
            continue;
        };
        let mut basis = d.image_basis();
        if let Some(rng) = rng.as_deref_mut() {
            basis = mix(&basis, degrees[i], rng);
        }
        let kernel = d.kernel_basis();
        let mut lifted = Vec::with_capacity(basis.len());
        for v in &basis {
            let mut w = preimage(d, v)?;
            if let Some(rng) = rng.as_deref_mut() {
                add_random_combination(&mut w, &kernel, rng);
            }
            lifted.push(w);
        }
        // Recompute d(lift) rather than trusting `basis`, so the basis used
        // in degree i is literally d_{i+1} applied to the lifts.
        b.push(lifted.iter().map(|w| d.mul_vec(w)).collect::<Result<_>>()?);
        lifts[i + 1] = lifted;
    }

    let mut product = Rational::one();
    for (i, &n) in degrees.iter().enumerate() {
        let mut columns: Vec<Vector> = lifts[i].clone();
        columns.extend(b[i].iter().cloned());
        for rep in h.in_degree(i) {
            let mut rep = rep.clone();
            if let Some(rng) = rng.as_deref_mut() {
                add_random_combination(&mut rep, &b[i], rng);
            }
            columns.push(rep);
        }
        if columns.len() != n {
            return Err(Error::BadHomologyBasis {
                degree: i,
                reason: format!("new basis has {} vectors for a rank-{n} module", columns.len()),
            });
        }
        let det = determinant(&RationalMatrix::from_columns(n, &columns)?)?;
        if det.is_zero() {
            return Err(Error::BadHomologyBasis {
                degree: i,
                reason: "representatives are dependent modulo boundaries".into(),
            });
        }
        if i % 2 == 1 {
            product *= det;
        } else {
            product /= det;
        }
    }
    Ok(TorsionValue {
        sign: if product.is_negative() { -1 } else { 1 },
        magnitude: product.abs(),
        order: BasisOrder::LiftsBoundariesHomology,
    })
}

fn check_homology_basis(c: &BasedChainComplex, h: &HomologyBasis, betti: &[usize]) -> Result<()> {
    for i in c.degrees().len()..h.per_degree().len() {
        if !h.in_degree(i).is_empty() {
            return Err(Error::BadHomologyBasis { degree: i, reason: "degree exceeds the complex".into() });
        }
    }
    for (i, &n) in c.degrees().iter().enumerate() {
        let reps = h.in_degree(i);
        if reps.len() != betti[i] {
            return Err(Error::BadHomologyBasis {
                degree: i,
                reason: format!("{} representatives given, homology has rank {}", reps.len(), betti[i]),
            });
        }
        for v in reps {
            if v.len() != n {
                return Err(Error::BadHomologyBasis {
                    degree: i,
                    reason: format!("vector of length {} in rank-{n} module", v.len()),
                });
            }
            if let Some(d) = c.boundary(i) {
                if d.mul_vec(v)?.iter().any(|x| !x.is_zero()) {
                    return Err(Error::BadHomologyBasis {
                        degree: i,
                        reason: "representative is not a cycle".into(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = rng.gen_range(1..=4);
    Rational::new(num.into(), den.into())
}

/// Replaces `basis` by `basis · M` for a random invertible `M`.
fn mix(basis: &[Vector], len: usize, rng: &mut ChaCha8Rng) -> Vec<Vector> {
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }
    let m = loop {
        let entries = (0..r * r).map(|_| small_rational(rng)).collect();
        let m = RationalMatrix::from_vec(r, r, entries).unwrap();
        if !determinant(&m).unwrap().is_zero() {
            break m;
        }
    };
    let b = RationalMatrix::from_columns(len, basis).unwrap();
    b.mul(&m).unwrap().columns()
}

fn add_random_combination(v: &mut Vector, span: &[Vector], rng: &mut ChaCha8Rng) {
    for s in span {
        let k = small_rational(rng);
        if k.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(s) {
            *x += &k * y;
        }
    }
}
