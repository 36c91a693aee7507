//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use cstor_core::linalg::inverse;
use cstor_core::{BasedChainComplex, Integer, Rational, RationalMatrix};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-5..=5);
    let d: i64 = rng.gen_range(1..=3);
    Rational::new(n.into(), d.into())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let entries = (0..rows * cols).map(|_| small_rational(rng)).collect();
    RationalMatrix::from_vec(rows, cols, entries).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    loop {
        let m = random_matrix(rng, n, n);
        if !cofactor_det(&m).is_zero() {
            return m;
        }
    }
}

/// Product of random elementary integer operations: determinant ±1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let k: i64 = rng.gen_range(-2..=2);
        if i != j {
            for c in 0..n {
                let v = m.get(i, c) + Rational::from_integer(k.into()) * m.get(j, c);
                m.set(i, c, v);
            }
        } else if rng.gen_bool(0.5) {
            for c in 0..n {
                let v = -m.get(i, c).clone();
                m.set(i, c, v);
            }
        }
    }
    m
}

/// Laplace expansion along the first row; independent of elimination.
pub fn cofactor_det(a: &RationalMatrix) -> Rational {
    let n = a.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let minor: Vec<Rational> = (1..n)
            .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| a.get(r, c).clone())
            .collect();
        let minor = RationalMatrix::from_vec(n - 1, n - 1, minor).unwrap();
        let term = a.get(0, j) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Integer determinant by Laplace expansion.
pub fn integer_cofactor_det(a: &[Vec<Integer>]) -> Integer {
    let n = a.len();
    if n == 0 {
        return Integer::one();
    }
    let mut total = Integer::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Integer>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * integer_cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}`
/// where `D_k` is the gcd of all `k×k` minors.
pub fn invariant_factors_by_minors(a: &[Vec<i64>]) -> Vec<Integer> {
    use num_integer::Integer as _;
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = Integer::one();
    for k in 1..=rows.min(cols) {
        let mut g = Integer::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let m: Vec<Vec<Integer>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| Integer::from(a[r][c])).collect()).collect();
                g = g.gcd(&integer_cofactor_det(&m));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Changes the preferred basis in every degree by a random invertible matrix.
pub fn scramble(c: &BasedChainComplex, rng: &mut ChaCha8Rng) -> BasedChainComplex {
    let ps: Vec<RationalMatrix> = c.degrees().iter().map(|&n| random_invertible(rng, n)).collect();
    let boundaries = (1..c.degrees().len())
        .map(|i| {
            let inv = inverse(&ps[i]).unwrap().unwrap();
            ps[i - 1].mul(c.boundary(i).unwrap()).unwrap().mul(&inv).unwrap()
        })
        .collect();
    BasedChainComplex::new(c.degrees().to_vec(), boundaries).unwrap()
}

/// Acyclic `0 -> Q^a -> Q^{a+b} -> Q^b -> 0`, generic after scrambling.
pub fn random_short_exact(rng: &mut ChaCha8Rng, a: usize, b: usize) -> BasedChainComplex {
    let n = a + b;
    let d2 = RationalMatrix::from_columns(n, &RationalMatrix::identity(n).columns()[..a]).unwrap();
    let mut proj = RationalMatrix::zeros(b, n);
    for i in 0..b {
        proj.set(i, a + i, Rational::one());
    }
    let base = BasedChainComplex::new(vec![b, n, a], vec![proj, d2]).unwrap();
    scramble(&base, rng)
}

/// Two-term acyclic complex given by a random invertible matrix.
pub fn random_isomorphism(rng: &mut ChaCha8Rng, n: usize) -> BasedChainComplex {
    BasedChainComplex::new(vec![n, n], vec![random_invertible(rng, n)]).unwrap()
}

/// Acyclic part plus free homology of the given ranks, scrambled.
pub fn random_with_homology(rng: &mut ChaCha8Rng, homology: &[usize]) -> BasedChainComplex {
    let len = homology.len().max(3);
    let mut degs = homology.to_vec();
    degs.resize(len, 0);
    let free = BasedChainComplex::zero_differentials(degs);
    let acyclic = random_short_exact(rng, 1, 2);
    scramble(&acyclic.direct_sum(&free), rng)
}

/// Power-series oracle: coefficients of `1 / (sinh(x/2)/(x/2))` by long division.
pub fn a_hat_by_series_division(order: usize) -> Vec<Rational> {
    // sinh(x/2)/(x/2) = Σ_j x^{2j} / (4^j (2j+1)!)
    let mut s = vec![Rational::zero(); order + 1];
    for j in 0..=order / 2 {
        let f: Integer = (1..=2 * j + 1).map(Integer::from).product();
        let four = Integer::from(1) << (2 * j);
        s[2 * j] = Rational::new(Integer::one(), four * f);
    }
    let mut inv = vec![Rational::zero(); order + 1];
    inv[0] = s[0].recip();
    for n in 1..=order {
        let acc: Rational = (1..=n).map(|k| &s[k] * &inv[n - k]).sum();
        inv[n] = -acc / &s[0];
    }
    inv
}
