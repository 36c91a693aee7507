//! Finitely presented groups and the homology of Seifert-fibered manifolds.

use std::fmt;

use crate::complex::AbelianGroupDescription;
use crate::error::{Error, Result};
use crate::linalg::{Integer, IntegerMatrix};

/// A generator raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self { generator: self.generator, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators, stored as written (not freely reduced).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Self(vec![Letter::new(g, false)])
    }

    /// `g^e`, expanded into `|e|` letters.
    pub fn power(g: usize, e: i64) -> Self {
        Self(vec![Letter::new(g, e < 0); e.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `u v u^{-1} v^{-1}`
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == g).map(|l| l.exponent()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(l) = r.0.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::UnknownGenerator(format!("#{}", l.generator)));
            }
        }
        Ok(Self { generators, relators })
    }

    /// Builds a presentation from named letters `(name, exponent)`; exponents
    /// other than ±1 are expanded.
    pub fn from_named(generators: Vec<String>, relators: &[Vec<(String, i64)>]) -> Result<Self> {
        let mut words = Vec::with_capacity(relators.len());
        for rel in relators {
            let mut letters = Vec::new();
            for (name, e) in rel {
                let g = generators
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                if *e == 0 {
                    return Err(Error::ZeroExponent(name.clone()));
                }
                letters.extend(Word::power(g, *e).0);
            }
            words.push(Word(letters));
        }
        Self::new(generators, words)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One row per relator, one column per generator: exponent sums.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let n = self.generators.len();
        let mut m = IntegerMatrix::zeros(self.relators.len(), n);
        for (r, w) in self.relators.iter().enumerate() {
            for g in 0..n {
                m.set(r, g, Integer::from(w.exponent_sum(g)));
            }
        }
        m
    }

    /// `H_1 = G / [G, G]`, the cokernel of the transposed relation matrix.
    pub fn first_homology(&self) -> AbelianGroupDescription {
        AbelianGroupDescription::cokernel(&self.abelianization_matrix().transpose())
    }

    /// `dim H^1(−; R) = dim Hom(H_1, R)`, the free rank of `H_1`.
    pub fn dim_h1_real(&self) -> usize {
        self.first_homology().free_rank
    }

    /// Order of the torsion subgroup of `H_1`; 1 when torsion-free.
    pub fn torsion_subgroup_order(&self) -> Integer {
        self.first_homology().torsion_order()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// `π_1` of the degree-`n` circle bundle over the genus-`g` surface:
/// generators `a1, b1, …, ag, bg, h`; relators `[a_p, h]`, `[b_p, h]` and
/// `(∏_p [a_p, b_p]) · h^{-n}`.
pub fn seifert_presentation(g: usize, n: i64) -> GroupPresentation {
    let mut generators = Vec::with_capacity(2 * g + 1);
    for p in 1..=g {
        generators.push(format!("a{p}"));
        generators.push(format!("b{p}"));
    }
    generators.push("h".to_string());
    let h = Word::generator(2 * g);

    let mut relators = Vec::with_capacity(2 * g + 1);
    for p in 0..g {
        relators.push(Word::commutator(&Word::generator(2 * p), &h));
        relators.push(Word::commutator(&Word::generator(2 * p + 1), &h));
    }
    let mut surface = Word::empty();
    for p in 0..g {
        surface = surface.concat(&Word::commutator(&Word::generator(2 * p), &Word::generator(2 * p + 1)));
    }
    relators.push(surface.concat(&Word::power(2 * g, -n)));
    GroupPresentation { generators, relators }
}

/// `H_1` of the Seifert manifold predicted in closed form:
/// `Z^{2g} ⊕ Z_|n|` for `n ≠ 0`, `Z^{2g+1}` for `n = 0`.
pub fn seifert_h1_closed_form(g: usize, n: i64) -> AbelianGroupDescription {
    if n == 0 {
        return AbelianGroupDescription { free_rank: 2 * g + 1, torsion_coefficients: vec![] };
    }
    let t = n.unsigned_abs();
    AbelianGroupDescription {
        free_rank: 2 * g,
        torsion_coefficients: if t > 1 { vec![Integer::from(t)] } else { vec![] },
    }
}
