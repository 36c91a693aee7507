use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::group::{Letter, Word};
use crate::linalg::Integer;

/// Free reduction: cancels adjacent `x x^{-1}` pairs.
pub fn reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.0.len());
    for &l in &w.0 {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// Finite integer combination of freely reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, Integer>,
}

impl GroupRingElement {
    pub fn word(w: &Word) -> Self {
        Self::term(Integer::one(), w)
    }

    pub fn term(c: Integer, w: &Word) -> Self {
        let mut e = Self::default();
        e.add_term(c, reduce(w));
        e
    }

    pub fn generator(g: usize) -> Self {
        Self::word(&Word::generator(g))
    }

    fn add_term(&mut self, c: Integer, w: Word) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(Integer::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Integer)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients: the image under the trivial representation.
    pub fn augmentation(&self) -> Integer {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, w: &Word) -> Integer {
        self.terms.get(&reduce(w)).cloned().unwrap_or_default()
    }
}

impl Zero for GroupRingElement {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GroupRingElement {
    fn one() -> Self {
        Self::word(&Word::empty())
    }
}

impl Add for GroupRingElement {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(c, w);
        }
        self
    }
}

impl Neg for GroupRingElement {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for GroupRingElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: Self) -> GroupRingElement {
        let mut out = GroupRingElement::default();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(a * b, reduce(&u.concat(v)));
            }
        }
        out
    }
}

impl Mul for GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: Self) -> GroupRingElement {
        &self * &rhs
    }
}
