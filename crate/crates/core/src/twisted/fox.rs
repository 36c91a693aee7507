//! Free differential calculus.

use super::group_ring::GroupRingElement;
use crate::group::Word;
use crate::linalg::Integer;

/// Left Fox derivative: `∂(uv) = ∂u + u·∂v`, `∂x/∂x = 1`, `∂x^{-1}/∂x = −x^{-1}`.
pub fn fox_derivative(w: &Word, x: usize) -> GroupRingElement {
    let mut out = GroupRingElement::default();
    let mut prefix = Word::empty();
    for &l in w.letters() {
        if l.generator == x {
            out = if l.inverse {
                out + GroupRingElement::term(Integer::from(-1), &prefix.concat(&Word(vec![l])))
            } else {
                out + GroupRingElement::word(&prefix)
            };
        }
        prefix.0.push(l);
    }
    out
}

/// Right Fox derivative: `∂'(uv) = ∂'u·v + ∂'v`, with the same values on letters.
///
/// Equal to `R(∂(R w)/∂x)` where `R` reverses words, and satisfies
/// `Σ_x (x − 1)·∂'w/∂x = w − 1`.
pub fn right_fox_derivative(w: &Word, x: usize) -> GroupRingElement {
    let letters = w.letters();
    let mut out = GroupRingElement::default();
    for (k, &l) in letters.iter().enumerate() {
        if l.generator != x {
            continue;
        }
        let suffix = Word(letters[k + 1..].to_vec());
        out = if l.inverse {
            out + GroupRingElement::term(Integer::from(-1), &Word(vec![l]).concat(&suffix))
        } else {
            out + GroupRingElement::word(&suffix)
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Letter;
    use num_traits::{One, Zero};

    fn x() -> Letter {
        Letter::new(0, false)
    }
    fn y() -> Letter {
        Letter::new(1, false)
    }

    fn reverse_element(e: &GroupRingElement) -> GroupRingElement {
        e.terms()
            .map(|(w, c)| GroupRingElement::term(c.clone(), &w.reversed()))
            .fold(GroupRingElement::zero(), |a, b| a + b)
    }

    #[test]
    fn defining_rules() {
        assert_eq!(fox_derivative(&Word(vec![x()]), 0), GroupRingElement::one());
        assert_eq!(fox_derivative(&Word(vec![y()]), 0), GroupRingElement::zero());
        assert_eq!(fox_derivative(&Word(vec![x(), y()]), 1), GroupRingElement::generator(0));
        assert_eq!(
            fox_derivative(&Word(vec![x().inv()]), 0),
            GroupRingElement::term(Integer::from(-1), &Word(vec![x().inv()]))
        );
    }

    #[test]
    fn power_of_generator() {
        let d = fox_derivative(&Word::power(0, 3), 0);
        let a = GroupRingElement::generator(0);
        assert_eq!(d, GroupRingElement::one() + a.clone() + a.clone() * a);
    }

    #[test]
    fn right_derivative_is_reversal_conjugate() {
        let w = Word(vec![x(), y(), x().inv(), y().inv(), x(), x()]);
        for g in 0..2 {
            assert_eq!(right_fox_derivative(&w, g), reverse_element(&fox_derivative(&w.reversed(), g)));
        }
        assert_eq!(right_fox_derivative(&Word(vec![x(), y()]), 0), GroupRingElement::generator(1));
    }
}
