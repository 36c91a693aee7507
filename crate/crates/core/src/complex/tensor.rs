use super::BasedChainComplex;
use crate::linalg::{Rational, RationalMatrix};

/// Tensor product over the rationals.
///
/// `(C⊗D)_k` is ordered by increasing `i` over the summands `C_i⊗D_{k-i}`,
/// each summand in Kronecker order. The differential is
/// `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
pub fn tensor_product(c: &BasedChainComplex, d: &BasedChainComplex) -> BasedChainComplex {
    let (tc, td) = (c.top_degree(), d.top_degree());
    let top = tc + td;
    let cd = c.degrees();
    let dd = d.degrees();

    // offsets[k][i] = position of the C_i⊗D_{k-i} summand inside degree k.
    let mut offsets: Vec<Vec<Option<usize>>> = Vec::with_capacity(top + 1);
    let mut degrees = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut row = vec![None; tc + 1];
        let mut acc = 0;
        for i in k.saturating_sub(td)..=k.min(tc) {
            row[i] = Some(acc);
            acc += cd[i] * dd[k - i];
        }
        offsets.push(row);
        degrees.push(acc);
    }

    let mut boundaries = Vec::with_capacity(top);
    for k in 1..=top {
        let mut m = RationalMatrix::zeros(degrees[k - 1], degrees[k]);
        for i in k.saturating_sub(td)..=k.min(tc) {
            let j = k - i;
            let col0 = offsets[k][i].unwrap();
            if i >= 1 {
                if let (Some(row0), Some(dc)) = (offsets[k - 1][i - 1], c.boundary(i)) {
                    m.put_block(row0, col0, &dc.kron(&RationalMatrix::identity(dd[j])));
                }
            }
            if j >= 1 {
                if let (Some(row0), Some(dd_j)) = (offsets[k - 1][i], d.boundary(j)) {
                    let mut block = RationalMatrix::identity(cd[i]).kron(dd_j);
                    if i % 2 == 1 {
                        block = block.scale_by(&Rational::from_integer((-1).into()));
                    }
                    m.put_block(row0, col0, &block);
                }
            }
        }
        boundaries.push(m);
    }
    BasedChainComplex::new_unchecked(degrees, boundaries).expect("tensor shapes are consistent")
}
