use crate::exactpoly::Rational;
use crate::sampling::positive_vec;
use crate::words::Word;
use rand::Rng;

use super::{elementary, CellError, UniMatrix};

/// `e_{i_m}(c_m) ⋯ e_{i_1}(c_1)` for the word `h = (i_m … i_1)`.
///
/// `params[0]` is `c_1`: it pairs with the rightmost letter, whose factor
/// acts first on a column.
pub fn chart(word: &Word, params: &[Rational]) -> Result<UniMatrix, CellError> {
    if params.len() != word.len() {
        return Err(CellError::LengthMismatch { word: word.len(), params: params.len() });
    }
    let mut g = UniMatrix::identity(word.rank());
    for (&letter, c) in word.letters().iter().zip(params.iter().rev()) {
        g = &g * &elementary(letter, c, word.rank())?;
    }
    Ok(g)
}

/// `e_{w_1}(a_1) ⋯ e_{w_m}(a_m)`: coordinate `a_k` pairs with the `k`-th
/// written letter. Equal to `chart(word, reversed a)`.
pub fn lusztig_matrix(word: &Word, a: &[Rational]) -> Result<UniMatrix, CellError> {
    let rev: Vec<Rational> = a.iter().rev().cloned().collect();
    chart(word, &rev)
}

/// `chart(h₀, c)` with independent positive rationals `c`; `h₀ = 1 21 321 …`.
pub fn totally_positive_sample<R: Rng + ?Sized>(rank: usize, rng: &mut R) -> UniMatrix {
    let h0 = Word::longest(rank);
    let params = positive_vec(rng, h0.len());
    chart(&h0, &params).expect("longest word and parameters have equal length")
}
