use crate::exactpoly::Rational;
use crate::sampling::{positive_vec, rng_from_seed};
use crate::words::Word;
use num_traits::{Signed, Zero};

use super::{chart, elementary, minor, UniMatrix};

/// Ranks up to this bound are tested by enumerating every minor.
pub const EXHAUSTIVE_RANK_LIMIT: usize = 4;

const WITNESSES: usize = 4;

/// Whether every minor of `g` that is not identically zero on `N` is
/// strictly positive.
///
/// Exhaustive over minors for small rank, by Whitney factorization beyond.
pub fn is_totally_positive(g: &UniMatrix, seed: u64) -> bool {
    if g.rank() <= EXHAUSTIVE_RANK_LIMIT {
        is_totally_positive_by_minors(g, seed)
    } else {
        is_totally_positive_by_factorization(g)
    }
}

/// Subsets of `1..=n` of size `k`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Row/column index sets of the minors that do not vanish identically on
/// `N`, decided by evaluation at positive chart points.
///
/// A minor counts as identically zero only if it vanishes at all
/// `WITNESSES` points.
pub fn admissible_minors(rank: usize, seed: u64) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut rng = rng_from_seed(seed);
    let h0 = Word::longest(rank);
    let witnesses: Vec<UniMatrix> = (0..WITNESSES)
        .map(|_| chart(&h0, &positive_vec(&mut rng, h0.len())).expect("lengths agree"))
        .collect();
    let n = rank + 1;
    let mut out = Vec::new();
    for k in 1..=n {
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let nonzero = witnesses
                    .iter()
                    .any(|w| !minor(w, &rows, &cols).expect("valid index sets").is_zero());
                if nonzero {
                    out.push((rows.clone(), cols));
                }
            }
        }
    }
    out
}

/// The first admissible minor of `g` that is not strictly positive.
pub fn non_positive_minor(g: &UniMatrix, seed: u64) -> Option<(Vec<usize>, Vec<usize>, Rational)> {
    admissible_minors(g.rank(), seed).into_iter().find_map(|(rows, cols)| {
        let v = minor(g, &rows, &cols).expect("valid index sets");
        (!v.is_positive()).then_some((rows, cols, v))
    })
}

pub fn is_totally_positive_by_minors(g: &UniMatrix, seed: u64) -> bool {
    non_positive_minor(g, seed).is_none()
}

/// The word `r (r−1 r) … (1 2 … r)` along which `whitney_parameters` peels.
pub fn whitney_word(rank: usize) -> Word {
    let letters: Vec<usize> = (1..=rank).rev().flat_map(|k| k..=rank).collect();
    Word::new(letters, rank).expect("letters lie in 1..=rank")
}

/// Chart parameters `c` with `g = chart(whitney_word(r), c)`, recovered by
/// clearing the rows of `g` one at a time. `None` when a pivot vanishes.
pub fn whitney_parameters(g: &UniMatrix) -> Option<Vec<Rational>> {
    let r = g.rank();
    let mut m = g.clone();
    // peeled[k] holds the block cleared from row k+1, in written order
    let mut blocks: Vec<Vec<Rational>> = Vec::with_capacity(r);
    for k in 1..=r {
        let mut ts = vec![Rational::zero(); r + 1 - k];
        for j in (k + 1..=r + 1).rev() {
            let pivot = m.get(k, j - 1).clone();
            let target = m.get(k, j).clone();
            if target.is_zero() {
                continue;
            }
            if pivot.is_zero() {
                return None;
            }
            let t = target / pivot;
            m = &m * &elementary(j - 1, &-&t, r).expect("index in range");
            ts[j - 1 - k] = t;
        }
        blocks.push(ts);
    }
    // written order is block r, block r−1, …, block 1; chart params are reversed
    let written: Vec<Rational> = blocks.into_iter().rev().flatten().collect();
    Some(written.into_iter().rev().collect())
}

pub fn is_totally_positive_by_factorization(g: &UniMatrix) -> bool {
    whitney_parameters(g).is_some_and(|c| c.iter().all(Signed::is_positive))
}
