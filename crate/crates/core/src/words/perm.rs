use serde::{Deserialize, Serialize};
use std::fmt;

use super::{Word, WordError};

/// Largest rank for which all reduced words of `w₀` are enumerated.
pub const MAX_ENUMERATION_RANK: usize = 4;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// `None` unless `images` is a rearrangement of `1..=n`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > images.len() || std::mem::replace(&mut seen[v - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// Right multiplication by `s_i`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`.
    pub fn has_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `s_{i_m} ⋯ s_{i_1}` for `h = (i_m … i_1)`.
pub fn word_to_perm(w: &Word) -> Permutation {
    w.letters()
        .iter()
        .fold(Permutation::identity(w.rank() + 1), |p, &i| p.times_simple(i))
}

pub fn is_reduced(w: &Word) -> bool {
    word_to_perm(w).length() == w.len()
}

/// Every reduced word of the longest element, sorted.
pub fn reduced_words_of_longest(rank: usize) -> Result<Vec<Word>, WordError> {
    if rank > MAX_ENUMERATION_RANK {
        return Err(WordError::RankTooLarge { rank, max: MAX_ENUMERATION_RANK });
    }
    if rank == 0 {
        return Err(WordError::ZeroRank);
    }
    fn go(p: &Permutation, cur: &mut Vec<usize>, target: usize, rank: usize, out: &mut Vec<Word>) {
        if cur.len() == target {
            out.push(Word::new(cur.clone(), rank).expect("letters in range"));
            return;
        }
        for i in 1..=rank {
            if p.has_ascent(i) {
                cur.push(i);
                go(&p.times_simple(i), cur, target, rank, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&Permutation::identity(rank + 1), &mut Vec::new(), rank * (rank + 1) / 2, rank, &mut out);
    Ok(out)
}

/// A degree vector `k = (k_1, …, k_r)` of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector {
    degrees: Vec<usize>,
}

impl DegreeVector {
    pub fn new(degrees: Vec<usize>) -> Self {
        DegreeVector { degrees }
    }

    pub fn zero(rank: usize) -> Self {
        DegreeVector { degrees: vec![0; rank] }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `k_i`, 1-based, with `k_0 = k_{r+1} = 0`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 || i > self.degrees.len() {
            0
        } else {
            self.degrees[i - 1]
        }
    }

    /// `s_i ∗ k`: `k_i ← k_{i−1} + k_{i+1} − k_i + 1`.
    pub fn reflect(&self, i: usize) -> DegreeVector {
        let new = self.get(i - 1) + self.get(i + 1) + 1;
        let new = new
            .checked_sub(self.get(i))
            .expect("shifted action leaves the nonnegative cone");
        let mut degrees = self.degrees.clone();
        degrees[i - 1] = new;
        DegreeVector { degrees }
    }
}

/// `s_{i_m} ∗ ⋯ ∗ s_{i_1} ∗ 0`, applying letters from the right.
pub fn shifted_degree_action(w: &Word) -> DegreeVector {
    w.applied().fold(DegreeVector::zero(w.rank()), |k, i| k.reflect(i))
}

/// `k^{(j)}` for `j = 0..=m`: the degree vectors after each letter.
pub fn degree_trajectory(w: &Word) -> Vec<DegreeVector> {
    let mut out = vec![DegreeVector::zero(w.rank())];
    for i in w.applied() {
        let next = out.last().expect("nonempty").reflect(i);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, r: usize) -> Word {
        Word::parse(s, r).unwrap()
    }

    #[test]
    fn permutations_of_words() {
        assert_eq!(word_to_perm(&w("121", 2)).images(), &[3, 2, 1]);
        assert_eq!(word_to_perm(&Word::empty(2)), Permutation::identity(3));
        assert_eq!(word_to_perm(&w("121321", 3)).images(), &[4, 3, 2, 1]);
        assert!(Permutation::new(vec![1, 1, 2]).is_none());
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(&w("121", 2)));
        assert!(!is_reduced(&w("11", 1)));
        assert!(is_reduced(&w("121321", 3)));
        assert!(!is_reduced(&w("1211", 2)));
    }

    #[test]
    fn enumerations() {
        let r2: Vec<String> = reduced_words_of_longest(2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(r2, vec!["121", "212"]);
        let r3 = reduced_words_of_longest(3).unwrap();
        assert_eq!(r3.len(), 16);
        assert!(r3.contains(&w("121321", 3)) && r3.contains(&w("123212", 3)));
        assert_eq!(reduced_words_of_longest(1).unwrap(), vec![w("1", 1)]);
        assert_eq!(reduced_words_of_longest(4).unwrap().len(), 768);
        assert!(reduced_words_of_longest(5).is_err());
    }

    #[test]
    fn degree_action() {
        assert_eq!(shifted_degree_action(&Word::empty(2)).degrees(), &[0, 0]);
        assert_eq!(shifted_degree_action(&w("21", 2)).degrees(), &[1, 2]);
        assert_eq!(shifted_degree_action(&w("121", 2)).degrees(), &[2, 2]);
        assert_eq!(shifted_degree_action(&w("212", 2)).degrees(), &[2, 2]);
        for h in reduced_words_of_longest(3).unwrap() {
            assert_eq!(shifted_degree_action(&h).degrees(), &[3, 4, 3], "{h}");
        }
        assert_eq!(shifted_degree_action(&w("11", 1)).degrees(), &[0]);
    }
}
