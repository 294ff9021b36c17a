use crate::exactpoly::rational::seq_as_strings;
use crate::exactpoly::{format_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::{is_reduced, word_to_perm, Word, WordError};

/// Lusztig coordinates `a = (a_1, …, a_q)`: `a_k` belongs to the `k`-th
/// written letter of the word, so the matrix is `e_{w_1}(a_1) ⋯ e_{w_q}(a_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamPoint {
    #[serde(with = "seq_as_strings")]
    values: Vec<Rational>,
}

impl ParamPoint {
    pub fn new(values: Vec<Rational>) -> Self {
        ParamPoint { values }
    }

    /// From chart parameters in application order (`c_1` first).
    pub fn from_chart_params(c: &[Rational]) -> Self {
        ParamPoint { values: c.iter().rev().cloned().collect() }
    }

    /// Back to chart parameters in application order.
    pub fn to_chart_params(&self) -> Vec<Rational> {
        self.values.iter().rev().cloned().collect()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An elementary move, 1-based position of its first letter.
///
/// `L(i)` swaps commuting letters at `i, i+1`; `R(j)` rewrites the braid
/// triple at `j, j+1, j+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    L(usize),
    R(usize),
}

impl Move {
    pub fn position(self) -> usize {
        match self {
            Move::L(i) | Move::R(i) => i,
        }
    }

    /// The rewritten word, or `None` when the letters do not allow the move.
    pub fn apply_to_word(self, w: &Word) -> Option<Word> {
        let l = w.letters();
        let mut out = l.to_vec();
        match self {
            Move::L(i) => {
                let (a, b) = (*l.get(i.checked_sub(1)?)?, *l.get(i)?);
                if a.abs_diff(b) <= 1 {
                    return None;
                }
                out.swap(i - 1, i);
            }
            Move::R(j) => {
                let (a, b, c) = (*l.get(j.checked_sub(1)?)?, *l.get(j)?, *l.get(j + 1)?);
                if a != c || a.abs_diff(b) != 1 {
                    return None;
                }
                out[j - 1] = b;
                out[j] = a;
                out[j + 1] = b;
            }
        }
        Some(w.with_letters(out))
    }

    /// The action on Lusztig coordinates.
    pub fn apply(self, a: &ParamPoint) -> Result<ParamPoint, WordError> {
        match self {
            Move::L(i) => commute_move_l(a, i),
            Move::R(j) => braid_move_r(a, j),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::L(i) => write!(f, "L({i})"),
            Move::R(j) => write!(f, "R({j})"),
        }
    }
}

/// `R(j)`: `(a_j, a_{j+1}, a_{j+2}) ↦ (a_{j+1}a_{j+2}/s, s, a_j a_{j+1}/s)`
/// with `s = a_j + a_{j+2}`.
pub fn braid_move_r(a: &ParamPoint, j: usize) -> Result<ParamPoint, WordError> {
    if j == 0 || j + 2 > a.len() {
        return Err(WordError::InvalidPosition { mv: Move::R(j).to_string(), len: a.len() });
    }
    let v = &a.values;
    let (x, y, z) = (&v[j - 1], &v[j], &v[j + 1]);
    let s = x + z;
    if s.is_zero() {
        return Err(WordError::Pole {
            position: j,
            triple: [format_rational(x), format_rational(y), format_rational(z)],
        });
    }
    let mut out = v.clone();
    out[j - 1] = y * z / &s;
    out[j + 1] = x * y / &s;
    out[j] = s;
    Ok(ParamPoint::new(out))
}

/// `L(i)`: swaps `a_i` and `a_{i+1}`.
pub fn commute_move_l(a: &ParamPoint, i: usize) -> Result<ParamPoint, WordError> {
    if i == 0 || i + 1 > a.len() {
        return Err(WordError::InvalidPosition { mv: Move::L(i).to_string(), len: a.len() });
    }
    let mut out = a.values.clone();
    out.swap(i - 1, i);
    Ok(ParamPoint::new(out))
}

/// Applies `moves` left to right (the first listed move acts first).
pub fn apply_moves(a: &ParamPoint, moves: &[Move]) -> Result<ParamPoint, WordError> {
    moves.iter().try_fold(a.clone(), |p, m| m.apply(&p))
}

/// All moves that apply to `w`, by position and with `L` before `R`.
pub fn available_moves(w: &Word) -> Vec<(Move, Word)> {
    let mut out = Vec::new();
    for p in 1..=w.len() {
        for m in [Move::L(p), Move::R(p)] {
            if let Some(next) = m.apply_to_word(w) {
                out.push((m, next));
            }
        }
    }
    out
}

/// A shortest move sequence from `h` to `h2`, the lexicographically least
/// among shortest ones.
pub fn transition_path(h: &Word, h2: &Word) -> Result<Vec<Move>, WordError> {
    let no_path = || WordError::NoPath { from: h.to_string(), to: h2.to_string() };
    if h.len() != h2.len() || !is_reduced(h) || !is_reduced(h2) || word_to_perm(h) != word_to_perm(h2) {
        return Err(no_path());
    }
    let mut parent: HashMap<Word, (Word, Move)> = HashMap::new();
    let mut queue = VecDeque::from([h.clone()]);
    let mut seen = std::collections::HashSet::from([h.clone()]);
    while let Some(w) = queue.pop_front() {
        if &w == h2 {
            let mut path = Vec::new();
            let mut cur = w;
            while let Some((prev, m)) = parent.get(&cur) {
                path.push(*m);
                cur = prev.clone();
            }
            path.reverse();
            return Ok(path);
        }
        for (m, next) in available_moves(&w) {
            if seen.insert(next.clone()) {
                parent.insert(next.clone(), (w.clone(), m));
                queue.push_back(next);
            }
        }
    }
    Err(no_path())
}

/// `R_{h,h'}`: Lusztig coordinates `a'` with
/// `lusztig_matrix(h, a) = lusztig_matrix(h', a')`.
pub fn transition_map(h: &Word, h2: &Word, a: &ParamPoint) -> Result<ParamPoint, WordError> {
    if a.len() != h.len() {
        return Err(WordError::LengthMismatch(a.len(), h.len()));
    }
    apply_moves(a, &transition_path(h, h2)?)
}

/// The same change of coordinates on chart parameters (application order):
/// `chart(h, c) = chart(h', c')`.
pub fn chart_transition(h: &Word, h2: &Word, c: &[Rational]) -> Result<Vec<Rational>, WordError> {
    Ok(transition_map(h, h2, &ParamPoint::from_chart_params(c))?.to_chart_params())
}
