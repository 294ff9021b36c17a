use crate::cells::{lusztig_matrix, UniMatrix};
use serde::Serialize;
use std::collections::BTreeSet;

use super::{
    apply_moves, available_moves, reduced_words_of_longest, word_to_perm, Move, ParamPoint,
    Permutation, Word, WordError,
};

/// One labelled step of the S₄ diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStep {
    pub from: Word,
    pub to: Word,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// The S₄ permutohedron and its commutation classes of longest paths.
#[derive(Clone, Debug, Serialize)]
pub struct Permutohedron {
    pub vertices: Vec<Permutation>,
    /// Pairs `(w, w·s_i)` with `ℓ(w·s_i) = ℓ(w) + 1`, labelled by `i`.
    pub edges: Vec<(Permutation, Permutation, usize)>,
    pub paths: Vec<Word>,
    /// Commutation classes in cyclic octagon order, starting from the class
    /// of `121321` and moving towards `212321`.
    pub octagon: Vec<Vec<Word>>,
    /// Braid moves between consecutive octagon classes.
    pub hexagons: Vec<DiagramStep>,
}

impl Permutohedron {
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.octagon.iter().position(|c| c.contains(w))
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == used.len() {
            out.push(Permutation::new(cur.clone()).expect("built from distinct values"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v + 1);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Commutation class of `w`: everything reachable by `L` moves.
pub fn commutation_class(w: &Word) -> Vec<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(u) = stack.pop() {
        for (m, v) in available_moves(&u) {
            if matches!(m, Move::L(_)) && seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn permutohedron_s4() -> Permutohedron {
    let vertices = all_permutations(4);
    let mut edges = Vec::new();
    for v in &vertices {
        for i in 1..=3 {
            if v.has_ascent(i) {
                edges.push((v.clone(), v.times_simple(i), i));
            }
        }
    }
    let paths = reduced_words_of_longest(3).expect("rank 3 is enumerable");

    let mut classes: Vec<Vec<Word>> = Vec::new();
    for p in &paths {
        if !classes.iter().any(|c| c.contains(p)) {
            classes.push(commutation_class(p));
        }
    }
    let class_index = |w: &Word| classes.iter().position(|c| c.contains(w)).expect("every path is classified");

    // walk the cycle of braid moves between classes
    let start = class_index(&Word::longest(3));
    let toward = class_index(&Word::parse("212321", 3).expect("valid word"));
    let mut order = vec![start];
    let mut hexagons = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let mut next = None;
        for w in &classes[cur] {
            for (m, v) in available_moves(w) {
                if let Move::R(_) = m {
                    let k = class_index(&v);
                    let wanted = if cur == start { k == toward } else { k != prev };
                    if wanted && next.is_none() {
                        next = Some((k, DiagramStep { from: w.clone(), to: v, mv: m }));
                    }
                }
            }
        }
        let (k, step) = next.expect("each class has two hexagon neighbours");
        hexagons.push(step);
        if k == start {
            break;
        }
        order.push(k);
        prev = cur;
        cur = k;
    }
    let octagon = order.into_iter().map(|k| classes[k].clone()).collect();
    Permutohedron { vertices, edges, paths, octagon, hexagons }
}

fn path_from(start: &str, moves: &[Move]) -> Vec<DiagramStep> {
    let mut w = Word::parse(start, 3).expect("valid word");
    let mut out = Vec::new();
    for &m in moves {
        let next = m.apply_to_word(&w).expect("diagram moves apply");
        out.push(DiagramStep { from: w, to: next.clone(), mv: m });
        w = next;
    }
    out
}

/// Upper route of the S₄ diagram, moves in the order they act:
/// the composite `L(3)R(1)R(3)L(2)L(5)R(3)R(1)`.
pub fn upper_route() -> Vec<DiagramStep> {
    use Move::*;
    path_from("121321", &[R(1), R(3), L(5), L(2), R(3), R(1), L(3)])
}

/// Lower route, the composite `R(4)R(2)L(1)L(4)R(2)R(4)L(3)`.
pub fn lower_route() -> Vec<DiagramStep> {
    use Move::*;
    path_from("121321", &[L(3), R(4), R(2), L(4), L(1), R(2), R(4)])
}

/// The composites of the tetrahedron equation, each listed in acting order.
pub mod tetrahedron {
    use super::Move::{self, *};

    pub fn r1(k: usize) -> Vec<Move> {
        match k {
            1 => vec![R(1)],
            2 => vec![R(2), L(4)],
            3 => vec![R(3), L(5)],
            4 => vec![L(3), R(4)],
            _ => panic!("composite index {k} out of 1..=4"),
        }
    }

    pub fn r2(k: usize) -> Vec<Move> {
        match k {
            1 => vec![R(1), L(3)],
            2 => vec![L(1), R(2)],
            3 => vec![L(2), R(3)],
            4 => vec![R(4)],
            _ => panic!("composite index {k} out of 1..=4"),
        }
    }

    /// `R₂(1)R₂(3)R₁(3)R₁(1)` in acting order.
    pub fn left_side() -> Vec<Move> {
        [r1(1), r1(3), r2(3), r2(1)].concat()
    }

    /// `R₂(4)R₂(2)R₁(2)R₁(4)` in acting order.
    pub fn right_side() -> Vec<Move> {
        [r1(4), r1(2), r2(2), r2(4)].concat()
    }
}

/// Both sides of the tetrahedron equation at `a`.
pub fn tetrahedron_sides(a: &ParamPoint) -> Result<(ParamPoint, ParamPoint), WordError> {
    if a.len() != 6 {
        return Err(WordError::LengthMismatch(a.len(), 6));
    }
    Ok((
        apply_moves(a, &tetrahedron::left_side())?,
        apply_moves(a, &tetrahedron::right_side())?,
    ))
}

pub fn tetrahedron_check(a: &ParamPoint) -> Result<bool, WordError> {
    let (l, r) = tetrahedron_sides(a)?;
    Ok(l == r)
}

/// Whether `lusztig_matrix(from, a) = lusztig_matrix(to, m(a))` at `a`.
pub fn step_consistent(step: &DiagramStep, a: &ParamPoint) -> Result<bool, WordError> {
    let b = step.mv.apply(a)?;
    let before: UniMatrix = lusztig_matrix(&step.from, a.values()).expect("lengths agree");
    let after = lusztig_matrix(&step.to, b.values()).expect("lengths agree");
    Ok(before == after)
}

/// Whether every step of `route` preserves the matrix, starting at `a`.
pub fn route_consistent(route: &[DiagramStep], a: &ParamPoint) -> Result<bool, WordError> {
    let mut p = a.clone();
    for step in route {
        if !step_consistent(step, &p)? {
            return Ok(false);
        }
        p = step.mv.apply(&p)?;
    }
    Ok(true)
}

/// Whether all reduced words in `words` represent the same permutation.
pub fn same_permutation(words: &[Word]) -> bool {
    words.windows(2).all(|p| word_to_perm(&p[0]) == word_to_perm(&p[1]))
}
