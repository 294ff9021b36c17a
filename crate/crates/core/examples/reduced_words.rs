//! Reduced words of the longest permutation, move paths and transition maps.

use bethe_cells::exactpoly::int;
use bethe_cells::words::{chart_transition, reduced_words_of_longest, shifted_degree_action, transition_path, Word};

fn main() {
    for r in 2..=4 {
        println!("rank {r}: {} reduced words", reduced_words_of_longest(r).unwrap().len());
    }
    for h in reduced_words_of_longest(3).unwrap() {
        println!("  {h}  degrees {:?}", shifted_degree_action(&h).degrees());
    }
    let (h, h2) = (Word::parse("121321", 3).unwrap(), Word::parse("323123", 3).unwrap());
    let path = transition_path(&h, &h2).unwrap();
    println!("{h} -> {h2}: {}", path.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" "));
    let c = chart_transition(&h, &h2, &vec![int(1); 6]).unwrap();
    println!("parameters at ones: {}", c.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "));
}
