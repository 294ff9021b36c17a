//! Unnormalized mutations and the six cells of the SL3 flag variety.

use bethe_cells::exactpoly::rat;
use bethe_cells::mutations::{mv_cell_transition, mv_evolve, sl3_relation};
use bethe_cells::words::Word;

fn main() {
    for w in ["", "1", "2", "21", "12", "121", "212"] {
        let h = if w.is_empty() { Word::empty(2) } else { Word::parse(w, 2).unwrap() };
        let c: Vec<_> = (1..=h.len() as i64).map(|k| rat(k, 3)).collect();
        let y = mv_evolve(&h, &c).unwrap();
        println!("{:>3}: {y}", if w.is_empty() { "id" } else { w });
        if h.len() == 3 {
            println!("     relation = {}", sl3_relation(&y.get(1), &y.get(2)));
        }
    }
    let c = [rat(1, 3), rat(2, 3), rat(1, 1)];
    let d = mv_cell_transition(&c);
    println!("(121) at {:?} equals (212) at {:?}", c.map(|q| q.to_string()), d.clone().map(|q| q.to_string()));
}
