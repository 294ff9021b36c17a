//! Normalized Wronskian mutations along a word, with the solve at each step.

use bethe_cells::exactpoly::rat;
use bethe_cells::mutations::evolve_traced;
use bethe_cells::words::Word;

fn main() {
    let h = Word::parse("121321", 3).unwrap();
    let a = [rat(1, 2), rat(2, 1), rat(1, 3), rat(3, 1), rat(1, 1), rat(5, 2)];
    for step in evolve_traced(&h, &a).unwrap() {
        println!(
            "nu_{}({}): direction {}  ({} equations, {} surplus)",
            step.letter,
            step.amount,
            step.normalized,
            step.solve.equations,
            step.solve.surplus()
        );
        println!("    {}", step.after.tuple());
    }
}
