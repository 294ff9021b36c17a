//! The Wronski map on the unipotent cell and its triangular inverse.

use bethe_cells::cells::{act, chart, standard_column, to_unimatrix};
use bethe_cells::exactpoly::int;
use bethe_cells::mutations::{comparison_check, evolve, triangular_coords, wronski_inverse, wronski_map};
use bethe_cells::words::Word;

fn main() {
    let h = Word::longest(3);
    let a = [int(1), int(-2), int(3), int(1), int(2), int(-1)];
    let b = act(&chart(&h, &a).unwrap(), &standard_column(3)).unwrap();
    let y = wronski_map(&b).unwrap();
    println!("y = {}", y.tuple());
    for (i, row) in triangular_coords(&y).rows().iter().enumerate() {
        println!("  row {}: {}", i + 1, row.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" "));
    }
    let back = wronski_inverse(&y).unwrap();
    println!("recovered matrix:\n{}", to_unimatrix(&back).unwrap());
    println!("matches evolution: {}", evolve(&h, &a).unwrap() == y);
    println!("comparison check: {}", comparison_check(&h, &a).unwrap());
}
