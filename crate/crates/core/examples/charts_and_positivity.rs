//! Charts on the unipotent group and two independent total-positivity tests.

use bethe_cells::cells::{
    chart, is_totally_positive_by_factorization, is_totally_positive_by_minors, non_positive_minor, whitney_parameters,
};
use bethe_cells::exactpoly::int;
use bethe_cells::words::Word;

fn main() {
    let h = Word::longest(3);
    let g = chart(&h, &[int(1), int(2), int(3), int(1), int(2), int(1)]).unwrap();
    println!("chart({h}, 1,2,3,1,2,1) =\n{g}");
    println!("by minors: {}", is_totally_positive_by_minors(&g, 0));
    println!("by factorization: {}", is_totally_positive_by_factorization(&g));
    println!("peeled parameters: {:?}", whitney_parameters(&g).map(|p| p.iter().map(|q| q.to_string()).collect::<Vec<_>>()));

    let mixed = chart(&h, &[int(1), int(-2), int(3), int(1), int(2), int(1)]).unwrap();
    if let Some((rows, cols, value)) = non_positive_minor(&mixed, 0) {
        println!("negative parameter: minor rows {rows:?} cols {cols:?} = {value}");
    }
}
