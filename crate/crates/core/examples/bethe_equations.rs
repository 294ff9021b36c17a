//! Roots of an evolved tuple are a critical point of the master function.

use bethe_cells::exactpoly::rat;
use bethe_cells::generalv::{bethe_verify, RootOptions, SingularData};
use bethe_cells::mutations::evolve;
use bethe_cells::words::Word;

fn main() {
    let h = Word::parse("213231", 3).unwrap();
    let a = [rat(1, 2), rat(3, 1), rat(2, 3), rat(5, 4), rat(1, 1), rat(7, 2)];
    let y = evolve(&h, &a).unwrap();
    println!("y = {}", y.tuple());
    let report = bethe_verify(y.tuple(), &SingularData::trivial(3), 1e-9, &RootOptions::default());
    println!("status {:?}, max residual {:.2e}", report.status, report.max);
    for (i, roots) in report.roots.iter().enumerate() {
        let shown: Vec<String> = roots.iter().map(|(re, im)| format!("{re:.6}{im:+.6}i")).collect();
        println!("  colour {}: {}", i + 1, shown.join("  "));
    }
}
