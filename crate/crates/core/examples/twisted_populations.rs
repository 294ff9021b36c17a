//! A space with singular points: exponents, twists, reduced Wronskians and
//! the twisted comparison with normalized mutations.

use bethe_cells::cells::{act, elementary, BasisColumn};
use bethe_cells::exactpoly::{int, rat};
use bethe_cells::generalv::{
    bethe_verify, exponents_at, normalized_mutation_v, reduced_wronski_map_at, singular_data, unipotent_basis, RootOptions,
    Subspace,
};

fn main() {
    let v = Subspace::from_ints(&[&[1], &[0, 0, 0, 1], &[-1, 3, -3, 1]]).unwrap();
    let data = singular_data(&v).unwrap();
    for (z, mu) in data.points().iter().zip(data.weights()) {
        println!("singular point {z}: exponents {:?}, weight {mu:?}", exponents_at(&v, z).lambda);
    }
    println!("twists: {}", data.twists().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", "));

    let z = int(2);
    let u = BasisColumn::new(unipotent_basis(&v, &z).unwrap());
    let b = act(&elementary(1, &rat(1, 2), 2).unwrap(), &u).unwrap();
    let b = act(&elementary(2, &rat(-3, 1), 2).unwrap(), &b).unwrap();
    let y = reduced_wronski_map_at(&data, b.entries(), &z).unwrap();
    println!("y = {y}");
    let c = rat(5, 7);
    let moved = act(&elementary(1, &c, 2).unwrap(), &b).unwrap();
    let lhs = reduced_wronski_map_at(&data, moved.entries(), &z).unwrap();
    println!("twisted comparison: {}", lhs == normalized_mutation_v(&data, &y, 1, &c, &z).unwrap());
    let report = bethe_verify(&y, &data, 1e-9, &RootOptions::default());
    println!("twisted Bethe check: {:?} ({:.1e})", report.status, report.max);
}
