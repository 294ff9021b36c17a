//! Wronskians of divided powers and monomials, and the W5 identity.

use bethe_cells::exactpoly::{w5_check, wronskian, wronskian2, Poly};
use bethe_cells::sampling::{rng_from_seed, small_poly};

fn main() {
    for r in 0..=4 {
        let fs: Vec<Poly> = (0..=r).map(Poly::divided_power).collect();
        println!("Wr(1, x, ..., x^{r}/{r}!) = {}", wronskian(&fs));
    }
    let fs = [Poly::x(), Poly::from_ints(&[0, 0, 0, 1])];
    println!("Wr(x, x^3) = {}", wronskian(&fs));
    println!("Wr(1 + x, x^2) = {}", wronskian2(&Poly::from_ints(&[1, 1]), &Poly::from_ints(&[0, 0, 1])));

    let mut rng = rng_from_seed(1);
    let fs: Vec<Poly> = (0..4).map(|_| small_poly(&mut rng, 3)).collect();
    for f in &fs {
        println!("  f = {f}");
    }
    println!("W5 identity for a = 2: {}", w5_check(&fs));
}
