//! Volume, torus scalings and the Plücker relation on the fat cell.

use bethe_cells::cells::{act, chart, standard_column};
use bethe_cells::exactpoly::{int, rat};
use bethe_cells::generalv::{plucker_defect, reduced_wronski_map, scale_basis, scale_tuple, volume, SingularData};
use bethe_cells::mutations::wronski_map;
use bethe_cells::words::Word;

fn main() {
    let data = SingularData::trivial(2);
    let b = act(&chart(&Word::longest(2), &[int(2), int(-1), rat(1, 3)]).unwrap(), &standard_column(2)).unwrap();
    let d = [rat(3, 1), rat(-2, 5)];
    let scaled = scale_basis(b.entries(), &d).unwrap();
    println!("volume {} -> {}", volume(&data, b.entries()).unwrap(), volume(&data, &scaled).unwrap());
    println!("W(scaled basis) = {}", reduced_wronski_map(&data, &scaled).unwrap());

    let y = wronski_map(&b).unwrap();
    let fat = scale_tuple(y.tuple(), &d).unwrap();
    println!("fat point {fat}");
    println!("agrees with scaled basis: {}", fat == reduced_wronski_map(&data, &scaled).unwrap());
    println!("Plücker defect: {}", plucker_defect(&fat).unwrap());
}
