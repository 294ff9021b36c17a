//! The S4 octagon of commutation classes and the tetrahedron equation.

use bethe_cells::exactpoly::rat;
use bethe_cells::words::{lower_route, permutohedron_s4, tetrahedron_sides, upper_route, ParamPoint};

fn main() {
    let p = permutohedron_s4();
    for (k, class) in p.octagon.iter().enumerate() {
        let names: Vec<String> = class.iter().map(|w| w.to_string()).collect();
        println!("class {k}: {}", names.join(" "));
    }
    for (name, route) in [("upper", upper_route()), ("lower", lower_route())] {
        let steps: Vec<String> = route.iter().map(|s| format!("{}", s.mv)).collect();
        println!("{name}: {}", steps.join(" "));
    }
    let a = ParamPoint::new(vec![rat(1, 2), rat(3, 1), rat(2, 5), rat(7, 3), rat(1, 1), rat(4, 9)]);
    let (left, right) = tetrahedron_sides(&a).unwrap();
    let show = |p: &ParamPoint| p.values().iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
    println!("left  = ({})\nright = ({})", show(&left), show(&right));
    assert_eq!(left, right);
}
