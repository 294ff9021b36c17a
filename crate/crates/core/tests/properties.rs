mod common;

use bethe_cells::cells::{act, cell_membership, chart, elementary, BasisColumn};
use bethe_cells::exactpoly::{int, w5_check, wronskian, Poly, Rational};
use bethe_cells::generalv::{
    log_gradient, normalized_mutation_v, reduced_wronski_map_at, singular_data, unipotent_basis, volume,
};
use bethe_cells::mutations::{
    evolve, normalized_mutation, triangular_coords, wronski_inverse, wronski_map, BetheTuple, MutationDirection,
};
use bethe_cells::sampling::rng_from_seed;
use bethe_cells::words::{
    available_moves, braid_move_r, chart_transition, shifted_degree_action, tetrahedron_check, ParamPoint, Word,
    WordError,
};
use common::{random_basis, random_cell_point, random_unipotent, test_subspaces};
use num_complex::Complex64;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=99, 1i64..=99).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(Poly::from_coeffs)
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=rank, 0..=max_len).prop_map(move |l| Word::new(l, rank).unwrap())
}

fn word_and_params(rank: usize, max_len: usize) -> impl Strategy<Value = (Word, Vec<Rational>)> {
    word(rank, max_len).prop_flat_map(|w| {
        let n = w.len();
        (Just(w), prop::collection::vec(rational(), n))
    })
}

fn longest_with_params(rank: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(positive(), rank * (rank + 1) / 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wronskian_antisymmetric(fs in prop::collection::vec(poly(6), 2..=4), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % fs.len(), j % fs.len());
        prop_assume!(i != j);
        let mut swapped = fs.clone();
        swapped.swap(i, j);
        prop_assert_eq!(wronskian(&swapped), -wronskian(&fs));
    }

    #[test]
    fn wronskian_linear(fs in prop::collection::vec(poly(5), 2..=4), g in poly(5), k in 0usize..4) {
        let k = k % fs.len();
        let mut summed = fs.clone();
        summed[k] = &fs[k] + &g;
        let mut other = fs.clone();
        other[k] = g;
        prop_assert_eq!(wronskian(&summed), &wronskian(&fs) + &wronskian(&other));
    }

    #[test]
    fn w5_holds(a in 1usize..=3, fs in prop::collection::vec(poly(6), 5)) {
        prop_assert!(w5_check(&fs[..a + 2]));
    }

    #[test]
    fn truncate_idempotent(p in poly(8), n in 0usize..10) {
        prop_assert_eq!(p.truncate(p.degree().map_or(0, |d| d + 1)), p.clone());
        let once = p.truncate(n);
        prop_assert_eq!(once.truncate(n), once);
    }

    #[test]
    fn chart_product((h, a) in word_and_params(3, 4), (h2, a2) in word_and_params(3, 4)) {
        let both = chart(&h, &a).unwrap() * chart(&h2, &a2).unwrap();
        let params: Vec<Rational> = a2.iter().chain(&a).cloned().collect();
        prop_assert_eq!(both, chart(&h.concat(&h2), &params).unwrap());
    }

    #[test]
    fn elementary_subgroup(i in 1usize..=3, c in rational(), d in rational()) {
        let product = elementary(i, &c, 3).unwrap() * elementary(i, &d, 3).unwrap();
        prop_assert_eq!(product, elementary(i, &(&c + &d), 3).unwrap());
    }

    #[test]
    fn column_wronskian_is_one(seed in any::<u64>(), r in 2usize..=4) {
        let b = random_cell_point(&mut rng_from_seed(seed), r);
        prop_assert_eq!(wronskian(b.entries()), Poly::one());
        prop_assert!(cell_membership(&b));
    }

    #[test]
    fn braid_move_involution(a in prop::collection::vec(positive(), 3)) {
        let p = ParamPoint::new(a);
        let back = braid_move_r(&braid_move_r(&p, 1).unwrap(), 1).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn moves_preserve_chart(r in 2usize..=3, seed in any::<u64>()) {
        use bethe_cells::sampling::positive_vec;
        let mut rng = rng_from_seed(seed);
        let words = bethe_cells::words::reduced_words_of_longest(r).unwrap();
        let h = &words[(seed % words.len() as u64) as usize];
        let a = ParamPoint::new(positive_vec(&mut rng, h.len()));
        for (m, h2) in available_moves(h) {
            let b = m.apply(&a).unwrap();
            prop_assert_eq!(
                bethe_cells::cells::lusztig_matrix(h, a.values()).unwrap(),
                bethe_cells::cells::lusztig_matrix(&h2, b.values()).unwrap()
            );
        }
    }

    #[test]
    fn sl3_transition_round_trip(c in prop::collection::vec(positive(), 3)) {
        let (h, h2) = (Word::parse("121", 2).unwrap(), Word::parse("212", 2).unwrap());
        let there = chart_transition(&h, &h2, &c).unwrap();
        prop_assert_eq!(chart_transition(&h2, &h, &there).unwrap(), c);
    }

    #[test]
    fn tetrahedron_commutes(a in prop::collection::vec(nonzero(), 6)) {
        match tetrahedron_check(&ParamPoint::new(a)) {
            Ok(ok) => prop_assert!(ok),
            Err(WordError::Pole { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn one_parameter_law(a in longest_with_params(2), i in 1usize..=2, c in rational(), d in rational()) {
        let y = evolve(&Word::longest(2), &a).unwrap();
        let step = |y: &BetheTuple, v: &Rational| normalized_mutation(y, &MutationDirection::new(i, v.clone())).unwrap();
        prop_assert_eq!(step(&step(&y, &c), &d), step(&y, &(&c + &d)));
    }

    #[test]
    fn wronski_round_trip(seed in any::<u64>(), r in 2usize..=4) {
        let b = random_cell_point(&mut rng_from_seed(seed), r);
        prop_assert_eq!(wronski_inverse(&wronski_map(&b).unwrap()).unwrap(), b);
    }

    #[test]
    fn unit_wronskian_after_action(seed in any::<u64>(), i in 1usize..=3, c in rational()) {
        let b = random_cell_point(&mut rng_from_seed(seed), 3);
        let moved = act(&elementary(i, &c, 3).unwrap(), &b).unwrap();
        prop_assert_eq!(wronskian(moved.entries()), Poly::one());
    }

    #[test]
    fn degree_law(a in longest_with_params(3), pick in any::<prop::sample::Index>()) {
        let words = bethe_cells::words::reduced_words_of_longest(3).unwrap();
        let h = pick.get(&words);
        let y = evolve(h, &a).unwrap();
        let expected = shifted_degree_action(h);
        let degrees: Vec<usize> = y.degrees();
        // positive parameters avoid the degree-drop locus
        prop_assert_eq!(&degrees[..], expected.degrees());
        prop_assert_eq!(expected.degrees(), &[3, 4, 3]);
    }

    #[test]
    fn sl3_coordinates_agree(b in prop::collection::vec(positive(), 3)) {
        let s = &b[0] + &b[2];
        let c = vec![&b[1] * &b[2] / &s, s.clone(), &b[0] * &b[1] / &s];
        let y = evolve(&Word::parse("121", 2).unwrap(), &b).unwrap();
        let y2 = evolve(&Word::parse("212", 2).unwrap(), &c).unwrap();
        prop_assert_eq!(triangular_coords(&y), triangular_coords(&y2));
    }

    #[test]
    fn twisted_comparison(seed in any::<u64>(), which in 0usize..3, c in rational()) {
        let (_, v) = test_subspaces().swap_remove(which);
        let data = singular_data(&v).unwrap();
        let z = int(2);
        let mut rng = rng_from_seed(seed);
        let r = v.rank();
        let b = act(&random_unipotent(&mut rng, r), &BasisColumn::new(unipotent_basis(&v, &z).unwrap())).unwrap();
        let y = reduced_wronski_map_at(&data, b.entries(), &z).unwrap();
        for i in 1..=r {
            let moved = act(&elementary(i, &c, r).unwrap(), &b).unwrap();
            prop_assert_eq!(
                reduced_wronski_map_at(&data, moved.entries(), &z).unwrap(),
                normalized_mutation_v(&data, &y, i, &c, &z).unwrap()
            );
        }
    }

    #[test]
    fn volume_invariant_under_n(seed in any::<u64>(), which in 0usize..3) {
        let (_, v) = test_subspaces().swap_remove(which);
        let data = singular_data(&v).unwrap();
        let mut rng = rng_from_seed(seed);
        let b = random_basis(&mut rng, v.basis());
        let g = random_unipotent(&mut rng, v.rank());
        let moved = act(&g, &BasisColumn::new(b.clone())).unwrap();
        prop_assert_eq!(volume(&data, moved.entries()).unwrap(), volume(&data, &b).unwrap());
    }

    #[test]
    fn gradient_matches_finite_differences(
        pts in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 5),
        mu in prop::collection::vec(0usize..3, 4),
    ) {
        let c = |p: (f64, f64)| Complex64::new(p.0, p.1);
        let points = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let weights = vec![vec![mu[0], mu[1]], vec![mu[2], mu[3]]];
        let roots = vec![vec![c(pts[0]), c(pts[1])], vec![c(pts[2]), c(pts[3])]];
        let all: Vec<Complex64> = roots.iter().flatten().chain(&points).copied().collect();
        for (k, p) in all.iter().enumerate() {
            for q in &all[k + 1..] {
                prop_assume!((p - q).norm() > 0.05);
            }
        }
        let spec = bethe_cells::generalv::MasterFunctionSpec::new(vec![2, 2], points.clone(), weights.clone()).unwrap();
        let value = |rs: &Vec<Vec<Complex64>>| {
            bethe_cells::generalv::master_function(&spec, &bethe_cells::generalv::CriticalPoint { roots: rs.clone() }).unwrap().0
        };
        let grad = log_gradient(&points, &weights, &roots).unwrap();
        let h = 1e-6;
        for i in 0..2 {
            for m in 0..2 {
                let shifted = |dt: Complex64| {
                    let mut rs = roots.clone();
                    rs[i][m] += dt;
                    value(&rs)
                };
                let ux = (shifted(Complex64::new(h, 0.0)) - shifted(Complex64::new(-h, 0.0))) / (2.0 * h);
                let uy = (shifted(Complex64::new(0.0, h)) - shifted(Complex64::new(0.0, -h))) / (2.0 * h);
                let fd = Complex64::new(ux, -uy);
                prop_assert!((fd - grad[i][m]).norm() <= 1e-6 * grad[i][m].norm().max(1.0));
            }
        }
    }
}

#[test]
fn degree_vectors_of_longest_words() {
    for h in bethe_cells::words::reduced_words_of_longest(2).unwrap() {
        assert_eq!(shifted_degree_action(&h).degrees(), &[2, 2]);
    }
}
