//! Wronskians of polynomial families and the W5 composition identity.

use super::poly::Poly;

/// `det (f_b^{(a-1)})`, the Wronskian of `fs`.
///
/// Fraction-free (Bareiss) elimination over `Q[x]`: every intermediate
/// division is exact in the polynomial ring, so the result is exact and
/// no rational functions ever appear. The Wronskian of an empty family is 1.
pub fn wronskian(fs: &[Poly]) -> Poly {
    let n = fs.len();
    if n == 0 {
        return Poly::one();
    }
    // rows are derivative orders, columns are the functions
    let mut m: Vec<Vec<Poly>> = Vec::with_capacity(n);
    let mut row: Vec<Poly> = fs.to_vec();
    for _ in 0..n {
        let next = row.iter().map(Poly::derivative).collect();
        m.push(std::mem::replace(&mut row, next));
    }
    bareiss_det(m)
}

/// Determinant of a square matrix of polynomials.
pub fn poly_det(m: Vec<Vec<Poly>>) -> Poly {
    bareiss_det(m)
}

fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev = Poly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// `f g' - f' g`.
pub fn wronskian2(f: &Poly, g: &Poly) -> Poly {
    &(f * &g.derivative()) - &(&f.derivative() * g)
}

/// Checks `Wr(Wr(A), Wr(B)) = Wr(A ∩ B) · Wr(A ∪ B)` for
/// `A = [a+1]`, `B = [a] ∪ {a+2}` where `fs` has length `a + 2`.
///
/// Panics if `fs` has fewer than three entries.
pub fn w5_check(fs: &[Poly]) -> bool {
    assert!(fs.len() >= 3, "W5 needs at least three functions");
    let a = fs.len() - 2;
    let wa = wronskian(&fs[..a + 1]);
    let mut b_set: Vec<Poly> = fs[..a].to_vec();
    b_set.push(fs[a + 1].clone());
    let wb = wronskian(&b_set);
    let lhs = wronskian2(&wa, &wb);
    let rhs = &wronskian(&fs[..a]) * &wronskian(fs);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat, Rational};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn divided_powers_have_unit_wronskian() {
        let fs: Vec<Poly> = (0..3).map(Poly::divided_power).collect();
        assert_eq!(wronskian(&fs), Poly::one());
    }

    #[test]
    fn single_function() {
        let f = p(&[3, 0, -2, 5]);
        assert_eq!(wronskian(std::slice::from_ref(&f)), f);
    }

    #[test]
    fn x_and_x_cubed() {
        assert_eq!(wronskian(&[p(&[0, 1]), p(&[0, 0, 0, 1])]), p(&[0, 0, 0, 2]));
    }

    #[test]
    fn two_term_formula() {
        let (t1, t2) = (rat(3, 7), rat(-5, 2));
        let f = Poly::from_coeffs(vec![int(1), t1.clone()]);
        let g = Poly::from_coeffs(vec![int(0), int(1), &t2 / int(2)]);
        let expect = Poly::from_coeffs(vec![int(1), t2.clone(), &t1 * &t2 / int(2)]);
        assert_eq!(wronskian2(&f, &g), expect);
        assert_eq!(wronskian(&[f.clone(), g]), expect);
        assert!(wronskian2(&f, &f).is_zero());
        assert_eq!(wronskian2(&Poly::one(), &Poly::x()), Poly::one());
    }

    #[test]
    fn zero_column_needs_pivoting() {
        // first row starts with a zero entry: (x, 1) has Wr = -1
        assert_eq!(wronskian(&[Poly::x(), Poly::one()]), p(&[-1]));
        assert!(wronskian(&[Poly::one(), Poly::constant(int(4))]).is_zero());
    }

    #[test]
    fn w5_examples() {
        assert!(w5_check(&[p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]));
        assert!(w5_check(&[Poly::zero(), p(&[1, 2]), p(&[0, 3, 1])]));
        let f1 = Poly::from_coeffs(vec![rat(1, 2), int(-1), int(0), int(2)]);
        let f2 = p(&[0, 4, 1, -1]);
        let f3 = Poly::from_coeffs(vec![int(7), Rational::from_integer(3.into()), rat(2, 3), int(1)]);
        assert!(w5_check(&[f1.clone(), f2.clone(), f3.clone()]));
        let lhs = wronskian2(&wronskian2(&f1, &f2), &wronskian2(&f1, &f3));
        assert_eq!(lhs, &f1 * &wronskian(&[f1.clone(), f2, f3]));
    }
}
