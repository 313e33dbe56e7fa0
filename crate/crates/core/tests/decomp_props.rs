use hstar_decomp::decomp::{
    ab_decompose, ab_decompose_at, graph_decomposition, inequality_report, open_decomposition, order_decomposition,
    InequalityMode,
};
use hstar_decomp::ehrhart::open_numerator;
use hstar_decomp::harness::{random_graphs, random_posets};
use hstar_decomp::{IntPolynomial, Poset};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Unique solution of `rows * x = rhs` by exact Gauss-Jordan elimination;
/// `None` if the system is inconsistent or underdetermined.
fn solve_unique(mut rows: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>, unknowns: usize) -> Option<Vec<BigRational>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        rhs.swap(pivot_row, r);
        let p = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x /= &p;
        }
        rhs[pivot_row] /= &p;
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot = rows[pivot_row].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
                let delta = &rhs[pivot_row] * &f;
                rhs[r] -= delta;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|x| !x.is_zero()) || pivots.len() < unknowns {
        return None;
    }
    let mut x = vec![BigRational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rhs[r].clone();
    }
    Some(x)
}

/// Solves `(1 + .. + z^(l-1)) h = a + z^l b` with `a_i = a_(d-i)`,
/// `b_i = b_(s-1-i)` as a linear system in the coefficients of `a` and `b`.
fn decompose_by_linear_system(h: &IntPolynomial, d: usize, s: usize) -> Option<(IntPolynomial, IntPolynomial)> {
    let l = d + 1 - s;
    let target = &IntPolynomial::geometric(l) * h;
    let unknowns = d + 1 + s;
    let unit = |k: usize| {
        let mut row = vec![BigRational::zero(); unknowns];
        row[k] = BigRational::one();
        row
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..=d {
        let mut row = vec![BigRational::zero(); unknowns];
        row[k] += BigRational::one();
        if k >= l && k - l < s {
            row[d + 1 + (k - l)] += BigRational::one();
        }
        rows.push(row);
        rhs.push(BigRational::from_integer(target.coeff(k)));
    }
    for i in 0..=d {
        let mut row = unit(i);
        row[d - i] -= BigRational::one();
        rows.push(row);
        rhs.push(BigRational::zero());
    }
    for i in 0..s {
        let mut row = unit(d + 1 + i);
        row[d + 1 + (s - 1 - i)] -= BigRational::one();
        rows.push(row);
        rhs.push(BigRational::zero());
    }
    let x = solve_unique(rows, rhs, unknowns)?;
    let to_int = |v: &[BigRational]| -> Option<IntPolynomial> {
        v.iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect::<Option<Vec<BigInt>>>()
            .map(IntPolynomial::new)
    };
    Some((to_int(&x[..=d])?, to_int(&x[d + 1..])?))
}

fn nonzero_poly_with_d() -> impl Strategy<Value = (IntPolynomial, usize)> {
    (prop::collection::vec(-30i64..30, 1..7), 0usize..3).prop_filter_map("nonzero", |(c, extra)| {
        let p = IntPolynomial::from_i64s(&c);
        let s = p.degree()?;
        Some((p, s + extra))
    })
}

proptest! {
    #[test]
    fn closed_formulas_match_linear_system((h, d) in nonzero_poly_with_d()) {
        let dec = ab_decompose(&h, d).unwrap();
        let (a, b) = decompose_by_linear_system(&h, d, dec.s).expect("unique solution");
        prop_assert_eq!(dec.a, a);
        prop_assert_eq!(dec.b, b);
    }

    #[test]
    fn explicit_degree_matches_linear_system((h, d) in nonzero_poly_with_d(), bump in 0usize..2) {
        let s = (h.degree().unwrap() + bump).min(d);
        let dec = ab_decompose_at(&h, d, s).unwrap();
        let (a, b) = decompose_by_linear_system(&h, d, s).expect("unique solution");
        prop_assert_eq!(dec.a, a);
        prop_assert_eq!(dec.b, b);
    }

    #[test]
    fn decomposition_is_linear(
        (h1, d) in nonzero_poly_with_d(),
        c in prop::collection::vec(-30i64..30, 1..7),
    ) {
        let h2 = IntPolynomial::from_i64s(&c);
        let s = h1.degree().unwrap().max(h2.degree().unwrap_or(0));
        let d = d.max(s);
        let sum = &h1 + &h2;
        let (d1, d2, ds) = (
            ab_decompose_at(&h1, d, s).unwrap(),
            ab_decompose_at(&h2, d, s).unwrap(),
            ab_decompose_at(&sum, d, s).unwrap(),
        );
        prop_assert_eq!(&d1.a + &d2.a, ds.a);
        prop_assert_eq!(&d1.b + &d2.b, ds.b);
    }

    #[test]
    fn random_poset_decompositions(d in 1usize..7, seed in any::<u64>()) {
        let p = random_posets(d, 1, seed, 1.0 / 3.0).next().unwrap();
        let h = p.descent_h_star();
        let order = order_decomposition(&h, d).unwrap();
        prop_assert!(order.signs_hold());
        prop_assert!(order.is_symmetric());
        let open = open_decomposition(&h, d).unwrap();
        prop_assert!(open.signs_hold());
        // h* = a* - z a*_1
        let a = ab_decompose(&h, d).unwrap().a;
        let a1 = ab_decompose(&h, d - 1).unwrap().a;
        prop_assert_eq!(&a - &a1.shift(1), h);
    }

    #[test]
    fn random_graph_decompositions(d in 1usize..7, seed in any::<u64>()) {
        let g = random_graphs(d, 1, seed).next().unwrap();
        let dec = graph_decomposition(&g).unwrap();
        prop_assert!(dec.signs_hold());
        prop_assert!(dec.is_symmetric());
        let report = inequality_report(&dec.numerator, d, InequalityMode::Theorem);
        // these are -a_i of the decomposition of z h_G
        for t in report {
            prop_assert_eq!(-dec.a.coeff(t.i), t.value);
        }
    }
}

#[test]
fn unique_solution_for_golden_cases() {
    let ip = IntPolynomial::from_i64s;
    let (a, b) = decompose_by_linear_system(&ip(&[1, 3]), 2, 1).unwrap();
    assert_eq!((a, b), (ip(&[1, 4, 1]), ip(&[2])));
    let (a, b) = decompose_by_linear_system(&ip(&[0, 0, 0, 1]), 3, 3).unwrap();
    assert_eq!((a, b), (ip(&[0, -1, -1]), ip(&[1, 1, 1])));
    let (a, b) = decompose_by_linear_system(&ip(&[0, 0, 1, 1]), 3, 3).unwrap();
    let dec = order_decomposition(&ip(&[1, 1]), 2).unwrap();
    assert_eq!((a, b), (dec.a, dec.b));
}

#[test]
fn order_split_matches_direct_split_of_open_numerator() {
    for d in 1..5 {
        for p in [Poset::chain(d), Poset::antichain(d)] {
            let h = p.descent_h_star();
            let h_open = open_numerator(&h, d).unwrap();
            let direct = ab_decompose(&h_open, d + 1).unwrap();
            let dec = order_decomposition(&h, d).unwrap();
            assert_eq!((direct.a, direct.b), (dec.a, dec.b));
        }
    }
}
