//! Randomized checks of the kernel against independent oracles: a planar
//! monotone-chain hull with the shoelace formula, Pick's theorem for lattice
//! counts, and direct polynomial evaluation for the difference calculus.

use convexval_core::difference::{extract_components, FunctionHandle};
use convexval_core::group::{class_of, combine, dilate_class, mcmullen_components, FormalSum};
use convexval_core::valuation::mixed_volume_2d;
use convexval_core::{q, Point, Polytope, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn planar_points(max: usize) -> impl Strategy<Value = Vec<(Rational, Rational)>> {
    prop::collection::vec((rational(), rational()), 1..max)
}

fn integer_points(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 1..max)
}

fn spatial_points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(
        (rational(), rational(), rational()).prop_map(|(x, y, z)| Point::new(vec![x, y, z])),
        1..max,
    )
}

fn to_points(raw: &[(Rational, Rational)]) -> Vec<Point> {
    raw.iter().map(|(x, y)| Point::new(vec![x.clone(), y.clone()])).collect()
}

fn cross(o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Andrew's monotone chain: strict hull vertices in counter-clockwise order.
fn monotone_chain(raw: &[(Rational, Rational)]) -> Vec<(Rational, Rational)> {
    let mut pts = raw.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<(Rational, Rational)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(Rational, Rational)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive() {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

fn shoelace(hull: &[(Rational, Rational)]) -> Rational {
    let n = hull.len();
    if n < 3 {
        return Rational::zero();
    }
    let twice: Rational = (0..n)
        .map(|i| {
            let (a, b) = (&hull[i], &hull[(i + 1) % n]);
            &a.0 * &b.1 - &a.1 * &b.0
        })
        .sum();
    twice.abs() / q(2, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_hull_matches_monotone_chain(raw in planar_points(9)) {
        let p = Polytope::hull(to_points(&raw)).unwrap();
        let mut expected = monotone_chain(&raw);
        if expected.len() == 2 && expected[0] == expected[1] {
            expected.pop();
        }
        expected.sort();
        let got: Vec<(Rational, Rational)> = p.vertices().iter().map(|v| (v[0].clone(), v[1].clone())).collect();
        // Collinear inputs keep only the two endpoints in both.
        prop_assert_eq!(got, expected.clone());
        prop_assert_eq!(p.volume().unwrap(), shoelace(&monotone_chain(&raw)));
    }

    #[test]
    fn hull_is_canonical_and_contains_inputs(raw in spatial_points(9)) {
        let p = Polytope::hull(raw.clone()).unwrap();
        let mut shuffled = raw.clone();
        shuffled.reverse();
        shuffled.extend(raw.iter().cloned());
        prop_assert_eq!(Polytope::hull(shuffled).unwrap(), p.clone());
        prop_assert_eq!(Polytope::hull(p.vertices().to_vec()).unwrap(), p.clone());
        let m = p.membership();
        for x in &raw {
            prop_assert!(m.contains(x));
        }
        prop_assert!(p.dim() <= 3);
    }

    #[test]
    fn spatial_volume_scales_and_translates(raw in spatial_points(8), t in (rational(), rational(), rational()), l in 1i64..=3) {
        let p = Polytope::hull(raw).unwrap();
        let v = p.volume().unwrap();
        let shift = Point::new(vec![t.0, t.1, t.2]);
        prop_assert_eq!(p.translate(&shift).unwrap().volume().unwrap(), v.clone());
        let lambda = q(l, 2);
        prop_assert_eq!(p.dilate(&lambda).unwrap().volume().unwrap(), v.clone() * lambda.pow(3));
        prop_assert_eq!(v.is_positive(), p.dim() == 3);
    }

    #[test]
    fn lattice_count_matches_pick(raw in integer_points(8)) {
        let pts: Vec<(Rational, Rational)> = raw.iter().map(|&(x, y)| (q(x, 1), q(y, 1))).collect();
        let p = Polytope::hull(to_points(&pts)).unwrap();
        let hull = monotone_chain(&pts);
        // Boundary points: Σ gcd(|dx|, |dy|) over edges (a segment counts both ways).
        let boundary: i64 = if hull.len() == 1 {
            0
        } else {
            (0..hull.len())
                .map(|i| {
                    let (a, b) = (&hull[i], &hull[(i + 1) % hull.len()]);
                    let dx = (&b.0 - &a.0).to_i64().unwrap();
                    let dy = (&b.1 - &a.1).to_i64().unwrap();
                    dx.gcd(&dy)
                })
                .sum()
        };
        let expected = if hull.len() <= 2 {
            boundary / 2 + 1
        } else {
            // Pick: A = I + B/2 − 1, so I + B = A + B/2 + 1.
            let total = shoelace(&hull) + q(boundary, 2) + q(1, 1);
            total.to_i64().unwrap()
        };
        prop_assert_eq!(p.lattice_count().unwrap() as i64, expected);
    }

    #[test]
    fn mixed_volume_is_symmetric_and_additive(a in planar_points(6), b in planar_points(6)) {
        let (p, q_) = (Polytope::hull(to_points(&a)).unwrap(), Polytope::hull(to_points(&b)).unwrap());
        let v = mixed_volume_2d(&p, &q_).unwrap();
        prop_assert_eq!(v.clone(), mixed_volume_2d(&q_, &p).unwrap());
        prop_assert!(!v.is_negative());
        let sum = p.minkowski_sum(&q_).unwrap().volume().unwrap();
        prop_assert_eq!(sum, p.volume().unwrap() + v * q(2, 1) + q_.volume().unwrap());
    }

    #[test]
    fn extraction_recovers_polynomials(coeffs in prop::collection::vec(rational(), 1..4)) {
        let c = coeffs.clone();
        let f = FunctionHandle::new(move |x: &Rational| {
            c.iter().rev().fold(Rational::zero(), |acc, k| acc * x + k)
        });
        let degree = coeffs.len() - 1;
        let e = extract_components(&f, degree).unwrap();
        prop_assert_eq!(e.coefficients(), coeffs.clone());
        // A larger bound is harmless; the extra components vanish.
        let wide = extract_components(&f, degree + 1).unwrap().coefficients();
        prop_assert_eq!(&wide[..=degree], &coeffs[..]);
        prop_assert!(wide[degree + 1..].iter().all(Rational::is_zero));
    }

    #[test]
    fn formal_sums_form_a_group(a in planar_points(5), b in planar_points(5), c in planar_points(5),
                                m in -3i64..=3, n in -3i64..=3) {
        let [x, y, z] = [&a, &b, &c].map(|pts| class_of(&Polytope::hull(to_points(pts)).unwrap()));
        prop_assert_eq!(combine(&x, &y, m, n), combine(&y, &x, n, m));
        let left = combine(&combine(&x, &y, 1, 1), &z, 1, 1);
        let right = combine(&x, &combine(&y, &z, 1, 1), 1, 1);
        prop_assert_eq!(left, right);
        prop_assert!(combine(&x, &x, m, -m).is_empty());
        let s = combine(&x, &y, m, n);
        prop_assert_eq!(dilate_class(&s, &q(1, 1)).unwrap(), s.clone());
        let doubled = FormalSum::combine(&s, &s, 1, 1);
        prop_assert!(doubled.terms().all(|(_, k)| k.is_even()));
    }

    #[test]
    fn components_sum_to_the_class(raw in planar_points(6)) {
        let p = Polytope::hull(to_points(&raw)).unwrap();
        let comps = mcmullen_components(&p).unwrap();
        prop_assert_eq!(comps.len(), p.dim() + 1);
        let total = comps.iter().fold(FormalSum::empty(), |acc, e| FormalSum::combine(&acc, e, 1, 1));
        prop_assert_eq!(total, class_of(&p));
        prop_assert_eq!(&comps[0], &class_of(&Polytope::origin(2)));
        prop_assert!(comps.iter().all(|e| e.terms().all(|(_, k)| *k != BigInt::from(0))));
    }
}
