//! Serialization is canonical: parse ∘ print is the identity and printing
//! does not depend on how the input listed its points.

use convexval::format::{formal_sum_to_json, parse_formal_sum, parse_polytope, polytope_to_json};
use convexval_core::group::{class_of, combine};
use convexval_core::{q, Point, Polytope};
use proptest::prelude::*;

fn polytope() -> impl Strategy<Value = Polytope> {
    (1usize..=3)
        .prop_flat_map(|n| prop::collection::vec(prop::collection::vec((-4i64..=4, 1i64..=4), n), 1..7))
        .prop_map(|rows| {
            let points = rows
                .into_iter()
                .map(|row| Point::new(row.into_iter().map(|(a, b)| q(a, b)).collect()))
                .collect();
            Polytope::hull(points).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polytopes_round_trip(p in polytope()) {
        let text = polytope_to_json(&p);
        let parsed = parse_polytope(&text).unwrap();
        prop_assert_eq!(parsed.pruned, 0);
        prop_assert_eq!(&parsed.polytope, &p);
        prop_assert_eq!(polytope_to_json(&parsed.polytope), text);
    }

    #[test]
    fn listing_order_does_not_matter(p in polytope()) {
        let mut rows: Vec<String> = p
            .vertices()
            .iter()
            .map(|v| {
                let coords: Vec<String> = v.coords().iter().map(|c| format!("\"{c}\"")).collect();
                format!("[{}]", coords.join(","))
            })
            .collect();
        rows.reverse();
        let text = format!("{{\"vertices\":[{}],\"dim\":{}}}", rows.join(", "), p.ambient_dim());
        prop_assert_eq!(polytope_to_json(&parse_polytope(&text).unwrap().polytope), polytope_to_json(&p));
    }

    #[test]
    fn formal_sums_round_trip(a in polytope(), b in polytope(), m in -3i64..=3, n in -3i64..=3) {
        prop_assume!(a.ambient_dim() == b.ambient_dim());
        let s = combine(&class_of(&a), &class_of(&b), m, n);
        let text = formal_sum_to_json(&s);
        let back = parse_formal_sum(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(formal_sum_to_json(&back), text);
    }
}
