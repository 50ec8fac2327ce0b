use num_bigint::BigInt;
use proptest::prelude::*;
use tropgen_core::polyhedra::{
    complex_from_json, complex_to_json, generic_tropical_fan, regular_subdivision_complex, validate_complex_json,
    w_skeleton,
};
use tropgen_core::tropical::{cell_witnesses, rational_grid, seeded_rng};
use tropgen_core::{PlueckerLift, PolyhedralComplex, Polyhedron, Rational, Valuation};

mod common;

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn to_q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

fn h_pairs(rows: &[Vec<BigInt>], n: usize) -> Vec<(Vec<Rational>, Rational)> {
    rows.iter()
        .map(|r| {
            (
                r[..n].iter().map(|x| Rational::from_integer(x.clone())).collect(),
                Rational::from_integer(r[n].clone()),
            )
        })
        .collect()
}

fn points(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, n), 1..=max)
}

fn subdivision(n: usize) -> impl Strategy<Value = PolyhedralComplex> {
    (points(n, 5), prop::collection::vec(0i64..=3, 5)).prop_map(move |(pts, lifts)| {
        let k = pts.len();
        let lifts = lifts[..k].iter().map(|&v| Valuation::Finite(q(v))).collect();
        let lift = PlueckerLift::from_points(n, pts, lifts).unwrap();
        regular_subdivision_complex(&lift, n).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn v_to_h_to_v(pts in points(3, 7), ray in prop::collection::vec(-2i64..=2, 3)) {
        let verts: Vec<Vec<Rational>> = pts.iter().map(|p| to_q(p)).collect();
        let rays = if ray.iter().any(|&x| x != 0) { vec![to_q(&ray)] } else { vec![] };
        let p = Polyhedron::from_v(3, &verts, &rays, &[]);
        for v in &verts {
            prop_assert!(p.contains(v));
        }
        if rays.is_empty() {
            for v in p.vertices() {
                prop_assert!(verts.contains(v));
            }
        }
        let back = Polyhedron::from_h(3, &h_pairs(p.equations(), 3), &h_pairs(p.inequalities(), 3));
        prop_assert_eq!(&back, &p);
        let rays: Vec<Vec<Rational>> = p.rays().iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        let lin: Vec<Vec<Rational>> = p.lineality().iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        prop_assert_eq!(Polyhedron::from_v(3, p.vertices(), &rays, &lin), p);
    }

    #[test]
    fn h_to_v_to_h(rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -3i64..=3), 1..6)) {
        let ineqs: Vec<(Vec<Rational>, Rational)> = rows.iter().map(|(a, b)| (to_q(a), q(*b))).collect();
        let p = Polyhedron::from_h(3, &[], &ineqs);
        if let Some(w) = p.relative_interior_point() {
            prop_assert!(p.contains_in_relative_interior(&w));
            for (a, b) in &ineqs {
                let lhs: Rational = a.iter().zip(&w).map(|(x, y)| x * y).sum();
                prop_assert!(lhs <= *b);
            }
        } else {
            prop_assert!(p.is_empty());
        }
        if !p.is_empty() {
            let rays: Vec<Vec<Rational>> = p.rays().iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
            let lin: Vec<Vec<Rational>> = p.lineality().iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
            prop_assert_eq!(Polyhedron::from_v(3, p.vertices(), &rays, &lin), p);
        }
    }

    #[test]
    fn refinement_is_commutative_and_idempotent(a in subdivision(2), b in subdivision(2), seed in 0u64..1000) {
        let ab = a.common_refinement(&b).unwrap();
        let ba = b.common_refinement(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert_eq!(&a.common_refinement(&a).unwrap(), &a);
        prop_assert!(ab.check_face_property().is_ok());
        let mut rng = seeded_rng(seed, 0);
        let mut pts = rational_grid(2, 30, &mut rng, 6);
        pts.extend(cell_witnesses(&a));
        pts.extend(cell_witnesses(&b));
        for w in &pts {
            prop_assert_eq!(ab.support_contains(w), a.support_contains(w) && b.support_contains(w));
        }
    }

    #[test]
    fn json_round_trip(c in subdivision(3)) {
        let v = complex_to_json(&c);
        prop_assert!(validate_complex_json(&v).is_ok());
        prop_assert_eq!(complex_from_json(&v).unwrap(), c);
    }
}

#[test]
fn generic_fan_supports() {
    for n in 2..=4usize {
        let fan = generic_tropical_fan(n);
        assert!(fan.is_fan());
        let mut rng = seeded_rng(3, n as u64);
        let mut pts = rational_grid(n, 60, &mut rng, 3);
        for m in 1..n {
            let s = w_skeleton(n, m);
            pts.extend(cell_witnesses(&s));
        }
        for m in 1..n {
            let s = w_skeleton(n, m);
            assert_eq!(s.dim(), Some(m));
            assert!(s.is_pure());
            for w in &pts {
                assert_eq!(
                    s.support_contains(w),
                    common::min_coordinate_count_at_least(w, n - m + 1)
                );
            }
            assert_eq!(fan.skeleton(m), s);
        }
    }
}

#[test]
fn corrupted_json_is_rejected() {
    let mut v = complex_to_json(&w_skeleton(3, 2));
    v["f_vector"] = serde_json::json!([0, 9, 9]);
    assert!(validate_complex_json(&v).is_err());
    let mut v = complex_to_json(&w_skeleton(3, 2));
    v["cells"][0]["dim"] = serde_json::json!(1);
    assert!(validate_complex_json(&v).is_err());
}
