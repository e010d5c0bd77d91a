use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;

use dp4_lagrange::levels::{
    chart_discriminant, fiber_count, reducibility_test, special_directions, symbolic_discriminant, FiberStatus,
};
use dp4_lagrange::pencil::{normalize_config, veronese_points, PointConfig};
use dp4_lagrange::poly::{perfect_square_test, square_up_to_scalar, MPoly, Monomial, VarTable};
use dp4_lagrange::projective::{det3, ChartPoint};
use dp4_lagrange::rat::{int, rat, Rat};
use dp4_lagrange::sections::{
    assemble_system, chart_transport_check, chart_vars, kernel_basis, kernel_vectors, p2_constraints,
    ConstraintSystem, SectionBasis, SymField, NUM_SLOTS,
};
use dp4_lagrange::symplectic::{bracket, poisson_r};

struct Fixture {
    config: PointConfig,
    basis: SectionBasis,
    special: Vec<(Rat, Rat)>,
    plane: Vec<Vec<Rat>>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let theta: Vec<Rat> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
        let config = normalize_config(&veronese_points(&theta)).unwrap();
        let basis = kernel_basis(&assemble_system(&config).unwrap()).unwrap();
        let special = special_directions(&basis, &config).unwrap().directions;
        let plane = kernel_vectors(&ConstraintSystem::plane_only());
        Fixture {
            config,
            basis,
            special,
            plane,
        }
    })
}

fn xyz() -> VarTable {
    VarTable::of(&["x", "y", "z"])
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly3() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), small_rat()), 0..6).prop_map(|terms| {
        let vars = xyz();
        MPoly::from_terms(
            &vars,
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(vec![a, b, c]), k)),
        )
    })
}

fn point3() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(small_rat(), 3)
}

fn chart_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), small_rat()), 0..5).prop_map(|terms| {
        MPoly::from_terms(
            chart_vars(),
            terms
                .into_iter()
                .map(|((a, b, c, d), k)| (Monomial::from_exponents(vec![a, b, c, d]), k)),
        )
    })
}

fn slots() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(small_rat(), NUM_SLOTS)
}

fn generic_direction() -> impl Strategy<Value = (Rat, Rat)> {
    small_rat()
        .prop_map(|t| (int(1), t))
        .prop_filter("not special", |e| !fixture().special.contains(e))
}

fn generic_point() -> impl Strategy<Value = ChartPoint> {
    (small_rat(), small_rat())
        .prop_map(|(x, y)| ChartPoint::affine(x, y))
        .prop_filter("off the lines through blown-up points", |p| {
            let pts = fixture().config.normalized_points();
            let q = p.to_projective();
            !(0..5).any(|i| (i + 1..5).any(|j| det3(&pts[i], &pts[j], &q).is_zero()))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly3(), q in poly3(), r in poly3()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MPoly::one(&xyz()), p.clone());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly3(), q in poly3(), pt in point3()) {
        prop_assert_eq!((&p + &q).eval_at(&pt), p.eval_at(&pt) + q.eval_at(&pt));
        prop_assert_eq!((&p * &q).eval_at(&pt), p.eval_at(&pt) * q.eval_at(&pt));
    }

    #[test]
    fn derivative_obeys_leibniz(p in poly3(), q in poly3(), k in 0usize..3) {
        let lhs = (&p * &q).derivative_at(k);
        let rhs = &(&p.derivative_at(k) * &q) + &(&p * &q.derivative_at(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_roots_are_found(s in poly3(), c in nonzero_rat()) {
        prop_assume!(!s.is_zero());
        let p = &s * &s;
        let t = perfect_square_test(&p);
        prop_assert!(t.is_square);
        let root = t.sqrt.unwrap();
        prop_assert!(root == s || root == -&s);
        let sc = square_up_to_scalar(&p.scale(&c)).unwrap();
        prop_assert_eq!((&sc.sqrt * &sc.sqrt).scale(&sc.scalar), p.scale(&c));
    }

    #[test]
    fn reported_square_roots_square_back(p in poly3()) {
        let t = perfect_square_test(&p);
        if let Some(s) = t.sqrt {
            prop_assert_eq!(&s * &s, p.clone());
        }
        if let Some(sc) = square_up_to_scalar(&p) {
            prop_assert_eq!((&sc.sqrt * &sc.sqrt).scale(&sc.scalar), p);
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(
        h in chart_poly(), g in chart_poly(), k in chart_poly(), a in small_rat(), b in small_rat()
    ) {
        prop_assert_eq!(bracket(&h, &g), -bracket(&g, &h));
        let left = bracket(&(&h.scale(&a) + &k.scale(&b)), &g);
        prop_assert_eq!(left, &bracket(&h, &g).scale(&a) + &bracket(&k, &g).scale(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transport_matches_the_plane_forms(
        weights in prop::collection::vec(small_rat(), 27),
        noise in slots(),
        perturb in any::<bool>(),
    ) {
        let fx = fixture();
        let mut v = vec![Rat::zero(); NUM_SLOTS];
        for (w, k) in weights.iter().zip(&fx.plane) {
            for (slot, c) in v.iter_mut().zip(k) {
                *slot += w * c;
            }
        }
        if perturb {
            for (slot, c) in v.iter_mut().zip(&noise) {
                *slot += c;
            }
        }
        let field = SymField::from_slots(&v);
        let forms_vanish = p2_constraints().iter().all(|l| l.eval(&field).is_zero());
        prop_assert_eq!(chart_transport_check(&field), forms_vanish);
    }

    #[test]
    fn bracket_scales_by_the_determinant(a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat()) {
        let fx = fixture();
        let (h, g) = (&fx.basis.h, &fx.basis.g);
        let h2 = h.combine(&a, g, &b);
        let g2 = h.combine(&c, g, &d);
        let det = &a * &d - &b * &c;
        prop_assert_eq!(poisson_r(&h2, &g2), poisson_r(h, g).scale(&det));
    }

    #[test]
    fn fiber_scales_equivariantly(e in generic_direction(), x0 in generic_point(), l in nonzero_rat()) {
        let fx = fixture();
        let l2 = &l * &l;
        let scaled = (&e.0 * &l2, &e.1 * &l2);
        let r = fiber_count(&fx.basis, &e, &x0).unwrap();
        let s = fiber_count(&fx.basis, &scaled, &x0).unwrap();
        prop_assert_eq!(r.status, FiberStatus::FourPoints);
        prop_assert_eq!(s.status, FiberStatus::FourPoints);
        prop_assert!(r.involution_is_free());
        prop_assert_eq!(r.directions.len(), s.directions.len());
        for (a, b) in r.directions.iter().zip(&s.directions) {
            prop_assert_eq!(&a.direction, &b.direction);
            prop_assert_eq!(a.scale.as_ref().map(|v| v.scale(&l2)), b.scale.clone());
        }
    }

    #[test]
    fn symbolic_discriminant_specializes(e in generic_direction(), x in small_rat(), y in small_rat()) {
        let fx = fixture();
        let full = symbolic_discriminant(&fx.basis);
        let chart = chart_discriminant(&fx.basis, &e).unwrap();
        prop_assert_eq!(
            full.eval_at(&[x.clone(), y.clone(), e.0.clone(), e.1.clone()]),
            chart.eval_at(&[x, y])
        );
    }

    #[test]
    fn reducibility_ignores_scaling(k in 0usize..6, t in small_rat(), l in nonzero_rat()) {
        let fx = fixture();
        let e = if k < 5 { fx.special[k].clone() } else { (int(1), t) };
        let scaled = (&e.0 * &l, &e.1 * &l);
        let a = reducibility_test(&fx.basis, &e).unwrap();
        let b = reducibility_test(&fx.basis, &scaled).unwrap();
        prop_assert_eq!(a.reducible, b.reducible);
        prop_assert_eq!(a.monic_sqrt, b.monic_sqrt);
        if k < 5 {
            prop_assert!(a.reducible);
        }
    }
}
