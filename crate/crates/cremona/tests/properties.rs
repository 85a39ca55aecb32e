//! Property suites for the polynomial and map layers.

mod common;

use common::*;
use cremona::dynamics::{degree_sequence, in_bir_inf_d_truncated, in_bir_k_d};
use cremona::families::{semisimple_map, unipotent_map};
use cremona::{FieldScalar, FieldSpec, Polynomial, RationalMap};
use proptest::prelude::*;

fn arb_scalar_q() -> impl Strategy<Value = FieldScalar> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| FieldScalar::from_ratio(q(), n, d).unwrap())
}

fn arb_poly(spec: FieldSpec) -> impl Strategy<Value = Polynomial> {
    let coeff = (-9i64..10).prop_map(move |v| FieldScalar::from_integer(spec, v));
    proptest::collection::vec((coeff, proptest::collection::vec(0u32..3, 3)), 0..6)
        .prop_map(move |terms| Polynomial::from_terms(spec, 3, terms).unwrap())
}

/// A product of linear forms `x1 + c x0`, for gcd exercises with known
/// factor structure.
fn arb_linear_product() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-4i64..5, 0..4).prop_map(|consts| {
        let mut acc = Polynomial::one(q(), 3);
        for c in consts {
            let form = Polynomial::from_terms(
                q(),
                3,
                [
                    (FieldScalar::from_integer(q(), 1), vec![0, 1, 0]),
                    (FieldScalar::from_integer(q(), c), vec![1, 0, 0]),
                ],
            )
            .unwrap();
            acc = acc.mul(&form).unwrap();
        }
        acc
    })
}

fn arb_point() -> impl Strategy<Value = Vec<FieldScalar>> {
    proptest::collection::vec(arb_scalar_q(), 3)
}

proptest! {
    #[test]
    fn canonical_form_is_a_fixed_point(p in arb_poly(q())) {
        let rebuilt = Polynomial::from_terms(
            q(),
            3,
            p.terms().map(|(m, c)| (c.clone(), m.exponents().to_vec())),
        )
        .unwrap();
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn print_parse_round_trip(p in arb_poly(q())) {
        let text = p.to_string();
        prop_assert_eq!(Polynomial::parse(q(), 3, &text).unwrap(), p);
    }

    #[test]
    fn print_parse_round_trip_mod_5(p in arb_poly(f5())) {
        let text = p.to_string();
        prop_assert_eq!(Polynomial::parse(f5(), 3, &text).unwrap(), p);
    }

    #[test]
    fn ring_operations_commute_and_associate(
        a in arb_poly(q()),
        b in arb_poly(q()),
        c in arb_poly(q()),
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        a in arb_poly(q()),
        b in arb_poly(q()),
        pt in arb_point(),
    ) {
        let ea = a.eval(&pt).unwrap();
        let eb = b.eval(&pt).unwrap();
        prop_assert_eq!(a.add(&b).unwrap().eval(&pt).unwrap(), ea.add(&eb).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().eval(&pt).unwrap(), ea.mul(&eb).unwrap());
    }

    #[test]
    fn products_of_homogeneous_are_homogeneous(
        da in 0usize..3,
        db in 0usize..3,
        a in arb_poly(q()),
        b in arb_poly(q()),
    ) {
        // homogenize arbitrary affine parts to force homogeneity
        let ha = a.dehomogenize();
        let hb = b.dehomogenize();
        let da = da + ha.total_degree().unwrap_or(0);
        let db = db + hb.total_degree().unwrap_or(0);
        let ha = ha.homogenize(da).unwrap();
        let hb = hb.homogenize(db).unwrap();
        prop_assert!(ha.mul(&hb).unwrap().is_homogeneous());
    }

    #[test]
    fn gcd_divides_both_arguments_exactly(
        p in arb_linear_product(),
        r in arb_linear_product(),
        s in arb_linear_product(),
    ) {
        let a = p.mul(&r).unwrap();
        let b = p.mul(&s).unwrap();
        if a.is_zero() && b.is_zero() {
            return Ok(());
        }
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.divexact(&g).is_ok());
        prop_assert!(b.divexact(&g).is_ok());
    }

    #[test]
    fn gcd_respects_common_factors(
        p in arb_linear_product(),
        quo in arb_linear_product(),
        r in arb_linear_product(),
    ) {
        prop_assume!(!p.is_zero() && !quo.is_zero() && !r.is_zero());
        let a = p.mul(&r).unwrap();
        let b = quo.mul(&r).unwrap();
        let lhs = a.gcd(&b).unwrap();
        let rhs = p.gcd(&quo).unwrap().mul(&r).unwrap().make_monic().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dehomogenize_inverts_homogenize(p in arb_poly(q())) {
        let affine = p.dehomogenize();
        if let Some(d) = affine.total_degree() {
            prop_assert_eq!(affine.homogenize(d).unwrap().dehomogenize(), affine);
        }
    }
}

// map-level properties on small family-derived samples

fn family_pool() -> Vec<RationalMap> {
    let mut pool: Vec<RationalMap> = unipotent_grid_q(2).iter().map(unipotent_map).collect();
    pool.extend(semisimple_grid_q(2).iter().map(semisimple_map));
    pool
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_degree_is_submultiplicative(i in 0usize..12, j in 0usize..12, e in 1usize..3) {
        let pool = family_pool();
        let f = pool[i % pool.len()].power(e).unwrap();
        let g = &pool[j % pool.len()];
        let fg = f.compose(g).unwrap();
        prop_assert!(fg.degree() <= f.degree() * g.degree());
    }

    #[test]
    fn eq_up_to_scalar_is_an_equivalence(i in 0usize..12, j in 0usize..12, s in 2i64..7) {
        let pool = family_pool();
        let f = &pool[i % pool.len()];
        let g = &pool[j % pool.len()];
        // reflexive, and invariant under rescaling the defining tuple
        prop_assert!(f.eq_up_to_scalar(f));
        let scaled = RationalMap::new(
            f.components()
                .iter()
                .map(|c| c.mul_scalar(&FieldScalar::from_integer(q(), s)).unwrap())
                .collect(),
        )
        .unwrap();
        prop_assert!(f.eq_up_to_scalar(&scaled));
        prop_assert!(scaled.eq_up_to_scalar(f));
        // symmetric in general
        prop_assert_eq!(f.eq_up_to_scalar(g), g.eq_up_to_scalar(f));
    }

    #[test]
    fn composition_is_associative(i in 0usize..12, j in 0usize..12, k in 0usize..12) {
        let pool = family_pool();
        let f = &pool[i % pool.len()];
        let g = &pool[j % pool.len()];
        let h = &pool[k % pool.len()];
        prop_assert_eq!(
            f.compose(g).unwrap().compose(h).unwrap(),
            f.compose(&g.compose(h).unwrap()).unwrap()
        );
    }

    #[test]
    fn truncated_membership_is_monotone(i in 0usize..12, d in 1usize..6) {
        let pool = family_pool();
        let f = &pool[i % pool.len()];
        let horizon = 6;
        if in_bir_inf_d_truncated(f, d, horizon).unwrap() {
            for k in 1..=horizon {
                prop_assert!(in_bir_k_d(f, k, d).unwrap());
            }
        }
        // and the predicates agree with the computed sequence
        let seq = degree_sequence(f, horizon).unwrap();
        for k in 1..=horizon {
            prop_assert_eq!(
                in_bir_k_d(f, k, d).unwrap(),
                seq.degrees()[k - 1] <= d
            );
        }
    }
}
