use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use torusinv::ffield::build_field;
use torusinv::stdecomp::{orbit_character_function, steinberg_inner, steinberg_vector, unipotent_part};
use torusinv::tori::{build_canonical_torus, orbit_char_multiplicity, Weight};
use torusinv::truncpoly::{weight_multiplicity_rn, weight_multiplicity_rn_brute, LambdaWeight};
use torusinv::verify::levi_indices;
use torusinv::weyl::{
    canonical_representative, centralizer_order, enumerate_classes, epsilon_sign, fixed_weight_count,
    induced_trivial_by_cosets, weyl_group_order, Family, GroupSpec, WeylClassLabel, WeylType,
};

const QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// A valid group with rank at most `max_n`, plus a selector for a class.
fn spec_and_class(max_n: usize) -> impl Strategy<Value = (GroupSpec, WeylClassLabel)> {
    (0..Family::ALL.len(), 1..=max_n, 0..QS.len(), any::<prop::sample::Index>()).prop_filter_map(
        "invalid family, rank or field",
        |(f, n, qi, pick)| {
            let spec = GroupSpec::with_q(Family::ALL[f], n, QS[qi]).ok()?;
            let classes = enumerate_classes(&spec);
            let label = pick.get(&classes).clone();
            Some((spec, label))
        },
    )
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn label_text_round_trips((_spec, label) in spec_and_class(6)) {
        let text = label.to_string();
        prop_assert_eq!(text.parse::<WeylClassLabel>().unwrap(), label);
    }

    #[test]
    fn representative_has_label_cycle_type((spec, label) in spec_and_class(6)) {
        let w = canonical_representative(&spec, &label).unwrap();
        let (pos, neg) = w.cycle_type();
        prop_assert_eq!(pos, sorted_desc(label.positive_parts.clone()));
        prop_assert_eq!(neg, sorted_desc(label.negative_parts.clone()));
        match spec.weyl_type() {
            WeylType::A => prop_assert!(w.is_unsigned()),
            WeylType::D => prop_assert_eq!(w.negative_count() % 2, 0),
            WeylType::TwistedD => prop_assert_eq!(w.negative_count() % 2, 1),
            WeylType::B => {}
        }
    }

    #[test]
    fn torus_order_is_product_of_block_orders((spec, label) in spec_and_class(5)) {
        let torus = build_canonical_torus(&spec, &label).unwrap();
        let q = BigUint::from(spec.q());
        let mut expected = BigUint::one();
        for &k in &label.positive_parts {
            expected *= q.pow(k as u32) - 1u32;
        }
        for &k in &label.negative_parts {
            expected *= q.pow(k as u32) + 1u32;
        }
        if spec.family == Family::Sl {
            expected /= q - 1u32;
        }
        prop_assert_eq!(torus.order(), expected);
    }

    #[test]
    fn epsilon_is_a_sign((spec, label) in spec_and_class(6)) {
        let e = epsilon_sign(&spec, &label).unwrap();
        prop_assert!(e == 1 || e == -1);
        if spec.weyl_type() == WeylType::A {
            let parity = (spec.n - label.num_parts()) % 2;
            prop_assert_eq!(e, if parity == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn three_routes_to_fixed_cosets_agree((spec, label) in spec_and_class(4), pick in any::<prop::sample::Index>()) {
        let js: Vec<usize> = levi_indices(&spec).collect();
        prop_assume!(!js.is_empty());
        let j = *pick.get(&js);
        let w = canonical_representative(&spec, &label).unwrap();
        let by_torus = orbit_char_multiplicity(&spec, &label, j).unwrap();
        let by_weights = fixed_weight_count(&w, &spec, j).unwrap();
        let by_cosets = induced_trivial_by_cosets(&w, &spec, j).unwrap();
        prop_assert_eq!(by_torus, by_weights);
        prop_assert_eq!(by_weights, by_cosets);
    }

    #[test]
    fn steinberg_inner_matches_vector_pairing((spec, _label) in spec_and_class(5), pick in any::<prop::sample::Index>()) {
        let js: Vec<usize> = levi_indices(&spec).collect();
        prop_assume!(!js.is_empty());
        let phi = orbit_character_function(&spec, *pick.get(&js)).unwrap();
        let st = steinberg_vector(&spec).unwrap();
        let u = unipotent_part(&phi).unwrap();
        prop_assert_eq!(steinberg_inner(&phi).unwrap(), st.inner(&u).unwrap());
    }

    #[test]
    fn field_axioms(qi in 0..QS.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let q = QS[qi];
        let (p, m) = torusinv::weyl::prime_power(q).unwrap();
        let f = build_field(p, m).unwrap();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.pow(a, q), a);
        if a != f.zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn rn_multiplicity_matches_enumeration(
        pi in 0..3usize,
        n in 2..=4usize,
        coords in prop::collection::vec(-4i64..=4, 3),
    ) {
        let p = [2u64, 3, 5][pi];
        let nu = LambdaWeight::new(coords[..n - 1].to_vec());
        prop_assert_eq!(
            weight_multiplicity_rn(&nu, p, n),
            weight_multiplicity_rn_brute(&nu, p, n).unwrap()
        );
    }

    #[test]
    fn lambda_coordinates_round_trip(coords in prop::collection::vec(-50i64..=50, 1..8)) {
        let w = Weight::from_lambda(&coords);
        prop_assert_eq!(w.to_lambda(), coords);
        prop_assert_eq!(*w.eps.last().unwrap(), 0);
    }
}

#[test]
fn class_equation_holds_up_to_rank_six() {
    for family in Family::ALL {
        for n in family.min_rank()..=6 {
            let q = if family.allows_q(3) { 3 } else { 2 };
            let Ok(spec) = GroupSpec::with_q(family, n, q) else { continue };
            let order = weyl_group_order(&spec);
            let mut total = BigUint::zero();
            for label in enumerate_classes(&spec) {
                let c = centralizer_order(&spec, &label).unwrap();
                assert!((&order % &c).is_zero(), "{spec} {label}");
                total += &order / c;
            }
            assert_eq!(total, order, "{spec}");
        }
    }
}
