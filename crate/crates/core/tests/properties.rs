//! Randomized properties: exact ring axioms, inversion round trips, the
//! continued-fraction round trip, degree claims on the lemma family, and
//! confluence of the skein oracle.

use proptest::prelude::*;

use twobridge::diagram::{
    build_diagram, mirror_diagram, orient, skein_kauffman_l_seeded, writhe,
};
use twobridge::fraction::{eval_cf, isotopic_sufficient, CfValue};
use twobridge::kauffman::{f_lemma, f_polynomial};
use twobridge::laurent::{mat_inverse, Mat3};
use twobridge::{l_polynomial, max_tb, Fraction, LaurentPoly2, TwistWord};

fn poly() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((-4i64..=4), (-3i64..=3), (-3i64..=3)), 0..6)
        .prop_map(|terms| LaurentPoly2::from_terms(&terms))
}

fn unit_monomial() -> impl Strategy<Value = LaurentPoly2> {
    (prop::bool::ANY, -2i64..=2, -2i64..=2)
        .prop_map(|(neg, i, j)| LaurentPoly2::term(if neg { -1 } else { 1 }, i, j))
}

/// L U with unit lower triangle and unit-monomial diagonal on U, so the
/// determinant is a unit and the matrix is invertible over the ring.
fn invertible_mat() -> impl Strategy<Value = Mat3> {
    (
        prop::collection::vec(poly(), 3),
        prop::collection::vec(poly(), 3),
        prop::collection::vec(unit_monomial(), 3),
    )
        .prop_map(|(lo, hi, diag)| {
            let one = LaurentPoly2::one;
            let zero = LaurentPoly2::zero;
            let l = Mat3::from_rows([
                [one(), zero(), zero()],
                [lo[0].clone(), one(), zero()],
                [lo[1].clone(), lo[2].clone(), one()],
            ]);
            let u = Mat3::from_rows([
                [diag[0].clone(), hi[0].clone(), hi[1].clone()],
                [zero(), diag[1].clone(), hi[2].clone()],
                [zero(), zero(), diag[2].clone()],
            ]);
            &l * &u
        })
}

fn word_with(first_last: std::ops::RangeInclusive<i64>, len: usize) -> impl Strategy<Value = TwistWord> {
    let interior = prop::collection::vec(2i64..=6, 0..len.saturating_sub(2).max(1));
    (first_last.clone(), interior, first_last, prop::bool::ANY).prop_map(
        |(first, mut mid, last, single)| {
            let entries = if single {
                vec![first]
            } else {
                let mut v = vec![first];
                v.append(&mut mid);
                v.push(last);
                v
            };
            TwistWord::new(entries).unwrap()
        },
    )
}

fn normal_word() -> impl Strategy<Value = TwistWord> {
    prop::collection::vec(2i64..=6, 1..=6).prop_map(|v| TwistWord::new(v).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn a_inversion_is_a_ring_map(p in poly(), q in poly()) {
        let f = |t: &LaurentPoly2| t.substitute_a_inverse();
        prop_assert_eq!(f(&(&p + &q)), &f(&p) + &f(&q));
        prop_assert_eq!(f(&(&p * &q)), &f(&p) * &f(&q));
        prop_assert_eq!(f(&f(&p)), p);
    }

    #[test]
    fn matrix_inverse_round_trips(m in invertible_mat()) {
        let inv = mat_inverse(&m).unwrap();
        prop_assert_eq!(&m * &inv, Mat3::identity());
        prop_assert_eq!(&inv * &m, Mat3::identity());
    }

    #[test]
    fn legendrian_form_round_trips(p in 2i64..=200, q in -400i64..=400) {
        prop_assume!(q != 0 && num_integer::gcd(p, q) == 1);
        let f = Fraction::new(p, q).unwrap();
        let word = twobridge::fraction::legendrian_form(&f).unwrap();
        prop_assert!(word.is_legendrian_form());
        let expected = Fraction::new(p, q.rem_euclid(p)).unwrap();
        prop_assert_eq!(eval_cf(&word).unwrap(), CfValue::Finite(expected));
        prop_assert!(isotopic_sufficient(&f, &expected));
    }

    #[test]
    fn normal_words_evaluate_finite(word in normal_word()) {
        match eval_cf(&word).unwrap() {
            CfValue::Finite(f) => prop_assert!(f.p() >= 2),
            other => prop_assert!(false, "degenerate value {:?}", other),
        }
    }

    #[test]
    fn lemma_family_degree_and_witness(word in word_with(1..=6, 8)) {
        let l = l_polynomial(&word);
        prop_assert_eq!(l.min_deg_a(), Some(-1));
        let witness = f_lemma(&word).unwrap();
        prop_assert!(!witness.is_zero());
        prop_assert_eq!(witness, l.coefficient_of_a(-1));
    }

    #[test]
    fn writhe_meets_degree_bound(word in normal_word()) {
        let od = orient(&build_diagram(&word));
        let f = f_polynomial(&word);
        prop_assert_eq!(writhe(&od) - 2, f.min_deg_a().unwrap() - 1);
    }

    #[test]
    fn diagram_size_and_mirror(word in word_with(1..=6, 6)) {
        let d = build_diagram(&word);
        prop_assert_eq!(d.crossing_count() as i64, word.sum());
        let w = writhe(&orient(&d));
        prop_assert_eq!(writhe(&orient(&mirror_diagram(&d))), -w);
    }

    #[test]
    fn skein_walks_are_confluent(
        word in prop::collection::vec(1i64..=4, 1..=4),
        s1 in any::<u64>(),
        s2 in any::<u64>(),
    ) {
        prop_assume!(word.iter().sum::<i64>() <= 8);
        let word = TwistWord::new(word).unwrap();
        let d = build_diagram(&word);
        let a = skein_kauffman_l_seeded(&d, s1).unwrap();
        let b = skein_kauffman_l_seeded(&d, s2).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, l_polynomial(&word));
    }

}

fn small_normal_word() -> impl Strategy<Value = TwistWord> {
    prop::collection::vec(2i64..=5, 1..=5).prop_map(|v| TwistWord::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tb_ignores_the_fraction_representative(word in small_normal_word(), k in -2i64..=2) {
        let CfValue::Finite(f) = eval_cf(&word).unwrap() else {
            unreachable!("normal words evaluate finite")
        };
        let shifted = Fraction::new(f.p(), f.q() + k * f.p()).unwrap();
        let base = max_tb(&f).unwrap();
        let moved = max_tb(&shifted).unwrap();
        prop_assert_eq!(base.tb, moved.tb);
        prop_assert_eq!(base.tb_mirror, moved.tb_mirror);
    }

    #[test]
    fn tb_swaps_under_mirror(word in small_normal_word()) {
        let CfValue::Finite(f) = eval_cf(&word).unwrap() else {
            unreachable!("normal words evaluate finite")
        };
        let m = twobridge::fraction::mirror_fraction(&f).unwrap();
        let base = max_tb(&f).unwrap();
        let mirrored = max_tb(&m).unwrap();
        prop_assert_eq!(base.tb, mirrored.tb_mirror);
        prop_assert_eq!(base.tb_mirror, mirrored.tb);
    }
}
