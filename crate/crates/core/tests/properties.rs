use normcone::hilbert::{self, Assumptions, FiltrationProfile, HVector};
use normcone::oracle;
use normcone::semigroup::NumericalSemigroup;
use normcone::{Report, ZariskiParams};
use num_bigint::BigInt;
use proptest::prelude::*;

fn hvector() -> impl Strategy<Value = (Vec<i64>, u32)> {
    (1i64..4, prop::collection::vec(0i64..6, 0..6), 1u32..4).prop_map(|(h0, mut rest, d)| {
        rest.insert(0, h0);
        (rest, d)
    })
}

proptest! {
    #[test]
    fn integrating_and_differencing_round_trip((h, d) in hvector()) {
        let hv = HVector::from_i64s(&h, d).unwrap();
        let top = hv.degree() + d as usize + 3;
        let p = FiltrationProfile::from_hvector(&hv, top, Assumptions::all()).unwrap();
        prop_assert_eq!(hilbert::h_vector_from_increments(&p.increments(), d).unwrap(), hv.clone());
        let fitted = hilbert::coefficients_from_profile(&p).unwrap();
        prop_assert_eq!(&fitted, &hilbert::coefficients_from_hvector(&hv));
        prop_assert_eq!(fitted.e(0), &hv.multiplicity());
    }

    #[test]
    fn fast_paths_match_brute_force((h, d) in hvector()) {
        let hv = HVector::from_i64s(&h, d).unwrap();
        let p = FiltrationProfile::from_hvector(&hv, hv.degree() + d as usize + 3, Assumptions::default()).unwrap();
        prop_assert_eq!(
            hilbert::coefficients_from_profile(&p).unwrap(),
            oracle::brute_fit(p.lengths(), d).unwrap()
        );
        prop_assert_eq!(
            hilbert::h_vector_from_increments(&p.increments(), d).unwrap(),
            oracle::brute_hvector(&p.increments(), d).unwrap()
        );
    }

    #[test]
    fn postulation_gives_reduction_number((h, d) in hvector()) {
        // a Cohen-Macaulay G(F) has r = deg h = n(F) + d
        let hv = HVector::from_i64s(&h, d).unwrap();
        let p = FiltrationProfile::from_hvector(&hv, hv.degree() + d as usize + 3, Assumptions::all()).unwrap();
        let n = hilbert::postulation_number(&p).unwrap();
        prop_assert_eq!(hilbert::reduction_from_postulation(n, d, true).unwrap(), hv.degree() as i64);
    }

    #[test]
    fn maximal_series_symmetry(lambda in 1i64..4, extra in 0i64..5, r in 2usize..8) {
        let e0 = lambda + 1 + extra;
        let h = hilbert::hs_maximal(lambda, e0, r, 1).unwrap();
        let expected = (r == 2 && lambda == 1) || (lambda == 1 && e0 == 2);
        prop_assert_eq!(h.is_symmetric(), expected);
    }

    #[test]
    fn reduction_one_matches_symmetry(lambda in 1i64..6, extra in 1i64..6) {
        let e0 = lambda + extra;
        let h = hilbert::hs_reduction_one(lambda, e0, 1).unwrap();
        prop_assert_eq!(hilbert::gorenstein_r1(e0, e0 - lambda), h.is_symmetric());
    }

    #[test]
    fn reduction_two_matches_symmetry(lambda in 1i64..5, e0 in 1i64..12, e1 in 0i64..15) {
        if let Ok(h) = hilbert::hs_reduction_two(lambda, e0, e1, 1) {
            // only genuine reduction number two
            prop_assume!(h.degree() == 2);
            prop_assert_eq!(hilbert::gorenstein_r2(e0, e1), h.is_symmetric());
        }
    }

    #[test]
    fn semigroup_closed_forms_match_oracle(gens in prop::collection::vec(2u64..30, 1..5)) {
        let Ok(s) = NumericalSemigroup::build(&gens) else { return Ok(()) };
        let v = oracle::verify_semigroup(&s).unwrap();
        prop_assert!(v.all_passed(), "{:?}", v.failures().collect::<Vec<_>>());
        let r = s.normal_reduction_number() as i64;
        let e1 = s.normal_e1();
        prop_assert!(r <= e1 - s.multiplicity() as i64 + 2);
    }

    #[test]
    fn hypersurface_closed_forms_match_oracle(a in 2u64..9, extra in 0u64..20, m in 1u64..4) {
        let p = ZariskiParams::build(a, a + extra, m).unwrap();
        let v = oracle::verify_hypersurface(&p).unwrap();
        prop_assert!(v.all_passed(), "{:?}", v.failures().collect::<Vec<_>>());
    }

    #[test]
    fn reports_round_trip_through_json(a in 2u64..8, extra in 0u64..12, m in 1u64..3) {
        let rep = ZariskiParams::build(a, a + extra, m).unwrap().analyze().unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, rep);
    }
}

#[test]
fn huge_lengths_stay_exact() {
    // h = (1, 10^30) in dimension 1: e1 = 10^30 does not fit in any machine word
    let big: BigInt = "1000000000000000000000000000000".parse().unwrap();
    let hv = HVector::new(vec![BigInt::from(1), big.clone()], 1).unwrap();
    let p = FiltrationProfile::from_hvector(&hv, 6, Assumptions::all()).unwrap();
    let rep = hilbert::analyze_profile(&p).unwrap();
    assert_eq!(rep.invariants.e1.as_ref().unwrap().0, big);
    let json = serde_json::to_string(&rep).unwrap();
    assert!(json.contains("\"1000000000000000000000000000000\""));
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(back, rep);
}
