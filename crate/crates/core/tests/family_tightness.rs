//! Each named family attains the equalities it was built to attain.

use eigenbounds::{
    check_cao, check_delta_gamma, check_fms, check_grone_merris, check_hong, check_hsf,
    check_llt_girth, check_theorem1, check_theorem2, check_theorem3, make_family, EqualityClass,
    FamilyError, FamilySpec,
};

#[test]
fn complete_graphs_attain_their_bounds() {
    for n in [2usize, 3, 5, 8, 13] {
        let g = make_family(&FamilySpec::Complete(n)).unwrap();
        let th2 = check_theorem2(&g);
        assert!(th2.tight, "K_{n} lambda_2 = n");
        assert_eq!(th2.classification, Some(EqualityClass::Complete));
        assert!(check_hong(&g).tight, "K_{n} attains sqrt(2m - n + 1)");
        assert!(check_hsf(&g).tight);
        assert!(check_cao(&g).tight);
        assert!(check_delta_gamma(&g).tight);
        assert!(check_grone_merris(&g).tight);
    }
}

#[test]
fn stars_attain_their_bounds() {
    for n in [3usize, 4, 5, 9, 17] {
        let g = make_family(&FamilySpec::Star(n)).unwrap();
        let th1 = check_theorem1(&g);
        assert!(th1.tight, "star radius is sqrt(n-1)");
        assert_eq!(th1.classification, Some(EqualityClass::Star));
        let th3 = check_theorem3(&g);
        assert!(th3.tight, "star Laplacian radius is n = ceil(n/1)");
        assert!(matches!(
            th3.classification,
            Some(EqualityClass::StarDecomposition { .. })
        ));
        assert!(check_grone_merris(&g).tight);
        assert!(check_fms(&g).tight);
        assert!(check_hong(&g).tight);
        assert!(check_hsf(&g).tight);
        assert!(check_cao(&g).tight);
    }
}

#[test]
fn moore_family_members_attain_the_girth_bounds() {
    for spec in [FamilySpec::Cycle(5), FamilySpec::Petersen, FamilySpec::HoffmanSingleton] {
        let g = make_family(&spec).unwrap();
        let th1 = check_theorem1(&g);
        assert!(th1.tight, "{spec:?}");
        assert_eq!(th1.classification, Some(EqualityClass::Moore), "{spec:?}");
        assert!(check_llt_girth(&g).tight, "{spec:?}");
        assert!(check_fms(&g).tight, "{spec:?}");
    }
}

#[test]
fn matching_complements_attain_the_domination_bound() {
    for n in [2usize, 4, 6, 10, 16] {
        let g = make_family(&FamilySpec::MatchingComplement(n)).unwrap();
        let th2 = check_theorem2(&g);
        assert!(th2.tight, "lambda_2 = n - 2 on order {n}");
        assert_eq!(th2.classification, Some(EqualityClass::MatchingComplement));
        assert!(check_delta_gamma(&g).tight);
    }
}

#[test]
fn moore_selector_maps_degrees_to_graphs() {
    let c5 = make_family(&FamilySpec::Moore(2)).unwrap();
    assert_eq!(c5.n(), 5);
    let pet = make_family(&FamilySpec::Moore(3)).unwrap();
    assert_eq!((pet.n(), pet.edge_count()), (10, 15));
    let hs = make_family(&FamilySpec::Moore(7)).unwrap();
    assert_eq!((hs.n(), hs.edge_count()), (50, 175));

    assert!(matches!(
        make_family(&FamilySpec::Moore(57)),
        Err(FamilyError::MooreDegree57Open)
    ));
    assert!(matches!(
        make_family(&FamilySpec::Moore(4)),
        Err(FamilyError::MooreDegree(4))
    ));
}

#[test]
fn family_spec_parsing_round_trips() {
    let cases = [
        ("complete", Some(5), FamilySpec::Complete(5)),
        ("star", Some(7), FamilySpec::Star(7)),
        ("cycle", Some(5), FamilySpec::Cycle(5)),
        ("path", Some(3), FamilySpec::Path(3)),
        ("petersen", None, FamilySpec::Petersen),
        ("hoffman-singleton", None, FamilySpec::HoffmanSingleton),
        ("matching-complement", Some(8), FamilySpec::MatchingComplement(8)),
        ("moore", Some(3), FamilySpec::Moore(3)),
    ];
    for (name, param, expected) in cases {
        assert_eq!(FamilySpec::from_parts(name, param).unwrap(), expected);
    }
    assert!(matches!(
        FamilySpec::from_parts("hypercube", Some(3)),
        Err(FamilyError::UnknownFamily(_))
    ));
    assert!(matches!(
        FamilySpec::from_parts("petersen", Some(10)),
        Err(FamilyError::UnexpectedParameter(_))
    ));
    assert!(matches!(
        FamilySpec::from_parts("cycle", None),
        Err(FamilyError::MissingParameter(_))
    ));
    // Range validation lives in construction, not parsing.
    let spec = FamilySpec::from_parts("cycle", Some(2)).unwrap();
    assert!(matches!(
        make_family(&spec),
        Err(FamilyError::InvalidParameter { .. })
    ));
}
