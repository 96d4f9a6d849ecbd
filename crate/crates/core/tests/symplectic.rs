use mcgext::presentations::gervais_symbols;
use mcgext::symplectic::{
    scaled_symplectic_assignment, symplectic_assignment, symplectic_form, table_consistency,
    transvection_power, RationalAssignment, RepOutcome,
};
use mcgext::{
    build, build_genus2, build_wajnryb_lift, build_with_table, curve_class, evaluate,
    transvection, verify_presentation_sp, verify_projective_rep, Family, HomologyClass, Incidence,
    IntersectionTable, SymplecticElement,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn class(coords: &[i64]) -> HomologyClass {
    HomologyClass::new(coords.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
}

fn vector(g: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 2 * g)
}

proptest! {
    #[test]
    fn transvections_preserve_the_form(v in vector(3), k in -4i64..=4) {
        let t = transvection_power(&class(&v), 3, &BigInt::from(k)).unwrap();
        let m = t.matrix().clone();
        let j = symplectic_form(3);
        prop_assert_eq!(&(&m.transpose() * &j) * &m, j);
        prop_assert!(SymplecticElement::new(m).is_ok());
    }

    #[test]
    fn sign_of_class_is_irrelevant(v in vector(3)) {
        let c = class(&v);
        prop_assert_eq!(transvection(&c, 3).unwrap(), transvection(&c.negated(), 3).unwrap());
    }

    #[test]
    fn transvection_powers_compose(v in vector(2), a in -3i64..=3, b in -3i64..=3) {
        let c = class(&v);
        let ta = transvection_power(&c, 2, &BigInt::from(a)).unwrap();
        let tb = transvection_power(&c, 2, &BigInt::from(b)).unwrap();
        prop_assert_eq!(ta.compose(&tb), transvection_power(&c, 2, &BigInt::from(a + b)).unwrap());
    }

    #[test]
    fn orthogonal_classes_commute(u in vector(3), w in vector(3), e in vector(3)) {
        // <u, w'> = <u,w><u,e> - <u,e><u,w> = 0.
        let (cu, cw0, ce) = (class(&u), class(&w), class(&e));
        let (a, b) = (cu.pairing(&cw0), cu.pairing(&ce));
        let coords = ce.coords().iter().zip(cw0.coords()).map(|(x, y)| &a * x - &b * y).collect();
        let cw = HomologyClass::new(coords).unwrap();
        prop_assert!(cu.pairing(&cw).is_zero());
        let (tu, tw) = (transvection(&cu, 3).unwrap(), transvection(&cw, 3).unwrap());
        prop_assert_eq!(tu.compose(&tw), tw.compose(&tu));
    }

    #[test]
    fn evaluate_matches_dense_products(letters in prop::collection::vec((1usize..=5, -3i64..=3), 0..12)) {
        let p = build_genus2();
        let a = symplectic_assignment(&p).unwrap();
        let text: Vec<String> = letters
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(i, e)| format!("c{i}^{e}"))
            .collect();
        let w = p.alphabet().parse(&text.join(" ")).unwrap();
        let mut dense = SymplecticElement::identity(2);
        for l in w.letters() {
            let name = p.alphabet().name(l.symbol);
            let v = curve_class(Family::Genus2, name, 2, 0).unwrap();
            dense = dense.compose(&transvection_power(&v, 2, &l.exponent).unwrap());
        }
        prop_assert_eq!(&evaluate(&w, &a).unwrap(), dense.matrix());
    }
}

#[test]
fn basis_action_of_x1() {
    let t = transvection(&HomologyClass::x(3, 1), 3).unwrap();
    let m = t.matrix();
    // Only column y1 moves: y1 ↦ y1 + <y1, x1> x1 = y1 - x1.
    for j in 0..6 {
        for i in 0..6 {
            let expected = if i == j {
                1
            } else if (i, j) == (0, 3) {
                -1
            } else {
                0
            };
            assert_eq!(m[(i, j)], BigInt::from(expected), "entry ({i},{j})");
        }
    }
}

#[test]
fn adjacent_chain_braid_in_sp6() {
    let p = build_wajnryb_lift(3, 1).unwrap();
    let a = symplectic_assignment(&p).unwrap();
    let w = p.relator("braid(c1,c2)").unwrap();
    assert!(evaluate(&w.word, &a).unwrap().is_identity());
}

#[test]
fn every_supported_presentation_passes() {
    let mut cases = vec![(Family::Genus2, 2, 0)];
    for g in 3..=6 {
        cases.push((Family::WajnrybLift, g, 0));
        cases.push((Family::WajnrybLift, g, 1));
        for r in 1..=3 {
            cases.push((Family::GervaisLift, g, r));
        }
    }
    for (family, g, r) in cases {
        let p = build(family, g, r).unwrap();
        let report = verify_presentation_sp(&p);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), p.relators().len());
    }
}

#[test]
fn tables_agree_with_pairings() {
    for g in 3..=6 {
        for r in 0..=1 {
            let t = IntersectionTable::standard(Family::WajnrybLift, g, r).unwrap();
            assert!(table_consistency(&t, Family::WajnrybLift, g, r).is_empty());
        }
        for r in 1..=3 {
            let t = IntersectionTable::standard(Family::GervaisLift, g, r).unwrap();
            assert!(table_consistency(&t, Family::GervaisLift, g, r).is_empty());
        }
    }
}

#[test]
fn corrupted_table_breaks_a_braid_relator() {
    let mut t = IntersectionTable::standard(Family::WajnrybLift, 3, 1).unwrap();
    t.set("c1", "c3", Incidence::Once);
    let p = build_with_table(Family::WajnrybLift, 3, 1, &t).unwrap();
    let report = verify_presentation_sp(&p);
    assert!(!report.passed());
    assert_eq!(report.failures(), vec!["braid(c1,c3)"]);

    let mut t = IntersectionTable::standard(Family::GervaisLift, 3, 1).unwrap();
    t.set("a1", "a2", Incidence::Once);
    let p = build_with_table(Family::GervaisLift, 3, 1, &t).unwrap();
    assert!(verify_presentation_sp(&p).failures().contains(&"braid(a1,a2)"));
}

#[test]
fn consistency_flags_wrong_entry() {
    let mut t = IntersectionTable::standard(Family::WajnrybLift, 3, 1).unwrap();
    t.set("c0", "c4", Incidence::Disjoint);
    let issues = table_consistency(&t, Family::WajnrybLift, 3, 1);
    assert_eq!(issues.len(), 1);
    assert!(issues[0].contains("I(c0,c4)"));
}

#[test]
fn symplectic_fixture_gives_scalar_one() {
    for p in [build_wajnryb_lift(3, 0).unwrap(), build_genus2()] {
        let a = scaled_symplectic_assignment(&p, &BigRational::one()).unwrap();
        for c in verify_projective_rep(&p, &a).unwrap() {
            assert_eq!(c.outcome, RepOutcome::Scalar(BigRational::one()), "{}", c.label);
        }
    }
}

#[test]
fn identity_assignment_gives_scalar_one() {
    let p = build_wajnryb_lift(3, 1).unwrap();
    let mut a = RationalAssignment::new(p.alphabet(), 2);
    for name in p.generators() {
        a.set_invertible(name, mcgext::RationalMatrix::identity(2)).unwrap();
    }
    let checks = verify_projective_rep(&p, &a).unwrap();
    assert!(checks.iter().all(|c| c.scalar() == Some(&BigRational::one())));
}

#[test]
fn scaled_fixture_only_moves_the_lantern() {
    let p = build_wajnryb_lift(4, 0).unwrap();
    let lambda = BigRational::new(BigInt::from(-5), BigInt::from(3));
    let a = scaled_symplectic_assignment(&p, &lambda).unwrap();
    for c in verify_projective_rep(&p, &a).unwrap() {
        let expected = if c.label == "lantern" {
            lambda.recip()
        } else {
            BigRational::one()
        };
        assert_eq!(c.scalar(), Some(&expected), "{}", c.label);
    }
}

#[test]
fn non_scalar_images_are_reported() {
    let p = build_genus2();
    let mut a = RationalAssignment::new(p.alphabet(), 2);
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let upper = mcgext::RationalMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(1)]]).unwrap();
    let lower = mcgext::RationalMatrix::from_rows(vec![vec![q(1), q(0)], vec![q(-1), q(1)]]).unwrap();
    for name in p.generators() {
        let m = if name == "c1" { upper.clone() } else { lower.clone() };
        a.set_invertible(name, m).unwrap();
    }
    let checks = verify_projective_rep(&p, &a).unwrap();
    let comm = checks.iter().find(|c| c.label == "commute(c1,c3)").unwrap();
    assert!(matches!(comm.outcome, RepOutcome::NotScalar { .. }));
}

#[test]
fn assignment_for_other_alphabet_is_rejected() {
    let p = build_genus2();
    let q = build_genus2();
    let a = scaled_symplectic_assignment(&q, &BigRational::one()).unwrap();
    assert!(verify_projective_rep(&p, &a).is_err());
}

#[test]
fn gervais_classes_pair_as_tabulated() {
    let (g, r) = (4, 2);
    let b = curve_class(Family::GervaisLift, "b", g, r).unwrap();
    for name in gervais_symbols(g, r) {
        if let Some(k) = name.strip_prefix('a') {
            let a = curve_class(Family::GervaisLift, &name, g, r).unwrap();
            assert_eq!(a.pairing(&b).abs(), BigInt::one(), "a{k}");
        }
    }
}
