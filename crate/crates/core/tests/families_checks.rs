//! Cross-validation of the built-in families: closed-form predictions
//! against engine computations, and end-to-end index detection.

use vstab_core::decompose::{associated_primes, AssSet};
use vstab_core::families::{
    composite_blocks, composite_family, extend_primes_by_xy, family_h, family_j,
    predict_ass_disjoint_sum, predict_v_composites,
};
use vstab_core::ideal::MonomialIdeal;
use vstab_core::monomial::Monomial;
use vstab_core::prime::MonomialPrime;
use vstab_core::stability::{build_profile, detect_astab, detect_vstab};
use vstab_core::vnumber::v_global;
use vstab_core::VariableContext;

fn edge(a: usize, b: usize, arity: usize) -> Monomial {
    let mut exps = vec![0u32; arity];
    exps[a] = 1;
    exps[b] = 1;
    Monomial::new(exps)
}

/// Two disjoint triangles in a shared six-variable context.
fn two_triangles() -> (MonomialIdeal, MonomialIdeal) {
    let ctx = VariableContext::new((1..=6).map(|i| format!("x{i}"))).unwrap();
    let t1 = MonomialIdeal::new(
        ctx.clone(),
        vec![edge(0, 1, 6), edge(0, 2, 6), edge(1, 2, 6)],
    )
    .unwrap();
    let t2 = MonomialIdeal::new(
        ctx,
        vec![edge(3, 4, 6), edge(3, 5, 6), edge(4, 5, 6)],
    )
    .unwrap();
    (t1, t2)
}

#[test]
fn disjoint_sum_formula_matches_direct_computation() {
    let (t1, t2) = two_triangles();
    let sum = t1.sum(&t2).unwrap();
    assert_eq!(sum, family_j(3).unwrap());

    let horizon = 4;
    let p1 = build_profile(&t1, horizon).unwrap();
    let p2 = build_profile(&t2, horizon).unwrap();
    let ass1: Vec<AssSet> = p1.entries.iter().map(|e| e.ass.clone()).collect();
    let ass2: Vec<AssSet> = p2.entries.iter().map(|e| e.ass.clone()).collect();

    let direct = build_profile(&sum, horizon).unwrap();
    for k in 1..=horizon {
        let predicted = predict_ass_disjoint_sum(&ass1, &ass2, k).unwrap();
        assert_eq!(predicted, direct.entry(k).ass, "disjoint-sum formula at k = {k}");
    }
    assert_eq!(direct.entry(1).ass.len(), 9);

    // the sum of two triangles stabilizes one power later than a triangle
    let wide = build_profile(&sum, 5).unwrap();
    let est = detect_astab(&wide, 2).unwrap().conclusive().unwrap().clone();
    assert_eq!(est.index, 3);
    assert_eq!(est.ascending, Some(true));
}

#[test]
fn scaled_block_shifts_ass_by_the_scaling_variable() {
    for (a, b) in [(2u32, 1u32), (2, 2), (3, 1)] {
        let parts = composite_blocks(a, b).unwrap();
        let horizon = 4;
        let sum_profile = build_profile(&parts.sum, horizon).unwrap();
        let scaled_profile = build_profile(&parts.scaled, horizon).unwrap();
        let x0 = MonomialPrime::new([0]).unwrap();
        for k in 1..=horizon {
            let mut expected: AssSet = sum_profile.entry(k).ass.iter().cloned().collect();
            expected.insert(x0.clone());
            assert_eq!(
                scaled_profile.entry(k).ass,
                expected,
                "Ass(L^{k}) vs Ass(J^{k}) + (x0) at (a, b) = ({a}, {b})"
            );
        }
    }
}

#[test]
fn composite_ass_shape_and_v_values() {
    for (a, b) in [(2u32, 1u32), (2, 2)] {
        let parts = composite_blocks(a, b).unwrap();
        let ideal = composite_family(a, b).unwrap();
        let horizon = 4;
        let profile = build_profile(&ideal, horizon).unwrap();
        let scaled_profile = build_profile(&parts.scaled, horizon).unwrap();
        let sum_profile = build_profile(&parts.sum, horizon).unwrap();
        for k in 1..=horizon {
            let predicted = predict_v_composites(a, b, k).unwrap();
            assert_eq!(profile.entry(k).v.global, predicted.v_total, "v(I^{k}) at ({a},{b})");
            assert_eq!(
                scaled_profile.entry(k).v.global,
                predicted.v_scaled,
                "v(L^{k}) at ({a},{b})"
            );
            assert_eq!(sum_profile.entry(k).v.global, predicted.v_sum, "v(J^{k}) at ({a},{b})");
            let expected_ass =
                extend_primes_by_xy(&scaled_profile.entry(k).ass, ideal.context());
            assert_eq!(profile.entry(k).ass, expected_ass, "Ass(I^{k}) shape at ({a},{b})");
        }
    }
}

#[test]
fn two_var_family_detection_end_to_end() {
    for b in 1..=3u32 {
        let ideal = family_h(b).unwrap();
        let profile = build_profile(&ideal, b + 3).unwrap();
        let astab = detect_astab(&profile, 2).unwrap().conclusive().unwrap().clone();
        let vstab = detect_vstab(&profile, 2).unwrap().conclusive().unwrap().clone();
        assert_eq!((astab.index, vstab.index), (1, b));
        assert_eq!(vstab.line, Some((2 * i64::from(b) + 1, -1)));
        assert!(astab.certify_against(1).certified);
    }
}

#[test]
fn composite_detection_end_to_end_small() {
    let ideal = composite_family(2, 1).unwrap();
    let profile = build_profile(&ideal, 5).unwrap();
    let astab = detect_astab(&profile, 2).unwrap().conclusive().unwrap().clone();
    let vstab = detect_vstab(&profile, 2).unwrap().conclusive().unwrap().clone();
    assert_eq!((astab.index, vstab.index), (2, 1));
    assert_eq!(vstab.line, Some((3, 1)));
}

#[test]
fn detection_is_stable_under_horizon_growth() {
    for (ideal, base) in [
        (family_h(2).unwrap(), 5u32),
        (composite_family(2, 1).unwrap(), 5u32),
    ] {
        let short = build_profile(&ideal, base).unwrap();
        let long = build_profile(&ideal, base + 1).unwrap();
        let a_short = detect_astab(&short, 2).unwrap().conclusive().unwrap().index;
        let a_long = detect_astab(&long, 2).unwrap().conclusive().unwrap().index;
        assert_eq!(a_short, a_long);
        let v_short = detect_vstab(&short, 2).unwrap().conclusive().unwrap().index;
        let v_long = detect_vstab(&long, 2).unwrap().conclusive().unwrap().index;
        assert_eq!(v_short, v_long);
    }
}

#[test]
fn min_of_linear_consistency_past_astab() {
    // v(I^k) equals the minimum of v_p(I^k) over the stable Ass for k past
    // the detected astab
    let ideal = composite_family(2, 1).unwrap();
    let profile = build_profile(&ideal, 5).unwrap();
    let astab = detect_astab(&profile, 2).unwrap().conclusive().unwrap().index;
    let stable = &profile.entry(profile.horizon()).ass;
    for k in astab..=profile.horizon() {
        let entry = profile.entry(k);
        let min_over_stable =
            stable.iter().map(|p| entry.v.per_prime[p]).min().unwrap();
        assert_eq!(entry.v.global, min_over_stable, "k = {k}");
    }
}

#[test]
fn triangle_power_witness_identity() {
    // J^2 : (x1 x2 x3) is the full triangle prime, with the product witness
    let t = vstab_core::families::triangle(1).unwrap();
    let sq = t.power(2).unwrap();
    let witness = Monomial::new(vec![1, 1, 1]);
    let m1 = MonomialPrime::new([0, 1, 2]).unwrap();
    assert_eq!(sq.colon(&witness).unwrap(), m1.to_ideal(sq.context()).unwrap());
    let report = v_global(&sq).unwrap();
    assert_eq!(report.witnesses[&m1], witness);
    assert!(associated_primes(&sq).unwrap().contains(&m1));
}
