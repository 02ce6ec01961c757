//! Property suites pinning the engine against brute-force oracles and the
//! algebraic identities every operation must satisfy.

use proptest::prelude::*;
use vstab_core::decompose::{
    associated_primes, associated_primes_by_search, associated_primes_from_components,
    find_witness, irreducible_decomposition, minimal_primes,
};
use vstab_core::ideal::MonomialIdeal;
use vstab_core::monomial::Monomial;
use vstab_core::text::{parse_ideal, render_ideal};
use vstab_core::vnumber::{v_global, v_p, vm_two_variable};
use vstab_core::VariableContext;
use vstab_oracle::{
    grid_equal, grid_matches_intersection, naive_v, naive_witness, random_staircase, GridSpec,
    TestRng,
};

fn ctx(arity: usize) -> VariableContext {
    VariableContext::new((0..arity).map(|i| format!("t{i}"))).unwrap()
}

fn ideal_from(gens: &[Vec<u32>], arity: usize) -> MonomialIdeal {
    MonomialIdeal::new(ctx(arity), gens.iter().map(|g| Monomial::new(g.clone())).collect())
        .unwrap()
}

/// (arity, generator exponent rows)
fn arb_gens(
    max_vars: usize,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1..=max_vars).prop_flat_map(move |arity| {
        (
            Just(arity),
            prop::collection::vec(prop::collection::vec(0..=max_exp, arity), 0..=max_gens),
        )
    })
}

fn arb_monomial(arity: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(Monomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_canonical_and_idempotent(
        (arity, gens) in arb_gens(4, 4, 6),
        seed in any::<u64>(),
    ) {
        let ideal = ideal_from(&gens, arity);
        // idempotent
        let again = MonomialIdeal::new(ideal.context().clone(), ideal.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &ideal);
        // order-independent: shuffle the raw input
        let mut shuffled = gens.clone();
        let mut rng = TestRng::new(seed);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.below(i as u32 + 1) as usize);
        }
        prop_assert_eq!(ideal_from(&shuffled, arity), ideal);
    }

    #[test]
    fn power_is_additive(
        (arity, gens) in arb_gens(3, 3, 4),
        k in 0u32..=3,
        m in 0u32..=3,
    ) {
        let ideal = ideal_from(&gens, arity);
        let a = ideal.power(k).unwrap();
        let b = ideal.power(m).unwrap();
        let mut products = Vec::new();
        for x in a.generators() {
            for y in b.generators() {
                products.push(x.checked_mul(y).unwrap());
            }
        }
        let combined = MonomialIdeal::new(ideal.context().clone(), products).unwrap();
        prop_assert_eq!(combined, ideal.power(k + m).unwrap());
    }

    #[test]
    fn colon_adjunction(
        (arity, gens) in arb_gens(4, 4, 6),
        u_exps in prop::collection::vec(0u32..=4, 4),
        v_exps in prop::collection::vec(0u32..=4, 4),
    ) {
        let ideal = ideal_from(&gens, arity);
        let u = Monomial::new(u_exps[..arity].to_vec());
        let v = Monomial::new(v_exps[..arity].to_vec());
        let colon = ideal.colon(&u).unwrap();
        prop_assert_eq!(colon.contains(&v), ideal.contains(&u.checked_mul(&v).unwrap()));
    }

    #[test]
    fn power_generators_respect_alpha(
        (arity, gens) in arb_gens(3, 3, 4),
        k in 1u32..=4,
    ) {
        let ideal = ideal_from(&gens, arity);
        if ideal.is_zero() || ideal.is_unit() {
            return Ok(());
        }
        let alpha = ideal.alpha().unwrap();
        let power = ideal.power(k).unwrap();
        for g in power.generators() {
            prop_assert!(g.degree() >= alpha * u64::from(k));
        }
        let equigenerated =
            ideal.generators().iter().all(|g| g.degree() == alpha);
        if equigenerated {
            prop_assert!(power.generators().iter().any(|g| g.degree() == alpha * u64::from(k)));
        }
    }

    #[test]
    fn canonical_equality_matches_membership_grid(
        (arity, gens_a) in arb_gens(3, 3, 4),
        gens_b in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 0..=4),
    ) {
        let a = ideal_from(&gens_a, arity);
        let rows: Vec<Vec<u32>> = gens_b.iter().map(|g| g[..arity].to_vec()).collect();
        let b = ideal_from(&rows, arity);
        let grid = GridSpec::for_pair(&a, &b);
        prop_assert_eq!(a == b, grid_equal(&a, &b, &grid));
    }

    #[test]
    fn decomposition_agrees_with_membership(
        (arity, gens) in arb_gens(3, 3, 4),
    ) {
        let ideal = ideal_from(&gens, arity);
        if ideal.is_zero() || ideal.is_unit() {
            return Ok(());
        }
        let components: Vec<MonomialIdeal> = irreducible_decomposition(&ideal)
            .unwrap()
            .iter()
            .map(|c| c.to_ideal(ideal.context()))
            .collect();
        prop_assert!(grid_matches_intersection(&ideal, &components, &GridSpec::for_ideal(&ideal)));
    }

    #[test]
    fn ass_routes_agree(
        (arity, gens) in arb_gens(4, 3, 6),
    ) {
        let ideal = ideal_from(&gens, arity);
        if ideal.is_zero() || ideal.is_unit() {
            return Ok(());
        }
        let fast = associated_primes(&ideal).unwrap();
        prop_assert_eq!(&fast, &associated_primes_from_components(&ideal).unwrap());
        prop_assert_eq!(&fast, &associated_primes_by_search(&ideal).unwrap());
        let min = minimal_primes(&ideal).unwrap();
        prop_assert!(min.is_subset_of(&fast));
    }

    #[test]
    fn witnesses_are_valid_and_box_stable(
        (arity, gens) in arb_gens(3, 3, 4),
    ) {
        let ideal = ideal_from(&gens, arity);
        if ideal.is_zero() || ideal.is_unit() {
            return Ok(());
        }
        let report = v_global(&ideal).unwrap();
        prop_assert_eq!(report.global, report.per_prime.values().copied().min().unwrap());
        for (p, witness) in &report.witnesses {
            prop_assert!(!ideal.contains(witness));
            prop_assert_eq!(
                &ideal.colon(witness).unwrap(),
                &p.to_ideal(ideal.context()).unwrap()
            );
            prop_assert_eq!(witness.degree(), report.per_prime[p]);
            // the optimized witness matches the exhaustive search, and
            // widening the search box never changes the result
            let grid = GridSpec::for_ideal(&ideal);
            let by_search = naive_witness(&ideal, p, &grid).unwrap();
            prop_assert_eq!(&by_search, &find_witness(&ideal, p).unwrap().unwrap());
            prop_assert_eq!(naive_witness(&ideal, p, &grid.widened(2)).unwrap(), by_search);
        }
    }

    #[test]
    fn text_format_round_trips(
        (arity, gens) in arb_gens(4, 6, 6),
    ) {
        let ideal = ideal_from(&gens, arity);
        let text = render_ideal(&ideal);
        let parsed = parse_ideal(&text).unwrap();
        prop_assert_eq!(&parsed, &ideal);
        prop_assert_eq!(render_ideal(&parsed), text);
    }
}

#[test]
fn staircase_closed_form_agrees_with_search() {
    let mut rng = TestRng::new(0x5eed);
    for _ in 0..100 {
        let ideal = random_staircase(&mut rng, 8);
        let m = vstab_core::MonomialPrime::new([0, 1]).unwrap();
        let closed = vm_two_variable(&ideal).unwrap();
        assert_eq!(closed, v_p(&ideal, &m).unwrap(), "closed form vs engine on {}", ideal.render());
        assert_eq!(Some(closed), naive_v(&ideal, &m), "closed form vs box search on {}", ideal.render());
    }
}

#[test]
fn equigenerated_lower_bound() {
    // v(I^k) >= alpha*k - 1 for ideals generated in a single degree
    let mut rng = TestRng::new(0xfeed);
    for _ in 0..40 {
        let degree = 1 + rng.below(3);
        let ideal = vstab_oracle::random_equigenerated(&mut rng, 3, degree, 4);
        if ideal.is_unit() {
            continue;
        }
        let alpha = ideal.alpha().unwrap();
        for k in 1..=3u32 {
            let power = ideal.power(k).unwrap();
            if power.is_unit() {
                continue;
            }
            let v = v_global(&power).unwrap().global;
            assert!(
                v as i64 >= (alpha * u64::from(k)) as i64 - 1,
                "v={v} below bound for {} at k={k}",
                ideal.render()
            );
        }
    }
}

#[test]
fn edge_ideal_min_equals_ass_at_first_power() {
    // squarefree quadratic generators: Ass = Min at k = 1
    let mut rng = TestRng::new(0xabcd);
    for _ in 0..60 {
        let arity = 3 + rng.below(2) as usize;
        let mut gens = Vec::new();
        for _ in 0..2 + rng.below(3) {
            let a = rng.below(arity as u32) as usize;
            let b = rng.below(arity as u32) as usize;
            if a != b {
                let mut exps = vec![0u32; arity];
                exps[a] = 1;
                exps[b] = 1;
                gens.push(Monomial::new(exps));
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(ctx(arity), gens).unwrap();
        let ass = associated_primes(&ideal).unwrap();
        let min = minimal_primes(&ideal).unwrap();
        assert_eq!(ass, min, "embedded prime on edge ideal {}", ideal.render());
    }
}
