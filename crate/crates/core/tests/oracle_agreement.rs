//! Optimized-versus-oracle agreement over a fixed randomized corpus:
//! associated primes, v-numbers, irreducible decomposition and powers all
//! checked against the brute-force routes on 200 small ideals.

use vstab_core::decompose::{associated_primes, irreducible_decomposition};
use vstab_core::vnumber::v_global;
use vstab_oracle::{
    grid_matches_intersection, naive_ass, naive_power, naive_v, random_ideal, GridSpec, TestRng,
};

#[test]
fn two_hundred_random_ideals_agree_with_the_oracle() {
    let mut rng = TestRng::new(0x0123_4567_89ab_cdef);
    let mut checked = 0;
    while checked < 200 {
        let ideal = random_ideal(&mut rng, 4, 3, 6);
        if ideal.is_zero() || ideal.is_unit() {
            continue;
        }
        checked += 1;

        // associated primes
        let ass = associated_primes(&ideal).unwrap();
        assert_eq!(ass, naive_ass(&ideal), "Ass mismatch on {}", ideal.render());

        // v-numbers per prime and globally
        let report = v_global(&ideal).unwrap();
        let mut naive_global = u64::MAX;
        for p in ass.iter() {
            let expected = naive_v(&ideal, p).expect("associated primes have witnesses");
            assert_eq!(report.per_prime[p], expected, "v_p mismatch on {}", ideal.render());
            naive_global = naive_global.min(expected);
        }
        assert_eq!(report.global, naive_global);

        // irreducible decomposition against the membership grid
        let components: Vec<_> = irreducible_decomposition(&ideal)
            .unwrap()
            .iter()
            .map(|c| c.to_ideal(ideal.context()))
            .collect();
        assert!(
            grid_matches_intersection(&ideal, &components, &GridSpec::for_ideal(&ideal)),
            "decomposition mismatch on {}",
            ideal.render()
        );

        // powers with and without incremental pruning
        for k in 0..=3u32 {
            assert_eq!(
                ideal.power(k).unwrap(),
                naive_power(&ideal, k),
                "power {k} mismatch on {}",
                ideal.render()
            );
        }
    }
}
