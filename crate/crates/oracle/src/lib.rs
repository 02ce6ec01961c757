#![forbid(unsafe_code)]

//! Brute-force reference routes for the test suites: membership grids,
//! unpruned witness searches and naive power expansion. Deliberately slow
//! and deliberately simple; nothing here belongs in a release build, which
//! is why this crate is only ever a dev-dependency.

use vstab_core::decompose::ideal_as_prime;
use vstab_core::{AssSet, Monomial, MonomialIdeal, MonomialPrime, VariableContext};

/// Per-variable exponent bounds for an exhaustive scan. The default bound
/// for an ideal is one past the componentwise maximum over its generators,
/// which is enough to separate any two distinct monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub bounds: Vec<u32>,
}

impl GridSpec {
    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        Self { bounds: ideal.max_exponents().iter().map(|e| e + 1).collect() }
    }

    pub fn for_pair(a: &MonomialIdeal, b: &MonomialIdeal) -> Self {
        let (ba, bb) = (Self::for_ideal(a), Self::for_ideal(b));
        Self {
            bounds: ba.bounds.iter().zip(&bb.bounds).map(|(x, y)| *x.max(y)).collect(),
        }
    }

    /// The same grid with every bound raised by `extra`.
    pub fn widened(&self, extra: u32) -> Self {
        Self { bounds: self.bounds.iter().map(|b| b + extra).collect() }
    }

    /// Every monomial in the box, in ascending graded-lex order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.bounds.len()];
        loop {
            out.push(Monomial::new(exps.clone()));
            let mut i = 0;
            loop {
                if i == exps.len() {
                    out.sort_unstable();
                    return out;
                }
                if exps[i] < self.bounds[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

/// Membership agreement over every monomial of the grid. With default
/// bounds this certifies equality of monomial ideals.
pub fn grid_equal(a: &MonomialIdeal, b: &MonomialIdeal, grid: &GridSpec) -> bool {
    grid.monomials().iter().all(|m| a.contains(m) == b.contains(m))
}

/// True iff membership in `ideal` agrees with membership in every component
/// across the grid.
pub fn grid_matches_intersection(
    ideal: &MonomialIdeal,
    components: &[MonomialIdeal],
    grid: &GridSpec,
) -> bool {
    grid.monomials()
        .iter()
        .all(|m| ideal.contains(m) == components.iter().all(|c| c.contains(m)))
}

/// The witness of minimum degree for `ideal : u == p`, by scanning the whole
/// grid in ascending graded-lex order.
pub fn naive_witness(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    grid: &GridSpec,
) -> Option<Monomial> {
    let target = p.to_ideal(ideal.context()).expect("prime fits the context");
    grid.monomials()
        .into_iter()
        .find(|u| !ideal.contains(u) && ideal.colon(u).expect("matching arity") == target)
}

/// v_p by unpruned search over the default grid.
pub fn naive_v(ideal: &MonomialIdeal, p: &MonomialPrime) -> Option<u64> {
    naive_witness(ideal, p, &GridSpec::for_ideal(ideal)).map(|u| u.degree())
}

/// Associated primes by colon inspection of every grid monomial.
pub fn naive_ass(ideal: &MonomialIdeal) -> AssSet {
    let mut out = AssSet::new();
    for u in GridSpec::for_ideal(ideal).monomials() {
        if ideal.contains(&u) {
            continue;
        }
        if let Some(p) = ideal_as_prime(&ideal.colon(&u).expect("matching arity")) {
            out.insert(p);
        }
    }
    out
}

/// The k-th power by full expansion of all generator products, minimalized
/// only at the very end.
pub fn naive_power(ideal: &MonomialIdeal, k: u32) -> MonomialIdeal {
    let ctx = ideal.context().clone();
    if k == 0 {
        return MonomialIdeal::unit(ctx);
    }
    let mut products = vec![Monomial::one(ideal.arity())];
    for _ in 0..k {
        let mut next = Vec::with_capacity(products.len() * ideal.generators().len());
        for p in &products {
            for g in ideal.generators() {
                next.push(p.checked_mul(g).expect("oracle exponents stay small"));
            }
        }
        products = next;
    }
    MonomialIdeal::new(ctx, products).expect("products match the context")
}

/// A tiny deterministic generator for randomized agreement suites.
#[derive(Debug, Clone)]
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        // xorshift64*
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform value in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u32) -> u32 {
        (self.next_u64() % u64::from(bound)) as u32
    }
}

/// A random ideal with up to `max_vars` variables, `max_gens` generators and
/// exponents at most `max_exp`. May be zero; never the unit ideal.
pub fn random_ideal(rng: &mut TestRng, max_vars: u32, max_exp: u32, max_gens: u32) -> MonomialIdeal {
    let arity = 1 + rng.below(max_vars) as usize;
    let ctx = VariableContext::new((0..arity).map(|i| format!("t{i}"))).unwrap();
    let gens = (0..rng.below(max_gens + 1))
        .map(|_| loop {
            let exps: Vec<u32> = (0..arity).map(|_| rng.below(max_exp + 1)).collect();
            if exps.iter().any(|&e| e > 0) {
                return Monomial::new(exps);
            }
        })
        .collect();
    MonomialIdeal::new(ctx, gens).unwrap()
}

/// A random proper nonzero ideal generated in a single degree.
pub fn random_equigenerated(rng: &mut TestRng, max_vars: u32, degree: u32, max_gens: u32) -> MonomialIdeal {
    let arity = 1 + rng.below(max_vars) as usize;
    let ctx = VariableContext::new((0..arity).map(|i| format!("t{i}"))).unwrap();
    let degree = degree.max(1);
    let gens = (0..1 + rng.below(max_gens))
        .map(|_| {
            // scatter `degree` across the variables
            let mut exps = vec![0u32; arity];
            for _ in 0..degree {
                let i = rng.below(arity as u32) as usize;
                exps[i] += 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(ctx, gens).unwrap()
}

/// A random two-variable ideal primary to (x, y), with strictly monotone
/// staircase exponents bounded by `max_exp`.
pub fn random_staircase(rng: &mut TestRng, max_exp: u32) -> MonomialIdeal {
    let max_exp = max_exp.max(2);
    let m = 2 + rng.below(4) as usize;
    let mut a: Vec<u32> = Vec::new();
    let mut b: Vec<u32> = Vec::new();
    while a.len() < m - 1 {
        let v = 1 + rng.below(max_exp);
        if !a.contains(&v) {
            a.push(v);
        }
        let w = 1 + rng.below(max_exp);
        if b.len() < m - 1 && !b.contains(&w) {
            b.push(w);
        }
    }
    while b.len() < m - 1 {
        let w = 1 + rng.below(max_exp);
        if !b.contains(&w) {
            b.push(w);
        }
    }
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable();
    let ctx = VariableContext::new(["x", "y"]).unwrap();
    let mut gens = vec![Monomial::new(vec![a[0], 0])];
    for i in 1..m - 1 {
        gens.push(Monomial::new(vec![a[i], b[i - 1]]));
    }
    gens.push(Monomial::new(vec![0, b[m - 2]]));
    MonomialIdeal::new(ctx, gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let arity = gens[0].len();
        let ctx = VariableContext::new((0..arity).map(|i| format!("t{i}"))).unwrap();
        MonomialIdeal::new(ctx, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    #[test]
    fn grid_certifies_equality_and_inequality() {
        let a = ideal(&[&[2, 0], &[1, 1]]);
        assert!(grid_equal(&a, &a, &GridSpec::for_ideal(&a)));
        let x = ideal(&[&[1]]);
        let x2 = ideal(&[&[2]]);
        assert!(!grid_equal(&x, &x2, &GridSpec::for_pair(&x, &x2)));
    }

    #[test]
    fn grid_checks_component_intersections() {
        // (x^2, x y) = (x) cap (x^2, y)
        let i = ideal(&[&[2, 0], &[1, 1]]);
        let components = [ideal(&[&[1, 0]]), ideal(&[&[2, 0], &[0, 1]])];
        assert!(grid_matches_intersection(&i, &components, &GridSpec::for_ideal(&i)));
    }

    #[test]
    fn naive_v_on_staircase() {
        let h = ideal(&[&[3, 0], &[2, 1], &[0, 3]]);
        let m = MonomialPrime::new([0, 1]).unwrap();
        assert_eq!(naive_v(&h, &m), Some(2));
        let max = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(naive_v(&max, &m), Some(0));
    }

    #[test]
    fn naive_ass_of_triangle_square() {
        let t = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = naive_power(&t, 2);
        assert_eq!(naive_ass(&sq).len(), 4);
    }

    #[test]
    fn naive_power_matches_small_cases() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(naive_power(&m, 2), m.power(2).unwrap());
        assert!(naive_power(&m, 0).is_unit());
    }

    #[test]
    fn staircases_are_well_formed() {
        let mut rng = TestRng::new(7);
        for _ in 0..50 {
            let s = random_staircase(&mut rng, 8);
            let gens = s.generators();
            assert!(gens.len() >= 2);
            assert!(gens.iter().any(|g| g.exponent(1) == 0));
            assert!(gens.iter().any(|g| g.exponent(0) == 0));
        }
    }
}
