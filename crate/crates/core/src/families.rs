//! Built-in ideal families with known stabilization behaviour, plus the
//! closed-form predictions their power profiles must reproduce.
//!
//! Family `H(b)` lives in two variables; the composite family combines a
//! scaled sum of disjoint triangle edge ideals with an `H` block and realizes
//! any prescribed pair of stabilization indices (a, b). Predictions are kept
//! independent of the engine: they hard-code the closed forms so that tests
//! compare two genuinely different routes.

use crate::context::VariableContext;
use crate::decompose::AssSet;
use crate::error::IdealError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;

/// The two-variable family (x^{2b+1}, x^2 y^{2b-1}, y^{2b+1}), b >= 1.
pub fn family_h(b: u32) -> Result<MonomialIdeal, IdealError> {
    if b < 1 {
        return Err(IdealError::Parameter("family H needs b >= 1".into()));
    }
    let ctx = VariableContext::new(["x", "y"])?;
    let gens = vec![
        Monomial::new(vec![2 * b + 1, 0]),
        Monomial::new(vec![2, 2 * b - 1]),
        Monomial::new(vec![0, 2 * b + 1]),
    ];
    MonomialIdeal::new(ctx, gens)
}

/// The predicted minimal generators of H(b)^k:
/// u_{i,j} = x^{(2b+1)(k-i)+2(i-j)} y^{(2b+1)i-2(i-j)} for 0 <= j <= i <= k,
/// as a set (coincident pairs collapse once k >= b).
pub fn predict_h_power_gens(b: u32, k: u32) -> Result<Vec<Monomial>, IdealError> {
    if b < 1 || k < 1 {
        return Err(IdealError::Parameter("predicted powers need b >= 1 and k >= 1".into()));
    }
    let d = 2 * b + 1;
    let mut gens = Vec::new();
    for i in 0..=k {
        for j in 0..=i {
            let xe = d * (k - i) + 2 * (i - j);
            let ye = d * i - 2 * (i - j);
            gens.push(Monomial::new(vec![xe, ye]));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// The triangle edge ideal on variables x_{3i-2}, x_{3i-1}, x_{3i}.
pub fn triangle(i: u32) -> Result<MonomialIdeal, IdealError> {
    if i < 1 {
        return Err(IdealError::Parameter("triangle blocks are numbered from 1".into()));
    }
    let base = 3 * (i - 1);
    let ctx = VariableContext::new((1..=3).map(|j| format!("x{}", base + j)))?;
    MonomialIdeal::new(
        ctx,
        vec![
            Monomial::new(vec![1, 1, 0]),
            Monomial::new(vec![1, 0, 1]),
            Monomial::new(vec![0, 1, 1]),
        ],
    )
}

fn triangle_gens_at(offset: usize, arity: usize) -> Vec<Monomial> {
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    pairs
        .iter()
        .map(|&(p, q)| {
            let mut exps = vec![0u32; arity];
            exps[offset + p] = 1;
            exps[offset + q] = 1;
            Monomial::new(exps)
        })
        .collect()
}

/// The sum of a - 1 triangle edge ideals in pairwise disjoint variables
/// x_1..x_{3(a-1)}; defined for a >= 2.
pub fn family_j(a: u32) -> Result<MonomialIdeal, IdealError> {
    if a < 2 {
        return Err(IdealError::Parameter("family J needs a >= 2".into()));
    }
    let blocks = (a - 1) as usize;
    let arity = 3 * blocks;
    let ctx = VariableContext::new((1..=arity).map(|j| format!("x{j}")))?;
    let mut gens = Vec::new();
    for block in 0..blocks {
        gens.extend(triangle_gens_at(3 * block, arity));
    }
    MonomialIdeal::new(ctx, gens)
}

/// The three blocks of the composite family over its shared context
/// (x0, x1, ..., x_{3(a-1)}, x, y): the plain triangle sum J, the scaled
/// block x0^{2b-1} * J, and the H(b) block in the trailing two variables.
#[derive(Debug, Clone)]
pub struct CompositeBlocks {
    pub context: VariableContext,
    pub sum: MonomialIdeal,
    pub scaled: MonomialIdeal,
    pub two_var: MonomialIdeal,
}

pub fn composite_blocks(a: u32, b: u32) -> Result<CompositeBlocks, IdealError> {
    if a < 2 || b < 1 {
        return Err(IdealError::Parameter("composite blocks need a >= 2 and b >= 1".into()));
    }
    let blocks = (a - 1) as usize;
    let arity = 1 + 3 * blocks + 2;
    let mut names = vec!["x0".to_string()];
    names.extend((1..=3 * blocks).map(|j| format!("x{j}")));
    names.push("x".into());
    names.push("y".into());
    let ctx = VariableContext::new(names)?;

    let mut sum_gens = Vec::new();
    for block in 0..blocks {
        sum_gens.extend(triangle_gens_at(1 + 3 * block, arity));
    }
    let sum = MonomialIdeal::new(ctx.clone(), sum_gens)?;

    let mut scale = vec![0u32; arity];
    scale[0] = 2 * b - 1;
    let scaled = sum.scale(&Monomial::new(scale))?;

    let d = 2 * b + 1;
    let (x, y) = (arity - 2, arity - 1);
    let mut h_gens = Vec::new();
    for (xe, ye) in [(d, 0), (2, d - 2), (0, d)] {
        let mut exps = vec![0u32; arity];
        exps[x] = xe;
        exps[y] = ye;
        h_gens.push(Monomial::new(exps));
    }
    let two_var = MonomialIdeal::new(ctx.clone(), h_gens)?;

    Ok(CompositeBlocks { context: ctx, sum, scaled, two_var })
}

/// The composite family x0^{2b-1} J + (x^{2b+1}, x^2 y^{2b-1}, y^{2b+1}) in
/// the variables actually used by its generators. For a = 1 there is no
/// triangle block and the family degenerates to H(b).
pub fn composite_family(a: u32, b: u32) -> Result<MonomialIdeal, IdealError> {
    if a < 1 || b < 1 {
        return Err(IdealError::Parameter("composite family needs a >= 1 and b >= 1".into()));
    }
    if a == 1 {
        return family_h(b);
    }
    let parts = composite_blocks(a, b)?;
    parts.scaled.sum(&parts.two_var)
}

/// The ground truth (astab, vstab) = (a, b) for the composite family; for
/// a = 1 this is the two-variable family with astab 1.
pub fn expected_indices(a: u32, b: u32) -> (u32, u32) {
    (a.max(1), b)
}

/// Default detection horizon for the built-in families.
pub fn default_horizon(a: u32, b: u32) -> u32 {
    (2 * b + 2).max(a + b + 2).max(6)
}

/// Associated primes of the k-th power of a sum of two ideals in disjoint
/// variables: unions p + q with p in Ass(A^{k-l}) and q in Ass(B^{l+1}) for
/// 0 <= l < k. The slices are indexed from power 1.
pub fn predict_ass_disjoint_sum(
    profile_a: &[AssSet],
    profile_b: &[AssSet],
    k: u32,
) -> Result<AssSet, IdealError> {
    let k = k as usize;
    if k < 1 || profile_a.len() < k || profile_b.len() < k {
        return Err(IdealError::Parameter(format!(
            "disjoint-sum prediction at power {k} needs both profiles up to that power"
        )));
    }
    let support: fn(&[AssSet]) -> std::collections::BTreeSet<usize> = |profile| {
        profile
            .iter()
            .flat_map(|a| a.iter())
            .flat_map(|p| p.support().iter().copied())
            .collect()
    };
    if !support(profile_a).is_disjoint(&support(profile_b)) {
        return Err(IdealError::Parameter(
            "disjoint-sum prediction needs disjoint variable supports".into(),
        ));
    }
    let mut out = AssSet::new();
    for l in 0..k {
        for p in profile_a[k - l - 1].iter() {
            for q in profile_b[l].iter() {
                out.insert(p.union(q));
            }
        }
    }
    Ok(out)
}

/// The hard-coded v_m(H(b)^j) values: (2b+1)j for 1 <= j <= b-1 and
/// (2b+1)j - 1 for j >= b.
pub fn vm_h(b: u32, j: u32) -> u64 {
    let d = u64::from(2 * b + 1);
    let j64 = u64::from(j);
    if j + 1 <= b {
        d * j64
    } else {
        d * j64 - 1
    }
}

/// One term of the minimization defining v of the composite power:
/// v of the scaled block at power k - l plus v_m of the H block at power
/// l + 1.
pub fn composite_minimand(b: u32, k: u32, l: u32) -> u64 {
    let d = u64::from(2 * b + 1);
    d * u64::from(k - l) - 1 + vm_h(b, l + 1)
}

/// Predicted v-numbers for the composite construction at power k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositePrediction {
    /// v(J^k) = 2k + a - 3 for the triangle sum.
    pub v_sum: u64,
    /// v(L^k) = (2b+1)k - 1 for the scaled block.
    pub v_scaled: u64,
    /// v(I^k), minimized over the split parameter l.
    pub v_total: u64,
}

pub fn predict_v_composites(a: u32, b: u32, k: u32) -> Result<CompositePrediction, IdealError> {
    if a < 2 || b < 1 || k < 1 {
        return Err(IdealError::Parameter(
            "composite predictions need a >= 2, b >= 1, k >= 1".into(),
        ));
    }
    let v_sum = 2 * u64::from(k) + u64::from(a) - 3;
    let v_scaled = u64::from(2 * b + 1) * u64::from(k) - 1;
    let v_total = (0..k).map(|l| composite_minimand(b, k, l)).min().expect("k >= 1");
    Ok(CompositePrediction { v_sum, v_scaled, v_total })
}

/// Primes of the composite power: (p, x, y) for p associated to the scaled
/// block's power, with x and y the trailing variables of the context.
pub fn extend_primes_by_xy(primes: &AssSet, ctx: &VariableContext) -> AssSet {
    let xy = MonomialPrime::new([ctx.arity() - 2, ctx.arity() - 1]).expect("two variables");
    primes.iter().map(|p| p.union(&xy)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vnumber::v_global;

    fn mon(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn family_h_instances() {
        let h1 = family_h(1).unwrap();
        assert_eq!(h1.generators(), &[mon(&[3, 0]), mon(&[2, 1]), mon(&[0, 3])]);
        let h2 = family_h(2).unwrap();
        assert_eq!(h2.generators(), &[mon(&[5, 0]), mon(&[2, 3]), mon(&[0, 5])]);
        for b in 1..=3 {
            assert_eq!(family_h(b).unwrap().alpha().unwrap(), u64::from(2 * b + 1));
        }
        assert!(family_h(0).is_err());
    }

    #[test]
    fn predicted_generators_instantiate() {
        let predicted = predict_h_power_gens(1, 2).unwrap();
        let expected: Vec<Monomial> =
            [[0, 6], [2, 4], [3, 3], [4, 2], [5, 1], [6, 0]].iter().map(|e| mon(e)).collect();
        assert_eq!(predicted, expected);
        // k = 1 reproduces the generators themselves
        let h2 = family_h(2).unwrap();
        let predicted = predict_h_power_gens(2, 1).unwrap();
        let mut gens = h2.generators().to_vec();
        gens.sort_unstable();
        assert_eq!(predicted, gens);
    }

    #[test]
    fn predicted_generators_incomparable_below_b() {
        // k < b: all (k+1)(k+2)/2 monomials distinct and pairwise indivisible
        let predicted = predict_h_power_gens(3, 2).unwrap();
        assert_eq!(predicted.len(), 6);
        for u in &predicted {
            for v in &predicted {
                if u != v {
                    assert!(!u.divides(v), "{u:?} divides {v:?}");
                }
            }
        }
    }

    #[test]
    fn triangle_and_sum() {
        let t = triangle(1).unwrap();
        assert_eq!(t.render(), "(x1*x2, x1*x3, x2*x3)");
        let j3 = family_j(3).unwrap();
        assert_eq!(j3.generators().len(), 6);
        assert_eq!(j3.arity(), 6);
        for k in 1..=3u32 {
            let v = v_global(&j3.power(k).unwrap()).unwrap().global;
            assert_eq!(v, 2 * u64::from(k), "v(J(3)^{k})");
        }
    }

    #[test]
    fn composite_instance_a2_b1() {
        let i = composite_family(2, 1).unwrap();
        assert_eq!(i.render(), "(x0*x1*x2, x0*x1*x3, x0*x2*x3, x^3, x^2*y, y^3)");
        assert_eq!(i.arity(), 6);
    }

    #[test]
    fn composite_a1_degenerates_to_h() {
        assert_eq!(composite_family(1, 2).unwrap(), family_h(2).unwrap());
    }

    #[test]
    fn composite_v_values() {
        // v(I^k) = 3k + 1 for (a, b) = (2, 1)
        let i = composite_family(2, 1).unwrap();
        for k in 1..=3u32 {
            let v = v_global(&i.power(k).unwrap()).unwrap().global;
            assert_eq!(v, 3 * u64::from(k) + 1);
        }
        // v(I) = 5 + 4 = 9 for (a, b) = (2, 2)
        let i22 = composite_family(2, 2).unwrap();
        assert_eq!(v_global(&i22).unwrap().global, 9);
    }

    #[test]
    fn scaled_block_instance() {
        let parts = composite_blocks(2, 1).unwrap();
        assert_eq!(parts.scaled.render(), "(x0*x1*x2, x0*x1*x3, x0*x2*x3)");
    }

    #[test]
    fn disjoint_sum_prediction_at_k1() {
        // two triangles: 3 x 3 unions
        let t1: Vec<AssSet> = vec![[
            MonomialPrime::new([0, 1]).unwrap(),
            MonomialPrime::new([0, 2]).unwrap(),
            MonomialPrime::new([1, 2]).unwrap(),
        ]
        .into_iter()
        .collect()];
        let t2: Vec<AssSet> = vec![[
            MonomialPrime::new([3, 4]).unwrap(),
            MonomialPrime::new([3, 5]).unwrap(),
            MonomialPrime::new([4, 5]).unwrap(),
        ]
        .into_iter()
        .collect()];
        let predicted = predict_ass_disjoint_sum(&t1, &t2, 1).unwrap();
        assert_eq!(predicted.len(), 9);
        assert!(predict_ass_disjoint_sum(&t1, &t2, 2).is_err());
        assert!(predict_ass_disjoint_sum(&t1, &t1, 1).is_err());
    }

    #[test]
    fn composite_predictions() {
        // v(L^k) = 3k - 1 at (a, b) = (2, 1)
        for k in 1..=4u32 {
            let p = predict_v_composites(2, 1, k).unwrap();
            assert_eq!(p.v_scaled, 3 * u64::from(k) - 1);
            assert_eq!(p.v_sum, 2 * u64::from(k) - 1);
        }
        // v(I^k) at (a, b) = (3, 2): 5k + 4 for k = 1, 5k + 3 for k >= 2
        assert_eq!(predict_v_composites(3, 2, 1).unwrap().v_total, 9);
        for k in 2..=5u32 {
            assert_eq!(predict_v_composites(3, 2, k).unwrap().v_total, 5 * u64::from(k) + 3);
        }
    }

    #[test]
    fn minimand_case_split() {
        // the l-term is (2b+1)k + 2b for 1 <= l <= b-2, and (2b+1)k + 2b - 1
        // for l >= b-1
        let (b, k) = (4u32, 7u32);
        let d = u64::from(2 * b + 1);
        for l in 1..=(b - 2) {
            assert_eq!(composite_minimand(b, k, l), d * u64::from(k) + 2 * u64::from(b));
        }
        for l in (b - 1)..k {
            assert_eq!(composite_minimand(b, k, l), d * u64::from(k) + 2 * u64::from(b) - 1);
        }
    }

    #[test]
    fn horizon_default() {
        assert_eq!(default_horizon(2, 1), 6);
        assert_eq!(default_horizon(3, 3), 8);
    }
}
