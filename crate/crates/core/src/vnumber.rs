//! v-numbers: the least degree of a monomial witness per associated prime,
//! and the minimum over all of them.
//!
//! Witnesses are monomials throughout (the monomial convention for graded
//! v-numbers of monomial ideals); every reported witness u satisfies
//! `I : u == p` exactly and has minimal degree, with graded-lex tie-break.

use crate::decompose::{witness_minimals, witness_survey};
use crate::error::IdealError;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use std::collections::BTreeMap;

/// Per-prime v-numbers of one ideal, with the witnesses that attain them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VReport {
    pub per_prime: BTreeMap<MonomialPrime, u64>,
    pub witnesses: BTreeMap<MonomialPrime, Monomial>,
    pub global: u64,
}

impl VReport {
    pub fn primes(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.per_prime.keys()
    }
}

/// v_p(I): the least degree of a monomial u with `I : u == p`.
pub fn v_p(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<u64, IdealError> {
    ideal.ensure_proper()?;
    match witness_minimals(ideal, p).into_iter().min() {
        Some(w) => Ok(w.degree()),
        None => Err(IdealError::NotAssociated { prime: format!("{:?}", p.support()) }),
    }
}

/// The full v-number report over Ass(I); `global` is the minimum.
pub fn v_global(ideal: &MonomialIdeal) -> Result<VReport, IdealError> {
    let survey = witness_survey(ideal)?;
    debug_assert!(!survey.is_empty(), "a proper nonzero ideal has an associated prime");
    let mut per_prime = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut global = u64::MAX;
    for (p, candidates) in survey {
        let best = candidates.into_iter().min().expect("survey entries are nonempty");
        global = global.min(best.degree());
        per_prime.insert(p.clone(), best.degree());
        witnesses.insert(p, best);
    }
    Ok(VReport { per_prime, witnesses, global })
}

/// Closed form for v of a two-variable ideal primary to (x, y).
///
/// With minimal generators x^{a_1}, x^{a_2} y^{b_2}, ..., y^{b_m} sorted by
/// strictly decreasing x-exponent, the value is
/// min over 1 <= i <= m-1 of (a_i + b_{i+1} - 2).
pub fn vm_two_variable(ideal: &MonomialIdeal) -> Result<u64, IdealError> {
    ideal.ensure_proper()?;
    if ideal.arity() != 2 {
        return Err(IdealError::NotPrimaryStaircase);
    }
    // Canonical storage is descending graded-lex, which for a staircase in
    // two variables is exactly decreasing x-exponent.
    let mut gens: Vec<&Monomial> = ideal.generators().iter().collect();
    gens.sort_by(|a, b| b.exponent(0).cmp(&a.exponent(0)));
    let m = gens.len();
    if m < 2 || gens[0].exponent(1) != 0 || gens[m - 1].exponent(0) != 0 {
        return Err(IdealError::NotPrimaryStaircase);
    }
    let value = (0..m - 1)
        .map(|i| u64::from(gens[i].exponent(0)) + u64::from(gens[i + 1].exponent(1)) - 2)
        .min()
        .expect("m >= 2");
    Ok(value)
}
