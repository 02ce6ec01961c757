//! Irreducible decomposition and associated primes.
//!
//! Associated primes are computed by scanning candidate supports: a prime p
//! is associated to I exactly when some monomial u outside the saturation of
//! I by the complementary variables satisfies x_i*u in I for every x_i in p.
//! The minimal such witnesses are found by intersecting the colons I : x_i
//! progressively, pruning every partial product that falls into the
//! saturation (multiples of pruned elements can never witness p, so the
//! pruned intersection still contains all minimal witnesses).
//!
//! Two slower routes are kept alongside as mutual oracles: reading supports
//! off the irredundant irreducible decomposition, and enumerating witnesses
//! over the exponent box of the generators.

use crate::error::IdealError;
use crate::ideal::{gens_contain, minimalize_vec, signature, signature_of, MonomialIdeal};
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use std::collections::{BTreeMap, BTreeSet};
use rayon::prelude::*;

/// Candidate supports are enumerated as bitmasks over the ideal's support.
pub const MAX_ASS_VARS: usize = 20;

/// A set of monomial primes in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AssSet {
    primes: BTreeSet<MonomialPrime>,
}

impl AssSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: MonomialPrime) {
        self.primes.insert(p);
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.primes.iter()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.primes.contains(p)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.primes.is_subset(&other.primes)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { primes: self.primes.union(&other.primes).cloned().collect() }
    }

    pub fn render(&self, ctx: &crate::context::VariableContext) -> String {
        let parts: Vec<String> = self.primes.iter().map(|p| p.render(ctx)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<MonomialPrime> for AssSet {
    fn from_iter<T: IntoIterator<Item = MonomialPrime>>(iter: T) -> Self {
        Self { primes: iter.into_iter().collect() }
    }
}

impl IntoIterator for AssSet {
    type Item = MonomialPrime;
    type IntoIter = std::collections::btree_set::IntoIter<MonomialPrime>;
    fn into_iter(self) -> Self::IntoIter {
        self.primes.into_iter()
    }
}

impl<'a> IntoIterator for &'a AssSet {
    type Item = &'a MonomialPrime;
    type IntoIter = std::collections::btree_set::Iter<'a, MonomialPrime>;
    fn into_iter(self) -> Self::IntoIter {
        self.primes.iter()
    }
}


/// The minimal monomials of the intersection of the up-sets of `sets` that
/// lie outside the ideal generated by `avoid`. Multiples of `avoid` members
/// can never leave the ideal again, so they are pruned as soon as they
/// appear; this keeps the intermediate antichains close to the answer.
fn minimal_outside(sets: Vec<Vec<Monomial>>, avoid: &[Monomial]) -> Vec<Monomial> {
    minimal_outside_capped(sets, avoid, u64::MAX).0
}

/// Like [`minimal_outside`], but exact only up to `cap`: the result is all
/// minimal elements of degree at most the cap, and the second component is
/// the least degree of a discarded overflow candidate (a lower bound for
/// the next interesting cap, None when nothing was discarded).
fn minimal_outside_capped(
    mut sets: Vec<Vec<Monomial>>,
    avoid: &[Monomial],
    cap: u64,
) -> (Vec<Monomial>, Option<u64>) {
    for set in &mut sets {
        set.retain(|m| !gens_contain(avoid, m));
    }
    if sets.iter().any(Vec::is_empty) {
        return (Vec::new(), None);
    }
    sets.sort_by_key(Vec::len);

    let mut overflow: Option<u64> = None;
    let mut spill = |d: u64, overflow: &mut Option<u64>| {
        if overflow.map_or(true, |o| d < o) {
            *overflow = Some(d);
        }
    };
    let mut first = Vec::new();
    for m in &sets[0] {
        if m.degree() <= cap {
            first.push(m.clone());
        } else {
            spill(m.degree(), &mut overflow);
        }
    }
    let mut current = minimalize_vec(first);
    for colon in &sets[1..] {
        let arity = colon[0].arity();
        let colon_sigs: Vec<u64> = colon.iter().map(signature).collect();
        let max_colon_degree = colon.iter().map(Monomial::degree).max().unwrap_or(0);
        // q | lcm(w, s) iff q_i <= max(w_i, s_i) for every i, i.e. the
        // coordinates of q not already covered by w must divide s. The
        // avoid test against the lcm therefore reduces to a divisor test
        // against s alone, over per-w reduced exponent rows. Rows already
        // dominated by a kept row are skipped, as are rows too big to
        // divide any colon element; `avoid` is walked smallest first so
        // that the kept rows and the scan hits come early.
        let step = |scratch: &mut (Vec<u32>, Vec<u64>), w: &Monomial| {
            let (rows, row_sigs) = scratch;
            rows.clear();
            row_sigs.clear();
            'q: for q in avoid.iter().rev() {
                let start = rows.len();
                let mut degree = 0u64;
                rows.extend(q.exponents().iter().zip(w.exponents()).map(|(&qe, &we)| {
                    let r = if qe <= we { 0 } else { qe };
                    degree += u64::from(r);
                    r
                }));
                if degree > max_colon_degree {
                    rows.truncate(start);
                    continue 'q;
                }
                let row_end = rows.len();
                let sig = signature_of(&rows[start..row_end]);
                for (k, &ksig) in row_sigs.iter().enumerate() {
                    if ksig & !sig == 0 {
                        let (head, tail) = rows.split_at(start);
                        if head[k * arity..(k + 1) * arity]
                            .iter()
                            .zip(&tail[..arity])
                            .all(|(&ke, &re)| ke <= re)
                        {
                            rows.truncate(start);
                            continue 'q;
                        }
                    }
                }
                row_sigs.push(sig);
            }
            let mut out = Vec::new();
            let mut local_overflow: Option<u64> = None;
            's: for (s, &ssig) in colon.iter().zip(&colon_sigs) {
                for (j, &qsig) in row_sigs.iter().enumerate() {
                    if qsig & !ssig == 0
                        && rows[j * arity..(j + 1) * arity]
                            .iter()
                            .zip(s.exponents())
                            .all(|(&qe, &se)| qe <= se)
                    {
                        continue 's;
                    }
                }
                let candidate = w.lcm(s);
                if candidate.degree() <= cap {
                    out.push(candidate);
                } else if local_overflow.map_or(true, |o| candidate.degree() < o) {
                    local_overflow = Some(candidate.degree());
                }
            }
            (out, local_overflow)
        };
        let scratch = || (Vec::new(), Vec::new());
        let chunks: Vec<(Vec<Monomial>, Option<u64>)> = if current.len() >= 64 {
            current.par_iter().map_init(scratch, |buf, w| step(buf, w)).collect()
        } else {
            let mut buf = scratch();
            current.iter().map(|w| step(&mut buf, w)).collect()
        };
        let mut next = Vec::new();
        for (chunk, chunk_overflow) in chunks {
            next.extend(chunk);
            if let Some(d) = chunk_overflow {
                spill(d, &mut overflow);
            }
        }
        current = minimalize_vec(next);
        if current.is_empty() {
            return (Vec::new(), overflow);
        }
    }
    (current, overflow)
}

/// The minimum degree over the intersection of the up-sets of `sets`,
/// together with the canonically least monomial attaining it. Runs a
/// degree-capped progressive intersection and raises the cap to the
/// smallest overflow seen, which keeps the intermediate antichains near the
/// answer; a capped pass computes the minimal elements up to the cap
/// exactly, so the first nonempty pass yields the true minimum.
fn intersect_upsets_min(sets: &[Vec<Monomial>]) -> Option<(u64, Monomial)> {
    let mut cap = sets.iter().map(|s| s.iter().map(Monomial::degree).min()).try_fold(
        0u64,
        |acc, m| m.map(|d| acc.max(d)),
    )?;
    loop {
        let mut overflow: Option<u64> = None;
        let spill = |d: u64, overflow: &mut Option<u64>| {
            if overflow.map_or(true, |o| d < o) {
                *overflow = Some(d);
            }
        };
        let mut current: Vec<Monomial> = Vec::new();
        for m in &sets[0] {
            if m.degree() <= cap {
                current.push(m.clone());
            } else {
                spill(m.degree(), &mut overflow);
            }
        }
        current = minimalize_vec(current);
        for set in &sets[1..] {
            let mut next = Vec::new();
            for w in &current {
                for s in set {
                    let candidate = w.lcm(s);
                    if candidate.degree() <= cap {
                        next.push(candidate);
                    } else {
                        spill(candidate.degree(), &mut overflow);
                    }
                }
            }
            current = minimalize_vec(next);
            if current.is_empty() {
                break;
            }
        }
        if let Some(best) = current.iter().min().cloned() {
            return Some((best.degree(), best));
        }
        cap = overflow?;
    }
}

/// Monomial witnesses u with `ideal : u == p`: the canonically least
/// witness of each minimum-degree socle class, in ascending order. The
/// global minimum-degree witness is always present; the list is empty
/// exactly when p is not associated.
///
/// A monomial u = u_p * u_T (split into p-part and complement part)
/// satisfies `I : u == p` iff x_i*u lies in I for every x_i in p and u
/// stays outside the saturation J_p of I by the complement variables. Both
/// conditions factor: u_p must be a socle witness of the localized ideal
/// J_p (x_i*u_p in J_p for all i, u_p outside J_p), and u_T must complete
/// every x_i*u_p back into I. The completion cost is computed per socle
/// witness, and the reported witnesses minimize the total degree.
pub(crate) fn witness_minimals(ideal: &MonomialIdeal, p: &MonomialPrime) -> Vec<Monomial> {
    let arity = ideal.arity();
    let t_vars = p.complement(arity);
    let local = ideal.saturate_vars(&t_vars);
    if local.is_unit() {
        // Some generator is supported away from p, hence I is not contained
        // in p and p cannot be associated.
        return Vec::new();
    }

    // Membership pre-test through the variable saturations: a socle witness
    // for the localized ideal exists iff the intersection of the J_p : x_i^inf
    // leaves J_p (take a divisibility-maximal monomial outside J_p among the
    // multiples of an element of the intersection). The saturated generator
    // sets collapse far below the colon sets, so ruling a candidate out this
    // way is much cheaper than the socle computation itself.
    let sat_sets: Vec<Vec<Monomial>> = p
        .support()
        .iter()
        .map(|&v| local.saturate_vars(&[v]).generators().to_vec())
        .collect();
    if minimal_outside(sat_sets, local.generators()).is_empty() {
        return Vec::new();
    }

    // Socle witnesses of the localized ideal over the p-variables.
    let sets: Vec<Vec<Monomial>> = p
        .support()
        .iter()
        .map(|&v| {
            let x = Monomial::variable(v, arity);
            minimalize_vec(local.generators().iter().map(|g| g.quotient_by(&x)).collect())
        })
        .collect();
    let mut corners = minimal_outside(sets, local.generators());
    if corners.is_empty() || local == *ideal {
        corners.sort_unstable();
        return corners;
    }

    // Complete each socle witness: u_T must satisfy x_i*u_p*u_T in I, i.e.
    // lie above the complement part of some generator whose p-part divides
    // x_i*u_p. Generators are grouped by their distinct p-parts once; the
    // per-witness lists are then merged from the groups.
    let p_vars = p.support();
    let mut map: std::collections::HashMap<Vec<u32>, Vec<Monomial>> =
        std::collections::HashMap::new();
    for g in ideal.generators() {
        let key: Vec<u32> = p_vars.iter().map(|&j| g.exponent(j)).collect();
        map.entry(key).or_default().push(g.zeroed_at(p_vars));
    }
    let groups: Vec<(Vec<u32>, Vec<Monomial>)> =
        map.into_iter().map(|(k, v)| (k, minimalize_vec(v))).collect();

    corners.sort_unstable();
    let mut best_degree = u64::MAX;
    let mut best: Vec<Monomial> = Vec::new();
    for corner in &corners {
        if corner.degree() > best_degree {
            break;
        }
        let lists: Vec<Vec<Monomial>> = p_vars
            .iter()
            .map(|&i| {
                let mut merged = Vec::new();
                for (key, parts) in &groups {
                    let divides = p_vars
                        .iter()
                        .zip(key)
                        .all(|(&j, &ke)| ke <= corner.exponent(j) + u32::from(j == i));
                    if divides {
                        merged.extend_from_slice(parts);
                    }
                }
                minimalize_vec(merged)
            })
            .collect();
        let (t, least) = match intersect_upsets_min(&lists) {
            Some(found) => found,
            None => unreachable!("socle witnesses always complete"),
        };
        let total = corner.degree() + t;
        if total > best_degree {
            continue;
        }
        if total < best_degree {
            best_degree = total;
            best.clear();
        }
        best.push(corner.checked_mul(&least).expect("witness exponents stay small"));
    }
    best.sort_unstable();
    best.dedup();
    best
}

fn support_check(ideal: &MonomialIdeal) -> Result<Vec<usize>, IdealError> {
    let support = ideal.support_vars();
    if support.len() > MAX_ASS_VARS {
        return Err(IdealError::TooManyVariables { found: support.len(), max: MAX_ASS_VARS });
    }
    Ok(support)
}

/// Associated primes with one minimal witness set per prime.
pub(crate) fn witness_survey(
    ideal: &MonomialIdeal,
) -> Result<Vec<(MonomialPrime, Vec<Monomial>)>, IdealError> {
    ideal.ensure_proper()?;
    let support = support_check(ideal)?;
    let s = support.len();

    // Support masks over the ideal's support let non-covers die instantly:
    // any generator entirely off p rules p out.
    let gen_masks: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut mask = 0u32;
            for (bit, &var) in support.iter().enumerate() {
                if g.exponent(var) > 0 {
                    mask |= 1 << bit;
                }
            }
            mask
        })
        .collect();

    let covers: Vec<MonomialPrime> = (1u32..(1u32 << s))
        .filter(|mask| gen_masks.iter().all(|g| g & mask != 0))
        .map(|mask| {
            let vars = support.iter().enumerate().filter(|(bit, _)| mask >> bit & 1 == 1);
            MonomialPrime::new(vars.map(|(_, &v)| v)).expect("mask is nonzero")
        })
        .collect();

    // Candidate confirmations are independent; the canonical sort at the
    // end keeps the result deterministic regardless of scheduling.
    let timing = std::env::var_os("VSTAB_TIMING").is_some();
    let mut found: Vec<(MonomialPrime, Vec<Monomial>)> = covers
        .into_par_iter()
        .filter_map(|p| {
            let clock = std::time::Instant::now();
            let witnesses = witness_minimals(ideal, &p);
            if timing && clock.elapsed().as_millis() > 20 {
                eprintln!(
                    "TIMING p={:?} {}ms -> {}",
                    p.support(),
                    clock.elapsed().as_millis(),
                    witnesses.len()
                );
            }
            if witnesses.is_empty() {
                None
            } else {
                Some((p, witnesses))
            }
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found)
}

/// The associated primes of a proper nonzero monomial ideal.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    Ok(witness_survey(ideal)?.into_iter().map(|(p, _)| p).collect())
}

/// Inclusion-minimal associated primes; equivalently the minimal covers of
/// the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    let ass = associated_primes(ideal)?;
    let minimal = ass
        .iter()
        .filter(|p| {
            !ass.iter().any(|q| {
                q != *p && q.support().iter().all(|v| p.contains_var(*v))
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// A minimum-degree monomial u with `ideal : u == p`, or None when p is not
/// associated. Ties are broken by the graded-lex least monomial.
pub fn find_witness(
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
) -> Result<Option<Monomial>, IdealError> {
    ideal.ensure_proper()?;
    if let Some(&bad) = p.support().iter().find(|&&v| v >= ideal.arity()) {
        return Err(IdealError::Parameter(format!("variable index {bad} out of range")));
    }
    Ok(witness_minimals(ideal, p).into_iter().min())
}

/// An irreducible monomial ideal: pure variable powers over its support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    entries: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn entries(&self) -> &BTreeMap<usize, u32> {
        &self.entries
    }

    pub fn support(&self) -> MonomialPrime {
        MonomialPrime::new(self.entries.keys().copied()).expect("support is nonempty")
    }

    pub fn to_ideal(&self, ctx: &crate::context::VariableContext) -> MonomialIdeal {
        let gens = self
            .entries
            .iter()
            .map(|(&var, &exp)| {
                let mut exps = vec![0u32; ctx.arity()];
                exps[var] = exp;
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(ctx.clone(), gens).expect("component generators match context")
    }
}

/// Irredundant irreducible decomposition by generator splitting: a mixed
/// generator u*v with disjoint supports splits I = (G, u*v) into
/// (G, u) intersect (G, v). Splitting always picks the first stored
/// generator with at least two variables in its support and its lowest
/// variable; the irredundant result is unique regardless.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
) -> Result<Vec<IrreducibleComponent>, IdealError> {
    ideal.ensure_proper()?;
    let mut components: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    let mut stack: Vec<Vec<Monomial>> = vec![ideal.generators().to_vec()];

    while let Some(gens) = stack.pop() {
        let split = gens.iter().position(|g| g.support().count() >= 2);
        match split {
            None => {
                let entries = gens
                    .iter()
                    .map(|g| {
                        let var = g.support().next().expect("no unit generator in a proper ideal");
                        (var, g.exponent(var))
                    })
                    .collect();
                components.insert(IrreducibleComponent { entries });
            }
            Some(idx) => {
                let g = &gens[idx];
                let var = g.support().next().expect("mixed generator");
                let mut pure = vec![0u32; g.arity()];
                pure[var] = g.exponent(var);
                let pure = Monomial::new(pure);
                let rest = g.quotient_by(&pure);

                let mut left: Vec<Monomial> = gens.clone();
                left[idx] = pure;
                let mut right = gens;
                right[idx] = rest;
                stack.push(minimalize_vec(left));
                stack.push(minimalize_vec(right));
            }
        }
    }

    let ctx = ideal.context();
    let mut alive: Vec<IrreducibleComponent> = components.into_iter().collect();
    // Drop any component that contains the intersection of the others.
    'outer: loop {
        if alive.len() <= 1 {
            break;
        }
        let ideals: Vec<MonomialIdeal> = alive.iter().map(|c| c.to_ideal(ctx)).collect();
        for i in 0..alive.len() {
            let mut rest: Option<MonomialIdeal> = None;
            for (j, other) in ideals.iter().enumerate() {
                if j == i {
                    continue;
                }
                rest = Some(match rest {
                    None => other.clone(),
                    Some(acc) => acc.intersect(other)?,
                });
            }
            let rest = rest.expect("at least two components");
            if rest.generators().iter().all(|m| ideals[i].contains(m)) {
                alive.remove(i);
                continue 'outer;
            }
        }
        break;
    }
    Ok(alive)
}

/// Associated primes read off the irredundant irreducible decomposition,
/// each confirmed by an explicit witness. Kept as a cross-check for
/// [`associated_primes`]; intended for small ideals.
pub fn associated_primes_from_components(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    let components = irreducible_decomposition(ideal)?;
    let mut confirmed = AssSet::new();
    for candidate in components.iter().map(IrreducibleComponent::support) {
        if confirmed.contains(&candidate) {
            continue;
        }
        if find_witness(ideal, &candidate)?.is_some() {
            confirmed.insert(candidate);
        }
    }
    Ok(confirmed)
}

/// Associated primes by enumerating every witness candidate in the exponent
/// box of the generators. Exhaustive and slow; the second oracle route.
pub fn associated_primes_by_search(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    ideal.ensure_proper()?;
    let bounds = ideal.max_exponents();
    let mut found = AssSet::new();
    let mut exps = vec![0u32; bounds.len()];
    loop {
        let u = Monomial::new(exps.clone());
        if !ideal.contains(&u) {
            let colon = ideal.colon(&u)?;
            if let Some(p) = ideal_as_prime(&colon) {
                found.insert(p);
            }
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(found);
            }
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Some(p) iff the ideal is generated by distinct single variables.
pub fn ideal_as_prime(ideal: &MonomialIdeal) -> Option<MonomialPrime> {
    if ideal.is_zero() || ideal.is_unit() {
        return None;
    }
    let mut vars = Vec::new();
    for g in ideal.generators() {
        if g.degree() != 1 {
            return None;
        }
        vars.push(g.support().next().expect("degree-one monomial"));
    }
    MonomialPrime::new(vars).ok()
}
