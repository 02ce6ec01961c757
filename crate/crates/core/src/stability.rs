//! Power profiles and stabilization indices.
//!
//! A profile records, for k = 1..k_max, the minimal generators of I^k, the
//! associated primes and the full v-number report. Detection then looks for
//! the least k0 from which the tracked quantity is constant up to the
//! horizon; a tail shorter than `window + 1` values is reported as
//! inconclusive rather than trusted. Detected indices are horizon-bounded
//! observations: `certified` is set only by callers holding a ground truth.

use crate::decompose::AssSet;
use crate::error::IdealError;
use crate::ideal::MonomialIdeal;
use crate::prime::MonomialPrime;
use crate::vnumber::{v_global, VReport};
use std::collections::BTreeMap;

pub const DEFAULT_GENERATOR_CAP: usize = 200_000;
pub const DEFAULT_WINDOW: u32 = 2;

#[derive(Debug, Clone)]
pub struct ProfileEntry {
    pub k: u32,
    pub power: MonomialIdeal,
    pub ass: AssSet,
    pub v: VReport,
}

#[derive(Debug, Clone)]
pub struct PowerProfile {
    pub ideal: MonomialIdeal,
    pub alpha: u64,
    pub entries: Vec<ProfileEntry>,
}

impl PowerProfile {
    pub fn horizon(&self) -> u32 {
        self.entries.len() as u32
    }

    /// The entry for I^k, k = 1..=horizon.
    pub fn entry(&self, k: u32) -> &ProfileEntry {
        &self.entries[(k - 1) as usize]
    }
}

/// Builds the profile with the default generator cap.
pub fn build_profile(ideal: &MonomialIdeal, k_max: u32) -> Result<PowerProfile, IdealError> {
    build_profile_capped(ideal, k_max, DEFAULT_GENERATOR_CAP)
}

/// Builds the profile for k = 1..=k_max, reusing I^{k-1} * I at each step.
/// Exceeding `cap` minimal generators aborts with a capacity error naming
/// the offending power.
pub fn build_profile_capped(
    ideal: &MonomialIdeal,
    k_max: u32,
    cap: usize,
) -> Result<PowerProfile, IdealError> {
    ideal.ensure_proper()?;
    if k_max < 1 {
        return Err(IdealError::Parameter("k_max must be at least 1".into()));
    }
    if cap == 0 {
        return Err(IdealError::Parameter("generator cap must be positive".into()));
    }
    let alpha = ideal.alpha()?;
    let mut entries = Vec::with_capacity(k_max as usize);
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            let mut products =
                Vec::with_capacity(power.generators().len() * ideal.generators().len());
            for a in power.generators() {
                for b in ideal.generators() {
                    products.push(a.checked_mul(b)?);
                }
            }
            power = MonomialIdeal::new(ideal.context().clone(), products)?;
        }
        if power.generators().len() > cap {
            return Err(IdealError::Capacity { k, count: power.generators().len(), cap });
        }
        let v = v_global(&power)?;
        let ass: AssSet = v.per_prime.keys().cloned().collect();
        entries.push(ProfileEntry { k, power: power.clone(), ass, v });
    }
    Ok(PowerProfile { ideal: ideal.clone(), alpha, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabKind {
    Ass,
    V,
    VPrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityEstimate {
    pub index: u32,
    pub kind: StabKind,
    pub horizon: u32,
    pub certified: bool,
    /// (slope, intercept) of the stabilized line for v-type estimates.
    pub line: Option<(i64, i64)>,
    /// For ass-type estimates: whether the chain ascended throughout the
    /// horizon (the persistence witness).
    pub ascending: Option<bool>,
}

impl StabilityEstimate {
    /// Marks the estimate certified when it matches a known ground truth.
    pub fn certify_against(mut self, expected_index: u32) -> Self {
        self.certified = self.index == expected_index;
        self
    }
}

/// A detection outcome; a tail too short to trust is a value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    Conclusive(StabilityEstimate),
    Inconclusive { kind: StabKind, horizon: u32 },
}

impl Detection {
    pub fn conclusive(&self) -> Option<&StabilityEstimate> {
        match self {
            Detection::Conclusive(e) => Some(e),
            Detection::Inconclusive { .. } => None,
        }
    }

    pub fn is_conclusive(&self) -> bool {
        self.conclusive().is_some()
    }
}

fn check_window(profile: &PowerProfile, window: u32) -> Result<(), IdealError> {
    if window < 1 {
        return Err(IdealError::Parameter("window must be at least 1".into()));
    }
    if window >= profile.horizon() {
        return Err(IdealError::Parameter(format!(
            "window {window} must be smaller than the horizon {}",
            profile.horizon()
        )));
    }
    Ok(())
}

/// Least k0 with Ass(I^k) constant for k0 <= k <= horizon; inconclusive if
/// the constant tail is shorter than window + 1 entries.
pub fn detect_astab(profile: &PowerProfile, window: u32) -> Result<Detection, IdealError> {
    check_window(profile, window)?;
    let horizon = profile.horizon();
    let last = &profile.entry(horizon).ass;
    let mut start = horizon;
    while start > 1 && &profile.entry(start - 1).ass == last {
        start -= 1;
    }
    let ascending = (1..horizon)
        .all(|k| profile.entry(k).ass.is_subset_of(&profile.entry(k + 1).ass));
    if start > horizon - window {
        return Ok(Detection::Inconclusive { kind: StabKind::Ass, horizon });
    }
    Ok(Detection::Conclusive(StabilityEstimate {
        index: start,
        kind: StabKind::Ass,
        horizon,
        certified: false,
        line: None,
        ascending: Some(ascending),
    }))
}

/// Least k0 with v(I^k) - alpha*k constant for k0 <= k <= horizon, with the
/// stabilized line (alpha, intercept).
pub fn detect_vstab(profile: &PowerProfile, window: u32) -> Result<Detection, IdealError> {
    check_window(profile, window)?;
    let horizon = profile.horizon();
    let slope = profile.alpha as i64;
    let residual =
        |k: u32| profile.entry(k).v.global as i64 - slope * i64::from(k);
    let last = residual(horizon);
    let mut start = horizon;
    while start > 1 && residual(start - 1) == last {
        start -= 1;
    }
    if start > horizon - window {
        return Ok(Detection::Inconclusive { kind: StabKind::V, horizon });
    }
    Ok(Detection::Conclusive(StabilityEstimate {
        index: start,
        kind: StabKind::V,
        horizon,
        certified: false,
        line: Some((slope, last)),
        ascending: None,
    }))
}

/// Least k0 from which p stays associated and v_p(I^k) is linear, the slope
/// inferred from the last `window` differences.
pub fn detect_vstab_p(
    profile: &PowerProfile,
    p: &MonomialPrime,
    window: u32,
) -> Result<Detection, IdealError> {
    check_window(profile, window)?;
    let horizon = profile.horizon();
    let inconclusive = Ok(Detection::Inconclusive { kind: StabKind::VPrime, horizon });

    if !profile.entry(horizon).ass.contains(p) {
        return inconclusive;
    }
    // Least k from which p stays in every Ass(I^j).
    let mut member_start = horizon;
    while member_start > 1 && profile.entry(member_start - 1).ass.contains(p) {
        member_start -= 1;
    }
    let value = |k: u32| profile.entry(k).v.per_prime[p] as i64;
    if horizon - member_start < window {
        return inconclusive;
    }
    let slope = value(horizon) - value(horizon - 1);
    for j in 0..window {
        if value(horizon - j) - value(horizon - j - 1) != slope {
            return inconclusive;
        }
    }
    let residual = |k: u32| value(k) - slope * i64::from(k);
    let last = residual(horizon);
    let mut start = horizon;
    while start > member_start && residual(start - 1) == last {
        start -= 1;
    }
    if start > horizon - window {
        return inconclusive;
    }
    Ok(Detection::Conclusive(StabilityEstimate {
        index: start,
        kind: StabKind::VPrime,
        horizon,
        certified: false,
        line: Some((slope, last)),
        ascending: None,
    }))
}

/// The two displayed index inequalities, evaluated on detected values:
/// max_p vstab_p >= astab, and vstab <= max_p vstab_p. `None` propagates an
/// inconclusive component detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexComparison {
    pub astab: u32,
    pub vstab: u32,
    pub vstab_per_prime: BTreeMap<MonomialPrime, u32>,
    pub max_vstab_p: u32,
    /// max_p vstab_p >= astab
    pub max_bounds_astab: bool,
    /// vstab <= max_p vstab_p
    pub max_bounds_vstab: bool,
}

pub fn check_index_inequalities(
    profile: &PowerProfile,
    window: u32,
) -> Result<Option<IndexComparison>, IdealError> {
    let astab = match detect_astab(profile, window)? {
        Detection::Conclusive(e) => e.index,
        Detection::Inconclusive { .. } => return Ok(None),
    };
    let vstab = match detect_vstab(profile, window)? {
        Detection::Conclusive(e) => e.index,
        Detection::Inconclusive { .. } => return Ok(None),
    };
    let stable_ass = &profile.entry(profile.horizon()).ass;
    let mut vstab_per_prime = BTreeMap::new();
    for p in stable_ass.iter() {
        match detect_vstab_p(profile, p, window)? {
            Detection::Conclusive(e) => {
                vstab_per_prime.insert(p.clone(), e.index);
            }
            Detection::Inconclusive { .. } => return Ok(None),
        }
    }
    let max_vstab_p = vstab_per_prime.values().copied().max().unwrap_or(0);
    Ok(Some(IndexComparison {
        astab,
        vstab,
        max_vstab_p,
        max_bounds_astab: max_vstab_p >= astab,
        max_bounds_vstab: vstab <= max_vstab_p,
        vstab_per_prime,
    }))
}
