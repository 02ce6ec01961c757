//! The built-in verification suite: recompute every closed-form claim about
//! the shipped families and compare against the engine, case by case.

use crate::decompose::AssSet;
use crate::error::IdealError;
use crate::families;
use crate::ideal::MonomialIdeal;
use crate::prime::MonomialPrime;
use crate::stability::{
    build_profile_capped, detect_astab, detect_vstab, Detection, DEFAULT_GENERATOR_CAP,
    DEFAULT_WINDOW,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCase {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    fn push(&mut self, name: impl Into<String>, detail: impl Into<String>, pass: bool) {
        self.cases.push(VerifyCase { name: name.into(), detail: detail.into(), pass });
    }

    fn append(&mut self, mut other: VerifyReport) {
        self.cases.append(&mut other.cases);
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_GENERATOR_CAP }
    }
}

fn indices_case(
    report: &mut VerifyReport,
    name: &str,
    ideal: &MonomialIdeal,
    horizon: u32,
    expected: (u32, u32),
    expected_line: (i64, i64),
    cap: usize,
) -> Result<(), IdealError> {
    let profile = build_profile_capped(ideal, horizon, cap)?;
    let astab = detect_astab(&profile, DEFAULT_WINDOW)?;
    let vstab = detect_vstab(&profile, DEFAULT_WINDOW)?;
    match (astab, vstab) {
        (Detection::Conclusive(a), Detection::Conclusive(v)) => {
            let a = a.certify_against(expected.0);
            let v = v.certify_against(expected.1);
            let pass = a.certified && v.certified && v.line == Some(expected_line);
            let (slope, intercept) = v.line.unwrap_or((0, 0));
            report.push(
                format!("{name} indices"),
                format!(
                    "(astab, vstab) = ({}, {}), expected ({}, {}); v-line {}k{:+}, expected {}k{:+}",
                    a.index, v.index, expected.0, expected.1,
                    slope, intercept, expected_line.0, expected_line.1
                ),
                pass,
            );
        }
        _ => {
            report.push(
                format!("{name} indices"),
                format!("detection inconclusive at horizon {horizon}"),
                false,
            );
        }
    }
    Ok(())
}

/// Checks the two-variable family H(b): the v-value sequence, the detected
/// indices (1, b) with line ((2b+1), -1), and the closed-form generators of
/// every power.
pub fn verify_two_var(b: u32, opts: &VerifyOptions) -> Result<VerifyReport, IdealError> {
    let mut report = VerifyReport::default();
    let ideal = families::family_h(b)?;
    let horizon = b + 3;
    let d = u64::from(2 * b + 1);
    let profile = build_profile_capped(&ideal, horizon, opts.cap)?;

    let mut v_ok = true;
    let mut detail = String::new();
    for k in 1..=horizon {
        let expected = families::vm_h(b, k);
        let got = profile.entry(k).v.global;
        if !detail.is_empty() {
            detail.push_str(", ");
        }
        detail.push_str(&format!("v^{k}={got}"));
        if got != expected {
            detail.push_str(&format!(" (expected {expected})"));
            v_ok = false;
        }
    }
    report.push(format!("H({b}) v-values"), detail, v_ok);

    indices_case(&mut report, &format!("H({b})"), &ideal, horizon, (1, b), (d as i64, -1), opts.cap)?;

    let mut gens_ok = true;
    let mut failed_at = None;
    for k in 1..=horizon.max(6) {
        let predicted = MonomialIdeal::new(
            ideal.context().clone(),
            families::predict_h_power_gens(b, k)?,
        )?;
        if predicted != ideal.power(k)? {
            gens_ok = false;
            failed_at = Some(k);
            break;
        }
    }
    report.push(
        format!("H({b}) power generators"),
        match failed_at {
            None => format!("closed form matches for k <= {}", horizon.max(6)),
            Some(k) => format!("closed form diverges at k = {k}"),
        },
        gens_ok,
    );
    Ok(report)
}

/// Checks the composite family at (a, b): v-values of the triangle sum, the
/// scaled block and the full ideal, the associated-prime shape of each
/// power, and the detected indices (a, b).
pub fn verify_composite(a: u32, b: u32, opts: &VerifyOptions) -> Result<VerifyReport, IdealError> {
    if a < 2 {
        return verify_two_var(b, opts);
    }
    let mut report = VerifyReport::default();
    let parts = families::composite_blocks(a, b)?;
    let ideal = parts.scaled.sum(&parts.two_var)?;
    let horizon = a + b + 2;
    let d = u64::from(2 * b + 1);

    let profile = build_profile_capped(&ideal, horizon, opts.cap)?;
    let sum_profile = build_profile_capped(&parts.sum, horizon, opts.cap)?;
    let scaled_profile = build_profile_capped(&parts.scaled, horizon, opts.cap)?;

    let x0 = MonomialPrime::new([0])?;
    let mut values_ok = true;
    let mut shape_ok = true;
    let mut value_detail = String::new();
    for k in 1..=horizon {
        let predicted = families::predict_v_composites(a, b, k)?;
        let got_sum = sum_profile.entry(k).v.global;
        let got_scaled = scaled_profile.entry(k).v.global;
        let got_total = profile.entry(k).v.global;
        let expected_total =
            if k < b { d * u64::from(k) + 2 * u64::from(b) } else { d * u64::from(k) + 2 * u64::from(b) - 1 };
        if got_sum != predicted.v_sum
            || got_scaled != predicted.v_scaled
            || got_total != predicted.v_total
            || predicted.v_total != expected_total
        {
            values_ok = false;
        }
        if !value_detail.is_empty() {
            value_detail.push_str(", ");
        }
        value_detail.push_str(&format!("v^{k}={got_total}/{}", predicted.v_total));

        let scaled_ass = &scaled_profile.entry(k).ass;
        let mut expected_scaled: AssSet = sum_profile.entry(k).ass.iter().cloned().collect();
        expected_scaled.insert(x0.clone());
        if scaled_ass != &expected_scaled {
            shape_ok = false;
        }
        let expected_total_ass = families::extend_primes_by_xy(scaled_ass, parts.scaled.context());
        if profile.entry(k).ass != expected_total_ass {
            shape_ok = false;
        }
    }
    report.push(format!("composite({a},{b}) v-values"), value_detail, values_ok);
    report.push(
        format!("composite({a},{b}) associated primes"),
        "Ass(L^k) = Ass(J^k) + (x0); Ass(I^k) = (p, x, y) over p in Ass(L^k)".to_string(),
        shape_ok,
    );

    indices_case(
        &mut report,
        &format!("composite({a},{b})"),
        &ideal,
        horizon,
        (a, b),
        (d as i64, 2 * i64::from(b) - 1),
        opts.cap,
    )?;
    Ok(report)
}

/// The full suite: the two-variable family for b <= 3 and the composite
/// family for a in {2, 3}, b <= 3.
pub fn verify_full(opts: &VerifyOptions) -> Result<VerifyReport, IdealError> {
    let mut report = VerifyReport::default();
    for b in 1..=3 {
        report.append(verify_two_var(b, opts)?);
    }
    for a in 2..=3 {
        for b in 1..=3 {
            report.append(verify_composite(a, b, opts)?);
        }
    }
    Ok(report)
}
