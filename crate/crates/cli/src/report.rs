//! Serializable report shapes and the plain-text table renderer. Every
//! field is an owned string or integer in a fixed order, so identical runs
//! produce byte-identical JSON.

use serde::Serialize;
use vstab_core::stability::{Detection, PowerProfile};
use vstab_core::verify::VerifyReport;
use vstab_core::{MonomialIdeal, MonomialPrime, VReport};

#[derive(Serialize)]
pub struct IdealDto {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
}

pub fn ideal_dto(ideal: &MonomialIdeal) -> IdealDto {
    IdealDto {
        vars: ideal.context().names().to_vec(),
        generators: ideal.generators().iter().map(|g| ideal.context().render(g)).collect(),
    }
}

#[derive(Serialize)]
pub struct AssDto {
    pub ideal: IdealDto,
    pub count: usize,
    pub primes: Vec<String>,
}

#[derive(Serialize)]
pub struct PrimeVDto {
    pub prime: String,
    pub v: u64,
    pub witness: String,
}

pub fn prime_v_rows(ideal: &MonomialIdeal, report: &VReport) -> Vec<PrimeVDto> {
    report
        .per_prime
        .iter()
        .map(|(p, &v)| PrimeVDto {
            prime: p.render(ideal.context()),
            v,
            witness: ideal.context().render(&report.witnesses[p]),
        })
        .collect()
}

#[derive(Serialize)]
pub struct VnumDto {
    pub ideal: IdealDto,
    pub per_prime: Vec<PrimeVDto>,
    pub v: u64,
    pub witness: String,
}

#[derive(Serialize)]
pub struct PowerEntryDto {
    pub k: u32,
    pub count: usize,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct PowersDto {
    pub ideal: IdealDto,
    pub entries: Vec<PowerEntryDto>,
}

#[derive(Serialize)]
pub struct LineDto {
    pub slope: i64,
    pub intercept: i64,
}

#[derive(Serialize)]
pub struct EstimateDto {
    pub kind: String,
    pub prime: Option<String>,
    pub conclusive: bool,
    pub index: Option<u32>,
    pub horizon: u32,
    pub certified: Option<bool>,
    pub line: Option<LineDto>,
    pub ascending: Option<bool>,
}

pub fn estimate_dto(kind: &str, prime: Option<String>, detection: &Detection) -> EstimateDto {
    match detection {
        Detection::Conclusive(e) => EstimateDto {
            kind: kind.into(),
            prime,
            conclusive: true,
            index: Some(e.index),
            horizon: e.horizon,
            certified: Some(e.certified),
            line: e.line.map(|(slope, intercept)| LineDto { slope, intercept }),
            ascending: e.ascending,
        },
        Detection::Inconclusive { horizon, .. } => EstimateDto {
            kind: kind.into(),
            prime,
            conclusive: false,
            index: None,
            horizon: *horizon,
            certified: None,
            line: None,
            ascending: None,
        },
    }
}

#[derive(Serialize)]
pub struct StabEntryDto {
    pub k: u32,
    pub generator_count: usize,
    pub v: u64,
    pub v_minus_alpha_k: i64,
    pub ass: Vec<String>,
    pub per_prime: Vec<PrimeVDto>,
}

#[derive(Serialize)]
pub struct StabDto {
    pub ideal: IdealDto,
    pub alpha: u64,
    pub horizon: u32,
    pub window: u32,
    pub entries: Vec<StabEntryDto>,
    pub astab: EstimateDto,
    pub vstab: EstimateDto,
    pub vstab_p: Vec<EstimateDto>,
}

pub fn stab_entries(profile: &PowerProfile) -> Vec<StabEntryDto> {
    let ctx = profile.ideal.context();
    profile
        .entries
        .iter()
        .map(|e| StabEntryDto {
            k: e.k,
            generator_count: e.power.generators().len(),
            v: e.v.global,
            v_minus_alpha_k: e.v.global as i64 - (profile.alpha as i64) * i64::from(e.k),
            ass: e.ass.iter().map(|p| p.render(ctx)).collect(),
            per_prime: prime_v_rows(&e.power, &e.v),
        })
        .collect()
}

#[derive(Serialize)]
pub struct VerifyCaseDto {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct VerifyDto {
    pub cases: Vec<VerifyCaseDto>,
    pub passed: usize,
    pub failed: usize,
}

pub fn verify_dto(report: &VerifyReport) -> VerifyDto {
    VerifyDto {
        cases: report
            .cases
            .iter()
            .map(|c| VerifyCaseDto { name: c.name.clone(), detail: c.detail.clone(), pass: c.pass })
            .collect(),
        passed: report.passed(),
        failed: report.failed(),
    }
}

/// Renders rows as a left-aligned table with two-space gutters.
pub fn align_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Strips the spaces from a rendered prime for CSV cells.
pub fn csv_prime(p: &MonomialPrime, ideal: &MonomialIdeal) -> String {
    p.render(ideal.context()).replace(' ', "")
}
