//! The `vstab` command line: parse an ideal (or construct a built-in
//! family), then compute associated primes, v-numbers, power profiles and
//! stabilization indices, as a table, JSON or CSV.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse or parameter
//! error, 3 inconclusive detection, 4 generator cap exceeded.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::*;
use std::io::Read;
use std::process::ExitCode;
use vstab_core::error::IdealError;
use vstab_core::families;
use vstab_core::stability::{
    build_profile_capped, check_index_inequalities, detect_astab, detect_vstab, detect_vstab_p,
    Detection, DEFAULT_GENERATOR_CAP, DEFAULT_WINDOW,
};
use vstab_core::text::{parse_ideal, render_ideal};
use vstab_core::verify::{verify_composite, verify_full, verify_two_var, VerifyOptions};
use vstab_core::vnumber::v_global;
use vstab_core::MonomialIdeal;

#[derive(Parser)]
#[command(name = "vstab", version, about = "Powers, associated primes, v-numbers and stability indices of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Associated primes of the ideal
    Ass {
        /// Ideal file, `-` for stdin, or a family spec like `H(2)` or `paper(2,3)`
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// v-numbers per associated prime and the global v-number
    Vnum {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal generators of the powers I^k for k = 1..kmax
    Powers {
        input: String,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
    },
    /// Power profile with detected astab and vstab
    Stab {
        input: String,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
    },
    /// Emit a built-in family in the ideal text format
    Construct {
        /// One of: H, J, triangle, paper
        family: String,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
    },
    /// Re-run the closed-form checks for the built-in families
    Verify {
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn parameter(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        let code = match e {
            IdealError::Capacity { .. } => 4,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<vstab_core::text::ParseError> for CliError {
    fn from(e: vstab_core::text::ParseError) -> Self {
        Self { code: 2, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self { code: 2, message: e.to_string() }
    }
}

/// A family spec like `H(2)`, `J(3)`, `triangle(1)` or `paper(2,3)`.
fn constructor_spec(input: &str) -> Option<Result<(MonomialIdeal, Option<(u32, u32)>), CliError>> {
    let body = input.strip_suffix(')')?;
    let (name, args) = body.split_once('(')?;
    let args: Result<Vec<u32>, _> = args.split(',').map(|s| s.trim().parse::<u32>()).collect();
    let args = match args {
        Ok(args) => args,
        Err(_) => return Some(Err(CliError::parameter(format!("bad family arguments in {input:?}")))),
    };
    let build = |r: Result<MonomialIdeal, IdealError>, ab: Option<(u32, u32)>| {
        Some(r.map(|i| (i, ab)).map_err(CliError::from))
    };
    match (name, args.as_slice()) {
        ("H" | "h", [b]) => build(families::family_h(*b), Some((1, *b))),
        ("J" | "j", [a]) => build(families::family_j(*a), Some((*a, 1))),
        ("triangle", [i]) => build(families::triangle(*i), Some((2, 1))),
        ("paper", [a, b]) => build(families::composite_family(*a, *b), Some((*a, *b))),
        _ => Some(Err(CliError::parameter(format!("unknown family spec {input:?}")))),
    }
}

/// Loads the input ideal and, for family specs, the (a, b) parameters that
/// pick a default detection horizon.
fn load_ideal(input: &str) -> Result<(MonomialIdeal, Option<(u32, u32)>), CliError> {
    if let Some(result) = constructor_spec(input) {
        return result;
    }
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(input)?
    };
    Ok((parse_ideal(&text)?, None))
}

fn default_kmax(params: Option<(u32, u32)>) -> u32 {
    match params {
        Some((a, b)) => families::default_horizon(a, b),
        None => 6,
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn run_ass(input: &str, format: Format) -> Result<u8, CliError> {
    let (ideal, _) = load_ideal(input)?;
    let ass = vstab_core::associated_primes(&ideal)?;
    let primes: Vec<String> = ass.iter().map(|p| p.render(ideal.context())).collect();
    match format {
        Format::Json => {
            print_json(&AssDto { ideal: ideal_dto(&ideal), count: primes.len(), primes })
        }
        Format::Csv => {
            println!("prime");
            for p in ass.iter() {
                println!("{}", csv_prime(p, &ideal));
            }
        }
        Format::Table => {
            println!("ideal: {}", ideal.render());
            for p in &primes {
                println!("{p}");
            }
            println!("{} associated primes", primes.len());
        }
    }
    Ok(0)
}

fn run_vnum(input: &str, format: Format) -> Result<u8, CliError> {
    let (ideal, _) = load_ideal(input)?;
    let report = v_global(&ideal)?;
    let rows = prime_v_rows(&ideal, &report);
    let global_witness = report
        .per_prime
        .iter()
        .filter(|(_, &v)| v == report.global)
        .map(|(p, _)| ideal.context().render(&report.witnesses[p]))
        .next()
        .expect("the minimum is attained");
    match format {
        Format::Json => print_json(&VnumDto {
            ideal: ideal_dto(&ideal),
            per_prime: rows,
            v: report.global,
            witness: global_witness,
        }),
        Format::Csv => {
            println!("prime,v,witness");
            for row in rows {
                println!("{},{},{}", row.prime.replace(' ', ""), row.v, row.witness);
            }
        }
        Format::Table => {
            println!("ideal: {}", ideal.render());
            let mut table = vec![vec!["prime".to_string(), "v_p".to_string(), "witness".to_string()]];
            for row in &rows {
                table.push(vec![row.prime.clone(), row.v.to_string(), row.witness.clone()]);
            }
            print!("{}", align_table(&table));
            println!("v={}, witness {}", report.global, global_witness);
        }
    }
    Ok(0)
}

fn run_powers(input: &str, kmax: Option<u32>, format: Format, cap: usize) -> Result<u8, CliError> {
    let (ideal, params) = load_ideal(input)?;
    let kmax = kmax.unwrap_or_else(|| default_kmax(params));
    if kmax < 1 {
        return Err(CliError::parameter("kmax must be at least 1"));
    }
    ideal.ensure_proper()?;
    let mut entries = Vec::new();
    let mut power = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            power = power
                .generators()
                .iter()
                .try_fold(Vec::new(), |mut acc, a| {
                    for b in ideal.generators() {
                        acc.push(a.checked_mul(b)?);
                    }
                    Ok::<_, IdealError>(acc)
                })
                .and_then(|gens| MonomialIdeal::new(ideal.context().clone(), gens))?;
        }
        if power.generators().len() > cap {
            return Err(IdealError::Capacity { k, count: power.generators().len(), cap }.into());
        }
        entries.push(PowerEntryDto {
            k,
            count: power.generators().len(),
            generators: power.generators().iter().map(|g| ideal.context().render(g)).collect(),
        });
    }
    match format {
        Format::Json => print_json(&PowersDto { ideal: ideal_dto(&ideal), entries }),
        Format::Csv => {
            println!("k,count,generators");
            for e in entries {
                println!("{},{},{}", e.k, e.count, e.generators.join(";"));
            }
        }
        Format::Table => {
            println!("ideal: {}", ideal.render());
            for e in entries {
                println!("k={} ({} generators): {}", e.k, e.count, e.generators.join(", "));
            }
        }
    }
    Ok(0)
}

fn run_stab(
    input: &str,
    kmax: Option<u32>,
    window: u32,
    format: Format,
    cap: usize,
) -> Result<u8, CliError> {
    let (ideal, params) = load_ideal(input)?;
    let kmax = kmax.unwrap_or_else(|| default_kmax(params).max(window + 1));
    if kmax < window + 1 {
        return Err(CliError::parameter(format!(
            "kmax must be at least window + 1 = {}",
            window + 1
        )));
    }
    let profile = build_profile_capped(&ideal, kmax, cap)?;
    let astab = detect_astab(&profile, window)?;
    let vstab = detect_vstab(&profile, window)?;
    let stable_ass = &profile.entry(profile.horizon()).ass;
    let vstab_p: Vec<(String, Detection)> = stable_ass
        .iter()
        .map(|p| {
            detect_vstab_p(&profile, p, window)
                .map(|d| (p.render(ideal.context()), d))
        })
        .collect::<Result<_, _>>()?;

    let dto = StabDto {
        ideal: ideal_dto(&ideal),
        alpha: profile.alpha,
        horizon: kmax,
        window,
        entries: stab_entries(&profile),
        astab: estimate_dto("ass", None, &astab),
        vstab: estimate_dto("v", None, &vstab),
        vstab_p: vstab_p
            .iter()
            .map(|(p, d)| estimate_dto("v_p", Some(p.clone()), d))
            .collect(),
    };

    let inconclusive = !astab.is_conclusive()
        || !vstab.is_conclusive()
        || vstab_p.iter().any(|(_, d)| !d.is_conclusive());

    match format {
        Format::Json => print_json(&dto),
        Format::Csv => {
            println!("k,generators,v,v_minus_alpha_k,ass_count");
            for e in &dto.entries {
                println!("{},{},{},{},{}", e.k, e.generator_count, e.v, e.v_minus_alpha_k, e.ass.len());
            }
        }
        Format::Table => {
            println!("ideal: {} (alpha = {})", ideal.render(), profile.alpha);
            let mut table = vec![vec![
                "k".to_string(),
                "gens".to_string(),
                "v".to_string(),
                "v-alpha*k".to_string(),
                "#ass".to_string(),
            ]];
            for e in &dto.entries {
                table.push(vec![
                    e.k.to_string(),
                    e.generator_count.to_string(),
                    e.v.to_string(),
                    e.v_minus_alpha_k.to_string(),
                    e.ass.len().to_string(),
                ]);
            }
            print!("{}", align_table(&table));
            for (p, d) in &vstab_p {
                match d.conclusive() {
                    Some(e) => {
                        let (s, i) = e.line.expect("v_p estimates carry a line");
                        println!("vstab_p{p}={} line={s}k{i:+}", e.index);
                    }
                    None => println!("vstab_p{p}=inconclusive"),
                }
            }
            match (astab.conclusive(), vstab.conclusive()) {
                (Some(a), Some(v)) => {
                    let (slope, intercept) = v.line.expect("v estimates carry a line");
                    println!("astab={} vstab={} line={}k{:+}", a.index, v.index, slope, intercept);
                }
                _ => {
                    if let Some(a) = astab.conclusive() {
                        println!("astab={}", a.index);
                    } else {
                        println!("astab=inconclusive (horizon {kmax})");
                    }
                    if let Some(v) = vstab.conclusive() {
                        let (slope, intercept) = v.line.expect("line");
                        println!("vstab={} line={}k{:+}", v.index, slope, intercept);
                    } else {
                        println!("vstab=inconclusive (horizon {kmax})");
                    }
                }
            }
            if let Some(cmp) = check_index_inequalities(&profile, window)? {
                println!(
                    "max vstab_p = {} (astab bound {}, vstab bound {})",
                    cmp.max_vstab_p,
                    if cmp.max_bounds_astab { "holds" } else { "violated" },
                    if cmp.max_bounds_vstab { "holds" } else { "violated" },
                );
            }
        }
    }
    Ok(if inconclusive { 3 } else { 0 })
}

fn run_construct(family: &str, a: Option<u32>, b: Option<u32>, i: Option<u32>) -> Result<u8, CliError> {
    let need = |opt: Option<u32>, flag: &str| {
        opt.ok_or_else(|| CliError::parameter(format!("family {family:?} needs --{flag}")))
    };
    let (ideal, note) = match family {
        "H" | "h" => (families::family_h(need(b, "b")?)?, None),
        "J" | "j" => (families::family_j(need(a, "a")?)?, None),
        "triangle" => (families::triangle(need(i, "i")?)?, None),
        "paper" => {
            let (a, b) = (need(a, "a")?, need(b, "b")?);
            let ideal = families::composite_family(a, b)?;
            let note = format!(
                "# composite family a={a}, b={b}; ring restricted to the {} variables used by its generators",
                ideal.arity()
            );
            (ideal, Some(note))
        }
        _ => return Err(CliError::parameter(format!("unknown family {family:?}"))),
    };
    if let Some(note) = note {
        println!("{note}");
    }
    print!("{}", render_ideal(&ideal));
    Ok(0)
}

fn run_verify(a: Option<u32>, b: Option<u32>, format: Format, cap: usize) -> Result<u8, CliError> {
    let opts = VerifyOptions { cap };
    let report = match (a, b) {
        (None, None) => verify_full(&opts)?,
        (Some(a), Some(b)) => verify_composite(a, b, &opts)?,
        (None, Some(b)) => verify_two_var(b, &opts)?,
        (Some(_), None) => {
            return Err(CliError::parameter("verify --a also needs --b"));
        }
    };
    match format {
        Format::Json => print_json(&verify_dto(&report)),
        Format::Csv => {
            println!("case,pass");
            for c in &report.cases {
                println!("{},{}", c.name.replace(',', ";"), c.pass);
            }
        }
        Format::Table => {
            for c in &report.cases {
                println!("{} {} — {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            println!("passed {}, failed {}", report.passed(), report.failed());
        }
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Ass { input, format } => run_ass(&input, format),
        Command::Vnum { input, format } => run_vnum(&input, format),
        Command::Powers { input, kmax, format, cap } => run_powers(&input, kmax, format, cap),
        Command::Stab { input, kmax, window, format, cap } => {
            run_stab(&input, kmax, window, format, cap)
        }
        Command::Construct { family, a, b, i } => run_construct(&family, a, b, i),
        Command::Verify { a, b, format, cap } => run_verify(a, b, format, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
