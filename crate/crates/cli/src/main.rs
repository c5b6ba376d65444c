//! Command-line front end: parse character input, dispatch the class
//! computations, and render results as text, LaTeX, or JSON.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation/divisibility error,
//! 4 cap-required/feasibility error, 1 anything else.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Deserialize;

use render::{poly_to_json, render_poly, Format};
use spswc_core::characters::{
    catalog_character, regular_character, validate_orthogonal, weil_character,
};
use spswc_core::polyring::{CoeffDomain, GradedPoly, PolyRing};
use spswc_core::swc::{sp4_closed_form, total_swc, universal_w4, universal_w8};
use spswc_core::symfunc::{compute_pmn, dickson_factor, dickson_total};
use spswc_core::tensor::{tensor_class, ClassVector};
use spswc_core::{CharacterData, Error, MultiplicityVector};

#[derive(Parser)]
#[command(
    name = "spswc",
    about = "Stiefel-Whitney classes of orthogonal representations of Sp(2n,q)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Truncation cap on the cohomological degree (default 64, or
    /// SWC_DEFAULT_CAP from the environment).
    #[arg(long)]
    cap: Option<u64>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CharacterArgs {
    /// Rank n of Sp(2n,q).
    #[arg(long)]
    n: Option<usize>,
    /// Character values chi(g_0),...,chi(g_n), comma-separated integers.
    #[arg(long = "char", value_name = "V0,V1,...", allow_hyphen_values = true)]
    character: Option<String>,
    /// Built-in representation: regular, weil, weil-prime, sp4-pi1, sp4-pi2.
    #[arg(long, conflicts_with = "character")]
    rep: Option<String>,
    /// Odd prime power q (required with --rep).
    #[arg(long)]
    q: Option<u64>,
    /// Replace the character by its symmetrization S(pi) = pi + pi-dual.
    #[arg(long)]
    symmetrize: bool,
    /// Read {n, cap, q, char} from a JSON job file; flags override.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Total SWC of an orthogonal character via the Dickson product formula.
    Compute {
        #[command(flatten)]
        chr: CharacterArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Universal w_4 (and w_8 for n >= 2) straight from character values.
    Universal {
        #[command(flatten)]
        chr: CharacterArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// w(S(W)) for the Weil representation of Sp(2n,q).
    Weil {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Total SWC of the regular representation.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sp(4,q) closed form ((1+e1)(1+e2))^r (1+e1+e2)^s.
    Sp4 {
        #[command(flatten)]
        chr: CharacterArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dickson factor D^[k] (or the full product) in the E-basis.
    Dickson {
        #[arg(long)]
        n: usize,
        /// Factor index; omitted means the full product D.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The tensor polynomial P_{m,n} in the two elementary-symmetric
    /// alphabets.
    Pmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Coefficient domain.
        #[arg(long, value_parser = ["gf2", "int"], default_value = "gf2")]
        domain: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// w(pi1 x pi2) of an external tensor product, from two characters.
    Tensor {
        #[arg(long)]
        n: usize,
        #[arg(long = "char", value_name = "V0,V1,...", allow_hyphen_values = true)]
        character: String,
        #[arg(long)]
        n2: usize,
        #[arg(long = "char2", value_name = "V0,V1,...", allow_hyphen_values = true)]
        character2: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the orthogonality gate and print the multiplicity vector.
    Validate {
        #[command(flatten)]
        chr: CharacterArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum CliError {
    Core(Error),
    Parse(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Parse(msg) => format!("parse error: {msg}"),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(e) => match e {
                Error::MissingCap
                | Error::CapExceeded { .. }
                | Error::TensorTooLarge { .. }
                | Error::ExponentOverflow => 4,
                Error::RingMismatch
                | Error::DomainMismatch(_)
                | Error::ImageCount { .. }
                | Error::IndexOutOfRange { .. } => 1,
                _ => 3,
            },
        }
    }
}

#[derive(Deserialize, Default)]
struct JobFile {
    n: Option<usize>,
    cap: Option<u64>,
    q: Option<u64>,
    #[serde(rename = "char")]
    character: Option<Vec<NumOrString>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumOrString {
    Num(i64),
    Str(String),
}

fn parse_char_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(',')
        .map(|part| {
            BigInt::from_str(part.trim()).map_err(|_| {
                CliError::parse(format!("invalid integer in character vector: {part:?}"))
            })
        })
        .collect()
}

fn load_job_file(path: &PathBuf) -> Result<JobFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("invalid job file {}: {e}", path.display())))
}

/// Resolve the truncation cap: flag, then job file, then SWC_DEFAULT_CAP,
/// then 64.
fn resolve_cap(flag: Option<u64>, file: Option<u64>) -> Result<u64, CliError> {
    if let Some(c) = flag.or(file) {
        return Ok(c);
    }
    match std::env::var("SWC_DEFAULT_CAP") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::parse(format!("invalid SWC_DEFAULT_CAP: {text:?}"))),
        Err(_) => Ok(64),
    }
}

/// Assemble the character from flags and optional job file.
fn resolve_character(chr: &CharacterArgs) -> Result<(CharacterData, Option<u64>), CliError> {
    let file = match &chr.input {
        Some(path) => load_job_file(path)?,
        None => JobFile::default(),
    };
    let n = chr
        .n
        .or(file.n)
        .ok_or_else(|| CliError::parse("missing --n (rank)"))?;
    let q = chr.q.or(file.q);

    let chi = if let Some(rep) = &chr.rep {
        let q = q.ok_or_else(|| CliError::parse("--rep needs --q"))?;
        catalog_character(rep, n, q)?
    } else if let Some(text) = &chr.character {
        CharacterData::new(n, parse_char_list(text)?)?
    } else if let Some(entries) = &file.character {
        let values: Result<Vec<BigInt>, CliError> = entries
            .iter()
            .map(|v| match v {
                NumOrString::Num(x) => Ok(BigInt::from(*x)),
                NumOrString::Str(s) => BigInt::from_str(s.trim())
                    .map_err(|_| CliError::parse(format!("invalid integer in job file: {s:?}"))),
            })
            .collect();
        CharacterData::new(n, values?)?
    } else {
        return Err(CliError::parse("missing --char, --rep, or a job file with \"char\""));
    };
    let chi = if chr.symmetrize { chi.symmetrize() } else { chi };
    Ok((chi, file.cap))
}

fn multiplicities_text(mv: &MultiplicityVector) -> String {
    let entries: Vec<String> = mv.entries().iter().map(|m| m.to_string()).collect();
    format!("m = ({})", entries.join(", "))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute { chr, out } => {
            let (chi, file_cap) = resolve_character(&chr)?;
            let cap = resolve_cap(out.cap, file_cap)?;
            let cls = total_swc(&chi, cap)?;
            println!("{}", render_poly(cls.total(), "w", out.format));
        }
        Command::Universal { chr, out } => {
            let (chi, _) = resolve_character(&chr)?;
            let w4 = universal_w4(&chi)?;
            let w8 = if chi.rank() >= 2 { Some(universal_w8(&chi)?) } else { None };
            match out.format {
                Format::Json => {
                    let obj = serde_json::json!({
                        "w4": poly_to_json(&w4),
                        "w8": w8.as_ref().map(poly_to_json),
                    });
                    println!("{}", serde_json::to_string(&obj).expect("serializable"));
                }
                fmt => {
                    println!("{}", render_poly(&w4, "w4", fmt));
                    if let Some(w8) = w8 {
                        println!("{}", render_poly(&w8, "w8", fmt));
                    }
                }
            }
        }
        Command::Weil { n, q, out } => {
            let cap = resolve_cap(out.cap, None)?;
            let chi = weil_character(n, q)?.symmetrize();
            let cls = total_swc(&chi, cap)?;
            println!("{}", render_poly(cls.total(), "w", out.format));
        }
        Command::Regular { n, q, out } => {
            let cap = resolve_cap(out.cap, None)?;
            let cls = total_swc(&regular_character(n, q)?, cap)?;
            println!("{}", render_poly(cls.total(), "w", out.format));
        }
        Command::Sp4 { chr, out } => {
            let mut chr = chr;
            chr.n = Some(chr.n.unwrap_or(2));
            // Accept the shorthand pi1/pi2 for the two built-in families.
            if let Some(rep) = &chr.rep {
                let full = match rep.as_str() {
                    "pi1" => Some("sp4-pi1"),
                    "pi2" => Some("sp4-pi2"),
                    _ => None,
                };
                if let Some(full) = full {
                    chr.rep = Some(full.to_string());
                }
            }
            let (chi, file_cap) = resolve_character(&chr)?;
            let cap = resolve_cap(out.cap, file_cap)?;
            let cls = sp4_closed_form(&chi, cap)?;
            println!("{}", render_poly(cls.total(), "w", out.format));
        }
        Command::Dickson { n, k, out } => {
            let (poly, label) = match k {
                Some(k) => (dickson_factor(n, k)?, format!("D^[{k}]")),
                None => (dickson_total(n)?, "D".to_string()),
            };
            println!("{}", render_poly(&poly, &label, out.format));
        }
        Command::Pmn { m, n, domain, out } => {
            let domain = match domain.as_str() {
                "gf2" => CoeffDomain::Gf2,
                _ => CoeffDomain::Integer,
            };
            let p = compute_pmn(m, n, domain)?;
            println!("{}", render_poly(p.body(), "P", out.format));
        }
        Command::Tensor { n, character, n2, character2, out } => {
            let cap = resolve_cap(out.cap, None)?;
            let chi1 = CharacterData::new(n, parse_char_list(&character)?)?;
            let chi2 = CharacterData::new(n2, parse_char_list(&character2)?)?;
            let poly = tensor_of_characters(&chi1, &chi2, cap)?;
            println!("{}", render_poly(&poly, "w", out.format));
        }
        Command::Validate { chr, format } => {
            let (chi, _) = resolve_character(&chr)?;
            let mv = validate_orthogonal(&chi)?;
            match format {
                Format::Json => {
                    let entries: Vec<String> =
                        mv.entries().iter().map(|m| m.to_string()).collect();
                    let obj = serde_json::json!({ "n": mv.rank(), "m": entries });
                    println!("{}", serde_json::to_string(&obj).expect("serializable"));
                }
                _ => println!("{}", multiplicities_text(&mv)),
            }
        }
    }
    Ok(())
}

/// External tensor product of two Sp characters: compute both total classes,
/// embed them in a joint ring (disjoint variable blocks for the two
/// projection pullbacks), and evaluate P_{deg1,deg2} on the component lists.
fn tensor_of_characters(
    chi1: &CharacterData,
    chi2: &CharacterData,
    cap: u64,
) -> Result<GradedPoly, CliError> {
    let d1 = degree_as_rank(chi1)?;
    let d2 = degree_as_rank(chi2)?;
    let cls1 = total_swc(chi1, cap)?;
    let cls2 = total_swc(chi2, cap)?;

    let joint = PolyRing::new(
        CoeffDomain::Gf2,
        (1..=chi1.rank())
            .map(|i| format!("e{i}"))
            .chain((1..=chi2.rank()).map(|j| format!("f{j}"))),
        std::iter::repeat(4).take(chi1.rank() + chi2.rank()),
    );
    let a = ClassVector::new(
        d1,
        (1..=d1 as u64)
            .map(|i| embed(&cls1.total().graded_component(i), &joint, 0))
            .collect::<Result<_, _>>()?,
    )?;
    let b = ClassVector::new(
        d2,
        (1..=d2 as u64)
            .map(|i| embed(&cls2.total().graded_component(i), &joint, chi1.rank()))
            .collect::<Result<_, _>>()?,
    )?;
    Ok(tensor_class(&a, &b, CoeffDomain::Gf2, cap)?)
}

fn degree_as_rank(chi: &CharacterData) -> Result<usize, CliError> {
    use num_traits::ToPrimitive;
    let limit = spswc_core::tensor::MAX_TENSOR_VARS;
    chi.degree()
        .to_usize()
        .filter(|&d| d <= limit)
        .ok_or(CliError::Core(Error::TensorTooLarge { vars: limit + 1, limit }))
}

/// Copy a polynomial into a wider ring, shifting its variables by `offset`.
fn embed(p: &GradedPoly, target: &PolyRing, offset: usize) -> Result<GradedPoly, Error> {
    GradedPoly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            let mut exps = vec![0u64; target.num_vars()];
            exps[offset..offset + m.exponents().len()].copy_from_slice(m.exponents());
            (exps, c.clone())
        }),
        p.truncation_cap(),
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
