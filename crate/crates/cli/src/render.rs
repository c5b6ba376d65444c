//! Output rendering: plain text, LaTeX, and the machine-readable JSON
//! monomial schema. Terms are always emitted in the canonical order
//! (weighted degree, then graded-lex), so JSON output round-trips
//! byte-identically.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use spswc_core::polyring::GradedPoly;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub n: usize,
    pub cap: Option<u64>,
    pub weights: Vec<u64>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub exp: Vec<u64>,
    pub coeff: String,
}

pub fn poly_to_json(p: &GradedPoly) -> PolyJson {
    PolyJson {
        n: p.ring().num_vars(),
        cap: p.truncation_cap(),
        weights: p.ring().weights().to_vec(),
        terms: p
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson { exp: m.exponents().to_vec(), coeff: c.to_string() })
            .collect(),
    }
}

/// Plain-text form, e.g. `1 + e1 + e1^2*e2` (the core display order).
pub fn poly_to_text(p: &GradedPoly) -> String {
    p.to_string()
}

/// LaTeX names for the variable families used by the commands: `e`/`f` are
/// the Frobenius-degree-4 generators, `E` the elementary-symmetric basis,
/// `Ex`/`Ey` the two tensor alphabets; anything else renders as-is with a
/// subscript.
fn latex_var(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (base, index) = name.split_at(split);
    match base {
        "e" => format!("\\mathfrak{{e}}_{{{index}}}"),
        "f" => format!("\\mathfrak{{f}}_{{{index}}}"),
        "E" => format!("\\mathcal{{E}}_{{{index}}}"),
        "Ex" => format!("\\mathcal{{E}}_{{{index}}}(\\mathbf{{x}})"),
        "Ey" => format!("\\mathcal{{E}}_{{{index}}}(\\mathbf{{y}})"),
        _ if index.is_empty() => base.to_string(),
        _ => format!("{base}_{{{index}}}"),
    }
}

pub fn poly_to_latex(p: &GradedPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in p.sorted_terms().into_iter().enumerate() {
        let negative = coeff.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = coeff.abs();
        let constant = mono.is_constant();
        if !abs.is_one() || constant {
            out.push_str(&abs.to_string());
        }
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push_str(&latex_var(p.ring().var_name(i)));
            if e > 1 {
                out.push_str(&format!("^{{{e}}}"));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// Render a single polynomial under the chosen format; `label` prefixes the
/// text and LaTeX forms (`w`, `D`, `P`, ...).
pub fn render_poly(p: &GradedPoly, label: &str, format: Format) -> String {
    match format {
        Format::Text => format!("{label} = {}", poly_to_text(p)),
        Format::Latex => format!("{label} = {}", poly_to_latex(p)),
        Format::Json => serde_json::to_string(&poly_to_json(p)).expect("serializable"),
    }
}
