use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use qheis::algebra::{adjoint, bracket, check_confluence, Element, RuleSet, RuleSetKind, WordPoly};
use qheis::coeff::RatFun;
use qheis::lie::{
    apply_symbolic, calkin_image, decompose, is_compact, is_lie_polynomial, lie_surrogate, surrogate_residual,
    verify_fredholm_relations, verify_identity_suite, IdentityReport, PowerSide,
};
use qheis::spectral::{
    apply_numeric, coherent_vector, lower_index_est, op_norm, spectral_radius_est, spectrum_facts, ApproxPointSpectrum,
    CompressionSpectrum, NumericQ, OperatorTag, PointSpectrum, Spectrum,
};
use serde_json::{json, Value};

use crate::error::{CliError, DomainError, SyntaxError};
use crate::eval::{eval_ast, eval_scalar, eval_with};
use crate::json;
use crate::parser::parse;

#[derive(Debug, Parser)]
#[command(
    name = "qheis",
    version,
    about = "Symbolic and numeric tools for the algebra AB - qBA = I"
)]
pub struct Cli {
    /// Print the result as a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RulesArg {
    Printed,
    Completed,
}

impl From<RulesArg> for RuleSetKind {
    fn from(r: RulesArg) -> Self {
        match r {
            RulesArg::Printed => RuleSetKind::Printed,
            RulesArg::Completed => RuleSetKind::Completed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an expression to normal form.
    Normalize {
        expr: String,
        #[arg(long, value_enum, default_value = "completed")]
        rules: RulesArg,
    },
    /// The commutator [X, Y].
    Bracket { x: String, y: String },
    /// The formal adjoint, exchanging A and B.
    Adjoint { expr: String },
    /// Split into Span{A, B}, the derived part and the remainder.
    Decompose { expr: String },
    /// Whether the element lies in the Lie algebra generated by A and B.
    IsLie { expr: String },
    /// Whether the element is a compact operator.
    IsCompact { expr: String },
    /// Image in the Calkin algebra, a Laurent polynomial in D.
    Calkin { expr: String },
    /// Apply to the basis vector Phi_n; numeric values too when --q is given.
    Apply {
        expr: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: Option<String>,
    },
    /// Check identities, Fredholm relations or rule-set confluence.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Closed-form spectral data of A, B or C^k.
    Spectrum {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        q: Option<String>,
    },
    /// Operator norm of the truncation to the first DIM basis vectors.
    Norm {
        expr: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        dim: usize,
    },
    /// Windowed spectral-radius estimates for B, one per window length.
    Radius {
        #[arg(long)]
        q: String,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dim: usize,
    },
    /// Windowed lower-index estimates for B, one per window length.
    LowerIndex {
        #[arg(long)]
        q: String,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dim: usize,
    },
    /// Truncated eigenvector of A for the eigenvalue c.
    Coherent {
        /// RE or RE,IM
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        dim: usize,
    },
    /// Lie polynomial agreeing with c*A^l or c*B^l on Phi_n.
    Surrogate {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        coeff: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// The ad-construction and gamma identities for small exponents.
    Identities {
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 3)]
        lmax: u32,
    },
    /// The two Fredholm relations and a perturbed control.
    Fredholm,
    /// Ambiguities of a rule set and whether they resolve.
    Confluence {
        #[arg(long, value_enum)]
        rules: RulesArg,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Bracket { .. } => "bracket",
            Command::Adjoint { .. } => "adjoint",
            Command::Decompose { .. } => "decompose",
            Command::IsLie { .. } => "is-lie",
            Command::IsCompact { .. } => "is-compact",
            Command::Calkin { .. } => "calkin",
            Command::Apply { .. } => "apply",
            Command::Verify(VerifyCommand::Identities { .. }) => "verify identities",
            Command::Verify(VerifyCommand::Fredholm) => "verify fredholm",
            Command::Verify(VerifyCommand::Confluence { .. }) => "verify confluence",
            Command::Spectrum { .. } => "spectrum",
            Command::Norm { .. } => "norm",
            Command::Radius { .. } => "radius",
            Command::LowerIndex { .. } => "lower-index",
            Command::Coherent { .. } => "coherent",
            Command::Surrogate { .. } => "surrogate",
        }
    }
}

/// A command's result in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub result: Value,
    pub text: String,
}

/// The full JSON document: format version, command echo and result.
pub fn document(name: &str, argv: &[String], out: &Output) -> Value {
    json!({
        "format_version": json::FORMAT_VERSION,
        "command": {"name": name, "argv": argv},
        "result": out.result,
    })
}

fn element_arg(text: &str) -> Result<Element, CliError> {
    Ok(eval_ast(&parse(text)?)?)
}

/// Parses `P/Q`, an integer, or a plain decimal such as `0.5`, exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, SyntaxError> {
    let bad = |reason| SyntaxError::BadArgument {
        what: "rational",
        text: text.into(),
        reason,
    };
    let int = |s: &str| -> Result<BigInt, SyntaxError> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected P/Q, an integer or a decimal"));
        }
        Ok(s.parse().expect("validated digits"))
    };
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let (p, q) = (int(p.trim())?, int(q.trim())?);
        if q == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let whole = if whole.is_empty() || whole == "-" {
            BigInt::from(0)
        } else {
            int(whole)?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected P/Q, an integer or a decimal"));
        }
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f: BigInt = frac.parse().expect("validated digits");
        let mag = BigRational::new(whole.magnitude().clone().into(), BigInt::from(1)) + BigRational::new(f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    Ok(BigRational::from_integer(int(t)?))
}

fn q_arg(text: &str) -> Result<NumericQ, CliError> {
    Ok(NumericQ::new(parse_rational(text)?).map_err(DomainError::from)?)
}

fn complex_arg(text: &str) -> Result<Complex64, SyntaxError> {
    let bad = || SyntaxError::BadArgument {
        what: "complex number",
        text: text.into(),
        reason: "expected RE or RE,IM",
    };
    let num = |s: &str| s.trim().parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    match text.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(num(re)?, num(im)?)),
        None => Ok(Complex64::new(num(text)?, 0.0)),
    }
}

fn poly_text(p: &WordPoly) -> String {
    match p.to_element() {
        Ok(x) => x.to_string(),
        Err(_) => p.to_string(),
    }
}

fn element_output(x: &Element) -> Output {
    Output {
        result: json::element(x),
        text: x.to_string(),
    }
}

fn bool_output(v: bool) -> Output {
    Output {
        result: json!({ "value": v }),
        text: v.to_string(),
    }
}

fn reports_output(reports: &[IdentityReport]) -> Output {
    let mut text = String::new();
    for r in reports {
        let _ = write!(text, "{}", r.identity);
        if let Some(k) = r.k {
            let _ = write!(text, " k={k}");
        }
        if let Some(l) = r.l {
            let _ = write!(text, " l={l}");
        }
        let verdict = if r.verdict { "holds" } else { "fails" };
        let _ = writeln!(text, ": {verdict}, difference {}", r.difference);
    }
    Output {
        result: json!({ "reports": reports.iter().map(json::identity_report).collect::<Vec<_>>() }),
        text: text.trim_end().to_string(),
    }
}

fn estimates_output(q: &NumericQ, kmax: usize, dim: usize, est: &[f64]) -> Result<Output, CliError> {
    let limit = q.shift_radius();
    let last = *est.last().expect("kmax >= 1");
    Ok(Output {
        result: json!({
            "q": q.value().to_string(),
            "kmax": kmax,
            "dim": dim,
            "limit": json::float(limit)?,
            "estimates": json::floats(est)?,
        }),
        text: format!("k={kmax}: {last:.12} (limit {limit:.12})"),
    })
}

fn snake<T: std::fmt::Debug>(v: T) -> String {
    let mut out = String::new();
    for (i, ch) in format!("{v:?}").chars().enumerate() {
        if ch.is_ascii_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.push(ch.to_ascii_lowercase());
        } else {
            out.push(ch);
        }
    }
    out
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::Normalize { expr, rules } => {
            let rs = RuleSet::of((*rules).into());
            let p = eval_with(&parse(expr)?, &rs)?;
            Output {
                result: json::word_poly(&p),
                text: poly_text(&p),
            }
        }
        Command::Bracket { x, y } => element_output(&bracket(&element_arg(x)?, &element_arg(y)?)),
        Command::Adjoint { expr } => element_output(&adjoint(&element_arg(expr)?)),
        Command::Decompose { expr } => {
            let d = decompose(&element_arg(expr)?);
            Output {
                result: json::decomposition(&d),
                text: format!(
                    "A: {}\nB: {}\nderived: {}\nremainder: {}",
                    d.linear_ab.0, d.linear_ab.1, d.derived, d.e_part
                ),
            }
        }
        Command::IsLie { expr } => bool_output(is_lie_polynomial(&element_arg(expr)?)),
        Command::IsCompact { expr } => bool_output(is_compact(&element_arg(expr)?)),
        Command::Calkin { expr } => {
            let p = calkin_image(&element_arg(expr)?);
            Output {
                result: json::laurent(&p),
                text: p.to_string(),
            }
        }
        Command::Apply { expr, n, q } => {
            let x = element_arg(expr)?;
            let sym = apply_symbolic(&x, *n);
            let mut result = json!({ "n": n, "symbolic": json::ket(&sym) });
            let mut text = format!("{sym}");
            if let Some(q) = q {
                let q = q_arg(q)?;
                let v = apply_numeric(&x, *n, &q).map_err(DomainError::from)?;
                let mut numeric = Vec::new();
                for (m, val) in v.entries() {
                    numeric.push(json!({"target": m, "value": json::float(val)?}));
                    let _ = write!(text, "\n  Phi_{m}: {val:.15e}");
                }
                result["q"] = json!(q.value().to_string());
                result["numeric"] = Value::Array(numeric);
            }
            Output { result, text }
        }
        Command::Verify(VerifyCommand::Identities { kmax, lmax }) => {
            if *lmax < 1 {
                return Err(DomainError::Invalid("lmax must be at least 1".into()).into());
            }
            reports_output(&verify_identity_suite(*kmax, *lmax))
        }
        Command::Verify(VerifyCommand::Fredholm) => reports_output(&verify_fredholm_relations()),
        Command::Verify(VerifyCommand::Confluence { rules, maxlen }) => {
            let s = check_confluence(&RuleSet::of((*rules).into()), *maxlen);
            let mut text = format!(
                "{} rules, words up to length {}: {} ambiguities, {} unresolvable",
                s.rules,
                s.max_len,
                s.reports.len(),
                s.unresolvable().count()
            );
            for r in s.unresolvable() {
                let _ = write!(text, "\n{} ({} vs {}):", r.word, r.rules.0, r.rules.1);
                for o in &r.outcomes {
                    let _ = write!(text, "\n  {}", poly_text(o));
                }
            }
            Output {
                result: json::confluence(&s),
                text,
            }
        }
        Command::Spectrum { op, k, q } => {
            let tag = match op {
                OpArg::A => OperatorTag::A,
                OpArg::B => OperatorTag::B,
                OpArg::C if *k >= 1 => OperatorTag::CPower(*k),
                OpArg::C => return Err(DomainError::Invalid("k must be at least 1".into()).into()),
            };
            let q = q.as_deref().map(q_arg).transpose()?;
            let f = spectrum_facts(tag, q);
            let operator = match tag {
                OperatorTag::A => "A".to_string(),
                OperatorTag::B => "B".to_string(),
                OperatorTag::CPower(k) => format!("C^{k}"),
            };
            let eigen = match f.eigenvalues_at(10) {
                Some(v) => json::floats(&v)?,
                None => Value::Null,
            };
            let radius = match f.radius {
                Some(r) => json::float(r)?,
                None => Value::Null,
            };
            let names = (
                snake::<Spectrum>(f.spectrum),
                snake::<PointSpectrum>(f.point_spectrum),
                snake::<ApproxPointSpectrum>(f.approx_point_spectrum),
                snake::<CompressionSpectrum>(f.compression_spectrum),
            );
            Output {
                text: format!(
                    "{operator}: radius^2 = {}, spectrum {}, point {}, approximate point {}, compression {}",
                    f.radius_sq, names.0, names.1, names.2, names.3
                ),
                result: json!({
                    "operator": operator,
                    "radius_sq": json::coeff(&f.radius_sq),
                    "radius": radius,
                    "spectrum": names.0,
                    "point_spectrum": names.1,
                    "approx_point_spectrum": names.2,
                    "compression_spectrum": names.3,
                    "eigenvalues": eigen,
                }),
            }
        }
        Command::Norm { expr, q, dim } => {
            let x = element_arg(expr)?;
            let q = q_arg(q)?;
            let v = op_norm(&x, &q, *dim).map_err(DomainError::from)?;
            Output {
                result: json!({"q": q.value().to_string(), "dim": dim, "norm": json::float(v)?}),
                text: format!("{v:.15}"),
            }
        }
        Command::Radius { q, kmax, dim } => {
            let q = q_arg(q)?;
            let est = spectral_radius_est(&q, *kmax, *dim).map_err(DomainError::from)?;
            estimates_output(&q, *kmax, *dim, &est)?
        }
        Command::LowerIndex { q, kmax, dim } => {
            let q = q_arg(q)?;
            let est = lower_index_est(&q, *kmax, *dim).map_err(DomainError::from)?;
            estimates_output(&q, *kmax, *dim, &est)?
        }
        Command::Coherent { c, q, dim } => {
            let c = complex_arg(c)?;
            let q = q_arg(q)?;
            let w = coherent_vector(c, &q, *dim).map_err(DomainError::from)?;
            let coefficients = w
                .coefficients
                .iter()
                .map(|z| Ok(json!([json::float(z.re)?, json::float(z.im)?])))
                .collect::<Result<Vec<_>, DomainError>>()?;
            Output {
                text: format!(
                    "residual {:.3e}, outside open disk: {}",
                    w.residual, w.outside_open_disk
                ),
                result: json!({
                    "c": [json::float(c.re)?, json::float(c.im)?],
                    "q": q.value().to_string(),
                    "dim": dim,
                    "residual": json::float(w.residual)?,
                    "outside_open_disk": w.outside_open_disk,
                    "coefficients": coefficients,
                }),
            }
        }
        Command::Surrogate { side, l, n, k, coeff } => {
            let c: RatFun = eval_scalar(&parse(coeff)?)?;
            let side = match side {
                SideArg::A => PowerSide::A,
                SideArg::B => PowerSide::B,
            };
            let y = lie_surrogate(&c, side, *l, *n, *k).map_err(DomainError::from)?;
            let residual = surrogate_residual(&c, side, *l, *n, *k).map_err(DomainError::from)?;
            Output {
                text: format!("{y}\nresidual on Phi_{n}: {residual}"),
                result: json!({
                    "side": format!("{side:?}"),
                    "l": l,
                    "n": n,
                    "k": k,
                    "surrogate": json::element(&y),
                    "is_lie": is_lie_polynomial(&y),
                    "residual": json::ket(&residual),
                    "residual_is_zero": residual.is_zero(),
                }),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms() {
        let r = |s: &str| parse_rational(s).unwrap();
        assert_eq!(r("1/2"), BigRational::new(1.into(), 2.into()));
        assert_eq!(r("0.25"), BigRational::new(1.into(), 4.into()));
        assert_eq!(r("-1.5"), BigRational::new((-3).into(), 2.into()));
        assert_eq!(r("3"), BigRational::from_integer(3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn complex_forms() {
        assert_eq!(complex_arg("0.7").unwrap(), Complex64::new(0.7, 0.0));
        assert_eq!(complex_arg("-1,2").unwrap(), Complex64::new(-1.0, 2.0));
        assert!(complex_arg("nan").is_err());
    }

    #[test]
    fn descriptor_names() {
        assert_eq!(
            snake(ApproxPointSpectrum::ClosureOfEigenvalues),
            "closure_of_eigenvalues"
        );
        assert_eq!(snake(Spectrum::ClosedDisk), "closed_disk");
    }
}
