//! Subcommand dispatch and report rendering.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use apolar_core::{
    bezout_report, buchberger, dual_member, dual_space, format_poly, format_rational,
    nullstellensatz_power, parse_poly, quotient_dimension, solve_rational_all, standard_monomials,
    BezoutVerdict, Error, InfinityEvidence, MonomialOrder, MultiIndex, OrderKind, Point,
    Polynomial, PolynomialSystem, QuotientDimension,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;
use crate::files::{load_roots, load_system, parse_point};

#[derive(Debug, Parser)]
#[command(
    name = "apolar",
    version,
    about = "Local dual spaces, intersection multiplicities and ideal membership, exactly"
)]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SystemArg {
    /// System file: `vars: ...` header, then one polynomial per line.
    #[arg(long, value_name = "FILE")]
    pub system: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dual space basis and multiplicity at a point.
    Dual {
        #[command(flatten)]
        system: SystemArg,
        /// Comma-separated rational coordinates, e.g. "0,1/2".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Intersection multiplicity at a point.
    Mult {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Sum of multiplicities compared with the product of degrees.
    Bezout {
        #[command(flatten)]
        system: SystemArg,
        /// Roots file; by default roots are computed.
        #[arg(long, value_name = "FILE")]
        roots: Option<PathBuf>,
    },
    /// Ideal membership by dual functionals, checked against a Gröbner basis.
    Member {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Least power of a polynomial that lies in the ideal.
    Power {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Reduced Gröbner basis and standard monomials.
    Gb {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
    },
    /// Common zeros with rational coordinates.
    Solve {
        #[command(flatten)]
        system: SystemArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Serialize)]
struct Inputs {
    system: String,
    vars: Vec<String>,
    polys: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roots: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<&'static str>,
}

#[derive(Serialize)]
struct RootEntry {
    point: Vec<String>,
    multiplicity: usize,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
enum EvidenceJson {
    None,
    Present { common_factor: String },
}

#[derive(Serialize)]
struct WitnessJson {
    point: Vec<String>,
    functional: String,
    value: String,
}

#[derive(Serialize)]
struct CertificateJson {
    m: u32,
    bound: u64,
}

#[derive(Serialize)]
#[serde(untagged)]
enum QuotientJson {
    Finite(usize),
    Infinite(&'static str),
}

impl From<QuotientDimension> for QuotientJson {
    fn from(q: QuotientDimension) -> Self {
        match q {
            QuotientDimension::Finite(k) => QuotientJson::Finite(k),
            QuotientDimension::Infinite => QuotientJson::Infinite("INFINITE"),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Body {
    Dual {
        basis: Vec<String>,
        multiplicity: usize,
        truncation_degree: u32,
    },
    Mult {
        multiplicity: usize,
    },
    Bezout {
        roots: Vec<RootEntry>,
        total: usize,
        bezout_number: u64,
        verdict: String,
        completeness: bool,
        quotient_dimension: QuotientJson,
        #[serde(skip_serializing_if = "Option::is_none")]
        infinity_evidence: Option<EvidenceJson>,
        oracle_agreement: bool,
    },
    Member {
        member: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessJson>,
        oracle_member: bool,
        oracle_agreement: bool,
    },
    Power {
        certificate: CertificateJson,
        oracle_agreement: bool,
    },
    Gb {
        basis: Vec<String>,
        standard_monomials: Option<Vec<String>>,
        quotient_dimension: QuotientJson,
    },
    Solve {
        points: Vec<Vec<String>>,
    },
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Inputs,
    #[serde(flatten)]
    body: Body,
}

fn coords(p: &Point) -> Vec<String> {
    p.coords().iter().map(format_rational).collect()
}

fn monomial_text(m: &MultiIndex, vars: &[String]) -> String {
    format_poly(
        &Polynomial::monomial(m.clone(), apolar_core::rational::rat(1)),
        vars,
    )
}

fn inputs(path: &Path, sys: &PolynomialSystem) -> Inputs {
    Inputs {
        system: path.display().to_string(),
        vars: sys.vars().to_vec(),
        polys: sys
            .polys()
            .iter()
            .map(|p| format_poly(p, sys.vars()))
            .collect(),
        point: None,
        roots: None,
        poly: None,
        order: None,
    }
}

fn parse_expr(text: &str, sys: &PolynomialSystem) -> Result<Polynomial, CliError> {
    parse_poly(text, sys.vars()).map_err(|e| CliError::Usage(format!("--poly `{text}`: {e}")))
}

/// Runs one command and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let report = execute(&cli.command)?;
    Ok(if cli.json {
        let mut s = serde_json::to_string(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_text(&report)
    })
}

/// Parses `args` (including the program name) and runs them, returning
/// the exit code and the text for stdout or stderr.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(&cli) {
            Ok(out) => (0, out),
            Err(e) => (e.exit_code(), format!("error: {e}\n")),
        },
        Err(e) => (e.exit_code(), e.to_string()),
    }
}

fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Dual { system, point } | Command::Mult { system, point } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let x = parse_point(point, sys.nvars(), "--point")?;
            let basis = dual_space(sys.polys(), &x)
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            let mut inp = inputs(path, &sys);
            inp.point = Some(x.to_csv());
            let (name, body) = match command {
                Command::Dual { .. } => (
                    "dual",
                    Body::Dual {
                        basis: basis.basis.iter().map(ToString::to_string).collect(),
                        multiplicity: basis.multiplicity(),
                        truncation_degree: basis.truncation_degree,
                    },
                ),
                _ => (
                    "mult",
                    Body::Mult {
                        multiplicity: basis.multiplicity(),
                    },
                ),
            };
            Ok(Report {
                command: name,
                inputs: inp,
                body,
            })
        }
        Command::Bezout { system, roots } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let given = roots
                .as_deref()
                .map(|r| load_roots(r, sys.nvars()))
                .transpose()?;
            let rep = bezout_report(&sys, given.as_deref())
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            let mut inp = inputs(path, &sys);
            inp.roots = roots.as_ref().map(|r| r.display().to_string());
            let infinity_evidence = rep.infinity_evidence.as_ref().map(|ev| match ev {
                InfinityEvidence::None => EvidenceJson::None,
                InfinityEvidence::Present(f) => EvidenceJson::Present {
                    common_factor: format_poly(f, sys.vars()),
                },
            });
            let oracle_agreement = match rep.verdict {
                BezoutVerdict::Infinite => rep.quotient_dimension == QuotientDimension::Infinite,
                _ => rep.quotient_dimension == QuotientDimension::Finite(rep.total),
            };
            Ok(Report {
                command: "bezout",
                inputs: inp,
                body: Body::Bezout {
                    roots: rep
                        .roots
                        .iter()
                        .map(|(p, m)| RootEntry {
                            point: coords(p),
                            multiplicity: *m,
                        })
                        .collect(),
                    total: rep.total,
                    bezout_number: rep.bezout_number,
                    verdict: rep.verdict.to_string(),
                    completeness: rep.completeness,
                    quotient_dimension: rep.quotient_dimension.into(),
                    infinity_evidence,
                    oracle_agreement,
                },
            })
        }
        Command::Member { system, poly } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let f = parse_expr(poly, &sys)?;
            let v = dual_member(&f, &sys)
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            let mut inp = inputs(path, &sys);
            inp.poly = Some(format_poly(&f, sys.vars()));
            Ok(Report {
                command: "member",
                inputs: inp,
                body: Body::Member {
                    member: v.member,
                    witness: v.witness.map(|w| WitnessJson {
                        point: coords(&w.point),
                        functional: w.functional.to_string(),
                        value: format_rational(&w.value),
                    }),
                    oracle_member: v.oracle_member,
                    oracle_agreement: v.oracle_agrees,
                },
            })
        }
        Command::Power { system, poly } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let f = parse_expr(poly, &sys)?;
            let cert = nullstellensatz_power(&f, &sys)
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            // independent confirmation: f^m reduces to zero, f^(m-1) does not
            let gb = buchberger(sys.polys(), &MonomialOrder::grevlex(sys.nvars()))
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            let oracle_agreement =
                gb.contains(&f.pow(cert.m)) && (cert.m == 1 || !gb.contains(&f.pow(cert.m - 1)));
            let mut inp = inputs(path, &sys);
            inp.poly = Some(format_poly(&f, sys.vars()));
            Ok(Report {
                command: "power",
                inputs: inp,
                body: Body::Power {
                    certificate: CertificateJson {
                        m: cert.m,
                        bound: cert.bound,
                    },
                    oracle_agreement,
                },
            })
        }
        Command::Gb { system, order } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let (kind, name) = match order {
                OrderArg::Lex => (OrderKind::Lex, "lex"),
                OrderArg::Grevlex => (OrderKind::Grevlex, "grevlex"),
            };
            let gb = buchberger(sys.polys(), &MonomialOrder::new(kind, sys.nvars()))
                .map_err(|e| CliError::domain(path.display().to_string(), e))?;
            let mut inp = inputs(path, &sys);
            inp.order = Some(name);
            Ok(Report {
                command: "gb",
                inputs: inp,
                body: Body::Gb {
                    basis: gb
                        .generators()
                        .iter()
                        .map(|g| format_poly(g, sys.vars()))
                        .collect(),
                    standard_monomials: standard_monomials(&gb)
                        .map(|ms| ms.iter().map(|m| monomial_text(m, sys.vars())).collect()),
                    quotient_dimension: quotient_dimension(&gb).into(),
                },
            })
        }
        Command::Solve { system } => {
            let path = &system.system;
            let sys = load_system(path)?;
            let points = solve_rational_all(sys.polys()).map_err(|e| {
                let e = match e {
                    Error::IrrationalRoots(_) => rename_unresolved(&sys),
                    other => other,
                };
                CliError::domain(path.display().to_string(), e)
            })?;
            Ok(Report {
                command: "solve",
                inputs: inputs(path, &sys),
                body: Body::Solve {
                    points: points.iter().map(coords).collect(),
                },
            })
        }
    }
}

/// Re-renders the unresolved factors with the system's variable names.
fn rename_unresolved(sys: &PolynomialSystem) -> Error {
    match apolar_core::solve_rational(sys.polys()) {
        Ok(sol) => Error::IrrationalRoots(
            sol.unresolved
                .iter()
                .map(|p| format_poly(p, sys.vars()))
                .collect::<Vec<_>>()
                .join("; "),
        ),
        Err(e) => e,
    }
}

fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let point = |p: &[String]| format!("({})", p.join(", "));
    match &r.body {
        Body::Dual {
            basis,
            multiplicity,
            truncation_degree,
        } => {
            let _ = writeln!(
                s,
                "point: ({})",
                r.inputs
                    .point
                    .as_deref()
                    .unwrap_or_default()
                    .replace(',', ", ")
            );
            let _ = writeln!(s, "multiplicity: {multiplicity}");
            let _ = writeln!(s, "basis (read at degree {truncation_degree}):");
            for b in basis {
                let _ = writeln!(s, "  {b}");
            }
        }
        Body::Mult { multiplicity } => {
            let _ = writeln!(s, "{multiplicity}");
        }
        Body::Bezout {
            roots,
            total,
            bezout_number,
            verdict,
            completeness,
            quotient_dimension,
            infinity_evidence,
            oracle_agreement,
        } => {
            let _ = writeln!(s, "roots:");
            for root in roots {
                let _ = writeln!(
                    s,
                    "  {}  multiplicity {}",
                    point(&root.point),
                    root.multiplicity
                );
            }
            let qd = match quotient_dimension {
                QuotientJson::Finite(k) => k.to_string(),
                QuotientJson::Infinite(t) => t.to_string(),
            };
            let _ = writeln!(s, "total: {total}");
            let _ = writeln!(s, "bezout number: {bezout_number}");
            let _ = writeln!(s, "quotient dimension: {qd}");
            let _ = writeln!(s, "complete: {completeness}");
            if let Some(ev) = infinity_evidence {
                match ev {
                    EvidenceJson::None => {
                        let _ = writeln!(s, "intersection at infinity: none");
                    }
                    EvidenceJson::Present { common_factor } => {
                        let _ =
                            writeln!(s, "intersection at infinity: common factor {common_factor}");
                    }
                }
            }
            let _ = writeln!(s, "oracle agreement: {oracle_agreement}");
            let _ = writeln!(s, "verdict: {verdict}");
        }
        Body::Member {
            member,
            witness,
            oracle_member,
            oracle_agreement,
        } => {
            let _ = writeln!(s, "member: {member}");
            if let Some(w) = witness {
                let _ = writeln!(
                    s,
                    "witness: {} at {} gives {}",
                    w.functional,
                    point(&w.point),
                    w.value
                );
            }
            let _ = writeln!(s, "groebner normal form zero: {oracle_member}");
            let _ = writeln!(s, "oracle agreement: {oracle_agreement}");
        }
        Body::Power {
            certificate,
            oracle_agreement,
        } => {
            let _ = writeln!(s, "m: {}", certificate.m);
            let _ = writeln!(s, "bound: {}", certificate.bound);
            let _ = writeln!(s, "oracle agreement: {oracle_agreement}");
        }
        Body::Gb {
            basis,
            standard_monomials,
            quotient_dimension,
        } => {
            let _ = writeln!(s, "basis ({}):", r.inputs.order.unwrap_or("lex"));
            for g in basis {
                let _ = writeln!(s, "  {g}");
            }
            match (standard_monomials, quotient_dimension) {
                (Some(ms), QuotientJson::Finite(k)) => {
                    let _ = writeln!(s, "standard monomials ({k}): {}", ms.join(", "));
                }
                _ => {
                    let _ = writeln!(
                        s,
                        "standard monomials: infinitely many (not zero-dimensional)"
                    );
                }
            }
        }
        Body::Solve { points } => {
            for p in points {
                let _ = writeln!(s, "{}", point(p));
            }
        }
    }
    s
}
