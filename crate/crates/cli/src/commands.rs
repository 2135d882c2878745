use std::collections::VecDeque;
use std::io::Read;

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use lacunary::classify::{
    classify_main, classify_main2, classify_tri2, find_certificate, solution_family, Certificate, ClassifyError,
    MainCert, SolutionFamily,
};
use lacunary::decompose::{certify_indecomposable, full_decompose, DecomposeError, IndecomposabilityCertificate};
use lacunary::dickson::{detect_dickson_form, dickson, dicksoni_gap_check};
use lacunary::lacunary::profile;
use lacunary::pairs::{linear_equiv_all, make_standard_pair, PairError, StandardPair};
use lacunary::parse::parse_poly_with_var;
use lacunary::search::{solutions, SearchConfig, SearchError};
use lacunary::{EquationInstance, Outcome, ParseError, QPoly, Rational, Verdict};

use crate::report::{Report, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Main,
    Main2,
    Tri2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairKindArg {
    First,
    Second,
    Third,
    Fourth,
    Fifth,
    Specific,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a polynomial and print its canonical form and term profile.
    Parse {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// List every decomposition f = g(h) with h monic and h(0) = 0.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Certify indecomposability, or give a witness decomposition.
    Indecomposable {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The Dickson polynomial D_N(x, A).
    Dickson {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Write f as e1 D_n(c1 x + c0, a) + e0 if possible.
    DetectDickson {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Build a standard or specific pair.
    Pair {
        #[arg(value_enum)]
        kind: PairKindArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
    /// All linear mu over the rationals with g(mu(x)) = f(x).
    Equiv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Decide whether f(x) = g(y) has infinitely many solutions.
    Classify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Enumerate solutions with |x|, |y| <= H and denominators dividing D.
    Search {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value_t = 10)]
        height: u64,
        #[arg(long, default_value_t = 1)]
        denominator: u64,
    },
    /// Members of an infinite solution family.
    Family {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Parse { .. } => "parse",
            Command::Decompose { .. } => "decompose",
            Command::Indecomposable { .. } => "indecomposable",
            Command::Dickson { .. } => "dickson",
            Command::DetectDickson { .. } => "detect-dickson",
            Command::Pair { .. } => "pair",
            Command::Equiv { .. } => "equiv",
            Command::Classify { .. } => "classify",
            Command::Search { .. } => "search",
            Command::Family { .. } => "family",
        }
    }

    fn poly_args(&self) -> Vec<&str> {
        match self {
            Command::Parse { poly } | Command::Decompose { poly } | Command::Indecomposable { poly } => vec![poly],
            Command::DetectDickson { poly } => vec![poly],
            Command::Equiv { f, g }
            | Command::Classify { f, g, .. }
            | Command::Search { f, g, .. }
            | Command::Family { f, g, .. } => vec![f, g],
            Command::Pair { p, .. } => p.as_deref().into_iter().collect(),
            Command::Dickson { .. } => Vec::new(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {text:?}: {source}")]
    Parse { text: String, source: ParseError },
    #[error("cannot parse rational {0:?}")]
    Rational(String),
    #[error("missing --{0}")]
    Missing(&'static str),
    #[error("not enough lines on stdin for the arguments given as \"-\"")]
    Stdin,
    #[error("reading stdin: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("no infinite solution family: outcome {0}")]
    NoFamily(&'static str),
}

/// Polynomial arguments, parsed before any engine runs. Each `-` takes the
/// next nonempty line of stdin.
struct Polys(VecDeque<QPoly>);

impl Polys {
    fn read(texts: &[&str], stdin: &mut dyn Read) -> Result<Self, CliError> {
        let mut lines = VecDeque::new();
        if texts.contains(&"-") {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf)?;
            lines.extend(buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from));
        }
        let mut out = VecDeque::new();
        for &text in texts {
            let text = if text == "-" { lines.pop_front().ok_or(CliError::Stdin)? } else { text.to_string() };
            let (poly, _) =
                parse_poly_with_var(&text).map_err(|source| CliError::Parse { text: text.clone(), source })?;
            out.push_back(poly);
        }
        Ok(Polys(out))
    }

    fn next(&mut self) -> QPoly {
        self.0.pop_front().expect("one parsed polynomial per argument")
    }
}

fn rational(text: &str) -> Result<Rational, CliError> {
    text.trim().parse().map_err(|_| CliError::Rational(text.to_string()))
}

fn q(r: &Rational) -> String {
    r.to_string()
}

fn profile_json(f: &QPoly) -> Value {
    match profile(f) {
        Ok(p) => json!({
            "ell": p.ell,
            "exponents": p.exponents,
            "gaps": p.gaps,
            "exponent_gcd": p.exponent_gcd,
            "total_terms": p.total_terms,
        }),
        Err(_) => Value::Null,
    }
}

fn certificate_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::Main(MainCert { mu }) => json!({ "kind": "main", "mu": mu.to_string() }),
        Certificate::Main2(c) => json!({
            "kind": "main2",
            "e1": q(&c.e1), "c": q(&c.c), "c1": q(&c.c1), "c0": q(&c.c0), "d1": q(&c.d1), "d0": q(&c.d0),
            "n1": c.n1, "m1": c.m1,
        }),
        Certificate::Tri2(c) => json!({
            "kind": "tri2",
            "case": c.case.label(),
            "mu": c.mu.to_string(),
            "zeta": c.zeta.as_ref().map(q),
        }),
    }
}

fn family_json(family: &SolutionFamily) -> Value {
    json!({ "form": family.to_string(), "delta": family.delta().to_string() })
}

fn instance(polys: &mut Polys) -> Result<EquationInstance, CliError> {
    let f = polys.next();
    let g = polys.next();
    Ok(EquationInstance::new(f, g)?)
}

fn engine(theorem: Theorem, inst: &EquationInstance) -> Result<Verdict, ClassifyError> {
    match theorem {
        Theorem::Main => classify_main(inst),
        Theorem::Main2 => classify_main2(inst),
        Theorem::Tri2 => classify_tri2(inst),
    }
}

fn verdict_report(
    name: &str,
    theorem: Theorem,
    verdict: &Verdict,
    inst: &EquationInstance,
) -> Result<Report, CliError> {
    let theorem = theorem.to_possible_value().expect("no skipped variants").get_name().to_string();
    let (certificate, family) = match verdict.certificate() {
        Some(cert) => (certificate_json(cert), family_json(&solution_family(cert, inst)?)),
        None => (Value::Null, Value::Null),
    };
    let failed: Vec<&str> = match &verdict.outcome {
        Outcome::HypothesesNotMet(labels) => labels.clone(),
        _ => Vec::new(),
    };
    let status = if failed.is_empty() { Status::Ok } else { Status::HypothesesNotMet };
    let payload = json!({
        "theorem": theorem,
        "outcome": verdict.outcome.label(),
        "certificate": certificate,
        "family": family,
        "failed_hypotheses": failed,
    });
    Ok(Report { status, ..Report::ok(name, payload) }.with_notes(verdict.notes.clone()))
}

fn pair(
    kind: PairKindArg,
    m: Option<usize>,
    n: Option<usize>,
    r: Option<usize>,
    a: Option<&str>,
    b: Option<&str>,
    p: Option<QPoly>,
) -> Result<StandardPair, CliError> {
    let need = |v: Option<usize>, name| v.ok_or(CliError::Missing(name));
    let a = a.map(rational).transpose()?;
    let b = b.map(rational).transpose()?;
    let need_q = |v: Option<Rational>, name| v.ok_or(CliError::Missing(name));
    Ok(match kind {
        PairKindArg::First => StandardPair::First {
            m: need(m, "m")?,
            r: need(r, "r")?,
            a: need_q(a, "a")?,
            p: p.ok_or(CliError::Missing("p"))?,
        },
        PairKindArg::Second => {
            StandardPair::Second { a: need_q(a, "a")?, b: need_q(b, "b")?, p: p.ok_or(CliError::Missing("p"))? }
        }
        PairKindArg::Third => StandardPair::Third { m: need(m, "m")?, n: need(n, "n")?, a: need_q(a, "a")? },
        PairKindArg::Fourth => {
            StandardPair::Fourth { m: need(m, "m")?, n: need(n, "n")?, a: need_q(a, "a")?, b: need_q(b, "b")? }
        }
        PairKindArg::Fifth => StandardPair::Fifth { a: need_q(a, "a")? },
        PairKindArg::Specific => StandardPair::Specific { m: need(m, "m")?, n: need(n, "n")?, a: need_q(a, "a")? },
    })
}

pub fn run(command: &Command, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let name = command.name();
    let mut polys = Polys::read(&command.poly_args(), stdin)?;
    let report = match command {
        Command::Parse { .. } => {
            let f = polys.next();
            let terms: Vec<Value> =
                f.terms().rev().map(|(e, c)| json!({ "exponent": e, "coefficient": q(c) })).collect();
            Report::ok(
                name,
                json!({ "poly": f.to_string(), "degree": f.degree(), "terms": terms, "profile": profile_json(&f) }),
            )
        }
        Command::Decompose { .. } => {
            let f = polys.next();
            let splits: Vec<Value> = full_decompose(&f)?
                .iter()
                .map(|d| json!({ "outer": d.outer.to_string(), "inner": d.inner.to_string() }))
                .collect();
            Report::ok(name, json!({ "poly": f.to_string(), "decompositions": splits }))
        }
        Command::Indecomposable { .. } => {
            let f = polys.next();
            let payload = match certify_indecomposable(&f)? {
                IndecomposabilityCertificate::Indecomposable(reason) => {
                    json!({ "poly": f.to_string(), "indecomposable": true, "reason": reason.label(), "witness": null })
                }
                IndecomposabilityCertificate::Decomposable(d) => json!({
                    "poly": f.to_string(),
                    "indecomposable": false,
                    "reason": null,
                    "witness": { "outer": d.outer.to_string(), "inner": d.inner.to_string() },
                }),
            };
            Report::ok(name, payload)
        }
        Command::Dickson { n, a } => {
            let a = rational(a)?;
            Report::ok(name, json!({ "n": n, "a": q(&a), "poly": dickson(*n, &a).to_string() }))
        }
        Command::DetectDickson { .. } => {
            let f = polys.next();
            match detect_dickson_form(&f) {
                Some(form) => {
                    let gaps = dicksoni_gap_check(&form).ok().map(|r| json!({ "gaps": r.gaps, "ell": r.ell }));
                    Report::ok(
                        name,
                        json!({
                            "poly": f.to_string(),
                            "form": {
                                "n": form.n(), "a": q(form.a()), "e1": q(form.e1()), "e0": q(form.e0()),
                                "c1": q(form.c1()), "c0": q(form.c0()),
                            },
                            "gap_check": gaps,
                        }),
                    )
                }
                None => Report::ok(name, json!({ "poly": f.to_string(), "form": null }))
                    .with_notes(vec!["not of the form e1 D_n(c1 x + c0, a) + e0 with a != 0".into()]),
            }
        }
        Command::Pair { kind, m, n, r, a, b, p } => {
            let p = p.as_ref().map(|_| polys.next());
            let requested = pair(*kind, *m, *n, *r, a.as_deref(), b.as_deref(), p)?;
            let (f, g) = make_standard_pair(&requested)?;
            Report::ok(name, json!({ "kind": requested.kind().label(), "f": f.to_string(), "g": g.to_string() }))
        }
        Command::Equiv { .. } => {
            let f = polys.next();
            let g = polys.next();
            let found: Vec<String> = linear_equiv_all(&f, &g).iter().map(ToString::to_string).collect();
            Report::ok(name, json!({ "solutions": found }))
        }
        Command::Classify { theorem, .. } => {
            let inst = instance(&mut polys)?;
            verdict_report(name, *theorem, &engine(*theorem, &inst)?, &inst)?
        }
        Command::Search { height, denominator, .. } => {
            let inst = instance(&mut polys)?;
            let cfg = SearchConfig::new(*height, *denominator)?;
            let found: Vec<Value> =
                solutions(&inst, &cfg).iter().map(|(x, y)| json!({ "x": q(x), "y": q(y) })).collect();
            Report::ok(
                name,
                json!({ "height": height, "denominator": denominator, "count": found.len(), "solutions": found }),
            )
        }
        Command::Family { theorem, count, .. } => {
            let inst = instance(&mut polys)?;
            let cert = match theorem {
                Some(t) => {
                    let verdict = engine(*t, &inst)?;
                    match verdict.certificate() {
                        Some(c) => c.clone(),
                        None if matches!(verdict.outcome, Outcome::HypothesesNotMet(_)) => {
                            return verdict_report(name, *t, &verdict, &inst);
                        }
                        None => return Err(CliError::NoFamily(verdict.outcome.label())),
                    }
                }
                None => find_certificate(&inst).ok_or(CliError::NoFamily("no certificate found"))?,
            };
            let family = solution_family(&cert, &inst)?;
            let members: Vec<Value> = family
                .members(*count)?
                .iter()
                .map(|m| json!({ "parameter": m.parameter.to_string(), "x": q(&m.x), "y": q(&m.y) }))
                .collect();
            Report::ok(
                name,
                json!({ "certificate": certificate_json(&cert), "family": family_json(&family), "members": members }),
            )
        }
    };
    Ok(report)
}
