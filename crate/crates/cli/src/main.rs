//! `sdc`: squarefree divisor complexes of numerical semigroup elements from
//! the command line.
//!
//! Every subcommand prints one JSON document with sorted keys on stdout, or a
//! short text rendering with `--human`. Domain errors go to stderr as
//! `{"error": kind, "message": text}` with exit code 1; usage errors exit 2.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sdc_core::grammar::{format_complex, parse_complex, parse_forest, parse_generators};
use sdc_core::{
    delta, disconnected_elements_3gen, disjoint_union_realize, frobenius_gen_family, glue,
    hilbert_numerator_parallel, inflate, nonzero_euler_scan_parallel, nonzero_set_3gen,
    numerator_oracle, realize_complex, realize_fat_forest, realize_simplex, scan_bound,
    supersymmetric_from, supersymmetric_skeleton_check, supersymmetric_vanishing_check, Error,
    Face, NumericalSemigroup, PrimeRule, RealizationCertificate, RealizeOptions, SimplicialComplex,
    SparsePolynomial,
};

const RETRY_BUDGET_VAR: &str = "SDC_RETRY_BUDGET";

#[derive(Parser)]
#[command(
    name = "sdc",
    version,
    about = "Squarefree divisor complexes of numerical semigroups"
)]
struct Cli {
    /// Print a short text rendering instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators, Frobenius number, pseudo-Frobenius numbers and Apéry set.
    Info {
        #[arg(long)]
        gens: String,
    },
    /// Facets and Euler characteristic of Δ_m.
    Delta {
        #[arg(long)]
        gens: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Accept generators with a common divisor.
        #[arg(long)]
        relaxed: bool,
    },
    /// Every element with nonzero Euler characteristic.
    Scan {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Hilbert series numerator.
    Hilbert {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Cross-check against the truncated product with prod (1 - t^n_i).
        #[arg(long)]
        verify: bool,
    },
    /// The monoid k'S + kS'.
    Glue {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long)]
        k: i64,
        #[arg(long = "k-prime")]
        k_prime: i64,
        /// Skip the gluing hypotheses.
        #[arg(long)]
        relaxed: bool,
    },
    /// Realize Δ_k^S ⊔ Δ_k'^S' at kk' and print the certificate.
    Union {
        #[arg(long)]
        first: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        second: String,
        #[arg(long = "k-prime")]
        k_prime: i64,
    },
    /// Attach one new vertex to Δ_m along a face.
    Inflate {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        m: i64,
        /// 1-based generator indices, e.g. "1,3".
        #[arg(long)]
        face: String,
        #[arg(long)]
        p: i64,
    },
    /// An element whose divisor complex is the full simplex on v vertices.
    Simplex {
        #[arg(long)]
        v: usize,
    },
    /// Realize a fat forest and print a verified certificate.
    Realize {
        /// Facet lists, trees separated by '|', e.g. "1,2,3;2,3,4|5,6".
        #[arg(long)]
        forest: String,
        /// Treat the whole input as one complex and split it into components.
        #[arg(long)]
        components: bool,
        #[arg(long = "prime-rule", value_enum, default_value_t = PrimeRuleArg::SmallestCoprime)]
        prime_rule: PrimeRuleArg,
    },
    /// Re-verify a certificate read from a file, or stdin when omitted or "-".
    VerifyCert { path: Option<String> },
    /// Skeleton and vanishing checks for <L/t_1, ..., L/t_d>.
    Supersymmetric {
        #[arg(long)]
        t: String,
        /// Check only Δ_{kL}.
        #[arg(long)]
        k: Option<u64>,
        /// Upper end of the vanishing check; defaults to (d+1)L.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Disconnected elements and nonzero Euler characteristics of a 3-generated semigroup.
    Classify3 {
        #[arg(long)]
        gens: String,
    },
    /// Closed form for <n1, n2, n1 n2 - n1 - n2> checked against a scan.
    Family {
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PrimeRuleArg {
    SmallestCoprime,
    AboveOffset,
}

impl From<PrimeRuleArg> for PrimeRule {
    fn from(rule: PrimeRuleArg) -> Self {
        match rule {
            PrimeRuleArg::SmallestCoprime => PrimeRule::SmallestCoprime,
            PrimeRuleArg::AboveOffset => PrimeRule::AboveOffset,
        }
    }
}

/// What a subcommand produced: the JSON document and its text rendering.
struct Output {
    json: Value,
    human: String,
}

/// Failures that are not domain errors of the library.
enum Failure {
    Domain(Error),
    Usage(String),
    /// A check ran but did not hold; the report is still printed.
    Rejected(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let human = cli.human;
    let print = |out: &Output| {
        if human {
            println!("{}", out.human);
        } else {
            println!("{}", out.json);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(out)) => {
            print(&out);
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn numerical(gens: &str) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::numerical(&parse_generators(gens)?)?)
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn facets_text(c: &SimplicialComplex) -> String {
    if c.is_void() {
        "void".into()
    } else if c.facets() == [Face::EMPTY] {
        "{∅}".into()
    } else {
        c.facets()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn polynomial_json(poly: &SparsePolynomial) -> Value {
    let map: serde_json::Map<String, Value> = poly
        .terms()
        .map(|(e, c)| (e.to_string(), json!(c)))
        .collect();
    Value::Object(map)
}

fn certificate_output(cert: &RealizationCertificate) -> Result<Output, Failure> {
    let json = serde_json::to_value(cert).map_err(|e| Failure::Usage(e.to_string()))?;
    let map: Vec<String> = cert
        .vertex_map
        .iter()
        .map(|(v, g)| format!("{v}->{g}"))
        .collect();
    let human = format!(
        "T = <{}>\nM = {}\nvertex map: {}\nverified: {}",
        join(&cert.generators),
        cert.element,
        map.join(" "),
        cert.verified
    );
    Ok(Output { json, human })
}

fn retry_budget() -> Result<usize, Failure> {
    match std::env::var(RETRY_BUDGET_VAR) {
        Err(_) => Ok(RealizeOptions::default().retry_budget),
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "{RETRY_BUDGET_VAR} must be a positive integer, got {text:?}"
                ))
            }),
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Info { gens } => {
            let s = numerical(&gens)?;
            let n = s.generators()[0];
            let apery = s.apery_set(n)?;
            let frobenius = s.frobenius()?;
            let pf = s.pseudo_frobenius()?;
            let human = format!(
                "S = <{}>\nembedding dimension: {}\nFrobenius number: {frobenius}\npseudo-Frobenius: {}\nApéry set w.r.t. {n}: {}",
                join(s.generators()),
                s.embedding_dimension(),
                join(&pf),
                join(&apery)
            );
            Ok(Output {
                json: json!({
                    "generators": s.generators(),
                    "embedding_dimension": s.embedding_dimension(),
                    "frobenius": frobenius,
                    "pseudo_frobenius": pf,
                    "apery": { "modulus": n, "set": apery },
                    "scan_bound": scan_bound(&s)?,
                }),
                human,
            })
        }
        Command::Delta { gens, m, relaxed } => {
            let s = NumericalSemigroup::new(&parse_generators(&gens)?, !relaxed)?;
            let c = delta(&s, m)?;
            let euler = c.euler_characteristic();
            Ok(Output {
                human: format!("Δ_{m}: {}\nχ = {euler}", facets_text(&c)),
                json: json!({ "facets": c.facet_lists(), "euler": euler }),
            })
        }
        Command::Scan { gens, threads } => {
            let s = numerical(&gens)?;
            let scan = nonzero_euler_scan_parallel(&s, threads)?;
            let human = scan
                .iter()
                .map(|(m, chi)| format!("{m}\t{chi}"))
                .collect::<Vec<_>>()
                .join("\n");
            let map: serde_json::Map<String, Value> = scan
                .iter()
                .map(|(m, chi)| (m.to_string(), json!(chi)))
                .collect();
            Ok(Output {
                json: Value::Object(map),
                human,
            })
        }
        Command::Hilbert {
            gens,
            threads,
            verify,
        } => {
            let s = numerical(&gens)?;
            let poly = hilbert_numerator_parallel(&s, threads)?;
            let mut json = json!({
                "numerator": polynomial_json(&poly),
                "terms": poly.term_strings(),
            });
            let mut human = poly.to_string();
            if verify {
                let oracle = numerator_oracle(&s, scan_bound(&s)?)?;
                let agrees = oracle == poly;
                json["verified"] = json!(agrees);
                human.push_str(&format!("\nverified: {agrees}"));
                if !agrees {
                    json["oracle"] = polynomial_json(&oracle);
                    return Err(Failure::Rejected(Output { json, human }));
                }
            }
            Ok(Output { json, human })
        }
        Command::Glue {
            first,
            second,
            k,
            k_prime,
            relaxed,
        } => {
            let s = NumericalSemigroup::new(&parse_generators(&first)?, !relaxed)?;
            let t = NumericalSemigroup::new(&parse_generators(&second)?, !relaxed)?;
            let glued = glue(&s, &t, k, k_prime, !relaxed)?;
            Ok(Output {
                human: format!(
                    "<{}> (content {}, embedding dimension {})",
                    join(glued.generators()),
                    glued.content(),
                    glued.embedding_dimension()
                ),
                json: json!({
                    "generators": glued.generators(),
                    "content": glued.content(),
                    "embedding_dimension": glued.embedding_dimension(),
                }),
            })
        }
        Command::Union {
            first,
            k,
            second,
            k_prime,
        } => {
            let cert =
                disjoint_union_realize(&numerical(&first)?, k, &numerical(&second)?, k_prime)?;
            certificate_output(&cert)
        }
        Command::Inflate { gens, m, face, p } => {
            let s = numerical(&gens)?;
            let vertices: Vec<usize> = if face.trim().is_empty() {
                Vec::new()
            } else {
                parse_generators(&face)?
                    .into_iter()
                    .map(|v| v as usize)
                    .collect()
            };
            let face = Face::from_vertices(&vertices)?;
            let step = inflate(&s, m, face, p)?;
            let c = delta(&step.semigroup, step.element)?;
            Ok(Output {
                human: format!(
                    "T = <{}>\nM = {}\nnew vertex: {} (b = {})\nΔ_M: {}",
                    join(step.semigroup.generators()),
                    step.element,
                    step.new_vertex,
                    step.offset,
                    facets_text(&c)
                ),
                json: json!({
                    "generators": step.semigroup.generators(),
                    "element": step.element,
                    "new_vertex": step.new_vertex,
                    "old_to_new": step.old_to_new,
                    "offset": step.offset,
                    "facets": c.facet_lists(),
                }),
            })
        }
        Command::Simplex { v } => {
            let r = realize_simplex(v)?;
            Ok(Output {
                human: format!(
                    "S = <{}>\nm = {}",
                    join(r.semigroup.generators()),
                    r.element
                ),
                json: json!({
                    "generators": r.semigroup.generators(),
                    "element": r.element,
                    "facets": delta(&r.semigroup, r.element)?.facet_lists(),
                }),
            })
        }
        Command::Realize {
            forest,
            components,
            prime_rule,
        } => {
            let options = RealizeOptions {
                retry_budget: retry_budget()?,
                prime_rule: prime_rule.into(),
            };
            let cert = if components {
                realize_complex(&parse_complex(&forest)?, options)?
            } else {
                realize_fat_forest(&parse_forest(&forest)?, options)?
            };
            certificate_output(&cert)
        }
        Command::VerifyCert { path } => {
            let text = match path.as_deref() {
                None | Some("-") => {
                    let mut buf = String::new();
                    io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
                    buf
                }
                Some(p) => fs::read_to_string(p)
                    .map_err(|e| Failure::Usage(format!("reading {p}: {e}")))?,
            };
            let cert: RealizationCertificate = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("not a certificate: {e}")))?;
            let verified = cert.check()?;
            let out = Output {
                human: format!(
                    "Δ_{} of <{}> {} {}",
                    cert.element,
                    join(&cert.generators),
                    if verified {
                        "matches"
                    } else {
                        "does not match"
                    },
                    format_complex(&cert.complex.to_complex()?)
                ),
                json: json!({ "verified": verified }),
            };
            if verified {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Supersymmetric { t, k, bound } => {
            let t_list = parse_generators(&t)?;
            let s = supersymmetric_from(&t_list)?;
            let d = t_list.len() as u64;
            let ks: Vec<u64> = match k {
                Some(k) => vec![k],
                None => (0..=d + 1).collect(),
            };
            let mut passed = true;
            let mut skeletons = Vec::new();
            let mut lines = vec![format!("S = <{}>", join(s.generators()))];
            for k in ks {
                let report = supersymmetric_skeleton_check(&t_list, k)?;
                passed &= report.passed;
                lines.push(format!(
                    "k = {k}: Δ_{} χ = {} (expected {}) {}",
                    report.element,
                    report.actual_euler,
                    report.expected_euler,
                    if report.passed { "ok" } else { "FAILED" }
                ));
                skeletons.push(
                    serde_json::to_value(&report).map_err(|e| Failure::Usage(e.to_string()))?,
                );
            }
            let mut json = json!({ "generators": s.generators(), "skeleton": skeletons });
            if k.is_none() || bound.is_some() {
                let l: i64 = t_list.iter().product();
                let bound = bound.unwrap_or((d as i64 + 1) * l);
                let report = supersymmetric_vanishing_check(&t_list, bound)?;
                passed &= report.passed;
                lines.push(format!(
                    "vanishing up to {bound}: {} elements checked, {}",
                    report.checked,
                    if report.passed { "ok" } else { "FAILED" }
                ));
                json["vanishing"] =
                    serde_json::to_value(&report).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            json["passed"] = json!(passed);
            let out = Output {
                json,
                human: lines.join("\n"),
            };
            if passed {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Classify3 { gens } => {
            let s = numerical(&gens)?;
            let disconnected = disconnected_elements_3gen(&s)?;
            let nonzero = nonzero_set_3gen(&s)?;
            let pf = s.pseudo_frobenius()?;
            let map: serde_json::Map<String, Value> = nonzero
                .iter()
                .map(|(m, chi)| (m.to_string(), json!(chi)))
                .collect();
            let human = format!(
                "S = <{}>\ndisconnected at: {}\npseudo-Frobenius: {}\nnonzero χ: {}",
                join(s.generators()),
                join(&disconnected),
                join(&pf),
                nonzero
                    .iter()
                    .map(|(m, chi)| format!("{m}:{chi}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(Output {
                json: json!({
                    "generators": s.generators(),
                    "disconnected": disconnected,
                    "pseudo_frobenius": pf,
                    "nonzero": Value::Object(map),
                }),
                human,
            })
        }
        Command::Family { n1, n2 } => {
            let (s, closed) = frobenius_gen_family(n1, n2)?;
            let scan: Vec<i64> = nonzero_euler_scan_parallel(&s, 1)?.into_keys().collect();
            let closed: Vec<i64> = closed.into_iter().collect();
            let agrees = scan == closed;
            let out = Output {
                human: format!(
                    "S = <{}>\nclosed form: {}\nscan: {}\nagrees: {agrees}",
                    join(s.generators()),
                    join(&closed),
                    join(&scan)
                ),
                json: json!({
                    "generators": s.generators(),
                    "closed_form": closed,
                    "scan": scan,
                    "agrees": agrees,
                }),
            };
            if agrees {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
    }
}
