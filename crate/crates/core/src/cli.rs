//! Command-line front end. Rings travel as canonical JSON files; `-` reads
//! standard input.
//!
//! Exit codes: 0 success, 1 property failure, 2 malformed input or
//! configuration error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::center::{center_basis, format_coords, is_centrally_essential, CentralEssentiality, DecideOptions, RandomScalar, Verdict};
use crate::constructions::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::exactalg::{ScalarSpec, Scalars, Submodule};
use crate::ideal::{cap_complement, generate, is_closed, two_sided_witness};
use crate::ring::io::{from_json, ideal_spec_from_json, AnyRing, IdealSpec};
use crate::ring::{RingPresentation, Side};
use crate::verify::{run_paper_report, Corpus, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "cering", version, about = "Exact computations on rings given by structure constants")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a ring from a named family and print its JSON.
    Make {
        /// ce-matrix, grassmann, full-matrix, triangular, truncated, product or cyclic.
        family: String,
        #[arg(long)]
        n: usize,
        /// int, rat, or Z/m.
        #[arg(long, default_value = "int")]
        scalar: String,
    },
    /// Check associativity and the identity on basis vectors.
    Validate { ring: String },
    /// Print a basis of the center.
    Center { ring: String },
    /// Decide a ring property.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Questions about the ideal generated by a spec file.
    Ideal {
        ring: String,
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        question: IdealQuestion,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Reduce an integer ring modulo m.
    Quotient {
        ring: String,
        #[arg(short = 'p', long = "modulus")]
        modulus: u64,
    },
    /// Run every checker over a corpus and print the JSON report.
    VerifyPaper {
        /// `default` or a corpus JSON file.
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 1 << 16)]
        cap: u64,
        /// Comma-separated primes for the quotient checks.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Record wall-clock times (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Central essentiality.
    Ce {
        ring: String,
        #[arg(long, default_value_t = crate::ring::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct IdealQuestion {
    #[arg(long)]
    two_sided: bool,
    #[arg(long)]
    closed: bool,
    #[arg(long)]
    complement: bool,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok((text, code)) => match emit(cli.out.as_deref(), &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_ring(path: &str) -> Result<AnyRing> {
    from_json(&read_input(path)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn basis_json<S: Scalars>(sub: &Submodule<S>) -> Value {
    json!(sub.basis().iter().map(|v| format_coords(sub.scalars(), v)).collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::Make { family, n, scalar } => {
            let fam = Family::parse(family).ok_or_else(|| Error::InvalidArgument(format!("unknown family {family:?}")))?;
            let spec: ScalarSpec = scalar.parse()?;
            Ok((FamilySpec::new(fam, *n, spec).build()?.to_json() + "\n", 0))
        }
        Command::Validate { ring } => Ok(match load_ring(ring)? {
            AnyRing::Integer(r) => validate(&r),
            AnyRing::Modular(r) => validate(&r),
            AnyRing::Rational(r) => validate(&r),
        }),
        Command::Center { ring } => Ok(match load_ring(ring)? {
            AnyRing::Integer(r) => center(&r),
            AnyRing::Modular(r) => center(&r),
            AnyRing::Rational(r) => center(&r),
        }),
        Command::Check {
            what: CheckCommand::Ce { ring, cap, samples, seed },
        } => {
            let opts = DecideOptions {
                cap: *cap,
                samples: *samples,
                seed: *seed,
            };
            Ok(match load_ring(ring)? {
                AnyRing::Integer(r) => check_ce(&r, &opts),
                AnyRing::Modular(r) => check_ce(&r, &opts),
                AnyRing::Rational(r) => check_ce(&r, &opts),
            })
        }
        Command::Ideal {
            ring,
            spec,
            question,
            seed,
        } => {
            let spec = ideal_spec_from_json(&read_input(spec)?)?;
            match load_ring(ring)? {
                AnyRing::Integer(r) => {
                    // closedness and complements are answered in Q ⊗ R
                    let q = r.rationalize();
                    let gens: Vec<Vec<_>> = spec
                        .generators_in(&r)?
                        .iter()
                        .map(|g| g.iter().map(|v| q.scalars().from_bigint(v)).collect())
                        .collect();
                    ideal_question(&q, spec.side, &gens, question, *seed)
                }
                AnyRing::Modular(r) => ideal_for(&r, &spec, question, *seed),
                AnyRing::Rational(r) => ideal_for(&r, &spec, question, *seed),
            }
        }
        Command::Quotient { ring, modulus } => match load_ring(ring)? {
            AnyRing::Integer(r) => Ok((crate::ring::io::to_json(r.quotient_mod(*modulus)?.target()) + "\n", 0)),
            other => Err(Error::InvalidArgument(format!("quotient needs a ring over Z, got {}", other.spec()))),
        },
        Command::VerifyPaper {
            corpus,
            seed,
            cap,
            primes,
            timings,
        } => {
            let corpus = if corpus == "default" {
                Corpus::default_corpus()?
            } else {
                let path = Path::new(corpus);
                Corpus::from_json(&read_input(corpus)?, path.parent().unwrap_or(Path::new(".")))?
            };
            let mut cfg = VerifyConfig {
                seed: *seed,
                cap: *cap,
                timings: *timings,
                ..VerifyConfig::default()
            };
            if let Some(p) = primes {
                cfg.primes = p.clone();
            }
            let report = run_paper_report(&corpus, &cfg)?;
            Ok((report.to_json(), report.exit_code()))
        }
    }
}

fn validate<S: Scalars>(r: &RingPresentation<S>) -> (String, i32) {
    let rep = r.validate();
    let s = r.scalars();
    let v = json!({
        "ring": r.name(),
        "passed": rep.passed(),
        "triples_checked": rep.triples_checked,
        "associativity_failures": rep.associativity.iter().map(|f| json!({
            "triple": [f.triple.0, f.triple.1, f.triple.2],
            "defect": format_coords(s, &f.defect),
        })).collect::<Vec<_>>(),
        "identity_failures": rep.identity.iter().map(|f| json!({
            "basis": f.basis,
            "side": f.side,
            "product": format_coords(s, &f.product),
        })).collect::<Vec<_>>(),
    });
    (pretty(&v), i32::from(!rep.passed()))
}

fn center<S: Scalars>(r: &RingPresentation<S>) -> (String, i32) {
    let c = center_basis(r);
    let v = json!({ "ring": r.name(), "rank": c.rank(), "basis": basis_json(&c.sub) });
    (pretty(&v), 0)
}

fn check_ce<S: CentralEssentiality>(r: &RingPresentation<S>, opts: &DecideOptions) -> (String, i32) {
    let d = is_centrally_essential(r, opts);
    let mut v = d.to_json(r.scalars());
    v["ring"] = json!(r.name());
    (pretty(&v), i32::from(d.verdict != Verdict::Yes))
}

fn ideal_for<S: RandomScalar>(r: &RingPresentation<S>, spec: &IdealSpec, q: &IdealQuestion, seed: u64) -> Result<(String, i32)> {
    let gens = spec.generators_in(r)?;
    ideal_question(r, spec.side, &gens, q, seed)
}

fn ideal_question<S: RandomScalar>(
    r: &RingPresentation<S>,
    side: Side,
    gens: &[Vec<S::Elem>],
    q: &IdealQuestion,
    seed: u64,
) -> Result<(String, i32)> {
    let s = r.scalars();
    let ideal = generate(r, side, gens);
    let mut v = json!({ "ring": r.name(), "side": side, "ideal": basis_json(&ideal.sub) });
    let code = if q.two_sided {
        let w = two_sided_witness(r, &ideal);
        v["two_sided"] = json!(w.is_none());
        if let Some(w) = &w {
            v["witness"] = json!({
                "side": w.side,
                "r": format_coords(s, &w.r),
                "x": format_coords(s, &w.x),
                "product": format_coords(s, &w.product),
            });
        }
        i32::from(w.is_some())
    } else if q.closed {
        if side == Side::TwoSided {
            return Err(Error::InvalidArgument("closedness is asked of a right or left ideal".into()));
        }
        let rep = is_closed(r, &ideal, seed)?;
        v["closed"] = json!(rep.closed);
        v["complement"] = basis_json(&rep.complement);
        if !rep.closed {
            v["essential_extension"] = basis_json(&rep.closure);
        }
        i32::from(!rep.closed)
    } else {
        if side == Side::TwoSided {
            return Err(Error::InvalidArgument("complements are computed for a right or left ideal".into()));
        }
        let k = cap_complement(r, &ideal, seed)?;
        v["complement"] = basis_json(&k.sub);
        0
    };
    Ok((pretty(&v), code))
}
