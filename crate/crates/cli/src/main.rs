use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sturmkit::exactnum::DEFAULT_CF_STEPS;
use sturmkit::morphisms::{decompose, psi_conjugate};
use sturmkit::search::{find_fixing_morphism, DEFAULT_MAX_DEPTH};
use sturmkit::solver::fixed_point_solve;
use sturmkit::trees::{export_tree, locate_fraction, ExportFormat, TreeKind};
use sturmkit::words::{lozenge_report, sturmian};
use sturmkit::{
    BigInt, BinaryMorphism, Error, Fraction, GeneratorSet, GeneratorWord, NodeAddress, Quadratic,
    Representative, RhoKind,
};

/// Exact Sturmian words, morphisms and trees.
#[derive(Parser, Debug)]
#[command(name = "sturmkit", version)]
struct Cli {
    /// Output format; `dot` applies to `tree` only.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Prefix of the floor (or ceiling) Sturmian word s_{alpha,rho}.
    Word {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
        #[arg(long, allow_hyphen_values = true)]
        rho: Quadratic,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        ceiling: bool,
    },
    /// Continued fraction expansion with its least period.
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        x: Quadratic,
        #[arg(long, default_value_t = DEFAULT_CF_STEPS)]
        max_steps: usize,
    },
    /// Whether alpha is a Sturm number, with its continued-fraction form.
    Sturm {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
    },
    /// Whether s_{alpha,rho} is fixed by some non-trivial morphism.
    Invariant {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
        #[arg(long, allow_hyphen_values = true)]
        rho: Quadratic,
    },
    /// Prints one of the binary trees down to a depth.
    Tree {
        #[arg(long)]
        kind: TreeKind,
        #[arg(long)]
        depth: usize,
    },
    /// Address of a fraction p/q in the Kepler tree.
    Locate {
        #[arg(long)]
        fraction: Fraction,
    },
    /// Prefix of the fixed point of a morphism.
    Fix {
        #[arg(long)]
        morphism: BinaryMorphism,
        #[arg(long)]
        len: usize,
        /// Start letter; defaults to 0 when the morphism is prolongable on it.
        #[arg(long)]
        letter: Option<u8>,
    },
    /// Checks that a morphism fixes s_{alpha,rho} on a prefix.
    Check {
        #[arg(long)]
        morphism: BinaryMorphism,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
        #[arg(long, allow_hyphen_values = true)]
        rho: Quadratic,
        #[arg(long, default_value_t = 300)]
        len: usize,
        #[arg(long)]
        ceiling: bool,
    },
    /// The conjugate Psi of gamma, with u Psi(a) = gamma(a) u.
    ConjugatePsi {
        /// gamma as `0->W,1->W`.
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        morphism: Option<BinaryMorphism>,
        /// gamma as a generator word such as `psi1,psi3,psi1`.
        #[arg(long)]
        word: Option<GeneratorWord>,
    },
    /// Factorization of a morphism over a generator pair.
    Decompose {
        #[arg(long)]
        morphism: BinaryMorphism,
        #[arg(long, default_value = "{phi0,phi1}")]
        set: GeneratorSet,
    },
    /// Fixed point (alpha, rho) of the map attached to a generator word.
    Solve {
        #[arg(long)]
        word: GeneratorWord,
    },
    /// Searches for a morphism fixing the word with slope alpha.
    Find {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
        #[arg(long, default_value = "alpha")]
        rho_kind: RhoKind,
        #[arg(long)]
        ceiling: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Floor/ceiling comparison and the lozenge index.
    Lozenge {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Quadratic,
        #[arg(long, allow_hyphen_values = true)]
        rho: Quadratic,
        #[arg(long, default_value_t = 16)]
        len: usize,
    },
}

fn rep(ceiling: bool) -> Representative {
    if ceiling {
        Representative::Ceiling
    } else {
        Representative::Floor
    }
}

fn address_text(a: &NodeAddress) -> String {
    if a.is_root() {
        "L".to_owned()
    } else {
        a.to_string()
    }
}

/// Plain `key: value` lines or a JSON object, from the same pairs.
fn report(format: Format, fields: Vec<(&str, Value)>) -> String {
    match format {
        Format::Json => {
            Value::Object(fields.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()).to_string()
        }
        _ => {
            let mut out = String::new();
            for (k, v) in fields {
                let text = match v {
                    Value::String(s) => s,
                    Value::Null => "none".to_owned(),
                    Value::Array(items) => items
                        .iter()
                        .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_owned))
                        .collect::<Vec<_>>()
                        .join(","),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k}: {text}");
            }
            out.pop();
            out
        }
    }
}

fn run(cli: Cli) -> sturmkit::Result<String> {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Tree { .. }) {
        return Err(Error::Domain("--format dot applies to `tree` only".into()));
    }
    let out = match cli.command {
        Command::Word {
            alpha,
            rho,
            len,
            ceiling,
        } => {
            let w = sturmian(&alpha, &rho, len, rep(ceiling))?;
            match format {
                Format::Json => json!({
                    "word": w.to_string(),
                    "alpha": alpha.to_string(),
                    "rho": rho.to_string(),
                    "representative": rep(ceiling),
                })
                .to_string(),
                _ => w.to_string(),
            }
        }
        Command::Cf { x, max_steps } => {
            let cf = x.continued_fraction(max_steps)?;
            let digits = |v: &[BigInt]| v.iter().map(|d| json!(d.to_string())).collect::<Vec<_>>();
            match format {
                Format::Json => json!({
                    "x": x.to_string(),
                    "cf": cf.to_string(),
                    "preperiod": digits(&cf.preperiod),
                    "period": digits(&cf.period),
                })
                .to_string(),
                _ => cf.to_string(),
            }
        }
        Command::Sturm { alpha } => {
            let form = alpha.cf_sturm_form().ok();
            report(
                format,
                vec![
                    ("alpha", json!(alpha.to_string())),
                    ("conjugate", json!(alpha.conjugate().to_string())),
                    ("sturm", json!(alpha.is_sturm_number())),
                    (
                        "cf",
                        json!(alpha.continued_fraction(DEFAULT_CF_STEPS)?.to_string()),
                    ),
                    (
                        "case",
                        form.as_ref().map_or(Value::Null, |f| json!(f.case.to_string())),
                    ),
                    ("k", form.as_ref().map_or(Value::Null, |f| json!(f.k))),
                    (
                        "a0",
                        form.as_ref().map_or(Value::Null, |f| json!(f.a0.to_string())),
                    ),
                    (
                        "period",
                        form.as_ref().map_or(Value::Null, |f| {
                            Value::Array(f.period_digits.iter().map(|d| json!(d.to_string())).collect())
                        }),
                    ),
                ],
            )
        }
        Command::Invariant { alpha, rho } => {
            let inv = Quadratic::yasutomi_invariant(&alpha, &rho)?;
            match format {
                Format::Json => json!({
                    "alpha": alpha.to_string(),
                    "rho": rho.to_string(),
                    "invariant": inv,
                })
                .to_string(),
                _ => inv.to_string(),
            }
        }
        Command::Tree { kind, depth } => {
            let f = match format {
                Format::Plain => ExportFormat::Ascii,
                Format::Json => ExportFormat::Json,
                Format::Dot => ExportFormat::Dot,
            };
            let text = export_tree::<BigInt>(kind, depth, f)?;
            text.trim_end().to_owned()
        }
        Command::Locate { fraction } => {
            let a = locate_fraction(&fraction)?;
            match format {
                Format::Json => json!({
                    "fraction": fraction.to_string(),
                    "address": a.to_string(),
                    "level": a.level(),
                })
                .to_string(),
                _ => address_text(&a),
            }
        }
        Command::Fix {
            morphism,
            len,
            letter,
        } => {
            let w = match letter {
                Some(l) => morphism.fixed_point_from(l, len)?,
                None => morphism.fixed_point(len)?,
            };
            match format {
                Format::Json => json!({"morphism": morphism.to_string(), "word": w.to_string()}).to_string(),
                _ => w.to_string(),
            }
        }
        Command::Check {
            morphism,
            alpha,
            rho,
            len,
            ceiling,
        } => {
            let fixed = morphism.is_fixed_by(&alpha, &rho, len, rep(ceiling))?;
            match format {
                Format::Json => json!({
                    "morphism": morphism.to_string(),
                    "alpha": alpha.to_string(),
                    "rho": rho.to_string(),
                    "representative": rep(ceiling),
                    "len": len,
                    "fixed": fixed,
                })
                .to_string(),
                _ => fixed.to_string(),
            }
        }
        Command::ConjugatePsi { morphism, word } => {
            let gamma = match (morphism, word) {
                (Some(m), _) => m,
                (None, Some(w)) => w.to_morphism(),
                (None, None) => return Err(Error::Domain("give --morphism or --word".into())),
            };
            let psi = psi_conjugate(&gamma)?;
            match format {
                Format::Json => {
                    let u = gamma.image0().prefix(gamma.image0().len() - 1);
                    json!({"gamma": gamma.to_string(), "u": u.to_string(), "psi": psi.to_string()})
                        .to_string()
                }
                _ => psi.to_string(),
            }
        }
        Command::Decompose { morphism, set } => {
            let w = decompose(&morphism, set)?;
            let mut fields = vec![
                ("morphism", json!(morphism.to_string())),
                ("set", json!(set.to_string())),
                ("word", json!(w.to_string())),
            ];
            if set == GeneratorSet::PHI {
                fields.push(("address", json!(NodeAddress::from_generator_word(&w).to_string())));
            }
            report(format, fields)
        }
        Command::Solve { word } => {
            let sol = fixed_point_solve::<BigInt>(&word)?;
            let r = sol.record();
            match format {
                Format::Json => serde_json::to_value(&r).expect("plain record").to_string(),
                _ => report(
                    format,
                    vec![
                        ("alpha", json!(r.alpha)),
                        ("rho", json!(r.rho)),
                        ("representative", json!(r.representative)),
                        ("generator_word", json!(r.generator_word)),
                        ("morphism", json!(r.morphism)),
                        ("floor_fixing", json!(r.floor_fixing)),
                    ],
                ),
            }
        }
        Command::Find {
            alpha,
            rho_kind,
            ceiling,
            max_depth,
        } => {
            let found = find_fixing_morphism(&alpha, rho_kind, ceiling, max_depth)?;
            let r = found.record();
            match format {
                Format::Json => serde_json::to_value(&r).expect("plain record").to_string(),
                _ => report(
                    format,
                    vec![
                        ("alpha", json!(r.alpha)),
                        ("rho", json!(r.rho)),
                        ("representative", json!(r.representative)),
                        ("generator_word", json!(r.generator_word)),
                        ("morphism", json!(r.morphism)),
                    ],
                ),
            }
        }
        Command::Lozenge { alpha, rho, len } => {
            let r = lozenge_report(&alpha, &rho, len)?;
            let floor = sturmian(&alpha, &rho, len, Representative::Floor)?;
            let ceil = sturmian(&alpha, &rho, len, Representative::Ceiling)?;
            report(
                format,
                vec![
                    ("index", r.index.map_or(Value::Null, |m| json!(m))),
                    (
                        "differing_positions",
                        Value::Array(r.differing_positions.iter().map(|p| json!(p)).collect()),
                    ),
                    ("floor", json!(floor.to_string())),
                    ("ceiling", json!(ceil.to_string())),
                ],
            )
        }
    };
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotFound(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("sturmkit: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
