// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fanoline::corpus;
use fanoline::forms::{format_form, parse_form};
use fanoline::pencil::{normal_form, parse_pencil, standard_alpha, Alpha};
use fanoline::ruled::{c1_twist, intersect, itcone_check, stareqn_curve_case};
use fanoline::search::{all_lines, conjecture_check, lines_through, ConjectureOptions, DEFAULT_BUDGET};
use fanoline::{analyze, DivisorClass, Error, Field, Hypersurface, LineFrame, RuledSurface, Scalar, Vector};

mod report;

#[derive(Parser, Debug)]
#[command(name = "fanoline", version, about = "Lines on hypersurfaces, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full pipeline at one line.
    Analyze {
        poly: PathBuf,
        /// Two spanning vectors, e.g. `1,0,0,0;0,1,0,0`.
        #[arg(long)]
        line: String,
        #[arg(long)]
        field: Option<Field>,
    },
    /// List the 𝔽_p-lines on the hypersurface.
    Lines {
        poly: PathBuf,
        #[arg(long)]
        field: Option<Field>,
        /// Only lines through this point, e.g. `1:0:0:0`.
        #[arg(long)]
        through: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Check whether cones of lines meet the rational singular locus.
    Conjecture {
        poly: PathBuf,
        #[arg(long)]
        field: Option<Field>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Maximum number of covered points to examine.
        #[arg(long)]
        sample_budget: Option<usize>,
        /// Run even when the characteristic is at most the degree.
        #[arg(long)]
        force: bool,
    },
    /// Normal form of a pencil given by basis matrices.
    PencilNf {
        file: PathBuf,
        /// `α¹;α²` in standard coordinates, e.g. `1,0;0,1`.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Intersection arithmetic on a ruled surface.
    Ruled {
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        d1: DivisorClass,
        #[arg(long, allow_hyphen_values = true)]
        d2: Option<DivisorClass>,
        /// Pullback class `0,b` to twist by `O(p)`.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<DivisorClass>,
        #[arg(long, default_value_t = 1)]
        p: i64,
    },
    /// Emit a corpus hypersurface in the form file format.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value = "Q")]
        field: Field,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Fermat,
    Quadric,
    CubicCone,
    QuadricPlusPlane,
    /// Random form through `span{e₀, e₁}`; needs `--field Fp:<p>`.
    Random,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::PlaneNotContained => 2,
            Error::NotConstantRankTwo(_)
            | Error::ChainIdentityViolated { .. }
            | Error::DegreeTooSmall { .. }
            | Error::NotDivisible { .. } => 3,
            Error::BudgetExceeded { .. } => 4,
            Error::CharacteristicTooSmall { .. } => 5,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn load(path: &Path, field: Option<Field>) -> Result<Hypersurface, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let form = parse_form(&text)?;
    let form = match field {
        None => form,
        Some(f) if f == form.field() => form,
        Some(f @ Field::Prime(_)) if form.field() == Field::Rationals => form.change_field(f)?,
        Some(f) => return Err(usage(format!("file is over {}, cannot use {f}", form.field()))),
    };
    Ok(Hypersurface::new(form)?)
}

fn parse_vector(field: Field, text: &str) -> Result<Vector, Failure> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split([',', ':', ' '])
        .filter(|w| !w.is_empty())
        .map(|w| field.parse_scalar(w).map_err(Failure::from))
        .collect()
}

fn parse_vectors(field: Field, text: &str) -> Result<Vec<Vector>, Failure> {
    text.split(';').map(|v| parse_vector(field, v)).collect()
}

fn parse_alpha(field: Field, text: &str) -> Result<Alpha, Failure> {
    let rows = parse_vectors(field, text)?;
    match rows.as_slice() {
        [r1, r2] if r1.len() == 2 && r2.len() == 2 => {
            Ok([[r1[0].clone(), r1[1].clone()], [r2[0].clone(), r2[1].clone()]])
        }
        _ => Err(usage("alpha must look like `a,b;c,d`")),
    }
}

fn finite(x: &Hypersurface) -> Result<(), Failure> {
    if x.field().is_finite() {
        Ok(())
    } else {
        Err(usage("this command needs a finite field (`--field Fp:<p>`)"))
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Analyze { poly, line, field } => {
            let x = load(poly, *field)?;
            let vs = parse_vectors(x.field(), line)?;
            let [e1, e2]: [Vector; 2] = vs.try_into().map_err(|_| usage("--line needs exactly two vectors"))?;
            let frame = LineFrame::line(e1, e2)?;
            let a = analyze(&x, &frame)?;
            Ok(report::analysis(&x, &frame, &a))
        }
        Command::Lines { poly, field, through, budget } => {
            let x = load(poly, *field)?;
            finite(&x)?;
            let lines = match through {
                Some(t) => lines_through(&x, &parse_vector(x.field(), t)?)?,
                None => all_lines(&x, *budget)?,
            };
            Ok(report::lines(&x, through.as_deref(), &lines))
        }
        Command::Conjecture { poly, field, budget, sample_budget, force } => {
            let x = load(poly, *field)?;
            finite(&x)?;
            let options = ConjectureOptions { budget: *budget, sample_budget: sample_budget.unwrap_or(usize::MAX), force: *force };
            let r = conjecture_check(&x, &options)?;
            Ok(json!({ "input": report::form_echo(&x), "report": report::to_value(&r) }))
        }
        Command::PencilNf { file, alpha } => {
            let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let input = parse_pencil(&text)?;
            let alpha = match alpha {
                Some(a) => parse_alpha(input.field, a)?,
                None => standard_alpha(input.field),
            };
            let nf = normal_form(&input.subspace()?, &alpha)?;
            Ok(json!({
                "field": input.field.to_string(),
                "m": input.m,
                "input_elements": report::to_value(&input.elements),
                "normal_form": report::to_value(&nf),
            }))
        }
        Command::Ruled { k, d1, d2, twist, p } => {
            let s = RuledSurface::new(*k)?;
            let mut out = json!({ "k": k, "d1": report::to_value(d1), "self_intersection_d1": intersect(&s, *d1, *d1) });
            if let Some(d2) = d2 {
                out["d2"] = report::to_value(d2);
                out["pairing"] = json!(intersect(&s, *d1, *d2));
                out["itcone"] = report::to_value(&itcone_check(&s, *d1, *d2));
                out["product"] = report::to_value(&stareqn_curve_case(&[*d1, *d2], &s)?);
            }
            if let Some(l) = twist {
                out["twist"] = json!({ "pullback": report::to_value(l), "p": p, "class": report::to_value(&c1_twist(&s, *l, *p)?) });
            }
            Ok(out)
        }
        Command::Gen { .. } => unreachable!("handled before JSON output"),
    }
}

fn generate(kind: Kind, field: Field, n: usize, d: usize, seed: u64) -> Result<String, Failure> {
    let (x, line): (Hypersurface, Option<LineFrame>) = match kind {
        Kind::Fermat => (corpus::fermat(field, n, d)?, None),
        Kind::Quadric => (corpus::quadric(field), Some(corpus::quadric_line(field))),
        Kind::CubicCone => (corpus::cubic_cone(field), Some(corpus::cubic_cone_line(field))),
        Kind::QuadricPlusPlane => (corpus::quadric_plus_plane(field), None),
        Kind::Random => {
            let Field::Prime(p) = field else {
                return Err(usage("random needs --field Fp:<p>"));
            };
            let (x, e) = corpus::random_with_line(n, d, p, seed)?;
            (x, Some(e))
        }
    };
    let mut text = String::new();
    if let Some(e) = line {
        let show = |v: &[Scalar]| v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(",");
        text.push_str(&format!("# line {};{}\n", show(e.e1()), show(e.e2())));
    }
    text.push_str(&format_form(x.form()));
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen { kind, field, n, d, seed } => generate(*kind, *field, *n, *d, *seed),
        _ => run(&cli).map(|v| serde_json::to_string_pretty(&v).expect("serializable") + "\n"),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
