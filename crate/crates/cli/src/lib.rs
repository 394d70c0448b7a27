//! Command-line front end: argument parsing, commands and exit codes.
//!
//! Exit codes: 0 success, 1 internal failure or example mismatch,
//! 2 invariant not in the span, 3 invalid input, 4 cap exceeded.

pub mod examples;
pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use centraliser::basis::enumerate_basis;
use centraliser::format::{
    coefficients_from_json, coefficients_to_json, invariant_from_json, invariant_to_json, parse_order,
};
use centraliser::solver::{
    build_a, decompose_with, invert_unitriangular, random_invariant, selector, verify_residual, SolveMethod,
};
use centraliser::{oracle, Caps, Error, Invariant, Permutation, Side, SystemOptions};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_IN_SPAN: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "centraliser", version, about = "Exact decomposition of centraliser invariants over permutation bases")]
pub struct Cli {
    #[command(flatten)]
    pub caps: CapArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    /// Largest symmetric group order to enumerate.
    #[arg(long, global = true, default_value_t = Caps::default().max_group_order)]
    pub max_group_order: u128,
    /// Largest tensor dimension n^r.
    #[arg(long, global = true, default_value_t = Caps::default().max_dimension)]
    pub max_dimension: u128,
}

#[derive(Args, Debug)]
pub struct Shape {
    #[arg(long)]
    pub side: Side,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct SystemArgs {
    /// File listing the basis, one permutation per line, in the order to use.
    #[arg(long)]
    pub order: Option<PathBuf>,
    /// Use the diagonal stable-range selectors (Schur side, n >= r).
    #[arg(long)]
    pub stable_fastpath: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the basis with Coxeter lengths.
    Basis {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        json: bool,
    },
    /// Print the entry selected for one basis element (row, then column).
    Map {
        #[command(flatten)]
        shape: Shape,
        /// Permutation as a comma separated word.
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        stable_fastpath: bool,
    },
    /// Print the coefficient matrix A of the selected subsystem.
    Matrix {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        system: SystemArgs,
        /// Also print the integer inverse of A.
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decompose an invariant into basis coefficients.
    Decompose {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Solve via the explicit integer inverse instead of back substitution.
        #[arg(long)]
        explicit_inverse: bool,
        /// Keep zero coefficients in the output.
        #[arg(long)]
        include_zeros: bool,
    },
    /// Check that coefficients reproduce an invariant at every coordinate.
    Verify {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coefficients: PathBuf,
    },
    /// Decompose by Gaussian elimination on the full system.
    Oracle {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a seeded random invariant and the coefficients that built it.
    Random {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Where to write the generating coefficients.
        #[arg(long)]
        coefficients: Option<PathBuf>,
    },
    /// Regenerate the worked examples and diff them against the stored text.
    #[command(alias = "paper-examples")]
    Examples {
        /// Print the regenerated text.
        #[arg(long)]
        print: bool,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidInput(_) | Error::Domain { .. } | Error::DegreeMismatch { .. } => EXIT_INVALID,
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::NotInSpan { .. } | Error::Inconsistent => EXIT_NOT_IN_SPAN,
            Error::NotUnitriangular(_) | Error::RankDeficient => EXIT_FAILURE,
        };
        let mut message = e.to_string();
        if let Error::NotInSpan { violations } = &e {
            for v in violations {
                message.push_str("\n  ");
                message.push_str(v);
            }
        }
        Failure { code, message }
    }
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_INVALID, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_FAILURE, format!("cannot write {}: {e}", path.display())))
}

/// Writes to the file if given, otherwise returns the text for stdout.
fn emit(output: &Option<PathBuf>, text: String) -> Outcome {
    match output {
        Some(path) => write(path, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn load_invariant(path: &Path, shape: &Shape) -> std::result::Result<Invariant, Failure> {
    let x = invariant_from_json(&read(path)?)?;
    if (x.n, x.r) != (shape.n, shape.r) {
        return Err(Failure::new(
            EXIT_INVALID,
            format!("{} holds an invariant for n={} r={}, expected n={} r={}", path.display(), x.n, x.r, shape.n, shape.r),
        ));
    }
    Ok(x)
}

fn options(system: &SystemArgs, caps: Caps) -> std::result::Result<SystemOptions, Failure> {
    let order = match &system.order {
        Some(path) => Some(parse_order(&read(path)?)?),
        None => None,
    };
    Ok(SystemOptions {
        stable_fastpath: system.stable_fastpath,
        order,
        method: SolveMethod::BackSubstitution,
        caps,
    })
}

/// Runs a parsed command and returns what to print on stdout.
pub fn run(cli: Cli) -> Outcome {
    let caps = Caps {
        max_group_order: cli.caps.max_group_order,
        max_dimension: cli.caps.max_dimension,
    };
    match cli.command {
        Command::Basis { shape, json } => {
            let basis = enumerate_basis(shape.side, shape.n, shape.r, &caps)?;
            if json {
                let elements: Vec<Value> = basis
                    .elements
                    .iter()
                    .map(|p| json!({"perm": p.to_string(), "length": p.coxeter_length()}))
                    .collect();
                let doc = json!({"format": 1, "side": shape.side, "n": shape.n, "r": shape.r, "elements": elements});
                return Ok(with_newline(serde_json::to_string_pretty(&doc).expect("serialisable")));
            }
            Ok(basis
                .elements
                .iter()
                .map(|p| format!("{p} {}\n", p.coxeter_length()))
                .collect())
        }
        Command::Map {
            shape,
            perm,
            stable_fastpath,
        } => {
            if perm.degree() != shape.side.degree(shape.n, shape.r) {
                return Err(Error::DegreeMismatch {
                    expected: shape.side.degree(shape.n, shape.r),
                    found: perm.degree(),
                }
                .into());
            }
            let sel = selector(shape.side, &perm, shape.n, shape.r, stable_fastpath)?;
            Ok(format!("{sel}\n"))
        }
        Command::Matrix {
            shape,
            system,
            inverse,
            json,
        } => {
            let opts = options(&system, caps)?;
            let sys = build_a(shape.side, shape.n, shape.r, &opts)?;
            let inv = if inverse { Some(invert_unitriangular(&sys.matrix)?) } else { None };
            if json {
                let mut doc = json!({
                    "format": 1,
                    "side": shape.side,
                    "n": shape.n,
                    "r": shape.r,
                    "basis": sys.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "selectors": sys.selectors.iter().map(|s| [s.row.to_string(), s.col.to_string()]).collect::<Vec<_>>(),
                    "A": sys.matrix.to_dense(),
                });
                if let Some(inv) = &inv {
                    doc["A_inverse"] = inv
                        .rows
                        .iter()
                        .map(|r| r.iter().map(|v| Value::String(v.to_string())).collect::<Vec<_>>())
                        .collect();
                }
                return Ok(with_newline(serde_json::to_string_pretty(&doc).expect("serialisable")));
            }
            let mut out = render::table(&[
                ("p", sys.basis.iter().map(render::paren).collect()),
                ("i", sys.selectors.iter().map(|s| render::subscript(&s.row)).collect()),
                ("j", sys.selectors.iter().map(|s| render::subscript(&s.col)).collect()),
            ]);
            out.push_str("\nA =\n");
            out.push_str(&render::unitriangular(&sys.matrix));
            if let Some(inv) = &inv {
                out.push_str("\nA^-1 =\n");
                out.push_str(&render::int_matrix(inv));
                out.push('\n');
                out.push_str(&render::solution(&sys, inv));
            }
            Ok(out)
        }
        Command::Decompose {
            shape,
            system,
            input,
            output,
            explicit_inverse,
            include_zeros,
        } => {
            let x = load_invariant(&input, &shape)?;
            let mut opts = options(&system, caps)?;
            if explicit_inverse {
                opts.method = SolveMethod::ExplicitInverse;
            }
            let sys = build_a(shape.side, shape.n, shape.r, &opts)?;
            let c = decompose_with(&x, &sys, &opts)?;
            let text = coefficients_to_json(shape.side, shape.n, shape.r, &c.sorted(), include_zeros)?;
            emit(&output, with_newline(text))
        }
        Command::Verify {
            shape,
            input,
            coefficients,
        } => {
            let x = load_invariant(&input, &shape)?;
            let doc = coefficients_from_json(&read(&coefficients)?)?;
            if (doc.side, doc.n, doc.r) != (shape.side, shape.n, shape.r) {
                return Err(Failure::new(
                    EXIT_INVALID,
                    format!(
                        "{} is for {} n={} r={}, expected {} n={} r={}",
                        coefficients.display(),
                        doc.side,
                        doc.n,
                        doc.r,
                        shape.side,
                        shape.n,
                        shape.r
                    ),
                ));
            }
            let basis = enumerate_basis(shape.side, shape.n, shape.r, &caps)?;
            let c = doc.over_basis(&basis.elements)?;
            let violations = verify_residual(&x, &c, shape.side, &caps)?;
            if violations.is_empty() {
                return Ok("ok\n".into());
            }
            let mut message = format!("{} coordinates disagree", violations.len());
            for v in violations.iter().take(centraliser::solver::MAX_REPORTED_VIOLATIONS) {
                message.push_str(&format!("\n  {v}"));
            }
            Err(Failure::new(EXIT_NOT_IN_SPAN, message))
        }
        Command::Oracle { shape, input, output } => {
            let x = load_invariant(&input, &shape)?;
            let c = oracle::oracle_full_solve(&x, shape.side, &caps)?;
            let text = coefficients_to_json(shape.side, shape.n, shape.r, &c.sorted(), false)?;
            emit(&output, with_newline(text))
        }
        Command::Random {
            shape,
            seed,
            output,
            coefficients,
        } => {
            let (x, c) = random_invariant(shape.side, shape.n, shape.r, seed, &caps)?;
            if let Some(path) = &coefficients {
                write(path, &with_newline(coefficients_to_json(shape.side, shape.n, shape.r, &c.sorted(), false)?))?;
            }
            emit(&output, with_newline(invariant_to_json(&x)?))
        }
        Command::Examples { print } => {
            let actual = examples::generate()?;
            if let Some((line, expected, found)) = examples::first_difference(examples::EXPECTED, &actual) {
                return Err(Failure::new(
                    EXIT_FAILURE,
                    format!("worked examples differ at line {line}\n  expected: {expected}\n  found:    {found}"),
                ));
            }
            if print {
                Ok(actual)
            } else {
                Ok("worked examples: all match\n".into())
            }
        }
    }
}
