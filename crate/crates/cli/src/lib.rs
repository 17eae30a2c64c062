//! Command-line front end: parse algebra specs and element literals,
//! evaluate expressions, run law suites, decompose, represent, rebuild and
//! emit lex embeddings.

mod eval;

use std::io::Write;
use std::path::{Path, PathBuf};

use chain_core::{parse_elem, Algebra, Chain, Elem};
use clap::{Parser, Subcommand};
use decompose::{group_representation, rebuild, DecomposeError, Embedding, LexTarget, RepTree, Step};
use lawcheck::{check_hom, check_law, render, Claims, Format, LawError, Report, ALL_LAWS};
use plex::{parse_algebra, PlexError, SpecError};
use thiserror::Error;

pub use eval::{eval, Value};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0} failed")]
    LawFailure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::LawFailure(_) => 3,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> CliError {
        match e {
            SpecError::Syntax(s) => CliError::Parse(s.to_string()),
            SpecError::Build(b) => b.into(),
        }
    }
}

impl From<PlexError> for CliError {
    fn from(e: PlexError) -> CliError {
        CliError::Precondition(e.to_string())
    }
}

impl From<DecomposeError> for CliError {
    fn from(e: DecomposeError) -> CliError {
        match e {
            DecomposeError::Syntax(s) => CliError::Parse(s.to_string()),
            DecomposeError::InvalidElement(_) => CliError::Parse(e.to_string()),
            DecomposeError::Build(b) => b.into(),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<LawError> for CliError {
    fn from(e: LawError) -> CliError {
        match e {
            LawError::UnknownLaw(_) => CliError::Parse(e.to_string()),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "lexchain", version, about = "Workbench for odd involutive FLe-chains")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SpecArg {
    /// File holding one algebra spec, e.g. `II(Z, Q)`.
    #[arg(short = 'f', value_name = "SPEC")]
    pub spec: PathBuf,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Validate a spec and print its canonical form.
    Build {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Evaluate an expression such as `mul (0, T) (1, 1/2)`.
    Eval {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'e', value_name = "EXPR")]
        expr: String,
    },
    /// Run law checks; `--laws all` skips laws that do not apply.
    Check {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value = "all", value_name = "ID|all")]
        laws: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the first decomposition step, or classify one element.
    Decompose {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'e', value_name = "ELEM")]
        elem: Option<String>,
    },
    /// Print the group representation.
    Represent {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Rebuild an algebra from a group representation file.
    Rebuild {
        /// File holding a representation as printed by `represent`.
        #[arg(short = 'f', value_name = "TREE")]
        tree: PathBuf,
    },
    /// Print the lex product target and check the monoid embedding into it.
    EmbedLex {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        run: RunArgs,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_spec(path: &Path) -> Result<Algebra, CliError> {
    Ok(parse_algebra(&read(path)?)?)
}

fn io(e: std::io::Error) -> CliError {
    CliError::Parse(format!("write failed: {e}"))
}

/// Run one command. Output goes to `out`, notes about skipped laws to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.verb {
        Verb::Build { spec } => {
            let a = load_spec(&spec.spec)?;
            writeln!(out, "{a}").map_err(io)?;
            writeln!(out, "positive idempotents: {}", a.positive_idempotents().len()).map_err(io)?;
        }
        Verb::Eval { spec, expr } => {
            let a = load_spec(&spec.spec)?;
            writeln!(out, "{}", eval(&a, expr)?).map_err(io)?;
        }
        Verb::Check { spec, laws, run } => {
            let a = load_spec(&spec.spec)?;
            let reports = check(&a, laws, run, err)?;
            out.write_all(render(&reports, run.format).as_bytes()).map_err(io)?;
            if let Some(r) = reports.iter().find(|r| !r.passed()) {
                return Err(CliError::LawFailure(r.law.clone()));
            }
        }
        Verb::Decompose { spec, elem } => {
            let a = load_spec(&spec.spec)?;
            let s = Step::new(&a)?;
            match elem {
                None => {
                    writeln!(out, "u: {}", s.u()).map_err(io)?;
                    writeln!(out, "not u: {}", s.neg_u()).map_err(io)?;
                    writeln!(out, "branch: {:?}", s.branch()).map_err(io)?;
                }
                Some(e) => {
                    let x = parse_elem(&a, e).map_err(|e| CliError::Parse(e.to_string()))?;
                    writeln!(out, "class: {}", s.classify(&x).name()).map_err(io)?;
                    writeln!(out, "phi: {}", s.phi(&x)).map_err(io)?;
                }
            }
        }
        Verb::Represent { spec } => {
            let a = load_spec(&spec.spec)?;
            writeln!(out, "{}", group_representation(&a)?).map_err(io)?;
        }
        Verb::Rebuild { tree } => {
            let t = RepTree::parse(&read(tree)?).map_err(|e| CliError::Parse(e.to_string()))?;
            writeln!(out, "{}", rebuild(&t)?).map_err(io)?;
        }
        Verb::EmbedLex { spec, run } => {
            let a = load_spec(&spec.spec)?;
            let r = embed_lex(&a, run.budget, run.seed)?;
            writeln!(out, "target: {}", LexTarget::new(&group_representation(&a)?)).map_err(io)?;
            out.write_all(render(std::slice::from_ref(&r), run.format).as_bytes()).map_err(io)?;
            if !r.passed() {
                return Err(CliError::LawFailure(r.law));
            }
        }
    }
    Ok(())
}

/// Check the monoid embedding of `a` into its full lex product target.
pub fn embed_lex(a: &Algebra, budget: usize, seed: u64) -> Result<Report, CliError> {
    let t = group_representation(a)?;
    let target = LexTarget::new(&t);
    let emb = Embedding::new(a)?;
    let map = |x: &Elem| emb.apply(x).map(|y| target.flatten(&y)).map_err(|e| e.to_string());
    Ok(check_hom("embed-lex", a, &target, map, Claims::embedding(), budget, seed))
}

/// Reports for `laws` (one id, a comma-separated list, or `all`) in law-id
/// order. With `all`, laws that do not apply to `a` are skipped.
pub fn check(a: &Algebra, laws: &str, run: &RunArgs, err: &mut dyn Write) -> Result<Vec<Report>, CliError> {
    let (ids, skip): (Vec<&str>, bool) =
        if laws == "all" { (ALL_LAWS.to_vec(), true) } else { (laws.split(',').map(str::trim).collect(), false) };
    let results: Vec<Result<Report, LawError>> = std::thread::scope(|sc| {
        let handles: Vec<_> = ids.iter().map(|id| sc.spawn(move || check_law(a, id, run.budget, run.seed))).collect();
        handles.into_iter().map(|h| h.join().expect("law check panicked")).collect()
    });
    let mut reports = Vec::new();
    for (id, res) in ids.iter().zip(results) {
        match res {
            Ok(r) => reports.push(r),
            Err(e @ (LawError::WrongBranch(_) | LawError::Decompose(DecomposeError::OnlyUnitIdempotent))) if skip => {
                writeln!(err, "skipped {id}: {e}").map_err(io)?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(reports)
}
