//! Command dispatch for the `eisenstein` binary.
//!
//! Exit codes: 0 success or PASS, 1 negative answer, 2 usage error,
//! 3 arithmetic overflow, 4 domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eisenstein::params::valid_pairs;
use eisenstein::tree::{matrix_set, reconciliation_report};
use eisenstein::{
    brute_force, certify, certify_both, classify, derive_word, derive_word_in, from_sub,
    member_family, params_from_triple, sub_eisenstein_from_params, swap_120, to_sub, DerivationWord,
    eisenstein_from_params, Error, Family, ParamPair, TreeEnumerator, Triple, Variant,
};

pub mod record;

use record::{Format, Record, RecordWriter};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "eisenstein", version, about = "Primitive integer triangles with a 60 or 120 degree angle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "60")]
    Sixty,
    #[value(name = "120")]
    OneTwenty,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sixty => Family::Sixty,
            FamilyArg::OneTwenty => Family::OneTwenty,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFamily {
    #[value(name = "60")]
    Sixty,
    #[value(name = "120")]
    OneTwenty,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Tree,
    Params,
    Oracle,
}

#[derive(Debug, Args)]
struct TripleArgs {
    #[arg(allow_negative_numbers = true)]
    a: i64,
    #[arg(allow_negative_numbers = true)]
    b: i64,
    #[arg(allow_negative_numbers = true)]
    c: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream the triples of one family with a <= max-a.
    Enumerate {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_a: i64,
        #[arg(long, value_enum, default_value = "tree")]
        source: Source,
        /// Follow each triple with its twin (60) or b/c swap (120).
        #[arg(long)]
        include_twins: bool,
        /// Emit (1,1,1) first for the 60 family (tree and params sources).
        #[arg(long)]
        include_equilateral: bool,
        #[arg(long)]
        with_word: bool,
        #[arg(long)]
        with_params: bool,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Classify a triple.
    Check(TripleArgs),
    /// Map a triple into the other family.
    Map {
        #[arg(long)]
        to: FamilyArg,
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Recover (m, n) for a primitive triple.
    Params(TripleArgs),
    /// Recover the tree derivation of a primitive triple.
    Derive(TripleArgs),
    /// Check tree, parametrization and bijection against exhaustive search.
    Verify {
        #[arg(long, value_enum)]
        family: VerifyFamily,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_a: i64,
    },
    /// Print the generator matrices and the reconciliation of printed variants.
    Matrices,
}

/// Errors that end a command, with their exit code.
enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Overflow => EXIT_OVERFLOW,
        Error::NonPositiveSide(..) | Error::InvalidBound(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

type CmdResult = Result<u8, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                if !rendered.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                }
                return EXIT_USAGE;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Enumerate {
            family,
            max_a,
            source,
            include_twins,
            include_equilateral,
            with_word,
            with_params,
            format,
        } => {
            let opts = EnumerateOpts {
                family: family.into(),
                max_a,
                source,
                include_twins,
                include_equilateral,
                with_word,
                with_params,
            };
            cmd_enumerate(&opts, format, out)
        }
        Command::Check(t) => cmd_check(triple_arg(&t)?, out),
        Command::Map { to, triple } => cmd_map(to.into(), triple_arg(&triple)?, out),
        Command::Params(t) => cmd_params(triple_arg(&t)?, out),
        Command::Derive(t) => cmd_derive(triple_arg(&t)?, out),
        Command::Verify { family, max_a } => cmd_verify(family, max_a, out),
        Command::Matrices => cmd_matrices(out),
    }
}

fn triple_arg(t: &TripleArgs) -> Result<Triple, Failure> {
    Ok(Triple::new(t.a, t.b, t.c)?)
}

struct EnumerateOpts {
    family: Family,
    max_a: i64,
    source: Source,
    include_twins: bool,
    include_equilateral: bool,
    with_word: bool,
    with_params: bool,
}

/// Triples of one source in its deterministic order, with the word when
/// the source already knows it.
fn source_triples(o: &EnumerateOpts) -> Result<Vec<(Triple, Option<DerivationWord>)>, Error> {
    match o.source {
        Source::Tree => TreeEnumerator::new(o.family, o.max_a)?
            .with_twins(o.include_twins)
            .with_equilateral(o.include_equilateral)
            .map(|n| n.map(|n| (n.triple, n.word)))
            .collect(),
        Source::Oracle => Ok(brute_force(o.family, o.max_a)?.into_iter().map(|t| (t, None)).collect()),
        Source::Params => {
            let mut out = Vec::new();
            if o.include_equilateral && o.family == Family::Sixty {
                out.push((Triple::new(1, 1, 1)?, None));
            }
            for p in valid_pairs(o.max_a)? {
                match o.family {
                    Family::Sixty => {
                        out.push((eisenstein_from_params(p.with_variant(Variant::Plus))?, None));
                        if o.include_twins {
                            out.push((eisenstein_from_params(p.with_variant(Variant::Minus))?, None));
                        }
                    }
                    Family::OneTwenty => {
                        let t = sub_eisenstein_from_params(p)?;
                        out.push((t, None));
                        if o.include_twins {
                            out.push((swap_120(t), None));
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

fn cmd_enumerate(o: &EnumerateOpts, format: Format, out: &mut dyn Write) -> CmdResult {
    let triples = source_triples(o)?;
    let mut writer = RecordWriter::new(out, format, o.with_word, o.with_params)?;
    for (t, known_word) in triples {
        let word = if o.with_word {
            match known_word {
                Some(w) => Some(w),
                None if t.is_equilateral() => None,
                None => derive_word_in(o.family, t)?,
            }
        } else {
            None
        };
        let params: Option<ParamPair> = if o.with_params { params_from_triple(o.family, t)? } else { None };
        writer.write(&Record::new(o.family, t, word.as_ref(), params.as_ref()))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckRecord {
    family: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical: Option<Triple>,
}

fn cmd_check(t: Triple, out: &mut dyn Write) -> CmdResult {
    let record = match member_family(t)? {
        None => CheckRecord { family: None, primitive: None, canonical: None },
        Some(family) => CheckRecord {
            family: Some(family.degrees()),
            primitive: Some(classify(t)? == Some(family)),
            canonical: Some(t.canonical()),
        },
    };
    writeln!(out, "{}", serde_json::to_string(&record)?)?;
    Ok(if record.family.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_map(to: Family, t: Triple, out: &mut dyn Write) -> CmdResult {
    let mapped = match to {
        Family::OneTwenty => to_sub(t)?,
        Family::Sixty => from_sub(t)?,
    };
    writeln!(out, "{} {} {}", mapped.a(), mapped.b(), mapped.c())?;
    Ok(EXIT_OK)
}

fn cmd_params(t: Triple, out: &mut dyn Write) -> CmdResult {
    let found = match classify(t)? {
        Some(family) => params_from_triple(family, t)?.map(|p| (family, p)),
        None => None,
    };
    match found {
        Some((Family::Sixty, p)) => writeln!(out, "m={} n={} variant={}", p.m(), p.n(), p.variant().name())?,
        Some((Family::OneTwenty, p)) => writeln!(out, "m={} n={}", p.m(), p.n())?,
        None => {
            writeln!(out, "NOT_FOUND")?;
            return Ok(EXIT_NEGATIVE);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_derive(t: Triple, out: &mut dyn Write) -> CmdResult {
    match derive_word(t) {
        Ok(Some(w)) => {
            writeln!(out, "seed={} word={} twin={}", w.seed, w.letters_string(), w.twin)?;
            Ok(EXIT_OK)
        }
        Ok(None) => {
            writeln!(out, "NOT_FOUND")?;
            Ok(EXIT_NEGATIVE)
        }
        Err(Error::NotInFamily(_)) => {
            writeln!(out, "NOT_IN_FAMILY")?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(family: VerifyFamily, max_a: i64, out: &mut dyn Write) -> CmdResult {
    let reports = match family {
        VerifyFamily::Sixty => vec![certify(Family::Sixty, max_a)?],
        VerifyFamily::OneTwenty => vec![certify(Family::OneTwenty, max_a)?],
        VerifyFamily::Both => certify_both(max_a)?.to_vec(),
    };
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    let pass = reports.iter().all(|r| r.pass);
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { EXIT_OK } else { EXIT_NEGATIVE })
}

#[derive(Serialize)]
struct MatrixRecord<'a> {
    family: u32,
    generators: &'a [eisenstein::GenMatrix; 5],
    seeds: &'a [Triple; 2],
}

fn cmd_matrices(out: &mut dyn Write) -> CmdResult {
    for family in Family::ALL {
        let set = matrix_set(family);
        let rec = MatrixRecord { family: family.degrees(), generators: &set.generators, seeds: &set.seeds };
        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
    }
    for d in reconciliation_report() {
        writeln!(out, "{}", serde_json::to_string(&d)?)?;
    }
    Ok(EXIT_OK)
}
