//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 input error, 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{self, DEFAULT_CORPUS_SIZE, DEFAULT_MAX_SIZE};
use crate::coproduct::{self, coproduct, DEFAULT_BUDGET};
use crate::error::Error;
use crate::format::{builtin_spec, to_dot, FrameSpec};
use crate::frame::{join_irreducible_elements, Frame};
use crate::hom;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Default cap on frame sizes for hom enumeration.
pub const DEFAULT_HOM_BUDGET: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "finframe",
    version,
    about = "Finite frames, their homomorphisms and coproducts"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a frame spec and check the frame axioms.
    Validate { frame: String },
    /// List all frame maps SOURCE → TARGET with their pointwise order.
    Homs {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: usize,
    },
    /// Frame maps FRAME → T.
    Points {
        frame: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: usize,
    },
    /// Frame maps FRAME → FRAME.
    Endos {
        frame: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: usize,
    },
    /// Invertible frame maps FRAME → FRAME.
    Autos {
        frame: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: usize,
    },
    /// Rebuild FRAME as the pointwise-ordered arrows S → FRAME.
    Reconstruct {
        frame: String,
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: usize,
    },
    /// Dump the coproduct LEFT + RIGHT.
    Coproduct {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// The codiagonal FRAME + FRAME → FRAME.
    Codiag {
        frame: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Compare the pointwise order on Arr⟨SOURCE, FRAME⟩ with the codiagonal test.
    OrderCheck {
        frame: String,
        #[arg(long, default_value = "S")]
        source: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Catalog of all frames up to N_MAX elements.
    Census {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Generator test corpus: all frames up to this size.
        #[arg(long, default_value_t = DEFAULT_CORPUS_SIZE)]
        corpus_max: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        budget: usize,
        /// Write the catalog here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the counting claims against a census.
    CheckPaper {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_CORPUS_SIZE)]
        corpus_max: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        budget: usize,
    },
    /// Export a frame's Hasse diagram (DOT) or its spec.
    ExportDot {
        frame: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Spec,
}

enum Failure {
    Input(String),
    Math(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "FAIL: {msg}");
            EXIT_CLAIM_FAILED
        }
    }
}

/// Resolves a built-in name or reads a frame spec file.
pub fn load_frame(name: &str) -> Result<Frame, Error> {
    let spec = match builtin_spec(name) {
        Some(spec) => spec,
        None => {
            let text = std::fs::read_to_string(name).map_err(|e| Error::Spec(format!("{name}: {e}")))?;
            FrameSpec::parse(&text)?
        }
    };
    spec.build()
}

fn load(name: &str, budget: Option<usize>) -> Result<Arc<Frame>, Failure> {
    let frame = load_frame(name)?;
    if let Some(limit) = budget {
        if frame.len() > limit {
            return Err(Error::BudgetExceeded {
                what: format!("frame `{name}` ({} elements)", frame.len()),
                limit,
            }
            .into());
        }
    }
    Ok(Arc::new(frame))
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Validate { frame } => {
            let f = load(&frame, None)?;
            f.validate()?;
            writeln!(
                out,
                "VALID frame: {} elements, {} covers, {} join-irreducibles",
                f.len(),
                f.poset().covers().len(),
                join_irreducible_elements(&f).len()
            )?;
        }
        Command::Homs { source, target, budget } => {
            let (k, l) = (load(&source, Some(budget))?, load(&target, Some(budget))?);
            out.write_all(hom::enumerate_homs(&k, &l).report().as_bytes())?;
        }
        Command::Points { frame, budget } => {
            let f = load(&frame, Some(budget))?;
            out.write_all(hom::points(&f).report().as_bytes())?;
        }
        Command::Endos { frame, budget } => {
            let f = load(&frame, Some(budget))?;
            out.write_all(hom::endomorphisms(&f).report().as_bytes())?;
        }
        Command::Autos { frame, budget } => {
            let f = load(&frame, Some(budget))?;
            out.write_all(hom::automorphisms(&f).report().as_bytes())?;
        }
        Command::Reconstruct { frame, budget } => {
            let f = load(&frame, Some(budget))?;
            let r = hom::arr_s_frame(&f)?;
            writeln!(out, "|Arr⟨S,L⟩| = {}", r.homs.len())?;
            writeln!(out, "e: {}", r.evaluation)?;
            writeln!(out, "z: {}", r.inverse)?;
            let round_trip = r.evaluation.after(&r.inverse)? == crate::map::FrameMap::identity(f.clone());
            writeln!(out, "isomorphic: {round_trip}")?;
            if !round_trip {
                return Err(Failure::Math("e ∘ z is not the identity".into()));
            }
        }
        Command::Coproduct { left, right, budget } => {
            let (a, b) = (load(&left, None)?, load(&right, None)?);
            out.write_all(coproduct(&a, &b, budget)?.dump().as_bytes())?;
        }
        Command::Codiag { frame, budget } => {
            let f = load(&frame, None)?;
            let cp = coproduct(&f, &f, budget)?;
            let nabla = coproduct::codiagonal(&cp)?;
            writeln!(out, "L + L: {} elements", cp.len())?;
            for i in 0..cp.len() {
                writeln!(out, "∇({}) = {}", cp.frame().label(i), f.label(nabla.apply(i)))?;
            }
        }
        Command::OrderCheck { frame, source, budget } => {
            let (k, l) = (load(&source, None)?, load(&frame, None)?);
            let homs = hom::enumerate_homs(&k, &l);
            let src = coproduct(&k, &k, budget)?;
            let tgt = coproduct(&l, &l, budget)?;
            let nabla = coproduct::codiagonal(&tgt)?;
            let mut disagreements = 0;
            writeln!(out, "arrows: {}", homs.len())?;
            for (i, f) in homs.maps().iter().enumerate() {
                let mut row = Vec::new();
                for (j, g) in homs.maps().iter().enumerate() {
                    let by_codiag = coproduct::order_by_codiagonal_with(f, g, &src, &tgt, &nabla)?;
                    if by_codiag != homs.leq(i, j) {
                        disagreements += 1;
                    }
                    row.push(if by_codiag { "1" } else { "0" });
                }
                writeln!(out, "map_{i}: {}", row.join(" "))?;
            }
            writeln!(out, "disagreements with pointwise order: {disagreements}")?;
            if disagreements > 0 {
                return Err(Failure::Math(format!("{disagreements} pairs disagree")));
            }
        }
        Command::Census {
            n_max,
            corpus_max,
            budget,
            out: path,
        } => {
            let corpus = census::standard_corpus(corpus_max)?;
            let records = census::census(n_max, &corpus, budget)?;
            let text = census::catalog(&records);
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::CheckPaper {
            n_max,
            corpus_max,
            budget,
        } => {
            let corpus = census::standard_corpus(corpus_max)?;
            let records = census::census(n_max, &corpus, budget)?;
            let report = census::check_claims(n_max, &records, &corpus);
            out.write_all(report.render().as_bytes())?;
            if !report.passed() {
                return Err(Failure::Math("at least one claim failed".into()));
            }
        }
        Command::ExportDot { frame, format } => {
            let f = load(&frame, None)?;
            let text = match format {
                ExportFormat::Dot => to_dot(&f, &frame),
                ExportFormat::Spec => FrameSpec::of_frame(&f).to_text(),
            };
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
