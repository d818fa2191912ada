//! Command-line front end. Exit codes: 0 success, 1 a check failed, 2 usage
//! or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use twistfib_core::{
    build_catalog, check_involutions_and_order, check_relator_identity, h1_of_total_space, per_cycle_contributions,
    phi_relator, phi_word, theta_word, word_matrix, CycleCatalog, Family,
};

use crate::dump::{cycles_json, cycles_text, matrix_json};
use crate::golden::golden_sequence;
use crate::report::ReportDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twistfib", version, about = "Twist relators of finite-order surface rotations and their fibration invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all invariants and checks for one p.
    Report {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run selected checks and print one line per check.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Check::ALL)]
        checks: Vec<Check>,
    },
    /// Dump the vanishing-cycle catalog.
    Cycles {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = DumpFormat::Text)]
        format: DumpFormat,
    },
    /// Print the homology action of a twist word as JSON rows.
    Matrix {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = WordChoice::Phi)]
        word: WordChoice,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DumpFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WordChoice {
    Theta1,
    Theta2,
    Phi,
    Relator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Relator,
    H1,
    Pi1,
    Involution,
    Order,
    Golden,
}

impl Check {
    pub const ALL: [Check; 6] = [Check::Relator, Check::H1, Check::Pi1, Check::Involution, Check::Order, Check::Golden];

    fn name(self) -> &'static str {
        match self {
            Check::Relator => "relator",
            Check::H1 => "h1",
            Check::Pi1 => "pi1",
            Check::Involution => "involution",
            Check::Order => "order",
            Check::Golden => "golden",
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Not applicable for this input; does not affect the exit code.
    Skipped(String),
}

fn run_check(check: Check, cat: &CycleCatalog) -> anyhow::Result<Outcome> {
    let p = cat.params().p();
    let pass = |ok: bool, why: String| if ok { Outcome::Pass } else { Outcome::Fail(why) };
    Ok(match check {
        Check::Relator => pass(check_relator_identity(cat)?, String::from("phi^p acts nontrivially on H1")),
        Check::H1 => {
            let h = h1_of_total_space(p as i64)?;
            let d: Vec<String> = h.divisors.iter().map(ToString::to_string).collect();
            pass(h.is_trivial(), format!("divisors [{}], free rank {}", d.join(" "), h.free_rank))
        }
        Check::Pi1 => {
            let r = twistfib_core::check_pi1_derivations(cat)?;
            let failed: Vec<String> = r.failures().map(|s| format!("{}: {}", s.name, s.detail)).collect();
            let stalled: Vec<String> = [&r.beta_chain, &r.beta_chain_alt, &r.alpha_chain]
                .iter()
                .flat_map(|c| c.stalled.iter().map(ToString::to_string))
                .collect();
            pass(r.ok(), format!("steps failed: [{}]; stalled: [{}]", failed.join("; "), stalled.join(" ")))
        }
        Check::Involution => {
            let c = check_involutions_and_order(cat)?;
            pass(c.involutions_ok(), format!("{c:?}"))
        }
        Check::Order => {
            let c = check_involutions_and_order(cat)?;
            let found = c.phi_order.map_or_else(|| format!("> {p}"), |n| n.to_string());
            pass(c.order_ok(), format!("order of phi is {found}, expected {p}"))
        }
        Check::Golden => match golden_sequence(p)? {
            None => Outcome::Skipped(format!("no golden data for p={p}")),
            Some(g) => {
                let seq = per_cycle_contributions(&phi_relator(p as i64)?, cat)?;
                let m = twistfib_core::signature::mismatch_positions(&seq.values, &g);
                pass(m.is_empty(), format!("{} mismatched positions, first {:?}", m.len(), m.first()))
            }
        },
    })
}

fn validate_p(p: i64, err: &mut dyn Write) -> Option<CycleCatalog> {
    match build_catalog(p) {
        Ok(cat) => Some(cat),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            None
        }
    }
}

fn emit(text: &str, target: Option<&PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match target {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Report { p, format, out: target } => {
            let Some(_) = validate_p(p, err) else { return Ok(EXIT_USAGE) };
            let doc = ReportDocument::build(p)?;
            let text = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
                Format::Text => doc.to_text(),
            };
            let code = emit(&text, target.as_ref(), out, err);
            if code != EXIT_OK {
                return Ok(code);
            }
            Ok(if doc.all_checks_pass() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Verify { p, checks } => {
            let Some(cat) = validate_p(p, err) else { return Ok(EXIT_USAGE) };
            let mut code = EXIT_OK;
            for check in checks {
                match run_check(check, &cat)? {
                    Outcome::Pass => writeln!(out, "{}: pass", check.name())?,
                    Outcome::Fail(why) => {
                        code = EXIT_FAILED;
                        writeln!(out, "{}: FAIL ({why})", check.name())?;
                    }
                    Outcome::Skipped(why) => writeln!(out, "{}: skipped ({why})", check.name())?,
                }
            }
            Ok(code)
        }
        Command::Cycles { p, format } => {
            let Some(cat) = validate_p(p, err) else { return Ok(EXIT_USAGE) };
            let text = match format {
                DumpFormat::Json => cycles_json(&cat),
                DumpFormat::Text => cycles_text(&cat),
            };
            Ok(emit(&text, None, out, err))
        }
        Command::Matrix { p, word } => {
            let Some(cat) = validate_p(p, err) else { return Ok(EXIT_USAGE) };
            let w = match word {
                WordChoice::Theta1 => theta_word(p, Family::Theta1)?,
                WordChoice::Theta2 => theta_word(p, Family::Theta2)?,
                WordChoice::Phi => phi_word(p)?,
                WordChoice::Relator => phi_relator(p)?,
            };
            Ok(emit(&matrix_json(&word_matrix(&w, &cat)?), None, out, err))
        }
    }
}
