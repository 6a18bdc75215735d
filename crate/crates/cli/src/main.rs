//! `clifflike`: exact computations in the Clifford-like algebra, reported as
//! JSON. The exit status is 0 when every check passes, 1 when a check fails,
//! and 2 on invalid input.

mod commands;
mod json;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use clifflike::Error;
use serde_json::{json, Value};

use commands::Outcome;

#[derive(Parser)]
#[command(
    name = "clifflike",
    version,
    about = "Exact computations in a Clifford-like algebra"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form in the strictly decreasing PBW basis.
    Nf1 {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form in the weakly increasing PBW basis.
    Nf2 {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Image in the smash product of the Clifford algebra with the shift.
    Pi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Class of a degree-0 element in the quotient group algebra.
    A0 {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Resolve every overlap ambiguity with indices in [-W, W].
    Confluence {
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Cross-check both PBW bases and pi on all short words.
    Pbw {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Bosonic Fock space realization.
    Fock {
        #[command(subcommand)]
        command: FockCommand,
    },
    /// Gram matrix of the invariant form in degree n.
    Gram {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: String,
    },
    /// Graded dimensions up to degree N.
    Gdim {
        #[arg(long)]
        max: u32,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: String,
    },
    /// Fermionic Fock space realization of the tilde algebra.
    Tilde {
        #[command(subcommand)]
        command: TildeCommand,
    },
    /// Yang-Baxter and unitarity checks of the braiding.
    Ybe {
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Run verification suites.
    Suite {
        #[command(subcommand)]
        command: SuiteCommand,
    },
}

#[derive(Subcommand)]
enum FockCommand {
    /// Apply an element to the vacuum.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: String,
    },
    /// Check the Y/Y* duality on vacuum vectors for all |λ| ≤ N.
    Duality {
        #[arg(long)]
        max_weight: u32,
    },
    /// Check the defining relations on all monomials of degree ≤ D.
    Relations {
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[arg(long, default_value_t = 6)]
        degree: u32,
        /// May be repeated.
        #[arg(long = "mu", default_values_t = vec!["1".to_string()], allow_hyphen_values = true)]
        mus: Vec<String>,
    },
    /// Check that negative-degree basis words kill the vacuum.
    Omega {
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum TildeCommand {
    /// Check the exchange relations on all states of energy ≤ E.
    Verify {
        #[arg(long, default_value_t = 5)]
        energy: i64,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// The product u_n w of two generating states.
    Sc {
        #[arg(long)]
        u: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand)]
enum SuiteCommand {
    /// Every verification at its reference size.
    All,
}

fn dispatch(command: &Command) -> (String, Value, clifflike::Result<Outcome>) {
    use commands as c;
    match command {
        Command::Nf1 { expr } => ("nf1".into(), json!({"expr": expr}), c::nf1_cmd(expr)),
        Command::Nf2 { expr } => ("nf2".into(), json!({"expr": expr}), c::nf2_cmd(expr)),
        Command::Pi { expr } => ("pi".into(), json!({"expr": expr}), c::pi_cmd(expr)),
        Command::A0 { expr } => ("a0".into(), json!({"expr": expr}), c::a0_cmd(expr)),
        Command::Confluence { window } => (
            "confluence".into(),
            json!({"window": window}),
            c::confluence(*window),
        ),
        Command::Pbw { max_len, window } => (
            "pbw".into(),
            json!({"max_len": max_len, "window": window}),
            c::pbw(*max_len, *window),
        ),
        Command::Fock { command } => match command {
            FockCommand::Apply { word, mu } => (
                "fock apply".into(),
                json!({"word": word, "mu": mu}),
                c::parse_mu(mu).and_then(|mu| c::fock_apply(word, &mu)),
            ),
            FockCommand::Duality { max_weight } => (
                "fock duality".into(),
                json!({"max_weight": max_weight}),
                c::fock_duality(*max_weight),
            ),
            FockCommand::Relations {
                window,
                degree,
                mus,
            } => (
                "fock relations".into(),
                json!({"window": window, "degree": degree, "mu": mus}),
                mus.iter()
                    .map(|m| c::parse_mu(m))
                    .collect::<clifflike::Result<Vec<_>>>()
                    .and_then(|mus| c::fock_relations(*window, *degree, &mus)),
            ),
            FockCommand::Omega {
                max_degree,
                window,
                max_len,
            } => (
                "fock omega".into(),
                json!({"max_degree": max_degree, "window": window, "max_len": max_len}),
                c::lemma_omega(*max_degree, *window, *max_len),
            ),
        },
        Command::Gram { degree, mu } => (
            "gram".into(),
            json!({"degree": degree, "mu": mu}),
            c::parse_mu(mu).and_then(|mu| c::gram(*degree, &mu)),
        ),
        Command::Gdim { max, mu } => (
            "gdim".into(),
            json!({"max": max, "mu": mu}),
            c::parse_mu(mu).and_then(|mu| c::gdim(*max, &mu)),
        ),
        Command::Tilde { command } => match command {
            TildeCommand::Verify { energy, window } => (
                "tilde verify".into(),
                json!({"energy": energy, "window": window}),
                c::tilde_verify(*energy, *window),
            ),
            TildeCommand::Sc { u, n, w } => (
                "tilde sc".into(),
                json!({"u": u, "n": n, "w": w}),
                c::parse_letter(u)
                    .and_then(|u| Ok((u, c::parse_letter(w)?)))
                    .and_then(|(u, w)| c::structure_constant(u, *n, w)),
            ),
        },
        Command::Ybe { order } => ("ybe".into(), json!({"order": order}), c::ybe(*order)),
        Command::Suite {
            command: SuiteCommand::All,
        } => ("suite all".into(), json!({}), c::suite_all()),
    }
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::Parse(p) => json!({"kind": "parse", "position": p.position, "message": p.message}),
        Error::ZeroMu => json!({"kind": "zero_mu", "message": e.to_string()}),
        other => json!({"kind": "invalid", "message": other.to_string()}),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, params, outcome) = dispatch(&cli.command);
    let (report, code) = match outcome {
        Ok(Outcome {
            result,
            pass,
            counterexample,
        }) => (
            json!({
                "command": name,
                "params": params,
                "result": result,
                "pass": pass,
                "counterexample": counterexample,
            }),
            if pass { 0 } else { 1 },
        ),
        Err(e) => (
            json!({
                "command": name,
                "params": params,
                "error": error_json(&e),
                "pass": false,
            }),
            2,
        ),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("clifflike: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
