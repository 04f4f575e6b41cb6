//! `sigbasis`: Gröbner bases over prime fields from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use sigbasis::{ModuleOrderKind, MonomialOrder, SelectionStrategy};

#[derive(Parser, Debug)]
#[command(
    name = "sigbasis",
    version,
    about = "Signature-based Gröbner bases, FGLM and friends over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a Gröbner basis of the ideal in an input file.
    Gb(GbArgs),
    /// Change the order of a zero-dimensional ideal's Gröbner basis.
    Fglm(FglmArgs),
    /// Check that a basis file is a Gröbner basis of the input ideal.
    Verify(VerifyArgs),
    /// List minimal syzygy signatures found by degree-bounded linear algebra.
    Enumerate(EnumerateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Gvw,
    Buchberger,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grlex => MonomialOrder::Grlex,
            OrderArg::Grevlex => MonomialOrder::Grevlex,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SigOrderArg {
    Pot,
    Top,
    Schreyer,
}

impl From<SigOrderArg> for ModuleOrderKind {
    fn from(o: SigOrderArg) -> Self {
        match o {
            SigOrderArg::Pot => ModuleOrderKind::Pot,
            SigOrderArg::Top => ModuleOrderKind::Top,
            SigOrderArg::Schreyer => ModuleOrderKind::Schreyer,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SelectArg {
    MinSig,
    MinDegree,
    Fifo,
}

impl From<SelectArg> for SelectionStrategy {
    fn from(s: SelectArg) -> Self {
        match s {
            SelectArg::MinSig => SelectionStrategy::MinSig,
            SelectArg::MinDegree => SelectionStrategy::MinDegree,
            SelectArg::Fifo => SelectionStrategy::Fifo,
        }
    }
}

#[derive(Args, Debug)]
struct GbArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Gvw)]
    algo: Algo,
    /// Overrides the order given in the file.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    #[arg(long, value_enum, default_value_t = SigOrderArg::Schreyer)]
    sig_order: SigOrderArg,
    #[arg(long = "select", value_enum, default_value_t = SelectArg::MinSig)]
    select: SelectArg,
    /// Print syzygy leading monomials (and vectors with --track-vectors).
    #[arg(long)]
    syzygies: bool,
    /// Maintain module vectors during the run and audit them afterwards.
    #[arg(long)]
    track_vectors: bool,
    /// Print the statistics block.
    #[arg(long)]
    stats: bool,
    /// Interreduce the output.
    #[arg(long, action = ArgAction::Set, default_value_t = true)]
    reduced: bool,
    #[arg(long, default_value_t = 1_000_000)]
    step_limit: usize,
    /// Buchberger without the product and chain criteria.
    #[arg(long)]
    no_criteria: bool,
    /// GVW: seed the syzygy set with principal syzygies only.
    #[arg(long)]
    principal_only: bool,
}

#[derive(Args, Debug)]
struct FglmArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    to: OrderArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    input: PathBuf,
    basis: PathBuf,
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    input: PathBuf,
    #[arg(long)]
    deg_bound: u32,
    #[arg(long, value_enum, default_value_t = SigOrderArg::Schreyer)]
    sig_order: SigOrderArg,
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gb(a) => commands::gb(&commands::GbOptions {
            input: a.input,
            algo_gvw: a.algo == Algo::Gvw,
            order: a.order.map(Into::into),
            sig_order: a.sig_order.into(),
            strategy: a.select.into(),
            syzygies: a.syzygies,
            track_vectors: a.track_vectors,
            stats: a.stats,
            reduced: a.reduced,
            step_limit: a.step_limit,
            criteria: !a.no_criteria,
            pair_syzygies: !a.principal_only,
        }),
        Command::Fglm(a) => commands::fglm(&a.input, a.to.into()),
        Command::Verify(a) => commands::verify(&a.input, &a.basis, a.order.map(Into::into)),
        Command::Enumerate(a) => {
            commands::enumerate(&a.input, a.deg_bound, a.sig_order.into(), a.order.map(Into::into))
        }
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
