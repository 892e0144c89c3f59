use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use reeskernel::{emit, run_script, Format, Payload, RunOptions};
use reeskernel_core::MonomialOrder;

#[derive(Parser)]
#[command(name = "reeskernel", version, about = "Run Rees algebra scripts")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script and print one result per command.
    Run {
        script: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Degree bound for integrality searches.
        #[arg(long, default_value_t = 10)]
        maxdeg: u32,
        /// Order for rings declared without one.
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        /// Record wall time per command.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

fn main() -> ExitCode {
    let Cmd::Run {
        script,
        format,
        maxdeg,
        order,
        timing,
    } = Cli::parse().command;
    let text = match std::fs::read_to_string(&script) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", script.display());
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        maxdeg,
        order: match order {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        },
        timing,
    };
    let run = match run_script(&text, &opts) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("error: {}: {e}", script.display());
            return ExitCode::from(e.exit_code());
        }
    };
    let format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    print!("{}", emit(&run, format));
    let mut failed = false;
    for r in &run.reports {
        if let Payload::Error { message } = &r.payload {
            eprintln!("error: {}: {message}", script.display());
            failed = true;
        }
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
