use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{run, Command, CommandConfig, OracleParams};

#[derive(Debug, Parser)]
#[command(
    name = "symcycle",
    version,
    about = "Encode bytes as symmetric-cycle portraits and back"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Input file (stdin when omitted)
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output file (stdout when omitted)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Vector)]
    mode: ModeArg,

    /// Portrait encoding to write; readers detect the format themselves
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Bytes to portrait
    Encode,
    /// Portrait to bytes
    Decode,
    /// Weight and bounds of a portrait
    Stats,
    /// Encode, serialize, parse and decode the input, then compare
    Verify,
    /// Brute-force decomposition of a short sign pattern, checked against the fast path
    Oracle {
        #[arg(long)]
        t: Option<u64>,
        /// Sign pattern over {+,-}, e.g. +-+
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Matrix,
    Vector,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Binary,
}

impl From<Cli> for CommandConfig {
    fn from(cli: Cli) -> Self {
        let (command, oracle) = match cli.command {
            Cmd::Encode => (Command::Encode, None),
            Cmd::Decode => (Command::Decode, None),
            Cmd::Stats => (Command::Stats, None),
            Cmd::Verify => (Command::Verify, None),
            Cmd::Oracle { t, pattern } => (Command::Oracle, Some(OracleParams { t, pattern })),
        };
        CommandConfig {
            command,
            input: cli.input,
            output: cli.output,
            mode: match cli.mode {
                ModeArg::Matrix => symcycle::Mode::Matrix,
                ModeArg::Vector => symcycle::Mode::Vector,
            },
            format: match cli.format {
                FormatArg::Text => symcycle::Format::Text,
                FormatArg::Binary => symcycle::Format::Binary,
            },
            oracle,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let config = CommandConfig::from(cli);
    match run(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("symcycle: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
