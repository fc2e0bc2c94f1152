use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use symcycle::io::{read_portrait, write_portrait, Format};
use symcycle::{
    brute_force_decompose, decode, decompose, encode_matrix, encode_vector, encode_vector_reader,
    Mode, Portrait, SignVector, ORACLE_MAX_DIMENSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Encode,
    Decode,
    Stats,
    Verify,
    Oracle,
}

#[derive(Debug, Clone)]
pub struct OracleParams {
    pub t: Option<u64>,
    pub pattern: String,
}

#[derive(Debug, Clone)]
pub struct CommandConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub mode: Mode,
    pub format: Format,
    pub oracle: Option<OracleParams>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
    Invalid(symcycle::Error),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Invalid(e) => write!(f, "{e}"),
            CliError::Mismatch(m) => write!(f, "mismatch: {m}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<symcycle::Error> for CliError {
    fn from(e: symcycle::Error) -> Self {
        match e {
            symcycle::Error::Io(io) => CliError::Io(io),
            other => CliError::Invalid(other),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn read_input(cfg: &CommandConfig) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    match &cfg.input {
        Some(path) => File::open(path)?.read_to_end(&mut buf)?,
        None => io::stdin().lock().read_to_end(&mut buf)?,
    };
    Ok(buf)
}

fn open_output(cfg: &CommandConfig) -> CliResult<Box<dyn Write>> {
    Ok(match &cfg.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn encode_input(cfg: &CommandConfig) -> CliResult<Portrait> {
    match cfg.mode {
        Mode::Matrix => Ok(encode_matrix(&read_input(cfg)?)?),
        Mode::Vector => match &cfg.input {
            Some(path) => {
                let file = File::open(path)?;
                let len = file.metadata()?.len();
                Ok(encode_vector_reader(file, Some(len))?)
            }
            None => Ok(encode_vector_reader(io::stdin().lock(), None)?),
        },
    }
}

pub fn run(cfg: &CommandConfig) -> CliResult {
    match cfg.command {
        Command::Encode => {
            let p = encode_input(cfg)?;
            let mut out = open_output(cfg)?;
            write_portrait(&p, cfg.format, &mut out)?;
            out.flush()?;
        }
        Command::Decode => {
            let p = read_portrait(&read_input(cfg)?)?;
            let bytes = decode(&p)?;
            let mut out = open_output(cfg)?;
            out.write_all(&bytes)?;
            out.flush()?;
        }
        Command::Stats => {
            let p = read_portrait(&read_input(cfg)?)?;
            let stats = p.stats();
            let mut out = open_output(cfg)?;
            write!(out, "{stats}")?;
            writeln!(
                out,
                "within bounds: {}",
                if stats.within_bounds() { "yes" } else { "no" }
            )?;
            out.flush()?;
        }
        Command::Verify => verify(cfg)?,
        Command::Oracle => oracle(cfg)?,
    }
    Ok(())
}

fn verify(cfg: &CommandConfig) -> CliResult {
    let data = read_input(cfg)?;
    let p = match cfg.mode {
        Mode::Matrix => encode_matrix(&data)?,
        Mode::Vector => encode_vector(&data)?,
    };
    let mut serialized = Vec::new();
    write_portrait(&p, cfg.format, &mut serialized)?;
    let restored = decode(&read_portrait(&serialized)?)?;
    let mut out = open_output(cfg)?;
    if restored == data {
        writeln!(
            out,
            "PASS {} bytes, mode {}, format {}, weight {}",
            data.len(),
            cfg.mode,
            cfg.format,
            p.weight()
        )?;
        out.flush()?;
        Ok(())
    } else {
        let at = restored
            .iter()
            .zip(&data)
            .position(|(a, b)| a != b)
            .unwrap_or(restored.len().min(data.len()));
        writeln!(out, "FAIL first difference at byte {at}")?;
        out.flush()?;
        Err(CliError::Mismatch(format!("decoded bytes differ at {at}")))
    }
}

fn oracle(cfg: &CommandConfig) -> CliResult {
    let params = cfg
        .oracle
        .as_ref()
        .ok_or_else(|| CliError::Usage("oracle needs --pattern".into()))?;
    let v: SignVector = params
        .pattern
        .parse()
        .map_err(|e: symcycle::Error| CliError::Usage(e.to_string()))?;
    if let Some(t) = params.t {
        if t != v.dim() {
            return Err(CliError::Usage(format!(
                "--t {t} does not match pattern length {}",
                v.dim()
            )));
        }
    }
    if v.dim() > ORACLE_MAX_DIMENSION {
        return Err(CliError::Usage(format!(
            "oracle dimension {} exceeds {ORACLE_MAX_DIMENSION}",
            v.dim()
        )));
    }
    let slow = brute_force_decompose(&v)?;
    let fast = decompose(&v);
    let join = |s: &[u64]| s.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut out = open_output(cfg)?;
    writeln!(out, "t: {}", v.dim())?;
    writeln!(out, "pattern: {v}")?;
    writeln!(out, "oracle: {}", join(slow.indices()))?;
    writeln!(out, "fast: {}", join(fast.indices()))?;
    writeln!(out, "agree: {}", if slow == fast { "yes" } else { "no" })?;
    out.flush()?;
    if slow != fast {
        return Err(CliError::Mismatch(
            "oracle and fast decomposition differ".into(),
        ));
    }
    Ok(())
}
