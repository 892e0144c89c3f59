//! Script runner for Rees algebra computations.
//!
//! A script declares rings, ideals, quotients, modules and maps, one per
//! line, followed by commands:
//!
//! ```text
//! ring P = poly(GF(3), [x, y, z], order=grevlex)
//! ideal A = ideal(x^3, y^3)
//! ideal V = ideal(x, y, z)
//! ideal B = power(V, 4)
//! ideal I = sum(A, B)
//! quotient R = P / I
//! module M = submodule(R, [z])
//! map g2 = map(M, rank=2, rows=[[x, y]])
//! kdim M
//! hilb g2 3
//! ```

pub mod lexer;
pub mod parser;
pub mod report;
pub mod session;

use thiserror::Error;

pub use parser::{parse_script, Script};
pub use report::{emit, parse_machine, Format, Payload, Report, RunReport, Status};
pub use session::{RunOptions, Session};

/// Syntax, name or type error, with the position of the offending token.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub message: String,
}

/// Failure while evaluating a binding.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct DomainError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] DomainError),
}

impl RunError {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Parse(_) => 2,
            RunError::Domain(_) => 1,
        }
    }
}

/// Parses, evaluates and runs a script. Command failures are recorded in
/// the returned reports.
pub fn run_script(text: &str, opts: &RunOptions) -> Result<RunReport, RunError> {
    let script = parse_script(text)?;
    let session = Session::build(&script, opts)?;
    Ok(session.run_all(&script, opts))
}
