use std::process::ExitCode;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use xcomplex::Error;

use crate::input::{Input, ParseError};

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// Why a command stopped, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
    pub position: Option<(usize, usize)>,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, kind: "input", message: message.into(), position: None }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INTERNAL, kind: "internal", message: message.into(), position: None }
    }

    pub fn validation(e: Error) -> Self {
        let mut f = Failure::from(e);
        if f.code == EXIT_INPUT {
            f.code = EXIT_VALIDATION;
            f.kind = "validation";
        }
        f
    }

    /// A validation failure already described in the result payload.
    pub fn validation_quiet() -> Self {
        Failure { code: EXIT_VALIDATION, kind: "validation", message: "validation failed".into(), position: None }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let position = (e.line > 0).then_some((e.line, e.column));
        Failure { code: EXIT_INPUT, kind: "parse", message: e.to_string(), position }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::InvalidComplex(_)
            | Error::InvalidPresentation(_)
            | Error::NoIdentityAtZero { .. }
            | Error::MissingInverse { .. }
            | Error::NotAssociative { .. }
            | Error::EmptyGroup
            | Error::NotSubgroup(_)
            | Error::NotNormal { .. } => (EXIT_VALIDATION, "validation"),
            Error::ResultTooLarge { .. } | Error::InstanceTooLarge { .. } => (EXIT_CAP, "cap"),
            Error::TargetNotMorphism(_) | Error::CrossCheckFailed(_) => (EXIT_INTERNAL, "internal"),
            Error::MalformedTable { .. }
            | Error::DimensionMismatch(_)
            | Error::IndexOutOfRange(_)
            | Error::InvalidArgument(_) => (EXIT_INPUT, "input"),
        };
        Failure { code, kind, message: e.to_string(), position: None }
    }
}

#[derive(Serialize)]
struct InputHash {
    role: String,
    source: String,
    sha256: String,
}

/// The JSON document printed on stdout. Apart from `timing_ms` it is a pure
/// function of the inputs and flags.
#[derive(Serialize)]
pub struct RunReport {
    command: Value,
    inputs: Vec<InputHash>,
    ok: bool,
    exit_code: u8,
    result: Value,
    error: Value,
    timing_ms: u128,
    version: &'static str,
    #[serde(skip)]
    summary: Vec<String>,
}

impl RunReport {
    pub fn new(command: Value) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            ok: false,
            exit_code: 0,
            result: Value::Null,
            error: Value::Null,
            timing_ms: 0,
            version: env!("CARGO_PKG_VERSION"),
            summary: Vec::new(),
        }
    }

    pub fn input(&mut self, role: &str, i: &Input) {
        self.inputs.push(InputHash { role: role.into(), source: i.origin.clone(), sha256: i.sha256.clone() });
    }

    pub fn result(&mut self, v: Value) {
        self.result = v;
    }

    pub fn summary(&mut self, line: String) {
        self.summary.push(line);
    }

    pub fn finish(mut self, outcome: Result<(), Failure>, elapsed: Duration) -> ExitCode {
        self.timing_ms = elapsed.as_millis();
        match outcome {
            Ok(()) => self.ok = true,
            Err(f) => {
                self.exit_code = f.code;
                let mut error = json!({ "kind": f.kind, "message": f.message });
                if let Some((line, column)) = f.position {
                    error["line"] = json!(line);
                    error["column"] = json!(column);
                }
                self.summary.push(format!("error ({}): {}", f.kind, f.message));
                self.error = error;
            }
        }
        for line in &self.summary {
            eprintln!("{line}");
        }
        match serde_json::to_string_pretty(&self) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("could not serialise report: {e}");
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        ExitCode::from(self.exit_code)
    }
}
