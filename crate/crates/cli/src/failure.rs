use std::fmt;
use std::process::ExitCode;

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const GENERAL: u8 = 1;
pub const PARSE: u8 = 2;
pub const COLLINEARITY: u8 = 3;
pub const SHARED_CLASS: u8 = 4;
pub const ORACLE_DISAGREES: u8 = 5;

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(PARSE, message)
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<clifflag::Error> for Failure {
    fn from(e: clifflag::Error) -> Self {
        use clifflag::Error::*;
        let code = match e {
            Parse { .. }
            | SignatureTooLarge { .. }
            | SignatureMismatch { .. }
            | BadLength { .. }
            | LengthMismatch { .. } => PARSE,
            CollinearityViolated { .. } => COLLINEARITY,
            MultiPointClassInR03 { .. } => SHARED_CLASS,
            _ => GENERAL,
        };
        Failure::new(code, e.to_string())
    }
}
