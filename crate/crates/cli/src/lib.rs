//! Library side of the `ccmap` command: each subcommand returns its report
//! text and an exit code.

pub mod cache;
pub mod commands;
pub mod experiment;

pub const EXIT_OK: i32 = 0;
/// The claim under test is false (no mapping, property does not hold).
pub const EXIT_CLAIM_FAILS: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn input(message: String) -> Self {
        CliError { message, code: EXIT_INPUT }
    }
}

impl From<ccmap::Error> for CliError {
    fn from(e: ccmap::Error) -> Self {
        use ccmap::Error::*;
        let code = match e {
            Disagreement(_) => 1,
            _ => EXIT_INPUT,
        };
        CliError { message: e.to_string(), code }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}
