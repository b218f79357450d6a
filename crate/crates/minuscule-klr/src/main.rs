use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(minuscule_klr::cli::run(std::env::args()) as u8)
}
