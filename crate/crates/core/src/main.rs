use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(liegrowth::cli::dispatch(std::env::args_os()) as u8)
}
