use std::process::ExitCode;

fn main() -> ExitCode {
    stokeslab::cli::run(std::env::args_os())
}
