use std::process::ExitCode;

fn main() -> ExitCode {
    sector_metrics::cli::main_with_args(std::env::args_os()).into()
}
