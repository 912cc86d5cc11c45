use std::process::ExitCode;

fn main() -> ExitCode {
    qcert::cli::main_with(std::env::args_os())
}
