use std::process::ExitCode;

fn main() -> ExitCode {
    orbifold_vertex::cli::main_with_args(std::env::args_os())
}
