use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = quiver_tensor::cli::run_args(std::env::args_os().skip(1));
    let _ = writeln!(std::io::stdout().lock(), "{}", outcome.render());
    ExitCode::from(outcome.code as u8)
}
