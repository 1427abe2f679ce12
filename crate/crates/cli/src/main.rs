use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = gnk_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr(), &mut io::stdin());
    ExitCode::from(code as u8)
}
