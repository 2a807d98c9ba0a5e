use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = triples_hodge::cli::dispatch(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
