use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let code = cli::run(&args, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    ExitCode::from(code)
}
