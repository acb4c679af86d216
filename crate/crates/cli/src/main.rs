use std::io::Write;

fn main() {
    let outcome = hullcoh_cli::run_args(std::env::args_os());
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(outcome.output.as_bytes());
    let _ = out.flush();
    std::process::exit(outcome.exit_code);
}
