//! Runs a subcommand in-process and prints its structured certificate.

use equivkit::cli;

fn main() {
    let cmd = std::env::args().nth(1).unwrap_or_else(|| "dp4-obstruction".into());
    let code = cli::run(["equivkit", cmd.as_str(), "--format", "structured"]);
    eprintln!("exit code {code}");
}
