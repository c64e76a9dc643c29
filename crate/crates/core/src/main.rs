use clap::Parser;
use qconvolve::cli::{self, Cli};

fn main() {
    let parsed = Cli::parse();
    if let Err(msg) = cli::configure_threads() {
        eprintln!("error: {msg}");
        std::process::exit(cli::EXIT_USAGE);
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = cli::run(parsed, &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
