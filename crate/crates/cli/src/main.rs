mod args;
mod commands;
mod error;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    let mut out = std::io::stdout().lock();
    let code = match commands::run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fibhess: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
