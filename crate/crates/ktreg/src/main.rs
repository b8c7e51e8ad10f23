use clap::Parser;

use ktreg::cli::{execute, render_text, Cli};

fn main() {
    let cli = Cli::parse();
    let report = execute(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_text(&report));
    }
    std::process::exit(report.exit_code());
}
