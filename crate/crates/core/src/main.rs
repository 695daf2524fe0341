use clap::Parser;
use protrusionkit::cli::{run, Cli, Command};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(&cli, &argv) {
        Ok((report, code)) => {
            match &cli.command {
                Command::Generate(a) if a.output.is_none() => {
                    print!("{}", report.answer["graph"].as_str().unwrap_or_default());
                }
                Command::Bench(a) if a.output.is_none() => {
                    print!("{}", report.answer["csv"].as_str().unwrap_or_default());
                }
                _ => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
