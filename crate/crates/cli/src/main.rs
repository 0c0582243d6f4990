use clap::Parser;

fn main() {
    let cli = covosc_cli::Cli::parse();
    std::process::exit(covosc_cli::execute(cli));
}
