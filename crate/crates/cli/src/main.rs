use clap::Parser;

fn main() {
    let cli = monocycle_cli::Cli::parse();
    std::process::exit(monocycle_cli::run(cli));
}
