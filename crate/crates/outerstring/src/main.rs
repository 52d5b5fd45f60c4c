use clap::Parser;

fn main() {
    let cli = outerstring::cli::Cli::parse();
    std::process::exit(outerstring::cli::run(cli));
}
