use clap::Parser;

fn main() {
    let cli = chowkit::Cli::parse();
    match chowkit::run(&cli) {
        Ok(doc) => print!("{}", doc),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}
