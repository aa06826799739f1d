fn main() {
    std::process::exit(superjack::cli::run(std::env::args().collect()));
}
