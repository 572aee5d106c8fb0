fn main() {
    std::process::exit(nsalg::cli::run(std::env::args()));
}
