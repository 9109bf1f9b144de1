fn main() {
    std::process::exit(wnlink::cli::run(std::env::args()));
}
