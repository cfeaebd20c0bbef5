fn main() {
    std::process::exit(relent::cli::run());
}
