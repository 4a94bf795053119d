fn main() {
    std::process::exit(sl2zeta::cli::run());
}
