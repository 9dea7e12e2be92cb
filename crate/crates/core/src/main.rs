fn main() {
    std::process::exit(regulus::cli::run());
}
