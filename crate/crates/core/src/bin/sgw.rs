fn main() {
    std::process::exit(sgw::cli::run());
}
