fn main() {
    std::process::exit(colorfix::cli::main());
}
