fn main() {
    std::process::exit(wreath_lab::cli::main());
}
