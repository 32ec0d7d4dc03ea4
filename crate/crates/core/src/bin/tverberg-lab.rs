fn main() {
    std::process::exit(tverberg_lab::cli::main());
}
