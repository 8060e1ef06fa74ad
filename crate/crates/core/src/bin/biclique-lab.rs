fn main() {
    std::process::exit(biclique_lab::cli::main());
}
