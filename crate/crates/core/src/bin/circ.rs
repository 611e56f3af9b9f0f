fn main() {
    std::process::exit(circulant_critical::cli::run_from_env());
}
