fn main() {
    std::process::exit(eocalc::cli::main_with_env());
}
