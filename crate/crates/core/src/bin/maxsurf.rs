fn main() {
    std::process::exit(maxsurf::cli::main_with_args(std::env::args_os()));
}
