fn main() {
    std::process::exit(rols::cli::run(std::env::args_os()));
}
