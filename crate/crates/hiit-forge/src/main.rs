fn main() {
    std::process::exit(hiit_forge::cli::run(std::env::args_os()));
}
