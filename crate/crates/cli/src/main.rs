fn main() {
    std::process::exit(wonderkit_cli::run(std::env::args_os()));
}
