fn main() {
    std::process::exit(apostol_kit_cli::run(std::env::args_os()));
}
