fn main() {
    std::process::exit(rxsurf_cli::run(std::env::args_os()));
}
