fn main() {
    std::process::exit(rhobound::cli::run(std::env::args_os()));
}
