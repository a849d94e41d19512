fn main() {
    std::process::exit(tqnet::cli::run(std::env::args_os()));
}
