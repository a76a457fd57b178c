fn main() {
    std::process::exit(debranges::cli::run(std::env::args_os()));
}
