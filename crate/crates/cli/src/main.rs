fn main() {
    std::process::exit(riderlab_cli::run(std::env::args_os()));
}
