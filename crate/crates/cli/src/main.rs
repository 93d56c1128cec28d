fn main() {
    std::process::exit(defminer_cli::run(std::env::args_os()));
}
