fn main() {
    std::process::exit(partition_lab_cli::run(std::env::args_os()));
}
