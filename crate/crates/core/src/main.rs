fn main() { std::process::exit(qvenn::cli::run(std::env::args())); }
