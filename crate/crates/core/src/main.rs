fn main() { std::process::exit(polyprod::cli::main()) }
