use std::io;

fn main() {
    let code = afsimplex::cli::cli_main(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
