use std::io::{BufReader, IsTerminal};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdin = std::io::stdin();
    let interactive = stdin.is_terminal() && std::io::stdout().is_terminal();
    let mut reader = BufReader::new(stdin.lock());
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = linkalg_cli::run(&argv, &mut reader, &mut stdout, &mut stderr, interactive);
    std::process::exit(code.into());
}
