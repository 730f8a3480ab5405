use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, stdout, stderr) = stargeo_cli::dispatch::run(&args);
    if !stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(stdout.as_bytes());
        let _ = out.flush();
    }
    if !stderr.is_empty() {
        let mut err = std::io::stderr().lock();
        let _ = err.write_all(stderr.as_bytes());
        let _ = err.flush();
    }
    std::process::exit(code);
}
