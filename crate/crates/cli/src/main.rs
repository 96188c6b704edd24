use std::any::Any;
use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use qhankel::{run, Cli};

fn panic_message(payload: &(dyn Any + Send)) -> &str {
    payload
        .downcast_ref::<&str>()
        .copied()
        .or_else(|| payload.downcast_ref::<String>().map(String::as_str))
        .unwrap_or("unknown panic")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    panic::set_hook(Box::new(|info| {
        eprintln!("error: arithmetic failure: {}", panic_message(info.payload()));
    }));
    let result = panic::catch_unwind(|| {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let r = run(&cli, &mut out);
        out.flush().map_err(qhankel::CliError::from).and(r)
    });
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(3),
    }
}
