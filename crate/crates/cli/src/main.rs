mod cli;
mod dto;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use cli::{request_args, run, Cli, Failure};

fn render(value: &Value, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(value).expect("json values serialize")
    } else {
        serde_json::to_string(value).expect("json values serialize")
    };
    text.push('\n');
    text
}

fn execute(cli: &Cli) -> Result<Value, Failure> {
    match (&cli.request, &cli.command) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either a subcommand or --request, not both".into())),
        (None, None) => Err(Failure::Usage("a subcommand or --request is required".into())),
        (None, Some(command)) => run(command),
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let request: Value =
                serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let inner = Cli::try_parse_from(request_args(&request)?).map_err(|e| Failure::Usage(e.to_string()))?;
            match &inner.command {
                Some(command) if inner.request.is_none() => run(command),
                _ => Err(Failure::Usage("request must name one subcommand".into())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match execute(&cli) {
        Ok(v) => (v, 0),
        Err(f) => (f.to_json(), f.exit_code()),
    };
    let text = render(&value, cli.pretty);
    match &cli.output {
        Some(path) if code == 0 => {
            if let Err(e) = fs::write(path, &text) {
                let f = Failure::Input(format!("{}: {e}", path.display()));
                print!("{}", render(&f.to_json(), cli.pretty));
                return ExitCode::from(1);
            }
        }
        _ => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
