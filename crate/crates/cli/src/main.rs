use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use planar_monoid_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = configure_pool(cli.jobs).and_then(|()| run(&cli.command));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            let _ = std::io::stdout().flush();
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn configure_pool(jobs: Option<usize>) -> Result<(), CliError> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    Ok(())
}
