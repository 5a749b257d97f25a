//! `ratseries [flags] "<expression>"`: evaluate one expression and print it.

use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use ratseries::syntax::{evaluate, render, EvalOptions, ExprError, Format};
use ratseries::Mode;

/// Evaluate an expression over exact rational series.
///
/// `*` is the Cauchy product, `#` the Hadamard product. Available functions:
/// d(e), x(e), diag(k, e), dilate(c, e), coeff(e, n), expand(e, N), no("word").
#[derive(Parser, Debug)]
#[command(name = "ratseries", version)]
struct Args {
    /// Series mode: power or laurent.
    #[arg(long, default_value = "power")]
    mode: Mode,

    /// Output format: text, latex or json.
    #[arg(long, default_value = "text")]
    format: Format,

    /// Window length used by expand(e) when no length is given.
    #[arg(long = "truncate", default_value_t = ratseries::DEFAULT_DEPTH, value_name = "N")]
    depth: usize,

    /// Expression to evaluate; read from standard input when absent.
    expression: Option<String>,
}

fn exit_code(err: &ExprError) -> u8 {
    if err.is_syntax() {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            // usage problems share the syntax-error code so that 2 stays unambiguous
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let input = match args.expression {
        Some(s) => s,
        None => {
            let mut s = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut s) {
                eprintln!("ratseries: cannot read standard input: {e}");
                return ExitCode::from(1);
            }
            s
        }
    };
    let opts = EvalOptions {
        mode: args.mode,
        depth: args.depth,
    };
    match evaluate(input.trim(), &opts) {
        Ok(v) => {
            let out = render(&v, args.format);
            if out.ends_with('\n') {
                print!("{out}");
            } else {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ratseries: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
