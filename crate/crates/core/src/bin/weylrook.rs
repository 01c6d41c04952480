use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weylrook::cli::{self, BinomialMethod, Document, Format, Method};
use weylrook::Result;

/// Normal ordering in the Weyl algebra and its q-, c- and U^i-deformations.
#[derive(Parser)]
#[command(name = "weylrook", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order an expression such as "(D+U)^3" or "2 (UD)^2 + DU".
    NormalOrder {
        expr: String,
        /// Use DU = q UD + c with a symbolic q.
        #[arg(long = "q")]
        q: bool,
        /// Commutator scalar, an integer or "p/q".
        #[arg(long = "c", allow_hyphen_values = true)]
        c: Option<String>,
        /// Commutator power of U, giving DU - UD = c U^i.
        #[arg(long = "i", default_value_t = 0)]
        i: u32,
        #[arg(long, value_enum, default_value_t = Method::Rook)]
        method: Method,
    },
    /// Print the column heights of the Ferrers board outlined by a word.
    Board { word: String },
    /// Rook numbers of a board given as comma-separated heights.
    RookNumbers {
        heights: String,
        /// q-rook numbers (inversion-weighted).
        #[arg(long = "q")]
        q: bool,
        /// Rook numbers under the i-row creation rule.
        #[arg(long = "i", default_value_t = 0)]
        i: u32,
    },
    /// Coefficient of U^(n-m-k) D^(m-k) in (D+U)^n.
    WeylBinomial {
        n: usize,
        m: usize,
        k: usize,
        #[arg(long = "q")]
        q: bool,
        #[arg(long, value_enum)]
        method: Option<BinomialMethod>,
    },
    /// Generalized Stirling number S_{r,s}(n, k).
    Stirling {
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "s")]
        s: usize,
        n: usize,
        k: usize,
    },
}

fn run(command: Command) -> Result<Document> {
    match command {
        Command::NormalOrder {
            expr,
            q,
            c,
            i,
            method,
        } => {
            let params = cli::params_from_flags(q, c.as_deref(), i)?;
            cli::cmd_normal_order(&expr, &params, method)
        }
        Command::Board { word } => cli::cmd_board(&word),
        Command::RookNumbers { heights, q, i } => cli::cmd_rook_numbers(&heights, q, i),
        Command::WeylBinomial { n, m, k, q, method } => cli::cmd_weyl_binomial(n, m, k, q, method),
        Command::Stirling { r, s, n, k } => cli::cmd_stirling(r, s, n, k),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(doc) => {
            println!("{}", doc.render(args.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
