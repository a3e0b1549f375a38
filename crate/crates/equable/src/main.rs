use clap::{CommandFactory, Parser, Subcommand};
use equable::cli::{self, TreeFormat};
use equable::pell::Family;
use equable::{GcdClass, Nat};
use num::Zero;
use std::path::PathBuf;
use std::process::ExitCode;

/// Certify, classify, enumerate, and draw lattice equable parallelograms.
#[derive(Parser)]
#[command(name = "equable", version)]
struct Cli {
    /// Emit machine-readable JSON (always on; accepted for compatibility).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a side pair and report its full classification
    Check { a: Nat, b: Nat },
    /// Enumerate one solution tree up to a side-sum bound
    Tree {
        /// Which tree: the common divisor of the sides
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        gcd: u8,
        /// Largest side sum to include (at least 9)
        #[arg(long)]
        max_sum: Nat,
        /// Output format
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
    },
    /// List partner sides along the branch with the first side fixed
    Branch { a: Nat, b0: Nat, count: usize },
    /// List solutions of one Pell family and the sides they yield
    Pell { family: Family, count: usize },
    /// List every equable triangle with integer sides
    Triangles,
    /// Draw a certified pair on the integer lattice
    Realize {
        a: Nat,
        b: Nat,
        /// Report one drawing per lattice-equivalence class
        #[arg(long)]
        all_classes: bool,
    },
    /// Write an SVG figure of a certified pair
    Render {
        a: Nat,
        b: Nat,
        /// Output file
        #[arg(long)]
        out: PathBuf,
    },
}

fn usage_error(message: &str) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::InvalidValue, message)
        .exit()
}

fn require_positive(sides: &[&Nat]) {
    if sides.iter().any(|n| n.is_zero()) {
        usage_error("side lengths must be positive");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { a, b } => {
            require_positive(&[&a, &b]);
            cli::cmd_check(&a, &b)
        }
        Command::Tree {
            gcd,
            max_sum,
            format,
        } => {
            if max_sum < Nat::from(9u32) {
                usage_error("--max-sum must be at least 9");
            }
            let class = GcdClass::from_gcd(&Nat::from(gcd)).expect("gcd is 3, 4, or 5");
            cli::cmd_tree(class, &max_sum, format)
        }
        Command::Branch { a, b0, count } => {
            require_positive(&[&a, &b0]);
            cli::cmd_branch(&a, &b0, count)
        }
        Command::Pell { family, count } => cli::cmd_pell(family, count),
        Command::Triangles => cli::cmd_triangles(),
        Command::Realize { a, b, all_classes } => {
            require_positive(&[&a, &b]);
            cli::cmd_realize(&a, &b, all_classes)
        }
        Command::Render { a, b, out } => {
            require_positive(&[&a, &b]);
            let rendered = cli::cmd_render(&a, &b, &out.display().to_string());
            if let Some(svg) = rendered.svg {
                if let Err(err) = std::fs::write(&out, svg) {
                    eprintln!("error: cannot write {}: {err}", out.display());
                    return ExitCode::from(1);
                }
            }
            rendered.report
        }
    };
    print!("{}", outcome.stdout);
    ExitCode::from(outcome.exit_code as u8)
}
