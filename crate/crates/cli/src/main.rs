//! `homalg`: verify Hom-structures, compute actions and print twisted tables.

mod commands;
mod failure;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use homalg::scalars::{parse_rational, Rational};
use homalg::AxiomId;

#[derive(Parser)]
#[command(
    name = "homalg",
    version,
    about = "Exact checks of Hom-associative structures and module Hom-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an axiom suite; exit 0 iff every identity holds.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Apply a U(sl2) element to a polynomial in x, y.
    Act(ActArgs),
    /// Print twisted product and coproduct tables on a basis.
    Twist {
        #[command(subcommand)]
        kind: TwistKind,
    },
    /// List axiom identifiers accepted by `--axiom`.
    Axioms,
}

#[derive(Subcommand)]
enum VerifyKind {
    /// U(sl2) acting on k[x,y], twisted by α_A(x)=q²x, α_A(y)=qy.
    #[command(name = "sl2-q")]
    Sl2Q {
        #[command(flatten)]
        bounds: Bounds,
        /// Use α_H instead of α_H² in the module Hom-algebra identity.
        #[arg(long)]
        negative_control: bool,
        #[command(flatten)]
        q: QValue,
        #[command(flatten)]
        output: Output,
    },
    /// A finite-dimensional scenario file, or the name of a builtin one.
    Finalg {
        /// Path to a scenario file, or `m2-example`.
        #[arg(long)]
        file: String,
        #[command(flatten)]
        output: Output,
    },
    /// The sl2 action on k[x,y] twisted by user-supplied structure maps.
    Custom {
        #[command(flatten)]
        bounds: Bounds,
        /// Image of x under α_A.
        #[arg(long, default_value = "x")]
        alpha_x: String,
        /// Image of y under α_A.
        #[arg(long, default_value = "y")]
        alpha_y: String,
        /// Image of X under α_L.
        #[arg(long = "alpha-lx", default_value = "X")]
        alpha_lx: String,
        /// Image of Y under α_L.
        #[arg(long = "alpha-ly", default_value = "Y")]
        alpha_ly: String,
        /// Image of Z under α_L.
        #[arg(long = "alpha-lz", default_value = "Z")]
        alpha_lz: String,
        #[command(flatten)]
        q: QValue,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum TwistKind {
    /// μ_α and Δ_α of U(sl2)_α on PBW monomials.
    #[command(name = "sl2-q")]
    Sl2Q {
        /// Largest PBW degree in the tables.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=4))]
        bound: u32,
        /// Twist by the identity instead.
        #[arg(long)]
        identity: bool,
        #[command(flatten)]
        q: QValue,
    },
    /// μ_α on a scenario algebra and Δ on its group bialgebra.
    Finalg {
        /// Path to a scenario file, or `m2-example`.
        #[arg(long)]
        file: String,
        /// Twist by the identity instead.
        #[arg(long)]
        identity: bool,
    },
}

#[derive(Args)]
struct ActArgs {
    /// Element of U(sl2), e.g. `X^2 Y - q*Z`.
    z: String,
    /// Polynomial, e.g. `x^2*y + 3*y`.
    p: String,
    /// Use ρ_α = α_A∘ρ with α_A(x)=q²x, α_A(y)=qy.
    #[arg(long)]
    deformed: bool,
    #[command(flatten)]
    q: QValue,
}

#[derive(Args)]
struct Bounds {
    /// Largest PBW degree of the acting algebra.
    #[arg(long, env = "HOMALG_BOUND_H", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=6))]
    bound_h: u32,
    /// Largest total degree of polynomials.
    #[arg(long, env = "HOMALG_BOUND_A", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=8))]
    bound_a: u32,
}

#[derive(Args)]
struct QValue {
    /// Substitute a nonzero rational for q, e.g. `2` or `-1/3`.
    #[arg(long, value_parser = parse_q)]
    q_value: Option<Rational>,
}

#[derive(Args)]
struct Output {
    /// Only report these axioms (repeatable); see `homalg axioms`.
    #[arg(long = "axiom", value_parser = parse_axiom)]
    axioms: Vec<AxiomId>,
    /// Also write a JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Counterexamples printed per failing axiom.
    #[arg(long, default_value_t = 5)]
    show: usize,
}

fn parse_q(s: &str) -> Result<Rational, String> {
    let q = parse_rational(s).map_err(|e| e.to_string())?;
    if q == Rational::from_integer(0.into()) {
        return Err("q must be nonzero".into());
    }
    Ok(q)
}

fn parse_axiom(s: &str) -> Result<AxiomId, String> {
    s.parse::<AxiomId>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { kind } => commands::verify(kind),
        Command::Act(args) => commands::act(args),
        Command::Twist { kind } => commands::twist(kind),
        Command::Axioms => commands::axioms(),
    };
    match result {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}
