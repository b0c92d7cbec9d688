//! Library side of the `rxsurf` command: argument model, command drivers and
//! report printing.

pub mod commands;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};
use rxsurf::exec::Exec;
use rxsurf::jetalg::MonomialOrder;

use commands::CliError;
use report::Node;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Grlex,
    Grevlex,
}

impl From<Order> for MonomialOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Grlex => MonomialOrder::GrLex,
            Order::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "rxsurf", version, about = "R(X)-classification and flat geometry of corank 1 surfaces in R^4")]
pub struct Cli {
    /// Truncation degree of all jets.
    #[arg(long, global = true, default_value_t = 8)]
    pub trunc: u32,
    /// Monomial order used for echelon forms and printing of monomial bases.
    #[arg(long, global = true, value_enum, default_value_t = Order::Grlex)]
    pub order: Order,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Spread batch work over the thread pool. Output order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tangency and liftability of the 13 Derlog generators.
    VerifyDerlog,
    /// Classify a submersion germ in X, Y, Z, W.
    Classify { germ: String },
    /// Complete transversal of degree k+1.
    Transversal {
        germ: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// R(X)-codimension.
    Codim { germ: String },
    /// Reduce an I1 jet to the generic normal form.
    NormalForm {
        #[arg(long)]
        surface: String,
    },
    /// Fundamental forms, curvature parabola, umbilic curvature, point type.
    Geometry {
        #[arg(long)]
        surface: String,
    },
    /// Contact report of one height function.
    Height {
        #[arg(long)]
        surface: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Height functions over the structured directions and a grid on S^3.
    HeightScan {
        #[arg(long)]
        surface: String,
        #[arg(long, default_value_t = 2000)]
        grid: usize,
    },
}

pub fn execute(cli: &Cli) -> Result<Node, CliError> {
    let exec = if cli.parallel { Exec::Parallel } else { Exec::Sequential };
    let order: MonomialOrder = cli.order.into();
    match &cli.command {
        Command::VerifyDerlog => commands::verify_derlog(),
        Command::Classify { germ } => commands::classify(germ, cli.trunc, order),
        Command::Transversal { germ, k } => commands::transversal(germ, *k, order),
        Command::Codim { germ } => commands::codim(germ, cli.trunc, order, exec),
        Command::NormalForm { surface } => commands::normal_form(surface, cli.trunc),
        Command::Geometry { surface } => commands::geometry(surface, cli.trunc),
        Command::Height { surface, v } => commands::height(surface, v, cli.trunc),
        Command::HeightScan { surface, grid } => commands::height_scan_cmd(surface, *grid, cli.trunc, exec),
    }
}

pub fn render(node: &Node, format: Format) -> String {
    match format {
        Format::Text => report::to_text(node),
        Format::Json => report::to_json(node),
    }
}

/// Parse, run and print. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { commands::EXIT_PARSE } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(node) => {
            let text = render(&node, cli.format);
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return 1;
                    }
                }
                None => print!("{text}"),
            }
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
