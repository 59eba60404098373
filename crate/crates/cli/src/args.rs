use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use extact::{ComplexKind, OrderKind};

/// External activity complexes of ordered matroids.
///
/// Every command prints one line of compact JSON on standard output. Barred
/// vertices of the external activity complex are written as negative
/// integers: `ē` is `-e`. Euler characteristics are reported twice:
/// `euler_characteristic` ignores the empty face (a point has 1),
/// `reduced_euler_characteristic` counts it (a point has 0).
///
/// Exit codes: 0 on success, 1 when `reproduce-paper` finds a mismatch, 2 when
/// the input parses but is invalid, 3 when the input cannot be read or parsed.
/// Input larger than `MATROID_MAX_N` elements (default 12) is rejected.
#[derive(Debug, Parser)]
#[command(name = "extact", version)]
pub struct Cli {
    /// Matroid descriptor (JSON); `-` reads standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Seed for every sampled linear extension.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the matroid axioms and print basic invariants.
    Validate,
    /// Internal and external activities of every basis.
    Activity,
    /// Tutte polynomial as a list of {"i","j","c"}: c times x^i y^j.
    Tutte,
    /// Hasse diagram of an active order over lexicographic basis indices.
    Orders(OrdersArgs),
    /// Facets, cone points and minimal non-faces of IN(M) or Act(M).
    Complex(ComplexArgs),
    /// Test facet orders for being shellings.
    ShellCheck(ShellArgs),
    /// f-vector, h-vector and Euler characteristics.
    Hvector(ComplexArgs),
    /// Homotopy type of the reduced external activity complex.
    Topology,
    /// Recompute the worked example and compare with stored values.
    ReproducePaper,
}

#[derive(Debug, Args)]
pub struct OrdersArgs {
    /// ext, int or extint.
    #[arg(long, default_value = "extint", value_parser = OrderKind::from_str)]
    pub kind: OrderKind,
    /// Also list up to N linear extensions (all of them if there are at most N).
    #[arg(long)]
    pub extensions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// in or act.
    #[arg(long, default_value = "act", value_parser = ComplexKind::from_str)]
    pub which: ComplexKind,
    /// Remove cone points first.
    #[arg(long)]
    pub reduced: bool,
}

#[derive(Debug, Args)]
pub struct ShellArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    /// lex, file:PATH (a JSON list of bases), sample-extint:N or sample-int:N.
    #[arg(long, default_value = "lex", value_parser = OrderSpec::from_str)]
    pub order: OrderSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    File(PathBuf),
    Sample(OrderKind, usize),
}

impl FromStr for OrderSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "lex" {
            return Ok(OrderSpec::Lex);
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(OrderSpec::File(PathBuf::from(path)));
        }
        let (kind, count) = if let Some(n) = s.strip_prefix("sample-extint:") {
            (OrderKind::ExtInt, n)
        } else if let Some(n) = s.strip_prefix("sample-int:") {
            (OrderKind::Int, n)
        } else {
            return Err(format!(
                "unknown order {s:?} (expected lex, file:PATH, sample-extint:N or sample-int:N)"
            ));
        };
        match count.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(OrderSpec::Sample(kind, n)),
            _ => Err(format!("sample count {count:?} is not a positive integer")),
        }
    }
}
