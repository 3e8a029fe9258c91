use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "torsion-count",
    version,
    about = "Subgroup and cyclic-subgroup counts for T_4n x C_p, checked against a brute-force lattice"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest group order the brute-force oracle will enumerate
    /// [default: $TORSION_COUNT_CAP, else 2000].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: Option<u64>,
    /// Worker threads [default: one per core].
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Subgroups,
    Cyclic,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GroupArgs {
    #[arg(long)]
    pub n: u64,
    /// Order of the cyclic factor.
    #[arg(long)]
    pub p: u64,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GeneralArgs {
    #[arg(long)]
    pub n: u64,
    /// Order of the cyclic factor; 1 gives the dicyclic group alone.
    #[arg(long, visible_alias = "p", default_value_t = 1)]
    pub m: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Both closed-form counts and the family count; the oracle checks
    /// them when 4np is within the cap.
    Count(GroupArgs),
    /// The four subgroup families with generators and orders.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// Close every family's generators and check the resulting order.
        #[arg(long)]
        materialize: bool,
    },
    /// Subgroup counts by order, in two parts.
    Table(GroupArgs),
    /// Oracle sweep over a grid, with the errata section.
    Verify {
        /// Values of n: `1..30`, `2,4,8` or a mix.
        #[arg(long, value_parser = parse_grid)]
        n: Grid,
        /// Values of p, same syntax.
        #[arg(long, value_parser = parse_grid)]
        p: Grid,
    },
    /// GAP script recomputing the count independently.
    Gapscript {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Mode::Subgroups)]
        mode: Mode,
    },
    /// Whether every cyclicizer is a subgroup, against cyclicity of the group.
    Prop46(GeneralArgs),
    /// Cyclicizer of one element, or of the whole group when no element is given.
    Cyclicizer {
        #[command(flatten)]
        group: GeneralArgs,
        /// Exponent of a.
        #[arg(long)]
        a_exp: Option<u64>,
        /// Include the factor b.
        #[arg(long)]
        b: bool,
        /// Exponent of c.
        #[arg(long)]
        c_exp: Option<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid(pub Vec<u64>);

/// Comma-separated positive integers and inclusive ranges `a..b`.
pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(format!("empty item in '{s}'"));
        }
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("'{t}': {e}"));
        if let Some((lo, hi)) = part.split_once("..") {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range '{part}'"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(num(part)?);
        }
    }
    if out.contains(&0) {
        return Err("values must be positive".into());
    }
    Ok(Grid(out))
}
