use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genlink::linkage::Situation;
use genlink::MonomialOrder;

#[derive(Parser, Debug)]
#[command(name = "genlink", version, about = "Generic linkage workbench over exact fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Ideal file (or corpus manifest for `corpus`).
    #[arg(long)]
    pub input: PathBuf,
    /// Characteristic: 0 for QQ or an odd prime.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Maximum S-pair reductions per Gröbner computation.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoOp {
    Lct,
    Multiplier,
    Nonlc,
}

fn parse_situation(s: &str) -> Result<Situation, String> {
    s.parse().map_err(|e: genlink::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis of every ideal in the file.
    Gb(Common),
    /// Betti table and regularity of the first ideal.
    Res(Common),
    /// One generic link plus the full check suite.
    Link {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "C", value_parser = parse_situation)]
        situation: Situation,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also compare Betti tables of the two canonical-module presentations.
        #[arg(long)]
        betti: bool,
    },
    /// Iterated Situation C links.
    Seq {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Log canonical threshold, multiplier ideal or non-lc locus of a monomial ideal.
    Mono {
        #[arg(value_enum)]
        op: MonoOp,
        #[command(flatten)]
        common: Common,
        /// Coefficient `c` as an integer or `p/q`.
        #[arg(long)]
        c: Option<String>,
        /// Work in affine space instead of projective space.
        #[arg(long)]
        affine: bool,
    },
    /// Run every entry of a corpus manifest.
    Corpus {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(long)]
        betti: bool,
    },
}
