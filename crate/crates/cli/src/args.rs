use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "maninforge", version, about = "Exact checks for hom-Lie algebras, Manin triples and r-matrices")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify a file against the axioms of its kind.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        /// Input file, `-` for stdin.
        file: PathBuf,
        /// Also check the two admissibility conditions (algebra only).
        #[arg(long)]
        admissible: bool,
    },
    /// Build the n-uble of a Manin triple.
    Polyuble {
        triple: PathBuf,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// Certify the result.
        #[arg(long)]
        check: bool,
    },
    /// Print the snake permutation, optionally certify it or draw it.
    Snake {
        #[arg(short = 'm', value_name = "M")]
        m: usize,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// Base triple whose polyubles are compared.
        #[arg(long, value_name = "TRIPLE")]
        verify: Option<PathBuf>,
        /// Write the chain graph in DOT format (`-` for stdout).
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Evaluate the hom-classical Yang-Baxter residual of a 2-tensor.
    Hcybe {
        algebra: PathBuf,
        #[arg(long = "r", value_name = "TENSOR")]
        r: PathBuf,
        /// Use the untwisted classical Yang-Baxter map instead.
        #[arg(long)]
        classical: bool,
    },
    /// Check the stabilizer conditions for a subspace of a Manin triple.
    Stabilizer {
        triple: PathBuf,
        #[arg(long = "q", value_name = "SUBSPACE")]
        q: PathBuf,
        /// Symmetric tensor S; defaults to the symmetric part of the splitting r-matrix.
        #[arg(long = "S", value_name = "TENSOR")]
        s: Option<PathBuf>,
    },
    /// Map a double-leaf index to its leaf index.
    Leafmap(LeafArgs),
    /// Apply the flag correspondence map to 2n matrices.
    Psi {
        #[arg(long)]
        rank: usize,
        #[arg(long = "n", value_name = "N")]
        n: usize,
        /// Matrix file with 2n blocks.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Print the four intermediate stages and compare them with the map.
        #[arg(long)]
        stages: bool,
    },
    /// Print one of the built-in example objects.
    Examples {
        #[arg(value_enum)]
        name: ExampleName,
        /// Use the parity twist where one exists.
        #[arg(long)]
        twisted: bool,
    },
}

#[derive(Args, Debug)]
pub struct LeafArgs {
    #[arg(long)]
    pub rank: usize,
    #[arg(long = "n", value_name = "N")]
    pub n: usize,
    /// n words of 1-based simple reflections, e.g. `1,2,1`; `e` is the identity.
    #[arg(short = 'u', num_args = 1.., required = true)]
    pub u: Vec<String>,
    #[arg(short = 'v', num_args = 1.., required = true)]
    pub v: Vec<String>,
    #[arg(short = 'w', required = true)]
    pub w: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VerifyKind {
    Manin,
    Algebra,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ExampleName {
    Sl2,
    GPlusH,
    Double,
    Hyperbolic,
    LambdaSt,
}
