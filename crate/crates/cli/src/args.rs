use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cuspidal", version, about = "Exact Bessel functions and level-zero epsilon factors for GL_r(F_q)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Largest admissible field size q^r.
    #[arg(long, global = true)]
    pub field_cap: Option<u64>,
    /// Largest subgroup order that may be enumerated.
    #[arg(long, global = true)]
    pub group_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Domain {
    Full,
    Mirabolic,
    Stabilizer,
    U,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements, logarithms and coordinates of F_q.
    Field {
        #[arg(long)]
        q: u64,
    },
    /// Cuspidal representations of GL_r(F_q) as Frobenius orbits of regular characters.
    Cuspidals(Group),
    /// Bessel function table of one cuspidal representation.
    Bessel {
        #[command(flatten)]
        group: Group,
        /// Exponent c of the regular character θ(g^j) = ζ^{cj} of F_{q^r}^×.
        #[arg(long, allow_hyphen_values = true)]
        theta: i64,
        #[arg(long, value_enum, default_value_t = Domain::Full)]
        domain: Domain,
        #[command(flatten)]
        psi: Psi,
    },
    /// Epsilon factor of a pair of level-zero representations.
    Epsilon {
        #[command(flatten)]
        pair: Pair,
        /// Also evaluate the zeta-integral oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Transfer a level-zero epsilon factor to the essentially tame pair.
    Transfer {
        #[command(flatten)]
        pair: Pair,
        /// Valuation v_E(ν).
        #[arg(long, allow_hyphen_values = true)]
        vnu: i64,
        /// Degree N, a multiple of e·r.
        #[arg(long = "N")]
        n: u64,
        /// Ramification index of E/F.
        #[arg(long)]
        e: u64,
        /// ω_{τ_1}(ν^{-r}).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        w1: String,
        /// ω_{τ_2}(ν^r).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        w2: String,
        /// Sign ζ.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        zeta: String,
    },
    /// Run verification suites; exits with 1 if any check fails.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// List registered suites and exit.
        #[arg(long)]
        list: bool,
        /// Restrict to GL_r(F_q); needs --r.
        #[arg(long, requires = "r")]
        q: Option<u64>,
        #[arg(long, requires = "q")]
        r: Option<usize>,
        /// Seed for sampled instances.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampled instances per group.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct Group {
    /// Field size, a prime power.
    #[arg(long)]
    pub q: u64,
    /// Rank of GL_r.
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct Psi {
    /// ψ(x) = ζ_p^{Tr(x · g^k)}; the standard character is k = 0.
    #[arg(long = "psi", default_value_t = 0)]
    pub shift_log: u32,
}

#[derive(Args, Debug)]
pub struct Pair {
    #[command(flatten)]
    pub group: Group,
    #[arg(long, allow_hyphen_values = true)]
    pub theta1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta2: i64,
    /// ω(ϖ_E) of the first representation: 1, -1, i, -i or e(J/M).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub t1: String,
    /// ω(ϖ_E) of the second representation.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub t2: String,
    #[command(flatten)]
    pub psi: Psi,
}
