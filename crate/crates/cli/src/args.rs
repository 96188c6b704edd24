use clap::{Parser, Subcommand, ValueEnum};

use crate::render::Format;

#[derive(Debug, Parser)]
#[command(
    name = "qhankel",
    version,
    about = "Exact q-Catalan style sequences, Hankel determinants and J-fractions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a sequence for indices 0..=N, one value per line.
    Seq {
        family: SeqFamily,
        #[arg(long)]
        n: usize,
        /// Substitute an expression in q, a, b for a.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Substitute an expression in q, a, b for b.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print rows of a coefficient triangle (rows 0..=N for narayana, 1..=N for nstar).
    Triangle {
        family: TriangleFamily,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the q-Gould polynomial G(k, n, r).
    Gould {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Hankel determinant det(mu_{i+j+shift}), i, j = 0..=N.
    Hankel {
        family: HankelArg,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long)]
        n: usize,
        /// Compare against the closed form; exit 1 on mismatch.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// J-fraction coefficients s_0..s_{D-1}, t_0..t_{D-1}.
    Jfraction {
        family: JfFamily,
        #[arg(long)]
        depth: usize,
        /// Extract the coefficients from the moment sequence instead of using closed forms.
        #[arg(long)]
        from_moments: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Monic orthogonal polynomial p_N(z).
    Orthopoly {
        family: JfFamily,
        #[arg(long)]
        n: usize,
        /// Use the explicit double-sum formula instead of the three-term recurrence.
        #[arg(long)]
        explicit: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the identity checks (all of them unless --check is given).
    Verify {
        #[arg(long, conflicts_with_all = ["check", "list"])]
        all: bool,
        #[arg(long, conflicts_with = "list")]
        check: Option<String>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// List check names and formula anchors.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// FAMILY:INDEX, perturbs one sequence value by +1.
        #[arg(long, hide = true)]
        inject_defect: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqFamily {
    Qcatalan,
    Narayana,
    Cstar,
    Motzkin,
    RogersSzego,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleFamily {
    Narayana,
    Nstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HankelArg {
    Qcatalan,
    Narayana,
    Cstar,
    Motzkin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum JfFamily {
    Narayana,
    Qcatalan,
    CstarShift1,
    CstarShift0,
    Motzkin,
}
