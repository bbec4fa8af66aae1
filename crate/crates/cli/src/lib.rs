//! Command-line front end for `twinlattice`.
//!
//! [`run`] maps parsed arguments to an [`Output`]; `main` only prints it and
//! converts errors into exit codes.

pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twinlattice::{
    check_conditions, commutation_table, meskin_identity_check, quotient_by_shift, verdict,
    verify_comm_lemma, CartanMatrix2, Error, FiniteGroup, Group, LatticeSpec, MatrixType,
};

use report::{
    Classification, GroupRecord, LemmaRecord, MatrixRecord, TableEntryRecord, TableReport,
    WreathRecord, TOOL_VERSION,
};
pub use report::{Output, Report};

/// Exit status for rejected input.
pub const EXIT_INVALID: i32 = 2;
/// Exit status for a failed internal consistency check.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twinlattice",
    version,
    about = "Commutation and simplicity checks for rank-2 Kac-Moody lattices"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,

    /// Number of translation periods on each side of the fundamental chamber
    #[arg(long, global = true, default_value_t = 8)]
    pub window: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct MatrixArgs {
    /// Off-diagonal entry -m in row 1
    #[arg(long)]
    pub m: u32,
    /// Off-diagonal entry -n in row 2
    #[arg(long)]
    pub n: u32,
}

impl MatrixArgs {
    fn matrix(self) -> Result<CartanMatrix2, Error> {
        CartanMatrix2::new(self.m, self.n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the Cartan matrix A(m,n)
    Classify(MatrixArgs),

    /// Commutation table of all root pairs in the window
    Table(MatrixArgs),

    /// Check the commutation structure of A(k,1) or A(1,k) with k > 4
    Lemma(MatrixArgs),

    /// Check the non-trivial commutator condition and the bounded-distance condition
    Conditions {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Root groups are non-abelian, so a root commutes non-trivially with itself
        #[arg(long)]
        nonabelian_root_groups: bool,
    },

    /// Simplicity or residual finiteness of the lattice over F_q
    Verdict {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Size of the ground field, a prime power
        #[arg(long)]
        q: u64,
        /// The group is not split
        #[arg(long)]
        non_split: bool,
        /// The group is not of adjoint type
        #[arg(long)]
        non_adjoint: bool,
    },

    /// Check the shift identities of the wreath product F wr Z/n
    Wreath {
        /// Builtin group: trivial, C2, C3, C4, V4, S3, D4, Q8, A4, S4
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        group: Option<String>,
        /// Multiplication table file
        #[arg(long)]
        table: Option<PathBuf>,
        /// Number of copies n
        #[arg(long)]
        copies: usize,
    },
}

/// Failure of a command, with its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_INVALID };
        CliError { code, message: e.to_string() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let window = cli.window;
    match &cli.command {
        Command::Classify(args) => {
            let a = args.matrix()?;
            Ok(Output::Report(Report::new(args.m, args.n, a.matrix_type(), window)))
        }
        Command::Table(args) => {
            let a = args.matrix()?;
            let entries = commutation_table(&a, window)?;
            Ok(Output::Table(TableReport {
                matrix: MatrixRecord { m: args.m, n: args.n },
                classification: Classification::from(a.matrix_type()),
                window,
                entries: entries.iter().map(TableEntryRecord::from).collect(),
                tool_version: TOOL_VERSION.to_string(),
            }))
        }
        Command::Lemma(args) => {
            let report = verify_comm_lemma(&args.matrix()?, window)?;
            Ok(Output::Lemma(LemmaRecord::from(&report)))
        }
        Command::Conditions { matrix, nonabelian_root_groups } => {
            let a = matrix.matrix()?;
            let c = check_conditions(&a, !nonabelian_root_groups, window)?;
            Ok(Output::Report(
                Report::new(matrix.m, matrix.n, a.matrix_type(), window).with_conditions(&c),
            ))
        }
        Command::Verdict { matrix, q, non_split, non_adjoint } => {
            let a = matrix.matrix()?;
            let spec = LatticeSpec::with_flags(a, *q, !non_adjoint, !non_split)?;
            let v = verdict(&spec);
            let mut report = Report::new(matrix.m, matrix.n, a.matrix_type(), window);
            if a.matrix_type() == MatrixType::IndefiniteType {
                report = report.with_conditions(&check_conditions(&a, true, window)?);
            }
            Ok(Output::Report(report.with_verdict(*q, &v)))
        }
        Command::Wreath { group, table, copies } => {
            let (source, factor) = match (group, table) {
                (Some(name), _) => (name.clone(), FiniteGroup::builtin(name)?),
                (None, Some(path)) => (path.display().to_string(), FiniteGroup::from_file(path)?),
                (None, None) => unreachable!("clap requires --group or --table"),
            };
            Ok(Output::Wreath(wreath_record(source, &factor, *copies)?))
        }
    }
}

fn wreath_record(
    source: String,
    factor: &FiniteGroup,
    copies: usize,
) -> Result<WreathRecord, Error> {
    let identity_holds = meskin_identity_check(factor, copies)?;
    let abelianization_order = factor.abelianization()?.order();
    let wreath_order = u32::try_from(copies)
        .ok()
        .and_then(|c| (factor.order() as u128).checked_pow(c))
        .and_then(|b| b.checked_mul(copies as u128));
    let mut notes = Vec::new();
    let shift_quotient_order = match quotient_by_shift(factor, copies) {
        Ok(q) => Some(q.order()),
        Err(Error::BudgetExceeded { order, budget }) => {
            notes.push(format!(
                "quotient not computed: order {order} exceeds the budget of {budget} elements"
            ));
            None
        }
        Err(e) => return Err(e),
    };
    if !identity_holds {
        notes.push("the shift identity fails; the factor table is inconsistent".into());
    }
    Ok(WreathRecord {
        group: GroupRecord {
            source,
            order: factor.order(),
            abelian: factor.is_abelian(),
            abelianization_order,
        },
        copies,
        wreath_order,
        identity_holds,
        shift_quotient_order,
        notes,
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Renders `output` in the requested format, with a trailing newline.
pub fn render(output: &Output, format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(output.to_text()),
        Format::Json => output
            .to_json()
            .map(|s| s + "\n")
            .map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() }),
    }
}
