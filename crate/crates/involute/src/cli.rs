use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use involute_core::arith::{ArithError, DEFAULT_PRIME_CAP};
use involute_core::catalog::{identify_in_families, Catalog};
use involute_core::classify::{
    run_lemma_sweeps, verify_c_order_deficit, verify_case_f, verify_involution_threshold,
    verify_semidirect_dichotomy, verify_theorem1, ClassifyError, VerificationReport,
};
use involute_core::density::{approximate_beta, materialize, DensityError, Materialized};
use involute_core::enumerate::{EnumerateError, EnumerationConfig, DEFAULT_ENUM_CAP};
use involute_core::group::{invariants, Constructor, DEFAULT_TABLE_CAP};
use involute_core::{ExactRational, GroupError};

use crate::expr::{parse_group_expr, ExprError};
use crate::format::{
    emit, ApproxRecord, CensusRecord, Format, IdentifyRecord, InvariantsRecord, ReportRecord,
};
use crate::parallel::{census_parallel, default_threads, enumerate_parallel, DriverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "involute",
    version,
    about = "Involutions, cyclic subgroups and the ratio beta = i/c of finite groups"
)]
struct Cli {
    /// Largest group order for which a Cayley table is built.
    #[arg(long, global = true, default_value_t = DEFAULT_TABLE_CAP)]
    table_cap: usize,
    /// Largest order accepted by the exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: usize,
    /// Upper bound on the primes scanned by approx-beta.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_CAP)]
    prime_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Give up enumeration after this many seconds.
    #[arg(long, global = true)]
    timeout: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, i, c, r and beta of a group expression.
    Invariants { expr: String },
    /// Name of the standard group isomorphic to an expression.
    Identify { expr: String },
    /// All groups of order n up to isomorphism.
    Enumerate { n: usize },
    /// Check a classification statement.
    #[command(subcommand)]
    Verify(Verify),
    /// Choose odd primes whose dihedral product has beta close to t.
    ApproxBeta(ApproxArgs),
}

#[derive(Debug, Args)]
struct MaxOrder {
    #[arg(long, default_value_t = 12)]
    max_order: usize,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Groups with c - i = 0, 1, 2, and the order-12 case analysis.
    Theorem1(MaxOrder),
    /// Groups with more than three quarters involutions.
    Theorem22(MaxOrder),
    /// Groups with c = |G| - r.
    Theorem23 {
        #[arg(long, value_parser = ["1", "2", "4"])]
        r: String,
        #[command(flatten)]
        bound: MaxOrder,
    },
    /// The two semidirect products Z_n x| Z_2.
    Theorem24 {
        #[arg(long)]
        n: u64,
    },
    /// Normality, r and beta identities over catalog groups and prime sets.
    Lemmas(MaxOrder),
}

#[derive(Debug, Args)]
struct ApproxArgs {
    /// Target in (0, 1], as a decimal or a fraction a/b.
    t: String,
    #[arg(long)]
    eps: String,
    /// Also build the product group when it fits the table cap.
    #[arg(long)]
    materialize: bool,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Resource(_) | Failure::Io(_) => EXIT_RESOURCE,
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        Failure::Resource(e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Enumerate(e) => e.into(),
            ClassifyError::Group(e) => e.into(),
            ClassifyError::Domain(msg) => Failure::Usage(msg),
        }
    }
}

/// `EXIT_COUNTEREXAMPLE` if any report carries a counterexample.
pub fn report_exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::is_verified) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

struct Session<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn constructor(&self) -> Constructor {
        Constructor::with_cap(self.cli.table_cap)
    }

    fn driver(&self) -> Result<DriverConfig, Failure> {
        let timeout = match self.cli.timeout {
            Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Failure::Usage(format!("invalid timeout {s}"))),
            None => None,
        };
        Ok(DriverConfig {
            enumeration: EnumerationConfig {
                cap: self.cli.enum_cap,
                node_limit: None,
            },
            threads: self
                .cli
                .threads
                .map_or_else(default_threads, |t| t as usize),
            timeout,
        })
    }

    fn reports(&mut self, reports: &[VerificationReport]) -> Result<i32, Failure> {
        for rep in reports {
            emit(self.out, self.cli.format, &ReportRecord::from(rep))?;
        }
        Ok(report_exit_code(reports))
    }

    fn dispatch(&mut self) -> Result<i32, Failure> {
        let k = self.constructor();
        let format = self.cli.format;
        match &self.cli.command {
            Command::Invariants { expr } => {
                let e = parse_group_expr(expr)?;
                let g = e.eval(&k)?;
                emit(
                    self.out,
                    format,
                    &InvariantsRecord::new(e.to_string(), &invariants(&g)),
                )?;
                Ok(EXIT_OK)
            }
            Command::Identify { expr } => {
                let e = parse_group_expr(expr)?;
                let g = e.eval(&k)?;
                let name = Catalog::standard()
                    .identify(&g)
                    .map(String::from)
                    .or_else(|| identify_in_families(&g, &k));
                let record = IdentifyRecord {
                    group: e.to_string(),
                    order: g.order(),
                    name,
                };
                emit(self.out, format, &record)?;
                Ok(EXIT_OK)
            }
            Command::Enumerate { n } => {
                let res = enumerate_parallel(*n, &self.driver()?)?;
                for g in &res.groups {
                    emit(
                        self.out,
                        format,
                        &InvariantsRecord::new(g.display_name(), &invariants(g)),
                    )?;
                }
                let summary = CensusRecord {
                    order: res.order,
                    classes: res.groups.len(),
                    tables_explored: res.tables_explored,
                    complete_tables: res.complete_tables,
                };
                emit(self.out, format, &summary)?;
                Ok(EXIT_OK)
            }
            Command::Verify(v) => self.verify(v, &k),
            Command::ApproxBeta(args) => self.approx(args, &k),
        }
    }

    fn verify(&mut self, v: &Verify, k: &Constructor) -> Result<i32, Failure> {
        let driver = self.driver()?;
        let reports = match v {
            Verify::Theorem1(b) => {
                let census = census_parallel(b.max_order, &driver)?;
                let mut reps = verify_theorem1(&census, k)?.to_vec();
                reps.push(verify_case_f(&census, k)?);
                reps
            }
            Verify::Theorem22(b) => {
                let census = census_parallel(b.max_order, &driver)?;
                vec![verify_involution_threshold(&census, k)?]
            }
            Verify::Theorem23 { r, bound } => {
                let r: u8 = r
                    .parse()
                    .map_err(|_| Failure::Usage(format!("invalid r {r}")))?;
                let census = census_parallel(bound.max_order, &driver)?;
                vec![verify_c_order_deficit(r, &census, k)?]
            }
            Verify::Theorem24 { n } => vec![verify_semidirect_dichotomy(*n, k)?],
            Verify::Lemmas(b) => {
                let census = census_parallel(b.max_order, &driver)?;
                run_lemma_sweeps(&census, &Catalog::standard(), k)?
            }
        };
        self.reports(&reports)
    }

    fn approx(&mut self, args: &ApproxArgs, k: &Constructor) -> Result<i32, Failure> {
        let parse = |what: &str, s: &str| {
            s.trim()
                .parse::<ExactRational>()
                .map_err(|e: ArithError| Failure::Usage(format!("invalid {what} {s:?}: {e}")))
        };
        let t = parse("target", &args.t)?;
        let eps = parse("tolerance", &args.eps)?;
        let format = self.cli.format;
        let sel = match approximate_beta(&t, &eps, self.cli.prime_cap) {
            Ok(sel) => sel,
            Err(DensityError::NotConverged { best, prime_cap }) => {
                emit(self.out, format, &ApproxRecord::new(&t, &eps, &best, false))?;
                return Err(Failure::Resource(format!(
                    "no selection within tolerance using primes up to {prime_cap}"
                )));
            }
            Err(DensityError::Domain(msg)) => return Err(Failure::Usage(msg)),
            Err(e) => return Err(Failure::Resource(e.to_string())),
        };
        let mut record = ApproxRecord::new(&t, &eps, &sel, true);
        if args.materialize {
            record = match materialize(&sel, k.table_cap) {
                Ok(Materialized::Group(g)) => {
                    let counted = invariants(&g).beta;
                    record.with_group(&g, &counted)
                }
                Ok(Materialized::TooLarge { required_order }) => {
                    record.too_large(required_order.to_string())
                }
                Err(e) => return Err(Failure::Resource(e.to_string())),
            };
        }
        emit(self.out, format, &record)?;
        Ok(EXIT_OK)
    }
}

/// Runs the command line `argv` (program name first), writing records to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut buffered = Vec::new();
    let result = Session {
        cli: &cli,
        out: &mut buffered,
    }
    .dispatch();
    let _ = out.write_all(&buffered);
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "involute: {f}");
            f.code()
        }
    }
}
