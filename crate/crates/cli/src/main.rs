mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invario_core::FieldSpec;

use render::{CliError, Format};

#[derive(Parser, Debug)]
#[command(name = "invario", version, about = "Exact invariants of binary sextics and cubic pairs")]
struct Cli {
    /// `q` or `fp:<prime>`
    #[arg(long, global = true, default_value = "q")]
    field: String,

    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,

    /// One `key = value` line per scalar.
    #[arg(long, global = true)]
    plain: bool,

    /// Directory holding the generated invariant tables.
    #[arg(long, global = true, env = "INVARIO_TABLES", default_value = "invario-tables")]
    tables: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binary sextics.
    #[command(subcommand)]
    Sextic(SexticCmd),
    /// Ordered pairs of binary cubics.
    #[command(subcommand)]
    Pair(PairCmd),
    /// Orbits of normalized six-point configurations.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Brute-force witnesses over tiny prime fields.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Generate the invariant tables and write the cache.
    GenTables,
    /// Reload the cache and re-check it.
    VerifyTables,
    /// Genus-2 curves `z² = f(x, y)`.
    #[command(subcommand)]
    Genus2(Genus2Cmd),
}

/// How positional form arguments are read.
#[derive(Args, Debug, Clone, Copy)]
pub struct InputMode {
    /// Arguments are comma-separated coefficient lists `a0,...,an`.
    #[arg(long, conflicts_with = "roots")]
    pub coeffs: bool,
    /// Arguments are comma-separated root lists (`inf`, `t`, `x:y`).
    #[arg(long)]
    pub roots: bool,
}

#[derive(Subcommand, Debug)]
enum SexticCmd {
    Invariants {
        #[command(flatten)]
        mode: InputMode,
        /// Polynomial text or a file containing it.
        form: String,
    },
    Classify {
        #[command(flatten)]
        mode: InputMode,
        form: String,
    },
    Conjugate {
        #[command(flatten)]
        mode: InputMode,
        f: String,
        g: String,
    },
    FromRoots {
        #[arg(long)]
        roots: String,
    },
    /// `XY(X-Y)(X³ - B1 X²Y + B2 XY² - B3 Y³)` and the printed J values.
    Jform {
        /// `B1,B2,B3`
        b: String,
    },
}

#[derive(Subcommand, Debug)]
enum PairCmd {
    Invariants {
        #[command(flatten)]
        mode: InputMode,
        f: String,
        g: String,
    },
    Conjugate {
        #[command(flatten)]
        mode: InputMode,
        f1: String,
        g1: String,
        f2: String,
        g2: String,
    },
    Nullcone {
        #[command(flatten)]
        mode: InputMode,
        f: String,
        g: String,
    },
    /// Pair from two disjoint root triples; with four triples, decide conjugacy.
    Threesets {
        p: String,
        q: String,
        p2: Option<String>,
        q2: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupArg {
    S6,
    Wreath,
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    S6 { c: String },
    Wreath { c: String },
    Member {
        #[arg(long, value_enum, default_value = "s6")]
        group: GroupArg,
        c: String,
        c2: String,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    Exhaustive {
        #[command(flatten)]
        mode: InputMode,
        /// Treat the arguments as two cubic pairs `f1 g1 f2 g2`.
        #[arg(long)]
        pair: bool,
        #[arg(required = true, num_args = 2..=4)]
        forms: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Genus2Cmd {
    /// Same as `sextic conjugate`.
    Iso {
        #[command(flatten)]
        mode: InputMode,
        f: String,
        g: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Sextic(c) => match c {
                SexticCmd::Invariants { .. } => "sextic invariants",
                SexticCmd::Classify { .. } => "sextic classify",
                SexticCmd::Conjugate { .. } => "sextic conjugate",
                SexticCmd::FromRoots { .. } => "sextic from-roots",
                SexticCmd::Jform { .. } => "sextic jform",
            },
            Command::Pair(c) => match c {
                PairCmd::Invariants { .. } => "pair invariants",
                PairCmd::Conjugate { .. } => "pair conjugate",
                PairCmd::Nullcone { .. } => "pair nullcone",
                PairCmd::Threesets { .. } => "pair threesets",
            },
            Command::Orbit(c) => match c {
                OrbitCmd::S6 { .. } => "orbit s6",
                OrbitCmd::Wreath { .. } => "orbit wreath",
                OrbitCmd::Member { .. } => "orbit member",
            },
            Command::Search(_) => "search exhaustive",
            Command::GenTables => "gen-tables",
            Command::VerifyTables => "verify-tables",
            Command::Genus2(_) => "genus2 iso",
        }
    }
}

fn run(cli: &Cli) -> Result<(serde_json::Value, serde_json::Value), CliError> {
    use commands as c;
    let field: FieldSpec = cli.field.parse()?;
    if let Command::GenTables = cli.command {
        return c::gen_tables(&cli.tables);
    }
    let tables = c::load_tables(&cli.tables)?;
    match &cli.command {
        Command::Sextic(cmd) => match cmd {
            SexticCmd::Invariants { mode, form } => c::sextic_invariants(field, &tables, *mode, form),
            SexticCmd::Classify { mode, form } => c::sextic_classify(field, &tables, *mode, form),
            SexticCmd::Conjugate { mode, f, g } => c::sextic_conjugate(field, &tables, *mode, f, g),
            SexticCmd::FromRoots { roots } => c::sextic_from_roots(field, &tables, roots),
            SexticCmd::Jform { b } => c::sextic_jform(field, &tables, b),
        },
        Command::Genus2(Genus2Cmd::Iso { mode, f, g }) => c::sextic_conjugate(field, &tables, *mode, f, g),
        Command::Pair(cmd) => match cmd {
            PairCmd::Invariants { mode, f, g } => c::pair_invariants(field, *mode, f, g),
            PairCmd::Conjugate { mode, f1, g1, f2, g2 } => c::pair_conjugate(field, *mode, [f1, g1, f2, g2]),
            PairCmd::Nullcone { mode, f, g } => c::pair_nullcone(field, *mode, f, g),
            PairCmd::Threesets { p, q, p2, q2 } => c::pair_threesets(field, p, q, p2.as_deref(), q2.as_deref()),
        },
        Command::Orbit(cmd) => match cmd {
            OrbitCmd::S6 { c: t } => c::orbit(field, invario_core::OrbitGroup::S6, t),
            OrbitCmd::Wreath { c: t } => c::orbit(field, invario_core::OrbitGroup::Wreath, t),
            OrbitCmd::Member { group, c: a, c2 } => {
                let group = match group {
                    GroupArg::S6 => invario_core::OrbitGroup::S6,
                    GroupArg::Wreath => invario_core::OrbitGroup::Wreath,
                };
                c::orbit_member(field, group, a, c2)
            }
        },
        Command::Search(SearchCmd::Exhaustive { mode, pair, forms }) => c::search(field, &tables, *mode, *pair, forms),
        Command::VerifyTables => c::verify_tables(&cli.tables, &tables),
        Command::GenTables => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.kind().to_string();
            let detail = e.to_string();
            render::emit_error(Format::Json, None, "usage", detail.lines().next().unwrap_or(&msg));
            return ExitCode::from(2);
        }
    };
    let format = if cli.plain { Format::Plain } else { Format::Json };
    let name = cli.command.name();
    match run(&cli) {
        Ok((input, result)) => {
            render::emit(format, name, &cli.field, input, result);
            ExitCode::SUCCESS
        }
        Err(e) => {
            render::emit_error(format, Some(name), e.code(), &e.to_string());
            ExitCode::FAILURE
        }
    }
}
