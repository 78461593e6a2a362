//! The `groupscope` command line, callable in-process through [`cli_main`].

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use groupscope::abelian::{self, AbelianPInvariants};
use groupscope::aut::{self, AutSubgroupTag};
use groupscope::catalog::Limits;
use groupscope::group;
use groupscope::io::load_cayley;
use groupscope::search::greedy_generators;
use groupscope::theorems::{self, Status, Subject, TheoremId, TheoremReport, CSV_HEADER};
use groupscope::{FiniteGroup, GroupError, Subgroup};

/// Finite groups from Cayley tables: structure, automorphism subgroups and
/// theorem checks.
#[derive(Parser)]
#[command(name = "groupscope", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, nilpotency class, center, lower central series.
    Info {
        /// Group spec such as `D(4) x C(2)`, or `@file.json` for a Cayley table.
        spec: String,
    },
    /// Automorphism subgroup cardinality and listing.
    Aut {
        spec: String,
        /// `central`, `class:n` or `box:M,N` with M, N among 1, G, Z, g<k>.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run one theorem checker.
    Check {
        /// Theorem id, e.g. T3.4.
        theorem: String,
        spec: String,
        #[arg(long)]
        n: Option<usize>,
        /// Write the JSON report to a file, or `-` for stdout.
        #[arg(long)]
        json: Option<String>,
    },
    /// Run checkers over the built-in catalog.
    Corpus {
        #[arg(long)]
        max_order: Option<usize>,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct ConfigError(String);

impl From<GroupError> for ConfigError {
    fn from(e: GroupError) -> Self {
        ConfigError(e.to_string())
    }
}

impl From<io::Error> for ConfigError {
    fn from(e: io::Error) -> Self {
        ConfigError(e.to_string())
    }
}

type CliResult<T> = Result<T, ConfigError>;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

/// Parses `argv` (program name first), runs the command and returns the exit
/// status: 0 on success, 1 when any report FAILED, 2 on usage or input errors.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    main_with(argv, Limits::from_env(), out, err)
}

fn main_with<I, T>(
    argv: I,
    limits: groupscope::Result<Limits>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match limits
        .map_err(ConfigError::from)
        .and_then(|l| run(cli, &l, &mut io))
    {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_CONFIG
        }
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Writes a line, treating a closed pipe as success.
macro_rules! say {
    ($w:expr, $($arg:tt)*) => {
        match writeln!($w, $($arg)*) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        }
    };
}

fn run(cli: Cli, limits: &Limits, io: &mut Io) -> CliResult<u8> {
    match cli.command {
        Command::Info { spec } => {
            info(io, &load_subject(&spec, limits)?)?;
            Ok(EXIT_OK)
        }
        Command::Aut { spec, filter } => {
            let s = load_subject(&spec, limits)?;
            list_automorphisms(io, &s.group, filter.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Check {
            theorem,
            spec,
            n,
            json,
        } => {
            let id: TheoremId = theorem.parse()?;
            let s = load_subject(&spec, limits)?;
            let report = theorems::run_check(id, &s, n);
            if let Some(out) = &json {
                write_json(io, out, &report)?;
            }
            if json.as_deref() != Some("-") {
                print_summary(io, &report)?;
            }
            Ok(exit_for(&[report]))
        }
        Command::Corpus {
            max_order,
            theorems: list,
            json,
            csv,
        } => {
            let ids = TheoremId::parse_list(&list)?;
            let max_order = max_order.unwrap_or(limits.max_order);
            let reports = theorems::run_corpus(max_order, &ids);
            if let Some(out) = &json {
                write_json(io, out, &reports)?;
            }
            if let Some(path) = &csv {
                write_csv(path, &reports)?;
            }
            let (passed, failed, na, errors) = theorems::tally(&reports);
            let to_stdout = json.as_deref() == Some("-");
            let w: &mut dyn Write = if to_stdout {
                &mut *io.err
            } else {
                &mut *io.out
            };
            for r in reports
                .iter()
                .filter(|r| matches!(r.status, Status::Failed | Status::Error))
            {
                say!(w, "{} {} {}", r.status, r.theorem_id, r.group_spec);
            }
            let summary = format!(
                "{} reports: {passed} passed, {failed} failed, {na} not applicable, {errors} errors",
                reports.len()
            );
            say!(w, "{summary}");
            Ok(exit_for(&reports))
        }
    }
}

fn exit_for(reports: &[TheoremReport]) -> u8 {
    if reports.iter().any(TheoremReport::failed) {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn load_subject(spec: &str, limits: &Limits) -> CliResult<Subject> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let loaded = load_cayley(path)?;
            if loaded.group.order() > limits.max_order {
                return Err(GroupError::OrderCapExceeded {
                    order: loaded.group.order(),
                    cap: limits.max_order,
                }
                .into());
            }
            Ok(Subject::from_group(spec, loaded.group))
        }
        None => Ok(Subject::parse(spec, limits)?),
    }
}

fn write_json(io: &mut Io, out: &str, value: &impl serde::Serialize) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    if out == "-" {
        say!(io.out, "{text}");
    } else {
        let mut f = File::create(out)?;
        writeln!(f, "{text}")?;
    }
    Ok(())
}

fn write_csv(path: &PathBuf, reports: &[TheoremReport]) -> CliResult<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| ConfigError(e.to_string()))?;
    w.write_record(CSV_HEADER)
        .map_err(|e| ConfigError(e.to_string()))?;
    for r in reports {
        w.write_record(r.csv_record())
            .map_err(|e| ConfigError(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn print_summary(io: &mut Io, r: &TheoremReport) -> CliResult<()> {
    say!(io.out, "{} on {}: {}", r.theorem_id, r.group_spec, r.status);
    for h in &r.hypotheses {
        say!(io.out, "  hypothesis {:<50} {}", h.name, h.holds);
    }
    match r.conclusion {
        Some(c) => say!(io.out, "  conclusion {c}"),
        None => say!(io.out, "  conclusion not asserted"),
    }
    if let Some(e) = &r.error {
        say!(io.out, "  error: {e}");
    }
    Ok(())
}

fn invariants_text(s: &Subgroup) -> String {
    match abelian::subgroup_invariants(s) {
        Ok(inv) => format_invariants(&inv),
        Err(_) if !s.is_abelian() => "non-abelian".into(),
        Err(_) => "abelian, not a p-group".into(),
    }
}

fn format_invariants(inv: &AbelianPInvariants) -> String {
    match inv.prime {
        None => "1".into(),
        Some(p) => {
            let e: Vec<String> = inv.exponents.iter().map(u32::to_string).collect();
            format!("Ab({p}; {})", e.join(", "))
        }
    }
}

fn info(io: &mut Io, s: &Subject) -> CliResult<()> {
    let g = &s.group;
    say!(io.out, "group: {}", s.label);
    say!(io.out, "order: {}", g.order());
    say!(io.out, "abelian: {}", g.is_abelian());
    say!(io.out, "exponent: {}", g.exponent());
    let class = group::nilpotency_class(g);
    match &class {
        Ok(c) => say!(io.out, "class: {c}"),
        Err(_) => say!(io.out, "class: not nilpotent"),
    }
    let z = group::center(g);
    say!(io.out, "|Z|: {}", z.order());
    say!(io.out, "Z: {}", invariants_text(&z));
    let depth = match class {
        Ok(c) => c + 1,
        Err(_) => 4,
    };
    let series: Vec<String> = group::lower_central_series(g, depth.max(2))
        .iter()
        .map(|t| t.order().to_string())
        .collect();
    say!(
        io.out,
        "lower central series orders: {}",
        series.join(" > ")
    );
    if let Ok(c) = class {
        let n = c.max(1);
        say!(
            io.out,
            "gamma_{n}: {}",
            invariants_text(&group::gamma(g, n))
        );
    }
    match aut::purely_nonabelian_test(g) {
        Ok(p) => say!(
            io.out,
            "purely non-abelian: {}",
            p.purely && !g.is_abelian()
        ),
        Err(e) => say!(io.out, "purely non-abelian: {e}"),
    }
    Ok(())
}

fn named_subgroup(g: &FiniteGroup, name: &str) -> CliResult<Subgroup> {
    let name = name.trim();
    match name {
        "1" => Ok(Subgroup::trivial(g)),
        "G" => Ok(Subgroup::whole(g)),
        "Z" => Ok(group::center(g)),
        _ => {
            let k = name
                .strip_prefix("gamma_")
                .or_else(|| name.strip_prefix('g'))
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| {
                    ConfigError(format!("unknown subgroup {name:?}; use 1, G, Z or g<k>"))
                })?;
            Ok(group::gamma(g, k))
        }
    }
}

fn parse_filter(g: &FiniteGroup, filter: Option<&str>) -> CliResult<AutSubgroupTag> {
    let Some(f) = filter else {
        return Ok(AutSubgroupTag::Full);
    };
    if f == "central" {
        return Ok(AutSubgroupTag::Central);
    }
    if let Some(n) = f.strip_prefix("class:") {
        let n = n
            .parse()
            .map_err(|_| ConfigError(format!("bad class filter {f:?}")))?;
        return Ok(AutSubgroupTag::ClassPreserving(n));
    }
    if let Some(rest) = f.strip_prefix("box:") {
        let (m, n) = rest
            .split_once(',')
            .ok_or_else(|| ConfigError(format!("box filter needs M,N: {f:?}")))?;
        return Ok(AutSubgroupTag::Box {
            m: named_subgroup(g, m)?,
            n: named_subgroup(g, n)?,
        });
    }
    Err(ConfigError(format!(
        "unknown filter {f:?}; use central, class:n or box:M,N"
    )))
}

fn list_automorphisms(io: &mut Io, g: &FiniteGroup, filter: Option<&str>) -> CliResult<()> {
    let tag = parse_filter(g, filter)?;
    let list = aut::aut_subgroup(g, &tag)?;
    say!(io.out, "{}: {}", tag.name(), list.len());
    let gens = greedy_generators(g);
    for f in &list {
        let images: Vec<String> = gens
            .iter()
            .map(|&x| format!("{} -> {}", g.label(x), g.label(f.apply(x))))
            .collect();
        say!(io.out, "  {}", images.join(", "));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
