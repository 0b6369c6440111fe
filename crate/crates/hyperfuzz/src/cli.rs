//! Command-line front end.
//!
//! Exit codes: 0 success / property holds, 1 property fails (a witness is
//! printed), 2 input or usage error, 3 internal invariant violation.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hyperfuzz_core::explore::{
    canonical_key, enumerate_hypergroupoids, find_counterexample, verify_theorem, Budget, Mode, Property, Theorem,
    VerificationScope,
};
use hyperfuzz_core::{fuzzy, ideals, FuzzySubset, HyperGroupoid, IdealKind, Method};
use serde_json::json;

use crate::format::{parse_fuzzy, parse_hypergroupoid, render_fuzzy, render_hypergroupoid, ParseError};
use crate::report::{self, Rendered};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable overriding the instance budget.
pub const BUDGET_VAR: &str = "HYPERFUZZ_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "hyperfuzz", version, about = "Fuzzy ideals of finite hypergroupoids, checked exactly")]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether a table is a hypersemigroup.
    Check { table: PathBuf },
    /// Compose two fuzzy subsets (sup-min) and print the result in .fz form.
    Compose {
        table: PathBuf,
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a fuzzy subset is an ideal of the given kind.
    Ideal {
        table: PathBuf,
        subset: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Report every ideal property of a fuzzy subset.
    Classify { table: PathBuf, subset: PathBuf },
    /// Cross-check a theorem over an instance space.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[command(flatten)]
        scope: ScopeArgs,
        /// Leave the wall-time line out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Write every table of a given size in .hg form.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        assoc_only: bool,
        /// Keep one canonical representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for the first instance with a property: non-associative,
    /// bi-neither-one-sided, bi-off-associative or disagreement:<THEOREM>.
    Search {
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[command(flatten)]
        scope: ScopeArgs,
    },
}

#[derive(clap::Args, Debug)]
struct ScopeArgs {
    #[arg(long)]
    size: usize,
    #[arg(long)]
    grid: u32,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    assoc_only: bool,
}

impl ScopeArgs {
    fn scope(&self) -> Result<VerificationScope, Failure> {
        let mode = match (self.samples, self.seed) {
            (None, None) => Mode::Exhaustive,
            (Some(samples), Some(seed)) => Mode::Sampled { samples, seed },
            (Some(_), None) => return Err(Failure::usage("--samples needs an explicit --seed")),
            (None, Some(_)) => return Err(Failure::usage("--seed only applies together with --samples")),
        };
        Ok(VerificationScope { size: self.size, grid: self.grid, mode, associative_only: self.assoc_only })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Right,
    Left,
    Quasi,
    Bi,
}

impl From<KindArg> for IdealKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Right => IdealKind::Right,
            KindArg::Left => IdealKind::Left,
            KindArg::Quasi => IdealKind::Quasi,
            KindArg::Bi => IdealKind::Bi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Definition,
    Characterization,
    Both,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|()| format!("unknown theorem `{s}` (expected T4, T6, T8, T11, P9 or NOTE)"))
}

fn parse_property(s: &str) -> Result<Property, String> {
    match s {
        "non-associative" => Ok(Property::NonAssociative),
        "bi-neither-one-sided" => Ok(Property::BiNeitherOneSided),
        "bi-off-associative" => Ok(Property::BiOffAssociative),
        _ => match s.strip_prefix("disagreement:") {
            Some(t) => parse_theorem(t).map(Property::Disagreement),
            None => Err(format!("unknown property `{s}`")),
        },
    }
}

fn property_name(p: Property) -> String {
    match p {
        Property::NonAssociative => "non-associative".into(),
        Property::BiNeitherOneSided => "bi-neither-one-sided".into(),
        Property::BiOffAssociative => "bi-off-associative".into(),
        Property::Disagreement(t) => format!("disagreement:{t}"),
    }
}

/// A run that ends without a normal report.
#[derive(Debug)]
struct Failure {
    code: i32,
    class: &'static str,
    message: String,
    position: Option<(PathBuf, crate::format::Position)>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, class: "UsageError", message: message.into(), position: None }
    }

    fn parse(path: &Path, e: ParseError) -> Self {
        Failure {
            code: EXIT_INPUT,
            class: e.kind.class(),
            message: e.kind.to_string(),
            position: Some((path.to_path_buf(), e.position)),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure { code: EXIT_INPUT, class: "IoError", message: format!("{}: {e}", path.display()), position: None }
    }
}

impl From<hyperfuzz_core::Error> for Failure {
    fn from(e: hyperfuzz_core::Error) -> Self {
        use hyperfuzz_core::Error as E;
        let class = match &e {
            E::CarrierMismatch { .. } => "CarrierMismatch",
            E::EmptyOperand => "EmptyOperand",
            E::NotAssociative(_) => "NotAssociative",
            E::BudgetExceeded { .. } => "BudgetExceeded",
            E::InvalidScope(_) => "InvalidScope",
            E::SamplingExhausted { .. } => "SamplingExhausted",
        };
        Failure { code: EXIT_INPUT, class, message: e.to_string(), position: None }
    }
}

struct Output {
    report: Rendered,
    code: i32,
}

/// Runs the tool with `args` (program name first), reading the budget
/// override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_budget(args, std::env::var(BUDGET_VAR).ok().as_deref(), out, err)
}

/// Like [`run`] with an explicit value in place of `HYPERFUZZ_BUDGET`.
pub fn run_with_budget<I, T>(args: I, budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let json = cli.json;
    let result = parse_budget(budget).and_then(|budget| execute(cli.command, budget));
    match result {
        Ok(Output { report, code }) => {
            let _ = out.write_all(report.output(json).as_bytes());
            code
        }
        Err(f) => {
            if json {
                let position = f.position.as_ref().map(|(path, p)| {
                    json!({ "file": path.display().to_string(), "line": p.line, "column": p.column })
                });
                let v = json!({ "error": { "class": f.class, "message": f.message, "position": position } });
                let _ = writeln!(err, "{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            } else {
                match &f.position {
                    Some((path, p)) => {
                        let _ = writeln!(err, "{}:{}: error[{}]: {}", path.display(), p, f.class, f.message);
                    }
                    None => {
                        let _ = writeln!(err, "error[{}]: {}", f.class, f.message);
                    }
                }
            }
            f.code
        }
    }
}

/// Core errors name elements by index; this restates them with the table's names.
fn named(h: &HyperGroupoid, e: hyperfuzz_core::Error) -> Failure {
    let message = match &e {
        hyperfuzz_core::Error::NotAssociative(w) => format!(
            "bi-ideals are only defined on hypersemigroups; ({x}∘{y})*{{{z}}} = {} but {{{x}}}*({y}∘{z}) = {}",
            h.display_set(w.left),
            h.display_set(w.right),
            x = h.name(w.x),
            y = h.name(w.y),
            z = h.name(w.z),
        ),
        _ => return e.into(),
    };
    Failure { message, ..e.into() }
}

fn parse_budget(raw: Option<&str>) -> Result<Budget, Failure> {
    match raw {
        None => Ok(Budget::DEFAULT),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(Budget(n)),
            _ => Err(Failure::usage(format!("{BUDGET_VAR} must be a positive integer, got `{s}`"))),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn load_table(path: &Path) -> Result<HyperGroupoid, Failure> {
    parse_hypergroupoid(&read(path)?).map_err(|e| Failure::parse(path, e))
}

fn load_subset(path: &Path, h: &HyperGroupoid) -> Result<FuzzySubset, Failure> {
    parse_fuzzy(&read(path)?, h).map_err(|e| Failure::parse(path, e))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::io(path, e))
}

fn execute(command: Command, budget: Budget) -> Result<Output, Failure> {
    match command {
        Command::Check { table } => {
            let h = load_table(&table)?;
            let r = h.is_hypersemigroup();
            Ok(Output { code: if r.holds() { EXIT_OK } else { EXIT_FAILS }, report: report::associativity(&h, &r) })
        }
        Command::Compose { table, left, right, out } => {
            let h = load_table(&table)?;
            let f = load_subset(&left, &h)?;
            let g = load_subset(&right, &h)?;
            let c = fuzzy::compose(&h, &f, &g)?;
            let text = render_fuzzy(&h, &c);
            let grades: Vec<_> = c.grades().iter().map(|g| g.to_string()).collect();
            let mut json = json!({ "names": h.names(), "grades": grades });
            let report_text = match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    json["out"] = path.display().to_string().into();
                    format!("wrote {}\n", path.display())
                }
                None => text,
            };
            Ok(Output { code: EXIT_OK, report: Rendered { text: report_text, json } })
        }
        Command::Ideal { table, subset, kind, method } => {
            let h = load_table(&table)?;
            let f = load_subset(&subset, &h)?;
            let kind = IdealKind::from(kind);
            let methods: &[Method] = match method {
                MethodArg::Definition => &[Method::Definition],
                MethodArg::Characterization => &[Method::Characterization],
                MethodArg::Both => &[Method::Definition, Method::Characterization],
            };
            let reports = methods
                .iter()
                .map(|&m| ideals::check(&h, &f, kind, m))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| named(&h, e))?;
            let agree = (reports.len() == 2).then(|| reports[0].holds() == reports[1].holds());
            let unsound = reports.iter().any(|r| r.witness.is_some_and(|w| !w.revalidate(&h, &f)));
            let code = if agree == Some(false) || unsound {
                EXIT_INTERNAL
            } else if reports[0].holds() {
                EXIT_OK
            } else {
                EXIT_FAILS
            };
            Ok(Output { code, report: report::ideal(&h, &reports, agree) })
        }
        Command::Classify { table, subset } => {
            let h = load_table(&table)?;
            let f = load_subset(&subset, &h)?;
            let p = ideals::classify(&h, &f).map_err(|e| named(&h, e))?;
            Ok(Output { code: EXIT_OK, report: report::profile(&p) })
        }
        Command::Verify { theorem, scope, no_timing } => {
            let scope = scope.scope()?;
            let started = Instant::now();
            let mut r = verify_theorem(theorem, &scope, budget)?;
            r.elapsed = Some(started.elapsed());
            let code = if r.passed() { EXIT_OK } else { EXIT_INTERNAL };
            Ok(Output { code, report: report::verification(&r, !no_timing) })
        }
        Command::Enumerate { size, assoc_only, canonical, out } => enumerate(size, assoc_only, canonical, out, budget),
        Command::Search { property, scope } => {
            let scope = scope.scope()?;
            let found = find_counterexample(property, &scope, budget)?;
            let code = if found.is_some() { EXIT_FAILS } else { EXIT_OK };
            Ok(Output { code, report: report::search(&property_name(property), &scope, found.as_ref()) })
        }
    }
}

fn enumerate(
    size: usize,
    assoc_only: bool,
    canonical: bool,
    out: Option<PathBuf>,
    budget: Budget,
) -> Result<Output, Failure> {
    if size == 0 {
        return Err(Failure::usage("--size must be at least 1"));
    }
    let mut picked: Vec<(u64, HyperGroupoid)> = Vec::new();
    let mut classes = BTreeMap::new();
    for (index, h) in enumerate_hypergroupoids(size, budget)?.enumerate() {
        let index = index as u64;
        if assoc_only && !h.is_hypersemigroup().holds() {
            continue;
        }
        if canonical {
            let key = canonical_key(&h, budget)?;
            if classes.contains_key(&key) {
                continue;
            }
            let representative = key.to_table();
            classes.insert(key, index);
            picked.push((index, representative));
        } else {
            picked.push((index, h));
        }
    }

    if let Some(dir) = &out {
        fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    }
    let mut text = String::new();
    let mut tables = Vec::with_capacity(picked.len());
    for (index, h) in &picked {
        let body = render_hypergroupoid(h);
        let file = match &out {
            Some(dir) => {
                let path = dir.join(format!("n{size}-{index:06}.hg"));
                write_file(&path, &body)?;
                Some(path.display().to_string())
            }
            None => {
                text.push_str(&format!("# table {index}\n{body}\n"));
                None
            }
        };
        tables.push(json!({ "index": index, "file": file, "table": body }));
    }
    match &out {
        Some(dir) => text.push_str(&format!("wrote {} tables to {}\n", picked.len(), dir.display())),
        None => text.push_str(&format!("# {} tables\n", picked.len())),
    }
    let json = json!({
        "size": size,
        "associative_only": assoc_only,
        "canonical": canonical,
        "count": picked.len(),
        "tables": tables,
    });
    Ok(Output { code: EXIT_OK, report: Rendered { text, json } })
}
