//! Command-line front end for `cskit`: file formats and subcommands.

pub mod format;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use cskit::acyclic::{implication_graph, is_acyclic_ib, topological_order};
use cskit::base::{degree_profile, normalize, ImplicationalBase};
use cskit::closure::{
    attached_element, closure_fc, default_oracle_cap, irr_oracle, is_convex_geometry_oracle, mingen_oracle,
};
use cskit::critgen::critical_base_from_ib;
use cskit::hypergraph::{minimal_transversals_bounded, Hypergraph};
use cskit::ics_enum::{ics_enum, Algorithm, EnumConfig, DEFAULT_DEGREE_BOUND};
use cskit::instances;
use cskit::mib_gen::{cb_gen_with, MibConfig};
use cskit::{AttachedFamily, Element, ElementSet, Error, GroundSet};

use format::{Family, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Conclusion,
    Premise,
    Oracle,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Auto => Algorithm::Auto,
            Algo::Conclusion => Algorithm::Conclusion,
            Algo::Premise => Algorithm::Premise,
            Algo::Oracle => Algorithm::Oracle,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "cskit", version, about = "Translate between implicational bases and irreducible closed sets")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the closure of a set under a base.
    Close {
        /// Base file, or `-` for standard input.
        base: PathBuf,
        /// Elements of the set; each argument may hold several names.
        elements: Vec<String>,
    },
    /// Enumerate the irreducible closed sets of a base.
    Irr {
        base: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Degree bound for the automatic algorithm choice.
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND, value_parser = positive)]
        bound: usize,
        /// Buffer the output and sort it by element, then set.
        #[arg(long)]
        canonical: bool,
        /// Ground-set size limit for oracle mode (default from CSKIT_ORACLE_CAP or 20).
        #[arg(long, value_parser = positive)]
        cap: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the critical base from a family of irreducible closed sets.
    Critbase {
        family: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND, value_parser = positive)]
        bound: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print size, degrees, acyclicity and a topological order of a base.
    Stats { base: PathBuf },
    /// Write an instance family.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Cross-check a base (and optionally a family) against the oracles.
    Verify {
        base: PathBuf,
        /// Family of irreducibles, compared against the oracle.
        #[arg(long)]
        family: Option<PathBuf>,
        #[arg(long, value_parser = positive)]
        cap: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Base with 2^k + 2k irreducibles.
    Exp { k: usize },
    /// Irreducibles whose critical base has 2^k implications into x.
    ExpDual { k: usize },
    /// Base of premise-degree 2 with exponentially many transversals.
    Chain { k: usize },
    /// Seeded random acyclic base.
    Rand {
        n: usize,
        m: usize,
        pmax: usize,
        cmax: usize,
        seed: u64,
    },
    /// Base whose irreducibles at z are the maximal independent sets of a hypergraph.
    Mis { hypergraph: PathBuf },
    /// Conclusion chain built from a hypergraph.
    ConclusionChain { hypergraph: PathBuf },
    /// Equivalent base with every degree at most 3.
    Degree { base: PathBuf },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                Error::InvalidName(_)
                | Error::DuplicateName(_)
                | Error::UnknownElement(_)
                | Error::ElementOutOfRange { .. }
                | Error::GroundMismatch { .. }
                | Error::EmptyConclusion
                | Error::OverlappingImplication => 2,
                Error::MissingAncestor(_) | Error::ExtractionFailed(_) => 4,
                _ => 3,
            },
            CliError::Failed(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &Path, stdin: &mut dyn Read) -> CliResult<String> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_base(path: &Path, stdin: &mut dyn Read) -> CliResult<ImplicationalBase> {
    format::parse_base(&read_input(path, stdin)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn read_family(path: &Path, stdin: &mut dyn Read) -> CliResult<Family> {
    format::parse_family(&read_input(path, stdin)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn read_hypergraph(path: &Path, stdin: &mut dyn Read) -> CliResult<Hypergraph> {
    match read_family(path, stdin)? {
        Family::Plain(f) => {
            let g = f.ground().clone();
            Ok(Hypergraph::new(g.clone(), g.full_set(), f.into_sets())?)
        }
        Family::Attached(_) => Err(CliError::Usage("hypergraph files use plain `set` lines".into())),
    }
}

/// Attaches each member of a plain family to its unique element.
fn attach(family: Family) -> CliResult<AttachedFamily> {
    match family {
        Family::Attached(f) => Ok(f),
        Family::Plain(f) => {
            let ground = f.ground().clone();
            let mut out = AttachedFamily::new(ground.clone());
            for m in f.iter() {
                out.push(attached_element(&ground, &f, m)?, m.clone());
            }
            Ok(out)
        }
    }
}

fn write_to(output: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    let io_err = |path: &Path| {
        let path = path.display().to_string();
        move |source| CliError::Io { path, source }
    };
    match output {
        Some(p) => fs::write(p, text).map_err(io_err(p)),
        None => stdout.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>"))),
    }
}

fn cap_or_default(cap: Option<usize>) -> usize {
    cap.unwrap_or_else(default_oracle_cap)
}

fn cmd_close(base: &Path, elements: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    let ib = read_base(base, stdin)?;
    let names: Vec<&str> = elements.iter().flat_map(|s| s.split_whitespace()).collect();
    let y = ib.ground().set(names)?;
    let c = closure_fc(&ib, &y);
    write_to(&None, stdout, &format!("{}\n", ib.ground().format_set(&c)))
}

struct IrrArgs<'a> {
    base: &'a Path,
    algo: Algo,
    bound: usize,
    canonical: bool,
    cap: usize,
    output: &'a Option<PathBuf>,
}

fn cmd_irr(args: IrrArgs<'_>, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    let ib = read_base(args.base, stdin)?;
    let g = ib.ground().clone();
    let config = EnumConfig {
        algorithm: args.algo.into(),
        bound: args.bound,
        oracle_cap: args.cap,
    };
    let mut file;
    let out: &mut dyn Write = match args.output {
        Some(p) => {
            file = BufWriter::new(fs::File::create(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?);
            &mut file
        }
        None => stdout,
    };
    let io_err = |source| CliError::Io {
        path: "<output>".into(),
        source,
    };
    writeln!(out, "{}", format::ground_line(&g)).map_err(io_err)?;
    let mut buffered: Vec<(Element, ElementSet)> = Vec::new();
    let mut write_failure = None;
    let stats = ics_enum(&ib, config, &mut |x: Element, m: &ElementSet| {
        if args.canonical {
            buffered.push((x, m.clone()));
        } else if let Err(e) = writeln!(out, "{}", format::attached_line(&g, x, m)) {
            write_failure = Some(e);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if let Some(e) = write_failure {
        return Err(io_err(e));
    }
    buffered.sort();
    for (x, m) in &buffered {
        writeln!(out, "{}", format::attached_line(&g, *x, m)).map_err(io_err)?;
    }
    if stats.discarded > 0 {
        log::warn!("{} neighbour candidates were discarded", stats.discarded);
    }
    writeln!(out, "# count: {}", stats.emitted).map_err(io_err)?;
    out.flush().map_err(io_err)
}

fn cmd_critbase(
    family: &Path,
    config: MibConfig,
    output: &Option<PathBuf>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let irr = attach(read_family(family, stdin)?)?;
    let (cb, diag) = cb_gen_with(&irr, config)?;
    log::info!(
        "critical base: {} implications, {} counterexamples, {} descent fallbacks",
        cb.len(),
        diag.counterexamples,
        diag.descent_fallbacks
    );
    write_to(output, stdout, &format::write_base(&cb))
}

/// One-line summary used by `stats`.
pub fn stats_line(ib: &ImplicationalBase) -> String {
    let ib = normalize(ib);
    let g = ib.ground();
    let d = degree_profile(&ib).summary;
    let order = match topological_order(&implication_graph(&ib)) {
        Ok(order) => order.iter().map(|&e| g.name(e)).collect::<Vec<_>>().join(" "),
        Err(_) => "-".into(),
    };
    format!(
        "n={} m={} pdeg={} cdeg={} deg={} acyclic={} order={}",
        g.len(),
        ib.len(),
        d.pdeg,
        d.cdeg,
        d.deg,
        is_acyclic_ib(&ib),
        order
    )
}

fn cmd_gen(family: &GenFamily, output: &Option<PathBuf>, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    let text = match family {
        GenFamily::Exp { k } => format::write_base(&instances::gen_exponential(*k)),
        GenFamily::ExpDual { k } => format::write_attached(&instances::gen_exponential_dual_irr(*k)),
        GenFamily::Chain { k } => format::write_base(&instances::gen_chain(*k)),
        GenFamily::Rand {
            n,
            m,
            pmax,
            cmax,
            seed,
        } => {
            if *n == 0 || *pmax == 0 || *cmax == 0 {
                return Err(CliError::Usage("n, pmax and cmax must be positive".into()));
            }
            format::write_base(&instances::random_acyclic(*n, *m, *pmax, *cmax, *seed))
        }
        GenFamily::Mis { hypergraph } => {
            format::write_base(&instances::gen_mis_reduction(&read_hypergraph(hypergraph, stdin)?)?)
        }
        GenFamily::ConclusionChain { hypergraph } => {
            let (ib, target) = instances::gen_conclusion_chain(&read_hypergraph(hypergraph, stdin)?)?;
            format!("# target: {}\n{}", ib.ground().name(target), format::write_base(&ib))
        }
        GenFamily::Degree { base } => {
            let (ib, _) = instances::reduce_degree(&read_base(base, stdin)?);
            format::write_base(&ib)
        }
    };
    write_to(output, stdout, &text)
}

fn diff_lines(g: &GroundSet, expected: &AttachedFamily, got: &AttachedFamily) -> Vec<String> {
    let mut out = Vec::new();
    for x in g.elements() {
        for m in expected.of(x).iter().filter(|m| !got.of(x).contains(m)) {
            out.push(format!("  - {}", format::attached_line(g, x, m)));
        }
        for m in got.of(x).iter().filter(|m| !expected.of(x).contains(m)) {
            out.push(format!("  + {}", format::attached_line(g, x, m)));
        }
    }
    out
}

fn cmd_verify(
    base: &Path,
    family: Option<&Path>,
    cap: usize,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let ib = read_base(base, stdin)?;
    let given = family.map(|p| read_family(p, stdin)).transpose()?;
    let g = ib.ground().clone();
    let mut report = Vec::new();
    let mut ok = true;
    let mut check = |name: &str, pass: bool, detail: Vec<String>, report: &mut Vec<String>| {
        ok &= pass;
        report.push(format!("{name}: {}", if pass { "pass" } else { "fail" }));
        report.extend(detail);
    };

    let convex = is_convex_geometry_oracle(&ib, cap)?;
    check("convex geometry", convex, vec![], &mut report);
    if convex {
        let irr = irr_oracle(&ib, cap)?;
        match given {
            Some(family) => {
                if family.ground().names() != g.names() {
                    return Err(CliError::Usage("family and base use different ground sets".into()));
                }
                let irr = irr.clone().canonical();
                match attach(family) {
                    Ok(got) => {
                        let got = got.canonical();
                        check("irr equality", irr == got, diff_lines(&g, &irr, &got), &mut report);
                    }
                    Err(e) => check("irr equality", false, vec![format!("  {e}")], &mut report),
                }
            }
            None if is_acyclic_ib(&normalize(&ib)) && !ib.has_empty_premise() => {
                let got = cskit::ics_enum::enumerate_irr(&ib, EnumConfig::default())?.canonical();
                let irr = irr.clone().canonical();
                check("irr equality", irr == got, diff_lines(&g, &irr, &got), &mut report);
            }
            None => report.push("irr equality: skipped (cyclic base and no family)".into()),
        }

        let mut dual_ok = true;
        let mut detail = Vec::new();
        for x in g.elements() {
            let edges: Vec<ElementSet> = irr.of(x).iter().map(|m| m.with(x).complement()).collect();
            let h = Hypergraph::new(g.clone(), g.full_set().without(x), edges)?;
            let mhs = minimal_transversals_bounded(&h, g.len()).canonical();
            let mingen = mingen_oracle(&ib, x, cap)?.canonical();
            if mhs != mingen {
                dual_ok = false;
                detail.push(format!("  element {}", g.name(x)));
            }
        }
        check("duality", dual_ok, detail, &mut report);

        if is_acyclic_ib(&normalize(&ib)) && !ib.has_empty_premise() {
            let from_ib = critical_base_from_ib(&ib)?;
            let from_irr = cb_gen_with(&irr, MibConfig::default())?.0;
            check("critical base round trip", from_ib == from_irr, vec![], &mut report);
        } else {
            report.push("critical base round trip: skipped (base is not acyclic)".into());
        }
    }
    let mut text = report.join("\n");
    text.push('\n');
    write_to(&None, stdout, &text)?;
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed("verification failed".into()))
    }
}

/// Runs one subcommand, returning the process exit code.
pub fn run(cfg: RunConfig, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cfg.command {
        Command::Close { base, elements } => cmd_close(base, elements, stdin, stdout),
        Command::Irr {
            base,
            algo,
            bound,
            canonical,
            cap,
            output,
        } => cmd_irr(
            IrrArgs {
                base,
                algo: *algo,
                bound: *bound,
                canonical: *canonical,
                cap: cap_or_default(*cap),
                output,
            },
            stdin,
            stdout,
        ),
        Command::Critbase {
            family,
            algo,
            bound,
            output,
        } => cmd_critbase(
            family,
            MibConfig {
                algorithm: (*algo).into(),
                bound: *bound,
            },
            output,
            stdin,
            stdout,
        ),
        Command::Stats { base } => read_base(base, stdin)
            .and_then(|ib| write_to(&None, stdout, &format!("{}\n", stats_line(&ib)))),
        Command::Gen { family, output } => cmd_gen(family, output, stdin, stdout),
        Command::Verify { base, family, cap } => {
            cmd_verify(base, family.as_deref(), cap_or_default(*cap), stdin, stdout)
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "cskit: {e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(cfg, stdin, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            code
        }
    }
}
