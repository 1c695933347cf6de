//! The `toric-ech` command line tool.
//!
//! Domain arguments are a path to a JSON domain file, an inline JSON
//! document, or a shorthand `E(a,b)`, `P(a,b)`, `B(r)`.
//!
//! Exit codes: 0 positive answer, 1 negative answer, 2 inconclusive,
//! 64 usage or parse error, 65 invalid data, 74 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::curves::{curve_check, parse_curve_config, CurveCheckConfig, UniquenessVerdict};
use crate::domain::{
    ball_inradius, ball_outradius, check_ball_sandwich, make_ball, make_ellipsoid, make_polydisk,
    ConvexToricDomain, DomainSpec,
};
use crate::ech::{capacities, capacities_with_witnesses, enumerate_generators, ConvexGenerator};
use crate::error::Error;
use crate::json;
use crate::obstructions::{breaking_analysis, noncontractibility_certificate, CandidateStatus, Verdict};
use crate::orbits::enumerate_orbit_families;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::svg;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

/// Environment variable capping the worker pool (0 or unset: automatic).
pub const THREADS_ENV: &str = "TORIC_ECH_THREADS";

#[derive(Debug, Parser)]
#[command(name = "toric-ech", version, about = "ECH capacities and embedding certificates for convex toric domains")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; the exit code carries the answer.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ECH capacities c_0 .. c_K.
    Capacities {
        domain: String,
        #[arg(long, short = 'k', default_value_t = 10)]
        k: u64,
        /// Also list every minimizing generator.
        #[arg(long)]
        witness: bool,
    },
    /// Embedded Reeb orbit families with action at most L.
    Orbits {
        domain: String,
        #[arg(long)]
        action: String,
    },
    /// Convex generators with action at most the budget.
    Generators {
        domain: String,
        #[arg(long)]
        budget: String,
        /// Drop generators with h-labeled edges.
        #[arg(long)]
        elliptic_only: bool,
    },
    /// Lattice count, ECH index and action of a generator (JSON file or inline).
    Index { generator: String, domain: String },
    /// Look for k <= K with c_k(inner) > c_k(outer).
    CheckEmbed {
        inner: String,
        outer: String,
        #[arg(long, short = 'k', default_value_t = 20)]
        k: u64,
    },
    /// Noncontractibility certificate for the loop of embeddings inner -> outer.
    CertifyLoop { inner: String, outer: String },
    /// Ball radii of one domain, or the ball sandwich between two.
    CheckBall {
        #[arg(required = true, num_args = 1..=2)]
        domains: Vec<String>,
    },
    /// Action-window analysis of cylinder breaking on the inner boundary.
    Breaking { inner: String, outer: String },
    /// Index, transversality, adjunction and uniqueness checks (JSON file or inline).
    CurveCheck { config: Option<String> },
    /// Render profiles (and optionally capacity staircases) to SVG.
    Plot {
        #[arg(required = true)]
        domains: Vec<String>,
        #[arg(long)]
        capacities: Option<u64>,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

fn read_arg(arg: &str, what: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| Failure::Io(format!("cannot read {what} {arg}: {e}")))
}

fn shorthand(arg: &str) -> Option<Result<ConvexToricDomain, Failure>> {
    let s = arg.trim();
    let (head, rest) = s.split_at(s.find('(')?);
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    let nums: Result<Vec<Rational>, Error> = inner.split(',').map(|t| parse_rational(t.trim())).collect();
    let nums = match nums {
        Ok(n) => n,
        Err(e) => return Some(Err(e.into())),
    };
    let built = match (head, nums.as_slice()) {
        ("E", [a, b]) => make_ellipsoid(a.clone(), b.clone()),
        ("P", [a, b]) => make_polydisk(a.clone(), b.clone()),
        ("B", [r]) => make_ball(r.clone()),
        _ => return Some(Err(Failure::Usage(format!("unrecognized domain shorthand {arg}")))),
    };
    Some(built.map_err(Failure::from))
}

fn load_domain(arg: &str) -> Result<ConvexToricDomain, Failure> {
    if !arg.trim_start().starts_with('{') && !Path::new(arg).exists() {
        if let Some(d) = shorthand(arg) {
            return d;
        }
    }
    let text = read_arg(arg, "domain file")?;
    DomainSpec::parse_json(&text).map_err(|e| match e {
        Error::Parse(m) => Failure::Usage(format!("{arg}: {m}")),
        other => Failure::Data(format!("{arg}: {other}")),
    })
}

fn load_rational(s: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("{THREADS_ENV} must be a nonnegative integer, got {v:?}")))?;
    if n > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

struct Output {
    text: String,
    code: i32,
}

fn join(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn emit(json_mode: bool, doc: serde_json::Value, text: String, code: i32) -> Output {
    if json_mode {
        Output { text: json::render(&doc, true) + "\n", code }
    } else {
        Output { text, code }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    configure_threads()?;
    let j = cli.json;
    match &cli.command {
        Command::Capacities { domain, k, witness } => {
            let d = load_domain(domain)?;
            if *witness {
                let ws = capacities_with_witnesses(&d, *k);
                let seq = crate::ech::CapacitySequence {
                    domain: d.clone(),
                    values: ws.iter().map(|w| w.value.clone()).collect(),
                };
                let mut text = join(&seq.values) + "\n";
                for w in &ws {
                    let names: Vec<String> = w.minimizers.iter().map(|g| g.to_orbit_set().to_string()).collect();
                    text += &format!("c_{} = {}: {}\n", w.k, format_rational(&w.value), names.join(", "));
                }
                Ok(emit(j, json::capacities(&seq, Some(&ws)), text, EXIT_POSITIVE))
            } else {
                let seq = capacities(&d, *k);
                let text = join(&seq.values) + "\n";
                Ok(emit(j, json::capacities(&seq, None), text, EXIT_POSITIVE))
            }
        }
        Command::Orbits { domain, action } => {
            let d = load_domain(domain)?;
            let bound = load_rational(action, "--action")?;
            let fams = enumerate_orbit_families(&d, &bound);
            let text: String =
                fams.iter().map(|f| format!("{}\t{}\n", f.label, format_rational(&f.action))).collect();
            Ok(emit(j, json::orbit_families(&d, &bound, &fams), text, EXIT_POSITIVE))
        }
        Command::Generators { domain, budget, elliptic_only } => {
            let d = load_domain(domain)?;
            let b = load_rational(budget, "--budget")?;
            if b < Rational::from_integer(0.into()) {
                return Err(Failure::Usage("--budget must be nonnegative".into()));
            }
            let mut gens = enumerate_generators(&d, &b);
            if *elliptic_only {
                gens.retain(|g| g.generator.hyperbolic_edges() == 0);
            }
            let text: String = gens
                .iter()
                .map(|g| {
                    format!("{}\t{}\t{}\n", format_rational(&g.action), g.ech_index, g.generator.to_orbit_set())
                })
                .collect();
            Ok(emit(j, json::generators(&d, &b, &gens), text, EXIT_POSITIVE))
        }
        Command::Index { generator, domain } => {
            let text = read_arg(generator, "generator file")?;
            let g: ConvexGenerator =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("generator: {e}")))?;
            let d = load_domain(domain)?;
            let text = format!(
                "{}: I = {} (L = {}, h = {}), action = {}\n",
                g.to_orbit_set(),
                g.ech_index(),
                g.lattice_count(),
                g.hyperbolic_edges(),
                format_rational(&g.action(&d))
            );
            Ok(emit(j, json::index(&d, &g), text, EXIT_POSITIVE))
        }
        Command::CheckEmbed { inner, outer, k } => {
            if *k == 0 {
                return Err(Failure::Usage("-k must be at least 1".into()));
            }
            let (di, dout) = (load_domain(inner)?, load_domain(outer)?);
            let ci = capacities(&di, *k).values;
            let co = capacities(&dout, *k).values;
            let found = (1..=*k).find(|&i| ci[i as usize] > co[i as usize]);
            let (text, code) = match found {
                Some(i) => (
                    format!(
                        "obstructed at k={i} (c_{i} = {} > {})\n",
                        format_rational(&ci[i as usize]),
                        format_rational(&co[i as usize])
                    ),
                    EXIT_POSITIVE,
                ),
                None => (format!("no obstruction for k <= {k}\n"), EXIT_NEGATIVE),
            };
            Ok(emit(j, json::check_embed(&di, &dout, &ci, &co, found), text, code))
        }
        Command::CertifyLoop { inner, outer } => {
            let (di, dout) = (load_domain(inner)?, load_domain(outer)?);
            let r = noncontractibility_certificate(&di, &dout);
            let mut text = format!("{}\n", r.verdict);
            for c in &r.checks {
                text += &format!(
                    "  [{}] {}: {} {} {}\n",
                    if c.passed { "pass" } else { "fail" },
                    c.name,
                    format_rational(&c.left),
                    c.relation,
                    format_rational(&c.right)
                );
            }
            if let Some(iv) = &r.ball_interval {
                text += &format!("  ball radius in [{}, {}]\n", format_rational(&iv.lo), format_rational(&iv.hi));
            }
            let code = match r.verdict {
                Verdict::Noncontractible => EXIT_POSITIVE,
                Verdict::ContractibleByBallSandwich => EXIT_NEGATIVE,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            };
            Ok(emit(j, json::certificate(&di, &dout, &r), text, code))
        }
        Command::CheckBall { domains } => {
            let ds = domains.iter().map(|s| load_domain(s)).collect::<Result<Vec<_>, _>>()?;
            if let [d] = ds.as_slice() {
                let text = format!(
                    "inradius {}, outradius {}\n",
                    format_rational(&ball_inradius(d)),
                    format_rational(&ball_outradius(d))
                );
                return Ok(emit(j, json::ball_radii(d), text, EXIT_POSITIVE));
            }
            let (di, dout) = (&ds[0], &ds[1]);
            let (text, code) = match check_ball_sandwich(di, dout) {
                Some(iv) => (
                    format!("ball sandwich: r in [{}, {}]\n", format_rational(&iv.lo), format_rational(&iv.hi)),
                    EXIT_POSITIVE,
                ),
                None => (
                    format!(
                        "no ball sandwich: outradius {} > inradius {}\n",
                        format_rational(&ball_outradius(di)),
                        format_rational(&ball_inradius(dout))
                    ),
                    EXIT_NEGATIVE,
                ),
            };
            Ok(emit(j, json::ball_sandwich(di, dout), text, code))
        }
        Command::Breaking { inner, outer } => {
            let (di, dout) = (load_domain(inner)?, load_domain(outer)?);
            let r = breaking_analysis(&di, &dout)?;
            let mut text =
                format!("window: [{}, {}]\n", format_rational(&r.window.0), format_rational(&r.window.1));
            for c in &r.candidates {
                let status = match c.status {
                    CandidateStatus::Candidate => "candidate",
                    CandidateStatus::ExcludedByAction => "excluded by action",
                    CandidateStatus::ExcludedByIndexActionLemma => "excluded by index/action lemma",
                };
                text += &format!("  {}\tA = {}\tI = {}\t{}\n", c.set, format_rational(&c.action), c.ech_index, status);
            }
            let names: Vec<String> = r.survivors.iter().map(|s| s.to_string()).collect();
            text += &format!("survivors: {}\n", if names.is_empty() { "none".to_string() } else { names.join(", ") });
            text += &format!("hypothesis held: {}\n", r.hypothesis_held);
            if !r.lemma_violations.is_empty() {
                text += "warning: index/action self-check failed\n";
            }
            let code = if r.hypothesis_held { EXIT_POSITIVE } else { EXIT_NEGATIVE };
            Ok(emit(j, json::breaking(&di, &dout, &r), text, code))
        }
        Command::CurveCheck { config } => {
            let cfg = match config {
                None => CurveCheckConfig::default(),
                Some(c) => parse_curve_config(&read_arg(c, "curve configuration")?)?,
            };
            let r = curve_check(&cfg)?;
            let mut text = String::new();
            if let Some(c) = &r.curve {
                text += &format!(
                    "fredholm index {}; automatic transversality {}\n",
                    c.fredholm_index, c.automatic_transversality
                );
            }
            if let Some(a) = &r.adjunction {
                let show = |d: &Option<Rational>| d.as_ref().map(format_rational).unwrap_or_else(|| "unbounded".into());
                text += &format!(
                    "delta in [{}, {}]; contradiction {}\n",
                    show(&a.delta_min),
                    show(&a.delta_max),
                    a.contradiction
                );
            }
            if let Some(u) = &r.uniqueness {
                for s in &u.trace {
                    text += &format!("  {} {} {}   ({})\n", s.quantity, s.relation, format_rational(&s.bound), s.reason);
                }
                text += match u.verdict {
                    UniquenessVerdict::TwoDistinctCylindersImpossible => "two distinct cylinders impossible\n",
                    UniquenessVerdict::NotForced => "uniqueness not forced\n",
                };
            }
            let code = if r.found_contradiction() { EXIT_POSITIVE } else { EXIT_NEGATIVE };
            Ok(emit(j, json::curve_check(&r), text, code))
        }
        Command::Plot { domains, capacities: k, svg: path } => {
            let ds = domains.iter().map(|s| load_domain(s)).collect::<Result<Vec<_>, _>>()?;
            let stairs: Option<Vec<Vec<Rational>>> = k.map(|k| ds.iter().map(|d| capacities(d, k).values).collect());
            let doc = svg::render(&ds, stairs.as_deref());
            fs::write(path, doc).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            let text = format!("wrote {}\n", path.display());
            let doc = serde_json::json!({"svg": path.display().to_string(), "domains": ds.len()});
            Ok(emit(j, doc, text, EXIT_POSITIVE))
        }
    }
}

/// Runs the tool on `args` (including the program name). Output is written
/// once at the end; nothing reaches `out` on failure.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_POSITIVE
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            if !cli.quiet && out.write_all(o.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                let _ = writeln!(err, "toric-ech: cannot write output");
                return EXIT_IO;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "toric-ech: {}", f.message());
            f.code()
        }
    }
}
