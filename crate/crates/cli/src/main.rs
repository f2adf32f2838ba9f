//! `vlink`: command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict or invalid diagram,
//! 2 syntax or usage error, 3 incomparable diagrams.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use vlink::fixtures::{self, Fixture};
use vlink::{
    compare_homology, ground_genus_upper_bound, presentations, search_equivalent, surface_report,
    universe, HomologyVerdict, LinkDiagram, ParseError, Report, SearchBounds, SearchOutcome,
};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const SYNTAX: u8 = 2;
const INCOMPARABLE: u8 = 3;

#[derive(Parser)]
#[command(name = "vlink", version, about = "Virtual link diagrams as Gauss codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Diagrams are taken from the positional codes, then from each `--file`
/// (one code per non-empty line), then from each `--fixture`.
#[derive(Args)]
struct Inputs {
    codes: Vec<String>,
    #[arg(long = "file", value_name = "PATH")]
    files: Vec<PathBuf>,
    #[arg(long = "fixture", value_name = "NAME")]
    fixtures: Vec<String>,
}

#[derive(Args)]
struct Bounds {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_crossings: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    /// Visited-node budget.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Wall-clock limit in milliseconds.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    time_limit_ms: Option<u64>,
}

impl Bounds {
    fn search_bounds(&self) -> SearchBounds {
        let mut b = SearchBounds::new(self.max_crossings as usize, self.max_steps as usize);
        if let Some(n) = self.budget {
            b = b.with_max_nodes(n as usize);
        }
        if let Some(ms) = self.time_limit_ms {
            b = b.with_time_limit(Duration::from_millis(ms));
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a Gauss code; prints "ok" or the violation as JSON.
    Validate {
        #[command(flatten)]
        input: Inputs,
    },
    /// Every invariant of one diagram.
    Report {
        #[command(flatten)]
        input: Inputs,
        /// One JSON object instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Compare the link-homology classes of two diagrams.
    Homologous {
        #[command(flatten)]
        input: Inputs,
    },
    /// Surface report; with bounds, also search for a smaller genus.
    Genus {
        #[command(flatten)]
        input: Inputs,
        #[arg(long, requires = "max_steps", value_parser = clap::value_parser!(u64).range(1..))]
        max_crossings: Option<u64>,
        #[arg(long, requires = "max_crossings", value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
    },
    /// The underlying shadow: ids only.
    Universe {
        #[command(flatten)]
        input: Inputs,
    },
    /// Group and quandle presentations, one JSON line each.
    Presentations {
        #[command(flatten)]
        input: Inputs,
    },
    /// Look for a Reidemeister move sequence between two diagrams.
    Search {
        #[command(flatten)]
        input: Inputs,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// The built-in example corpus.
    Fixtures {
        /// Read this manifest instead of the built-in one.
        #[arg(long, value_name = "PATH", global = true)]
        manifest: Option<PathBuf>,
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Show { name: String },
}

/// A failure that ends the command with the given exit code.
struct Exit(u8);

struct Io {
    out: Vec<u8>,
    err: Vec<u8>,
}

impl Io {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.extend_from_slice(s.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    fn error(&mut self, s: impl AsRef<str>) {
        self.err.extend_from_slice(s.as_ref().as_bytes());
        self.err.push(b'\n');
    }
}

fn load_manifest(path: &Option<PathBuf>, io: &mut Io) -> Result<Vec<Fixture>, Exit> {
    match path {
        None => Ok(fixtures::builtin()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                io.error(format!("error: {}: {e}", p.display()));
                Exit(SYNTAX)
            })?;
            fixtures::parse_manifest(&text).map_err(|e| {
                io.error(format!("error: {}: {e}", p.display()));
                Exit(SYNTAX)
            })
        }
    }
}

fn raw_inputs(input: &Inputs, io: &mut Io) -> Result<Vec<String>, Exit> {
    let mut out = input.codes.clone();
    for path in &input.files {
        let text = std::fs::read_to_string(path).map_err(|e| {
            io.error(format!("error: {}: {e}", path.display()));
            Exit(SYNTAX)
        })?;
        out.extend(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from));
    }
    for name in &input.fixtures {
        let Some(f) = fixtures::find(name) else {
            io.error(format!("error: no fixture named `{name}`"));
            return Err(Exit(SYNTAX));
        };
        let Some(code) = f.code else {
            io.error(format!("error: fixture `{name}` has no code yet"));
            return Err(Exit(SYNTAX));
        };
        out.push(code);
    }
    Ok(out)
}

fn expect_count(raw: Vec<String>, n: usize, io: &mut Io) -> Result<Vec<String>, Exit> {
    if raw.len() != n {
        io.error(format!("error: expected {n} diagram(s), got {}", raw.len()));
        return Err(Exit(SYNTAX));
    }
    Ok(raw)
}

fn parse(code: &str, io: &mut Io) -> Result<LinkDiagram, Exit> {
    LinkDiagram::parse(code).map_err(|e| match e {
        ParseError::Syntax { .. } => {
            io.error(format!("error: {e}"));
            Exit(SYNTAX)
        }
        ParseError::Invalid(v) => {
            io.error(v.to_json().to_string());
            Exit(NEGATIVE)
        }
    })
}

fn diagrams(input: &Inputs, n: usize, io: &mut Io) -> Result<Vec<LinkDiagram>, Exit> {
    let raw = expect_count(raw_inputs(input, io)?, n, io)?;
    raw.iter().map(|c| parse(c, io)).collect()
}

fn one(input: &Inputs, io: &mut Io) -> Result<LinkDiagram, Exit> {
    Ok(diagrams(input, 1, io)?.remove(0))
}

fn text_report(r: &Report, io: &mut Io) {
    io.line(format!("code: {}", r.code));
    io.line(format!("components: {}", r.components));
    io.line(format!("crossings: {}", r.crossings));
    io.line(format!("universe: {}", r.universe));
    io.line("linking matrix:");
    for row in r.linking_matrix.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        io.line(format!("  {}", cells.join(" ")));
    }
    io.line(format!("homology normal form: {}", r.homology.normal_form));
    let cert = serde_json::to_value(r.certificate).expect("certificate serializes");
    io.line(format!(
        "classicality: {}{}",
        cert["verdict"].as_str().unwrap_or_default(),
        match r.certificate.witness {
            Some((j, k)) => format!(" (witness {}, {})", j + 1, k + 1),
            None => String::new(),
        }
    ));
    io.line(format!(
        "surface: chi {}, boundary {}, genus {}",
        r.surface.euler_characteristic, r.surface.boundary_components, r.surface.canonical_genus
    ));
    io.line(format!("classically realizable: {}", r.classically_realizable));
    io.line(format!(
        "presentations: {} generators, {} relations",
        r.presentations.group.generators.len(),
        r.presentations.group.relations.len()
    ));
}

fn run(cli: Cli, io: &mut Io) -> Result<u8, Exit> {
    match cli.command {
        Command::Validate { input } => {
            let raw = expect_count(raw_inputs(&input, io)?, 1, io)?;
            match LinkDiagram::parse(&raw[0]) {
                Ok(_) => {
                    io.line("ok");
                    Ok(OK)
                }
                Err(ParseError::Invalid(v)) => {
                    io.line(v.to_json().to_string());
                    Ok(NEGATIVE)
                }
                Err(e @ ParseError::Syntax { .. }) => {
                    io.error(format!("error: {e}"));
                    Ok(SYNTAX)
                }
            }
        }
        Command::Report { input, json } => {
            let r = Report::new(&one(&input, io)?);
            if json {
                io.line(r.to_json());
            } else {
                text_report(&r, io);
            }
            Ok(OK)
        }
        Command::Homologous { input } => {
            let ds = diagrams(&input, 2, io)?;
            let (word, code) = match compare_homology(&ds[0], &ds[1]) {
                HomologyVerdict::Homologous => ("homologous", OK),
                HomologyVerdict::NotHomologous => ("not-homologous", NEGATIVE),
                HomologyVerdict::Incomparable => ("incomparable", INCOMPARABLE),
            };
            io.line(word);
            Ok(code)
        }
        Command::Genus { input, max_crossings, max_steps, budget } => {
            let d = one(&input, io)?;
            io.line(surface_report(&d).to_json());
            if let (Some(c), Some(s)) = (max_crossings, max_steps) {
                let mut b = SearchBounds::new(c as usize, s as usize);
                if let Some(n) = budget {
                    b = b.with_max_nodes(n as usize);
                }
                let g = ground_genus_upper_bound(&d, &b);
                io.line(
                    serde_json::json!({
                        "ground_genus_upper_bound": g.genus,
                        "witness": g.witness.serialize(),
                        "explored": g.explored,
                        "exhaustion": g.exhaustion,
                    })
                    .to_string(),
                );
            }
            Ok(OK)
        }
        Command::Universe { input } => {
            let u = universe(&one(&input, io)?);
            io.line(u.to_string());
            Ok(OK)
        }
        Command::Presentations { input } => {
            let (group, quandle) = presentations(&one(&input, io)?);
            io.line(group.to_json());
            io.line(quandle.to_json());
            Ok(OK)
        }
        Command::Search { input, bounds } => {
            let ds = diagrams(&input, 2, io)?;
            match search_equivalent(&ds[0], &ds[1], &bounds.search_bounds()) {
                SearchOutcome::Found(seq) => {
                    io.out.extend_from_slice(seq.to_json_lines().as_bytes());
                    Ok(OK)
                }
                SearchOutcome::NotFound { exhaustion, explored } => {
                    io.line(
                        serde_json::json!({
                            "status": "not-found",
                            "exhaustion": exhaustion,
                            "explored": explored,
                        })
                        .to_string(),
                    );
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Fixtures { manifest, action } => {
            let all = load_manifest(&manifest, io)?;
            match action {
                FixtureAction::List => {
                    for f in &all {
                        io.line(format!("{}\t{}", f.name, f.code.as_deref().unwrap_or("pending")));
                    }
                    Ok(OK)
                }
                FixtureAction::Show { name } => {
                    let Some(f) = all.iter().find(|f| f.name == name) else {
                        io.error(format!("error: no fixture named `{name}`"));
                        return Err(Exit(SYNTAX));
                    };
                    io.line(
                        serde_json::json!({ "name": f.name, "code": f.code, "notes": f.notes })
                            .to_string(),
                    );
                    Ok(OK)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut io = Io { out: Vec::new(), err: Vec::new() };
    let code = run(cli, &mut io).unwrap_or_else(|Exit(c)| c);
    std::io::stdout().write_all(&io.out).ok();
    std::io::stderr().write_all(&io.err).ok();
    ExitCode::from(code)
}
