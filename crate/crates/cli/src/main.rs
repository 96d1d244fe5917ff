//! Command-line front end: fixtures, knitting, classification, matrix
//! calculus, tube constructions and the finiteness report.

use arqkit_core::arquiver::{parse_ar_quiver, validate, TranslationQuiver};
use arqkit_core::batch::{identity_suite, ExecMode};
use arqkit_core::coxeter::{coxeter, defect};
use arqkit_core::degrees::{cycle_degree_consistency, infer_left_degree};
use arqkit_core::diagram::{cartan, classify, UndirectedGraph};
use arqkit_core::error::Error as CoreError;
use arqkit_core::fixtures;
use arqkit_core::knitting::{
    knit_from_seeds, knit_hereditary, parse_seed_file, KnitDirection, DEFAULT_SLICE_CAP,
};
use arqkit_core::quiver::parse_quiver;
use arqkit_core::sectional::{
    finiteness_verdict, full_sectional_subgraph, left_subgraph_type, subgraph_type, tau_orbits,
};
use arqkit_core::translation::{translation_matrix, Direction};
use arqkit_core::tubes::{coray_insertion, recognize_tube, stable_tube, tree_type};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "arqkit",
    version,
    about = "Translation-quiver toolkit: knitting, classification, Coxeter calculus, tubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Interchange,
    Dot,
    Report,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliDirection {
    Right,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Check a window against the structural invariants.
    Validate { ar_file: PathBuf },
    /// Knit an AR quiver from a hereditary presentation or a seeds file.
    Knit {
        #[arg(long, conflicts_with = "seeds")]
        quiver: Option<PathBuf>,
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "right")]
        direction: CliDirection,
        #[arg(long, default_value_t = DEFAULT_SLICE_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "interchange")]
        format: Format,
    },
    /// Classify an undirected diagram.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the Cartan matrix of an undirected diagram.
    Cartan {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Left subgraph type per component, or the full sectional subgraph at a vertex.
    SubgraphType {
        ar_file: PathBuf,
        #[arg(long)]
        at: Option<String>,
    },
    /// tau-orbits of a window with their stability classes.
    Orbits { ar_file: PathBuf },
    /// Finiteness verdict per connected component.
    Verdict { ar_file: PathBuf },
    /// Coxeter matrix pair of an acyclic quiver.
    Coxeter {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Translation matrix of a slice inside a window.
    TranslationMatrix {
        ar_file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        slice: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        direction: CliDirection,
    },
    /// Verify the stored matrix identities for one family.
    IdentityCheck {
        #[arg(long)]
        family: String,
    },
    /// Defect data of a Euclidean quiver.
    Defect {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Stable tubes: make, insert, recognize.
    Tube {
        #[command(subcommand)]
        action: TubeAction,
    },
    /// Tree type of a stable window from a base vertex.
    TreeType {
        ar_file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Left-degree bounds with certificates, per arrow.
    Degrees {
        ar_file: PathBuf,
        #[arg(long)]
        arrow: Option<String>,
        #[arg(long, default_value_t = 10)]
        cycle_cap: usize,
    },
    /// Render a window as DOT.
    ExportDot { ar_file: PathBuf },
    /// List, show or install the bundled corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum TubeAction {
    Make {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        height: usize,
    },
    Insert {
        ar_file: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(long)]
        n: usize,
    },
    Recognize {
        ar_file: PathBuf,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    List,
    Show {
        name: String,
    },
    Install {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn fixtures_dir() -> Option<PathBuf> {
    std::env::var_os("ARQKIT_FIXTURES").map(PathBuf::from)
}

fn read_window(path: &PathBuf) -> Result<TranslationQuiver, CoreError> {
    let text = read_text(path)?;
    parse_ar_quiver(&text)
}

fn read_text(path: &PathBuf) -> Result<String, CoreError> {
    // bare fixture names resolve against the corpus (and ARQKIT_FIXTURES)
    if !path.exists() {
        if let Some(name) = path.to_str() {
            if let Ok(text) = fixture_lookup(name) {
                return Ok(text);
            }
        }
    }
    std::fs::read_to_string(path).map_err(|e| CoreError::Io(format!("{}: {e}", path.display())))
}

fn fixture_lookup(name: &str) -> Result<String, CoreError> {
    if let Some(dir) = fixtures_dir() {
        let p = dir.join(name);
        if p.exists() {
            return std::fs::read_to_string(&p)
                .map_err(|e| CoreError::Io(format!("{}: {e}", p.display())));
        }
    }
    fixtures::fixture_text(name).map(str::to_string)
}

fn parse_graph_file(text: &str) -> Result<UndirectedGraph, CoreError> {
    // line-oriented: `vertices a b c` and `edges a-b c-d[*mult]`
    let mut g = UndirectedGraph::new();
    let mut section = "";
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("");
        for segment in line.split(';') {
            let mut rest = segment.trim();
            if rest.is_empty() {
                continue;
            }
            if let Some(r) = rest.strip_prefix("vertices") {
                section = "vertices";
                rest = r.trim();
            } else if let Some(r) = rest.strip_prefix("edges") {
                section = "edges";
                rest = r.trim();
            }
            for tok in rest.split_whitespace() {
                match section {
                    "vertices" => {
                        g.add_vertex(tok);
                    }
                    "edges" => {
                        let (pair, mult) = match tok.split_once('*') {
                            Some((p, m)) => (
                                p,
                                m.parse::<u32>().map_err(|_| {
                                    CoreError::Io(format!("bad multiplicity `{m}`"))
                                })?,
                            ),
                            None => (tok, 1),
                        };
                        let (a, b) = pair.split_once('-').ok_or_else(|| {
                            CoreError::Io(format!("bad edge `{tok}`, expected a-b"))
                        })?;
                        g.add_edge_mult(a, b, mult);
                    }
                    _ => {
                        return Err(CoreError::Io(format!(
                            "unexpected token `{tok}` before a section keyword"
                        )))
                    }
                }
            }
        }
    }
    Ok(g)
}

fn emit_window(
    window: &TranslationQuiver,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<(), CoreError> {
    let text = match format {
        Format::Interchange => window.to_interchange(),
        Format::Dot => window.to_dot(),
        Format::Report => format!("{window}\n"),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CoreError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CoreError> {
    match cli.command {
        Command::Validate { ar_file } => {
            let window = read_window(&ar_file)?;
            let report = validate(&window);
            print!("{report}");
            if report.errors().next().is_some() {
                return Err(CoreError::Precondition("validation reported errors".into()));
            }
            if report.is_clean() {
                println!();
            }
            Ok(())
        }
        Command::Knit {
            quiver,
            seeds,
            direction,
            cap,
            out,
            format,
        } => {
            let window = match (quiver, seeds) {
                (Some(qpath), None) => {
                    let q = parse_quiver(&read_text(&qpath)?)?;
                    let dir = match direction {
                        CliDirection::Right => KnitDirection::RightFromProjectives,
                        CliDirection::Left => KnitDirection::LeftFromInjectives,
                    };
                    knit_hereditary(&q, dir, cap)?
                }
                (None, Some(spath)) => {
                    let (seed_window, schedule) = parse_seed_file(&read_text(&spath)?)?;
                    knit_from_seeds(&seed_window, &schedule, cap)?
                }
                _ => {
                    return Err(CoreError::Precondition(
                        "pass exactly one of --quiver or --seeds".into(),
                    ))
                }
            };
            emit_window(&window, format, out.as_ref())
        }
        Command::Classify { graph } => {
            let g = parse_graph_file(&read_text(&graph)?)?;
            println!("{}", classify(&g));
            Ok(())
        }
        Command::Cartan { graph } => {
            let g = parse_graph_file(&read_text(&graph)?)?;
            print!("{}", cartan(&g).render());
            Ok(())
        }
        Command::SubgraphType { ar_file, at } => {
            let window = read_window(&ar_file)?;
            match at {
                Some(id) => {
                    let seed = window
                        .vertex_idx(&id)
                        .ok_or_else(|| CoreError::UnknownVertex(id.clone()))?;
                    let sigma = full_sectional_subgraph(&window, seed);
                    let members: Vec<&str> = sigma
                        .vertices
                        .iter()
                        .map(|&v| window.vertex(v).id.as_str())
                        .collect();
                    println!("subgraph at {id}: {{{}}}", members.join(" "));
                    println!("type: {}", subgraph_type(&window, &sigma)?);
                }
                None => {
                    for (i, comp) in window.connected_components().iter().enumerate() {
                        match left_subgraph_type(comp) {
                            Ok(ty) => println!("component {}: left subgraph type {ty}", i + 1),
                            Err(e) => println!("component {}: {e}", i + 1),
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Orbits { ar_file } => {
            let window = read_window(&ar_file)?;
            let og = tau_orbits(&window);
            for (i, orbit) in og.orbits.iter().enumerate() {
                let members: Vec<&str> = orbit
                    .members
                    .iter()
                    .map(|&v| window.vertex(v).id.as_str())
                    .collect();
                let period = orbit
                    .period
                    .map(|p| format!(" period {p}"))
                    .unwrap_or_default();
                println!(
                    "orbit {}: [{}] {}{}",
                    i + 1,
                    members.join(" "),
                    orbit.class,
                    period
                );
            }
            Ok(())
        }
        Command::Verdict { ar_file } => {
            let window = read_window(&ar_file)?;
            for (i, (comp, verdict)) in finiteness_verdict(&window).iter().enumerate() {
                println!(
                    "component {} ({} vertices): {verdict}",
                    i + 1,
                    comp.vertex_count()
                );
            }
            Ok(())
        }
        Command::Coxeter { quiver } => {
            let q = parse_quiver(&read_text(&quiver)?)?;
            let pair = coxeter(&q)?;
            println!("C:");
            print!("{}", pair.c.render());
            println!("C^-1:");
            print!("{}", pair.c_inv.render());
            Ok(())
        }
        Command::TranslationMatrix {
            ar_file,
            slice,
            direction,
        } => {
            let window = read_window(&ar_file)?;
            let dir = match direction {
                CliDirection::Left => Direction::Left,
                CliDirection::Right => Direction::Right,
            };
            let m = translation_matrix(&window, &slice, dir)?;
            print!("{}", m.render());
            Ok(())
        }
        Command::IdentityCheck { family } => {
            let family = family.to_uppercase();
            let checks = identity_suite(ExecMode::default());
            let wanted: Vec<_> = checks
                .iter()
                .filter(|c| match family.as_str() {
                    "A" => c.name.contains("(A family)"),
                    "D" => c.name.contains("(D family"),
                    "E6" => c.name.contains("(E6)"),
                    "E7" => c.name.contains("(E7)"),
                    "E8" => c.name.contains("(E8)"),
                    _ => false,
                })
                .collect();
            if wanted.is_empty() {
                return Err(CoreError::Precondition(format!(
                    "unknown family `{family}`"
                )));
            }
            let mut ok = true;
            for check in wanted {
                println!(
                    "{}: {}",
                    check.name,
                    if check.pass { "PASS" } else { "FAIL" }
                );
                ok &= check.pass;
            }
            if ok {
                Ok(())
            } else {
                Err(CoreError::Precondition("identity check failed".into()))
            }
        }
        Command::Defect { quiver } => {
            let q = parse_quiver(&read_text(&quiver)?)?;
            let data = defect(&q)?;
            println!("d: {}", data.d);
            let h: Vec<String> = data.h.iter().map(|x| x.to_string()).collect();
            println!("h: {}", h.join(" "));
            let del: Vec<String> = data.del.iter().map(|x| x.to_string()).collect();
            println!("del: {}", del.join(" "));
            Ok(())
        }
        Command::Tube { action } => match action {
            TubeAction::Make { rank, height } => {
                if rank < 1 || height < 1 {
                    return Err(CoreError::Precondition(
                        "rank and height must be positive".into(),
                    ));
                }
                print!("{}", stable_tube(rank, height).to_interchange());
                Ok(())
            }
            TubeAction::Insert { ar_file, at, n } => {
                let window = read_window(&ar_file)?;
                let inserted = coray_insertion(&window, &at, n)?;
                print!("{}", inserted.to_interchange());
                Ok(())
            }
            TubeAction::Recognize { ar_file } => {
                let window = read_window(&ar_file)?;
                match recognize_tube(&window) {
                    Some(params) => {
                        let ins: Vec<String> =
                            params.insertions.iter().map(|n| n.to_string()).collect();
                        println!("rank {}, insertions [{}]", params.rank, ins.join(" "));
                    }
                    None => println!("not recognized as a tube"),
                }
                Ok(())
            }
        },
        Command::TreeType { ar_file, base, cap } => {
            let window = read_window(&ar_file)?;
            let b = window
                .vertex_idx(&base)
                .ok_or_else(|| CoreError::UnknownVertex(base.clone()))?;
            let tt = tree_type(&window, b, cap)?;
            println!("underlying graph: {}", classify(&tt.underlying));
            println!("vertices: {}", tt.underlying.vertex_count());
            println!("truncated: {}", tt.truncated);
            Ok(())
        }
        Command::Degrees {
            ar_file,
            arrow,
            cycle_cap,
        } => {
            let window = read_window(&ar_file)?;
            let arrows: Vec<(usize, usize)> = match arrow {
                Some(spec) => {
                    let (a, b) = spec
                        .split_once(',')
                        .ok_or_else(|| CoreError::Precondition("pass --arrow src,dst".into()))?;
                    let src = window
                        .vertex_idx(a)
                        .ok_or_else(|| CoreError::UnknownVertex(a.into()))?;
                    let dst = window
                        .vertex_idx(b)
                        .ok_or_else(|| CoreError::UnknownVertex(b.into()))?;
                    vec![(src, dst)]
                }
                None => window
                    .arrows()
                    .iter()
                    .map(|a| (a.source, a.target))
                    .collect(),
            };
            for (src, dst) in arrows {
                let bound = infer_left_degree(&window, src, dst)?;
                println!(
                    "{} -> {}: left degree {bound}",
                    window.vertex(src).id,
                    window.vertex(dst).id
                );
            }
            let findings = cycle_degree_consistency(&window, &[], cycle_cap);
            for f in findings {
                println!(
                    "cycle inconsistency [{:?}]: {} ({})",
                    f.side,
                    f.cycle.join(" "),
                    f.message
                );
            }
            Ok(())
        }
        Command::ExportDot { ar_file } => {
            let window = read_window(&ar_file)?;
            print!("{}", window.to_dot());
            Ok(())
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                for name in fixtures::FIXTURE_NAMES {
                    println!("{name}");
                }
                Ok(())
            }
            FixturesAction::Show { name } => {
                print!("{}", fixture_lookup(&name)?);
                Ok(())
            }
            FixturesAction::Install { dir } => {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| CoreError::Io(format!("{}: {e}", dir.display())))?;
                for name in fixtures::FIXTURE_NAMES {
                    let path = dir.join(name);
                    std::fs::write(&path, fixtures::fixture_text(name)?)
                        .map_err(|e| CoreError::Io(format!("{}: {e}", path.display())))?;
                }
                println!(
                    "installed {} fixtures into {}",
                    fixtures::FIXTURE_NAMES.len(),
                    dir.display()
                );
                Ok(())
            }
        },
    }
}
