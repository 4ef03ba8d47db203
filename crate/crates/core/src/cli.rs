//! Command-line surface. Exit codes: 0 success / pass, 1 violation or
//! counterexample candidate, 2 input or usage error, 3 search budget
//! exhausted.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, STANDARD};
use crate::cover::Cover;
use crate::discharge::{
    audit, check_structural_lemmas, rational, run_rules, special_vertex_analysis, RuleSet,
};
use crate::graph::{PlaneGraph, Profile};
use crate::hunt::{hunt, HuntConfig};
use crate::report::{sha256_hex, RunReport, SolveSection, TransversalFile, VerifySection};
use crate::rotation::{parse_rotation_file, write_rotation_file};
use crate::solver::{find_ba, find_defective_dp, verify_ba, verify_defective};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_NODE_LIMIT: u64 = 5_000_000;

#[derive(Parser, Debug)]
#[command(name = "planar-dp", version, about = "DP-coloring solvers and discharging checks for plane graphs")]
struct Cli {
    /// Also write the full run report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolveMode {
    Ba,
    Defect,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoverKind {
    Identity,
    Random,
}

#[derive(clap::Args, Debug)]
struct CoverArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, value_enum, default_value = "identity")]
    cover: CoverKind,
    /// Read the cover from a JSON file instead of building one.
    #[arg(long, conflicts_with = "cover")]
    cover_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random covers use a perfect matching on every edge.
    #[arg(long)]
    full: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the faces of an embedded graph.
    Faces { file: PathBuf },
    /// Hypotheses, reducible configurations, lemma items and special vertices.
    Structure {
        file: PathBuf,
        #[arg(long, default_value = "no48")]
        profile: Profile,
    },
    /// Run a discharging rule set and audit the ledger.
    Discharge {
        file: PathBuf,
        #[arg(long, default_value = "rs48")]
        rules: RuleSet,
    },
    /// Search for a B_A- or defective coloring of a cover.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: SolveMode,
        #[command(flatten)]
        cover: CoverArgs,
        /// Defect budgets d1,...,dk.
        #[arg(long, value_delimiter = ',')]
        defects: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Write the transversal found here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a transversal file against a cover.
    Verify {
        file: PathBuf,
        #[arg(long)]
        transversal: PathBuf,
        /// Check the B_A conditions using the file's order.
        #[arg(long)]
        order: bool,
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long, value_delimiter = ',')]
        defects: Option<Vec<usize>>,
    },
    /// Random full-matching covers of every graph that meets the profile.
    Hunt {
        #[arg(long)]
        profile: Profile,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Half-open seed range A..B.
        #[arg(long, value_parser = parse_range)]
        seeds: std::ops::Range<u64>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Where replayable covers of candidates are written.
        #[arg(long, default_value = ".")]
        candidates_dir: PathBuf,
        /// Catalog names or rotation files; defaults to the standard catalog.
        graphs: Vec<String>,
    },
    /// Write a catalog graph as a rotation file.
    Gen {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn parse_range(s: &str) -> Result<std::ops::Range<u64>, String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: u64 = a.parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..b)
}

/// Failure that maps to an exit code.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

struct Input {
    graph: PlaneGraph,
    name: String,
    sha256: String,
}

fn read_graph(path: &Path) -> Result<Input, Fail> {
    let bytes = std::fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| usage(format!("{}: not UTF-8", path.display())))?;
    let file = parse_rotation_file(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Input {
        graph: file.graph,
        name: file.name,
        sha256: sha256_hex(&bytes),
    })
}

fn build_cover(g: &PlaneGraph, args: &CoverArgs) -> Result<(Cover, String), Fail> {
    if let Some(path) = &args.cover_file {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let cover: Cover =
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: bad cover: {e}", path.display())))?;
        if cover.vertex_count() != g.vertex_count() {
            return Err(usage(format!(
                "cover has {} vertices, graph has {}",
                cover.vertex_count(),
                g.vertex_count()
            )));
        }
        let validation = cover.validate();
        if !validation.valid {
            return Err(usage(format!("invalid cover: {:?}", validation.violations)));
        }
        return Ok((cover, format!("file {}", path.display())));
    }
    if args.k == 0 {
        return Err(usage("k must be at least 1"));
    }
    Ok(match args.cover {
        CoverKind::Identity => (Cover::identity(g, args.k), "identity".to_string()),
        CoverKind::Random => (
            Cover::random(g, args.k, args.seed, args.full),
            format!("random seed={} full={}", args.seed, args.full),
        ),
    })
}

fn defects_for(k: usize, defects: Option<Vec<usize>>) -> Result<Vec<usize>, Fail> {
    let d = defects.ok_or_else(|| usage("--defects is required for defect mode"))?;
    if d.len() != k {
        return Err(usage(format!("--defects has {} entries, expected k = {k}", d.len())));
    }
    Ok(d)
}

fn run(cli: Cli, report: &mut RunReport, out: &mut String) -> Result<i32, Fail> {
    match cli.command {
        Command::Faces { file } => {
            let input = read_graph(&file)?;
            report.input_sha256 = Some(input.sha256);
            let g = &input.graph;
            let _ = writeln!(
                out,
                "{}: {} vertices, {} edges, {} faces",
                input.name,
                g.vertex_count(),
                g.edge_count(),
                g.face_count()
            );
            for f in g.faces() {
                let _ = writeln!(
                    out,
                    "f{} degree {}{} walk {:?}",
                    f.id,
                    f.degree(),
                    if f.simple { "" } else { " (not simple)" },
                    f.walk
                );
            }
            Ok(EXIT_OK)
        }
        Command::Structure { file, profile } => {
            let input = read_graph(&file)?;
            report.input_sha256 = Some(input.sha256);
            report.profile = Some(profile);
            let g = &input.graph;
            let lemmas = check_structural_lemmas(g, profile);
            let reducible = g.find_reducible();
            let special = special_vertex_analysis(g);
            let h = &lemmas.hypotheses;
            let _ = writeln!(
                out,
                "{} [{profile}]: connected={} δ={} (vertex {}) cycle conditions {}",
                input.name,
                h.connected,
                h.min_degree,
                h.min_degree_vertex,
                if h.cycles_ok() { "met" } else { "not met" }
            );
            for failure in h.failures() {
                let _ = writeln!(out, "  hypothesis: {failure}");
            }
            let _ = writeln!(out, "reducible configurations: {}", reducible.len());
            for item in &lemmas.items {
                let status = match &item.verdict {
                    crate::discharge::Verdict::Holds => "holds".to_string(),
                    crate::discharge::Verdict::Violated { witness } => format!("VIOLATED: {}", witness.note),
                    crate::discharge::Verdict::HypothesisNotMet {
                        conclusion_holds, ..
                    } => format!(
                        "hypothesis not met; conclusion {}",
                        if *conclusion_holds { "holds" } else { "fails" }
                    ),
                };
                let _ = writeln!(out, "  {:?}: {status}", item.item);
            }
            for r in &special {
                let _ = writeln!(
                    out,
                    "special v{}: identification {}, f2 triangles {:?}, others {:?}",
                    r.vertex, r.identification.holds, r.five_face_triangles, r.other_specials
                );
            }
            let code = if lemmas.sound() { EXIT_OK } else { EXIT_VIOLATION };
            report.hypotheses = Some(lemmas.hypotheses.clone());
            report.reducible = Some(reducible);
            report.lemmas = Some(lemmas);
            report.special = Some(special);
            Ok(code)
        }
        Command::Discharge { file, rules } => {
            let input = read_graph(&file)?;
            report.input_sha256 = Some(input.sha256);
            report.rules = Some(rules);
            let g = &input.graph;
            let ledger = run_rules(g, rules).map_err(|e| usage(e.to_string()))?;
            let a = audit(g, &ledger);
            let _ = writeln!(
                out,
                "{} [{rules}]: Σμ = {}, Σμ* = {}, {} transfers, audit {}",
                input.name,
                rational::format(&a.initial_sum),
                rational::format(&a.final_sum),
                ledger.transfers.len(),
                if a.clean() { "clean" } else { "FAILED" }
            );
            for c in &ledger.elements {
                let _ = writeln!(
                    out,
                    "  {} d={} μ={} μ*={}",
                    c.element,
                    c.degree,
                    rational::format(&c.initial),
                    rational::format(&c.final_charge)
                );
            }
            for n in &a.negatives {
                let _ = writeln!(
                    out,
                    "negative {}: {} reducible nearby, {} unmet hypotheses",
                    n.element,
                    n.reducible.len(),
                    n.hypothesis_failures.len()
                );
            }
            // A negative charge is only a violation when nothing explains it.
            let unexplained = a
                .negatives
                .iter()
                .any(|n| n.reducible.is_empty() && n.hypothesis_failures.is_empty());
            let code = if a.clean() && !unexplained { EXIT_OK } else { EXIT_VIOLATION };
            report.ledger = Some(ledger);
            report.audit = Some(a);
            Ok(code)
        }
        Command::Solve {
            file,
            mode,
            cover,
            defects,
            node_limit,
            out: out_path,
        } => {
            let input = read_graph(&file)?;
            report.input_sha256 = Some(input.sha256);
            report.seed = matches!(cover.cover, CoverKind::Random).then_some(cover.seed);
            let (h, cover_desc) = build_cover(&input.graph, &cover)?;
            let (mode_name, defects, verdict, nodes, tf) = match mode {
                SolveMode::Ba => {
                    let s = find_ba(&h, node_limit).map_err(|e| usage(e.to_string()))?;
                    let tf = s.outcome.found().map(TransversalFile::from_ordered);
                    ("ba", None, s.outcome.verdict(), s.nodes, tf)
                }
                SolveMode::Defect => {
                    let d = defects_for(h.k(), defects)?;
                    let s = find_defective_dp(&h, &d, node_limit).map_err(|e| usage(e.to_string()))?;
                    let tf = s.outcome.found().map(TransversalFile::from_transversal);
                    ("defect", Some(d), s.outcome.verdict(), s.nodes, tf)
                }
            };
            let _ = writeln!(out, "{} [{mode_name}, {cover_desc}]: {verdict} after {nodes} nodes", input.name);
            if let Some(tf) = &tf {
                let json = serde_json::to_string(tf).expect("transversal serializes");
                let _ = writeln!(out, "{json}");
                if let Some(p) = out_path {
                    std::fs::write(&p, json + "\n").map_err(|e| usage(format!("{}: {e}", p.display())))?;
                }
            }
            let code = match verdict {
                "found" => EXIT_OK,
                "none" => EXIT_VIOLATION,
                _ => EXIT_BUDGET,
            };
            report.solve = Some(SolveSection {
                mode: mode_name.to_string(),
                k: h.k(),
                defects,
                cover: cover_desc,
                verdict: verdict.to_string(),
                nodes,
                transversal: tf,
            });
            Ok(code)
        }
        Command::Verify {
            file,
            transversal,
            order,
            cover,
            defects,
        } => {
            let input = read_graph(&file)?;
            report.input_sha256 = Some(input.sha256);
            let (h, _) = build_cover(&input.graph, &cover)?;
            let text = std::fs::read_to_string(&transversal)
                .map_err(|e| usage(format!("{}: {e}", transversal.display())))?;
            let tf: TransversalFile = serde_json::from_str(&text)
                .map_err(|e| usage(format!("{}: bad transversal: {e}", transversal.display())))?;
            let n = h.vertex_count();
            let (mode, pass, details) = if order {
                let ot = tf
                    .ordered(n)
                    .map_err(|e| usage(e.to_string()))?
                    .ok_or_else(|| usage("--order needs an `order` array in the transversal file"))?;
                let r = verify_ba(&h, &ot).map_err(|e| usage(e.to_string()))?;
                match r.violation {
                    Some(v) => {
                        let _ = writeln!(
                            out,
                            "FAIL: condition ({}) violated at vertex {} (position {})",
                            v.condition, v.vertex, v.position
                        );
                    }
                    None => {
                        let _ = writeln!(out, "PASS: B_A conditions hold");
                    }
                }
                ("ba", r.pass, serde_json::to_value(&r).expect("report serializes"))
            } else {
                let d = defects_for(h.k(), defects)?;
                let t = tf.transversal(n).map_err(|e| usage(e.to_string()))?;
                let r = verify_defective(&h, &t, &d).map_err(|e| usage(e.to_string()))?;
                if r.pass {
                    let _ = writeln!(out, "PASS: every node within its defect budget");
                } else {
                    let _ = writeln!(out, "FAIL: over budget at vertices {:?}", r.violators);
                }
                ("defect", r.pass, serde_json::to_value(&r).expect("report serializes"))
            };
            report.verify = Some(VerifySection {
                mode: mode.to_string(),
                pass,
                details,
            });
            Ok(if pass { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Hunt {
            profile,
            k,
            seeds,
            node_limit,
            threads,
            candidates_dir,
            graphs,
        } => {
            report.profile = Some(profile);
            if k == 0 {
                return Err(usage("k must be at least 1"));
            }
            let names: Vec<String> = if graphs.is_empty() {
                STANDARD.iter().map(|s| s.to_string()).collect()
            } else {
                graphs
            };
            let mut inputs = Vec::new();
            for name in names {
                let path = Path::new(&name);
                let g = if path.is_file() {
                    read_graph(path)?.graph
                } else {
                    catalog::generate(&name).map_err(|e| usage(e.to_string()))?
                };
                inputs.push((name, g));
            }
            let cfg = HuntConfig {
                profile,
                k,
                seeds,
                node_limit,
                threads,
            };
            let r = hunt(&inputs, &cfg);
            let _ = writeln!(
                out,
                "hunt [{profile}, k={k}]: {} graphs, {} runs, {} found, {} candidates, {} exhausted, {} skipped",
                r.graphs.len(),
                r.runs,
                r.found,
                r.candidates.len(),
                r.exhausted.len(),
                r.skipped.len()
            );
            for c in &r.candidates {
                let safe: String = c
                    .graph
                    .chars()
                    .map(|ch| if ch.is_ascii_alphanumeric() { ch } else { '_' })
                    .collect();
                let path = candidates_dir.join(format!("candidate-{safe}-{}.json", c.seed));
                let json = serde_json::to_string_pretty(&c.cover).expect("cover serializes");
                std::fs::write(&path, json).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                let _ = writeln!(out, "candidate {} seed {} -> {}", c.graph, c.seed, path.display());
            }
            let code = if !r.candidates.is_empty() || !r.defect_022_failures.is_empty() {
                EXIT_VIOLATION
            } else if !r.exhausted.is_empty() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            report.hunt = Some(r);
            Ok(code)
        }
        Command::Gen { name, output } => {
            let g = catalog::generate(&name).map_err(|e| usage(e.to_string()))?;
            let text = write_rotation_file(&name, &g);
            std::fs::write(&output, &text).map_err(|e| usage(format!("{}: {e}", output.display())))?;
            report.input_sha256 = Some(sha256_hex(text.as_bytes()));
            let _ = writeln!(out, "wrote {name} to {}", output.display());
            Ok(EXIT_OK)
        }
    }
}

/// The invocation as recorded in reports: argv without the program name and
/// without the report destination, so reruns compare byte for byte.
fn command_line(argv: &[String]) -> String {
    let mut parts = Vec::new();
    let mut args = argv.iter().skip(1);
    while let Some(a) = args.next() {
        if a == "--json" {
            args.next();
        } else if !a.starts_with("--json=") {
            parts.push(a.as_str());
        }
    }
    parts.join(" ")
}

/// Parses `argv` (including the program name), runs the command and returns
/// its exit code, writing human-readable output to `stdout` and errors to
/// `stderr`.
pub fn dispatch_to<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json_path = cli.json.clone();
    let mut report = RunReport::new(command_line(&argv));
    let mut out = String::new();
    let code = match run(cli, &mut report, &mut out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    };
    let _ = stdout.write_all(out.as_bytes());
    report.exit_code = code;
    if let Some(path) = json_path {
        if let Err(e) = std::fs::write(&path, report.to_json()) {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    code
}

pub fn dispatch<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    dispatch_to(argv, &mut std::io::stdout(), &mut std::io::stderr())
}
