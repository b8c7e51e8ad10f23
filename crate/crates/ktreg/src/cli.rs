use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use ktreg_core::graph::{is_kt_regular, Edge, Graph, Vertex, VertexSet};
use ktreg_core::solver::{cardinality_bounds, check_set, KtSystem, SolveError, DEFAULT_MAX_T};
use ktreg_core::spectral::spectrum;
use ktreg_core::structures::{self, DesignBlocks, StructureError};
use ktreg_core::{KtCertificate, Solver, SolverConfig};

use crate::graphfile::GraphFile;
use crate::parallel;
use crate::report::{
    tidy, Bounds, Certificate, Diagnostics, GraphOut, JoinOut, Query, Report, SpectrumEntry,
    SrgReport, Status,
};

#[derive(Debug, Parser)]
#[command(name = "ktreg", version, about = "Find (kappa,tau)-regular vertex sets and the structures they certify")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest eigenvalue multiplicity the search will take on.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_T)]
    pub max_t: usize,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find one (kappa,tau)-regular set.
    Find {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        t: usize,
        file: PathBuf,
    },
    /// Enumerate all (kappa,tau)-regular sets.
    #[command(name = "enum")]
    Enumerate {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        t: usize,
        file: PathBuf,
    },
    /// Check a given vertex set against the definition.
    Check {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        t: usize,
        /// Comma-separated vertex numbers or display names.
        #[arg(short)]
        s: String,
        file: PathBuf,
    },
    /// Cardinality bounds and the predicted size of any solution.
    Bounds {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        t: usize,
        file: PathBuf,
    },
    /// Perfect matching via the line graph.
    Matching { file: PathBuf },
    /// Hamilton cycle via the line graph, or via the subdivision.
    Hamilton {
        #[arg(long)]
        via_subdivision: bool,
        file: PathBuf,
    },
    /// Efficient dominating sets.
    Eds { file: PathBuf },
    /// Dominating induced matchings.
    Dim { file: PathBuf },
    /// Largest vertex set inducing a k-regular subgraph, when certifiable.
    Maxreg {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// Strongly regular parameters.
    Srg { file: PathBuf },
    /// Eigenvalues with multiplicities and main/non-main labels.
    Spectrum { file: PathBuf },
    /// Join two regular graphs along a 1-design (one block per line).
    Join { g1: PathBuf, g2: PathBuf, blocks: PathBuf },
    /// A cycle C_n with s pendant vertices on each cycle vertex.
    Unicyclic {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        s: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Find { .. } => "find",
            Command::Enumerate { .. } => "enum",
            Command::Check { .. } => "check",
            Command::Bounds { .. } => "bounds",
            Command::Matching { .. } => "matching",
            Command::Hamilton { .. } => "hamilton",
            Command::Eds { .. } => "eds",
            Command::Dim { .. } => "dim",
            Command::Maxreg { .. } => "maxreg",
            Command::Srg { .. } => "srg",
            Command::Spectrum { .. } => "spectrum",
            Command::Join { .. } => "join",
            Command::Unicyclic { .. } => "unicyclic",
        }
    }
}

/// A failed run, already classified.
struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { status: Status::InputError, message: message.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let status = match e {
            SolveError::ResourceLimit { .. } => Status::ResourceLimit,
            SolveError::BoundsInapplicable { .. } => Status::Inapplicable,
            SolveError::Graph(_) | SolveError::Linalg(_) => Status::InputError,
        };
        Failure { status, message: e.to_string() }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::Solve(s) => s.into(),
            StructureError::Inapplicable(_) => {
                Failure { status: Status::Inapplicable, message: e.to_string() }
            }
            StructureError::Graph(_) | StructureError::Design(_) => Failure::input(e),
        }
    }
}

fn load(path: &Path) -> Result<GraphFile, Failure> {
    GraphFile::read(path).map_err(Failure::input)
}

fn vertex_certificate(file: &GraphFile, set: &VertexSet, verified: bool) -> Certificate {
    Certificate {
        vertices: set.members().to_vec(),
        names: names_for(file, set.members()),
        verified,
        ..Certificate::default()
    }
}

fn names_for(file: &GraphFile, vs: &[Vertex]) -> Option<Vec<String>> {
    if file.names.is_empty() {
        return None;
    }
    Some(vs.iter().map(|&v| file.name_of(v).map_or_else(|| v.to_string(), str::to_string)).collect())
}

fn diagnostics(system: &KtSystem<'_>) -> Diagnostics {
    Diagnostics {
        kappa: Some(system.kappa()),
        tau: Some(system.tau()),
        lambda: Some(system.lambda()),
        t: Some(system.t()),
        predicted_cardinality: system.predicted_cardinality().map(|q| q.to_string()),
        bounds: system.bounds().map(|(lo, hi)| Bounds { lower: lo.to_string(), upper: hi.to_string() }),
        shortcut: system.shortcut().map(|s| s.name()),
        lambda_is_main: Some(system.is_main_eigenvalue()),
        ..Diagnostics::default()
    }
}

fn line_graph_certificate(g: &Graph, edges: &[Edge]) -> Result<Certificate, Failure> {
    let (l, labels) = g.line_graph().map_err(Failure::input)?;
    let set = labels.set_of(l.n(), edges).expect("edges come from the graph");
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    Ok(Certificate {
        vertices: set.members().to_vec(),
        edges: Some(sorted),
        verified: true,
        ..Certificate::default()
    })
}

fn cycle_edges(cycle: &[Vertex]) -> Vec<Edge> {
    let n = cycle.len();
    let mut edges: Vec<Edge> = (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn graph_out(g: &Graph) -> GraphOut {
    GraphOut { n: g.n(), m: g.m(), edges: g.edges().to_vec() }
}

fn join_out(h: &Graph, k1: usize, k2: usize, design: &DesignBlocks, n1: usize) -> JoinOut {
    let formula = structures::main_eigenvalues_of_join(
        k1 as u64,
        k2 as u64,
        design.s() as u64,
        design.tau() as u64,
    );
    let left = VertexSet::new(h.n(), 1..=n1).expect("n1 >= 1");
    let right = left.complement();
    let report = spectrum(h);
    JoinOut {
        kappa1: k1,
        kappa2: k2,
        s: design.s(),
        tau: design.tau(),
        trace: formula.trace,
        radicand: formula.radicand,
        plus: tidy(formula.plus()),
        minus: tidy(formula.minus()),
        exact: formula.exact().map(|(p, m)| [p.to_string(), m.to_string()]),
        first_side_regular: is_kt_regular(h, &left, k1, design.s()),
        second_side_regular: is_kt_regular(h, &right, k2, design.tau()),
        main_eigenvalues: report.main_eigenvalues().map(|e| tidy(e.value)).collect(),
    }
}

fn parse_blocks(path: &Path) -> Result<Vec<Vec<Vertex>>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse().map_err(|_| {
                        Failure::input(format!("{}:{line}: bad point {t:?}", path.display()))
                    })
                })
                .collect()
        })
        .collect()
}

fn parse_set(file: &GraphFile, spec: &str) -> Result<VertexSet, Failure> {
    let members = spec
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| file.resolve(t).ok_or_else(|| Failure::input(format!("unknown vertex {:?}", t.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::new(file.graph.n(), members).map_err(Failure::input)
}

fn certificates(file: &GraphFile, found: &[KtCertificate]) -> Vec<Certificate> {
    found.iter().map(|c| vertex_certificate(file, &c.set, c.verified)).collect()
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    let config = SolverConfig { max_t: cli.max_t };
    match &cli.command {
        Command::Find { k, t, file } => {
            let f = load(file)?;
            let solver = Solver::with_config(&f.graph, config);
            let system = solver.prepare(*k, *t)?;
            report.diagnostics = Some(diagnostics(&system));
            let found = system.find()?;
            report.certificates = certificates(&f, found.as_slice());
            report.status = Status::from_found(found.is_some());
        }
        Command::Enumerate { k, t, file } => {
            let f = load(file)?;
            let solver = Solver::with_config(&f.graph, config);
            let system = solver.prepare(*k, *t)?;
            report.diagnostics = Some(diagnostics(&system));
            let found = parallel::enumerate(&system, cli.threads)?;
            report.certificates = certificates(&f, &found);
            report.status = Status::from_found(!found.is_empty());
        }
        Command::Check { k, t, s, file } => {
            let f = load(file)?;
            let set = parse_set(&f, s)?;
            report.query.set = Some(set.members().to_vec());
            let c = check_set(&f.graph, &set, *k, *t);
            report.diagnostics =
                Some(Diagnostics { kappa: Some(*k), tau: Some(*t), ..Diagnostics::default() });
            report.certificates = vec![vertex_certificate(&f, &c.set, c.verified)];
            report.status = Status::from_found(c.verified);
        }
        Command::Bounds { k, t, file } => {
            let f = load(file)?;
            let solver = Solver::with_config(&f.graph, config);
            let system = solver.prepare(*k, *t)?;
            let mut diag = diagnostics(&system);
            let (lo, hi) = cardinality_bounds(&f.graph, *k, *t)?;
            diag.bounds = Some(Bounds { lower: lo.to_string(), upper: hi.to_string() });
            report.diagnostics = Some(diag);
            report.status = Status::Found;
        }
        Command::Matching { file } => {
            let f = load(file)?;
            let found = structures::perfect_matching_with(&f.graph, config)?;
            if f.graph.m() > 0 {
                let (l, _) = f.graph.line_graph().map_err(Failure::input)?;
                let mut diag = diagnostics(&Solver::with_config(&l, config).prepare(0, 2)?);
                diag.searched = Some("line_graph");
                report.diagnostics = Some(diag);
            }
            if let Some(edges) = &found {
                report.certificates = vec![line_graph_certificate(&f.graph, edges)?];
            }
            report.status = Status::from_found(found.is_some());
        }
        Command::Hamilton { via_subdivision, file } => {
            report.query.via_subdivision = *via_subdivision;
            let f = load(file)?;
            let g = &f.graph;
            let outcome = if *via_subdivision {
                structures::hamiltonian_via_subdivision_with(g, config)?
            } else {
                structures::hamiltonian_cycle_with(g, config)?
            };
            report.diagnostics = Some(Diagnostics {
                searched: Some(if *via_subdivision { "subdivision" } else { "line_graph" }),
                kappa: Some(2),
                tau: Some(if *via_subdivision { 2 } else { 4 }),
                t: Some(outcome.t),
                candidates: Some(outcome.candidates),
                ..Diagnostics::default()
            });
            if let Some(cycle) = &outcome.cycle {
                let edges = cycle_edges(cycle);
                let mut cert = if *via_subdivision {
                    let (s, labels) = g.subdivision().map_err(Failure::input)?;
                    let mids = edges.iter().map(|&(u, v)| labels.label(u, v).expect("edge"));
                    let set = VertexSet::new(s.n(), (1..=g.n()).chain(mids)).expect("valid");
                    Certificate { vertices: set.members().to_vec(), edges: Some(edges), verified: true, ..Certificate::default() }
                } else {
                    line_graph_certificate(g, &edges)?
                };
                cert.cycle = Some(cycle.clone());
                cert.names = names_for(&f, cycle);
                report.certificates = vec![cert];
            }
            report.status = Status::from_found(outcome.cycle.is_some());
        }
        Command::Eds { file } => {
            let f = load(file)?;
            let solver = Solver::with_config(&f.graph, config);
            report.diagnostics = Some(diagnostics(&solver.prepare(0, 1)?));
            let sets = structures::efficient_dominating_sets_with(&f.graph, config)?;
            report.certificates = sets.iter().map(|s| vertex_certificate(&f, s, true)).collect();
            report.status = Status::from_found(!sets.is_empty());
        }
        Command::Dim { file } => {
            let f = load(file)?;
            let matchings = structures::dominating_induced_matchings_with(&f.graph, config)?;
            let (l, _) = f.graph.line_graph().map_err(Failure::input)?;
            let mut diag = diagnostics(&Solver::with_config(&l, config).prepare(0, 1)?);
            diag.searched = Some("line_graph");
            report.diagnostics = Some(diag);
            report.certificates = matchings
                .iter()
                .map(|m| line_graph_certificate(&f.graph, m))
                .collect::<Result<_, _>>()?;
            report.status = Status::from_found(!matchings.is_empty());
        }
        Command::Maxreg { k, file } => {
            let f = load(file)?;
            let found = structures::max_regular_induced_certificate_with(&f.graph, *k, config)?;
            let least = spectrum(&f.graph).smallest().and_then(|e| e.exact_integer).unwrap_or(0);
            let tau = (-least) as usize;
            report.diagnostics =
                Some(diagnostics(&Solver::with_config(&f.graph, config).prepare(*k, k + tau)?));
            if let Some(c) = &found {
                let mut cert = vertex_certificate(&f, &c.set, is_kt_regular(&f.graph, &c.set, *k, k + c.tau));
                cert.maximum = Some(c.maximum);
                report.certificates = vec![cert];
            }
            report.status = Status::from_found(found.is_some());
        }
        Command::Srg { file } => {
            let f = load(file)?;
            let params = structures::srg_check(&f.graph);
            report.srg = params.map(|p| SrgReport { n: p.n, p: p.p, a: p.a, c: p.c, primitive: p.is_primitive() });
            report.status = Status::from_found(params.is_some());
        }
        Command::Spectrum { file } => {
            let f = load(file)?;
            let r = spectrum(&f.graph);
            report.spectrum = Some(
                r.eigenvalues
                    .iter()
                    .map(|e| SpectrumEntry {
                        value: tidy(e.value),
                        multiplicity: e.multiplicity,
                        exact_integer: e.exact_integer,
                        main: e.main.is_main(),
                        main_exact: e.main.is_exact(),
                    })
                    .collect(),
            );
            report.status = Status::Found;
        }
        Command::Join { g1, g2, blocks } => {
            let (f1, f2) = (load(g1)?, load(g2)?);
            let design = DesignBlocks::new(f2.graph.n(), parse_blocks(blocks)?)
                .map_err(|e| Failure::input(format!("invalid design: {e}")))?;
            let h = structures::design_join(&f1.graph, &f2.graph, &design)?;
            let k1 = f1.graph.regularity().expect("checked by design_join");
            let k2 = f2.graph.regularity().expect("checked by design_join");
            report.join = Some(join_out(&h, k1, k2, &design, f1.graph.n()));
            report.graph = Some(graph_out(&h));
            report.status = Status::Found;
        }
        Command::Unicyclic { n, s } => {
            report.query.n = Some(*n);
            report.query.s = Some(*s);
            let h = structures::pendant_unicyclic(*n, *s)?;
            let blocks = (0..s * n).map(|i| vec![i / s + 1]).collect();
            let design = DesignBlocks::new(*n, blocks).expect("valid design");
            report.join = Some(join_out(&h, 0, 2, &design, s * n));
            report.graph = Some(graph_out(&h));
            report.status = Status::Found;
        }
    }
    Ok(())
}

fn query(cli: &Cli) -> Query {
    let path = |p: &PathBuf| p.display().to_string();
    let mut q = Query {
        command: cli.command.name().to_string(),
        max_t: cli.max_t,
        threads: cli.threads,
        ..Query::default()
    };
    match &cli.command {
        Command::Find { k, t, file }
        | Command::Enumerate { k, t, file }
        | Command::Check { k, t, file, .. }
        | Command::Bounds { k, t, file } => {
            q.kappa = Some(*k);
            q.tau = Some(*t);
            q.files = vec![path(file)];
        }
        Command::Maxreg { k, file } => {
            q.kappa = Some(*k);
            q.files = vec![path(file)];
        }
        Command::Matching { file }
        | Command::Hamilton { file, .. }
        | Command::Eds { file }
        | Command::Dim { file }
        | Command::Srg { file }
        | Command::Spectrum { file } => q.files = vec![path(file)],
        Command::Join { g1, g2, blocks } => q.files = vec![path(g1), path(g2), path(blocks)],
        Command::Unicyclic { .. } => {}
    }
    q
}

/// Runs one command and returns its report; never panics on bad input.
pub fn execute(cli: &Cli) -> Report {
    let start = Instant::now();
    let mut report = Report::new(query(cli), Status::NotFound);
    if cli.threads == 0 {
        report.status = Status::InputError;
        report.message = Some("--threads must be at least 1".into());
        return report;
    }
    if let Err(f) = run(cli, &mut report) {
        report.status = f.status;
        report.message = Some(f.message);
        report.certificates.clear();
    }
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report
}

fn braces(vs: &[Vertex]) -> String {
    let inner: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let status = serde_json::to_value(report.status).expect("status serialises");
    let _ = writeln!(out, "status: {}", status.as_str().unwrap_or("?"));
    if let Some(msg) = &report.message {
        let _ = writeln!(out, "message: {msg}");
    }
    if let Some(d) = &report.diagnostics {
        let mut parts = Vec::new();
        if let Some(s) = d.searched {
            parts.push(format!("searched {s}"));
        }
        if let (Some(k), Some(t)) = (d.kappa, d.tau) {
            parts.push(format!("(kappa,tau)=({k},{t})"));
        }
        if let Some(t) = d.t {
            parts.push(format!("t={t}"));
        }
        if let Some(c) = &d.predicted_cardinality {
            parts.push(format!("e'x={c}"));
        }
        if let Some(b) = &d.bounds {
            parts.push(format!("bounds=[{}, {}]", b.lower, b.upper));
        }
        if let Some(s) = d.shortcut {
            parts.push(format!("shortcut={s}"));
        }
        if let Some(c) = d.candidates {
            parts.push(format!("candidates={c}"));
        }
        let _ = writeln!(out, "{}", parts.join("  "));
    }
    if !report.certificates.is_empty() {
        let _ = writeln!(out, "{} certificate(s)", report.certificates.len());
    }
    for c in &report.certificates {
        let mut line = braces(&c.vertices);
        if let Some(names) = &c.names {
            let _ = write!(line, "  names {}", names.join(","));
        }
        if let Some(edges) = &c.edges {
            let es: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = write!(line, "  edges {}", es.join(" "));
        }
        if let Some(cycle) = &c.cycle {
            let vs: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            let _ = write!(line, "  cycle {}", vs.join("-"));
        }
        if !c.verified {
            line.push_str("  (fails the definition)");
        }
        if c.maximum == Some(true) {
            line.push_str("  maximum");
        }
        let _ = writeln!(out, "{line}");
    }
    if let Some(spec) = &report.spectrum {
        for e in spec {
            let value = e.exact_integer.map_or_else(|| format!("{:.9}", e.value), |v| v.to_string());
            let main = match (e.main, e.main_exact) {
                (true, true) => "main",
                (false, true) => "non-main",
                (true, false) => "main (numeric)",
                (false, false) => "non-main (numeric)",
            };
            let _ = writeln!(out, "{value:>14}  x{:<3} {main}", e.multiplicity);
        }
    }
    if let Some(p) = &report.srg {
        let kind = if p.primitive { "primitive" } else { "imprimitive" };
        let _ = writeln!(out, "strongly regular ({},{},{},{}), {kind}", p.n, p.p, p.a, p.c);
    }
    if let Some(j) = &report.join {
        let formula = match &j.exact {
            Some([p, m]) => format!("{p}, {m}"),
            None => format!("({} +- sqrt({}))/2", j.trace, j.radicand),
        };
        let _ = writeln!(out, "main eigenvalues by formula: {formula}");
        let mains: Vec<String> = j.main_eigenvalues.iter().map(|v| format!("{v:.9}")).collect();
        let _ = writeln!(out, "main eigenvalues found: {}", mains.join(", "));
        let _ = writeln!(
            out,
            "sides regular: ({},{}) {}, ({},{}) {}",
            j.kappa1, j.s, j.first_side_regular, j.kappa2, j.tau, j.second_side_regular
        );
    }
    if let Some(g) = &report.graph {
        let graph = Graph::from_edge_list(g.n, g.edges.iter().copied()).expect("valid");
        out.push_str(&GraphFile::new(graph).print());
    }
    if let Some(ms) = report.timing_ms {
        let _ = writeln!(out, "time: {ms:.3} ms");
    }
    out
}
