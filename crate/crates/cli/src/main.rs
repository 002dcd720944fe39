//! Command-line front end for the `morseforest` library.
//!
//! Loads a simplicial complex from the builtin catalog or a JSON file,
//! runs one computation, and prints the result as readable text or as a
//! single line of JSON. A failed verification verdict is data, not an
//! error: the process still exits 0. Nonzero exit codes are reserved for
//! usage errors (2, from argument parsing) and input or size errors (1).

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morseforest::{
    builtin, char_poly_shifted, collapses_to_root, complex_from_path, conjecture_scan,
    forest_census, gradient_census_with, gradient_vector_fields, laplacian, verify_graph_theorem,
    verify_kirchhoff_gradients, verify_main_theorem, verify_matching_adjacency,
    visit_rooted_forests, CensusOptions, Guard, RootedForest, ScanFamily, SimplicialComplex,
    VerificationReport,
};
use serde::Serialize;

use render::{cells_text, matrix_lines, poly_text};

#[derive(Parser)]
#[command(
    name = "morseforest",
    version,
    about = "Exact Laplacian characteristic polynomials, gradient censuses, and rooted-forest defects of simplicial complexes",
    after_help = "Polynomials print in descending powers of λ as text, and as ascending \
arrays of decimal coefficient strings in JSON.\n\
Enumeration refuses complexes whose top two levels exceed the cell guard \
(default 40); set MORSEFOREST_GUARD or pass --guard to change it, 0 to lift it.\n\
A `fail` verdict from `verify` still exits 0: the failure is a measurement, \
not an error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cell counts, Euler characteristic, pseudomanifold and orientability status
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Integer Laplacian ∂_d·∂_dᵀ acting on the (d−1)-cells
    Laplacian {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        /// Boundary dimension d (default: the complex dimension)
        #[arg(long, value_name = "D")]
        dim: Option<usize>,
    },
    /// Exact characteristic polynomial det(Δ_d + λ·I)
    Charpoly {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        /// Boundary dimension d (default: the complex dimension)
        #[arg(long, value_name = "D")]
        dim: Option<usize>,
    },
    /// Census of acyclic top-level pairings by number of unpaired top cells
    Census {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Count the gradient vector fields (acyclic pairings), or list them
    Gradients {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        compute: ComputeArgs,
        /// List every pairing instead of only counting them
        #[arg(long)]
        enumerate: bool,
    },
    /// Enumerate rooted forests at the top level
    Forests {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        guard: GuardArg,
        /// Keep only forests whose root has exactly this many cells
        #[arg(long, value_name = "I")]
        root_size: Option<usize>,
        /// Keep only forests that do not collapse to their root
        #[arg(long)]
        only_defects: bool,
    },
    /// Defect coefficients ε_i: forest weight lost to non-collapsing forests
    Epsilon {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Check one identity and report lhs, rhs, delta, and defect witnesses
    Verify {
        /// Which identity to check
        #[arg(value_enum, value_name = "IDENTITY")]
        theorem: TheoremName,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Walk a complex family, recording defect profiles next to orientability
    ScanConjecture {
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Scan this many seeded random pure 2-complexes instead of the catalog
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        /// Seed for the random family
        #[arg(long, value_name = "SEED", default_value_t = 1, requires = "random")]
        seed: u64,
        /// Vertex budget for the random family
        #[arg(long, value_name = "V", default_value_t = 6, requires = "random")]
        max_vertices: u32,
        /// Triangle budget for the random family
        #[arg(long, value_name = "T", default_value_t = 8, requires = "random")]
        max_triangles: usize,
    },
}

/// Where the complex comes from: exactly one of a catalog name or a file.
#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("input").required(true).args(["builtin", "file"])
))]
struct InputArgs {
    /// Catalog complex: cycle, path, star, complete, wheel, simplex,
    /// simplex_boundary (with --n), or moebius, projective_plane, bipyramid
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Family parameter for the parameterized catalog names
    #[arg(long, value_name = "N", requires = "builtin")]
    n: Option<u32>,
    /// JSON file holding {"name": "...", "maximal_faces": [[0,1,2], ...]}
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<SimplicialComplex, CliError> {
        if let Some(name) = &self.builtin {
            Ok(builtin(name, self.n)?)
        } else {
            let path = self.file.as_ref().expect("clap enforces one input source");
            complex_from_path(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Enumeration size guard, resolved as --guard, then MORSEFOREST_GUARD,
/// then the built-in default of 40 cells; 0 lifts the limit.
#[derive(Args)]
struct GuardArg {
    /// Refuse enumeration when the top two cell levels exceed this many cells
    #[arg(long, value_name = "CELLS")]
    guard: Option<usize>,
}

impl GuardArg {
    fn value(&self) -> Result<Guard, CliError> {
        let limit = match self.guard {
            Some(v) => v,
            None => match std::env::var("MORSEFOREST_GUARD") {
                Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
                    CliError(format!(
                        "MORSEFOREST_GUARD must be a nonnegative integer, got `{raw}`"
                    ))
                })?,
                Err(std::env::VarError::NotPresent) => Guard::DEFAULT_LIMIT,
                Err(std::env::VarError::NotUnicode(_)) => {
                    return Err(CliError(
                        "MORSEFOREST_GUARD is not valid unicode".to_string(),
                    ))
                }
            },
        };
        Ok(if limit == 0 {
            Guard::unlimited()
        } else {
            Guard::new(limit)
        })
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    guard: GuardArg,
    /// Worker threads for the census enumeration
    #[arg(long, value_name = "K", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..=1024))]
    jobs: u64,
}

impl ComputeArgs {
    fn options(&self) -> Result<CensusOptions, CliError> {
        Ok(CensusOptions {
            guard: self.guard.value()?,
            jobs: self.jobs as usize,
        })
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TheoremName {
    /// det(L + λI) of a graph equals its census polynomial exactly
    Graph,
    /// det(Δ_d + λI) equals census plus defect, with witnesses
    Main,
    /// n · #spanning-trees equals the λ¹ census coefficient
    Kirchhoff,
    /// Forest matchings with signs equal det(A + λI) of the incidence graph
    MatchingAdjacency,
}

struct CliError(String);

impl From<morseforest::Error> for CliError {
    fn from(e: morseforest::Error) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Info { input, format } => cmd_info(&input.load()?, format.format),
        Command::Laplacian { input, format, dim } => {
            cmd_laplacian(&input.load()?, format.format, dim)
        }
        Command::Charpoly { input, format, dim } => {
            cmd_charpoly(&input.load()?, format.format, dim)
        }
        Command::Census {
            input,
            format,
            compute,
        } => cmd_census(&input.load()?, format.format, &compute.options()?),
        Command::Gradients {
            input,
            format,
            compute,
            enumerate,
        } => cmd_gradients(&input.load()?, format.format, &compute.options()?, enumerate),
        Command::Forests {
            input,
            format,
            guard,
            root_size,
            only_defects,
        } => cmd_forests(
            &input.load()?,
            format.format,
            &guard.value()?,
            root_size,
            only_defects,
        ),
        Command::Epsilon {
            input,
            format,
            guard,
        } => cmd_epsilon(&input.load()?, format.format, &guard.value()?),
        Command::Verify {
            theorem,
            input,
            format,
            compute,
        } => cmd_verify(theorem, &input.load()?, format.format, &compute.options()?),
        Command::ScanConjecture {
            format,
            compute,
            random,
            seed,
            max_vertices,
            max_triangles,
        } => {
            let family = match random {
                Some(count) => ScanFamily::RandomPure2 {
                    count,
                    seed,
                    max_vertices,
                    max_triangles,
                },
                None => ScanFamily::Builtins,
            };
            cmd_scan(&family, format.format, &compute.options()?)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output structs serialize without error")
    );
}

// ---------------------------------------------------------------------------
// info

#[derive(Serialize)]
struct InfoOut {
    complex: String,
    dimension: usize,
    cells: Vec<usize>,
    total_cells: usize,
    euler_characteristic: i64,
    pseudomanifold: bool,
    reason: Option<String>,
    orientable: Option<bool>,
}

fn cmd_info(k: &SimplicialComplex, format: Format) -> Result<(), CliError> {
    let check = k.pseudomanifold();
    let orientable = if check.holds {
        Some(k.is_orientable()?)
    } else {
        None
    };
    let cells: Vec<usize> = (0..=k.dim()).map(|d| k.n_cells(d)).collect();
    let out = InfoOut {
        complex: k.display_name(),
        dimension: k.dim(),
        total_cells: cells.iter().sum(),
        cells,
        euler_characteristic: k.euler_characteristic(),
        pseudomanifold: check.holds,
        reason: check.reason,
        orientable,
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("complex: {}", out.complex);
            println!("dimension: {}", out.dimension);
            for (d, n) in out.cells.iter().enumerate() {
                println!("cells[{d}] = {n}");
            }
            println!("total cells = {}", out.total_cells);
            println!("euler characteristic = {}", out.euler_characteristic);
            match &out.reason {
                None => println!("pseudomanifold: yes"),
                Some(reason) => println!("pseudomanifold: no ({reason})"),
            }
            match out.orientable {
                Some(true) => println!("orientable: yes"),
                Some(false) => println!("orientable: no"),
                None => println!("orientable: n/a (not a pseudomanifold)"),
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// laplacian

#[derive(Serialize)]
struct MatrixOut {
    complex: String,
    dim: usize,
    rows: usize,
    cols: usize,
    cells: Vec<Vec<u32>>,
    entries: Vec<Vec<String>>,
}

fn cmd_laplacian(k: &SimplicialComplex, format: Format, dim: Option<usize>) -> Result<(), CliError> {
    let d = dim.unwrap_or_else(|| k.dim());
    let m = laplacian(k, d)?;
    let labels = k.cells(d - 1);
    match format {
        Format::Json => print_json(&MatrixOut {
            complex: k.display_name(),
            dim: d,
            rows: m.rows(),
            cols: m.cols(),
            cells: labels.iter().map(|c| c.vertices().to_vec()).collect(),
            entries: m.entry_strings(),
        }),
        Format::Text => {
            println!("complex: {}", k.display_name());
            println!(
                "laplacian ∂_{d}·∂_{d}ᵀ on {}-cells ({} × {})",
                d - 1,
                m.rows(),
                m.cols()
            );
            for line in matrix_lines(&m, labels) {
                println!("{line}");
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// charpoly

#[derive(Serialize)]
struct PolyOut {
    coeffs: Vec<String>,
}

fn cmd_charpoly(k: &SimplicialComplex, format: Format, dim: Option<usize>) -> Result<(), CliError> {
    let d = dim.unwrap_or_else(|| k.dim());
    let p = char_poly_shifted(&laplacian(k, d)?)?;
    let coeffs = p.decimal_strings(0);
    match format {
        Format::Json => print_json(&PolyOut { coeffs }),
        Format::Text => {
            println!("complex: {}", k.display_name());
            println!("det(Δ_{d} + λI) = {}", poly_text(&coeffs));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// census

#[derive(Serialize)]
struct CensusOut {
    complex: String,
    dim: usize,
    tails: usize,
    heads: usize,
    counts: Vec<String>,
    total: String,
    coeffs: Vec<String>,
}

fn cmd_census(k: &SimplicialComplex, format: Format, options: &CensusOptions) -> Result<(), CliError> {
    let census = gradient_census_with(k, options)?;
    let out = CensusOut {
        complex: k.display_name(),
        dim: census.dim,
        tails: census.tails,
        heads: census.heads,
        counts: census.counts.iter().map(|c| c.to_string()).collect(),
        total: census.total().to_string(),
        coeffs: census.polynomial().decimal_strings(census.tails + 1),
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("complex: {}", out.complex);
            println!(
                "census at dimension {}: {} tails ({}-cells), {} heads ({}-cells)",
                out.dim,
                out.tails,
                out.dim - 1,
                out.heads,
                out.dim
            );
            for (l, c) in out.counts.iter().enumerate() {
                println!("unpaired[{l}] = {c}");
            }
            println!("total = {}", out.total);
            println!("census polynomial = {}", poly_text(&out.coeffs));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// gradients

/// One gradient vector field as (facet vertices, top-cell vertices) pairs.
type VertexPairs = Vec<(Vec<u32>, Vec<u32>)>;

#[derive(Serialize)]
struct GradientsOut {
    complex: String,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    fields: Option<Vec<VertexPairs>>,
}

fn cmd_gradients(
    k: &SimplicialComplex,
    format: Format,
    options: &CensusOptions,
    enumerate: bool,
) -> Result<(), CliError> {
    let out = if enumerate {
        let fields = gradient_vector_fields(k, options)?;
        GradientsOut {
            complex: k.display_name(),
            count: fields.len().to_string(),
            fields: Some(fields.iter().map(|vf| vf.pairs_as_vertex_lists()).collect()),
        }
    } else {
        GradientsOut {
            complex: k.display_name(),
            count: gradient_census_with(k, options)?.total().to_string(),
            fields: None,
        }
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("complex: {}", out.complex);
            println!("gradient vector fields: {}", out.count);
            if let Some(fields) = &out.fields {
                for pairs in fields {
                    if pairs.is_empty() {
                        println!("- (no pairs)");
                        continue;
                    }
                    let rendered: Vec<String> = pairs
                        .iter()
                        .map(|(tail, head)| {
                            format!("({}→{})", vertex_set(tail), vertex_set(head))
                        })
                        .collect();
                    println!("- {}", rendered.join(" "));
                }
            }
        }
    }
    Ok(())
}

fn vertex_set(vertices: &[u32]) -> String {
    let inner: Vec<String> = vertices.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

// ---------------------------------------------------------------------------
// forests

#[derive(Serialize)]
struct ForestOut {
    forest: Vec<Vec<u32>>,
    root: Vec<Vec<u32>>,
    weight: String,
    collapses: bool,
}

impl ForestOut {
    fn new(k: &SimplicialComplex, rf: &RootedForest) -> Self {
        let collapses = collapses_to_root(k, rf)
            .expect("enumerated rooted forests index cleanly into their complex");
        ForestOut {
            forest: rf.forest().iter().map(|c| c.vertices().to_vec()).collect(),
            root: rf.root().iter().map(|c| c.vertices().to_vec()).collect(),
            weight: rf.weight().to_string(),
            collapses,
        }
    }
}

fn forest_line(k: &SimplicialComplex, rf: &RootedForest) -> String {
    let collapses = collapses_to_root(k, rf)
        .expect("enumerated rooted forests index cleanly into their complex");
    format!(
        "F = {}  R = {}  weight = {}  {}",
        cells_text(rf.forest()),
        cells_text(rf.root()),
        rf.weight(),
        if collapses { "collapsing" } else { "non-collapsing" }
    )
}

fn cmd_forests(
    k: &SimplicialComplex,
    format: Format,
    guard: &Guard,
    root_size: Option<usize>,
    only_defects: bool,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let mut out = Vec::new();
            visit_rooted_forests(k, guard, root_size, |rf| {
                let item = ForestOut::new(k, &rf);
                if !only_defects || !item.collapses {
                    out.push(item);
                }
            })?;
            print_json(&out);
        }
        Format::Text => {
            println!("complex: {}", k.display_name());
            let mut kept = 0usize;
            visit_rooted_forests(k, guard, root_size, |rf| {
                let line = forest_line(k, &rf);
                if !only_defects || line.ends_with("non-collapsing") {
                    kept += 1;
                    println!("{line}");
                }
            })?;
            println!("forests: {kept}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// epsilon

#[derive(Serialize)]
struct EpsilonOut {
    complex: String,
    coeffs: Vec<String>,
}

fn cmd_epsilon(k: &SimplicialComplex, format: Format, guard: &Guard) -> Result<(), CliError> {
    let fc = forest_census(k, guard)?;
    let coeffs = fc.defect_polynomial().decimal_strings(fc.tails + 1);
    match format {
        Format::Json => print_json(&EpsilonOut {
            complex: k.display_name(),
            coeffs,
        }),
        Format::Text => {
            println!("complex: {}", k.display_name());
            let nonzero: Vec<(usize, &String)> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| c.as_str() != "0")
                .collect();
            let top = coeffs.len() - 1;
            if nonzero.is_empty() {
                println!("epsilon[i] = 0 for all i (0 <= i <= {top}); every rooted forest collapses to its root");
            } else {
                for (i, c) in &nonzero {
                    println!("epsilon[{i}] = {c}");
                }
                println!("all other epsilon[i] = 0 (0 <= i <= {top})");
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct ReportOut {
    complex: String,
    theorem: String,
    lhs: Vec<String>,
    rhs: Vec<String>,
    delta: Vec<String>,
    witnesses: Vec<WitnessOut>,
    verdict: String,
    ms: u128,
}

#[derive(Serialize)]
struct WitnessOut {
    power: usize,
    epsilon: String,
    forests: Vec<ForestOut>,
}

impl ReportOut {
    fn new(k: &SimplicialComplex, report: &VerificationReport) -> Self {
        ReportOut {
            complex: report.complex.clone(),
            theorem: report.theorem.clone(),
            lhs: report.lhs.clone(),
            rhs: report.rhs.clone(),
            delta: report.delta.clone(),
            witnesses: report
                .witnesses
                .iter()
                .map(|w| WitnessOut {
                    power: w.power,
                    epsilon: w.epsilon.to_string(),
                    forests: w.forests.iter().map(|rf| ForestOut::new(k, rf)).collect(),
                })
                .collect(),
            verdict: report.verdict.to_string(),
            ms: report.ms,
        }
    }
}

fn cmd_verify(
    theorem: TheoremName,
    k: &SimplicialComplex,
    format: Format,
    options: &CensusOptions,
) -> Result<(), CliError> {
    let report = match theorem {
        TheoremName::Graph => verify_graph_theorem(k, options)?,
        TheoremName::Main => verify_main_theorem(k, options)?,
        TheoremName::Kirchhoff => verify_kirchhoff_gradients(k, options)?,
        TheoremName::MatchingAdjacency => verify_matching_adjacency(k, options)?,
    };
    let out = ReportOut::new(k, &report);
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("theorem: {}", out.theorem);
            println!("complex: {}", out.complex);
            println!("verdict: {}", out.verdict);
            println!("lhs   = {}", poly_text(&out.lhs));
            println!("rhs   = {}", poly_text(&out.rhs));
            println!("delta = {}", poly_text(&out.delta));
            if out.witnesses.is_empty() {
                println!("witnesses: none");
            } else {
                println!("witnesses: {} defect power(s)", out.witnesses.len());
                for w in &report.witnesses {
                    println!(
                        "  epsilon[{}] = {} from {} non-collapsing forest(s)",
                        w.power,
                        w.epsilon,
                        w.forests.len()
                    );
                    for rf in &w.forests {
                        println!("    {}", forest_line(k, rf));
                    }
                }
            }
            println!("elapsed = {} ms", out.ms);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// scan-conjecture

#[derive(Serialize)]
struct ScanOut {
    complex: String,
    dim: usize,
    pseudomanifold: bool,
    orientable: Option<bool>,
    defects: Vec<DefectOut>,
    identity_holds: bool,
    consistent: bool,
    skipped: Option<String>,
}

#[derive(Serialize)]
struct DefectOut {
    power: usize,
    epsilon: String,
}

fn cmd_scan(family: &ScanFamily, format: Format, options: &CensusOptions) -> Result<(), CliError> {
    let records = conjecture_scan(family, options);
    match format {
        Format::Json => {
            let out: Vec<ScanOut> = records
                .iter()
                .map(|r| ScanOut {
                    complex: r.complex.clone(),
                    dim: r.dim,
                    pseudomanifold: r.pseudomanifold,
                    orientable: r.orientable,
                    defects: r
                        .defects
                        .iter()
                        .map(|(power, eps)| DefectOut {
                            power: *power,
                            epsilon: eps.to_string(),
                        })
                        .collect(),
                    identity_holds: r.identity_holds,
                    consistent: r.consistent,
                    skipped: r.skipped.clone(),
                })
                .collect();
            print_json(&out);
        }
        Format::Text => {
            let mut ok = 0usize;
            let mut consistent = 0usize;
            let mut skipped = 0usize;
            for r in &records {
                if let Some(reason) = &r.skipped {
                    skipped += 1;
                    println!("{}: skipped ({reason})", r.complex);
                    continue;
                }
                let shape = if r.pseudomanifold {
                    match r.orientable {
                        Some(true) => "pseudomanifold (orientable)",
                        Some(false) => "pseudomanifold (non-orientable)",
                        None => "pseudomanifold",
                    }
                } else {
                    "not a pseudomanifold"
                };
                let defects = if r.defects.is_empty() {
                    "no defects".to_string()
                } else {
                    let parts: Vec<String> = r
                        .defects
                        .iter()
                        .map(|(power, eps)| format!("{power}: {eps}"))
                        .collect();
                    format!("defects {{{}}}", parts.join(", "))
                };
                let identity = if r.identity_holds {
                    ok += 1;
                    "identity ok"
                } else {
                    "IDENTITY FAILED"
                };
                let verdict = if r.consistent {
                    consistent += 1;
                    "consistent"
                } else {
                    "INCONSISTENT (non-orientable pseudomanifold without minimal-root defect)"
                };
                println!(
                    "{}: dim {}, {shape}, {defects}, {identity}, {verdict}",
                    r.complex, r.dim
                );
            }
            println!(
                "scanned {} complexes: {ok} identity ok, {consistent} consistent, {skipped} skipped",
                records.len()
            );
        }
    }
    Ok(())
}
